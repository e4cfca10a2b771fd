#include "kinklab/banded.hpp"

#include <cmath>
#include <stdexcept>

namespace kinklab {

SymBanded::SymBanded(std::size_t n_, int bw_) : n(n_), bw(bw_) {
    bands.resize(bw + 1);
    for (int k = 0; k <= bw; ++k) bands[k].assign(n - k, 0.0);
}

double SymBanded::at(std::size_t i, std::size_t j) const {
    std::size_t lo = std::min(i, j), hi = std::max(i, j);
    std::size_t k = hi - lo;
    if (k > static_cast<std::size_t>(bw)) return 0.0;
    return bands[k][lo];
}

void SymBanded::multiply(const std::vector<double>& x, std::vector<double>& y) const {
    y.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) y[i] = bands[0][i] * x[i];
    for (int k = 1; k <= bw; ++k)
        for (std::size_t i = 0; i + k < n; ++i) {
            y[i + k] += bands[k][i] * x[i];
            y[i] += bands[k][i] * x[i + k];
        }
}

double SymBanded::gershgorin_lower() const {
    double lo = bands[0][0];
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0;
        for (int k = 1; k <= bw; ++k) {
            if (i + k < n) r += std::abs(bands[k][i]);
            if (i >= static_cast<std::size_t>(k)) r += std::abs(bands[k][i - k]);
        }
        lo = std::min(lo, bands[0][i] - r);
    }
    return lo;
}

double SymBanded::gershgorin_upper() const {
    double hi = bands[0][0];
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0;
        for (int k = 1; k <= bw; ++k) {
            if (i + k < n) r += std::abs(bands[k][i]);
            if (i >= static_cast<std::size_t>(k)) r += std::abs(bands[k][i - k]);
        }
        hi = std::max(hi, bands[0][i] + r);
    }
    return hi;
}

std::size_t eigenvalues_below(const SymBanded& A, double shift) {
    // LDL^T of (A - shift I) kept within the band; count negative pivots
    std::size_t n = A.n;
    int bw = A.bw;
    std::vector<std::vector<double>> L(bw + 1);
    for (int k = 0; k <= bw; ++k) L[k].assign(n, 0.0);
    std::vector<double> d(n, 0.0);
    double scale = std::max(std::abs(A.gershgorin_lower()), std::abs(A.gershgorin_upper()));
    double tiny = 1e-300 + 1e-18 * scale;

    std::size_t count = 0;
    for (std::size_t j = 0; j < n; ++j) {
        double dj = A.at(j, j) - shift;
        for (int k = 1; k <= bw; ++k) {
            if (j < static_cast<std::size_t>(k)) continue;
            std::size_t i = j - k; // column i contributed L(j,i)
            dj -= L[k][i] * L[k][i] * d[i];
        }
        if (std::abs(dj) < tiny) dj = -tiny; // nudge exact breakdowns
        d[j] = dj;
        if (dj < 0.0) ++count;
        for (int k = 1; k <= bw && j + k < n; ++k) {
            double s = A.at(j + k, j);
            for (int m = 1; m <= bw; ++m) {
                if (j < static_cast<std::size_t>(m)) break;
                std::size_t i = j - m;
                int km = k + m;
                if (km <= bw) s -= L[km][i] * L[m][i] * d[i];
            }
            L[k][j] = s / dj;
        }
    }
    return count;
}

BandedLU::BandedLU(const SymBanded& A, double shift) : n_(A.n), kl_(A.bw), ku_(A.bw) {
    int rows = 2 * kl_ + ku_ + 1;
    work_.assign(static_cast<std::size_t>(rows) * n_, 0.0);
    piv_.assign(n_, 0);
    auto ab = [&](int i, std::size_t j) -> double& {
        // LAPACK-style storage: ab(kl + ku + i - j, j) holds A(i, j)
        return work_[static_cast<std::size_t>(kl_ + ku_ + i - static_cast<int>(j)) +
                     static_cast<std::size_t>(rows) * j];
    };
    for (std::size_t j = 0; j < n_; ++j) {
        int lo = std::max<int>(0, static_cast<int>(j) - ku_);
        int hi = std::min<int>(static_cast<int>(n_) - 1, static_cast<int>(j) + kl_);
        for (int i = lo; i <= hi; ++i)
            ab(i, j) = A.at(static_cast<std::size_t>(i), j) - (static_cast<std::size_t>(i) == j ? shift : 0.0);
    }
    // banded Gaussian elimination with partial pivoting
    for (std::size_t j = 0; j < n_; ++j) {
        int pmax = std::min<int>(kl_, static_cast<int>(n_ - 1 - j));
        int piv = 0;
        double best = std::abs(ab(static_cast<int>(j), j));
        for (int i = 1; i <= pmax; ++i) {
            double v = std::abs(ab(static_cast<int>(j) + i, j));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        piv_[j] = piv;
        if (best == 0.0) {
            ab(static_cast<int>(j), j) = 1e-300; // keep the solve finite; inverse iteration copes
        }
        int jhi = std::min<int>(static_cast<int>(j) + kl_ + ku_, static_cast<int>(n_) - 1);
        if (piv != 0) {
            for (int c = static_cast<int>(j); c <= jhi; ++c) {
                double& a1 = ab(static_cast<int>(j), static_cast<std::size_t>(c));
                double& a2 = ab(static_cast<int>(j) + piv, static_cast<std::size_t>(c));
                std::swap(a1, a2);
            }
        }
        double pivval = ab(static_cast<int>(j), j);
        for (int i = 1; i <= pmax; ++i) {
            double m = ab(static_cast<int>(j) + i, j) / pivval;
            ab(static_cast<int>(j) + i, j) = m; // store multiplier
            for (int c = static_cast<int>(j) + 1; c <= jhi; ++c)
                ab(static_cast<int>(j) + i, static_cast<std::size_t>(c)) -=
                    m * ab(static_cast<int>(j), static_cast<std::size_t>(c));
        }
    }
}

void BandedLU::solve(std::vector<double>& b) const {
    int rows = 2 * kl_ + ku_ + 1;
    auto ab = [&](int i, std::size_t j) -> double {
        return work_[static_cast<std::size_t>(kl_ + ku_ + i - static_cast<int>(j)) +
                     static_cast<std::size_t>(rows) * j];
    };
    // forward: apply the stored row swaps and multipliers
    for (std::size_t j = 0; j < n_; ++j) {
        if (piv_[j] != 0) std::swap(b[j], b[j + static_cast<std::size_t>(piv_[j])]);
        int pmax = std::min<int>(kl_, static_cast<int>(n_ - 1 - j));
        for (int i = 1; i <= pmax; ++i) b[j + static_cast<std::size_t>(i)] -= ab(static_cast<int>(j) + i, j) * b[j];
    }
    // back substitution on the upper triangle (bandwidth kl + ku)
    for (std::size_t jj = n_; jj-- > 0;) {
        int hi = std::min<int>(static_cast<int>(jj) + kl_ + ku_, static_cast<int>(n_) - 1);
        double s = b[jj];
        for (int c = static_cast<int>(jj) + 1; c <= hi; ++c)
            s -= ab(static_cast<int>(jj), static_cast<std::size_t>(c)) * b[static_cast<std::size_t>(c)];
        b[jj] = s / ab(static_cast<int>(jj), jj);
    }
}

} // namespace kinklab
