#ifndef KINKLAB_BANDED_HPP
#define KINKLAB_BANDED_HPP

#include <cstddef>
#include <vector>

namespace kinklab {

/**
 * Symmetric banded matrix, lower storage: band(k)[i] = A(i+k, i) for
 * k = 0..bw and i = 0..n-k-1.
 */
struct SymBanded {
    std::size_t n = 0;
    int bw = 0;
    std::vector<std::vector<double>> bands;

    SymBanded() = default;
    SymBanded(std::size_t n_, int bw_);

    double at(std::size_t i, std::size_t j) const;
    double& diag(std::size_t i) { return bands[0][i]; }
    void multiply(const std::vector<double>& x, std::vector<double>& y) const;

    double gershgorin_lower() const;
    double gershgorin_upper() const;
};

/**
 * Number of eigenvalues strictly below `shift`, via the inertia of the
 * LDL^T factorization of A - shift I (spectrum slicing; zero pivots are
 * nudged by a relative epsilon).
 */
std::size_t eigenvalues_below(const SymBanded& A, double shift);

/** Banded LU with partial pivoting for solving (A - shift I) x = b repeatedly. */
class BandedLU {
  public:
    BandedLU(const SymBanded& A, double shift);
    void solve(std::vector<double>& b) const;

  private:
    std::size_t n_;
    int kl_, ku_;
    std::vector<double> work_; // (2 kl + ku + 1) x n band storage, column-major bands
    std::vector<int> piv_;
};

} // namespace kinklab

#endif
