#ifndef KINKLAB_NULL_MODES_HPP
#define KINKLAB_NULL_MODES_HPP

#include "kinklab/grid.hpp"
#include "kinklab/kink.hpp"

namespace kinklab {

/**
 * Generalized null directions of the linearized flow around a single moving
 * kink, kind 0 (translation) or 1 (boost). Defined for the two rising
 * orientations; for rise01 the reflection rule psi^j_{0,1}(x,v) =
 * psi^j_{-1,0}(-x,-v) applies.
 */
FieldPair psi_vector(int kind, KinkOrientation orientation, double v, const Grid& grid,
                     double shift = 0.0);

/**
 * Exact solutions Y^0, Y^1 of the linearized flow around the moving kink
 * (rise01 travels right along x = v t, rise_m10 left along x = -v t). Y^1
 * carries a secular part growing linearly in t.
 */
FieldPair y_solution(int kind, KinkOrientation orientation, double v, double t, const Grid& grid);

} // namespace kinklab

#endif
