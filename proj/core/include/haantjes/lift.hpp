/** \file    lift.hpp
    \brief   Lift of a 2x2 configuration-space operator to an omega-compatible 4x4 operator on phase space
*/
#pragma once
#include "haantjes/algebra.hpp"

namespace haantjes {

/** A = [[a, b], [c, d]] with A^i_j in row i, column j.  Entries are fields on the phase-space chart
    (q1, q2, p1, p2) that must not depend on the momenta. */
struct ConfigOperator2 {
    ScalarField a, b, c, d;
};

struct LiftOptions {
    double delta_tol = 1e-10;         ///< |Delta| must exceed delta_tol * max(1, max|A|)^2
    bool allow_complex_delta = false;  ///< accept Delta < 0 (experimental)
};

/// Delta, the two Nijenhuis components and the coefficients of r = f p1 + g p2 + h at a point
struct LiftCoefficients {
    double delta = 0, tau1 = 0, tau2 = 0, f = 0, g = 0;
};

/// evaluates the lift coefficients; raises PreconditionError on degenerate spectrum or momentum dependence
LiftCoefficients lift_coefficients(const ConfigOperator2& A, std::span<const double> x, const LiftOptions& opt = {});

/** [[A, 0], [C, A^T]] with C = [[0, r], [-r, 0]] and
      f = da/dq2 - db/dq1 - ((a-d)/Delta) tau^1_12 - (2b/Delta) tau^2_12
      g = dc/dq2 - dd/dq1 + ((a-d)/Delta) tau^2_12 - (2c/Delta) tau^1_12
    where Delta = (a-d)^2 + 4bc and tau is the Nijenhuis torsion of A. */
OperatorField generalized_lift(const ConfigOperator2& A, const ScalarField& h, const LiftOptions& opt = {});

/** For A with vanishing Nijenhuis torsion on the points and h = 0, the Nijenhuis torsion of the lift.
    A nonzero torsion of A raises PreconditionError. */
Check yano_coincidence_check(const ConfigOperator2& A, const Points& points, double tol = 1e-8);

}  // namespace haantjes
