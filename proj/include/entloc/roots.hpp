#pragma once

#include <array>
#include <string>
#include <vector>

#include "entloc/types.hpp"

namespace entloc {

/// Roots of a complex polynomial by simultaneous (Aberth) iteration started
/// from perturbed roots of unity, followed by one Newton polishing pass.
/// `coeffs[k]` multiplies z^k; the leading coefficient must be nonzero.
struct PolyRoots {
    std::vector<cplx> roots;
    int iterations = 0;
    double max_backward_error = 0.0;  ///< |p(z)| / sum_k |p_k| |z|^k
    double max_abs_residual = 0.0;    ///< |p(z)|
};

/// Throws ConvergenceError when the backward error stays above `residual_tol`
/// after `max_iterations`.
PolyRoots polynomial_roots(const std::vector<cplx>& coeffs, int max_iterations = 200, double residual_tol = 1e-10);

cplx polynomial_eval(const std::vector<cplx>& coeffs, cplx z);

/// Solutions c1 of "A maps the SEP-I state with coefficients (c0, c1) into
/// SEP-I": the discriminant of A Psi(c0, c1), a quartic in c1.
struct PreimageRoots {
    bool tautology = false;            ///< every coefficient vanishes
    std::vector<cplx> coefficients;    ///< c1^0 .. c1^4
    PolyRoots solution;                ///< empty when tautology
};

PreimageRoots sep_I_preimage_roots(const Mat& a3, cplx c0);

}  // namespace entloc
