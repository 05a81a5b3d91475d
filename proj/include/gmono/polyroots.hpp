#pragma once

#include "gmono/quaternion.hpp"

#include <span>
#include <vector>

namespace gmono {

struct RootOptions {
    int max_iterations = 500;
    /// Converged when every update satisfies |dz| <= tolerance * max(1, |z|).
    double tolerance = 1e-13;
    /// Initial guesses sit at angles 2 pi k / n + angle_offset.
    double angle_offset = 0.4;
};

/// p(w) for ascending coefficients, by Horner's rule.
Complex eval_poly(std::span<const Complex> coeffs, Complex w);

/// Acceptance bound on |p(root)|: 1e-10 (1 + max |coeff|).
double root_residual_bound(std::span<const Complex> coeffs);

/// All complex roots, with multiplicity, of the polynomial with ascending
/// coefficients, by Durand-Kerner (Weierstrass) iteration followed by a
/// Newton polish against the original coefficients.
///
/// Trailing zero coefficients are ignored. Throws DegeneratePolynomialError
/// when the trimmed degree is below 1, and NoConvergenceError when the
/// iteration cap is hit or a root misses root_residual_bound().
std::vector<Complex> roots(std::span<const Complex> coeffs, const RootOptions& opts = {});

} // namespace gmono
