#include "gmono/polyroots.hpp"

#include "gmono/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace gmono {

// Horner in extended precision where the platform has it: near a root of a
// polynomial with large coefficients the double-precision sum cancels badly.
Complex eval_poly(std::span<const Complex> coeffs, Complex w)
{
    using Wide = std::complex<long double>;
    const Wide x{w.real(), w.imag()};
    Wide acc{};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + Wide{it->real(), it->imag()};
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

double root_residual_bound(std::span<const Complex> coeffs)
{
    double m = 0.0;
    for (const auto& c : coeffs)
        m = std::max(m, std::abs(c));
    return 1e-10 * (1.0 + m);
}

namespace {

Complex eval_derivative(std::span<const Complex> coeffs, Complex w)
{
    Complex acc{};
    for (std::size_t k = coeffs.size(); k-- > 1;)
        acc = acc * w + coeffs[k] * static_cast<double>(k);
    return acc;
}

/// Newton steps, each kept only if it lowers |p|.
Complex polish(std::span<const Complex> coeffs, Complex z)
{
    double best = std::abs(eval_poly(coeffs, z));
    for (int it = 0; it < 8 && best > 0.0; ++it) {
        const Complex d = eval_derivative(coeffs, z);
        if (d == Complex{})
            break;
        const Complex next = z - eval_poly(coeffs, z) / d;
        const double r = std::abs(eval_poly(coeffs, next));
        if (!(r < best))
            break;
        z = next;
        best = r;
    }
    return z;
}

} // namespace

std::vector<Complex> roots(std::span<const Complex> coeffs, const RootOptions& opts)
{
    std::size_t size = coeffs.size();
    while (size > 0 && coeffs[size - 1] == Complex{})
        --size;
    if (size < 2)
        throw DegeneratePolynomialError("polynomial has degree < 1; no roots to find");
    const std::span<const Complex> p = coeffs.first(size);
    const std::size_t n = size - 1;

    std::vector<Complex> monic(p.begin(), p.end());
    const Complex lead = monic.back();
    for (auto& c : monic)
        c /= lead;
    double max_ratio = 0.0;
    for (std::size_t k = 0; k < n; ++k)
        max_ratio = std::max(max_ratio, std::abs(monic[k]));

    const double radius = 1.0 + max_ratio;
    std::vector<Complex> z(n);
    for (std::size_t k = 0; k < n; ++k)
        z[k] = std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n)
                                      + opts.angle_offset);

    bool converged = false;
    for (int it = 0; it < opts.max_iterations && !converged; ++it) {
        converged = true;
        for (std::size_t i = 0; i < n; ++i) {
            Complex denom{1.0, 0.0};
            for (std::size_t j = 0; j < n; ++j)
                if (j != i)
                    denom *= z[i] - z[j];
            if (denom == Complex{})
                denom = Complex{1e-300, 0.0};
            const Complex dz = eval_poly(monic, z[i]) / denom;
            z[i] -= dz;
            if (std::abs(dz) > opts.tolerance * std::max(1.0, std::abs(z[i])))
                converged = false;
        }
    }

    // Clusters of multiple roots stall at the sqrt(eps) noise level without
    // meeting the update tolerance; those are accepted when every polished
    // root still meets the residual bound.
    const double bound = root_residual_bound(p);
    for (auto& r : z) {
        r = polish(p, r);
        if (!(std::abs(eval_poly(p, r)) <= bound))
            throw NoConvergenceError(converged ? "root residual exceeds 1e-10 (1 + max|coeff|)"
                                               : "Durand-Kerner iteration did not converge in "
                                                     + std::to_string(opts.max_iterations) + " iterations");
    }
    return z;
}

} // namespace gmono
