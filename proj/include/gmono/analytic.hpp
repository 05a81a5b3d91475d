#pragma once

#include "gmono/quaternion.hpp"

#include <memory>
#include <utility>
#include <variant>
#include <vector>

namespace gmono {

class AnalyticFunction;

/// sum_k coeffs[k] w^k. Trailing zeros are trimmed; the zero polynomial has
/// no coefficients.
struct Polynomial {
    std::vector<Complex> coeffs;

    bool operator==(const Polynomial&) const = default;
};

/// sum_k coeffs[k] (w - center)^k, evaluable on |w - center| <= 0.9 radius.
struct PowerSeries {
    Complex center;
    std::vector<Complex> coeffs;
    double radius = 1.0;

    bool operator==(const PowerSeries&) const = default;
};

/// amplitude * exp(rate * w)
struct ExpScaled {
    Complex amplitude;
    Complex rate;

    bool operator==(const ExpScaled&) const = default;
};

struct LinearCombination {
    std::vector<std::pair<Complex, std::shared_ptr<const AnalyticFunction>>> terms;

    bool operator==(const LinearCombination& other) const;
};

inline constexpr int kMaxCombinationDepth = 8;
inline constexpr double kSeriesDomainFraction = 0.9;

/// Analytic function of one complex variable, closed under exact
/// differentiation. Immutable; copies share LinearCombination subterms.
class AnalyticFunction {
public:
    using Repr = std::variant<Polynomial, PowerSeries, ExpScaled, LinearCombination>;

    /// The zero polynomial.
    AnalyticFunction();

    static AnalyticFunction polynomial(std::vector<Complex> coeffs);
    static AnalyticFunction constant(Complex c);
    /// w -> w
    static AnalyticFunction identity();
    /// Throws std::invalid_argument unless radius is finite and positive.
    static AnalyticFunction power_series(Complex center, std::vector<Complex> coeffs, double radius);
    static AnalyticFunction exp_scaled(Complex amplitude, Complex rate);
    /// Throws std::invalid_argument if nesting exceeds kMaxCombinationDepth.
    static AnalyticFunction linear_combination(const std::vector<std::pair<Complex, AnalyticFunction>>& terms);
    /// sin(rate w) as a combination of two exponentials.
    static AnalyticFunction sine(Complex rate = 1.0);
    static AnalyticFunction cosine(Complex rate = 1.0);

    const Repr& repr() const { return repr_; }

    /// Value at w. Throws OutOfDomainError outside a power series' disc, or
    /// when the truncation tail bound exceeds 1e-12.
    Complex operator()(Complex w) const;

    /// True iff every power series in the expression tree contains w in its
    /// evaluation disc.
    bool in_domain(Complex w) const;

    /// Nesting depth of linear combinations (0 for the primitive forms).
    int depth() const;

    /// Structurally zero: zero polynomial, zero amplitude, all-zero series
    /// or a combination whose every term is structurally zero.
    bool is_zero() const;

    bool operator==(const AnalyticFunction&) const = default;

private:
    explicit AnalyticFunction(Repr r) : repr_(std::move(r)) {}

    Repr repr_;
};

inline Complex eval(const AnalyticFunction& f, Complex w) { return f(w); }

/// Exact k-th derivative in the same representation family. The k-th
/// derivative is computed as k successive first derivatives, so
/// derivative(derivative(f, 1), 1) == derivative(f, 2) bit for bit.
AnalyticFunction derivative(const AnalyticFunction& f, int k = 1);

/// lambda * f, staying in f's representation family.
AnalyticFunction scaled(const AnalyticFunction& f, Complex lambda);

/// Symbolic product f * g where the families allow it: polynomial and
/// power-series pairs, exponential pairs, constants with anything, and
/// linear combinations distributed termwise. Throws std::invalid_argument
/// for mixtures with no closed form here (e.g. w * exp(w)).
AnalyticFunction product(const AnalyticFunction& f, const AnalyticFunction& g);

} // namespace gmono
