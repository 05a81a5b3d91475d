#include "gmono/analytic.hpp"

#include "gmono/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gmono {

namespace {

constexpr std::size_t kMaxSeriesTerms = 512;
constexpr double kNegligibleTerm = 1e-17;
constexpr std::size_t kNegligibleRun = 4;
constexpr double kMaxTailBound = 1e-12;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void trim(std::vector<Complex>& c)
{
    while (!c.empty() && c.back() == Complex{})
        c.pop_back();
}

Complex horner(const std::vector<Complex>& c, Complex w)
{
    Complex acc{};
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * w + *it;
    return acc;
}

Complex eval_series(const PowerSeries& s, Complex w)
{
    const Complex u = w - s.center;
    const double dist = std::abs(u);
    if (dist > kSeriesDomainFraction * s.radius)
        throw OutOfDomainError("power series evaluated at distance " + std::to_string(dist)
                               + " from its center, beyond 0.9 * radius = "
                               + std::to_string(kSeriesDomainFraction * s.radius));

    // Stop after a run of negligible terms rather than a single one, so that
    // series with structural zeros (odd/even functions) are not cut short.
    Complex sum{};
    Complex power{1.0, 0.0};
    std::array<double, kNegligibleRun> last{};
    std::size_t negligible = 0;
    std::size_t k = 0;
    const std::size_t n = std::min(s.coeffs.size(), kMaxSeriesTerms);
    for (; k < n; ++k) {
        const Complex term = s.coeffs[k] * power;
        sum += term;
        power *= u;
        const double mag = std::abs(term);
        last[k % kNegligibleRun] = mag;
        if (mag < kNegligibleTerm * std::abs(sum)) {
            if (++negligible >= kNegligibleRun)
                return sum;
        } else {
            negligible = 0;
        }
    }
    if (k < s.coeffs.size()) {
        const double ratio = dist / s.radius;
        const double tail = *std::max_element(last.begin(), last.end()) * ratio / (1.0 - ratio);
        if (tail > kMaxTailBound)
            throw OutOfDomainError("power series truncated at 512 terms with tail bound "
                                   + std::to_string(tail));
    }
    return sum;
}

} // namespace

bool LinearCombination::operator==(const LinearCombination& other) const
{
    if (terms.size() != other.terms.size())
        return false;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].first != other.terms[i].first)
            return false;
        if (!(*terms[i].second == *other.terms[i].second))
            return false;
    }
    return true;
}

AnalyticFunction::AnalyticFunction() : repr_(Polynomial{}) {}

AnalyticFunction AnalyticFunction::polynomial(std::vector<Complex> coeffs)
{
    trim(coeffs);
    return AnalyticFunction(Polynomial{std::move(coeffs)});
}

AnalyticFunction AnalyticFunction::constant(Complex c)
{
    return polynomial({c});
}

AnalyticFunction AnalyticFunction::identity()
{
    return polynomial({0.0, 1.0});
}

AnalyticFunction AnalyticFunction::power_series(Complex center, std::vector<Complex> coeffs, double radius)
{
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw std::invalid_argument("power series radius must be finite and positive");
    trim(coeffs);
    return AnalyticFunction(PowerSeries{center, std::move(coeffs), radius});
}

AnalyticFunction AnalyticFunction::exp_scaled(Complex amplitude, Complex rate)
{
    return AnalyticFunction(ExpScaled{amplitude, rate});
}

AnalyticFunction AnalyticFunction::linear_combination(const std::vector<std::pair<Complex, AnalyticFunction>>& terms)
{
    LinearCombination lc;
    lc.terms.reserve(terms.size());
    for (const auto& [c, f] : terms)
        lc.terms.emplace_back(c, std::make_shared<const AnalyticFunction>(f));
    AnalyticFunction out{Repr{std::move(lc)}};
    if (out.depth() > kMaxCombinationDepth)
        throw std::invalid_argument("linear combination nested deeper than "
                                    + std::to_string(kMaxCombinationDepth));
    return out;
}

AnalyticFunction AnalyticFunction::sine(Complex rate)
{
    const Complex i{0.0, 1.0};
    const Complex half_over_i = 1.0 / (2.0 * i);
    return linear_combination({{half_over_i, exp_scaled(1.0, i * rate)},
                               {-half_over_i, exp_scaled(1.0, -i * rate)}});
}

AnalyticFunction AnalyticFunction::cosine(Complex rate)
{
    const Complex i{0.0, 1.0};
    return linear_combination({{0.5, exp_scaled(1.0, i * rate)}, {0.5, exp_scaled(1.0, -i * rate)}});
}

Complex AnalyticFunction::operator()(Complex w) const
{
    return std::visit(overloaded{
                          [&](const Polynomial& p) { return horner(p.coeffs, w); },
                          [&](const PowerSeries& s) { return eval_series(s, w); },
                          [&](const ExpScaled& e) { return e.amplitude * std::exp(e.rate * w); },
                          [&](const LinearCombination& lc) {
                              Complex sum{};
                              for (const auto& [c, f] : lc.terms)
                                  sum += c * (*f)(w);
                              return sum;
                          },
                      },
                      repr_);
}

bool AnalyticFunction::in_domain(Complex w) const
{
    return std::visit(overloaded{
                          [&](const PowerSeries& s) {
                              return std::abs(w - s.center) <= kSeriesDomainFraction * s.radius;
                          },
                          [&](const LinearCombination& lc) {
                              return std::all_of(lc.terms.begin(), lc.terms.end(),
                                                 [&](const auto& t) { return t.second->in_domain(w); });
                          },
                          [](const auto&) { return true; },
                      },
                      repr_);
}

namespace {
int depth_of(const AnalyticFunction::Repr& r)
{
    if (const auto* lc = std::get_if<LinearCombination>(&r)) {
        int d = 0;
        for (const auto& t : lc->terms)
            d = std::max(d, t.second->depth());
        return d + 1;
    }
    return 0;
}
} // namespace

int AnalyticFunction::depth() const
{
    return depth_of(repr_);
}

bool AnalyticFunction::is_zero() const
{
    return std::visit(overloaded{
                          [](const Polynomial& p) { return p.coeffs.empty(); },
                          [](const PowerSeries& s) { return s.coeffs.empty(); },
                          [](const ExpScaled& e) { return e.amplitude == Complex{}; },
                          [](const LinearCombination& lc) {
                              return std::all_of(lc.terms.begin(), lc.terms.end(), [](const auto& t) {
                                  return t.first == Complex{} || t.second->is_zero();
                              });
                          },
                      },
                      repr_);
}

namespace {

AnalyticFunction first_derivative(const AnalyticFunction& f)
{
    return std::visit(
        overloaded{
            [](const Polynomial& p) {
                std::vector<Complex> d;
                for (std::size_t k = 1; k < p.coeffs.size(); ++k)
                    d.push_back(p.coeffs[k] * static_cast<double>(k));
                return AnalyticFunction::polynomial(std::move(d));
            },
            [](const PowerSeries& s) {
                std::vector<Complex> d;
                for (std::size_t k = 1; k < s.coeffs.size(); ++k)
                    d.push_back(s.coeffs[k] * static_cast<double>(k));
                return AnalyticFunction::power_series(s.center, std::move(d), s.radius);
            },
            [](const ExpScaled& e) { return AnalyticFunction::exp_scaled(e.amplitude * e.rate, e.rate); },
            [](const LinearCombination& lc) {
                std::vector<std::pair<Complex, AnalyticFunction>> terms;
                for (const auto& [c, g] : lc.terms)
                    terms.emplace_back(c, first_derivative(*g));
                return AnalyticFunction::linear_combination(terms);
            },
        },
        f.repr());
}

std::vector<Complex> convolve(const std::vector<Complex>& a, const std::vector<Complex>& b)
{
    if (a.empty() || b.empty())
        return {};
    std::vector<Complex> c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    return c;
}

/// Coefficients of p(center + u) in powers of u.
std::vector<Complex> taylor_shift(std::vector<Complex> c, Complex center)
{
    const std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j > i; --j)
            c[j - 1] += center * c[j];
    return c;
}

std::vector<Complex> series_coeffs_about(const AnalyticFunction& f, Complex center)
{
    if (const auto* p = std::get_if<Polynomial>(&f.repr()))
        return taylor_shift(p->coeffs, center);
    return std::get<PowerSeries>(f.repr()).coeffs;
}

bool is_constant_poly(const AnalyticFunction& f)
{
    const auto* p = std::get_if<Polynomial>(&f.repr());
    return p && p->coeffs.size() <= 1;
}

} // namespace

AnalyticFunction derivative(const AnalyticFunction& f, int k)
{
    if (k < 0)
        throw std::invalid_argument("derivative order must be nonnegative");
    AnalyticFunction out = f;
    for (int i = 0; i < k; ++i)
        out = first_derivative(out);
    return out;
}

AnalyticFunction scaled(const AnalyticFunction& f, Complex lambda)
{
    return std::visit(
        overloaded{
            [&](const Polynomial& p) {
                auto c = p.coeffs;
                for (auto& x : c)
                    x *= lambda;
                return AnalyticFunction::polynomial(std::move(c));
            },
            [&](const PowerSeries& s) {
                auto c = s.coeffs;
                for (auto& x : c)
                    x *= lambda;
                return AnalyticFunction::power_series(s.center, std::move(c), s.radius);
            },
            [&](const ExpScaled& e) { return AnalyticFunction::exp_scaled(lambda * e.amplitude, e.rate); },
            [&](const LinearCombination& lc) {
                std::vector<std::pair<Complex, AnalyticFunction>> terms;
                for (const auto& [c, g] : lc.terms)
                    terms.emplace_back(lambda * c, *g);
                return AnalyticFunction::linear_combination(terms);
            },
        },
        f.repr());
}

AnalyticFunction product(const AnalyticFunction& f, const AnalyticFunction& g)
{
    if (f.is_zero() || g.is_zero())
        return AnalyticFunction{};
    if (is_constant_poly(f))
        return scaled(g, std::get<Polynomial>(f.repr()).coeffs[0]);
    if (is_constant_poly(g))
        return scaled(f, std::get<Polynomial>(g.repr()).coeffs[0]);

    if (const auto* lc = std::get_if<LinearCombination>(&f.repr())) {
        std::vector<std::pair<Complex, AnalyticFunction>> terms;
        for (const auto& [c, h] : lc->terms)
            terms.emplace_back(c, product(*h, g));
        return AnalyticFunction::linear_combination(terms);
    }
    if (std::holds_alternative<LinearCombination>(g.repr()))
        return product(g, f);

    const auto* pf = std::get_if<Polynomial>(&f.repr());
    const auto* pg = std::get_if<Polynomial>(&g.repr());
    if (pf && pg)
        return AnalyticFunction::polynomial(convolve(pf->coeffs, pg->coeffs));

    const auto* ef = std::get_if<ExpScaled>(&f.repr());
    const auto* eg = std::get_if<ExpScaled>(&g.repr());
    if (ef && eg)
        return AnalyticFunction::exp_scaled(ef->amplitude * eg->amplitude, ef->rate + eg->rate);

    const auto* sf = std::get_if<PowerSeries>(&f.repr());
    const auto* sg = std::get_if<PowerSeries>(&g.repr());
    if ((sf || pf) && (sg || pg)) {
        if (sf && sg && sf->center != sg->center)
            throw std::invalid_argument("product of power series with different centers");
        const Complex center = sf ? sf->center : sg->center;
        const double radius = sf && sg ? std::min(sf->radius, sg->radius) : (sf ? sf->radius : sg->radius);
        return AnalyticFunction::power_series(
            center, convolve(series_coeffs_about(f, center), series_coeffs_about(g, center)), radius);
    }
    throw std::invalid_argument("product of these analytic function families has no closed form");
}

} // namespace gmono
