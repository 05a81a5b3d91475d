#include "gmono/pde.hpp"

#include "gmono/errors.hpp"
#include "gmono/polyroots.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace gmono {

PdeOperator::PdeOperator(int order, std::vector<PdeTerm> terms) : order_(order), terms_(std::move(terms))
{
    if (order_ < 1)
        throw std::invalid_argument("operator order must be positive");
    std::set<std::tuple<int, int, int>> keys;
    bool any_nonzero = false;
    for (const auto& t : terms_) {
        if (t.alpha < 0 || t.beta < 0 || t.gamma < 0 || t.alpha + t.beta + t.gamma != order_)
            throw std::invalid_argument("every term needs nonnegative alpha + beta + gamma == order");
        if (!keys.emplace(t.alpha, t.beta, t.gamma).second)
            throw std::invalid_argument("duplicate (alpha, beta, gamma) term");
        if (!std::isfinite(t.c))
            throw std::invalid_argument("non-finite coefficient");
        any_nonzero = any_nonzero || t.c != 0.0;
    }
    if (!any_nonzero)
        throw std::invalid_argument("operator has no nonzero coefficient");
}

PdeOperator PdeOperator::laplace3d()
{
    return {2, {{2, 0, 0, 1.0}, {0, 2, 0, 1.0}, {0, 0, 2, 1.0}}};
}

PdeOperator PdeOperator::example5()
{
    return {5, {{5, 0, 0, 1.0}, {1, 2, 2, 1.0}, {1, 0, 4, 1.0}}};
}

PdeOperator PdeOperator::preset(const std::string& name)
{
    if (name == "laplace3d")
        return laplace3d();
    if (name == "example5")
        return example5();
    throw std::invalid_argument("unknown operator preset '" + name + "'");
}

namespace {

template <class T>
T power(T base, int k, T one)
{
    T out = one;
    for (int i = 0; i < k; ++i)
        out = out * base;
    return out;
}

} // namespace

Quaternion char_element(const PdeOperator& op, const Triple& t)
{
    const Quaternion i2 = t.i2();
    const Quaternion i3 = t.i3();
    Quaternion sum;
    for (const auto& term : op.terms()) {
        const Quaternion p2 = power(i2, term.beta, Quaternion::one());
        const Quaternion p3 = power(i3, term.gamma, Quaternion::one());
        sum += scale(Complex{term.c}, p2 * p3);
    }
    return sum;
}

Complex char_scalar(const PdeOperator& op, Complex a, Complex b)
{
    Complex sum{};
    for (const auto& term : op.terms()) {
        const Complex pa = power(a, term.beta, Complex{1.0});
        const Complex pb = power(b, term.gamma, Complex{1.0});
        sum += Complex{term.c} * (pa * pb);
    }
    return sum;
}

double p_polynomial(const PdeOperator& op, double a, double b)
{
    double sum = 0.0;
    for (const auto& term : op.terms())
        sum += term.c * std::pow(a, term.beta) * std::pow(b, term.gamma);
    return sum;
}

PScan p_scan(const PdeOperator& op, double range, double step)
{
    if (!(range > 0.0) || !(step > 0.0))
        throw std::invalid_argument("p_scan needs range > 0 and step > 0");
    const long intervals = std::max(1L, std::lround(2.0 * range / step));
    auto coord = [&](long k) { return -range + 2.0 * range * static_cast<double>(k) / static_cast<double>(intervals); };
    PScan best{std::abs(p_polynomial(op, coord(0), coord(0))), coord(0), coord(0)};
    for (long i = 0; i <= intervals; ++i) {
        for (long j = 0; j <= intervals; ++j) {
            const double a = coord(i);
            const double b = coord(j);
            const double v = std::abs(p_polynomial(op, a, b));
            if (v < best.min_abs)
                best = {v, a, b};
        }
    }
    return best;
}

std::vector<Complex> char_poly_in_b(const PdeOperator& op, Complex a)
{
    int max_gamma = 0;
    for (const auto& t : op.terms())
        max_gamma = std::max(max_gamma, t.gamma);
    std::vector<Complex> d(static_cast<std::size_t>(max_gamma) + 1);
    for (const auto& t : op.terms())
        d[static_cast<std::size_t>(t.gamma)] += Complex{t.c} * power(a, t.beta, Complex{1.0});
    if (std::all_of(d.begin(), d.end(), [](Complex c) { return c == Complex{}; }))
        throw DegeneratePolynomialError("characteristic polynomial in b vanishes identically for this a");
    return d;
}

std::vector<CharSolution> solve_characteristic(const PdeOperator& op, std::span<const Complex> a_values)
{
    std::vector<CharSolution> out;
    for (Complex a : a_values) {
        CharSolution s;
        s.a = a;
        s.poly = char_poly_in_b(op, a);
        s.roots = roots(s.poly);
        for (Complex b : s.roots)
            s.residuals.push_back(std::abs(char_scalar(op, a, b)));
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<CandidateTriple> assemble_triples(const PdeOperator& op, std::span<const CharSolution> solutions)
{
    std::vector<std::pair<Complex, Complex>> pairs;
    for (const auto& s : solutions)
        for (Complex b : s.roots)
            pairs.emplace_back(s.a, b);
    std::vector<CandidateTriple> out;
    for (const auto& [a1, b1] : pairs) {
        for (const auto& [a2, b2] : pairs) {
            const Triple t{a1, a2, b1, b2};
            out.push_back({t, validate(t), norm(char_element(op, t))});
        }
    }
    return out;
}

Triple laplace_triple(const HarmonicParams& h)
{
    const Complex i{0.0, 1.0};
    const Triple t{i * std::sin(h.t), i * std::sin(h.tau), i * std::cos(h.t), i * std::cos(h.tau)};
    require_valid(t);
    return t;
}

Complex ScalarField3::operator()(const Point3& p) const
{
    const Complex i{0.0, 1.0};
    const Complex w = p.x + i * p.y * std::sin(t) + i * p.z * std::cos(t);
    const Complex v = F(w);
    return part == Part::Re ? Complex{v.real()} : Complex{v.imag()};
}

ScalarField ScalarField3::field() const
{
    return [s = *this](const Point3& p) { return s(p); };
}

ScalarField3 harmonic_solution(const AnalyticFunction& f, Complex t, Part part)
{
    return {f, t, part};
}

double default_fd_step(int order)
{
    if (order <= 2)
        return 1e-3;
    if (order <= 4)
        return 1e-2;
    return 5e-2;
}

namespace {

/// Weights of the second-order central difference for the k-th derivative
/// at offsets -m..m (unscaled by step^k). Even k: the k-th central
/// difference; odd k: the (k-1)-th convolved with the centered first
/// difference.
std::vector<double> central_weights(int k)
{
    std::vector<double> w{1.0};
    auto convolve = [](const std::vector<double>& a, const std::vector<double>& b) {
        std::vector<double> c(a.size() + b.size() - 1, 0.0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                c[i + j] += a[i] * b[j];
        return c;
    };
    for (int i = 0; i < k / 2; ++i)
        w = convolve(w, {1.0, -2.0, 1.0});
    if (k % 2 == 1)
        w = convolve(w, {-0.5, 0.0, 0.5});
    return w;
}

template <class Value, class Field>
Value apply_fd_impl(const PdeOperator& op, const Field& field, const Point3& p, double step)
{
    if (!(step > 0.0))
        throw std::invalid_argument("finite-difference step must be positive");
    std::map<std::tuple<int, int, int>, Value> cache;
    auto sample = [&](int i, int j, int l) {
        const auto key = std::make_tuple(i, j, l);
        auto it = cache.find(key);
        if (it == cache.end())
            it = cache.emplace(key, field(Point3{p.x + i * step, p.y + j * step, p.z + l * step})).first;
        return it->second;
    };

    Value total{};
    for (const auto& term : op.terms()) {
        if (term.c == 0.0)
            continue;
        const auto wx = central_weights(term.alpha);
        const auto wy = central_weights(term.beta);
        const auto wz = central_weights(term.gamma);
        const int mx = static_cast<int>(wx.size() / 2);
        const int my = static_cast<int>(wy.size() / 2);
        const int mz = static_cast<int>(wz.size() / 2);
        Value acc{};
        for (int i = -mx; i <= mx; ++i) {
            const double cx = wx[static_cast<std::size_t>(i + mx)];
            if (cx == 0.0)
                continue;
            for (int j = -my; j <= my; ++j) {
                const double cy = wy[static_cast<std::size_t>(j + my)];
                if (cy == 0.0)
                    continue;
                for (int l = -mz; l <= mz; ++l) {
                    const double cz = wz[static_cast<std::size_t>(l + mz)];
                    if (cz == 0.0)
                        continue;
                    acc += sample(i, j, l) * Complex{cx * cy * cz};
                }
            }
        }
        total += acc * Complex{term.c / std::pow(step, op.order())};
    }
    return total;
}

} // namespace

Complex apply_fd(const PdeOperator& op, const ScalarField& field, const Point3& p, double step)
{
    return apply_fd_impl<Complex>(op, field, p, step);
}

Quaternion apply_fd(const PdeOperator& op, const QuaternionField& field, const Point3& p, double step)
{
    return apply_fd_impl<Quaternion>(op, field, p, step);
}

Quaternion residual_via_formula(const PdeOperator& op, const GMonogenicMap& m, const Point3& p)
{
    const Quaternion e = char_element(op, m.triple());
    const Quaternion dn = gateaux_derivative(m, op.order())(p);
    return m.side() == Side::Right ? e * dn : dn * e;
}

} // namespace gmono
