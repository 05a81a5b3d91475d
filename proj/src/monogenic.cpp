#include "gmono/monogenic.hpp"

#include "gmono/errors.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <variant>

namespace gmono {

GMonogenicMap::GMonogenicMap(Side side, const Triple& triple, std::array<AnalyticFunction, 4> functions)
    : side_(side), triple_(triple), functions_(std::move(functions))
{
    require_valid(triple_);
}

int GMonogenicMap::variable_of(int k) const
{
    switch (k) {
    case 1:
        return 1;
    case 2:
        return 2;
    case 3:
        return side_ == Side::Right ? 1 : 2;
    case 4:
        return side_ == Side::Right ? 2 : 1;
    }
    throw std::out_of_range("component index must be 1..4");
}

Quaternion GMonogenicMap::operator()(const Point3& p) const
{
    const auto s = xi(triple_, p);
    Quaternion out;
    for (int k = 1; k <= 4; ++k)
        out[k] = F(k)(variable_of(k) == 1 ? s.xi1 : s.xi2);
    return out;
}

QuaternionField GMonogenicMap::field() const
{
    return [m = *this](const Point3& p) { return m(p); };
}

GMonogenicMap gateaux_derivative(const GMonogenicMap& m, int order)
{
    std::array<AnalyticFunction, 4> d;
    for (int k = 1; k <= 4; ++k)
        d[static_cast<std::size_t>(k - 1)] = derivative(m.F(k), order);
    return {m.side(), m.triple(), std::move(d)};
}

Quaternion limit_probe(const GMonogenicMap& m, const Point3& p, const Point3& h, double eps)
{
    if (!(eps > 0.0))
        throw std::invalid_argument("limit_probe needs eps > 0");
    const Quaternion quotient = scale(1.0 / eps, m(p + eps * h) - m(p));
    const Quaternion dir = zeta(m.triple(), h);
    const Quaternion deriv = gateaux_derivative(m)(p);
    return quotient - (m.side() == Side::Right ? dir * deriv : deriv * dir);
}

GMonogenicMap canonicalize(const QuaternionSeries& s)
{
    // zeta^k c = xi1^k (c1 e1 + c3 e3) + xi2^k (c2 e2 + c4 e4), and
    // c zeta^k = xi1^k (c1 e1 + c4 e4) + xi2^k (c2 e2 + c3 e3). In both cases
    // F_k collects the k-th coefficients; the side decides which variable
    // F3 and F4 see.
    std::array<std::vector<Complex>, 4> coeffs;
    for (const auto& c : s.coeffs)
        for (int k = 1; k <= 4; ++k)
            coeffs[static_cast<std::size_t>(k - 1)].push_back(c[k]);
    std::array<AnalyticFunction, 4> f;
    for (std::size_t k = 0; k < 4; ++k)
        f[k] = AnalyticFunction::polynomial(std::move(coeffs[k]));
    return {s.side, s.triple, std::move(f)};
}

CrResidual cr_residual(const QuaternionField& field, Side side, const Triple& t, const Point3& p, double step)
{
    if (!(step > 0.0))
        throw std::invalid_argument("cr_residual needs step > 0");
    auto central = [&](const Point3& dir) {
        return scale(0.5 / step, field(p + step * dir) - field(p + (-step) * dir));
    };
    const Quaternion dx = central({1.0, 0.0, 0.0});
    const Quaternion dy = central({0.0, 1.0, 0.0});
    const Quaternion dz = central({0.0, 0.0, 1.0});
    const Quaternion i2 = t.i2();
    const Quaternion i3 = t.i3();
    if (side == Side::Right)
        return {norm(dy - i2 * dx), norm(dz - i3 * dx)};
    return {norm(dy - dx * i2), norm(dz - dx * i3)};
}

namespace {
void require_compatible(const GMonogenicMap& a, const GMonogenicMap& b)
{
    if (a.side() != b.side() || !(a.triple() == b.triple()))
        throw std::invalid_argument("maps must share side and triple");
}
} // namespace

QuaternionField pointwise_product(const GMonogenicMap& a, const GMonogenicMap& b)
{
    require_compatible(a, b);
    return [a, b](const Point3& p) { return a(p) * b(p); };
}

GMonogenicMap bicomplex_product(const GMonogenicMap& a, const GMonogenicMap& b)
{
    require_compatible(a, b);
    for (const auto* m : {&a, &b})
        if (!m->F(3).is_zero() || !m->F(4).is_zero())
            throw std::invalid_argument("bicomplex product needs F3 = F4 = 0 on both factors");
    return {a.side(), a.triple(),
            {product(a.F(1), b.F(1)), product(a.F(2), b.F(2)), AnalyticFunction{}, AnalyticFunction{}}};
}

std::pair<GMonogenicMap, GMonogenicMap> ideal_parts(const GMonogenicMap& m)
{
    const AnalyticFunction zero;
    if (m.side() == Side::Right)
        return {GMonogenicMap{m.side(), m.triple(), {zero, m.F(2), zero, m.F(4)}},
                GMonogenicMap{m.side(), m.triple(), {m.F(1), zero, m.F(3), zero}}};
    return {GMonogenicMap{m.side(), m.triple(), {zero, m.F(2), m.F(3), zero}},
            GMonogenicMap{m.side(), m.triple(), {m.F(1), zero, zero, m.F(4)}}};
}

Quaternion resolvent(const Triple& t, const Point3& p, Complex param, double tol)
{
    const auto s = xi(t, p);
    const Complex d1 = param - s.xi1;
    const Complex d2 = param - s.xi2;
    if (std::abs(d1) <= tol || std::abs(d2) <= tol)
        throw SingularError("resolvent parameter coincides with a spectral value");
    return {1.0 / d1, 1.0 / d2, 0.0, 0.0};
}

Quaternion cauchy_eval(const GMonogenicMap& m, const Point3& p, int nodes)
{
    if (nodes < 16)
        throw std::invalid_argument("cauchy_eval needs at least 16 nodes");
    const auto s = xi(m.triple(), p);
    const double gap = std::abs(s.xi1 - s.xi2);
    if (gap <= kDefaultTol)
        throw DegenerateSpectrumError("xi1 == xi2: contours around the two spectral values cannot be separated");
    const double radius = std::min(1.0, gap / 2.0);

    // Density on each contour; the resolvent multiplies from the left for
    // right maps and from the right for left maps.
    const bool right = m.side() == Side::Right;
    auto density = [&](int contour, Complex t) {
        Quaternion q;
        for (int k = 1; k <= 4; ++k)
            if (m.variable_of(k) == contour)
                q[k] = m.F(k)(t);
        return q;
    };

    Quaternion sum;
    for (int contour = 1; contour <= 2; ++contour) {
        const Complex center = contour == 1 ? s.xi1 : s.xi2;
        for (int j = 0; j < nodes; ++j) {
            const double theta = 2.0 * std::numbers::pi * j / nodes;
            const Complex offset = std::polar(radius, theta);
            const Complex t = center + offset;
            const Quaternion r = resolvent(m.triple(), p, t);
            const Quaternion g = density(contour, t);
            // dt / (2 pi i) = offset dtheta / (2 pi)
            sum += (right ? r * g : g * r) * (offset / static_cast<double>(nodes));
        }
    }
    return sum;
}

namespace {

std::vector<Complex> probe_points(const AnalyticFunction& f)
{
    Complex center{};
    double reach = 1.0;
    if (const auto* s = std::get_if<PowerSeries>(&f.repr())) {
        center = s->center;
        reach = std::min(1.0, 0.5 * s->radius);
    }
    std::vector<Complex> pts{center};
    for (int ring = 1; ring <= 2; ++ring)
        for (int j = 0; j < 5; ++j)
            pts.push_back(center + std::polar(reach * ring / 2.0, 2.0 * std::numbers::pi * j / 5 + 0.3));
    return pts;
}

bool is_constant(const AnalyticFunction& f, double tol)
{
    const AnalyticFunction d = derivative(f);
    if (d.is_zero())
        return true;
    for (Complex w : probe_points(f)) {
        if (!d.in_domain(w))
            continue;
        if (std::abs(d(w)) > tol)
            return false;
    }
    return true;
}

} // namespace

bool both_sided(const GMonogenicMap& m, double tol)
{
    return is_constant(m.F(3), tol) && is_constant(m.F(4), tol);
}

} // namespace gmono
