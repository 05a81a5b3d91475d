#include "gmono/e3.hpp"

#include "gmono/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace gmono {

Spectrum xi(const Triple& t, const Point3& p)
{
    return {p.x + p.y * t.a1 + p.z * t.b1, p.x + p.y * t.a2 + p.z * t.b2};
}

Quaternion zeta(const Triple& t, const Point3& p)
{
    const auto s = xi(t, p);
    return {s.xi1, s.xi2, 0.0, 0.0};
}

bool on_singular_line(const Triple& t, const Point3& p, int k, double tol)
{
    if (k != 1 && k != 2)
        throw std::out_of_range("singular line index must be 1 or 2");
    const auto s = xi(t, p);
    return std::abs(k == 1 ? s.xi1 : s.xi2) <= tol;
}

std::string TripleReport::describe() const
{
    std::string out;
    out += independent ? "independent" : "dependent over R";
    out += surjective ? ", surjective" : ", not surjective";
    if (!pair1_nonreal)
        out += " (a1, b1 both real)";
    if (!pair2_nonreal)
        out += " (a2, b2 both real)";
    return out;
}

TripleReport validate(const Triple& t)
{
    using Row = std::array<double, 4>;
    const std::array<Row, 3> m{{
        {1.0, 0.0, 1.0, 0.0},
        {t.a1.real(), t.a1.imag(), t.a2.real(), t.a2.imag()},
        {t.b1.real(), t.b1.imag(), t.b2.real(), t.b2.imag()},
    }};

    auto det3 = [&](int c0, int c1, int c2) {
        auto e = [&](int r, int c) { return m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; };
        return e(0, c0) * (e(1, c1) * e(2, c2) - e(1, c2) * e(2, c1))
             - e(0, c1) * (e(1, c0) * e(2, c2) - e(1, c2) * e(2, c0))
             + e(0, c2) * (e(1, c0) * e(2, c1) - e(1, c1) * e(2, c0));
    };

    TripleReport r;
    r.max_minor = std::max({std::abs(det3(0, 1, 2)), std::abs(det3(0, 1, 3)),
                            std::abs(det3(0, 2, 3)), std::abs(det3(1, 2, 3))});
    double scale = 1.0;
    for (const auto& row : m) {
        double s = 0.0;
        for (double v : row)
            s += v * v;
        scale *= std::sqrt(s);
    }
    r.minor_threshold = 1e-12 * scale;
    r.independent = r.max_minor > r.minor_threshold;

    constexpr double kNonReal = 1e-12;
    r.pair1_nonreal = std::abs(t.a1.imag()) > kNonReal || std::abs(t.b1.imag()) > kNonReal;
    r.pair2_nonreal = std::abs(t.a2.imag()) > kNonReal || std::abs(t.b2.imag()) > kNonReal;
    r.surjective = r.pair1_nonreal && r.pair2_nonreal;
    return r;
}

void require_valid(const Triple& t)
{
    const auto r = validate(t);
    if (!r.valid())
        throw InvalidTripleError("invalid triple: " + r.describe());
}

} // namespace gmono
