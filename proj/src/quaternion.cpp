#include "gmono/quaternion.hpp"

#include "gmono/errors.hpp"

#include <algorithm>
#include <cmath>

namespace gmono {

namespace {
constexpr Complex kI{0.0, 1.0};
}

Quaternion mul(const Quaternion& a, const Quaternion& b)
{
    return {a[1] * b[1] + a[3] * b[4],
            a[2] * b[2] + a[4] * b[3],
            a[1] * b[3] + a[3] * b[2],
            a[2] * b[4] + a[4] * b[1]};
}

Quaternion add(const Quaternion& a, const Quaternion& b)
{
    return {a[1] + b[1], a[2] + b[2], a[3] + b[3], a[4] + b[4]};
}

Quaternion sub(const Quaternion& a, const Quaternion& b)
{
    return {a[1] - b[1], a[2] - b[2], a[3] - b[3], a[4] - b[4]};
}

Quaternion scale(Complex lambda, const Quaternion& a)
{
    return {lambda * a[1], lambda * a[2], lambda * a[3], lambda * a[4]};
}

double norm(const Quaternion& a)
{
    double s = 0.0;
    for (const auto& x : a.c)
        s += std::norm(x);
    return std::sqrt(s);
}

double max_abs_diff(const Quaternion& a, const Quaternion& b)
{
    double m = 0.0;
    for (int k = 1; k <= 4; ++k)
        m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

bool approx_equal(const Quaternion& a, const Quaternion& b, double tol)
{
    return max_abs_diff(a, b) <= tol;
}

IjkQuaternion to_ijk(const Quaternion& a)
{
    // Inverse of a1 = q0 - i q1, a2 = q0 + i q1, a3 = -i q2 - q3, a4 = -i q2 + q3.
    return {{(a[1] + a[2]) * 0.5,
             (a[2] - a[1]) * (-0.5 * kI),
             (a[3] + a[4]) * (0.5 * kI),
             (a[4] - a[3]) * 0.5}};
}

Quaternion from_ijk(const IjkQuaternion& q)
{
    return {q.q[0] - kI * q.q[1],
            q.q[0] + kI * q.q[1],
            -kI * q.q[2] - q.q[3],
            -kI * q.q[2] + q.q[3]};
}

Complex determinant(const Quaternion& a)
{
    return a[1] * a[2] - a[3] * a[4];
}

Quaternion inverse(const Quaternion& a)
{
    const Complex det = determinant(a);
    const double n = norm(a);
    if (std::abs(det) <= 1e-14 * (1.0 + n * n))
        throw SingularError("quaternion is a zero divisor (|a1 a2 - a3 a4| below threshold)");
    return scale(1.0 / det, Quaternion{a[2], a[1], -a[3], -a[4]});
}

Complex f1(const Quaternion& a) { return a[1] + a[3]; }
Complex f2(const Quaternion& a) { return a[2] + a[4]; }
Complex fhat1(const Quaternion& a) { return a[1] + a[4]; }
Complex fhat2(const Quaternion& a) { return a[2] + a[3]; }

std::pair<Quaternion, Quaternion> ideal_split(const Quaternion& a)
{
    return {mul(Quaternion::e(2), a), mul(Quaternion::e(1), a)};
}

std::pair<Quaternion, Quaternion> left_ideal_split(const Quaternion& a)
{
    return {mul(a, Quaternion::e(2)), mul(a, Quaternion::e(1))};
}

bool in_ideal(const Quaternion& a, Ideal which, double tol)
{
    auto small = [&](int j, int k) { return std::abs(a[j]) <= tol && std::abs(a[k]) <= tol; };
    switch (which) {
    case Ideal::I1:
        return small(1, 3);
    case Ideal::I2:
        return small(2, 4);
    case Ideal::Hat1:
        return small(1, 4);
    case Ideal::Hat2:
        return small(2, 3);
    }
    return false;
}

} // namespace gmono
