#pragma once

#include <array>
#include <complex>
#include <utility>

namespace gmono {

using Complex = std::complex<double>;

inline constexpr double kDefaultTol = 1e-12;

/// Element of the complexified quaternion algebra H(C), stored by its
/// coefficients in the idempotent basis {e1, e2, e3, e4}.
///
/// Multiplication table:
///
///        |  e1   e2   e3   e4
///     ---+--------------------
///     e1 |  e1   0    e3   0
///     e2 |  0    e2   0    e4
///     e3 |  0    e3   0    e1
///     e4 |  e4   0    e2   0
///
/// The unit is e1 + e2. The algebra is isomorphic to 2x2 complex matrices
/// via e1 -> E11, e2 -> E22, e3 -> E12, e4 -> E21.
struct Quaternion {
    std::array<Complex, 4> c{};

    constexpr Quaternion() = default;
    constexpr Quaternion(Complex a1, Complex a2, Complex a3, Complex a4) : c{a1, a2, a3, a4} {}

    /// Coefficient of e_k, k in 1..4.
    constexpr Complex& operator[](int k) { return c[static_cast<std::size_t>(k - 1)]; }
    constexpr const Complex& operator[](int k) const { return c[static_cast<std::size_t>(k - 1)]; }

    static constexpr Quaternion zero() { return {}; }
    static constexpr Quaternion one() { return {1.0, 1.0, 0.0, 0.0}; }
    /// Scalar lambda * 1 = lambda e1 + lambda e2.
    static constexpr Quaternion scalar(Complex lambda) { return {lambda, lambda, 0.0, 0.0}; }
    static constexpr Quaternion e(int k) {
        Quaternion q;
        q[k] = 1.0;
        return q;
    }

    bool operator==(const Quaternion&) const = default;
};

/// Coefficients of 1, I, J, K in the classical basis.
struct IjkQuaternion {
    std::array<Complex, 4> q{};

    bool operator==(const IjkQuaternion&) const = default;
};

Quaternion mul(const Quaternion& a, const Quaternion& b);
Quaternion add(const Quaternion& a, const Quaternion& b);
Quaternion sub(const Quaternion& a, const Quaternion& b);
Quaternion scale(Complex lambda, const Quaternion& a);

inline Quaternion operator*(const Quaternion& a, const Quaternion& b) { return mul(a, b); }
inline Quaternion operator+(const Quaternion& a, const Quaternion& b) { return add(a, b); }
inline Quaternion operator-(const Quaternion& a, const Quaternion& b) { return sub(a, b); }
inline Quaternion operator-(const Quaternion& a) { return scale(-1.0, a); }
inline Quaternion operator*(Complex lambda, const Quaternion& a) { return scale(lambda, a); }
inline Quaternion operator*(const Quaternion& a, Complex lambda) { return scale(lambda, a); }
inline Quaternion& operator+=(Quaternion& a, const Quaternion& b) { return a = add(a, b); }
inline Quaternion& operator-=(Quaternion& a, const Quaternion& b) { return a = sub(a, b); }

/// Euclidean norm sqrt(sum |a_k|^2) of the e-basis coefficients.
double norm(const Quaternion& a);

/// max_k |a_k - b_k|
double max_abs_diff(const Quaternion& a, const Quaternion& b);

bool approx_equal(const Quaternion& a, const Quaternion& b, double tol = kDefaultTol);

IjkQuaternion to_ijk(const Quaternion& a);
Quaternion from_ijk(const IjkQuaternion& q);

/// a1 a2 - a3 a4, the determinant of the matrix image.
Complex determinant(const Quaternion& a);

/// Multiplicative inverse. Throws SingularError when
/// |det| <= 1e-14 (1 + ||a||^2), i.e. a is (numerically) a zero divisor.
Quaternion inverse(const Quaternion& a);

// Linear functionals. f1, f2 vanish on the right ideals I1, I2;
// fhat1, fhat2 vanish on the left ideals Î1, Î2.
Complex f1(const Quaternion& a);
Complex f2(const Quaternion& a);
Complex fhat1(const Quaternion& a);
Complex fhat2(const Quaternion& a);

enum class Ideal {
    I1,    ///< right, span{e2, e4}
    I2,    ///< right, span{e1, e3}
    Hat1,  ///< left,  span{e2, e3}
    Hat2,  ///< left,  span{e1, e4}
};

/// Returns (e2 a, e1 a): the parts in I1 and I2. They sum to a.
std::pair<Quaternion, Quaternion> ideal_split(const Quaternion& a);

/// Returns (a e2, a e1): the parts in Î1 and Î2. They sum to a.
std::pair<Quaternion, Quaternion> left_ideal_split(const Quaternion& a);

bool in_ideal(const Quaternion& a, Ideal which, double tol = kDefaultTol);

} // namespace gmono
