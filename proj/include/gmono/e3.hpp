#pragma once

#include "gmono/quaternion.hpp"

#include <string>
#include <utility>

namespace gmono {

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    bool operator==(const Point3&) const = default;
};

inline Point3 operator+(const Point3& p, const Point3& q) { return {p.x + q.x, p.y + q.y, p.z + q.z}; }
inline Point3 operator*(double s, const Point3& p) { return {s * p.x, s * p.y, s * p.z}; }

/// Embedding of R^3 into H(C): i1 = 1, i2 = a1 e1 + a2 e2, i3 = b1 e1 + b2 e2.
struct Triple {
    Complex a1;
    Complex a2;
    Complex b1;
    Complex b2;

    Quaternion i2() const { return {a1, a2, 0.0, 0.0}; }
    Quaternion i3() const { return {b1, b2, 0.0, 0.0}; }

    bool operator==(const Triple&) const = default;
};

/// a1 = 0, b1 = i, a2 = i, b2 = 0. A harmonic triple.
inline constexpr Triple kTripleT0{0.0, Complex{0.0, 1.0}, Complex{0.0, 1.0}, 0.0};

struct Spectrum {
    Complex xi1;
    Complex xi2;
};

/// xi_k = x + y a_k + z b_k.
Spectrum xi(const Triple& t, const Point3& p);

/// zeta = x i1 + y i2 + z i3 = xi1 e1 + xi2 e2.
Quaternion zeta(const Triple& t, const Point3& p);

/// True iff |xi_k(p)| <= tol, i.e. p lies on the line L_k where zeta is a
/// zero divisor. k is 1 or 2.
bool on_singular_line(const Triple& t, const Point3& p, int k, double tol = kDefaultTol);

struct TripleReport {
    bool independent = false;
    bool surjective = false;
    /// Largest |3x3 minor| of the real coordinate matrix of {1, i2, i3}.
    double max_minor = 0.0;
    /// Threshold the minor was compared against.
    double minor_threshold = 0.0;
    bool pair1_nonreal = false;  ///< (a1, b1) has a non-real entry
    bool pair2_nonreal = false;  ///< (a2, b2) has a non-real entry

    bool valid() const { return independent && surjective; }
    std::string describe() const;
};

/// Checks real linear independence of {1, i2, i3} and f1(E3) = f2(E3) = C.
///
/// Independence compares all four 3x3 minors of the real 3x4 coordinate
/// matrix against 1e-12 times the product of the row norms. Surjectivity
/// requires |Im| > 1e-12 for at least one entry of each pair (a_k, b_k).
TripleReport validate(const Triple& t);

/// Throws InvalidTripleError with the report's description if the triple is
/// not usable.
void require_valid(const Triple& t);

} // namespace gmono
