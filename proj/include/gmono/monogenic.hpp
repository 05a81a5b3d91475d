#pragma once

#include "gmono/analytic.hpp"
#include "gmono/e3.hpp"
#include "gmono/quaternion.hpp"

#include <array>
#include <functional>
#include <utility>
#include <vector>

namespace gmono {

enum class Side { Right, Left };

using QuaternionField = std::function<Quaternion(const Point3&)>;

/// Canonical G-monogenic map built from four analytic functions.
///
///   Right:  F1(xi1) e1 + F2(xi2) e2 + F3(xi1) e3 + F4(xi2) e4
///   Left:   F1(xi1) e1 + F2(xi2) e2 + F3(xi2) e3 + F4(xi1) e4
///
/// Right maps satisfy dPhi/dy = i2 dPhi/dx and dPhi/dz = i3 dPhi/dx; left
/// maps the same with the factor on the right. The domain-convexity
/// hypotheses of the representation are not checked: the map is defined
/// wherever xi1 and xi2 lie in the domains of the corresponding F's.
class GMonogenicMap {
public:
    /// Throws InvalidTripleError if the triple fails validate().
    GMonogenicMap(Side side, const Triple& triple, std::array<AnalyticFunction, 4> functions);

    Side side() const { return side_; }
    const Triple& triple() const { return triple_; }
    /// F_k for k in 1..4.
    const AnalyticFunction& F(int k) const { return functions_[static_cast<std::size_t>(k - 1)]; }
    const std::array<AnalyticFunction, 4>& functions() const { return functions_; }

    /// Which spectral variable (1 or 2) F_k is evaluated at.
    int variable_of(int k) const;

    Quaternion operator()(const Point3& p) const;
    QuaternionField field() const;

private:
    Side side_;
    Triple triple_;
    std::array<AnalyticFunction, 4> functions_;
};

inline Quaternion eval(const GMonogenicMap& m, const Point3& p) { return m(p); }

/// order-th Gateaux derivative: every F replaced by its order-th derivative.
GMonogenicMap gateaux_derivative(const GMonogenicMap& m, int order = 1);

/// Difference between the Gateaux quotient at step eps along direction h
/// and its limit: (Phi(zeta + eps h) - Phi(zeta)) / eps - h Phi'(zeta) for
/// right maps, with Phi'(zeta) h for left maps. O(eps) for smooth F's.
Quaternion limit_probe(const GMonogenicMap& m, const Point3& p, const Point3& h, double eps);

/// Polynomial sum_k zeta^k c_k (right) or sum_k c_k zeta^k (left).
struct QuaternionSeries {
    Side side = Side::Right;
    Triple triple;
    std::vector<Quaternion> coeffs;
};

GMonogenicMap canonicalize(const QuaternionSeries& s);

struct CrResidual {
    double y = 0.0;  ///< ||D_y Phi - i2 D_x Phi|| (or D_x Phi i2 for left)
    double z = 0.0;  ///< ||D_z Phi - i3 D_x Phi||
};

/// Cauchy-Riemann type residuals by second-order central differences.
CrResidual cr_residual(const QuaternionField& field, Side side, const Triple& t, const Point3& p,
                       double step = 1e-5);

/// p -> A(p) B(p). Not a canonical map in general: e3 * (xi2 e4) = xi2 e1
/// already violates the right CR conditions when a1 != a2.
/// Throws std::invalid_argument unless side and triple agree.
QuaternionField pointwise_product(const GMonogenicMap& a, const GMonogenicMap& b);

/// Product of two maps valued in span{e1, e2} (F3 = F4 = 0), which stays
/// canonical: F1 G1 e1 + F2 G2 e2. Throws std::invalid_argument otherwise.
GMonogenicMap bicomplex_product(const GMonogenicMap& a, const GMonogenicMap& b);

/// Parts of the map in the two maximal ideals, as canonical maps.
/// Right: (e2 Phi, e1 Phi) = (F2 e2 + F4 e4, F1 e1 + F3 e3), valued in I1, I2.
/// Left:  (Phi e2, Phi e1) = (F2 e2 + F3 e3, F1 e1 + F4 e4), valued in Î1, Î2.
std::pair<GMonogenicMap, GMonogenicMap> ideal_parts(const GMonogenicMap& m);

/// (t - zeta)^{-1} = e1 / (t - xi1) + e2 / (t - xi2). Throws SingularError
/// when |t - xi_k| <= tol.
Quaternion resolvent(const Triple& t, const Point3& p, Complex param, double tol = kDefaultTol);

/// Evaluates the map through its contour-integral representation, using the
/// trapezoidal rule with `nodes` points on circles around xi1 and xi2 of
/// radius min(1, |xi1 - xi2| / 2). Throws DegenerateSpectrumError when
/// |xi1 - xi2| <= 1e-12 and std::invalid_argument when nodes < 16.
Quaternion cauchy_eval(const GMonogenicMap& m, const Point3& p, int nodes);

/// True iff F3 and F4 are constant, i.e. the map is both right and left
/// G-monogenic. Checked structurally, then by |F'| <= tol on probe points.
bool both_sided(const GMonogenicMap& m, double tol = kDefaultTol);

} // namespace gmono
