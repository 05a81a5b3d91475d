#pragma once

#include "gmono/analytic.hpp"
#include "gmono/e3.hpp"
#include "gmono/monogenic.hpp"
#include "gmono/quaternion.hpp"

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace gmono {

/// C * d^n / dx^alpha dy^beta dz^gamma
struct PdeTerm {
    int alpha = 0;
    int beta = 0;
    int gamma = 0;
    double c = 0.0;

    bool operator==(const PdeTerm&) const = default;
};

/// Homogeneous constant-coefficient operator L_n = sum C d^n/dx^a dy^b dz^g
/// with alpha + beta + gamma = n in every term.
class PdeOperator {
public:
    /// Throws std::invalid_argument on a term of the wrong order, a repeated
    /// (alpha, beta, gamma) key, or all-zero coefficients.
    PdeOperator(int order, std::vector<PdeTerm> terms);

    /// d^2/dx^2 + d^2/dy^2 + d^2/dz^2
    static PdeOperator laplace3d();
    /// d^5/dx^5 + d^5/dx dy^2 dz^2 + d^5/dx dz^4: P(a, b) > 0 on R^2 but not elliptic.
    static PdeOperator example5();
    /// Throws std::invalid_argument for unknown names.
    static PdeOperator preset(const std::string& name);

    int order() const { return order_; }
    const std::vector<PdeTerm>& terms() const { return terms_; }

private:
    int order_;
    std::vector<PdeTerm> terms_;
};

/// sum C i2^beta i3^gamma, with the powers taken in H(C).
Quaternion char_element(const PdeOperator& op, const Triple& t);

/// sum C a^beta b^gamma
Complex char_scalar(const PdeOperator& op, Complex a, Complex b);

/// Real restriction P(a, b) = sum C a^beta b^gamma.
double p_polynomial(const PdeOperator& op, double a, double b);

struct PScan {
    double min_abs = 0.0;
    double a = 0.0;
    double b = 0.0;
};

/// Minimum of |P| on the grid [-range, range]^2 with spacing close to
/// `step` (the grid always contains both endpoints and the origin when the
/// point count is odd). A positive minimum only suggests, and cannot prove,
/// that P has no real zeros.
PScan p_scan(const PdeOperator& op, double range, double step);

/// Coefficients (ascending in b) of sum C a^beta b^gamma for fixed a.
/// Throws DegeneratePolynomialError when every coefficient vanishes.
std::vector<Complex> char_poly_in_b(const PdeOperator& op, Complex a);

struct CharSolution {
    Complex a;
    std::vector<Complex> poly;
    std::vector<Complex> roots;
    std::vector<double> residuals;  ///< |char_scalar(op, a, root)|
};

/// Roots b of the characteristic equation for each candidate a.
std::vector<CharSolution> solve_characteristic(const PdeOperator& op, std::span<const Complex> a_values);

struct CandidateTriple {
    Triple triple;
    TripleReport report;
    double char_norm = 0.0;
};

/// Every pairing of a solution (a1, b1) with a solution (a2, b2), with its
/// validation verdict.
std::vector<CandidateTriple> assemble_triples(const PdeOperator& op, std::span<const CharSolution> solutions);

struct HarmonicParams {
    Complex t;
    Complex tau;
};

/// a1 = i sin t, b1 = i cos t, a2 = i sin tau, b2 = i cos tau, which solves
/// 1 + a_k^2 + b_k^2 = 0. Throws InvalidTripleError when the result is not
/// usable (e.g. t == tau real).
Triple laplace_triple(const HarmonicParams& h);

enum class Part { Re, Im };

using ScalarField = std::function<Complex(const Point3&)>;

/// Real (or imaginary) part of F(x + i y sin t + i z cos t), harmonic in R^3.
struct ScalarField3 {
    AnalyticFunction F;
    Complex t;
    Part part = Part::Re;

    Complex operator()(const Point3& p) const;
    ScalarField field() const;
};

ScalarField3 harmonic_solution(const AnalyticFunction& f, Complex t, Part part);

/// Per-order default finite-difference step: 1e-3 up to order 2, 1e-2 for
/// orders 3 and 4, 5e-2 beyond.
double default_fd_step(int order);

/// L_n applied numerically: each partial derivative a second-order central
/// difference, composed per term on the tensor stencil around p.
Complex apply_fd(const PdeOperator& op, const ScalarField& field, const Point3& p, double step);
Quaternion apply_fd(const PdeOperator& op, const QuaternionField& field, const Point3& p, double step);

/// L_n Phi through the characteristic element: char_element * Phi^(n) for
/// right maps, Phi^(n) * char_element for left maps.
Quaternion residual_via_formula(const PdeOperator& op, const GMonogenicMap& m, const Point3& p);

} // namespace gmono
