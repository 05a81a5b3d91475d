#include "doctest.h"
#include "oracles.hpp"

#include "gmono/errors.hpp"
#include "gmono/monogenic.hpp"

#include <cmath>

using namespace gmono;

namespace {

const Complex I{0.0, 1.0};
const Point3 P123{1.0, 2.0, 3.0};

GMonogenicMap random_poly_map(oracle::Random& rng, Side side, const Triple& t, int max_degree = 5)
{
    std::array<AnalyticFunction, 4> f;
    for (auto& g : f)
        g = AnalyticFunction::polynomial(rng.coeffs(rng.integer(0, max_degree)));
    return {side, t, f};
}

GMonogenicMap uniform_map(Side side, const Triple& t, const AnalyticFunction& f)
{
    return {side, t, {f, f, f, f}};
}

} // namespace

TEST_CASE("evaluation of canonical maps")
{
    const auto w = AnalyticFunction::identity();
    const AnalyticFunction zero;
    const GMonogenicMap id(Side::Right, kTripleT0, {w, w, zero, zero});
    CHECK(id(P123) == zeta(kTripleT0, P123));

    const auto sq = uniform_map(Side::Right, kTripleT0, AnalyticFunction::polynomial({0.0, 0.0, 1.0}));
    CHECK(sq(P123) == Quaternion{Complex{-8, 6}, Complex{-3, 4}, Complex{-8, 6}, Complex{-3, 4}});

    const GMonogenicMap sq_left(Side::Left, kTripleT0, sq.functions());
    CHECK(sq_left(P123) == Quaternion{Complex{-8, 6}, Complex{-3, 4}, Complex{-3, 4}, Complex{-8, 6}});

    const Quaternion c{Complex{1, 2}, 3.0, -I, 0.5};
    const GMonogenicMap constant(Side::Right, kTripleT0,
                                 {AnalyticFunction::constant(c[1]), AnalyticFunction::constant(c[2]),
                                  AnalyticFunction::constant(c[3]), AnalyticFunction::constant(c[4])});
    CHECK(constant({0.3, -7.0, 2.0}) == c);

    CHECK_THROWS_AS(GMonogenicMap(Side::Right, Triple{1.0, 1.0, 2.0, 2.0}, sq.functions()), InvalidTripleError);

    const auto series = AnalyticFunction::power_series(0.0, std::vector<Complex>(100, 1.0), 1.0);
    const GMonogenicMap edge(Side::Right, kTripleT0, {series, series, zero, zero});
    CHECK_THROWS_AS(edge({0.95, 0.0, 0.0}), OutOfDomainError);
}

TEST_CASE("powers of zeta")
{
    oracle::Random rng(31);
    for (int i = 0; i < 20; ++i) {
        const Triple t = rng.valid_triple();
        Point3 p = rng.point();
        while (norm(zeta(t, p)) > 2.0)
            p = 0.5 * p;
        const Quaternion z = zeta(t, p);
        const auto s = xi(t, p);
        Quaternion power = Quaternion::one();
        for (int n = 0; n <= 16; ++n) {
            QuaternionSeries ser{Side::Right, t, std::vector<Quaternion>(static_cast<std::size_t>(n) + 1)};
            ser.coeffs.back() = Quaternion::one();
            const Quaternion closed{std::pow(s.xi1, n), std::pow(s.xi2, n), 0.0, 0.0};
            const double scale = std::max(1.0, norm(closed));
            CHECK(max_abs_diff(canonicalize(ser)(p), closed) <= 1e-11 * scale);
            CHECK(max_abs_diff(power, closed) <= 1e-11 * scale);
            power = power * z;
        }
    }
}

TEST_CASE("canonicalize matches the direct power sum")
{
    QuaternionSeries e3_only{Side::Right, kTripleT0, {Quaternion::e(3)}};
    const auto m = canonicalize(e3_only);
    CHECK(m.F(3) == AnalyticFunction::constant(1.0));
    CHECK(m.F(1).is_zero());
    CHECK(m.F(2).is_zero());
    CHECK(m.F(4).is_zero());

    QuaternionSeries id{Side::Right, kTripleT0, {Quaternion::zero(), Quaternion::one()}};
    CHECK(canonicalize(id).F(1) == AnalyticFunction::identity());
    CHECK(canonicalize(id).F(2) == AnalyticFunction::identity());

    oracle::Random rng(32);
    for (Side side : {Side::Right, Side::Left}) {
        for (int i = 0; i < 20; ++i) {
            QuaternionSeries s{side, rng.valid_triple(), {}};
            for (int k = 0; k < 5; ++k)
                s.coeffs.push_back(rng.quaternion());
            const Point3 p = rng.point();
            CHECK(max_abs_diff(canonicalize(s)(p), oracle::power_sum(s, p)) <= 1e-11);
        }
    }
}

TEST_CASE("Cauchy-Riemann residuals")
{
    oracle::Random rng(33);
    for (Side side : {Side::Right, Side::Left}) {
        for (int i = 0; i < 10; ++i) {
            const Triple t = i == 0 ? kTripleT0 : rng.valid_triple();
            const auto m = random_poly_map(rng, side, t);
            const Point3 p = i == 0 ? P123 : rng.point();
            const auto r = cr_residual(m.field(), side, t, p, 1e-5);
            const double scale = 1.0 + norm(m(p));
            CHECK(r.y <= 1e-8 * scale);
            CHECK(r.z <= 1e-8 * scale);

            // Derivatives are canonical too.
            const auto d = gateaux_derivative(m);
            const auto rd = cr_residual(d.field(), side, t, p, 1e-5);
            CHECK(rd.y <= 1e-8 * (1.0 + norm(d(p))));
        }
    }

    const Quaternion c = rng.quaternion();
    const auto r = cr_residual([c](const Point3&) { return c; }, Side::Right, kTripleT0, P123);
    CHECK(r.y == 0.0);
    CHECK(r.z == 0.0);
    CHECK_THROWS_AS(cr_residual([c](const Point3&) { return c; }, Side::Right, kTripleT0, P123, 0.0),
                    std::invalid_argument);
}

TEST_CASE("right map checked against the left conditions fails")
{
    const AnalyticFunction zero, w = AnalyticFunction::identity();
    const GMonogenicMap m(Side::Right, kTripleT0, {zero, zero, w, zero});
    CHECK(cr_residual(m.field(), Side::Right, kTripleT0, P123).y <= 1e-8);
    CHECK(cr_residual(m.field(), Side::Left, kTripleT0, P123).y >= 0.5);
    CHECK_FALSE(both_sided(m));
}

TEST_CASE("the xi2 e1 field is not monogenic")
{
    const QuaternionField f = [](const Point3& p) { return Quaternion{xi(kTripleT0, p).xi2, 0.0, 0.0, 0.0}; };
    for (double step : {1e-2, 1e-4, 1e-6})
        CHECK(std::abs(cr_residual(f, Side::Right, kTripleT0, P123, step).y - 1.0) <= 1e-3);

    // It arises as the pointwise product of e3 and a map with F4 = w.
    const AnalyticFunction zero, w = AnalyticFunction::identity();
    const GMonogenicMap a(Side::Right, kTripleT0, {zero, zero, AnalyticFunction::constant(1.0), zero});
    const GMonogenicMap b(Side::Right, kTripleT0, {zero, zero, zero, w});
    const auto prod = pointwise_product(a, b);
    oracle::Random rng(34);
    for (int i = 0; i < 5; ++i) {
        const Point3 p = rng.point();
        CHECK(max_abs_diff(prod(p), f(p)) <= 1e-15);
        CHECK(cr_residual(prod, Side::Right, kTripleT0, p).y >= 0.5);
    }
}

TEST_CASE("products within span{e1, e2}")
{
    oracle::Random rng(35);
    const AnalyticFunction zero, w = AnalyticFunction::identity();
    const GMonogenicMap id(Side::Right, kTripleT0, {w, w, zero, zero});
    const auto sq = canonicalize({Side::Right, kTripleT0, {Quaternion::zero(), Quaternion::zero(), Quaternion::one()}});
    const auto idid = pointwise_product(id, id);
    for (int i = 0; i < 5; ++i) {
        const Point3 p = rng.point();
        CHECK(max_abs_diff(idid(p), sq(p)) <= 1e-14);
    }

    for (int i = 0; i < 10; ++i) {
        const Triple t = rng.valid_triple();
        const GMonogenicMap a(Side::Right, t,
                              {AnalyticFunction::polynomial(rng.coeffs(3)), AnalyticFunction::polynomial(rng.coeffs(2)),
                               zero, zero});
        const GMonogenicMap b(Side::Right, t,
                              {AnalyticFunction::exp_scaled(rng.disc(), rng.disc()),
                               AnalyticFunction::polynomial(rng.coeffs(4)), zero, zero});
        const Point3 p = rng.point();
        const QuaternionField field = pointwise_product(a, b);
        const auto r = cr_residual(field, Side::Right, t, p);
        const double scale = 1.0 + norm(field(p));
        CHECK(r.y <= 1e-8 * scale);
        CHECK(r.z <= 1e-8 * scale);
        // a has polynomial F1 and b an exponential F1: the symbolic product
        // needs a closed form, so use two polynomials for it.
        const GMonogenicMap c(Side::Right, t,
                              {AnalyticFunction::polynomial(rng.coeffs(3)), AnalyticFunction::polynomial(rng.coeffs(3)),
                               zero, zero});
        const auto sym = bicomplex_product(a, c);
        CHECK(max_abs_diff(sym(p), a(p) * c(p)) <= 1e-13);
    }

    const GMonogenicMap with_e3(Side::Right, kTripleT0, {w, w, w, zero});
    CHECK_THROWS_AS(bicomplex_product(with_e3, id), std::invalid_argument);
    const GMonogenicMap other_side(Side::Left, kTripleT0, {w, w, zero, zero});
    CHECK_THROWS_AS(pointwise_product(id, other_side), std::invalid_argument);
}

TEST_CASE("Gateaux derivative")
{
    const auto sq = canonicalize({Side::Right, kTripleT0, {Quaternion::zero(), Quaternion::zero(), Quaternion::one()}});
    const auto d = gateaux_derivative(sq);
    oracle::Random rng(36);
    for (int i = 0; i < 10; ++i) {
        const Point3 p = rng.point();
        CHECK(max_abs_diff(d(p), scale(2.0, zeta(kTripleT0, p))) <= 1e-15);
    }

    const auto m = random_poly_map(rng, Side::Left, rng.valid_triple(), 4);
    const auto zero_map = gateaux_derivative(m, 5);
    for (int k = 1; k <= 4; ++k)
        CHECK(zero_map.F(k).is_zero());

    const Complex lambda{0.3, -0.8};
    const auto e = uniform_map(Side::Right, kTripleT0, AnalyticFunction::exp_scaled(1.0, lambda));
    const auto de = gateaux_derivative(e);
    for (int k = 1; k <= 4; ++k)
        CHECK(de.F(k) == AnalyticFunction::exp_scaled(lambda, lambda));
}

TEST_CASE("limit probe")
{
    const AnalyticFunction zero, w = AnalyticFunction::identity();
    oracle::Random rng(37);
    for (Side side : {Side::Right, Side::Left}) {
        const Triple t = rng.valid_triple();
        const GMonogenicMap lin(side, t, {w, w, w, w});
        for (double eps : {1e-1, 1e-3})
            CHECK(norm(limit_probe(lin, rng.point(), rng.point(), eps)) <= 1e-12);
    }

    const auto sq = canonicalize({Side::Right, kTripleT0, {Quaternion::zero(), Quaternion::zero(), Quaternion::one()}});
    // h = i2 is the point (0, 1, 0).
    const Point3 h{0.0, 1.0, 0.0};
    const double r1 = norm(limit_probe(sq, P123, h, 1e-3));
    const double r2 = norm(limit_probe(sq, P123, h, 5e-4));
    CHECK(r1 > 0.0);
    CHECK(r2 / r1 == doctest::Approx(0.5).epsilon(0.2));

    // With h = i1 the probe is the x-difference quotient error.
    const Point3 ex{1.0, 0.0, 0.0};
    const double eps = 1e-3;
    const Quaternion quotient = scale(1.0 / eps, sq(P123 + eps * ex) - sq(P123));
    const Quaternion dx = gateaux_derivative(sq)(P123);
    CHECK(max_abs_diff(limit_probe(sq, P123, ex, eps), quotient - dx) <= 1e-15);

    CHECK_THROWS_AS(limit_probe(sq, P123, h, 0.0), std::invalid_argument);
}

TEST_CASE("ideal parts")
{
    oracle::Random rng(38);
    for (Side side : {Side::Right, Side::Left}) {
        const Triple t = rng.valid_triple();
        const auto m = random_poly_map(rng, side, t);
        const auto [p1, p2] = ideal_parts(m);
        for (int i = 0; i < 5; ++i) {
            const Point3 p = rng.point();
            const Quaternion v = m(p);
            const auto [s1, s2] = side == Side::Right ? ideal_split(v) : left_ideal_split(v);
            CHECK(max_abs_diff(p1(p), s1) <= 1e-15);
            CHECK(max_abs_diff(p2(p), s2) <= 1e-15);
            CHECK(in_ideal(p1(p), side == Side::Right ? Ideal::I1 : Ideal::Hat1, 0.0));
            CHECK(in_ideal(p2(p), side == Side::Right ? Ideal::I2 : Ideal::Hat2, 0.0));
        }
    }
}

TEST_CASE("resolvent")
{
    const Quaternion r = resolvent(kTripleT0, P123, 5.0);
    CHECK(max_abs_diff(r, Quaternion{Complex{0.16, 0.12}, Complex{0.2, 0.1}, 0.0, 0.0}) <= 1e-15);
    CHECK_THROWS_AS(resolvent(kTripleT0, P123, Complex{1.0, 3.0}), SingularError);
    CHECK_THROWS_AS(resolvent(kTripleT0, P123, Complex{1.0, 2.0 + 1e-13}), SingularError);

    oracle::Random rng(39);
    for (int i = 0; i < 100; ++i) {
        const Triple t = rng.valid_triple();
        const Point3 p = rng.point();
        const Complex param = rng.disc(3.0);
        const Quaternion res = resolvent(t, p, param);
        const Quaternion diff = scale(param, Quaternion::one()) - zeta(t, p);
        CHECK(max_abs_diff(diff * res, Quaternion::one()) <= 1e-13 * (1.0 + norm(diff) * norm(res)));
    }
}

TEST_CASE("contour integral representation")
{
    const auto sq = uniform_map(Side::Right, kTripleT0, AnalyticFunction::polynomial({0.0, 0.0, 1.0}));
    CHECK(max_abs_diff(cauchy_eval(sq, P123, 256), sq(P123)) <= 1e-10);

    const Quaternion c{1.0, I, -2.0, 0.5};
    const GMonogenicMap constant(Side::Left, kTripleT0,
                                 {AnalyticFunction::constant(c[1]), AnalyticFunction::constant(c[2]),
                                  AnalyticFunction::constant(c[3]), AnalyticFunction::constant(c[4])});
    CHECK(max_abs_diff(cauchy_eval(constant, P123, 16), c) <= 1e-14);

    // Off the lattice of polynomials the trapezoid rule converges geometrically.
    // Unit contour (xi1 = -i, xi2 = i): 32 nodes are visibly too few for exp(12 w).
    const auto e = uniform_map(Side::Right, kTripleT0, AnalyticFunction::exp_scaled(1.0, 12.0));
    const Point3 q{0.0, 1.0, -1.0};
    const double scale = 1.0 + norm(e(q));
    const double err32 = max_abs_diff(cauchy_eval(e, q, 32), e(q)) / scale;
    const double err256 = max_abs_diff(cauchy_eval(e, q, 256), e(q)) / scale;
    CHECK(err32 >= 1e-3);
    CHECK(err256 <= 1e-4 * err32);

    oracle::Random rng(40);
    for (Side side : {Side::Right, Side::Left}) {
        for (int i = 0; i < 5; ++i) {
            const Triple t = rng.valid_triple();
            const auto m = random_poly_map(rng, side, t);
            const Point3 p = rng.point();
            CHECK(max_abs_diff(cauchy_eval(m, p, 256), m(p)) <= 1e-10 * (1.0 + norm(m(p))));
        }
    }

    CHECK_THROWS_AS(cauchy_eval(sq, P123, 8), std::invalid_argument);
    // T0 at y = z has xi1 = xi2.
    CHECK_THROWS_AS(cauchy_eval(sq, {1.0, 2.0, 2.0}, 64), DegenerateSpectrumError);
}

TEST_CASE("both-sided maps")
{
    for (int n = 0; n < 6; ++n) {
        QuaternionSeries s{Side::Right, kTripleT0, std::vector<Quaternion>(static_cast<std::size_t>(n) + 1)};
        s.coeffs.back() = Quaternion::one();
        CHECK(both_sided(canonicalize(s)));
    }
    const AnalyticFunction zero, w = AnalyticFunction::identity();
    CHECK_FALSE(both_sided(GMonogenicMap(Side::Right, kTripleT0, {w, w, w, zero})));
    CHECK(both_sided(GMonogenicMap(Side::Right, kTripleT0,
                                   {w, AnalyticFunction::exp_scaled(1.0, 1.0), AnalyticFunction::constant(5.0),
                                    AnalyticFunction::constant(-I)})));
    // A both-sided map passes the conditions of either side.
    const GMonogenicMap psi(Side::Right, kTripleT0,
                            {AnalyticFunction::sine(), w, AnalyticFunction::constant(2.0), AnalyticFunction::constant(I)});
    CHECK(cr_residual(psi.field(), Side::Left, kTripleT0, P123).y <= 1e-8);
    CHECK(cr_residual(psi.field(), Side::Left, kTripleT0, P123).z <= 1e-8);
}
