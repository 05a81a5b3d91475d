#include "doctest.h"
#include "oracles.hpp"

#include "gmono/e3.hpp"
#include "gmono/errors.hpp"

#include <cmath>

using namespace gmono;

namespace {
const Complex I{0.0, 1.0};
}

TEST_CASE("spectral values at T0")
{
    const auto s = xi(kTripleT0, {1.0, 2.0, 3.0});
    CHECK(s.xi1 == Complex{1.0, 3.0});
    CHECK(s.xi2 == Complex{1.0, 2.0});
    const Quaternion z = zeta(kTripleT0, {1.0, 2.0, 3.0});
    CHECK(z == Quaternion{Complex{1.0, 3.0}, Complex{1.0, 2.0}, 0.0, 0.0});
    CHECK(norm(z) == doctest::Approx(std::sqrt(15.0)).epsilon(1e-15));

    oracle::Random rng(11);
    for (int i = 0; i < 20; ++i) {
        const Triple t = rng.valid_triple();
        CHECK(zeta(t, {1.0, 0.0, 0.0}) == Quaternion::one());
        const auto o = xi(t, {0.0, 0.0, 0.0});
        CHECK(o.xi1 == Complex{});
        CHECK(o.xi2 == Complex{});
    }
}

TEST_CASE("xi agrees with the functionals and zeta is real-linear")
{
    oracle::Random rng(12);
    for (int i = 0; i < 100; ++i) {
        const Triple t = rng.valid_triple();
        const Point3 p = rng.point(2.0), q = rng.point(2.0);
        const double s = rng.uniform(-3.0, 3.0);
        const Quaternion z = zeta(t, p);
        const auto x = xi(t, p);
        CHECK(f1(z) == x.xi1);
        CHECK(f2(z) == x.xi2);
        CHECK(z[3] == Complex{});
        CHECK(z[4] == Complex{});
        // x i1 + y i2 + z i3, assembled from quaternion operations.
        const Quaternion direct = scale(p.x, Quaternion::one()) + scale(p.y, t.i2()) + scale(p.z, t.i3());
        CHECK(max_abs_diff(z, direct) <= 1e-14);
        CHECK(max_abs_diff(zeta(t, p + s * q), zeta(t, p) + scale(s, zeta(t, q))) <= 1e-13);
    }
}

TEST_CASE("singular lines")
{
    CHECK(on_singular_line(kTripleT0, {0.0, 0.0, 0.0}, 1));
    CHECK(on_singular_line(kTripleT0, {0.0, 0.0, 0.0}, 2));
    CHECK(on_singular_line(kTripleT0, {0.0, 5.0, 0.0}, 1));
    CHECK_FALSE(on_singular_line(kTripleT0, {0.0, 5.0, 0.0}, 2));
    CHECK(on_singular_line(kTripleT0, {0.0, 0.0, -2.0}, 2));
    CHECK_FALSE(on_singular_line(kTripleT0, {1.0, 2.0, 3.0}, 1));
    CHECK_THROWS_AS(on_singular_line(kTripleT0, {}, 3), std::out_of_range);

    // zeta is invertible exactly off both lines.
    oracle::Random rng(13);
    for (int i = 0; i < 100; ++i) {
        const Triple t = rng.valid_triple();
        Point3 p = rng.point();
        if (i % 3 == 0) {
            // Put p on L1: solve x + y a1 + z b1 = 0 for x and z with y free.
            const double y = rng.uniform(-1.0, 1.0);
            if (std::abs(t.b1.imag()) < 1e-3)
                continue;
            const double z = -y * t.a1.imag() / t.b1.imag();
            p = {-(y * t.a1.real() + z * t.b1.real()), y, z};
        }
        const bool singular = on_singular_line(t, p, 1, 1e-9) || on_singular_line(t, p, 2, 1e-9);
        bool threw = false;
        try {
            (void)inverse(zeta(t, p));
        } catch (const SingularError&) {
            threw = true;
        }
        CHECK(threw == singular);
    }
}

TEST_CASE("validation verdicts")
{
    const auto t0 = validate(kTripleT0);
    CHECK(t0.independent);
    CHECK(t0.surjective);
    CHECK(t0.valid());

    const auto real = validate({1.0, 1.0, 2.0, 2.0});
    CHECK_FALSE(real.surjective);
    CHECK_FALSE(real.valid());

    for (double t : {0.0, 0.4, 1.3, 2.9}) {
        const Triple dep{I * std::sin(t), I * std::sin(t), I * std::cos(t), I * std::cos(t)};
        const auto r = validate(dep);
        CHECK_FALSE(r.independent);
        CHECK(r.surjective);
        CHECK_THROWS_AS(require_valid(dep), InvalidTripleError);
    }
    CHECK_NOTHROW(require_valid(kTripleT0));
    CHECK_FALSE(validate(kTripleT0).describe().empty());

    // One non-real entry per pair is enough.
    CHECK(validate({Complex{0.0, 1.0}, Complex{2.0, 0.0}, Complex{1.0, 0.0}, Complex{0.5, -1.0}}).surjective);
    CHECK_FALSE(validate({Complex{0.0, 1.0}, Complex{2.0, 0.0}, Complex{1.0, 0.0}, Complex{0.5, 1e-13}}).surjective);
}

TEST_CASE("spectral images are two-dimensional for valid triples")
{
    oracle::Random rng(14);
    for (int i = 0; i < 10; ++i) {
        const Triple t = rng.valid_triple();
        for (int k = 1; k <= 2; ++k) {
            auto val = [&](const Point3& p) { return k == 1 ? xi(t, p).xi1 : xi(t, p).xi2; };
            const Complex u = val({1.0, 0.0, 0.0}) - val({});
            const Complex v = val({0.0, 1.0, 0.0}) - val({});
            const Complex w = val({0.0, 0.0, 1.0}) - val({});
            const double area = std::max({std::abs((std::conj(u) * v).imag()), std::abs((std::conj(u) * w).imag()),
                                          std::abs((std::conj(v) * w).imag())});
            CHECK(area > 1e-6);
        }
    }
}
