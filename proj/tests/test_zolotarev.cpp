#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "zolo/zolotarev.hpp"

using namespace zolo;
using numerics::Complex;
using rational::PolynomialRatio;
using rational::RationalFunction;
using zolotarev::Method;
using zolotarev::SolveOptions;

TEST_CASE("sign_of classifies the two-circle samples") {
    const auto inst = domains::make_example("1a", 512);
    CHECK(zolotarev::sign_of(inst, Complex(-0.5)) == -1);
    CHECK(zolotarev::sign_of(inst, Complex(1.5)) == +1);
    CHECK_THROWS_AS((void)zolotarev::sign_of(inst, Complex(0.0)), UndefinedOutsideSets);
}

TEST_CASE("sigma/tau relations of the conversion map") {
    // tau = 0.6: sigma = (0.6/1.8)^2 = 1/9, p = 0.8
    const double sigma = zolotarev::sigma_from_tau(0.6);
    CHECK(sigma == doctest::Approx(1.0 / 9.0).epsilon(1e-12));
    CHECK((1.0 - sigma) / (1.0 + sigma) == doctest::Approx(0.8).epsilon(1e-12));

    // small-tau limit: sigma ~ (tau/2)^2
    CHECK(zolotarev::sigma_from_tau(1e-6) == doctest::Approx(2.5e-13).epsilon(1e-6));

    // bijection
    for (double tau : {1e-6, 0.1436, 0.6, 0.999})
        CHECK(zolotarev::tau_from_sigma(zolotarev::sigma_from_tau(tau)) ==
              doctest::Approx(tau).epsilon(1e-12));
}

TEST_CASE("optimal_two_circles returns the closed-form sigma") {
    const double c = std::sqrt(0.75);
    const double base = (1.0 - c) / (1.0 + c);
    const auto [r2, s2] = zolotarev::optimal_two_circles(0.5, 1.0, 2);
    CHECK(s2 == doctest::Approx(base * base).epsilon(1e-14));
    CHECK(s2 == doctest::Approx(5.155e-3).epsilon(1e-3));
    const auto [r6, s6] = zolotarev::optimal_two_circles(0.5, 1.0, 6);
    CHECK(s6 == doctest::Approx(1.4e-7).epsilon(0.03));
    const auto [r8, s8] = zolotarev::optimal_two_circles(0.5, 1.0, 8);
    CHECK(s8 == doctest::Approx(7.1e-10).epsilon(0.03));

    // sigma_r strictly decreasing in r
    double prev = 1.0;
    for (Eigen::Index r = 1; r <= 30; ++r) {
        const double s = zolotarev::optimal_two_circles(0.5, 1.0, r).second;
        CHECK(s < prev);
        prev = s;
    }

    CHECK_THROWS_AS((void)zolotarev::optimal_two_circles(1.0, 1.0, 2), InvalidGeometry);
}

TEST_CASE("the closed-form optimum equioscillates on both circles") {
    // both circles are level sets of |r*|: exactly sqrt(sigma) on E and
    // 1/sqrt(sigma) on F, so their ratio attains sigma everywhere
    const auto [r1, s1] = zolotarev::optimal_two_circles(0.5, 1.0, 1);
    const double k = std::sqrt(s1);
    const auto inst = domains::make_example("1a", 128);
    for (const Complex z : inst.e_points)
        CHECK(std::abs(r1.eval(z)) == doctest::Approx(k).epsilon(1e-12));
    for (const Complex z : inst.f_points)
        CHECK(std::abs(r1.eval(z)) == doctest::Approx(1.0 / k).epsilon(1e-12));
}

TEST_CASE("measure_sigma of a constant is one") {
    RationalFunction c(PolynomialRatio{{Complex(3.0)}, {Complex(1.0)}});
    const auto inst = domains::make_example("1a", 64);
    CHECK(zolotarev::measure_sigma(c, inst) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("measure_sigma flags a zero on F") {
    RationalFunction z_minus_f(
        PolynomialRatio{{Complex(1.0), Complex(-1.5)}, {Complex(1.0), Complex(10.0)}});
    const auto inst = domains::make_example("1a", 512);
    CHECK_THROWS_AS((void)zolotarev::measure_sigma(z_minus_f, inst), ZeroOnF);
}

TEST_CASE("measured sigma of the oracle matches the closed form at every tested order") {
    const auto inst = domains::make_example("1a", 512);
    for (Eigen::Index r : {2, 6, 8, 26}) {
        const auto [h3, sigma] = zolotarev::optimal_two_circles(0.5, 1.0, r);
        const double measured = zolotarev::measure_sigma(h3, inst);
        CHECK(std::log10(measured) == doctest::Approx(std::log10(sigma)).epsilon(1e-3));
    }
    // deepest tested order, the value the framework is chasing
    CHECK(zolotarev::optimal_two_circles(0.5, 1.0, 26).second ==
          doctest::Approx(1.8144e-30).epsilon(1e-3));
}

TEST_CASE("z4_to_z3 converts the order-2 oracle") {
    const auto [h4, sigma] = zolotarev::optimal_two_circles(0.5, 1.0, 2);
    // h4 here is the Z3-form optimum; build the Z4 side through a solve instead
    const auto inst = domains::make_example("1a", 512);
    const auto sol = zolotarev::solve_z4(inst, Method::loewner, SolveOptions{.order = 2});
    CHECK(sol.tau == doctest::Approx(2.0 * std::sqrt(sol.sigma) / (1.0 + sol.sigma))
                         .epsilon(1e-10));
    CHECK(sol.p == doctest::Approx((1.0 - sol.sigma) / (1.0 + sol.sigma)).epsilon(1e-12));
    // optimal tau for this geometry is about 0.1436; LF at order 2 lands nearby
    CHECK(sol.tau > 0.1);
    CHECK(sol.tau < 0.3);
    (void)h4;
    (void)sigma;
}

TEST_CASE("z4_to_z3 rejects a useless approximant") {
    RationalFunction zero(PolynomialRatio{{Complex(0.0)}, {Complex(1.0)}});
    const auto inst = domains::make_example("1a", 64);
    CHECK_THROWS_AS((void)zolotarev::z4_to_z3(zero, inst), DegenerateTau);
}

TEST_CASE("loewner solve at order 2 reproduces the reported sigma") {
    const auto inst = domains::make_example("1a", 512);
    const auto sol = zolotarev::solve_z4(inst, Method::loewner, SolveOptions{.order = 2});
    CHECK(sol.sigma == doctest::Approx(0.0095).epsilon(0.30));
    CHECK(sol.order == 2);
    CHECK(sol.method_tag == "loewner");
    CHECK(sol.elapsed_seconds > 0.0);
}

TEST_CASE("lawson-refined solve at order 2 beats the loewner value") {
    const auto inst = domains::make_example("1a", 512);
    const auto lf = zolotarev::solve_z4(inst, Method::loewner, SolveOptions{.order = 2});
    SolveOptions opts;
    opts.order = 2;
    opts.lawson_iterations = 200;
    opts.damping = 0.95;
    opts.sign_mode = true;
    const auto al = zolotarev::solve_z4(inst, Method::aaa_lawson, opts);
    CHECK(al.sigma == doctest::Approx(0.0064).epsilon(0.40));
    CHECK(al.sigma < lf.sigma);
    CHECK(al.method_tag == "aaa-lawson");
}

TEST_CASE("plain aaa collapses on exact two-valued data") {
    const auto inst = domains::make_example("1a", 512);
    // the greedy linearized solve yields a near-constant model on exact sign
    // data, so tau >= 1 and the Z3 conversion is undefined
    CHECK_THROWS_AS((void)zolotarev::solve_z4(inst, Method::aaa, SolveOptions{.order = 2}),
                    DegenerateTau);
}

TEST_CASE("loewner sigma decreases with order across instances") {
    for (const char* name : {"1a", "7"}) {
        const auto inst = domains::make_example(name, 256);
        double prev = 2.0;
        for (Eigen::Index r : {2, 4, 8}) {
            const auto sol = zolotarev::solve_z4(inst, Method::loewner, SolveOptions{.order = r});
            CHECK(sol.tau < 1.0);
            CHECK(sol.tau >= 0.0);
            CHECK(sol.sigma <= prev);
            prev = sol.sigma;
        }
    }
}

TEST_CASE("extremal_sets reports attainment points") {
    const auto inst = domains::make_example("1a", 512);
    const auto [h3, sigma] = zolotarev::optimal_two_circles(0.5, 1.0, 2);
    const auto [m1, m2] = zolotarev::extremal_sets(h3, inst, sigma, 1e-3);
    CHECK(!m1.empty());
    CHECK(!m2.empty());

    RationalFunction constant(
        PolynomialRatio{{Complex(std::sqrt(sigma))}, {Complex(1.0)}});
    const auto [c1, c2] = zolotarev::extremal_sets(constant, inst, sigma, 1e-3);
    CHECK(c1.size() == inst.e_points.size());
    CHECK(c2.empty());
}

TEST_CASE("method_name round trip") {
    CHECK(zolotarev::method_name(Method::loewner) == "loewner");
    CHECK(zolotarev::method_name(Method::aaa) == "aaa");
    CHECK(zolotarev::method_name(Method::aaa_lawson) == "aaa-lawson");
}
