#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "zolo/domains.hpp"

using namespace zolo;
using domains::Complex;
using domains::SignProblemInstance;

namespace {

bool conjugate_closed(const std::vector<Complex>& pts, double tol) {
    for (const Complex z : pts) {
        double best = 1e300;
        for (const Complex y : pts) best = std::min(best, std::abs(std::conj(z) - y));
        if (best > tol) return false;
    }
    return true;
}

bool inside_box(const SignProblemInstance& inst) {
    auto ok = [&](const Complex z) {
        return z.real() >= inst.bounding_box.re_min && z.real() <= inst.bounding_box.re_max &&
               z.imag() >= inst.bounding_box.im_min && z.imag() <= inst.bounding_box.im_max;
    };
    return std::all_of(inst.e_points.begin(), inst.e_points.end(), ok) &&
           std::all_of(inst.f_points.begin(), inst.f_points.end(), ok);
}

} // namespace

TEST_CASE("two_circles samples uniform boundary angles starting at zero") {
    const auto inst = domains::two_circles(0.5, 1.0, 8);
    REQUIRE(inst.e_points.size() == 8);
    REQUIRE(inst.f_points.size() == 8);
    // the four cardinal points of each circle sit at every second sample
    const Complex want[4] = {{-0.5, 0.0}, {-1.0, 0.5}, {-1.5, 0.0}, {-1.0, -0.5}};
    for (int i = 0; i < 4; ++i) {
        double best = 1e300;
        for (const Complex z : inst.e_points) best = std::min(best, std::abs(z - want[i]));
        CHECK(best <= 1e-14);
        double best_f = 1e300;
        for (const Complex z : inst.f_points)
            best_f = std::min(best_f, std::abs(z - (want[i] + 2.0)));
        CHECK(best_f <= 1e-14);
    }
    CHECK(inst.conjugate_symmetric);
    CHECK(inside_box(inst));
}

TEST_CASE("two_circles rejects overlapping geometry") {
    CHECK_THROWS_AS((void)domains::two_circles(1.0, 1.0, 16), InvalidGeometry);
    CHECK_THROWS_AS((void)domains::two_circles(2.0, 1.0, 16), InvalidGeometry);
    CHECK_THROWS_AS((void)domains::two_circles(0.5, 1.0, 4), TooFewPoints);
}

TEST_CASE("make_example 1a equals two_circles(0.5, 1, n)") {
    const auto a = domains::make_example("1a", 512);
    const auto b = domains::two_circles(0.5, 1.0, 512);
    REQUIRE(a.e_points.size() == b.e_points.size());
    REQUIRE(a.f_points.size() == b.f_points.size());
    for (std::size_t i = 0; i < a.e_points.size(); ++i) {
        CHECK(a.e_points[i] == b.e_points[i]);
        CHECK(a.f_points[i] == b.f_points[i]);
    }
}

TEST_CASE("make_example 1b gives real intervals on both sides of zero") {
    const auto inst = domains::make_example("1b", 256);
    CHECK(inst.conjugate_symmetric);
    for (const Complex z : inst.e_points) {
        CHECK(z.imag() == 0.0);
        CHECK(z.real() < 0.0);
    }
    for (const Complex z : inst.f_points) {
        CHECK(z.imag() == 0.0);
        CHECK(z.real() > 0.0);
    }
}

TEST_CASE("make_example 7 gives two rectangles with E left of F") {
    const auto inst = domains::make_example("7", 256);
    double e_max = -1e300, f_min = 1e300;
    for (const Complex z : inst.e_points) e_max = std::max(e_max, z.real());
    for (const Complex z : inst.f_points) f_min = std::min(f_min, z.real());
    CHECK(e_max < f_min);
}

TEST_CASE("make_example rejects unknown names and covers the catalog") {
    CHECK_THROWS_AS((void)domains::make_example("zz9"), UnknownExample);
    const auto names = domains::catalog_names();
    CHECK(names.size() >= 12);
    for (const auto& name : names) {
        const auto inst = domains::make_example(name, 64);
        CHECK(inst.name == name);
        CHECK(!inst.e_points.empty());
        CHECK(!inst.f_points.empty());
        CHECK(inside_box(inst));
        // E and F are disjoint
        for (const Complex e : inst.e_points)
            for (const Complex f : inst.f_points) CHECK(std::abs(e - f) > 1e-14);
        if (inst.conjugate_symmetric) {
            CHECK(conjugate_closed(inst.e_points, 1e-14));
            CHECK(conjugate_closed(inst.f_points, 1e-14));
        }
    }
}

TEST_CASE("symmetric catalog entries carry the symmetry flag") {
    for (const char* name : {"1a", "1b", "2a", "2b", "7", "pm2"})
        CHECK(domains::make_example(name, 128).conjugate_symmetric);
}

TEST_CASE("make_example is deterministic") {
    const auto a = domains::make_example("spiral1", 200);
    const auto b = domains::make_example("spiral1", 200);
    REQUIRE(a.e_points.size() == b.e_points.size());
    for (std::size_t i = 0; i < a.e_points.size(); ++i) CHECK(a.e_points[i] == b.e_points[i]);
    for (std::size_t i = 0; i < a.f_points.size(); ++i) CHECK(a.f_points[i] == b.f_points[i]);
}

TEST_CASE("split_left_right alternates within each set") {
    SignProblemInstance inst;
    inst.name = "tiny";
    inst.e_points = {Complex(-1.0, 0.5), Complex(-1.0, -0.5)};
    inst.f_points = {Complex(1.0, 0.5), Complex(1.0, -0.5)};
    const auto split = domains::split_left_right(inst);
    REQUIRE(split.right_points.size() == 2);
    REQUIRE(split.left_points.size() == 2);
    CHECK(split.right_points[0] == inst.e_points[0]);
    CHECK(split.right_values[0] == Complex(-1.0));
    CHECK(split.right_points[1] == inst.f_points[0]);
    CHECK(split.right_values[1] == Complex(1.0));
    CHECK(split.left_points[0] == inst.e_points[1]);
    CHECK(split.left_values[0] == Complex(-1.0));
    CHECK(split.left_points[1] == inst.f_points[1]);
    CHECK(split.left_values[1] == Complex(1.0));
}

TEST_CASE("split_left_right balances and preserves the labeled point set") {
    const auto inst = domains::make_example("1a", 512);
    const auto split = domains::split_left_right(inst);
    CHECK(split.right_points.size() == 512);
    CHECK(split.left_points.size() == 512);
    for (const Complex v : split.right_values) CHECK(std::abs(std::abs(v.real()) - 1.0) <= 1e-15);
    for (const Complex v : split.left_values) CHECK(std::abs(std::abs(v.real()) - 1.0) <= 1e-15);

    // union of halves equals the instance point set
    auto key = [](const Complex z) { return std::pair<double, double>(z.real(), z.imag()); };
    std::multiset<std::pair<double, double>> halves, original;
    for (const Complex z : split.right_points) halves.insert(key(z));
    for (const Complex z : split.left_points) halves.insert(key(z));
    for (const Complex z : inst.e_points) original.insert(key(z));
    for (const Complex z : inst.f_points) original.insert(key(z));
    CHECK(halves == original);

    // no shared point between halves
    std::set<std::pair<double, double>> right;
    for (const Complex z : split.right_points) right.insert(key(z));
    for (const Complex z : split.left_points) CHECK(right.count(key(z)) == 0);
}

TEST_CASE("split_left_right requires enough points") {
    SignProblemInstance inst;
    inst.e_points = {Complex(-1.0)};
    inst.f_points = {Complex(1.0)};
    CHECK_THROWS_AS((void)domains::split_left_right(inst), TooFewPoints);
}

TEST_CASE("split of a symmetric instance keeps both halves conjugate-closed") {
    const auto split = domains::split_left_right(domains::make_example("1a", 512));
    CHECK(conjugate_closed(split.right_points, 1e-14));
    CHECK(conjugate_closed(split.left_points, 1e-14));
}
