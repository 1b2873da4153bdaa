#include "zolo/domains.hpp"

#include <cmath>
#include <functional>
#include <numbers>

namespace zolo::domains {

namespace {

constexpr double kPi = std::numbers::pi;

using Curve = std::function<Complex(double)>;

// Uniform samples P(k/n) of a closed curve.
std::vector<Complex> sample_curve(const Curve& p, int n) {
    std::vector<Complex> out(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) out[static_cast<size_t>(k)] = p(static_cast<double>(k) / n);
    return out;
}

// Samples of a curve satisfying conj(P(t)) = P(1 - t). Only t <= 1/2 is
// evaluated; the rest is mirrored, so the sample set is exactly closed under
// conjugation with the pairing k <-> n - k.
std::vector<Complex> sample_symmetric_curve(const Curve& p, int n) {
    std::vector<Complex> out(static_cast<size_t>(n));
    for (int k = 0; k <= n / 2; ++k) out[static_cast<size_t>(k)] = p(static_cast<double>(k) / n);
    for (int k = n / 2 + 1; k < n; ++k)
        out[static_cast<size_t>(k)] = std::conj(out[static_cast<size_t>(n - k)]);
    return out;
}

Curve circle(Complex center, double radius) {
    return [=](double t) {
        const double th = 2.0 * kPi * t;
        return center + radius * Complex(std::cos(th), std::sin(th));
    };
}

Curve ellipse(Complex center, double a, double b, double rot = 0.0) {
    return [=](double t) {
        const double th = 2.0 * kPi * t;
        const Complex p(a * std::cos(th), b * std::sin(th));
        return center + std::polar(1.0, rot) * p;
    };
}

// Axis-aligned rectangle boundary, counterclockwise, starting at the middle
// of the right edge (a real-axis point, so conj(P(t)) = P(1 - t)).
Curve rectangle(double cx, double hw, double hh) {
    return [=](double t) -> Complex {
        const double perim = 4.0 * hw + 4.0 * hh;
        double s = t * perim;
        if (s < hh) return {cx + hw, s};
        s -= hh;
        if (s < 2.0 * hw) return {cx + hw - s, hh};
        s -= 2.0 * hw;
        if (s < 2.0 * hh) return {cx - hw, hh - s};
        s -= 2.0 * hh;
        if (s < 2.0 * hw) return {cx - hw + s, -hh};
        s -= 2.0 * hw;
        return {cx + hw, -hh + s};
    };
}

// Disk with a wedge notch ("pac-man"): radial edge out of the center, circular
// arc, radial edge back. Starts at the notch vertex on the real axis.
Curve notched_disk(double cx, double radius, double mouth_half_angle) {
    return [=](double t) -> Complex {
        const double arc = 2.0 * kPi - 2.0 * mouth_half_angle;
        const double edge_frac = 1.0 / (2.0 + arc);
        if (t < edge_frac)
            return Complex(cx, 0.0) + (t / edge_frac) * radius * std::polar(1.0, mouth_half_angle);
        if (t > 1.0 - edge_frac)
            return Complex(cx, 0.0) +
                   ((1.0 - t) / edge_frac) * radius * std::polar(1.0, -mouth_half_angle);
        const double th = mouth_half_angle + (t - edge_frac) / (1.0 - 2.0 * edge_frac) * arc;
        return Complex(cx, 0.0) + radius * std::polar(1.0, th);
    };
}

std::vector<Complex> interval(double a, double b, int n) {
    std::vector<Complex> out(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k)
        out[static_cast<size_t>(k)] = Complex(a + (b - a) * k / (n - 1), 0.0);
    return out;
}

void append(std::vector<Complex>& dst, std::vector<Complex> src) {
    dst.insert(dst.end(), src.begin(), src.end());
}

std::vector<Complex> negate_all(std::vector<Complex> pts) {
    for (Complex& z : pts) z = -z;
    return pts;
}

BoundingBox box_around(const std::vector<Complex>& e, const std::vector<Complex>& f) {
    BoundingBox b{1e300, -1e300, 1e300, -1e300};
    auto grow = [&](const std::vector<Complex>& pts) {
        for (const Complex& z : pts) {
            b.re_min = std::min(b.re_min, z.real());
            b.re_max = std::max(b.re_max, z.real());
            b.im_min = std::min(b.im_min, z.imag());
            b.im_max = std::max(b.im_max, z.imag());
        }
    };
    grow(e);
    grow(f);
    const double re_pad = 0.25 * (b.re_max - b.re_min) + 0.05;
    const double im_pad = 0.25 * (b.im_max - b.im_min) + 0.05;
    b.re_min -= re_pad;
    b.re_max += re_pad;
    b.im_min -= im_pad;
    b.im_max += im_pad;
    return b;
}

SignProblemInstance finish(std::string name, std::vector<Complex> e, std::vector<Complex> f,
                           bool symmetric) {
    SignProblemInstance inst;
    inst.name = std::move(name);
    inst.e_points = std::move(e);
    inst.f_points = std::move(f);
    inst.conjugate_symmetric = symmetric;
    inst.bounding_box = box_around(inst.e_points, inst.f_points);
    return inst;
}

// Two interlocking "comma" curves; qualitative yin/yang layout, rotationally
// symmetric (F = -E), not conjugate-symmetric.
std::vector<Complex> yin_curve(int n) {
    const int n_outer = n / 2;
    const int n_upper = n / 4;
    const int n_lower = n - n_outer - n_upper;
    std::vector<Complex> pts;
    pts.reserve(static_cast<size_t>(n));
    append(pts, sample_curve(
                    [](double t) {
                        const double th = kPi / 2 + 0.1 + t * (kPi - 0.2);
                        return std::polar(1.0, th);
                    },
                    n_outer));
    append(pts, sample_curve(
                    [](double t) {
                        return Complex(-0.08, 0.5) + 0.5 * std::polar(1.0, kPi / 2 - t * kPi);
                    },
                    n_upper));
    append(pts, sample_curve(
                    [](double t) {
                        return Complex(-0.08, -0.5) + 0.5 * std::polar(1.0, kPi / 2 + t * kPi);
                    },
                    n_lower));
    return pts;
}

std::vector<Complex> spiral_arm(int n, double phase) {
    return sample_curve(
        [=](double t) {
            const double th = 4.0 * kPi * t;
            return (0.2 + 0.08 * th) * std::polar(1.0, th + phase);
        },
        n);
}

} // namespace

SignProblemInstance two_circles(double rho, double alpha, int n_per_set) {
    if (!(rho > 0.0 && rho < alpha))
        throw InvalidGeometry("two_circles requires 0 < rho < alpha");
    if (n_per_set < 8) throw TooFewPoints("n_per_set must be at least 8");
    return finish("1a", sample_symmetric_curve(circle(Complex(-alpha, 0.0), rho), n_per_set),
                  sample_symmetric_curve(circle(Complex(alpha, 0.0), rho), n_per_set), true);
}

std::vector<std::string> catalog_names() {
    return {"1a", "1b", "1c", "1d", "2a", "2b", "2c", "2d",
            "3a", "3b", "3c", "3d", "7", "spiral1", "pm2"};
}

SignProblemInstance make_example(const std::string& name, int n_per_set) {
    if (n_per_set < 8) throw TooFewPoints("n_per_set must be at least 8");
    const int n = n_per_set;
    if (name == "1a") return two_circles(0.5, 1.0, n);
    if (name == "1b") return finish(name, interval(-3.0, -1.0, n), interval(1.0, 3.0, n), true);
    if (name == "1c") {
        auto blob = [](Complex c, double r0, double amp, double lobes, double phase) {
            return [=](double t) {
                const double th = 2.0 * kPi * t;
                return c + (r0 + amp * std::cos(lobes * th + phase)) * std::polar(1.0, th);
            };
        };
        return finish(name, sample_curve(blob(Complex(-1.0, 0.3), 0.5, 0.15, 3.0, 0.0), n),
                      sample_curve(blob(Complex(1.0, -0.2), 0.6, 0.10, 2.0, 1.0), n), false);
    }
    if (name == "1d") return finish(name, yin_curve(n), negate_all(yin_curve(n)), false);
    if (name == "2a")
        return finish(name, sample_symmetric_curve(ellipse(Complex(-1.0, 0.0), 0.4, 0.7), n),
                      sample_symmetric_curve(ellipse(Complex(1.0, 0.0), 0.7, 0.4), n), true);
    if (name == "2b") {
        std::vector<Complex> f = interval(-3.0, -2.0, n / 2);
        append(f, interval(2.0, 3.0, n - n / 2));
        return finish(name, interval(-0.75, 0.75, n), std::move(f), true);
    }
    if (name == "2c")
        return finish(name, sample_curve(circle(Complex(-1.0, 0.5), 0.5), n),
                      sample_curve(circle(Complex(1.0, -0.25), 0.6), n), false);
    if (name == "2d")
        return finish(name, sample_curve(ellipse(Complex(-0.8, -0.3), 0.6, 0.3, 0.5), n),
                      sample_curve(ellipse(Complex(1.0, 0.4), 0.5, 0.25, -0.7), n), false);
    if (name == "3a")
        return finish(name, sample_symmetric_curve(circle(Complex(0.0, 0.0), 0.3), n),
                      sample_symmetric_curve(circle(Complex(0.0, 0.0), 1.5), n), true);
    if (name == "3b")
        return finish(name, sample_symmetric_curve(circle(Complex(0.4, 0.0), 0.3), n),
                      sample_symmetric_curve(circle(Complex(0.0, 0.0), 1.5), n), true);
    if (name == "3c")
        return finish(name, sample_symmetric_curve(ellipse(Complex(0.0, 0.0), 0.5, 0.2), n),
                      sample_symmetric_curve(circle(Complex(0.0, 0.0), 1.5), n), true);
    if (name == "3d") {
        std::vector<Complex> e = sample_symmetric_curve(circle(Complex(-0.5, 0.0), 0.25), n / 2);
        append(e, sample_symmetric_curve(circle(Complex(0.5, 0.0), 0.25), n - n / 2));
        return finish(name, std::move(e),
                      sample_symmetric_curve(circle(Complex(0.0, 0.0), 1.8), n), true);
    }
    if (name == "7")
        return finish(name, sample_symmetric_curve(rectangle(-1.5, 0.5, 0.5), n),
                      sample_symmetric_curve(rectangle(1.5, 0.5, 0.5), n), true);
    if (name == "spiral1")
        return finish(name, spiral_arm(n, 0.0), spiral_arm(n, kPi), false);
    if (name == "pm2")
        return finish(name, sample_symmetric_curve(notched_disk(-1.0, 0.7, 0.5), n),
                      sample_symmetric_curve(circle(Complex(0.4, 0.0), 0.3), n), true);
    throw UnknownExample("no catalog entry named '" + name + "'");
}

PartitionedData split_left_right(const SignProblemInstance& inst) {
    if (inst.e_points.size() + inst.f_points.size() < 4)
        throw TooFewPoints("split requires at least 4 labeled points");
    PartitionedData out;
    auto distribute = [&](const std::vector<Complex>& pts, double label) {
        // Even indices go right, odd go left; if the previous set left the
        // halves unbalanced (odd count), start on the smaller half instead.
        const size_t flip = out.right_points.size() > out.left_points.size() ? 1 : 0;
        for (size_t i = 0; i < pts.size(); ++i) {
            if ((i + flip) % 2 == 0) {
                out.right_points.push_back(pts[i]);
                out.right_values.emplace_back(label, 0.0);
            } else {
                out.left_points.push_back(pts[i]);
                out.left_values.emplace_back(label, 0.0);
            }
        }
    };
    distribute(inst.e_points, -1.0);
    distribute(inst.f_points, +1.0);
    return out;
}

} // namespace zolo::domains
