#include "ces/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ces {

namespace {

// Below this an eigenvalue's -l ln l contribution is indistinguishable from 0.
constexpr double kEntropyGuard = 1e-18;

double xlnx(double x) { return x < kEntropyGuard ? 0.0 : x * std::log(x); }

}  // namespace

SchmidtPair schmidt_pair(const NormalizedOverlap& c) {
    double m = c.abs();
    if (m > 1.0) throw std::invalid_argument("overlap magnitude exceeds 1");
    if (m >= 1.0) return SchmidtPair{1.0, 0.0};

    double a = c.c.real();
    double b = c.c.imag();
    double delta = std::abs(a) * std::sqrt(std::max(0.0, 1.0 - b * b)) /
                   (1.0 + a * a - b * b);
    delta = std::min(delta, 0.5);
    return SchmidtPair{0.5 + delta, 0.5 - delta};
}

double entropy_exact(const SchmidtPair& s) {
    if (s.lambda1 < s.lambda2 || s.lambda2 < 0.0 || s.lambda1 > 1.0 ||
        std::abs(s.lambda1 + s.lambda2 - 1.0) > 1e-12)
        throw std::invalid_argument("invalid Schmidt pair");
    return std::max(0.0, -xlnx(s.lambda1) - xlnx(s.lambda2));
}

double bound_general(const NormalizedOverlap& c) {
    double m2 = std::norm(c.c);
    if (m2 >= 1.0) return 0.0;
    double re2 = c.c.real() * c.c.real() - c.c.imag() * c.c.imag();
    double num = (1.0 - m2) * (1.0 - m2);
    double den = 1.0 + re2;
    return num / (2.0 * den * den);
}

double bound_thm2(int k, double dist) {
    if (k < 1) throw std::invalid_argument("level k must be >= 1");
    if (dist < 0.0) throw std::invalid_argument("distance must be nonnegative");
    double t = 1.0 - std::exp(-static_cast<double>(k) * dist * dist);
    double t2 = t * t;
    return 0.5 * t2 * t2;
}

double cp1_example_entropy(double x) {
    if (!(x > 0.0)) throw std::invalid_argument("x must be positive");
    double x4 = x * x * x * x;
    return ((1.0 + x4) * std::log1p(x4) - x4 * std::log(x4)) / (1.0 + x4);
}

EntropyReport report(const Point& p, const Point& q, const BackendConfig& cfg) {
    EntropyReport r;
    r.k = cfg.k;
    r.overlap = overlap(p, q, cfg);
    r.schmidt = schmidt_pair(r.overlap);
    r.entropy = entropy_exact(r.schmidt);
    r.bound_general = bound_general(r.overlap);
    r.dist = distance(p, q, cfg);
    if (cfg.kind == Backend::SegalBargmann) r.bound_thm2 = bound_thm2(cfg.k, *r.dist);
    r.decomposable = r.overlap.abs() >= 1.0;
    return r;
}

}  // namespace ces
