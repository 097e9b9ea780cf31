#include "ces/overlap.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ces {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = 3.14159265358979323846264338327950288;

// Cauchy-Schwarz slack: |c| in (1, 1 + kClampTol] is rounding noise.
constexpr double kClampTol = 1e-9;

}  // namespace

double normalize_phase(double phase) {
    if (!std::isfinite(phase)) throw std::invalid_argument("phase must be finite");
    double w = std::remainder(phase, 2.0 * kPi);  // result in [-pi, pi]
    if (w <= -kPi) w = kPi;
    return w;
}

LogComplex LogComplex::zero() { return LogComplex{-kInf, 0.0}; }

LogComplex LogComplex::from_complex(Complex z) {
    double m = std::abs(z);
    if (m == 0.0) return zero();
    return LogComplex{std::log(m), normalize_phase(std::arg(z))};
}

LogComplex LogComplex::from_parts(double log_mag, double phase) {
    if (log_mag == -kInf) return zero();
    if (std::isnan(log_mag) || log_mag == kInf)
        throw std::invalid_argument("log magnitude must be finite or -inf");
    return LogComplex{log_mag, normalize_phase(phase)};
}

Complex LogComplex::to_complex() const {
    if (is_zero()) return Complex{0.0, 0.0};
    double m = std::exp(log_mag);
    return Complex{m * std::cos(phase), m * std::sin(phase)};
}

bool LogComplex::is_zero() const { return log_mag == -kInf; }

namespace {

NormalizedOverlap from_log_form(LogComplex log_c) {
    if (log_c.log_mag > kClampTol)
        throw std::invalid_argument("overlap magnitude exceeds 1 beyond tolerance (Cauchy-Schwarz)");
    if (log_c.log_mag > 0.0) log_c.log_mag = 0.0;
    NormalizedOverlap out;
    out.log_c = log_c;
    out.c = log_c.to_complex();
    return out;
}

}  // namespace

NormalizedOverlap overlap_from_raw(double norm_u_sq, double norm_v_sq, Complex inner_uv) {
    if (!(norm_u_sq > 0.0) || !std::isfinite(norm_u_sq) ||
        !(norm_v_sq > 0.0) || !std::isfinite(norm_v_sq))
        throw std::invalid_argument("squared norms must be positive and finite");
    if (!std::isfinite(inner_uv.real()) || !std::isfinite(inner_uv.imag()))
        throw std::invalid_argument("inner product must be finite");

    Complex c = inner_uv / std::sqrt(norm_u_sq * norm_v_sq);
    double m = std::abs(c);
    if (m > 1.0 + kClampTol)
        throw std::invalid_argument("overlap magnitude exceeds 1 beyond tolerance (Cauchy-Schwarz)");
    if (m > 1.0) c /= m;

    NormalizedOverlap out;
    out.c = c;
    out.log_c = LogComplex::from_complex(c);
    return out;
}

NormalizedOverlap overlap_from_logs(double log_norm_u_sq, double log_norm_v_sq,
                                    LogComplex log_inner_uv) {
    if (!std::isfinite(log_norm_u_sq) || !std::isfinite(log_norm_v_sq))
        throw std::invalid_argument("log squared norms must be finite");
    if (log_inner_uv.is_zero()) return from_log_form(LogComplex::zero());

    double log_mag = log_inner_uv.log_mag - 0.5 * (log_norm_u_sq + log_norm_v_sq);
    return from_log_form(LogComplex::from_parts(log_mag, log_inner_uv.phase));
}

}  // namespace ces
