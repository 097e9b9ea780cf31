#include "ces/backends.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ces {

void validate_config(const BackendConfig& cfg) {
    if (cfg.k < 1) throw std::invalid_argument("level k must be >= 1");
    if (cfg.n < 1) throw std::invalid_argument("dimension n must be >= 1");
    if (cfg.kind == Backend::ProjectiveLine && cfg.n != 1)
        throw std::invalid_argument("projective-line backend requires n = 1");
}

void validate_points(const Point& p, const Point& q, const BackendConfig& cfg) {
    validate_config(cfg);
    if (p.dim() != static_cast<std::size_t>(cfg.n) || q.dim() != p.dim())
        throw std::invalid_argument("point dimension does not match backend config");
    for (const auto& pt : {p, q})
        for (Complex z : pt.coords)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                throw std::invalid_argument("point coordinates must be finite");
}

NormalizedOverlap sb_overlap(const Point& p, const Point& q, const BackendConfig& cfg) {
    if (cfg.kind != Backend::SegalBargmann)
        throw std::invalid_argument("sb_overlap called with non-SB config");
    validate_points(p, q, cfg);

    // log <Theta_p, Theta_q-normalized> per coordinate:
    //   Re part collapses to -|p_i - q_i|^2 / 2, Im part is Im(q_i conj(p_i)).
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < p.dim(); ++i) {
        re -= 0.5 * std::norm(p.coords[i] - q.coords[i]);
        im += std::imag(q.coords[i] * std::conj(p.coords[i]));
    }
    double k = static_cast<double>(cfg.k);
    return overlap_from_logs(0.0, 0.0, LogComplex::from_parts(k * re, k * im));
}

NormalizedOverlap cp1_overlap(const Point& p, const Point& q, const BackendConfig& cfg) {
    if (cfg.kind != Backend::ProjectiveLine)
        throw std::invalid_argument("cp1_overlap called with non-CP1 config");
    validate_points(p, q, cfg);

    Complex w = 1.0 + q.coords[0] * std::conj(p.coords[0]);
    if (w == Complex{0.0, 0.0}) {
        // Antipodal pair: the coherent states are genuinely orthogonal.
        NormalizedOverlap out;
        out.log_c = LogComplex::zero();
        out.c = Complex{0.0, 0.0};
        return out;
    }
    double k = static_cast<double>(cfg.k);
    double log_mag = k * (std::log(std::abs(w)) -
                          0.5 * (std::log1p(std::norm(p.coords[0])) +
                                 std::log1p(std::norm(q.coords[0]))));
    return overlap_from_logs(0.0, 0.0, LogComplex::from_parts(log_mag, k * std::arg(w)));
}

NormalizedOverlap overlap(const Point& p, const Point& q, const BackendConfig& cfg) {
    return cfg.kind == Backend::SegalBargmann ? sb_overlap(p, q, cfg)
                                              : cp1_overlap(p, q, cfg);
}

double distance(const Point& p, const Point& q, const BackendConfig& cfg) {
    validate_points(p, q, cfg);
    if (cfg.kind == Backend::SegalBargmann) {
        double s = 0.0;
        for (std::size_t i = 0; i < p.dim(); ++i) s += std::norm(p.coords[i] - q.coords[i]);
        return std::sqrt(s);
    }
    Complex w = 1.0 + q.coords[0] * std::conj(p.coords[0]);
    double cosd = std::abs(w) / std::sqrt((1.0 + std::norm(p.coords[0])) *
                                          (1.0 + std::norm(q.coords[0])));
    return std::acos(std::clamp(cosd, 0.0, 1.0));
}

}  // namespace ces
