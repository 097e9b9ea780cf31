#pragma once

#include <vector>

#include "ces/overlap.hpp"

namespace ces {

/// A point of the phase space: n complex coordinates for C^n, one affine-chart
/// coordinate for the projective line.
struct Point {
    std::vector<Complex> coords;

    Point() = default;
    explicit Point(std::vector<Complex> c) : coords(std::move(c)) {}
    Point(std::initializer_list<Complex> c) : coords(c) {}

    std::size_t dim() const { return coords.size(); }
};

enum class Backend { SegalBargmann, ProjectiveLine };

struct BackendConfig {
    Backend kind = Backend::SegalBargmann;
    int n = 1;  // complex dimension; forced to 1 for ProjectiveLine
    int k = 1;  // quantum level, plays the role of 1/hbar
};

void validate_config(const BackendConfig& cfg);
void validate_points(const Point& p, const Point& q, const BackendConfig& cfg);

/// Overlap of Segal-Bargmann coherent states at p and q, level k.
/// Assembled in the log domain; |c| = e^{-k|p-q|^2/2} holds for any k.
NormalizedOverlap sb_overlap(const Point& p, const Point& q, const BackendConfig& cfg);

/// Overlap of the level-k projective-line coherent states in the affine
/// chart: c = (1 + q conj(p))^k / ((1+|p|^2)(1+|q|^2))^{k/2}.  Antipodal
/// points give c = 0.
NormalizedOverlap cp1_overlap(const Point& p, const Point& q, const BackendConfig& cfg);

/// Dispatches on cfg.kind.
NormalizedOverlap overlap(const Point& p, const Point& q, const BackendConfig& cfg);

/// Euclidean distance for C^n; Fubini-Study geodesic distance (diameter
/// pi/2) for the projective line.
double distance(const Point& p, const Point& q, const BackendConfig& cfg);

}  // namespace ces
