#pragma once

#include "ces/backends.hpp"
#include "ces/overlap.hpp"

namespace ces {

/// Eigenvalues of the reduced density matrix of the Bell-type state built
/// from two vectors with normalized overlap c.  With a = Re c, b = Im c:
///   lambda = 1/2 +- a sqrt(1 - b^2) / (1 + a^2 - b^2).
/// For |c| = 1 the state is a product state and the pair is (1, 0).
SchmidtPair schmidt_pair(const NormalizedOverlap& c);

/// Von Neumann entropy -l1 ln l1 - l2 ln l2 in nats, with 0 ln 0 = 0.
double entropy_exact(const SchmidtPair& s);

/// General lower bound (1 - |c|^2)^2 / (2 (1 + Re c^2)^2); zero at |c| = 1.
double bound_general(const NormalizedOverlap& c);

/// Gaussian-decay lower bound (1/2)(1 - e^{-k dist^2})^4 for the C^n backend.
double bound_thm2(int k, double dist);

/// Closed-form entropy of the projective-line pair p = x, q = -x at level 1:
///   [(1 + x^4) ln(1 + x^4) - x^4 ln(x^4)] / (1 + x^4).
double cp1_example_entropy(double x);

/// Full pipeline for one (p, q, k) query on either backend.
EntropyReport report(const Point& p, const Point& q, const BackendConfig& cfg);

}  // namespace ces
