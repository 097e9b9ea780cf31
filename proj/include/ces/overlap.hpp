#pragma once

#include <complex>
#include <limits>
#include <optional>

namespace ces {

using Complex = std::complex<double>;

/// Natural log of 2, the maximal entropy of a two-term Schmidt decomposition.
inline constexpr double kLn2 = 0.6931471805599453094172321;

/// Complex value stored as (log magnitude, phase).  log_mag = -inf encodes
/// exact zero, in which case phase is fixed to 0 so equality is well-defined.
/// Phase is kept in (-pi, pi].
struct LogComplex {
    double log_mag = -std::numeric_limits<double>::infinity();
    double phase = 0.0;

    static LogComplex zero();
    static LogComplex from_complex(Complex z);
    static LogComplex from_parts(double log_mag, double phase);

    Complex to_complex() const;
    bool is_zero() const;
};

/// Maps an angle to the canonical branch (-pi, pi].
double normalize_phase(double phase);

/// The normalized overlap c = <u,v>/(|u||v|).  The plain complex form and the
/// log form carry the same value; the log form stays meaningful when |c|
/// underflows double precision.
struct NormalizedOverlap {
    Complex c{0.0, 0.0};
    LogComplex log_c = LogComplex::zero();

    double abs() const { return std::abs(c); }
    /// log|c|, exact even when c underflows.
    double log_abs() const { return log_c.log_mag; }
};

/// Eigenvalues of the reduced density matrix of the Bell-type state,
/// sorted so lambda1 >= lambda2; they sum to 1.
struct SchmidtPair {
    double lambda1 = 1.0;
    double lambda2 = 0.0;
};

/// Everything the library knows about one (p, q, k) query.
struct EntropyReport {
    NormalizedOverlap overlap;
    SchmidtPair schmidt;
    double entropy = 0.0;        // nats
    double bound_general = 0.0;  // nats
    std::optional<double> bound_thm2;
    int k = 1;
    std::optional<double> dist;
    bool decomposable = false;
};

/// Builds the normalized overlap from squared norms and the raw inner
/// product.  Magnitudes in (1, 1 + 1e-9] are clamped to 1; anything larger
/// is rejected as inconsistent input.
NormalizedOverlap overlap_from_raw(double norm_u_sq, double norm_v_sq, Complex inner_uv);

/// Same computation carried out entirely in the log domain, for inputs at
/// scales where exp() would overflow.
NormalizedOverlap overlap_from_logs(double log_norm_u_sq, double log_norm_v_sq,
                                    LogComplex log_inner_uv);

}  // namespace ces
