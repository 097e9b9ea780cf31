#include "ces/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace ces {

namespace {

constexpr double kOracleRegimeCap = 30.0;  // max k|p|^2 for the truncated path

// Smallest degree M with relative Poisson tail sum_{j>M} e^-t t^j/j! < tol.
int truncation_degree(double t, double tol, int cap) {
    double term = std::exp(-t);
    double cum = term;
    int m = 0;
    while (1.0 - cum >= tol) {
        if (++m > cap)
            throw std::runtime_error(
                "k|p|^2 too large to reach the tail tolerance within the degree cap");
        term *= t / m;
        cum += term;
    }
    return m;
}

// 1D coefficient ladder c_m = sqrt(k^m/m!) conj(p)^m, m = 0..deg.
std::vector<Complex> sb_ladder(Complex p, double k, int deg) {
    std::vector<Complex> c(deg + 1);
    c[0] = 1.0;
    for (int m = 1; m <= deg; ++m) c[m] = c[m - 1] * std::conj(p) * std::sqrt(k / m);
    return c;
}

CoefficientVector sb_with_degrees(const Point& p, const BackendConfig& cfg,
                                  const std::vector<int>& degs, double tail) {
    double k = static_cast<double>(cfg.k);
    std::vector<Complex> out{Complex{1.0, 0.0}};
    for (std::size_t i = 0; i < p.dim(); ++i) {
        auto ladder = sb_ladder(p.coords[i], k, degs[i]);
        std::vector<Complex> next(out.size() * ladder.size());
        for (std::size_t a = 0; a < out.size(); ++a)
            for (std::size_t b = 0; b < ladder.size(); ++b)
                next[a * ladder.size() + b] = out[a] * ladder[b];
        out = std::move(next);
    }
    return CoefficientVector{std::move(out), tail};
}

std::vector<int> sb_degrees(const Point& p, const BackendConfig& cfg,
                            const TruncationSpec& spec) {
    double k = static_cast<double>(cfg.k);
    double total = 0.0;
    for (Complex z : p.coords) total += std::norm(z);
    if (k * total > kOracleRegimeCap)
        throw std::runtime_error("k|p|^2 exceeds the oracle regime cap");
    double per_coord_tol = spec.tail_tol / p.dim();
    std::vector<int> degs;
    degs.reserve(p.dim());
    for (Complex z : p.coords)
        degs.push_back(truncation_degree(k * std::norm(z), per_coord_tol, spec.max_degree));
    return degs;
}

double norm_sq(const CoefficientVector& v) {
    double s = 0.0;
    for (Complex z : v.entries) s += std::norm(z);
    return s;
}

}  // namespace

void CoefficientVector::pad_to(std::size_t d) {
    if (d > entries.size()) entries.resize(d, Complex{0.0, 0.0});
}

CoefficientVector sb_coefficients(const Point& p, const BackendConfig& cfg,
                                  const TruncationSpec& spec) {
    if (cfg.kind != Backend::SegalBargmann)
        throw std::invalid_argument("sb_coefficients requires the Segal-Bargmann backend");
    validate_points(p, p, cfg);
    if (!(spec.tail_tol > 0.0 && spec.tail_tol < 1.0))
        throw std::invalid_argument("tail tolerance must be in (0, 1)");
    return sb_with_degrees(p, cfg, sb_degrees(p, cfg, spec), spec.tail_tol);
}

std::pair<CoefficientVector, CoefficientVector> sb_pair_coefficients(
    const Point& p, const Point& q, const BackendConfig& cfg, const TruncationSpec& spec) {
    auto dp = sb_degrees(p, cfg, spec);
    auto dq = sb_degrees(q, cfg, spec);
    for (std::size_t i = 0; i < dp.size(); ++i) dp[i] = std::max(dp[i], dq[i]);
    return {sb_with_degrees(p, cfg, dp, spec.tail_tol),
            sb_with_degrees(q, cfg, dp, spec.tail_tol)};
}

double binomial(int n, int r) {
    if (r < 0 || r > n) return 0.0;
    r = std::min(r, n - r);
    double out = 1.0;
    for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
    return out;
}

CoefficientVector cp1_coefficients(const Point& p, const BackendConfig& cfg) {
    if (cfg.kind != Backend::ProjectiveLine)
        throw std::invalid_argument("cp1_coefficients requires the projective-line backend");
    validate_points(p, p, cfg);
    std::vector<Complex> out(cfg.k + 1);
    Complex pow{1.0, 0.0};
    for (int j = 0; j <= cfg.k; ++j) {
        out[j] = std::sqrt(binomial(cfg.k, j)) * pow;
        pow *= std::conj(p.coords[0]);
    }
    return CoefficientVector{std::move(out), 0.0};
}

CoefficientMatrix bell_matrix(const CoefficientVector& u, const CoefficientVector& v) {
    if (u.dim() != v.dim()) throw std::invalid_argument("coefficient vectors differ in dimension");
    double nu = norm_sq(u), nv = norm_sq(v);
    if (nu == 0.0 || nv == 0.0) throw std::invalid_argument("zero coefficient vector");

    std::size_t d = u.dim();
    CoefficientMatrix w;
    w.d = d;
    w.entries.assign(d * d, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            w.at(i, j) = u.entries[i] * u.entries[j] / nu + v.entries[i] * v.entries[j] / nv;

    double fro = 0.0;
    for (Complex z : w.entries) fro += std::norm(z);
    fro = std::sqrt(fro);
    for (Complex& z : w.entries) z /= fro;
    return w;
}

DenseMatrix reduced_density(const CoefficientMatrix& w) {
    std::size_t d = w.d;
    DenseMatrix rho;
    rho.d = d;
    rho.entries.assign(d * d, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            Complex s{0.0, 0.0};
            for (std::size_t m = 0; m < d; ++m) s += w.at(i, m) * std::conj(w.at(j, m));
            rho.at(i, j) = s;
            rho.at(j, i) = std::conj(s);
        }
    return rho;
}

std::vector<double> hermitian_spectrum(const DenseMatrix& m) {
    std::size_t d = m.d;
    if (d == 0 || m.entries.size() != d * d)
        throw std::invalid_argument("malformed matrix");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (std::abs(m.at(i, j) - std::conj(m.at(j, i))) > 1e-10)
                throw std::invalid_argument("matrix is not Hermitian within tolerance");

    std::vector<Complex> a = m.entries;
    auto at = [&](std::size_t i, std::size_t j) -> Complex& { return a[i * d + j]; };

    double fro = 0.0;
    for (Complex z : a) fro += std::norm(z);
    fro = std::sqrt(fro);
    const double target = 1e-13 * (1.0 + fro);

    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j) off += 2.0 * std::norm(at(i, j));
        if (std::sqrt(off) < target) {
            std::vector<double> eig(d);
            for (std::size_t i = 0; i < d; ++i) eig[i] = at(i, i).real();
            std::sort(eig.rbegin(), eig.rend());
            return eig;
        }
        for (std::size_t p = 0; p < d; ++p)
            for (std::size_t q = p + 1; q < d; ++q) {
                Complex apq = at(p, q);
                double alpha = std::abs(apq);
                if (alpha < 1e-300) continue;
                // Phase-rotate the pivot to a real symmetric 2x2, then the
                // classical Givens angle zeroes it.
                Complex phase = apq / alpha;
                double theta = 0.5 * (at(q, q).real() - at(p, p).real()) / alpha;
                double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;
                // U restricted to (p,q): [[c, s*phase], [-s*conj(phase), c]]
                Complex u01 = s * phase;
                Complex u10 = -s * std::conj(phase);
                for (std::size_t i = 0; i < d; ++i) {  // A <- A U
                    Complex aip = at(i, p), aiq = at(i, q);
                    at(i, p) = aip * c + aiq * u10;
                    at(i, q) = aip * u01 + aiq * c;
                }
                for (std::size_t j = 0; j < d; ++j) {  // A <- U^dagger A
                    Complex apj = at(p, j), aqj = at(q, j);
                    at(p, j) = c * apj + std::conj(u10) * aqj;
                    at(q, j) = std::conj(u01) * apj + c * aqj;
                }
            }
    }
    throw std::runtime_error("Jacobi diagonalization failed to converge");
}

double oracle_entropy(std::vector<double> spectrum) {
    double sum = 0.0;
    for (double& l : spectrum) {
        if (l < -1e-10 || l > 1.0 + 1e-9)
            throw std::invalid_argument("spectrum entry outside [0, 1]");
        if (l < 0.0) l = 0.0;
        sum += l;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("spectrum does not sum to 1");
    double e = 0.0;
    for (double l : spectrum)
        if (l > 1e-18) e -= l * std::log(l);
    return std::max(0.0, e);
}

namespace {

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
}

// One quadrature level of the (k+1)-dimensional Gram matrix of monomials
// under the weight ((k+1)/pi) (1+|z|^2)^-(k+2).
std::vector<Complex> cp1_gram(int k, int n_rad, int n_ang) {
    std::vector<double> gx, gw;
    gauss_legendre(n_rad, gx, gw);

    int d = k + 1;
    // Angular trapezoid sums int e^(i m theta) dtheta for m = -(d-1)..(d-1).
    std::vector<Complex> ang(2 * d - 1, Complex{0.0, 0.0});
    for (int m = -(d - 1); m <= d - 1; ++m) {
        Complex s{0.0, 0.0};
        for (int a = 0; a < n_ang; ++a) {
            double th = 2.0 * M_PI * a / n_ang;
            s += Complex{std::cos(m * th), std::sin(m * th)};
        }
        ang[m + d - 1] = s * (2.0 * M_PI / n_ang);
    }

    // Radial integrals after r^2 = t/(1-t):
    //   r^(i+j) (1+r^2)^-(k+2) r dr = (1/2) t^((i+j)/2) (1-t)^(k-(i+j)/2) dt.
    std::vector<double> radial(2 * d - 1, 0.0);
    for (int g = 0; g < n_rad; ++g) {
        double t = 0.5 * (gx[g] + 1.0);
        double wt = 0.5 * gw[g];
        for (int s = 0; s <= 2 * (d - 1); ++s)
            radial[s] += 0.5 * std::pow(t, 0.5 * s) * std::pow(1.0 - t, k - 0.5 * s) * wt;
    }

    std::vector<Complex> gram(d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            gram[i * d + j] = (k + 1.0) / M_PI * radial[i + j] * ang[(i - j) + d - 1];
    return gram;
}

}  // namespace

double cp1_quadrature_check(int k) {
    if (k < 1 || k > 8) throw std::invalid_argument("quadrature check supports 1 <= k <= 8");

    int n_rad = 16;
    int n_ang = std::max(32, 4 * (k + 1));
    std::vector<Complex> prev = cp1_gram(k, n_rad, n_ang);
    for (int level = 0; level < 5; ++level) {
        std::vector<Complex> cur = cp1_gram(k, n_rad * 2, n_ang * 2);
        double diff = 0.0;
        for (std::size_t i = 0; i < cur.size(); ++i)
            diff = std::max(diff, std::abs(cur[i] - prev[i]));
        if (diff < 1e-9) {
            double dev = 0.0;
            int d = k + 1;
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    Complex expected = (i == j) ? Complex{1.0 / binomial(k, i), 0.0}
                                                : Complex{0.0, 0.0};
                    dev = std::max(dev, std::abs(cur[i * d + j] - expected));
                }
            return dev;
        }
        prev = std::move(cur);
        n_rad *= 2;
        n_ang *= 2;
    }
    throw std::runtime_error("quadrature failed to converge");
}

std::pair<CoefficientVector, CoefficientVector> random_vector_pair(int dim,
                                                                   std::uint64_t seed) {
    if (dim < 2) throw std::invalid_argument("dimension must be >= 2");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto draw = [&] {
        std::vector<Complex> v(dim);
        for (Complex& z : v) z = Complex{gauss(rng), gauss(rng)};
        return v;
    };
    for (int attempt = 0; attempt < 32; ++attempt) {
        auto u = draw();
        auto v = draw();
        Complex inner{0.0, 0.0};
        double nu = 0.0, nv = 0.0;
        for (int i = 0; i < dim; ++i) {
            inner += u[i] * std::conj(v[i]);
            nu += std::norm(u[i]);
            nv += std::norm(v[i]);
        }
        if (nu == 0.0 || nv == 0.0) continue;
        if (std::abs(inner) < (1.0 - 1e-12) * std::sqrt(nu * nv))
            return {CoefficientVector{std::move(u), 0.0},
                    CoefficientVector{std::move(v), 0.0}};
    }
    throw std::runtime_error("failed to draw a linearly independent pair");
}

}  // namespace ces
