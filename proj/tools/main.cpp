// ces: entanglement entropy of Bell-type coherent-state pairs.
//
// Subcommands: entropy (single query, JSON), sweep (CSV), figure1 (CSV +
// optional SVG), verify (oracle harness).

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ces/entropy.hpp"
#include "ces/oracle.hpp"

using json = nlohmann::ordered_json;

namespace {

double parse_double(const std::string& s) {
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw CLI::ValidationError("invalid number: '" + s + "'");
    return out;
}

// Point syntax: coordinates joined by ';', each coordinate "re,im".
ces::Point parse_point(const std::string& s) {
    ces::Point p;
    std::stringstream ss(s);
    std::string coord;
    while (std::getline(ss, coord, ';')) {
        auto comma = coord.find(',');
        if (comma == std::string::npos)
            throw CLI::ValidationError("coordinate must be 're,im': '" + coord + "'");
        p.coords.emplace_back(parse_double(coord.substr(0, comma)),
                              parse_double(coord.substr(comma + 1)));
    }
    if (p.coords.empty()) throw CLI::ValidationError("empty point");
    return p;
}

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string point_str(const ces::Point& p) {
    std::string out;
    for (std::size_t i = 0; i < p.dim(); ++i) {
        if (i) out += ';';
        out += fmt17(p.coords[i].real()) + "," + fmt17(p.coords[i].imag());
    }
    return out;
}

struct QueryFlags {
    std::string backend = "sb";
    int n = 1;
    int k = 1;
    std::string p, q;

    ces::BackendConfig config() const {
        ces::BackendConfig cfg;
        cfg.kind = backend == "cp1" ? ces::Backend::ProjectiveLine
                                    : ces::Backend::SegalBargmann;
        cfg.n = backend == "cp1" ? 1 : n;
        cfg.k = k;
        return cfg;
    }
};

void add_query_flags(CLI::App* cmd, QueryFlags& f, bool need_points) {
    cmd->add_option("--backend", f.backend, "phase space: sb or cp1")
        ->check(CLI::IsMember({"sb", "cp1"}));
    cmd->add_option("--n", f.n, "complex dimension (sb only)");
    cmd->add_option("--k", f.k, "quantum level");
    auto* po = cmd->add_option("--p", f.p, "point p, 're,im' coords joined by ';'");
    auto* qo = cmd->add_option("--q", f.q, "point q, same syntax");
    if (need_points) {
        po->required();
        qo->required();
    }
}

int cmd_entropy(const QueryFlags& f) {
    auto cfg = f.config();
    auto p = parse_point(f.p);
    auto q = parse_point(f.q);
    auto r = ces::report(p, q, cfg);

    json out;
    out["backend"] = f.backend;
    out["n"] = cfg.n;
    out["k"] = cfg.k;
    out["p"] = point_str(p);
    out["q"] = point_str(q);
    out["c_re"] = r.overlap.c.real();
    out["c_im"] = r.overlap.c.imag();
    out["abs_c"] = r.overlap.abs();
    out["lambda1"] = r.schmidt.lambda1;
    out["lambda2"] = r.schmidt.lambda2;
    out["entropy"] = r.entropy;
    out["bound_general"] = r.bound_general;
    out["bound_thm2"] = r.bound_thm2 ? json(*r.bound_thm2) : json(nullptr);
    out["dist"] = r.dist ? json(*r.dist) : json(nullptr);
    out["decomposable"] = r.decomposable;
    std::cout << out.dump() << "\n";
    return 0;
}

void print_sweep_row(int k, double x, const ces::EntropyReport& r) {
    std::cout << k << ',' << fmt17(x) << ',' << fmt17(r.overlap.abs()) << ','
              << fmt17(r.schmidt.lambda1) << ',' << fmt17(r.schmidt.lambda2) << ','
              << fmt17(r.entropy) << ',' << fmt17(r.bound_general) << ','
              << (r.bound_thm2 ? fmt17(*r.bound_thm2) : std::string{}) << ','
              << fmt17(r.dist.value_or(0.0)) << ',' << fmt17(ces::kLn2 - r.entropy)
              << "\n";
}

int cmd_sweep(const QueryFlags& f, const std::string& variable, double vmin, double vmax,
              int steps) {
    if (!(vmin < vmax) || steps < 2) throw CLI::ValidationError("need min < max and steps >= 2");
    std::cout << "k,x,abs_c,lambda1,lambda2,entropy,bound_general,bound_thm2,dist,deficit\n";
    auto cfg = f.config();

    if (variable == "k") {
        auto p = parse_point(f.p);
        auto q = parse_point(f.q);
        for (int i = 0; i < steps; ++i) {
            cfg.k = static_cast<int>(
                std::lround(vmin + i * (vmax - vmin) / (steps - 1)));
            auto r = ces::report(p, q, cfg);
            print_sweep_row(cfg.k, r.dist.value_or(0.0), r);
        }
        return 0;
    }
    // separation sweep: p = (x, 0, ...), q = (-x, 0, ...)
    for (int i = 0; i < steps; ++i) {
        double x = vmin + i * (vmax - vmin) / (steps - 1);
        ces::Point p, q;
        p.coords.assign(cfg.n, {0.0, 0.0});
        q.coords.assign(cfg.n, {0.0, 0.0});
        p.coords[0] = {x, 0.0};
        q.coords[0] = {-x, 0.0};
        auto r = ces::report(p, q, cfg);
        print_sweep_row(cfg.k, x, r);
    }
    return 0;
}

int write_svg(const std::string& path, const std::vector<double>& xs,
              const std::vector<double>& ys) {
    const double W = 640, H = 420, ml = 60, mr = 20, mt = 20, mb = 45;
    double xmin = xs.front(), xmax = xs.back();
    double ymin = 0.0, ymax = ces::kLn2 * 1.05;
    auto sx = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (W - ml - mr); };
    auto sy = [&](double y) { return H - mb - (y - ymin) / (ymax - ymin) * (H - mt - mb); };

    std::ofstream out(path);
    if (!out) return 4;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\""
        << H << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << H - mb << "\" x2=\"" << W - mr
        << "\" y2=\"" << H - mb << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
        << H - mb << "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 5; ++i) {
        double x = xmin + i * (xmax - xmin) / 5;
        out << "<line x1=\"" << sx(x) << "\" y1=\"" << H - mb << "\" x2=\"" << sx(x)
            << "\" y2=\"" << H - mb + 5 << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << sx(x) << "\" y=\"" << H - mb + 20
            << "\" font-size=\"12\" text-anchor=\"middle\">";
        char buf[16];
        std::snprintf(buf, sizeof buf, "%.2g", x);
        out << buf << "</text>\n";
        double y = ymin + i * (ymax - ymin) / 5;
        out << "<line x1=\"" << ml - 5 << "\" y1=\"" << sy(y) << "\" x2=\"" << ml
            << "\" y2=\"" << sy(y) << "\" stroke=\"black\"/>\n";
        std::snprintf(buf, sizeof buf, "%.2f", y);
        out << "<text x=\"" << ml - 8 << "\" y=\"" << sy(y) + 4
            << "\" font-size=\"12\" text-anchor=\"end\">" << buf << "</text>\n";
    }
    out << "<text x=\"" << (ml + W - mr) / 2 << "\" y=\"" << H - 8
        << "\" font-size=\"13\" text-anchor=\"middle\">x</text>\n";
    out << "<text x=\"14\" y=\"" << (mt + H - mb) / 2
        << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
        << (mt + H - mb) / 2 << ")\">entropy (nats)</text>\n";
    out << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < xs.size(); ++i)
        out << sx(xs[i]) << "," << sy(ys[i]) << (i + 1 < xs.size() ? " " : "");
    out << "\"/>\n</svg>\n";
    return out.good() ? 0 : 4;
}

int cmd_figure1(double xmin, double xmax, int steps, const std::string& svg_path) {
    if (!(xmin < xmax) || steps < 2) throw CLI::ValidationError("need min < max and steps >= 2");
    ces::BackendConfig cfg{ces::Backend::ProjectiveLine, 1, 1};
    std::vector<double> xs, ys;
    std::cout << "x,entropy_closed_form,entropy_pipeline\n";
    for (int i = 1; i <= steps; ++i) {
        double x = xmin + i * (xmax - xmin) / steps;  // open at xmin
        double closed = ces::cp1_example_entropy(x);
        auto r = ces::report(ces::Point{{x, 0.0}}, ces::Point{{-x, 0.0}}, cfg);
        std::cout << fmt17(x) << ',' << fmt17(closed) << ',' << fmt17(r.entropy) << "\n";
        xs.push_back(x);
        ys.push_back(r.entropy);
    }
    if (!svg_path.empty()) {
        int rc = write_svg(svg_path, xs, ys);
        if (rc != 0) {
            std::cerr << "error: cannot write SVG to '" << svg_path << "'\n";
            return rc;
        }
    }
    return 0;
}

struct VerifyStats {
    int passed = 0;
    int failed = 0;
    void check(bool ok, const std::string& what) {
        if (ok) {
            ++passed;
        } else {
            ++failed;
            std::cerr << "FAIL: " << what << "\n";
        }
    }
};

int cmd_verify(std::uint64_t seed, int cases) {
    VerifyStats st;

    // (a) Theorem-3 harness on random pairs.
    for (int i = 0; i < cases; ++i) {
        int dim = 2 + static_cast<int>(i % 15);
        auto [u, v] = ces::random_vector_pair(dim, seed + static_cast<std::uint64_t>(i));
        ces::Complex inner{0.0, 0.0};
        double nu = 0.0, nv = 0.0;
        for (int j = 0; j < dim; ++j) {
            inner += u.entries[j] * std::conj(v.entries[j]);
            nu += std::norm(u.entries[j]);
            nv += std::norm(v.entries[j]);
        }
        auto c = ces::overlap_from_raw(nu, nv, inner);
        double bound = ces::bound_general(c);
        auto spectrum = ces::hermitian_spectrum(
            ces::reduced_density(ces::bell_matrix(u, v)));
        double oracle = ces::oracle_entropy(spectrum);
        std::ostringstream id;
        id << "random pair seed=" << seed + i << " dim=" << dim;
        st.check(oracle >= bound - 1e-12, id.str() + " entropy >= bound");
        auto sp = ces::schmidt_pair(c);
        st.check(std::abs(spectrum[0] - sp.lambda1) < 1e-9 &&
                     std::abs(spectrum[1] - sp.lambda2) < 1e-9,
                 id.str() + " Schmidt pair matches oracle spectrum");
    }

    // (b) coherent pairs: closed forms against the partial-trace oracle.
    ces::TruncationSpec trunc;
    const struct {
        int k;
        double pr, pi, qr, qi;
    } sb_cases[] = {{1, 0, 0, 1, 0},    {1, 1, 0, 0, 1},   {2, 0.5, 0.25, -0.5, 0.5},
                    {4, 1, 1, -1, 0.5}, {8, 0.3, 0, 0, 0.7}};
    for (auto tc : sb_cases) {
        ces::BackendConfig cfg{ces::Backend::SegalBargmann, 1, tc.k};
        ces::Point p{{tc.pr, tc.pi}}, q{{tc.qr, tc.qi}};
        auto [u, v] = ces::sb_pair_coefficients(p, q, cfg, trunc);
        double oracle = ces::oracle_entropy(
            ces::hermitian_spectrum(ces::reduced_density(ces::bell_matrix(u, v))));
        double exact = ces::report(p, q, cfg).entropy;
        std::ostringstream id;
        id << "sb coherent pair k=" << tc.k;
        st.check(std::abs(oracle - exact) < 1e-8, id.str());
    }
    for (int k : {1, 2, 5, 16, 32}) {
        ces::BackendConfig cfg{ces::Backend::ProjectiveLine, 1, k};
        ces::Point p{{0.4, 0.1}}, q{{-0.6, 0.3}};
        auto u = ces::cp1_coefficients(p, cfg);
        auto v = ces::cp1_coefficients(q, cfg);
        double oracle = ces::oracle_entropy(
            ces::hermitian_spectrum(ces::reduced_density(ces::bell_matrix(u, v))));
        double exact = ces::report(p, q, cfg).entropy;
        std::ostringstream id;
        id << "cp1 coherent pair k=" << k;
        st.check(std::abs(oracle - exact) < 1e-8, id.str());
    }

    // (c) level-k projective-line inner product via quadrature.
    for (int k = 1; k <= 8; ++k) {
        std::ostringstream id;
        id << "cp1 quadrature Gram k=" << k;
        st.check(ces::cp1_quadrature_check(k) < 1e-6, id.str());
    }

    std::cout << "verify: " << st.passed << " passed, " << st.failed << " failed\n";
    return st.failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entanglement entropy of Bell-type coherent-state pairs"};
    app.require_subcommand(1);

    QueryFlags ef, sf;
    auto* entropy = app.add_subcommand("entropy", "single-query JSON report");
    add_query_flags(entropy, ef, true);

    auto* sweep = app.add_subcommand("sweep", "parameter sweep, CSV on stdout");
    add_query_flags(sweep, sf, false);
    std::string variable = "k";
    double smin = 1, smax = 50;
    int ssteps = 50;
    sweep->add_option("--variable", variable, "sweep variable: k or x")
        ->check(CLI::IsMember({"k", "x"}));
    sweep->add_option("--min", smin, "range minimum");
    sweep->add_option("--max", smax, "range maximum");
    sweep->add_option("--steps", ssteps, "number of grid points");

    auto* fig = app.add_subcommand("figure1", "entropy-vs-separation curve, CSV + optional SVG");
    double fmin = 0.0, fmax = 5.0;
    int fsteps = 500;
    std::string svg_path;
    fig->add_option("--min", fmin, "x range minimum (excluded)");
    fig->add_option("--max", fmax, "x range maximum");
    fig->add_option("--steps", fsteps, "number of grid points");
    fig->add_option("--svg", svg_path, "write an SVG plot to this path");

    auto* verify = app.add_subcommand("verify", "run the oracle verification suites");
    std::uint64_t seed = 42;
    int cases = 1000;
    verify->add_option("--seed", seed, "base seed for the randomized suite");
    verify->add_option("--cases", cases, "number of random pairs")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*entropy) return cmd_entropy(ef);
        if (*sweep) {
            if (variable == "k" && (sf.p.empty() || sf.q.empty()))
                throw CLI::ValidationError("level sweeps require --p and --q");
            return cmd_sweep(sf, variable, smin, smax, ssteps);
        }
        if (*fig) return cmd_figure1(fmin, fmax, fsteps, svg_path);
        if (*verify) return cmd_verify(seed, cases);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
