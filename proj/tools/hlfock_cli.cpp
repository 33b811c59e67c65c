// Copyright 2026 the hlfock authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: evaluates the polynomial families, emits Fock
// matrices and photon distributions as JSON/CSV, and cross-validates the
// independent computation routes against each other.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
// 3 I/O error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cerrno>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "hlfock/hlfock.hpp"

using hlfock::Complex;
using hlfock::ComplexMatrix;
using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

bool parse_double_strict(const std::string& s, double& out) {
    if (s.empty()) return false;
    errno = 0;
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size() && errno == 0;
}

/// Strict complex literal: "a", "bi", "a+bi", "a-bi". No spaces, digits
/// required in every part.
std::optional<Complex> parse_complex(const std::string& s) {
    if (s.empty() || s.find_first_of(" \t") != std::string::npos) return std::nullopt;
    if (s.back() == 'i' || s.back() == 'I') {
        const std::string body = s.substr(0, s.size() - 1);
        std::size_t split = std::string::npos;
        for (std::size_t k = body.size(); k-- > 1;) {
            if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' &&
                body[k - 1] != 'E') {
                split = k;
                break;
            }
        }
        double re = 0.0, im = 0.0;
        if (split == std::string::npos) {
            if (!parse_double_strict(body, im)) return std::nullopt;
            return Complex{0.0, im};
        }
        if (!parse_double_strict(body.substr(0, split), re)) return std::nullopt;
        if (!parse_double_strict(body.substr(split), im)) return std::nullopt;
        return Complex{re, im};
    }
    double re = 0.0;
    if (!parse_double_strict(s, re)) return std::nullopt;
    return Complex{re, 0.0};
}

Complex require_complex(const std::string& text, const char* flag) {
    const auto v = parse_complex(text);
    if (!v) {
        throw CLI::ValidationError(std::string(flag) +
                                   ": expected complex literal a, bi, a+bi or a-bi, got '" +
                                   text + "'");
    }
    return *v;
}

/// 17 significant digits: exact round-trip for binary64, so CSV and JSON
/// emissions of the same run parse back value-identical.
std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void print_value(Complex v) {
    std::printf("%.15g%+.15gi\n", v.real(), v.imag());
}

json complex_json(Complex v) { return json::array({v.real(), v.imag()}); }

json matrix_entries_json(const ComplexMatrix& m) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) entries.push_back(complex_json(m(i, j)));
    return entries;
}

int write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream out(path);
    if (!out) {
        std::cerr << "error: cannot open '" << path << "' for writing\n";
        return kExitIo;
    }
    out << text;
    out.flush();
    if (!out) {
        std::cerr << "error: write to '" << path << "' failed\n";
        return kExitIo;
    }
    return kExitOk;
}

std::string matrix_csv(const ComplexMatrix& m, const std::vector<std::string>& footer) {
    std::ostringstream out;
    out << "m";
    for (std::size_t n = 0; n < m.cols(); ++n) out << ",re" << n << ",im" << n;
    out << "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << i;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out << "," << fmt17(m(i, j).real()) << "," << fmt17(m(i, j).imag());
        }
        out << "\n";
    }
    for (const auto& line : footer) out << "# " << line << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// poly

struct PolyOptions {
    std::string family;
    std::size_t n = 0, m = 0, terms = 0, grid = 100;  // terms 0 = automatic
    long k = 0;
    int eps = 0;
    std::string x = "0", y = "0", z = "0", u = "0", v = "0", t = "0", tau = "0";
    bool check = false;
};

int run_poly(const PolyOptions& o) {
    const Complex x = require_complex(o.x, "-x");
    const Complex y = require_complex(o.y, "-y");
    const Complex z = require_complex(o.z, "-z");
    const Complex u = require_complex(o.u, "-u");
    const Complex v = require_complex(o.v, "--v");
    const Complex t = require_complex(o.t, "--t");
    const Complex tau = require_complex(o.tau, "--tau");

    const std::size_t terms = (o.terms == 0) ? hlfock::kSeriesCap : o.terms;
    if (o.family == "hkdf") {
        print_value(hlfock::hkdf(o.n, x, y));
    } else if (o.family == "hkdf2") {
        print_value(hlfock::hkdf2(o.m, o.n, x, y, z, u, tau));
    } else if (o.family == "incomplete") {
        print_value(hlfock::incomplete_hermite(o.eps, o.m, o.n, x, y, tau));
    } else if (o.family == "laguerre") {
        print_value(hlfock::laguerre_generalized(o.n, o.k, x));
    } else if (o.family == "genfunc") {
        const auto r = hlfock::gen_func_truncated(x, y, t, terms);
        print_value(r.value);
        std::printf("# last_term = %.3e, terms = %zu\n", r.last_term, r.terms);
    } else if (o.family == "mixed") {
        print_value(hlfock::mixed_deriv_quadexp(o.m, o.n, x, y, z, u, v));
    } else if (o.family == "mehler") {
        if (!o.check) {
            print_value(hlfock::mehler_closed(x, y, z, v, t));
            return kExitOk;
        }
        // closed form vs truncated series over a seeded random grid
        std::mt19937_64 gen(20260809);
        std::uniform_real_distribution<double> unif(-1.0, 1.0);
        double worst = 0.0;
        std::size_t points = 0;
        while (points < o.grid) {
            const Complex xx{unif(gen), unif(gen)}, yy{unif(gen), unif(gen)};
            const Complex zz{unif(gen), unif(gen)}, vv{unif(gen), unif(gen)};
            const Complex tt{0.7 * unif(gen), 0.7 * unif(gen)};
            if (std::abs(4.0 * yy * tt * tt * vv) > 0.8) continue;
            ++points;
            const auto series = hlfock::mehler_series(xx, yy, zz, vv, tt, terms);
            const Complex closed = hlfock::mehler_closed(xx, yy, zz, vv, tt);
            const double dev = std::abs(series.value - closed) /
                               std::max(1e-300, std::abs(closed));
            worst = std::max(worst, dev);
        }
        json report{{"points", points}, {"max_rel_deviation", worst},
                    {"tolerance", 1e-11}, {"pass", worst <= 1e-11}};
        std::cout << report.dump(2) << "\n";
        return worst <= 1e-11 ? kExitOk : kExitVerifyFailure;
    } else {
        throw CLI::ValidationError("--family: unknown family '" + o.family + "'");
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// unitary / state / photons

struct EmitOptions {
    std::string alpha = "0";
    double phi = 0.0, r = 0.0, theta = 0.0, nbar = 0.0;
    std::size_t dim = 20, m_max = 50;
    std::string format = "json";
    std::string output;
};

int run_unitary(const EmitOptions& o) {
    const hlfock::BosonicParams p(require_complex(o.alpha, "--alpha"), o.phi, o.r, o.theta);
    const ComplexMatrix m = hlfock::unitary_matrix(p, o.dim);
    if (o.format == "csv") {
        return write_text(o.output, matrix_csv(m, {}));
    }
    json doc{{"params",
              {{"alpha", complex_json(p.alpha)}, {"phi", p.phi}, {"r", p.r},
               {"theta", p.theta}}},
             {"dim", o.dim},
             {"entries", matrix_entries_json(m)}};
    return write_text(o.output, doc.dump(2) + "\n");
}

int run_state(const EmitOptions& o) {
    const hlfock::StateParams p{require_complex(o.alpha, "--alpha"), o.r, o.theta, o.nbar};
    const ComplexMatrix m = hlfock::rho_matrix(p, o.dim);
    const double trace = m.trace().real();
    const double min_eig = hlfock::min_hermitian_eigenvalue(m);
    if (o.format == "csv") {
        return write_text(o.output,
                          matrix_csv(m, {"trace = " + fmt17(trace),
                                         "min_eigenvalue = " + fmt17(min_eig)}));
    }
    json doc{{"params",
              {{"alpha", complex_json(p.alpha)}, {"r", p.r}, {"theta", p.theta},
               {"nbar", p.nbar}}},
             {"dim", o.dim},
             {"entries", matrix_entries_json(m)},
             {"trace", trace},
             {"min_eigenvalue", min_eig}};
    return write_text(o.output, doc.dump(2) + "\n");
}

int run_photons(const EmitOptions& o) {
    const hlfock::StateParams p{require_complex(o.alpha, "--alpha"), o.r, o.theta, o.nbar};
    const auto dist = hlfock::photon_distribution(p, o.m_max);
    // emitted files clip magnitudes below 1e-12 to exact zero
    std::vector<double> probs = dist.probabilities;
    for (double& v : probs) {
        if (std::abs(v) < 1e-12) v = 0.0;
    }
    if (o.format == "csv") {
        std::ostringstream out;
        out << "m,probability\n";
        for (std::size_t m = 0; m < probs.size(); ++m) {
            out << m << "," << fmt17(probs[m]) << "\n";
        }
        out << "# partial_trace = " << fmt17(dist.partial_trace) << "\n";
        return write_text(o.output, out.str());
    }
    json doc{{"params",
              {{"alpha", complex_json(p.alpha)}, {"r", p.r}, {"theta", p.theta},
               {"nbar", p.nbar}}},
             {"m_max", o.m_max},
             {"probabilities", probs},
             {"partial_trace", dist.partial_trace}};
    return write_text(o.output, doc.dump(2) + "\n");
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
    std::string alpha = "0";
    double phi = 0.0, r = 0.0, theta = 0.0, nbar = 0.0;
    std::size_t dim = 15;
    std::size_t series_terms = 300;
    std::string output;
    std::string mutate;
    double mutate_scale = 1e-6;
    double tol_prop1_appa = 1e-10;
    double tol_prop1_brute = 1e-9;
    double tol_prop2_series = 1e-8;
    double tol_prop2_brute = 1e-8;
    double tol_series_brute = 1e-8;
    double tol_helstrom = 1e-10;
};

/// Deviation normalized by max(1, |entry|).
double hybrid_dev(Complex a, Complex b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

double block_dev(const ComplexMatrix& a, const ComplexMatrix& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            worst = std::max(worst, hybrid_dev(a(i, j), b(i, j)));
    return worst;
}

void bump(Complex& v, double scale) {
    v = (v == Complex{0.0, 0.0}) ? Complex{scale, 0.0} : v * (1.0 + scale);
}

void bump(double& v, double scale) { v = (v == 0.0) ? scale : v * (1.0 + scale); }

/// Perturbs one derived constant in the closed-form paths (never in the
/// brute-force path), so a corrupted formula must trip at least one
/// route-pair comparison.
bool apply_mutation(const std::string& target, double scale,
                    hlfock::OrderingParams& op, hlfock::StateDerived& d) {
    auto both = [&](Complex hlfock::OrderingParams::* field) {
        bump(op.*field, scale);
        bump(d.ordering.*field, scale);
    };
    if (target == "k0") both(&hlfock::OrderingParams::k0);
    else if (target == "x") both(&hlfock::OrderingParams::x);
    else if (target == "y") both(&hlfock::OrderingParams::y);
    else if (target == "zpoly") {
        both(&hlfock::OrderingParams::z_poly);
        bump(d.z_poly, scale);
    } else if (target == "u") {
        both(&hlfock::OrderingParams::u);
        bump(d.u, scale);
    } else if (target == "X") both(&hlfock::OrderingParams::X);
    else if (target == "a") bump(d.a, scale);
    else if (target == "b") bump(d.b, scale);
    else if (target == "J") bump(d.J, scale);
    else return false;
    return true;
}

int run_verify(const VerifyOptions& o) {
    const Complex alpha = require_complex(o.alpha, "--alpha");
    const hlfock::BosonicParams bp(alpha, o.phi, o.r, o.theta);
    const hlfock::StateParams sp{alpha, o.r, o.theta, o.nbar};

    hlfock::OrderingParams op = hlfock::derive_ordering(bp);
    hlfock::StateDerived d = hlfock::derive_state(sp);
    if (!o.mutate.empty() && !apply_mutation(o.mutate, o.mutate_scale, op, d)) {
        throw CLI::ValidationError("--mutate: unknown target '" + o.mutate +
                                   "' (use k0,x,y,zpoly,u,X,a,b,J)");
    }

    struct Pair {
        std::string name;
        double deviation;
        double tolerance;
    };
    std::vector<Pair> pairs;

    // unitary routes
    const ComplexMatrix u_prop1 = hlfock::unitary_matrix(op, o.dim);
    const ComplexMatrix u_appa = hlfock::appendix_a_matrix(op, o.dim);
    pairs.push_back({"prop1_vs_appendix_a", block_dev(u_prop1, u_appa), o.tol_prop1_appa});

    const ComplexMatrix u_brute =
        hlfock::build_unitary(bp, hlfock::default_pad_dim(o.dim, bp)).block(o.dim, o.dim);
    pairs.push_back({"prop1_vs_brute", block_dev(u_prop1, u_brute), o.tol_prop1_brute});

    // state routes
    ComplexMatrix rho_closed(o.dim, o.dim), rho_series(o.dim, o.dim);
    for (std::size_t m = 0; m < o.dim; ++m) {
        for (std::size_t n = 0; n < o.dim; ++n) {
            rho_closed(m, n) = hlfock::rho_coeff(m, n, d);
            rho_series(m, n) =
                hlfock::rho_series_coeff(m, n, d.ordering, sp.nbar, o.series_terms).value;
        }
    }
    const ComplexMatrix rho_oracle = hlfock::rho_brute(sp, o.dim);
    pairs.push_back({"prop2_vs_series", block_dev(rho_closed, rho_series), o.tol_prop2_series});
    pairs.push_back({"prop2_vs_brute", block_dev(rho_closed, rho_oracle), o.tol_prop2_brute});
    pairs.push_back({"series_vs_brute", block_dev(rho_series, rho_oracle), o.tol_series_brute});

    // Laguerre closed form lives on the z = 0 slice and needs thermal noise
    bool helstrom_run = false;
    if (o.nbar > 0.0) {
        helstrom_run = true;
        const hlfock::StateParams slice{alpha, 0.0, 0.0, o.nbar};
        hlfock::StateDerived ds = hlfock::derive_state(slice);
        if (!o.mutate.empty()) {
            hlfock::OrderingParams dummy = ds.ordering;
            apply_mutation(o.mutate, o.mutate_scale, dummy, ds);
            ds.ordering = dummy;
        }
        double worst = 0.0;
        for (std::size_t m = 0; m < o.dim; ++m) {
            for (std::size_t n = 0; n < o.dim; ++n) {
                worst = std::max(worst,
                                 hybrid_dev(hlfock::displaced_helstrom_coeff(m, n, alpha, o.nbar),
                                            hlfock::rho_coeff(m, n, ds)));
            }
        }
        pairs.push_back({"helstrom_vs_prop2", worst, o.tol_helstrom});
    }

    bool all_pass = true;
    json jp = json::array();
    for (const auto& p : pairs) {
        const bool pass = p.deviation <= p.tolerance;
        all_pass = all_pass && pass;
        jp.push_back({{"name", p.name}, {"max_deviation", p.deviation},
                      {"tolerance", p.tolerance}, {"pass", pass}});
    }
    json doc{{"params",
              {{"alpha", complex_json(alpha)}, {"phi", o.phi}, {"r", o.r},
               {"theta", o.theta}, {"nbar", o.nbar}}},
             {"dim", o.dim},
             {"mutation", o.mutate.empty() ? json(nullptr) : json(o.mutate)},
             {"helstrom_included", helstrom_run},
             {"pairs", jp},
             {"pass", all_pass}};
    const int io = write_text(o.output, doc.dump(2) + "\n");
    if (io != kExitOk) return io;
    return all_pass ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fock-basis matrix elements of Gaussian unitaries and noisy "
                 "Gaussian states, with built-in cross-route verification"};
    app.require_subcommand(1);

    PolyOptions po;
    auto* poly = app.add_subcommand("poly", "evaluate a Hermite-like polynomial family");
    poly->add_option("--family", po.family,
                     "hkdf | hkdf2 | incomplete | laguerre | genfunc | mehler | mixed")
        ->required();
    poly->add_option("-n", po.n, "index n");
    poly->add_option("-m", po.m, "index m");
    poly->add_option("-k", po.k, "Laguerre superscript k");
    poly->add_option("--eps", po.eps, "incomplete-family parity (0 or 1)");
    poly->add_option("-x", po.x, "complex literal");
    poly->add_option("-y", po.y, "complex literal");
    poly->add_option("-z", po.z, "complex literal");
    poly->add_option("-u", po.u, "complex literal");
    poly->add_option("--v", po.v, "complex literal");
    poly->add_option("--t", po.t, "complex literal");
    poly->add_option("--tau", po.tau, "complex literal");
    poly->add_option("--terms", po.terms, "series truncation length (0 = automatic)");
    poly->add_option("--grid", po.grid, "points in --check mode");
    poly->add_flag("--check", po.check, "mehler: compare closed form vs series on a grid");

    EmitOptions uo;
    auto* unitary = app.add_subcommand("unitary", "emit the Fock matrix of S(z)D(alpha)R(phi)");
    unitary->add_option("--alpha", uo.alpha, "displacement (complex literal)");
    unitary->add_option("--phi", uo.phi, "rotation angle");
    unitary->add_option("--r", uo.r, "squeeze magnitude");
    unitary->add_option("--theta", uo.theta, "squeeze phase");
    unitary->add_option("--dim", uo.dim, "matrix dimension");
    unitary->add_option("--format", uo.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    unitary->add_option("-o,--output", uo.output, "output path (stdout if omitted)");

    EmitOptions so;
    auto* state = app.add_subcommand("state", "emit the Fock density matrix of a noisy Gaussian state");
    state->add_option("--alpha", so.alpha, "displacement (complex literal)");
    state->add_option("--r", so.r, "squeeze magnitude");
    state->add_option("--theta", so.theta, "squeeze phase");
    state->add_option("--nbar", so.nbar, "mean thermal photon number");
    state->add_option("--dim", so.dim, "matrix dimension");
    state->add_option("--format", so.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    state->add_option("-o,--output", so.output, "output path (stdout if omitted)");

    EmitOptions ho;
    auto* photons = app.add_subcommand("photons", "emit the photon-number distribution");
    photons->add_option("--alpha", ho.alpha, "displacement (complex literal)");
    photons->add_option("--r", ho.r, "squeeze magnitude");
    photons->add_option("--theta", ho.theta, "squeeze phase");
    photons->add_option("--nbar", ho.nbar, "mean thermal photon number");
    photons->add_option("--mmax", ho.m_max, "largest photon number");
    photons->add_option("--format", ho.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    photons->add_option("-o,--output", ho.output, "output path (stdout if omitted)");

    VerifyOptions vo;
    auto* verify = app.add_subcommand("verify", "cross-validate the independent computation routes");
    verify->add_option("--alpha", vo.alpha, "displacement (complex literal)");
    verify->add_option("--phi", vo.phi, "rotation angle for the unitary routes");
    verify->add_option("--r", vo.r, "squeeze magnitude");
    verify->add_option("--theta", vo.theta, "squeeze phase");
    verify->add_option("--nbar", vo.nbar, "mean thermal photon number");
    verify->add_option("--dim", vo.dim, "comparison block size");
    verify->add_option("--series-terms", vo.series_terms, "series truncation length");
    verify->add_option("-o,--output", vo.output, "report path (stdout if omitted)");
    verify->add_option("--mutate", vo.mutate,
                       "perturb one derived constant: k0,x,y,zpoly,u,X,a,b,J");
    verify->add_option("--mutate-scale", vo.mutate_scale, "relative perturbation size");
    verify->add_option("--tol-prop1-appa", vo.tol_prop1_appa, "tolerance");
    verify->add_option("--tol-prop1-brute", vo.tol_prop1_brute, "tolerance");
    verify->add_option("--tol-prop2-series", vo.tol_prop2_series, "tolerance");
    verify->add_option("--tol-prop2-brute", vo.tol_prop2_brute, "tolerance");
    verify->add_option("--tol-series-brute", vo.tol_series_brute, "tolerance");
    verify->add_option("--tol-helstrom", vo.tol_helstrom, "tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (poly->parsed()) return run_poly(po);
        if (unitary->parsed()) return run_unitary(uo);
        if (state->parsed()) return run_state(so);
        if (photons->parsed()) return run_photons(ho);
        if (verify->parsed()) return run_verify(vo);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}
