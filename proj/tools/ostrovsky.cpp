#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <vector>

#include "ostrovsky/evolution.hpp"
#include "ostrovsky/halfline.hpp"
#include "ostrovsky/io.hpp"
#include "ostrovsky/pointspec.hpp"
#include "ostrovsky/spectra.hpp"
#include "ostrovsky/spectral_ops.hpp"
#include "ostrovsky/waves.hpp"

namespace {

using json = nlohmann::json;
using namespace ostrovsky;

// Flat JSON config files: {"option": value, ...}; flags override file values.
// CLI11 only processes config files registered on the top-level app, never on
// subcommands, so --config is expanded here before parsing: the token pair is
// stripped from the argument list and each key becomes an appended option,
// skipped when any alias of that option already appears on the command line.
std::vector<std::string> expand_config(const CLI::App& app, std::vector<std::string> args) {
    std::string file;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) throw CLI::FileError("--config needs a file argument");
            file = args[i + 1];
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                       args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
            break;
        }
        if (args[i].rfind("--config=", 0) == 0) {
            file = args[i].substr(9);
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
            break;
        }
    }
    if (file.empty()) return args;

    std::ifstream in(file);
    if (!in) throw CLI::FileError("cannot open config file: " + file);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw CLI::FileError(file + ": " + e.what());
    }
    if (!j.is_object()) throw CLI::FileError(file + ": config file must hold a JSON object");

    // the innermost subcommand named on the command line receives the options
    const CLI::App* sub = &app;
    for (const auto& a : args) {
        const CLI::App* next = sub->get_subcommand_no_throw(a);
        if (next == nullptr) break;
        sub = next;
    }

    auto given = [&](const std::string& flag) {
        auto matches = [&](const std::string& f) {
            for (const auto& a : args)
                if (a == f || a.rfind(f + "=", 0) == 0) return true;
            return false;
        };
        if (matches(flag)) return true;
        if (const CLI::Option* opt = sub->get_option_no_throw(flag)) {
            for (const auto& n : opt->get_lnames())
                if (matches("--" + n)) return true;
            for (const auto& n : opt->get_snames())
                if (matches("-" + n)) return true;
        }
        return false;
    };

    for (auto& [key, value] : j.items()) {
        std::string flag = "--" + key;
        if (sub->get_option_no_throw(flag) == nullptr &&
            sub->get_option_no_throw("-" + key) != nullptr)
            flag = "-" + key;
        if (given(flag)) continue;
        if (value.is_boolean()) {
            args.push_back(flag + (value.get<bool>() ? "=true" : "=false"));
            continue;
        }
        args.push_back(flag);
        auto as_text = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
        if (value.is_array())
            for (auto& v : value) args.push_back(as_text(v));
        else
            args.push_back(as_text(value));
    }
    return args;
}

int thread_count(int requested) {
    int cap = 1;
    if (const char* env = std::getenv("OSTROVSKY_THREADS")) cap = std::max(1, std::atoi(env));
    return std::clamp(requested, 1, cap);
}

void write_sidecar(const std::string& data_path, const json& meta) {
    io::write_text(data_path + ".meta.json", meta.dump(2) + "\n");
}

WaveProfile build_profile(int p, double c, int n, double tol) {
    if (c == 0.0) return waves::peaked_profile(p, n);
    return waves::smooth_wave_solve(c, p, tol, n).profile;
}

// ---- subcommand runners ------------------------------------------------

struct WaveArgs {
    int p = 1, n = 1024;
    double c = 0.0, tol = 1e-6;
    std::string out = "wave.csv";
};

void run_wave(const WaveArgs& a) {
    json meta{{"command", "wave"}, {"p", a.p}, {"n", a.n}};
    WaveProfile w;
    if (a.c == 0.0) {
        w = waves::peaked_profile(a.p, a.n);
        meta["kind"] = "peaked";
        meta["c"] = w.c;
    } else {
        auto sol = waves::smooth_wave_solve(a.c, a.p, a.tol, a.n);
        w = sol.profile;
        meta["kind"] = "smooth";
        meta["c"] = a.c;
        meta["residual"] = sol.residual;
        meta["trough"] = sol.trough;
        meta["sensitivity"] = sol.sensitivity;
    }
    meta["mean"] = w.mean();
    std::vector<std::vector<double>> rows;
    for (std::size_t j = 0; j < w.grid.size(); ++j)
        rows.push_back({w.grid[j], w.values[j]});
    io::write_csv(a.out, {"z", "u"}, rows);
    write_sidecar(a.out, meta);
}

struct SpectrumArgs {
    int p = 1, N = 128;
    double kappa = 0.0, c = 0.0;
    bool a0 = false;
    std::string out = "spectrum.csv";
};

void run_spectrum(const SpectrumArgs& a) {
    auto profile = build_profile(a.p, a.c, 4096, 1e-6);
    auto M = spectral_ops::assemble_operator(profile, a.N, a.kappa, !a.a0);
    auto spec = spectra::eigenvalues(M);
    std::vector<std::vector<double>> rows;
    for (std::size_t j = 0; j < spec.eigenvalues.size(); ++j)
        rows.push_back({spec.eigenvalues[j].real(), spec.eigenvalues[j].imag(),
                        spec.residuals[j]});
    io::write_csv(a.out, {"re", "im", "residual"}, rows);
    json meta{{"command", "spectrum"}, {"p", a.p},     {"N", a.N},
              {"kappa", a.kappa},      {"c", profile.c}, {"include_K", !a.a0},
              {"strip_half_width", strip_half_width(a.p)}};
    write_sidecar(a.out, meta);
}

struct PseudoArgs {
    int p = 1, N = 256, res_re = 33, res_im = 17, threads = 1;
    double kappa = 0.0, c = 0.0, eps = 0.02;
    std::vector<double> window{-0.8, 0.8, -2.0, 2.0};
    bool a0 = false;
    std::string out = "pseudo.csv", svg;
};

void run_pseudo(const PseudoArgs& a) {
    if (a.window.size() != 4) throw CLI::ValidationError("--window needs re0 re1 im0 im1");
    auto profile = build_profile(a.p, a.c, 4096, 1e-6);
    auto M = spectral_ops::assemble_operator(profile, a.N, a.kappa, !a.a0);
    auto field = spectra::pseudospectrum_field(M, {a.window[0], a.window[1]},
                                               {a.window[2], a.window[3]}, a.res_re,
                                               a.res_im, thread_count(a.threads));
    std::vector<std::vector<double>> rows;
    for (std::size_t r = 0; r < field.im_grid.size(); ++r)
        for (std::size_t c2 = 0; c2 < field.re_grid.size(); ++c2)
            rows.push_back({field.re_grid[c2], field.im_grid[r],
                            field.sigma_min(static_cast<int>(r), static_cast<int>(c2))});
    io::write_csv(a.out, {"re", "im", "sigma_min"}, rows);
    json meta{{"command", "pseudo"}, {"p", a.p},         {"N", a.N},
              {"kappa", a.kappa},    {"include_K", !a.a0}, {"eps", a.eps},
              {"window", a.window},  {"strip_half_width", strip_half_width(a.p)}};
    if (auto strip = spectra::strip_estimate(field, a.eps))
        meta["strip_estimate"] = {strip->first, strip->second};
    else
        meta["strip_estimate"] = nullptr;
    write_sidecar(a.out, meta);
    if (!a.svg.empty())
        io::write_text(a.svg, io::pseudospectrum_svg(field, strip_half_width(a.p)));
}

struct ClassifyArgs {
    double mu_re = 0.0, mu_im = 0.0;
    std::string out;
};

void run_classify(const ClassifyArgs& a) {
    auto cl = halfline::classify_mu({a.mu_re, a.mu_im});
    const char* name = cl.region == halfline::MuRegion::resolvent
                           ? "resolvent"
                           : cl.region == halfline::MuRegion::residual ? "residual"
                                                                      : "continuous";
    json j{{"mu", {a.mu_re, a.mu_im}}, {"region", name}};
    std::cout << j.dump() << "\n";
    if (!a.out.empty()) io::write_text(a.out, j.dump(2) + "\n");
}

struct PointspecArgs {
    int p = 1, N = 256;
    std::uint64_t seed = 7;
    std::string out = "pointspec.csv";
};

void run_pointspec(const PointspecArgs& a) {
    std::vector<complexd> grid{{0.0, 0.0}, {2.0 * pi / 3.0, 0.0}, {-2.0 * pi / 3.0, 0.0}};
    std::mt19937_64 rng(a.seed);
    auto unif = [&](double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1p-53);
    };
    while (grid.size() < 12) {
        complexd lam(unif(-0.5, 0.5), unif(-1.0, 1.0));
        if (std::abs(lam) >= 0.2) grid.push_back(lam);
    }
    auto scan = pointspec::point_spectrum_scan(grid, a.p, a.N);
    std::vector<std::vector<double>> rows;
    for (const auto& e : scan.entries)
        rows.push_back({e.lambda.real(), e.lambda.imag(), e.mean_ok ? 1.0 : 0.0,
                        e.member ? 1.0 : 0.0, e.eigen_residual, e.admissible ? 1.0 : 0.0});
    io::write_csv(a.out, {"re", "im", "mean_ok", "member", "eigen_residual", "admissible"},
                  rows);
    json adm = json::array();
    for (auto& lam : scan.admissible) adm.push_back({lam.real(), lam.imag()});
    json meta{{"command", "pointspec"}, {"p", a.p}, {"N", a.N},
              {"seed", a.seed},         {"admissible", adm}};
    write_sidecar(a.out, meta);
}

struct EvolveArgs {
    bool linear = false;
    int p = 1, N = 256, n = 256;
    double kappa = 0.0, dt = 0.0, T = 10.0, amplitude = 0.01, c = 1.05;
    std::string init = "random", out = "evolve.csv";
    std::uint64_t seed = 7;
};

void run_evolve(const EvolveArgs& a) {
    json meta{{"command", "evolve"}, {"p", a.p}, {"T", a.T}, {"seed", a.seed},
              {"init", a.init}};
    if (a.linear) {
        double dt = a.dt > 0.0 ? a.dt : 0.5 / a.N;
        auto M = spectral_ops::assemble_operator(waves::peaked_coefficients(a.p, 2 * a.N),
                                                 a.N, a.kappa, true);
        FourierVector v0;
        if (a.init == "kernel") {
            auto df = waves::peaked_derivative(a.p, 8 * a.N);
            // resample to the standard grid for truncation
            std::vector<double> vals(static_cast<std::size_t>(8 * a.N));
            for (int j = 0; j < 8 * a.N; ++j)
                vals[static_cast<std::size_t>(j)] =
                    waves::peaked_derivative_value(a.p, -pi + (j + 0.5) * 2.0 * pi / (8 * a.N));
            v0 = spectral_ops::truncate_field(vals, a.N, a.kappa);
        } else if (a.init == "random") {
            v0 = evolution::make_initial_coeffs(a.N, a.kappa, a.seed);
        } else {
            throw CLI::ValidationError("linear init must be random or kernel");
        }
        auto tr = evolution::evolve_linear(M, v0, dt, a.T);
        std::vector<std::vector<double>> rows;
        for (std::size_t j = 0; j < tr.times.size(); ++j)
            rows.push_back({tr.times[j], tr.norms[j]});
        io::write_csv(a.out, {"t", "norm"}, rows);
        auto fit = evolution::growth_rate_fit(tr, 0.5);
        meta["mode"] = "linear";
        meta["N"] = a.N;
        meta["kappa"] = a.kappa;
        meta["dt"] = dt;
        meta["fitted_rate"] = fit.rate;
        meta["r2"] = fit.r2;
        meta["overflow"] = tr.overflow;
    } else {
        double dt = a.dt > 0.0 ? a.dt : 1e-3;
        evolution::InitialKind kind;
        if (a.init == "peaked_perturbed") kind = evolution::InitialKind::peaked_perturbed;
        else if (a.init == "smooth_wave") kind = evolution::InitialKind::smooth_wave;
        else if (a.init == "random") kind = evolution::InitialKind::random_zero_mean;
        else throw CLI::ValidationError("unknown nonlinear init kind");
        evolution::InitialParams params;
        params.p = a.p;
        params.n = a.n;
        params.c = a.c;
        params.amplitude = a.amplitude;
        auto u0 = evolution::make_initial_data(kind, params, a.seed);
        auto tr = evolution::evolve_nonlinear(u0, a.p, dt, a.T);
        std::vector<std::vector<double>> rows;
        for (std::size_t j = 0; j < tr.times.size(); ++j)
            rows.push_back({tr.times[j], tr.norms[j], tr.max_slope[j]});
        io::write_csv(a.out, {"t", "norm", "max_slope"}, rows);
        meta["mode"] = "nonlinear";
        meta["n"] = a.n;
        meta["dt"] = dt;
        meta["breaking"] = tr.breaking;
        meta["breaking_time"] = tr.breaking_time;
        meta["mass_drift"] = tr.mass_drift;
        meta["l2_drift"] = tr.l2_drift;
    }
    write_sidecar(a.out, meta);
}

struct ReportArgs {
    int N = 128, res_re = 41, res_im = 21, threads = 1;
    double eps = 0.02;
    std::string outdir = "report";
};

void run_report(const ReportArgs& a) {
    std::filesystem::create_directories(a.outdir);
    for (int p : {1, 2}) {
        auto d = waves::peaked_coefficients(p, 2 * a.N);
        auto M = spectral_ops::assemble_operator(d, a.N, 0.0, true);
        std::string base = a.outdir + "/strip_p" + std::to_string(p);

        auto spec = spectra::eigenvalues(M);
        std::vector<std::vector<double>> erows;
        for (std::size_t j = 0; j < spec.eigenvalues.size(); ++j)
            erows.push_back({spec.eigenvalues[j].real(), spec.eigenvalues[j].imag(),
                             spec.residuals[j]});
        io::write_csv(base + "_spectrum.csv", {"re", "im", "residual"}, erows);

        auto field = spectra::pseudospectrum_field(M, {-0.8, 0.8}, {-2.0, 2.0}, a.res_re,
                                                   a.res_im, thread_count(a.threads));
        std::vector<std::vector<double>> rows;
        for (std::size_t r = 0; r < field.im_grid.size(); ++r)
            for (std::size_t c2 = 0; c2 < field.re_grid.size(); ++c2)
                rows.push_back({field.re_grid[c2], field.im_grid[r],
                                field.sigma_min(static_cast<int>(r), static_cast<int>(c2))});
        io::write_csv(base + ".csv", {"re", "im", "sigma_min"}, rows);
        io::write_text(base + ".svg", io::pseudospectrum_svg(field, strip_half_width(p)));

        json meta{{"command", "report"}, {"p", p},       {"N", a.N},
                  {"eps", a.eps},        {"window", {-0.8, 0.8, -2.0, 2.0}},
                  {"strip_half_width", strip_half_width(p)}};
        if (auto strip = spectra::strip_estimate(field, a.eps))
            meta["strip_estimate"] = {strip->first, strip->second};
        else
            meta["strip_estimate"] = nullptr;
        write_sidecar(base + ".csv", meta);
    }
}

void add_config(CLI::App* sub) {
    // documentation only: the option is consumed by expand_config before parsing
    sub->add_option("--config", "flat JSON config file (flags override)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral laboratory for peaked periodic waves of the reduced and "
                 "modified Ostrovsky equations"};
    app.require_subcommand(1);

    WaveArgs wa;
    auto* wave = app.add_subcommand("wave", "Compute a traveling-wave profile");
    wave->add_option("--p", wa.p, "nonlinearity power (1 or 2)");
    wave->add_option("--c", wa.c, "wave speed; 0 selects the peaked wave at c*");
    wave->add_option("--n", wa.n, "sample count");
    wave->add_option("--tol", wa.tol, "smooth-wave residual tolerance");
    wave->add_option("-o,--out", wa.out, "output CSV path");
    add_config(wave);
    wave->callback([&] { run_wave(wa); });

    SpectrumArgs sa;
    auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of the linearized operator");
    spectrum->add_option("--p", sa.p, "nonlinearity power");
    spectrum->add_option("--N", sa.N, "Fourier cutoff");
    spectrum->add_option("--kappa", sa.kappa, "Floquet exponent in [-1/2, 1/2]");
    spectrum->add_option("--c", sa.c, "wave speed; 0 selects the peaked wave");
    spectrum->add_flag("--a0", sa.a0, "drop the anti-derivative term (operator A0)");
    spectrum->add_option("-o,--out", sa.out, "output CSV path");
    add_config(spectrum);
    spectrum->callback([&] { run_spectrum(sa); });

    PseudoArgs pa;
    auto* pseudo = app.add_subcommand("pseudo", "Pseudospectrum portrait (sigma_min grid)");
    pseudo->add_option("--p", pa.p, "nonlinearity power");
    pseudo->add_option("--N", pa.N, "Fourier cutoff");
    pseudo->add_option("--kappa", pa.kappa, "Floquet exponent");
    pseudo->add_option("--c", pa.c, "wave speed; 0 selects the peaked wave");
    pseudo->add_option("--window", pa.window, "re0 re1 im0 im1")->expected(4);
    pseudo->add_option("--res", pa.res_re, "grid resolution along Re");
    pseudo->add_option("--res-im", pa.res_im, "grid resolution along Im");
    pseudo->add_option("--eps", pa.eps, "sublevel threshold for the strip estimate");
    pseudo->add_option("--threads", pa.threads, "worker threads (capped by OSTROVSKY_THREADS)");
    pseudo->add_flag("--a0", pa.a0, "drop the anti-derivative term");
    pseudo->add_option("-o,--out", pa.out, "output CSV path");
    pseudo->add_option("--svg", pa.svg, "also render an SVG portrait here");
    add_config(pseudo);
    pseudo->callback([&] { run_pseudo(pa); });

    auto* hl = app.add_subcommand("halfline", "Half-line operator oracles");
    hl->require_subcommand(1);
    ClassifyArgs ca;
    auto* classify = hl->add_subcommand("classify", "Classify a spectral parameter mu");
    classify->add_option("--mu", ca.mu_re, "Re mu")->required();
    classify->add_option("--mu-im", ca.mu_im, "Im mu");
    classify->add_option("-o,--out", ca.out, "optional JSON output path");
    classify->callback([&] { run_classify(ca); });

    PointspecArgs psa;
    auto* ps = app.add_subcommand("pointspec", "Point-spectrum admissibility scan");
    ps->add_option("--p", psa.p, "nonlinearity power");
    ps->add_option("--N", psa.N, "Galerkin cutoff for the eigen-residual check");
    ps->add_option("--seed", psa.seed, "seed for the random lambda samples");
    ps->add_option("-o,--out", psa.out, "output CSV path");
    add_config(ps);
    ps->callback([&] { run_pointspec(psa); });

    EvolveArgs ea;
    auto* ev = app.add_subcommand("evolve", "Linear or nonlinear time evolution");
    ev->add_flag("--linear", ea.linear, "coefficient-space linear evolution v_t = A v");
    ev->add_option("--p", ea.p, "nonlinearity power");
    ev->add_option("--N", ea.N, "Fourier cutoff (linear)");
    ev->add_option("--n", ea.n, "sample count (nonlinear, power of two)");
    ev->add_option("--kappa", ea.kappa, "Floquet exponent (linear)");
    ev->add_option("--dt", ea.dt, "time step (0 picks the default)");
    ev->add_option("--T", ea.T, "time horizon");
    ev->add_option("--init", ea.init,
                   "initial data: random | kernel (linear) | peaked_perturbed | smooth_wave");
    ev->add_option("--amplitude", ea.amplitude, "perturbation amplitude");
    ev->add_option("--c", ea.c, "smooth-wave speed");
    ev->add_option("--seed", ea.seed, "random seed");
    ev->add_option("-o,--out", ea.out, "output CSV path");
    add_config(ev);
    ev->callback([&] { run_evolve(ea); });

    ReportArgs ra;
    auto* rp = app.add_subcommand("report", "Render the strip portraits for p = 1 and p = 2");
    rp->add_option("--N", ra.N, "Fourier cutoff");
    rp->add_option("--res", ra.res_re, "grid resolution along Re");
    rp->add_option("--res-im", ra.res_im, "grid resolution along Im");
    rp->add_option("--eps", ra.eps, "sublevel threshold");
    rp->add_option("--threads", ra.threads, "worker threads (capped by OSTROVSKY_THREADS)");
    rp->add_option("--outdir", ra.outdir, "output directory");
    add_config(rp);
    rp->callback([&] { run_report(ra); });

    try {
        std::vector<std::string> args(argv + 1, argv + argc);
        args = expand_config(app, args);
        std::reverse(args.begin(), args.end());  // App::parse consumes back-to-front
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        nlohmann::json diag{{"error", e.what()}};
        std::cerr << diag.dump() << "\n";
        return 1;
    }
    return 0;
}
