// Command-line driver for the weighted Steklov toolkit. All numerics go
// through the shared library's C interface.

#include "steklov/steklov.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;

struct CliError : std::runtime_error {
    int code;
    CliError(int c, const std::string& m) : std::runtime_error(m), code(c) {}
};

void ck(int status) {
    if (status != STK_OK) throw CliError(status, stk_last_error());
}

struct WeightPtr : std::unique_ptr<stk_weight, void (*)(stk_weight*)> {
    WeightPtr() : unique_ptr(nullptr, stk_weight_free) {}
};
struct MapPtr : std::unique_ptr<stk_map, void (*)(stk_map*)> {
    MapPtr() : unique_ptr(nullptr, stk_map_free) {}
};
struct CurvePtr : std::unique_ptr<stk_curve, void (*)(stk_curve*)> {
    CurvePtr() : unique_ptr(nullptr, stk_curve_free) {}
};

WeightPtr parse_weight_arg(const std::string& spec, int grid) {
    WeightPtr w;
    stk_weight* raw = nullptr;
    ck(stk_weight_parse(spec.c_str(), grid, &raw));
    w.reset(raw);
    return w;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

struct Report {
    json config = json::object();
    json results = json::array();
    json assertions = json::array();
    std::uint64_t seed = 0;
    std::string csv;
    bool all_passed = true;

    void assert_that(const std::string& name, bool ok, const std::string& detail) {
        assertions.push_back({{"name", name}, {"passed", ok}, {"detail", detail}});
        if (!ok) all_passed = false;
    }

    int write(const std::string& prefix) const {
        {
            std::ofstream f(prefix + ".csv", std::ios::binary);
            if (!f) throw CliError(STK_ERR_INVALID, "cannot write " + prefix + ".csv");
            f << csv;
        }
        json doc;
        doc["config"] = config;
        doc["results"] = results;
        doc["assertions"] = assertions;
        doc["seed"] = seed;
        std::ofstream f(prefix + ".json", std::ios::binary);
        if (!f) throw CliError(STK_ERR_INVALID, "cannot write " + prefix + ".json");
        f << doc.dump(2) << "\n";
        return all_passed ? 0 : 1;
    }
};

// "name=a..b" -> doubling ladder a, 2a, 4a, ... <= b.
std::vector<int> parse_sweep(const std::string& sweep, const std::string& expect_name) {
    const auto eq = sweep.find('=');
    const auto dots = sweep.find("..");
    if (eq == std::string::npos || dots == std::string::npos || dots < eq)
        throw CliError(STK_ERR_INVALID, "sweep must look like " + expect_name + "=a..b");
    const int a = std::stoi(sweep.substr(eq + 1, dots - eq - 1));
    const int b = std::stoi(sweep.substr(dots + 2));
    if (a < 1 || b < a) throw CliError(STK_ERR_INVALID, "empty sweep range");
    std::vector<int> out;
    for (int v = a; v <= b; v *= 2) out.push_back(v);
    return out;
}

int cmd_spectrum(const std::string& weight_spec, int grid, int n_modes, int k_max,
                 const std::string& out) {
    WeightPtr w = parse_weight_arg(weight_spec, grid);
    Report rep;
    rep.config = {{"command", "spectrum"}, {"weight", weight_spec}, {"grid", grid},
                  {"n_modes", n_modes},    {"k_max", k_max}};

    std::vector<double> eigs(static_cast<size_t>(k_max) + 1);
    ck(stk_spectrum(w.get(), n_modes, k_max + 1, eigs.data()));
    rep.csv = "k,sigma\n";
    for (int k = 0; k <= k_max; ++k) {
        rep.csv += std::to_string(k) + "," + fmt(eigs[static_cast<size_t>(k)]) + "\n";
        rep.results.push_back({{"k", k}, {"sigma", eigs[static_cast<size_t>(k)]}});
    }

    // Truncation ladder for sigma_1 (values nonincreasing by min-max).
    bool monotone = true;
    double prev = 0.0;
    json ladder = json::array();
    for (int m = 16; m <= 256; m *= 2) {
        std::vector<double> e2(2);
        ck(stk_spectrum(w.get(), m, 2, e2.data()));
        if (m > 16 && e2[1] > prev + 1e-11) monotone = false;
        prev = e2[1];
        ladder.push_back({{"n_modes", m}, {"sigma1", e2[1]}});
    }
    rep.results.push_back({{"sigma1_ladder", ladder}});
    rep.assert_that("sigma1_ladder_nonincreasing", monotone,
                    "truncated eigenvalues decrease with more modes");
    return rep.write(out);
}

int cmd_deficit_sweep(const std::vector<double>& alphas, const std::string& sweep,
                      int grid, const std::string& out) {
    const std::vector<int> ns = parse_sweep(sweep, "N");
    Report rep;
    rep.config = {{"command", "deficit-sweep"}, {"alpha", alphas}, {"sweep", sweep},
                  {"grid", grid}};
    rep.csv = "alpha,N,deficit,upper,scaled\n";
    bool upper_ok = true;
    double c0 = 1e300;
    for (double a : alphas) {
        for (int n : ns) {
            char spec[96];
            std::snprintf(spec, sizeof(spec), "1 + %.17g*cos(%d*t)", a, n);
            WeightPtr w = parse_weight_arg(spec, std::max(grid, 8 * n));
            double deff = 0.0;
            ck(stk_deficit(w.get(), &deff));
            const double upper = n > 3 ? a * a / (n - 3) : -1.0;
            const double scaled = n * deff / (a * a);
            if (upper > 0.0 && deff > upper) upper_ok = false;
            c0 = std::min(c0, scaled);
            rep.csv += fmt(a) + "," + std::to_string(n) + "," + fmt(deff) + "," +
                       fmt(upper) + "," + fmt(scaled) + "\n";
            rep.results.push_back({{"alpha", a}, {"N", n}, {"deficit", deff},
                                   {"upper", upper}, {"scaled", scaled}});
        }
    }
    rep.assert_that("deficit_upper_bracket", upper_ok, "deficit <= alpha^2/(N-3)");
    rep.assert_that("deficit_lower_bracket", c0 > 0.0,
                    "fitted c0 = " + fmt(c0) + " for N*deficit/alpha^2 >= c0");
    return rep.write(out);
}

int cmd_stability(std::uint64_t seed, int count, int grid, const std::string& out) {
    Report rep;
    rep.seed = seed;
    rep.config = {{"command", "stability"}, {"count", count}, {"grid", grid}};
    rep.csv = "sample,deficit,hminus,sup,ratio_sobolev,ratio_sup\n";
    const double bound = 1.0 + std::sqrt(2.0);
    bool sobolev_ok = true;
    double worst_sobolev = 0.0, worst_sup = 0.0;
    for (int i = 0; i < count; ++i) {
        const int bw = 2 + static_cast<int>((seed + static_cast<std::uint64_t>(i) * 7) % 31);
        const double amp = 0.05 + 0.025 * static_cast<double>(i % 20);
        WeightPtr w;
        {
            stk_weight* raw = nullptr;
            ck(stk_weight_random(seed + static_cast<std::uint64_t>(i), bw, amp, grid, 1, &raw));
            w.reset(raw);
        }
        double deff = 0.0, hm = 0.0, sup = 0.0;
        ck(stk_deficit(w.get(), &deff));
        ck(stk_weight_hminus_half(w.get(), &hm));
        ck(stk_weight_sup_distance(w.get(), &sup));
        const double r1 = hm / std::sqrt(std::max(deff, 1e-300) * (2.0 + hm * hm));
        const double r2 = sup / std::sqrt(std::max(hm, 1e-300));
        if (r1 > bound + 1e-8) sobolev_ok = false;
        worst_sobolev = std::max(worst_sobolev, r1);
        worst_sup = std::max(worst_sup, r2);
        rep.csv += std::to_string(i) + "," + fmt(deff) + "," + fmt(hm) + "," + fmt(sup) +
                   "," + fmt(r1) + "," + fmt(r2) + "\n";
        rep.results.push_back({{"sample", i}, {"deficit", deff}, {"hminus", hm},
                               {"sup", sup}, {"ratio_sobolev", r1}, {"ratio_sup", r2}});
    }
    rep.assert_that("sobolev_ratio_bound", sobolev_ok,
                    "max ratio " + fmt(worst_sobolev) + " <= " + fmt(bound));
    rep.assert_that("sup_ratio_finite", worst_sup <= 1e3,
                    "max ratio " + fmt(worst_sup) + " within cap 1e3");
    return rep.write(out);
}

int cmd_reconstruct(const std::string& weight_spec, int grid, int terms, double alpha,
                    const std::string& out) {
    WeightPtr w = parse_weight_arg(weight_spec, grid);
    Report rep;
    rep.config = {{"command", "reconstruct"}, {"weight", weight_spec}, {"grid", grid},
                  {"k_max", terms},           {"alpha", alpha}};
    MapPtr m;
    {
        stk_map* raw = nullptr;
        ck(stk_map_reconstruct(w.get(), terms, &raw));
        m.reset(raw);
    }
    int nt = 0;
    ck(stk_map_n_terms(m.get(), &nt));
    std::vector<double> coeffs(2 * (static_cast<size_t>(nt) + 1));
    ck(stk_map_coeffs(m.get(), coeffs.data()));
    rep.csv = "n,re,im\n";
    for (int k = 0; k <= nt; ++k)
        rep.csv += std::to_string(k) + "," + fmt(coeffs[2 * static_cast<size_t>(k)]) + "," +
                   fmt(coeffs[2 * static_cast<size_t>(k) + 1]) + "\n";
    double perim = 0.0, margin = 0.0, norm = 0.0;
    ck(stk_map_perimeter(m.get(), &perim));
    ck(stk_map_univalence_margin(m.get(), &margin));
    ck(stk_map_apriori_norm(m.get(), alpha, &norm));
    rep.results.push_back({{"n_terms", nt}, {"perimeter", perim},
                           {"univalence_margin", margin}, {"apriori_norm", norm}});
    rep.assert_that("univalent", margin <= 1.0,
                    "margin " + fmt(margin) + " certifies injectivity when <= 1");
    return rep.write(out);
}

int cmd_homogenize(const std::string& weight_spec, int grid, const std::string& sweep,
                   int mesh_radial, int mesh_samples, double tol, const std::string& out) {
    const std::vector<int> teeth = parse_sweep(sweep, "k");
    WeightPtr w = parse_weight_arg(weight_spec, grid);
    Report rep;
    rep.config = {{"command", "homogenize"}, {"weight", weight_spec}, {"sweep", sweep},
                  {"grid", grid}, {"mesh", {mesh_radial, mesh_samples}}, {"tol", tol}};

    double mean = 0.0;
    ck(stk_weight_mean(w.get(), &mean));
    const double target_perim = two_pi * mean;
    // Reference pairing integral of Theta x^2 over the unit circle.
    double target_pair = 0.0;
    {
        const int q = 1 << 12;
        for (int j = 0; j < q; ++j) {
            const double t = two_pi * j / q;
            double v = 0.0;
            ck(stk_weight_value_at(w.get(), t, &v));
            target_pair += v * std::cos(t) * std::cos(t);
        }
        target_pair *= two_pi / q;
    }
    double target_sigma = 0.0;
    ck(stk_sigma1(w.get(), &target_sigma));

    CurvePtr base;
    {
        stk_curve* raw = nullptr;
        ck(stk_curve_circle(2048, 1.0, &raw));
        base.reset(raw);
    }

    rep.csv = "teeth,perimeter,perimeter_err,pairing,pairing_err,fem_sigma1,sigma_err\n";
    bool pairing_monotone = true, sigma_monotone = true;
    double prev_pair_err = 0.0, prev_sig_err = 0.0, last_perim_err = 0.0;
    for (size_t idx = 0; idx < teeth.size(); ++idx) {
        const int k = teeth[idx];
        CurvePtr curve;
        {
            stk_curve* raw = nullptr;
            ck(stk_curve_oscillating(base.get(), w.get(), k, mesh_samples, 0, 1, &raw));
            curve.reset(raw);
        }
        double perim = 0.0, pair = 0.0;
        ck(stk_curve_perimeter(curve.get(), &perim));
        auto x2 = [](double x, double, void*) { return x * x; };
        ck(stk_curve_pairing(curve.get(), x2, nullptr, &pair));
        std::vector<double> eigs(2);
        ck(stk_fem_steklov(curve.get(), mesh_radial, 1.2, nullptr, 2, eigs.data()));
        const double perr = std::abs(perim - target_perim) / target_perim;
        const double qerr = std::abs(pair - target_pair) / std::abs(target_pair);
        const double serr = std::abs(eigs[1] - target_sigma) / target_sigma;
        if (idx > 0 && qerr > prev_pair_err + 1e-12) pairing_monotone = false;
        if (idx > 0 && serr > prev_sig_err + 1e-12) sigma_monotone = false;
        prev_pair_err = qerr;
        prev_sig_err = serr;
        last_perim_err = perr;
        rep.csv += std::to_string(k) + "," + fmt(perim) + "," + fmt(perr) + "," +
                   fmt(pair) + "," + fmt(qerr) + "," + fmt(eigs[1]) + "," + fmt(serr) + "\n";
        rep.results.push_back({{"teeth", k}, {"perimeter", perim}, {"perimeter_err", perr},
                               {"pairing", pair}, {"pairing_err", qerr},
                               {"fem_sigma1", eigs[1]}, {"sigma_err", serr}});
    }
    rep.assert_that("perimeter_limit", last_perim_err <= tol,
                    "final perimeter error " + fmt(last_perim_err) + " <= " + fmt(tol));
    rep.assert_that("pairing_monotone", pairing_monotone,
                    "pairing error decreases along the tooth ladder");
    rep.assert_that("sigma_monotone", sigma_monotone,
                    "FEM sigma_1 error decreases along the tooth ladder");
    return rep.write(out);
}

int cmd_instability(const std::string& sweep, int grid, double tol, const std::string& out) {
    const std::vector<int> ns = parse_sweep(sweep, "n");
    Report rep;
    rep.config = {{"command", "instability"}, {"sweep", sweep}, {"grid", grid}, {"tol", tol}};
    MapPtr base;
    {
        const double ident[2] = {1.0, 0.0};
        stk_map* raw = nullptr;
        ck(stk_map_from_deriv(ident, 1, &raw));
        base.reset(raw);
    }
    rep.csv = "n,lambda,perimeter,sigma1,product,deviation,log_sup\n";
    bool decreasing = true;
    double prev_dev = 0.0, last_dev = 0.0, max_logsup = 0.0;
    for (size_t idx = 0; idx < ns.size(); ++idx) {
        const int n = ns[idx];
        MapPtr gm;
        double lambda = 0.0;
        {
            stk_map* raw = nullptr;
            ck(stk_map_instability(base.get(), n, &raw, &lambda));
            gm.reset(raw);
        }
        WeightPtr bw;
        {
            stk_weight* raw = nullptr;
            ck(stk_map_boundary_weight(gm.get(), std::min(4096, std::max(grid, 48 * n)), &raw));
            bw.reset(raw);
        }
        double perim = 0.0, lo = 0.0, hi = 0.0;
        ck(stk_map_perimeter(gm.get(), &perim));
        // The weight's spectrum lives on harmonics of n; a fixed multiple of n
        // modes resolves sigma_1 far beyond the asserted tolerance.
        double eigs[2] = {0.0, 0.0};
        ck(stk_spectrum(bw.get(), std::max(128, 6 * n), 2, eigs));
        const double sig = eigs[1];
        ck(stk_weight_minmax(bw.get(), &lo, &hi));
        const double product = perim * sig / two_pi;
        const double dev = std::abs(product - 1.0);
        const double logsup = std::max(std::abs(std::log(lo)), std::abs(std::log(hi)));
        if (idx > 0 && dev > prev_dev + 1e-12) decreasing = false;
        prev_dev = dev;
        last_dev = dev;
        max_logsup = std::max(max_logsup, logsup);
        rep.csv += std::to_string(n) + "," + fmt(lambda) + "," + fmt(perim) + "," +
                   fmt(sig) + "," + fmt(product) + "," + fmt(dev) + "," + fmt(logsup) + "\n";
        rep.results.push_back({{"n", n}, {"lambda", lambda}, {"perimeter", perim},
                               {"sigma1", sig}, {"product", product}, {"deviation", dev},
                               {"log_sup", logsup}});
    }
    rep.assert_that("product_converges", decreasing && last_dev < tol,
                    "|perimeter*sigma1/(2pi) - 1| decreasing, final " + fmt(last_dev));
    rep.assert_that("log_deriv_bounded", max_logsup <= 2.0,
                    "sup |log|g_n'|| = " + fmt(max_logsup) + " uniformly bounded");
    return rep.write(out);
}

int cmd_sharpness(double eps, const std::string& sweep, int grid, const std::string& out) {
    const std::vector<int> ns = parse_sweep(sweep, "n");
    Report rep;
    rep.config = {{"command", "sharpness"}, {"eps", eps}, {"sweep", sweep}, {"grid", grid}};
    rep.csv = "n,a_n,deficit,hausdorff,ratio,lower\n";
    double first_ratio = -1.0, max_ratio = 0.0;
    bool lower_ok = true;
    for (int n : ns) {
        WeightPtr w;
        {
            stk_weight* raw = nullptr;
            ck(stk_weight_sharpness(n, eps, std::max(grid, 16 * n), &raw));
            w.reset(raw);
        }
        double a = 0.0, im = 0.0;
        ck(stk_weight_coeff(w.get(), n, &a, &im));
        a *= 2.0; // hat Theta(n) = a_n/2
        double deff = 0.0;
        ck(stk_deficit(w.get(), &deff));
        MapPtr m;
        {
            stk_map* raw = nullptr;
            ck(stk_map_reconstruct(w.get(), 6 * n + 2, &raw));
            m.reset(raw);
        }
        CurvePtr c;
        {
            stk_curve* raw = nullptr;
            ck(stk_map_boundary_curve(m.get(), 4096, &raw));
            c.reset(raw);
        }
        double hd = 0.0;
        ck(stk_curve_hausdorff_to_disk(c.get(), &hd));
        const double ratio = deff / std::pow(hd, 2.0 - eps);
        const double lower = 0.5 * a / n;
        if (hd < lower) lower_ok = false;
        if (first_ratio < 0.0) first_ratio = ratio;
        max_ratio = std::max(max_ratio, ratio);
        rep.csv += std::to_string(n) + "," + fmt(a) + "," + fmt(deff) + "," + fmt(hd) +
                   "," + fmt(ratio) + "," + fmt(lower) + "\n";
        rep.results.push_back({{"n", n}, {"a_n", a}, {"deficit", deff}, {"hausdorff", hd},
                               {"ratio", ratio}, {"lower", lower}});
    }
    rep.assert_that("hausdorff_lower", lower_ok, "hausdorff >= 0.5*a_n/n at every n");
    rep.assert_that("ratio_bounded", max_ratio <= 10.0 * std::max(first_ratio, 1e-30),
                    "max ratio " + fmt(max_ratio) + " shows no blow-up at exponent " +
                        fmt(2.0 - eps));
    return rep.write(out);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted Steklov spectra on the disk: experiments and reports"};
    app.require_subcommand(1);

    std::string weight = "1";
    int n_modes = 0;
    int grid = 1024;
    int k_max = 6;
    std::vector<double> alphas;
    std::string sweep;
    double eps = 0.5;
    int teeth = 32;
    std::string mesh = "12,16";
    std::string out;
    std::uint64_t seed = 1;
    double tol = 0.02;

    app.add_option("--weight", weight, "weight expression or coefficient CSV path");
    app.add_option("--n-modes", n_modes, "Galerkin truncation (0 = automatic)");
    app.add_option("--grid", grid, "boundary grid size");
    app.add_option("--k-max", k_max, "eigenvalue / coefficient count");
    app.add_option("--alpha", alphas, "oscillation amplitudes (or Holder exponent)");
    app.add_option("--sweep", sweep, "ladder range, e.g. N=4..64 (doubling)");
    app.add_option("--eps", eps, "sharpness exponent parameter");
    app.add_option("--teeth", teeth, "tooth count for a single homogenization run");
    app.add_option("--mesh", mesh, "FEM resolution r,s (radial layers, samples per tooth)");
    app.add_option("--out", out, "output path prefix (writes .csv and .json)");
    app.add_option("--seed", seed, "seed for randomized sweeps");
    app.add_option("--tol", tol, "tolerance for asserted limits");

    auto* sc_spectrum = app.add_subcommand("spectrum", "weighted disk eigenvalues");
    auto* sc_deficit = app.add_subcommand("deficit-sweep", "deficit vs oscillation brackets");
    auto* sc_stability = app.add_subcommand("stability", "deficit-to-distance ratios");
    auto* sc_reconstruct = app.add_subcommand("reconstruct", "conformal map from a weight");
    auto* sc_homogenize = app.add_subcommand("homogenize", "sawtooth tooth-count ladder");
    auto* sc_instability = app.add_subcommand("instability", "oscillatory map ladder");
    auto* sc_sharpness = app.add_subcommand("sharpness", "deficit vs Hausdorff exponent");
    for (auto* sc : {sc_spectrum, sc_deficit, sc_stability, sc_reconstruct,
                     sc_homogenize, sc_instability, sc_sharpness})
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : STK_ERR_INVALID;
    }

    try {
        if (tol <= 0.0) throw CliError(STK_ERR_INVALID, "tolerance must be positive");
        if (alphas.empty()) alphas = {0.05, 0.1, 0.2, 0.4};
        int mesh_r = 12, mesh_s = 16;
        if (std::sscanf(mesh.c_str(), "%d,%d", &mesh_r, &mesh_s) != 2 || mesh_r < 1 ||
            mesh_s < 16)
            throw CliError(STK_ERR_INVALID, "--mesh must be r,s with r >= 1, s >= 16");

        if (sc_spectrum->parsed()) {
            if (out.empty()) out = "spectrum";
            return cmd_spectrum(weight, grid, n_modes, k_max, out);
        }
        if (sc_deficit->parsed()) {
            if (out.empty()) out = "deficit-sweep";
            if (sweep.empty()) sweep = "N=4..64";
            return cmd_deficit_sweep(alphas, sweep, grid, out);
        }
        if (sc_stability->parsed()) {
            if (out.empty()) out = "stability";
            int count = 50;
            if (!sweep.empty()) {
                const auto dots = sweep.find("..");
                if (dots == std::string::npos)
                    throw CliError(STK_ERR_INVALID, "sweep must look like s=1..count");
                count = std::stoi(sweep.substr(dots + 2));
            }
            return cmd_stability(seed, count, grid, out);
        }
        if (sc_reconstruct->parsed()) {
            if (out.empty()) out = "reconstruct";
            const double alpha = alphas.size() == 1 ? alphas[0] : 1.0;
            return cmd_reconstruct(weight, grid, std::max(k_max, 2), alpha, out);
        }
        if (sc_homogenize->parsed()) {
            if (out.empty()) out = "homogenize";
            if (sweep.empty()) sweep = "k=8.." + std::to_string(teeth);
            if (weight == "1") weight = "1.2 + 0.1*cos(2*t)";
            return cmd_homogenize(weight, grid, sweep, mesh_r, mesh_s, tol, out);
        }
        if (sc_instability->parsed()) {
            if (out.empty()) out = "instability";
            if (sweep.empty()) sweep = "n=4..64";
            return cmd_instability(sweep, grid, tol > 0.02 ? tol : 0.05, out);
        }
        if (sc_sharpness->parsed()) {
            if (out.empty()) out = "sharpness";
            if (sweep.empty()) sweep = "n=8..64";
            return cmd_sharpness(eps, sweep, grid, out);
        }
        throw CliError(STK_ERR_INVALID, "no subcommand selected");
    } catch (const CliError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return e.code;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return STK_ERR_NUMERICAL;
    }
}
