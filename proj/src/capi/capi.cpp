#include "steklov/steklov.h"

#include "core/conformal.hpp"
#include "core/constructions.hpp"
#include "core/errors.hpp"
#include "core/fem.hpp"
#include "core/galerkin.hpp"
#include "core/weight.hpp"
#include "core/weightspec.hpp"

#include <cmath>
#include <cstring>
#include <new>
#include <numbers>
#include <string>
#include <utility>

struct stk_weight {
    steklov::BoundaryWeight w;
};
struct stk_map {
    steklov::ConformalMap m;
};
struct stk_curve {
    steklov::StarBoundary c;
};

namespace {

thread_local std::string g_last_error;

int set_error(int code, const char* what) {
    g_last_error = what;
    return code;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        return STK_OK;
    } catch (const steklov::invalid_input& e) {
        return set_error(STK_ERR_INVALID, e.what());
    } catch (const std::invalid_argument& e) {
        return set_error(STK_ERR_INVALID, e.what());
    } catch (const std::bad_alloc& e) {
        return set_error(STK_ERR_NUMERICAL, e.what());
    } catch (const std::exception& e) {
        return set_error(STK_ERR_NUMERICAL, e.what());
    }
}

int require(bool cond, const char* msg) {
    return cond ? STK_OK : set_error(STK_ERR_INVALID, msg);
}

} // namespace

extern "C" {

const char* stk_last_error(void) { return g_last_error.c_str(); }

/* ---- weights ---------------------------------------------------------- */

int stk_weight_parse(const char* spec, int grid_size, stk_weight** out) {
    if (int rc = require(spec && out, "null argument")) return rc;
    return guarded([&] { *out = new stk_weight{steklov::parse_weight(spec, grid_size)}; });
}

int stk_weight_from_samples(const double* samples, int count, stk_weight** out) {
    if (int rc = require(samples && out && count > 0, "null or empty sample array")) return rc;
    return guarded([&] {
        *out = new stk_weight{steklov::BoundaryWeight::from_samples(
            std::vector<double>(samples, samples + count))};
    });
}

int stk_weight_random(uint64_t seed, int bandwidth, double amplitude, int grid_size,
                      int zero_first, stk_weight** out) {
    if (int rc = require(out != nullptr, "null output")) return rc;
    return guarded([&] {
        *out = new stk_weight{
            steklov::random_weight(seed, bandwidth, amplitude, grid_size, zero_first != 0)};
    });
}

int stk_weight_sharpness(int n, double eps, int grid_size, stk_weight** out) {
    if (int rc = require(out != nullptr, "null output")) return rc;
    return guarded([&] { *out = new stk_weight{steklov::sharpness_weight(n, eps, grid_size)}; });
}

void stk_weight_free(stk_weight* w) { delete w; }

int stk_weight_grid(const stk_weight* w, int* out) {
    if (int rc = require(w && out, "null argument")) return rc;
    *out = w->w.grid();
    return STK_OK;
}

int stk_weight_mean(const stk_weight* w, double* out) {
    if (int rc = require(w && out, "null argument")) return rc;
    *out = w->w.mean();
    return STK_OK;
}

int stk_weight_minmax(const stk_weight* w, double* out_min, double* out_max) {
    if (int rc = require(w && out_min && out_max, "null argument")) return rc;
    *out_min = w->w.min_value();
    *out_max = w->w.max_value();
    return STK_OK;
}

int stk_weight_coeff(const stk_weight* w, int n, double* out_re, double* out_im) {
    if (int rc = require(w && out_re && out_im, "null argument")) return rc;
    const steklov::cplx c = w->w.coeff(n);
    *out_re = c.real();
    *out_im = c.imag();
    return STK_OK;
}

int stk_weight_bandwidth(const stk_weight* w, int* out) {
    if (int rc = require(w && out, "null argument")) return rc;
    *out = w->w.bandwidth();
    return STK_OK;
}

int stk_weight_value_at(const stk_weight* w, double t, double* out) {
    if (int rc = require(w && out, "null argument")) return rc;
    *out = w->w.value_at(t);
    return STK_OK;
}

int stk_weight_normalize_mean(const stk_weight* w, stk_weight** out) {
    if (int rc = require(w && out, "null argument")) return rc;
    return guarded([&] { *out = new stk_weight{steklov::normalize_mean(w->w)}; });
}

int stk_weight_mobius(const stk_weight* w, double zeta_re, double zeta_im,
                      stk_weight** out) {
    if (int rc = require(w && out, "null argument")) return rc;
    return guarded([&] {
        *out = new stk_weight{steklov::mobius_pullback(w->w, {zeta_re, zeta_im})};
    });
}

int stk_weight_normalize_center(const stk_weight* w, stk_weight** out,
                                double* out_zeta_re, double* out_zeta_im) {
    if (int rc = require(w && out, "null argument")) return rc;
    return guarded([&] {
        steklov::CenterResult res = steklov::normalize_center(w->w);
        if (out_zeta_re) *out_zeta_re = res.zeta.real();
        if (out_zeta_im) *out_zeta_im = res.zeta.imag();
        *out = new stk_weight{std::move(res.weight)};
    });
}

int stk_weight_hminus_half(const stk_weight* w, double* out) {
    if (int rc = require(w && out, "null argument")) return rc;
    return guarded([&] { *out = steklov::hminus_half_distance(w->w); });
}

int stk_weight_sup_distance(const stk_weight* w, double* out) {
    if (int rc = require(w && out, "null argument")) return rc;
    return guarded([&] { *out = steklov::sup_distance(w->w); });
}

int stk_weight_holder_norm(const stk_weight* w, double alpha, double* out) {
    if (int rc = require(w && out, "null argument")) return rc;
    return guarded([&] { *out = steklov::holder_norm(w->w, alpha); });
}

/* ---- spectrum --------------------------------------------------------- */

int stk_spectrum(const stk_weight* w, int n_modes, int n_eigs, double* out_eigs) {
    if (int rc = require(w && out_eigs && n_eigs > 0, "null argument")) return rc;
    return guarded([&] {
        const int modes = n_modes > 0 ? n_modes : steklov::default_n_modes(w->w);
        const steklov::WeightedSpectrum spec =
            steklov::solve_spectrum(steklov::assemble(w->w, modes), n_eigs);
        if (static_cast<int>(spec.eigenvalues.size()) < n_eigs)
            throw steklov::invalid_input("stk_spectrum: too many eigenvalues requested");
        std::memcpy(out_eigs, spec.eigenvalues.data(), sizeof(double) * n_eigs);
    });
}

int stk_sigma1(const stk_weight* w, double* out) {
    if (int rc = require(w && out, "null argument")) return rc;
    return guarded([&] { *out = steklov::sigma1_converged(w->w); });
}

int stk_deficit(const stk_weight* w, double* out) {
    if (int rc = require(w && out, "null argument")) return rc;
    return guarded([&] { *out = steklov::deficit(steklov::normalize_mean(w->w)); });
}

/* ---- conformal maps --------------------------------------------------- */

int stk_map_reconstruct(const stk_weight* w, int n_terms, stk_map** out) {
    if (int rc = require(w && out, "null argument")) return rc;
    return guarded([&] { *out = new stk_map{steklov::reconstruct(w->w, n_terms)}; });
}

int stk_map_from_deriv(const double* coeffs_interleaved, int n_terms, stk_map** out) {
    if (int rc = require(coeffs_interleaved && out && n_terms > 0, "null or empty coefficients"))
        return rc;
    return guarded([&] {
        std::vector<steklov::cplx> c(static_cast<size_t>(n_terms));
        for (int k = 0; k < n_terms; ++k)
            c[static_cast<size_t>(k)] = {coeffs_interleaved[2 * k],
                                         coeffs_interleaved[2 * k + 1]};
        *out = new stk_map{steklov::ConformalMap::from_deriv(c)};
    });
}

void stk_map_free(stk_map* m) { delete m; }

int stk_map_n_terms(const stk_map* m, int* out) {
    if (int rc = require(m && out, "null argument")) return rc;
    *out = m->m.n_terms();
    return STK_OK;
}

int stk_map_coeffs(const stk_map* m, double* out_interleaved) {
    if (int rc = require(m && out_interleaved, "null argument")) return rc;
    const auto& c = m->m.map_coeffs();
    for (size_t k = 0; k < c.size(); ++k) {
        out_interleaved[2 * k] = c[k].real();
        out_interleaved[2 * k + 1] = c[k].imag();
    }
    return STK_OK;
}

int stk_map_perimeter(const stk_map* m, double* out) {
    if (int rc = require(m && out, "null argument")) return rc;
    return guarded([&] { *out = steklov::perimeter(m->m); });
}

int stk_map_univalence_margin(const stk_map* m, double* out) {
    if (int rc = require(m && out, "null argument")) return rc;
    return guarded([&] { *out = steklov::univalence_margin(m->m); });
}

int stk_map_apriori_norm(const stk_map* m, double alpha, double* out) {
    if (int rc = require(m && out, "null argument")) return rc;
    return guarded([&] { *out = steklov::apriori_norm(m->m, alpha); });
}

int stk_map_boundary_weight(const stk_map* m, int grid_size, stk_weight** out) {
    if (int rc = require(m && out && grid_size > 3, "null argument or grid too small"))
        return rc;
    return guarded([&] {
        std::vector<double> samples(static_cast<size_t>(grid_size));
        for (int j = 0; j < grid_size; ++j) {
            const double t = 2.0 * std::numbers::pi * j / grid_size;
            samples[static_cast<size_t>(j)] = std::abs(m->m.eval_deriv(std::polar(1.0, t)));
        }
        *out = new stk_weight{steklov::BoundaryWeight::from_samples(std::move(samples))};
    });
}

int stk_map_boundary_curve(const stk_map* m, int grid_size, stk_curve** out) {
    if (int rc = require(m && out, "null argument")) return rc;
    return guarded([&] {
        *out = new stk_curve{steklov::StarBoundary::from_points(
            steklov::boundary_curve(m->m, grid_size))};
    });
}

int stk_map_instability(const stk_map* base, int n, stk_map** out, double* out_lambda) {
    if (int rc = require(base && out, "null argument")) return rc;
    return guarded([&] {
        steklov::InstabilityMap res = steklov::instability_map(base->m, n);
        if (out_lambda) *out_lambda = res.lambda;
        *out = new stk_map{std::move(res.map)};
    });
}

/* ---- curves ----------------------------------------------------------- */

int stk_curve_circle(int n_points, double radius, stk_curve** out) {
    if (int rc = require(out != nullptr, "null output")) return rc;
    return guarded([&] { *out = new stk_curve{steklov::StarBoundary::circle(n_points, radius)}; });
}

int stk_curve_from_points(const double* xy_interleaved, int n_points, stk_curve** out) {
    if (int rc = require(xy_interleaved && out && n_points > 2, "null or too few points"))
        return rc;
    return guarded([&] {
        std::vector<steklov::Vec2> pts(static_cast<size_t>(n_points));
        for (int i = 0; i < n_points; ++i)
            pts[static_cast<size_t>(i)] = {xy_interleaved[2 * i], xy_interleaved[2 * i + 1]};
        *out = new stk_curve{steklov::StarBoundary::from_points(std::move(pts))};
    });
}

void stk_curve_free(stk_curve* c) { delete c; }

int stk_curve_n_points(const stk_curve* c, int* out) {
    if (int rc = require(c && out, "null argument")) return rc;
    *out = static_cast<int>(c->c.points().size());
    return STK_OK;
}

int stk_curve_points(const stk_curve* c, double* out_xy_interleaved) {
    if (int rc = require(c && out_xy_interleaved, "null argument")) return rc;
    const auto& pts = c->c.points();
    for (size_t i = 0; i < pts.size(); ++i) {
        out_xy_interleaved[2 * i] = pts[i].x;
        out_xy_interleaved[2 * i + 1] = pts[i].y;
    }
    return STK_OK;
}

int stk_curve_perimeter(const stk_curve* c, double* out) {
    if (int rc = require(c && out, "null argument")) return rc;
    *out = c->c.perimeter();
    return STK_OK;
}

int stk_curve_hausdorff_to_disk(const stk_curve* c, double* out) {
    if (int rc = require(c && out, "null argument")) return rc;
    return guarded([&] {
        *out = steklov::hausdorff_to_disk(std::span<const steklov::Vec2>(c->c.points()));
    });
}

int stk_curve_pairing(const stk_curve* c, stk_test_fn fn, void* ctx, double* out) {
    if (int rc = require(c && fn && out, "null argument")) return rc;
    return guarded([&] {
        *out = steklov::measure_pairing(c->c,
                                        [&](double x, double y) { return fn(x, y, ctx); });
    });
}

int stk_curve_oscillating(const stk_curve* base, const stk_weight* w, int teeth,
                          int samples_per_tooth, int smooth, int centered,
                          stk_curve** out) {
    if (int rc = require(base && w && out, "null argument")) return rc;
    return guarded([&] {
        steklov::OscillationOptions opts;
        if (samples_per_tooth > 0) opts.samples_per_tooth = samples_per_tooth;
        opts.smooth = smooth != 0;
        opts.centered = centered != 0;
        *out = new stk_curve{steklov::oscillating_domain(base->c, w->w, teeth, opts)};
    });
}

/* ---- finite elements -------------------------------------------------- */

int stk_fem_steklov(const stk_curve* c, int n_radial, double grading,
                    const double* boundary_weight, int n_eigs, double* out_eigs) {
    if (int rc = require(c && out_eigs && n_eigs > 0, "null argument")) return rc;
    return guarded([&] {
        const steklov::Mesh mesh =
            steklov::build_mesh(c->c, n_radial, grading > 0.0 ? grading : 1.2);
        std::vector<double> bw;
        if (boundary_weight)
            bw.assign(boundary_weight, boundary_weight + mesh.n_boundary);
        const steklov::FemSpectrum spec =
            steklov::solve_steklov_fem(mesh, std::move(bw), n_eigs);
        std::memcpy(out_eigs, spec.eigenvalues.data(), sizeof(double) * n_eigs);
    });
}

/* ---- scalar helpers --------------------------------------------------- */

int stk_p_function(double a, double* out) {
    if (int rc = require(out != nullptr, "null output")) return rc;
    return guarded([&] { *out = steklov::p_function(a); });
}

int stk_p_inverse(double y, double* out) {
    if (int rc = require(out != nullptr, "null output")) return rc;
    return guarded([&] { *out = steklov::p_inverse(y); });
}

} // extern "C"
