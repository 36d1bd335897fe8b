#ifndef STEKLOV_H
#define STEKLOV_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Mirrors the CLI exit-code convention. */
#define STK_OK 0
#define STK_ERR_INVALID 2
#define STK_ERR_NUMERICAL 3

/* Thread-local message for the last failing call in this thread. */
const char* stk_last_error(void);

/* Opaque handles. */
typedef struct stk_weight stk_weight;   /* positive boundary density on the circle */
typedef struct stk_map stk_map;         /* conformal map of the unit disk */
typedef struct stk_curve stk_curve;     /* closed star-shaped boundary polyline */

/* ---- weights ---------------------------------------------------------- */

/* spec: trig-polynomial expression ("1 + 0.2*cos(8*t)", optionally exp(...))
 * or a path to a coefficient CSV with header n,re,im. */
int stk_weight_parse(const char* spec, int grid_size, stk_weight** out);
int stk_weight_from_samples(const double* samples, int count, stk_weight** out);
/* Seeded 1 + p with given bandwidth and ||p||_inf = amplitude; zero_first
 * additionally forces hat p(0) = hat p(+-1) = 0. */
int stk_weight_random(uint64_t seed, int bandwidth, double amplitude, int grid_size,
                      int zero_first, stk_weight** out);
/* Theta_n = 1 + n^{-(1-eps)/eps} cos(n t). */
int stk_weight_sharpness(int n, double eps, int grid_size, stk_weight** out);
void stk_weight_free(stk_weight* w);

int stk_weight_grid(const stk_weight* w, int* out);
int stk_weight_mean(const stk_weight* w, double* out);
int stk_weight_minmax(const stk_weight* w, double* out_min, double* out_max);
/* Fourier coefficient hat Theta(n). */
int stk_weight_coeff(const stk_weight* w, int n, double* out_re, double* out_im);
int stk_weight_bandwidth(const stk_weight* w, int* out);
int stk_weight_value_at(const stk_weight* w, double t, double* out);

int stk_weight_normalize_mean(const stk_weight* w, stk_weight** out);
/* Disk-automorphism pullback by zeta (|zeta| < 1); mass preserving. */
int stk_weight_mobius(const stk_weight* w, double zeta_re, double zeta_im,
                      stk_weight** out);
/* Centering gauge: returns the pullback with hat Theta(+-1) = 0 and the
 * parameter that achieves it. */
int stk_weight_normalize_center(const stk_weight* w, stk_weight** out,
                                double* out_zeta_re, double* out_zeta_im);

/* ||Theta - 1|| in H^{-1/2}, L^inf, and the C^{0,alpha} norm of Theta. */
int stk_weight_hminus_half(const stk_weight* w, double* out);
int stk_weight_sup_distance(const stk_weight* w, double* out);
int stk_weight_holder_norm(const stk_weight* w, double alpha, double* out);

/* ---- weighted Steklov spectrum on the disk ---------------------------- */

/* First n_eigs eigenvalues (ascending, sigma_0 = 0) of the Fourier-Galerkin
 * discretization with n_modes. n_modes <= 0 picks a bandwidth-based default. */
int stk_spectrum(const stk_weight* w, int n_modes, int n_eigs, double* out_eigs);
/* sigma_1 with the mode count doubled until 1e-10 relative convergence. */
int stk_sigma1(const stk_weight* w, double* out);
/* 1/sigma_1(D, Theta/mean) - 1, the normalized spectral deficit. */
int stk_deficit(const stk_weight* w, double* out);

/* ---- conformal maps --------------------------------------------------- */

/* Map with |g'| = Theta on the boundary (analytic completion of the
 * harmonic extension of log Theta), g(0) = 0, g'(0) > 0. */
int stk_map_reconstruct(const stk_weight* w, int n_terms, stk_map** out);
/* g'(z) = sum coeffs[k] z^k, constant term nonzero. Interleaved re,im. */
int stk_map_from_deriv(const double* coeffs_interleaved, int n_terms, stk_map** out);
void stk_map_free(stk_map* m);

int stk_map_n_terms(const stk_map* m, int* out);
/* Power-series coefficients of g itself (count = n_terms + 1, g(0) = 0),
 * interleaved re,im into out (capacity 2*(n_terms+1)). */
int stk_map_coeffs(const stk_map* m, double* out_interleaved);
int stk_map_perimeter(const stk_map* m, double* out);
/* sup (1-|z|^2)|z g''/g'|; <= 1 certifies injectivity. */
int stk_map_univalence_margin(const stk_map* m, double* out);
/* C^{0,alpha} norm of log|g'| on the boundary. */
int stk_map_apriori_norm(const stk_map* m, double alpha, double* out);
/* |g'| on the boundary as a weight (m-point grid). */
int stk_map_boundary_weight(const stk_map* m, int grid_size, stk_weight** out);
/* Boundary trace as a closed curve with m points. */
int stk_map_boundary_curve(const stk_map* m, int grid_size, stk_curve** out);

/* Oscillatory perturbation g_n(z) = g(z) + z^{n+1} f(z)/(n+1) whose boundary
 * measure homogenizes to the constant written to out_lambda. Requires
 * max|g'| < (4/pi) min|g'|. */
int stk_map_instability(const stk_map* base, int n, stk_map** out,
                        double* out_lambda);

/* ---- boundary curves and the homogenization construction -------------- */

int stk_curve_circle(int n_points, double radius, stk_curve** out);
int stk_curve_from_points(const double* xy_interleaved, int n_points, stk_curve** out);
void stk_curve_free(stk_curve* c);

int stk_curve_n_points(const stk_curve* c, int* out);
int stk_curve_points(const stk_curve* c, double* out_xy_interleaved);
int stk_curve_perimeter(const stk_curve* c, double* out);
/* Translation-minimized Hausdorff distance to the closed unit disk. */
int stk_curve_hausdorff_to_disk(const stk_curve* c, double* out);
/* Line integral of a test function against arc length. */
typedef double (*stk_test_fn)(double x, double y, void* ctx);
int stk_curve_pairing(const stk_curve* c, stk_test_fn fn, void* ctx, double* out);

/* Sawtooth boundary {x + sqrt(Theta^2-1) d_eps nu} over a star-shaped base
 * with `teeth` teeth (even), eps = |base|/teeth. smooth rounds the tooth
 * corners; centered oscillates about the base curve. */
int stk_curve_oscillating(const stk_curve* base, const stk_weight* w, int teeth,
                          int samples_per_tooth, int smooth, int centered,
                          stk_curve** out);

/* ---- finite elements -------------------------------------------------- */

/* Steklov eigenvalues of the region bounded by the curve: P1 elements on a
 * ring mesh with n_radial layers graded toward the boundary, interior dofs
 * eliminated. boundary_weight: one value per curve point, or NULL for 1. */
int stk_fem_steklov(const stk_curve* c, int n_radial, double grading,
                    const double* boundary_weight, int n_eigs, double* out_eigs);

/* ---- scalar helpers --------------------------------------------------- */

/* P(a) = average of sqrt(1 + a^2 + 2a cos t); P(0)=1, P(1)=4/pi. */
int stk_p_function(double a, double* out);
int stk_p_inverse(double y, double* out);

#ifdef __cplusplus
}
#endif

#endif
