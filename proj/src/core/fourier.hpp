#ifndef STEKLOV_FOURIER_HPP
#define STEKLOV_FOURIER_HPP

#include <complex>
#include <span>
#include <vector>

namespace steklov {

using cplx = std::complex<double>;

// Finitely supported two-sided Fourier coefficient sequence on the unit
// circle, together with the uniform grid size it was sampled from.
// Grid convention everywhere: t_j = 2*pi*j/m, j = 0..m-1.
class FourierSeries {
public:
    FourierSeries() = default;
    FourierSeries(int n_max, int grid_size);

    int n_max() const { return n_max_; }
    int grid_size() const { return grid_size_; }

    cplx coeff(int n) const;
    void set_coeff(int n, cplx value);

    // True when coeff(-n) == conj(coeff(n)) for all n, i.e. the series
    // represents a real function.
    bool is_real_symmetric(double tol = 1e-9) const;

    // Largest |n| with |coeff(n)| above tol relative to the largest coefficient.
    int bandwidth(double rel_tol = 1e-13) const;

private:
    int n_max_ = 0;
    int grid_size_ = 0;
    std::vector<cplx> c_; // index n + n_max_
};

// Trapezoid-rule Fourier coefficients of samples on the uniform grid,
// for |n| <= floor((m-1)/2). Throws invalid_input for m < 2.
FourierSeries analyze(std::span<const double> samples);
FourierSeries analyze(std::span<const cplx> samples);

// Pointwise evaluation sum_n coeff(n) e^{i n t_j} on the m-point grid.
// Throws invalid_input when m < 2*n_max+1 (aliasing).
std::vector<cplx> synthesize(const FourierSeries& series, int m);

// Same, discarding imaginary parts (valid for real-symmetric series).
std::vector<double> synthesize_real(const FourierSeries& series, int m);

// Evaluation at a single angle.
cplx eval_series(const FourierSeries& series, double t);

// H^s seminorm: sqrt(sum_{n != 0} |n|^{2s} |coeff(n)|^2).
double sobolev_norm(const FourierSeries& series, double s);

// Harmonic extension sum_n coeff(n) r^{|n|} e^{int}. Requires r in [0,1).
cplx harmonic_extend(const FourierSeries& series, double r, double t);

// Boundary conjugate function: coeff(n) -> -i*sign(n)*coeff(n), coeff(0) -> 0.
FourierSeries conjugate_series(const FourierSeries& series);

// Copy restricted to |n| <= n_max.
FourierSeries truncate_series(const FourierSeries& series, int n_max);

// Grid estimate of the C^{0,alpha} seminorm over the circle, distances
// measured in arc length. Lower bound of the true seminorm; converges
// under grid refinement. alpha must lie in (0,1].
double holder_seminorm(std::span<const double> samples, double alpha);

} // namespace steklov

#endif
