#ifndef LGC_SPECFUN_HPP
#define LGC_SPECFUN_HPP

#include <complex>

// Special functions needed by the closed-form mode evaluators. All functions
// are pure and reentrant.
namespace lgc::specfun {

// Generalized Laguerre polynomial L_p^a(x) by upward recurrence in p.
// Requires p >= 0, a >= 0 and finite x.
double assoc_laguerre(int p, int a, double x);

// Modified Bessel function of the first kind, integer order nu >= 0, x >= 0.
// Power series below the crossover, Miller downward recurrence above it.
double bessel_i(int nu, double x);

// exp(-x) * I_nu(x); stays finite for large x.
double bessel_i_scaled(int nu, double x);

// Bessel function J_nu of complex argument via its power series with
// term-ratio stopping. Working range |z| <= bessel_j_max_abs; a range_error
// is raised beyond it. Near-real arguments above |z| ~ 15 lose digits to
// series cancellation; see the verification notes in the tests.
std::complex<double> bessel_j_complex(int nu, std::complex<double> z);

inline constexpr double bessel_j_max_abs = 60.0;
inline constexpr int bessel_j_term_cap = 500;

// log Gamma(x) for x > 0 (Lanczos).
double ln_gamma(double x);

// log n! = ln_gamma(n + 1).
double ln_factorial(int n);

// sum_m z^{2m} / (m! Gamma(m + nu + 1)) for real nu > -1, z >= 0.
// Equals I_nu(2z) / z^nu; finite at z = 0. Used for the normalizers of the
// Barut-Girardello families whose order 2k-1 can be a half-integer.
double scaled_bessel_series(double nu, double z);

} // namespace lgc::specfun

#endif
