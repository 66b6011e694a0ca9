// quadrature.hpp: adaptive Gauss-Kronrod integration and half-period
// segmentation for Fourier-type integrals over the bath spectrum.

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace clausius::quadrature {

using Integrand = std::function<double(double)>;

struct Result {
    double value = 0.0;
    double error = 0.0;
    double l1 = 0.0; // integral of |f|, the scale the relative tolerance refers to
};

inline constexpr double default_rel_tol = 1e-10;

/// Globally adaptive G7/K15 on [a, b]: the subinterval with the largest error
/// is bisected until the summed error is below rel_tol times the L1 norm or
/// below abs_tol. Throws numerical-failure if it is still above both 1e-6 of
/// the L1 norm and abs_tol after max_intervals subintervals.
Result adaptive(const Integrand& f, double a, double b, double rel_tol = default_rel_tol, double abs_tol = 0.0,
                std::size_t max_intervals = 4096);

/// Adaptive integration over consecutive breakpoints, summed left to right.
Result piecewise(const Integrand& f, std::span<const double> breakpoints,
                 double rel_tol = default_rel_tol);

enum class Oscillator { sine, cosine };

/// int_0^w_max f(w) osc(w tau) dw, split at the zeros of osc(w tau) and at the
/// extra breakpoints (feature scales of f) that fall inside (0, w_max).
double oscillatory_finite(const Integrand& f, double tau, Oscillator osc, double w_max,
                          std::span<const double> extra_breakpoints = {},
                          double rel_tol = default_rel_tol);

/// The same integral by GSL's QAWO rule (Clenshaw-Curtis with modified
/// Chebyshev moments of the oscillatory weight) on each interval between
/// breakpoints. Cost does not grow with tau. abs_tol applies per interval.
double fourier_finite(const Integrand& f, double tau, Oscillator osc, double w_max,
                      std::span<const double> extra_breakpoints = {}, double rel_tol = default_rel_tol,
                      double abs_tol = 0.0);

/// int_0^inf f(w) osc(w tau) dw for slowly decaying f (conditionally
/// convergent). Segments up to w_direct are summed directly; the alternating
/// half-period tail is summed by Wynn's epsilon algorithm.
double oscillatory_infinite(const Integrand& f, double tau, Oscillator osc, double w_direct,
                            std::span<const double> extra_breakpoints = {},
                            double rel_tol = default_rel_tol, int tail_terms = 40);

/// Wynn epsilon extrapolation of a sequence of partial sums.
double wynn_epsilon(std::span<const double> partial_sums);

} // namespace clausius::quadrature
