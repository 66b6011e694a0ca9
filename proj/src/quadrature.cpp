#include "clausius/quadrature.hpp"

#include "clausius/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

namespace clausius::quadrature {

namespace {

// One G7/K15 pass on [a, b]. The rule is applied to the map onto [-1, 1] so
// the error estimate comes back in the same units as the value.
Result kronrod_pass(const Integrand& f, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    auto g = [&f, half, mid](double u) { return f(mid + half * u); };
    Result r;
    r.value = half * boost::math::quadrature::gauss_kronrod<double, 15>::integrate(g, -1.0, 1.0, 0, 0.0, &r.error, &r.l1);
    r.error *= std::abs(half);
    r.l1 *= std::abs(half);
    return r;
}

struct Piece {
    double a, b;
    Result r;
};

} // namespace

Result adaptive(const Integrand& f, double a, double b, double rel_tol, double abs_tol, std::size_t max_intervals) {
    Result total;
    if (a == b) {
        return total;
    }
    auto by_error = [](const Piece& x, const Piece& y) { return x.r.error < y.r.error; };
    std::vector<Piece> heap{{a, b, kronrod_pass(f, a, b)}};
    total = heap.front().r;
    auto settled = [&] {
        return total.error <= rel_tol * total.l1 || total.error <= abs_tol ||
               total.error <= 64.0 * std::numeric_limits<double>::epsilon() * total.l1;
    };
    while (!settled() && heap.size() < max_intervals) {
        std::pop_heap(heap.begin(), heap.end(), by_error);
        const Piece worst = heap.back();
        heap.pop_back();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            heap.push_back(worst);
            std::push_heap(heap.begin(), heap.end(), by_error);
            break;
        }
        for (const Piece& p : {Piece{worst.a, mid, kronrod_pass(f, worst.a, mid)}, Piece{mid, worst.b, kronrod_pass(f, mid, worst.b)}}) {
            heap.push_back(p);
            std::push_heap(heap.begin(), heap.end(), by_error);
        }
        // Re-sum rather than update incrementally so round-off does not accumulate.
        total = Result{};
        for (const Piece& p : heap) {
            total.value += p.r.value;
            total.error += p.r.error;
            total.l1 += p.r.l1;
        }
    }
    if (!std::isfinite(total.value)) {
        std::ostringstream msg;
        msg << "non-finite integral on [" << a << ", " << b << "]";
        throw error(errc::numerical_failure, msg.str());
    }
    if (total.error > abs_tol && total.error > 1e-6 * total.l1 + 64.0 * std::numeric_limits<double>::epsilon() * total.l1) {
        std::ostringstream msg;
        msg << "no convergence on [" << a << ", " << b << "]: estimate " << total.value << ", error " << total.error
            << ", L1 " << total.l1 << " after " << heap.size() << " subintervals";
        throw error(errc::numerical_failure, msg.str());
    }
    return total;
}

Result piecewise(const Integrand& f, std::span<const double> breakpoints, double rel_tol) {
    Result total;
    for (std::size_t i = 1; i < breakpoints.size(); ++i) {
        const Result r = adaptive(f, breakpoints[i - 1], breakpoints[i], rel_tol);
        total.value += r.value;
        total.error += r.error;
        total.l1 += r.l1;
    }
    return total;
}

namespace {

// k-th zero (k >= 1) of osc(w tau) on w > 0.
double zero_of(Oscillator osc, double tau, long k) {
    const double step = std::numbers::pi / tau;
    return osc == Oscillator::sine ? k * step : (k - 0.5) * step;
}

Integrand weighted(const Integrand& f, double tau, Oscillator osc) {
    if (osc == Oscillator::sine) {
        return [&f, tau](double w) { return f(w) * std::sin(w * tau); };
    }
    return [&f, tau](double w) { return f(w) * std::cos(w * tau); };
}

std::vector<double> merged_breakpoints(double lo, double hi, std::span<const double> extra) {
    std::vector<double> pts{lo, hi};
    for (double x : extra) {
        if (x > lo && x < hi) {
            pts.push_back(x);
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

} // namespace

double oscillatory_finite(const Integrand& f, double tau, Oscillator osc, double w_max,
                          std::span<const double> extra_breakpoints, double rel_tol) {
    tau = std::abs(tau);
    const Integrand g = tau == 0.0 ? (osc == Oscillator::sine ? Integrand([](double) { return 0.0; }) : f)
                                   : weighted(f, tau, osc);
    if (tau == 0.0 || zero_of(osc, tau, 1) >= w_max) {
        const auto pts = merged_breakpoints(0.0, w_max, extra_breakpoints);
        return piecewise(g, pts, rel_tol).value;
    }
    double sum = 0.0;
    double lo = 0.0;
    for (long k = 1; lo < w_max; ++k) {
        const double hi = std::min(zero_of(osc, tau, k), w_max);
        const auto pts = merged_breakpoints(lo, hi, extra_breakpoints);
        sum += piecewise(g, pts, rel_tol).value;
        lo = hi;
    }
    return sum;
}

double oscillatory_infinite(const Integrand& f, double tau, Oscillator osc, double w_direct,
                            std::span<const double> extra_breakpoints, double rel_tol, int tail_terms) {
    if (!(tau > 0.0)) {
        throw error(errc::invalid_parameter, "oscillatory_infinite needs tau > 0");
    }
    const Integrand g = weighted(f, tau, osc);
    double sum = 0.0;
    double lo = 0.0;
    long k = 1;
    for (; lo < w_direct; ++k) {
        const double hi = zero_of(osc, tau, k);
        const auto pts = merged_breakpoints(lo, hi, extra_breakpoints);
        sum += piecewise(g, pts, rel_tol).value;
        lo = hi;
    }
    std::vector<double> partial{sum};
    partial.reserve(static_cast<std::size_t>(tail_terms) + 1);
    for (int i = 0; i < tail_terms; ++i, ++k) {
        const double hi = zero_of(osc, tau, k);
        sum += adaptive(g, lo, hi, rel_tol).value;
        partial.push_back(sum);
        lo = hi;
    }
    return wynn_epsilon(partial);
}

double wynn_epsilon(std::span<const double> s) {
    if (s.empty()) {
        return 0.0;
    }
    // e_{-1} = 0, e_0 = s; e_{k+1}^{(n)} = e_{k-1}^{(n+1)} + 1 / (e_k^{(n+1)} - e_k^{(n)}).
    std::vector<double> prev(s.size() + 1, 0.0);
    std::vector<double> cur(s.begin(), s.end());
    double best = s.back();
    double best_err = s.size() > 1 ? std::abs(s[s.size() - 1] - s[s.size() - 2]) : 0.0;
    for (std::size_t k = 1; cur.size() > 1; ++k) {
        std::vector<double> next(cur.size() - 1);
        for (std::size_t n = 0; n + 1 < cur.size(); ++n) {
            const double diff = cur[n + 1] - cur[n];
            if (diff == 0.0) {
                return cur[n + 1];
            }
            next[n] = prev[n + 1] + 1.0 / diff;
        }
        prev = std::move(cur);
        cur = std::move(next);
        // Even columns hold the extrapolated limits; keep the most settled one.
        if (k % 2 == 0 && cur.size() >= 2 && std::isfinite(cur.back())) {
            const double err = std::abs(cur[cur.size() - 1] - cur[cur.size() - 2]);
            if (err < best_err) {
                best = cur.back();
                best_err = err;
            }
        }
    }
    return best;
}

namespace {

constexpr std::size_t qawo_limit = 2000;
constexpr std::size_t qawo_levels = 30;

struct GslWorkspace {
    std::unique_ptr<gsl_integration_workspace, decltype(&gsl_integration_workspace_free)> ws{
        gsl_integration_workspace_alloc(qawo_limit), &gsl_integration_workspace_free};
    std::unique_ptr<gsl_integration_qawo_table, decltype(&gsl_integration_qawo_table_free)> table{
        gsl_integration_qawo_table_alloc(1.0, 1.0, GSL_INTEG_COSINE, qawo_levels), &gsl_integration_qawo_table_free};
};

GslWorkspace& gsl_workspace() {
    static std::once_flag quiet;
    std::call_once(quiet, [] { gsl_set_error_handler_off(); });
    thread_local GslWorkspace w;
    return w;
}

double call_integrand(double x, void* params) { return (*static_cast<const Integrand*>(params))(x); }

} // namespace

double fourier_finite(const Integrand& f, double tau, Oscillator osc, double w_max,
                      std::span<const double> extra_breakpoints, double rel_tol, double abs_tol) {
    tau = std::abs(tau);
    const auto pts = merged_breakpoints(0.0, w_max, extra_breakpoints);
    if (tau == 0.0) {
        return osc == Oscillator::sine ? 0.0 : piecewise(f, pts, rel_tol).value;
    }
    GslWorkspace& w = gsl_workspace();
    gsl_function fn{&call_integrand, const_cast<Integrand*>(&f)};
    const auto kind = osc == Oscillator::sine ? GSL_INTEG_SINE : GSL_INTEG_COSINE;
    double sum = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const double lo = pts[i - 1];
        const double len = pts[i] - lo;
        gsl_integration_qawo_table_set(w.table.get(), tau, len, kind);
        double value = 0.0;
        double err = 0.0;
        const int status = gsl_integration_qawo(&fn, lo, abs_tol, rel_tol, qawo_limit, w.ws.get(), w.table.get(), &value, &err);
        if (status != GSL_SUCCESS && !(status == GSL_EROUND && (err <= 1e-6 * std::abs(value) || err <= abs_tol))) {
            std::ostringstream msg;
            msg << "QAWO failed on [" << lo << ", " << pts[i] << "] at tau = " << tau << ": " << gsl_strerror(status)
                << ", estimate " << value << ", error " << err;
            throw error(errc::numerical_failure, msg.str());
        }
        sum += value;
    }
    return sum;
}

} // namespace clausius::quadrature
