#pragma once

#include <cmath>
#include <cstddef>
#include <limits>

#include "comptonlab/errors.hpp"

namespace comptonlab::numerics {

// Bracketed bisection. Requires f(lo) and f(hi) of opposite sign (or an
// endpoint root); halves [lo, hi] until its width drops below xtol.
template <class F>
double bisect_root(F&& f, double lo, double hi, double xtol,
                   std::size_t max_iter = 200) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo < 0.0) == (fhi < 0.0))
        throw tolerance_error("bisect_root: interval does not bracket a sign change");
    for (std::size_t i = 0; i < max_iter && (hi - lo) > xtol; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if (fmid == 0.0) return mid;
        if ((fmid < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Golden-section search for the minimum of a unimodal function on [lo, hi].
template <class F>
double golden_min(F&& f, double lo, double hi, double xtol) {
    constexpr double invphi = 0.6180339887498949;   // (sqrt(5)-1)/2
    constexpr double invphi2 = 0.3819660112501051;  // 1 - invphi
    double width = hi - lo;
    double x1 = lo + invphi2 * width;
    double x2 = lo + invphi * width;
    double f1 = f(x1);
    double f2 = f(x2);
    while (width > xtol) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            width = hi - lo;
            x1 = lo + invphi2 * width;
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            width = hi - lo;
            x2 = lo + invphi * width;
            f2 = f(x2);
        }
    }
    return 0.5 * (lo + hi);
}

namespace detail {

// 7-point Gauss / 15-point Kronrod pair on [-1, 1].
// Column layout: abscissa, Gauss weight, Kronrod weight.
inline constexpr double g7k15_nodes[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0,               0.204432940075298},
    {0.586087235467691, 0.0,               0.169004726639267},
    {0.864864423359769, 0.0,               0.104790010322250},
    {0.991455371120813, 0.0,               0.022935322010529},
};

template <class F>
double g7k15(F& f, double a, double b, double& err) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fmid = f(mid);
    double g7 = g7k15_nodes[0][1] * fmid;
    double k15 = g7k15_nodes[0][2] * fmid;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * g7k15_nodes[i][0];
        const double fsum = f(mid + dx) + f(mid - dx);
        g7 += g7k15_nodes[i][1] * fsum;
        k15 += g7k15_nodes[i][2] * fsum;
    }
    g7 *= half;
    k15 *= half;
    err = std::abs(k15 - g7);
    return k15;
}

template <class F>
double integrate_rec(F& f, double a, double b, double abs_tol, int depth) {
    double err = 0.0;
    const double value = g7k15(f, a, b, err);
    if (err <= abs_tol || (b - a) <= std::numeric_limits<double>::epsilon() * std::abs(a))
        return value;
    if (depth <= 0)
        throw tolerance_error("integrate: adaptive refinement did not converge");
    const double mid = 0.5 * (a + b);
    return integrate_rec(f, a, mid, 0.5 * abs_tol, depth - 1) +
           integrate_rec(f, mid, b, 0.5 * abs_tol, depth - 1);
}

} // namespace detail

// Adaptive Gauss-Kronrod quadrature of f over [a, b] to an absolute tolerance.
template <class F>
double integrate(F&& f, double a, double b, double abs_tol) {
    if (!(b > a)) return 0.0;
    return detail::integrate_rec(f, a, b, abs_tol, 48);
}

} // namespace comptonlab::numerics
