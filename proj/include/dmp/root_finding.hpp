#pragma once

#include <cmath>
#include <limits>
#include <utility>

namespace dmp {

struct RootResult {
    double root = 0.0;
    double residual = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Brent's method on a sign-changing bracket [lo, hi].
///
/// Stops once |f(x)| <= f_tol or the bracket has shrunk to a few ulps. Inverse
/// quadratic / secant steps are taken only while they stay inside the bracket
/// and shrink it fast enough; otherwise the step is a bisection. The caller must
/// supply f(lo) and f(hi) of opposite sign.
template <class F>
RootResult brent(F&& f, double lo, double hi, double f_lo, double f_hi, double f_tol, int max_iter = 300) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    double a = lo, b = hi, fa = f_lo, fb = f_hi;
    if (fa == 0.0) return {a, fa, 0, true};
    if (fb == 0.0) return {b, fb, 0, true};

    double c = a, fc = fa, d = b - a, e = d;
    RootResult out;
    for (int it = 1; it <= max_iter; ++it) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double x_tol = 2.0 * eps * std::fabs(b) + std::numeric_limits<double>::min();
        const double m = 0.5 * (c - b);
        out = {b, fb, it, false};
        if (std::fabs(fb) <= f_tol) {
            out.converged = true;
            return out;
        }
        if (std::fabs(m) <= x_tol) {
            // Bracket collapsed to adjacent doubles; the caller judges the residual.
            out.converged = std::fabs(fb) <= f_tol;
            return out;
        }

        if (std::fabs(e) >= x_tol && std::fabs(fa) > std::fabs(fb)) {
            double p, q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                const double qa = fa / fc, r = fb / fc;
                p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0)
                q = -q;
            else
                p = -p;
            if (2.0 * p < std::min(3.0 * m * q - std::fabs(x_tol * q), std::fabs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        } else {
            d = m;
            e = m;
        }
        a = b;
        fa = fb;
        b += std::fabs(d) > x_tol ? d : (m > 0.0 ? x_tol : -x_tol);
        fb = f(b);
    }
    out = {b, fb, max_iter, std::fabs(fb) <= f_tol};
    return out;
}

}  // namespace dmp
