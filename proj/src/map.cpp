#include "emap/map.hpp"

#include <cmath>
#include <limits>

namespace emap {

namespace {

constexpr double overflow_log = 709.0;  // ln(DBL_MAX) ~ 709.78

// Real iteration helpers for the fixed-point solves.
double f_real(double x, double a) { return a * (x - (1.0 - a)) * std::exp(x + a); }
double df_real(double x, double a) { return a * std::exp(x + a) * (x + a); }

}  // namespace

double eval_f_logmag(cplx z, const Params& p) {
    const double x = z.real(), y = z.imag();
    const double cx = x - (1.0 - p.a);
    return std::log(p.a) + x + p.a + 0.5 * std::log(cx * cx + y * y);
}

cplx eval_f(cplx z, const Params& p) {
    const double lm = eval_f_logmag(z, p);
    if (lm > overflow_log) throw eval_overflow(lm);
    return p.a * (z - (1.0 - p.a)) * std::exp(z + p.a);
}

cplx eval_df(cplx z, const Params& p) {
    const double x = z.real(), y = z.imag();
    const double ax = x + p.a, ay = y;
    const double lm = std::log(p.a) + x + p.a + 0.5 * std::log(ax * ax + ay * ay);
    if (lm > overflow_log) throw eval_overflow(lm);
    return p.a * std::exp(z + p.a) * (z + p.a);
}

LogPolar eval_f_logpolar(cplx z, const Params& p) {
    const double x = z.real(), y = z.imag();
    const double cx = x - (1.0 - p.a);
    LogPolar out;
    if (cx == 0.0 && y == 0.0) {
        out.minus_infinity = true;
        out.logmag = -std::numeric_limits<double>::infinity();
        out.arg = 0.0;
        return out;
    }
    out.logmag = std::log(p.a) + x + p.a + 0.5 * std::log(cx * cx + y * y);
    out.arg = y + std::atan2(y, cx);
    return out;
}

double reduce_arg(double arg) {
    double r = std::remainder(arg, 2.0 * M_PI);
    if (r <= -M_PI) r += 2.0 * M_PI;
    return r;
}

std::pair<double, double> real_fixed_points(double a) {
    if (!(a >= 3.0)) throw domain_error("real_fixed_points: requires a >= 3");

    // p_a: unique root of f(x) - x in (-a, 1-a).  f(-a) = -a is the
    // superattracting fixed point, so start the bracket just right of -a.
    auto gp = [&](double x) { return f_real(x, a) - x; };
    double lo = -a + std::min(1e-3, 0.5 / a), hi = 1.0 - a;
    if (!(gp(lo) < 0.0 && gp(hi) > 0.0))
        throw domain_error("real_fixed_points: p_a bracket failure");
    for (int i = 0; i < 80 && hi - lo > 1e-14; ++i) {
        double mid = 0.5 * (lo + hi);
        (gp(mid) < 0.0 ? lo : hi) = mid;
    }
    double p = 0.5 * (lo + hi);
    p -= gp(p) / (df_real(p, a) - 1.0);
    p -= gp(p) / (df_real(p, a) - 1.0);

    // q_a: unique root of f(x) - p_a in (-inf, -a).  f decreases from 0- to -a
    // on that ray, so widen the left end until the sign flips.
    auto gq = [&](double x) { return f_real(x, a) - p; };
    double qhi = -a - std::min(1e-3, 0.5 / a);
    double qlo = -a - 1.0;
    int guard = 0;
    while (gq(qlo) < 0.0 && guard++ < 64) qlo -= 1.0;
    if (!(gq(qlo) > 0.0 && gq(qhi) < 0.0))
        throw domain_error("real_fixed_points: q_a bracket failure");
    for (int i = 0; i < 80 && qhi - qlo > 1e-14; ++i) {
        double mid = 0.5 * (qlo + qhi);
        (gq(mid) > 0.0 ? qlo : qhi) = mid;
    }
    double q = 0.5 * (qlo + qhi);
    q -= gq(q) / df_real(q, a);
    q -= gq(q) / df_real(q, a);

    return {q, p};
}

}  // namespace emap
