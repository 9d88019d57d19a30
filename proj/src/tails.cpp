#include "emap/tails.hpp"

#include <cmath>

#include "emap/partition.hpp"

namespace emap {

namespace {

constexpr double band_log_cut = 33.39;  // ln(pi) + 14 ln(10)

double zeta1(double x, const Params& p) {
    return curve_y(CurveId{CurveId::Kind::Zeta, 1}, x, p);
}
double eta1(double x, const Params& p) {
    return curve_y(CurveId{CurveId::Kind::Eta, 1}, x, p);
}

// Tail location at asymptote scale: 1-symbols ride the zeta curve, 0-symbols
// sit a band-width off the real axis.
cplx asym_tail_point(ExtSym t0, double x, const Params& p) {
    switch (t0) {
        case ExtSym::S02: return {x, 2.0 * M_PI * std::exp(-eval_f_logmag(cplx(x, 0.0), p))};
        case ExtSym::S01: return {x, -2.0 * M_PI * std::exp(-eval_f_logmag(cplx(x, 0.0), p))};
        case ExtSym::S12: return {x, zeta1(x, p)};
        case ExtSym::S11: return {x, -zeta1(x, p)};
    }
    return {x, 0.0};
}

}  // namespace

double choose_R(const Params& p) {
    for (int R = 5; R <= 50; ++R) {
        const double fr = p.a * (R - (1.0 - p.a)) * std::exp(R + p.a);
        if (!(fr > 100.0 * (R + 2.0 * M_PI))) continue;
        const auto [lmin, lmax] = annulus_bounds_log(static_cast<double>(R), p);
        const double ytop = zeta1(static_cast<double>(R), p);
        bool ordered = true;
        for (int i = 0; i <= 50 && ordered; ++i) {
            const double y = -ytop + 2.0 * ytop * i / 50.0;
            const double lm = eval_f_logmag(cplx(static_cast<double>(R), y), p);
            ordered = lm >= lmin - 1e-9 && lm <= lmax + 1e-9;
        }
        if (ordered) return static_cast<double>(R);
    }
    throw domain_error("choose_R: no admissible R in {5..50}");
}

double tail_asym_x(const Params& p) {
    double x = p.R;
    for (int i = 0; i < 400; ++i) {
        if (eval_f_logmag(cplx(x, 0.0), p) > band_log_cut) return x;
        x *= 1.25;
    }
    throw domain_error("tail_asym_x: grid exhausted");
}

cplx tail_point(const ASeq& t, double x, const Params& p) {
    if (!(x >= p.R)) throw domain_error("tail_point: x < R");
    if (t.base().all_zero_tail())
        throw domain_error("tail_point: sequence ends in all zeros");
    const ExtSym t0 = t.at(0);
    const double xa = tail_asym_x(p);
    if (x >= xa) return asym_tail_point(t0, x, p);

    // Solve Re g^{t0}(omega_{sigma t}(x')) = x by bisection in log x'.  The
    // image abscissa of any solved point is far beyond the asymptote cut, so
    // the inner tail point is the asymptote rule directly.
    const ASeq st = t.shifted(1);
    const ExtSym t1 = st.at(0);
    auto h = [&](double s) {
        const cplx w = asym_tail_point(t1, std::exp(s), p);
        return inverse_branch(t0, w, p).z;
    };
    double lo = std::log(p.R), hi = 680.0;
    double hlo = h(lo).real() - x, hhi = h(hi).real() - x;
    if (!(hlo < 0.0 && hhi > 0.0))
        throw domain_error("tail_point: abscissa bracket failure");
    for (int i = 0; i < 110 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++i) {
        const double mid = 0.5 * (lo + hi);
        ((h(mid).real() - x) < 0.0 ? lo : hi) = mid;
    }
    const cplx z = h(0.5 * (lo + hi));
    if (std::abs(z.real() - x) > 1e-9)
        throw domain_error("tail_point: solve residual too large");
    return z;
}

int tail_root_scan(const ASeq& t, double x, const Params& p) {
    const ExtSym t0 = t.at(0);
    const ASeq st = t.shifted(1);
    const double xa = tail_asym_x(p);

    double ylo, yhi;
    switch (t0) {
        case ExtSym::S02: ylo = 0.0; yhi = eta1(x, p); break;
        case ExtSym::S12: ylo = eta1(x, p); yhi = zeta1(x, p); break;
        case ExtSym::S01: ylo = -eta1(x, p); yhi = 0.0; break;
        default: ylo = -zeta1(x, p); yhi = -eta1(x, p); break;
    }

    auto next_tail_y = [&](double xp) {
        if (xp >= xa) return asym_tail_point(st.at(0), xp, p).imag();
        return tail_point(st, xp, p).imag();
    };

    const int n = static_cast<int>((yhi - ylo) / 1e-3) + 1;
    int crossings = 0;
    int last_sign = 0;
    for (int i = 0; i <= n; ++i) {
        const double y = ylo + (yhi - ylo) * i / n;
        cplx w;
        try {
            w = eval_f(cplx(x, y), p);
        } catch (const eval_overflow&) {
            last_sign = 0;
            continue;
        }
        if (!(w.real() >= p.R)) {  // outside the tail domain: reset the run
            last_sign = 0;
            continue;
        }
        const double G = w.imag() - next_tail_y(w.real());
        const int s = G > 0.0 ? 1 : (G < 0.0 ? -1 : 0);
        if (s != 0) {
            if (last_sign != 0 && s != last_sign) ++crossings;
            last_sign = s;
        }
    }
    return crossings;
}

Polyline sample_tail(const ASeq& t, double x0, double x1, double ratio,
                     const Params& p) {
    Polyline out;
    for (double x = x0; x < x1; x *= ratio)
        out.pts.push_back({tail_point(t, x, p), 0, x});
    out.pts.push_back({tail_point(t, x1, p), 0, x1});
    return out;
}

Polyline base_polyline(const ASeq& t, const Params& p, int n) {
    if (n < 2) throw domain_error("base_polyline: need n >= 2");
    const double z1R = zeta1(p.R, p);
    const double eta0 = std::exp(eval_f_logpolar(cplx(p.R, z1R), p).logmag);
    const double xcut = std::sqrt(std::max(eta0 * eta0 - 4.1 * M_PI * M_PI, 1.0));
    Polyline out;
    const double q = std::pow(xcut * 0.999 / p.R, 1.0 / (n - 2));
    double x = p.R;
    for (int i = 0; i < n - 1; ++i, x *= q)
        out.pts.push_back({tail_point(t, x, p), 0, x});
    const double beyond = xcut * 1.02;
    out.pts.push_back({tail_point(t, beyond, p), 0, beyond});
    return out;
}

namespace {

struct SeriesState {
    double value = 0.0;
    double log = 0.0;
    bool representable = true;
};

SeriesState xi_step(const SeriesState& s, const Params& p) {
    if (!s.representable)
        throw domain_error("target_bounds: xi beyond double log range");
    SeriesState out;
    out.log = eval_f_logmag(cplx(s.value, 0.0), p);
    out.representable = out.log < 700.0;
    out.value = out.representable ? p.a * (s.value - (1.0 - p.a)) * std::exp(s.value + p.a)
                                  : 0.0;
    return out;
}

SeriesState eta_step(const SeriesState& s, const Params& p) {
    if (!s.representable)
        throw domain_error("target_bounds: eta beyond double log range");
    SeriesState out;
    const double top = curve_y(CurveId{CurveId::Kind::Zeta, 1}, s.value, p);
    out.log = eval_f_logpolar(cplx(s.value, top), p).logmag;
    out.representable = out.log < 700.0;
    out.value = out.representable ? std::exp(out.log) : 0.0;
    return out;
}

}  // namespace

TargetBox target_bounds(int n, int l, const Params& p) {
    if (n < 0 || l < 0) throw domain_error("target_bounds: n, l >= 0");
    SeriesState xi{p.R, std::log(p.R), true};
    for (int i = 0; i < n; ++i) xi = xi_step(xi, p);

    SeriesState eta{p.R, std::log(p.R), true};
    eta = eta_step(eta, p);  // eta_0 = f(R + i zeta_1(R))
    for (int m = 0; m < n + l; ++m) eta = eta_step(eta, p);

    TargetBox box;
    box.n = n;
    box.l = l;
    box.log_xi = xi.log;
    box.xi_representable = xi.representable;
    box.xi = xi.value;
    box.log_eta = eta.log;
    box.eta_representable = eta.representable;
    box.eta = eta.value;
    return box;
}

std::pair<double, double> target_nesting_margins(int n, int l, const Params& p) {
    const TargetBox lowbox = target_bounds(n, l, p);
    const TargetBox hibox = target_bounds(n + 1, l, p);
    if (!lowbox.xi_representable || !lowbox.eta_representable)
        throw domain_error("target_nesting_margins: walls beyond double range");
    // Left wall: image of the top-left corner must stay left of xi_{n+1} - 1.
    const double corner_x = lowbox.xi - 1.0;
    const double top = curve_y(CurveId{CurveId::Kind::Zeta, 1}, corner_x, p);
    const double lm_left = eval_f_logpolar(cplx(corner_x, top), p).logmag;
    const double log_xi_next_m1 =
        hibox.xi_representable ? std::log(hibox.xi - 1.0) : hibox.log_xi;
    const double left_margin = log_xi_next_m1 - lm_left;
    // Right wall: image of eta_{n+l} + 1 must clear eta_{n+l+1} + 1.
    const double lm_right = eval_f_logmag(cplx(lowbox.eta + 1.0, 0.0), p);
    const TargetBox nextbox = target_bounds(n, l + 1, p);
    const double right_margin = lm_right - nextbox.log_eta;
    return {left_margin, right_margin};
}

int crossing_count(const Polyline& poly, double c) {
    int crossings = 0;
    int last_sign = 0;
    for (const auto& v : poly.pts) {
        const double d = v.z.real() - c;
        const int s = d > 0.0 ? 1 : (d < 0.0 ? -1 : 0);
        if (s != 0) {
            if (last_sign != 0 && s != last_sign) ++crossings;
            last_sign = s;
        }
    }
    return crossings;
}

}  // namespace emap
