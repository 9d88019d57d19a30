#include "emap/partition.hpp"

#include <cmath>

namespace emap {

namespace {

// Angular residual of Eq-style curve condition, evaluated carefully.
long double residual_ld(long double c, long double y) {
    return c * std::sin(y) + y * std::cos(y);
}

// Root of c sin y + y cos y = 0 in (lo, hi), where the residual has opposite
// signs at the ends (sign_lo given for degenerate lo).  Bisection then a few
// long-double Newton steps; the polish matters because the residual slope
// scales with c.
double solve_angular(long double c, long double lo, long double hi, int sign_lo) {
    long double flo = residual_ld(c, lo);
    int slo = flo == 0.0L ? sign_lo : (flo > 0.0L ? 1 : -1);
    for (int i = 0; i < 120 && hi - lo > 1e-16L; ++i) {
        long double mid = 0.5L * (lo + hi);
        long double fm = residual_ld(c, mid);
        int sm = fm == 0.0L ? 0 : (fm > 0.0L ? 1 : -1);
        if (sm == 0) { lo = hi = mid; break; }
        if (sm == slo) lo = mid; else hi = mid;
    }
    long double y = 0.5L * (lo + hi);
    for (int i = 0; i < 4; ++i) {
        long double g = residual_ld(c, y);
        long double dg = (c + 1.0L) * std::cos(y) - y * std::sin(y);
        if (dg == 0.0L) break;
        y -= g / dg;
    }
    return static_cast<double>(y);
}

}  // namespace

double curve_residual(double x, double y, const Params& p) {
    long double c = static_cast<long double>(x) - (1.0L - static_cast<long double>(p.a));
    return static_cast<double>(residual_ld(c, y));
}

double curve_y(CurveId cid, double x, const Params& p) {
    const double c = x - (1.0 - p.a);
    if (cid.kind == CurveId::Kind::Zeta) {
        int j = cid.index;
        if (j == 0) {
            if (!(x > 1.0 - p.a)) throw domain_error("curve_y: zeta_0 needs x > 1-a");
            return 0.0;
        }
        if (j < 0) {
            CurveId m{CurveId::Kind::Zeta, -j};
            return -curve_y(m, x, p);
        }
        const double lo = (2.0 * j - 1.0) * M_PI, hi = 2.0 * j * M_PI;
        double y = solve_angular(c, lo, hi, -1);
        // positive-image sign
        if (!(c * std::cos(y) - y * std::sin(y) > 0.0))
            throw domain_error("curve_y: zeta sign condition failed");
        return y;
    }
    // Eta branch, defined for x >= -a only.
    if (cid.index != 1 && cid.index != -1) throw domain_error("curve_y: eta index must be +-1");
    if (x < -p.a) throw domain_error("curve_y: eta needs x >= -a");
    if (cid.index == -1) {
        CurveId m{CurveId::Kind::Eta, 1};
        return -curve_y(m, x, p);
    }
    if (x == -p.a) return 0.0;
    // Root in (0, pi); residual slope at 0 is c+1 > 0, so treat 0 as positive.
    double hi = M_PI;
    if (c > 0.0) hi = M_PI - 0.5 * M_PI / (c + 1.0);
    else hi = M_PI - 1e-6;
    double y = solve_angular(c, 0.0, hi, +1);
    if (!(c * std::cos(y) - y * std::sin(y) < 0.0))
        throw domain_error("curve_y: eta sign condition failed");
    return y;
}

std::pair<double, double> annulus_bounds_log(double x, const Params& p) {
    if (!(x > 1.0 - p.a)) throw domain_error("annulus_bounds: needs x > 1-a");
    const double rmin = eval_f_logmag(cplx(x, 0.0), p);
    const double z1 = curve_y(CurveId{CurveId::Kind::Zeta, 1}, x, p);
    const double rmax = eval_f_logpolar(cplx(x, z1), p).logmag;
    return {rmin, rmax};
}

namespace {

// Upper half-plane classification (y > tol).
RegionLabel classify_upper(double x, double y, const Params& p, double tol) {
    const double z1 = curve_y(CurveId{CurveId::Kind::Zeta, 1}, x, p);
    if (std::abs(y - z1) <= tol)
        return RegionLabel::boundary_label(RegionLabel::Edge::Zeta, 1);
    if (y < z1) {
        if (x <= -p.a) return RegionLabel::refined_label(ExtSym::S12);
        const double e1 = curve_y(CurveId{CurveId::Kind::Eta, 1}, x, p);
        if (std::abs(y - e1) <= tol)
            return RegionLabel::boundary_label(RegionLabel::Edge::Eta, 1);
        return RegionLabel::refined_label(y < e1 ? ExtSym::S02 : ExtSym::S12);
    }
    // Strips T_j, j >= 2, between zeta_{j-1} and zeta_j.
    int jmax = 2 + static_cast<int>(y / (2.0 * M_PI)) + 2;
    double below = z1;
    for (int j = 2; j <= jmax; ++j) {
        const double zj = curve_y(CurveId{CurveId::Kind::Zeta, j}, x, p);
        if (std::abs(y - zj) <= tol)
            return RegionLabel::boundary_label(RegionLabel::Edge::Zeta, j);
        if (y > below && y < zj) return RegionLabel::strip_label(j);
        below = zj;
    }
    return RegionLabel::strip_label(strip_huge);
}

}  // namespace

RegionLabel classify(cplx z, const Params& p, double tol) {
    const double x = z.real(), y = z.imag();
    if (std::abs(y) <= tol)
        return RegionLabel::boundary_label(RegionLabel::Edge::RealAxis);
    if (y > 0.0) return classify_upper(x, y, p, tol);
    RegionLabel lab = classify_upper(x, -y, p, tol);
    switch (lab.kind) {
        case RegionLabel::Kind::Refined:
            return RegionLabel::refined_label(swap_subscript(lab.refined));
        case RegionLabel::Kind::Strip:
            return RegionLabel::strip_label(lab.strip == strip_huge ? -strip_huge
                                                                    : 1 - lab.strip);
        case RegionLabel::Kind::Boundary:
            return RegionLabel::boundary_label(lab.edge, -lab.edge_index);
    }
    return lab;
}

RegionLabel classify_logpolar(const LogPolar& w, const Params& p) {
    (void)p;
    if (w.minus_infinity)
        return RegionLabel::boundary_label(RegionLabel::Edge::RealAxis);
    const double r = reduce_arg(w.arg);
    const double s = std::sin(r);
    if (s == 0.0) return RegionLabel::boundary_label(RegionLabel::Edge::RealAxis);
    const double log_im = w.logmag + std::log(std::abs(s));
    // Beyond the T_0 u T_1 band: not classifiable by asymptote comparison.
    if (log_im > std::log(2.0 * M_PI + 1.0))
        return RegionLabel::strip_label(s > 0.0 ? strip_huge : -strip_huge);
    const double im = (s > 0.0 ? 1.0 : -1.0) * std::exp(log_im);
    const bool right = std::cos(r) > 0.0;
    const double aim = std::abs(im);
    if (right) {
        // eta_{+-1} -> +-pi, zeta_{+-1} -> +-2pi far to the right.
        if (aim < M_PI) return RegionLabel::refined_label(im < 0 ? ExtSym::S01 : ExtSym::S02);
        if (aim < 2.0 * M_PI)
            return RegionLabel::refined_label(im < 0 ? ExtSym::S11 : ExtSym::S12);
        return RegionLabel::strip_label(im > 0 ? strip_huge : -strip_huge);
    }
    // Far left T_1 spans the band between zeta_{-1} and zeta_1 (-> +-pi).
    if (aim < M_PI) return RegionLabel::refined_label(im < 0 ? ExtSym::S11 : ExtSym::S12);
    return RegionLabel::strip_label(im > 0 ? strip_huge : -strip_huge);
}

ItineraryResult itinerary(cplx z, int depth, const Params& p, double tol) {
    ItineraryResult out;
    cplx w = z;
    for (int k = 0; k < depth; ++k) {
        RegionLabel lab = classify(w, p, tol);
        out.labels.push_back(lab);
        if (lab.kind == RegionLabel::Kind::Boundary) {
            out.status = ItineraryResult::Status::HitBoundary;
            return out;
        }
        if (lab.kind == RegionLabel::Kind::Strip) {
            out.status = ItineraryResult::Status::HitStrip;
            return out;
        }
        if (k + 1 == depth) break;
        try {
            w = eval_f(w, p);
        } catch (const eval_overflow&) {
            RegionLabel far = classify_logpolar(eval_f_logpolar(w, p), p);
            out.labels.push_back(far);
            out.status = ItineraryResult::Status::Overflow;
            return out;
        }
    }
    out.status = ItineraryResult::Status::Complete;
    return out;
}

}  // namespace emap
