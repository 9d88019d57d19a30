#include "emap/lambert.hpp"

#include <cmath>
#include <vector>

namespace emap {

namespace {

using cplx = std::complex<double>;

constexpr double kPi = 3.141592653589793238462643383279502884;

// Series about the branch point v = -1/e; q is +-sqrt(2(ev+1)) depending on
// the sheet.
cplx branch_point_series(cplx q) {
    return -1.0 + q * (1.0 + q * (-1.0 / 3.0 + q * (11.0 / 72.0 + q * (-43.0 / 540.0))));
}

bool in_band(WBranch br, cplx u) {
    const double y = u.imag();
    const double slack = 1e-7;
    switch (br) {
        case WBranch::Principal: return y > -kPi - slack && y < kPi + slack;
        case WBranch::Upper: return y > -slack && y < 2.0 * kPi + slack;
        case WBranch::Lower: return y > -2.0 * kPi - slack && y < slack;
    }
    return false;
}

// Asymptotic/global seed.  For Upper and Lower the shifted log sheet gives a
// usable start everywhere away from the branch point.
cplx log_seed(WBranch br, cplx v) {
    double theta = std::arg(v);
    if (br == WBranch::Upper) {
        if (v.imag() == 0.0 && v.real() < 0.0) theta = -kPi;  // below-side limit
        theta += 2.0 * kPi;
    } else if (br == WBranch::Lower) {
        if (v.imag() == 0.0 && v.real() < 0.0) theta = kPi;  // above-side limit
        theta -= 2.0 * kPi;
    }
    const cplx L(std::log(std::abs(v)), theta);
    return L - std::log(L);
}

// Real W_{-1}-style seed for real v in (-1/e, 0), the common seam of the
// Upper/Lower closures.
double real_lower_seed(double v) {
    const double l1 = std::log(-v);
    if (l1 > -2.0) return -1.5;
    return l1 - std::log(-l1);
}

bool halley(cplx v, cplx u0, WResult& out) {
    cplx u = u0;
    const double scale = std::max(1.0, std::abs(v));
    for (int it = 0; it < 60; ++it) {
        // Guard: e^u overflow cannot happen for seeds used here, but clamp anyway.
        if (u.real() > 705.0) return false;
        const cplx eu = std::exp(u);
        const cplx f = u * eu - v;
        out.iterations = it + 1;
        out.residual = std::abs(f) / scale;
        if (out.residual <= 1e-15) {
            out.u = u;
            out.converged = true;
            return true;
        }
        const cplx fp = eu * (u + 1.0);
        const cplx fpp = eu * (u + 2.0);
        cplx denom = fp - f * fpp / (2.0 * fp);
        if (denom == cplx(0.0, 0.0)) denom = fp;
        if (denom == cplx(0.0, 0.0)) return false;
        cplx step = f / denom;
        // Keep early steps tame; far-field seeds are already close.
        const double ms = 0.5 * (1.0 + std::abs(u));
        if (std::abs(step) > ms) step *= ms / std::abs(step);
        u -= step;
    }
    out.u = u;
    return false;
}

}  // namespace

WResult lambert_w(WBranch br, cplx v) {
    WResult res;
    const cplx ev1 = std::exp(1.0) * v + 1.0;
    std::vector<cplx> seeds;

    if (br == WBranch::Principal) {
        if (std::abs(ev1) < 0.4) {
            seeds.push_back(branch_point_series(std::sqrt(2.0 * ev1)));
        }
        if (std::abs(v) < 0.5) seeds.push_back(v * (1.0 - v));
        if (std::abs(v) >= 0.5 && std::abs(v + 1.0) > 0.25)
            seeds.push_back(v / (1.0 + v));
        if (std::abs(v) > 3.0) {
            const cplx L = std::log(v);
            seeds.push_back(L - std::log(L));
        }
        seeds.push_back(branch_point_series(std::sqrt(2.0 * ev1)));
        seeds.push_back(cplx(0.5, 0.0));
    } else {
        const bool near_bp = std::abs(ev1) < 0.4;
        const bool real_seam = v.imag() == 0.0 && v.real() < 0.0 && v.real() > -0.3678;
        if (near_bp) {
            seeds.push_back(branch_point_series(-std::sqrt(2.0 * ev1)));
        }
        if (real_seam) seeds.push_back(cplx(real_lower_seed(v.real()), 0.0));
        seeds.push_back(log_seed(br, v));
        if (!near_bp) seeds.push_back(branch_point_series(-std::sqrt(2.0 * ev1)));
    }

    for (const cplx& s : seeds) {
        WResult attempt;
        if (halley(v, s, attempt) && in_band(br, attempt.u)) return attempt;
    }
    // Report the last failed state; caller decides on continuation.
    WResult attempt;
    halley(v, seeds.back(), attempt);
    return attempt;
}

WResult lambert_w_seeded(WBranch br, cplx v, cplx u0) {
    WResult attempt;
    if (halley(v, u0, attempt) && in_band(br, attempt.u)) return attempt;
    return lambert_w(br, v);
}

cplx lambert_w_log(WBranch br, double log_abs_v, double arg_v) {
    // arg_v comes in reduced to (-pi, pi]; shift it onto the branch sheet.
    double theta = arg_v;
    if (br == WBranch::Upper) {
        if (theta == kPi) theta = -kPi;  // below-side limit of the negative ray
        theta += 2.0 * kPi;              // sheet (pi, 2pi]-ish
    } else if (br == WBranch::Lower) {
        theta -= 2.0 * kPi;
    }
    const cplx L(log_abs_v, theta);
    cplx u = L - std::log(L);
    for (int it = 0; it < 8; ++it) {
        const cplx g = u + std::log(u) - L;
        u -= g * u / (u + 1.0);
    }
    return u;
}

}  // namespace emap
