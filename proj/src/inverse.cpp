#include "emap/inverse.hpp"

#include <cmath>
#include <string>

#include "emap/lambert.hpp"

namespace emap {

namespace {

WBranch branch_of(ExtSym b) {
    switch (b) {
        case ExtSym::S01:
        case ExtSym::S02: return WBranch::Principal;
        case ExtSym::S12: return WBranch::Upper;
        case ExtSym::S11: return WBranch::Lower;
    }
    return WBranch::Principal;
}

// Half-plane the valid targets of branch b live in: +1 upper, -1 lower.
int target_side(ExtSym b) {
    return (b == ExtSym::S02 || b == ExtSym::S11) ? +1 : -1;
}

void check_slits(ExtSym b, cplx w, const Params& p) {
    if (w.imag() != 0.0) return;
    const double x = w.real();
    if (x <= -p.a)
        throw cut_line_error("inverse_branch " + to_string(b) + ": w on (-inf,-a]");
    if (base_digit(b) == 1 && x == 0.0)
        throw cut_line_error("inverse_branch " + to_string(b) + ": w = 0 has no T_1 preimage");
    // Remaining real w are seam conventions: (-a, 0) and (0, inf) return the
    // boundary preimage of the branch closure.
}

void check_half_plane(ExtSym b, cplx w) {
    const double im = w.imag();
    if (im == 0.0) return;  // seam conventions handled above
    if (target_side(b) > 0 && im < 0.0)
        throw cut_line_error("inverse_branch " + to_string(b) + ": Im w must be >= 0");
    if (target_side(b) < 0 && im > 0.0)
        throw cut_line_error("inverse_branch " + to_string(b) + ": Im w must be <= 0");
}

// Static anchor points in u-coordinates, verified well inside each region.
cplx anchor_u(ExtSym b) {
    switch (b) {
        case ExtSym::S01: return {0.3, -0.8};
        case ExtSym::S02: return {0.3, 0.8};
        case ExtSym::S12: return {0.0, 4.4};
        case ExtSym::S11: return {0.0, -4.4};
    }
    return {0.3, 0.8};
}

// Continuation along a path in v-space from the anchor image, Newton-tracking
// the preimage.  Detours around the slits through the valid half-plane.
bool continue_from_anchor(ExtSym b, cplx v, cplx& u_out) {
    cplx u = anchor_u(b);
    const cplx v0 = u * std::exp(u);
    std::vector<cplx> waypoints;
    waypoints.push_back(v0);
    // If the straight leg could cross the real axis, detour through the valid
    // side at a safe radius.
    if ((v0.imag() > 0.0) != (v.imag() > 0.0) && v.imag() != 0.0) {
        const double r = std::max({1.0, std::abs(v0), std::abs(v)});
        const double side = target_side(b) >= 0 ? 1.0 : -1.0;
        waypoints.push_back(cplx(0.0, side * r));
    }
    waypoints.push_back(v);
    for (std::size_t leg = 0; leg + 1 < waypoints.size(); ++leg) {
        const cplx a0 = waypoints[leg], a1 = waypoints[leg + 1];
        const int steps = 64;
        for (int i = 1; i <= steps; ++i) {
            const cplx vt = a0 + (a1 - a0) * (static_cast<double>(i) / steps);
            for (int it = 0; it < 20; ++it) {
                const cplx eu = std::exp(u);
                const cplx f = u * eu - vt;
                if (std::abs(f) <= 1e-15 * std::max(1.0, std::abs(vt))) break;
                u -= f / (eu * (u + 1.0));
            }
        }
    }
    const cplx f = u * std::exp(u) - v;
    if (std::abs(f) > 1e-13 * std::max(1.0, std::abs(v))) return false;
    u_out = u;
    return true;
}

}  // namespace

cplx branch_anchor(ExtSym b, const Params& p) {
    return cplx(1.0 - p.a, 0.0) + anchor_u(b);
}

InverseResult inverse_branch(ExtSym b, cplx w, const Params& p, std::optional<cplx> seed) {
    check_slits(b, w, p);
    check_half_plane(b, w);
    const double ae = p.a * std::exp(1.0);
    const cplx v = w / ae;
    const WBranch wb = branch_of(b);

    const WResult r = seed ? lambert_w_seeded(wb, v, *seed - (1.0 - p.a))
                           : lambert_w(wb, v);
    cplx u = r.u;
    if (!r.converged) {
        if (!continue_from_anchor(b, v, u))
            throw no_convergence_error(
                "inverse_branch " + to_string(b) + ": solver budget exhausted", w);
    }

    // For 0/1 branches the subscript picks the half-plane of the result; the
    // Lambert region already encodes it for T_1, enforce it for T_0.
    if (wb == WBranch::Principal && w.imag() != 0.0) {
        const int want = (b == ExtSym::S02) ? +1 : -1;
        if ((u.imag() > 0.0 ? +1 : -1) != want)
            throw no_convergence_error(
                "inverse_branch " + to_string(b) + ": wrong half-plane result", w);
    }

    InverseResult out;
    out.z = cplx(1.0 - p.a, 0.0) + u;
    out.iterations = r.iterations;
    out.branch = b;
    // Residual against the actual map, relative.
    try {
        out.residual = std::abs(eval_f(out.z, p) - w) / std::max(1.0, std::abs(w));
    } catch (const eval_overflow&) {
        out.residual = 0.0;  // cannot happen: |w| was representable
    }
    return out;
}

cplx inverse_branch_logpolar(ExtSym b, const LogPolar& w, const Params& p) {
    if (w.minus_infinity)
        throw cut_line_error("inverse_branch_logpolar: w = 0");
    const double log_abs_v = w.logmag - std::log(p.a) - 1.0;
    const cplx u = lambert_w_log(branch_of(b), log_abs_v, reduce_arg(w.arg));
    return cplx(1.0 - p.a, 0.0) + u;
}

cplx pullback(std::span<const ExtSym> prefix, cplx w, const Params& p) {
    cplx z = w;
    for (std::size_t i = prefix.size(); i-- > 0;) {
        try {
            z = inverse_branch(prefix[i], z, p).z;
        } catch (const std::exception& e) {
            throw no_convergence_error(
                "pullback failed at depth " + std::to_string(i) + ": " + e.what(), w);
        }
    }
    return z;
}

}  // namespace emap
