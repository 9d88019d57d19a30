#include "emap/basin.hpp"

#include <algorithm>
#include <cmath>

#include "emap/inverse.hpp"
#include "emap/partition.hpp"

namespace emap {

namespace {

double zeta1(double x, const Params& p) {
    return curve_y(CurveId{CurveId::Kind::Zeta, 1}, x, p);
}

bool in_va_closure(cplx w, double xl, double xr, const Params& p, double slack = 1e-9) {
    const double x = w.real();
    if (x < xl - slack || x > xr + slack) return false;
    return std::abs(w.imag()) <= zeta1(x, p) + slack;
}

}  // namespace

QuadLikeReport verify_quadratic_like(const Params& p) {
    QuadLikeReport r;
    const double a = p.a;
    r.a = a;
    r.wall_left = -a - 6.0 * std::log(a);
    r.wall_right = 0.5 * (1.0 - a);
    const double l6 = 1.0 + 6.0 * std::log(a);
    r.left_bound = std::sqrt(l6 * l6 + 4.0 * M_PI * M_PI) / std::pow(a, 5);
    r.inner_radius = 0.5 * std::abs(1.0 - a);
    r.right_image = a * std::exp(0.5 * (a + 1.0)) * r.inner_radius;
    const double a6 = a + 6.0 * std::log(a);
    r.outer_radius = std::sqrt(a6 * a6 + 4.0 * M_PI * M_PI);

    // Direct check: 100 samples per wall must map outside the closure of V_a.
    const int per_wall = 100;
    auto check = [&](cplx z) {
        ++r.samples;
        cplx w;
        try {
            w = eval_f(z, p);
        } catch (const eval_overflow&) {
            return;  // far outside
        }
        if (in_va_closure(w, r.wall_left, r.wall_right, p)) ++r.failures;
    };
    for (int i = 0; i < per_wall; ++i) {
        const double s = (i + 0.5) / per_wall;
        const double yl = zeta1(r.wall_left, p);
        check({r.wall_left, -yl + 2.0 * yl * s});
        const double yr = zeta1(r.wall_right, p);
        check({r.wall_right, -yr + 2.0 * yr * s});
        const double x = r.wall_left + (r.wall_right - r.wall_left) * s;
        const double yt = zeta1(x, p);
        check({x, yt});
        check({x, -yt});
    }

    r.pass = r.left_bound < 0.5 && 0.5 < r.inner_radius + 1e-15 &&
             r.right_image > r.outer_radius && r.failures == 0;
    return r;
}

double trap_disk(const Params& p) {
    double r = 1.0 / (4.0 * p.a);
    for (int attempt = 0; attempt <= 6; ++attempt) {
        bool ok = true;
        for (int i = 0; i < 720 && ok; ++i) {
            const double th = 2.0 * M_PI * i / 720.0;
            const cplx z = cplx(-p.a, 0.0) + r * cplx(std::cos(th), std::sin(th));
            ok = std::abs(eval_f(z, p) + p.a) < r;
        }
        if (ok) return r;
        r *= 0.5;
    }
    throw no_convergence_error("trap_disk: verification exhausted", cplx(-p.a, 0));
}

namespace {

cplx seed_for(ExtSym innermost) {
    const int side = (innermost == ExtSym::S02 || innermost == ExtSym::S11) ? +1 : -1;
    return {1.0, 2.0 * side};
}

// Estimates at increasing depth with a fixed per-branch seed; used for
// non-periodic itineraries.
BoundaryPoint boundary_point_by_depth(const ASeq& s, int max_depth, const Params& p) {
    const auto symbols = s.prefix(static_cast<std::size_t>(max_depth) + 1);
    cplx prev(0.0, 0.0);
    bool have_prev = false;
    for (int depth = 6; depth <= max_depth; depth += 4) {
        cplx z = seed_for(symbols[depth - 1]);
        for (int i = depth; i-- > 0;) z = inverse_branch(symbols[i], z, p).z;
        if (have_prev) {
            const double gap = std::abs(z - prev);
            if (gap < 1e-10) return {z, gap, depth, true};
        }
        prev = z;
        have_prev = true;
    }
    throw non_contraction_error("boundary_point: no contraction within depth budget " +
                                std::to_string(max_depth));
}

}  // namespace

BoundaryPoint boundary_point(const ASeq& s, int max_depth, const Params& p) {
    if (s.base().all_zero_tail()) {
        // Lemma-2.2 special case: the all-zeros itinerary is the real point.
        return {cplx(p.p_a, 0.0), 0.0, 0, true};
    }
    if (s.base().form() != BSeq::Form::Literal)
        return boundary_point_by_depth(s, max_depth, p);

    // Eventually periodic: iterate the cycle contraction, then apply the
    // prefix once.  The A-period is the base period or its double, depending
    // on the cycle parity.
    const auto [pre, q] = s.base().literal_shape();
    int par = 0;
    for (std::size_t i = 0; i < q; ++i) par ^= s.base().at(pre + i);
    const std::size_t qa = par ? 2 * q : q;
    const auto symbols = s.prefix(pre + 2 * qa);

    cplx z = seed_for(symbols[pre + qa - 1]);
    double gap = 0.0;
    int depth = 0;
    bool contracted = false;
    const int max_cycles = std::max(4, static_cast<int>(max_depth / qa));
    for (int cyc = 0; cyc < max_cycles; ++cyc) {
        cplx znew = z;
        for (std::size_t i = pre + qa; i-- > pre;) znew = inverse_branch(symbols[i], znew, p).z;
        gap = std::abs(znew - z);
        z = znew;
        depth = (cyc + 1) * static_cast<int>(qa);
        if (gap < 1e-10 && cyc >= 1) {
            contracted = true;
            break;
        }
    }
    if (!contracted)
        throw non_contraction_error("boundary_point: cycle iteration did not contract");
    for (std::size_t i = pre; i-- > 0;) z = inverse_branch(symbols[i], z, p).z;
    return {z, gap, depth + static_cast<int>(pre), true};
}

std::vector<BoundarySample> boundary_grid(const Params& p, int m, bool parallel) {
    if (m < 1 || m > 12) throw domain_error("boundary_grid: m in [1,12]");
    const long den = (1L << m) - 1;
    std::vector<BoundarySample> out(static_cast<std::size_t>(den) + 1);

    // z(0) = p_a and z(1/2) = q_a join the grid as the two real points.
    out[0].angle = Angle{0, 1};
    out[0].z = cplx(p.p_a, 0.0);
    out[static_cast<std::size_t>(den)].angle = Angle{1, 2};
    out[static_cast<std::size_t>(den)].z = cplx(p.q_a, 0.0);

#ifdef EMAP_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
#endif
    for (long k = 1; k < den; ++k) {
        Angle th{k, den};
        th.reduce();
        const ASeq s = itinerary_of_angle(th);
        const BoundaryPoint bp = boundary_point(s, 240, p);
        out[static_cast<std::size_t>(k)].angle = Angle{k, den};
        out[static_cast<std::size_t>(k)].z = bp.z;
    }
    (void)parallel;

    std::sort(out.begin(), out.end(),
              [](const BoundarySample& l, const BoundarySample& r) {
                  return l.angle.num * r.angle.den < r.angle.num * l.angle.den;
              });
    return out;
}

Polyline boundary_polyline(const Params& p, int m) {
    const auto grid = boundary_grid(p, m);
    Polyline poly;
    poly.pts.reserve(grid.size());
    for (const auto& g : grid)
        poly.pts.push_back({g.z, 0, g.angle.to_double()});
    return poly;
}

}  // namespace emap
