#include "emap/hairs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "emap/inverse.hpp"
#include "emap/partition.hpp"

namespace emap {

namespace {

struct LevelPiece {
    int level = 0;
    std::vector<PolyVertex> pts;
};

// Pull one tail point of sigma^level t through the first `level` symbols.
cplx pull_chain(const std::vector<ExtSym>& symbols, int level, const ASeq& t,
                double x, const Params& p, double& max_residual) {
    cplx z = tail_point(t.shifted(level), x, p);
    for (int i = level; i-- > 0;) {
        const InverseResult r = inverse_branch(symbols[i], z, p);
        max_residual = std::max(max_residual, r.residual);
        z = r.z;
    }
    return z;
}

bool in_refine_window(cplx z, const TraceOptions& o) {
    return z.real() >= o.refine_xmin && z.real() <= o.refine_xmax &&
           std::abs(z.imag()) <= o.refine_ymax;
}

}  // namespace

Hair trace_hair(const ASeq& t, int depth, const TraceOptions& opt, const Params& p) {
    if (t.base().all_zero_tail())
        throw domain_error("trace_hair: sequence ends in all zeros");
    if (depth < 1) throw domain_error("trace_hair: depth >= 1");

    Hair h{t, {}, depth, {}, 0, 0.0};
    const auto symbols = t.prefix(static_cast<std::size_t>(depth) + 1);

    // Window ends: level-m piece covers sigma^m-tail abscissas [R, X_m] where
    // X_m is the image abscissa of the level-(m-1) start, so pieces join.
    std::vector<double> window_end(static_cast<std::size_t>(depth) + 1);
    const double z1R = curve_y(CurveId{CurveId::Kind::Zeta, 1}, p.R, p);
    const double eta0 = std::exp(eval_f_logpolar(cplx(p.R, z1R), p).logmag);
    window_end[0] = eta0 * 1.02;
    for (int m = 1; m <= depth; ++m) {
        const cplx start = tail_point(t.shifted(m - 1), p.R, p);
        window_end[static_cast<std::size_t>(m)] = eval_f(start, p).real();
    }

    h.joints.resize(static_cast<std::size_t>(depth) + 1);

    std::vector<LevelPiece> pieces(static_cast<std::size_t>(depth) + 1);
#ifdef EMAP_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (int m = 0; m <= depth; ++m) {
        double local_res = 0.0;
        int local_flags = 0;
        LevelPiece piece;
        piece.level = m;

        // Coarse geometric grid.
        std::vector<double> xs;
        for (double x = p.R; x < window_end[static_cast<std::size_t>(m)];
             x *= opt.grid_ratio)
            xs.push_back(x);
        xs.push_back(window_end[static_cast<std::size_t>(m)]);

        std::vector<PolyVertex> pts;
        pts.reserve(xs.size());
        for (double x : xs)
            pts.push_back({pull_chain(symbols, m, t, x, p, local_res), m, x});

        // Adaptive refinement: split segments (by log-mean abscissa) until the
        // spatial gap inside the window drops below delta_refine.
        std::vector<PolyVertex> refined;
        refined.push_back(pts[0]);
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            std::vector<PolyVertex> stack{pts[i + 1]};
            PolyVertex cur = pts[i];
            int budget = opt.segment_budget;
            while (!stack.empty()) {
                const PolyVertex nxt = stack.back();
                const double gap = std::abs(nxt.z - cur.z);
                const bool interesting =
                    in_refine_window(cur.z, opt) || in_refine_window(nxt.z, opt);
                const double xm = std::sqrt(cur.param * nxt.param);
                if (gap > opt.delta_refine && interesting && budget > 0 &&
                    xm > cur.param * (1.0 + 1e-12) && xm < nxt.param * (1.0 - 1e-12)) {
                    stack.push_back({pull_chain(symbols, m, t, xm, p, local_res), m, xm});
                    --budget;
                    continue;
                }
                if (budget == 0 && gap > opt.delta_refine && interesting) ++local_flags;
                refined.push_back(nxt);
                cur = nxt;
                stack.pop_back();
            }
        }
        piece.pts = std::move(refined);
        pieces[static_cast<std::size_t>(m)] = std::move(piece);

#ifdef EMAP_HAVE_OPENMP
#pragma omp critical
#endif
        {
            h.max_residual = std::max(h.max_residual, local_res);
            h.flagged_segments += local_flags;
        }
    }

    for (int m = 0; m <= depth; ++m)
        h.joints[static_cast<std::size_t>(m)] = pieces[static_cast<std::size_t>(m)].pts.front().z;

    // Deepest piece first; piece m ends where piece m-1 starts.
    for (int m = depth; m >= 0; --m)
        for (const auto& v : pieces[static_cast<std::size_t>(m)].pts)
            h.polyline.pts.push_back(v);
    return h;
}

LandingReport landing_report(const Hair& h, const Params& p) {
    LandingReport rep;
    const auto& J = h.joints;
    if (J.size() < 8) return rep;

    std::vector<double> gaps;
    for (std::size_t i = 0; i + 1 < J.size(); ++i) gaps.push_back(std::abs(J[i + 1] - J[i]));
    for (std::size_t i = 0; i + 1 < gaps.size(); ++i)
        rep.gap_ratios.push_back(gaps[i] > 0.0 ? gaps[i + 1] / gaps[i] : 0.0);
    rep.final_gap = gaps.back();

    // Landing: ratios eventually below 0.95 and a small final gap.
    const std::size_t win = std::max<std::size_t>(4, rep.gap_ratios.size() / 4);
    bool tail_contracts = rep.gap_ratios.size() >= win;
    for (std::size_t i = rep.gap_ratios.size() - win; i < rep.gap_ratios.size(); ++i)
        tail_contracts = tail_contracts && rep.gap_ratios[i] < 0.95;

    if (tail_contracts && rep.final_gap < 1e-8) {
        rep.verdict = LandingReport::Verdict::Landing;
        cplx z = J.back();

        // Itinerary fidelity over 20 symbols (or until truncation).
        const auto want = h.itinerary.prefix(20);
        const auto got = itinerary(z, 20, p, 1e-12);
        rep.itinerary_matches = true;
        for (std::size_t i = 0; i < got.labels.size() && i < want.size(); ++i)
            rep.itinerary_matches = rep.itinerary_matches &&
                                    got.labels[i].is_refined(want[i]);

        // Periodic itineraries: polish the fixed point of f^per and check the
        // multiplier.
        const auto& base = h.itinerary.base();
        if (base.form() == BSeq::Form::Literal) {
            const auto [pre, q] = base.literal_shape();
            if (pre == 0) {
                int par = 0;
                for (std::size_t i = 0; i < q; ++i) par ^= base.at(i);
                const int per = static_cast<int>(par ? 2 * q : q);
                for (int it = 0; it < 30; ++it) {
                    cplx w = z, dw = 1.0;
                    for (int i = 0; i < per; ++i) {
                        dw *= eval_df(w, p);
                        w = eval_f(w, p);
                    }
                    const cplx F = w - z, dF = dw - 1.0;
                    if (std::abs(F) < 1e-12 || dF == cplx(0, 0)) break;
                    z -= F / dF;
                }
                cplx w = z, dw = 1.0;
                for (int i = 0; i < per; ++i) {
                    dw *= eval_df(w, p);
                    w = eval_f(w, p);
                }
                rep.periodic_checked = true;
                rep.period_residual = std::abs(w - z);
                rep.multiplier = std::abs(dw);
            }
        }
        rep.endpoint = z;
        return rep;
    }

    // Non-contraction observed at the matched budget.
    bool late_expansion = false;
    for (std::size_t i = rep.gap_ratios.size() >= 6 ? rep.gap_ratios.size() - 6 : 0;
         i < rep.gap_ratios.size(); ++i)
        late_expansion = late_expansion || rep.gap_ratios[i] >= 1.0;
    rep.verdict = late_expansion ? LandingReport::Verdict::NonCauchy
                                 : LandingReport::Verdict::Budget;
    return rep;
}

std::vector<double> default_mu_schedule(const Params& p, int j_max, double step) {
    std::vector<double> mu;
    for (int j = 1; j <= j_max; ++j) mu.push_back(std::abs(p.q_a) + step * j);
    return mu;
}

namespace {

// Test curve of the block selection: the hair of 1_2 0_1^k (shifted probe),
// traced exactly deep enough to contain the extended tail of the lemma.
Hair block_test_hair(int k, std::size_t shift, const BSeq& probe,
                     const TraceOptions& opt, const Params& p) {
    const BSeq sp = probe.shifted(shift);
    std::vector<int> head(1, 1);
    head.insert(head.end(), static_cast<std::size_t>(k), 0);
    // Materialize the shifted probe into literal form behind the head.
    std::vector<int> prefix = head, cycle;
    const auto [pre, q] = sp.literal_shape();
    for (std::size_t i = 0; i < pre; ++i) prefix.push_back(sp.at(i));
    for (std::size_t i = 0; i < q; ++i) cycle.push_back(sp.at(pre + i));
    const BSeq test = BSeq::literal(std::move(prefix), std::move(cycle));
    const ASeq lifted(test, 2);  // leading symbol 1_2, zero block 0_1^k
    return trace_hair(lifted, k + 1, opt, p);
}

}  // namespace

ChooseBlocksResult choose_blocks(const std::vector<int>& tau, int j_max,
                                 const std::vector<double>& mu_schedule,
                                 const BSeq& probe, int k_cap,
                                 const TraceOptions& opt, const Params& p) {
    if (static_cast<int>(mu_schedule.size()) < j_max)
        throw domain_error("choose_blocks: mu schedule shorter than j_max");
    if (probe.all_zero_tail()) throw domain_error("choose_blocks: probe ends all-zero");

    ChooseBlocksResult out;
    const std::size_t n = tau.size();
    for (int j = 1; j <= j_max; ++j) {
        // p_j bookkeeping: position after tau, the completed blocks and the
        // leading 11 of the current block.
        std::size_t shift = n + 1;
        for (int i = 0; i + 1 < j; ++i)
            shift += 2 + static_cast<std::size_t>(out.ks[static_cast<std::size_t>(i)]);

        bool found = false;
        for (int k = 1; k <= k_cap; ++k) {
            const Hair th = block_test_hair(k, shift + 1 + static_cast<std::size_t>(k),
                                            probe, opt, p);
            const int c = crossing_count(th.polyline, -mu_schedule[static_cast<std::size_t>(j - 1)]);
            if (c >= 2) {
                out.ks.push_back(k);
                out.crossings.push_back(c);
                found = true;
                break;
            }
        }
        if (!found) {
            out.cap_exceeded = true;
            out.failed_j = j;
            return out;
        }
    }
    return out;
}

AccumulationReport accumulation_report(const Hair& h, const Polyline& base, double eps,
                                       int level_window) {
    AccumulationReport rep;
    rep.base_min_dist.assign(base.pts.size(), std::numeric_limits<double>::infinity());

    double overall = std::numeric_limits<double>::infinity();
    // Distances from deep vertices to the base, and arc runs along the
    // polyline order.
    int arcs = 0;
    bool in_arc = false;
    for (const auto& v : h.polyline.pts) {
        if (v.level <= level_window) {
            in_arc = false;
            continue;
        }
        double dmin = std::numeric_limits<double>::infinity();
        std::size_t arg = 0;
        for (std::size_t b = 0; b < base.pts.size(); ++b) {
            const double d = std::abs(v.z - base.pts[b].z);
            if (d < dmin) { dmin = d; arg = b; }
        }
        if (dmin < rep.base_min_dist[arg]) rep.base_min_dist[arg] = dmin;
        overall = std::min(overall, dmin);
        if (dmin <= eps) {
            if (!in_arc) ++arcs;
            in_arc = true;
        } else {
            in_arc = false;
        }
    }
    rep.returning_arcs = arcs;
    rep.min_distance = overall;

    double haus = 0.0;
    for (std::size_t b = 0; b < base.pts.size(); ++b) {
        double dmin = std::numeric_limits<double>::infinity();
        for (const auto& v : h.polyline.pts) {
            if (v.level <= level_window) continue;
            dmin = std::min(dmin, std::abs(v.z - base.pts[b].z));
        }
        haus = std::max(haus, dmin);
    }
    rep.one_sided_hausdorff = haus;
    return rep;
}

BracketCheckReport bracket_check(const BSeq& T, int n_max, const Params& p) {
    BracketCheckReport rep;
    const ASeq T1 = lift(T, 1);
    for (int n = 1; n <= n_max; ++n) {
        const auto [sn, rn] = bracket_seqs(T, static_cast<std::size_t>(n));
        const ASeq s1 = lift(sn, 1), r1 = lift(rn, 1);
        rep.order_ok.push_back(angle_less(s1, T1) && angle_less(T1, r1));
        const Angle gap_hi = angle_of(r1), gap_lo = angle_of(s1);
        Angle diff{gap_hi.num * gap_lo.den - gap_lo.num * gap_hi.den,
                   gap_hi.den * gap_lo.den};
        diff.reduce();
        rep.angle_gap.push_back(diff.to_double());
        const BoundaryPoint ps = boundary_point(s1, 400, p);
        const BoundaryPoint qr = boundary_point(r1, 400, p);
        rep.arc_gap.push_back(std::abs(ps.z - qr.z));
    }

    // Far-right containment: sampled tail points of T^1 sit between the two
    // bracketing tails (same abscissa, y between).
    const double xa = tail_asym_x(p);
    const auto [s3, r3] = bracket_seqs(T, static_cast<std::size_t>(n_max));
    const ASeq s1 = lift(s3, 1), r1 = lift(r3, 1);
    int ok = 0, total = 0;
    for (double x = p.R; x < 2.0 * xa; x *= 1.17) {
        const double yt = tail_point(T1, x, p).imag();
        const double ys = tail_point(s1, x, p).imag();
        const double yr = tail_point(r1, x, p).imag();
        ++total;
        if (yt >= std::min(ys, yr) - 1e-9 && yt <= std::max(ys, yr) + 1e-9) ++ok;
    }
    rep.tail_between_fraction = total ? static_cast<double>(ok) / total : 0.0;
    return rep;
}

}  // namespace emap
