#pragma once

#include <optional>
#include <vector>

#include "emap/basin.hpp"
#include "emap/symbolic.hpp"
#include "emap/tails.hpp"

namespace emap {

struct TraceOptions {
    double delta_refine = 0.02;  // vertex gap target inside the refine window
    int segment_budget = 4096;   // insertions per coarse segment
    double refine_xmin = -60.0, refine_xmax = 60.0, refine_ymax = 40.0;
    double grid_ratio = 1.25;    // coarse geometric abscissa grid
};

struct Hair {
    ASeq itinerary;
    Polyline polyline;           // ordered deepest piece first
    int depth = 0;
    std::vector<cplx> joints;    // J_n = pullback^n of the tail start
    int flagged_segments = 0;    // refinement budget hits
    double max_residual = 0.0;   // worst inverse-branch residual seen
};

// Pullback union of the tails of sigma^m t, m <= depth, with adaptive
// refinement.  Level-m piece covers the abscissa window that joins the
// level-(m-1) piece exactly.
Hair trace_hair(const ASeq& t, int depth, const TraceOptions& opt, const Params& p);

struct LandingReport {
    enum class Verdict { Landing, NonCauchy, Budget } verdict = Verdict::Budget;
    std::optional<cplx> endpoint;
    std::vector<double> gap_ratios;
    double final_gap = 0.0;
    bool itinerary_matches = false;
    bool periodic_checked = false;
    double period_residual = 0.0;  // |f^per(z*) - z*| after Newton polish
    double multiplier = 0.0;       // |(f^per)'(z*)|
};

LandingReport landing_report(const Hair& h, const Params& p);

struct ChooseBlocksResult {
    std::vector<int> ks;
    std::vector<int> crossings;  // crossing count achieved at each chosen k_j
    bool cap_exceeded = false;
    int failed_j = -1;           // 1-based index where the cap hit, if any
};

// Constructive block-length selection: k_j is the smallest k <= k_cap whose
// test hair 1_2 0_1^k (shifted probe) crosses Re = -mu_j at least twice.
ChooseBlocksResult choose_blocks(const std::vector<int>& tau, int j_max,
                                 const std::vector<double>& mu_schedule,
                                 const BSeq& probe, int k_cap,
                                 const TraceOptions& opt, const Params& p);

// Default schedule: mu_j = |q_a| + j * step.  The line must clear the
// pullback barrier at q_a for the double crossing to exist at all.
std::vector<double> default_mu_schedule(const Params& p, int j_max, double step = 1.0);

struct AccumulationReport {
    int returning_arcs = 0;
    double min_distance = 0.0;       // closest approach of deep arcs to the base
    double one_sided_hausdorff = 0.0;  // sup over base of min dist to deep levels
    std::vector<double> base_min_dist;
};

// Distances from base vertices to hair vertices at levels strictly greater
// than level_window, plus the count of distinct sub-arcs entering the
// eps-neighborhood of the base.
AccumulationReport accumulation_report(const Hair& h, const Polyline& base, double eps,
                                       int level_window = 1);

struct BracketCheckReport {
    std::vector<bool> order_ok;      // angle(s_n^1) < angle(T^1) < angle(r_n^1)
    std::vector<double> arc_gap;     // |p(s_n^1) - q(r_n^1)| per n
    std::vector<double> angle_gap;   // exact |angle(r_n) - angle(s_n)| as double
    double tail_between_fraction = 0.0;  // sampled tail vertices between brackets
};

BracketCheckReport bracket_check(const BSeq& T, int n_max, const Params& p);

}  // namespace emap
