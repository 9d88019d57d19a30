#pragma once

#include <vector>

#include "emap/inverse.hpp"
#include "emap/map.hpp"
#include "emap/symbolic.hpp"

namespace emap {

struct PolyVertex {
    cplx z;
    int level = 0;    // pullback depth (0 for tail samples)
    double param = 0.0;  // tail abscissa that produced the vertex
};

struct Polyline {
    std::vector<PolyVertex> pts;
};

// Smallest integer base abscissa R >= 5 with f_a(R) > 100 (R + 2pi) and the
// sampled Lemma-2.3 ordering holding on L[R].
double choose_R(const Params& p);

// Abscissa beyond which the tail band half-width pi exp(-logmag f) drops
// below 1e-14 (grid-quantized, geometric from R).
double tail_asym_x(const Params& p);

// Point of the tail omega_t at abscissa x (x >= R).  Beyond tail_asym_x the
// asymptote rule applies: 1-symbols sit on the zeta curve, 0-symbols at the
// signed band offset from the real axis.  Below it the defining condition
// "f(z) lies on the tail of sigma t" is solved through the branch inverse.
cplx tail_point(const ASeq& t, double x, const Params& p);

// Diagnostic scan for the graph property: number of admissible roots of the
// tail condition in the strip of t_0 at abscissa x (resolution ~1e-3 in y,
// restricted to Re f >= R).  1 means unique.
int tail_root_scan(const ASeq& t, double x, const Params& p);

// Tail sampled on a geometric abscissa grid of n vertices from R up to the
// F_R cutoff |z| < |f_a(R + i zeta_1(R))| (last vertex just beyond).
Polyline base_polyline(const ASeq& t, const Params& p, int n);

// Tail samples over [x0, x1], geometric grid with the given ratio.
Polyline sample_tail(const ASeq& t, double x0, double x1, double ratio,
                     const Params& p);

// Targets V(xi_n, eta_{n+l}).  Values are tracked as (value, log) pairs; the
// doubly exponential recurrences leave the log itself representable only for
// small n (xi: n <= 2, eta: m <= 1 at a = 3), beyond which domain_error is
// thrown.
struct TargetBox {
    int n = 0, l = 0;
    double log_xi = 0.0, log_eta = 0.0;
    bool xi_representable = false, eta_representable = false;
    double xi = 0.0, eta = 0.0;  // valid when representable
};

TargetBox target_bounds(int n, int l, const Params& p);

// The two wall inequalities behind the target nesting (log-unit margins,
// both positive when V(xi_{n+1}, eta_{n+l+1}) is compactly inside the image
// of V(xi_n, eta_{n+l})).
std::pair<double, double> target_nesting_margins(int n, int l, const Params& p);

// Transversal crossings of the polyline across the vertical line Re = c
// (sign changes with nonzero increment; tangential touches do not count).
int crossing_count(const Polyline& poly, double c);

}  // namespace emap
