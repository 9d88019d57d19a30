#pragma once

#include <optional>
#include <vector>

#include "emap/map.hpp"
#include "emap/symbolic.hpp"
#include "emap/tails.hpp"

namespace emap {

// Prop-2.4 style verification data for the pseudo-rectangle V_a.
struct QuadLikeReport {
    double a = 0.0;
    double wall_left = 0.0, wall_right = 0.0;  // Re range of V_a
    double left_bound = 0.0;       // (1/a^5) sqrt((1+6 ln a)^2 + 4 pi^2)
    double inner_radius = 0.0;     // |1-a|/2
    double right_image = 0.0;      // a e^{(a+1)/2} |1-a|/2
    double outer_radius = 0.0;     // sqrt((a+6 ln a)^2 + 4 pi^2)
    int samples = 0;
    int failures = 0;              // wall samples whose image lands in V_a closure
    bool pass = false;
};

QuadLikeReport verify_quadratic_like(const Params& p);

// Radius r = 1/(4a) (halved on failure, at most 6 times) such that the disk
// |z + a| <= r maps strictly inside itself; verified on 720 boundary samples.
double trap_disk(const Params& p);

struct BoundaryPoint {
    cplx z;
    double gap = 0.0;      // last Cauchy gap of the pullback estimates
    int depth = 0;         // pullback depth at stop
    bool contracted = true;
};

// Unique boundary point realizing the itinerary, via deep pullbacks with a
// fixed half-plane seed.  The all-zero itinerary returns p_a directly.
BoundaryPoint boundary_point(const ASeq& s, int max_depth, const Params& p);

struct BoundarySample {
    Angle angle;
    cplx z;
};

// Boundary points over the purely periodic angle grid k/(2^m - 1) plus the
// two real points z(0) = p_a and z(1/2) = q_a, ordered by angle.
std::vector<BoundarySample> boundary_grid(const Params& p, int m, bool parallel = true);

Polyline boundary_polyline(const Params& p, int m);

}  // namespace emap
