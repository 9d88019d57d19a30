#pragma once

#include <optional>
#include <vector>

#include "emap/map.hpp"
#include "emap/symbols.hpp"

namespace emap {

// Partition curve identifier: Zeta j (preimages of R+, j in Z) or
// Eta +-1 (preimages of (-inf, -a) between zeta_{-1} and zeta_1).
struct CurveId {
    enum class Kind { Zeta, Eta } kind = Kind::Zeta;
    int index = 0;  // j in Z for Zeta, +-1 for Eta
};

struct RegionLabel {
    enum class Kind { Strip, Refined, Boundary } kind = Kind::Strip;
    int strip = 0;                       // Strip: j with |j| >= 2 (or sentinel)
    ExtSym refined = ExtSym::S01;        // Refined: one of 0_1,0_2,1_1,1_2
    enum class Edge { RealAxis, Zeta, Eta } edge = Edge::RealAxis;  // Boundary
    int edge_index = 0;                  // curve index for Boundary

    static RegionLabel strip_label(int j) {
        RegionLabel l; l.kind = Kind::Strip; l.strip = j; return l;
    }
    static RegionLabel refined_label(ExtSym s) {
        RegionLabel l; l.kind = Kind::Refined; l.refined = s; return l;
    }
    static RegionLabel boundary_label(Edge e, int idx = 0) {
        RegionLabel l; l.kind = Kind::Boundary; l.edge = e; l.edge_index = idx; return l;
    }
    bool is_refined(ExtSym s) const { return kind == Kind::Refined && refined == s; }
    bool operator==(const RegionLabel& o) const {
        if (kind != o.kind) return false;
        switch (kind) {
            case Kind::Strip: return strip == o.strip;
            case Kind::Refined: return refined == o.refined;
            case Kind::Boundary: return edge == o.edge && edge_index == o.edge_index;
        }
        return false;
    }
};

// Sentinel strip index for images too large to classify beyond T_0 u T_1.
constexpr int strip_huge = 1 << 20;

// y-value of a partition curve at abscissa x.  Residual of
// (x-(1-a)) sin y + y cos y < 1e-12 with the image-sign condition of Eq-type
// root selection.  Domain: Zeta 0 needs x > 1-a; Eta needs x >= -a.
double curve_y(CurveId c, double x, const Params& p);

// Residual of the defining angular equation at (x, y).
double curve_residual(double x, double y, const Params& p);

// Classification of a finite point.  Points within tol (absolute Im distance)
// of a defining curve or of the real axis report Boundary.
RegionLabel classify(cplx z, const Params& p, double tol = 1e-9);

// Classification of an overflow-scale image from its log-polar form.
RegionLabel classify_logpolar(const LogPolar& w, const Params& p);

struct ItineraryResult {
    std::vector<RegionLabel> labels;
    enum class Status { Complete, HitBoundary, HitStrip, Overflow } status = Status::Complete;
};

// Labels of z, f(z), ..., f^{depth-1}(z).  Truncates on Boundary labels or
// strips |j| >= 2; once the forward image is representable only in log form
// it is classified by the log-polar rule and the itinerary stops there.
ItineraryResult itinerary(cplx z, int depth, const Params& p, double tol = 1e-9);

}  // namespace emap
