#pragma once

#include <cstdint>
#include <vector>

#include "emap/map.hpp"

namespace emap {

struct RenderJob {
    double a = 3.0;
    double x0 = -6.0, x1 = 2.0, y0 = -4.0, y1 = 4.0;
    int width = 512, height = 512;
    int budget = 200;
    double trap_radius = 0.0;       // 0: derived as 1/(4a) after verification
    double escape_logmag = 1000.0;
};

struct Raster {
    int width = 0, height = 0;
    std::vector<std::uint8_t> pix;  // row-major, 0 = Fatou (basin), 255 = Julia
    std::uint64_t undecided = 0;    // budget expiries, counted as Julia
};

// Orbit classification of one point: 0 when the orbit enters the trap disk
// within the budget, 255 otherwise.
std::uint8_t classify_orbit(cplx z0, const Params& p, double trap_radius, int budget,
                            double escape_logmag, bool& undecided);

enum class RenderMode { Serial, Parallel };

// Pixel centers on the viewport grid; row 0 holds the top of the viewport
// (y1) so the PPM reads naturally.
Raster render_classification(const RenderJob& job, const Params& p,
                             RenderMode mode = RenderMode::Parallel);

}  // namespace emap
