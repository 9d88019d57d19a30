#include "emap/render.hpp"

#include <cmath>

#include "emap/basin.hpp"

namespace emap {

std::uint8_t classify_orbit(cplx z0, const Params& p, double trap_radius, int budget,
                            double escape_logmag, bool& undecided) {
    undecided = false;
    cplx z = z0;
    for (int it = 0; it < budget; ++it) {
        if (std::abs(z + p.a) < trap_radius) return 0;
        const double lm = eval_f_logmag(z, p);
        if (lm > 705.0) {
            if (lm > escape_logmag) return 255;
            const LogPolar w = eval_f_logpolar(z, p);
            if (w.logmag <= 705.0) {
                z = std::exp(w.logmag) * cplx(std::cos(w.arg), std::sin(w.arg));
                continue;
            }
            // Too large to reconstruct: the next image is decided by the sign
            // of Re f.  Rightward means escape; leftward maps next to the
            // asymptotic value, so continue from 0.
            const double c = std::cos(reduce_arg(w.arg));
            if (c >= 0.0) return 255;
            z = cplx(0.0, 0.0);
            continue;
        }
        z = eval_f(z, p);
    }
    undecided = true;
    return 255;
}

Raster render_classification(const RenderJob& job, const Params& p, RenderMode mode) {
    if (job.width < 1 || job.height < 1 || !(job.x1 > job.x0) || !(job.y1 > job.y0))
        throw domain_error("render: degenerate job");
    Raster out;
    out.width = job.width;
    out.height = job.height;
    out.pix.assign(static_cast<std::size_t>(job.width) * job.height, 0);

    const double r = job.trap_radius > 0.0 ? job.trap_radius : trap_disk(p);
    const double dx = (job.x1 - job.x0) / job.width;
    const double dy = (job.y1 - job.y0) / job.height;

    std::uint64_t undecided_total = 0;

    if (mode == RenderMode::Parallel) {
#ifdef EMAP_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : undecided_total)
#endif
        for (int row = 0; row < job.height; ++row) {
            for (int col = 0; col < job.width; ++col) {
                const cplx z0(job.x0 + (col + 0.5) * dx, job.y1 - (row + 0.5) * dy);
                bool und = false;
                out.pix[static_cast<std::size_t>(row) * job.width + col] =
                    classify_orbit(z0, p, r, job.budget, job.escape_logmag, und);
                if (und) ++undecided_total;
            }
        }
    } else {
        for (int row = 0; row < job.height; ++row) {
            for (int col = 0; col < job.width; ++col) {
                const cplx z0(job.x0 + (col + 0.5) * dx, job.y1 - (row + 0.5) * dy);
                bool und = false;
                out.pix[static_cast<std::size_t>(row) * job.width + col] =
                    classify_orbit(z0, p, r, job.budget, job.escape_logmag, und);
                if (und) ++undecided_total;
            }
        }
    }
    out.undecided = undecided_total;
    return out;
}

}  // namespace emap
