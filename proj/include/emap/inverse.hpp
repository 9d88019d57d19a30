#pragma once

#include <optional>
#include <span>
#include <vector>

#include "emap/map.hpp"
#include "emap/partition.hpp"
#include "emap/symbols.hpp"

namespace emap {

struct InverseResult {
    cplx z;
    double residual = 0.0;  // |f_a(z) - w| / max(1, |w|)
    int iterations = 0;
    ExtSym branch = ExtSym::S01;
};

// One inverse branch g_a^b.  Solved through u e^u = w/(a e) on the region
// branch matching b.  Accepts real w on the documented seams (returning the
// boundary preimage); rejects the forbidden slits with cut_line_error.
InverseResult inverse_branch(ExtSym b, cplx w, const Params& p,
                             std::optional<cplx> seed = std::nullopt);

// Variant for images representable only in log form (far-right targets).
cplx inverse_branch_logpolar(ExtSym b, const LogPolar& w, const Params& p);

// Composition g^{s_0} o ... o g^{s_{n-1}} applied to w (innermost branch is
// s_{n-1}).  Throws with the failing depth index in the message.
cplx pullback(std::span<const ExtSym> prefix, cplx w, const Params& p);

// Region interior anchor of a branch and its image; used for continuation
// fallback and as a deterministic pullback seed.
cplx branch_anchor(ExtSym b, const Params& p);

}  // namespace emap
