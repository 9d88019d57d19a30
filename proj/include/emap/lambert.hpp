#pragma once

#include <complex>

namespace emap {

// Region branches of the inverse of u e^u, matched to the dynamical partition
// in the shifted coordinate u = z - (1-a):
//   Principal: T_0 region, Im u in (-pi, pi)
//   Upper:     T_1 upper strip, Im u in (0, 2pi) band (closure includes the
//              real ray (-inf,-1] and the zeta-side curve)
//   Lower:     mirror of Upper
enum class WBranch { Principal, Upper, Lower };

struct WResult {
    std::complex<double> u;
    double residual = 0.0;  // |u e^u - v| / max(1, |v|)
    int iterations = 0;
    bool converged = false;
};

// Solves u e^u = v on the requested region branch.  For boundary-adjacent v
// (real v reached as a limit) the returned u is the closure limit on the
// matching seam.
WResult lambert_w(WBranch br, std::complex<double> v);

// Same, but tries the caller's start point before the standard seed ladder.
WResult lambert_w_seeded(WBranch br, std::complex<double> v, std::complex<double> u0);

// Log-form variant for |v| beyond the representable range: solves
// u + log u = L where L = log v on the branch-adjusted sheet.  Never forms
// e^u.  Requires Re L >> |Im L| (far-right images), which is the only way
// such v arise here.
std::complex<double> lambert_w_log(WBranch br, double log_abs_v, double arg_v);

}  // namespace emap
