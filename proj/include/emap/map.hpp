#pragma once

#include <complex>

#include "emap/errors.hpp"

namespace emap {

using cplx = std::complex<double>;

// Parameters of f_a(z) = a(z-(1-a))e^{z+a} plus derived constants.
// Immutable after construction via make_params().
struct Params {
    double a = 3.0;    // a >= 3
    double R = 0.0;    // base abscissa for tails, set by choose_R
    double p_a = 0.0;  // repelling fixed point in (-a, 1-a)
    double q_a = 0.0;  // the other real preimage of p_a, in (-inf, -a)
};

// (log-magnitude, argument) image representation; arg is kept unreduced.
struct LogPolar {
    double logmag = 0.0;
    double arg = 0.0;
    bool minus_infinity = false;  // z == 1-a exactly, |f| = 0
};

// Direct evaluation.  Throws eval_overflow when |f_a(z)| exceeds the
// representable range.
cplx eval_f(cplx z, const Params& p);

// Derivative a e^{z+a} (z+a).  Same overflow contract as eval_f.
cplx eval_df(cplx z, const Params& p);

// Overflow-safe evaluation; never throws for finite z.
LogPolar eval_f_logpolar(cplx z, const Params& p);

// Log-magnitude of f_a at z without forming the value.
double eval_f_logmag(cplx z, const Params& p);

// Reduce an angle to (-pi, pi].
double reduce_arg(double arg);

// (q_a, p_a) for a >= 3, residuals < 1e-12.
std::pair<double, double> real_fixed_points(double a);

// Lemma-2.3 style annulus bound for the image of the segment
// L[x] = {x + iy, zeta_{-1}(x) <= y <= zeta_1(x)}, returned as log-magnitudes:
// rmin = log f_a(x), rmax = log|f_a(x + i zeta_1(x))|.  Requires x > 1-a.
std::pair<double, double> annulus_bounds_log(double x, const Params& p);

// Builds Params: roots p_a, q_a and the tails base abscissa R.
Params make_params(double a);

}  // namespace emap
