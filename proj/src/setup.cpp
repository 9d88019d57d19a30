#include "emap/map.hpp"
#include "emap/tails.hpp"

namespace emap {

Params make_params(double a) {
    if (!(a >= 3.0)) throw domain_error("make_params: requires a >= 3");
    Params p;
    p.a = a;
    const auto [q, pa] = real_fixed_points(a);
    p.q_a = q;
    p.p_a = pa;
    p.R = choose_R(p);
    return p;
}

}  // namespace emap
