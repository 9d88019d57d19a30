#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <span>
#include <string>
#include <vector>

#include "emap/errors.hpp"
#include "emap/symbols.hpp"

namespace emap {

using bigint = boost::multiprecision::cpp_int;

// Binary itinerary over {0,1}, lazily indexed.  Two storage forms:
//  - Literal: finite prefix followed by a repeating cycle
//  - Generator: tau 11 0^{k_1} 11 0^{k_2} ... ; blocks beyond the provided
//    list keep growing by one so the sequence never becomes periodic
// A shift is an offset view, so symbol access stays O(blocks).
class BSeq {
public:
    enum class Form { Literal, Generator };

    static BSeq literal(std::vector<int> prefix, std::vector<int> cycle);
    static BSeq generator(std::vector<int> tau, std::vector<int> ks);

    int at(std::size_t i) const;
    BSeq shifted(std::size_t k) const;
    Form form() const { return form_; }
    std::size_t offset() const { return offset_; }

    // True when every symbol from some index on is 0 (excluded by the
    // combinatorics of real points; callers that trace curves must reject).
    bool all_zero_tail() const;

    // Literal structure viewed from the current offset: (preperiod, period).
    std::pair<std::size_t, std::size_t> literal_shape() const;

    // XOR of symbols in [0, i).
    int parity_before(std::size_t i) const;

    const std::vector<int>& tau() const { return tau_; }
    const std::vector<int>& ks() const { return ks_; }

    std::string to_text() const;

private:
    BSeq() = default;
    int raw(std::size_t i) const;  // pre-offset indexing

    Form form_ = Form::Literal;
    std::size_t offset_ = 0;
    std::vector<int> prefix_, cycle_;  // Literal
    std::vector<int> tau_, ks_;        // Generator
};

// Allowable extended sequence: a BSeq plus the choice of lift.  Convention:
// lift 1 starts with subscript 1.  Internally the subscript of s_k is 1
// exactly when the k+1-st angle bit is 1, with b_1 = (lift == 1) and
// b_{k+1} = b_k xor t_{k-1}.
class ASeq {
public:
    ASeq(BSeq base, int lift_index);

    ExtSym at(std::size_t k) const;
    std::vector<ExtSym> prefix(std::size_t n) const;  // O(n) bulk expansion
    ASeq shifted(std::size_t k) const;
    const BSeq& base() const { return base_; }
    int lift_index() const { return lift_; }

    // k+1-st binary angle digit of this sequence (b_1 = leading).
    int angle_bit(std::size_t k) const;  // b_{k+1}, 0-indexed accessor

    std::string to_text() const;

private:
    BSeq base_;
    int lift_ = 1;
};

// Exact angle as a reduced rational in [0, 1).
struct Angle {
    bigint num = 0;
    bigint den = 1;

    void reduce();
    bool operator==(const Angle& o) const { return num * o.den == o.num * den; }
    bool operator<(const Angle& o) const { return num * o.den < o.num * den; }
    Angle doubled() const;
    double to_double() const;
    std::string to_text() const;
};

bool is_allowable(std::span<const ExtSym> prefix);

BSeq project(const ASeq& s);
ASeq lift(const BSeq& t, int which);  // rejects all-zero tails
ASeq lift_unchecked(const BSeq& t, int which);

// Exact angle of an eventually periodic allowable sequence.
Angle angle_of(const ASeq& s);

// Inverse: itinerary realizing the angle; rejects angles whose doubling orbit
// meets a quarter point {0, 1/4, 1/2, 3/4}.
ASeq itinerary_of_angle(const Angle& theta);

// Circle-order comparison via binary digits; works for generator sequences.
// Returns true when angle(a) < angle(b); sequences must differ within cap.
bool angle_less(const ASeq& a, const ASeq& b, std::size_t cap = 1 << 20);

// Eq-4 style non-landing sequence.
BSeq build_nonlanding(std::vector<int> tau, std::vector<int> ks);

// 1-based position of the first symbol of the (i+1)-th "11" block in a
// generator sequence (the p_i bookkeeping of the block construction).
std::size_t generator_block_position(const BSeq& g, std::size_t i);

// Preperiodic bracketing pair (s_n, r_n) of a generator sequence: common
// prefix through block n, then cycle 0^63 1 (computable stand-in for the
// all-zero tail) resp. cycle 1.
std::pair<BSeq, BSeq> bracket_seqs(const BSeq& T, std::size_t n);

// CLI text grammar: "PREFIX(CYCLE)" e.g. "101(10)", or generator form
// "tau=1;ks=2,3,5".
BSeq parse_bseq(const std::string& text);

}  // namespace emap
