#include "emap/symbolic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace emap {

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw domain_error(what);
}

int digit_from_char(char c) {
    require(c == '0' || c == '1', "sequence text: symbols must be 0/1");
    return c - '0';
}

}  // namespace

BSeq BSeq::literal(std::vector<int> prefix, std::vector<int> cycle) {
    require(!cycle.empty(), "BSeq::literal: cycle must be nonempty");
    for (int s : prefix) require(s == 0 || s == 1, "BSeq symbols are 0/1");
    for (int s : cycle) require(s == 0 || s == 1, "BSeq symbols are 0/1");
    BSeq b;
    b.form_ = Form::Literal;
    b.prefix_ = std::move(prefix);
    b.cycle_ = std::move(cycle);
    return b;
}

BSeq BSeq::generator(std::vector<int> tau, std::vector<int> ks) {
    require(!ks.empty(), "BSeq::generator: needs at least one block length");
    for (int s : tau) require(s == 0 || s == 1, "BSeq symbols are 0/1");
    for (int k : ks) require(k >= 1, "BSeq::generator: block lengths must be positive");
    BSeq b;
    b.form_ = Form::Generator;
    b.tau_ = std::move(tau);
    b.ks_ = std::move(ks);
    return b;
}

int BSeq::raw(std::size_t i) const {
    if (form_ == Form::Literal) {
        if (i < prefix_.size()) return prefix_[i];
        return cycle_[(i - prefix_.size()) % cycle_.size()];
    }
    // Generator: tau, then groups 1 1 0^{k_j}; blocks beyond the list grow by
    // one per extra index.
    if (i < tau_.size()) return tau_[i];
    std::size_t r = i - tau_.size();
    std::size_t j = 0;
    for (;; ++j) {
        const std::size_t kj =
            j < ks_.size() ? static_cast<std::size_t>(ks_[j])
                           : static_cast<std::size_t>(ks_.back()) + (j - ks_.size() + 1);
        const std::size_t len = 2 + kj;
        if (r < len) return r < 2 ? 1 : 0;
        r -= len;
    }
}

int BSeq::at(std::size_t i) const { return raw(i + offset_); }

BSeq BSeq::shifted(std::size_t k) const {
    BSeq b = *this;
    b.offset_ += k;
    return b;
}

bool BSeq::all_zero_tail() const {
    if (form_ == Form::Generator) return false;
    return std::all_of(cycle_.begin(), cycle_.end(), [](int s) { return s == 0; });
}

std::pair<std::size_t, std::size_t> BSeq::literal_shape() const {
    require(form_ == Form::Literal, "literal_shape: generator sequences are aperiodic");
    const std::size_t pre = prefix_.size() > offset_ ? prefix_.size() - offset_ : 0;
    return {pre, cycle_.size()};
}

int BSeq::parity_before(std::size_t i) const {
    int par = 0;
    for (std::size_t k = 0; k < i; ++k) par ^= at(k);
    return par;
}

std::string BSeq::to_text() const {
    std::ostringstream os;
    if (form_ == Form::Literal && offset_ == 0) {
        for (int s : prefix_) os << s;
        os << '(';
        for (int s : cycle_) os << s;
        os << ')';
        return os.str();
    }
    if (form_ == Form::Generator && offset_ == 0) {
        os << "tau=";
        for (int s : tau_) os << s;
        os << ";ks=";
        for (std::size_t i = 0; i < ks_.size(); ++i) os << (i ? "," : "") << ks_[i];
        return os.str();
    }
    os << "[";
    for (std::size_t i = 0; i < 24; ++i) os << at(i);
    os << "...]";
    return os.str();
}

ASeq::ASeq(BSeq base, int lift_index) : base_(std::move(base)), lift_(lift_index) {
    require(lift_ == 1 || lift_ == 2, "ASeq: lift index must be 1 or 2");
}

int ASeq::angle_bit(std::size_t k) const {
    const int b1 = lift_ == 1 ? 1 : 0;
    return b1 ^ base_.parity_before(k);
}

ExtSym ASeq::at(std::size_t k) const {
    const int bit = angle_bit(k);
    return make_ext(base_.at(k), bit ? 1 : 2);
}

std::vector<ExtSym> ASeq::prefix(std::size_t n) const {
    std::vector<ExtSym> out;
    out.reserve(n);
    int bit = lift_ == 1 ? 1 : 0;
    for (std::size_t k = 0; k < n; ++k) {
        const int t = base_.at(k);
        out.push_back(make_ext(t, bit ? 1 : 2));
        bit ^= t;
    }
    return out;
}

ASeq ASeq::shifted(std::size_t k) const {
    const int bit = angle_bit(k);
    return ASeq(base_.shifted(k), bit ? 1 : 2);
}

std::string ASeq::to_text() const {
    return base_.to_text() + "^" + std::to_string(lift_);
}

void Angle::reduce() {
    using boost::multiprecision::gcd;
    if (den < 0) { den = -den; num = -num; }
    num %= den;
    if (num < 0) num += den;
    bigint g = gcd(num, den);
    if (g > 1) { num /= g; den /= g; }
}

Angle Angle::doubled() const {
    Angle a{num * 2, den};
    a.reduce();
    return a;
}

double Angle::to_double() const {
    return static_cast<double>(bigint((num * 1000000000000000000LL) / den)) / 1e18;
}

std::string Angle::to_text() const {
    return num.str() + "/" + den.str();
}

bool is_allowable(std::span<const ExtSym> prefix) {
    for (std::size_t i = 0; i + 1 < prefix.size(); ++i)
        if (!transition_allowed(prefix[i], prefix[i + 1])) return false;
    return true;
}

BSeq project(const ASeq& s) { return s.base(); }

ASeq lift_unchecked(const BSeq& t, int which) { return ASeq(t, which); }

ASeq lift(const BSeq& t, int which) {
    require(!t.all_zero_tail(), "lift: sequence ends in all zeros (no A-sequence)");
    return ASeq(t, which);
}

Angle angle_of(const ASeq& s) {
    const auto [pre, q] = s.base().literal_shape();
    // Bit sequence is eventually periodic with period q or 2q depending on the
    // cycle parity.
    int cyc_par = 0;
    for (std::size_t i = 0; i < q; ++i) cyc_par ^= s.base().at(pre + i);
    const std::size_t qb = cyc_par ? 2 * q : q;
    const std::size_t P = pre;

    Angle a;
    bigint scale = 1;
    bigint head = 0;
    for (std::size_t k = 0; k < P; ++k) {
        head = head * 2 + s.angle_bit(k);
        scale *= 2;
    }
    bigint cyc = 0;
    bigint cden = (bigint(1) << qb) - 1;
    for (std::size_t m = 0; m < qb; ++m) cyc = cyc * 2 + s.angle_bit(P + m);
    // theta = head/2^P + cyc / (2^P (2^qb - 1))
    a.num = head * cden + cyc;
    a.den = scale * cden;
    a.reduce();
    return a;
}

ASeq itinerary_of_angle(const Angle& theta) {
    Angle t = theta;
    t.reduce();
    // Split denominator into 2^e * d with d odd.
    bigint d = t.den;
    std::size_t e = 0;
    while (d % 2 == 0) { d /= 2; ++e; }
    // Multiplicative order of 2 mod d gives the bit period.
    std::size_t Q = 1;
    if (d > 1) {
        bigint pw = 2 % d;
        while (pw != 1) {
            pw = (pw * 2) % d;
            ++Q;
            require(Q < (1u << 22), "itinerary_of_angle: period search overflow");
        }
    }
    const std::size_t P = e;

    // Walk the doubling orbit, rejecting quarter points, collecting bits.
    std::vector<int> bits;
    Angle cur = t;
    const auto quarter = [](const Angle& x) {
        return (x.num == 0) || (x.den == 2) || (x.den == 4);
    };
    for (std::size_t k = 0; k < P + Q + 1; ++k) {
        require(!quarter(cur), "itinerary_of_angle: doubling orbit hits a quarter point");
        Angle dbl{cur.num * 2, cur.den};
        bits.push_back(dbl.num >= dbl.den ? 1 : 0);
        dbl.reduce();
        cur = dbl;
    }

    // Symbols from consecutive bit pairs; digits t_k = b_{k+1} xor b_{k+2}.
    std::vector<int> digits;
    for (std::size_t k = 0; k + 1 < bits.size(); ++k) digits.push_back(bits[k] ^ bits[k + 1]);
    std::vector<int> pre_digits(digits.begin(), digits.begin() + P);
    std::vector<int> cyc_digits(digits.begin() + P, digits.begin() + P + Q);
    BSeq base = BSeq::literal(std::move(pre_digits), std::move(cyc_digits));
    return ASeq(std::move(base), bits[0] ? 1 : 2);
}

bool angle_less(const ASeq& a, const ASeq& b, std::size_t cap) {
    int ba = a.lift_index() == 1 ? 1 : 0;
    int bb = b.lift_index() == 1 ? 1 : 0;
    for (std::size_t k = 0; k < cap; ++k) {
        if (ba != bb) return ba < bb;
        ba ^= a.base().at(k);
        bb ^= b.base().at(k);
    }
    return false;  // indistinguishable within cap
}

BSeq build_nonlanding(std::vector<int> tau, std::vector<int> ks) {
    return BSeq::generator(std::move(tau), std::move(ks));
}

std::size_t generator_block_position(const BSeq& g, std::size_t i) {
    require(g.form() == BSeq::Form::Generator, "block positions need generator form");
    const std::size_t n = g.tau().size();
    std::size_t pos = n + 1;  // 1-based first symbol after tau
    for (std::size_t j = 0; j < i; ++j) {
        const auto& ks = g.ks();
        const std::size_t kj = j < ks.size()
                                   ? static_cast<std::size_t>(ks[j])
                                   : static_cast<std::size_t>(ks.back()) + (j - ks.size() + 1);
        pos += 2 + kj;
    }
    return pos;
}

std::pair<BSeq, BSeq> bracket_seqs(const BSeq& T, std::size_t n) {
    require(T.form() == BSeq::Form::Generator, "bracket_seqs: needs generator form");
    require(n >= 1 && n <= T.ks().size(), "bracket_seqs: n outside built blocks");
    std::vector<int> prefix;
    for (int s : T.tau()) prefix.push_back(s);
    for (std::size_t j = 0; j < n; ++j) {
        prefix.push_back(1);
        prefix.push_back(1);
        for (int z = 0; z < T.ks()[j]; ++z) prefix.push_back(0);
    }
    // The all-zero tail of the paper's s_n has no A-sequence; use a long zero
    // block closed by a single 1 as the computable stand-in.
    std::vector<int> szero(63, 0);
    szero.push_back(1);
    BSeq s = BSeq::literal(prefix, std::move(szero));
    BSeq r = BSeq::literal(std::move(prefix), {1});
    return {std::move(s), std::move(r)};
}

BSeq parse_bseq(const std::string& text) {
    if (text.rfind("tau=", 0) == 0) {
        const auto semi = text.find(';');
        require(semi != std::string::npos && text.compare(semi + 1, 3, "ks=") == 0,
                "generator grammar is tau=BITS;ks=INTS");
        std::vector<int> tau;
        for (std::size_t i = 4; i < semi; ++i) tau.push_back(digit_from_char(text[i]));
        std::vector<int> ks;
        std::stringstream ss(text.substr(semi + 4));
        std::string item;
        while (std::getline(ss, item, ',')) {
            require(!item.empty(), "generator grammar: empty block length");
            ks.push_back(std::stoi(item));
        }
        return BSeq::generator(std::move(tau), std::move(ks));
    }
    const auto open = text.find('(');
    const auto close = text.find(')');
    require(open != std::string::npos && close == text.size() - 1 && close > open,
            "sequence grammar is PREFIX(CYCLE)");
    std::vector<int> prefix, cycle;
    for (std::size_t i = 0; i < open; ++i) prefix.push_back(digit_from_char(text[i]));
    for (std::size_t i = open + 1; i < close; ++i) cycle.push_back(digit_from_char(text[i]));
    return BSeq::literal(std::move(prefix), std::move(cycle));
}

}  // namespace emap
