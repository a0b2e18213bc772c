#include "zlab/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace zlab {

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

namespace {

// Packed-exponent fast path: up to 12 variables, each exponent in [-255,255],
// coefficients within int64.  Keys add componentwise without carries because
// every field keeps an offset of 256 (so sums stay below 1024 = 2^10).
constexpr int kPackBits = 10;
constexpr int kPackVars = 12;
using PackKey = unsigned __int128;

struct PackedTerm {
    PackKey key;
    __int128 coef;
};

struct KeyHash {
    size_t operator()(PackKey k) const {
        uint64_t lo = (uint64_t)k, hi = (uint64_t)(k >> 64);
        uint64_t x = lo ^ (hi * 0x9e3779b97f4a7c15ull);
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdull;
        x ^= x >> 33;
        return (size_t)x;
    }
};


// Minimal open-addressing map for the packed fast paths; zero coefficients
// stay in place (absent == zero), so no tombstones are needed.
struct OpenTable {
    std::vector<PackKey> keys;
    std::vector<__int128> vals;
    std::vector<uint8_t> used;
    size_t mask = 0, count = 0;

    explicit OpenTable(size_t expect) {
        size_t cap = 16;
        while (cap < 2 * expect + 8) cap <<= 1;
        keys.resize(cap);
        vals.resize(cap);
        used.assign(cap, 0);
        mask = cap - 1;
    }
    static size_t hash(PackKey k) {
        uint64_t lo = (uint64_t)k, hi = (uint64_t)(k >> 64);
        uint64_t x = lo ^ (hi * 0x9e3779b97f4a7c15ull);
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdull;
        x ^= x >> 33;
        return (size_t)x;
    }
    void grow() {
        OpenTable bigger(keys.size());
        for (size_t i = 0; i < keys.size(); ++i)
            if (used[i]) *bigger.slot(keys[i]) += vals[i];
        *this = std::move(bigger);
    }
    __int128* slot(PackKey k) {
        if (2 * (count + 1) > keys.size()) grow();
        size_t i = hash(k) & mask;
        while (used[i]) {
            if (keys[i] == k) return &vals[i];
            i = (i + 1) & mask;
        }
        used[i] = 1;
        keys[i] = k;
        vals[i] = 0;
        ++count;
        return &vals[i];
    }
    __int128* find(PackKey k) {
        size_t i = hash(k) & mask;
        while (used[i]) {
            if (keys[i] == k) return &vals[i];
            i = (i + 1) & mask;
        }
        return nullptr;
    }
};

bool packable(const LaurentPoly& p, double& coef_mag) {
    if (p.nvars() > kPackVars) return false;
    coef_mag = 0;
    for (const auto& [e, c] : p.terms()) {
        for (int32_t x : e)
            if (x < -255 || x > 255) return false;
        if (!c.fits_ll()) return false;
        coef_mag += std::abs((double)c.to_ll());
    }
    return true;
}

PackKey pack(const LaurentPoly::Exp& e, int offset) {
    PackKey k = 0;
    for (size_t i = 0; i < e.size(); ++i)
        k |= (PackKey)(uint64_t)(e[i] + offset) << (kPackBits * i);
    return k;
}

LaurentPoly::Exp unpack(PackKey k, int nvars, int offset) {
    LaurentPoly::Exp e(nvars);
    for (int i = 0; i < nvars; ++i)
        e[i] = (int32_t)((uint64_t)(k >> (kPackBits * i)) & 1023u) - offset;
    return e;
}

BigInt bigint_from_i128(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 a = neg ? -(unsigned __int128)v : (unsigned __int128)v;
    BigInt r((long long)(uint64_t)(a >> 64));
    r = r * BigInt(4294967296LL) * BigInt(4294967296LL) + BigInt((long long)(uint64_t)(a & 0xffffffffffffffffull));
    return neg ? -r : r;
}

std::vector<PackedTerm> pack_poly(const LaurentPoly& p, int offset) {
    std::vector<PackedTerm> out;
    out.reserve(p.term_count());
    for (const auto& [e, c] : p.terms()) out.push_back({pack(e, offset), (__int128)c.to_ll()});
    return out;
}

LaurentPoly unpack_poly(int nvars, const std::vector<std::pair<PackKey, __int128>>& terms, int offset) {
    LaurentPoly r(nvars);
    for (auto& [k, c] : terms)
        if (c != 0) r.set_term(unpack(k, nvars, offset), bigint_from_i128(c));
    return r;
}

}  // namespace

void LaurentPoly::set_term(Exp e, BigInt c) { terms_[std::move(e)] = std::move(c); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    double mag_a = 0, mag_b = 0;
    if (packable(a, mag_a) && packable(b, mag_b) && mag_a * mag_b < 1e33) {
        auto pa = pack_poly(a, 256), pb = pack_poly(b, 256);
        OpenTable acc(4 * std::max(pa.size(), pb.size()));
        for (const auto& ta : pa)
            for (const auto& tb : pb) *acc.slot(ta.key + tb.key) += ta.coef * tb.coef;
        std::vector<std::pair<PackKey, __int128>> flat;
        flat.reserve(acc.count);
        for (size_t i = 0; i < acc.keys.size(); ++i)
            if (acc.used[i]) flat.push_back({acc.keys[i], acc.vals[i]});
        return unpack_poly(a.nvars_, flat, 512);
    }
    LaurentPoly r(a.nvars_);
    LaurentPoly::Exp e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

namespace {

// packed exact division; nullopt when not applicable or not divisible
std::optional<LaurentPoly> divide_packed(const LaurentPoly& num, const LaurentPoly& den,
                                         bool& applicable) {
    applicable = false;
    double mag_n = 0, mag_d = 0;
    if (!packable(num, mag_n) || !packable(den, mag_d) || mag_n * mag_d >= 1e33) return std::nullopt;
    applicable = true;
    // remainder keys live at offset 512, divisor keys at offset 256; quotient
    // keys at offset 256 so that qk + divisor key lands back at offset 512
    // with every field below 1024 (no cross-variable carries); the running
    // remainder sits in a hash map with a lazily-deleted max-heap on top
    OpenTable rem(8 * num.term_count());
    std::priority_queue<PackKey> heap;
    for (const auto& [e, c] : num.terms()) {
        PackKey k = pack(e, 512);
        *rem.slot(k) = (__int128)c.to_ll();
        heap.push(k);
    }
    auto pd = pack_poly(den, 256);
    PackKey lead_d = 0;
    __int128 lead_dc = 0;
    for (auto& t : pd)
        if (t.key >= lead_d) { lead_d = t.key; lead_dc = t.coef; }
    std::vector<std::pair<PackKey, __int128>> quot;
    while (!heap.empty()) {
        PackKey lead_r = heap.top();
        heap.pop();
        __int128* lit = rem.find(lead_r);
        if (!lit || *lit == 0) continue;  // stale heap entry
        __int128 lead_rc = *lit;
        PackKey qk = 0;
        for (int i = 0; i < num.nvars(); ++i) {
            int fr = (int)((uint64_t)(lead_r >> (kPackBits * i)) & 1023u);
            int fd = (int)((uint64_t)(lead_d >> (kPackBits * i)) & 1023u);
            int fq = fr - fd;  // = quotient exponent + 256
            if (fq < 0) return std::nullopt;  // monomial does not divide
            if (fq > 511) { applicable = false; return std::nullopt; }  // out of packed range
            qk |= (PackKey)(uint64_t)fq << (kPackBits * i);
        }
        if (lead_rc % lead_dc != 0) return std::nullopt;
        __int128 qc = lead_rc / lead_dc;
        quot.push_back({qk, qc});
        for (auto& t : pd) {
            PackKey k = qk + t.key;  // offset 512 domain of rem
            __int128* cell = rem.slot(k);
            bool was_zero = *cell == 0;
            *cell -= qc * t.coef;
            // remainders of non-divisible inputs can grow geometrically; keep
            // every cell within int64 so the products above cannot overflow,
            // and punt to the exact path otherwise
            __int128 mag = *cell < 0 ? -*cell : *cell;
            if (mag > (((__int128)1) << 63)) {
                applicable = false;
                return std::nullopt;
            }
            if (was_zero && *cell != 0 && k < lead_r) heap.push(k);
        }
    }
    for (size_t i = 0; i < rem.keys.size(); ++i)
        if (rem.used[i] && rem.vals[i] != 0) return std::nullopt;
    return unpack_poly(num.nvars(), quot, 256);
}

}  // namespace

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) return std::nullopt;
    if (num.is_zero()) return LaurentPoly(num.nvars_);
    {
        // fast path with packed exponents; falls back when ranges overflow
        bool applicable = false;
        // guard: remainder keys live at offset 512, so operand fields must fit
        // after shifting by the denominator lead; the +-255 packable bound keeps
        // every intermediate inside [0, 1023]
        auto q = divide_packed(num, den, applicable);
        if (applicable) return q;
    }
    int nv = num.nvars_;
    // shift both operands into the ordinary polynomial ring so that lex
    // leading-term division is a terminating well-order; the quotient picks
    // up the monomial shift difference
    // exact minimal exponent per variable; by the Minkowski sum of Newton
    // polytopes, min(num) = min(quot) + min(den) whenever the quotient exists
    Exp shift_n = num.terms_.begin()->first, shift_d = den.terms_.begin()->first;
    for (const auto& [e, c] : num.terms_)
        for (int i = 0; i < nv; ++i) shift_n[i] = std::min(shift_n[i], e[i]);
    for (const auto& [e, c] : den.terms_)
        for (int i = 0; i < nv; ++i) shift_d[i] = std::min(shift_d[i], e[i]);
    std::map<Exp, BigInt> rem, d;
    {
        Exp e(nv);
        for (const auto& [en, c] : num.terms_) {
            for (int i = 0; i < nv; ++i) e[i] = en[i] - shift_n[i];
            rem[e] = c;
        }
        for (const auto& [ed, c] : den.terms_) {
            for (int i = 0; i < nv; ++i) e[i] = ed[i] - shift_d[i];
            d[e] = c;
        }
    }
    LaurentPoly quot(nv);
    auto lead_d = std::prev(d.end());
    Exp e(nv), f(nv);
    while (!rem.empty()) {
        auto lead_r = std::prev(rem.end());
        for (int i = 0; i < nv; ++i) {
            e[i] = lead_r->first[i] - lead_d->first[i];
            if (e[i] < 0) return std::nullopt;  // monomial does not divide
        }
        BigInt q, r;
        BigInt::divrem(lead_r->second, lead_d->second, q, r);
        if (!r.is_zero()) return std::nullopt;
        Exp qe = e;
        for (int i = 0; i < nv; ++i) qe[i] += shift_n[i] - shift_d[i];
        quot.add_term(qe, q);
        for (const auto& [ed, cd] : d) {
            for (int i = 0; i < nv; ++i) f[i] = e[i] + ed[i];
            auto it = rem.find(f);
            BigInt nc = (it == rem.end() ? BigInt() : it->second) - q * cd;
            if (nc.is_zero()) {
                if (it != rem.end()) rem.erase(it);
            } else if (it == rem.end()) {
                rem.emplace(f, std::move(nc));
            } else {
                it->second = std::move(nc);
            }
        }
    }
    return quot;
}

std::optional<Rational> LaurentPoly::weighted_max_degree(const std::vector<Rational>& w) const {
    std::optional<Rational> best;
    for (const auto& [e, c] : terms_) {
        Rational d(0);
        for (int i = 0; i < nvars_; ++i)
            if (e[i] != 0) d += Rational((long long)e[i]) * w[i];
        if (!best || d > *best) best = d;
    }
    return best;
}

int32_t LaurentPoly::max_degree(int i) const {
    int32_t best = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e[i] > best) best = e[i];
        first = false;
    }
    return best;
}

std::string LaurentPoly::to_string(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool leading = true;
    // print in reverse lex so the leading term comes first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const BigInt& c = it->second;
        if (!leading) os << (c.is_negative() ? " - " : " + ");
        else if (c.is_negative()) os << "-";
        leading = false;
        BigInt a = BigInt::abs(c);
        bool any_var = std::any_of(it->first.begin(), it->first.end(), [](int32_t x) { return x != 0; });
        if (a != BigInt(1) || !any_var) os << a.to_string();
        bool star = a != BigInt(1);
        for (int i = 0; i < nvars_; ++i) {
            if (it->first[i] == 0) continue;
            if (star || !any_var) os << "*";
            star = true;
            if (i < (int)var_names.size()) os << var_names[i];
            else os << "x" << i;
            if (it->first[i] != 1) os << "^" << it->first[i];
        }
    }
    return os.str();
}

void TermBudget::charge(size_t terms) {
    used += terms;
    if (used > limit)
        throw BudgetExceeded("symbolic term budget exceeded (" + std::to_string(used) + " > " +
                             std::to_string(limit) + ")");
}

}  // namespace zlab
