#include "pellarin/field.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace pellarin {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

bool is_prime_u32(u32 v) {
    if (v < 2) return false;
    for (u64 d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

u32 pinv_scalar(u32 p, u32 a) {
    // extended Euclid on integers
    long long t = 0, newt = 1, r = p, newr = a % p;
    while (newr != 0) {
        long long quo = r / newr;
        std::swap(t -= quo * newt, newt);
        std::swap(r -= quo * newr, newr);
    }
    if (r != 1) throw DomainError("inversion of zero in F_" + std::to_string(p));
    return static_cast<u32>(((t % p) + p) % p);
}

// ---------------------------------------------------------------------------
// Generic dense polynomial algebra over a small coefficient field policy.
// Policy provides: Elem, zero(), one(), is_zero(e), eq(a,b), add, sub, mul,
// inv, all() (every element, lexicographic).
// ---------------------------------------------------------------------------

template <class F> struct PolyAlg {
    using E = typename F::Elem;
    using P = std::vector<E>;

    static void trim(const F& f, P& a) {
        while (!a.empty() && f.is_zero(a.back())) a.pop_back();
    }
    static int deg(const F& f, const P& a) {
        for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
            if (!f.is_zero(a[static_cast<std::size_t>(i)])) return i;
        return -1;
    }
    static P mul(const F& f, const P& a, const P& b) {
        if (a.empty() || b.empty()) return {};
        P out(a.size() + b.size() - 1, f.zero());
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (f.is_zero(a[i])) continue;
            for (std::size_t j = 0; j < b.size(); ++j)
                out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
        }
        return out;
    }
    // a mod m, m monic of degree dm
    static void reduce(const F& f, P& a, const P& m) {
        int dm = deg(f, m);
        for (int i = deg(f, a); i >= dm; --i) {
            E c = a[static_cast<std::size_t>(i)];
            if (f.is_zero(c)) continue;
            for (int k = 0; k <= dm; ++k) {
                std::size_t pos = static_cast<std::size_t>(i - dm + k);
                a[pos] = f.sub(a[pos], f.mul(c, m[static_cast<std::size_t>(k)]));
            }
        }
        if (a.size() > static_cast<std::size_t>(dm)) a.resize(static_cast<std::size_t>(dm), f.zero());
        while (a.size() < static_cast<std::size_t>(dm)) a.push_back(f.zero());
    }
    static P mulmod(const F& f, const P& a, const P& b, const P& m) {
        P out = mul(f, a, b);
        reduce(f, out, m);
        return out;
    }
    // quotient/remainder by monic divisor
    static std::pair<P, P> divrem(const F& f, P a, const P& d) {
        int dd = deg(f, d);
        int da = deg(f, a);
        if (da < dd) return {P{}, a};
        P quo(static_cast<std::size_t>(da - dd + 1), f.zero());
        for (int i = da; i >= dd; --i) {
            E c = a[static_cast<std::size_t>(i)];
            if (f.is_zero(c)) continue;
            quo[static_cast<std::size_t>(i - dd)] = c;
            for (int k = 0; k <= dd; ++k) {
                std::size_t pos = static_cast<std::size_t>(i - dd + k);
                a[pos] = f.sub(a[pos], f.mul(c, d[static_cast<std::size_t>(k)]));
            }
        }
        trim(f, a);
        trim(f, quo);
        return {quo, a};
    }
    // inverse of a modulo monic m (extended Euclid); throws DomainError when
    // gcd(a, m) != 1
    static P invmod(const F& f, P a, const P& m) {
        reduce_copyless(f, a, m);
        P r0 = m, r1 = a;
        trim(f, r0);
        trim(f, r1);
        P t0{}, t1{f.one()};
        while (deg(f, r1) >= 0) {
            // make r1 monic for divrem, tracking the scalar
            E lead = r1[static_cast<std::size_t>(deg(f, r1))];
            if (!f.eq(lead, f.one())) {
                E li = f.inv(lead);
                for (auto& e : r1) e = f.mul(e, li);
                for (auto& e : t1) e = f.mul(e, li);
            }
            auto [quo, rem] = divrem(f, r0, r1);
            P t2 = t0; // t0 - quo*t1
            P qt = mul(f, quo, t1);
            if (t2.size() < qt.size()) t2.resize(qt.size(), f.zero());
            for (std::size_t i = 0; i < qt.size(); ++i) t2[i] = f.sub(t2[i], qt[i]);
            trim(f, t2);
            r0 = std::move(r1);
            t0 = std::move(t1);
            r1 = std::move(rem);
            t1 = std::move(t2);
        }
        if (deg(f, r0) != 0)
            throw DomainError("inversion of a non-unit (zero or shared factor with modulus)");
        E li = f.inv(r0[0]);
        for (auto& e : t0) e = f.mul(e, li);
        reduce(f, t0, m);
        return t0;
    }
    static void reduce_copyless(const F& f, P& a, const P& m) { reduce(f, a, m); }

    // all monic polynomials of exact degree d, lexicographic (c_0 major)
    static std::vector<P> monics(const F& f, int d) {
        std::vector<E> elems = f.all();
        std::vector<P> out;
        std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
        while (true) {
            P poly(static_cast<std::size_t>(d + 1), f.zero());
            for (int i = 0; i < d; ++i) poly[static_cast<std::size_t>(i)] = elems[idx[static_cast<std::size_t>(i)]];
            poly[static_cast<std::size_t>(d)] = f.one();
            out.push_back(std::move(poly));
            int pos = d - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] + 1 == elems.size()) {
                idx[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
        }
        return out;
    }

    static bool irreducible(const F& f, const P& m) {
        int dm = deg(f, m);
        if (dm <= 0) return false;
        if (dm == 1) return true;
        for (int e = 1; 2 * e <= dm; ++e) {
            for (const P& cand : monics(f, e)) {
                auto [quo, rem] = divrem(f, m, cand);
                (void)quo;
                if (deg(f, rem) < 0) return false;
            }
        }
        return true;
    }
};

// F_p coefficients as raw u32
struct FpF {
    u32 p;
    using Elem = u32;
    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem sub(Elem a, Elem b) const { return (a + p - b) % p; }
    Elem mul(Elem a, Elem b) const { return static_cast<u32>((static_cast<u64>(a) * b) % p); }
    Elem inv(Elem a) const { return pinv_scalar(p, a); }
    std::vector<Elem> all() const {
        std::vector<Elem> v(p);
        for (u32 i = 0; i < p; ++i) v[i] = i;
        return v;
    }
};

// F_q coefficients as F_p vectors of length m0, reduced mod modulus_q
struct FqF {
    const FieldSpec* S;
    using Elem = std::vector<u32>;
    FpF fp() const { return FpF{S->p}; }
    Elem zero() const { return Elem(S->m0, 0); }
    Elem one() const {
        Elem e(S->m0, 0);
        e[0] = 1 % S->p;
        return e;
    }
    bool is_zero(const Elem& a) const {
        return std::all_of(a.begin(), a.end(), [](u32 c) { return c == 0; });
    }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem add(const Elem& a, const Elem& b) const {
        Elem o(S->m0);
        for (u32 i = 0; i < S->m0; ++i) o[i] = (a[i] + b[i]) % S->p;
        return o;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem o(S->m0);
        for (u32 i = 0; i < S->m0; ++i) o[i] = (a[i] + S->p - b[i]) % S->p;
        return o;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        FpF f = fp();
        std::vector<u32> prod = PolyAlg<FpF>::mul(f, a, b);
        PolyAlg<FpF>::reduce(f, prod, S->modulus_q);
        prod.resize(S->m0, 0);
        return prod;
    }
    Elem inv(const Elem& a) const {
        FpF f = fp();
        if (is_zero(a)) throw DomainError("inversion of zero in F_q");
        std::vector<u32> r = PolyAlg<FpF>::invmod(f, a, S->modulus_q);
        r.resize(S->m0, 0);
        return r;
    }
    std::vector<Elem> all() const {
        // lexicographic on (c_0, ..., c_{m0-1}), c_0 major
        std::vector<Elem> out;
        u64 total = S->q();
        for (u64 idx = 0; idx < total; ++idx) {
            Elem e(S->m0);
            u64 rest = idx;
            u64 step = total;
            for (u32 i = 0; i < S->m0; ++i) {
                step /= S->p;
                e[i] = static_cast<u32>(rest / step);
                rest %= step;
            }
            out.push_back(std::move(e));
        }
        return out;
    }
};

std::vector<u32> flatten_blocks(const std::vector<std::vector<u32>>& blocks) {
    std::vector<u32> out;
    for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
    return out;
}

std::vector<std::vector<u32>> to_blocks(const FieldSpec& S, const std::vector<u32>& flat) {
    std::vector<std::vector<u32>> out(S.n);
    for (u32 j = 0; j < S.n; ++j)
        out[j].assign(flat.begin() + j * S.m0, flat.begin() + (j + 1) * S.m0);
    return out;
}

u64 checked_pow(u64 base, u32 e, const char* what) {
    u64 r = 1;
    for (u32 i = 0; i < e; ++i) {
        if (r > (1ull << 62) / base)
            throw DomainError(std::string(what) + ": field cardinality does not fit in 62 bits");
        r *= base;
    }
    return r;
}

} // namespace

std::string level_name(Level l) {
    switch (l) {
    case Level::Prime: return "F_p";
    case Level::Fq: return "F_q";
    case Level::Ext: return "E";
    }
    return "?";
}

std::uint64_t FieldSpec::q() const { return checked_pow(p, m0, "q"); }

std::uint64_t FieldSpec::cardinality(Level l) const {
    switch (l) {
    case Level::Prime: return p;
    case Level::Fq: return q();
    case Level::Ext: return checked_pow(q(), n, "|E|");
    }
    return 0;
}

std::size_t FieldSpec::elem_words(Level l) const {
    switch (l) {
    case Level::Prime: return 1;
    case Level::Fq: return m0;
    case Level::Ext: return static_cast<std::size_t>(n) * m0;
    }
    return 0;
}

bool FieldSpec::operator==(const FieldSpec& o) const {
    return p == o.p && m0 == o.m0 && n == o.n && modulus_q == o.modulus_q &&
           modulus_E == o.modulus_E;
}

std::string FieldSpec::key() const {
    std::ostringstream os;
    os << "p" << p << "m" << m0 << "n" << n << "(";
    for (std::size_t i = 0; i < modulus_q.size(); ++i)
        os << (i ? "," : "") << modulus_q[i];
    os << ")(";
    for (std::size_t j = 0; j < modulus_E.size(); ++j) {
        if (j) os << ";";
        for (std::size_t i = 0; i < modulus_E[j].size(); ++i)
            os << (i ? "," : "") << modulus_E[j][i];
    }
    os << ")";
    return os.str();
}

SpecPtr FieldSpec::make(std::uint32_t p, std::uint32_t m0, std::uint32_t n,
                        std::vector<std::uint32_t> modulus_q,
                        std::vector<std::vector<std::uint32_t>> modulus_E) {
    if (!is_prime_u32(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
    if (p >= (1u << 15)) throw DomainError("p too large for this implementation");
    if (m0 == 0 || n == 0) throw DomainError("extension degrees must be >= 1");
    if (modulus_q.size() != m0 + 1)
        throw DomainError("modulus_q must have degree m0 = " + std::to_string(m0));
    for (auto& c : modulus_q) c %= p;
    if (modulus_q[m0] != 1) throw DomainError("modulus_q must be monic");
    if (modulus_E.size() != n + 1)
        throw DomainError("modulus_E must have degree n = " + std::to_string(n));
    for (auto& blk : modulus_E) {
        if (blk.size() != m0)
            throw DomainError("modulus_E coefficients must be F_q elements (" +
                              std::to_string(m0) + " F_p coefficients each)");
        for (auto& c : blk) c %= p;
    }

    auto spec = std::make_shared<FieldSpec>();
    spec->p = p;
    spec->m0 = m0;
    spec->n = n;
    spec->modulus_q = std::move(modulus_q);
    spec->modulus_E = std::move(modulus_E);
    checked_pow(spec->q(), n, "|E|");

    FpF fp{p};
    if (m0 > 1 && !PolyAlg<FpF>::irreducible(fp, spec->modulus_q))
        throw DomainError("modulus_q is reducible over F_p");
    FqF fq{spec.get()};
    FqF::Elem lead = spec->modulus_E[n];
    if (!fq.eq(lead, fq.one())) throw DomainError("modulus_E must be monic");
    if (n > 1 && !PolyAlg<FqF>::irreducible(fq, spec->modulus_E))
        throw DomainError("modulus_E is reducible over F_q");
    return spec;
}

SpecPtr FieldSpec::make_default(std::uint64_t q, std::uint32_t n) {
    std::uint32_t p = 0, m0 = 0;
    std::vector<u32> modq;
    switch (q) {
    case 2: p = 2; m0 = 1; modq = {0, 1}; break;
    case 3: p = 3; m0 = 1; modq = {0, 1}; break;
    case 4: p = 2; m0 = 2; modq = {1, 1, 1}; break;
    case 5: p = 5; m0 = 1; modq = {0, 1}; break;
    case 8: p = 2; m0 = 3; modq = {1, 1, 0, 1}; break;
    case 9: p = 3; m0 = 2; modq = {1, 0, 1}; break;
    default:
        throw DomainError("no shipped default modulus for q = " + std::to_string(q) +
                          " (supported: 2,3,4,5,8,9); supply the field in the config");
    }
    FieldSpec tmp;
    tmp.p = p;
    tmp.m0 = m0;
    tmp.n = n;
    tmp.modulus_q = modq;
    FqF fq{&tmp};
    std::vector<std::vector<u32>> modE;
    if (n == 1) {
        modE = {fq.zero(), fq.one()};
    } else {
        for (const auto& cand : PolyAlg<FqF>::monics(fq, static_cast<int>(n))) {
            if (PolyAlg<FqF>::irreducible(fq, cand)) {
                modE = cand;
                break;
            }
        }
    }
    return make(p, m0, n, std::move(modq), std::move(modE));
}

bool same_spec(const SpecPtr& a, const SpecPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

// ---------------------------------------------------------------------------
// FieldElem
// ---------------------------------------------------------------------------

FieldElem::FieldElem(SpecPtr s, Level l, std::vector<std::uint32_t> c)
    : spec_(std::move(s)), level_(l), c_(std::move(c)) {}

FieldElem FieldElem::zero(const SpecPtr& s, Level l) {
    return FieldElem(s, l, std::vector<u32>(s->elem_words(l), 0));
}

FieldElem FieldElem::one(const SpecPtr& s, Level l) {
    std::vector<u32> c(s->elem_words(l), 0);
    c[0] = 1 % s->p;
    return FieldElem(s, l, std::move(c));
}

FieldElem FieldElem::from_integer(const SpecPtr& s, Level l, long long v) {
    long long r = v % static_cast<long long>(s->p);
    if (r < 0) r += s->p;
    std::vector<u32> c(s->elem_words(l), 0);
    c[0] = static_cast<u32>(r);
    return FieldElem(s, l, std::move(c));
}

FieldElem FieldElem::from_coeffs(const SpecPtr& s, Level l, std::vector<std::uint32_t> c) {
    if (c.size() != s->elem_words(l))
        throw DomainError("coefficient vector length " + std::to_string(c.size()) +
                          " does not match level " + level_name(l));
    for (auto& x : c) x %= s->p;
    return FieldElem(s, l, std::move(c));
}

FieldElem FieldElem::at_index(const SpecPtr& s, Level l, std::uint64_t idx) {
    u64 card = s->cardinality(l);
    if (idx >= card) throw DomainError("field element index out of range");
    // lexicographic on the coefficient vector over the base field of this
    // level, first coordinate major
    std::size_t positions = (l == Level::Ext) ? s->n : (l == Level::Fq ? s->m0 : 1);
    u64 base = (l == Level::Ext) ? s->q() : s->p;
    std::vector<u64> digit(positions);
    u64 step = card;
    for (std::size_t i = 0; i < positions; ++i) {
        step /= base;
        digit[i] = idx / step;
        idx %= step;
    }
    std::vector<u32> flat;
    flat.reserve(s->elem_words(l));
    if (l == Level::Ext) {
        for (std::size_t i = 0; i < positions; ++i) {
            // expand the F_q digit lexicographically as well
            u64 d = digit[i];
            u64 qstep = s->q();
            for (u32 k = 0; k < s->m0; ++k) {
                qstep /= s->p;
                flat.push_back(static_cast<u32>(d / qstep));
                d %= qstep;
            }
        }
    } else {
        for (std::size_t i = 0; i < positions; ++i) flat.push_back(static_cast<u32>(digit[i]));
    }
    return FieldElem(s, l, std::move(flat));
}

std::uint64_t FieldElem::index() const {
    u64 idx = 0;
    if (level_ == Level::Ext) {
        for (u32 j = 0; j < spec_->n; ++j) {
            u64 d = 0;
            for (u32 k = 0; k < spec_->m0; ++k) d = d * spec_->p + c_[j * spec_->m0 + k];
            idx = idx * spec_->q() + d;
        }
    } else {
        for (u32 x : c_) idx = idx * spec_->p + x;
    }
    return idx;
}

bool FieldElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](u32 x) { return x == 0; });
}

bool FieldElem::is_one() const {
    if (c_.empty() || c_[0] != 1 % spec_->p) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](u32 x) { return x == 0; });
}

FieldElem FieldElem::lifted(Level l) const {
    if (static_cast<int>(l) < static_cast<int>(level_))
        throw DomainError("cannot lift to a lower level");
    if (l == level_) return *this;
    std::vector<u32> c(spec_->elem_words(l), 0);
    std::copy(c_.begin(), c_.end(), c.begin());
    // Prime -> Fq -> Ext embeddings are all "constant polynomial", so the
    // flat prefix copy is correct.
    return FieldElem(spec_, l, std::move(c));
}

FieldElem FieldElem::compressed() const {
    auto zero_tail = [&](std::size_t from) {
        return std::all_of(c_.begin() + static_cast<long>(from), c_.end(),
                           [](u32 x) { return x == 0; });
    };
    if (level_ == Level::Ext && zero_tail(spec_->m0)) {
        std::vector<u32> c(c_.begin(), c_.begin() + spec_->m0);
        FieldElem fq(spec_, Level::Fq, std::move(c));
        return fq.compressed();
    }
    if (level_ == Level::Fq && zero_tail(1))
        return FieldElem(spec_, Level::Prime, {c_[0]});
    return *this;
}

bool FieldElem::operator==(const FieldElem& o) const {
    if (!same_spec(spec_, o.spec_)) return false;
    if (level_ == o.level_) return c_ == o.c_;
    Level l = std::max(level_, o.level_);
    return lifted(l).c_ == o.lifted(l).c_;
}

namespace {

void check_specs(const FieldElem& a, const FieldElem& b) {
    if (!a.valid() || !b.valid()) throw DomainError("operation on an uninitialized element");
    if (!same_spec(a.spec(), b.spec()))
        throw SpecMismatch("operands live over different field specifications");
}

template <class Op>
FieldElem binop(const FieldElem& a0, const FieldElem& b0, Op op) {
    check_specs(a0, b0);
    Level l = std::max(a0.level(), b0.level());
    FieldElem a = a0.lifted(l), b = b0.lifted(l);
    return op(a, b, l);
}

} // namespace

FieldElem FieldElem::operator-() const {
    std::vector<u32> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = (spec_->p - c_[i]) % spec_->p;
    return FieldElem(spec_, level_, std::move(c));
}

FieldElem operator+(const FieldElem& a0, const FieldElem& b0) {
    return binop(a0, b0, [](const FieldElem& a, const FieldElem& b, Level l) {
        const auto& S = *a.spec();
        std::vector<u32> c(a.coeffs().size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.coeffs()[i] + b.coeffs()[i]) % S.p;
        return FieldElem::from_coeffs(a.spec(), l, std::move(c));
    });
}

FieldElem operator-(const FieldElem& a0, const FieldElem& b0) {
    return binop(a0, b0, [](const FieldElem& a, const FieldElem& b, Level l) {
        const auto& S = *a.spec();
        std::vector<u32> c(a.coeffs().size());
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = (a.coeffs()[i] + S.p - b.coeffs()[i]) % S.p;
        return FieldElem::from_coeffs(a.spec(), l, std::move(c));
    });
}

FieldElem operator*(const FieldElem& a0, const FieldElem& b0) {
    return binop(a0, b0, [](const FieldElem& a, const FieldElem& b, Level l) {
        const FieldSpec& S = *a.spec();
        switch (l) {
        case Level::Prime: {
            FpF f{S.p};
            return FieldElem::from_coeffs(a.spec(), l, {f.mul(a.coeffs()[0], b.coeffs()[0])});
        }
        case Level::Fq: {
            FqF f{&S};
            return FieldElem::from_coeffs(a.spec(), l, f.mul(a.coeffs(), b.coeffs()));
        }
        case Level::Ext: {
            FqF f{&S};
            auto blocks = PolyAlg<FqF>::mul(f, to_blocks(S, a.coeffs()), to_blocks(S, b.coeffs()));
            PolyAlg<FqF>::reduce(f, blocks, S.modulus_E);
            blocks.resize(S.n, f.zero());
            return FieldElem::from_coeffs(a.spec(), l, flatten_blocks(blocks));
        }
        }
        throw DomainError("unreachable");
    });
}

FieldElem inv(const FieldElem& a) {
    if (!a.valid()) throw DomainError("inversion of an uninitialized element");
    if (a.is_zero()) throw DomainError("inversion of zero");
    const FieldSpec& S = *a.spec();
    switch (a.level()) {
    case Level::Prime:
        return FieldElem::from_coeffs(a.spec(), a.level(), {pinv_scalar(S.p, a.coeffs()[0])});
    case Level::Fq: {
        FqF f{&S};
        return FieldElem::from_coeffs(a.spec(), a.level(), f.inv(a.coeffs()));
    }
    case Level::Ext: {
        FqF f{&S};
        auto r = PolyAlg<FqF>::invmod(f, to_blocks(S, a.coeffs()), S.modulus_E);
        r.resize(S.n, f.zero());
        return FieldElem::from_coeffs(a.spec(), a.level(), flatten_blocks(r));
    }
    }
    throw DomainError("unreachable");
}

FieldElem pow(const FieldElem& a, const BigInt& e) {
    if (e < 0) {
        return pow(inv(a), BigInt(-e));
    }
    FieldElem base = a;
    FieldElem acc = FieldElem::one(a.spec(), a.level());
    BigInt k = e;
    while (k > 0) {
        if ((k & 1) != 0) acc = acc * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return acc;
}

FieldElem pow(const FieldElem& a, long long e) { return pow(a, BigInt(e)); }

std::vector<FieldElem> enumerate_field(const SpecPtr& s, Level l, std::uint64_t cap) {
    u64 card = s->cardinality(l);
    if (card > cap) throw CapExceeded("enumerate_field over " + level_name(l), card, cap);
    std::vector<FieldElem> out;
    out.reserve(card);
    for (u64 i = 0; i < card; ++i) out.push_back(FieldElem::at_index(s, l, i));
    return out;
}

} // namespace pellarin
