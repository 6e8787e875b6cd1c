#include "lyucalc/ring.hpp"

#include <algorithm>
#include <sstream>

namespace lyu {

Ring make_ring(u64 p, std::vector<std::string> var_names, OrderTag order,
               std::size_t elim_block) {
    require_prime(p);
    if (var_names.empty()) throw Error("ring needs at least one variable");
    for (std::size_t i = 0; i < var_names.size(); ++i)
        for (std::size_t j = i + 1; j < var_names.size(); ++j)
            if (var_names[i] == var_names[j])
                throw Error("duplicate variable name '" + var_names[i] + "'");
    if (order == OrderTag::elim && (elim_block == 0 || elim_block >= var_names.size()))
        throw Error("elimination block must leave at least one variable on each side");
    auto spec = std::make_shared<RingSpec>();
    spec->p = p;
    spec->var_names = std::move(var_names);
    spec->order = order;
    spec->elim_block = (order == OrderTag::elim) ? elim_block : 0;
    return spec;
}

Monomial mono_one(std::size_t nvars) { return Monomial{std::vector<int>(nvars, 0)}; }

Monomial mono_var(std::size_t nvars, std::size_t i, int exp) {
    assert(i < nvars);
    Monomial m = mono_one(nvars);
    m.e[i] = exp;
    return m;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    assert(a.e.size() == b.e.size());
    Monomial m = a;
    for (std::size_t i = 0; i < b.e.size(); ++i) m.e[i] += b.e[i];
    return m;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    assert(a.e.size() == b.e.size());
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

Monomial mono_quot(const Monomial& b, const Monomial& a) {
    assert(mono_divides(a, b));
    Monomial m = b;
    for (std::size_t i = 0; i < a.e.size(); ++i) m.e[i] -= a.e[i];
    return m;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (std::size_t i = 0; i < b.e.size(); ++i) m.e[i] = std::max(m.e[i], b.e[i]);
    return m;
}

Monomial mono_gcd(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (std::size_t i = 0; i < b.e.size(); ++i) m.e[i] = std::min(m.e[i], b.e[i]);
    return m;
}

Monomial mono_pow(const Monomial& a, u64 e) {
    Monomial m = a;
    for (auto& x : m.e) {
        u64 v = static_cast<u64>(x) * e;
        if (v > (u64(1) << 30)) throw Error("monomial exponent overflow");
        x = static_cast<int>(v);
    }
    return m;
}

namespace {

// grevlex on the index window [lo, hi): higher degree wins; on ties the
// monomial with the smaller exponent at the LAST differing index wins
int cmp_grevlex_window(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    int da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) { da += a.e[i]; db += b.e[i]; }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = hi; i-- > lo;)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    return 0;
}

int cmp_lex(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
}

} // namespace

int mono_cmp(const RingSpec& ring, const Monomial& a, const Monomial& b) {
    assert(a.e.size() == ring.nvars() && b.e.size() == ring.nvars());
    switch (ring.order) {
    case OrderTag::grevlex:
        return cmp_grevlex_window(a, b, 0, ring.nvars());
    case OrderTag::lex:
        return cmp_lex(a, b);
    case OrderTag::elim: {
        int c = cmp_grevlex_window(a, b, 0, ring.elim_block);
        if (c) return c;
        return cmp_grevlex_window(a, b, ring.elim_block, ring.nvars());
    }
    }
    return 0;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    Monomial cur = mono_one(nvars);
    // recursive enumeration, largest lex first: put as much as possible early
    auto rec = [&](auto&& self, std::size_t i, int rem) -> void {
        if (i + 1 == nvars) {
            cur.e[i] = rem;
            out.push_back(cur);
            cur.e[i] = 0;
            return;
        }
        for (int k = rem; k >= 0; --k) {
            cur.e[i] = k;
            self(self, i + 1, rem - k);
        }
        cur.e[i] = 0;
    };
    rec(rec, 0, d);
    return out;
}

// ---- Poly

void Poly::normalize() {
    const RingSpec& rs = *ring_;
    std::sort(t_.begin(), t_.end(), [&](const Term& x, const Term& y) {
        return mono_cmp(rs, x.m, y.m) > 0;
    });
    std::vector<Term> out;
    out.reserve(t_.size());
    for (auto& t : t_) {
        u64 c = t.c % rs.p;
        if (!out.empty() && out.back().m == t.m)
            out.back().c = fp_add(out.back().c, c, rs.p);
        else
            out.push_back(Term{std::move(t.m), c});
        if (!out.empty() && out.back().c == 0) out.pop_back();
    }
    t_ = std::move(out);
}

Poly Poly::constant(Ring ring, u64 c) {
    Poly f(ring);
    c %= ring->p;
    if (c) f.t_.push_back(Term{mono_one(ring->nvars()), c});
    return f;
}

Poly Poly::variable(Ring ring, std::size_t i) {
    Poly f(ring);
    f.t_.push_back(Term{mono_var(ring->nvars(), i), 1});
    return f;
}

Poly Poly::monomial(Ring ring, Monomial m, u64 c) {
    Poly f(ring);
    c %= ring->p;
    if (c) f.t_.push_back(Term{std::move(m), c});
    return f;
}

Poly Poly::from_terms(Ring ring, std::vector<Term> terms) {
    Poly f(ring);
    f.t_ = std::move(terms);
    f.normalize();
    return f;
}

const Monomial& Poly::lm() const {
    assert(!t_.empty());
    return t_.front().m;
}

u64 Poly::lc() const {
    assert(!t_.empty());
    return t_.front().c;
}

const Term& Poly::lt() const {
    assert(!t_.empty());
    return t_.front();
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& t : t_) d = std::max(d, t.m.degree());
    return d;
}

std::optional<int> Poly::homogeneous_degree() const {
    if (t_.empty()) return std::nullopt;
    int d = t_[0].m.degree();
    for (const auto& t : t_)
        if (t.m.degree() != d) return std::nullopt;
    return d;
}

Poly Poly::operator+(const Poly& rhs) const {
    assert(ring_ && rhs.ring_ && *ring_ == *rhs.ring_);
    const RingSpec& rs = *ring_;
    Poly out(ring_);
    out.t_.reserve(t_.size() + rhs.t_.size());
    std::size_t i = 0, j = 0;
    while (i < t_.size() && j < rhs.t_.size()) {
        int c = mono_cmp(rs, t_[i].m, rhs.t_[j].m);
        if (c > 0) {
            out.t_.push_back(t_[i++]);
        } else if (c < 0) {
            out.t_.push_back(rhs.t_[j++]);
        } else {
            u64 s = fp_add(t_[i].c, rhs.t_[j].c, rs.p);
            if (s) out.t_.push_back(Term{t_[i].m, s});
            ++i; ++j;
        }
    }
    for (; i < t_.size(); ++i) out.t_.push_back(t_[i]);
    for (; j < rhs.t_.size(); ++j) out.t_.push_back(rhs.t_[j]);
    return out;
}

Poly Poly::operator-(const Poly& rhs) const { return *this + rhs.negate(); }

Poly Poly::negate() const {
    Poly out(ring_);
    out.t_ = t_;
    for (auto& t : out.t_) t.c = fp_neg(t.c, ring_->p);
    return out;
}

Poly Poly::scale(u64 c) const {
    c %= ring_->p;
    Poly out(ring_);
    if (!c) return out;
    out.t_ = t_;
    for (auto& t : out.t_) t.c = fp_mul(t.c, c, ring_->p);
    return out;
}

Poly Poly::mul_term(const Monomial& m, u64 c) const {
    c %= ring_->p;
    Poly out(ring_);
    if (!c) return out;
    out.t_.reserve(t_.size());
    for (const auto& t : t_)
        out.t_.push_back(Term{mono_mul(t.m, m), fp_mul(t.c, c, ring_->p)});
    // multiplying by a fixed monomial preserves the order of terms
    return out;
}

Poly Poly::operator*(const Poly& rhs) const {
    assert(ring_ && rhs.ring_ && *ring_ == *rhs.ring_);
    Poly out(ring_);
    out.t_.reserve(t_.size() * rhs.t_.size());
    for (const auto& a : t_)
        for (const auto& b : rhs.t_)
            out.t_.push_back(Term{mono_mul(a.m, b.m), fp_mul(a.c, b.c, ring_->p)});
    out.normalize();
    return out;
}

Poly Poly::monic() const {
    assert(!t_.empty());
    return scale(fp_inv(lc(), ring_->p));
}

Poly Poly::frobenius(unsigned e) const {
    u64 q = 1;
    for (unsigned k = 0; k < e; ++k) {
        q *= ring_->p;
        if (q > (u64(1) << 31)) throw Error("frobenius power too large");
    }
    Poly out(ring_);
    out.t_.reserve(t_.size());
    for (const auto& t : t_)
        out.t_.push_back(Term{mono_pow(t.m, q), fp_pow(t.c, q, ring_->p)});
    // x -> x^q is strictly monotone for every order used here, so terms stay sorted
    return out;
}

Poly Poly::substitute(const std::vector<Poly>& images, Ring target) const {
    assert(images.size() == ring_->nvars());
    Poly out = Poly::zero(target);
    for (const auto& t : t_) {
        Poly prod = Poly::constant(target, t.c);
        for (std::size_t i = 0; i < images.size(); ++i)
            for (int k = 0; k < t.m.e[i]; ++k) prod = prod * images[i];
        out = out + prod;
    }
    return out;
}

Poly Poly::with_ring(Ring target) const {
    assert(target->nvars() == ring_->nvars() && target->p == ring_->p);
    Poly out(target);
    out.t_ = t_;
    out.normalize();
    return out;
}

bool Poly::operator==(const Poly& rhs) const {
    if (t_.size() != rhs.t_.size()) return false;
    for (std::size_t i = 0; i < t_.size(); ++i)
        if (t_[i].c != rhs.t_[i].c || t_[i].m != rhs.t_[i].m) return false;
    return true;
}

std::string mono_to_string(const RingSpec& ring, const Monomial& m) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
        if (!m.e[i]) continue;
        if (!first) os << "*";
        os << ring.var_names[i];
        if (m.e[i] != 1) os << "^" << m.e[i];
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

std::string Poly::to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < t_.size(); ++i) {
        if (i) os << " + ";
        if (t_[i].c != 1 || t_[i].m.is_one()) {
            os << t_[i].c;
            if (!t_[i].m.is_one()) os << "*";
        }
        if (!t_[i].m.is_one()) os << mono_to_string(*ring_, t_[i].m);
    }
    return os.str();
}

} // namespace lyu
