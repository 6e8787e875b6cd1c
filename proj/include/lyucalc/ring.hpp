// Graded polynomial ring R = F_p[x_0..x_n] with its monomial orders, and a
// canonical sorted-term polynomial type. Everything downstream assumes the
// standard grading deg(x_i) = 1.

#ifndef LYUCALC_RING_HPP
#define LYUCALC_RING_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lyucalc/fp.hpp"

namespace lyu {

enum class OrderTag {
    grevlex, // default everywhere
    lex,
    elim,    // block order eliminating the first elim_block variables;
             // grevlex inside each block, first block dominates
};

struct RingSpec {
    u64 p;
    std::vector<std::string> var_names;
    OrderTag order = OrderTag::grevlex;
    std::size_t elim_block = 0; // used only with OrderTag::elim

    std::size_t nvars() const { return var_names.size(); }
    bool operator==(const RingSpec& rhs) const {
        return p == rhs.p && var_names == rhs.var_names && order == rhs.order &&
               elim_block == rhs.elim_block;
    }
};

using Ring = std::shared_ptr<const RingSpec>;

Ring make_ring(u64 p, std::vector<std::string> var_names,
               OrderTag order = OrderTag::grevlex, std::size_t elim_block = 0);

struct Monomial {
    std::vector<int> e;

    int degree() const {
        int d = 0;
        for (int x : e) d += x;
        return d;
    }
    bool is_one() const {
        for (int x : e)
            if (x) return false;
        return true;
    }
    bool operator==(const Monomial& rhs) const { return e == rhs.e; }
    bool operator!=(const Monomial& rhs) const { return e != rhs.e; }
};

Monomial mono_one(std::size_t nvars);
Monomial mono_var(std::size_t nvars, std::size_t i, int exp = 1);
Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);     // a | b
Monomial mono_quot(const Monomial& b, const Monomial& a);    // b / a, requires a | b
Monomial mono_lcm(const Monomial& a, const Monomial& b);
Monomial mono_gcd(const Monomial& a, const Monomial& b);
Monomial mono_pow(const Monomial& a, u64 e);

// +1 if a > b in the ring's order, -1 if a < b, 0 if equal
int mono_cmp(const RingSpec& ring, const Monomial& a, const Monomial& b);

// all monomials of total degree d in nvars variables, lexicographically
// descending (so x_0^d first); independent of the ring's own order
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d);

struct Term {
    Monomial m;
    u64 c; // in [1, p)
};

// Terms are kept sorted strictly descending in the ring order; the zero
// polynomial has no terms. All arithmetic preserves this canonical form.
class Poly {
public:
    Poly() = default;
    explicit Poly(Ring ring) : ring_(std::move(ring)) {}

    static Poly zero(Ring ring) { return Poly(std::move(ring)); }
    static Poly constant(Ring ring, u64 c);
    static Poly variable(Ring ring, std::size_t i);
    static Poly monomial(Ring ring, Monomial m, u64 c = 1);
    // terms in any order, repeats combined
    static Poly from_terms(Ring ring, std::vector<Term> terms);

    const Ring& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    const Monomial& lm() const; // leading monomial
    u64 lc() const;             // leading coefficient
    const Term& lt() const;

    int total_degree() const; // max term degree; -1 for zero
    // degree if every term has the same total degree; nullopt for zero or mixed
    std::optional<int> homogeneous_degree() const;
    bool is_homogeneous() const { return t_.empty() || homogeneous_degree().has_value(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }

    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    Poly negate() const;
    Poly scale(u64 c) const;
    Poly mul_term(const Monomial& m, u64 c) const;
    Poly monic() const; // divide by lc

    // exponents scaled by p^e, coefficients raised to the p^e-th power
    Poly frobenius(unsigned e = 1) const;
    // image under x_i -> images[i]; images live in target (defaults: same ring)
    Poly substitute(const std::vector<Poly>& images, Ring target) const;
    // reinterpret over another ring with the same variable count and p
    // (used to switch monomial orders); terms are re-sorted
    Poly with_ring(Ring target) const;

    bool operator==(const Poly& rhs) const;
    bool operator!=(const Poly& rhs) const { return !(*this == rhs); }

    std::string to_string() const;

private:
    Ring ring_;
    std::vector<Term> t_;

    void normalize(); // sort descending, combine, drop zeros
};

std::string mono_to_string(const RingSpec& ring, const Monomial& m);

} // namespace lyu

#endif
