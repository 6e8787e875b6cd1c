// Graded free modules F = ⊕_i R(-deg[i]) and homogeneous matrices between
// them. A ModMatrix refuses construction unless every entry is homogeneous of
// exactly the degree forced by the generator degrees; this is the single
// choke point that keeps all degree bookkeeping honest.

#ifndef LYUCALC_MODULE_HPP
#define LYUCALC_MODULE_HPP

#include <vector>

#include "lyucalc/ring.hpp"

namespace lyu {

struct FreeModule {
    // generator e_i has degree deg[i], i.e. F = ⊕ R(-deg[i])
    std::vector<int> deg;

    std::size_t rank() const { return deg.size(); }
    bool operator==(const FreeModule& rhs) const { return deg == rhs.deg; }
};

inline FreeModule free_module(std::vector<int> degs) { return FreeModule{std::move(degs)}; }

// F(t): generator degrees drop by t
inline FreeModule twist(const FreeModule& f, int t) {
    FreeModule out = f;
    for (auto& d : out.deg) d -= t;
    return out;
}

// generator degrees scaled by q (the effect of Frobenius pullback on a free module)
inline FreeModule scale_degrees(const FreeModule& f, int q) {
    FreeModule out = f;
    for (auto& d : out.deg) d *= q;
    return out;
}

// degree of a homogeneous column vector over F, or throws if entries disagree;
// zero vectors report `fallback`
int column_degree(const FreeModule& f, const std::vector<Poly>& col, int fallback = 0);

class ModMatrix {
public:
    ModMatrix() = default;
    // entries in row-major order, size cod.rank() * dom.rank(); throws
    // InhomogeneousError unless entry (r,s) is 0 or homogeneous of degree
    // dom.deg[s] - cod.deg[r]
    ModMatrix(Ring ring, FreeModule cod, FreeModule dom, std::vector<Poly> entries);

    static ModMatrix zero(Ring ring, FreeModule cod, FreeModule dom);
    static ModMatrix identity(Ring ring, FreeModule f);
    // build from columns (each a vector of cod.rank() polys); dom degrees are
    // inferred from the columns when `dom_degs` is absent
    static ModMatrix from_cols(Ring ring, FreeModule cod,
                               const std::vector<std::vector<Poly>>& cols);
    static ModMatrix from_cols(Ring ring, FreeModule cod, FreeModule dom,
                               const std::vector<std::vector<Poly>>& cols);

    const Ring& ring() const { return ring_; }
    const FreeModule& dom() const { return dom_; }
    const FreeModule& cod() const { return cod_; }
    std::size_t rows() const { return cod_.rank(); }
    std::size_t cols() const { return dom_.rank(); }

    const Poly& at(std::size_t r, std::size_t s) const {
        assert(r < rows() && s < cols());
        return a_[r * cols() + s];
    }
    std::vector<Poly> col(std::size_t s) const;
    std::vector<std::vector<Poly>> columns() const;

    // this ∘ rhs (this: B -> C, rhs: A -> B)
    ModMatrix compose(const ModMatrix& rhs) const;
    std::vector<Poly> apply(const std::vector<Poly>& v) const;
    ModMatrix operator-(const ModMatrix& rhs) const;
    // transpose as a map of duals into a twist of R: Hom(cod, R(-w)) -> Hom(dom, R(-w));
    // the dual of ⊕R(-d_i) is ⊕R(-(w - d_i))
    ModMatrix dual_into(int w) const;
    // both module gradings shifted: F(t) <- G(t), same entries
    ModMatrix twist_both(int t) const;

    bool is_zero() const;
    bool operator==(const ModMatrix& rhs) const;

private:
    Ring ring_;
    FreeModule dom_, cod_;
    std::vector<Poly> a_; // row-major

    void check_homogeneous() const;
};

// apply a matrix to a column given as polys (helper shared with apply)
std::vector<Poly> mat_apply(const ModMatrix& m, const std::vector<Poly>& v);

} // namespace lyu

#endif
