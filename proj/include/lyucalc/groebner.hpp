// Gröbner bases for submodules of graded free modules, via Buchberger on an
// augmented module: each input column a_i is paired with a tag ε_i in a free
// module R^s, ordered position-over-term on the main block with a
// Schreyer-weighted tag block underneath. One completion then yields, at once,
//   - the reduced GB of the submodule (main parts of main-led elements),
//   - an expression of each GB element in the input columns (its tag),
//   - a generating set of the syzygy module (tags of main-zero elements),
//   - normal forms with division witnesses.
// S-pairs are scheduled by ascending degree; the chain criterion is applied
// at pop time. The coprime-lead criterion is used only for rank-one ambients
// without tags, where it is actually valid.

#ifndef LYUCALC_GROEBNER_HPP
#define LYUCALC_GROEBNER_HPP

#include <memory>
#include <utility>

#include "lyucalc/module.hpp"

namespace lyu {

class GBEngine {
public:
    // with_tags enables witnesses, reps, syzygies (at the cost of the
    // coprime-lead shortcut)
    GBEngine(Ring ring, FreeModule ambient, std::vector<std::vector<Poly>> cols,
             bool with_tags);

    static GBEngine for_ideal(Ring ring, const std::vector<Poly>& gens,
                              bool with_tags = false);

    const Ring& ring() const;
    const FreeModule& ambient() const;
    std::size_t ngens() const; // number of input columns

    // reduced GB of the submodule, columns sorted by descending lead
    const std::vector<std::vector<Poly>>& gb() const;
    // gb()[k] == Σ_i reps()[k][i] · input_col_i (with_tags only)
    const std::vector<std::vector<Poly>>& reps() const;
    // reduced GB of the syzygy module of the input columns (with_tags only)
    const std::vector<std::vector<Poly>>& syzygies() const;

    std::vector<Poly> nf(const std::vector<Poly>& v) const;
    // v == nf + Σ_i w_i · input_col_i; returns (nf, w); with_tags only
    std::pair<std::vector<Poly>, std::vector<Poly>>
    nf_with_witness(const std::vector<Poly>& v) const;
    bool contains(const std::vector<Poly>& v) const;

    // rank-one ambient conveniences
    Poly nf1(const Poly& f) const;
    bool contains1(const Poly& f) const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

// reduced monic GB of an ideal, sorted by descending lead
std::vector<Poly> ideal_gb(Ring ring, const std::vector<Poly>& gens);

bool ideal_equal(Ring ring, const std::vector<Poly>& a, const std::vector<Poly>& b);

// generators of { (c_1..c_s) : Σ c_i a_i = 0 } for the columns a_i of `a`
ModMatrix syzygy_matrix(const ModMatrix& a);

// X with a ∘ X == b; throws NotInImage when a column of b misses im(a)
ModMatrix lift_through(const ModMatrix& a, const ModMatrix& b);

// generator images under x_i -> x_i^{p^e}
std::vector<Poly> bracket_power(const std::vector<Poly>& gens, unsigned e);

// eliminate the first `block` variables: GB under the block order, keep the
// polynomials free of the eliminated variables, and re-express them in the
// ring on the remaining variables (returned alongside)
std::pair<Ring, std::vector<Poly>> elimination_ideal(Ring ring,
                                                     const std::vector<Poly>& gens,
                                                     std::size_t block);

// Krull dimension of R/I (affine); -1 for the unit ideal. Computed from the
// lead-term ideal of a GB as the largest variable subset meeting no lead support.
int krull_dimension(Ring ring, const std::vector<Poly>& gens);

} // namespace lyu

#endif
