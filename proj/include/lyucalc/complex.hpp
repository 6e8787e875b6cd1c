// Chain complexes of graded free modules, free resolutions by iterated
// syzygies, minimization by splitting off unit entries, duals into
// Ω = R(-n-1), and homology presented as an explicit subquotient
// (cycles / relations / boundaries) with graded pieces reduced to F_p
// linear algebra.

#ifndef LYUCALC_COMPLEX_HPP
#define LYUCALC_COMPLEX_HPP

#include <map>

#include "lyucalc/dense_matrix.hpp"
#include "lyucalc/groebner.hpp"

namespace lyu {

struct ChainComplex {
    Ring ring;
    std::vector<FreeModule> mods;  // spots 0..top
    std::vector<ModMatrix> diffs;  // diffs[t] : mods[t+1] -> mods[t]

    std::size_t top() const { return mods.empty() ? 0 : mods.size() - 1; }
    // d_t : mods[t] -> mods[t-1], defined for 1 <= t <= top
    const ModMatrix& d(std::size_t t) const { return diffs[t - 1]; }
    void validate() const; // shapes line up and d∘d == 0
};

// resolve coker(d1) by iterated syzygies: ... -> F_2 -> F_1 -> F_0, computing
// differentials d_1..d_length (fewer when the resolution stops early)
ChainComplex free_resolution(const ModMatrix& d1, std::size_t length, bool minimize);

// resolution of R/(gens); generators must be homogeneous
ChainComplex free_resolution_of_quotient(Ring ring, const std::vector<Poly>& gens,
                                         std::size_t length, bool minimize);

// split off all unit (nonzero constant) entries of the differentials,
// propagating the basis changes to the neighbor differentials. Differentials
// d_t with t < min_spot are never split; since splitting d_t removes a
// generator from mods[t] and one from mods[t-1], the modules
// mods[0..min_spot-2] keep their generator indexing exactly
ChainComplex minimize_complex(ChainComplex c, std::size_t min_spot = 1);

// Hom(-, Ω) with Ω = R(-n-1), reindexed as a chain complex: spot u of the dual
// is Hom(C_{N-u}, Ω) where N = C.top(). Cohomology at original spot t is
// homology of the dual at spot N - t.
ChainComplex dualize_into_omega(const ChainComplex& c);
inline std::size_t dual_spot(const ChainComplex& c, std::size_t t) { return c.top() - t; }

// homology at a spot, presented inside the ambient free module: generators are
// a pruned cycle basis (cycles reducing to zero against the boundaries are
// dropped), relations say which generator combinations fall into the
// boundaries. Ambient coordinates are kept so maps can be transported.
struct SubquotientPresentation {
    Ring ring;
    FreeModule ambient;
    ModMatrix cycles;     // ambient <- free(gen degrees)
    ModMatrix relations;  // free(gen degrees) <- free(relation degrees)
    ModMatrix boundaries; // ambient <- free(boundary degrees)

    const std::vector<int>& gen_degrees() const { return cycles.dom().deg; }
    std::size_t ngens() const { return cycles.dom().rank(); }
    bool is_zero_module() const { return ngens() == 0; }

    // division engine for [cycles | boundaries], built once on first use
    const GBEngine& solver() const;

private:
    mutable std::shared_ptr<GBEngine> solver_;
};

SubquotientPresentation homology_presentation(const ChainComplex& c, std::size_t t);

// coefficients c with  v = cycles·c + boundaries·w; throws NotInImage when v
// does not lie in the cycle-plus-boundary span
std::vector<Poly> express_in_presentation(const SubquotientPresentation& pres,
                                          const std::vector<Poly>& v);

// one graded piece of a subquotient as explicit F_p data: a monomial basis of
// the generator free module in that degree, the expanded relations as a
// SpanReducer, and the surviving coordinates as a quotient basis
struct DegreePiece {
    int degree = 0;
    Ring ring;
    std::vector<std::pair<std::size_t, Monomial>> free_basis; // (generator, monomial)
    SpanReducer reducer;
    std::vector<std::size_t> qbasis; // indices into free_basis

    std::size_t dim() const { return qbasis.size(); }
    // quotient coordinates of a generator-coefficient vector of this degree
    std::vector<u64> coords(const std::vector<Poly>& gen_coeffs) const;

private:
    friend DegreePiece graded_piece(const SubquotientPresentation&, int);
    std::map<std::pair<std::size_t, std::vector<int>>, std::size_t> index_;
};

DegreePiece graded_piece(const SubquotientPresentation& pres, int degree);

// ambient representative of the k-th quotient basis element of a piece
std::vector<Poly> ambient_rep(const SubquotientPresentation& pres, const DegreePiece& piece,
                              std::size_t k);

} // namespace lyu

#endif
