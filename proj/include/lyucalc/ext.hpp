// Ext modules into Ω = R(-n-1), computed as cohomology of Hom(P•, Ω) for a
// free resolution P• and kept together with the resolution so that maps can be
// transported through them functorially.

#ifndef LYUCALC_EXT_HPP
#define LYUCALC_EXT_HPP

#include "lyucalc/complex.hpp"

namespace lyu {

struct ExtModule {
    std::size_t t = 0;            // cohomological degree
    bool zero = false;            // t exceeds the resolution length
    SubquotientPresentation pres; // inside Hom(P_t, Ω)
};

// Ext^t from an already-computed resolution and its dual (resolution length
// must be at least t+1 unless it stopped earlier by exactness)
ExtModule ext_at(const ChainComplex& res, const ChainComplex& dual, std::size_t t);

// Ext^t(coker d1, Ω); resolves internally
ExtModule ext_of_presentation(const ModMatrix& d1, std::size_t t, bool minimize);

// Ext^t(R/(gens), Ω)
ExtModule ext_into_omega(Ring ring, const std::vector<Poly>& gens, std::size_t t,
                         bool minimize = true);

// Contravariant image of a degree-0 map g : M -> N under Ext^t(-, Ω):
//   Ext^t(N, Ω) -> Ext^t(M, Ω).
// g is given on generators, g : (M res)_0 -> (N res)_0, and must send the
// relations of M into those of N — the chain lift fails with NotInImage
// otherwise. m_res/n_res resolve M and N; m_ext/n_ext are their Ext^t.
ModMatrix ext_functorial_map(const ModMatrix& g, const ChainComplex& m_res,
                             const ChainComplex& n_res, const ExtModule& m_ext,
                             const ExtModule& n_ext);

// graded dimension dim_k Ext^t(M, Ω)_d for a window of degrees
std::vector<std::size_t> ext_degree_dims(const ExtModule& e, int lo, int hi);

} // namespace lyu

#endif
