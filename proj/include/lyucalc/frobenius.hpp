// Frobenius pullback F^* on graded free data over R = F_p[x_0..x_n]: the
// pullback of R(-d) is R(-pd), matrices pull back entrywise by x_i -> x_i^p,
// and pulling back a free resolution of R/I gives a free resolution of
// R/I^{[p]} (flatness of Frobenius over the regular ring R). The chain map
//   c_t : (F^* P)_t -> P_t
// lifting the surjection R/I^{[p]} ->> R/I is the backbone of the p-linear
// structure on the double-dual layers.

#ifndef LYUCALC_FROBENIUS_HPP
#define LYUCALC_FROBENIUS_HPP

#include "lyucalc/complex.hpp"

namespace lyu {

ModMatrix fstar_matrix(const ModMatrix& a, unsigned e = 1);
ChainComplex fstar_complex(const ChainComplex& c, unsigned e = 1);
ChainComplex twist_complex(const ChainComplex& c, int t);

struct FrobeniusLift {
    ChainComplex fstar;           // F^* P
    std::vector<ModMatrix> maps;  // maps[t] : (F^*P)_t -> P_t, maps[0] = [1]
};

// lift of R/I^{[p^e]} ->> R/I over a resolution P of R/I (P_0 must be R itself);
// exists because F^*P resolves R/I^{[p^e]} and surjections lift over resolutions
FrobeniusLift frobenius_root_map(const ChainComplex& p, unsigned e = 1);

} // namespace lyu

#endif
