// Veronese re-embeddings: the same projective scheme Proj(R/I) embedded by
// the degree-d monomials. The defining ideal of the image is computed by
// elimination, giving an independent presentation of the same cone singularity
// up to the embedding — the table of λ_{i,j} must not change.

#ifndef LYUCALC_VERONESE_HPP
#define LYUCALC_VERONESE_HPP

#include "lyucalc/groebner.hpp"

namespace lyu {

struct VeroneseResult {
    Ring ring;                              // F_p[y_0..y_{N-1}], grevlex
    std::vector<Poly> gens;                 // reduced GB of the image ideal
    std::vector<Monomial> target_monomials; // y_k corresponds to target_monomials[k]
};

// ideal of the image of Proj(R/I) under the d-th Veronese map, d >= 1,
// computed exactly by eliminating the source variables from I + (m_k(x) - y_k)
VeroneseResult veronese_ideal(Ring ring, const std::vector<Poly>& gens, int d);

} // namespace lyu

#endif
