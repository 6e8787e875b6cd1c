#include "lyucalc/ext.hpp"

namespace lyu {

namespace {

ExtModule zero_ext(const Ring& ring, std::size_t t) {
    ExtModule e;
    e.t = t;
    e.zero = true;
    FreeModule none = free_module({});
    e.pres.ring = ring;
    e.pres.ambient = none;
    e.pres.cycles = ModMatrix::from_cols(ring, none, {});
    e.pres.relations = ModMatrix::from_cols(ring, none, {});
    e.pres.boundaries = ModMatrix::from_cols(ring, none, {});
    return e;
}

} // namespace

ExtModule ext_at(const ChainComplex& res, const ChainComplex& dual, std::size_t t) {
    if (t > res.top()) return zero_ext(res.ring, t);
    ExtModule e;
    e.t = t;
    e.pres = homology_presentation(dual, dual_spot(res, t));
    e.zero = e.pres.is_zero_module();
    return e;
}

ExtModule ext_of_presentation(const ModMatrix& d1, std::size_t t, bool minimize) {
    ChainComplex res = free_resolution(d1, t + 1, minimize);
    return ext_at(res, dualize_into_omega(res), t);
}

ExtModule ext_into_omega(Ring ring, const std::vector<Poly>& gens, std::size_t t,
                         bool minimize) {
    ChainComplex res = free_resolution_of_quotient(ring, gens, t + 1, minimize);
    return ext_at(res, dualize_into_omega(res), t);
}

ModMatrix ext_functorial_map(const ModMatrix& g, const ChainComplex& m_res,
                             const ChainComplex& n_res, const ExtModule& m_ext,
                             const ExtModule& n_ext) {
    const Ring& ring = g.ring();
    const std::size_t t = m_ext.t;
    if (t != n_ext.t) throw InternalError("ext_functorial_map: degree mismatch");
    if (!(g.dom() == m_res.mods[0]) || !(g.cod() == n_res.mods[0]))
        throw InternalError("ext_functorial_map: g does not match the resolutions");

    const FreeModule m_gens = m_ext.pres.cycles.dom();
    const FreeModule n_gens = n_ext.pres.cycles.dom();
    if (n_ext.zero || n_gens.rank() == 0)
        return ModMatrix::from_cols(ring, m_gens, free_module({}), {});
    if (t > m_res.top()) {
        // Ext^t(M) vanishes outright; the induced map is the zero map
        std::vector<std::vector<Poly>> zcols(
            n_gens.rank(), std::vector<Poly>(m_gens.rank(), Poly::zero(ring)));
        return ModMatrix::from_cols(ring, m_gens, n_gens, zcols);
    }
    // chain lift γ over g up to spot t; n_res reaches t because Ext^t(N) != 0
    std::vector<ModMatrix> gamma;
    gamma.push_back(g);
    for (std::size_t u = 1; u <= t; ++u)
        gamma.push_back(lift_through(n_res.d(u), gamma[u - 1].compose(m_res.d(u))));

    // dualize the top lift and push the generators of Ext^t(N) through it
    const int w = static_cast<int>(ring->nvars());
    ModMatrix gamma_dual = gamma[t].dual_into(w); // Hom(N_t, Ω) -> Hom(M_t, Ω)
    std::vector<std::vector<Poly>> cols;
    cols.reserve(n_gens.rank());
    for (std::size_t k = 0; k < n_gens.rank(); ++k) {
        std::vector<Poly> img = gamma_dual.apply(n_ext.pres.cycles.col(k));
        cols.push_back(express_in_presentation(m_ext.pres, img));
    }
    return ModMatrix::from_cols(ring, m_gens, n_gens, cols);
}

std::vector<std::size_t> ext_degree_dims(const ExtModule& e, int lo, int hi) {
    std::vector<std::size_t> out;
    for (int d = lo; d <= hi; ++d) out.push_back(graded_piece(e.pres, d).dim());
    return out;
}

} // namespace lyu
