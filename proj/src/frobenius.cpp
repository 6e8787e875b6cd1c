#include "lyucalc/frobenius.hpp"

namespace lyu {

ModMatrix fstar_matrix(const ModMatrix& a, unsigned e) {
    u64 q = 1;
    for (unsigned k = 0; k < e; ++k) q *= a.ring()->p;
    std::vector<Poly> entries;
    entries.reserve(a.rows() * a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t s = 0; s < a.cols(); ++s)
            entries.push_back(a.at(r, s).frobenius(e));
    return ModMatrix(a.ring(), scale_degrees(a.cod(), static_cast<int>(q)),
                     scale_degrees(a.dom(), static_cast<int>(q)), std::move(entries));
}

ChainComplex fstar_complex(const ChainComplex& c, unsigned e) {
    u64 q = 1;
    for (unsigned k = 0; k < e; ++k) q *= c.ring->p;
    ChainComplex out;
    out.ring = c.ring;
    for (const auto& m : c.mods) out.mods.push_back(scale_degrees(m, static_cast<int>(q)));
    for (const auto& d : c.diffs) out.diffs.push_back(fstar_matrix(d, e));
    out.validate();
    return out;
}

ChainComplex twist_complex(const ChainComplex& c, int t) {
    ChainComplex out;
    out.ring = c.ring;
    for (const auto& m : c.mods) out.mods.push_back(twist(m, t));
    for (const auto& d : c.diffs) out.diffs.push_back(d.twist_both(t));
    out.validate();
    return out;
}

FrobeniusLift frobenius_root_map(const ChainComplex& p, unsigned e) {
    if (p.mods[0].rank() != 1 || p.mods[0].deg[0] != 0)
        throw InternalError("frobenius_root_map expects a resolution starting at R");
    FrobeniusLift lift;
    lift.fstar = fstar_complex(p, e);
    lift.maps.push_back(ModMatrix::identity(p.ring, p.mods[0]));
    for (std::size_t t = 1; t <= p.top(); ++t)
        lift.maps.push_back(lift_through(p.d(t), lift.maps[t - 1].compose(lift.fstar.d(t))));
    return lift;
}

} // namespace lyu
