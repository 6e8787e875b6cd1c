#include "lyucalc/veronese.hpp"

#include <set>

namespace lyu {

VeroneseResult veronese_ideal(Ring ring, const std::vector<Poly>& gens, int d) {
    if (d < 1) throw Error("veronese degree must be >= 1");
    const std::size_t nx = ring->nvars();
    std::vector<Monomial> monos = monomials_of_degree(nx, d);
    const std::size_t ny = monos.size();

    // names for the target coordinates, dodging any clash with the source ones
    std::set<std::string> taken(ring->var_names.begin(), ring->var_names.end());
    std::string stem = "y";
    for (;;) {
        bool clash = false;
        for (std::size_t k = 0; k < ny && !clash; ++k)
            if (taken.count(stem + std::to_string(k))) clash = true;
        if (!clash) break;
        stem = "v" + stem;
    }

    std::vector<std::string> work_names = ring->var_names;
    for (std::size_t k = 0; k < ny; ++k) work_names.push_back(stem + std::to_string(k));
    Ring work = make_ring(ring->p, work_names); // elimination_ideal reorders internally

    // I + (m_k(x) - y_k) inside the combined ring
    std::vector<Poly> jgens;
    std::vector<Poly> ximages;
    for (std::size_t v = 0; v < nx; ++v) ximages.push_back(Poly::variable(work, v));
    for (const auto& g : gens) jgens.push_back(g.substitute(ximages, work));
    for (std::size_t k = 0; k < ny; ++k) {
        Monomial m = mono_one(work->nvars());
        for (std::size_t v = 0; v < nx; ++v) m.e[v] = monos[k].e[v];
        Poly rel = Poly::monomial(work, m, 1) - Poly::variable(work, nx + k);
        jgens.push_back(rel);
    }

    auto [target, image_gb] = elimination_ideal(work, jgens, nx);

    VeroneseResult out;
    out.ring = target;
    out.gens = image_gb;
    out.target_monomials = std::move(monos);
    return out;
}

} // namespace lyu
