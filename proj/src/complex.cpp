#include "lyucalc/complex.hpp"

#include <mutex>

namespace lyu {

void ChainComplex::validate() const {
    if (mods.empty()) throw InternalError("empty chain complex");
    if (diffs.size() + 1 != mods.size())
        throw InternalError("chain complex has " + std::to_string(diffs.size()) +
                            " differentials for " + std::to_string(mods.size()) + " modules");
    for (std::size_t t = 0; t < diffs.size(); ++t) {
        if (!(diffs[t].cod() == mods[t]) || !(diffs[t].dom() == mods[t + 1]))
            throw InternalError("differential " + std::to_string(t + 1) +
                                " does not match its modules");
        if (t > 0 && !diffs[t - 1].compose(diffs[t]).is_zero())
            throw InternalError("d∘d != 0 at spot " + std::to_string(t + 1));
    }
}

ChainComplex free_resolution(const ModMatrix& d1, std::size_t length, bool minimize) {
    ChainComplex c;
    c.ring = d1.ring();
    c.mods.push_back(d1.cod());
    ModMatrix cur = d1;
    for (std::size_t t = 1; t <= length && cur.cols() > 0; ++t) {
        c.mods.push_back(cur.dom());
        c.diffs.push_back(cur);
        if (t == length) break;
        cur = syzygy_matrix(cur);
    }
    // minimize from spot 2 up: mods[0] keeps its generator indexing (d1 may
    // lose redundant columns, but never rows), so callers may identify
    // mods[0] with their module's chosen generators even after minimization
    if (minimize) c = minimize_complex(std::move(c), 2);
    c.validate();
    return c;
}

ChainComplex free_resolution_of_quotient(Ring ring, const std::vector<Poly>& gens,
                                         std::size_t length, bool minimize) {
    FreeModule f0 = free_module({0});
    std::vector<std::vector<Poly>> cols;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous())
            throw InhomogeneousError("generator is not homogeneous: " + g.to_string());
        cols.push_back({g});
    }
    ModMatrix d1 = ModMatrix::from_cols(ring, f0, cols);
    return free_resolution(d1, length, minimize);
}

namespace {

// entry grid helpers for minimization
using Grid = std::vector<std::vector<Poly>>; // [row][col]

Grid to_grid(const ModMatrix& m) {
    Grid g(m.rows(), std::vector<Poly>(m.cols(), Poly::zero(m.ring())));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t s = 0; s < m.cols(); ++s) g[r][s] = m.at(r, s);
    return g;
}

ModMatrix from_grid(const Ring& ring, const FreeModule& cod, const FreeModule& dom,
                    const Grid& g) {
    std::vector<Poly> e;
    e.reserve(cod.rank() * dom.rank());
    for (std::size_t r = 0; r < cod.rank(); ++r)
        for (std::size_t s = 0; s < dom.rank(); ++s) e.push_back(g[r][s]);
    return ModMatrix(ring, cod, dom, std::move(e));
}

void drop_row(Grid& g, std::size_t r) { g.erase(g.begin() + r); }

void drop_col(Grid& g, std::size_t s) {
    for (auto& row : g) row.erase(row.begin() + s);
}

} // namespace

ChainComplex minimize_complex(ChainComplex c, std::size_t min_spot) {
    const Ring& ring = c.ring;
    std::vector<Grid> grids;
    grids.reserve(c.diffs.size());
    for (const auto& d : c.diffs) grids.push_back(to_grid(d));
    std::vector<FreeModule> mods = c.mods;

    auto find_unit = [&](std::size_t& t, std::size_t& r, std::size_t& s) -> bool {
        for (t = std::max<std::size_t>(min_spot, 1); t <= grids.size(); ++t) {
            const Grid& g = grids[t - 1];
            for (r = 0; r < g.size(); ++r)
                for (s = 0; s < (g.empty() ? 0 : g[r].size()); ++s)
                    if (!g[r][s].is_zero() && g[r][s].is_constant()) return true;
        }
        return false;
    };

    std::size_t t, r, s;
    while (find_unit(t, r, s)) {
        Grid& d = grids[t - 1];
        const u64 p = ring->p;
        u64 uinv = fp_inv(d[r][s].lc(), p);

        // column operations clearing row r; basis change e_{s'} -> e_{s'} - q·e_s
        // transports to d_{t+1} as row s += q · row s'
        for (std::size_t s2 = 0; s2 < d[r].size(); ++s2) {
            if (s2 == s || d[r][s2].is_zero()) continue;
            Poly q = d[r][s2].scale(uinv);
            for (std::size_t r2 = 0; r2 < d.size(); ++r2)
                d[r2][s2] = d[r2][s2] - q * d[r2][s];
            if (t < grids.size()) {
                Grid& up = grids[t];
                for (std::size_t s3 = 0; s3 < (up.empty() ? 0 : up[s].size()); ++s3)
                    up[s][s3] = up[s][s3] + q * up[s2][s3];
            }
        }
        // row operations clearing column s; basis change on the codomain
        // transports to d_{t-1} as col r += f · col r'
        for (std::size_t r2 = 0; r2 < d.size(); ++r2) {
            if (r2 == r || d[r2][s].is_zero()) continue;
            Poly f = d[r2][s].scale(uinv);
            for (std::size_t s2 = 0; s2 < d[r2].size(); ++s2)
                d[r2][s2] = d[r2][s2] - f * d[r][s2];
            if (t >= 2) {
                Grid& down = grids[t - 2];
                for (std::size_t r3 = 0; r3 < down.size(); ++r3)
                    down[r3][r] = down[r3][r] + f * down[r3][r2];
            }
        }
        // split off the freed generator pair
        drop_row(d, r);
        drop_col(d, s);
        mods[t].deg.erase(mods[t].deg.begin() + s);
        mods[t - 1].deg.erase(mods[t - 1].deg.begin() + r);
        if (t < grids.size()) drop_row(grids[t], s);
        if (t >= 2) drop_col(grids[t - 2], r);
    }

    // trim trailing zero modules
    while (mods.size() > 1 && mods.back().rank() == 0) {
        mods.pop_back();
        grids.pop_back();
    }

    ChainComplex out;
    out.ring = ring;
    out.mods = mods;
    for (std::size_t k = 0; k < grids.size(); ++k)
        out.diffs.push_back(from_grid(ring, mods[k], mods[k + 1], grids[k]));
    out.validate();
    return out;
}

ChainComplex dualize_into_omega(const ChainComplex& c) {
    const int w = static_cast<int>(c.ring->nvars()); // Ω = R(-n-1), n+1 = nvars
    std::size_t nn = c.top();
    ChainComplex d;
    d.ring = c.ring;
    for (std::size_t u = 0; u <= nn; ++u) {
        FreeModule f;
        for (int dg : c.mods[nn - u].deg) f.deg.push_back(w - dg);
        d.mods.push_back(std::move(f));
    }
    for (std::size_t u = 1; u <= nn; ++u)
        d.diffs.push_back(c.diffs[nn - u].dual_into(w));
    d.validate();
    return d;
}

const GBEngine& SubquotientPresentation::solver() const {
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    if (!solver_) {
        auto cols = cycles.columns();
        for (auto& b : boundaries.columns()) cols.push_back(b);
        solver_ = std::make_shared<GBEngine>(ring, ambient, std::move(cols), true);
    }
    return *solver_;
}

SubquotientPresentation homology_presentation(const ChainComplex& c, std::size_t t) {
    if (t > c.top()) throw InternalError("homology spot out of range");
    const Ring& ring = c.ring;
    const FreeModule& amb = c.mods[t];

    ModMatrix cycles = (t == 0) ? ModMatrix::identity(ring, amb)
                                : syzygy_matrix(c.d(t));
    ModMatrix bnd = (t == c.top())
                        ? ModMatrix::from_cols(ring, amb, {})
                        : c.d(t + 1);

    // prune cycles that already lie in the boundary submodule
    GBEngine bnd_engine(ring, amb, bnd.columns(), false);
    std::vector<std::vector<Poly>> kept;
    for (std::size_t k = 0; k < cycles.cols(); ++k) {
        auto col = cycles.col(k);
        if (!bnd_engine.contains(col)) kept.push_back(std::move(col));
    }
    ModMatrix gen_mat = ModMatrix::from_cols(ring, amb, kept);

    // relations: syzygies of [generators | boundaries], restricted to the
    // generator block (the boundary tail records how the combination bounds)
    std::vector<std::vector<Poly>> all_cols = kept;
    for (auto& b : bnd.columns()) all_cols.push_back(b);
    ModMatrix rel = ModMatrix::from_cols(ring, gen_mat.dom(), {});
    if (!kept.empty()) {
        FreeModule joint = gen_mat.dom();
        for (int dg : bnd.dom().deg) joint.deg.push_back(dg);
        ModMatrix combined = ModMatrix::from_cols(ring, amb, joint, all_cols);
        ModMatrix syz = syzygy_matrix(combined);
        std::vector<std::vector<Poly>> rel_cols;
        for (std::size_t k = 0; k < syz.cols(); ++k) {
            std::vector<Poly> full = syz.col(k);
            std::vector<Poly> head(full.begin(), full.begin() + kept.size());
            bool zero = true;
            for (const auto& f : head)
                if (!f.is_zero()) { zero = false; break; }
            if (!zero) rel_cols.push_back(std::move(head));
        }
        rel = ModMatrix::from_cols(ring, gen_mat.dom(), rel_cols);
    }

    SubquotientPresentation pres;
    pres.ring = ring;
    pres.ambient = amb;
    pres.cycles = std::move(gen_mat);
    pres.relations = std::move(rel);
    pres.boundaries = std::move(bnd);
    return pres;
}

std::vector<Poly> express_in_presentation(const SubquotientPresentation& pres,
                                          const std::vector<Poly>& v) {
    auto [r, w] = pres.solver().nf_with_witness(v);
    for (const auto& f : r)
        if (!f.is_zero())
            throw NotInImage("element is not a cycle-plus-boundary combination");
    return std::vector<Poly>(w.begin(), w.begin() + pres.ngens());
}

std::vector<u64> DegreePiece::coords(const std::vector<Poly>& gen_coeffs) const {
    std::vector<u64> flat(free_basis.size(), 0);
    for (std::size_t g = 0; g < gen_coeffs.size(); ++g)
        for (const auto& t : gen_coeffs[g].terms()) {
            auto it = index_.find({g, t.m.e});
            if (it == index_.end())
                throw InternalError("coordinate outside the expected graded piece");
            flat[it->second] = fp_add(flat[it->second], t.c, ring->p);
        }
    return reducer.quotient_coords(flat);
}

DegreePiece graded_piece(const SubquotientPresentation& pres, int degree) {
    DegreePiece piece;
    piece.degree = degree;
    piece.ring = pres.ring;
    const auto& gdeg = pres.gen_degrees();
    std::size_t nv = pres.ring->nvars();
    for (std::size_t g = 0; g < gdeg.size(); ++g)
        for (auto& m : monomials_of_degree(nv, degree - gdeg[g])) {
            piece.index_[{g, m.e}] = piece.free_basis.size();
            piece.free_basis.emplace_back(g, std::move(m));
        }

    // expand every relation column into this degree
    std::vector<std::vector<u64>> expanded;
    const ModMatrix& rel = pres.relations;
    for (std::size_t k = 0; k < rel.cols(); ++k) {
        int rd = rel.dom().deg[k];
        for (const auto& m : monomials_of_degree(nv, degree - rd)) {
            std::vector<u64> v(piece.free_basis.size(), 0);
            for (std::size_t g = 0; g < rel.rows(); ++g)
                for (const auto& t : rel.at(g, k).terms()) {
                    auto it = piece.index_.find({g, mono_mul(t.m, m).e});
                    assert(it != piece.index_.end());
                    v[it->second] = fp_add(v[it->second], t.c, pres.ring->p);
                }
            expanded.push_back(std::move(v));
        }
    }
    DenseMatrix w(pres.ring->p, piece.free_basis.size(), expanded.size());
    for (std::size_t c = 0; c < expanded.size(); ++c)
        for (std::size_t r = 0; r < expanded[c].size(); ++r)
            w.set(r, c, expanded[c][r]);
    piece.reducer = SpanReducer(w);
    piece.qbasis.assign(piece.reducer.free_rows().begin(), piece.reducer.free_rows().end());
    return piece;
}

std::vector<Poly> ambient_rep(const SubquotientPresentation& pres, const DegreePiece& piece,
                              std::size_t k) {
    assert(k < piece.dim());
    auto [g, m] = piece.free_basis[piece.qbasis[k]];
    std::vector<Poly> out;
    out.reserve(pres.ambient.rank());
    for (std::size_t r = 0; r < pres.ambient.rank(); ++r)
        out.push_back(pres.cycles.at(r, g).mul_term(m, 1));
    return out;
}

} // namespace lyu
