#include "lyucalc/engine.hpp"

#include <chrono>
#include <random>

namespace lyu {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

} // namespace

TableEngine::TableEngine(Ring ring, std::vector<Poly> gens, EngineOptions opt)
    : ring_(std::move(ring)), opt_(std::move(opt)), gens_(std::move(gens)),
      cache_(opt_.cache_dir) {
    for (const auto& g : gens_) {
        if (g.is_zero()) throw Error("zero generator in ideal input");
        if (!g.is_homogeneous())
            throw InhomogeneousError("generator is not homogeneous: " + g.to_string());
        if (g.is_constant())
            throw InhomogeneousError("generator is a nonzero constant (unit ideal)");
    }
    gb_ = ideal_gb(ring_, gens_);
    for (const auto& f : gb_)
        if (f.is_constant() && !f.is_zero())
            throw InhomogeneousError("generators span the unit ideal");
    dim_a_ = krull_dimension(ring_, gb_);
    const int w = static_cast<int>(ring_->nvars());
    s_ = static_cast<int>(ring_->p - 1) * w;
    p_ = resolve_quotient_cached(gb_);
    pdual_ = dualize_into_omega(p_);
    frob_ = frobenius_root_map(p_);
}

ChainComplex TableEngine::resolve_quotient_cached(const std::vector<Poly>& reduced_gb) {
    const std::size_t length = ring_->nvars() + 1; // n+2, enough for Ext^0..Ext^{n+1}
    std::string material = resolution_key_material(ring_, reduced_gb, opt_.minimize, length);
    if (auto hit = cache_.load(ring_, material)) return std::move(*hit);
    ChainComplex c = free_resolution_of_quotient(ring_, reduced_gb, length, opt_.minimize);
    cache_.store(material, c);
    return c;
}

std::shared_ptr<const TableEngine::JStage> TableEngine::jstage(std::size_t j) {
    {
        std::lock_guard<std::mutex> lock(mtx_);
        auto it = jstages_.find(j);
        if (it != jstages_.end()) return it->second;
    }
    auto built = build_jstage(j);
    std::lock_guard<std::mutex> lock(mtx_);
    return jstages_.emplace(j, std::move(built)).first->second;
}

std::shared_ptr<const TableEngine::BracketStage> TableEngine::bracket_stage(unsigned e) {
    {
        std::lock_guard<std::mutex> lock(mtx_);
        auto it = brackets_.find(e);
        if (it != brackets_.end()) return it->second;
    }
    auto bs = std::make_shared<BracketStage>();
    bs->gb_q = ideal_gb(ring_, bracket_power(gb_, e));
    bs->Pq = resolve_quotient_cached(bs->gb_q);
    bs->PqDual = dualize_into_omega(bs->Pq);
    std::lock_guard<std::mutex> lock(mtx_);
    return brackets_.emplace(e, std::move(bs)).first->second;
}

std::shared_ptr<const TableEngine::JStage> TableEngine::build_jstage(std::size_t j) const {
    const int w = static_cast<int>(ring_->nvars());
    const int p = static_cast<int>(ring_->p);
    auto js = std::make_shared<JStage>();
    js->j = j;
    js->t1 = ring_->nvars() - j; // n+1-j
    js->T = ext_at(p_, pdual_, js->t1);
    js->Q = free_resolution(js->T.pres.relations, ring_->nvars() + 1, opt_.minimize);
    js->Qdual = dualize_into_omega(js->Q);
    js->Qp = twist_complex(fstar_complex(js->Q), s_);

    if (js->T.pres.ngens() == 0) {
        // the whole column vanishes; u and its lift are empty maps
        js->u = ModMatrix::from_cols(ring_, js->Qp.mods[0], js->Q.mods[0], {});
        js->q.push_back(js->u);
        return js;
    }

    // T' = (F^*T)(s) presented inside Hom((F^*P)_{t1}, Ω); the twist by
    // s = (p-1)(n+1) is exactly what makes the two ambients coincide
    SubquotientPresentation tp;
    tp.ring = ring_;
    tp.ambient = twist(scale_degrees(js->T.pres.ambient, p), s_);
    FreeModule expected;
    for (int d : p_.mods[js->t1].deg) expected.deg.push_back(w - p * d);
    if (!(tp.ambient == expected))
        throw TwistMismatch("first layer: (F^*T)(s) does not land in Hom(F^*P, Ω)");
    tp.cycles = fstar_matrix(js->T.pres.cycles).twist_both(s_);
    tp.relations = fstar_matrix(js->T.pres.relations).twist_both(s_);
    tp.boundaries = fstar_matrix(js->T.pres.boundaries).twist_both(s_);
    js->tprime = std::move(tp);

    // u : T -> T' on generators, induced by the dual of the Frobenius lift
    ModMatrix cdual = frob_.maps[js->t1].dual_into(w);
    if (!(cdual.dom() == js->T.pres.ambient) || !(cdual.cod() == js->tprime.ambient))
        throw TwistMismatch("first layer: dual Frobenius lift has unexpected degrees");
    std::vector<std::vector<Poly>> ucols;
    for (std::size_t k = 0; k < js->T.pres.ngens(); ++k) {
        std::vector<Poly> wk = cdual.apply(js->T.pres.cycles.col(k));
        int dk = js->T.pres.gen_degrees()[k];
        if (column_degree(js->tprime.ambient, wk, dk) != dk)
            throw TwistMismatch("first layer: generator image degree is off the ledger");
        ucols.push_back(express_in_presentation(js->tprime, wk));
    }
    try {
        js->u = ModMatrix::from_cols(ring_, js->tprime.cycles.dom(),
                                     js->T.pres.cycles.dom(), ucols);
    } catch (const InhomogeneousError& ex) {
        throw TwistMismatch(std::string("u is not degree-preserving: ") + ex.what());
    }

    // chain lift of u over Q -> (F^*Q)(s); spot 0 is u itself
    if (!(js->u.cod() == js->Qp.mods[0]) || !(js->u.dom() == js->Q.mods[0]))
        throw TwistMismatch("second layer: u does not match the twisted pullback resolution");
    js->q.push_back(js->u);
    for (std::size_t t = 1; t <= js->Q.top(); ++t)
        js->q.push_back(lift_through(js->Qp.d(t), js->q[t - 1].compose(js->Q.d(t))));
    return js;
}

const TableEngine::Cell& TableEngine::cell(std::size_t i, std::size_t j) {
    auto key = std::make_pair(i, j);
    {
        std::lock_guard<std::mutex> lock(mtx_);
        auto it = cells_.find(key);
        if (it != cells_.end()) return *it->second;
    }
    auto js = jstage(j);
    auto built = build_cell(*js, i, j);
    std::lock_guard<std::mutex> lock(mtx_);
    return *cells_.emplace(key, std::move(built)).first->second;
}

std::shared_ptr<const TableEngine::Cell> TableEngine::build_cell(const JStage& js,
                                                                 std::size_t i,
                                                                 std::size_t j) const {
    auto t0 = std::chrono::steady_clock::now();
    const int w = static_cast<int>(ring_->nvars());
    const int p = static_cast<int>(ring_->p);
    auto c = std::make_shared<Cell>();
    c->i = i;
    c->j = j;
    const std::size_t t2 = ring_->nvars() - i; // n+1-i
    c->e = ext_at(js.Q, js.Qdual, t2);
    c->e0 = graded_piece(c->e.pres, 0);
    const std::size_t dim = c->e0.dim();
    c->phi0.mat = DenseMatrix(ring_->p, dim, dim);
    if (dim > 0) {
        ModMatrix qdual = js.q[t2].dual_into(w);
        if (!(qdual.cod() == c->e.pres.ambient) ||
            !(qdual.dom() == scale_degrees(c->e.pres.ambient, p)))
            throw TwistMismatch("second layer: Hom((F^*Q)(s), Ω) degrees are off the ledger");
        for (std::size_t k = 0; k < dim; ++k) {
            std::vector<Poly> z = ambient_rep(c->e.pres, c->e0, k);
            std::vector<Poly> img = phi_ambient(qdual, z);
            if (column_degree(c->e.pres.ambient, img, 0) != 0)
                throw TwistMismatch("φ image of a degree-0 class has nonzero degree");
            std::vector<u64> col = c->e0.coords(express_in_presentation(c->e.pres, img));
            for (std::size_t r = 0; r < dim; ++r) c->phi0.mat.set(r, k, col[r]);
        }
        if (opt_.spot_checks) spot_check_cell(js, *c, qdual);
    }
    c->lambda = stable_rank(c->phi0);
    c->build_ms = ms_since(t0);
    return c;
}

std::vector<Poly> TableEngine::phi_ambient(const ModMatrix& qdual,
                                           const std::vector<Poly>& z) const {
    std::vector<Poly> zf;
    zf.reserve(z.size());
    for (const auto& f : z) zf.push_back(f.frobenius(1));
    return qdual.apply(zf);
}

void TableEngine::spot_check_cell(const JStage& js, const Cell& c,
                                  const ModMatrix& qdual) const {
    (void)js;
    const u64 p = ring_->p;
    std::mt19937_64 rng(opt_.seed ^ (0x9e3779b97f4a7c15ull * (c.i + 1)) ^
                        (0xc2b2ae3d27d4eb4full * (c.j + 1)));
    const std::size_t dim = c.e0.dim();
    // φ(s·z) == s^p · φ(z) for a random scalar and basis representative
    std::size_t k = rng() % dim;
    u64 sc = 1 + rng() % (p - 1);
    std::vector<Poly> z = ambient_rep(c.e.pres, c.e0, k);
    std::vector<Poly> scaled;
    scaled.reserve(z.size());
    for (const auto& f : z) scaled.push_back(f.scale(sc));
    std::vector<Poly> lhs = phi_ambient(qdual, scaled);
    std::vector<Poly> rhs = phi_ambient(qdual, z);
    u64 scp = fp_pow(sc, p, p);
    for (std::size_t r = 0; r < rhs.size(); ++r)
        if (!(lhs[r] == rhs[r].scale(scp)))
            throw InternalError("p-linearity spot check failed at cell (" +
                                std::to_string(c.i) + "," + std::to_string(c.j) + ")");
    // φ sends degree-0 boundary elements back into the boundaries
    const ModMatrix& bnd = c.e.pres.boundaries;
    for (std::size_t b = 0; b < bnd.cols(); ++b) {
        int db = bnd.dom().deg[b];
        auto monos = monomials_of_degree(ring_->nvars(), -db);
        if (monos.empty()) continue;
        std::vector<Poly> wv;
        wv.reserve(bnd.rows());
        for (std::size_t r = 0; r < bnd.rows(); ++r)
            wv.push_back(bnd.at(r, b).mul_term(monos[rng() % monos.size()], 1));
        std::vector<u64> coords =
            c.e0.coords(express_in_presentation(c.e.pres, phi_ambient(qdual, wv)));
        for (u64 x : coords)
            if (x)
                throw InternalError("boundary preservation spot check failed at cell (" +
                                    std::to_string(c.i) + "," + std::to_string(c.j) + ")");
        break; // one boundary element suffices as a smoke test
    }
}

std::vector<std::size_t> TableEngine::degree_dims(std::size_t i, std::size_t j, int lo,
                                                  int hi) {
    const Cell& c = cell(i, j);
    std::vector<std::size_t> out;
    for (int d = lo; d <= hi; ++d) out.push_back(graded_piece(c.e.pres, d).dim());
    return out;
}

std::vector<Poly> TableEngine::phi_image(std::size_t i, std::size_t j,
                                         const std::vector<Poly>& z) {
    const Cell& c = cell(i, j);
    auto js = jstage(j);
    const std::size_t t2 = ring_->nvars() - i;
    if (c.e.zero || t2 >= js->q.size())
        throw Error("phi_image: E^{" + std::to_string(i) + "," + std::to_string(j) +
                    "} sits beyond the resolution of the inner Ext layer");
    if (z.size() != c.e.pres.ambient.rank())
        throw Error("phi_image: representative has ambient rank " +
                    std::to_string(z.size()) + ", expected " +
                    std::to_string(c.e.pres.ambient.rank()));
    ModMatrix qdual = js->q[t2].dual_into(static_cast<int>(ring_->nvars()));
    return phi_ambient(qdual, z);
}

DenseMatrix TableEngine::tower_matrix(std::size_t i, std::size_t j, unsigned e) {
    const Cell& c = cell(i, j);
    if (e == 0) return DenseMatrix::identity(ring_->p, c.e0.dim());
    auto js = jstage(j);
    auto bs = bracket_stage(e);

    // first layer: h : T -> T_q induced by R/I^[q] ->> R/I
    ExtModule tq = ext_at(bs->Pq, bs->PqDual, js->t1);
    ModMatrix g(ring_, p_.mods[0], bs->Pq.mods[0], {Poly::constant(ring_, 1)});
    ModMatrix h = ext_functorial_map(g, bs->Pq, p_, tq, js->T);

    // second layer: Ext^{t2}(T_q, Ω) -> Ext^{t2}(T, Ω)
    ChainComplex qq = free_resolution(tq.pres.relations, ring_->nvars() + 1, opt_.minimize);
    ChainComplex qq_dual = dualize_into_omega(qq);
    const std::size_t t2 = ring_->nvars() - i;
    ExtModule eq = ext_at(qq, qq_dual, t2);
    ModMatrix lmap = ext_functorial_map(h, js->Q, qq, c.e, eq);

    // read the map off on the fixed degree-0 bases
    DegreePiece eq0 = graded_piece(eq.pres, 0);
    DenseMatrix out(ring_->p, c.e0.dim(), eq0.dim());
    for (std::size_t k = 0; k < eq0.dim(); ++k) {
        auto [gk, mk] = eq0.free_basis[eq0.qbasis[k]];
        std::vector<Poly> coeffs;
        coeffs.reserve(lmap.rows());
        for (std::size_t r = 0; r < lmap.rows(); ++r)
            coeffs.push_back(lmap.at(r, gk).mul_term(mk, 1));
        std::vector<u64> col = c.e0.coords(coeffs);
        for (std::size_t r = 0; r < col.size(); ++r) out.set(r, k, col[r]);
    }
    return out;
}

} // namespace lyu
