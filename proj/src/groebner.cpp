#include "lyucalc/groebner.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace lyu {

namespace {

// one flat term of the augmented module F ⊕ R^s: comp < nmain addresses F,
// comp >= nmain addresses the tag copy of R^s
struct FTerm {
    int comp;
    Monomial m;
    u64 c;
};

using FVec = std::vector<FTerm>; // strictly descending in the engine order

} // namespace

struct GBEngine::Impl {
    Ring ring;
    FreeModule amb;
    bool with_tags;
    std::size_t nmain = 0;
    std::size_t ncols = 0;
    std::vector<int> tag_deg;                          // degree of input column i
    std::vector<std::pair<int, Monomial>> tag_weight;  // Schreyer weight of ε_i

    struct Elt {
        FVec t;
    };
    std::vector<Elt> basis;

    // finalized outputs
    std::vector<std::size_t> final_main; // basis indices, leads descending
    std::vector<std::size_t> final_tag;
    std::vector<std::vector<Poly>> gb_cols, gb_reps, syz_cols;
    // split caches for division against the final GB
    std::vector<FVec> main_part, tag_part;

    bool is_main(int comp) const { return comp < static_cast<int>(nmain); }

    int comp_degree(int comp) const {
        return is_main(comp) ? amb.deg[comp] : tag_deg[comp - nmain];
    }

    // +1 if a > b
    int cmp_term(const FTerm& a, const FTerm& b) const {
        bool am = is_main(a.comp), bm = is_main(b.comp);
        if (am != bm) return am ? 1 : -1;
        if (am) {
            if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1; // e_0 > e_1 > ...
            return mono_cmp(*ring, a.m, b.m);
        }
        int ia = a.comp - static_cast<int>(nmain), ib = b.comp - static_cast<int>(nmain);
        const auto& wa = tag_weight[ia];
        const auto& wb = tag_weight[ib];
        if (wa.first != wb.first) return wa.first < wb.first ? 1 : -1;
        int c = mono_cmp(*ring, mono_mul(a.m, wa.second), mono_mul(b.m, wb.second));
        if (c) return c;
        if (ia != ib) return ia < ib ? 1 : -1;
        return 0;
    }

    void sort_desc(FVec& v) const {
        std::sort(v.begin(), v.end(),
                  [&](const FTerm& a, const FTerm& b) { return cmp_term(a, b) > 0; });
        // combine equal terms (callers avoid duplicates, but stay safe)
        FVec out;
        out.reserve(v.size());
        for (auto& t : v) {
            if (!out.empty() && out.back().comp == t.comp && out.back().m == t.m)
                out.back().c = fp_add(out.back().c, t.c, ring->p);
            else
                out.push_back(std::move(t));
            if (!out.empty() && out.back().c == 0) out.pop_back();
        }
        v = std::move(out);
    }

    // v - c * x^m * w, all inputs sorted; monomial scaling preserves order
    FVec sub_scaled(const FVec& v, u64 c, const Monomial& m, const FVec& w) const {
        const u64 p = ring->p;
        FVec out;
        out.reserve(v.size() + w.size());
        std::size_t i = 0, j = 0;
        while (i < v.size() && j < w.size()) {
            FTerm wt{w[j].comp, mono_mul(w[j].m, m), fp_mul(w[j].c, c, p)};
            int cc = cmp_term(v[i], wt);
            if (cc > 0) {
                out.push_back(v[i++]);
            } else if (cc < 0) {
                wt.c = fp_neg(wt.c, p);
                if (wt.c) out.push_back(std::move(wt));
                ++j;
            } else {
                u64 d = fp_sub(v[i].c, wt.c, p);
                if (d) out.push_back(FTerm{v[i].comp, v[i].m, d});
                ++i;
                ++j;
            }
        }
        for (; i < v.size(); ++i) out.push_back(v[i]);
        for (; j < w.size(); ++j) {
            u64 cc = fp_neg(fp_mul(w[j].c, c, p), p);
            if (cc) out.push_back(FTerm{w[j].comp, mono_mul(w[j].m, m), cc});
        }
        return out;
    }

    void make_monic(FVec& v) const {
        if (v.empty() || v[0].c == 1) return;
        u64 inv = fp_inv(v[0].c, ring->p);
        for (auto& t : v) t.c = fp_mul(t.c, inv, ring->p);
    }

    // ---- Buchberger ----

    struct Pair {
        int deg;
        std::size_t i, j;
        bool operator>(const Pair& rhs) const {
            if (deg != rhs.deg) return deg > rhs.deg;
            if (j != rhs.j) return j > rhs.j;
            return i > rhs.i;
        }
    };

    std::priority_queue<Pair, std::vector<Pair>, std::greater<Pair>> queue;
    std::set<std::pair<std::size_t, std::size_t>> treated;

    static std::pair<std::size_t, std::size_t> key(std::size_t a, std::size_t b) {
        return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    }

    void push_pairs_for(std::size_t t) {
        const FTerm& lt = basis[t].t[0];
        for (std::size_t k = 0; k < t; ++k) {
            const FTerm& g = basis[k].t[0];
            if (g.comp != lt.comp) continue;
            Monomial l = mono_lcm(g.m, lt.m);
            queue.push(Pair{l.degree() + comp_degree(lt.comp), k, t});
        }
    }

    bool top_reducible_by(const FTerm& lt, std::size_t k) const {
        const FTerm& g = basis[k].t[0];
        return g.comp == lt.comp && mono_divides(g.m, lt.m);
    }

    void top_reduce(FVec& v) const {
        while (!v.empty()) {
            bool hit = false;
            for (std::size_t k = 0; k < basis.size(); ++k) {
                if (top_reducible_by(v[0], k)) {
                    v = sub_scaled(v, v[0].c, mono_quot(v[0].m, basis[k].t[0].m), basis[k].t);
                    hit = true;
                    break;
                }
            }
            if (!hit) return;
        }
    }

    void add_to_basis(FVec v) {
        make_monic(v);
        std::size_t t = basis.size();
        basis.push_back(Elt{std::move(v)});
        push_pairs_for(t);
    }

    bool chain_skip(std::size_t i, std::size_t j, int comp, const Monomial& lcm) const {
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (k == i || k == j) continue;
            const FTerm& g = basis[k].t[0];
            if (g.comp != comp || !mono_divides(g.m, lcm)) continue;
            if (treated.count(key(i, k)) && treated.count(key(j, k))) return true;
        }
        return false;
    }

    void run(const std::vector<std::vector<Poly>>& cols) {
        const bool rank1_plain = !with_tags && nmain == 1;
        // seed input elements
        for (std::size_t i = 0; i < ncols; ++i) {
            FVec v;
            for (std::size_t r = 0; r < nmain; ++r)
                for (const auto& t : cols[i][r].terms())
                    v.push_back(FTerm{static_cast<int>(r), t.m, t.c});
            if (with_tags)
                v.push_back(FTerm{static_cast<int>(nmain + i), mono_one(ring->nvars()), 1});
            sort_desc(v);
            top_reduce(v);
            if (!v.empty()) add_to_basis(std::move(v));
        }
        // completion
        while (!queue.empty()) {
            Pair pr = queue.top();
            queue.pop();
            const FTerm& gi = basis[pr.i].t[0];
            const FTerm& gj = basis[pr.j].t[0];
            Monomial l = mono_lcm(gi.m, gj.m);
            treated.insert(key(pr.i, pr.j));
            if (rank1_plain && mono_gcd(gi.m, gj.m).is_one()) continue; // coprime leads
            if (chain_skip(pr.i, pr.j, gi.comp, l)) continue;
            // S-element of two monic elements
            FVec s;
            {
                Monomial qi = mono_quot(l, gi.m);
                for (const auto& t : basis[pr.i].t)
                    s.push_back(FTerm{t.comp, mono_mul(t.m, qi), t.c});
            }
            s = sub_scaled(s, 1, mono_quot(l, gj.m), basis[pr.j].t);
            top_reduce(s);
            if (!s.empty()) add_to_basis(std::move(s));
        }
        finalize();
    }

    // full division against the kept GB (indices `kept`), skipping `skip`
    FVec full_nf(FVec v, const std::vector<std::size_t>& kept, std::size_t skip) const {
        FVec rem;
        while (!v.empty()) {
            bool hit = false;
            for (std::size_t k : kept) {
                if (k == skip) continue;
                if (top_reducible_by(v[0], k)) {
                    v = sub_scaled(v, v[0].c, mono_quot(v[0].m, basis[k].t[0].m), basis[k].t);
                    hit = true;
                    break;
                }
            }
            if (!hit) {
                rem.push_back(v.front());
                v.erase(v.begin());
            }
        }
        return rem;
    }

    void finalize() {
        // minimalize: keep elements whose leads are not divisible by another
        // kept lead; scanning leads in ascending order keeps the smallest
        std::vector<std::size_t> idx(basis.size());
        for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            int c = cmp_term(basis[a].t[0], basis[b].t[0]);
            return c ? c < 0 : a < b;
        });
        std::vector<std::size_t> kept;
        for (std::size_t k : idx) {
            bool red = false;
            for (std::size_t g : kept)
                if (top_reducible_by(basis[k].t[0], g)) { red = true; break; }
            if (!red) kept.push_back(k);
        }
        // tail-reduce for the canonical reduced basis
        for (std::size_t k : kept) {
            FVec tail(basis[k].t.begin() + 1, basis[k].t.end());
            tail = full_nf(std::move(tail), kept, k);
            FVec out;
            out.reserve(tail.size() + 1);
            out.push_back(basis[k].t[0]);
            for (auto& t : tail) out.push_back(std::move(t));
            basis[k].t = std::move(out);
        }
        std::sort(kept.begin(), kept.end(), [&](std::size_t a, std::size_t b) {
            int c = cmp_term(basis[a].t[0], basis[b].t[0]);
            return c ? c > 0 : a < b;
        });
        for (std::size_t k : kept) {
            if (is_main(basis[k].t[0].comp))
                final_main.push_back(k);
            else
                final_tag.push_back(k);
        }
        // split + convert
        for (std::size_t k : final_main) {
            FVec mp, tp;
            for (const auto& t : basis[k].t)
                (is_main(t.comp) ? mp : tp).push_back(t);
            gb_cols.push_back(to_polys(mp, 0, nmain));
            if (with_tags) gb_reps.push_back(to_polys(tp, nmain, ncols));
            main_part.push_back(std::move(mp));
            tag_part.push_back(std::move(tp));
        }
        for (std::size_t k : final_tag)
            syz_cols.push_back(to_polys(basis[k].t, nmain, ncols));
    }

    std::vector<Poly> to_polys(const FVec& v, std::size_t base, std::size_t count) const {
        std::vector<std::vector<Term>> buckets(count);
        for (const auto& t : v) {
            assert(t.comp >= static_cast<int>(base) &&
                   t.comp < static_cast<int>(base + count));
            buckets[t.comp - base].push_back(Term{t.m, t.c});
        }
        std::vector<Poly> out;
        out.reserve(count);
        for (auto& b : buckets) out.push_back(Poly::from_terms(ring, std::move(b)));
        return out;
    }

    // division of a plain module element by the final GB; main-only arithmetic,
    // optional witness accumulated from the stored tag parts
    std::vector<Poly> divide(const std::vector<Poly>& v, std::vector<Poly>* witness) const {
        assert(v.size() == nmain);
        const u64 p = ring->p;
        FVec cur;
        for (std::size_t r = 0; r < nmain; ++r)
            for (const auto& t : v[r].terms())
                cur.push_back(FTerm{static_cast<int>(r), t.m, t.c});
        sort_desc(cur);
        std::vector<std::vector<Term>> wit(witness ? ncols : 0);
        FVec rem;
        while (!cur.empty()) {
            bool hit = false;
            for (std::size_t k = 0; k < final_main.size(); ++k) {
                const FTerm& g = main_part[k][0];
                if (g.comp != cur[0].comp || !mono_divides(g.m, cur[0].m)) continue;
                u64 c = cur[0].c;
                Monomial q = mono_quot(cur[0].m, g.m);
                cur = sub_scaled(cur, c, q, main_part[k]);
                if (witness)
                    for (const auto& t : tag_part[k])
                        wit[t.comp - nmain].push_back(
                            Term{mono_mul(t.m, q), fp_mul(t.c, c, p)});
                hit = true;
                break;
            }
            if (!hit) {
                rem.push_back(cur.front());
                cur.erase(cur.begin());
            }
        }
        if (witness) {
            witness->clear();
            for (auto& b : wit) witness->push_back(Poly::from_terms(ring, std::move(b)));
        }
        return to_polys(rem, 0, nmain);
    }
};

GBEngine::GBEngine(Ring ring, FreeModule ambient, std::vector<std::vector<Poly>> cols,
                   bool with_tags) {
    auto impl = std::make_shared<Impl>();
    impl->ring = std::move(ring);
    impl->amb = std::move(ambient);
    impl->with_tags = with_tags;
    impl->nmain = impl->amb.rank();
    impl->ncols = cols.size();
    impl->tag_deg.resize(cols.size());
    impl->tag_weight.resize(cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (cols[i].size() != impl->nmain)
            throw InternalError("input column has the wrong ambient rank");
        // queue degree of the column: for homogeneous input this is its
        // degree; otherwise the top term degree (the pair queue only needs a
        // deterministic priority, inhomogeneous input stays fully supported)
        int qdeg = 0;
        bool seen = false;
        for (std::size_t r = 0; r < impl->nmain; ++r)
            for (const auto& t : cols[i][r].terms()) {
                int d = t.m.degree() + impl->amb.deg[r];
                if (!seen || d > qdeg) qdeg = d;
                seen = true;
            }
        impl->tag_deg[i] = qdeg;
        // Schreyer weight: main lead of the column; harmless default for zero columns
        impl->tag_weight[i] = {0, mono_one(impl->ring->nvars())};
        FTerm best{-1, mono_one(impl->ring->nvars()), 0};
        for (std::size_t r = 0; r < impl->nmain; ++r) {
            if (cols[i][r].is_zero()) continue;
            FTerm cand{static_cast<int>(r), cols[i][r].lm(), 1};
            if (best.comp < 0 || impl->cmp_term(cand, best) > 0) best = cand;
        }
        if (best.comp >= 0) impl->tag_weight[i] = {best.comp, best.m};
    }
    impl->run(cols);
    impl_ = std::move(impl);
}

GBEngine GBEngine::for_ideal(Ring ring, const std::vector<Poly>& gens, bool with_tags) {
    std::vector<std::vector<Poly>> cols;
    cols.reserve(gens.size());
    for (const auto& g : gens) cols.push_back({g});
    return GBEngine(std::move(ring), free_module({0}), std::move(cols), with_tags);
}

const Ring& GBEngine::ring() const { return impl_->ring; }
const FreeModule& GBEngine::ambient() const { return impl_->amb; }
std::size_t GBEngine::ngens() const { return impl_->ncols; }
const std::vector<std::vector<Poly>>& GBEngine::gb() const { return impl_->gb_cols; }

const std::vector<std::vector<Poly>>& GBEngine::reps() const {
    assert(impl_->with_tags);
    return impl_->gb_reps;
}

const std::vector<std::vector<Poly>>& GBEngine::syzygies() const {
    assert(impl_->with_tags);
    return impl_->syz_cols;
}

std::vector<Poly> GBEngine::nf(const std::vector<Poly>& v) const {
    return impl_->divide(v, nullptr);
}

std::pair<std::vector<Poly>, std::vector<Poly>>
GBEngine::nf_with_witness(const std::vector<Poly>& v) const {
    assert(impl_->with_tags);
    std::vector<Poly> w;
    auto r = impl_->divide(v, &w);
    return {std::move(r), std::move(w)};
}

bool GBEngine::contains(const std::vector<Poly>& v) const {
    auto r = impl_->divide(v, nullptr);
    for (const auto& f : r)
        if (!f.is_zero()) return false;
    return true;
}

Poly GBEngine::nf1(const Poly& f) const {
    assert(impl_->nmain == 1);
    return impl_->divide({f}, nullptr)[0];
}

bool GBEngine::contains1(const Poly& f) const { return contains({f}); }

std::vector<Poly> ideal_gb(Ring ring, const std::vector<Poly>& gens) {
    GBEngine eng = GBEngine::for_ideal(std::move(ring), gens, false);
    std::vector<Poly> out;
    out.reserve(eng.gb().size());
    for (const auto& c : eng.gb()) out.push_back(c[0]);
    return out;
}

bool ideal_equal(Ring ring, const std::vector<Poly>& a, const std::vector<Poly>& b) {
    auto ga = ideal_gb(ring, a);
    auto gb_ = ideal_gb(ring, b);
    if (ga.size() != gb_.size()) return false;
    for (std::size_t i = 0; i < ga.size(); ++i)
        if (ga[i] != gb_[i]) return false;
    return true;
}

ModMatrix syzygy_matrix(const ModMatrix& a) {
    GBEngine eng(a.ring(), a.cod(), a.columns(), true);
    return ModMatrix::from_cols(a.ring(), a.dom(), eng.syzygies());
}

ModMatrix lift_through(const ModMatrix& a, const ModMatrix& b) {
    if (!(a.cod() == b.cod()))
        throw InternalError("lift_through: codomain mismatch");
    GBEngine eng(a.ring(), a.cod(), a.columns(), true);
    std::vector<std::vector<Poly>> xcols;
    xcols.reserve(b.cols());
    for (std::size_t s = 0; s < b.cols(); ++s) {
        auto [r, w] = eng.nf_with_witness(b.col(s));
        for (const auto& f : r)
            if (!f.is_zero())
                throw NotInImage("lift_through: column " + std::to_string(s) +
                                 " is not in the image");
        xcols.push_back(std::move(w));
    }
    return ModMatrix::from_cols(a.ring(), a.dom(), b.dom(), xcols);
}

std::vector<Poly> bracket_power(const std::vector<Poly>& gens, unsigned e) {
    std::vector<Poly> out;
    out.reserve(gens.size());
    for (const auto& g : gens) out.push_back(g.frobenius(e));
    return out;
}

std::pair<Ring, std::vector<Poly>> elimination_ideal(Ring ring,
                                                     const std::vector<Poly>& gens,
                                                     std::size_t block) {
    assert(block > 0 && block < ring->nvars());
    Ring elim = make_ring(ring->p, ring->var_names, OrderTag::elim, block);
    std::vector<Poly> moved;
    moved.reserve(gens.size());
    for (const auto& g : gens) moved.push_back(g.with_ring(elim));
    auto gb = ideal_gb(elim, moved);

    std::vector<std::string> kept_names(ring->var_names.begin() + block,
                                        ring->var_names.end());
    Ring target = make_ring(ring->p, std::move(kept_names));
    std::vector<Poly> out;
    for (const auto& f : gb) {
        bool uses_block = false;
        for (const auto& t : f.terms())
            for (std::size_t i = 0; i < block && !uses_block; ++i)
                if (t.m.e[i]) uses_block = true;
        if (uses_block) continue;
        std::vector<Term> terms;
        for (const auto& t : f.terms()) {
            Monomial m{std::vector<int>(t.m.e.begin() + block, t.m.e.end())};
            terms.push_back(Term{std::move(m), t.c});
        }
        out.push_back(Poly::from_terms(target, std::move(terms)));
    }
    return {target, out};
}

int krull_dimension(Ring ring, const std::vector<Poly>& gens) {
    auto gb = ideal_gb(ring, gens);
    for (const auto& f : gb)
        if (f.is_constant() && !f.is_zero()) return -1;
    std::size_t n = ring->nvars();
    if (n > 24) throw Error("krull_dimension: too many variables");
    int best = 0;
    for (u64 mask = 0; mask < (u64(1) << n); ++mask) {
        // S = variables in mask; admissible iff no lead monomial lives in S
        bool ok = true;
        for (const auto& f : gb) {
            bool inside = true;
            for (std::size_t i = 0; i < n && inside; ++i)
                if (f.lm().e[i] && !(mask >> i & 1)) inside = false;
            if (inside) { ok = false; break; }
        }
        if (ok) best = std::max<int>(best, __builtin_popcountll(mask));
    }
    return best;
}

} // namespace lyu
