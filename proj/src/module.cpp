#include "lyucalc/module.hpp"

#include <string>

namespace lyu {

int column_degree(const FreeModule& f, const std::vector<Poly>& col, int fallback) {
    assert(col.size() == f.rank());
    int deg = fallback;
    bool seen = false;
    for (std::size_t r = 0; r < col.size(); ++r) {
        if (col[r].is_zero()) continue;
        auto hd = col[r].homogeneous_degree();
        if (!hd)
            throw InhomogeneousError("column entry is not homogeneous: " + col[r].to_string());
        int d = *hd + f.deg[r];
        if (seen && d != deg)
            throw InhomogeneousError("column mixes degrees " + std::to_string(deg) + " and " +
                                     std::to_string(d));
        deg = d;
        seen = true;
    }
    return deg;
}

ModMatrix::ModMatrix(Ring ring, FreeModule cod, FreeModule dom, std::vector<Poly> entries)
    : ring_(std::move(ring)), dom_(std::move(dom)), cod_(std::move(cod)), a_(std::move(entries)) {
    if (a_.size() != rows() * cols())
        throw InternalError("matrix entry count does not match shape");
    check_homogeneous();
}

void ModMatrix::check_homogeneous() const {
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t s = 0; s < cols(); ++s) {
            const Poly& f = at(r, s);
            if (f.is_zero()) continue;
            int want = dom_.deg[s] - cod_.deg[r];
            auto hd = f.homogeneous_degree();
            if (!hd || *hd != want)
                throw InhomogeneousError(
                    "matrix entry (" + std::to_string(r) + "," + std::to_string(s) +
                    ") = " + f.to_string() + " is not homogeneous of degree " +
                    std::to_string(want));
        }
}

ModMatrix ModMatrix::zero(Ring ring, FreeModule cod, FreeModule dom) {
    std::vector<Poly> e(cod.rank() * dom.rank(), Poly::zero(ring));
    return ModMatrix(std::move(ring), std::move(cod), std::move(dom), std::move(e));
}

ModMatrix ModMatrix::identity(Ring ring, FreeModule f) {
    std::size_t n = f.rank();
    std::vector<Poly> e(n * n, Poly::zero(ring));
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = Poly::constant(ring, 1);
    return ModMatrix(std::move(ring), f, f, std::move(e));
}

ModMatrix ModMatrix::from_cols(Ring ring, FreeModule cod,
                               const std::vector<std::vector<Poly>>& cols) {
    std::vector<int> degs;
    degs.reserve(cols.size());
    for (const auto& c : cols) degs.push_back(column_degree(cod, c));
    return from_cols(std::move(ring), std::move(cod), free_module(std::move(degs)), cols);
}

ModMatrix ModMatrix::from_cols(Ring ring, FreeModule cod, FreeModule dom,
                               const std::vector<std::vector<Poly>>& cols) {
    assert(cols.size() == dom.rank());
    std::vector<Poly> e(cod.rank() * dom.rank(), Poly::zero(ring));
    for (std::size_t s = 0; s < cols.size(); ++s) {
        assert(cols[s].size() == cod.rank());
        for (std::size_t r = 0; r < cod.rank(); ++r) e[r * dom.rank() + s] = cols[s][r];
    }
    return ModMatrix(std::move(ring), std::move(cod), std::move(dom), std::move(e));
}

std::vector<Poly> ModMatrix::col(std::size_t s) const {
    std::vector<Poly> out;
    out.reserve(rows());
    for (std::size_t r = 0; r < rows(); ++r) out.push_back(at(r, s));
    return out;
}

std::vector<std::vector<Poly>> ModMatrix::columns() const {
    std::vector<std::vector<Poly>> out;
    out.reserve(cols());
    for (std::size_t s = 0; s < cols(); ++s) out.push_back(col(s));
    return out;
}

ModMatrix ModMatrix::compose(const ModMatrix& rhs) const {
    assert(dom_ == rhs.cod_);
    std::vector<Poly> e(rows() * rhs.cols(), Poly::zero(ring_));
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t k = 0; k < cols(); ++k) {
            const Poly& f = at(r, k);
            if (f.is_zero()) continue;
            for (std::size_t s = 0; s < rhs.cols(); ++s) {
                const Poly& g = rhs.at(k, s);
                if (g.is_zero()) continue;
                e[r * rhs.cols() + s] = e[r * rhs.cols() + s] + f * g;
            }
        }
    return ModMatrix(ring_, cod_, rhs.dom_, std::move(e));
}

std::vector<Poly> ModMatrix::apply(const std::vector<Poly>& v) const {
    assert(v.size() == cols());
    std::vector<Poly> out(rows(), Poly::zero(ring_));
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t s = 0; s < cols(); ++s)
            if (!at(r, s).is_zero() && !v[s].is_zero())
                out[r] = out[r] + at(r, s) * v[s];
    return out;
}

ModMatrix ModMatrix::operator-(const ModMatrix& rhs) const {
    assert(dom_ == rhs.dom_ && cod_ == rhs.cod_);
    std::vector<Poly> e;
    e.reserve(a_.size());
    for (std::size_t k = 0; k < a_.size(); ++k) e.push_back(a_[k] - rhs.a_[k]);
    return ModMatrix(ring_, cod_, dom_, std::move(e));
}

ModMatrix ModMatrix::dual_into(int w) const {
    // Hom(⊕R(-d_i), R(-w)) = ⊕R(-(w - d_i)); the map dualizes to the transpose
    std::vector<int> ddom, dcod;
    for (int d : cod_.deg) ddom.push_back(w - d);
    for (int d : dom_.deg) dcod.push_back(w - d);
    std::vector<Poly> e(cols() * rows(), Poly::zero(ring_));
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t s = 0; s < cols(); ++s)
            e[s * rows() + r] = at(r, s);
    return ModMatrix(ring_, free_module(std::move(dcod)), free_module(std::move(ddom)),
                     std::move(e));
}

ModMatrix ModMatrix::twist_both(int t) const {
    return ModMatrix(ring_, twist(cod_, t), twist(dom_, t), a_);
}

bool ModMatrix::is_zero() const {
    for (const auto& f : a_)
        if (!f.is_zero()) return false;
    return true;
}

bool ModMatrix::operator==(const ModMatrix& rhs) const {
    if (!(dom_ == rhs.dom_) || !(cod_ == rhs.cod_)) return false;
    for (std::size_t k = 0; k < a_.size(); ++k)
        if (!(a_[k] == rhs.a_[k])) return false;
    return true;
}

std::vector<Poly> mat_apply(const ModMatrix& m, const std::vector<Poly>& v) {
    return m.apply(v);
}

} // namespace lyu
