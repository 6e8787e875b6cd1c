// The full table of numbers λ_{i,j} for 0 <= i <= j <= dim(R/I), computed
// cell by cell through a shared TableEngine. Cells with i > j vanish and are
// not computed.

#ifndef LYUCALC_LYUTABLE_HPP
#define LYUCALC_LYUTABLE_HPP

#include "lyucalc/engine.hpp"

namespace lyu {

struct LyubeznikTable {
    int dim_a = 0; // Krull dimension of R/I; table indices run over 0..dim_a
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> entries;
    std::map<std::pair<std::size_t, std::size_t>, double> cell_ms;

    std::size_t at(std::size_t i, std::size_t j) const;
    // the corner entry λ_{d,d}, which is always >= 1 for nonzero rings
    std::size_t highest() const;
    // nonzero entries only, for comparisons that must not depend on the
    // ambient embedding (tables of re-embeddings agree cell by cell)
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> nonzero() const;
    bool same_numbers(const LyubeznikTable& rhs) const;
};

// computes every cell 0 <= i <= j <= dim_a; `threads` > 1 distributes whole
// columns (fixed j) across a worker pool sharing the engine's caches
LyubeznikTable lyubeznik_table(TableEngine& eng, unsigned threads = 1);

// one-shot convenience for a single number
std::size_t lyubeznik_number(Ring ring, const std::vector<Poly>& gens, std::size_t i,
                             std::size_t j, const EngineOptions& opt = {});

} // namespace lyu

#endif
