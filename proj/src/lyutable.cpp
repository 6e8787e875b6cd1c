#include "lyucalc/lyutable.hpp"

#include <atomic>
#include <thread>

namespace lyu {

std::size_t LyubeznikTable::at(std::size_t i, std::size_t j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
}

std::size_t LyubeznikTable::highest() const {
    auto d = static_cast<std::size_t>(dim_a < 0 ? 0 : dim_a);
    return at(d, d);
}

std::map<std::pair<std::size_t, std::size_t>, std::size_t> LyubeznikTable::nonzero() const {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> out;
    for (const auto& [key, v] : entries)
        if (v) out.emplace(key, v);
    return out;
}

bool LyubeznikTable::same_numbers(const LyubeznikTable& rhs) const {
    return dim_a == rhs.dim_a && nonzero() == rhs.nonzero();
}

LyubeznikTable lyubeznik_table(TableEngine& eng, unsigned threads) {
    LyubeznikTable table;
    table.dim_a = eng.dim_a();
    if (eng.dim_a() < 0) return table; // zero ring: nothing to tabulate
    const std::size_t d = static_cast<std::size_t>(eng.dim_a());

    // one unit of work per column j; bigger j tends to be the expensive end,
    // so hand columns out from the top
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j <= d; ++j) cols.push_back(d - j);
    auto run_column = [&](std::size_t j) {
        for (std::size_t i = 0; i <= j; ++i) eng.cell(i, j);
    };

    if (threads <= 1 || cols.size() <= 1) {
        for (std::size_t j : cols) run_column(j);
    } else {
        std::atomic<std::size_t> next{0};
        std::mutex emtx;
        std::exception_ptr eptr;
        auto worker = [&]() {
            try {
                for (;;) {
                    std::size_t k = next.fetch_add(1);
                    if (k >= cols.size()) return;
                    run_column(cols[k]);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(emtx);
                if (!eptr) eptr = std::current_exception();
            }
        };
        std::vector<std::thread> pool;
        unsigned nw = std::min<unsigned>(threads, static_cast<unsigned>(cols.size()));
        pool.reserve(nw);
        for (unsigned w = 0; w < nw; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        if (eptr) std::rethrow_exception(eptr);
    }

    for (std::size_t j = 0; j <= d; ++j)
        for (std::size_t i = 0; i <= j; ++i) {
            const auto& c = eng.cell(i, j);
            table.entries[{i, j}] = c.lambda;
            table.cell_ms[{i, j}] = c.build_ms;
        }
    return table;
}

std::size_t lyubeznik_number(Ring ring, const std::vector<Poly>& gens, std::size_t i,
                             std::size_t j, const EngineOptions& opt) {
    TableEngine eng(std::move(ring), gens, opt);
    return eng.lambda(i, j);
}

} // namespace lyu
