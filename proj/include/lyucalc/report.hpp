// Rendering a computed table as text, CSV, or JSON. The JSON layout is
// versioned ("format": 1) and deterministic except for the timing fields.

#ifndef LYUCALC_REPORT_HPP
#define LYUCALC_REPORT_HPP

#include "lyucalc/lyutable.hpp"

namespace lyu {

inline constexpr const char* kVersion = "1.0.0";

struct TableReport {
    std::string label;
    u64 p = 2;
    std::vector<std::string> vars;
    std::vector<std::string> generators; // echo of the input generators
    int dim_a = 0;
    u64 seed = 0;
    bool minimized = true;
    std::size_t cache_hits = 0, cache_misses = 0;

    struct Entry {
        std::size_t i = 0, j = 0, lambda = 0;
        double ms = 0;
    };
    std::vector<Entry> entries; // every computed cell, sorted by (j, i)
};

TableReport make_report(const TableEngine& eng, const LyubeznikTable& table,
                        std::string label);

std::string to_text(const TableReport& r);
std::string to_csv(const TableReport& r);
std::string to_json(const TableReport& r); // pretty-printed, trailing newline

} // namespace lyu

#endif
