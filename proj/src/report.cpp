#include "lyucalc/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace lyu {

TableReport make_report(const TableEngine& eng, const LyubeznikTable& table,
                        std::string label) {
    TableReport r;
    r.label = std::move(label);
    r.p = eng.ring()->p;
    r.vars = eng.ring()->var_names;
    for (const auto& g : eng.generators()) r.generators.push_back(g.to_string());
    r.dim_a = table.dim_a;
    r.seed = eng.options().seed;
    r.minimized = eng.options().minimize;
    r.cache_hits = eng.cache_hits();
    r.cache_misses = eng.cache_misses();
    for (const auto& [key, lam] : table.entries) {
        TableReport::Entry e;
        e.i = key.first;
        e.j = key.second;
        e.lambda = lam;
        auto it = table.cell_ms.find(key);
        e.ms = it == table.cell_ms.end() ? 0 : it->second;
        r.entries.push_back(e);
    }
    std::sort(r.entries.begin(), r.entries.end(),
              [](const TableReport::Entry& a, const TableReport::Entry& b) {
                  return std::make_pair(a.j, a.i) < std::make_pair(b.j, b.i);
              });
    return r;
}

std::string to_text(const TableReport& r) {
    std::ostringstream out;
    out << "lambda table";
    if (!r.label.empty()) out << " for " << r.label;
    out << "  (p = " << r.p << ", dim A = " << r.dim_a << ")\n";
    if (r.dim_a < 0) {
        out << "  (zero ring)\n";
        return out.str();
    }
    const std::size_t d = static_cast<std::size_t>(r.dim_a);

    std::map<std::pair<std::size_t, std::size_t>, std::size_t> cell;
    for (const auto& e : r.entries) cell[{e.i, e.j}] = e.lambda;

    std::size_t width = 3;
    for (const auto& e : r.entries)
        width = std::max(width, std::to_string(e.lambda).size() + 1);
    out << std::setw(6) << "";
    for (std::size_t j = 0; j <= d; ++j)
        out << std::setw(static_cast<int>(width + 3)) << ("j=" + std::to_string(j));
    out << '\n';
    for (std::size_t i = 0; i <= d; ++i) {
        out << std::setw(6) << ("i=" + std::to_string(i));
        for (std::size_t j = 0; j <= d; ++j) {
            auto it = cell.find({i, j});
            std::string s = it == cell.end() ? "." : std::to_string(it->second);
            out << std::setw(static_cast<int>(width + 3)) << s;
        }
        out << '\n';
    }

    bool any = false;
    for (const auto& e : r.entries)
        if (e.lambda) {
            out << (any ? ", " : "nonzero: ");
            out << "lambda(" << e.i << "," << e.j << ") = " << e.lambda;
            any = true;
        }
    if (!any) out << "all entries vanish";
    out << '\n';
    return out.str();
}

std::string to_csv(const TableReport& r) {
    std::ostringstream out;
    out << "i,j,lambda\n";
    for (const auto& e : r.entries) out << e.i << ',' << e.j << ',' << e.lambda << '\n';
    return out.str();
}

std::string to_json(const TableReport& r) {
    nlohmann::ordered_json j;
    j["format"] = 1;
    j["version"] = kVersion;
    j["label"] = r.label;
    j["p"] = r.p;
    j["vars"] = r.vars;
    j["generators"] = r.generators;
    j["dim"] = r.dim_a;
    j["seed"] = r.seed;
    j["minimized"] = r.minimized;
    j["cache"] = {{"hits", r.cache_hits}, {"misses", r.cache_misses}};
    // nonzero cells as [i, j, lambda], sorted by (j, i)
    auto entries = nlohmann::ordered_json::array();
    for (const auto& e : r.entries)
        if (e.lambda) entries.push_back({e.i, e.j, e.lambda});
    j["entries"] = std::move(entries);
    // timing lives apart from the mathematical payload: [i, j, ms]
    auto times = nlohmann::ordered_json::array();
    for (const auto& e : r.entries) times.push_back({e.i, e.j, e.ms});
    j["cell_ms"] = std::move(times);
    // the square table as rows, zeros where nothing was computed
    if (r.dim_a >= 0) {
        auto rows = nlohmann::ordered_json::array();
        const std::size_t d = static_cast<std::size_t>(r.dim_a);
        std::map<std::pair<std::size_t, std::size_t>, std::size_t> cell;
        for (const auto& e : r.entries) cell[{e.i, e.j}] = e.lambda;
        for (std::size_t i = 0; i <= d; ++i) {
            auto row = nlohmann::ordered_json::array();
            for (std::size_t jj = 0; jj <= d; ++jj) {
                auto it = cell.find({i, jj});
                row.push_back(it == cell.end() ? 0 : it->second);
            }
            rows.push_back(std::move(row));
        }
        j["table"] = std::move(rows);
    }
    return j.dump(2) + "\n";
}

} // namespace lyu
