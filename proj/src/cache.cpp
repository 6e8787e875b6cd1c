#include "lyucalc/cache.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "lyucalc/parse.hpp"

namespace lyu {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr int kCacheFormat = 1;

ResolutionCache::ResolutionCache(std::string dir) : dir_(std::move(dir)) {
    if (!dir_.empty()) fs::create_directories(dir_);
}

std::string ResolutionCache::key_of(const std::string& material) {
    u64 h = 1469598103934665603ull;
    for (unsigned char c : material) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

std::string resolution_key_material(const Ring& ring, const std::vector<Poly>& reduced_gb,
                                    bool minimize, std::size_t length) {
    std::ostringstream os;
    os << "resolution|format=" << kCacheFormat << "|p=" << ring->p << "|vars=";
    for (std::size_t i = 0; i < ring->nvars(); ++i)
        os << (i ? "," : "") << ring->var_names[i];
    os << "|minimize=" << (minimize ? 1 : 0) << "|length=" << length << "|gb=";
    for (std::size_t i = 0; i < reduced_gb.size(); ++i)
        os << (i ? ";" : "") << reduced_gb[i].to_string();
    return os.str();
}

std::optional<ChainComplex> ResolutionCache::load(const Ring& ring,
                                                  const std::string& material) {
    if (!enabled()) return std::nullopt;
    std::lock_guard<std::mutex> lock(mtx_);
    fs::path file = fs::path(dir_) / (key_of(material) + ".json");
    std::ifstream in(file);
    if (!in) {
        ++misses_;
        return std::nullopt;
    }
    try {
        json j = json::parse(in);
        if (j.at("material").get<std::string>() != material) {
            ++misses_; // hash collision or stale format; recompute
            return std::nullopt;
        }
        ChainComplex c;
        c.ring = ring;
        for (const auto& degs : j.at("mods"))
            c.mods.push_back(free_module(degs.get<std::vector<int>>()));
        std::size_t t = 0;
        for (const auto& dj : j.at("diffs")) {
            std::vector<Poly> entries;
            for (const auto& s : dj) entries.push_back(parse_poly(ring, s.get<std::string>()));
            c.diffs.push_back(ModMatrix(ring, c.mods[t], c.mods[t + 1], std::move(entries)));
            ++t;
        }
        c.validate();
        ++hits_;
        return c;
    } catch (const std::exception&) {
        ++misses_; // unreadable entry; treat as absent
        return std::nullopt;
    }
}

void ResolutionCache::store(const std::string& material, const ChainComplex& c) {
    if (!enabled()) return;
    std::lock_guard<std::mutex> lock(mtx_);
    json j;
    j["material"] = material;
    json mods = json::array();
    for (const auto& m : c.mods) mods.push_back(m.deg);
    j["mods"] = std::move(mods);
    json diffs = json::array();
    for (const auto& d : c.diffs) {
        json entries = json::array();
        for (std::size_t r = 0; r < d.rows(); ++r)
            for (std::size_t s = 0; s < d.cols(); ++s)
                entries.push_back(d.at(r, s).to_string());
        diffs.push_back(std::move(entries));
    }
    j["diffs"] = std::move(diffs);

    fs::path file = fs::path(dir_) / (key_of(material) + ".json");
    fs::path tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        out << j.dump();
    }
    std::error_code ec;
    fs::rename(tmp, file, ec); // atomic publish; failures just skip caching
}

std::size_t ResolutionCache::hits() const {
    std::lock_guard<std::mutex> lock(mtx_);
    return hits_;
}

std::size_t ResolutionCache::misses() const {
    std::lock_guard<std::mutex> lock(mtx_);
    return misses_;
}

} // namespace lyu
