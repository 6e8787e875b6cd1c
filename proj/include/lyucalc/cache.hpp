// On-disk cache for free resolutions. Keys are derived from the ring, the
// reduced Gröbner basis of the ideal, the minimize flag, and the requested
// length, plus a format version — so a cache directory can be deleted or
// shared freely and never goes stale silently. Entries are JSON files named
// by a 64-bit FNV-1a hash of the key material; the material itself is stored
// in the entry and re-checked on load to guard against collisions.

#ifndef LYUCALC_CACHE_HPP
#define LYUCALC_CACHE_HPP

#include <mutex>
#include <optional>
#include <string>

#include "lyucalc/complex.hpp"

namespace lyu {

class ResolutionCache {
public:
    ResolutionCache() = default;               // disabled
    explicit ResolutionCache(std::string dir); // enabled when dir is nonempty

    bool enabled() const { return !dir_.empty(); }
    std::optional<ChainComplex> load(const Ring& ring, const std::string& material);
    void store(const std::string& material, const ChainComplex& c);

    std::size_t hits() const;
    std::size_t misses() const;

    static std::string key_of(const std::string& material); // FNV-1a 64, hex

private:
    std::string dir_;
    mutable std::mutex mtx_;
    std::size_t hits_ = 0, misses_ = 0;
};

// canonical key material for the resolution of R/(gb)
std::string resolution_key_material(const Ring& ring, const std::vector<Poly>& reduced_gb,
                                    bool minimize, std::size_t length);

} // namespace lyu

#endif
