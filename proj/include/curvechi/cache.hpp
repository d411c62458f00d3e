#pragma once

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>

#include "curvechi/genfun.hpp"

namespace curvechi {

inline constexpr int kCacheSchema = 1;
inline constexpr const char* kCodeVersion = "curvechi-1";

struct CacheKey {
    std::string formula;              // e.g. "w11-scalar"
    std::map<std::string, int> caps;  // u_cap, n_max, w_cap, ...

    std::string fingerprint() const;
    std::string filename() const; // fingerprint-derived name
};

// --- coefficient (de)serialization -----------------------------------------

inline nlohmann::json coeff_json(const Rat& q) { return rat_to_string(q); }

nlohmann::json coeff_json(const SymFunc& f);

template <class R>
nlohmann::json coeff_json(const CPoly<R>& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : p.c) arr.push_back(coeff_json(c));
    return arr;
}

inline void coeff_parse(const nlohmann::json& j, Rat& out, const Rat&) {
    out = rat_from_string(j.get<std::string>());
}

void coeff_parse(const nlohmann::json& j, SymFunc& out, const SymFunc& proto);

template <class R>
void coeff_parse(const nlohmann::json& j, CPoly<R>& out, const CPoly<R>& proto) {
    if (!j.is_array() || static_cast<int>(j.size()) != proto.cap + 1)
        throw std::invalid_argument("cache entry shape mismatch");
    out = ring_zero_like(proto);
    for (int i = 0; i <= proto.cap; ++i) coeff_parse(j[i], out.c[i], proto.c[0]);
}

// --- cache operations -------------------------------------------------------

template <class C>
void cache_store(const std::filesystem::path& dir, const CacheKey& key,
                 const USeries<C>& series) {
    std::filesystem::create_directories(dir);
    nlohmann::json j;
    j["schema"] = kCacheSchema;
    j["fingerprint"] = key.fingerprint();
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : series.c) arr.push_back(coeff_json(c));
    j["series"] = arr;
    std::ofstream out(dir / key.filename());
    out << j.dump();
}

/// Returns the cached series on an exact fingerprint match; corrupt or
/// mismatched entries are ignored.
template <class C>
std::optional<USeries<C>> cache_load(const std::filesystem::path& dir, const CacheKey& key,
                                     int u_cap, const C& proto) {
    std::filesystem::path file = dir / key.filename();
    if (!std::filesystem::exists(file)) return std::nullopt;
    try {
        std::ifstream in(file);
        nlohmann::json j = nlohmann::json::parse(in);
        if (j.at("schema").get<int>() != kCacheSchema) return std::nullopt;
        if (j.at("fingerprint").get<std::string>() != key.fingerprint()) return std::nullopt;
        const auto& arr = j.at("series");
        if (!arr.is_array() || static_cast<int>(arr.size()) != u_cap + 1) return std::nullopt;
        USeries<C> s(u_cap, proto);
        for (int i = 0; i <= u_cap; ++i) coeff_parse(arr[i], s.c[i], proto);
        return s;
    } catch (...) {
        return std::nullopt; // treat as a cache miss and recompute
    }
}

struct CacheInfo {
    int entries = 0;
    std::uintmax_t bytes = 0;
};

CacheInfo cache_info(const std::filesystem::path& dir);
int cache_clear(const std::filesystem::path& dir); // removed entry count

} // namespace curvechi
