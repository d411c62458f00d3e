#include "curvechi/cache.hpp"

#include <sstream>

namespace curvechi {

std::string CacheKey::fingerprint() const {
    std::ostringstream os;
    os << kCodeVersion << "|" << formula;
    for (const auto& [k, v] : caps) os << "|" << k << "=" << v;
    return os.str();
}

std::string CacheKey::filename() const {
    // hash keeps names short; the full fingerprint inside the file is what
    // load actually validates
    return formula + "-" + std::to_string(std::hash<std::string>{}(fingerprint())) + ".json";
}

nlohmann::json coeff_json(const SymFunc& f) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [m, c] : f.terms()) {
        nlohmann::json mono = nlohmann::json::array();
        for (auto e : m) mono.push_back(static_cast<int>(e));
        arr.push_back(nlohmann::json::array({mono, rat_to_string(c)}));
    }
    return arr;
}

void coeff_parse(const nlohmann::json& j, SymFunc& out, const SymFunc& proto) {
    out = SymFunc::zero(proto.p_cap());
    for (const auto& term : j) {
        PMono m;
        for (const auto& e : term.at(0)) m.push_back(static_cast<uint16_t>(e.get<int>()));
        out.add_term(m, rat_from_string(term.at(1).get<std::string>()));
    }
}

CacheInfo cache_info(const std::filesystem::path& dir) {
    CacheInfo info;
    if (!std::filesystem::exists(dir)) return info;
    for (const auto& e : std::filesystem::directory_iterator(dir)) {
        if (e.path().extension() == ".json") {
            ++info.entries;
            info.bytes += e.file_size();
        }
    }
    return info;
}

int cache_clear(const std::filesystem::path& dir) {
    int removed = 0;
    if (!std::filesystem::exists(dir)) return removed;
    for (const auto& e : std::filesystem::directory_iterator(dir)) {
        if (e.path().extension() == ".json") {
            std::filesystem::remove(e.path());
            ++removed;
        }
    }
    return removed;
}

} // namespace curvechi
