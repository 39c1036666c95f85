#include "weightgeom/cache.hpp"

#include <fstream>
#include <mutex>
#include <sstream>

#include <boost/crc.hpp>
#include <json.hpp>

namespace wg {

namespace {

std::mutex g_mu;
std::optional<std::filesystem::path> g_dir;

std::string payload_checksum(const nlohmann::json& payload) {
    const std::string text = payload.dump();
    boost::crc_32_type crc;
    crc.process_bytes(text.data(), text.size());
    std::ostringstream os;
    os << std::hex << crc.checksum();
    return os.str();
}

}  // namespace

void set_cache_dir(std::optional<std::filesystem::path> dir) {
    std::lock_guard<std::mutex> lock(g_mu);
    g_dir = std::move(dir);
}

std::optional<std::filesystem::path> cache_dir() {
    std::lock_guard<std::mutex> lock(g_mu);
    return g_dir;
}

std::filesystem::path cache_file(const std::filesystem::path& dir, const RootSystemSpec& spec, const Weight& hw) {
    std::string name = spec.name();
    for (int i = 0; i < hw.rank(); ++i) name += (i ? "_" : "-") + std::to_string(hw[i]);
    return dir / (name + ".json");
}

std::optional<std::map<Weight, BigInt>> cache_load(const RootSystemSpec& spec, const Weight& hw) {
    auto dir = cache_dir();
    if (!dir) return std::nullopt;
    std::ifstream in(cache_file(*dir, spec, hw));
    if (!in) return std::nullopt;
    try {
        nlohmann::json doc = nlohmann::json::parse(in);
        if (doc.at("format_version").get<int>() != kCacheFormatVersion) return std::nullopt;
        if (doc.at("family").get<std::string>() != std::string(1, family_letter(spec.family))) return std::nullopt;
        if (doc.at("rank").get<int>() != spec.rank) return std::nullopt;
        if (doc.at("highest_weight").get<std::vector<int>>() != hw.to_vector()) return std::nullopt;
        const nlohmann::json& table = doc.at("dominant");
        if (doc.at("checksum").get<std::string>() != payload_checksum(table)) return std::nullopt;
        std::map<Weight, BigInt> out;
        for (const auto& row : table) {
            auto coords = row.at(0).get<std::vector<int>>();
            if (static_cast<int>(coords.size()) != spec.rank) return std::nullopt;
            out.emplace(Weight(std::span<const int>(coords)), BigInt(row.at(1).get<std::string>()));
        }
        if (out.empty() || out.begin()->first.rank() != spec.rank || !out.count(hw)) return std::nullopt;
        return out;
    } catch (const std::exception&) {
        return std::nullopt;  // corrupt or foreign file: recompute
    }
}

void cache_store(const RootSystemSpec& spec, const Weight& hw, const std::map<Weight, BigInt>& table) {
    auto dir = cache_dir();
    if (!dir) return;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [w, m] : table) rows.push_back({w.to_vector(), m.str()});
    nlohmann::json doc{{"format_version", kCacheFormatVersion},
                       {"family", std::string(1, family_letter(spec.family))},
                       {"rank", spec.rank},
                       {"highest_weight", hw.to_vector()},
                       {"dominant", rows},
                       {"checksum", payload_checksum(rows)}};
    std::error_code ec;
    std::filesystem::create_directories(*dir, ec);
    // Write then rename so a concurrent reader never sees half a file.
    const auto target = cache_file(*dir, spec, hw);
    auto tmp = target;
    tmp += ".tmp" + std::to_string(std::hash<std::string>{}(doc.dump()) % 100000);
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << doc.dump(1) << '\n';
    }
    std::filesystem::rename(tmp, target, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace wg
