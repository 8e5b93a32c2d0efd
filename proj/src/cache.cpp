#include "qcw/cache.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

namespace qcw {

namespace fs = std::filesystem;

namespace {

constexpr int kPayloadVersion = 1;

std::string fnv1a_hex(const std::string& data) {
    uint64_t h = 14695981039346656037ULL;
    for (const unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

}  // namespace

SeriesCache::SeriesCache(fs::path dir) : dir_(std::move(dir)) {
    fs::create_directories(dir_);
}

fs::path SeriesCache::default_dir() {
    if (const char* env = std::getenv("QC_CACHE_DIR")) return fs::path(env);
    if (const char* home = std::getenv("HOME"))
        return fs::path(home) / ".cache" / "qcw";
    return fs::temp_directory_path() / "qcw-cache";
}

std::string SeriesCache::key(const std::string& expr_text,
                             const std::optional<Int>& modulus, int order) {
    std::ostringstream material;
    material << expr_text << "\n"
             << (modulus ? modulus->str() : std::string("-")) << "\n"
             << order;
    return fnv1a_hex(material.str());
}

std::optional<Series> SeriesCache::get(const std::string& expr_text,
                                       const std::optional<Int>& modulus,
                                       int order) const {
    const fs::path path = dir_ / (key(expr_text, modulus, order) + ".json");
    std::error_code ec;
    if (!fs::exists(path, ec)) return std::nullopt;

    const auto quarantine = [&] {
        const fs::path q = path.string() + ".quarantine";
        std::error_code rec;
        fs::rename(path, q, rec);
        std::cerr << "qcw: warning: quarantined corrupt cache entry " << path
                  << "\n";
    };

    try {
        std::ifstream in(path);
        nlohmann::json j = nlohmann::json::parse(in);
        if (j.at("version").get<int>() != kPayloadVersion ||
            j.at("expr").get<std::string>() != expr_text ||
            j.at("order").get<int>() < order) {
            return std::nullopt;
        }
        const auto stored_mod = j.at("modulus");
        if (modulus ? (stored_mod.is_null() ||
                       stored_mod.get<std::string>() != modulus->str())
                    : !stored_mod.is_null()) {
            return std::nullopt;
        }
        std::vector<Int> coeffs;
        for (const auto& c : j.at("coeffs")) coeffs.emplace_back(c.get<std::string>());
        if (static_cast<int>(coeffs.size()) != j.at("order").get<int>())
            throw std::runtime_error("coefficient count mismatch");
        return Series(std::move(coeffs), modulus);
    } catch (const std::exception&) {
        quarantine();
        return std::nullopt;
    }
}

void SeriesCache::put(const std::string& expr_text,
                      const std::optional<Int>& modulus,
                      const Series& series) const {
    nlohmann::json j;
    j["version"] = kPayloadVersion;
    j["expr"] = expr_text;
    j["modulus"] = modulus ? nlohmann::json(modulus->str()) : nlohmann::json();
    j["order"] = series.order();
    auto& coeffs = j["coeffs"] = nlohmann::json::array();
    for (const auto& c : series.coeffs()) coeffs.push_back(c.str());
    j["created_at"] = std::chrono::duration_cast<std::chrono::seconds>(
                          std::chrono::system_clock::now().time_since_epoch())
                          .count();

    const fs::path path =
        dir_ / (key(expr_text, modulus, series.order()) + ".json");
    const fs::path tmp =
        path.string() + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cache: cannot write " + tmp.string());
        out << j.dump();
    }
    fs::rename(tmp, path);
}

SeriesCache::Stats SeriesCache::stats() const {
    Stats s;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(dir_, ec)) {
        if (!entry.is_regular_file()) continue;
        const auto name = entry.path().filename().string();
        if (name.ends_with(".quarantine")) {
            ++s.quarantined;
        } else if (name.ends_with(".json")) {
            ++s.entries;
            s.bytes += entry.file_size();
        }
    }
    return s;
}

void SeriesCache::clear() const {
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(dir_, ec)) {
        if (!entry.is_regular_file()) continue;
        const auto name = entry.path().filename().string();
        if (name.ends_with(".json") || name.ends_with(".quarantine"))
            fs::remove(entry.path());
    }
}

}  // namespace qcw
