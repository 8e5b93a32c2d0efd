#ifndef QCW_CACHE_HPP
#define QCW_CACHE_HPP

#include <filesystem>
#include <optional>
#include <string>

#include "qcw/series.hpp"

namespace qcw {

/// Content-addressed on-disk cache of expanded series. One JSON file per
/// entry, named by the key hash; coefficients are stored as decimal strings.
/// Writes are atomic (temp file + rename); corrupt entries are quarantined
/// and treated as misses.
class SeriesCache {
public:
    explicit SeriesCache(std::filesystem::path dir);

    static std::filesystem::path default_dir();

    /// Hash of (canonical expression text, modulus, order).
    static std::string key(const std::string& expr_text,
                           const std::optional<Int>& modulus, int order);

    std::optional<Series> get(const std::string& expr_text,
                              const std::optional<Int>& modulus, int order) const;

    void put(const std::string& expr_text, const std::optional<Int>& modulus,
             const Series& series) const;

    struct Stats {
        size_t entries = 0;
        size_t quarantined = 0;
        uintmax_t bytes = 0;
    };
    Stats stats() const;
    void clear() const;

    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path dir_;
};

}  // namespace qcw

#endif
