#ifndef ICOL_CERTIFICATES_HPP
#define ICOL_CERTIFICATES_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "icol/coloring.hpp"

namespace icol {

// Raised when a cache file exists but fails its integrity or validity checks.
class CacheError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string sha256_hex(std::string_view data);

// Directory holding the complete-graph coloring certificates, one file per q
// (q1.icol, q2.icol, ...). The ICOL_K2Q_DIR environment variable overrides
// the compiled-in default.
std::filesystem::path k2q_cache_dir();

// Reads <dir>/q<q>.icol. The file is a coloring in the standard text format
// preceded by a "# sha256 <hex>" line covering the canonical serialization of
// the coloring that follows. Missing file -> nullopt; a present but corrupt
// or mislabeled file throws CacheError.
std::optional<EdgeColoring> load_k2q_certificate(int q);
std::optional<EdgeColoring> load_k2q_certificate(int q, const std::filesystem::path& dir);

// Writes the certificate with its integrity line.
void write_k2q_certificate(int q, const EdgeColoring& c, const std::filesystem::path& dir);

} // namespace icol

#endif
