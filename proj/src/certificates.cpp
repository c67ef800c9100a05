#include "icol/certificates.hpp"

#include <cstdlib>
#include <fstream>

#include <openssl/evp.h>

#include "icol/io.hpp"

#ifndef ICOL_DATA_DIR
#define ICOL_DATA_DIR "data"
#endif

namespace icol {

std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr))
        throw std::runtime_error("sha256 digest failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xf]);
    }
    return out;
}

std::filesystem::path k2q_cache_dir() {
    if (const char* env = std::getenv("ICOL_K2Q_DIR"))
        return std::filesystem::path(env);
    return std::filesystem::path(ICOL_DATA_DIR) / "k2q";
}

namespace {

std::filesystem::path cert_path(int q, const std::filesystem::path& dir) {
    return dir / ("q" + std::to_string(q) + ".icol");
}

} // namespace

std::optional<EdgeColoring> load_k2q_certificate(int q) {
    return load_k2q_certificate(q, k2q_cache_dir());
}

std::optional<EdgeColoring> load_k2q_certificate(int q, const std::filesystem::path& dir) {
    const std::filesystem::path path = cert_path(q, dir);
    std::error_code ec;
    if (!std::filesystem::exists(path, ec))
        return std::nullopt;
    const std::string text = read_file(path);

    // locate the integrity line
    std::string expected;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t nl = text.find('\n', pos);
        if (nl == std::string::npos)
            break;
        std::string line = text.substr(pos, nl - pos);
        pos = nl + 1;
        if (line.rfind("# sha256 ", 0) == 0) {
            expected = line.substr(9);
            break;
        }
        if (!line.empty() && line[0] != '#')
            break;
    }
    if (expected.empty())
        throw CacheError(path.string() + ": missing '# sha256 <hex>' integrity line");

    EdgeColoring c;
    try {
        c = parse_coloring(text);
    } catch (const ParseError& ex) {
        throw CacheError(path.string() + ": " + ex.what());
    }
    const std::string actual = sha256_hex(write_coloring(c));
    if (actual != expected)
        throw CacheError(path.string() + ": integrity mismatch (expected " + expected +
                         ", file hashes to " + actual + ")");
    return c;
}

void write_k2q_certificate(int q, const EdgeColoring& c, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    const std::string body = write_coloring(c);
    write_file(cert_path(q, dir), "# sha256 " + sha256_hex(body) + "\n" + body);
}

} // namespace icol
