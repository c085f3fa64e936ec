#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace mols {

// FIPS 180-4 SHA-256, lowercase hex digest.
std::string sha256_hex(const void* data, std::size_t len);
std::string sha256_hex(std::string_view bytes);

// Digest of a file's raw bytes (Errc::IoFailure when unreadable).
std::string sha256_file_hex(const std::string& path);

} // namespace mols
