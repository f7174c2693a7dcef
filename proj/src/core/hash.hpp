#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace iscat {

// SHA-256 hex digest; used for manifest content hashes.
std::string sha256_hex(const void* data, std::size_t len);
std::string sha256_file_hex(const std::string& path);

}  // namespace iscat
