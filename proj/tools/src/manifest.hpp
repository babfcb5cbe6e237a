#pragma once

#include <string>

namespace wavecone::cli {

/// Lowercase hex SHA-256 of `bytes`.
std::string sha256_hex(const std::string& bytes);

/// Versions of the library and its build-time dependencies, as JSON text.
std::string versions_json();

}  // namespace wavecone::cli
