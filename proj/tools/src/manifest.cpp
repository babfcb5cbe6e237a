#include "manifest.hpp"

#include <openssl/evp.h>
#include <openssl/opensslv.h>

#include <boost/version.hpp>
#include <iomanip>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "wavecone/version.hpp"

namespace wavecone::cli {

std::string sha256_hex(const std::string& bytes) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) {
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return os.str();
}

std::string versions_json() {
  nlohmann::ordered_json v;
  v["wavecone"] = WAVECONE_VERSION;
  v["compiler"] = __VERSION__;
  v["boost"] = BOOST_LIB_VERSION;
  v["openssl"] = OPENSSL_VERSION_TEXT;
  v["nlohmann_json"] = std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                       std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                       std::to_string(NLOHMANN_JSON_VERSION_PATCH);
  v["cli11"] = CLI11_VERSION;
  return v.dump();
}

}  // namespace wavecone::cli
