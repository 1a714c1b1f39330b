#include "su3sb/catalog.hpp"

#include <array>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>

#include <openssl/evp.h>

#include "su3sb/serialize.hpp"

namespace su3sb {

std::string sha256_hex(const std::string& data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  std::ostringstream os;
  os << std::hex << std::setfill('0');
  for (unsigned int k = 0; k < length; ++k) {
    os << std::setw(2) << static_cast<int>(digest[k]);
  }
  return os.str();
}

namespace {

std::string utc_timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

}  // namespace

Catalog::Catalog(std::filesystem::path dir) : dir_(std::move(dir)) { std::filesystem::create_directories(dir_); }

std::string Catalog::key_for(const std::string& canonical_request) {
  return sha256_hex("su3sb/v" + std::to_string(kFormatVersion) + "\n" + canonical_request);
}

std::filesystem::path Catalog::path_for(const std::string& key) const { return dir_ / (key + ".json"); }

std::optional<CatalogEntry> Catalog::lookup(const std::string& key) const {
  std::ifstream in(path_for(key), std::ios::binary);
  if (!in) {
    return std::nullopt;
  }
  try {
    Json j = Json::parse(in);
    if (j.at("format_version").get<int>() != kFormatVersion || j.at("key").get<std::string>() != key) {
      return std::nullopt;
    }
    return CatalogEntry{key, j.at("body").get<std::string>(), j.at("created").get<std::string>()};
  } catch (const Json::exception&) {
    // A truncated or foreign file is treated as a miss and overwritten later.
    return std::nullopt;
  }
}

CatalogEntry Catalog::store(const std::string& key, const std::string& body) const {
  CatalogEntry entry{key, body, utc_timestamp()};
  Json j;
  j["key"] = entry.key;
  j["format_version"] = kFormatVersion;
  j["created"] = entry.created;
  j["body"] = entry.body;

  std::random_device rd;
  auto tmp = dir_ / (key + ".tmp" + std::to_string(rd()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot write cache file " + tmp.string());
    }
    out << j.dump();
  }
  std::filesystem::rename(tmp, path_for(key));
  return entry;
}

}  // namespace su3sb
