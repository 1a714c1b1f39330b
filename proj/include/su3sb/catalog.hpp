#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace su3sb {

/// SHA-256 of `data`, lowercase hex.
std::string sha256_hex(const std::string& data);

struct CatalogEntry {
  std::string key;
  std::string body;
  /// UTC, ISO-8601.
  std::string created;
};

/// Content-addressed on-disk cache of rendered command output. One JSON file per key.
class Catalog {
public:
  explicit Catalog(std::filesystem::path dir);

  /// Key = SHA-256 over the canonical request text and the format version.
  static std::string key_for(const std::string& canonical_request);

  std::optional<CatalogEntry> lookup(const std::string& key) const;

  /// Written to a temporary file and renamed into place.
  CatalogEntry store(const std::string& key, const std::string& body) const;

  const std::filesystem::path& directory() const { return dir_; }

private:
  std::filesystem::path path_for(const std::string& key) const;

  std::filesystem::path dir_;
};

}  // namespace su3sb
