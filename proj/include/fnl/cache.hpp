#pragma once

#include "fnl/jsonio.hpp"

#include <mutex>
#include <optional>
#include <string>

namespace fnl {

/// One-JSON-document-per-key store; writes go through a temp file and an
/// atomic rename, serialized by a single mutex.
class DiskCache {
  public:
    DiskCache() = default;
    explicit DiskCache(std::string dir);

    bool enabled() const { return !dir_.empty(); }
    const std::string& dir() const { return dir_; }

    std::optional<Json> load(const std::string& key) const;
    void store(const std::string& key, const Json& doc) const;

  private:
    std::string dir_;
    mutable std::mutex mu_;
};

} // namespace fnl
