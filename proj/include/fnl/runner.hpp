#pragma once

#include "fnl/jsonio.hpp"

#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace fnl {

/// Runs fn(0..n-1) on up to `jobs` worker threads. Exceptions are rethrown
/// on the caller thread after all workers finish.
void parallel_for(int n, int jobs, const std::function<void(int)>& fn);

/// Append-only JSONL checkpoint: a header line carries a config key, each
/// record is one JSON object under a string key. Records from a file whose
/// header does not match the current config are discarded.
class Checkpoint {
  public:
    Checkpoint() = default;
    /// Opens (and loads) path; empty path disables checkpointing.
    Checkpoint(const std::string& path, const std::string& config_key);

    bool enabled() const { return !path_.empty(); }
    const std::map<std::string, Json>& loaded() const { return loaded_; }
    /// Appends one record and flushes.
    void append(const std::string& key, const Json& value);

  private:
    std::string path_;
    std::string config_key_;
    std::map<std::string, Json> loaded_;
    std::mutex mu_;
};

} // namespace fnl
