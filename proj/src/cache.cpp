#include "fnl/cache.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace fnl {

namespace fs = std::filesystem;

DiskCache::DiskCache(std::string dir) : dir_(std::move(dir)) {
    if (!dir_.empty())
        fs::create_directories(dir_);
}

std::optional<Json> DiskCache::load(const std::string& key) const {
    if (!enabled())
        return std::nullopt;
    fs::path p = fs::path(dir_) / (key + ".json");
    std::ifstream in(p);
    if (!in)
        return std::nullopt;
    Json j;
    try {
        in >> j;
    } catch (const std::exception&) {
        return std::nullopt; // treat a truncated/corrupt entry as a miss
    }
    return j;
}

void DiskCache::store(const std::string& key, const Json& doc) const {
    if (!enabled())
        return;
    std::lock_guard<std::mutex> lock(mu_);
    fs::path p = fs::path(dir_) / (key + ".json");
    fs::path tmp = fs::path(dir_) / (key + ".json.tmp");
    {
        std::ofstream out(tmp);
        out << doc;
    }
    fs::rename(tmp, p);
}

} // namespace fnl
