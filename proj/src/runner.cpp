#include "fnl/runner.hpp"

#include <exception>
#include <fstream>

namespace fnl {

void parallel_for(int n, int jobs, const std::function<void(int)>& fn) {
    if (jobs <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::mutex err_mu;
    std::exception_ptr err;
    auto worker = [&]() {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= n)
                return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!err)
                    err = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    int count = std::min(jobs, n);
    pool.reserve(count);
    for (int t = 0; t < count; ++t)
        pool.emplace_back(worker);
    for (std::thread& t : pool)
        t.join();
    if (err)
        std::rethrow_exception(err);
}

Checkpoint::Checkpoint(const std::string& path, const std::string& config_key)
    : path_(path), config_key_(config_key) {
    if (path_.empty())
        return;
    std::ifstream in(path_);
    if (in) {
        std::string line;
        bool header_ok = false;
        bool first = true;
        while (std::getline(in, line)) {
            if (line.empty())
                continue;
            Json j;
            try {
                j = Json::parse(line);
            } catch (const std::exception&) {
                break; // a torn trailing line ends the usable prefix
            }
            if (first) {
                first = false;
                header_ok = j.contains("config") && j["config"] == config_key_;
                if (!header_ok)
                    break;
                continue;
            }
            if (j.contains("key") && j.contains("value"))
                loaded_[j["key"].get<std::string>()] = j["value"];
        }
        if (!header_ok)
            loaded_.clear();
    }
    // (Re)write the header if the file is absent or belonged to another config.
    if (loaded_.empty()) {
        std::ofstream out(path_, std::ios::trunc);
        Json h;
        h["config"] = config_key_;
        out << h.dump() << "\n";
        for (const auto& [k, v] : loaded_) {
            Json rec;
            rec["key"] = k;
            rec["value"] = v;
            out << rec.dump() << "\n";
        }
    }
}

void Checkpoint::append(const std::string& key, const Json& value) {
    if (!enabled())
        return;
    std::lock_guard<std::mutex> lock(mu_);
    loaded_[key] = value;
    std::ofstream out(path_, std::ios::app);
    Json rec;
    rec["key"] = key;
    rec["value"] = value;
    out << rec.dump() << "\n";
    out.flush();
}

} // namespace fnl
