#pragma once

// Content-addressed result cache: one file <digest>.json per key, body
// {"problem", "value", "engine_version"}. Stores go through a temp file and a
// rename, so readers see either nothing or a complete entry.

#include "logct/ct.hpp"
#include "logct/digest.hpp"
#include "logct/report.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>

namespace logct {

class ResultCache {
public:
    using Warn = std::function<void(const std::string&)>;

    explicit ResultCache(std::filesystem::path dir, std::string engine_version = std::string(kEngineVersion),
                         Warn warn = [](const std::string& m) { std::cerr << "warning: " << m << '\n'; })
        : dir_(std::move(dir)), version_(std::move(engine_version)), warn_(std::move(warn))
    {
        std::filesystem::create_directories(dir_);
    }

    [[nodiscard]] const std::filesystem::path& dir() const { return dir_; }
    [[nodiscard]] const std::string& engine_version() const { return version_; }

    [[nodiscard]] std::string key(const std::string& problem) const { return sha256_hex(problem + "|engine=" + version_); }
    [[nodiscard]] std::string key(const CTProblem& prob) const { return problem_hash(prob, version_); }

    [[nodiscard]] std::filesystem::path path_for(const std::string& key) const { return dir_ / (key + ".json"); }

    /// Raw JSON value stored for `problem`, or nullopt. Unreadable or
    /// mismatching entries are misses and produce a warning.
    [[nodiscard]] std::optional<Json> lookup(const std::string& problem) const
    {
        const auto path = path_for(key(problem));
        std::ifstream in(path);
        if (!in) return std::nullopt;
        try {
            Json j = Json::parse(in);
            if (!j.is_object() || !j.contains("value") || j.value("problem", "") != problem ||
                j.value("engine_version", "") != version_)
                throw std::runtime_error("fields do not match the requested problem");
            return j.at("value");
        } catch (const std::exception& e) {
            warn_("ignoring corrupt cache entry " + path.string() + ": " + e.what());
            return std::nullopt;
        }
    }

    void store(const std::string& problem, const Json& value) const
    {
        Json j;
        j["problem"] = problem;
        j["value"] = value;
        j["engine_version"] = version_;
        const auto final_path = path_for(key(problem));
        std::lock_guard lock(mutex_);
        auto tmp = final_path;
        tmp += ".tmp." + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())) + "." +
               std::to_string(counter_++);
        {
            std::ofstream out(tmp, std::ios::trunc);
            if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
            out << j.dump() << '\n';
            out.flush();
            if (!out) throw std::runtime_error("write failed for " + tmp.string());
        }
        std::filesystem::rename(tmp, final_path);
    }

    [[nodiscard]] std::optional<CTValue> lookup(const CTProblem& prob) const
    {
        auto j = lookup(prob.canonical());
        if (!j) return std::nullopt;
        try {
            return ct_value_from_json(*j);
        } catch (const std::exception& e) {
            warn_("ignoring corrupt cache value for " + key(prob) + ": " + e.what());
            return std::nullopt;
        }
    }

    void store(const CTProblem& prob, const CTValue& value) const { store(prob.canonical(), to_json(value)); }

private:
    std::filesystem::path dir_;
    std::string version_;
    Warn warn_;
    mutable std::mutex mutex_;
    mutable std::atomic<unsigned long> counter_{0};
};

}  // namespace logct
