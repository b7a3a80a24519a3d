#pragma once

#include <json.hpp>

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace chowring {

class CacheError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline uint64_t fnv1a64(const std::string& s) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string hex64(uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

// Content-addressed JSON store: <dir>/<kind>/<fnv1a64(canonical key)>.json
class DiskCache {
public:
    struct Entry {
        std::string kind;
        nlohmann::json key;
        std::filesystem::path path;
    };

    explicit DiskCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    const std::filesystem::path& directory() const { return dir_; }

    static std::string canonical(const nlohmann::json& key) { return key.dump(); }

    std::filesystem::path path_for(const std::string& kind, const nlohmann::json& key) const {
        return dir_ / kind / (hex64(fnv1a64(kind + "\n" + canonical(key))) + ".json");
    }

    std::optional<nlohmann::json> get(const std::string& kind, const nlohmann::json& key) const {
        auto p = path_for(kind, key);
        std::error_code ec;
        if (!std::filesystem::exists(p, ec)) return std::nullopt;
        nlohmann::json doc = read_document(p);
        if (doc.value("kind", "") != kind || doc.at("key") != key)
            throw CacheError("cache entry " + p.string() + " does not match its key (hash collision or corruption)");
        return doc.at("value");
    }

    void put(const std::string& kind, const nlohmann::json& key, const nlohmann::json& value) const {
        auto p = path_for(kind, key);
        std::filesystem::create_directories(p.parent_path());
        nlohmann::json doc = {{"schema", "chowring.cache-entry/1"}, {"kind", kind}, {"key", key}, {"value", value}};
        static std::atomic<uint64_t> counter{0};
        std::ostringstream tmpname;
        tmpname << p.filename().string() << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "."
                << counter++;
        auto tmp = p.parent_path() / tmpname.str();
        {
            std::ofstream out(tmp, std::ios::binary);
            if (!out) throw CacheError("cannot write cache file " + tmp.string());
            out << doc.dump() << '\n';
            if (!out) throw CacheError("short write to cache file " + tmp.string());
        }
        std::filesystem::rename(tmp, p);
    }

    template <class F>
    nlohmann::json get_or_compute(const std::string& kind, const nlohmann::json& key, F&& compute) const {
        if (auto hit = get(kind, key)) return *hit;
        nlohmann::json value = compute();
        put(kind, key, value);
        return value;
    }

    // Entries sorted by path for deterministic listings; unreadable files are reported as CacheError.
    std::vector<Entry> list() const {
        std::vector<Entry> out;
        std::error_code ec;
        if (!std::filesystem::exists(dir_, ec)) return out;
        std::vector<std::filesystem::path> files;
        for (const auto& e : std::filesystem::recursive_directory_iterator(dir_))
            if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) {
            nlohmann::json doc = read_document(f);
            out.push_back(Entry{doc.at("kind").get<std::string>(), doc.at("key"), f});
        }
        return out;
    }

    std::optional<nlohmann::json> value_at(const std::filesystem::path& p) const { return read_document(p).at("value"); }

    std::size_t purge() const {
        std::size_t removed = 0;
        std::error_code ec;
        if (!std::filesystem::exists(dir_, ec)) return 0;
        std::vector<std::filesystem::path> files;
        for (const auto& e : std::filesystem::recursive_directory_iterator(dir_))
            if (e.is_regular_file()) files.push_back(e.path());
        for (const auto& f : files)
            if (std::filesystem::remove(f)) ++removed;
        for (const auto& e : std::filesystem::directory_iterator(dir_))
            if (e.is_directory()) std::filesystem::remove_all(e.path());
        return removed;
    }

private:
    static nlohmann::json read_document(const std::filesystem::path& p) {
        std::ifstream in(p, std::ios::binary);
        if (!in) throw CacheError("cannot read cache file " + p.string());
        std::stringstream ss;
        ss << in.rdbuf();
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(ss.str());
        } catch (const std::exception& e) {
            throw CacheError("corrupt cache file " + p.string() + ": " + e.what());
        }
        if (!doc.is_object() || !doc.contains("kind") || !doc.contains("key") || !doc.contains("value") ||
            doc.value("schema", "") != "chowring.cache-entry/1")
            throw CacheError("malformed cache file " + p.string());
        if (p.filename().string() !=
            hex64(fnv1a64(doc["kind"].get<std::string>() + "\n" + canonical(doc["key"]))) + ".json")
            throw CacheError("cache file " + p.string() + " is stored under the wrong hash");
        return doc;
    }

    std::filesystem::path dir_;
};

}  // namespace chowring
