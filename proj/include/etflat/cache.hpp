#pragma once

// Persisted conference-pair search results: {k, pairs: [{aRow, dRow}]}.

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "etflat/circulant.hpp"
#include "etflat/error.hpp"

namespace etflat {

inline std::filesystem::path default_cache_path(std::size_t k, const std::filesystem::path& dir = "cache") {
  return dir / ("conference-" + std::to_string(k) + ".json");
}

inline nlohmann::ordered_json pairs_to_json(std::size_t k, const std::vector<ConferencePair>& pairs) {
  nlohmann::ordered_json j;
  j["k"] = k;
  j["pairs"] = nlohmann::ordered_json::array();
  for (const auto& p : pairs) j["pairs"].push_back({{"aRow", p.a.values()}, {"dRow", p.d.values()}});
  return j;
}

/// Parses and re-verifies a cache document; anything off is CacheCorrupt.
inline std::vector<ConferencePair> pairs_from_json(std::size_t k, const nlohmann::json& j) {
  std::vector<ConferencePair> out;
  try {
    if (j.at("k").get<std::size_t>() != k) throw Error(ErrorCode::CacheCorrupt, "cache is for a different k");
    for (const auto& e : j.at("pairs")) {
      ConferencePair p{k, SymCirculantRow<int>(e.at("aRow").get<std::vector<int>>()),
                       SymCirculantRow<int>(e.at("dRow").get<std::vector<int>>())};
      if (!is_conference(p)) throw Error(ErrorCode::CacheCorrupt, "cached pair is not a conference pair");
      if (!out.empty() && !(out.back() < p)) throw Error(ErrorCode::CacheCorrupt, "cached pairs out of order");
      out.push_back(std::move(p));
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::CacheCorrupt) throw;
    throw Error(ErrorCode::CacheCorrupt, e.what());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::CacheCorrupt, e.what());
  }
  return out;
}

inline std::optional<std::vector<ConferencePair>> load_pairs(const std::filesystem::path& path, std::size_t k) {
  if (!std::filesystem::exists(path)) return std::nullopt;
  std::ifstream in(path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::CacheCorrupt, path.string() + ": " + e.what());
  }
  return pairs_from_json(k, j);
}

inline void save_pairs(const std::filesystem::path& path, std::size_t k, const std::vector<ConferencePair>& pairs) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::CacheCorrupt, "cannot write " + path.string());
  out << pairs_to_json(k, pairs).dump(1) << '\n';
}

/// Searches once per k, going through the on-disk cache unless disabled.
/// An explicit cache_file applies to every k; otherwise cache_dir/conference-<k>.json.
class PairProvider {
 public:
  struct Options {
    std::filesystem::path cache_dir = "cache";
    std::optional<std::filesystem::path> cache_file;
    bool use_cache = true;
    unsigned threads = 1;
  };

  PairProvider() = default;
  explicit PairProvider(Options opts) : opts_(std::move(opts)) {}

  const std::vector<ConferencePair>& pairs(std::size_t k) {
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;
    const auto path = opts_.cache_file ? *opts_.cache_file : default_cache_path(k, opts_.cache_dir);
    std::optional<std::vector<ConferencePair>> found;
    if (opts_.use_cache) found = load_pairs(path, k);
    if (!found) {
      found = search_conference_pairs(k, {opts_.threads, false});
      if (opts_.use_cache) save_pairs(path, k, *found);
    }
    return memo_.emplace(k, std::move(*found)).first->second;
  }

 private:
  Options opts_;
  std::map<std::size_t, std::vector<ConferencePair>> memo_;
};

}  // namespace etflat
