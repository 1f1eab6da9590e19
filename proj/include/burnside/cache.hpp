#ifndef BURNSIDE_CACHE_HPP_
#define BURNSIDE_CACHE_HPP_

// On-disk store for subgroup lattices and pair-class tables. Entries are
// keyed by a SHA-256 of the multiplication tables (labels play no part) and
// written to a temporary file that is then renamed into place.

#include <openssl/evp.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "json.hpp"

#include "burnside/error.hpp"
#include "burnside/group.hpp"
#include "burnside/pairs.hpp"

namespace burnside {

  inline constexpr int cache_format_version = 1;

  inline std::string sha256_hex(std::string const& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int  length = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
      throw Error(ErrorKind::internal, "SHA-256 failed");
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string           out;
    for (unsigned i = 0; i < length; ++i) {
      out += hex[digest[i] >> 4];
      out += hex[digest[i] & 15];
    }
    return out;
  }

  inline std::string group_fingerprint(FiniteGroup const& G) {
    std::string out = std::to_string(G.order()) + ":";
    for (int x : G.table()) {
      out += std::to_string(x) + ",";
    }
    return out;
  }

  class ResultCache {
   public:
    ResultCache() = default;
    explicit ResultCache(std::filesystem::path dir) : _dir(std::move(dir)) {
      std::error_code ec;
      std::filesystem::create_directories(*_dir, ec);
      if (ec) {
        throw Error(ErrorKind::invalid_input, "cannot create cache directory " + _dir->string());
      }
    }

    bool enabled() const noexcept {
      return _dir.has_value();
    }

    static std::string key(std::string const& kind, std::string const& material) {
      return sha256_hex("v" + std::to_string(cache_format_version) + "|" + kind + "|" + material);
    }

    std::optional<std::string> load(std::string const& key) const {
      if (!_dir) {
        return std::nullopt;
      }
      std::ifstream in(*_dir / (key + ".json"));
      if (!in) {
        return std::nullopt;
      }
      try {
        nlohmann::json doc;
        in >> doc;
        if (doc.value("version", 0) != cache_format_version || doc.value("key", "") != key) {
          return std::nullopt;
        }
        return doc.at("payload").get<std::string>();
      } catch (nlohmann::json::exception const&) {
        return std::nullopt;  // unreadable entries are recomputed
      }
    }

    void store(std::string const& key, std::string const& payload) const {
      if (!_dir) {
        return;
      }
      static std::atomic<int> counter{0};
      auto const tmp = *_dir / (key + ".tmp." + std::to_string(::getpid()) + "."
                                + std::to_string(counter++));
      {
        std::ofstream out(tmp);
        out << nlohmann::json{{"version", cache_format_version}, {"key", key}, {"payload", payload}}
                   .dump();
        if (!out) {
          return;
        }
      }
      std::error_code ec;
      std::filesystem::rename(tmp, *_dir / (key + ".json"), ec);
      if (ec) {
        std::filesystem::remove(tmp, ec);
      }
    }

   private:
    std::optional<std::filesystem::path> _dir;
  };

  // Loads or stores the subgroup lattice of G.
  inline void warm_lattice(ResultCache const& cache, GroupPtr const& G) {
    if (!cache.enabled()) {
      return;
    }
    auto const key    = ResultCache::key("lattice", group_fingerprint(*G));
    bool const in_memo = detail::lattice_cache().contains(G);
    auto const hit     = cache.load(key);
    if (in_memo && hit) {
      return;
    }
    if (hit && !in_memo) {
      try {
        detail::lattice_cache().seed(
            G, nlohmann::json::parse(*hit).get<std::vector<std::vector<int>>>());
        return;
      } catch (std::exception const&) {
        // fall through and recompute
      }
    }
    std::vector<std::vector<int>> lists;
    for (auto const& H : subgroups(G)) {
      lists.push_back(H.elements());
    }
    cache.store(key, nlohmann::json(lists).dump());
  }

  // Loads or stores C(G,K); afterwards PairTable::get(G,K) is a memo hit.
  inline void warm_pair_table(ResultCache const& cache, GroupPtr const& G, GroupPtr const& K) {
    if (!cache.enabled()) {
      return;
    }
    warm_lattice(cache, G);
    auto const key
        = ResultCache::key("pairs", group_fingerprint(*G) + "|" + group_fingerprint(*K));
    using Reps         = std::vector<std::pair<std::vector<int>, std::vector<int>>>;
    bool const in_memo = detail::pair_table_cache().contains(G, K);
    auto const hit     = cache.load(key);
    if (in_memo && hit) {
      return;
    }
    if (hit && !in_memo) {
      try {
        auto reps = nlohmann::json::parse(*hit).get<Reps>();
        detail::pair_table_cache().seed(std::make_shared<PairTable const>(G, K, reps));
        return;
      } catch (std::exception const&) {
        // fall through and recompute
      }
    }
    Reps reps;
    for (auto const& c : PairTable::get(G, K)->classes()) {
      reps.emplace_back(c.canonical.source().elements(), c.canonical.images());
    }
    cache.store(key, nlohmann::json(reps).dump());
  }

}  // namespace burnside

#endif  // BURNSIDE_CACHE_HPP_
