#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "adslite/clock.hpp"

namespace adslite {

/// A shareable collection of bibcodes. The 16-character token is the only
/// capability needed to resolve it.
struct PrivateLibrary {
  std::string token;
  std::string name;
  std::string owner;
  std::vector<std::string> bibcodes;  // first-insertion order, no duplicates
  std::int64_t created = 0;
  std::int64_t modified = 0;
};

struct LibraryAddResult {
  const PrivateLibrary* library = nullptr;
  std::vector<std::string> rejected;  // malformed bibcodes, per entry
};

/// Token-addressed library store persisted as an append-only journal of
/// mutations (one JSON document per line: create | add), replayed on open.
class LibraryStore {
 public:
  /// In-memory store (no journal), randomly seeded, system clock.
  LibraryStore();

  /// journal_path may not exist yet; it is created on the first mutation.
  /// A seed makes token generation reproducible for tests.
  static LibraryStore open(const std::filesystem::path& journal_path,
                           std::optional<std::uint64_t> seed = std::nullopt,
                           Clock clock = system_now);

  /// Name collisions are fine; tokens disambiguate. Throws MalformedField
  /// on an empty name.
  const PrivateLibrary& create(const std::string& name, const std::string& owner);

  /// Set-union semantics preserving first-insertion order. Malformed
  /// bibcodes are reported per entry while the rest are still added.
  /// Throws UnknownToken.
  LibraryAddResult add(const std::string& token,
                       const std::vector<std::string>& bibcodes);

  /// Read-only; the token alone is the capability. Throws UnknownToken.
  const PrivateLibrary& resolve(const std::string& token) const;

  std::size_t size() const;
  std::vector<std::string> tokens() const;

 private:
  std::string fresh_token();
  void journal_create(const PrivateLibrary& lib);
  void journal_add(const std::string& token, const std::vector<std::string>& added,
                   std::int64_t at);

  std::map<std::string, PrivateLibrary> by_token_;
  std::filesystem::path journal_path_;  // empty => in-memory only
  std::mt19937_64 rng_;
  Clock clock_;
  std::unique_ptr<std::mutex> mu_;
};

}  // namespace adslite
