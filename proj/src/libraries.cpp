#include "adslite/libraries.hpp"

#include <fstream>

#include <json.hpp>

#include "adslite/bibcode.hpp"
#include "adslite/errors.hpp"

namespace adslite {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr char kTokenAlphabet[] =
    "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";
constexpr std::size_t kTokenLen = 16;

}  // namespace

LibraryStore::LibraryStore()
    : rng_(std::random_device{}()),
      clock_(system_now),
      mu_(std::make_unique<std::mutex>()) {}

LibraryStore LibraryStore::open(const std::filesystem::path& journal_path,
                                std::optional<std::uint64_t> seed, Clock clock) {
  LibraryStore store;
  store.journal_path_ = journal_path;
  store.clock_ = std::move(clock);
  if (seed) store.rng_.seed(*seed);
  if (std::filesystem::exists(journal_path)) {
    std::ifstream in(journal_path);
    if (!in)
      throw AdsError(Err::config_error, "cannot open library journal: " + journal_path.string());
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      json j;
      try {
        j = json::parse(line);
      } catch (const json::exception& e) {
        throw AdsError(Err::malformed_document,
                       "journal line " + std::to_string(line_no) + ": " + e.what());
      }
      const std::string op = j.value("op", "");
      if (op == "create") {
        PrivateLibrary lib;
        lib.token = j.at("token").get<std::string>();
        lib.name = j.at("name").get<std::string>();
        lib.owner = j.at("owner").get<std::string>();
        lib.created = j.at("ts").get<std::int64_t>();
        lib.modified = lib.created;
        store.by_token_.emplace(lib.token, std::move(lib));
      } else if (op == "add") {
        auto it = store.by_token_.find(j.at("token").get<std::string>());
        if (it == store.by_token_.end())
          throw AdsError(Err::malformed_document,
                         "journal add for unknown token, line " + std::to_string(line_no));
        PrivateLibrary& lib = it->second;
        for (const auto& b : j.at("bibcodes")) {
          const std::string bib = b.get<std::string>();
          if (std::find(lib.bibcodes.begin(), lib.bibcodes.end(), bib) == lib.bibcodes.end())
            lib.bibcodes.push_back(bib);
        }
        lib.modified = j.at("ts").get<std::int64_t>();
      } else {
        throw AdsError(Err::malformed_document,
                       "journal line " + std::to_string(line_no) + ": unknown op");
      }
    }
  }
  return store;
}

std::string LibraryStore::fresh_token() {
  std::uniform_int_distribution<std::size_t> pick(0, sizeof(kTokenAlphabet) - 2);
  while (true) {
    std::string token;
    token.reserve(kTokenLen);
    for (std::size_t i = 0; i < kTokenLen; ++i) token.push_back(kTokenAlphabet[pick(rng_)]);
    if (!by_token_.count(token)) return token;
  }
}

void LibraryStore::journal_create(const PrivateLibrary& lib) {
  if (journal_path_.empty()) return;
  std::ofstream out(journal_path_, std::ios::app);
  if (!out)
    throw AdsError(Err::config_error, "cannot append library journal: " + journal_path_.string());
  ordered_json j;
  j["op"] = "create";
  j["token"] = lib.token;
  j["name"] = lib.name;
  j["owner"] = lib.owner;
  j["ts"] = lib.created;
  out << j.dump() << '\n';
}

void LibraryStore::journal_add(const std::string& token,
                               const std::vector<std::string>& added, std::int64_t at) {
  if (journal_path_.empty()) return;
  std::ofstream out(journal_path_, std::ios::app);
  if (!out)
    throw AdsError(Err::config_error, "cannot append library journal: " + journal_path_.string());
  ordered_json j;
  j["op"] = "add";
  j["token"] = token;
  j["bibcodes"] = added;
  j["ts"] = at;
  out << j.dump() << '\n';
}

const PrivateLibrary& LibraryStore::create(const std::string& name,
                                           const std::string& owner) {
  if (name.empty()) throw AdsError(Err::malformed_field, "library name required");
  std::lock_guard lock(*mu_);
  PrivateLibrary lib;
  lib.token = fresh_token();
  lib.name = name;
  lib.owner = owner;
  lib.created = clock_();
  lib.modified = lib.created;
  auto [it, _] = by_token_.emplace(lib.token, std::move(lib));
  journal_create(it->second);
  return it->second;
}

LibraryAddResult LibraryStore::add(const std::string& token,
                                   const std::vector<std::string>& bibcodes) {
  std::lock_guard lock(*mu_);
  auto it = by_token_.find(token);
  if (it == by_token_.end()) throw AdsError(Err::unknown_token, token);
  PrivateLibrary& lib = it->second;
  LibraryAddResult result;
  std::vector<std::string> added;
  for (const std::string& bib : bibcodes) {
    if (!is_valid_bibcode(bib)) {
      result.rejected.push_back(bib);
      continue;
    }
    if (std::find(lib.bibcodes.begin(), lib.bibcodes.end(), bib) == lib.bibcodes.end()) {
      lib.bibcodes.push_back(bib);
      added.push_back(bib);
    }
  }
  if (!added.empty()) {
    // Timestamp advances only when membership actually changed.
    lib.modified = clock_();
    journal_add(token, added, lib.modified);
  }
  result.library = &lib;
  return result;
}

const PrivateLibrary& LibraryStore::resolve(const std::string& token) const {
  std::lock_guard lock(*mu_);
  auto it = by_token_.find(token);
  if (it == by_token_.end()) throw AdsError(Err::unknown_token, token);
  return it->second;
}

std::size_t LibraryStore::size() const {
  std::lock_guard lock(*mu_);
  return by_token_.size();
}

std::vector<std::string> LibraryStore::tokens() const {
  std::lock_guard lock(*mu_);
  std::vector<std::string> out;
  out.reserve(by_token_.size());
  for (const auto& [token, _] : by_token_) out.push_back(token);
  return out;
}

}  // namespace adslite
