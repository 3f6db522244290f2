#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "adslite/bibcode.hpp"

namespace adslite {

enum class Database : unsigned char { ast, phy, pre, gen };

inline constexpr Database kAllDatabases[] = {Database::ast, Database::phy,
                                             Database::pre, Database::gen};

const char* db_name(Database db) noexcept;

/// Throws UnknownDatabase for anything outside {ast, phy, pre, gen}.
Database db_from_name(std::string_view name);

struct Author {
  std::string last;
  std::string first;                       // may be empty or an initial
  std::vector<std::string> middles;
  std::optional<std::string> affiliation;  // verbatim, never canonicalized
};

struct PubDate {
  int year = 0;
  int month = 0;  // 0 encodes "unknown month"
};

struct BibRecord {
  Bibcode bibcode;
  std::string bibcode_str;  // canonical 19-char rendering
  std::string title;
  std::optional<std::string> abstract;
  std::vector<Author> authors;  // non-empty
  PubDate pubdate;
  std::string journal_code;
  std::set<Database> databases;       // non-empty; multi-membership allowed
  std::set<std::string> references;   // canonical bibcodes, never the record's own
  std::set<std::string> object_names;
  std::optional<long long> scanned_pages;
  std::optional<long long> external_links;
  std::uint32_t ingest_seq = 0;

  bool has_abstract() const { return abstract && !abstract->empty(); }
  bool has_affiliation() const;
};

}  // namespace adslite
