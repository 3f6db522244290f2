#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "adslite/corpus.hpp"
#include "adslite/synonyms.hpp"

namespace fixtures {

/// Scratch directory removed on destruction.
struct TempDir {
  std::filesystem::path path;
  explicit TempDir(const std::string& prefix);
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::filesystem::path file(const std::string& name) const { return path / name; }
};

void write_file(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

// Interchange documents are assembled here with nlohmann directly, not
// with the library's own renderer, so ingestion is exercised honestly.

struct FixtureAuthor {
  std::string last;
  std::string first;
  std::vector<std::string> middles;
  std::optional<std::string> aff;
};

struct FixtureRecord {
  std::string bibcode;
  std::string title;
  std::optional<std::string> abstract;
  std::vector<FixtureAuthor> authors;
  int year = 2000;
  int month = 0;
  std::string journal;
  std::vector<std::string> databases;
  std::vector<std::string> references;
  std::vector<std::string> objects;
  std::optional<long long> scanned_pages;
  std::optional<long long> external_links;
};

std::string to_json_line(const FixtureRecord& rec);
std::string join_lines(const std::vector<FixtureRecord>& recs);

/// "2000ApJ...123..456G"-style canonical bibcode.
std::string make_bibcode(int year, const std::string& journal, int volume,
                         int page, char initial);

/// The synonym groups used across fixtures; the oracle evaluator keeps its
/// own copy of this data rather than querying the SynonymTable.
const std::vector<std::vector<std::string>>& synonym_groups();
adslite::SynonymTable synonym_table();
std::string synonym_file_text();

/// Desk-scale corpus with frozen counts: 487 records, memberships
/// ast=120 phy=304 pre=38 gen=38 (13 dual-membership), 322 abstracts,
/// 166 records with references, 332 resolvable citation edges.
std::vector<FixtureRecord> desk_records();

/// 50 records cycling an author pool through first/  later positions.
std::vector<FixtureRecord> caret_records();

/// Randomized corpus for oracle-equivalence sweeps.
std::vector<FixtureRecord> random_records(unsigned seed, std::size_t count);

/// Word/author/journal pools the random corpus draws from.
const std::vector<std::string>& filler_words();
const std::vector<std::string>& journal_pool();
const std::vector<std::string>& refereed_journals();
const std::vector<std::string>& object_pool();

/// 200-record four-database corpus for the classifier oracle.
std::vector<FixtureRecord> classifier_records();
const std::vector<std::string>& classifier_pool(adslite::Database db);
const std::vector<std::string>& classifier_shared_pool();

/// 40-record two-database corpus with exactly three mis-filed records
/// (ast vocabulary, filed only under phy), in this bibcode order by
/// decreasing margin.
std::vector<FixtureRecord> reclass_records();
std::vector<std::string> reclass_misfiled_bibcodes();

/// 100 records, exactly 50 carrying an affiliation.
std::vector<FixtureRecord> affiliation_records();

adslite::Corpus ingest_all(const std::vector<FixtureRecord>& recs);

}  // namespace fixtures
