#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "adslite/errors.hpp"
#include "adslite/record.hpp"

namespace adslite {

struct IngestRejection {
  std::size_t line = 0;  // 1-based position in the input stream
  Err code{};
  std::string detail;
};

struct IngestReport {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  std::vector<IngestRejection> rejections;
};

struct CorpusStats {
  std::size_t total_records = 0;
  std::map<Database, std::size_t> per_database;
  std::size_t with_abstract = 0;
  double abstract_fraction = 0.0;
  std::size_t with_references = 0;
  double reference_fraction = 0.0;
  std::size_t citation_pairs = 0;  // (citing, cited) edges with both ends present
  double affiliation_coverage = 0.0;
  long long scanned_pages = 0;
  long long external_links = 0;
};

/// Parses one interchange document (a single JSON object on one line).
/// Throws AdsError with the rejection reason; ingest_seq is left at 0.
BibRecord parse_record_document(const std::string& line);

/// Canonical single-line rendering; parse_record_document round-trips it.
std::string render_record_document(const BibRecord& rec);

/// Append-only record store. Accepted records get consecutive ingest_seq
/// values starting at 1. Single-writer: callers must not ingest
/// concurrently with reads.
class Corpus {
 public:
  /// One document per line; per-record rejections never abort the stream.
  IngestReport ingest(std::istream& in);
  IngestReport ingest_text(const std::string& docs);

  const BibRecord* find(const std::string& bibcode) const;
  const BibRecord& by_seq(std::uint32_t seq) const;  // seq in [1, max_seq()]
  std::uint32_t max_seq() const { return static_cast<std::uint32_t>(records_.size()); }
  std::size_t size() const { return records_.size(); }
  const std::vector<BibRecord>& records() const { return records_; }

 private:
  std::vector<BibRecord> records_;
  std::unordered_map<std::string, std::uint32_t> by_bibcode_;
};

CorpusStats compute_stats(const Corpus& corpus);

/// Loads an interchange file into a fresh corpus. Missing file throws
/// ConfigError; per-record rejections go into *report when given.
Corpus load_corpus_file(const std::filesystem::path& path,
                        IngestReport* report = nullptr);

}  // namespace adslite
