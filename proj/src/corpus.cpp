#include "adslite/corpus.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "adslite/text.hpp"

namespace adslite {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string require_string(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string())
    throw AdsError(Err::malformed_document, std::string("missing or non-string field: ") + key);
  return j[key].get<std::string>();
}

std::optional<std::string> nullable_string(const json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  if (!j[key].is_string())
    throw AdsError(Err::malformed_document, std::string("field must be string or null: ") + key);
  std::string v = j[key].get<std::string>();
  if (v.empty()) return std::nullopt;
  return v;
}

std::optional<long long> optional_count(const json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  if (!j[key].is_number_integer())
    throw AdsError(Err::malformed_document, std::string("field must be an integer: ") + key);
  long long v = j[key].get<long long>();
  if (v < 0)
    throw AdsError(Err::malformed_document, std::string("field must be non-negative: ") + key);
  return v;
}

}  // namespace

BibRecord parse_record_document(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    throw AdsError(Err::malformed_document, e.what());
  }
  if (!j.is_object()) throw AdsError(Err::malformed_document, "not an object");

  BibRecord rec;
  const std::string bib = require_string(j, "bibcode");
  rec.bibcode = parse_bibcode(bib);
  rec.bibcode_str = rec.bibcode.render();
  rec.title = require_string(j, "title");
  rec.abstract = nullable_string(j, "abstract");

  if (!j.contains("authors") || !j["authors"].is_array())
    throw AdsError(Err::malformed_document, "missing authors array");
  if (j["authors"].empty()) throw AdsError(Err::empty_authors, bib);
  for (const auto& ja : j["authors"]) {
    if (!ja.is_object()) throw AdsError(Err::malformed_document, "author entry not an object");
    Author a;
    a.last = require_string(ja, "last");
    if (normalize_name(a.last).empty())
      throw AdsError(Err::malformed_document, "author last name empty after normalization");
    if (ja.contains("first") && !ja["first"].is_null()) {
      if (!ja["first"].is_string())
        throw AdsError(Err::malformed_document, "author first must be a string");
      a.first = ja["first"].get<std::string>();
    }
    if (ja.contains("middle") && !ja["middle"].is_null()) {
      if (!ja["middle"].is_array())
        throw AdsError(Err::malformed_document, "author middle must be an array");
      for (const auto& m : ja["middle"]) {
        if (!m.is_string())
          throw AdsError(Err::malformed_document, "author middle entries must be strings");
        a.middles.push_back(m.get<std::string>());
      }
    }
    if (ja.contains("aff") && !ja["aff"].is_null()) {
      if (!ja["aff"].is_string())
        throw AdsError(Err::malformed_document, "author aff must be string or null");
      std::string aff = ja["aff"].get<std::string>();
      if (!aff.empty()) a.affiliation = aff;
    }
    rec.authors.push_back(std::move(a));
  }

  if (!j.contains("pubdate") || !j["pubdate"].is_object())
    throw AdsError(Err::malformed_document, "missing pubdate object");
  const auto& jp = j["pubdate"];
  if (!jp.contains("year") || !jp["year"].is_number_integer() ||
      !jp.contains("month") || !jp["month"].is_number_integer())
    throw AdsError(Err::malformed_date, "pubdate needs integer year and month");
  rec.pubdate.year = jp["year"].get<int>();
  rec.pubdate.month = jp["month"].get<int>();
  if (rec.pubdate.month < 0 || rec.pubdate.month > 12)
    throw AdsError(Err::malformed_date, "month out of [0,12]");
  if (rec.pubdate.year < 0 || rec.pubdate.year > 9999)
    throw AdsError(Err::malformed_date, "year out of [0,9999]");

  rec.journal_code = require_string(j, "journal");

  if (!j.contains("databases") || !j["databases"].is_array())
    throw AdsError(Err::malformed_document, "missing databases array");
  if (j["databases"].empty()) throw AdsError(Err::non_empty_databases_required, bib);
  for (const auto& d : j["databases"]) {
    if (!d.is_string()) throw AdsError(Err::malformed_document, "database ids must be strings");
    rec.databases.insert(db_from_name(d.get<std::string>()));
  }

  if (!j.contains("references") || !j["references"].is_array())
    throw AdsError(Err::malformed_document, "missing references array");
  for (const auto& r : j["references"]) {
    if (!r.is_string()) throw AdsError(Err::malformed_document, "references must be strings");
    const std::string canonical = parse_bibcode(r.get<std::string>()).render();
    if (canonical != rec.bibcode_str) rec.references.insert(canonical);
  }

  if (!j.contains("objects") || !j["objects"].is_array())
    throw AdsError(Err::malformed_document, "missing objects array");
  for (const auto& o : j["objects"]) {
    if (!o.is_string()) throw AdsError(Err::malformed_document, "objects must be strings");
    rec.object_names.insert(o.get<std::string>());
  }

  rec.scanned_pages = optional_count(j, "scanned_pages");
  rec.external_links = optional_count(j, "external_links");
  return rec;
}

std::string render_record_document(const BibRecord& rec) {
  ordered_json j;
  j["bibcode"] = rec.bibcode_str;
  j["title"] = rec.title;
  if (rec.abstract)
    j["abstract"] = *rec.abstract;
  else
    j["abstract"] = nullptr;
  ordered_json authors = ordered_json::array();
  for (const Author& a : rec.authors) {
    ordered_json ja;
    ja["last"] = a.last;
    ja["first"] = a.first;
    ja["middle"] = a.middles;
    if (a.affiliation)
      ja["aff"] = *a.affiliation;
    else
      ja["aff"] = nullptr;
    authors.push_back(std::move(ja));
  }
  j["authors"] = std::move(authors);
  j["pubdate"] = {{"year", rec.pubdate.year}, {"month", rec.pubdate.month}};
  j["journal"] = rec.journal_code;
  ordered_json dbs = ordered_json::array();
  for (Database db : kAllDatabases) {
    if (rec.databases.count(db)) dbs.push_back(db_name(db));
  }
  j["databases"] = std::move(dbs);
  j["references"] = rec.references;
  j["objects"] = rec.object_names;
  if (rec.scanned_pages) j["scanned_pages"] = *rec.scanned_pages;
  if (rec.external_links) j["external_links"] = *rec.external_links;
  return j.dump();
}

IngestReport Corpus::ingest(std::istream& in) {
  IngestReport report;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      BibRecord rec = parse_record_document(line);
      if (by_bibcode_.count(rec.bibcode_str))
        throw AdsError(Err::duplicate_bibcode, rec.bibcode_str);
      rec.ingest_seq = static_cast<std::uint32_t>(records_.size() + 1);
      by_bibcode_.emplace(rec.bibcode_str, rec.ingest_seq);
      records_.push_back(std::move(rec));
      ++report.accepted;
    } catch (const AdsError& e) {
      ++report.rejected;
      report.rejections.push_back({line_no, e.code(), e.what()});
    }
  }
  return report;
}

IngestReport Corpus::ingest_text(const std::string& docs) {
  std::istringstream in(docs);
  return ingest(in);
}

const BibRecord* Corpus::find(const std::string& bibcode) const {
  auto it = by_bibcode_.find(bibcode);
  if (it == by_bibcode_.end()) return nullptr;
  return &records_[it->second - 1];
}

const BibRecord& Corpus::by_seq(std::uint32_t seq) const {
  return records_.at(seq - 1);
}

CorpusStats compute_stats(const Corpus& corpus) {
  CorpusStats stats;
  stats.total_records = corpus.size();
  for (Database db : kAllDatabases) stats.per_database[db] = 0;
  for (const BibRecord& rec : corpus.records()) {
    for (Database db : rec.databases) ++stats.per_database[db];
    if (rec.has_abstract()) ++stats.with_abstract;
    if (!rec.references.empty()) ++stats.with_references;
    for (const std::string& ref : rec.references) {
      if (corpus.find(ref) != nullptr) ++stats.citation_pairs;
    }
    if (rec.has_affiliation()) stats.affiliation_coverage += 1.0;
    if (rec.scanned_pages) stats.scanned_pages += *rec.scanned_pages;
    if (rec.external_links) stats.external_links += *rec.external_links;
  }
  if (stats.total_records > 0) {
    const double n = static_cast<double>(stats.total_records);
    stats.abstract_fraction = static_cast<double>(stats.with_abstract) / n;
    stats.reference_fraction = static_cast<double>(stats.with_references) / n;
    stats.affiliation_coverage /= n;
  }
  return stats;
}

Corpus load_corpus_file(const std::filesystem::path& path, IngestReport* report) {
  std::ifstream in(path);
  if (!in) throw AdsError(Err::config_error, "cannot open corpus file: " + path.string());
  Corpus corpus;
  IngestReport r = corpus.ingest(in);
  if (report) *report = std::move(r);
  return corpus;
}

}  // namespace adslite
