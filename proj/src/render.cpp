#include "adslite/render.hpp"

#include <cstdio>

namespace adslite {

std::string format_fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string render_hits(const std::vector<SearchHit>& hits, const Corpus& corpus) {
  std::string out;
  for (const SearchHit& hit : hits) {
    out += hit.bibcode;
    out += '\t';
    out += format_fixed(hit.score);
    out += '\t';
    out += corpus.by_seq(hit.seq).title;
    out += '\n';
  }
  return out;
}

std::string render_stats(const CorpusStats& stats) {
  std::string out;
  out += "total_records " + std::to_string(stats.total_records) + '\n';
  for (Database db : kAllDatabases) {
    const auto it = stats.per_database.find(db);
    const std::size_t count = it == stats.per_database.end() ? 0 : it->second;
    out += std::string("db ") + db_name(db) + ' ' + std::to_string(count) + '\n';
  }
  out += "with_abstract " + std::to_string(stats.with_abstract) + ' ' +
         format_fixed(stats.abstract_fraction) + '\n';
  out += "with_references " + std::to_string(stats.with_references) + ' ' +
         format_fixed(stats.reference_fraction) + '\n';
  out += "citation_pairs " + std::to_string(stats.citation_pairs) + '\n';
  out += "affiliation_coverage " + format_fixed(stats.affiliation_coverage) + '\n';
  out += "scanned_pages " + std::to_string(stats.scanned_pages) + '\n';
  out += "external_links " + std::to_string(stats.external_links) + '\n';
  return out;
}

std::string render_classification(const ClassificationResult& result) {
  std::string out;
  out += std::string("gated ") + (result.gated ? "1" : "0") + '\n';
  if (result.gated) return out;
  // Lexicographic db order: ast, gen, phy, pre.
  std::map<std::string, double> by_name;
  for (const auto& [db, sc] : result.scores) by_name[db_name(db)] = sc;
  for (const auto& [name, sc] : by_name)
    out += "score " + name + ' ' + format_fixed(sc) + '\n';
  if (result.assigned) out += std::string("assigned ") + db_name(*result.assigned) + '\n';
  return out;
}

std::string render_reclass(const std::vector<ReclassEntry>& entries) {
  std::string out;
  for (const ReclassEntry& e : entries) {
    out += e.bibcode;
    out += '\t';
    std::string dbs;
    for (Database db : kAllDatabases) {
      if (!e.current.count(db)) continue;
      if (!dbs.empty()) dbs += ',';
      dbs += db_name(db);
    }
    out += dbs;
    out += '\t';
    out += db_name(e.suggested);
    out += '\t';
    out += format_fixed(e.margin);
    out += '\n';
  }
  return out;
}

std::string render_affil_list(const std::vector<AffiliationEntry>& entries) {
  std::string out;
  for (const AffiliationEntry& e : entries) {
    out += std::to_string(e.record_count);
    out += '\t';
    out += e.spelling;
    out += '\n';
  }
  return out;
}

std::string render_affil_search(const AffiliationSearchResult& result) {
  std::string out;
  for (const std::string& bib : result.bibcodes) {
    out += bib;
    out += '\n';
  }
  out += "coverage " + format_fixed(result.coverage.fraction) + ' ' +
         (result.coverage.biased ? "biased" : "ok") + '\n';
  return out;
}

std::string render_library(const PrivateLibrary& lib) {
  std::string out;
  out += "token " + lib.token + '\n';
  out += "name " + lib.name + '\n';
  out += "owner " + lib.owner + '\n';
  out += "created " + std::to_string(lib.created) + '\n';
  out += "modified " + std::to_string(lib.modified) + '\n';
  for (const std::string& bib : lib.bibcodes) {
    out += bib;
    out += '\n';
  }
  return out;
}

std::string render_library_add(const LibraryAddResult& result) {
  std::string out;
  for (const std::string& bad : result.rejected)
    out += "rejected " + bad + " MalformedBibcode\n";
  if (result.library) out += render_library(*result.library);
  return out;
}

std::string render_ingest_report(const IngestReport& report) {
  std::string out;
  out += "accepted " + std::to_string(report.accepted) + '\n';
  out += "rejected " + std::to_string(report.rejected) + '\n';
  for (const IngestRejection& r : report.rejections)
    out += "line " + std::to_string(r.line) + ' ' + err_name(r.code) + '\n';
  return out;
}

}  // namespace adslite
