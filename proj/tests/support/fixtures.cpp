#include "support/fixtures.hpp"

#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fixtures {

using nlohmann::ordered_json;

TempDir::TempDir(const std::string& prefix) {
  const auto base = std::filesystem::temp_directory_path();
  for (int i = 0; i < 10000; ++i) {
    std::filesystem::path candidate =
        base / (prefix + "-" + std::to_string(::getpid()) + "-" + std::to_string(i));
    std::error_code ec;
    if (std::filesystem::create_directory(candidate, ec)) {
      path = std::move(candidate);
      return;
    }
  }
  throw std::runtime_error("cannot create temp dir");
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path, ec);
}

void write_file(const std::filesystem::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::trunc | std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << content;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string to_json_line(const FixtureRecord& rec) {
  ordered_json j;
  j["bibcode"] = rec.bibcode;
  j["title"] = rec.title;
  if (rec.abstract)
    j["abstract"] = *rec.abstract;
  else
    j["abstract"] = nullptr;
  ordered_json authors = ordered_json::array();
  for (const FixtureAuthor& a : rec.authors) {
    ordered_json ja;
    ja["last"] = a.last;
    ja["first"] = a.first;
    ja["middle"] = a.middles;
    if (a.aff)
      ja["aff"] = *a.aff;
    else
      ja["aff"] = nullptr;
    authors.push_back(std::move(ja));
  }
  j["authors"] = std::move(authors);
  j["pubdate"] = {{"year", rec.year}, {"month", rec.month}};
  j["journal"] = rec.journal;
  j["databases"] = rec.databases;
  j["references"] = rec.references;
  j["objects"] = rec.objects;
  if (rec.scanned_pages) j["scanned_pages"] = *rec.scanned_pages;
  if (rec.external_links) j["external_links"] = *rec.external_links;
  return j.dump();
}

std::string join_lines(const std::vector<FixtureRecord>& recs) {
  std::string out;
  for (const FixtureRecord& r : recs) {
    out += to_json_line(r);
    out += '\n';
  }
  return out;
}

std::string make_bibcode(int year, const std::string& journal, int volume,
                         int page, char initial) {
  if (journal.size() > 5 || volume > 9999 || page > 9999)
    throw std::invalid_argument("bibcode fields out of range");
  char buf[8];
  std::snprintf(buf, sizeof(buf), "%04d", year);
  std::string out = buf;
  out += journal;
  out.append(5 - journal.size(), '.');
  const std::string vol = std::to_string(volume);
  out.append(4 - vol.size(), '.');
  out += vol;
  out += '.';
  const std::string pg = std::to_string(page);
  out.append(4 - pg.size(), '.');
  out += pg;
  out += initial;
  return out;
}

const std::vector<std::vector<std::string>>& synonym_groups() {
  static const std::vector<std::vector<std::string>> groups = {
      {"red", "reddening", "reddened"},
      {"galaxy", "galaxies"},
      {"quasar", "qso"},
  };
  return groups;
}

adslite::SynonymTable synonym_table() {
  adslite::SynonymTable table;
  for (const auto& group : synonym_groups()) table.add_group(group);
  return table;
}

std::string synonym_file_text() {
  std::string out;
  for (const auto& group : synonym_groups()) {
    for (std::size_t i = 0; i < group.size(); ++i) {
      if (i) out += ' ';
      out += group[i];
    }
    out += '\n';
  }
  return out;
}

const std::vector<std::string>& filler_words() {
  static const std::vector<std::string> words = {
      "dust",     "interstellar", "stellar",  "spectra",   "emission",
      "nebula",   "cluster",      "survey",   "radio",     "optical",
      "infrared", "magnetic",     "plasma",   "solar",     "comet",
      "orbit",    "binary",       "pulsar",   "accretion", "halo"};
  return words;
}

const std::vector<std::string>& journal_pool() {
  static const std::vector<std::string> journals = {"ApJ",   "AJ",    "MNRAS",
                                                    "PhRvL", "Natur", "Sci"};
  return journals;
}

const std::vector<std::string>& refereed_journals() {
  static const std::vector<std::string> journals = {"ApJ", "MNRAS", "PhRvL"};
  return journals;
}

const std::vector<std::string>& object_pool() {
  static const std::vector<std::string> objects = {"M31", "M87", "NGC 253",
                                                   "SN 1987A", "T Tauri"};
  return objects;
}

std::vector<FixtureRecord> desk_records() {
  std::vector<FixtureRecord> recs;
  recs.reserve(487);
  const auto& journals = journal_pool();
  const auto& words = filler_words();
  for (int i = 0; i < 487; ++i) {
    FixtureRecord r;
    r.journal = journals[i % journals.size()];
    r.bibcode = make_bibcode(2000, r.journal, i + 1, (i * 7) % 9000 + 1,
                             static_cast<char>('A' + i % 26));
    r.title = "Study of " + words[i % words.size()] + " " +
              words[(i + 3) % words.size()];
    if (i < 322)
      r.abstract = "We analyze " + words[i % words.size()] + " and " +
                   words[(i + 5) % words.size()] + " in a sample of objects.";
    FixtureAuthor a;
    a.last = "Author" + std::to_string(i % 40);
    a.first = "First" + std::to_string(i % 7);
    if (i % 4 != 0) a.aff = "Institute " + std::to_string(i % 9);
    r.authors.push_back(a);
    r.year = 1990 + i % 17;
    r.month = i % 13;
    if (i < 13)
      r.databases = {"ast", "phy"};
    else if (i < 120)
      r.databases = {"ast"};
    else if (i < 411)
      r.databases = {"phy"};
    else if (i < 449)
      r.databases = {"pre"};
    else
      r.databases = {"gen"};
    r.scanned_pages = i % 5;
    r.external_links = i % 3;
    recs.push_back(std::move(r));
  }
  // References for the first 166 records, two resolvable edges each.
  for (int i = 0; i < 166; ++i) {
    recs[i].references.push_back(recs[(i + 7) % 487].bibcode);
    recs[i].references.push_back(recs[(i + 13) % 487].bibcode);
  }
  return recs;
}

namespace {

struct PoolAuthor {
  const char* last;
  const char* first;
  const char* middle;  // may be empty
};

const std::vector<PoolAuthor>& author_pool() {
  static const std::vector<PoolAuthor> authors = {
      {"Grant", "Carolyn", "S."}, {"Accomazzi", "Alberto", ""},
      {"Kurtz", "Michael", "J."}, {"Eichhorn", "Günther", ""},
      {"Murray", "Stephen", "S."}, {"Thompson", "Donna", ""},
      {"Henneken", "Edwin", "A."}, {"Grant", "Edward", ""},
      {"Müller", "Hans", ""},      {"Gómez", "María", ""},
      {"Smith", "J.", ""},         {"Smith", "Jane", "Q."},
      {"Kurtz", "M.", ""},         {"Watson", "Alice", "B."}};
  return authors;
}

}  // namespace

std::vector<FixtureRecord> caret_records() {
  std::vector<FixtureRecord> recs;
  const auto& pool = author_pool();
  const auto& words = filler_words();
  for (int i = 0; i < 50; ++i) {
    FixtureRecord r;
    r.journal = journal_pool()[i % journal_pool().size()];
    r.bibcode = make_bibcode(1999, r.journal, 100 + i, 10 + i,
                             static_cast<char>('A' + i % 26));
    r.title = words[i % words.size()] + " observations";
    r.abstract = "Observations of " + words[(i + 2) % words.size()] + ".";
    // Rotate the pool so each author appears both first and later.
    const int n_authors = 1 + i % 3;
    for (int k = 0; k < n_authors; ++k) {
      const PoolAuthor& p = pool[(i + k * 5) % pool.size()];
      FixtureAuthor a;
      a.last = p.last;
      a.first = p.first;
      if (*p.middle) a.middles.push_back(p.middle);
      r.authors.push_back(std::move(a));
    }
    r.year = 1999;
    r.month = i % 13;
    r.databases = {"ast"};
    recs.push_back(std::move(r));
  }
  return recs;
}

std::vector<FixtureRecord> random_records(unsigned seed, std::size_t count) {
  std::mt19937 rng(seed);
  std::vector<std::string> words = filler_words();
  for (const auto& group : synonym_groups())
    for (const auto& w : group) words.push_back(w);

  const auto pick_word = [&] { return words[rng() % words.size()]; };
  std::vector<FixtureRecord> recs;
  recs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    FixtureRecord r;
    r.journal = journal_pool()[rng() % journal_pool().size()];
    r.bibcode = make_bibcode(1995 + static_cast<int>(i % 10), r.journal,
                             static_cast<int>(i / 10 + 1),
                             static_cast<int>(i % 10 + 1),
                             static_cast<char>('A' + rng() % 26));
    std::string title = pick_word();
    const std::size_t title_len = 1 + rng() % 5;
    for (std::size_t k = 1; k < title_len; ++k) title += " " + pick_word();
    r.title = title;
    if (rng() % 10 < 8) {
      std::string abs = pick_word();
      const std::size_t abs_len = 5 + rng() % 20;
      for (std::size_t k = 1; k < abs_len; ++k) abs += " " + pick_word();
      r.abstract = abs;
    }
    const std::size_t n_authors = 1 + rng() % 4;
    for (std::size_t k = 0; k < n_authors; ++k) {
      const PoolAuthor& p = author_pool()[rng() % author_pool().size()];
      FixtureAuthor a;
      a.last = p.last;
      a.first = p.first;
      if (*p.middle && rng() % 2) a.middles.push_back(p.middle);
      if (rng() % 2) a.aff = "Institute " + std::to_string(rng() % 6);
      r.authors.push_back(std::move(a));
    }
    r.year = 1995 + static_cast<int>(rng() % 10);
    r.month = static_cast<int>(rng() % 13);
    static const char* kDbNames[] = {"ast", "phy", "pre", "gen"};
    r.databases.push_back(kDbNames[rng() % 4]);
    if (rng() % 5 == 0) {
      const char* extra = kDbNames[rng() % 4];
      if (extra != r.databases[0]) r.databases.push_back(extra);
    }
    if (rng() % 3 == 0)
      r.objects.push_back(object_pool()[rng() % object_pool().size()]);
    if (!recs.empty() && rng() % 4 == 0)
      r.references.push_back(recs[rng() % recs.size()].bibcode);
    recs.push_back(std::move(r));
  }
  return recs;
}

const std::vector<std::string>& classifier_pool(adslite::Database db) {
  static const std::vector<std::string> ast = {
      "galaxy",    "quasar",     "nebula",   "redshift",
      "supernova", "cosmology",  "photometry", "parallax"};
  static const std::vector<std::string> phy = {
      "quantum",    "boson",      "lattice",    "plasma",
      "superconductor", "fermion", "scattering", "renormalization"};
  static const std::vector<std::string> pre = {
      "preprint", "draft", "submitted",  "conjecture",
      "lemma",    "manuscript", "proof", "notation"};
  static const std::vector<std::string> gen = {
      "biology", "climate", "geology", "protein",
      "neuron",  "ecology", "mineral", "enzyme"};
  switch (db) {
    case adslite::Database::ast: return ast;
    case adslite::Database::phy: return phy;
    case adslite::Database::pre: return pre;
    case adslite::Database::gen: return gen;
  }
  return ast;
}

const std::vector<std::string>& classifier_shared_pool() {
  static const std::vector<std::string> shared = {
      "data",  "analysis",    "results", "method",
      "model", "study", "observation", "measurement"};
  return shared;
}

std::vector<FixtureRecord> classifier_records() {
  std::vector<FixtureRecord> recs;
  recs.reserve(200);
  static const char* kDbNames[] = {"ast", "phy", "pre", "gen"};
  static const char* kCoreJournal[] = {"ApJ", "PhRvL", "arXiv", "Sci"};
  for (int i = 0; i < 200; ++i) {
    const int db_idx = i % 4;
    const auto& own = classifier_pool(adslite::kAllDatabases[db_idx]);
    const auto& shared = classifier_shared_pool();
    FixtureRecord r;
    r.journal = kCoreJournal[db_idx];
    r.bibcode = make_bibcode(2001, "Test", i + 1, db_idx + 1, 'C');
    r.title = own[i % own.size()] + " " + own[(i + 1) % own.size()] + " " +
              shared[i % shared.size()];
    std::string abs;
    for (int k = 0; k < 16; ++k) {
      if (k) abs += ' ';
      abs += own[(i + k) % own.size()];
    }
    for (int k = 0; k < 8; ++k) abs += ' ' + shared[(i + k) % shared.size()];
    r.abstract = abs;
    FixtureAuthor a;
    a.last = "Writer" + std::to_string(i % 25);
    a.first = "W";
    r.authors.push_back(a);
    r.year = 2001;
    r.month = 1 + i % 12;
    r.databases = {kDbNames[db_idx]};
    if (i % 10 == 0) {
      const char* extra = kDbNames[(i / 10) % 4];
      if (extra != r.databases[0]) r.databases.push_back(extra);
    }
    if (i % 5 == 0) {
      const int n_refs = 1 + i % 3;
      for (int k = 0; k < n_refs; ++k)
        r.references.push_back(
            make_bibcode(1998, kCoreJournal[db_idx], 50 + k, 100 + i, 'R'));
    }
    recs.push_back(std::move(r));
  }
  return recs;
}

std::vector<FixtureRecord> reclass_records() {
  std::vector<FixtureRecord> recs;
  const auto& ast_pool = classifier_pool(adslite::Database::ast);
  const auto& phy_pool = classifier_pool(adslite::Database::phy);
  const auto& shared = classifier_shared_pool();
  const auto make_rec = [&](int i, const std::vector<std::string>& pool,
                            int own_tokens, const char* db) {
    FixtureRecord r;
    r.journal = "ApJ";
    r.bibcode = make_bibcode(2002, "Rcl", i + 1, i + 1, 'R');
    r.title = pool[i % pool.size()] + " report";
    std::string abs;
    for (int k = 0; k < own_tokens; ++k) {
      if (k) abs += ' ';
      abs += pool[(i + k) % pool.size()];
    }
    for (int k = own_tokens; k < 10; ++k) abs += ' ' + shared[(i + k) % shared.size()];
    r.abstract = abs;
    FixtureAuthor a;
    a.last = "Writer" + std::to_string(i);
    a.first = "W";
    r.authors.push_back(a);
    r.year = 2002;
    r.month = 1;
    r.databases = {db};
    return r;
  };
  for (int i = 0; i < 20; ++i) recs.push_back(make_rec(i, ast_pool, 10, "ast"));
  for (int i = 20; i < 37; ++i) recs.push_back(make_rec(i, phy_pool, 10, "phy"));
  // Mis-filed: astronomy vocabulary, filed only under phy. Decreasing
  // astronomy dominance gives strictly decreasing report margins.
  recs.push_back(make_rec(37, ast_pool, 10, "phy"));
  recs.push_back(make_rec(38, ast_pool, 8, "phy"));
  recs.push_back(make_rec(39, ast_pool, 6, "phy"));
  return recs;
}

std::vector<std::string> reclass_misfiled_bibcodes() {
  return {make_bibcode(2002, "Rcl", 38, 38, 'R'),
          make_bibcode(2002, "Rcl", 39, 39, 'R'),
          make_bibcode(2002, "Rcl", 40, 40, 'R')};
}

std::vector<FixtureRecord> affiliation_records() {
  static const std::vector<std::string> spellings = {
      "Harvard-Smithsonian Center for Astrophysics, Cambridge, MA",
      "Univ. of Cambridge",
      "University of Cambridge, UK",
      "Caltech, Pasadena, CA",
      "MIT Kavli Institute",
      "Max-Planck-Institut für Astronomie"};
  std::vector<FixtureRecord> recs;
  const auto& words = filler_words();
  for (int i = 0; i < 100; ++i) {
    FixtureRecord r;
    r.journal = "ApJ";
    r.bibcode = make_bibcode(2003, "Aff", i + 1, i + 1, 'A');
    r.title = words[i % words.size()] + " result";
    FixtureAuthor a;
    a.last = "Person" + std::to_string(i);
    a.first = "P";
    if (i % 2 == 0) a.aff = spellings[(i / 2) % spellings.size()];
    r.authors.push_back(a);
    if (i % 6 == 0) {
      FixtureAuthor b;
      b.last = "Second" + std::to_string(i);
      b.first = "S";
      if (i % 2 == 0) b.aff = spellings[(i / 3) % spellings.size()];
      r.authors.push_back(b);
    }
    r.year = 2003;
    r.month = 1 + i % 12;
    r.databases = {"ast"};
    recs.push_back(std::move(r));
  }
  return recs;
}

adslite::Corpus ingest_all(const std::vector<FixtureRecord>& recs) {
  adslite::Corpus corpus;
  const adslite::IngestReport report = corpus.ingest_text(join_lines(recs));
  if (report.rejected != 0)
    throw std::runtime_error(
        "fixture rejected " + std::to_string(report.rejected) + " records: " +
        (report.rejections.empty() ? "" : report.rejections.front().detail));
  return corpus;
}

}  // namespace fixtures
