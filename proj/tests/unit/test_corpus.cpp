#include <doctest.h>

#include <sstream>

#include "adslite/corpus.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace adslite;
using fixtures::FixtureRecord;

namespace {

FixtureRecord minimal(const std::string& bibcode) {
  FixtureRecord r;
  r.bibcode = bibcode;
  r.title = "A title";
  fixtures::FixtureAuthor a;
  a.last = "Grant";
  a.first = "Carolyn";
  r.authors.push_back(a);
  r.year = 2006;
  r.month = 1;
  r.journal = "ApJ";
  r.databases = {"ast"};
  return r;
}

}  // namespace

TEST_CASE("ingest assigns consecutive sequence numbers") {
  Corpus corpus;
  const std::string docs = fixtures::to_json_line(minimal("2006ApJ...636..891G")) + "\n" +
                           fixtures::to_json_line(minimal("2006ApJ...636..892G")) + "\n" +
                           fixtures::to_json_line(minimal("2006ApJ...636..893G")) + "\n";
  const IngestReport report = corpus.ingest_text(docs);
  CHECK(report.accepted == 3);
  CHECK(report.rejected == 0);
  CHECK(corpus.by_seq(1).bibcode_str == "2006ApJ...636..891G");
  CHECK(corpus.by_seq(3).bibcode_str == "2006ApJ...636..893G");
  CHECK(corpus.max_seq() == 3);
}

TEST_CASE("duplicate bibcodes are rejected, stream continues") {
  Corpus corpus;
  const std::string line = fixtures::to_json_line(minimal("2006ApJ...636..891G"));
  const IngestReport report = corpus.ingest_text(line + "\n" + line + "\n");
  CHECK(report.accepted == 1);
  CHECK(report.rejected == 1);
  REQUIRE(report.rejections.size() == 1);
  CHECK(report.rejections[0].code == Err::duplicate_bibcode);
  CHECK(report.rejections[0].line == 2);
}

TEST_CASE("per-record rejection reasons") {
  FixtureRecord no_dbs = minimal("2006ApJ...636..891G");
  no_dbs.databases.clear();
  FixtureRecord bad_db = minimal("2006ApJ...636..892G");
  bad_db.databases = {"bio"};
  FixtureRecord no_authors = minimal("2006ApJ...636..893G");
  no_authors.authors.clear();
  FixtureRecord bad_bib = minimal("2006ApJ...636..894G");
  bad_bib.bibcode = "nope";
  FixtureRecord good = minimal("2006ApJ...636..895G");

  Corpus corpus;
  const IngestReport report = corpus.ingest_text(
      fixtures::to_json_line(no_dbs) + "\n" + fixtures::to_json_line(bad_db) + "\n" +
      fixtures::to_json_line(no_authors) + "\n" + fixtures::to_json_line(bad_bib) +
      "\n" + "not json\n" + fixtures::to_json_line(good) + "\n");
  CHECK(report.accepted == 1);
  CHECK(report.rejected == 5);
  REQUIRE(report.rejections.size() == 5);
  CHECK(report.rejections[0].code == Err::non_empty_databases_required);
  CHECK(report.rejections[1].code == Err::unknown_database);
  CHECK(report.rejections[2].code == Err::empty_authors);
  CHECK(report.rejections[3].code == Err::malformed_bibcode);
  CHECK(report.rejections[4].code == Err::malformed_document);
  CHECK(corpus.size() == 1);
  CHECK(corpus.by_seq(1).ingest_seq == 1);
}

TEST_CASE("pubdate and counter validation") {
  FixtureRecord bad_month = minimal("2006ApJ...636..891G");
  bad_month.month = 13;
  CHECK_THROWS_AS(parse_record_document(fixtures::to_json_line(bad_month)), AdsError);
  try {
    parse_record_document(fixtures::to_json_line(bad_month));
  } catch (const AdsError& e) {
    CHECK(e.code() == Err::malformed_date);
  }
  FixtureRecord negative = minimal("2006ApJ...636..892G");
  negative.scanned_pages = -3;
  CHECK_THROWS_AS(parse_record_document(fixtures::to_json_line(negative)), AdsError);
  FixtureRecord month_zero = minimal("2006ApJ...636..893G");
  month_zero.month = 0;
  CHECK(parse_record_document(fixtures::to_json_line(month_zero)).pubdate.month == 0);
}

TEST_CASE("a malformed reference rejects the record line") {
  FixtureRecord r = minimal("2006ApJ...636..891G");
  r.references = {"short"};
  Corpus corpus;
  const IngestReport report = corpus.ingest_text(fixtures::to_json_line(r) + "\n");
  CHECK(report.accepted == 0);
  REQUIRE(report.rejections.size() == 1);
  CHECK(report.rejections[0].code == Err::malformed_bibcode);
}

TEST_CASE("self-references are dropped") {
  FixtureRecord r = minimal("2006ApJ...636..891G");
  r.references = {"2006ApJ...636..891G", "2005ApJ...600..100A"};
  Corpus corpus;
  corpus.ingest_text(fixtures::to_json_line(r) + "\n");
  const BibRecord& rec = corpus.by_seq(1);
  CHECK(rec.references.size() == 1);
  CHECK(rec.references.count("2005ApJ...600..100A") == 1);
}

TEST_CASE("record document round-trips through the renderer") {
  std::vector<FixtureRecord> recs = fixtures::desk_records();
  recs.resize(25);
  Corpus corpus = fixtures::ingest_all(recs);
  for (const BibRecord& rec : corpus.records()) {
    const BibRecord again = parse_record_document(render_record_document(rec));
    CHECK(again.bibcode_str == rec.bibcode_str);
    CHECK(again.title == rec.title);
    CHECK(again.abstract == rec.abstract);
    CHECK(again.authors.size() == rec.authors.size());
    CHECK(again.databases == rec.databases);
    CHECK(again.references == rec.references);
    CHECK(again.object_names == rec.object_names);
    CHECK(again.pubdate.year == rec.pubdate.year);
    CHECK(again.pubdate.month == rec.pubdate.month);
    CHECK(again.scanned_pages == rec.scanned_pages);
  }
}

TEST_CASE("empty corpus yields all-zero stats") {
  Corpus corpus;
  const CorpusStats stats = compute_stats(corpus);
  CHECK(stats.total_records == 0);
  CHECK(stats.citation_pairs == 0);
  CHECK(stats.abstract_fraction == 0.0);
  CHECK(stats.reference_fraction == 0.0);
  CHECK(stats.affiliation_coverage == 0.0);
}

TEST_CASE("citation pairs count resolvable edges only") {
  FixtureRecord a = minimal("2000ApJ....10...1.A");
  FixtureRecord b = minimal("2000ApJ....20...2.B");
  FixtureRecord c = minimal("2000ApJ....30...3.C");
  a.references = {b.bibcode, c.bibcode};   // A->B, A->C
  b.references = {a.bibcode};              // B->A
  c.references = {"1990Gone...1....1.X"};  // dangling, kept but not counted
  Corpus corpus = fixtures::ingest_all({a, b, c});
  const CorpusStats stats = compute_stats(corpus);
  CHECK(stats.citation_pairs == 3);
  CHECK(stats.with_references == 3);
  CHECK(corpus.by_seq(3).references.size() == 1);
}

TEST_CASE("identical input streams produce identical stats") {
  const std::string docs = fixtures::join_lines(fixtures::random_records(3, 120));
  Corpus c1, c2;
  c1.ingest_text(docs);
  c2.ingest_text(docs);
  REQUIRE(c1.size() == c2.size());
  for (std::size_t i = 1; i <= c1.size(); ++i)
    CHECK(c1.by_seq(i).bibcode_str == c2.by_seq(i).bibcode_str);
  const CorpusStats s1 = compute_stats(c1);
  const CorpusStats s2 = compute_stats(c2);
  CHECK(s1.citation_pairs == s2.citation_pairs);
  CHECK(s1.per_database == s2.per_database);
}

TEST_CASE("adding a database membership moves exactly one counter") {
  std::vector<FixtureRecord> recs = fixtures::random_records(5, 40);
  recs[7].databases = {"ast"};
  Corpus before = fixtures::ingest_all(recs);
  recs[7].databases.push_back("gen");
  Corpus after = fixtures::ingest_all(recs);

  const CorpusStats s0 = compute_stats(before);
  const CorpusStats s1 = compute_stats(after);
  CHECK(s1.per_database.at(Database::gen) == s0.per_database.at(Database::gen) + 1);
  CHECK(s1.per_database.at(Database::ast) == s0.per_database.at(Database::ast));
  CHECK(s1.per_database.at(Database::phy) == s0.per_database.at(Database::phy));
  CHECK(s1.per_database.at(Database::pre) == s0.per_database.at(Database::pre));
  CHECK(s1.total_records == s0.total_records);
  CHECK(s1.with_abstract == s0.with_abstract);
  CHECK(s1.citation_pairs == s0.citation_pairs);
}

TEST_CASE("compute_stats equals a brute-force recount") {
  for (unsigned seed : {1u, 2u, 9u}) {
    Corpus corpus = fixtures::ingest_all(fixtures::random_records(seed, 250));
    const CorpusStats got = compute_stats(corpus);
    const CorpusStats want = oracle::stats_recount(corpus);
    CHECK(got.total_records == want.total_records);
    CHECK(got.per_database == want.per_database);
    CHECK(got.with_abstract == want.with_abstract);
    CHECK(got.with_references == want.with_references);
    CHECK(got.citation_pairs == want.citation_pairs);
    CHECK(got.affiliation_coverage == doctest::Approx(want.affiliation_coverage));
    CHECK(got.scanned_pages == want.scanned_pages);
    CHECK(got.external_links == want.external_links);
  }
}

TEST_CASE("multi-membership records count once per database") {
  // Sum of per-database counts exceeds the record total by the number of
  // extra memberships.
  Corpus corpus = fixtures::ingest_all(fixtures::desk_records());
  const CorpusStats stats = compute_stats(corpus);
  std::size_t sum = 0;
  for (const auto& [db, count] : stats.per_database) sum += count;
  CHECK(stats.total_records == 487);
  CHECK(sum == 500);
}
