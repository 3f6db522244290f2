#include <doctest.h>

#include <cmath>
#include <sstream>

#include "adslite/index.hpp"
#include "adslite/text.hpp"
#include "support/fixtures.hpp"

using namespace adslite;
using fixtures::FixtureRecord;

namespace {

Corpus tiny_corpus(const std::string& title, const std::string& abstract) {
  FixtureRecord r;
  r.bibcode = "2000ApJ....10...1.A";
  r.title = title;
  if (!abstract.empty()) r.abstract = abstract;
  fixtures::FixtureAuthor a;
  a.last = "Grant";
  a.first = "C";
  r.authors.push_back(a);
  r.journal = "ApJ";
  r.databases = {"ast"};
  r.year = 2000;
  r.month = 1;
  return fixtures::ingest_all({r});
}

std::string serialized(const IndexedCorpus& idx) {
  std::ostringstream out;
  idx.serialize(out);
  return out.str();
}

}  // namespace

TEST_CASE("build indexes title and abstract under surface forms") {
  const Corpus corpus = tiny_corpus("Red Giants", "");
  const IndexedCorpus idx = IndexedCorpus::build(corpus, fixtures::synonym_table());
  CHECK(idx.doc_count() == 1);
  CHECK(idx.df("red") == 1);
  CHECK(idx.df("giants") == 1);
  CHECK(idx.df("reddening") == 0);  // expansion is query-time only
  CHECK(idx.tf("red", 1) == std::pair<std::uint32_t, std::uint32_t>{1, 0});
  CHECK(idx.doc_length(1) == std::pair<std::uint32_t, std::uint32_t>{2, 0});
}

TEST_CASE("term frequency counts repeated abstract words") {
  const Corpus corpus = tiny_corpus("Other words", "red red red");
  const IndexedCorpus idx = IndexedCorpus::build(corpus, fixtures::synonym_table());
  CHECK(idx.tf("red", 1) == std::pair<std::uint32_t, std::uint32_t>{0, 3});
  const std::vector<Posting>* plist = idx.postings("red");
  REQUIRE(plist != nullptr);
  REQUIRE(plist->size() == 1);
  CHECK((*plist)[0].field == Field::abstract);
  CHECK((*plist)[0].tf == 3);
}

TEST_CASE("rebuilding an unchanged corpus is bit-identical") {
  const Corpus corpus = fixtures::ingest_all(fixtures::random_records(11, 150));
  const IndexedCorpus a = IndexedCorpus::build(corpus, fixtures::synonym_table());
  const IndexedCorpus b = IndexedCorpus::build(corpus, fixtures::synonym_table());
  CHECK(serialized(a) == serialized(b));
}

TEST_CASE("serialize round-trips through deserialize") {
  const Corpus corpus = fixtures::ingest_all(fixtures::random_records(12, 60));
  const IndexedCorpus idx = IndexedCorpus::build(corpus, fixtures::synonym_table());
  std::stringstream buf;
  idx.serialize(buf);
  const IndexedCorpus back = IndexedCorpus::deserialize(buf);
  CHECK(serialized(back) == serialized(idx));
  CHECK(back.doc_count() == idx.doc_count());
}

TEST_CASE("deserialize rejects foreign bytes") {
  std::stringstream buf("not an index at all");
  CHECK_THROWS_AS(IndexedCorpus::deserialize(buf), AdsError);
}

TEST_CASE("score follows tf-idf with title boost") {
  const Corpus in_abstract = tiny_corpus("Other words", "quasar emission");
  const IndexedCorpus idx_a = IndexedCorpus::build(in_abstract, fixtures::synonym_table());
  const WeightedTerm term{"quasar", 1.0};
  const double abstract_score = score(idx_a, 1, std::span(&term, 1));
  // tf=1, df=1, N=1: 1 * log(2)
  CHECK(abstract_score == doctest::Approx(std::log(2.0)).epsilon(1e-12));

  const Corpus in_title = tiny_corpus("Quasar survey", "other words here");
  const IndexedCorpus idx_t = IndexedCorpus::build(in_title, fixtures::synonym_table());
  const double title_score = score(idx_t, 1, std::span(&term, 1));
  CHECK(title_score == doctest::Approx(2.0 * abstract_score).epsilon(1e-12));
}

TEST_CASE("score is zero without matches") {
  const Corpus corpus = tiny_corpus("Red Giants", "stars everywhere");
  const IndexedCorpus idx = IndexedCorpus::build(corpus, fixtures::synonym_table());
  const WeightedTerm term{"quasar", 1.0};
  CHECK(score(idx, 1, std::span(&term, 1)) == 0.0);
  CHECK(score(idx, 1, {}) == 0.0);
}

TEST_CASE("an extra occurrence never lowers the score") {
  const Corpus one = tiny_corpus("Title words", "red blue");
  const Corpus two = tiny_corpus("Title words", "red red blue");
  const IndexedCorpus idx1 = IndexedCorpus::build(one, fixtures::synonym_table());
  const IndexedCorpus idx2 = IndexedCorpus::build(two, fixtures::synonym_table());
  const WeightedTerm term{"red", 1.0};
  CHECK(score(idx2, 1, std::span(&term, 1)) > score(idx1, 1, std::span(&term, 1)));
}

TEST_CASE("index matches a linear scan of tokenized fields") {
  const Corpus corpus = fixtures::ingest_all(fixtures::random_records(13, 200));
  const IndexedCorpus idx = IndexedCorpus::build(corpus, fixtures::synonym_table());
  std::vector<std::string> probes = fixtures::filler_words();
  probes.push_back("reddening");
  probes.push_back("galaxy");
  probes.push_back("absent_token");
  for (const std::string& term : probes) {
    std::vector<std::uint32_t> want;
    for (const BibRecord& rec : corpus.records()) {
      std::vector<std::string> toks = tokenize(rec.title);
      if (rec.abstract) {
        const auto more = tokenize(*rec.abstract);
        toks.insert(toks.end(), more.begin(), more.end());
      }
      if (std::find(toks.begin(), toks.end(), term) != toks.end())
        want.push_back(rec.ingest_seq);
    }
    CHECK(idx.docs_with(term) == want);
  }
}
