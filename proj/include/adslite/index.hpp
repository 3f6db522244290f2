#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "adslite/corpus.hpp"
#include "adslite/synonyms.hpp"

namespace adslite {

enum class Field : unsigned char { title = 0, abstract = 1 };

struct Posting {
  std::uint32_t seq = 0;
  Field field = Field::title;
  std::uint32_t tf = 0;
};

struct WeightedTerm {
  std::string term;
  double weight = 1.0;
};

/// Immutable inverted index over record titles and abstracts. Terms are
/// indexed under their surface form; synonym expansion happens at query
/// time so exact matching stays possible.
class IndexedCorpus {
 public:
  static IndexedCorpus build(const Corpus& corpus, SynonymTable table);

  std::uint32_t doc_count() const { return doc_count_; }
  std::uint32_t df(const std::string& term) const;
  const std::vector<Posting>* postings(const std::string& term) const;
  bool contains(const std::string& term, std::uint32_t seq) const;

  /// (title tf, abstract tf) for one document.
  std::pair<std::uint32_t, std::uint32_t> tf(const std::string& term,
                                             std::uint32_t seq) const;

  std::vector<std::uint32_t> docs_with(const std::string& term) const;

  const SynonymTable& synonyms() const { return synonyms_; }

  /// (title length, abstract length) in tokens; zeros for unknown seq.
  std::pair<std::uint32_t, std::uint32_t> doc_length(std::uint32_t seq) const;

  // Internal versioned binary format: header magic + version integer.
  void serialize(std::ostream& out) const;
  static IndexedCorpus deserialize(std::istream& in);

 private:
  std::map<std::string, std::vector<Posting>> postings_;
  std::map<std::string, std::uint32_t> df_;
  std::map<std::uint32_t, std::pair<std::uint32_t, std::uint32_t>> lengths_;
  std::uint32_t doc_count_ = 0;
  SynonymTable synonyms_;
};

/// tf-idf: sum over terms of weight * (2*tf_title + tf_abstract)
///         * log(1 + N / df(term)).
/// Terms absent from the document contribute 0. Summation follows the
/// given term order, so callers wanting reproducible floats pass a sorted
/// list.
double score(const IndexedCorpus& index, std::uint32_t seq,
             std::span<const WeightedTerm> terms);

}  // namespace adslite
