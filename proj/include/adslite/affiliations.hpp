#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "adslite/corpus.hpp"

namespace adslite {

struct AffiliationEntry {
  std::string spelling;  // verbatim, never folded in storage
  std::uint32_t record_count = 0;
};

/// Case-insensitive substring match of pattern against every distinct
/// verbatim affiliation string; sorted by record_count descending, then
/// spelling ascending. Throws EmptyPattern.
std::vector<AffiliationEntry> list_affiliations(const Corpus& corpus,
                                                const std::string& pattern);

struct CoverageNote {
  double fraction = 0.0;  // records with any non-empty affiliation
  bool biased = false;    // set when fraction is below the threshold
};

struct AffiliationSearchResult {
  std::vector<std::string> bibcodes;  // ingest order
  CoverageNote coverage;
};

/// Records where any author's affiliation is verbatim-equal to any
/// selected spelling. Affiliations exist for only part of the corpus, so
/// the coverage note flags biased results. Throws EmptySelection.
AffiliationSearchResult search_by_affiliations(const Corpus& corpus,
                                               const std::set<std::string>& spellings,
                                               double bias_threshold = 0.9);

}  // namespace adslite
