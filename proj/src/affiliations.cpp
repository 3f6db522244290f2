#include "adslite/affiliations.hpp"

#include <algorithm>
#include <map>

#include "adslite/errors.hpp"
#include "adslite/text.hpp"

namespace adslite {

std::vector<AffiliationEntry> list_affiliations(const Corpus& corpus,
                                                const std::string& pattern) {
  if (pattern.empty()) throw AdsError(Err::empty_pattern);
  std::map<std::string, std::uint32_t> counts;
  for (const BibRecord& rec : corpus.records()) {
    std::set<std::string> seen;  // a record counts once per spelling
    for (const Author& a : rec.authors) {
      if (!a.affiliation || a.affiliation->empty()) continue;
      if (!ci_contains(*a.affiliation, pattern)) continue;
      if (seen.insert(*a.affiliation).second) ++counts[*a.affiliation];
    }
  }
  std::vector<AffiliationEntry> entries;
  entries.reserve(counts.size());
  for (const auto& [spelling, count] : counts) entries.push_back({spelling, count});
  std::sort(entries.begin(), entries.end(),
            [](const AffiliationEntry& a, const AffiliationEntry& b) {
              if (a.record_count != b.record_count) return a.record_count > b.record_count;
              return a.spelling < b.spelling;
            });
  return entries;
}

AffiliationSearchResult search_by_affiliations(const Corpus& corpus,
                                               const std::set<std::string>& spellings,
                                               double bias_threshold) {
  if (spellings.empty()) throw AdsError(Err::empty_selection);
  AffiliationSearchResult result;
  std::size_t covered = 0;
  for (const BibRecord& rec : corpus.records()) {
    if (rec.has_affiliation()) ++covered;
    bool matched = false;
    for (const Author& a : rec.authors) {
      if (a.affiliation && spellings.count(*a.affiliation)) {
        matched = true;
        break;
      }
    }
    if (matched) result.bibcodes.push_back(rec.bibcode_str);
  }
  if (corpus.size() > 0)
    result.coverage.fraction = static_cast<double>(covered) / static_cast<double>(corpus.size());
  result.coverage.biased = result.coverage.fraction < bias_threshold;
  return result;
}

}  // namespace adslite
