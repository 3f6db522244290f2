#pragma once

#include <string>
#include <vector>

#include "adslite/affiliations.hpp"
#include "adslite/classify.hpp"
#include "adslite/corpus.hpp"
#include "adslite/libraries.hpp"
#include "adslite/query.hpp"

namespace adslite {

// Line-oriented text renderings shared by the CLI and the HTTP service so
// the two surfaces stay byte-identical for the same state and request.

std::string render_hits(const std::vector<SearchHit>& hits, const Corpus& corpus);
std::string render_stats(const CorpusStats& stats);
std::string render_classification(const ClassificationResult& result);
std::string render_reclass(const std::vector<ReclassEntry>& entries);
std::string render_affil_list(const std::vector<AffiliationEntry>& entries);
std::string render_affil_search(const AffiliationSearchResult& result);
std::string render_library(const PrivateLibrary& lib);
std::string render_library_add(const LibraryAddResult& result);
std::string render_ingest_report(const IngestReport& report);

std::string format_fixed(double v);  // %.6f

}  // namespace adslite
