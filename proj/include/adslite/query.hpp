#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "adslite/corpus.hpp"
#include "adslite/groups.hpp"
#include "adslite/index.hpp"
#include "adslite/refereed.hpp"

namespace adslite {

struct AuthorClause {
  std::string last;                  // normalized, non-empty
  std::optional<std::string> first;  // normalized; absent matches any
  std::vector<std::string> middles;  // normalized
  bool first_author_only = false;    // the "^" anchor
};

/// Month 0 on either endpoint means "month unconstrained there": start
/// behaves as January, end as December.
struct DateRange {
  PubDate start{0, 0};
  PubDate end{9999, 0};
};

struct Filters {
  std::optional<std::set<std::string>> include_journals;
  std::set<std::string> exclude_journals;
  bool refereed_only = false;
  std::optional<std::string> group;
  std::optional<std::set<Database>> databases;

  bool empty() const {
    return !include_journals && exclude_journals.empty() && !refereed_only &&
           !group && !databases;
  }
};

struct TextTerm {
  std::string token;
  bool exact = false;  // "=" prefix: disable synonym expansion
};

enum class Combine : unsigned char { and_terms, or_terms };

struct QueryAst {
  std::vector<AuthorClause> authors;
  std::vector<TextTerm> text_terms;
  std::vector<std::string> object_terms;  // verbatim; matched case-insensitively
  std::optional<DateRange> date;
  Filters filters;
  Combine combine_text = Combine::and_terms;
  std::uint32_t limit = 100;
};

/// Raw named query fields as accepted by the CLI and the HTTP surface.
struct QueryFields {
  std::vector<std::string> author;  // repeatable
  std::string text;
  std::string object;
  std::string start_date;  // YYYY-MM, month 00 allowed
  std::string end_date;
  std::string journals_include;  // comma-separated journal codes
  std::string journals_exclude;
  std::string refereed;  // "1" or "0"
  std::string group;
  std::string db;  // comma-separated database ids
  std::string limit;
  std::string combine;  // "and" (default) or "or"
};

/// Author strings "last, first middle" split on the first comma; a leading
/// "^" anchors to first author. A leading "=" on a text word disables its
/// synonym expansion. Object box contents become object_terms AND their
/// tokens are appended to text_terms so they search abstract text too.
QueryAst parse_query(const QueryFields& fields);

bool match_author(const AuthorClause& clause, const BibRecord& record);

/// Records with a known month compare on the calendar. A month-00 record
/// matches only when its whole year [Jan..Dec] lies inside the range.
bool match_date(const DateRange& range, const PubDate& pub);

/// Canonical serialization (stable field order, lowercase keys), used for
/// feed channel titles and digest headers.
std::string serialize_query(const QueryAst& ast);

struct QueryContext {
  const Corpus& corpus;
  const IndexedCorpus& index;
  const GroupStore& groups;
  const RefereedRegistry& refereed;
};

/// Restrictions used by the digest pipeline: only records with
/// ingest_seq > after_seq, and only members of within_db.
struct ExecOptions {
  std::uint32_t after_seq = 0;
  std::optional<Database> within_db;
};

struct SearchHit {
  std::uint32_t seq = 0;
  std::string bibcode;
  double score = 0.0;
};

/// Candidates must pass every author clause, the text combination, the
/// object clause, the date range and every filter. Ranked by score
/// descending, ties broken by ingest_seq ascending, truncated to limit.
/// Throws UnknownGroup for an undefined group filter.
std::vector<SearchHit> execute(const QueryAst& ast, const QueryContext& ctx,
                               const ExecOptions& opt = {});

}  // namespace adslite
