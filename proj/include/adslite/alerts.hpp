#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "adslite/clock.hpp"
#include "adslite/query.hpp"

namespace adslite {

/// Digest cycle length in days. Daily and weekly are only valid for the
/// preprint database; every database defaults to the 10-day cycle.
enum class Cycle : int { daily = 1, weekly = 7, ten_day = 10 };

const char* cycle_name(Cycle c) noexcept;
Cycle cycle_from_name(std::string_view name);

struct SubscriberProfile {
  std::string id;
  std::map<Database, QueryFields> queries;
  std::map<Database, Cycle> frequencies;        // absent => ten_day
  std::map<Database, std::uint32_t> last_run;   // ingest_seq watermarks
  std::map<Database, std::int64_t> last_run_at; // epoch seconds, 0 = never

  Cycle frequency(Database db) const {
    auto it = frequencies.find(db);
    return it == frequencies.end() ? Cycle::ten_day : it->second;
  }
};

/// One subscriber per line (JSON document). Throws MalformedDocument on a
/// bad line; daily/weekly frequencies outside the pre database are
/// rejected at load.
std::vector<SubscriberProfile> load_profiles(const std::filesystem::path& path);

/// Atomic rewrite (tmp + rename) so watermark commits survive crashes.
void save_profiles(const std::filesystem::path& path,
                   const std::vector<SubscriberProfile>& profiles);

struct DigestItem {
  std::string bibcode;
  std::string title;
  std::string first_author;
  double score = 0.0;
};

struct DigestDocument {
  std::string subscriber;
  Database db = Database::ast;
  std::int64_t run_at = 0;
  std::string query;  // canonical serialization of the stored query
  std::vector<DigestItem> items;

  std::string html() const;      // single-root, escaped
  std::string filename() const;  // {subscriber}-{db}-{timestamp}.html
};

struct DigestRun {
  std::vector<DigestDocument> documents;
  std::vector<std::string> warnings;  // skipped lanes (malformed queries)
};

/// For each (subscriber, database) lane whose cycle has elapsed at `now`,
/// executes the stored query over records past the watermark within that
/// database, then advances the watermark to the corpus max ingest_seq.
/// Lanes with no new matches produce no document but still advance.
/// Malformed stored queries are skipped with a warning, watermark
/// unchanged. Single-flight: callers must not run two digests at once.
DigestRun run_digest(std::vector<SubscriberProfile>& profiles,
                     const QueryContext& ctx, std::int64_t now);

std::filesystem::path write_digest(const DigestDocument& doc,
                                   const std::filesystem::path& out_dir);

struct FeedItem {
  std::string title;
  std::string link;
  std::string pub_date;  // RFC 822
  std::string guid;      // the bibcode
};

struct FeedDocument {
  std::string channel_title;  // canonical query serialization
  std::vector<FeedItem> items;
  std::string xml;  // RSS 2.0, deterministic bytes
};

/// Items link to /abs/{bibcode}; order follows the result order; an empty
/// result list still yields a valid zero-item channel.
FeedDocument render_rss(const QueryAst& ast, const std::vector<SearchHit>& results,
                        const Corpus& corpus);

std::string escape_xml(std::string_view s);
std::string escape_html(std::string_view s);

}  // namespace adslite
