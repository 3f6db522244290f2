#include "adslite/alerts.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "adslite/errors.hpp"

namespace adslite {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr std::int64_t kSecondsPerDay = 86400;

QueryFields fields_from_json(const json& j) {
  QueryFields f;
  const auto get = [&j](const char* key) -> std::string {
    if (!j.contains(key) || j[key].is_null()) return "";
    if (!j[key].is_string())
      throw AdsError(Err::malformed_document, std::string("query field must be a string: ") + key);
    return j[key].get<std::string>();
  };
  if (j.contains("author")) {
    if (j["author"].is_string()) {
      f.author.push_back(j["author"].get<std::string>());
    } else if (j["author"].is_array()) {
      for (const auto& a : j["author"]) {
        if (!a.is_string())
          throw AdsError(Err::malformed_document, "author entries must be strings");
        f.author.push_back(a.get<std::string>());
      }
    } else {
      throw AdsError(Err::malformed_document, "author must be string or array");
    }
  }
  f.text = get("text");
  f.object = get("object");
  f.start_date = get("start_date");
  f.end_date = get("end_date");
  f.journals_include = get("journals_include");
  f.journals_exclude = get("journals_exclude");
  f.refereed = get("refereed");
  f.group = get("group");
  f.db = get("db");
  f.limit = get("limit");
  f.combine = get("combine");
  return f;
}

ordered_json fields_to_json(const QueryFields& f) {
  ordered_json j;
  if (!f.author.empty()) j["author"] = f.author;
  if (!f.text.empty()) j["text"] = f.text;
  if (!f.object.empty()) j["object"] = f.object;
  if (!f.start_date.empty()) j["start_date"] = f.start_date;
  if (!f.end_date.empty()) j["end_date"] = f.end_date;
  if (!f.journals_include.empty()) j["journals_include"] = f.journals_include;
  if (!f.journals_exclude.empty()) j["journals_exclude"] = f.journals_exclude;
  if (!f.refereed.empty()) j["refereed"] = f.refereed;
  if (!f.group.empty()) j["group"] = f.group;
  if (!f.db.empty()) j["db"] = f.db;
  if (!f.limit.empty()) j["limit"] = f.limit;
  if (!f.combine.empty()) j["combine"] = f.combine;
  return j;
}

std::string author_display(const Author& a) {
  std::string out = a.last;
  if (!a.first.empty()) {
    out += ", " + a.first;
    for (const std::string& m : a.middles) out += " " + m;
  }
  return out;
}

const char* kMonthNames[] = {"Jan", "Feb", "Mar", "Apr", "May", "Jun",
                             "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};

std::string rfc822_date(const PubDate& d) {
  const int month = d.month == 0 ? 1 : d.month;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "01 %s %04d 00:00:00 GMT",
                kMonthNames[month - 1], d.year);
  return buf;
}

}  // namespace

const char* cycle_name(Cycle c) noexcept {
  switch (c) {
    case Cycle::daily: return "daily";
    case Cycle::weekly: return "weekly";
    case Cycle::ten_day: return "10d";
  }
  return "?";
}

Cycle cycle_from_name(std::string_view name) {
  if (name == "daily") return Cycle::daily;
  if (name == "weekly") return Cycle::weekly;
  if (name == "10d" || name.empty()) return Cycle::ten_day;
  throw AdsError(Err::malformed_document, "unknown cycle: " + std::string(name));
}

std::vector<SubscriberProfile> load_profiles(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw AdsError(Err::config_error, "cannot open profiles file: " + path.string());
  std::vector<SubscriberProfile> profiles;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw AdsError(Err::malformed_document,
                     "profiles line " + std::to_string(line_no) + ": " + e.what());
    }
    SubscriberProfile p;
    if (!j.contains("id") || !j["id"].is_string() || j["id"].get<std::string>().empty())
      throw AdsError(Err::malformed_document,
                     "profiles line " + std::to_string(line_no) + ": missing id");
    p.id = j["id"].get<std::string>();
    if (j.contains("queries")) {
      for (const auto& [key, val] : j["queries"].items())
        p.queries[db_from_name(key)] = fields_from_json(val);
    }
    if (j.contains("frequencies")) {
      for (const auto& [key, val] : j["frequencies"].items()) {
        const Database db = db_from_name(key);
        const Cycle cycle = cycle_from_name(val.get<std::string>());
        if (cycle != Cycle::ten_day && db != Database::pre)
          throw AdsError(Err::malformed_document,
                         "daily/weekly cycles are only valid for pre: " + p.id);
        p.frequencies[db] = cycle;
      }
    }
    if (j.contains("last_run")) {
      for (const auto& [key, val] : j["last_run"].items())
        p.last_run[db_from_name(key)] = val.get<std::uint32_t>();
    }
    if (j.contains("last_run_at")) {
      for (const auto& [key, val] : j["last_run_at"].items())
        p.last_run_at[db_from_name(key)] = val.get<std::int64_t>();
    }
    profiles.push_back(std::move(p));
  }
  return profiles;
}

void save_profiles(const std::filesystem::path& path,
                   const std::vector<SubscriberProfile>& profiles) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw AdsError(Err::config_error, "cannot write profiles: " + tmp.string());
    for (const SubscriberProfile& p : profiles) {
      ordered_json j;
      j["id"] = p.id;
      ordered_json queries;
      for (const auto& [db, fields] : p.queries) queries[db_name(db)] = fields_to_json(fields);
      j["queries"] = std::move(queries);
      ordered_json freqs;
      for (const auto& [db, cycle] : p.frequencies) freqs[db_name(db)] = cycle_name(cycle);
      j["frequencies"] = std::move(freqs);
      ordered_json marks;
      for (const auto& [db, seq] : p.last_run) marks[db_name(db)] = seq;
      j["last_run"] = std::move(marks);
      ordered_json at;
      for (const auto& [db, ts] : p.last_run_at) at[db_name(db)] = ts;
      j["last_run_at"] = std::move(at);
      out << j.dump() << '\n';
    }
  }
  std::filesystem::rename(tmp, path);
}

std::string escape_xml(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string escape_html(std::string_view s) { return escape_xml(s); }

std::string DigestDocument::html() const {
  std::string out;
  out += "<html>\n<head><meta charset=\"utf-8\"/><title>myADS digest: ";
  out += escape_html(subscriber);
  out += " / ";
  out += db_name(db);
  out += "</title></head>\n<body>\n<h1>myADS digest: ";
  out += escape_html(subscriber);
  out += " / ";
  out += db_name(db);
  out += "</h1>\n<p>run at ";
  out += format_iso8601(run_at);
  out += " for query ";
  out += escape_html(query);
  out += "</p>\n<ol>\n";
  char scorebuf[32];
  for (const DigestItem& item : items) {
    std::snprintf(scorebuf, sizeof(scorebuf), "%.6f", item.score);
    out += "<li><a href=\"/abs/";
    out += escape_html(item.bibcode);
    out += "\">";
    out += escape_html(item.bibcode);
    out += "</a> ";
    out += escape_html(item.title);
    out += " (";
    out += escape_html(item.first_author);
    out += ") [score ";
    out += scorebuf;
    out += "]</li>\n";
  }
  out += "</ol>\n</body>\n</html>\n";
  return out;
}

std::string DigestDocument::filename() const {
  return subscriber + "-" + db_name(db) + "-" + std::to_string(run_at) + ".html";
}

DigestRun run_digest(std::vector<SubscriberProfile>& profiles,
                     const QueryContext& ctx, std::int64_t now) {
  DigestRun run;
  const std::uint32_t corpus_max = ctx.corpus.max_seq();
  for (SubscriberProfile& profile : profiles) {
    for (const auto& [db, fields] : profile.queries) {
      const auto last_at_it = profile.last_run_at.find(db);
      const std::int64_t last_at =
          last_at_it == profile.last_run_at.end() ? 0 : last_at_it->second;
      const std::int64_t cycle_secs =
          static_cast<std::int64_t>(profile.frequency(db)) * kSecondsPerDay;
      if (last_at != 0 && now - last_at < cycle_secs) continue;

      QueryAst ast;
      try {
        ast = parse_query(fields);
      } catch (const AdsError& e) {
        run.warnings.push_back(profile.id + "/" + db_name(db) + ": " + e.what());
        continue;  // watermark unchanged
      }
      const auto wm_it = profile.last_run.find(db);
      const std::uint32_t watermark = wm_it == profile.last_run.end() ? 0 : wm_it->second;

      ExecOptions opt;
      opt.after_seq = watermark;
      opt.within_db = db;
      const std::vector<SearchHit> hits = execute(ast, ctx, opt);

      // Lane ran: commit watermark and run time whether or not it matched.
      profile.last_run[db] = corpus_max;
      profile.last_run_at[db] = now;

      if (hits.empty()) continue;
      DigestDocument doc;
      doc.subscriber = profile.id;
      doc.db = db;
      doc.run_at = now;
      doc.query = serialize_query(ast);
      for (const SearchHit& hit : hits) {
        const BibRecord& rec = ctx.corpus.by_seq(hit.seq);
        doc.items.push_back({hit.bibcode, rec.title, author_display(rec.authors.front()),
                             hit.score});
      }
      run.documents.push_back(std::move(doc));
    }
  }
  return run;
}

std::filesystem::path write_digest(const DigestDocument& doc,
                                   const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  const std::filesystem::path path = out_dir / doc.filename();
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw AdsError(Err::config_error, "cannot write digest: " + path.string());
  out << doc.html();
  return path;
}

FeedDocument render_rss(const QueryAst& ast, const std::vector<SearchHit>& results,
                        const Corpus& corpus) {
  FeedDocument feed;
  feed.channel_title = serialize_query(ast);
  std::string xml;
  xml += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  xml += "<rss version=\"2.0\">\n";
  xml += "  <channel>\n";
  xml += "    <title>" + escape_xml(feed.channel_title) + "</title>\n";
  xml += "    <link>/search?" + escape_xml(feed.channel_title) + "</link>\n";
  xml += "    <description>adslite query feed</description>\n";
  for (const SearchHit& hit : results) {
    const BibRecord& rec = corpus.by_seq(hit.seq);
    FeedItem item;
    item.title = rec.title;
    item.link = "/abs/" + hit.bibcode;
    item.pub_date = rfc822_date(rec.pubdate);
    item.guid = hit.bibcode;
    xml += "    <item>\n";
    xml += "      <title>" + escape_xml(item.title) + "</title>\n";
    xml += "      <link>" + escape_xml(item.link) + "</link>\n";
    xml += "      <pubDate>" + item.pub_date + "</pubDate>\n";
    xml += "      <guid isPermaLink=\"false\">" + escape_xml(item.guid) + "</guid>\n";
    xml += "    </item>\n";
    feed.items.push_back(std::move(item));
  }
  xml += "  </channel>\n";
  xml += "</rss>\n";
  feed.xml = std::move(xml);
  return feed;
}

}  // namespace adslite
