#include "adslite/query.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "adslite/text.hpp"

namespace adslite {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_any(std::string_view s, std::string_view seps) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (seps.find(c) != std::string_view::npos) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::set<std::string> parse_code_list(const std::string& s) {
  std::set<std::string> out;
  for (const std::string& piece : split_any(s, ",")) {
    const std::string code = trim(piece);
    if (!code.empty()) out.insert(code);
  }
  return out;
}

PubDate parse_month_date(const std::string& s) {
  int year = 0, month = 0;
  char extra = 0;
  if (std::sscanf(s.c_str(), "%4d-%2d%c", &year, &month, &extra) != 2 ||
      s.size() != 7 || s[4] != '-')
    throw AdsError(Err::malformed_date, s);
  if (year < 0 || month < 0 || month > 12) throw AdsError(Err::malformed_date, s);
  return PubDate{year, month};
}

std::string strip_dots(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c != '.') out.push_back(c);
  }
  return out;
}

// A name part and a query part are compatible when either equals the
// other or either is a single initial equal to the other's first
// character. Inputs are already normalized.
bool part_compatible(const std::string& q_part, const std::string& r_part) {
  const std::string q = strip_dots(q_part);
  const std::string r = strip_dots(r_part);
  if (q.empty() || r.empty()) return false;
  if (q == r) return true;
  if (q.size() == 1 && q[0] == r[0]) return true;
  if (r.size() == 1 && r[0] == q[0]) return true;
  return false;
}

bool clause_matches_author(const AuthorClause& clause, const Author& author) {
  if (normalize_name(author.last) != clause.last) return false;
  if (!clause.first) return true;  // absent query first name matches any
  std::vector<std::string> query_parts;
  query_parts.push_back(*clause.first);
  for (const std::string& m : clause.middles) query_parts.push_back(m);
  std::vector<std::string> record_parts;
  if (std::string f = normalize_name(author.first); !f.empty())
    record_parts.push_back(std::move(f));
  for (const std::string& m : author.middles) {
    if (std::string n = normalize_name(m); !n.empty()) record_parts.push_back(std::move(n));
  }
  if (query_parts.size() > record_parts.size()) return false;
  for (std::size_t i = 0; i < query_parts.size(); ++i) {
    if (!part_compatible(query_parts[i], record_parts[i])) return false;
  }
  return true;
}

std::string format_month_date(const PubDate& d) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d", d.year, d.month);
  return buf;
}

}  // namespace

QueryAst parse_query(const QueryFields& fields) {
  QueryAst ast;

  for (const std::string& raw : fields.author) {
    std::string s = trim(raw);
    if (s.empty()) continue;
    AuthorClause clause;
    if (s[0] == '^') {
      clause.first_author_only = true;
      s = trim(s.substr(1));
    }
    const std::size_t comma = s.find(',');
    clause.last = normalize_name(comma == std::string::npos ? s : s.substr(0, comma));
    if (clause.last.empty()) throw AdsError(Err::malformed_field, "author: " + raw);
    if (comma != std::string::npos) {
      std::istringstream parts(s.substr(comma + 1));
      std::string part;
      while (parts >> part) {
        std::string n = normalize_name(part);
        if (n.empty()) continue;
        if (!clause.first)
          clause.first = std::move(n);
        else
          clause.middles.push_back(std::move(n));
      }
    }
    ast.authors.push_back(std::move(clause));
  }

  const auto add_term = [&ast](const std::string& token, bool exact) {
    for (const TextTerm& t : ast.text_terms) {
      if (t.token == token && t.exact == exact) return;
    }
    ast.text_terms.push_back({token, exact});
  };

  {
    std::istringstream words(fields.text);
    std::string word;
    while (words >> word) {
      const bool exact = word[0] == '=';
      const std::string body = exact ? word.substr(1) : word;
      for (const std::string& tok : tokenize(body)) add_term(tok, exact);
    }
  }

  for (const std::string& piece : split_any(fields.object, ",;")) {
    const std::string obj = trim(piece);
    if (obj.empty()) continue;
    ast.object_terms.push_back(obj);
    // Dual-search tip: object names are searched in abstract text too.
    for (const std::string& tok : tokenize(obj)) add_term(tok, false);
  }

  if (!fields.start_date.empty() || !fields.end_date.empty()) {
    DateRange range;
    if (!fields.start_date.empty()) range.start = parse_month_date(fields.start_date);
    if (!fields.end_date.empty()) range.end = parse_month_date(fields.end_date);
    const int sm = range.start.month == 0 ? 1 : range.start.month;
    const int em = range.end.month == 0 ? 12 : range.end.month;
    if (std::pair(range.start.year, sm) > std::pair(range.end.year, em))
      throw AdsError(Err::malformed_date, "start after end");
    ast.date = range;
  }

  if (std::set<std::string> inc = parse_code_list(fields.journals_include); !inc.empty())
    ast.filters.include_journals = std::move(inc);
  ast.filters.exclude_journals = parse_code_list(fields.journals_exclude);
  if (ast.filters.include_journals) {
    for (const std::string& code : *ast.filters.include_journals) {
      if (ast.filters.exclude_journals.count(code))
        throw AdsError(Err::malformed_field, "journal both included and excluded: " + code);
    }
  }

  {
    const std::string r = trim(fields.refereed);
    if (r == "1")
      ast.filters.refereed_only = true;
    else if (!r.empty() && r != "0")
      throw AdsError(Err::malformed_field, "refereed must be 0 or 1");
  }

  if (std::string g = trim(fields.group); !g.empty()) ast.filters.group = std::move(g);

  if (const std::string dbs = trim(fields.db); !dbs.empty()) {
    std::set<Database> parsed;
    for (const std::string& piece : split_any(dbs, ",")) {
      const std::string name = trim(piece);
      if (!name.empty()) parsed.insert(db_from_name(name));
    }
    if (!parsed.empty()) ast.filters.databases = std::move(parsed);
  }

  if (const std::string lim = trim(fields.limit); !lim.empty()) {
    try {
      const long v = std::stol(lim);
      if (v <= 0) throw std::invalid_argument("non-positive");
      ast.limit = static_cast<std::uint32_t>(v);
    } catch (const std::exception&) {
      throw AdsError(Err::malformed_field, "limit: " + lim);
    }
  }

  {
    const std::string c = trim(fields.combine);
    if (c == "or")
      ast.combine_text = Combine::or_terms;
    else if (!c.empty() && c != "and")
      throw AdsError(Err::malformed_field, "combine must be and|or");
  }

  if (ast.authors.empty() && ast.text_terms.empty() && ast.object_terms.empty() &&
      !ast.date && ast.filters.empty())
    throw AdsError(Err::empty_query);
  return ast;
}

bool match_author(const AuthorClause& clause, const BibRecord& record) {
  if (record.authors.empty()) return false;
  if (clause.first_author_only) return clause_matches_author(clause, record.authors.front());
  for (const Author& a : record.authors) {
    if (clause_matches_author(clause, a)) return true;
  }
  return false;
}

bool match_date(const DateRange& range, const PubDate& pub) {
  const std::pair<int, int> lo{range.start.year, range.start.month == 0 ? 1 : range.start.month};
  const std::pair<int, int> hi{range.end.year, range.end.month == 0 ? 12 : range.end.month};
  if (pub.month != 0) {
    const std::pair<int, int> p{pub.year, pub.month};
    return lo <= p && p <= hi;
  }
  return lo <= std::pair<int, int>{pub.year, 1} &&
         std::pair<int, int>{pub.year, 12} <= hi;
}

std::string serialize_query(const QueryAst& ast) {
  std::vector<std::string> parts;
  for (const AuthorClause& c : ast.authors) {
    std::string v = c.first_author_only ? "^" : "";
    v += c.last;
    if (c.first) {
      v += ", " + *c.first;
      for (const std::string& m : c.middles) v += " " + m;
    }
    parts.push_back("author=" + v);
  }
  if (!ast.text_terms.empty()) {
    std::string v;
    for (const TextTerm& t : ast.text_terms) {
      if (!v.empty()) v += ' ';
      if (t.exact) v += '=';
      v += t.token;
    }
    parts.push_back("text=" + v);
  }
  if (!ast.object_terms.empty()) {
    std::string v;
    for (const std::string& o : ast.object_terms) {
      if (!v.empty()) v += ';';
      v += o;
    }
    parts.push_back("object=" + v);
  }
  if (ast.date) {
    if (ast.date->start.year != 0)
      parts.push_back("start_date=" + format_month_date(ast.date->start));
    if (ast.date->end.year != 9999)
      parts.push_back("end_date=" + format_month_date(ast.date->end));
  }
  const auto join_codes = [](const std::set<std::string>& codes) {
    std::string v;
    for (const std::string& c : codes) {
      if (!v.empty()) v += ',';
      v += c;
    }
    return v;
  };
  if (ast.filters.include_journals)
    parts.push_back("journals_include=" + join_codes(*ast.filters.include_journals));
  if (!ast.filters.exclude_journals.empty())
    parts.push_back("journals_exclude=" + join_codes(ast.filters.exclude_journals));
  if (ast.filters.refereed_only) parts.push_back("refereed=1");
  if (ast.filters.group) parts.push_back("group=" + *ast.filters.group);
  if (ast.filters.databases) {
    std::string v;
    for (Database db : *ast.filters.databases) {
      if (!v.empty()) v += ',';
      v += db_name(db);
    }
    parts.push_back("db=" + v);
  }
  if (ast.combine_text == Combine::or_terms) parts.push_back("combine=or");
  parts.push_back("limit=" + std::to_string(ast.limit));
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += '&';
    out += p;
  }
  return out;
}

std::vector<SearchHit> execute(const QueryAst& ast, const QueryContext& ctx,
                               const ExecOptions& opt) {
  const std::set<std::string>* group_set = nullptr;
  if (ast.filters.group) {
    group_set = ctx.groups.find(*ast.filters.group);
    if (!group_set) throw AdsError(Err::unknown_group, *ast.filters.group);
  }

  struct TermState {
    std::set<std::string> expansion;
    std::vector<std::size_t> object_refs;  // object terms whose tokens include this one
  };
  std::vector<TermState> terms(ast.text_terms.size());
  for (std::size_t i = 0; i < ast.text_terms.size(); ++i)
    terms[i].expansion =
        ctx.index.synonyms().expand(ast.text_terms[i].token, ast.text_terms[i].exact);

  std::vector<std::vector<std::string>> object_tokens;
  object_tokens.reserve(ast.object_terms.size());
  for (const std::string& o : ast.object_terms) object_tokens.push_back(tokenize(o));
  for (std::size_t i = 0; i < ast.text_terms.size(); ++i) {
    for (std::size_t j = 0; j < object_tokens.size(); ++j) {
      if (std::find(object_tokens[j].begin(), object_tokens[j].end(),
                    ast.text_terms[i].token) != object_tokens[j].end())
        terms[i].object_refs.push_back(j);
    }
  }

  // Deduped, sorted scoring terms: reproducible float summation order.
  std::set<std::string> scoring_set;
  for (const TermState& t : terms) scoring_set.insert(t.expansion.begin(), t.expansion.end());
  std::vector<WeightedTerm> scoring;
  scoring.reserve(scoring_set.size());
  for (const std::string& t : scoring_set) scoring.push_back({t, 1.0});

  const auto object_names_match = [](const BibRecord& r, const std::string& o) {
    for (const std::string& name : r.object_names) {
      if (ci_equal(name, o)) return true;
    }
    return false;
  };
  const auto expansion_in_text = [&ctx](const std::set<std::string>& expansion,
                                        std::uint32_t seq) {
    for (const std::string& tok : expansion) {
      if (ctx.index.contains(tok, seq)) return true;
    }
    return false;
  };

  std::vector<SearchHit> hits;
  for (const BibRecord& rec : ctx.corpus.records()) {
    if (rec.ingest_seq <= opt.after_seq) continue;
    if (opt.within_db && !rec.databases.count(*opt.within_db)) continue;

    bool authors_ok = true;
    for (const AuthorClause& clause : ast.authors) {
      if (!match_author(clause, rec)) {
        authors_ok = false;
        break;
      }
    }
    if (!authors_ok) continue;

    if (ast.date && !match_date(*ast.date, rec.pubdate)) continue;

    const Filters& f = ast.filters;
    if (f.include_journals && !f.include_journals->count(rec.journal_code)) continue;
    if (f.exclude_journals.count(rec.journal_code)) continue;
    if (f.refereed_only && !ctx.refereed.is_refereed(rec.journal_code)) continue;
    if (group_set && !group_set->count(rec.bibcode_str)) continue;
    if (f.databases) {
      bool any_db = false;
      for (Database db : *f.databases) {
        if (rec.databases.count(db)) {
          any_db = true;
          break;
        }
      }
      if (!any_db) continue;
    }

    // Object clause: some object term matches object_names verbatim
    // (case-insensitive) or all of its tokens appear in the text.
    if (!ast.object_terms.empty()) {
      bool any_obj = false;
      for (std::size_t j = 0; j < ast.object_terms.size() && !any_obj; ++j) {
        if (object_names_match(rec, ast.object_terms[j])) {
          any_obj = true;
          break;
        }
        const std::vector<std::string>& toks = object_tokens[j];
        if (toks.empty()) continue;
        bool all_toks = true;
        for (const std::string& tok : toks) {
          if (!expansion_in_text(ctx.index.synonyms().expand(tok, false), rec.ingest_seq)) {
            all_toks = false;
            break;
          }
        }
        if (all_toks) any_obj = true;
      }
      if (!any_obj) continue;
    }

    // Text clause. A term that came from the object box also counts as
    // matched when the record's object_names carry that object term, so
    // the dual search widens rather than narrows results.
    if (!ast.text_terms.empty()) {
      const auto term_matched = [&](std::size_t i) {
        if (expansion_in_text(terms[i].expansion, rec.ingest_seq)) return true;
        for (std::size_t j : terms[i].object_refs) {
          if (object_names_match(rec, ast.object_terms[j])) return true;
        }
        return false;
      };
      bool pass;
      if (ast.combine_text == Combine::and_terms) {
        pass = true;
        for (std::size_t i = 0; i < terms.size(); ++i) {
          if (!term_matched(i)) {
            pass = false;
            break;
          }
        }
      } else {
        pass = false;
        for (std::size_t i = 0; i < terms.size(); ++i) {
          if (term_matched(i)) {
            pass = true;
            break;
          }
        }
      }
      if (!pass) continue;
    }

    hits.push_back({rec.ingest_seq, rec.bibcode_str,
                    score(ctx.index, rec.ingest_seq, scoring)});
  }

  std::sort(hits.begin(), hits.end(), [](const SearchHit& a, const SearchHit& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.seq < b.seq;
  });
  if (hits.size() > ast.limit) hits.resize(ast.limit);
  return hits;
}

}  // namespace adslite
