#include "adslite/classify.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "adslite/text.hpp"

namespace adslite {

namespace {

std::vector<std::string> record_tokens(const BibRecord& rec) {
  std::vector<std::string> tokens = tokenize(rec.title);
  if (rec.abstract) {
    for (std::string& t : tokenize(*rec.abstract)) tokens.push_back(std::move(t));
  }
  return tokens;
}

std::size_t abstract_token_count(const BibRecord& rec) {
  return rec.abstract ? tokenize(*rec.abstract).size() : 0;
}

}  // namespace

ClassifierParams load_classifier_params(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw AdsError(Err::config_error, "cannot open params file: " + path.string());
  ClassifierParams params;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw AdsError(Err::malformed_document, "params line " + std::to_string(line_no));
    std::istringstream keybuf(line.substr(0, eq));
    std::string key;
    keybuf >> key;
    std::istringstream values(line.substr(eq + 1));
    try {
      if (key == "min_words") {
        long v;
        values >> v;
        if (!values || v < 1) throw std::invalid_argument(key);
        params.min_words = static_cast<std::uint32_t>(v);
      } else if (key == "citation_weight") {
        values >> params.citation_weight;
        if (!values || params.citation_weight < 0) throw std::invalid_argument(key);
      } else if (key == "smoothing") {
        values >> params.smoothing;
        if (!values || params.smoothing <= 0) throw std::invalid_argument(key);
      } else if (key == "word_weights") {
        std::string pair;
        while (values >> pair) {
          const std::size_t colon = pair.find(':');
          if (colon == std::string::npos) throw std::invalid_argument(pair);
          const double w = std::stod(pair.substr(colon + 1));
          if (w <= 0) throw std::invalid_argument(pair);
          params.word_weights[pair.substr(0, colon)] = w;
        }
      } else if (key == "core_journals") {
        std::string pair;
        while (values >> pair) {
          const std::size_t colon = pair.find(':');
          if (colon == std::string::npos) throw std::invalid_argument(pair);
          const Database db = db_from_name(pair.substr(0, colon));
          std::istringstream codes(pair.substr(colon + 1));
          std::string code;
          while (std::getline(codes, code, ',')) {
            if (!code.empty()) params.core_journals[db].insert(code);
          }
        }
      } else {
        throw std::invalid_argument(key);
      }
    } catch (const AdsError&) {
      throw;
    } catch (const std::exception&) {
      throw AdsError(Err::malformed_document,
                     "params line " + std::to_string(line_no) + ": " + key);
    }
  }
  return params;
}

double ModelSet::prob(const DatabaseModel& model, const std::string& token,
                      double smoothing) const {
  const auto it = model.term_counts.find(token);
  const double count = it == model.term_counts.end() ? 0.0 : static_cast<double>(it->second);
  const double v = static_cast<double>(vocabulary.size());
  return (count + smoothing) / (static_cast<double>(model.total_tokens) + smoothing * v);
}

double ModelSet::background_prob(const std::string& token, double smoothing) const {
  const auto it = background_counts.find(token);
  const double count = it == background_counts.end() ? 0.0 : static_cast<double>(it->second);
  const double v = static_cast<double>(vocabulary.size());
  return (count + smoothing) / (static_cast<double>(background_total) + smoothing * v);
}

ModelSet train(const Corpus& corpus, const ClassifierParams&,
               const std::set<Database>& databases) {
  ModelSet set;
  std::set<Database> wanted = databases;
  if (wanted.empty()) {
    for (const BibRecord& rec : corpus.records()) {
      wanted.insert(rec.databases.begin(), rec.databases.end());
    }
  }
  std::map<Database, std::size_t> members;
  for (Database db : wanted) {
    DatabaseModel model;
    model.db = db;
    set.models.emplace(db, std::move(model));
    members[db] = 0;
  }
  for (const BibRecord& rec : corpus.records()) {
    const std::vector<std::string> tokens = record_tokens(rec);
    for (Database db : rec.databases) {
      auto it = set.models.find(db);
      if (it == set.models.end()) continue;
      DatabaseModel& model = it->second;
      for (const std::string& tok : tokens) ++model.term_counts[tok];
      model.total_tokens += tokens.size();
      ++members[db];
    }
  }
  for (const auto& [db, model] : set.models) {
    if (members[db] == 0) throw AdsError(Err::empty_database, db_name(db));
    for (const auto& [term, count] : model.term_counts) {
      set.vocabulary.insert(term);
      set.background_counts[term] += count;
    }
    set.background_total += model.total_tokens;
  }
  return set;
}

double score_against(const BibRecord& record, const DatabaseModel& model,
                     const ModelSet& all_models, const ClassifierParams& params) {
  double total = 0.0;
  for (const std::string& tok : record_tokens(record)) {
    const double p_model = all_models.prob(model, tok, params.smoothing);
    const double p_background = all_models.background_prob(tok, params.smoothing);
    total += params.weight_of(tok) * std::log(p_model / p_background);
  }
  const auto core = params.core_journals.find(model.db);
  if (core != params.core_journals.end() && params.citation_weight > 0) {
    std::size_t core_refs = 0;
    for (const std::string& ref : record.references) {
      if (core->second.count(parse_bibcode(ref).journal)) ++core_refs;
    }
    total += params.citation_weight * static_cast<double>(core_refs);
  }
  return total;
}

ClassificationResult classify(const BibRecord& record, const ModelSet& models,
                              const ClassifierParams& params) {
  ClassificationResult result;
  if (abstract_token_count(record) < params.min_words) {
    result.gated = true;
    return result;
  }
  for (const auto& [db, model] : models.models)
    result.scores[db] = score_against(record, model, models, params);
  // Argmax with ties going to the lexicographically smallest database id.
  for (const auto& [db, sc] : result.scores) {
    if (!result.assigned) {
      result.assigned = db;
      continue;
    }
    const double best = result.scores.at(*result.assigned);
    if (sc > best ||
        (sc == best && std::string(db_name(db)) < db_name(*result.assigned)))
      result.assigned = db;
  }
  return result;
}

std::vector<ReclassEntry> reclassification_report(const Corpus& corpus,
                                                  const ModelSet& models,
                                                  const ClassifierParams& params,
                                                  Database source_db) {
  if (!models.models.count(source_db))
    throw AdsError(Err::unknown_database, db_name(source_db));
  std::vector<ReclassEntry> entries;
  for (const BibRecord& rec : corpus.records()) {
    if (!rec.databases.count(source_db)) continue;
    const ClassificationResult result = classify(rec, models, params);
    if (result.gated || !result.assigned) continue;
    if (rec.databases.count(*result.assigned)) continue;
    double best_current = 0.0;
    bool have_current = false;
    for (Database db : rec.databases) {
      const auto it = result.scores.find(db);
      if (it == result.scores.end()) continue;
      if (!have_current || it->second > best_current) {
        best_current = it->second;
        have_current = true;
      }
    }
    if (!have_current) continue;  // memberships outside the trained set
    entries.push_back({rec.bibcode_str, rec.databases, *result.assigned,
                       result.scores.at(*result.assigned) - best_current,
                       rec.ingest_seq});
  }
  std::sort(entries.begin(), entries.end(), [](const ReclassEntry& a, const ReclassEntry& b) {
    if (a.margin != b.margin) return a.margin > b.margin;
    return a.seq < b.seq;
  });
  return entries;
}

}  // namespace adslite
