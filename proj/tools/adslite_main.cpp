#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "adslite/service.hpp"

namespace {

using namespace adslite;

struct CliOptions {
  std::string config;
  std::string corpus;
  std::string synonyms;
  std::string groups_dir;
  std::string refereed;
  std::string params;
  std::string profiles;
  std::string journal;
  std::string digest_dir;
  std::string listen;
};

ServiceConfig resolve_config(const CliOptions& opt) {
  ServiceConfig cfg;
  if (!opt.config.empty()) cfg = ServiceConfig::from_file(opt.config);
  cfg.apply_env();
  if (!opt.corpus.empty()) cfg.corpus = opt.corpus;
  if (!opt.synonyms.empty()) cfg.synonyms = opt.synonyms;
  if (!opt.groups_dir.empty()) cfg.groups_dir = opt.groups_dir;
  if (!opt.refereed.empty()) cfg.refereed = opt.refereed;
  if (!opt.params.empty()) cfg.classifier_params = opt.params;
  if (!opt.profiles.empty()) cfg.profiles = opt.profiles;
  if (!opt.journal.empty()) cfg.libraries_journal = opt.journal;
  if (!opt.digest_dir.empty()) cfg.digest_dir = opt.digest_dir;
  if (!opt.listen.empty()) cfg.listen = opt.listen;
  return cfg;
}

struct SearchContext {
  Corpus corpus;
  IndexedCorpus index;
  GroupStore groups;
  RefereedRegistry refereed;

  QueryContext context() const { return QueryContext{corpus, index, groups, refereed}; }
};

SearchContext load_search_context(const ServiceConfig& cfg) {
  SearchContext ctx;
  if (cfg.corpus.empty())
    throw AdsError(Err::config_error, "corpus path required (--corpus or config)");
  ctx.corpus = load_corpus_file(cfg.corpus);
  SynonymTable table;
  if (!cfg.synonyms.empty()) table = SynonymTable::from_file(cfg.synonyms);
  ctx.index = IndexedCorpus::build(ctx.corpus, std::move(table));
  if (!cfg.groups_dir.empty()) ctx.groups = GroupStore::from_directory(cfg.groups_dir);
  ctx.refereed = cfg.refereed.empty() ? RefereedRegistry()
                                      : RefereedRegistry::open(cfg.refereed);
  return ctx;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw AdsError(Err::config_error, "cannot open input: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::pair<std::string, int> split_listen(const std::string& listen) {
  const std::size_t colon = listen.rfind(':');
  if (colon == std::string::npos)
    throw AdsError(Err::config_error, "listen must be host:port");
  try {
    return {listen.substr(0, colon), std::stoi(listen.substr(colon + 1))};
  } catch (const std::exception&) {
    throw AdsError(Err::config_error, "listen must be host:port");
  }
}

void add_query_flags(CLI::App* cmd, QueryFields& fields) {
  cmd->add_option("--author", fields.author, "Author clause, repeatable (\"^last, first middle\")");
  cmd->add_option("--text", fields.text, "Text terms; prefix a word with = to match exactly");
  cmd->add_option("--object", fields.object, "Object names, ';' separated");
  cmd->add_option("--start-date", fields.start_date, "YYYY-MM (month 00 allowed)");
  cmd->add_option("--end-date", fields.end_date, "YYYY-MM (month 00 allowed)");
  cmd->add_option("--journals-include", fields.journals_include, "Comma-separated journal codes");
  cmd->add_option("--journals-exclude", fields.journals_exclude, "Comma-separated journal codes");
  cmd->add_option("--refereed", fields.refereed, "1 limits to refereed journals");
  cmd->add_option("--group", fields.group, "Group name filter");
  cmd->add_option("--db", fields.db, "Comma-separated database ids (ast,phy,pre,gen)");
  cmd->add_option("--limit", fields.limit, "Maximum results");
  cmd->add_option("--combine", fields.combine, "Text term combination: and|or");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"adslite - miniature bibliographic search service"};
  app.require_subcommand(1);

  CliOptions opt;
  app.add_option("--config", opt.config, "Config file of key = value lines");
  app.add_option("--corpus", opt.corpus, "Corpus interchange file");
  app.add_option("--synonyms", opt.synonyms, "Synonym table file");
  app.add_option("--groups", opt.groups_dir, "Groups directory");
  app.add_option("--refereed-log", opt.refereed, "Refereed registry / audit log");
  app.add_option("--params", opt.params, "Classifier parameter file");
  app.add_option("--profiles", opt.profiles, "Subscriber profiles file");
  app.add_option("--journal", opt.journal, "Libraries journal file");
  app.add_option("--digest-dir", opt.digest_dir, "Digest output directory");
  app.add_option("--listen", opt.listen, "host:port for serve");

  std::string ingest_input;
  CLI::App* c_ingest = app.add_subcommand("ingest", "Append records from a file (- for stdin)");
  c_ingest->add_option("input", ingest_input, "Interchange file")->required();

  QueryFields search_fields;
  CLI::App* c_search = app.add_subcommand("search", "Run a query, print bibcode/score/title");
  add_query_flags(c_search, search_fields);

  QueryFields rss_fields;
  CLI::App* c_rss = app.add_subcommand("rss", "Run a query, print an RSS 2.0 feed");
  add_query_flags(c_rss, rss_fields);

  CLI::App* c_stats = app.add_subcommand("stats", "Print corpus statistics");

  std::string classify_input;
  CLI::App* c_classify = app.add_subcommand("classify", "Score one record document against each database");
  c_classify->add_option("--input", classify_input, "Record document file (- for stdin)")->required();

  std::string reclass_source;
  CLI::App* c_reclass = app.add_subcommand("reclass-report", "Suggest better databases for records in one database");
  c_reclass->add_option("--source", reclass_source, "Source database id")->required();

  std::string digest_now;
  CLI::App* c_digest = app.add_subcommand("digest", "Run the myADS digest cycle");
  c_digest->add_option("--now", digest_now, "Clock for this run (epoch seconds or ISO 8601 Z)");

  std::string affil_pattern;
  CLI::App* c_affil_list = app.add_subcommand("affil-list", "List affiliation spellings matching a pattern");
  c_affil_list->add_option("--pattern", affil_pattern, "Substring, case-insensitive")->required();

  std::vector<std::string> affil_spellings;
  CLI::App* c_affil_search = app.add_subcommand("affil-search", "Find records carrying selected affiliation spellings");
  c_affil_search->add_option("--spelling", affil_spellings, "Verbatim spelling, repeatable")->required();

  std::string lib_name, lib_owner, lib_token;
  std::vector<std::string> lib_bibcodes;
  std::optional<std::uint64_t> lib_seed;
  CLI::App* c_lib_create = app.add_subcommand("lib-create", "Create a private library");
  c_lib_create->add_option("--name", lib_name, "Library name")->required();
  c_lib_create->add_option("--owner", lib_owner, "Owner id");
  c_lib_create->add_option("--seed", lib_seed, "Token generator seed (tests)");
  CLI::App* c_lib_add = app.add_subcommand("lib-add", "Add bibcodes to a library");
  c_lib_add->add_option("--token", lib_token, "Library token")->required();
  c_lib_add->add_option("--bibcode", lib_bibcodes, "Bibcode, repeatable")->required();
  CLI::App* c_lib_show = app.add_subcommand("lib-show", "Resolve a library by token");
  c_lib_show->add_option("--token", lib_token, "Library token")->required();

  CLI::App* c_serve = app.add_subcommand("serve", "Run the HTTP service");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const ServiceConfig cfg = resolve_config(opt);

    if (c_ingest->parsed()) {
      if (cfg.corpus.empty())
        throw AdsError(Err::config_error, "corpus path required (--corpus or config)");
      Corpus corpus;
      if (std::filesystem::exists(cfg.corpus)) corpus = load_corpus_file(cfg.corpus);
      const std::uint32_t old_max = corpus.max_seq();
      const IngestReport report = corpus.ingest_text(read_input(ingest_input));
      if (report.accepted > 0) {
        std::ofstream out(cfg.corpus, std::ios::app);
        if (!out)
          throw AdsError(Err::config_error, "cannot append corpus: " + cfg.corpus.string());
        for (std::uint32_t seq = old_max + 1; seq <= corpus.max_seq(); ++seq)
          out << render_record_document(corpus.by_seq(seq)) << '\n';
      }
      std::fputs(render_ingest_report(report).c_str(), stdout);
      return 0;
    }

    if (c_search->parsed()) {
      const SearchContext ctx = load_search_context(cfg);
      const QueryAst ast = parse_query(search_fields);
      const auto hits = execute(ast, ctx.context());
      std::fputs(render_hits(hits, ctx.corpus).c_str(), stdout);
      return 0;
    }

    if (c_rss->parsed()) {
      const SearchContext ctx = load_search_context(cfg);
      const QueryAst ast = parse_query(rss_fields);
      const auto hits = execute(ast, ctx.context());
      std::fputs(render_rss(ast, hits, ctx.corpus).xml.c_str(), stdout);
      return 0;
    }

    if (c_stats->parsed()) {
      if (cfg.corpus.empty())
        throw AdsError(Err::config_error, "corpus path required (--corpus or config)");
      const Corpus corpus = load_corpus_file(cfg.corpus);
      std::fputs(render_stats(compute_stats(corpus)).c_str(), stdout);
      return 0;
    }

    if (c_classify->parsed()) {
      if (cfg.corpus.empty())
        throw AdsError(Err::config_error, "corpus path required (--corpus or config)");
      const Corpus corpus = load_corpus_file(cfg.corpus);
      ClassifierParams params;
      if (!cfg.classifier_params.empty()) params = load_classifier_params(cfg.classifier_params);
      const ModelSet models = train(corpus, params);
      std::string doc = read_input(classify_input);
      if (const std::size_t nl = doc.find('\n'); nl != std::string::npos) doc.resize(nl);
      const BibRecord rec = parse_record_document(doc);
      std::fputs(render_classification(classify(rec, models, params)).c_str(), stdout);
      return 0;
    }

    if (c_reclass->parsed()) {
      if (cfg.corpus.empty())
        throw AdsError(Err::config_error, "corpus path required (--corpus or config)");
      const Corpus corpus = load_corpus_file(cfg.corpus);
      ClassifierParams params;
      if (!cfg.classifier_params.empty()) params = load_classifier_params(cfg.classifier_params);
      const ModelSet models = train(corpus, params);
      const auto entries =
          reclassification_report(corpus, models, params, db_from_name(reclass_source));
      std::fputs(render_reclass(entries).c_str(), stdout);
      return 0;
    }

    if (c_digest->parsed()) {
      if (cfg.profiles.empty())
        throw AdsError(Err::config_error, "profiles path required (--profiles or config)");
      const SearchContext ctx = load_search_context(cfg);
      std::vector<SubscriberProfile> profiles = load_profiles(cfg.profiles);
      const std::int64_t now = digest_now.empty() ? system_now() : parse_time(digest_now);
      const DigestRun run = run_digest(profiles, ctx.context(), now);
      save_profiles(cfg.profiles, profiles);
      const std::filesystem::path out_dir =
          cfg.digest_dir.empty() ? std::filesystem::path("digests") : cfg.digest_dir;
      std::printf("%zu digests\n", run.documents.size());
      for (const DigestDocument& doc : run.documents)
        std::printf("wrote %s\n", write_digest(doc, out_dir).string().c_str());
      for (const std::string& warning : run.warnings)
        std::fprintf(stderr, "warning: skipped %s\n", warning.c_str());
      return 0;
    }

    if (c_affil_list->parsed()) {
      if (cfg.corpus.empty())
        throw AdsError(Err::config_error, "corpus path required (--corpus or config)");
      const Corpus corpus = load_corpus_file(cfg.corpus);
      std::fputs(render_affil_list(list_affiliations(corpus, affil_pattern)).c_str(), stdout);
      return 0;
    }

    if (c_affil_search->parsed()) {
      if (cfg.corpus.empty())
        throw AdsError(Err::config_error, "corpus path required (--corpus or config)");
      const Corpus corpus = load_corpus_file(cfg.corpus);
      const std::set<std::string> spellings(affil_spellings.begin(), affil_spellings.end());
      std::fputs(render_affil_search(search_by_affiliations(corpus, spellings)).c_str(), stdout);
      return 0;
    }

    if (c_lib_create->parsed() || c_lib_add->parsed() || c_lib_show->parsed()) {
      if (cfg.libraries_journal.empty())
        throw AdsError(Err::config_error, "libraries journal required (--journal or config)");
      LibraryStore store = LibraryStore::open(cfg.libraries_journal, lib_seed);
      if (c_lib_create->parsed()) {
        std::fputs(render_library(store.create(lib_name, lib_owner)).c_str(), stdout);
      } else if (c_lib_add->parsed()) {
        std::fputs(render_library_add(store.add(lib_token, lib_bibcodes)).c_str(), stdout);
      } else {
        std::fputs(render_library(store.resolve(lib_token)).c_str(), stdout);
      }
      return 0;
    }

    if (c_serve->parsed()) {
      App service_app(cfg);
      HttpService http(service_app);
      const auto [host, port] = split_listen(cfg.listen);
      std::fprintf(stderr, "adslite serving on %s:%d\n", host.c_str(), port);
      if (!http.listen_blocking(host, port))
        throw AdsError(Err::config_error, "cannot bind " + cfg.listen);
      return 0;
    }
  } catch (const AdsError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
