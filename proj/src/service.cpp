#include "adslite/service.hpp"

#include <fstream>
#include <thread>

#include <httplib.h>

namespace adslite {

App::App(ServiceConfig cfg) : cfg_(std::move(cfg)) {
  cfg_.validate();
  if (!cfg_.synonyms.empty()) synonyms_ = SynonymTable::from_file(cfg_.synonyms);
  if (!cfg_.groups_dir.empty()) groups_ = GroupStore::from_directory(cfg_.groups_dir);
  refereed_ = cfg_.refereed.empty() ? RefereedRegistry()
                                    : RefereedRegistry::open(cfg_.refereed);
  if (!cfg_.classifier_params.empty())
    params_ = load_classifier_params(cfg_.classifier_params);
  if (!cfg_.libraries_journal.empty()) libs_ = LibraryStore::open(cfg_.libraries_journal);

  auto snap = std::make_shared<Snapshot>();
  snap->corpus = load_corpus_file(cfg_.corpus);
  snap->index = IndexedCorpus::build(snap->corpus, synonyms_);
  if (snap->corpus.size() > 0) snap->models = train(snap->corpus, params_);
  snap_ = std::move(snap);
}

std::shared_ptr<const Snapshot> App::snapshot() const {
  std::lock_guard lock(snap_mu_);
  return snap_;
}

IngestReport App::ingest_batch(const std::string& body) {
  std::lock_guard write_lock(write_mu_);
  auto next = std::make_shared<Snapshot>();
  next->corpus = snapshot()->corpus;  // append-only copy
  const std::uint32_t old_max = next->corpus.max_seq();
  IngestReport report = next->corpus.ingest_text(body);
  if (report.accepted > 0) {
    std::ofstream out(cfg_.corpus, std::ios::app);
    if (!out)
      throw AdsError(Err::config_error, "cannot append corpus: " + cfg_.corpus.string());
    for (std::uint32_t seq = old_max + 1; seq <= next->corpus.max_seq(); ++seq)
      out << render_record_document(next->corpus.by_seq(seq)) << '\n';
  }
  next->index = IndexedCorpus::build(next->corpus, synonyms_);
  if (next->corpus.size() > 0) next->models = train(next->corpus, params_);
  {
    std::lock_guard lock(snap_mu_);
    snap_ = std::move(next);
  }
  return report;
}

QueryFields fields_from_params(const std::multimap<std::string, std::string>& params) {
  QueryFields f;
  const auto single = [&params](const char* key) -> std::string {
    auto it = params.find(key);
    return it == params.end() ? "" : it->second;
  };
  auto [abegin, aend] = params.equal_range("author");
  for (auto it = abegin; it != aend; ++it) f.author.push_back(it->second);
  f.text = single("text");
  f.object = single("object");
  f.start_date = single("start_date");
  f.end_date = single("end_date");
  f.journals_include = single("journals_include");
  f.journals_exclude = single("journals_exclude");
  f.refereed = single("refereed");
  f.group = single("group");
  f.db = single("db");
  f.limit = single("limit");
  f.combine = single("combine");
  return f;
}

struct HttpService::Impl {
  App& app;
  httplib::Server server;
  std::thread worker;

  explicit Impl(App& a) : app(a) { install_routes(); }

  static int status_for(const AdsError& e) {
    switch (e.code()) {
      case Err::unknown_token:
      case Err::unknown_group:
        return 404;
      default:
        return 400;
    }
  }

  template <typename Fn>
  static void guarded(httplib::Response& res, Fn&& fn) {
    try {
      fn();
    } catch (const AdsError& e) {
      res.status = status_for(e);
      res.set_content(std::string("error: ") + e.code_name() + "\n", "text/plain");
    } catch (const std::exception& e) {
      res.status = 500;
      res.set_content(std::string("error: Internal (") + e.what() + ")\n", "text/plain");
    }
  }

  void install_routes() {
    server.Get("/search", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        const auto snap = app.snapshot();
        const QueryAst ast = parse_query(fields_from_params(req.params));
        const auto hits = execute(ast, snap->context(app.groups(), app.refereed()));
        res.set_content(render_hits(hits, snap->corpus), "text/plain");
      });
    });

    server.Get("/rss", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        const auto snap = app.snapshot();
        const QueryAst ast = parse_query(fields_from_params(req.params));
        const auto hits = execute(ast, snap->context(app.groups(), app.refereed()));
        const FeedDocument feed = render_rss(ast, hits, snap->corpus);
        res.set_content(feed.xml, "application/rss+xml");
      });
    });

    server.Get("/stats", [this](const httplib::Request&, httplib::Response& res) {
      guarded(res, [&] {
        const auto snap = app.snapshot();
        res.set_content(render_stats(compute_stats(snap->corpus)), "text/plain");
      });
    });

    server.Get(R"(/lib/([0-9A-Za-z]+))",
               [this](const httplib::Request& req, httplib::Response& res) {
                 guarded(res, [&] {
                   const PrivateLibrary& lib = app.libraries().resolve(req.matches[1]);
                   res.set_content(render_library(lib), "text/plain");
                 });
               });

    server.Post("/lib", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        const std::string name = req.get_param_value("name");
        const std::string owner = req.get_param_value("owner");
        const PrivateLibrary& lib = app.libraries().create(name, owner);
        res.set_content(render_library(lib), "text/plain");
      });
    });

    server.Post(R"(/lib/([0-9A-Za-z]+)/add)",
                [this](const httplib::Request& req, httplib::Response& res) {
                  guarded(res, [&] {
                    std::vector<std::string> bibcodes;
                    auto [begin, end] = req.params.equal_range("bibcode");
                    for (auto it = begin; it != end; ++it) bibcodes.push_back(it->second);
                    const LibraryAddResult result =
                        app.libraries().add(req.matches[1], bibcodes);
                    res.set_content(render_library_add(result), "text/plain");
                  });
                });

    server.Get("/affil/list", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        const auto snap = app.snapshot();
        const auto entries = list_affiliations(snap->corpus, req.get_param_value("pattern"));
        res.set_content(render_affil_list(entries), "text/plain");
      });
    });

    server.Get("/affil/search", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        const auto snap = app.snapshot();
        std::set<std::string> spellings;
        auto [begin, end] = req.params.equal_range("spelling");
        for (auto it = begin; it != end; ++it) spellings.insert(it->second);
        const auto result = search_by_affiliations(snap->corpus, spellings);
        res.set_content(render_affil_search(result), "text/plain");
      });
    });

    server.Post("/classify", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        const auto snap = app.snapshot();
        if (!snap->models) throw AdsError(Err::empty_database, "no trained models");
        const BibRecord rec = parse_record_document(req.body);
        const ClassificationResult result = classify(rec, *snap->models, app.params());
        res.set_content(render_classification(result), "text/plain");
      });
    });

    server.Post("/ingest", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        const IngestReport report = app.ingest_batch(req.body);
        res.set_content(render_ingest_report(report), "text/plain");
      });
    });
  }
};

HttpService::HttpService(App& app) : impl_(std::make_unique<Impl>(app)) {}

HttpService::~HttpService() { stop(); }

int HttpService::listen_any(const std::string& host) {
  const int port = impl_->server.bind_to_any_port(host);
  impl_->worker = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
  return port;
}

bool HttpService::listen_blocking(const std::string& host, int port) {
  return impl_->server.listen(host, port);
}

void HttpService::stop() {
  if (!impl_) return;
  impl_->server.stop();
  if (impl_->worker.joinable()) impl_->worker.join();
}

}  // namespace adslite
