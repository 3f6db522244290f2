#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "adslite/alerts.hpp"
#include "adslite/classify.hpp"
#include "adslite/config.hpp"
#include "adslite/libraries.hpp"
#include "adslite/query.hpp"
#include "adslite/render.hpp"

namespace adslite {

/// Corpus + index (+ trained models) as one immutable unit. Readers take a
/// shared_ptr and never observe a partially ingested state; POST /ingest
/// swaps in a fresh snapshot atomically.
struct Snapshot {
  Corpus corpus;
  IndexedCorpus index;
  std::optional<ModelSet> models;

  QueryContext context(const GroupStore& groups, const RefereedRegistry& refereed) const {
    return QueryContext{corpus, index, groups, refereed};
  }
};

class App {
 public:
  /// Loads every configured store; throws ConfigError on any missing
  /// required file (fail fast).
  explicit App(ServiceConfig cfg);

  std::shared_ptr<const Snapshot> snapshot() const;
  const ServiceConfig& config() const { return cfg_; }
  const GroupStore& groups() const { return groups_; }
  RefereedRegistry& refereed() { return refereed_; }
  const RefereedRegistry& refereed() const { return refereed_; }
  const ClassifierParams& params() const { return params_; }
  LibraryStore& libraries() { return libs_; }

  /// Appends accepted records to the corpus file and atomically swaps in a
  /// rebuilt snapshot. Serialized against concurrent ingests.
  IngestReport ingest_batch(const std::string& body);

 private:
  ServiceConfig cfg_;
  SynonymTable synonyms_;
  GroupStore groups_;
  RefereedRegistry refereed_;
  ClassifierParams params_;
  LibraryStore libs_;
  std::shared_ptr<const Snapshot> snap_;
  mutable std::mutex snap_mu_;
  std::mutex write_mu_;
};

/// HTTP facade; all routes delegate to module operations and render with
/// the same functions the CLI uses.
class HttpService {
 public:
  explicit HttpService(App& app);
  ~HttpService();

  /// Starts serving on an OS-assigned port in a background thread;
  /// returns the port. Used by tests.
  int listen_any(const std::string& host);

  /// Blocks until stop(). Returns false if binding failed.
  bool listen_blocking(const std::string& host, int port);

  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Adapter from HTTP query/body parameters to the named query fields.
QueryFields fields_from_params(const std::multimap<std::string, std::string>& params);

}  // namespace adslite
