#include "adslite/config.hpp"

#include <cstdlib>
#include <fstream>

#include "adslite/errors.hpp"

namespace adslite {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

ServiceConfig ServiceConfig::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw AdsError(Err::config_error, "cannot open config: " + path.string());
  ServiceConfig cfg;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos)
      throw AdsError(Err::config_error, "config line " + std::to_string(line_no));
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key == "corpus") cfg.corpus = value;
    else if (key == "synonyms") cfg.synonyms = value;
    else if (key == "groups_dir") cfg.groups_dir = value;
    else if (key == "refereed") cfg.refereed = value;
    else if (key == "classifier_params") cfg.classifier_params = value;
    else if (key == "profiles") cfg.profiles = value;
    else if (key == "libraries_journal") cfg.libraries_journal = value;
    else if (key == "digest_dir") cfg.digest_dir = value;
    else if (key == "listen") cfg.listen = value;
    else throw AdsError(Err::config_error, "unknown config key: " + key);
  }
  return cfg;
}

void ServiceConfig::apply_env() {
  const auto override_path = [](const char* name, std::filesystem::path& target) {
    if (const char* v = std::getenv(name); v && *v) target = v;
  };
  override_path("ADSLITE_CORPUS", corpus);
  override_path("ADSLITE_SYNONYMS", synonyms);
  override_path("ADSLITE_GROUPS_DIR", groups_dir);
  override_path("ADSLITE_REFEREED", refereed);
  override_path("ADSLITE_PARAMS", classifier_params);
  override_path("ADSLITE_PROFILES", profiles);
  override_path("ADSLITE_JOURNAL", libraries_journal);
  override_path("ADSLITE_DIGEST_DIR", digest_dir);
  if (const char* v = std::getenv("ADSLITE_LISTEN"); v && *v) listen = v;
}

void ServiceConfig::validate() const {
  if (corpus.empty()) throw AdsError(Err::config_error, "corpus path required");
  if (!std::filesystem::exists(corpus))
    throw AdsError(Err::config_error, "corpus file missing: " + corpus.string());
  const auto require_exists = [](const char* what, const std::filesystem::path& p) {
    if (!p.empty() && !std::filesystem::exists(p))
      throw AdsError(Err::config_error, std::string(what) + " missing: " + p.string());
  };
  require_exists("synonym table", synonyms);
  require_exists("groups directory", groups_dir);
  require_exists("classifier params", classifier_params);
  require_exists("profiles file", profiles);
  const auto require_parent = [](const char* what, const std::filesystem::path& p) {
    if (p.empty()) return;
    const std::filesystem::path parent = p.parent_path().empty() ? "." : p.parent_path();
    if (!std::filesystem::is_directory(parent))
      throw AdsError(Err::config_error,
                     std::string(what) + " parent directory missing: " + p.string());
  };
  require_parent("refereed log", refereed);
  require_parent("libraries journal", libraries_journal);
}

}  // namespace adslite
