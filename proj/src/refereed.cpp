#include "adslite/refereed.hpp"

#include <fstream>
#include <sstream>

#include "adslite/errors.hpp"

namespace adslite {

RefereedRegistry::RefereedRegistry()
    : clock_(system_now), mu_(std::make_unique<std::mutex>()) {}

RefereedRegistry RefereedRegistry::open(const std::filesystem::path& log_path,
                                        Clock clock) {
  RefereedRegistry reg;
  reg.log_path_ = log_path;
  reg.clock_ = std::move(clock);
  if (std::filesystem::exists(log_path)) {
    std::ifstream in(log_path);
    if (!in)
      throw AdsError(Err::config_error, "cannot open refereed log: " + log_path.string());
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty() || line[0] == '#') continue;
      std::istringstream fields(line);
      std::string ts, journal, status;
      if (!(fields >> ts >> journal >> status) ||
          (status != "refereed" && status != "non-refereed"))
        throw AdsError(Err::malformed_document,
                       "refereed log line " + std::to_string(line_no));
      const bool refereed = status == "refereed";
      reg.status_[journal] = refereed;
      reg.audit_.push_back({parse_time(ts), journal, refereed});
    }
  }
  return reg;
}

void RefereedRegistry::set_status(const std::string& journal, bool refereed) {
  if (journal.empty() || journal.find_first_of(" \t") != std::string::npos)
    throw AdsError(Err::malformed_field, "journal code: '" + journal + "'");
  std::lock_guard lock(*mu_);
  const std::int64_t at = clock_();
  status_[journal] = refereed;
  audit_.push_back({at, journal, refereed});
  if (!log_path_.empty()) {
    std::ofstream out(log_path_, std::ios::app);
    if (!out)
      throw AdsError(Err::config_error, "cannot append refereed log: " + log_path_.string());
    out << format_iso8601(at) << ' ' << journal << ' '
        << (refereed ? "refereed" : "non-refereed") << '\n';
  }
}

bool RefereedRegistry::is_refereed(std::string_view journal) const {
  std::lock_guard lock(*mu_);
  auto it = status_.find(journal);
  return it != status_.end() && it->second;
}

}  // namespace adslite
