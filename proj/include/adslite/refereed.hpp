#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "adslite/clock.hpp"

namespace adslite {

struct RefereedAuditEntry {
  std::int64_t at = 0;
  std::string journal;
  bool refereed = false;
};

/// One boolean per journal code; unknown journals report non-refereed.
/// Every write is an audit-log line ("<iso timestamp> <journal> <status>"),
/// and the log doubles as the persistent store: loading replays it with
/// last-writer-wins. Writes serialize; reads may run concurrently.
class RefereedRegistry {
 public:
  RefereedRegistry();  // in-memory, system clock

  static RefereedRegistry open(const std::filesystem::path& log_path,
                               Clock clock = system_now);

  void set_status(const std::string& journal, bool refereed);
  bool is_refereed(std::string_view journal) const;
  const std::vector<RefereedAuditEntry>& audit() const { return audit_; }

 private:
  std::map<std::string, bool, std::less<>> status_;
  std::vector<RefereedAuditEntry> audit_;
  std::filesystem::path log_path_;  // empty => in-memory only
  Clock clock_;
  std::unique_ptr<std::mutex> mu_;  // pointer keeps the registry movable
};

}  // namespace adslite
