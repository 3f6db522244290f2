#include "adslite/groups.hpp"

#include <fstream>

#include "adslite/errors.hpp"

namespace adslite {

GroupStore GroupStore::from_directory(const std::filesystem::path& dir) {
  GroupStore store;
  if (!std::filesystem::is_directory(dir))
    throw AdsError(Err::config_error, "groups directory missing: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const std::string name = entry.path().filename().string();
    if (name.empty() || name[0] == '.') continue;
    files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    std::ifstream in(path);
    if (!in) throw AdsError(Err::config_error, "cannot open group file: " + path.string());
    std::set<std::string> bibcodes;
    std::string line;
    while (std::getline(in, line)) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      bibcodes.insert(line);
    }
    store.add_group(path.stem().string(), std::move(bibcodes));
  }
  return store;
}

void GroupStore::add_group(const std::string& name, std::set<std::string> bibcodes) {
  groups_[name] = std::move(bibcodes);
}

const std::set<std::string>* GroupStore::find(std::string_view name) const {
  auto it = groups_.find(std::string(name));
  if (it == groups_.end()) return nullptr;
  return &it->second;
}

std::vector<std::string> GroupStore::names() const {
  std::vector<std::string> out;
  out.reserve(groups_.size());
  for (const auto& [name, _] : groups_) out.push_back(name);
  return out;
}

}  // namespace adslite
