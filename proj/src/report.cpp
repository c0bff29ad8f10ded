#include "coringlab/report.hpp"

#include <sstream>

#include <json.hpp>

namespace coringlab {

void Report::pass(const std::string& name, const std::string& detail) {
  rows.push_back({name, "pass", detail});
}
void Report::fail(const std::string& name, const std::string& detail) {
  rows.push_back({name, "fail", detail});
}
void Report::check(const std::string& name, bool ok, const std::string& detail) {
  rows.push_back({name, ok ? "pass" : "fail", detail});
}
void Report::undecided(const std::string& name, const std::string& detail) {
  rows.push_back({name, "undecided", detail});
}

bool Report::all_passed() const {
  for (const auto& r : rows)
    if (r.verdict != "pass") return false;
  return true;
}

int Report::exit_code() const {
  bool undec = false;
  for (const auto& r : rows) {
    if (r.verdict == "fail") return 1;
    if (r.verdict == "undecided") undec = true;
  }
  return undec ? 3 : 0;
}

std::string Report::text(double wall_ms) const {
  std::ostringstream os;
  os << "# " << command << " " << fixture << " (seed " << seed << ")\n";
  std::size_t width = 4;
  for (const auto& r : rows) width = std::max(width, r.name.size());
  for (const auto& r : rows) {
    os << "  " << r.name;
    for (std::size_t i = r.name.size(); i < width + 2; ++i) os << ' ';
    os << r.verdict;
    if (!r.detail.empty()) os << "  " << r.detail;
    os << "\n";
  }
  std::size_t passed = 0;
  for (const auto& r : rows)
    if (r.verdict == "pass") ++passed;
  os << "  -- " << passed << "/" << rows.size() << " checks passed";
  if (wall_ms >= 0) os << " (" << wall_ms << " ms)";
  os << "\n";
  return os.str();
}

std::string Report::json(double wall_ms) const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["fixture"] = fixture;
  j["seed"] = seed;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows)
    j["rows"].push_back({{"name", r.name}, {"verdict", r.verdict}, {"detail", r.detail}});
  j["exit"] = exit_code();
  if (wall_ms >= 0) j["wall_ms"] = wall_ms;
  return j.dump(2) + "\n";
}

}  // namespace coringlab
