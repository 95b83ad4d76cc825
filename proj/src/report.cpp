#include "brouwerlab/report.hpp"

#include <algorithm>
#include <sstream>

namespace brouwerlab {

Check& Report::add(std::string name, bool passed, std::string detail, std::vector<std::int64_t> witness) {
  checks_.push_back(Check{std::move(name), passed, std::move(detail), std::move(witness)});
  return checks_.back();
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const Check& c : other.checks_) checks_.push_back(Check{prefix + c.name, c.passed, c.detail, c.witness});
  for (const auto& [label, s] : other.timings_) timings_.emplace_back(prefix + label, s);
}

void Report::set_timing(std::string label, double seconds) { timings_.emplace_back(std::move(label), seconds); }

bool Report::passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
}

const Check* Report::find(std::string_view name) const {
  for (const Check& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  if (!title_.empty()) j["title"] = title_;
  j["passed"] = passed();
  auto& arr = j["checks"] = nlohmann::ordered_json::array();
  for (const Check& c : checks_) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["passed"] = c.passed;
    if (!c.detail.empty()) e["detail"] = c.detail;
    if (!c.witness.empty()) e["witness"] = c.witness;
    arr.push_back(std::move(e));
  }
  if (!timings_.empty()) {
    auto& t = j["timings"] = nlohmann::ordered_json::object();
    for (const auto& [label, s] : timings_) t[label] = s;
  }
  return j;
}

std::string Report::to_text() const {
  std::ostringstream out;
  if (!title_.empty()) out << title_ << ": " << (passed() ? "PASS" : "FAIL") << '\n';
  for (const Check& c : checks_) {
    out << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    if (!c.witness.empty()) {
      out << " (witness";
      for (auto w : c.witness) out << ' ' << w;
      out << ')';
    }
    out << '\n';
  }
  for (const auto& [label, s] : timings_) out << "  time " << label << ": " << s << "s\n";
  return out.str();
}

}  // namespace brouwerlab
