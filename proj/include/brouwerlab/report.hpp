#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace brouwerlab {

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
  std::vector<std::int64_t> witness;
};

/// Outcome of a verification run. The JSON and text renderings carry the
/// same facts; timings are only rendered when explicitly recorded.
class Report {
 public:
  Report() = default;
  explicit Report(std::string title) : title_(std::move(title)) {}

  Check& add(std::string name, bool passed, std::string detail = {},
             std::vector<std::int64_t> witness = {});
  /// Appends every check of `other`, prefixing names with `prefix`.
  void merge(const Report& other, const std::string& prefix = {});
  void set_timing(std::string label, double seconds);

  bool passed() const;
  const std::string& title() const { return title_; }
  const std::vector<Check>& checks() const { return checks_; }
  const Check* find(std::string_view name) const;

  nlohmann::ordered_json to_json() const;
  std::string to_text() const;

 private:
  std::string title_;
  std::vector<Check> checks_;
  std::vector<std::pair<std::string, double>> timings_;
};

}  // namespace brouwerlab
