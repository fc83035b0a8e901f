#pragma once

// Key-value report format shared by corpus statistics and evaluation reports:
//
//   schema=1
//   kind=<report kind>
//   <key>=<value>
//   ...
//
// One pair per line, keys in insertion order, no spaces around '='. Counts are
// decimal integers; percentages carry exactly two decimals.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace arud {

class KeyValueReport {
 public:
  explicit KeyValueReport(std::string kind);

  void add(const std::string& key, const std::string& value);
  void add(const std::string& key, std::uint64_t value);
  void add_percent(const std::string& key, double value);

  std::string str() const;
  const std::vector<std::pair<std::string, std::string>>& entries() const noexcept {
    return entries_;
  }

  /// Throws Error{MalformedRecord} on lines without '=' or a missing schema line.
  static std::map<std::string, std::string> parse(const std::string& text);

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

std::string format_percent(double value);

}  // namespace arud
