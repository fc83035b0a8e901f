#include "arud/report.hpp"

#include <cstdio>
#include <sstream>

#include "arud/error.hpp"

namespace arud {

std::string format_percent(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", value);
  return buf;
}

KeyValueReport::KeyValueReport(std::string kind) {
  entries_.emplace_back("schema", "1");
  entries_.emplace_back("kind", std::move(kind));
}

void KeyValueReport::add(const std::string& key, const std::string& value) {
  entries_.emplace_back(key, value);
}

void KeyValueReport::add(const std::string& key, std::uint64_t value) {
  entries_.emplace_back(key, std::to_string(value));
}

void KeyValueReport::add_percent(const std::string& key, double value) {
  entries_.emplace_back(key, format_percent(value));
}

std::string KeyValueReport::str() const {
  std::string out;
  for (const auto& [k, v] : entries_) out += k + "=" + v + "\n";
  return out;
}

std::map<std::string, std::string> KeyValueReport::parse(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error(ErrorCode::MalformedRecord, "report line " + std::to_string(number));
    }
    out[line.substr(0, eq)] = line.substr(eq + 1);
  }
  if (out.find("schema") == out.end()) throw Error(ErrorCode::MalformedRecord, "no schema line");
  return out;
}

}  // namespace arud
