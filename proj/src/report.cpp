#include "rspin/report.hpp"

#include <algorithm>
#include <sstream>

#include "rspin/common.hpp"

namespace rspin::report {

namespace {

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  std::replace(s.begin(), s.end(), '\r', ' ');
  return s;
}

void check_key(const std::string& key) {
  if (key.empty() || key == "warning" || key == "title" ||
      key.find_first_of("= \t\n") != std::string::npos)
    fail(ErrorKind::Internal, "invalid report key '" + key + "'");
}

}  // namespace

void ReportDocument::set(const std::string& key, const std::string& value, const std::string& label) {
  check_key(key);
  Entry e{key, label.empty() ? key : one_line(label), one_line(value)};
  auto it = std::find_if(entries_.begin(), entries_.end(), [&](const Entry& x) { return x.key == key; });
  if (it != entries_.end()) *it = std::move(e);
  else entries_.push_back(std::move(e));
}

void ReportDocument::warn(const std::string& message) { warnings_.push_back(one_line(message)); }

std::optional<std::string> ReportDocument::get(const std::string& key) const {
  for (const auto& e : entries_)
    if (e.key == key) return e.value;
  return std::nullopt;
}

std::string ReportDocument::render_machine() const {
  std::ostringstream os;
  if (!title_.empty()) os << "title=" << title_ << '\n';
  for (const auto& e : entries_) os << e.key << '=' << e.value << '\n';
  for (const auto& w : warnings_) os << "warning=" << w << '\n';
  return os.str();
}

std::string ReportDocument::render_human() const {
  // labels may contain multibyte characters; pad by code points
  auto width_of = [](const std::string& s) {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
  };
  std::ostringstream os;
  if (!title_.empty()) os << title_ << '\n';
  std::size_t width = 0;
  for (const auto& e : entries_) width = std::max(width, width_of(e.label));
  for (const auto& e : entries_)
    os << "  " << e.label << std::string(width - width_of(e.label), ' ') << " = " << e.value << '\n';
  for (const auto& w : warnings_) os << "warning: " << w << '\n';
  return os.str();
}

ReportDocument ReportDocument::parse_machine(const std::string& text) {
  ReportDocument doc;
  std::istringstream is(text);
  std::string line;
  int n = 0;
  while (std::getline(is, line)) {
    ++n;
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos || eq == 0)
      fail(ErrorKind::Parse, "line " + std::to_string(n) + ": expected key=value");
    std::string key = line.substr(0, eq), value = line.substr(eq + 1);
    if (key == "title") doc.title_ = value;
    else if (key == "warning") doc.warn(value);
    else doc.set(key, value);
  }
  return doc;
}

}  // namespace rspin::report
