#pragma once

// Ordered key/value documents emitted by the CLI. Machine form is one
// `key=value` line per entry plus `warning=...` lines; human form prints the
// same values under display labels.

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rspin::report {

class ReportDocument {
 public:
  struct Entry {
    std::string key;
    std::string label;  // human display name
    std::string value;
    bool operator==(const Entry&) const = default;
  };

  ReportDocument() = default;
  explicit ReportDocument(std::string title) : title_(std::move(title)) {}

  /// Replaces an existing key in place, otherwise appends. Newlines in the
  /// value become spaces; keys must be nonempty and free of '=' and spaces.
  void set(const std::string& key, const std::string& value, const std::string& label = {});
  void warn(const std::string& message);

  const std::string& title() const { return title_; }
  const std::vector<Entry>& entries() const { return entries_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  std::optional<std::string> get(const std::string& key) const;

  std::string render_machine() const;
  std::string render_human() const;
  std::string render(bool machine) const { return machine ? render_machine() : render_human(); }

  /// Inverse of render_machine; labels come back equal to keys.
  static ReportDocument parse_machine(const std::string& text);

 private:
  std::string title_;
  std::vector<Entry> entries_;
  std::vector<std::string> warnings_;
};

}  // namespace rspin::report
