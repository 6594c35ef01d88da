// Minimal line-based config format: `[section]` headers, `key = value`
// lines, `#` comments, comma-separated lists. Duplicate keys, unknown keys
// and type/validation errors are all reported with line numbers.

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "conelab/lab.hpp"

namespace conelab {

struct ConfigError : std::runtime_error {
  int line;  // 1-based; 0 when not tied to a line
  ConfigError(const std::string& msg, int l)
      : std::runtime_error(l > 0 ? msg + " (line " + std::to_string(l) + ")"
                                 : msg),
        line(l) {}
};

class Config {
public:
  struct Entry {
    std::string value;
    int line = 0;
  };

  static Config parse_text(std::string_view text);
  static Config parse_file(const std::string& path);

  bool has(const std::string& section, const std::string& key) const;
  const Entry& entry(const std::string& section, const std::string& key) const;

  std::string get_string(const std::string& section, const std::string& key,
                         const std::string& fallback) const;
  double get_double(const std::string& section, const std::string& key,
                    double fallback) const;
  int get_int(const std::string& section, const std::string& key,
              int fallback) const;
  std::vector<double> get_double_list(const std::string& section,
                                      const std::string& key) const;
  std::vector<int> get_int_list(const std::string& section,
                                const std::string& key) const;
  std::vector<std::uint64_t> get_u64_list(const std::string& section,
                                          const std::string& key) const;
  std::vector<std::string> get_string_list(const std::string& section,
                                           const std::string& key) const;

  // Rejects keys outside the allowed set, and sections outside the given
  // list; both with the offending line number.
  void check_known(const std::vector<std::string>& sections,
                   const std::map<std::string, std::vector<std::string>>&
                       allowed_keys) const;

private:
  std::map<std::string, std::map<std::string, Entry>> sections_;
  std::map<std::string, int> section_lines_;
};

struct SweepRunSpec {
  SweepConfig sweep;
  std::string out = "report.csv";
  std::string format = "csv";
};

// Reads and validates the [sweep] section. Required keys: epsilon, dims,
// seeds. Optional: noise, tol, max_iter, samples, out, format.
SweepRunSpec parse_sweep_config(const Config& cfg);

}  // namespace conelab
