#include "conelab/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace conelab {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
    ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
    --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_list(const std::string& value, int line) {
  std::vector<std::string> items;
  if (!value.empty() && value.back() == ',')
    throw ConfigError("trailing comma in list", line);
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty())
      throw ConfigError("empty list item", line);
    items.push_back(item);
  }
  if (items.empty())
    throw ConfigError("empty list", line);
  return items;
}

double to_double(const std::string& s, int line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size())
      throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("expected a number, got '" + s + "'", line);
  }
}

long long to_ll(const std::string& s, int line) {
  long long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw ConfigError("expected an integer, got '" + s + "'", line);
  return v;
}

}  // namespace

Config Config::parse_text(std::string_view text) {
  Config cfg;
  std::string section;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view raw =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos
                                                      : nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;

    std::string line(raw);
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    line = trim(line);
    if (line.empty())
      continue;

    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("malformed section header", line_no);
      section = trim(std::string_view(line).substr(1, line.size() - 2));
      if (section.empty())
        throw ConfigError("empty section name", line_no);
      if (!cfg.section_lines_.contains(section))
        cfg.section_lines_[section] = line_no;
      continue;
    }

    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("malformed line (expected key = value)", line_no);
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key.empty())
      throw ConfigError("missing key before '='", line_no);
    if (section.empty())
      throw ConfigError("key '" + key + "' outside any [section]", line_no);

    auto& sect = cfg.sections_[section];
    if (auto it = sect.find(key); it != sect.end())
      throw ConfigError("duplicate key '" + key + "' (lines " +
                            std::to_string(it->second.line) + " and " +
                            std::to_string(line_no) + ")",
                        line_no);
    sect[key] = Entry{value, line_no};
  }
  return cfg;
}

Config Config::parse_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is)
    throw ConfigError("cannot open config file " + path, 0);
  std::ostringstream ss;
  ss << is.rdbuf();
  return parse_text(ss.str());
}

bool Config::has(const std::string& section, const std::string& key) const {
  auto s = sections_.find(section);
  return s != sections_.end() && s->second.contains(key);
}

const Config::Entry& Config::entry(const std::string& section,
                                   const std::string& key) const {
  auto s = sections_.find(section);
  if (s == sections_.end() || !s->second.contains(key))
    throw ConfigError("missing required key '" + key + "' in [" + section + "]",
                      0);
  return s->second.at(key);
}

std::string Config::get_string(const std::string& section,
                               const std::string& key,
                               const std::string& fallback) const {
  return has(section, key) ? entry(section, key).value : fallback;
}

double Config::get_double(const std::string& section, const std::string& key,
                          double fallback) const {
  if (!has(section, key))
    return fallback;
  const Entry& e = entry(section, key);
  return to_double(e.value, e.line);
}

int Config::get_int(const std::string& section, const std::string& key,
                    int fallback) const {
  if (!has(section, key))
    return fallback;
  const Entry& e = entry(section, key);
  return static_cast<int>(to_ll(e.value, e.line));
}

std::vector<double> Config::get_double_list(const std::string& section,
                                            const std::string& key) const {
  const Entry& e = entry(section, key);
  std::vector<double> out;
  for (const auto& item : split_list(e.value, e.line))
    out.push_back(to_double(item, e.line));
  return out;
}

std::vector<int> Config::get_int_list(const std::string& section,
                                      const std::string& key) const {
  const Entry& e = entry(section, key);
  std::vector<int> out;
  for (const auto& item : split_list(e.value, e.line))
    out.push_back(static_cast<int>(to_ll(item, e.line)));
  return out;
}

std::vector<std::uint64_t> Config::get_u64_list(const std::string& section,
                                                const std::string& key) const {
  const Entry& e = entry(section, key);
  std::vector<std::uint64_t> out;
  for (const auto& item : split_list(e.value, e.line)) {
    const long long v = to_ll(item, e.line);
    if (v < 0)
      throw ConfigError("seed must be non-negative", e.line);
    out.push_back(static_cast<std::uint64_t>(v));
  }
  return out;
}

std::vector<std::string> Config::get_string_list(const std::string& section,
                                                 const std::string& key) const {
  const Entry& e = entry(section, key);
  return split_list(e.value, e.line);
}

void Config::check_known(
    const std::vector<std::string>& sections,
    const std::map<std::string, std::vector<std::string>>& allowed_keys) const {
  for (const auto& [name, entries] : sections_) {
    if (std::find(sections.begin(), sections.end(), name) == sections.end())
      throw ConfigError("unknown section [" + name + "]",
                        section_lines_.at(name));
    const auto& allowed = allowed_keys.at(name);
    for (const auto& [key, e] : entries)
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
        throw ConfigError("unknown key '" + key + "' in [" + name + "]",
                          e.line);
  }
}

SweepRunSpec parse_sweep_config(const Config& cfg) {
  cfg.check_known({"sweep"},
                  {{"sweep",
                    {"epsilon", "dims", "seeds", "noise", "tol", "max_iter",
                     "samples", "out", "format"}}});

  SweepRunSpec spec;
  auto positive = [](double v, const Config::Entry& e, const char* what) {
    if (!(v > 0))
      throw ConfigError(std::string(what) + " must be positive", e.line);
  };

  spec.sweep.epsilons = cfg.get_double_list("sweep", "epsilon");
  for (double e : spec.sweep.epsilons)
    positive(e, cfg.entry("sweep", "epsilon"), "epsilon");

  spec.sweep.dims = cfg.get_int_list("sweep", "dims");
  for (int d : spec.sweep.dims)
    if (d < 1)
      throw ConfigError("dims entries must be >= 1",
                        cfg.entry("sweep", "dims").line);

  spec.sweep.seeds = cfg.get_u64_list("sweep", "seeds");

  if (cfg.has("sweep", "noise")) {
    spec.sweep.noises.clear();
    for (const auto& n : cfg.get_string_list("sweep", "noise")) {
      if (n == "none") spec.sweep.noises.push_back(NoiseKind::none);
      else if (n == "constant_offset")
        spec.sweep.noises.push_back(NoiseKind::constant_offset);
      else if (n == "sine") spec.sweep.noises.push_back(NoiseKind::sine);
      else if (n == "seeded_hash")
        spec.sweep.noises.push_back(NoiseKind::seeded_hash);
      else
        throw ConfigError("unknown noise kind '" + n + "'",
                          cfg.entry("sweep", "noise").line);
    }
  } else {
    spec.sweep.noises = {NoiseKind::sine, NoiseKind::seeded_hash};
  }

  spec.sweep.tol = cfg.get_double("sweep", "tol", 1e-9);
  if (!(spec.sweep.tol > 0))
    throw ConfigError("tol must be positive", cfg.entry("sweep", "tol").line);

  spec.sweep.max_iter = cfg.get_int("sweep", "max_iter", 40);
  if (spec.sweep.max_iter < 0 || spec.sweep.max_iter > 40)
    throw ConfigError("max_iter must be in [0, 40]",
                      cfg.entry("sweep", "max_iter").line);

  const int samples = cfg.get_int("sweep", "samples", 48);
  if (samples < 1)
    throw ConfigError("samples must be >= 1",
                      cfg.entry("sweep", "samples").line);
  spec.sweep.n_samples = static_cast<std::size_t>(samples);

  spec.out = cfg.get_string("sweep", "out", "report.csv");
  spec.format = cfg.get_string("sweep", "format", "csv");
  if (spec.format != "csv" && spec.format != "jsonl")
    throw ConfigError("format must be csv or jsonl",
                      cfg.entry("sweep", "format").line);
  return spec;
}

}  // namespace conelab
