#include "g2oct/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace g2oct::config {

namespace {

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

Config Config::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_string(buf.str(), path);
}

Config Config::from_string(const std::string& text, const std::string& origin) {
  Config cfg;
  cfg.origin_ = origin;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    if (t.front() == '[') {
      if (t.back() != ']')
        throw ConfigError(origin + ":" + std::to_string(lineno) +
                          ": unterminated section header: " + t);
      section = trim(t.substr(1, t.size() - 2));
      if (section.empty())
        throw ConfigError(origin + ":" + std::to_string(lineno) +
                          ": empty section name");
      continue;
    }
    const size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError(origin + ":" + std::to_string(lineno) +
                        ": expected key = value, got: " + t);
    const std::string key = trim(t.substr(0, eq));
    if (key.empty())
      throw ConfigError(origin + ":" + std::to_string(lineno) +
                        ": empty key");
    const std::string full = section.empty() ? key : section + "." + key;
    if (cfg.values_.count(full))
      throw ConfigError(origin + ":" + std::to_string(lineno) +
                        ": duplicate key: " + full + " (first at line " +
                        std::to_string(cfg.lines_.at(full)) + ")");
    cfg.values_[full] = trim(t.substr(eq + 1));
    cfg.lines_[full] = lineno;
    cfg.order_.push_back(full);
  }
  return cfg;
}

bool Config::has(const std::string& key) const { return values_.count(key) > 0; }

int Config::line_of(const std::string& key) const {
  auto it = lines_.find(key);
  return it == lines_.end() ? -1 : it->second;
}

void Config::fail(const std::string& key, const std::string& what) const {
  const int ln = line_of(key);
  std::string where = origin_;
  if (ln > 0) where += ":" + std::to_string(ln);
  throw ConfigError(where + ": key '" + key + "': " + what);
}

std::string Config::get_string(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) fail(key, "missing");
  return it->second;
}

std::string Config::get_string(const std::string& key,
                               const std::string& dflt) const {
  auto it = values_.find(key);
  return it == values_.end() ? dflt : it->second;
}

long Config::get_int(const std::string& key) const {
  const std::string v = get_string(key);
  size_t pos = 0;
  long out = 0;
  try {
    out = std::stol(v, &pos);
  } catch (const std::exception&) {
    fail(key, "not an integer: '" + v + "'");
  }
  if (pos != v.size()) fail(key, "trailing text after integer: '" + v + "'");
  return out;
}

long Config::get_int(const std::string& key, long dflt) const {
  return has(key) ? get_int(key) : dflt;
}

double Config::get_double(const std::string& key) const {
  const std::string v = get_string(key);
  size_t pos = 0;
  double out = 0;
  try {
    out = std::stod(v, &pos);
  } catch (const std::exception&) {
    fail(key, "not a number: '" + v + "'");
  }
  if (pos != v.size()) fail(key, "trailing text after number: '" + v + "'");
  return out;
}

double Config::get_double(const std::string& key, double dflt) const {
  return has(key) ? get_double(key) : dflt;
}

bool Config::get_bool(const std::string& key, bool dflt) const {
  if (!has(key)) return dflt;
  const std::string v = get_string(key);
  if (v == "true" || v == "yes" || v == "on" || v == "1") return true;
  if (v == "false" || v == "no" || v == "off" || v == "0") return false;
  fail(key, "not a boolean: '" + v + "'");
}

std::vector<std::complex<double>> Config::get_complex_list(
    const std::string& key) const {
  std::string v = get_string(key);
  for (char& c : v)
    if (c == ',') c = ' ';
  std::istringstream in(v);
  std::vector<double> parts;
  std::string tok;
  while (in >> tok) {
    size_t pos = 0;
    double x = 0;
    try {
      x = std::stod(tok, &pos);
    } catch (const std::exception&) {
      fail(key, "not a number in list: '" + tok + "'");
    }
    if (pos != tok.size()) fail(key, "malformed number in list: '" + tok + "'");
    parts.push_back(x);
  }
  if (parts.empty()) fail(key, "empty coefficient list");
  if (parts.size() % 2 != 0)
    fail(key, "coefficients are real/imag pairs; got an odd count of " +
                  std::to_string(parts.size()) + " numbers");
  std::vector<std::complex<double>> out;
  for (size_t i = 0; i < parts.size(); i += 2)
    out.emplace_back(parts[i], parts[i + 1]);
  return out;
}

}  // namespace g2oct::config
