// Flat key = value configuration files with [section] headers.  Keys are
// addressed as "section.key" ("" section for keys before any header).
// Parse errors carry the offending line number; typed accessors report the
// full key and the malformed text.

#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace g2oct::config {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Config {
 public:
  static Config from_file(const std::string& path);
  static Config from_string(const std::string& text,
                            const std::string& origin = "<string>");

  bool has(const std::string& key) const;
  // Accessors throw ConfigError when the key is absent (no-default overloads)
  // or the value does not parse as the requested type.
  std::string get_string(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& dflt) const;
  long get_int(const std::string& key) const;
  long get_int(const std::string& key, long dflt) const;
  double get_double(const std::string& key) const;
  double get_double(const std::string& key, double dflt) const;
  bool get_bool(const std::string& key, bool dflt) const;
  // Whitespace- or comma-separated list of real/imag pairs:
  // "1 0  0.3 0.1" -> {1+0i, 0.3+0.1i}.
  std::vector<std::complex<double>> get_complex_list(
      const std::string& key) const;

  // Keys in file order (for documentation and round-trip listings).
  const std::vector<std::string>& keys() const { return order_; }
  int line_of(const std::string& key) const;

 private:
  std::string origin_;
  std::map<std::string, std::string> values_;
  std::map<std::string, int> lines_;
  std::vector<std::string> order_;

  [[noreturn]] void fail(const std::string& key, const std::string& what) const;
};

}  // namespace g2oct::config
