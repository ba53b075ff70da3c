#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "doctest.h"
#include "g2oct/config.hpp"

using g2oct::config::Config;
using g2oct::config::ConfigError;

TEST_CASE("sections, comments and typed access") {
  const Config c = Config::from_string(
      "# comment\n"
      "top = 1\n"
      "[solve]\n"
      "nx = 65\n"
      "tol = 1e-10\n"
      "b = 1 0, 0.3 0.1\n"
      "serial = true\n"
      "; another comment\n"
      "[out]\n"
      "dir = results\n");
  CHECK(c.get_int("top") == 1);
  CHECK(c.get_int("solve.nx") == 65);
  CHECK(c.get_double("solve.tol") == doctest::Approx(1e-10));
  CHECK(c.get_bool("solve.serial", false));
  CHECK(c.get_string("out.dir") == "results");
  const auto b = c.get_complex_list("solve.b");
  REQUIRE(b.size() == 2);
  CHECK(b[0] == std::complex<double>(1.0, 0.0));
  CHECK(b[1] == std::complex<double>(0.3, 0.1));
  CHECK(c.keys().size() == 6);
  CHECK(c.line_of("solve.nx") == 4);
}

TEST_CASE("defaults and presence") {
  const Config c = Config::from_string("a = 2\n");
  CHECK(c.has("a"));
  CHECK_FALSE(c.has("b"));
  CHECK(c.get_int("b", 7) == 7);
  CHECK(c.get_double("b", 0.5) == 0.5);
  CHECK(c.get_string("b", "x") == "x");
  CHECK(c.get_bool("b", true));
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(Config::from_string("a = 1\nnonsense\n"),
                       doctest::Contains(":2:"), ConfigError);
  CHECK_THROWS_WITH_AS(Config::from_string("[broken\n"),
                       doctest::Contains(":1:"), ConfigError);
  CHECK_THROWS_WITH_AS(Config::from_string("[s]\nk = 1\nk = 2\n"),
                       doctest::Contains("duplicate"), ConfigError);
  CHECK_THROWS_WITH_AS(Config::from_string(" = 1\n"),
                       doctest::Contains("empty key"), ConfigError);
}

TEST_CASE("typed-access errors name the key and its line") {
  const Config c = Config::from_string(
      "n = 12x\nt = hello\nb = maybe\ncoef = 1 2 3\n", "demo.cfg");
  CHECK_THROWS_WITH_AS(c.get_int("n"), doctest::Contains("demo.cfg:1"),
                       ConfigError);
  CHECK_THROWS_WITH_AS(c.get_double("t"), doctest::Contains("'t'"),
                       ConfigError);
  CHECK_THROWS_WITH_AS(c.get_bool("b", false), doctest::Contains("boolean"),
                       ConfigError);
  CHECK_THROWS_WITH_AS(c.get_complex_list("coef"),
                       doctest::Contains("real/imag pairs"), ConfigError);
  CHECK_THROWS_AS(c.get_string("missing"), ConfigError);
}

TEST_CASE("file round trip") {
  const std::string path = "test_config_roundtrip.cfg";
  {
    std::FILE* f = std::fopen(path.c_str(), "w");
    REQUIRE(f);
    std::fputs("[s]\nk = v\n", f);
    std::fclose(f);
  }
  const Config c = Config::from_file(path);
  CHECK(c.get_string("s.k") == "v");
  std::remove(path.c_str());
  CHECK_THROWS_AS(Config::from_file(path), ConfigError);
}
