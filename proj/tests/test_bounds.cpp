#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "igup/bounds.hpp"

using namespace igup;

TEST_CASE("shipped dataset: 17 rows in five parts") {
  auto records = load_bounds();
  CHECK(records.size() == 17);
  int max_part = 0;
  for (const auto& r : records) max_part = std::max(max_part, r.part);
  CHECK(max_part == 5);
}

TEST_CASE("translate: worked examples") {
  BoundRecord sapphire{1, "Sapphire split-bar mechanical resonator", "bushev", "KMM1D-beta0",
                       5.2e6, false, {}};
  auto d = translate(sapphire);
  CHECK(d.at("a2+b0") == doctest::Approx(5.2e6));
  CHECK(d.at("alpha2") == doctest::Approx(5.2e6 / 3));  // prints as 1.7e6

  BoundRecord cold_atom{3, "Cold atom recoil experiment*", "gao-zhan", "ADV-alpha0-1d", 2.4e14,
                        false, {}};
  auto c = translate(cold_atom);
  CHECK(c.at("alpha1") == doctest::Approx(2.4e14));
  CHECK(c.at("a1+b-1") == doctest::Approx(4.8e14));
  CHECK(c.at("a2+b0") == doctest::Approx(2.304e29));  // prints as 2.3e29
  CHECK(c.at("alpha2") == doctest::Approx(1.152e29)); // the table prints 1.2e31 (flagged)

  BoundRecord light{4, "Light deflection by the Sun", "scardigli-casadio", "gravitational-beta",
                    1.3e78, false, {}};
  CHECK(translate(light).at("alpha2") == doctest::Approx(4.3333e77).epsilon(1e-3));

  CHECK_THROWS_AS(translate(BoundRecord{1, "x", "y", "no-such-convention", 1.0, false, {}}),
                  error);
  CHECK_THROWS_AS(translate(BoundRecord{1, "x", "y", "KMM1D-beta0", -1.0, false, {}}), error);
}

TEST_CASE("every printed entry re-derives, except exactly the two flagged rows") {
  auto records = load_bounds();
  auto flags = verify_dataset(records);
  REQUIRE(flags.size() == 2);

  CHECK(flags[0].source == "Cold atom recoil experiment*");
  CHECK(flags[0].column == "alpha2");
  CHECK(flags[0].printed == "1.2e31");
  CHECK(flags[0].computed == doctest::Approx(1.152e29));

  CHECK(flags[1].source == "Torsion pendulum");
  CHECK(flags[1].column == "a2+b0");
  CHECK(flags[1].printed == "~1e-51");
  CHECK(flags[1].computed == doctest::Approx(1e51));
}

TEST_CASE("translate is monotone in the input bound") {
  for (const char* conv : {"KMM1D-beta0", "Kempf-beta0", "Kempf-commutative-beta0-3d",
                           "Kempf-commutative-beta0-1d", "ADV-alpha0-3d", "ADV-alpha0-1d",
                           "gravitational-beta", "SME-beta"}) {
    BoundRecord lo{1, "s", "r", conv, 10.0, false, {}};
    BoundRecord hi{1, "s", "r", conv, 1000.0, false, {}};
    auto dlo = translate(lo);
    auto dhi = translate(hi);
    for (const auto& [col, v] : dlo) {
      CAPTURE(conv);
      CAPTURE(col);
      CHECK(v <= dhi.at(col));
    }
  }
}

TEST_CASE("round trip: KMM1D alpha2 bound times 3 equals the a2+b0 bound") {
  for (double v : {5.2e6, 3e7, 3e33, 5e70}) {
    auto d = translate(BoundRecord{1, "s", "r", "KMM1D-beta0", v, false, {}});
    CHECK(3 * d.at("alpha2") == doctest::Approx(d.at("a2+b0")));
  }
}

TEST_CASE("magnitude comparison at exponent level") {
  CHECK(matches_printed(2.0e34, "~1e34"));
  CHECK(matches_printed(9.9e34, "~1e34"));
  CHECK_FALSE(matches_printed(2.0e35, "~1e34"));
  CHECK_FALSE(matches_printed(1e51, "~1e-51"));
  // Two-significant-figure entries.
  CHECK(matches_printed(5.2e6, "5.2e6"));
  CHECK(matches_printed(5.2e6 / 3, "1.7e6"));
  CHECK(matches_printed(1.6667e70, "2e70"));  // 1 printed digit
  CHECK_FALSE(matches_printed(1.152e29, "1.2e31"));
  CHECK(matches_printed(2.23e34, "2.23e34"));
  CHECK_FALSE(matches_printed(2.26e34, "2.23e34"));
}

TEST_CASE("render_table") {
  auto records = load_bounds();
  std::string table = render_table(records);
  CHECK(table.find("Sapphire split-bar mechanical resonator") != std::string::npos);
  CHECK(table.find("1.7e6") != std::string::npos);
  // Exactly two flags, neither silently corrected.
  std::size_t count = 0;
  for (std::size_t pos = table.find("FLAG "); pos != std::string::npos;
       pos = table.find("FLAG ", pos + 1))
    ++count;
  CHECK(count == 2);
  CHECK(table.find("published 1.2e31") != std::string::npos);
  CHECK(table.find("published ~1e-51") != std::string::npos);

  // Empty input: header-only table.
  std::string empty = render_table({});
  CHECK(empty.find("Source") != std::string::npos);
  CHECK(empty.find("FLAG") == std::string::npos);

  // Charmonium row: alpha2 ~ 2e34 rendered at magnitude ~1e34.
  CHECK(table.find("~1e34") != std::string::npos);
}

TEST_CASE("rendering is deterministic") {
  auto records = load_bounds();
  CHECK(render_table(records) == render_table(records));
}
