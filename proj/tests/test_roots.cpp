#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "tcurv/roots.hpp"

using namespace tcurv;

TEST_SUITE("roots") {

TEST_CASE("small dimensions") {
  CHECK(characteristic_roots(2).m() == 0);

  const RootSet r3 = characteristic_roots(3);
  REQUIRE(r3.m() == 1);
  CHECK(r3.pairs[0].alpha == -0.5);
  CHECK(r3.pairs[0].beta == doctest::Approx(0.8660254037844386).epsilon(1e-15));

  const RootSet r4 = characteristic_roots(4);
  REQUIRE(r4.m() == 1);
  CHECK(r4.pairs[0].alpha == 0.0);
  CHECK(r4.pairs[0].beta == 1.0);

  const RootSet r5 = characteristic_roots(5);
  REQUIRE(r5.m() == 2);
  CHECK(r5.pairs[0].alpha == doctest::Approx(0.309016994374947).epsilon(1e-14));
  CHECK(r5.pairs[0].beta == doctest::Approx(0.951056516295154).epsilon(1e-14));
  CHECK(r5.pairs[1].alpha == doctest::Approx(-0.809016994374947).epsilon(1e-14));
  CHECK(r5.pairs[1].beta == doctest::Approx(0.587785252292473).epsilon(1e-14));
}

TEST_CASE("n = 7 last alpha") {
  const RootSet r = characteristic_roots(7);
  CHECK(r.pairs.back().alpha == doctest::Approx(-0.900968867902419).epsilon(1e-14));
  const ValidationReport rep = verify_root_structure(r);
  CHECK(rep.all_passed());
  CHECK(rep.find("roots.odd_last_alpha_bound")->passed);
}

TEST_CASE("unit modulus residual is tiny for n = 5") {
  const ValidationReport rep = verify_root_structure(characteristic_roots(5));
  REQUIRE(rep.all_passed());
  CHECK(rep.find("roots.unit_modulus")->residual < 1e-15);
}

TEST_CASE("structure holds for every n in [2, 64]") {
  for (int n = 2; n <= 64; ++n) {
    CAPTURE(n);
    const RootSet r = characteristic_roots(n);
    CHECK(r.m() == expected_pair_count(n));
    const ValidationReport rep = verify_root_structure(r);
    CHECK_MESSAGE(rep.all_passed(), rep.to_text());
    for (std::size_t i = 0; i < r.pairs.size(); ++i) {
      CHECK(r.pairs[i].index == static_cast<int>(i) + 1);
      CHECK(std::hypot(r.pairs[i].alpha, r.pairs[i].beta) ==
            doctest::Approx(1.0).epsilon(1e-15));
    }
  }
}

TEST_CASE("exact table angles") {
  const UnitPoint sixth = unit_root(1, 6);
  CHECK(sixth.cos == 0.5);
  const UnitPoint eighth = unit_root(1, 8);
  CHECK(eighth.cos == eighth.sin);
  const UnitPoint third = unit_root(2, 3);
  CHECK(third.cos == -0.5);
  CHECK(third.sin < 0.0);
}

TEST_CASE("constructed violations are reported") {
  RootSet bad = characteristic_roots(5);
  bad.pairs[0].alpha = 1.5;
  const ValidationReport rep = verify_root_structure(bad);
  CHECK_FALSE(rep.all_passed());
  CHECK_FALSE(rep.find("roots.unit_modulus")->passed);
  CHECK_FALSE(rep.find("roots.alpha_range")->passed);
}

TEST_CASE("rejects n < 2") {
  CHECK_THROWS_AS(characteristic_roots(1), std::invalid_argument);
  CHECK_THROWS_AS(characteristic_roots(-3), std::invalid_argument);
}

TEST_CASE("table format") {
  const std::string table = format_root_table(characteristic_roots(3));
  CHECK(table.find("1 -0.5 0.8660254037844386") != std::string::npos);
}

}
