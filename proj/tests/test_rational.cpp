#include <doctest.h>

#include "rational.hpp"
#include "test_util.hpp"

using namespace terrafold;
using terrafold::testutil::rat;

TEST_CASE("parse_rational accepts integers, fractions and decimals") {
  CHECK(*parse_rational("2") == Rat(2));
  CHECK(*parse_rational("-7") == Rat(-7));
  CHECK(*parse_rational("3/4") == Rat(3, 4));
  CHECK(*parse_rational("6/8") == Rat(3, 4));
  CHECK(*parse_rational("-6/8") == Rat(-3, 4));
  CHECK(*parse_rational("2.5") == Rat(5, 2));
  CHECK(*parse_rational("-0.125") == Rat(-1, 8));
  CHECK(*parse_rational("0.1") == Rat(1, 10));
  CHECK(*parse_rational("577/1000") == Rat(577, 1000));
}

TEST_CASE("parse_rational rejects malformed input") {
  for (const char* bad : {"", "abc", "1.2.3", "1/", "/2", "1/0", "2.", ".", "--1", "1e3",
                          " 1", "1 ", "+1", "1/-0"}) {
    CAPTURE(bad);
    CHECK_FALSE(parse_rational(bad).has_value());
  }
}

TEST_CASE("to_string is canonical and round-trips") {
  CHECK(to_string(Rat(10)) == "10");
  CHECK(to_string(rat("6/8")) == "3/4");
  CHECK(to_string(rat("-6/8")) == "-3/4");
  CHECK(to_string(Rat(0)) == "0");

  SplitMix64 rng(42);
  for (int k = 0; k < 200; ++k) {
    Rat r(static_cast<long>(rng.next()) % 1000, static_cast<long>(rng.next_in(999)));
    r.canonicalize();
    CHECK(*parse_rational(to_string(r)) == r);
  }
}

TEST_CASE("to_decimal renders terminating and truncated expansions") {
  CHECK(to_decimal(Rat(5, 2)) == "2.5");
  CHECK(to_decimal(Rat(-5, 2)) == "-2.5");
  CHECK(to_decimal(Rat(1, 3)) == "0.333333");
  CHECK(to_decimal(Rat(3)) == "3");
  CHECK(to_decimal(Rat(0)) == "0");
  CHECK(to_decimal(Rat(1, 8), 2) == "0.12");
}
