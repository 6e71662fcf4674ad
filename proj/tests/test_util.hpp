#pragma once

#include <doctest.h>

#include <initializer_list>
#include <sstream>
#include <vector>

#include "heightfield.hpp"
#include "rng.hpp"

namespace terrafold::testutil {

inline Rat rat(const char* text) {
  auto r = parse_rational(text);
  REQUIRE(r.has_value());
  return *r;
}

// Integer-height grid with unit cells.
inline Heightfield hf_of(std::initializer_list<std::initializer_list<int>> rows) {
  Heightfield hf;
  for (auto& row : rows) {
    std::vector<Rat> r;
    for (int h : row) r.emplace_back(h);
    hf.cols = std::max(hf.cols, r.size());
    hf.heights.push_back(std::move(r));
  }
  hf.rows = hf.heights.size();
  hf.col_widths.assign(hf.cols, Rat(1));
  hf.row_depths.assign(hf.rows, Rat(1));
  return hf;
}

// Random heightfield, optionally with non-unit rational widths/depths and
// rational heights, for property sweeps.
inline Heightfield random_hf(SplitMix64& rng, size_t max_dim = 6, uint64_t max_h = 5,
                             bool rational_dims = false) {
  size_t m = rng.next_in(max_dim);
  size_t n = rng.next_in(max_dim);
  Heightfield hf;
  hf.rows = m;
  hf.cols = n;
  auto random_rat = [&]() { return Rat(static_cast<unsigned long>(rng.next_in(max_h)),
                                       static_cast<unsigned long>(rational_dims ? rng.next_in(3) : 1)); };
  for (size_t j = 0; j < n; ++j) {
    Rat w = rational_dims ? random_rat() : Rat(1);
    w.canonicalize();
    hf.col_widths.push_back(w);
  }
  for (size_t i = 0; i < m; ++i) {
    Rat d = rational_dims ? random_rat() : Rat(1);
    d.canonicalize();
    hf.row_depths.push_back(d);
  }
  hf.heights.resize(m);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < n; ++j) {
      Rat h = random_rat();
      h.canonicalize();
      hf.heights[i].push_back(h);
    }
  return hf;
}

}  // namespace terrafold::testutil

// doctest stringification for rationals and friends.
namespace doctest {
template <>
struct StringMaker<mpq_class> {
  static String convert(const mpq_class& v) {
    std::ostringstream os;
    os << v;
    return os.str().c_str();
  }
};
}  // namespace doctest
