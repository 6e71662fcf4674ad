#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace terrafold {

// A validated digital elevation model: an m x n grid of strictly positive
// cell-top heights, with per-column widths (x extents) and per-row depths
// (y extents). Row i runs along y, column j along x; heights[i][j] is the
// top of cell (i, j) above the z = 0 base.
struct Heightfield {
  size_t rows = 0;  // m
  size_t cols = 0;  // n
  std::vector<Rat> col_widths;              // n entries, all > 0
  std::vector<Rat> row_depths;              // m entries, all > 0
  std::vector<std::vector<Rat>> heights;    // m rows of n entries, all > 0

  const Rat& height(size_t i, size_t j) const { return heights[i][j]; }

  // Cumulative cell boundaries: col_edges()[j] is the x of column j's left
  // edge, col_edges()[n] the total width. Likewise row_edges() along y.
  std::vector<Rat> col_edges() const;
  std::vector<Rat> row_edges() const;

  Rat total_width() const;
  Rat total_depth() const;
  Rat base_area() const { return total_width() * total_depth(); }

  bool operator==(const Heightfield& o) const;
};

enum class HeightfieldFormat { Csv, Json };

// CSV: one row per line, comma-separated heights, each "p", "p/q" or a
// decimal. Lines starting with '#' are directives or comments:
//   #widths: w1,...,wn
//   #depths: d1,...,dm
// JSON: {"heights": [[...]], "col_widths": [...]?, "row_depths": [...]?}
// with entries as exact strings or integer numbers.
//
// Throws ParseError: SyntaxError (unparsable number, with line/column for
// CSV), MalformedGrid (ragged rows or wrong-sized vectors),
// NonpositiveDimension, EmptyGrid.
Heightfield parse_heightfield(std::string_view text, HeightfieldFormat format);

// Canonical serializations; parse(to_csv(h)) == h and parse(to_json(h)) == h
// exactly, and equal heightfields serialize to identical bytes.
std::string to_csv(const Heightfield& hf);
std::string to_json(const Heightfield& hf);

// Random terrain with unit cells and integer heights uniform in
// [1, max_height], drawn row-major from SplitMix64(seed) with rejection
// sampling (see rng.hpp). Identical parameters give identical results.
Heightfield generate_heightfield(size_t rows, size_t cols, uint64_t max_height, uint64_t seed);

}  // namespace terrafold
