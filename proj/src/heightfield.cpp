#include "heightfield.hpp"

#include <json.hpp>

#include "rng.hpp"

namespace terrafold {

std::vector<Rat> Heightfield::col_edges() const {
  std::vector<Rat> xs(cols + 1);
  xs[0] = 0;
  for (size_t j = 0; j < cols; ++j) xs[j + 1] = xs[j] + col_widths[j];
  return xs;
}

std::vector<Rat> Heightfield::row_edges() const {
  std::vector<Rat> ys(rows + 1);
  ys[0] = 0;
  for (size_t i = 0; i < rows; ++i) ys[i + 1] = ys[i] + row_depths[i];
  return ys;
}

Rat Heightfield::total_width() const {
  Rat w = 0;
  for (const Rat& c : col_widths) w += c;
  return w;
}

Rat Heightfield::total_depth() const {
  Rat d = 0;
  for (const Rat& r : row_depths) d += r;
  return d;
}

bool Heightfield::operator==(const Heightfield& o) const {
  return rows == o.rows && cols == o.cols && col_widths == o.col_widths &&
         row_depths == o.row_depths && heights == o.heights;
}

namespace {

void validate(Heightfield& hf) {
  if (hf.rows == 0 || hf.cols == 0 || hf.heights.empty())
    throw ParseError(ErrorCode::EmptyGrid, "heightfield has no cells");
  for (size_t i = 0; i < hf.rows; ++i) {
    if (hf.heights[i].size() != hf.cols)
      throw ParseError(ErrorCode::MalformedGrid,
                       "row " + std::to_string(i) + " has " +
                           std::to_string(hf.heights[i].size()) + " entries, expected " +
                           std::to_string(hf.cols));
    for (size_t j = 0; j < hf.cols; ++j)
      if (hf.heights[i][j] <= 0)
        throw ParseError(ErrorCode::NonpositiveDimension,
                         "height at row " + std::to_string(i) + ", col " + std::to_string(j) +
                             " must be > 0");
  }
  if (hf.col_widths.empty()) hf.col_widths.assign(hf.cols, Rat(1));
  if (hf.row_depths.empty()) hf.row_depths.assign(hf.rows, Rat(1));
  if (hf.col_widths.size() != hf.cols)
    throw ParseError(ErrorCode::MalformedGrid, "expected " + std::to_string(hf.cols) +
                                                   " column widths, got " +
                                                   std::to_string(hf.col_widths.size()));
  if (hf.row_depths.size() != hf.rows)
    throw ParseError(ErrorCode::MalformedGrid, "expected " + std::to_string(hf.rows) +
                                                   " row depths, got " +
                                                   std::to_string(hf.row_depths.size()));
  for (const Rat& w : hf.col_widths)
    if (w <= 0) throw ParseError(ErrorCode::NonpositiveDimension, "column width must be > 0");
  for (const Rat& d : hf.row_depths)
    if (d <= 0) throw ParseError(ErrorCode::NonpositiveDimension, "row depth must be > 0");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Comma-separated rationals; `line` is 1-based for error reporting, and the
// column reported is the 1-based character position of the offending field.
std::vector<Rat> parse_rational_list(std::string_view body, int line, size_t col_base) {
  std::vector<Rat> out;
  size_t pos = 0;
  while (true) {
    size_t comma = body.find(',', pos);
    std::string_view field =
        comma == std::string_view::npos ? body.substr(pos) : body.substr(pos, comma - pos);
    std::string_view value = trim(field);
    size_t lead = value.empty() ? 0 : static_cast<size_t>(value.data() - field.data());
    auto r = parse_rational(value);
    if (!r)
      throw ParseError(ErrorCode::SyntaxError,
                       "unparsable number '" + std::string(value) + "'", line,
                       static_cast<int>(col_base + pos + lead + 1));
    out.push_back(*r);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

Heightfield parse_csv(std::string_view text) {
  Heightfield hf;
  std::vector<Rat> widths, depths;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view raw =
        nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
    ++line_no;
    std::string_view line = trim(raw);
    if (!line.empty()) {
      if (line.front() == '#') {
        size_t off = static_cast<size_t>(line.data() - raw.data());
        if (line.starts_with("#widths:"))
          widths = parse_rational_list(line.substr(8), line_no, off + 8);
        else if (line.starts_with("#depths:"))
          depths = parse_rational_list(line.substr(8), line_no, off + 8);
        // other '#' lines are comments
      } else {
        size_t off = static_cast<size_t>(line.data() - raw.data());
        auto row = parse_rational_list(line, line_no, off);
        if (hf.heights.empty()) hf.cols = row.size();
        hf.heights.push_back(std::move(row));
      }
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  hf.rows = hf.heights.size();
  hf.col_widths = std::move(widths);
  hf.row_depths = std::move(depths);
  // Normalize cols to the widest row so validate() reports ragged rows.
  for (const auto& row : hf.heights) hf.cols = std::max(hf.cols, row.size());
  validate(hf);
  return hf;
}

Rat json_rational(const nlohmann::json& v, const std::string& where) {
  if (v.is_string()) {
    auto r = parse_rational(v.get<std::string>());
    if (!r)
      throw ParseError(ErrorCode::SyntaxError,
                       "unparsable number '" + v.get<std::string>() + "' at " + where);
    return *r;
  }
  if (v.is_number_integer()) return Rat(static_cast<long>(v.get<int64_t>()));
  throw ParseError(ErrorCode::SyntaxError,
                   "expected an exact number (string \"p/q\" or integer) at " + where);
}

Heightfield parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(ErrorCode::SyntaxError, e.what());
  }
  if (!doc.is_object() || !doc.contains("heights") || !doc["heights"].is_array())
    throw ParseError(ErrorCode::MalformedGrid, "expected an object with a \"heights\" array");

  Heightfield hf;
  size_t i = 0;
  for (const auto& row : doc["heights"]) {
    if (!row.is_array())
      throw ParseError(ErrorCode::MalformedGrid, "heights[" + std::to_string(i) + "] is not an array");
    std::vector<Rat> r;
    size_t j = 0;
    for (const auto& v : row) {
      r.push_back(json_rational(v, "heights[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
      ++j;
    }
    hf.cols = std::max(hf.cols, r.size());
    hf.heights.push_back(std::move(r));
    ++i;
  }
  hf.rows = hf.heights.size();
  if (doc.contains("col_widths")) {
    size_t j = 0;
    for (const auto& v : doc["col_widths"])
      hf.col_widths.push_back(json_rational(v, "col_widths[" + std::to_string(j++) + "]"));
  }
  if (doc.contains("row_depths")) {
    size_t j = 0;
    for (const auto& v : doc["row_depths"])
      hf.row_depths.push_back(json_rational(v, "row_depths[" + std::to_string(j++) + "]"));
  }
  validate(hf);
  return hf;
}

bool all_ones(const std::vector<Rat>& v) {
  for (const Rat& r : v)
    if (r != 1) return false;
  return true;
}

}  // namespace

Heightfield parse_heightfield(std::string_view text, HeightfieldFormat format) {
  return format == HeightfieldFormat::Csv ? parse_csv(text) : parse_json(text);
}

std::string to_csv(const Heightfield& hf) {
  std::string out;
  if (!all_ones(hf.col_widths)) {
    out += "#widths: ";
    for (size_t j = 0; j < hf.cols; ++j) {
      if (j) out += ",";
      out += to_string(hf.col_widths[j]);
    }
    out += "\n";
  }
  if (!all_ones(hf.row_depths)) {
    out += "#depths: ";
    for (size_t i = 0; i < hf.rows; ++i) {
      if (i) out += ",";
      out += to_string(hf.row_depths[i]);
    }
    out += "\n";
  }
  for (size_t i = 0; i < hf.rows; ++i) {
    for (size_t j = 0; j < hf.cols; ++j) {
      if (j) out += ",";
      out += to_string(hf.heights[i][j]);
    }
    out += "\n";
  }
  return out;
}

std::string to_json(const Heightfield& hf) {
  nlohmann::ordered_json doc;
  auto& hs = doc["heights"] = nlohmann::ordered_json::array();
  for (size_t i = 0; i < hf.rows; ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (size_t j = 0; j < hf.cols; ++j) row.push_back(to_string(hf.heights[i][j]));
    hs.push_back(std::move(row));
  }
  auto& ws = doc["col_widths"] = nlohmann::ordered_json::array();
  for (size_t j = 0; j < hf.cols; ++j) ws.push_back(to_string(hf.col_widths[j]));
  auto& ds = doc["row_depths"] = nlohmann::ordered_json::array();
  for (size_t i = 0; i < hf.rows; ++i) ds.push_back(to_string(hf.row_depths[i]));
  return doc.dump(2) + "\n";
}

Heightfield generate_heightfield(size_t rows, size_t cols, uint64_t max_height, uint64_t seed) {
  if (rows == 0 || cols == 0)
    throw ParseError(ErrorCode::EmptyGrid, "generator needs rows >= 1 and cols >= 1");
  if (max_height == 0)
    throw ParseError(ErrorCode::NonpositiveDimension, "generator needs max height >= 1");
  Heightfield hf;
  hf.rows = rows;
  hf.cols = cols;
  hf.col_widths.assign(cols, Rat(1));
  hf.row_depths.assign(rows, Rat(1));
  SplitMix64 rng(seed);
  hf.heights.resize(rows);
  for (size_t i = 0; i < rows; ++i) {
    hf.heights[i].reserve(cols);
    for (size_t j = 0; j < cols; ++j)
      hf.heights[i].push_back(Rat(static_cast<unsigned long>(rng.next_in(max_height))));
  }
  return hf;
}

}  // namespace terrafold
