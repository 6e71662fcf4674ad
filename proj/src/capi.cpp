#include "terrafold.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "heightfield.hpp"
#include "layout_json.hpp"
#include "mesh.hpp"
#include "svg.hpp"
#include "unfold.hpp"
#include "verify.hpp"

using namespace terrafold;

struct tf_heightfield {
  Heightfield value;
};
struct tf_mesh {
  TerrainMesh value;
};
struct tf_layout {
  Layout value;
};
struct tf_report {
  VerificationReport value;
};

namespace {

thread_local std::string g_last_error;

tf_status set_error(tf_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

tf_status from_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return TF_ERR_SYNTAX;
    case ErrorCode::MalformedGrid: return TF_ERR_MALFORMED_GRID;
    case ErrorCode::NonpositiveDimension: return TF_ERR_NONPOSITIVE_DIMENSION;
    case ErrorCode::EmptyGrid: return TF_ERR_EMPTY_GRID;
    case ErrorCode::InvalidArgument: return TF_ERR_INVALID_ARGUMENT;
  }
  return TF_ERR_INTERNAL;
}

// Runs `fn`, translating exceptions into status codes.
template <typename Fn>
tf_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const ParseError& e) {
    return set_error(from_code(e.code()), e.what());
  } catch (const std::exception& e) {
    return set_error(TF_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(TF_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

tf_status require(const void* p, const char* what) {
  if (p) return TF_OK;
  return set_error(TF_ERR_INVALID_ARGUMENT, std::string("null ") + what);
}

}  // namespace

extern "C" {

const char* tf_version(void) { return "0.1.0"; }

const char* tf_last_error(void) { return g_last_error.c_str(); }

void tf_string_free(char* s) { std::free(s); }

tf_status tf_heightfield_parse(const char* text, tf_format format, tf_heightfield** out) {
  if (require(text, "text") || require(out, "out")) return TF_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    auto hf = parse_heightfield(
        text, format == TF_FORMAT_JSON ? HeightfieldFormat::Json : HeightfieldFormat::Csv);
    *out = new tf_heightfield{std::move(hf)};
    return TF_OK;
  });
}

tf_status tf_heightfield_generate(uint32_t rows, uint32_t cols, uint64_t max_height,
                                  uint64_t seed, tf_heightfield** out) {
  if (require(out, "out")) return TF_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = new tf_heightfield{generate_heightfield(rows, cols, max_height, seed)};
    return TF_OK;
  });
}

tf_status tf_heightfield_to_csv(const tf_heightfield* hf, char** out_text) {
  if (require(hf, "heightfield") || require(out_text, "out")) return TF_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out_text = dup_string(to_csv(hf->value));
    return TF_OK;
  });
}

tf_status tf_heightfield_to_json(const tf_heightfield* hf, char** out_text) {
  if (require(hf, "heightfield") || require(out_text, "out")) return TF_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out_text = dup_string(to_json(hf->value));
    return TF_OK;
  });
}

tf_status tf_heightfield_dims(const tf_heightfield* hf, uint32_t* rows, uint32_t* cols) {
  if (require(hf, "heightfield")) return TF_ERR_INVALID_ARGUMENT;
  if (rows) *rows = static_cast<uint32_t>(hf->value.rows);
  if (cols) *cols = static_cast<uint32_t>(hf->value.cols);
  return TF_OK;
}

void tf_heightfield_free(tf_heightfield* hf) { delete hf; }

tf_status tf_mesh_build(const tf_heightfield* hf, tf_mesh** out) {
  if (require(hf, "heightfield") || require(out, "out")) return TF_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = new tf_mesh{build_mesh(hf->value)};
    return TF_OK;
  });
}

tf_status tf_mesh_face_count(const tf_mesh* mesh, size_t* out) {
  if (require(mesh, "mesh") || require(out, "out")) return TF_ERR_INVALID_ARGUMENT;
  *out = mesh->value.faces.size();
  return TF_OK;
}

tf_status tf_mesh_surface_area(const tf_mesh* mesh, char** out_rational) {
  if (require(mesh, "mesh") || require(out_rational, "out")) return TF_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out_rational = dup_string(to_string(surface_area(mesh->value)));
    return TF_OK;
  });
}

void tf_mesh_free(tf_mesh* mesh) { delete mesh; }

tf_status tf_layout_compute(const tf_mesh* mesh, tf_layout** out) {
  if (require(mesh, "mesh") || require(out, "out")) return TF_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = new tf_layout{compute_layout(mesh->value)};
    return TF_OK;
  });
}

tf_status tf_layout_shear(const tf_mesh* mesh, const char* slope, tf_layout** out) {
  if (require(mesh, "mesh") || require(slope, "slope") || require(out, "out"))
    return TF_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    auto s = parse_rational(slope);
    if (!s) throw ParseError(ErrorCode::SyntaxError, std::string("unparsable slope '") + slope + "'");
    *out = new tf_layout{shear_layout(mesh->value, *s)};
    return TF_OK;
  });
}

tf_status tf_layout_to_json(const tf_layout* layout, char** out_text) {
  if (require(layout, "layout") || require(out_text, "out")) return TF_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out_text = dup_string(layout_to_json(layout->value));
    return TF_OK;
  });
}

tf_status tf_layout_from_json(const char* text, tf_layout** out) {
  if (require(text, "text") || require(out, "out")) return TF_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = new tf_layout{layout_from_json(text)};
    return TF_OK;
  });
}

tf_status tf_layout_to_svg(const tf_layout* layout, char** out_text) {
  if (require(layout, "layout") || require(out_text, "out")) return TF_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out_text = dup_string(layout_to_svg(layout->value));
    return TF_OK;
  });
}

tf_status tf_layout_face_count(const tf_layout* layout, size_t* out) {
  if (require(layout, "layout") || require(out, "out")) return TF_ERR_INVALID_ARGUMENT;
  *out = layout->value.faces.size();
  return TF_OK;
}

void tf_layout_free(tf_layout* layout) { delete layout; }

tf_status tf_verify(const tf_layout* layout, const tf_heightfield* hf, tf_report** out) {
  if (require(layout, "layout") || require(hf, "heightfield") || require(out, "out"))
    return TF_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = new tf_report{verify_layout(layout->value, hf->value)};
    return TF_OK;
  });
}

tf_status tf_report_all_passed(const tf_report* report, int* out) {
  if (require(report, "report") || require(out, "out")) return TF_ERR_INVALID_ARGUMENT;
  *out = report->value.all_passed() ? 1 : 0;
  return TF_OK;
}

tf_status tf_report_to_json(const tf_report* report, char** out_text) {
  if (require(report, "report") || require(out_text, "out")) return TF_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out_text = dup_string(report_to_json(report->value));
    return TF_OK;
  });
}

void tf_report_free(tf_report* report) { delete report; }

}  // extern "C"
