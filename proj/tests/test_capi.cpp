#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <terrafold.h>

#include <string>

namespace {

std::string take(char* s) {
  std::string out(s);
  tf_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("end-to-end through the C interface") {
  tf_heightfield* hf = nullptr;
  REQUIRE(tf_heightfield_parse("2\n", TF_FORMAT_CSV, &hf) == TF_OK);
  uint32_t rows = 0, cols = 0;
  CHECK(tf_heightfield_dims(hf, &rows, &cols) == TF_OK);
  CHECK(rows == 1);
  CHECK(cols == 1);

  tf_mesh* mesh = nullptr;
  REQUIRE(tf_mesh_build(hf, &mesh) == TF_OK);
  size_t faces = 0;
  CHECK(tf_mesh_face_count(mesh, &faces) == TF_OK);
  CHECK(faces == 6);

  char* area = nullptr;
  REQUIRE(tf_mesh_surface_area(mesh, &area) == TF_OK);
  CHECK(take(area) == "10");

  tf_layout* layout = nullptr;
  REQUIRE(tf_layout_compute(mesh, &layout) == TF_OK);
  size_t placed = 0;
  CHECK(tf_layout_face_count(layout, &placed) == TF_OK);
  CHECK(placed == 6);

  char* json = nullptr;
  REQUIRE(tf_layout_to_json(layout, &json) == TF_OK);
  std::string layout_json = take(json);
  CHECK(layout_json.find("\"mode\": \"orthogonal\"") != std::string::npos);

  tf_layout* reparsed = nullptr;
  REQUIRE(tf_layout_from_json(layout_json.c_str(), &reparsed) == TF_OK);
  char* json2 = nullptr;
  REQUIRE(tf_layout_to_json(reparsed, &json2) == TF_OK);
  CHECK(take(json2) == layout_json);

  char* svg = nullptr;
  REQUIRE(tf_layout_to_svg(layout, &svg) == TF_OK);
  CHECK(take(svg).find("<svg") != std::string::npos);

  tf_report* report = nullptr;
  REQUIRE(tf_verify(reparsed, hf, &report) == TF_OK);
  int passed = 0;
  CHECK(tf_report_all_passed(report, &passed) == TF_OK);
  CHECK(passed == 1);
  char* report_json = nullptr;
  REQUIRE(tf_report_to_json(report, &report_json) == TF_OK);
  CHECK(take(report_json).find("\"all_passed\": true") != std::string::npos);

  tf_report_free(report);
  tf_layout_free(reparsed);
  tf_layout_free(layout);
  tf_mesh_free(mesh);
  tf_heightfield_free(hf);
}

TEST_CASE("shear through the C interface finds the demonstration overlap") {
  tf_heightfield* hf = nullptr;
  REQUIRE(tf_heightfield_parse("1,3\n3,1\n", TF_FORMAT_CSV, &hf) == TF_OK);
  tf_mesh* mesh = nullptr;
  REQUIRE(tf_mesh_build(hf, &mesh) == TF_OK);

  tf_layout* sheared = nullptr;
  REQUIRE(tf_layout_shear(mesh, "577/1000", &sheared) == TF_OK);
  tf_report* report = nullptr;
  REQUIRE(tf_verify(sheared, hf, &report) == TF_OK);
  int passed = 1;
  CHECK(tf_report_all_passed(report, &passed) == TF_OK);
  CHECK(passed == 0);
  char* json = nullptr;
  REQUIRE(tf_report_to_json(report, &json) == TF_OK);
  std::string text = take(json);
  CHECK(text.find("interior_overlap") != std::string::npos);

  tf_report_free(report);
  tf_layout_free(sheared);

  // Slope zero matches the plain unfolding byte for byte.
  tf_layout* plain = nullptr;
  tf_layout* zero = nullptr;
  REQUIRE(tf_layout_compute(mesh, &plain) == TF_OK);
  REQUIRE(tf_layout_shear(mesh, "0", &zero) == TF_OK);
  char *a = nullptr, *b = nullptr;
  REQUIRE(tf_layout_to_json(plain, &a) == TF_OK);
  REQUIRE(tf_layout_to_json(zero, &b) == TF_OK);
  CHECK(take(a) == take(b));
  tf_layout_free(plain);
  tf_layout_free(zero);
  tf_mesh_free(mesh);
  tf_heightfield_free(hf);
}

TEST_CASE("error paths set codes and messages") {
  tf_heightfield* hf = nullptr;
  CHECK(tf_heightfield_parse("1,x\n", TF_FORMAT_CSV, &hf) == TF_ERR_SYNTAX);
  CHECK(std::string(tf_last_error()).find("line 1") != std::string::npos);

  CHECK(tf_heightfield_parse("1,0\n", TF_FORMAT_CSV, &hf) == TF_ERR_NONPOSITIVE_DIMENSION);
  CHECK(tf_heightfield_parse("", TF_FORMAT_CSV, &hf) == TF_ERR_EMPTY_GRID);
  CHECK(tf_heightfield_parse("1,2\n3\n", TF_FORMAT_CSV, &hf) == TF_ERR_MALFORMED_GRID);
  CHECK(tf_heightfield_parse(nullptr, TF_FORMAT_CSV, &hf) == TF_ERR_INVALID_ARGUMENT);
  CHECK(tf_mesh_build(nullptr, nullptr) == TF_ERR_INVALID_ARGUMENT);

  tf_layout* layout = nullptr;
  CHECK(tf_layout_from_json("{]", &layout) == TF_ERR_SYNTAX);

  REQUIRE(tf_heightfield_parse("1\n", TF_FORMAT_CSV, &hf) == TF_OK);
  tf_mesh* mesh = nullptr;
  REQUIRE(tf_mesh_build(hf, &mesh) == TF_OK);
  CHECK(tf_layout_shear(mesh, "abc", &layout) == TF_ERR_SYNTAX);
  CHECK(tf_layout_shear(mesh, "-1", &layout) == TF_ERR_INVALID_ARGUMENT);
  tf_mesh_free(mesh);
  tf_heightfield_free(hf);
}

TEST_CASE("generator determinism through the C interface") {
  tf_heightfield* a = nullptr;
  tf_heightfield* b = nullptr;
  REQUIRE(tf_heightfield_generate(10, 10, 3, 1, &a) == TF_OK);
  REQUIRE(tf_heightfield_generate(10, 10, 3, 1, &b) == TF_OK);
  char *ca = nullptr, *cb = nullptr;
  REQUIRE(tf_heightfield_to_csv(a, &ca) == TF_OK);
  REQUIRE(tf_heightfield_to_csv(b, &cb) == TF_OK);
  CHECK(take(ca) == take(cb));
  CHECK(tf_heightfield_generate(0, 1, 3, 1, &a) == TF_ERR_EMPTY_GRID);
  tf_heightfield_free(a);
  tf_heightfield_free(b);
}
