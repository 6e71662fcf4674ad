// terrafold command line: unfold heightfield terrains into planar nets,
// verify nets, generate random terrains, and run the slanted-axis variant.
// Everything goes through the shared library's C interface.

#include <terrafold.h>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitError = 2;

struct Closer {
  void operator()(tf_heightfield* p) const { tf_heightfield_free(p); }
  void operator()(tf_mesh* p) const { tf_mesh_free(p); }
  void operator()(tf_layout* p) const { tf_layout_free(p); }
  void operator()(tf_report* p) const { tf_report_free(p); }
};
template <typename T>
using Handle = std::unique_ptr<T, Closer>;

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(tf_status status, const std::string& context) {
  if (status != TF_OK) throw CliError(context + ": " + tf_last_error());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw CliError("failed writing '" + path + "'");
}

std::string take_string(char* s) {
  std::string out(s);
  tf_string_free(s);
  return out;
}

bool is_json_path(const std::string& path) {
  return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

Handle<tf_heightfield> load_heightfield(const std::string& path) {
  std::string text = read_file(path);
  tf_heightfield* hf = nullptr;
  check(tf_heightfield_parse(text.c_str(), is_json_path(path) ? TF_FORMAT_JSON : TF_FORMAT_CSV,
                             &hf),
        path);
  return Handle<tf_heightfield>(hf);
}

// Unfold (or shear) and verify. Writes the optional artifacts, prints the
// report JSON to stdout, and returns whether every check passed.
bool run_pipeline(const std::string& input, const std::string& slope,
                  const std::string& svg_path, const std::string& layout_path,
                  const std::string& report_path) {
  auto hf = load_heightfield(input);

  tf_mesh* mesh_raw = nullptr;
  check(tf_mesh_build(hf.get(), &mesh_raw), input);
  Handle<tf_mesh> mesh(mesh_raw);

  tf_layout* layout_raw = nullptr;
  if (slope.empty())
    check(tf_layout_compute(mesh.get(), &layout_raw), "unfold");
  else
    check(tf_layout_shear(mesh.get(), slope.c_str(), &layout_raw), "shear");
  Handle<tf_layout> layout(layout_raw);

  char* text = nullptr;
  check(tf_layout_to_json(layout.get(), &text), "layout serialization");
  std::string layout_json = take_string(text);
  if (!layout_path.empty()) write_file(layout_path, layout_json);

  if (!svg_path.empty()) {
    check(tf_layout_to_svg(layout.get(), &text), "svg export");
    write_file(svg_path, take_string(text));
  }

  // Verify the serialized record rather than the in-memory object, so the
  // certificate covers exactly what was written.
  tf_layout* reloaded_raw = nullptr;
  check(tf_layout_from_json(layout_json.c_str(), &reloaded_raw), "layout reload");
  Handle<tf_layout> reloaded(reloaded_raw);

  tf_report* report_raw = nullptr;
  check(tf_verify(reloaded.get(), hf.get(), &report_raw), "verify");
  Handle<tf_report> report(report_raw);

  check(tf_report_to_json(report.get(), &text), "report serialization");
  std::string report_json = take_string(text);
  if (!report_path.empty()) write_file(report_path, report_json);
  std::cout << report_json;

  int passed = 0;
  check(tf_report_all_passed(report.get(), &passed), "report");
  return passed != 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unfold orthogonal terrains into planar nets, with exact verification"};
  app.require_subcommand(1);

  std::string input, svg_path, layout_path, report_path;
  std::string hf_path, slope;
  uint32_t rows = 0, cols = 0;
  uint64_t max_h = 0, seed = 0;
  std::string out_path;

  auto* unfold = app.add_subcommand("unfold", "unfold a heightfield and verify the net");
  unfold->add_option("input", input, "heightfield file (.csv or .json)")->required();
  unfold->add_option("--svg", svg_path, "write an SVG rendering of the net");
  unfold->add_option("--layout", layout_path, "write the exact layout JSON");
  unfold->add_option("--report", report_path, "write the verification report JSON");

  auto* verify = app.add_subcommand("verify", "verify a layout JSON against its heightfield");
  verify->add_option("--layout", layout_path, "layout JSON file")->required();
  verify->add_option("--heightfield", hf_path, "heightfield file")->required();
  verify->add_option("--report", report_path, "write the report JSON here too");

  auto* gen = app.add_subcommand("gen", "generate a random heightfield");
  gen->add_option("--rows", rows, "grid rows (m)")->required();
  gen->add_option("--cols", cols, "grid columns (n)")->required();
  gen->add_option("--max-h", max_h, "maximum height (integer >= 1)")->required();
  gen->add_option("--seed", seed, "generator seed (required for reproducibility)")->required();
  gen->add_option("--out", out_path, "output path (.json for JSON, CSV otherwise)")->required();

  auto* slant = app.add_subcommand("slant", "unfold with slanted vertical axis and report overlaps");
  slant->add_option("input", input, "heightfield file (.csv or .json)")->required();
  slant->add_option("--slope", slope, "shear slope as a rational, e.g. 577/1000")->required();
  slant->add_option("--svg", svg_path, "write an SVG rendering of the net");
  slant->add_option("--layout", layout_path, "write the exact layout JSON");
  slant->add_option("--report", report_path, "write the verification report JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitError;
  }

  try {
    if (unfold->parsed()) {
      bool ok = run_pipeline(input, "", svg_path, layout_path, report_path);
      return ok ? kExitOk : kExitVerifyFailed;
    }

    if (verify->parsed()) {
      auto hf = load_heightfield(hf_path);
      std::string text = read_file(layout_path);
      tf_layout* layout_raw = nullptr;
      check(tf_layout_from_json(text.c_str(), &layout_raw), layout_path);
      Handle<tf_layout> layout(layout_raw);

      tf_report* report_raw = nullptr;
      check(tf_verify(layout.get(), hf.get(), &report_raw), "verify");
      Handle<tf_report> report(report_raw);

      char* json = nullptr;
      check(tf_report_to_json(report.get(), &json), "report serialization");
      std::string report_json = take_string(json);
      if (!report_path.empty()) write_file(report_path, report_json);
      std::cout << report_json;

      int passed = 0;
      check(tf_report_all_passed(report.get(), &passed), "report");
      return passed ? kExitOk : kExitVerifyFailed;
    }

    if (gen->parsed()) {
      tf_heightfield* hf_raw = nullptr;
      check(tf_heightfield_generate(rows, cols, max_h, seed, &hf_raw), "gen");
      Handle<tf_heightfield> hf(hf_raw);
      char* text = nullptr;
      if (is_json_path(out_path))
        check(tf_heightfield_to_json(hf.get(), &text), "gen");
      else
        check(tf_heightfield_to_csv(hf.get(), &text), "gen");
      write_file(out_path, take_string(text));
      return kExitOk;
    }

    if (slant->parsed()) {
      // Overlap is the expected demonstration here, reported rather than
      // treated as a failure; only operational errors are nonzero.
      run_pipeline(input, slope, svg_path, layout_path, report_path);
      return kExitOk;
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }

  return kExitError;
}
