#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "circ/array_io.hpp"
#include "circ/cli.hpp"
#include "circ/oracle_harness.hpp"
#include "test_support.hpp"

using namespace circ;
using circ::test::max_err;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("circ_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }

  std::filesystem::path file(const std::string& name) const { return path / name; }
};

void write_vector(const std::filesystem::path& p, const std::vector<Complex>& data) {
  write_document(ArrayDocument{{data.size()}, data, "", std::nullopt}, p);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("dft of a delta is the all-ones spectrum") {
  TempDir dir;
  write_vector(dir.file("delta4.json"),
               {Complex{1.0, 0.0}, {}, {}, {}});
  const auto out = dir.file("out.json");
  CHECK(run_cli({"dft", "--in", dir.file("delta4.json").string(), "--out",
                 out.string()}) == 0);
  const ArrayDocument doc = read_document(out);
  REQUIRE(doc.dims == std::vector<std::size_t>{4});
  REQUIRE(doc.ordering.has_value());
  CHECK(*doc.ordering == SpectrumOrdering::standard);
  for (const Complex& z : doc.data) CHECK(std::abs(z - Complex{1.0, 0.0}) < 1e-14);

  // idft round trip through files
  const auto back = dir.file("back.json");
  CHECK(run_cli({"idft", "--in", out.string(), "--out", back.string()}) == 0);
  const ArrayDocument orig = read_document(back);
  CHECK(std::abs(orig.data[0] - Complex{1.0, 0.0}) < 1e-13);
  for (std::size_t k = 1; k < 4; ++k) CHECK(std::abs(orig.data[k]) < 1e-13);
}

TEST_CASE("conv matches the frozen oracle through both methods") {
  TempDir dir;
  write_vector(dir.file("x.json"), {Complex{1.0, 0.0}, Complex{2.0, 0.0},
                                    Complex{3.0, 0.0}});
  write_vector(dir.file("y.json"), {Complex{4.0, 0.0}, Complex{5.0, 0.0},
                                    Complex{6.0, 0.0}});
  for (const std::string method : {"naive", "spectral"}) {
    const auto out = dir.file("conv_" + method + ".json");
    CHECK(run_cli({"conv", "--a", dir.file("x.json").string(), "--b",
                   dir.file("y.json").string(), "--method", method, "--out",
                   out.string()}) == 0);
    const ArrayDocument doc = read_document(out);
    CHECK(max_err(doc.data, {Complex{31.0, 0.0}, Complex{31.0, 0.0},
                             Complex{28.0, 0.0}}) < 1e-11);
  }
}

TEST_CASE("eig honors the ordering flag") {
  TempDir dir;
  write_vector(dir.file("x.json"), {Complex{1.0, 0.0}, Complex{2.0, 0.0},
                                    Complex{3.0, 0.0}});
  const auto std_out = dir.file("std.json"), alt_out = dir.file("alt.json");
  CHECK(run_cli({"eig", "--in", dir.file("x.json").string(), "--out",
                 std_out.string()}) == 0);
  CHECK(run_cli({"eig", "--in", dir.file("x.json").string(), "--ordering",
                 "alternate", "--out", alt_out.string()}) == 0);
  const ArrayDocument std_doc = read_document(std_out);
  const ArrayDocument alt_doc = read_document(alt_out);
  CHECK(*std_doc.ordering == SpectrumOrdering::standard);
  CHECK(*alt_doc.ordering == SpectrumOrdering::alternate);
  CHECK(alt_doc.data[1] == std_doc.data[2]);
  CHECK(run_cli({"eig", "--in", dir.file("x.json").string(), "--ordering",
                 "sideways"}) == 2);
}

TEST_CASE("circmat and is-circulant cooperate; perturbation flips the verdict") {
  TempDir dir;
  write_vector(dir.file("x.json"), {Complex{1.0, 0.0}, Complex{2.0, 0.0},
                                    Complex{3.0, 0.0}, Complex{4.0, 0.0}});
  const auto mat = dir.file("mat.json");
  CHECK(run_cli({"circmat", "--in", dir.file("x.json").string(), "--out",
                 mat.string()}) == 0);
  ArrayDocument grid = read_document(mat);
  CHECK(grid.dims == std::vector<std::size_t>{4, 4});
  CHECK(run_cli({"is-circulant", "--in", mat.string(), "--out",
                 dir.file("verdict.json").string()}) == 0);

  grid.data[5] += Complex{1.0, 0.0};
  write_document(grid, dir.file("broken.json"));
  CHECK(run_cli({"is-circulant", "--in", dir.file("broken.json").string(),
                 "--out", dir.file("verdict2.json").string()}) == 1);
}

TEST_CASE("zt-eval takes one z per axis") {
  TempDir dir;
  write_vector(dir.file("x.json"), {Complex{0.0, 0.0}, Complex{1.0, 0.0}});
  const auto out = dir.file("zt.json");
  CHECK(run_cli({"zt-eval", "--in", dir.file("x.json").string(), "--z", "-1",
                 "--out", out.string()}) == 0);
  CHECK(std::abs(read_document(out).data[0] - Complex{-1.0, 0.0}) < 1e-14);

  // n-D evaluation at the all-ones point is the plain sum
  write_document(ArrayDocument{{2, 2},
                               {Complex{1.0, 0.0}, Complex{2.0, 0.0},
                                Complex{3.0, 0.0}, Complex{4.0, 0.0}},
                               "",
                               std::nullopt},
                 dir.file("arr.json"));
  CHECK(run_cli({"zt-eval", "--in", dir.file("arr.json").string(), "--z", "1",
                 "--z", "1", "--out", out.string()}) == 0);
  CHECK(std::abs(read_document(out).data[0] - Complex{10.0, 0.0}) < 1e-12);

  // z = 0 is a usage error
  CHECK(run_cli({"zt-eval", "--in", dir.file("x.json").string(), "--z", "0"}) == 2);
  // wrong axis count
  CHECK(run_cli({"zt-eval", "--in", dir.file("arr.json").string(), "--z", "1"}) == 2);
}

TEST_CASE("nd subcommands round-trip a 2-D array") {
  TempDir dir;
  write_document(ArrayDocument{{2, 2},
                               {Complex{1.0, 0.0}, Complex{2.0, 0.0},
                                Complex{3.0, 0.0}, Complex{4.0, 0.0}},
                               "",
                               std::nullopt},
                 dir.file("arr.json"));
  const auto hat = dir.file("hat.json");
  CHECK(run_cli({"nd-dft", "--in", dir.file("arr.json").string(), "--out",
                 hat.string()}) == 0);
  CHECK(max_err(read_document(hat).data,
                {Complex{10.0, 0.0}, Complex{-2.0, 0.0}, Complex{-4.0, 0.0},
                 Complex{0.0, 0.0}}) < 1e-12);

  const auto back = dir.file("back.json");
  CHECK(run_cli({"nd-idft", "--in", hat.string(), "--out", back.string()}) == 0);
  CHECK(max_err(read_document(back).data,
                {Complex{1.0, 0.0}, Complex{2.0, 0.0}, Complex{3.0, 0.0},
                 Complex{4.0, 0.0}}) < 1e-12);

  // nd-eig of the identity impulse is flat ones
  write_document(ArrayDocument{{2, 3},
                               {Complex{1.0, 0.0}, {}, {}, {}, {}, {}},
                               "",
                               std::nullopt},
                 dir.file("delta.json"));
  const auto eig = dir.file("eig.json");
  CHECK(run_cli({"nd-eig", "--in", dir.file("delta.json").string(), "--out",
                 eig.string()}) == 0);
  for (const Complex& z : read_document(eig).data)
    CHECK(std::abs(z - Complex{1.0, 0.0}) < 1e-13);

  // nd-conv with the delta is the identity
  const auto conv = dir.file("cc.json");
  CHECK(run_cli({"nd-conv", "--a", dir.file("arr.json").string(), "--b",
                 dir.file("arr.json").string(), "--out", conv.string()}) == 0);
  const ArrayDocument conv_doc = read_document(conv);
  CHECK(conv_doc.dims == (std::vector<std::size_t>{2, 2}));
}

TEST_CASE("csv input feeds 1-D commands") {
  TempDir dir;
  {
    std::ofstream out(dir.file("x.csv"));
    out << "1\n2\n3\n";
  }
  const auto out = dir.file("spec.json");
  CHECK(run_cli({"dft", "--in", dir.file("x.csv").string(), "--out",
                 out.string()}) == 0);
  CHECK(std::abs(read_document(out).data[0] - Complex{6.0, 0.0}) < 1e-13);
}

TEST_CASE("usage errors exit with code 2") {
  TempDir dir;
  CHECK(run_cli({}) == 2);                          // missing subcommand
  CHECK(run_cli({"dft"}) == 2);                     // missing --in
  CHECK(run_cli({"frobnicate", "--in", "x"}) == 2);  // unknown subcommand
  CHECK(run_cli({"dft", "--in", dir.file("absent.json").string()}) == 2);
  write_document(ArrayDocument{{2, 2},
                               {Complex{1.0, 0.0}, {}, {}, {}},
                               "",
                               std::nullopt},
                 dir.file("mat.json"));
  // a matrix is not a 1-D vector
  CHECK(run_cli({"dft", "--in", dir.file("mat.json").string()}) == 2);
  CHECK(run_cli({"--help"}) == 0);
}

TEST_CASE("verify runs a small suite and respects CIRC_SEED") {
  TempDir dir;
  const auto report = dir.file("report.json");
  CHECK(run_cli({"verify", "--suite", "exercises", "--n-max", "6", "--seed", "3",
                 "--out", report.string()}) == 0);
  std::ifstream in(report);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  CHECK(text.find("\"all_pass\": true") != std::string::npos);
  CHECK(text.find("\"seed\": 3") != std::string::npos);

  // environment override takes precedence over the flag
  ::setenv("CIRC_SEED", "11", 1);
  const auto report2 = dir.file("report2.json");
  CHECK(run_cli({"verify", "--suite", "exercises", "--n-max", "6", "--seed", "3",
                 "--out", report2.string()}) == 0);
  ::unsetenv("CIRC_SEED");
  std::ifstream in2(report2);
  std::string text2((std::istreambuf_iterator<char>(in2)),
                    std::istreambuf_iterator<char>());
  CHECK(text2.find("\"seed\": 11") != std::string::npos);

  CHECK(run_cli({"verify", "--suite", "nonsense"}) == 2);
}

TEST_CASE("bench emits timings with the cross-path residual") {
  TempDir dir;
  const auto out = dir.file("bench.json");
  CHECK(run_cli({"bench", "--sizes", "8,16", "--methods", "naive,spectral",
                 "--out", out.string()}) == 0);
  std::ifstream in(out);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  CHECK(text.find("\"median_seconds\"") != std::string::npos);
  CHECK(text.find("\"residual_vs_naive\"") != std::string::npos);
  CHECK(run_cli({"bench", "--sizes", "8", "--methods", "warp"}) == 2);
}

}  // TEST_SUITE
