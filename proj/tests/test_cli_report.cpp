#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "hilspec/cli.hpp"
#include "hilspec/errors.hpp"
#include "hilspec/report_io.hpp"

using namespace hilspec;

namespace {

std::filesystem::path temp_path(const std::string& tag) {
  static int counter = 0;
  return std::filesystem::temp_directory_path() /
         ("hilspec_cli_" + tag + "_" + std::to_string(++counter) + "_" +
          std::to_string(static_cast<long long>(::getpid())) + ".txt");
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempOutput {
  std::filesystem::path path;
  explicit TempOutput(const std::string& tag) : path(temp_path(tag)) {}
  ~TempOutput() {
    std::error_code ec;
    std::filesystem::remove(path, ec);
  }
  std::string text() const { return slurp(path); }
};

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

TEST_CASE("serialized doubles round-trip to the exact same bits") {
  const double samples[] = {std::numbers::pi,
                            0.1,
                            1.0 / 3.0,
                            -2.2250738585072014e-308,
                            1.7976931348623157e308,
                            0.0,
                            -1.5,
                            6.79e-6,
                            -0.039988265195290676};
  for (double x : samples) {
    const std::string text = format_double(x);
    const double back = std::strtod(text.c_str(), nullptr);
    CHECK(back == x);
  }
  CHECK(format_double(1.0) == "1");
}

TEST_CASE("csv cells print scalars, arrays, and null the documented way") {
  CHECK(csv_cell(Json()) == "");
  CHECK(csv_cell(Json("text")) == "text");
  CHECK(csv_cell(Json(true)) == "true");
  CHECK(csv_cell(Json(false)) == "false");
  CHECK(csv_cell(Json(7)) == "7");
  CHECK(csv_cell(Json(2.5)) == "2.5");
  Json arr = Json::array({1.5, 2.5, 3.0});
  CHECK(csv_cell(arr) == "1.5;2.5;3");
}

TEST_CASE("csv writer quotes per RFC 4180 and pads missing fields") {
  Json r1 = Json::object();
  r1["a"] = "x,y";
  Json r2 = Json::object();
  r2["a"] = "q\"z";
  r2["b"] = 1;
  const std::string text = to_csv({"a", "b"}, {r1, r2});
  const auto lines = split_lines(text);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "a,b");
  CHECK(lines[1] == "\"x,y\",");
  CHECK(lines[2] == "\"q\"\"z\",1");

  CHECK(to_csv({"a", "b"}, {}) == "a,b\n");
}

TEST_CASE("json documents carry command, params, and version") {
  Json params = Json::object();
  params["n"] = 4;
  Json row = Json::object();
  row["value"] = 1.25;
  const Json doc = make_document("trace", params, {row});
  CHECK(doc["meta"]["command"] == "trace");
  CHECK(doc["meta"]["version"] == kVersion);
  CHECK(doc["meta"]["params"]["n"] == 4);
  REQUIRE(doc["rows"].size() == 1);
  CHECK(doc["rows"][0]["value"] == 1.25);

  const std::string text = to_json_text(doc);
  CHECK(text.back() == '\n');
  CHECK(Json::parse(text) == doc);
}

TEST_CASE("size list parser accepts the three spellings") {
  CHECK(parse_n_spec("7") == std::vector<std::size_t>{7});
  CHECK(parse_n_spec("4..7") == std::vector<std::size_t>{4, 5, 6, 7});
  CHECK(parse_n_spec("100,200,400") == std::vector<std::size_t>{100, 200, 400});

  CHECK_THROWS_AS(parse_n_spec(""), InvalidParameter);
  CHECK_THROWS_AS(parse_n_spec("0"), InvalidParameter);
  CHECK_THROWS_AS(parse_n_spec("abc"), InvalidParameter);
  CHECK_THROWS_AS(parse_n_spec("5..3"), InvalidParameter);
  CHECK_THROWS_AS(parse_n_spec("3,3"), InvalidParameter);
  CHECK_THROWS_AS(parse_n_spec("4,2"), InvalidParameter);
  CHECK_THROWS_AS(parse_n_spec("1..2000000"), InvalidParameter);
}

TEST_CASE("file writes fail loudly on bad paths") {
  CHECK_THROWS_AS(write_text("x", "/nonexistent_dir_zz/file.csv"), ParseError);
}

TEST_CASE("matrix dump lists entries with 1-based indices") {
  TempOutput out("build");
  RunConfig cfg;
  cfg.command = "build";
  cfg.family = MatrixFamily::SymmetricHilbert;
  cfg.n_values = {2};
  cfg.output_path = out.path.string();
  CHECK(run_command(cfg) == 0);
  const auto lines = split_lines(out.text());
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "row,col,re,im");
  CHECK(lines[1] == "1,1,1,0");
  CHECK(lines[2] == "1,2,0.5,0");
  CHECK(lines[4] == "2,2,0.33333333333333331,0");
}

TEST_CASE("spectrum serializations agree bit for bit across formats") {
  RunConfig cfg;
  cfg.command = "spectrum";
  cfg.family = MatrixFamily::AlternatingQuant;
  cfg.n_values = {3};

  TempOutput csv_out("spectrum_csv");
  cfg.format = "csv";
  cfg.output_path = csv_out.path.string();
  CHECK(run_command(cfg) == 0);

  TempOutput json_out("spectrum_json");
  cfg.format = "json";
  cfg.output_path = json_out.path.string();
  CHECK(run_command(cfg) == 0);

  const auto lines = split_lines(csv_out.text());
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "n,index,re,im,zero_count,residual");

  const Json doc = Json::parse(json_out.text());
  CHECK(doc["meta"]["command"] == "spectrum");
  CHECK(doc["meta"]["params"]["family"] == "alt-quant");
  REQUIRE(doc["rows"].size() == 3);
  CHECK(doc["rows"][1]["re"] == 0.0);
  CHECK(doc["rows"][1]["im"] == 0.0);
  CHECK(doc["rows"][0]["zero_count"] == 1);
  CHECK(std::abs(doc["rows"][0]["im"].get<double>() + std::sqrt(3.0)) <= 1e-12);

  // The CSV "im" cells must parse back to the same doubles the JSON holds.
  for (std::size_t i = 0; i < 3; ++i) {
    std::istringstream line(lines[i + 1]);
    std::string field;
    for (int skip = 0; skip < 3; ++skip) std::getline(line, field, ',');
    std::getline(line, field, ',');
    CHECK(std::strtod(field.c_str(), nullptr) ==
          doc["rows"][i]["im"].get<double>());
  }
}

TEST_CASE("sweep output is deterministic under any thread cap") {
  RunConfig cfg;
  cfg.command = "sweep";
  cfg.family = MatrixFamily::Alternating;
  for (std::size_t n = 2; n <= 33; ++n) cfg.n_values.push_back(n);

  ::setenv("HILBERT_SPECTRA_THREADS", "3", 1);
  TempOutput a("sweep_a");
  cfg.output_path = a.path.string();
  CHECK(run_command(cfg) == 0);

  TempOutput b("sweep_b");
  cfg.output_path = b.path.string();
  CHECK(run_command(cfg) == 0);

  ::setenv("HILBERT_SPECTRA_THREADS", "1", 1);
  TempOutput c("sweep_serial");
  cfg.output_path = c.path.string();
  CHECK(run_command(cfg) == 0);
  ::unsetenv("HILBERT_SPECTRA_THREADS");

  const std::string ta = a.text();
  CHECK_FALSE(ta.empty());
  CHECK(ta == b.text());
  CHECK(ta == c.text());
}

TEST_CASE("zeta subcommand emits the catalan row") {
  TempOutput out("zeta");
  RunConfig cfg;
  cfg.command = "zeta";
  cfg.zeta_op = "catalan";
  cfg.eps = 1e-12;
  cfg.format = "json";
  cfg.output_path = out.path.string();
  CHECK(run_cli(cfg) == 0);
  const Json doc = Json::parse(out.text());
  CHECK(doc["meta"]["params"]["op"] == "catalan");
  REQUIRE(doc["rows"].size() == 1);
  CHECK(std::abs(doc["rows"][0]["value"].get<double>() - 0.91596559417721902) <=
        1e-10);
}

TEST_CASE("exit codes separate usage, data, and numeric failures") {
  // 0: healthy run.
  {
    TempOutput out("ok");
    RunConfig cfg;
    cfg.command = "trace";
    cfg.family = MatrixFamily::Alternating;
    cfg.n_values = {2, 4};
    cfg.output_path = out.path.string();
    CHECK(run_cli(cfg) == 0);
  }
  // 1: an honest check that cannot meet an absurd user tolerance.
  {
    TempOutput out("fail");
    RunConfig cfg;
    cfg.command = "conjecture";
    cfg.which = 2;
    cfg.n_values = {8};
    cfg.tol = 1e-30;
    cfg.output_path = out.path.string();
    CHECK(run_cli(cfg) == 1);
  }
  // 2: usage problems.
  {
    RunConfig cfg;
    cfg.command = "build";  // missing n
    cfg.output_path = temp_path("unused").string();
    CHECK(run_cli(cfg) == 2);
  }
  {
    RunConfig cfg;
    cfg.command = "spectrum";
    cfg.n_values = {4};
    cfg.format = "xml";
    CHECK(run_cli(cfg) == 2);
  }
  {
    RunConfig cfg;
    cfg.command = "zeta";
    cfg.zeta_op = "zerosum";  // missing --zeros
    cfg.output_path = temp_path("unused").string();
    CHECK(run_cli(cfg) == 2);
  }
  // 3: data file problems.
  {
    RunConfig cfg;
    cfg.command = "zeta";
    cfg.zeta_op = "zerosum";
    cfg.zeros_path = "/nonexistent/zeros.txt";
    cfg.output_path = temp_path("unused").string();
    CHECK(run_cli(cfg) == 3);
  }
}
