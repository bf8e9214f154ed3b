#include <gtest/gtest.h>
#include <sys/wait.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "majlat/cli.hpp"
#include "majlat/io.hpp"
#include "majlat/lattice.hpp"
#include "majlat/svg.hpp"
#include "support/oracles.hpp"

using namespace majlat;
using namespace majlat::testing;
using Json = nlohmann::ordered_json;

namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("majlat_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& content) {
    const auto p = dir_ / name;
    std::ofstream(p, std::ios::binary) << content;
    return p.string();
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
  }

  JobSpec job(Command c, const std::string& input) {
    JobSpec j;
    j.command = c;
    j.input_path = input;
    return j;
  }

  static int run_quiet(const JobSpec& j, std::string* out_text = nullptr) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(j, out, err);
    if (out_text) *out_text = out.str();
    return code;
  }

  // Runs the command-line binary through the shell and returns its exit status.
  int shell(const std::string& args) {
    const std::string cmd = std::string(MAJLAT_CLI) + " " + args + " > " + path("stdout.txt") + " 2> " + path("stderr.txt");
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  fs::path dir_;
};

const char* kPair = R"({"d": 4, "vectors": [["0.6", "0.16", "0.16", "0.08"], ["0.5", "0.3", "0.1", "0.1"]]})";

std::vector<std::string> decimals(const Json& v) { return v.at("decimal").get<std::vector<std::string>>(); }

}  // namespace

TEST_F(CliTest, MeetJoinCompare) {
  const auto in = write("pair.json", kPair);
  auto m = Json::parse(execute(job(Command::Meet, in)).json);
  EXPECT_EQ(decimals(m["result"]), (std::vector<std::string>{"0.5", "0.26", "0.14", "0.1"}));
  EXPECT_EQ(m["result"]["rational"][1], "13/50");
  EXPECT_EQ(m["command"], "meet");
  EXPECT_EQ(m["mode"], "exact");
  EXPECT_EQ(m["d"], 4);
  auto j = Json::parse(execute(job(Command::Join, in)).json);
  EXPECT_EQ(decimals(j["result"]), (std::vector<std::string>{"0.6", "0.2", "0.12", "0.08"}));
  auto c = Json::parse(execute(job(Command::Compare, in)).json);
  EXPECT_EQ(c["ordering"], "Incomparable");
}

TEST_F(CliTest, FloatModeReportsTolerance) {
  auto jb = job(Command::Meet, write("pair.json", kPair));
  jb.mode = NumericMode::Float;
  jb.tolerance = 1e-9;
  auto m = Json::parse(execute(jb).json);
  EXPECT_EQ(m["mode"], "float");
  EXPECT_DOUBLE_EQ(m["tolerance"].get<double>(), 1e-9);
  EXPECT_FALSE(m["result"].contains("rational"));
  const auto r = decimals(m["result"]);
  EXPECT_NEAR(std::stod(r[1]), 0.26, 1e-12);
  EXPECT_EQ(float_tolerance(), kDefaultTolerance);
}

TEST_F(CliTest, PolytopeAndBallSelectors) {
  const auto in = write("poly.json", R"({"vectors": [["0.5", "0.4", "0.1"], ["0.55", "0.3", "0.15"]]})");
  auto all = Json::parse(execute(job(Command::Polytope, in)).json);
  EXPECT_EQ(decimals(all["inf"]), (std::vector<std::string>{"0.5", "0.35", "0.15"}));
  EXPECT_EQ(decimals(all["sup"]), (std::vector<std::string>{"0.55", "0.35", "0.1"}));
  EXPECT_EQ(all["vertices"].size(), 2u);

  JobSpec b;
  b.command = Command::Ball;
  b.center = "0.525,0.35,0.125";
  b.eps = "0.15";
  b.want_sup = true;
  auto sup = Json::parse(execute(b).json);
  EXPECT_EQ(decimals(sup["result"]), (std::vector<std::string>{"0.6", "0.35", "0.05"}));
  EXPECT_FALSE(sup.contains("vertices"));
  b.want_sup = false;
  b.want_inf = true;
  auto inf = Json::parse(execute(b).json);
  EXPECT_EQ(decimals(inf["result"]), (std::vector<std::string>{"0.45", "0.35", "0.2"}));
  b.want_inf = false;
  auto everything = Json::parse(execute(b).json);
  EXPECT_EQ(everything["vertices"].size(), 6u);
  EXPECT_EQ(everything["eps"], "0.15");
}

TEST_F(CliTest, OcrWithStates) {
  const auto in = write("states.json", R"({"states": [
      {"amplitudes": [["0.8", "0"], ["0", "0.6"]]},
      {"amplitudes": [["0.6", "0"], ["0.8", "0"]]},
      {"amplitudes": [["0.96", "0"], ["0", "-0.28"]]}]})");
  auto jb = job(Command::Ocr, in);
  jb.theory = Theory::Coherence;
  auto r = Json::parse(execute(jb).json);
  EXPECT_EQ(r["direction"], "reversed");
  EXPECT_EQ(r["bound"], "infimum");
  EXPECT_EQ(r["inputs"].size(), 3u);
  // Moduli squared: (0.64, 0.36) twice and (0.9216, 0.0784).
  EXPECT_EQ(decimals(r["result"]), (std::vector<std::string>{"0.64", "0.36"}));

  const auto spec = write("spec.json", R"({"states": [{"spectrum": ["0.5", "0.3", "0.2"]}, {"spectrum": ["0.6", "0.2", "0.2"]}]})");
  auto p = job(Command::Ocr, spec);
  p.theory = Theory::Purity;
  auto pr = Json::parse(execute(p).json);
  EXPECT_EQ(pr["bound"], "supremum");
  EXPECT_EQ(decimals(pr["result"]), (std::vector<std::string>{"0.6", "0.2", "0.2"}));
}

TEST_F(CliTest, LorenzCurves) {
  auto r = Json::parse(execute(job(Command::Lorenz, write("pair.json", kPair))).json);
  ASSERT_EQ(r["curves"].size(), 2u);
  EXPECT_EQ(decimals(r["curves"][0]["sums"]), (std::vector<std::string>{"0", "0.6", "0.76", "0.92", "1"}));
}

TEST_F(CliTest, CsvInput) {
  const auto in = write("pair.csv", "# worked pair\n0.6,0.16,0.16,0.08\n\n0.5, 0.3, 0.1, 0.1\n");
  auto m = Json::parse(execute(job(Command::Meet, in)).json);
  EXPECT_EQ(decimals(m["result"]), (std::vector<std::string>{"0.5", "0.26", "0.14", "0.1"}));
}

TEST_F(CliTest, ResultDocumentIsValidInput) {
  auto jb = job(Command::Join, write("pair.json", kPair));
  jb.output_path = path("join.json");
  ASSERT_EQ(run_quiet(jb), 0);
  auto back = Json::parse(execute(job(Command::Sup, path("join.json"))).json);
  EXPECT_EQ(decimals(back["result"]), (std::vector<std::string>{"0.6", "0.2", "0.12", "0.08"}));
}

TEST_F(CliTest, NumbersAreReadThroughShortestDecimal) {
  const auto in = write("nums.json", R"({"vectors": [[0.6, 0.16, 0.16, 0.08], [0.5, 0.3, 0.1, 0.1]]})");
  auto m = Json::parse(execute(job(Command::Meet, in)).json);
  EXPECT_EQ(decimals(m["result"]), (std::vector<std::string>{"0.5", "0.26", "0.14", "0.1"}));
}

TEST_F(CliTest, ExitCodes) {
  const auto good = write("pair.json", kPair);
  EXPECT_EQ(run_quiet(job(Command::Meet, good)), 0);
  EXPECT_EQ(run_quiet(job(Command::Meet, write("unsorted.json", R"({"vectors": [["0.2", "0.8"], ["0.5", "0.5"]]})"))), 1);
  auto sorted = job(Command::Meet, path("unsorted.json"));
  sorted.make.sort = true;
  EXPECT_EQ(run_quiet(sorted), 0);
  EXPECT_EQ(run_quiet(job(Command::Meet, write("d.json", R"({"d": 3, "vectors": [["0.5", "0.5"], ["1", "0"]]})"))), 1);
  EXPECT_EQ(run_quiet(job(Command::Meet, write("three.json", R"({"vectors": [["1"], ["1"], ["1"]]})"))), 1);
  EXPECT_EQ(run_quiet(job(Command::Meet, path("missing.json"))), 2);
  EXPECT_EQ(run_quiet(job(Command::Meet, write("bad.json", "{\"vectors\": [[\"0.5\",]]"))), 2);
  EXPECT_EQ(run_quiet(job(Command::Meet, write("bad.csv", "0.5,zz\n"))), 2);
  EXPECT_EQ(run_quiet(job(Command::Ocr, good)), 1);  // no theory
  auto tol = job(Command::Meet, good);
  tol.tolerance = 1e-6;  // exact mode
  EXPECT_EQ(run_quiet(tol), 1);

  JobSpec big;
  big.command = Command::Ball;
  big.center = "0.1,0.1,0.1,0.1,0.1,0.1,0.1,0.1,0.1,0.05,0.05";
  big.eps = "0.1";
  EXPECT_EQ(run_quiet(big), 3);
  big.eps = "-0.1";
  EXPECT_EQ(run_quiet(big), 1);
}

TEST_F(CliTest, AgreesWithLibraryOnRandomPairs) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t d = 2 + trial % 7;
    const auto x = random_vector(rng, d);
    const auto y = random_vector(rng, d);
    Json in = Json::object();
    in["vectors"] = Json::array();
    for (const auto* v : {&x, &y}) {
      Json row = Json::array();
      for (const auto& e : *v) row.push_back(e.get_str());
      in["vectors"].push_back(row);
    }
    const auto file = write("pair.json", in.dump());
    auto j = Json::parse(execute(job(Command::Join, file)).json);
    auto m = Json::parse(execute(job(Command::Meet, file)).json);
    const auto jr = j["result"]["rational"].get<std::vector<std::string>>();
    const auto mr = m["result"]["rational"].get<std::vector<std::string>>();
    const auto jl = join(x, y);
    const auto ml = meet(x, y);
    for (std::size_t i = 0; i < d; ++i) {
      EXPECT_EQ(q(jr[i].c_str()), jl[i]);
      EXPECT_EQ(q(mr[i].c_str()), ml[i]);
    }
  }
}

TEST_F(CliTest, SvgIsDeterministic) {
  auto jb = job(Command::Meet, write("pair.json", kPair));
  jb.svg_path = path("plot.svg");
  const auto a = execute(jb);
  const auto b = execute(jb);
  EXPECT_EQ(a.json, b.json);
  EXPECT_EQ(a.svg, b.svg);
  EXPECT_NE(a.svg.find("<title>meet</title>"), std::string::npos);
  EXPECT_NE(a.svg.find("<title>x2</title>"), std::string::npos);
}

TEST(Svg, PolylineCoordinates) {
  const auto c = partial_sums(ProbVector<Q>::top(2));
  const std::string svg = emit_lorenz_svg(std::vector<std::pair<std::string, LorenzCurve<Q>>>{{"e2", c}});
  // 550 px wide plot area starting at x = 70, 510 px tall ending at y = 540.
  EXPECT_NE(svg.find("points=\"70.00,540.00 345.00,30.00 620.00,30.00\""), std::string::npos);
  EXPECT_EQ(format_coord(SvgLayout::x_pixel(1, 2)), "345.00");
  EXPECT_EQ(format_coord(SvgLayout::y_pixel(0.5)), "285.00");
  EXPECT_THROW(emit_lorenz_svg(std::vector<PlotCurve>{}), Error);
  EXPECT_THROW(emit_lorenz_svg(std::vector<PlotCurve>{{"a", {0, 1}}, {"b", {0, 0.5, 1}}}), Error);
}

TEST(Io, ParseErrors) {
  EXPECT_THROW(parse_json_input("[1, 2]"), Error);
  EXPECT_THROW(parse_json_input(R"({"vectors": [[true]]})"), Error);
  EXPECT_THROW(parse_scalar_list<Rational>("0.5,,0.5"), Error);
  const auto doc = parse_csv_input("1/2,1/2\n");
  ASSERT_EQ(doc.vectors.size(), 1u);
  EXPECT_EQ(doc.vectors[0][0], "1/2");
}

TEST(JobValidation, Rules) {
  JobSpec j;
  j.command = Command::Meet;
  EXPECT_THROW(validate_job(j), Error);  // no input
  j.input_path = "x.json";
  EXPECT_NO_THROW(validate_job(j));
  j.theory = Theory::Purity;
  EXPECT_THROW(validate_job(j), Error);
  EXPECT_EQ(exit_code_for(ErrorCode::ParseError), 2);
  EXPECT_EQ(exit_code_for(ErrorCode::IoError), 2);
  EXPECT_EQ(exit_code_for(ErrorCode::DimensionTooLarge), 3);
  EXPECT_EQ(exit_code_for(ErrorCode::NotSorted), 1);
  EXPECT_EQ(parse_command("ball"), Command::Ball);
  EXPECT_FALSE(parse_command("nope").has_value());
}

TEST_F(CliTest, BinaryExitStatuses) {
  const auto in = write("pair.json", kPair);
  EXPECT_EQ(shell("meet -i " + in + " -o " + path("out.json") + " --svg " + path("out.svg")), 0);
  EXPECT_NE(slurp(path("out.json")).find("\"0.26\""), std::string::npos);
  EXPECT_NE(slurp(path("out.svg")).find("<svg"), std::string::npos);
  EXPECT_EQ(shell("--help"), 0);
  EXPECT_EQ(shell("meet --bogus"), 2);
  EXPECT_EQ(shell("frobnicate"), 2);
  EXPECT_EQ(shell("ocr -i " + in), 2);  // --theory is required by the parser
  EXPECT_EQ(shell("meet -i " + path("nope.json")), 2);
  EXPECT_EQ(shell("ball --center 0.5,0.5 --eps 0.1 --max-dim 1"), 3);
  EXPECT_EQ(shell("--mode float --tol 1e-9 ball --center 0.525,0.35,0.125 --eps 0.15 --sup"), 0);
  EXPECT_EQ(shell("compare -i " + write("u.json", R"({"vectors": [["0.2", "0.8"], ["0.5", "0.5"]]})")), 1);
}
