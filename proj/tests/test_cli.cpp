#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace transvect;
using transvect::io::json;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
  json doc() const { return json::parse(out); }
};

Run cli_run(std::vector<std::string> args) {
  args.insert(args.begin(), "transvect");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  Run r;
  r.code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("transvect_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string gen(const std::vector<std::string>& args, const std::string& name) {
    std::vector<std::string> a{"gen"};
    a.insert(a.end(), args.begin(), args.end());
    auto r = cli_run(a);
    EXPECT_EQ(r.code, 0) << r.err;
    return write(name, r.out);
  }

  std::filesystem::path dir_;
};

const char* kSl2Pair = R"({"field": "2^1", "generators": [{"v": [1, 0], "phi": [0, 1]}, {"v": [0, 1], "phi": [1, 0]}]})";

}  // namespace

TEST(Io, ParseGenerators) {
  auto f = io::parse_generators(json::parse(kSl2Pair));
  EXPECT_EQ(f.field.name(), "2^1");
  ASSERT_EQ(f.generators.size(), 2u);
  auto mixed = io::parse_generators(json::parse(
      R"({"field": "2^1", "generators": [{"matrix": [[1, 1], [0, 1]]}, {"v": [0, 1], "phi": [1, 0]}]})"));
  EXPECT_EQ(mixed.generators, f.generators);
  auto round = io::parse_generators(io::generators_json(f));
  EXPECT_EQ(round.generators, f.generators);
  EXPECT_EQ(round.field, f.field);
}

TEST(Io, ParseErrors) {
  auto code = [](const char* text) {
    try {
      io::parse_generators(json::parse(text));
    } catch (const Error& e) {
      return std::make_pair(e.code(), std::string(e.what()));
    }
    return std::make_pair(ErrorCode::NotFound, std::string());
  };
  EXPECT_EQ(code(R"({"field": "4^1", "generators": []})").first, ErrorCode::NotPrime);
  auto bad = code(R"({"field": "2^1", "generators": [{"v": [1, 0], "phi": [0, 1]}, {"v": [1, 0], "phi": [1, 0]}]})");
  EXPECT_EQ(bad.first, ErrorCode::NotIsotropic);
  EXPECT_NE(bad.second.find("1"), std::string::npos);
  auto matrix = code(R"({"field": "2^1", "generators": [{"matrix": [[1, 1], [1, 1]]}]})");
  EXPECT_EQ(matrix.first, ErrorCode::NotTransvection);
  EXPECT_EQ(code(R"({"field": "2^1", "generators": [{"v": [1, 0, 0], "phi": [0, 1]}]})").first,
            ErrorCode::DimensionMismatch);
  EXPECT_EQ(code(R"({"field": "2^1", "generators": [{"v": [1, 0], "phi": [0, 2]}]})").first, ErrorCode::ParseError);
  EXPECT_EQ(code(R"({"generators": []})").first, ErrorCode::ParseError);
}

TEST_F(Cli, AnalyzeSl2Pair) {
  auto file = write("pair.json", kSl2Pair);
  auto r = cli_run({"analyze", file, "--forms"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto d = r.doc();
  EXPECT_EQ(d["tool"], "transvect");
  EXPECT_EQ(d["command"], "analyze");
  EXPECT_EQ(d["field"], "2^1");
  EXPECT_TRUE(d["result"]["irreducible"].get<bool>());
  EXPECT_EQ(d["result"]["scc_count"], 1);
  EXPECT_TRUE(d["result"]["forms"]["symplectic"].contains("gram"));
}

TEST_F(Cli, AnalyzeReducible) {
  auto file = write("one.json", R"({"field": "2^1", "generators": [{"v": [1, 0], "phi": [0, 1]}]})");
  auto r = cli_run({"analyze", file});
  ASSERT_EQ(r.code, 0) << r.err;
  auto d = r.doc();
  EXPECT_FALSE(d["result"]["irreducible"].get<bool>());
  EXPECT_EQ(d["result"]["invariant_subspace"].size(), 1u);
}

TEST_F(Cli, ClassifyGeneratedFiles) {
  auto sp = gen({"--kind", "sp-all", "--field", "2^1", "--dim", "4"}, "sp4.json");
  auto r = cli_run({"classify", sp});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.doc()["result"]["tag"], "Symplectic");
  EXPECT_EQ(r.doc()["result"]["order_enumerated"], 720);

  auto sym = gen({"--kind", "symmetric", "--m", "7"}, "s7.json");
  auto s = cli_run({"classify", sym});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(s.doc()["result"]["tag"], "SymmetricOdd");

  auto mono = gen({"--kind", "monomial", "--field", "2^2", "--dim", "3", "--a", "3"}, "m3.json");
  auto m = cli_run({"classify", mono});
  ASSERT_EQ(m.code, 0) << m.err;
  EXPECT_EQ(m.doc()["result"]["tag"], "Monomial(3)");
}

TEST_F(Cli, GenRoundTrip) {
  auto r = cli_run({"gen", "--kind", "elementary", "--field", "3^1", "--dim", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto f = io::parse_generators(r.doc());
  EXPECT_EQ(f.generators, elementary_generators(3, Field::create(3, 1)));
  EXPECT_EQ(cli_run({"gen", "--kind", "nope", "--field", "2^1"}).code, 1);
  EXPECT_EQ(cli_run({"gen", "--kind", "sl"}).code, 1);
}

TEST_F(Cli, Diameter) {
  auto file = write("pair.json", kSl2Pair);
  auto r = cli_run({"diameter", "--gens", file});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.doc()["result"]["diameter"], 3);
  EXPECT_EQ(r.doc()["result"]["order"], 6);
  auto w = cli_run({"diameter", "--gens", file, "--witness", "[[0,1],[1,0]]"});
  ASSERT_EQ(w.code, 0) << w.err;
  EXPECT_EQ(w.doc()["result"]["witness"]["distance"], 3);
  auto csv = cli_run({"diameter", "--gens", file, "--format", "csv"});
  EXPECT_EQ(csv.out, "distance,count\n0,1\n1,2\n2,2\n3,1\n");
  auto prof = cli_run({"diameter", "--gens", file, "--profile", "transvections"});
  EXPECT_EQ(prof.doc()["result"]["transvection_count"], 3);
}

TEST_F(Cli, BudgetExhaustionExitsWithTwo) {
  auto sl = gen({"--kind", "elementary", "--field", "3^1", "--dim", "3"}, "sl3.json");
  auto r = cli_run({"diameter", "--gens", sl, "--cap", "100"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("CapExceeded"), std::string::npos);
}

TEST_F(Cli, EnvironmentBudget) {
  auto sl = gen({"--kind", "elementary", "--field", "3^1", "--dim", "3"}, "sl3.json");
  ::setenv("TRANSVECT_BUDGET_ELEMENTS", "100", 1);
  auto capped = cli_run({"diameter", "--gens", sl});
  auto flagged = cli_run({"diameter", "--gens", sl, "--cap", "100000"});
  ::unsetenv("TRANSVECT_BUDGET_ELEMENTS");
  EXPECT_EQ(capped.code, 2);
  EXPECT_EQ(flagged.code, 0) << flagged.err;
}

TEST_F(Cli, InputErrorsExitWithOne) {
  auto bad = write("bad.json", R"({"field": "2^1", "generators": [{"v": [1, 0], "phi": [1, 0]}]})");
  auto r = cli_run({"classify", bad});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("NotIsotropic"), std::string::npos);
  EXPECT_EQ(cli_run({"classify", write("junk.json", "{not json")}).code, 1);
  EXPECT_EQ(cli_run({"classify", (dir_ / "missing.json").string()}).code, 1);
  EXPECT_EQ(cli_run({"frobnicate"}).code, 1);
  auto red = write("one.json", R"({"field": "2^1", "generators": [{"v": [1, 0], "phi": [0, 1]}]})");
  auto nr = cli_run({"classify", red});
  EXPECT_EQ(nr.code, 1);
  EXPECT_NE(nr.err.find("NotIrreducible"), std::string::npos);
}

TEST_F(Cli, ReproducibleOutputIsByteIdentical) {
  auto sp = gen({"--kind", "symmetric", "--m", "6"}, "s6.json");
  auto a = cli_run({"certify", sp, "--reproducible", "--post-checks", "10"});
  auto b = cli_run({"certify", sp, "--reproducible", "--post-checks", "10"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.doc()["wall_time_ms"], 0);
  auto c = a.doc()["result"];
  EXPECT_EQ(c["post_check_failures"], 0);
  // words replay against the input
  auto file = io::read_generators(sp);
  for (std::size_t i = 0; i < c["elements"].size(); ++i) {
    Word w;
    for (const auto& code : c["words"][i]) w.push_back(letter_from_code(code.get<std::int64_t>()));
    Matrix m = evaluate(w, std::span<const Transvection>(file.generators));
    auto t = Transvection::from_matrix(m);
    EXPECT_EQ(io::to_json(t.v().entries()), c["elements"][i]["v"]);
  }
}

TEST_F(Cli, OutputFile) {
  auto file = write("pair.json", kSl2Pair);
  auto out = (dir_ / "report.json").string();
  auto r = cli_run({"classify", file, "-o", out, "--reproducible"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out);
  auto d = json::parse(in);
  EXPECT_EQ(d["result"]["tag"], "Linear");
}

TEST_F(Cli, Decompose) {
  auto file = write("pair.json", kSl2Pair);
  auto r = cli_run({"decompose", "--gens", file, "--matrix", "[[1,1],[0,1]]"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.doc()["result"]["distance"], 1);
  auto v = cli_run({"decompose", "--vector", "[1,1,1,1,1,1]", "--kind", "orthogonal", "--field", "2^1"});
  ASSERT_EQ(v.code, 0) << v.err;
  auto parts = v.doc()["result"]["parts"];
  std::vector<int> sum(6, 0);
  for (const auto& p : parts)
    for (std::size_t i = 0; i < 6; ++i) sum[i] ^= p[i].get<int>();
  EXPECT_EQ(sum, std::vector<int>(6, 1));
}
