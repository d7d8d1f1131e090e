#include "regbound/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "regbound/error.hpp"

using namespace regbound;
using namespace regbound::cli;
using nlohmann::json;

namespace {

CommandResult run(std::vector<std::string> args) { return run_command(args); }

Error load_error(std::string_view source) {
  try {
    load_spec(source);
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "expected an Error for " << source;
  return Error(Errc::validation_error, "");
}

}  // namespace

TEST(LoadSpec, DocumentForms) {
  const auto curve = load_spec(R"({"family":"curve","d":4,"g":1,"r":3})");
  EXPECT_EQ(curve.n, 1);
  EXPECT_EQ(curve.r, 3);
  EXPECT_EQ(curve.hilbert.coeffs(), (std::vector<Integer>{0, 4}));

  const auto veronese = load_spec(R"({"dim":2,"ambient":5,"coeffs":[1,1,4]})");
  EXPECT_EQ(veronese.n, 2);
  EXPECT_EQ(veronese.r, 5);
  EXPECT_EQ(veronese.hilbert.coeffs(), (std::vector<Integer>{1, 1, 4}));

  const auto values = load_spec(R"({"dim":1,"ambient":3,"values":[[0,0],[1,4]]})");
  EXPECT_EQ(values.hilbert.coeffs(), (std::vector<Integer>{0, 4}));

  const auto surface = load_spec(R"({"family":"surface","d":4,"pi":0,"chi":1,"r":5,"name":"v"})");
  EXPECT_EQ(surface.name, "v");
  EXPECT_EQ(surface.hilbert, veronese.hilbert);

  const auto scroll = load_spec(R"({"family":"scroll","n":2,"d":4,"g":0,"r":5})");
  EXPECT_EQ(scroll.hilbert.coeffs(), (std::vector<Integer>{1, 1, 4}));
}

TEST(LoadSpec, CatalogAndFile) {
  EXPECT_EQ(load_spec("twisted-cubic").hilbert.coeffs(), (std::vector<Integer>{1, 3}));
  EXPECT_EQ(load_spec("rational-normal-scroll:n=2,r=5").hilbert.coeffs(), (std::vector<Integer>{1, 1, 4}));

  const auto path = std::filesystem::temp_directory_path() / "regbound_test_spec.json";
  {
    std::ofstream f(path);
    f << R"({"family":"curve","d":5,"g":2,"r":3})";
  }
  EXPECT_EQ(load_spec(path.string()).hilbert.coeffs(), (std::vector<Integer>{-1, 5}));
  std::filesystem::remove(path);
}

TEST(LoadSpec, Errors) {
  EXPECT_EQ(load_error("{not json").code(), Errc::parse_error);
  EXPECT_EQ(load_error("no-such-variety").code(), Errc::parse_error);

  const auto bad_coeff = load_error(R"({"dim":1,"ambient":3,"coeffs":[0,"x"]})");
  EXPECT_EQ(bad_coeff.code(), Errc::validation_error);
  EXPECT_NE(std::string(bad_coeff.what()).find("$.coeffs[1]"), std::string::npos);

  const auto missing = load_error(R"({"family":"curve","d":4,"r":3})");
  EXPECT_EQ(missing.code(), Errc::validation_error);
  EXPECT_NE(std::string(missing.what()).find("$.g"), std::string::npos);

  EXPECT_EQ(load_error(R"({"family":"cone","d":4,"r":3})").code(), Errc::unknown_family);
  EXPECT_EQ(load_error(R"({"dim":2,"ambient":2,"coeffs":[1,1,4]})").code(), Errc::validation_error);
  EXPECT_EQ(load_error(R"({"dim":1,"ambient":3,"values":[[0,0],[2,1]]})").code(),
            Errc::non_integral_coefficients);
  EXPECT_EQ(load_error(R"({"dim":1,"ambient":3,"values":[[0,0],[0,1]]})").code(), Errc::duplicate_abscissa);
}

TEST(RunCommand, Bound) {
  const auto res = run({"bound", "--spec", "elliptic-quartic", "--m", "2"});
  EXPECT_EQ(res.exit_code, kSuccess);
  EXPECT_NE(res.out.find("bound       3"), std::string::npos);
  EXPECT_NE(res.out.find("ran_extended"), std::string::npos);

  const auto doc = json::parse(run({"bound", "--spec", "elliptic-quartic", "--m", "2", "--format", "json"}).out);
  EXPECT_EQ(doc["bound"], 3);
  EXPECT_EQ(doc["status"], "theorem_a+ran_extended");
  EXPECT_EQ(doc["provenance"], "theorem-a");
  EXPECT_EQ(doc["checks"]["chern-class"], 3);

  EXPECT_EQ(run({"bound", "--spec", "elliptic-quartic"}).exit_code, kInvalidInput);
  EXPECT_EQ(run({"bound", "--spec", "elliptic-quartic", "--m", "7"}).exit_code, kInvalidInput);
}

TEST(RunCommand, Ranks) {
  const auto doc = json::parse(run({"ranks", "--spec", "elliptic-quartic", "--m", "2", "--format", "json"}).out);
  EXPECT_EQ(doc["ranks"], json::array({1, 3, 5}));
  EXPECT_EQ(doc["rk_e"], 3);
  EXPECT_EQ(doc["c1_e"], -1);
  EXPECT_EQ(doc["regularity_bound"], 3);

  const auto full = json::parse(run({"ranks", "--spec", "elliptic-quartic", "--format", "json"}).out);
  EXPECT_EQ(full["ranks"], json::array({1, 4, 8, 4}));
  EXPECT_EQ(full["c1_e"], -2);
}

TEST(RunCommand, CorruptedProfileExitsInconsistent) {
  const auto res = run({"ranks", "--spec", "twisted-cubic", "--perturb=-1:1"});
  EXPECT_EQ(res.exit_code, kInconsistent);
  EXPECT_NE(res.err.find("NegativeRank"), std::string::npos);
  EXPECT_EQ(run({"table", "--spec", "surface:d=2,pi=3,chi=-3,r=5"}).exit_code, kInconsistent);
}

TEST(RunCommand, Table) {
  const auto doc = json::parse(run({"table", "--spec", "elliptic-quartic", "--format", "json"}).out);
  ASSERT_EQ(doc["rows"].size(), 2u);
  for (const auto& row : doc["rows"]) {
    for (const char* key : {"m", "status", "bound", "provenance"}) EXPECT_TRUE(row.contains(key)) << key;
  }
  EXPECT_EQ(doc["rows"][0]["bound"], 3);
  EXPECT_EQ(doc["rows"][1]["bound"], 4);
  EXPECT_EQ(doc["comparisons"]["eisenbud_goto"], 3);
  EXPECT_EQ(doc["comparisons"]["mumford"], 6);
  EXPECT_EQ(doc["comparisons"]["bel"], 7);
  EXPECT_EQ(doc["best"], 3);

  const auto csv = run({"table", "--spec", "veronese-surface", "--format", "csv"});
  EXPECT_EQ(csv.out,
            "m,status,bound,eg,mumford,bel\n"
            "3,theorem_a+ran_extended,2,2,8,10\n"
            "4,theorem_a+ran_extended,2,2,8,10\n"
            "5,identity+theorem_a+ran_extended,2,2,8,10\n");

  const auto picked = json::parse(run({"table", "--spec", "veronese-surface", "--m", "4", "--format", "json"}).out);
  ASSERT_EQ(picked["rows"].size(), 1u);
  EXPECT_EQ(picked["rows"][0]["m"], 4);
}

TEST(RunCommand, AssumeFibers) {
  const auto spec = "scroll:n=4,d=9,g=2,r=10";
  const auto plain = json::parse(run({"table", "--spec", spec, "--m", "5", "--format", "json"}).out);
  EXPECT_EQ(plain["rows"][0]["status"], "unsupported");
  const auto forced =
      json::parse(run({"table", "--spec", spec, "--m", "5", "--assume-fibers", "--format", "json"}).out);
  EXPECT_EQ(forced["rows"][0]["status"], "assumed");
}

TEST(RunCommand, Splittings) {
  const auto doc = json::parse(run({"splittings", "--spec", "elliptic-quartic", "--format", "json"}).out);
  EXPECT_EQ(doc["max_secant_length"], 3);
  EXPECT_EQ(doc["component_range"], json::array({-1, 0}));
  EXPECT_EQ(doc["splittings"], json::array({json::array({0, 0, 0, -1, -1})}));

  const auto secant = run({"splittings", "--spec", "elliptic-quartic", "--secant", "3"});
  EXPECT_EQ(secant.exit_code, kSuccess);
  EXPECT_EQ(run({"splittings", "--spec", "elliptic-quartic", "--secant", "4"}).exit_code, kIncompatible);
}

TEST(RunCommand, VerifyAndCatalog) {
  const auto verify = run({"verify", "--lmax", "20", "--rmax", "30"});
  EXPECT_EQ(verify.exit_code, kSuccess);
  EXPECT_EQ(verify.out.find("FAIL"), std::string::npos);
  EXPECT_NE(verify.out.find("PASS"), std::string::npos);

  const auto catalog = run({"catalog"});
  EXPECT_EQ(catalog.exit_code, kSuccess);
  EXPECT_NE(catalog.out.find("elliptic-quartic"), std::string::npos);
  EXPECT_EQ(catalog.out.find("above"), std::string::npos);
}

TEST(RunCommand, ParseFailures) {
  EXPECT_EQ(run({}).exit_code, kInvalidInput);
  EXPECT_EQ(run({"frobnicate"}).exit_code, kInvalidInput);
  EXPECT_EQ(run({"bound", "--spec", "nope", "--m", "2"}).exit_code, kInvalidInput);
  EXPECT_EQ(run({"ranks", "--spec", "elliptic-quartic", "--format", "csv"}).exit_code, kInvalidInput);
  EXPECT_EQ(exit_code_for(Errc::route_mismatch), kInconsistent);
  EXPECT_EQ(exit_code_for(Errc::negative_rank), kInconsistent);
  EXPECT_EQ(exit_code_for(Errc::incompatible), kIncompatible);
  EXPECT_EQ(exit_code_for(Errc::parse_error), kInvalidInput);
}

TEST(RunCommand, Deterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"table", "--spec", "veronese-surface", "--format", "json"},
           {"catalog"},
           {"splittings", "--spec", "rational-normal-scroll:n=2,r=6"},
       }) {
    const auto a = run(args);
    const auto b = run(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.err, b.err);
    EXPECT_EQ(a.exit_code, b.exit_code);
  }
}
