#include <doctest.h>

#include <numeric>
#include <regex>
#include <sstream>

#include "grouptype/commands.hpp"
#include "grouptype/constructors.hpp"
#include "grouptype/errors.hpp"
#include "grouptype/grp_file.hpp"
#include "test_support.hpp"

using namespace grouptype;
using testing_support::ScratchData;
using testing_support::slurp;
using testing_support::spit;

namespace {

const std::filesystem::path kData = GROUPTYPE_TEST_DATA_DIR;
const std::filesystem::path kGolden = GROUPTYPE_TEST_GOLDEN_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

template <class F>
Run run(F&& f) {
  std::ostringstream out, err;
  const int code = f(out, err);
  return {code, out.str(), err.str()};
}

Run verify(const std::filesystem::path& data, bool json) {
  return run([&](auto& o, auto& e) { return cmd_verify(data, json, o, e); });
}

Run compare(const std::vector<std::string>& l, const std::vector<std::string>& r, const std::filesystem::path& data) {
  return run([&](auto& o, auto& e) { return cmd_compare(l, r, data, true, o, e); });
}

Run collide(const std::vector<std::string>& targets, const std::filesystem::path& data) {
  return run([&](auto& o, auto& e) { return cmd_collide(targets, data, true, o, e); });
}

}  // namespace

TEST_CASE("verify reproduces the golden report") {
  const auto text = verify(kData, false);
  CHECK(text.code == kExitOk);
  CHECK(text.err.empty());
  CHECK(text.out == slurp(kGolden / "verify.txt"));

  const auto json = verify(kData, true);
  CHECK(json.code == kExitOk);
  CHECK(json.out == slurp(kGolden / "verify.json"));
  CHECK(verify(kData, true).out == json.out);
}

TEST_CASE("verify text and JSON carry the same numbers") {
  const auto doc = nlohmann::json::parse(verify(kData, true).out);
  const auto text = verify(kData, false).out;
  CHECK(doc["divisors"].size() == 16);
  CHECK(doc["left_order"] == 227'598'336);
  CHECK(doc["right_order"] == 227'598'336);
  CHECK(doc["left_exponent"] == 168);
  CHECK(doc["right_exponent"] == 168);
  CHECK(doc["conclusion"] == true);
  CHECK(doc["claims_hold"] == true);
  CHECK(doc["order_types_equal"] == true);
  CHECK(doc["left_solvable"]["all"] == true);
  CHECK(doc["right_solvable"]["all"] == false);

  const std::regex row(R"(^\s*(\d+)\s+(\d+)\s+(\d+)\s+(yes|no)$)");
  std::istringstream lines(text);
  std::size_t k = 0;
  for (std::string line; std::getline(lines, line);) {
    std::smatch m;
    if (!std::regex_match(line, m, row)) continue;
    REQUIRE(k < doc["per_divisor"].size());
    const auto& d = doc["per_divisor"][k++];
    CHECK(std::stoull(m[1]) == d["n"].get<std::uint64_t>());
    CHECK(std::stoull(m[2]) == d["left_product"].get<std::uint64_t>());
    CHECK(std::stoull(m[3]) == d["right_product"].get<std::uint64_t>());
    CHECK((m[4] == "yes") == d["equal"].get<bool>());
  }
  CHECK(k == 16);
}

TEST_CASE("verify report fields") {
  const auto report = build_verification_report(build_catalog(kData));
  CHECK(report.claims_hold());
  CHECK_FALSE(report.first_failing_divisor().has_value());
  CHECK(report.first_failure().empty());
  CHECK(report.left_factors.size() == 3);
  CHECK(report.right_factors.size() == 4);
  CHECK(report.right_factors.back().label == "s7");
  CHECK_FALSE(report.right_factors.back().solvable);
}

TEST_CASE("verify fails when a catalog file is replaced by another group") {
  ScratchData scratch(kData);
  // C1344 = C64 x C3 x C7: orders still match, spectra do not.
  GrpFile file;
  file.id = GroupId{1344, 6967};
  file.degree = 74;
  std::vector<std::uint32_t> c64(64), c7(7);
  std::iota(c64.begin(), c64.end(), 1u);
  std::iota(c7.begin(), c7.end(), 68u);
  file.generators.push_back(Permutation::from_cycles(74, {c64, {65, 66, 67}, c7}));
  spit(scratch / "s3.grp", format_grp(file));

  const auto r = verify(scratch.path(), true);
  CHECK(r.code == kExitCheckFailed);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["conclusion"] == false);
  CHECK(doc["claims_hold"] == false);
  CHECK(doc["first_failure"].get<std::string>().find("divisor 2:") != std::string::npos);
  CHECK(r.err.find("verify failed") != std::string::npos);
  CHECK_FALSE(doc["catalog_issues"].empty());
}

TEST_CASE("verify reports missing data as a data error") {
  ScratchData scratch(kData);
  std::filesystem::remove(scratch / "s1.grp");
  const auto r = verify(scratch.path(), false);
  CHECK(r.code == kExitDataError);
  CHECK(r.err.find("s1.grp") != std::string::npos);
}

TEST_CASE("spectrum") {
  SUBCASE("c12 as JSON") {
    const auto r = run([](auto& o, auto& e) { return cmd_spectrum("c12", kData, true, o, e); });
    CHECK(r.code == kExitOk);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["order"] == 12);
    CHECK(doc["exponent"] == 12);
    CHECK(doc["order_type"]["12"] == 4);
    CHECK(doc["exponent_type"]["6"] == 6);
    CHECK(doc["smallgroup"].is_null());
  }
  SUBCASE("pgl2_7 as text") {
    const auto r = run([](auto& o, auto& e) { return cmd_spectrum("pgl2_7", kData, false, o, e); });
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("order:    336") != std::string::npos);
    CHECK(r.out.find("solvable: no") != std::string::npos);
  }
  SUBCASE("a catalog label and the same file by path agree") {
    const auto a = run([](auto& o, auto& e) { return cmd_spectrum("s1", kData, true, o, e); });
    const auto b = run([](auto& o, auto& e) { return cmd_spectrum((kData / "s1.grp").string(), kData, true, o, e); });
    const auto da = nlohmann::json::parse(a.out);
    const auto db = nlohmann::json::parse(b.out);
    CHECK(da["fingerprint"] == db["fingerprint"]);
    CHECK(db["smallgroup"] == nlohmann::json::array({168, 43}));
  }
  SUBCASE("unknown targets and bad parameters") {
    const auto r = run([](auto& o, auto& e) { return cmd_spectrum("zz", kData, false, o, e); });
    CHECK(r.code == kExitDataError);
    CHECK(r.err.find("zz") != std::string::npos);
    CHECK(run([](auto& o, auto& e) { return cmd_spectrum("d7", kData, false, o, e); }).code == kExitDataError);
    CHECK(run([](auto& o, auto& e) { return cmd_spectrum("q10", kData, false, o, e); }).code == kExitDataError);
  }
}

TEST_CASE("resolve_target") {
  CHECK(resolve_target("c5", kData)->order() == 5);
  CHECK(resolve_target("d10", kData)->order() == 10);
  CHECK(resolve_target("q12", kData)->order() == 12);
  CHECK(resolve_target("a5", kData)->order() == 60);
  CHECK(resolve_target("pgl2_5", kData)->order() == 120);
  CHECK(resolve_target("s5", kData)->order() == 96);
  CHECK_THROWS_AS(resolve_target("c", kData), UnknownTarget);
  CHECK_THROWS_AS(resolve_target("x7", kData), UnknownTarget);

  ScratchData scratch(kData);
  spit(scratch / "e.grp", "degree 3\ngen ()\ngen (1 2 3)\n");
  std::ostringstream warnings;
  CHECK(resolve_target((scratch / "e.grp").string(), kData, &warnings)->order() == 3);
  CHECK_FALSE(warnings.str().empty());
}

TEST_CASE("default_data_dir") {
  CHECK(default_data_dir(std::string("/x/y")) == std::filesystem::path("/x/y"));
  CHECK_FALSE(default_data_dir(std::nullopt).empty());
}

TEST_CASE("compare") {
  SUBCASE("C2 x C3 against C6") {
    const auto r = compare({"c2", "c3"}, {"c6"}, kData);
    CHECK(r.code == kExitOk);
    CHECK(nlohmann::json::parse(r.out)["equal"] == true);
  }
  SUBCASE("the catalog split") {
    const auto r = compare({"s1", "s2", "s3"}, {"s4", "s5", "s6", "s7"}, kData);
    CHECK(r.code == kExitOk);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["left_solvable"] == true);
    CHECK(doc["right_solvable"] == false);
  }
  SUBCASE("C4 against C2 x C2 differs first at 2") {
    const auto r = compare({"c4"}, {"c2", "c2"}, kData);
    CHECK(r.code == kExitCheckFailed);
    CHECK(nlohmann::json::parse(r.out)["first_unequal_divisor"] == 2);
  }
  SUBCASE("overflowing products exit with the overflow code") {
    const std::vector<std::string> many(8, "pgl2_7");
    const auto r = compare(many, {"c2"}, kData);
    CHECK(r.code == kExitOverflow);
    CHECK(r.err.find("overflow") != std::string::npos);
  }
}

TEST_CASE("collide") {
  ScratchData scratch(kData);
  GrpFile c2c3;
  c2c3.degree = 5;
  c2c3.generators = {Permutation::from_cycles(5, {{1, 2}}), Permutation::from_cycles(5, {{3, 4, 5}})};
  spit(scratch / "c2c3.grp", format_grp(c2c3));

  SUBCASE("C6 and C2 x C3 share a class") {
    const auto doc = nlohmann::json::parse(collide({"c6", (scratch / "c2c3.grp").string()}, kData).out);
    REQUIRE(doc["collisions"].size() == 1);
    CHECK(doc["collisions"][0]["members"].size() == 2);
    CHECK(doc["collisions"][0]["mixed_solvability"] == false);
  }
  SUBCASE("C4, Q8 and D8 are pairwise distinct") {
    const auto r = collide({"c4", "q8", "d8"}, kData);
    CHECK(r.code == kExitOk);
    CHECK(nlohmann::json::parse(r.out)["collisions"].empty());
  }
  SUBCASE("the seven catalog groups are pairwise distinct") {
    const auto doc = nlohmann::json::parse(collide({"s1", "s2", "s3", "s4", "s5", "s6", "s7"}, kData).out);
    CHECK(doc["targets"].size() == 7);
    CHECK(doc["collisions"].empty());
  }
  SUBCASE("an unknown target is a data error") {
    CHECK(collide({"c4", "nope"}, kData).code == kExitDataError);
  }
}
