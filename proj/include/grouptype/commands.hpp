#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "grouptype/catalog.hpp"
#include "grouptype/group.hpp"

namespace grouptype {

// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitDataError = 2,
  kExitOverflow = 3,
};

// Builtin names: c<n>, d<order>, q<order>, a<degree>, pgl2_<p>, s1 ... s7.
// Anything else is read as a .grp path; parser warnings go to `warnings`.
// Throws UnknownTarget.
std::shared_ptr<const FiniteGroup> resolve_target(const std::string& target,
                                                  const std::filesystem::path& data_dir,
                                                  std::ostream* warnings = nullptr);

// --data, then $GROUPTYPE_DATA, then the compiled-in default.
std::filesystem::path default_data_dir(const std::optional<std::string>& flag);

struct DivisorRow {
  std::uint64_t n = 0;
  std::uint64_t left_product = 0;
  std::uint64_t right_product = 0;
  bool equal = false;
};

struct FactorSolvability {
  std::string label;
  bool solvable = false;
};

struct VerificationReport {
  std::vector<std::uint64_t> divisors;
  std::vector<DivisorRow> per_divisor;
  std::uint64_t left_order = 0;
  std::uint64_t right_order = 0;
  std::uint64_t left_exponent = 0;
  std::uint64_t right_exponent = 0;
  std::vector<FactorSolvability> left_factors;
  std::vector<FactorSolvability> right_factors;
  bool left_solvable = false;
  bool right_solvable = false;
  bool order_types_equal = false;
  std::vector<std::string> catalog_issues;
  // All divisors equal, equal orders and equal exponents.
  bool conclusion = false;

  std::optional<std::uint64_t> first_failing_divisor() const;
  // Spectra equal, every left factor solvable and s7 not solvable.
  bool claims_hold() const;
  // First failed claim in reading order, or empty.
  std::string first_failure() const;
};

VerificationReport build_verification_report(const std::vector<CatalogMember>& catalog);
nlohmann::ordered_json to_json(const VerificationReport& report);
std::string render_text(const VerificationReport& report);

int cmd_verify(const std::filesystem::path& data_dir, bool json, std::ostream& out, std::ostream& err);
int cmd_spectrum(const std::string& target, const std::filesystem::path& data_dir, bool json,
                 std::ostream& out, std::ostream& err);
int cmd_compare(const std::vector<std::string>& left, const std::vector<std::string>& right,
                const std::filesystem::path& data_dir, bool json, std::ostream& out, std::ostream& err);
int cmd_collide(const std::vector<std::string>& targets, const std::filesystem::path& data_dir, bool json,
                std::ostream& out, std::ostream& err);

}  // namespace grouptype
