// grouptype: order types, exponent types and solvability of finite groups.
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grouptype/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Order types, exponent types and solvability of finite groups"};
  app.require_subcommand(1);

  std::string data_flag;
  bool json = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--data", data_flag, "Catalog data directory (default: $GROUPTYPE_DATA)");
    cmd->add_flag("--json", json, "Emit JSON instead of a text table");
  };

  auto* verify = app.add_subcommand("verify", "Check the seven-group order-type counterexample");
  add_common(verify);

  std::string target;
  auto* spectrum = app.add_subcommand("spectrum", "Order, exponent, spectra and solvability of one group");
  spectrum->add_option("target", target, "Builtin name (c12, d8, q16, a4, pgl2_7, s1..s7) or .grp file")
      ->required();
  add_common(spectrum);

  std::vector<std::string> left;
  std::vector<std::string> right;
  auto* compare = app.add_subcommand("compare", "Compare exponent types of two direct products");
  compare->add_option("--left", left, "Factors of the left product")->required();
  compare->add_option("--right", right, "Factors of the right product")->required();
  add_common(compare);

  std::vector<std::string> targets;
  auto* collide = app.add_subcommand("collide", "Group targets by exponent type");
  collide->add_option("targets", targets, "Two or more targets")->required()->expected(2, -1);
  add_common(collide);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : grouptype::kExitDataError;
  }

  const auto data_dir = grouptype::default_data_dir(
      data_flag.empty() ? std::nullopt : std::optional<std::string>(data_flag));

  if (*verify) return grouptype::cmd_verify(data_dir, json, std::cout, std::cerr);
  if (*spectrum) return grouptype::cmd_spectrum(target, data_dir, json, std::cout, std::cerr);
  if (*compare) return grouptype::cmd_compare(left, right, data_dir, json, std::cout, std::cerr);
  if (*collide) return grouptype::cmd_collide(targets, data_dir, json, std::cout, std::cerr);
  return grouptype::kExitDataError;
}
