#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grouptype/element.hpp"
#include "grouptype/group.hpp"

namespace grouptype {

// Parsed contents of a `.grp` generator file.
//
//   # comment
//   smallgroup <n> <i>        optional
//   degree <d>                required, before any gen line
//   gen (1 2 3)(5 6)          one or more
//
// `gen ()` is the identity: it is dropped with a warning.
struct GrpFile {
  std::optional<GroupId> id;
  std::uint32_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<std::string> warnings;
};

// Throws ParseError naming `source` and the 1-based line number.
GrpFile parse_grp(std::string_view text, const std::string& source = "<input>");
GrpFile read_grp(const std::filesystem::path& path);

// Inverse of parse_grp for well-formed data.
std::string format_grp(const GrpFile& file);

// Enumerated permutation group with provenance taken from the header. If
// every generator was the identity the group is trivial.
FiniteGroup from_generator_file(const std::filesystem::path& path, std::uint64_t cap = kDefaultCap);
FiniteGroup group_from_grp(const GrpFile& file, std::string label, std::uint64_t cap = kDefaultCap);

}  // namespace grouptype
