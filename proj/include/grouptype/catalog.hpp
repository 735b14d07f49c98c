#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "grouptype/group.hpp"

namespace grouptype {

// Where a catalog group comes from: a native recipe or an exported
// generator file in the data directory.
struct CatalogSource {
  enum class Kind { Builtin, File };
  Kind kind;
  std::string detail;  // recipe text or file name
};

struct CatalogEntry {
  std::string label;  // "s1" ... "s7"
  GroupId id;
  CatalogSource source;
  std::uint64_t expected_order = 0;
  std::string expected_fingerprint;  // hex, from fingerprints.json
};

struct CatalogMember {
  CatalogEntry entry;
  std::shared_ptr<const FiniteGroup> group;
  std::string actual_fingerprint;  // hex of fingerprint(exponent_type(group))
  // Empty when the group matches its entry.
  std::vector<std::string> issues;

  bool valid() const { return issues.empty(); }
};

// The seven table entries in order, without expected fingerprints.
std::vector<CatalogEntry> catalog_entries();

// label -> hex fingerprint. Throws CatalogError on a missing or malformed file.
std::map<std::string, std::string> read_fingerprints(const std::filesystem::path& path);

enum class CatalogCheck {
  Strict,  // throw on the first mismatch
  Record,  // keep going and list mismatches in CatalogMember::issues
};

// Builds and validates S1..S7. Files s1.grp, s2.grp, s3.grp, s6.grp and
// fingerprints.json are read from data_dir. Under Strict, throws
// FingerprintMismatch or CatalogError naming the entry. ParseError and
// missing files always throw.
std::vector<CatalogMember> build_catalog(const std::filesystem::path& data_dir,
                                         CatalogCheck check = CatalogCheck::Strict);

// Builds one catalog group by label without validation.
std::shared_ptr<const FiniteGroup> build_catalog_group(const std::string& label,
                                                       const std::filesystem::path& data_dir);

struct FactorLists {
  std::vector<const CatalogMember*> left;   // S1, S2, S3
  std::vector<const CatalogMember*> right;  // S4, S5, S6, S7
};

FactorLists factor_lists(const std::vector<CatalogMember>& catalog);

}  // namespace grouptype
