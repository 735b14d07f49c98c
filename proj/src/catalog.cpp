#include "grouptype/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <future>

#include <json.hpp>

#include "grouptype/constructors.hpp"
#include "grouptype/errors.hpp"
#include "grouptype/grp_file.hpp"
#include "grouptype/spectra.hpp"

namespace grouptype {

namespace {

using Kind = CatalogSource::Kind;

std::shared_ptr<const FiniteGroup> build_s4() {
  // C_7 x| C_3, the generator of C_3 acting as x -> x^2 (i.e. n -> 2n mod 7)
  const auto c7 = cyclic(7);
  const auto c3 = cyclic(3);
  return std::make_shared<const FiniteGroup>(
      semidirect_product(c7, c3, {power_map(c7, 2)}).with_label("s4"));
}

}  // namespace

std::vector<CatalogEntry> catalog_entries() {
  return {
      {"s1", {168, 43}, {Kind::File, "s1.grp"}, 168, {}},
      {"s2", {1008, 289}, {Kind::File, "s2.grp"}, 1008, {}},
      {"s3", {1344, 6967}, {Kind::File, "s3.grp"}, 1344, {}},
      {"s4", {21, 1}, {Kind::Builtin, "C7 x| C3, generator acting as x -> x^2"}, 21, {}},
      {"s5", {96, 166}, {Kind::Builtin, "C12 x Q8"}, 96, {}},
      {"s6", {336, 136}, {Kind::File, "s6.grp"}, 336, {}},
      {"s7", {336, 208}, {Kind::Builtin, "PGL2(7) on the projective line"}, 336, {}},
  };
}

std::map<std::string, std::string> read_fingerprints(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw CatalogError("malformed " + path.string() + ": " + e.what());
  }
  if (!doc.is_object()) throw CatalogError(path.string() + " must hold a JSON object");
  std::map<std::string, std::string> out;
  for (const auto& [label, value] : doc.items()) {
    if (!value.is_string()) throw CatalogError(path.string() + ": fingerprint of " + label + " is not a string");
    out.emplace(label, value.get<std::string>());
  }
  return out;
}

std::shared_ptr<const FiniteGroup> build_catalog_group(const std::string& label,
                                                       const std::filesystem::path& data_dir) {
  if (label == "s4") return build_s4();
  if (label == "s5") {
    return std::make_shared<const FiniteGroup>(
        direct_product(cyclic(12), generalized_quaternion(8)).with_label("s5"));
  }
  if (label == "s7") return std::make_shared<const FiniteGroup>(pgl2(7).with_label("s7"));
  for (const auto& entry : catalog_entries()) {
    if (entry.label == label) {
      const auto path = data_dir / entry.source.detail;
      if (!std::filesystem::exists(path)) throw CatalogError("missing catalog file " + path.string());
      return std::make_shared<const FiniteGroup>(from_generator_file(path).with_label(label));
    }
  }
  throw UnknownTarget("unknown catalog label '" + label + "'");
}

std::vector<CatalogMember> build_catalog(const std::filesystem::path& data_dir, CatalogCheck check) {
  const auto fingerprints = read_fingerprints(data_dir / "fingerprints.json");
  auto entries = catalog_entries();

  std::vector<std::future<std::shared_ptr<const FiniteGroup>>> pending;
  for (const auto& entry : entries) {
    pending.push_back(std::async(std::launch::async,
                                 [label = entry.label, data_dir] { return build_catalog_group(label, data_dir); }));
  }

  std::vector<CatalogMember> members;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    auto& entry = entries[k];
    const auto fp = fingerprints.find(entry.label);
    if (fp == fingerprints.end()) throw CatalogError("fingerprints.json has no entry for " + entry.label);
    entry.expected_fingerprint = fp->second;

    CatalogMember member{entry, pending[k].get(), {}, {}};
    member.actual_fingerprint = to_hex(fingerprint(exponent_type(*member.group)));

    if (entry.source.kind == Kind::File) {
      const auto& id = member.group->provenance();
      if (!id || !(*id == entry.id)) {
        member.issues.push_back(entry.label + ": smallgroup header " +
                                (id ? std::to_string(id->order) + " " + std::to_string(id->index)
                                    : std::string("missing")) +
                                " does not match (" + std::to_string(entry.id.order) + ", " +
                                std::to_string(entry.id.index) + ")");
      }
    }
    if (member.group->order() != entry.expected_order) {
      member.issues.push_back(entry.label + ": order " + std::to_string(member.group->order()) +
                              " differs from expected " + std::to_string(entry.expected_order));
    }
    if (member.actual_fingerprint != entry.expected_fingerprint) {
      FingerprintMismatch mismatch(entry.label, entry.expected_fingerprint, member.actual_fingerprint);
      if (check == CatalogCheck::Strict) throw mismatch;
      member.issues.emplace_back(mismatch.what());
    }
    if (check == CatalogCheck::Strict && !member.issues.empty()) throw CatalogError(member.issues.front());
    members.push_back(std::move(member));
  }
  return members;
}

FactorLists factor_lists(const std::vector<CatalogMember>& catalog) {
  FactorLists lists;
  for (const auto& m : catalog) {
    const bool left = m.entry.label == "s1" || m.entry.label == "s2" || m.entry.label == "s3";
    (left ? lists.left : lists.right).push_back(&m);
  }
  if (lists.left.size() != 3 || lists.right.size() != 4) throw CatalogError("catalog is incomplete");
  return lists;
}

}  // namespace grouptype
