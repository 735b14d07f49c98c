#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "grouptype/element.hpp"

namespace grouptype {

// Position (n, i) of a group in the small-groups library. Provenance only.
struct GroupId {
  std::uint64_t order = 0;
  std::uint64_t index = 0;

  bool operator==(const GroupId&) const = default;
};

inline constexpr std::uint64_t kDefaultCap = 10'000'000;

// Generators plus the fully enumerated element set. Immutable once built;
// elements()[0] is always the identity and the order is the breadth-first
// discovery order from the generators.
class FiniteGroup {
 public:
  const std::string& label() const { return label_; }
  std::span<const Element> generators() const { return generators_; }
  std::span<const Element> elements() const { return elements_; }
  const Element& element(std::size_t index) const { return elements_[index]; }
  const Element& identity() const { return elements_.front(); }
  std::uint64_t order() const { return elements_.size(); }
  std::uint64_t exponent() const { return exponent_; }
  std::span<const std::uint64_t> element_orders() const { return orders_; }
  const std::optional<GroupId>& provenance() const { return provenance_; }

  std::optional<std::size_t> index_of(const Element& e) const;
  // Throws ElementNotInGroup.
  std::size_t require_index(const Element& e) const;
  bool contains(const Element& e) const { return index_of(e).has_value(); }

  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse_index(std::size_t a) const;

  FiniteGroup with_label(std::string label) const;
  FiniteGroup with_provenance(std::optional<GroupId> id) const;

 private:
  friend FiniteGroup enumerate_closure(std::span<const Element>, std::uint64_t, std::string);

  std::string label_;
  std::vector<Element> generators_;
  std::vector<Element> elements_;
  std::vector<std::uint64_t> orders_;
  std::uint64_t exponent_ = 1;
  std::optional<GroupId> provenance_;
  std::shared_ptr<const std::unordered_map<std::string, std::size_t>> index_;
};

// Breadth-first closure of {identity} under right multiplication by the
// generators, taken in declaration order. Throws CapExceeded once more
// than `cap` elements have been discovered, DomainMismatch on mixed
// domains, and std::invalid_argument on an empty generator list or zero cap.
FiniteGroup enumerate_closure(std::span<const Element> generators, std::uint64_t cap = kDefaultCap,
                              std::string label = {});

std::uint64_t exponent(const FiniteGroup& group);

// A subset of a parent group's elements closed under the group law, held
// as sorted parent indices.
class Subgroup {
 public:
  Subgroup(std::shared_ptr<const FiniteGroup> parent, std::vector<std::size_t> members);

  const FiniteGroup& parent() const { return *parent_; }
  const std::shared_ptr<const FiniteGroup>& parent_ptr() const { return parent_; }
  std::span<const std::size_t> members() const { return members_; }
  std::uint64_t order() const { return members_.size(); }
  bool contains_index(std::size_t index) const;
  bool is_trivial() const { return members_.size() == 1; }
  bool is_whole() const { return members_.size() == parent_->order(); }

  bool operator==(const Subgroup& other) const { return members_ == other.members_; }

 private:
  std::shared_ptr<const FiniteGroup> parent_;
  std::vector<std::size_t> members_;
};

Subgroup whole_group(std::shared_ptr<const FiniteGroup> group);

// Smallest subgroup containing every element of `seed`. Throws
// ElementNotInGroup if a seed element is outside the group.
Subgroup subgroup_generated(std::shared_ptr<const FiniteGroup> group, std::span<const Element> seed);
Subgroup subgroup_generated_by_indices(std::shared_ptr<const FiniteGroup> group,
                                       std::span<const std::size_t> seed);

// Generated by all commutators x^-1 y^-1 x y over x, y in the (sub)group.
Subgroup derived_subgroup(std::shared_ptr<const FiniteGroup> group);
Subgroup derived_subgroup(const Subgroup& subgroup);

// G, G', G'', ... up to and including the first repeated term.
std::vector<Subgroup> derived_series(std::shared_ptr<const FiniteGroup> group);
bool is_solvable(std::shared_ptr<const FiniteGroup> group);
bool is_solvable(const FiniteGroup& group);
// The trivial group counts as perfect.
bool is_perfect(std::shared_ptr<const FiniteGroup> group);
bool is_perfect(const FiniteGroup& group);
bool is_perfect(const Subgroup& subgroup);

// True iff every member's conjugate by every parent generator stays inside.
bool is_normal(const Subgroup& subgroup);

}  // namespace grouptype
