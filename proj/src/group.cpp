#include "grouptype/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "grouptype/errors.hpp"

namespace grouptype {

namespace {

using IndexMapType = std::unordered_map<std::string, std::size_t>;

// Dense multiplication table on a subset of parent indices. Rows and columns
// are local positions; entries are parent indices.
class LocalTable {
 public:
  LocalTable(const FiniteGroup& group, std::span<const std::size_t> members)
      : members_(members.begin(), members.end()), local_(group.order(), npos) {
    for (std::size_t k = 0; k < members_.size(); ++k) local_[members_[k]] = k;
    const auto n = members_.size();
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) table_[a * n + b] = group.multiply(members_[a], members_[b]);
    }
    inverse_.resize(n);
    const auto id = 0u;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (table_[a * n + b] == id) {
          inverse_[a] = members_[b];
          break;
        }
      }
    }
  }

  std::size_t size() const { return members_.size(); }
  std::size_t member(std::size_t local) const { return members_[local]; }
  std::size_t local(std::size_t parent_index) const { return local_[parent_index]; }
  std::size_t mul(std::size_t pa, std::size_t pb) const {
    return table_[local_[pa] * members_.size() + local_[pb]];
  }
  std::size_t inv(std::size_t pa) const { return inverse_[local_[pa]]; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<std::size_t> members_;
  std::vector<std::size_t> local_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
};

// Closure of {identity} under right multiplication by the seed, in parent
// index space. Finite, so closure under products is closure under inverses.
std::vector<std::size_t> close_indices(const FiniteGroup& group, std::span<const std::size_t> seed) {
  std::vector<std::size_t> gens;
  for (auto s : seed) {
    if (s != 0 && std::find(gens.begin(), gens.end(), s) == gens.end()) gens.push_back(s);
  }
  std::vector<char> in(group.order(), 0);
  std::vector<std::size_t> found{0};
  in[0] = 1;
  for (std::size_t pos = 0; pos < found.size(); ++pos) {
    for (auto g : gens) {
      const auto next = group.multiply(found[pos], g);
      if (!in[next]) {
        in[next] = 1;
        found.push_back(next);
      }
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<std::size_t> commutator_closure(const FiniteGroup& group,
                                            std::span<const std::size_t> members) {
  LocalTable table(group, members);
  std::vector<char> is_commutator(group.order(), 0);
  std::vector<std::size_t> commutators;
  for (std::size_t a = 0; a < table.size(); ++a) {
    const auto x = table.member(a);
    const auto x_inv = table.inv(x);
    for (std::size_t b = 0; b < table.size(); ++b) {
      const auto y = table.member(b);
      // x^-1 y^-1 x y
      const auto c = table.mul(table.mul(table.mul(x_inv, table.inv(y)), x), y);
      if (!is_commutator[c]) {
        is_commutator[c] = 1;
        commutators.push_back(c);
      }
    }
  }
  // The closure stays inside `members`, so the table suffices.
  std::vector<char> in(group.order(), 0);
  std::vector<std::size_t> found{0};
  in[0] = 1;
  for (std::size_t pos = 0; pos < found.size(); ++pos) {
    for (auto g : commutators) {
      const auto next = table.mul(found[pos], g);
      if (!in[next]) {
        in[next] = 1;
        found.push_back(next);
      }
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace

// ---------------------------------------------------------------- FiniteGroup

std::optional<std::size_t> FiniteGroup::index_of(const Element& e) const {
  if (!e.same_domain(identity())) return std::nullopt;
  const auto it = index_->find(canonical_encode(e));
  if (it == index_->end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteGroup::require_index(const Element& e) const {
  if (auto idx = index_of(e)) return *idx;
  throw ElementNotInGroup(e.to_string() + " is not an element of " +
                          (label_.empty() ? std::string("the group") : label_));
}

std::size_t FiniteGroup::multiply(std::size_t a, std::size_t b) const {
  return index_->at(canonical_encode(compose(elements_[a], elements_[b])));
}

std::size_t FiniteGroup::inverse_index(std::size_t a) const {
  return index_->at(canonical_encode(inverse(elements_[a])));
}

FiniteGroup FiniteGroup::with_label(std::string label) const {
  FiniteGroup copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

FiniteGroup FiniteGroup::with_provenance(std::optional<GroupId> id) const {
  FiniteGroup copy = *this;
  copy.provenance_ = id;
  return copy;
}

FiniteGroup enumerate_closure(std::span<const Element> generators, std::uint64_t cap,
                              std::string label) {
  if (generators.empty()) throw std::invalid_argument("enumerate_closure needs at least one generator");
  if (cap == 0) throw std::invalid_argument("enumeration cap must be positive");
  for (const auto& g : generators) {
    if (!g.same_domain(generators.front())) {
      throw DomainMismatch("generators " + generators.front().to_string() + " and " + g.to_string() +
                           " live in different domains");
    }
  }

  FiniteGroup group;
  group.label_ = std::move(label);
  group.generators_.assign(generators.begin(), generators.end());
  auto index = std::make_shared<IndexMapType>();

  group.elements_.push_back(generators.front().identity());
  index->emplace(canonical_encode(group.elements_.front()), 0);
  for (std::size_t pos = 0; pos < group.elements_.size(); ++pos) {
    for (const auto& g : generators) {
      auto next = compose(group.elements_[pos], g);
      auto key = canonical_encode(next);
      if (index->contains(key)) continue;
      if (group.elements_.size() >= cap) throw CapExceeded(cap);
      index->emplace(std::move(key), group.elements_.size());
      group.elements_.push_back(std::move(next));
    }
  }
  group.index_ = std::move(index);

  group.orders_.reserve(group.elements_.size());
  for (const auto& e : group.elements_) {
    group.orders_.push_back(element_order(e));
    group.exponent_ = std::lcm(group.exponent_, group.orders_.back());
  }
  return group;
}

std::uint64_t exponent(const FiniteGroup& group) { return group.exponent(); }

// ------------------------------------------------------------------ Subgroup

Subgroup::Subgroup(std::shared_ptr<const FiniteGroup> parent, std::vector<std::size_t> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty() || members_.front() != 0) {
    throw std::logic_error("subgroup must contain the identity");
  }
  if (parent_->order() % members_.size() != 0) {
    throw std::logic_error("subgroup order " + std::to_string(members_.size()) +
                           " does not divide group order " + std::to_string(parent_->order()));
  }
}

bool Subgroup::contains_index(std::size_t index) const {
  return std::binary_search(members_.begin(), members_.end(), index);
}

Subgroup whole_group(std::shared_ptr<const FiniteGroup> group) {
  std::vector<std::size_t> all(group->order());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return Subgroup(std::move(group), std::move(all));
}

Subgroup subgroup_generated(std::shared_ptr<const FiniteGroup> group, std::span<const Element> seed) {
  std::vector<std::size_t> indices;
  indices.reserve(seed.size());
  for (const auto& s : seed) indices.push_back(group->require_index(s));
  return subgroup_generated_by_indices(std::move(group), indices);
}

Subgroup subgroup_generated_by_indices(std::shared_ptr<const FiniteGroup> group,
                                       std::span<const std::size_t> seed) {
  for (auto s : seed) {
    if (s >= group->order()) throw ElementNotInGroup("index " + std::to_string(s) + " out of range");
  }
  auto members = close_indices(*group, seed);
  return Subgroup(std::move(group), std::move(members));
}

Subgroup derived_subgroup(std::shared_ptr<const FiniteGroup> group) {
  return derived_subgroup(whole_group(std::move(group)));
}

Subgroup derived_subgroup(const Subgroup& subgroup) {
  return Subgroup(subgroup.parent_ptr(), commutator_closure(subgroup.parent(), subgroup.members()));
}

std::vector<Subgroup> derived_series(std::shared_ptr<const FiniteGroup> group) {
  std::vector<Subgroup> series{whole_group(std::move(group))};
  while (true) {
    auto next = derived_subgroup(series.back());
    const bool stable = next.order() == series.back().order();
    series.push_back(std::move(next));
    if (stable) break;
  }
  return series;
}

bool is_solvable(std::shared_ptr<const FiniteGroup> group) {
  return derived_series(std::move(group)).back().is_trivial();
}

bool is_solvable(const FiniteGroup& group) {
  return is_solvable(std::make_shared<const FiniteGroup>(group));
}

bool is_perfect(const Subgroup& subgroup) {
  return derived_subgroup(subgroup).order() == subgroup.order();
}

bool is_perfect(std::shared_ptr<const FiniteGroup> group) {
  return is_perfect(whole_group(std::move(group)));
}

bool is_perfect(const FiniteGroup& group) {
  return is_perfect(std::make_shared<const FiniteGroup>(group));
}

bool is_normal(const Subgroup& subgroup) {
  const auto& g = subgroup.parent();
  for (const auto& gen : g.generators()) {
    const auto s = g.require_index(gen);
    const auto s_inv = g.inverse_index(s);
    for (auto m : subgroup.members()) {
      if (!subgroup.contains_index(g.multiply(g.multiply(s_inv, m), s))) return false;
    }
  }
  return true;
}

}  // namespace grouptype
