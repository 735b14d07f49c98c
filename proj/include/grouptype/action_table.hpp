#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "grouptype/element.hpp"
#include "grouptype/group.hpp"

namespace grouptype {

// A bijection of N's element set, written on N's element indices.
using IndexMap = std::vector<std::size_t>;

// The action alpha: H -> Aut(N) of a semidirect product, materialized on
// every element of H. Satisfies alpha(h1 h2) = alpha(h1) o alpha(h2), i.e.
// alpha(h1 h2)(x) = alpha(h1)(alpha(h2)(x)).
class ActionTable {
 public:
  // generator_images[g] is the image of H's g-th generator. Validates
  // bijectivity (NotABijection), the automorphism law (NotAnAutomorphism)
  // and well-definedness of the closure over H (InconsistentAction).
  static std::shared_ptr<const ActionTable> from_generator_images(
      std::shared_ptr<const FiniteGroup> normal, std::shared_ptr<const FiniteGroup> quotient,
      const std::vector<IndexMap>& generator_images);

  const FiniteGroup& normal() const { return *normal_; }
  const FiniteGroup& quotient() const { return *quotient_; }
  const std::shared_ptr<const FiniteGroup>& normal_ptr() const { return normal_; }
  const std::shared_ptr<const FiniteGroup>& quotient_ptr() const { return quotient_; }

  // Image of N's element n_index under alpha of H's element h_index.
  std::size_t apply_index(std::size_t h_index, std::size_t n_index) const {
    return maps_[h_index][n_index];
  }
  const IndexMap& map_of(std::size_t h_index) const { return maps_[h_index]; }
  Element apply(const Element& h, const Element& n) const;

  bool is_trivial() const;

 private:
  ActionTable() = default;
  std::shared_ptr<const FiniteGroup> normal_;
  std::shared_ptr<const FiniteGroup> quotient_;
  std::vector<IndexMap> maps_;
};

// x -> x^e on N's elements. Only an automorphism when gcd(e, |N|) = 1 and
// N is abelian; validation happens in ActionTable.
IndexMap power_map(const FiniteGroup& normal, std::uint64_t e);
IndexMap identity_map(const FiniteGroup& normal);
// Pointwise map from an element function.
IndexMap map_from_function(const FiniteGroup& normal,
                           const std::function<Element(const Element&)>& f);

}  // namespace grouptype
