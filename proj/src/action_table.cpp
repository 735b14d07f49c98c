#include "grouptype/action_table.hpp"

#include <numeric>

#include "grouptype/errors.hpp"

namespace grouptype {

namespace {

void check_bijection(const FiniteGroup& normal, const IndexMap& map, std::size_t generator) {
  if (map.size() != normal.order()) {
    throw NotABijection("image of generator " + std::to_string(generator) + " has " +
                        std::to_string(map.size()) + " entries, expected " +
                        std::to_string(normal.order()));
  }
  std::vector<char> hit(map.size(), 0);
  for (auto v : map) {
    if (v >= map.size() || hit[v]) {
      throw NotABijection("image of generator " + std::to_string(generator) +
                          " is not a bijection of the normal subgroup's elements");
    }
    hit[v] = 1;
  }
}

void check_automorphism(const FiniteGroup& normal, const IndexMap& map, std::size_t generator) {
  const auto n = normal.order();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (map[normal.multiply(x, y)] != normal.multiply(map[x], map[y])) {
        throw NotAnAutomorphism("automorphism law fails for generator " + std::to_string(generator) +
                                ": alpha(x y) != alpha(x) alpha(y) at x = " +
                                normal.element(x).to_string() +
                                ", y = " + normal.element(y).to_string());
      }
    }
  }
}

}  // namespace

std::shared_ptr<const ActionTable> ActionTable::from_generator_images(
    std::shared_ptr<const FiniteGroup> normal, std::shared_ptr<const FiniteGroup> quotient,
    const std::vector<IndexMap>& generator_images) {
  const auto gens = quotient->generators();
  if (generator_images.size() != gens.size()) {
    throw ActionError("expected " + std::to_string(gens.size()) + " generator images, got " +
                      std::to_string(generator_images.size()));
  }
  for (std::size_t g = 0; g < gens.size(); ++g) {
    check_bijection(*normal, generator_images[g], g);
    check_automorphism(*normal, generator_images[g], g);
  }

  // Breadth-first over H from the identity. Reaching h g from h gives
  // alpha(h g) = alpha(h) o alpha(g); a second word for the same element must
  // induce the same map pointwise.
  const auto h_order = quotient->order();
  std::vector<IndexMap> maps(h_order);
  std::vector<char> known(h_order, 0);
  maps[0] = identity_map(*normal);
  known[0] = 1;
  std::vector<std::size_t> queue{0};
  std::vector<std::size_t> gen_index(gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g) gen_index[g] = quotient->require_index(gens[g]);

  for (std::size_t pos = 0; pos < queue.size(); ++pos) {
    const auto h = queue[pos];
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const auto hg = quotient->multiply(h, gen_index[g]);
      IndexMap composed(normal->order());
      for (std::size_t x = 0; x < composed.size(); ++x) composed[x] = maps[h][generator_images[g][x]];
      if (!known[hg]) {
        known[hg] = 1;
        maps[hg] = std::move(composed);
        queue.push_back(hg);
      } else if (maps[hg] != composed) {
        throw InconsistentAction("action is ill-defined: two words for " +
                                 quotient->element(hg).to_string() +
                                 " induce different maps (homomorphism law fails)");
      }
    }
  }

  auto table = std::shared_ptr<ActionTable>(new ActionTable());
  table->normal_ = std::move(normal);
  table->quotient_ = std::move(quotient);
  table->maps_ = std::move(maps);
  return table;
}

Element ActionTable::apply(const Element& h, const Element& n) const {
  return normal_->element(maps_[quotient_->require_index(h)][normal_->require_index(n)]);
}

bool ActionTable::is_trivial() const {
  const auto id = identity_map(*normal_);
  for (const auto& m : maps_) {
    if (m != id) return false;
  }
  return true;
}

IndexMap power_map(const FiniteGroup& normal, std::uint64_t e) {
  IndexMap map(normal.order());
  for (std::size_t x = 0; x < map.size(); ++x) map[x] = normal.require_index(power(normal.element(x), e));
  return map;
}

IndexMap identity_map(const FiniteGroup& normal) {
  IndexMap map(normal.order());
  std::iota(map.begin(), map.end(), std::size_t{0});
  return map;
}

IndexMap map_from_function(const FiniteGroup& normal,
                           const std::function<Element(const Element&)>& f) {
  IndexMap map(normal.order());
  for (std::size_t x = 0; x < map.size(); ++x) map[x] = normal.require_index(f(normal.element(x)));
  return map;
}

}  // namespace grouptype
