#include "grouptype/constructors.hpp"

#include <limits>

#include "grouptype/errors.hpp"

namespace grouptype {

namespace {

Permutation cycle_on(std::uint32_t degree, std::vector<std::uint32_t> points) {
  return Permutation::from_cycles(degree, {std::move(points)});
}

std::vector<std::uint32_t> range_1_to(std::uint32_t n) {
  std::vector<std::uint32_t> out(n);
  for (std::uint32_t k = 0; k < n; ++k) out[k] = k + 1;
  return out;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint32_t smallest_primitive_root(std::uint32_t p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (p == 2) return 1;
  std::vector<std::uint64_t> factors;
  std::uint64_t m = p - 1;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  for (std::uint32_t c = 2; c < p; ++c) {
    bool primitive = true;
    for (auto q : factors) {
      if (mod_pow(c, (p - 1) / q, p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return c;
  }
  throw std::logic_error("no primitive root found");
}

FiniteGroup cyclic(std::uint64_t n) {
  if (n < 1) throw InvalidParameter("cyclic group order must be positive");
  if (n > std::numeric_limits<std::uint32_t>::max()) throw InvalidParameter("cyclic group order too large");
  const auto degree = static_cast<std::uint32_t>(n);
  const Element gen = n == 1 ? Element(Permutation::identity(1)) : Element(cycle_on(degree, range_1_to(degree)));
  return enumerate_closure(std::span(&gen, 1), kDefaultCap, "C" + std::to_string(n));
}

FiniteGroup dihedral(std::uint64_t order) {
  if (order < 2 || order % 2 != 0) {
    throw OddOrder("dihedral group order must be even and at least 2, got " + std::to_string(order));
  }
  const auto label = "D" + std::to_string(order);
  if (order == 2) return cyclic(2).with_label(label);
  const auto m = static_cast<std::uint32_t>(order / 2);
  // D_4 = C_2 x C_2 has no faithful action on 2 points; use the regular
  // square (4 points) instead.
  const std::uint32_t degree = m == 2 ? 4 : m;
  std::vector<Element> gens;
  if (m == 2) {
    gens.emplace_back(Permutation::from_cycles(4, {{1, 2}, {3, 4}}));
    gens.emplace_back(Permutation::from_cycles(4, {{1, 3}, {2, 4}}));
  } else {
    gens.emplace_back(cycle_on(degree, range_1_to(degree)));
    // k -> 2 - k mod m, fixing point 1
    std::vector<std::vector<std::uint32_t>> reflection;
    for (std::uint32_t a = 2, b = m; a < b; ++a, --b) reflection.push_back({a, b});
    gens.emplace_back(Permutation::from_cycles(degree, reflection));
  }
  return enumerate_closure(gens, kDefaultCap, label);
}

FiniteGroup generalized_quaternion(std::uint64_t order) {
  if (order % 4 != 0) {
    throw NotMultipleOfFour("quaternion group order must be a multiple of 4, got " + std::to_string(order));
  }
  if (order < 8) throw TooSmall("quaternion group order must be at least 8, got " + std::to_string(order));
  const auto k = static_cast<std::uint32_t>(order / 4);
  const std::vector<Element> gens{Element(QuaternionElement{k, 1, 0}), Element(QuaternionElement{k, 0, 1})};
  return enumerate_closure(gens, kDefaultCap, "Q" + std::to_string(order));
}

FiniteGroup alternating(std::uint32_t degree) {
  if (degree < 3 || degree > 8) {
    throw DegreeOutOfRange("alternating group degree must be in 3..8, got " + std::to_string(degree));
  }
  // (1 2 3), (2 3 4), ..., (n-2 n-1 n)
  std::vector<Element> gens;
  for (std::uint32_t k = 3; k <= degree; ++k) gens.emplace_back(cycle_on(degree, {k - 2, k - 1, k}));
  return enumerate_closure(gens, kDefaultCap, "A" + std::to_string(degree));
}

FiniteGroup pgl2(std::uint32_t p) {
  if (!is_prime(p) || p > 31) throw NotPrime("pgl2 needs a prime p <= 31, got " + std::to_string(p));
  const std::uint32_t infinity = p;
  const std::uint32_t degree = p + 1;
  const std::uint32_t c = smallest_primitive_root(p);

  auto mobius = [&](auto&& f) {
    std::vector<std::uint32_t> images(degree);
    for (std::uint32_t x = 0; x <= p; ++x) images[projective_point(x) - 1] = projective_point(f(x));
    return Permutation::from_images(images);
  };
  auto inv_mod = [&](std::uint32_t x) { return static_cast<std::uint32_t>(mod_pow(x, p - 2, p)); };

  std::vector<Element> gens;
  gens.emplace_back(mobius([&](std::uint32_t x) { return x == infinity ? infinity : (x + 1) % p; }));
  if (c != 1) {
    gens.emplace_back(mobius([&](std::uint32_t x) { return x == infinity ? infinity : (c * x) % p; }));
  }
  gens.emplace_back(mobius([&](std::uint32_t x) {
    if (x == infinity) return 0u;
    if (x == 0) return infinity;
    return inv_mod(x);
  }));
  return enumerate_closure(gens, kDefaultCap, "PGL2(" + std::to_string(p) + ")");
}

FiniteGroup direct_product(const FiniteGroup& left, const FiniteGroup& right, std::uint64_t cap) {
  std::uint64_t expected = 0;
  if (__builtin_mul_overflow(left.order(), right.order(), &expected)) {
    throw OrderOverflow("order of " + left.label() + " x " + right.label() + " overflows 64 bits");
  }
  std::vector<Element> gens;
  for (const auto& a : left.generators()) gens.push_back(Element::product(a, right.identity()));
  for (const auto& b : right.generators()) gens.push_back(Element::product(left.identity(), b));
  auto group = enumerate_closure(gens, cap, left.label() + " x " + right.label());
  if (group.order() != expected) throw std::logic_error("direct product order mismatch");
  return group;
}

FiniteGroup semidirect_product(const FiniteGroup& normal, const FiniteGroup& quotient,
                               const std::vector<IndexMap>& gen_action, std::uint64_t cap) {
  auto table = ActionTable::from_generator_images(std::make_shared<const FiniteGroup>(normal),
                                                  std::make_shared<const FiniteGroup>(quotient),
                                                  gen_action);
  std::vector<Element> gens;
  for (const auto& n : normal.generators()) gens.push_back(Element::semidirect(n, quotient.identity(), table));
  for (const auto& h : quotient.generators()) gens.push_back(Element::semidirect(normal.identity(), h, table));
  auto group = enumerate_closure(gens, cap, normal.label() + " x| " + quotient.label());
  if (group.order() != normal.order() * quotient.order()) {
    throw std::logic_error("semidirect product order mismatch");
  }
  return group;
}

}  // namespace grouptype
