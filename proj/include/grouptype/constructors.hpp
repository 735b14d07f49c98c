#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "grouptype/action_table.hpp"
#include "grouptype/group.hpp"

namespace grouptype {

// Permutation group on n points generated by (1 2 ... n).
FiniteGroup cyclic(std::uint64_t n);
// Dihedral group of the given ORDER; order 2 gives C_2. Throws OddOrder
// for odd or < 2 orders.
FiniteGroup dihedral(std::uint64_t order);
// Q_{order} on the quaternion normal-form domain, generators a and b.
// Throws NotMultipleOfFour / TooSmall.
FiniteGroup generalized_quaternion(std::uint64_t order);
// A_degree for 3 <= degree <= 8. Throws DegreeOutOfRange.
FiniteGroup alternating(std::uint32_t degree);
// PGL_2(p) acting on the projective line, points 1..p for 0..p-1 and p+1
// for infinity. Throws NotPrime (p must be a prime <= 31).
FiniteGroup pgl2(std::uint32_t p);

// Product-pair domain, generators (a, 1) then (1, b). Throws OrderOverflow
// if |A| |B| does not fit in 64 bits.
FiniteGroup direct_product(const FiniteGroup& left, const FiniteGroup& right,
                           std::uint64_t cap = kDefaultCap);

// Semidirect-pair domain with generators (n, 1) then (1, h). genAction[g]
// is the map induced by H's g-th generator on N's element indices.
FiniteGroup semidirect_product(const FiniteGroup& normal, const FiniteGroup& quotient,
                               const std::vector<IndexMap>& gen_action,
                               std::uint64_t cap = kDefaultCap);

// Projective-line point for a field value (0 .. p-1) or infinity (p).
inline std::uint32_t projective_point(std::uint32_t value) { return value + 1; }

// Smallest primitive root modulo the prime p.
std::uint32_t smallest_primitive_root(std::uint32_t p);
bool is_prime(std::uint64_t n);

}  // namespace grouptype
