#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "grouptype/group.hpp"

namespace grouptype {

enum class SpectrumKind { OrderType, ExponentType };

std::string_view kind_name(SpectrumKind kind);

// All divisors of a modulus in ascending order.
struct DivisorSet {
  std::uint64_t modulus = 1;
  std::vector<std::uint64_t> divisors;
};

DivisorSet divisors(std::uint64_t m);
// Möbius function by trial factorization.
int mobius(std::uint64_t n);

// An integer function on the divisors of `modulus`.
//
// For OrderType, count(n) is the number of elements of order exactly n. For
// ExponentType, count(n) is the number of x with x^n = 1; it extends to every
// positive n by count(n) = count(gcd(n, modulus)).
class Spectrum {
 public:
  // Validates the invariants of `kind` and throws std::invalid_argument if
  // counts does not line up with the divisors of modulus.
  Spectrum(SpectrumKind kind, std::uint64_t modulus, std::vector<std::uint64_t> counts);

  SpectrumKind kind() const { return kind_; }
  std::uint64_t modulus() const { return modulus_; }
  std::span<const std::uint64_t> divisors() const { return divisors_; }
  std::span<const std::uint64_t> counts() const { return counts_; }
  // count(d) for a divisor d of the modulus; throws std::out_of_range otherwise.
  std::uint64_t count_at_divisor(std::uint64_t d) const;
  // Order of the underlying group.
  std::uint64_t total() const;

  bool operator==(const Spectrum&) const = default;

 private:
  SpectrumKind kind_;
  std::uint64_t modulus_;
  std::vector<std::uint64_t> divisors_;
  std::vector<std::uint64_t> counts_;
};

Spectrum order_type(const FiniteGroup& group);
Spectrum exponent_type(const FiniteGroup& group);

// e(gcd(n, modulus)) for any n >= 1.
std::uint64_t e_at(const Spectrum& spectrum, std::uint64_t n);

// Möbius inversion over the divisor lattice. Throws NegativeCount if the
// input is not a genuine exponent type.
Spectrum order_from_exponent(const Spectrum& exponent_spectrum);
// Divisor sums: e(n) = sum over d | n of o(d).
Spectrum exponent_from_order(const Spectrum& order_spectrum);

// Exponent type of the direct product. Throws CountOverflow naming the
// first divisor whose product overflows 64 bits.
Spectrum spectrum_product(std::span<const Spectrum> factors);

// Compares the gcd-extended functions on every divisor of the joint
// modulus. Throws KindMismatch if the kinds differ.
bool spectra_equal(const Spectrum& a, const Spectrum& b);

// ASCII "<tag>|<modulus>|d:c,d:c,..." with tag 'o' or 'e'.
std::string fingerprint(const Spectrum& spectrum);
std::string to_hex(std::string_view bytes);

}  // namespace grouptype
