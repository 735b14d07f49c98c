#include "grouptype/spectra.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "grouptype/errors.hpp"

namespace grouptype {

std::string_view kind_name(SpectrumKind kind) {
  return kind == SpectrumKind::OrderType ? "order_type" : "exponent_type";
}

DivisorSet divisors(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("divisors of 0 are not defined");
  DivisorSet set{m, {}};
  std::vector<std::uint64_t> large;
  for (std::uint64_t d = 1; d <= m / d; ++d) {
    if (m % d != 0) continue;
    set.divisors.push_back(d);
    if (d != m / d) large.push_back(m / d);
  }
  set.divisors.insert(set.divisors.end(), large.rbegin(), large.rend());
  return set;
}

int mobius(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("mobius(0) is not defined");
  int sign = 1;
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

Spectrum::Spectrum(SpectrumKind kind, std::uint64_t modulus, std::vector<std::uint64_t> counts)
    : kind_(kind), modulus_(modulus), divisors_(grouptype::divisors(modulus).divisors), counts_(std::move(counts)) {
  if (counts_.size() != divisors_.size()) {
    throw std::invalid_argument("spectrum has " + std::to_string(counts_.size()) + " counts but " +
                                std::to_string(modulus_) + " has " + std::to_string(divisors_.size()) +
                                " divisors");
  }
  if (counts_.front() != 1) throw std::invalid_argument("spectrum count at 1 must be 1");
  if (kind_ == SpectrumKind::ExponentType) {
    for (std::size_t a = 0; a < divisors_.size(); ++a) {
      for (std::size_t b = a + 1; b < divisors_.size(); ++b) {
        if (divisors_[b] % divisors_[a] == 0 && counts_[a] > counts_[b]) {
          throw std::invalid_argument("exponent type is not monotone under divisibility at " +
                                      std::to_string(divisors_[a]) + " | " + std::to_string(divisors_[b]));
        }
      }
    }
  }
}

std::uint64_t Spectrum::count_at_divisor(std::uint64_t d) const {
  const auto it = std::lower_bound(divisors_.begin(), divisors_.end(), d);
  if (it == divisors_.end() || *it != d) {
    throw std::out_of_range(std::to_string(d) + " does not divide " + std::to_string(modulus_));
  }
  return counts_[static_cast<std::size_t>(it - divisors_.begin())];
}

std::uint64_t Spectrum::total() const {
  if (kind_ == SpectrumKind::ExponentType) return counts_.back();
  std::uint64_t sum = 0;
  for (auto c : counts_) sum += c;
  return sum;
}

Spectrum order_type(const FiniteGroup& group) {
  const auto ds = divisors(group.exponent()).divisors;
  std::vector<std::uint64_t> counts(ds.size(), 0);
  for (auto ord : group.element_orders()) {
    const auto it = std::lower_bound(ds.begin(), ds.end(), ord);
    ++counts[static_cast<std::size_t>(it - ds.begin())];
  }
  return Spectrum(SpectrumKind::OrderType, group.exponent(), std::move(counts));
}

Spectrum exponent_type(const FiniteGroup& group) { return exponent_from_order(order_type(group)); }

Spectrum exponent_from_order(const Spectrum& order_spectrum) {
  if (order_spectrum.kind() != SpectrumKind::OrderType) throw KindMismatch("expected an order type");
  const auto ds = order_spectrum.divisors();
  const auto os = order_spectrum.counts();
  std::vector<std::uint64_t> counts(ds.size(), 0);
  for (std::size_t n = 0; n < ds.size(); ++n) {
    for (std::size_t d = 0; d <= n; ++d) {
      if (ds[n] % ds[d] == 0) counts[n] += os[d];
    }
  }
  return Spectrum(SpectrumKind::ExponentType, order_spectrum.modulus(), std::move(counts));
}

std::uint64_t e_at(const Spectrum& spectrum, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("e_at needs n >= 1");
  return spectrum.count_at_divisor(std::gcd(n, spectrum.modulus()));
}

Spectrum order_from_exponent(const Spectrum& exponent_spectrum) {
  if (exponent_spectrum.kind() != SpectrumKind::ExponentType) throw KindMismatch("expected an exponent type");
  const auto ds = exponent_spectrum.divisors();
  const auto es = exponent_spectrum.counts();
  std::vector<std::uint64_t> counts(ds.size(), 0);
  for (std::size_t n = 0; n < ds.size(); ++n) {
    // o(n) = sum over d | n of mu(n/d) e(d)
    __int128 sum = 0;
    for (std::size_t d = 0; d <= n; ++d) {
      if (ds[n] % ds[d] == 0) sum += static_cast<__int128>(mobius(ds[n] / ds[d])) * es[d];
    }
    if (sum < 0) {
      throw NegativeCount("Möbius inversion yields a negative count at " + std::to_string(ds[n]) +
                          "; input is not an exponent type");
    }
    counts[n] = static_cast<std::uint64_t>(sum);
  }
  return Spectrum(SpectrumKind::OrderType, exponent_spectrum.modulus(), std::move(counts));
}

Spectrum spectrum_product(std::span<const Spectrum> factors) {
  if (factors.empty()) throw std::invalid_argument("spectrum_product needs at least one factor");
  std::uint64_t modulus = 1;
  for (const auto& f : factors) {
    if (f.kind() != SpectrumKind::ExponentType) throw KindMismatch("spectrum_product multiplies exponent types");
    modulus = std::lcm(modulus, f.modulus());
  }
  const auto ds = divisors(modulus).divisors;
  std::vector<std::uint64_t> counts(ds.size(), 1);
  for (std::size_t k = 0; k < ds.size(); ++k) {
    for (const auto& f : factors) {
      if (__builtin_mul_overflow(counts[k], e_at(f, ds[k]), &counts[k])) throw CountOverflow(ds[k]);
    }
  }
  return Spectrum(SpectrumKind::ExponentType, modulus, std::move(counts));
}

bool spectra_equal(const Spectrum& a, const Spectrum& b) {
  if (a.kind() != b.kind()) {
    throw KindMismatch(std::string("cannot compare ") + std::string(kind_name(a.kind())) + " with " +
                       std::string(kind_name(b.kind())));
  }
  const auto joint = divisors(std::lcm(a.modulus(), b.modulus())).divisors;
  if (a.kind() == SpectrumKind::OrderType) {
    // No element order lies outside the divisors of the modulus: extend by zero.
    auto o_at = [](const Spectrum& s, std::uint64_t n) -> std::uint64_t {
      return s.modulus() % n == 0 ? s.count_at_divisor(n) : 0;
    };
    for (auto n : joint) {
      if (o_at(a, n) != o_at(b, n)) return false;
    }
    return true;
  }
  for (auto n : joint) {
    if (e_at(a, n) != e_at(b, n)) return false;
  }
  return true;
}

std::string fingerprint(const Spectrum& spectrum) {
  std::string out = spectrum.kind() == SpectrumKind::OrderType ? "o" : "e";
  out += '|';
  out += std::to_string(spectrum.modulus());
  out += '|';
  const auto ds = spectrum.divisors();
  const auto cs = spectrum.counts();
  for (std::size_t k = 0; k < ds.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(ds[k]);
    out += ':';
    out += std::to_string(cs[k]);
  }
  return out;
}

std::string to_hex(std::string_view bytes) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

}  // namespace grouptype
