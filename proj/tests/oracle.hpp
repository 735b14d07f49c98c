#pragma once

// Brute-force reference groups for the test suites. Nothing here touches the
// library: every group is built from its own concrete model and all counts
// come from testing x^n = 1 directly.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

// Finite group given as an explicit element list with a multiplication.
template <class T>
struct Model {
  std::vector<T> elements;
  std::function<T(const T&, const T&)> mul;
  T identity;

  std::uint64_t order() const { return elements.size(); }

  T power(const T& x, std::uint64_t n) const {
    T r = identity;
    for (std::uint64_t k = 0; k < n; ++k) r = mul(r, x);
    return r;
  }

  // #{x : x^n = 1}
  std::uint64_t e(std::uint64_t n) const {
    return static_cast<std::uint64_t>(
        std::count_if(elements.begin(), elements.end(), [&](const T& x) { return power(x, n) == identity; }));
  }

  std::uint64_t element_order(const T& x) const {
    std::uint64_t t = 1;
    for (T y = x; !(y == identity); y = mul(y, x)) ++t;
    return t;
  }

  // order -> count
  std::map<std::uint64_t, std::uint64_t> order_type() const {
    std::map<std::uint64_t, std::uint64_t> out;
    for (const auto& x : elements) ++out[element_order(x)];
    return out;
  }

  std::uint64_t exponent() const {
    std::uint64_t m = 1;
    for (const auto& x : elements) m = std::lcm(m, element_order(x));
    return m;
  }
};

// Closure of {identity} under right multiplication by gens.
template <class T>
Model<T> close(std::vector<T> gens, std::function<T(const T&, const T&)> mul, T identity) {
  Model<T> m{{identity}, mul, identity};
  std::set<T> seen{identity};
  for (std::size_t pos = 0; pos < m.elements.size(); ++pos) {
    for (const auto& g : gens) {
      T next = mul(m.elements[pos], g);
      if (seen.insert(next).second) m.elements.push_back(next);
    }
  }
  return m;
}

// Z/n under addition.
inline Model<int> cyclic(int n) {
  Model<int> m{{}, [n](const int& a, const int& b) { return (a + b) % n; }, 0};
  for (int k = 0; k < n; ++k) m.elements.push_back(k);
  return m;
}

// Unit quaternions +-1, +-i, +-j, +-k as integer 4-vectors (Hamilton product).
using Quat = std::array<int, 4>;
inline Quat hamilton(const Quat& p, const Quat& q) {
  return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
          p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
          p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
          p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}
inline Model<Quat> quaternion8() {
  return close<Quat>({{0, 1, 0, 0}, {0, 0, 1, 0}}, hamilton, {1, 0, 0, 0});
}

// Q_{4k} inside SL_2(F_q) for a prime q = 1 mod 2k: a = diag(z, 1/z) with z
// of multiplicative order 2k, b = [[0, -1], [1, 0]].
using IMat = std::array<long long, 4>;
inline Model<IMat> quaternion_matrices(int k) {
  long long q = 2 * k + 1;
  auto prime = [](long long n) {
    for (long long d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return n > 1;
  };
  while (!prime(q)) q += 2 * k;
  auto mult_order = [q](long long x) {
    long long t = 1;
    for (long long y = x % q; y != 1; y = y * x % q) ++t;
    return t;
  };
  long long z = 2;
  while (mult_order(z) != 2 * k) ++z;
  long long z_inv = 1;
  while (z * z_inv % q != 1) ++z_inv;
  auto mul = [q](const IMat& x, const IMat& y) {
    return IMat{(x[0] * y[0] + x[1] * y[2]) % q, (x[0] * y[1] + x[1] * y[3]) % q,
                (x[2] * y[0] + x[3] * y[2]) % q, (x[2] * y[1] + x[3] * y[3]) % q};
  };
  return close<IMat>({{z, 0, 0, z_inv}, {0, q - 1, 1, 0}}, mul, {1, 0, 0, 1});
}

// Symmetries of the regular m-gon as affine maps x -> s x + t on vertex
// labels mod m, s = +-1: rotation x -> x + 1, reflection x -> -x.
using Affine = std::pair<int, int>;  // x -> first * x + second (mod m)
inline Model<Affine> dihedral_affine(int m) {
  auto mul = [m](const Affine& f, const Affine& g) {
    // apply f then g
    return Affine{(g.first * f.first % m + m) % m, ((g.first * f.second + g.second) % m + m) % m};
  };
  return close<Affine>({{1, 1}, {m - 1, 0}}, mul, {1, 0});
}

// x -> a x + b over Z/p, a restricted to the subgroup generated by `a_gen`.
inline Model<Affine> affine_subgroup(int p, int a_gen) {
  auto mul = [p](const Affine& f, const Affine& g) {
    return Affine{g.first * f.first % p, (g.first * f.second + g.second) % p};
  };
  return close<Affine>({{1, 1}, {a_gen, 0}}, mul, {1, 0});
}

// Even permutations of {0,1,2,3}, by filtering all 24 by parity.
using Perm4 = std::array<int, 4>;
inline Model<Perm4> alternating4() {
  Model<Perm4> m{{}, [](const Perm4& f, const Perm4& g) {
                   Perm4 r{};
                   for (int k = 0; k < 4; ++k) r[k] = g[f[k]];
                   return r;
                 },
                 {0, 1, 2, 3}};
  Perm4 p{0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) inversions += p[a] > p[b];
    if (inversions % 2 == 0) m.elements.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return m;
}

// PGL_2(p) as invertible 2x2 matrices over F_p modulo scalars. Each class is
// stored by its representative scaled so the first nonzero entry is 1.
using Mat2 = std::array<int, 4>;
inline Mat2 normalize(Mat2 m, int p) {
  int lead = 0;
  for (int v : m) {
    if (v % p != 0) {
      lead = v;
      break;
    }
  }
  int inv = 1;
  for (int c = 1; c < p; ++c) {
    if (lead * c % p == 1) inv = c;
  }
  for (auto& v : m) v = v * inv % p;
  return m;
}
inline Model<Mat2> pgl2_matrices(int p) {
  Model<Mat2> m{{},
                [p](const Mat2& x, const Mat2& y) {
                  return normalize({(x[0] * y[0] + x[1] * y[2]) % p, (x[0] * y[1] + x[1] * y[3]) % p,
                                    (x[2] * y[0] + x[3] * y[2]) % p, (x[2] * y[1] + x[3] * y[3]) % p},
                                   p);
                },
                {1, 0, 0, 1}};
  std::set<Mat2> seen;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < p; ++d) {
          if (((a * d - b * c) % p + p) % p == 0) continue;
          auto n = normalize({a, b, c, d}, p);
          if (seen.insert(n).second) m.elements.push_back(n);
        }
  return m;
}

// Direct product of two models.
template <class A, class B>
Model<std::pair<A, B>> product(const Model<A>& x, const Model<B>& y) {
  Model<std::pair<A, B>> m{{},
                           [mx = x.mul, my = y.mul](const std::pair<A, B>& s, const std::pair<A, B>& t) {
                             return std::pair<A, B>{mx(s.first, t.first), my(s.second, t.second)};
                           },
                           {x.identity, y.identity}};
  for (const auto& a : x.elements)
    for (const auto& b : y.elements) m.elements.push_back({a, b});
  return m;
}

// Divisors by direct scan.
inline std::vector<std::uint64_t> divisors_by_scan(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= m; ++d) {
    if (m % d == 0) out.push_back(d);
  }
  return out;
}

}  // namespace oracle
