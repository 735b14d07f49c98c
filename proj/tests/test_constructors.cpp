#include <doctest.h>

#include <set>

#include "grouptype/constructors.hpp"
#include "grouptype/errors.hpp"
#include "grouptype/spectra.hpp"
#include "oracle.hpp"
#include "test_support.hpp"

using namespace grouptype;
using testing_support::as_map;
using testing_support::share;

namespace {

using Counts = std::map<std::uint64_t, std::uint64_t>;

template <class T>
void check_against_model(const FiniteGroup& g, const oracle::Model<T>& m) {
  CAPTURE(g.label());
  CHECK(g.order() == m.order());
  CHECK(g.exponent() == m.exponent());
  CHECK(as_map(order_type(g)) == m.order_type());
  const auto e = exponent_type(g);
  for (auto d : e.divisors()) CHECK(e.count_at_divisor(d) == m.e(d));
}

}  // namespace

TEST_CASE("cyclic") {
  CHECK(cyclic(1).order() == 1);
  CHECK(cyclic(12).order() == 12);
  CHECK(cyclic(12).exponent() == 12);
  for (int n : {1, 2, 6, 12, 21}) check_against_model(cyclic(n), oracle::cyclic(n));
  CHECK_THROWS_AS(cyclic(0), InvalidParameter);
}

TEST_CASE("dihedral") {
  CHECK(dihedral(2).order() == 2);
  CHECK(dihedral(4).order() == 4);
  CHECK(dihedral(4).exponent() == 2);
  CHECK(as_map(order_type(dihedral(6))) == Counts{{1, 1}, {2, 3}, {3, 2}});
  CHECK(as_map(order_type(dihedral(8))) == Counts{{1, 1}, {2, 5}, {4, 2}});
  for (int m : {3, 4, 5, 6, 10}) check_against_model(dihedral(2 * m), oracle::dihedral_affine(m));
  CHECK_THROWS_AS(dihedral(7), OddOrder);
  CHECK_THROWS_AS(dihedral(0), OddOrder);
  CHECK_THROWS_AS(dihedral(7), InvalidParameter);
}

TEST_CASE("generalized_quaternion") {
  const auto q8 = generalized_quaternion(8);
  CHECK(as_map(order_type(q8)) == Counts{{1, 1}, {2, 1}, {4, 6}});
  check_against_model(q8, oracle::quaternion8());
  CHECK(as_map(order_type(generalized_quaternion(12))) == Counts{{1, 1}, {2, 1}, {3, 2}, {4, 6}, {6, 2}});
  const auto q16 = generalized_quaternion(16);
  CHECK(as_map(order_type(q16)) == Counts{{1, 1}, {2, 1}, {4, 10}, {8, 4}});
  CHECK(as_map(exponent_type(q16)) == Counts{{1, 1}, {2, 2}, {4, 12}, {8, 16}});
  for (int k : {2, 3, 4, 5, 6}) check_against_model(generalized_quaternion(4 * k), oracle::quaternion_matrices(k));
  CHECK_THROWS_AS(generalized_quaternion(10), NotMultipleOfFour);
  CHECK_THROWS_AS(generalized_quaternion(4), TooSmall);
}

TEST_CASE("alternating") {
  const std::map<std::uint32_t, std::uint64_t> orders{{3, 3},   {4, 12},   {5, 60},
                                                      {6, 360}, {7, 2520}, {8, 20160}};
  for (const auto& [degree, order] : orders) CHECK(alternating(degree).order() == order);
  const auto a4 = alternating(4);
  CHECK(as_map(order_type(a4)) == Counts{{1, 1}, {2, 3}, {3, 8}});
  CHECK(as_map(exponent_type(a4)) == Counts{{1, 1}, {2, 4}, {3, 9}, {6, 12}});
  check_against_model(a4, oracle::alternating4());
  CHECK_THROWS_AS(alternating(2), DegreeOutOfRange);
  CHECK_THROWS_AS(alternating(9), DegreeOutOfRange);
}

TEST_CASE("pgl2") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) CHECK(pgl2(p).order() == std::uint64_t{p} * (p * p - 1));
  CHECK(pgl2(5).exponent() == 60);
  const auto s7 = pgl2(7);
  CHECK(s7.exponent() == 168);
  CHECK(as_map(order_type(s7)) == Counts{{1, 1}, {2, 49}, {3, 56}, {4, 42}, {6, 56}, {7, 48}, {8, 84}});
  for (int p : {2, 3, 5, 7}) check_against_model(pgl2(p), oracle::pgl2_matrices(p));
  CHECK_THROWS_AS(pgl2(4), NotPrime);
  CHECK_THROWS_AS(pgl2(37), NotPrime);
  CHECK_THROWS_AS(pgl2(1), NotPrime);
}

TEST_CASE("pgl2 is sharply 3-transitive on the projective line") {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const auto g = pgl2(p);
    std::set<std::array<std::uint32_t, 3>> images;
    for (const auto& e : g.elements()) {
      const auto& perm = std::get<Permutation>(e.value());
      images.insert({perm.image(1), perm.image(2), perm.image(3)});
    }
    const std::uint64_t n = p + 1;
    CHECK(images.size() == g.order());
    CHECK(images.size() == n * (n - 1) * (n - 2));
  }
}

TEST_CASE("primitive roots") {
  CHECK(smallest_primitive_root(2) == 1);
  CHECK(smallest_primitive_root(7) == 3);
  CHECK(smallest_primitive_root(23) == 5);
  CHECK(is_prime(31));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("direct_product") {
  const auto g = direct_product(cyclic(12), generalized_quaternion(8));
  CHECK(g.order() == 96);
  CHECK(as_map(order_type(g)) == Counts{{1, 1}, {2, 3}, {3, 2}, {4, 28}, {6, 6}, {12, 56}});
  check_against_model(g, oracle::product(oracle::cyclic(12), oracle::quaternion8()));
  const auto c2c3 = direct_product(cyclic(2), cyclic(3));
  CHECK(spectra_equal(order_type(c2c3), order_type(cyclic(6))));
  CHECK_FALSE(spectra_equal(order_type(direct_product(cyclic(2), cyclic(2))), order_type(cyclic(4))));
  CHECK_THROWS_AS(direct_product(alternating(5), alternating(5), 3599), CapExceeded);
}

TEST_CASE("exponent type of a direct product is the pointwise product") {
  const std::vector<FiniteGroup> pool{cyclic(2), cyclic(3), cyclic(4), generalized_quaternion(8), alternating(4)};
  for (const auto& a : pool) {
    for (const auto& b : pool) {
      const auto ab = direct_product(a, b);
      const auto ea = exponent_type(a);
      const auto eb = exponent_type(b);
      const auto eab = exponent_type(ab);
      CAPTURE(ab.label());
      for (std::uint64_t n = 1; n <= 30; ++n) REQUIRE(e_at(eab, n) == e_at(ea, n) * e_at(eb, n));
    }
  }
}

TEST_CASE("semidirect_product") {
  const auto c7 = cyclic(7);
  const auto c3 = cyclic(3);
  SUBCASE("trivial action gives the direct product") {
    const auto g = semidirect_product(c7, c3, {identity_map(c7)});
    CHECK(g.order() == 21);
    CHECK(spectra_equal(order_type(g), order_type(direct_product(c7, c3))));
    CHECK(as_map(order_type(g)) == Counts{{1, 1}, {3, 2}, {7, 6}, {21, 12}});
  }
  SUBCASE("x -> x^2 gives the non-abelian group of order 21") {
    const auto g = semidirect_product(c7, c3, {power_map(c7, 2)});
    CHECK(g.order() == 21);
    CHECK(g.exponent() == 21);
    CHECK(as_map(order_type(g)) == Counts{{1, 1}, {3, 14}, {7, 6}});
    CHECK(as_map(exponent_type(g)) == Counts{{1, 1}, {3, 15}, {7, 7}, {21, 21}});
    check_against_model(g, oracle::affine_subgroup(7, 2));
    CHECK(is_solvable(g));
    CHECK(derived_subgroup(share(g)).order() == 7);
  }
  SUBCASE("Klein four acted on by C3 gives A4") {
    const auto v4 = dihedral(4);
    // Cycle the three involutions of V4.
    const auto& a = v4.generators()[0];
    const auto& b = v4.generators()[1];
    const auto ab = compose(a, b);
    IndexMap rotate(4);
    rotate[0] = 0;
    rotate[v4.require_index(a)] = v4.require_index(b);
    rotate[v4.require_index(b)] = v4.require_index(ab);
    rotate[v4.require_index(ab)] = v4.require_index(a);
    const auto g = semidirect_product(v4, c3, {rotate});
    CHECK(g.order() == 12);
    CHECK(spectra_equal(order_type(g), order_type(alternating(4))));
  }
  SUBCASE("an invalid action is rejected") {
    CHECK_THROWS_AS(semidirect_product(c7, c3, {power_map(c7, 3)}), InconsistentAction);
  }
}
