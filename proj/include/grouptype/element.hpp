#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace grouptype {

class Element;
class ActionTable;
std::string canonical_encode(const Element& a);

// A bijection of {1, ..., degree}. Points are 1-based at the interface and
// 0-based in storage.
class Permutation {
 public:
  static Permutation identity(std::uint32_t degree);
  // images[k-1] is the image of point k. Throws MalformedElement unless the
  // images form a bijection of {1, ..., images.size()}.
  static Permutation from_images(std::span<const std::uint32_t> images);
  // Disjoint or not, cycles are applied left to right. Throws
  // MalformedElement on out-of-range or repeated points within a cycle.
  static Permutation from_cycles(std::uint32_t degree,
                                 const std::vector<std::vector<std::uint32_t>>& cycles);

  std::uint32_t degree() const { return static_cast<std::uint32_t>(images_.size()); }
  std::uint32_t image(std::uint32_t point) const { return images_[point - 1] + 1; }
  std::vector<std::uint32_t> images() const;
  bool is_identity() const;

  // Apply *this first, then other.
  Permutation then(const Permutation& other) const;
  Permutation inverse() const;
  // Nontrivial cycles in ascending order of their smallest point.
  std::vector<std::vector<std::uint32_t>> cycles() const;
  // lcm of cycle lengths.
  std::uint64_t order() const;
  std::string to_string() const;

  bool operator==(const Permutation&) const = default;

 private:
  explicit Permutation(std::vector<std::uint32_t> zero_based) : images_(std::move(zero_based)) {}
  friend class Element;
  friend std::string canonical_encode(const Element& a);
  std::vector<std::uint32_t> images_;
};

// a^i b^j in Q_{4k} = <a, b | a^{2k} = 1, b^2 = a^k, b a b^-1 = a^-1>.
struct QuaternionElement {
  std::uint32_t k = 2;
  std::uint32_t i = 0;
  std::uint32_t j = 0;

  bool operator==(const QuaternionElement&) const = default;
};

struct ProductPair {
  std::shared_ptr<const Element> left;
  std::shared_ptr<const Element> right;
};

// (n, h) in N x| H. All pairs built on the same ActionTable share a domain.
struct SemidirectPair {
  std::shared_ptr<const Element> normal;
  std::shared_ptr<const Element> quot;
  std::shared_ptr<const ActionTable> action;
};

// Immutable value in one of the element domains.
class Element {
 public:
  using Value = std::variant<Permutation, QuaternionElement, ProductPair, SemidirectPair>;

  Element(Permutation p) : value_(std::move(p)) {}
  // Throws MalformedElement if (k, i, j) is not in normal form or k < 1.
  Element(QuaternionElement q);
  static Element product(Element left, Element right);
  static Element semidirect(Element normal, Element quot, std::shared_ptr<const ActionTable> action);

  const Value& value() const { return value_; }
  const Permutation* as_permutation() const { return std::get_if<Permutation>(&value_); }
  const QuaternionElement* as_quaternion() const { return std::get_if<QuaternionElement>(&value_); }
  const ProductPair* as_product() const { return std::get_if<ProductPair>(&value_); }
  const SemidirectPair* as_semidirect() const { return std::get_if<SemidirectPair>(&value_); }

  bool same_domain(const Element& other) const;
  Element identity() const;

  bool operator==(const Element& other) const;

  std::string to_string() const;

 private:
  explicit Element(Value v) : value_(std::move(v)) {}
  Value value_;
};

// Group law with the "apply left operand first" convention. Throws
// DomainMismatch if the operands live in different domains.
Element compose(const Element& a, const Element& b);
Element inverse(const Element& a);
Element power(const Element& a, std::uint64_t exponent);
std::uint64_t element_order(const Element& a);
// Order by repeated composition, ignoring any domain shortcut.
std::uint64_t element_order_by_iteration(const Element& a);
bool is_identity(const Element& a);

// Injective, deterministic byte string. Composite encodings are built from
// length-prefixed component encodings.
std::string canonical_encode(const Element& a);

}  // namespace grouptype
