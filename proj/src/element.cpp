#include "grouptype/element.hpp"

#include <numeric>
#include <sstream>

#include "grouptype/action_table.hpp"
#include "grouptype/errors.hpp"

namespace grouptype {

namespace {

void append_u32(std::string& out, std::uint32_t v) {
  for (int shift = 0; shift < 32; shift += 8) out.push_back(static_cast<char>((v >> shift) & 0xff));
}

void append_prefixed(std::string& out, const std::string& part) {
  append_u32(out, static_cast<std::uint32_t>(part.size()));
  out += part;
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

// ---------------------------------------------------------------- Permutation

Permutation Permutation::identity(std::uint32_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::span<const std::uint32_t> images) {
  const auto n = static_cast<std::uint32_t>(images.size());
  if (n == 0) throw MalformedElement("permutation degree must be positive");
  std::vector<bool> seen(n, false);
  std::vector<std::uint32_t> zero_based(n);
  for (std::uint32_t k = 0; k < n; ++k) {
    const auto img = images[k];
    if (img < 1 || img > n) {
      throw MalformedElement("image " + std::to_string(img) + " out of range 1.." + std::to_string(n));
    }
    if (seen[img - 1]) throw MalformedElement("image " + std::to_string(img) + " repeated");
    seen[img - 1] = true;
    zero_based[k] = img - 1;
  }
  return Permutation(std::move(zero_based));
}

Permutation Permutation::from_cycles(std::uint32_t degree,
                                     const std::vector<std::vector<std::uint32_t>>& cycles) {
  if (degree == 0) throw MalformedElement("permutation degree must be positive");
  auto result = identity(degree);
  for (const auto& cycle : cycles) {
    std::vector<bool> seen(degree, false);
    for (auto p : cycle) {
      if (p < 1 || p > degree) {
        throw MalformedElement("point " + std::to_string(p) + " out of range 1.." +
                               std::to_string(degree));
      }
      if (seen[p - 1]) throw MalformedElement("point " + std::to_string(p) + " repeated in cycle");
      seen[p - 1] = true;
    }
    if (cycle.size() < 2) continue;
    auto step = identity(degree);
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      step.images_[cycle[k] - 1] = cycle[(k + 1) % cycle.size()] - 1;
    }
    result = result.then(step);
  }
  return result;
}

std::vector<std::uint32_t> Permutation::images() const {
  std::vector<std::uint32_t> out(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) out[k] = images_[k] + 1;
  return out;
}

bool Permutation::is_identity() const {
  for (std::uint32_t k = 0; k < images_.size(); ++k) {
    if (images_[k] != k) return false;
  }
  return true;
}

Permutation Permutation::then(const Permutation& other) const {
  if (other.images_.size() != images_.size()) {
    throw DomainMismatch("permutation degrees differ: " + std::to_string(degree()) + " vs " +
                         std::to_string(other.degree()));
  }
  std::vector<std::uint32_t> out(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) out[k] = other.images_[images_[k]];
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> out(images_.size());
  for (std::uint32_t k = 0; k < images_.size(); ++k) out[images_[k]] = k;
  return Permutation(std::move(out));
}

std::vector<std::vector<std::uint32_t>> Permutation::cycles() const {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<std::uint32_t> cycle;
    for (auto p = start; !seen[p]; p = images_[p]) {
      seen[p] = true;
      cycle.push_back(p + 1);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t length = 0;
    for (auto p = start; !seen[p]; p = images_[p]) {
      seen[p] = true;
      ++length;
    }
    result = std::lcm(result, length);
  }
  return result;
}

std::string Permutation::to_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream out;
  for (const auto& c : cs) {
    out << '(';
    for (std::size_t k = 0; k < c.size(); ++k) out << (k ? " " : "") << c[k];
    out << ')';
  }
  return out.str();
}

// -------------------------------------------------------------------- Element

Element::Element(QuaternionElement q) : value_(q) {
  if (q.k < 1 || q.i >= 2 * q.k || q.j > 1) {
    throw MalformedElement("quaternion element (k=" + std::to_string(q.k) + ", i=" +
                           std::to_string(q.i) + ", j=" + std::to_string(q.j) +
                           ") is not in normal form");
  }
}

Element Element::product(Element left, Element right) {
  return Element(Value(ProductPair{std::make_shared<const Element>(std::move(left)),
                                   std::make_shared<const Element>(std::move(right))}));
}

Element Element::semidirect(Element normal, Element quot, std::shared_ptr<const ActionTable> action) {
  if (!action) throw MalformedElement("semidirect pair needs an action table");
  return Element(Value(SemidirectPair{std::make_shared<const Element>(std::move(normal)),
                                      std::make_shared<const Element>(std::move(quot)),
                                      std::move(action)}));
}

bool Element::same_domain(const Element& other) const {
  if (value_.index() != other.value_.index()) return false;
  return std::visit(
      overloaded{
          [&](const Permutation& p) { return p.degree() == other.as_permutation()->degree(); },
          [&](const QuaternionElement& q) { return q.k == other.as_quaternion()->k; },
          [&](const ProductPair& pp) {
            const auto* o = other.as_product();
            return pp.left->same_domain(*o->left) && pp.right->same_domain(*o->right);
          },
          [&](const SemidirectPair& sp) { return sp.action == other.as_semidirect()->action; },
      },
      value_);
}

Element Element::identity() const {
  return std::visit(
      overloaded{
          [](const Permutation& p) { return Element(Permutation::identity(p.degree())); },
          [](const QuaternionElement& q) { return Element(QuaternionElement{q.k, 0, 0}); },
          [](const ProductPair& pp) {
            return Element::product(pp.left->identity(), pp.right->identity());
          },
          [](const SemidirectPair& sp) {
            return Element::semidirect(sp.action->normal().identity(),
                                       sp.action->quotient().identity(), sp.action);
          },
      },
      value_);
}

bool Element::operator==(const Element& other) const {
  if (!same_domain(other)) return false;
  return std::visit(
      overloaded{
          [&](const Permutation& p) { return p == *other.as_permutation(); },
          [&](const QuaternionElement& q) { return q == *other.as_quaternion(); },
          [&](const ProductPair& pp) {
            const auto* o = other.as_product();
            return *pp.left == *o->left && *pp.right == *o->right;
          },
          [&](const SemidirectPair& sp) {
            const auto* o = other.as_semidirect();
            return *sp.normal == *o->normal && *sp.quot == *o->quot;
          },
      },
      value_);
}

std::string Element::to_string() const {
  return std::visit(
      overloaded{
          [](const Permutation& p) { return p.to_string(); },
          [](const QuaternionElement& q) {
            return "a^" + std::to_string(q.i) + (q.j ? " b" : "") + " [Q" + std::to_string(4 * q.k) +
                   "]";
          },
          [](const ProductPair& pp) {
            return "(" + pp.left->to_string() + ", " + pp.right->to_string() + ")";
          },
          [](const SemidirectPair& sp) {
            return "<" + sp.normal->to_string() + "; " + sp.quot->to_string() + ">";
          },
      },
      value_);
}

// ------------------------------------------------------------------ group law

Element compose(const Element& a, const Element& b) {
  if (!a.same_domain(b)) {
    throw DomainMismatch("cannot compose " + a.to_string() + " with " + b.to_string());
  }
  return std::visit(
      overloaded{
          [&](const Permutation& p) { return Element(p.then(*b.as_permutation())); },
          [&](const QuaternionElement& x) {
            const auto& y = *b.as_quaternion();
            const std::uint64_t two_k = 2ull * x.k;
            // (i1 + (-1)^j1 i2 + k j1 j2) mod 2k
            std::uint64_t i = x.j ? x.i + (two_k - y.i) : x.i + y.i;
            i += static_cast<std::uint64_t>(x.k) * x.j * y.j;
            return Element(QuaternionElement{x.k, static_cast<std::uint32_t>(i % two_k), x.j ^ y.j});
          },
          [&](const ProductPair& x) {
            const auto& y = *b.as_product();
            return Element::product(compose(*x.left, *y.left), compose(*x.right, *y.right));
          },
          [&](const SemidirectPair& x) {
            const auto& y = *b.as_semidirect();
            // (n1, h1)(n2, h2) = (n1 alpha(h1)(n2), h1 h2)
            auto twisted = x.action->apply(*x.quot, *y.normal);
            return Element::semidirect(compose(*x.normal, twisted), compose(*x.quot, *y.quot),
                                       x.action);
          },
      },
      a.value());
}

Element inverse(const Element& a) {
  return std::visit(
      overloaded{
          [](const Permutation& p) { return Element(p.inverse()); },
          [](const QuaternionElement& q) {
            const std::uint32_t two_k = 2 * q.k;
            // (a^i b)^2 = b^2 = a^k, so (a^i b)^-1 = a^(i+k) b
            if (q.j == 0) return Element(QuaternionElement{q.k, (two_k - q.i) % two_k, 0});
            return Element(QuaternionElement{q.k, (q.i + q.k) % two_k, 1});
          },
          [](const ProductPair& pp) { return Element::product(inverse(*pp.left), inverse(*pp.right)); },
          [](const SemidirectPair& sp) {
            // (n, h)^-1 = (alpha(h^-1)(n^-1), h^-1)
            auto h_inv = inverse(*sp.quot);
            auto n_part = sp.action->apply(h_inv, inverse(*sp.normal));
            return Element::semidirect(std::move(n_part), std::move(h_inv), sp.action);
          },
      },
      a.value());
}

Element power(const Element& a, std::uint64_t exponent) {
  Element result = a.identity();
  Element base = a;
  while (exponent > 0) {
    if (exponent & 1) result = compose(result, base);
    exponent >>= 1;
    if (exponent > 0) base = compose(base, base);
  }
  return result;
}

bool is_identity(const Element& a) {
  return std::visit(
      overloaded{
          [](const Permutation& p) { return p.is_identity(); },
          [](const QuaternionElement& q) { return q.i == 0 && q.j == 0; },
          [](const ProductPair& pp) { return is_identity(*pp.left) && is_identity(*pp.right); },
          [](const SemidirectPair& sp) { return is_identity(*sp.normal) && is_identity(*sp.quot); },
      },
      a.value());
}

std::uint64_t element_order_by_iteration(const Element& a) {
  std::uint64_t t = 1;
  for (Element x = a; !is_identity(x); x = compose(x, a)) ++t;
  return t;
}

std::uint64_t element_order(const Element& a) {
  if (const auto* p = a.as_permutation()) return p->order();
  if (const auto* pp = a.as_product()) return std::lcm(element_order(*pp->left), element_order(*pp->right));
  return element_order_by_iteration(a);
}

std::string canonical_encode(const Element& a) {
  std::string out;
  std::visit(overloaded{
                 [&](const Permutation& p) {
                   out.push_back('P');
                   append_u32(out, p.degree());
                   for (auto img : p.images_) append_u32(out, img);
                 },
                 [&](const QuaternionElement& q) {
                   out.push_back('Q');
                   append_u32(out, q.k);
                   append_u32(out, q.i);
                   out.push_back(static_cast<char>(q.j));
                 },
                 [&](const ProductPair& pp) {
                   out.push_back('X');
                   append_prefixed(out, canonical_encode(*pp.left));
                   append_prefixed(out, canonical_encode(*pp.right));
                 },
                 [&](const SemidirectPair& sp) {
                   out.push_back('S');
                   append_prefixed(out, canonical_encode(*sp.normal));
                   append_prefixed(out, canonical_encode(*sp.quot));
                 },
             },
             a.value());
  return out;
}

}  // namespace grouptype
