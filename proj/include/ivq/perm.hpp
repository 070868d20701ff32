#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "ivq/quandle.hpp"

namespace ivq {

using Point = Element;

inline constexpr std::size_t kDefaultElementLimit = 1'000'000;

/// Reads QF_MAX_ELEMENTS, falling back to `fallback` when unset or unparsable.
std::size_t element_limit_from_env(std::size_t fallback = kDefaultElementLimit);

/// Bijection of 0..degree-1. Products compose right to left:
/// (a * b)(x) = a(b(x)).
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  /// Cycles in the usual notation, e.g. {{0, 1, 2}, {3, 4}}.
  static Permutation from_cycles(std::size_t degree, std::initializer_list<std::initializer_list<Point>> cycles);
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point p) const noexcept { return images_[p]; }
  std::span<const Point> images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;
  bool is_involution() const noexcept { return (*this * *this).is_identity(); }
  std::size_t order() const;
  std::vector<std::vector<Point>> cycles() const;
  std::string to_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<Point> images_;
};

/// a b a^-1
Permutation conjugate(const Permutation& a, const Permutation& b);
/// a^-1 b^-1 a b
Permutation commutator(const Permutation& a, const Permutation& b);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// All products of `generators` in breadth-first order, identity first.
/// Throws Overflow past `limit` elements and DegreeMismatch on mixed degrees.
std::vector<Permutation> closure(std::size_t degree, std::span<const Permutation> generators,
                                 std::size_t limit = kDefaultElementLimit);

/// A permutation group with its elements materialized at construction.
/// Immutable afterwards.
class PermGroup {
public:
  PermGroup(std::size_t degree, std::vector<Permutation> generators, std::size_t limit = kDefaultElementLimit);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t limit() const noexcept { return limit_; }
  bool contains(const Permutation& p) const { return members_.count(p) != 0; }
  bool is_trivial() const noexcept { return order() == 1; }

private:
  std::size_t degree_;
  std::size_t limit_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_set<Permutation, PermutationHash> members_;
};

/// Orbit partition of the points, orbits sorted and ordered by least point.
std::vector<ElementSet> orbits(std::size_t degree, std::span<const Permutation> generators);
std::vector<ElementSet> orbits(const PermGroup& g);
bool is_transitive(const PermGroup& g);

PermGroup stabilizer(const PermGroup& g, Point e);
PermGroup center(const PermGroup& g);
PermGroup derived_subgroup(const PermGroup& g);
/// Smallest normal subgroup of g containing `s` (s must lie in g).
PermGroup normal_closure(const PermGroup& g, std::span<const Permutation> s);
/// h is assumed to be a subgroup of g.
bool is_subgroup(const PermGroup& g, const PermGroup& h);
bool is_normal(const PermGroup& g, const PermGroup& h);
bool is_abelian(const PermGroup& g);
// H is minimal normal iff every non-identity h in H has normal closure H in
// g: any nontrivial normal K <= H contains the normal closure of one of its
// elements. Checked over one representative per g-conjugacy class of H.
bool is_minimal_normal(const PermGroup& g, const PermGroup& h);

}  // namespace ivq
