#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ivq/perm.hpp"

namespace ivq {

/// Finite group given by its Cayley table on 0..n-1.
class GroupTable {
public:
  /// Validates closure, associativity (exhaustively), identity and inverses;
  /// throws ivq::Error otherwise.
  GroupTable(std::string name, std::size_t n, std::vector<Element> table);

  /// Cayley table of the listed group elements under `mul`; elements must
  /// be closed under `mul` and comparable with ==.
  template <class T, class Mul>
  static GroupTable from_elements(std::string name, const std::vector<T>& elements, Mul&& mul);
  static GroupTable from_permutations(std::string name, const std::vector<Permutation>& elements);

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return n_; }
  Element operator()(Element a, Element b) const noexcept { return table_[a * n_ + b]; }
  Element identity() const noexcept { return identity_; }
  Element inverse(Element a) const noexcept { return inverse_[a]; }
  std::span<const Element> cells() const noexcept { return table_; }

private:
  std::string name_;
  std::size_t n_;
  std::vector<Element> table_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
};

struct GroupPredicates {
  bool uniquely_2_divisible = false;
  bool center_involution_free = false;
  /// nilpotency class at most 2, i.e. every commutator is central
  bool two_nilpotent = false;
  /// x y^2 x = y x^2 y for all x, y
  bool bruck_identity = false;
  /// first (x, y) breaking the identity above, if any
  std::optional<std::pair<Element, Element>> bruck_witness;
};

GroupPredicates group_predicates(const GroupTable& g);
bool is_abelian(const GroupTable& g);
std::vector<Element> group_center(const GroupTable& g);

GroupTable cyclic_group(unsigned n);
/// Direct product of cyclic groups; elements in mixed radix, first factor
/// most significant.
GroupTable abelian_group(const std::vector<unsigned>& factors);
/// Symmetries of the regular m-gon, order 2m.
GroupTable dihedral_group(unsigned m);
GroupTable quaternion_group();
GroupTable symmetric_group(unsigned degree);
GroupTable alternating_group(unsigned degree);
/// 2x2 matrices of determinant 1 over F_q, q in {2, 3, 4, 5, 7, 9}.
GroupTable special_linear_group(unsigned q);

/// Invariant factor lists d1 | d2 | ... | dk (ascending), one per
/// isomorphism class of abelian groups of order n; fewer factors first.
std::vector<std::vector<unsigned>> abelian_groups(unsigned n);
std::string abelian_name(const std::vector<unsigned>& factors);

/// Abelian groups of order <= 32, dihedral of order <= 16, Q8, S1..S4,
/// A3..A5 and SL2(q) for q <= 5.
std::vector<GroupTable> group_catalog();

// Group file format: header line "group n", then n rows of the Cayley table.
GroupTable read_group(std::istream& in, std::string name = "G");
void write_group(std::ostream& out, const GroupTable& g);

template <class T, class Mul>
GroupTable GroupTable::from_elements(std::string name, const std::vector<T>& elements, Mul&& mul) {
  const std::size_t n = elements.size();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      T prod = mul(elements[a], elements[b]);
      std::size_t idx = 0;
      while (idx < n && !(elements[idx] == prod)) ++idx;
      if (idx == n) throw Error("group elements not closed under multiplication");
      table[a * n + b] = static_cast<Element>(idx);
    }
  return GroupTable(std::move(name), n, std::move(table));
}

}  // namespace ivq
