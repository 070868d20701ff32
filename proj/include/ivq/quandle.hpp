#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ivq/error.hpp"

namespace ivq {

using Element = std::uint32_t;
/// Sorted, duplicate-free list of elements.
using ElementSet = std::vector<Element>;

/// Square table of a binary operation on 0..n-1, not yet known to be a quandle.
class MagmaTable {
public:
  MagmaTable() = default;
  /// Row-major cells; throws MalformedTable on size mismatch or out-of-range entries.
  MagmaTable(std::size_t n, std::vector<Element> cells);

  static MagmaTable from_rows(const std::vector<std::vector<Element>>& rows);

  template <class Op>
  static MagmaTable from_function(std::size_t n, Op&& op) {
    std::vector<Element> cells(n * n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        cells[x * n + y] = static_cast<Element>(op(static_cast<Element>(x), static_cast<Element>(y)));
    return MagmaTable(n, std::move(cells));
  }

  std::size_t size() const noexcept { return n_; }
  Element operator()(Element x, Element y) const noexcept { return cells_[x * n_ + y]; }
  std::span<const Element> row(Element x) const noexcept { return {cells_.data() + x * n_, n_}; }
  std::span<const Element> cells() const noexcept { return cells_; }

  friend bool operator==(const MagmaTable&, const MagmaTable&) = default;
  friend auto operator<=>(const MagmaTable& a, const MagmaTable& b) {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    return a.cells_ <=> b.cells_;
  }

private:
  std::size_t n_ = 0;
  std::vector<Element> cells_;
};

enum class Axiom { idempotence, involutory, left_distributivity };

std::string_view axiom_name(Axiom a);

/// First failing identity found by the lexicographic (x, y, z) scan.
struct AxiomViolation {
  Axiom axiom;
  std::vector<Element> witness;

  /// e.g. "idempotence violated at x=0"
  std::string message() const;
  friend bool operator==(const AxiomViolation&, const AxiomViolation&) = default;
};

/// An involutory quandle: idempotent, left distributive, every left
/// translation an involution. Immutable once constructed.
class Quandle {
public:
  /// Validates and throws AxiomError carrying the violation message.
  static Quandle checked(MagmaTable table);
  /// Caller guarantees the identities (e.g. output of a construction that
  /// preserves them). Debug builds re-validate.
  static Quandle assume_valid(MagmaTable table);

  std::size_t size() const noexcept { return table_.size(); }
  Element operator()(Element x, Element y) const noexcept { return table_(x, y); }
  /// Left translation L_x as its image array.
  std::span<const Element> row(Element x) const noexcept { return table_.row(x); }
  const MagmaTable& table() const noexcept { return table_; }

  friend bool operator==(const Quandle&, const Quandle&) = default;
  friend auto operator<=>(const Quandle& a, const Quandle& b) { return a.table_ <=> b.table_; }

private:
  explicit Quandle(MagmaTable t) : table_(std::move(t)) {}
  friend std::variant<Quandle, AxiomViolation> validate(const MagmaTable& m);

  MagmaTable table_;
};

std::variant<Quandle, AxiomViolation> validate(const MagmaTable& m);
std::optional<AxiomViolation> first_violation(const MagmaTable& m);

struct Properties {
  bool latin = false;
  bool faithful = false;
  bool medial = false;
  bool balanced = false;
  friend bool operator==(const Properties&, const Properties&) = default;
};

bool is_latin(const Quandle& q);
bool is_faithful(const Quandle& q);
/// (xy)(uv) = (xu)(yv)
bool is_medial(const Quandle& q);
/// xy = y iff yx = x
bool is_balanced(const Quandle& q);
/// (xy)z = (xz)(yz)
bool is_right_distributive(const Quandle& q);
Properties basic_properties(const Quandle& q);

/// Table of the same operation with every element x renamed to sigma[x].
MagmaTable relabel(const MagmaTable& m, std::span<const Element> sigma);
Quandle relabel(const Quandle& q, std::span<const Element> sigma);

/// Canonical representative plus the labeling that produced it:
/// order[i] is the original element that carries label i.
struct CanonicalLabeling {
  Quandle form;
  std::vector<Element> order;
};

// Canonical form. Labels are handed out by a closure scan: starting from an
// ordered seed, products of already-labeled elements get the next free label
// in (newest label, partner) order. When the labeled set is closed, every
// admissible unlabeled element is tried as the next seed. The result is the
// lexicographically least relabeled table over all such branches. For
// connected quandles the automorphism group is transitive, so the first seed
// is pinned to element 0. Candidates are pruned by an isomorphism-invariant
// key and by swaps (c c') that are automorphisms fixing the labeled set.
CanonicalLabeling canonical_labeling(const Quandle& q);
Quandle canonical_form(const Quandle& q);

/// Bijection `mapping` with mapping(x*y) = mapping(x)*mapping(y).
struct IsoCertificate {
  std::vector<Element> mapping;
  bool verify(const Quandle& from, const Quandle& to) const;
};

std::optional<IsoCertificate> are_isomorphic(const Quandle& a, const Quandle& b);

/// Least subquandle containing `seed`, returned sorted.
ElementSet subquandle_generated(const Quandle& q, std::span<const Element> seed);
bool is_subquandle(const Quandle& q, std::span<const Element> subset);

/// Partition stored as a block id per element; ids are numbered in order of
/// first occurrence so equal partitions compare equal.
struct CongruencePartition {
  std::vector<Element> block;

  std::size_t block_count() const;
  std::vector<ElementSet> blocks() const;
  bool is_identity() const { return block_count() == block.size(); }
  bool is_full() const { return block_count() <= 1; }

  friend bool operator==(const CongruencePartition&, const CongruencePartition&) = default;
  friend auto operator<=>(const CongruencePartition&, const CongruencePartition&) = default;
};

inline constexpr std::size_t kCongruenceSizeLimit = 30;

bool is_compatible(const Quandle& q, const CongruencePartition& p);
/// Least congruence identifying a and b.
CongruencePartition principal_congruence(const Quandle& q, Element a, Element b);
/// All congruences, sorted. Throws SizeLimit above `size_limit` elements.
std::vector<CongruencePartition> congruences(const Quandle& q,
                                             std::size_t size_limit = kCongruenceSizeLimit);
/// n >= 3 and only the two trivial congruences; the two-element projection
/// quandle does not count as simple. Uses principal congruences directly, so
/// it has no size limit.
bool is_simple_lattice(const Quandle& q);

/// Orbits of Dis(q) on the elements, each sorted, ordered by least element.
std::vector<ElementSet> orbit_decomposition(const Quandle& q);

// Cayley table text format: first non-comment line is n, followed by n rows
// of n whitespace-separated 0-based entries. Lines starting with '#' are
// comments.
MagmaTable read_table(std::istream& in);
MagmaTable parse_table(std::string_view text);
void write_table(std::ostream& out, const MagmaTable& m, std::string_view comment = {});
std::string format_table(const MagmaTable& m, std::string_view comment = {});

}  // namespace ivq
