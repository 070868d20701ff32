#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ivq/perm.hpp"
#include "ivq/quandle.hpp"

namespace ivq {

/// L_x for every x, as permutations of the elements.
std::vector<Permutation> left_translations(const Quandle& q);

/// Multiplication group <L_a>.
PermGroup lmlt(const Quandle& q, std::size_t limit = kDefaultElementLimit);
/// Displacement group <L_a L_b>, generated by L_a L_0.
PermGroup dis(const Quandle& q, std::size_t limit = kDefaultElementLimit);

bool is_connected(const Quandle& q);

/// L_{x*y} = L_x L_y L_x for all x, y.
bool translations_conjugate(const Quandle& q);

/// Cycles at basepoint e: lengths[a] is the number of distinct powers
/// e(a(e(a ...))), the size of the subquandle generated by e and a (an image
/// of the core of the integers). even_lengths[a] is the size of the orbit of
/// a under <L_e L_a>, which sees only every other power.
struct CycleProfile {
  Element basepoint = 0;
  std::vector<Element> lengths;
  std::vector<Element> even_lengths;
  bool all_odd() const;
};

CycleProfile cycle_profile(const Quandle& q, Element e);

// On connected quandles all three agree. odd_derived can differ on
// disconnected ones: core(Z4) has abelian LMlt but is not latin.
struct LatinCriteria {
  bool direct = false;
  bool odd_cycles = false;
  bool odd_derived = false;
};
LatinCriteria latin_criteria(const Quandle& q, std::size_t limit = kDefaultElementLimit);

struct MedialCriteria {
  bool identity_check = false;
  bool dis_abelian = false;
};
/// Dis is abelian iff its generators commute; no closure needed.
MedialCriteria medial_criteria(const Quandle& q);

/// lattice: only trivial congruences. group_criterion: connected, faithful
/// and Dis minimal normal in LMlt. Throws SizeLimit above `size_limit`.
struct SimplicityCriteria {
  bool lattice = false;
  bool group_criterion = false;
};
SimplicityCriteria simplicity_criteria(const Quandle& q, std::size_t size_limit = kCongruenceSizeLimit,
                                       std::size_t limit = kDefaultElementLimit);

struct SimpleStructure {
  std::size_t order = 0;
  std::size_t dis_order = 0;
  bool dis_minimal_normal = false;
  /// |Dis| = |Q|^2: Dis is a product of two conjugate simple groups.
  bool product_branch = false;
};
/// Throws NotSimple unless q is simple.
SimpleStructure simple_structure_check(const Quandle& q, std::size_t limit = kDefaultElementLimit);

struct AnalysisReport {
  std::size_t order = 0;
  bool connected = false;
  bool faithful = false;
  bool latin = false;
  bool medial = false;
  bool balanced = false;
  bool simple = false;
  /// empty when the group outgrew the element limit
  std::optional<std::size_t> lmlt_order;
  std::optional<std::size_t> dis_order;
  std::optional<std::size_t> lmlt_derived_order;
  std::size_t orbit_count = 0;
  /// cycle_lengths[e][a] = cycle_profile(q, e).lengths[a]
  std::vector<std::vector<Element>> cycle_lengths;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

AnalysisReport analyze(const Quandle& q, std::size_t limit = kDefaultElementLimit);

}  // namespace ivq
