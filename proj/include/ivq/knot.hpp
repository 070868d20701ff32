#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ivq/quandle.hpp"

namespace ivq {

using GeneratorId = std::size_t;

/// Term a_k(a_{k-1}(...(a_1 g)...)) over generator indices. `applicators`
/// is stored innermost first: {a_1, ..., a_k}.
struct Word {
  std::vector<GeneratorId> applicators;
  GeneratorId terminal = 0;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

/// Reduces x(x w) -> w and x x -> x. The result has no two equal adjacent
/// applicators and a_1 != g; this is the normal form of the free
/// involutory quandle.
Word normalize_word(const Word& w);
/// x * y in the free involutory quandle, normalized.
Word multiply(const Word& x, const Word& y);
/// Value of w in q with generator i sent to assignment[i].
Element evaluate(const Word& w, const Quandle& q, const std::vector<Element>& assignment);

struct Relation {
  Word lhs;
  Word rhs;
};

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Relation> relations;

  std::string word_text(const Word& w) const;
  /// Text in the `gens` / `rel` format, parseable by parse_presentation.
  std::string to_text() const;
};

// Presentation text: statements separated by newlines or ';'.
//   gens a b c        declares generators (may repeat)
//   rel a c = b       relation a*c = b; a side "x y z" means x(y(z))
// '#' starts a comment running to the end of the line.
Presentation parse_presentation(std::string_view text);

struct Crossing {
  std::string over;
  std::string under1;
  std::string under2;
};

struct CrossingList {
  /// declared by `arcs` lines, otherwise in order of first appearance
  std::vector<std::string> arcs;
  std::vector<Crossing> crossings;
};

// Crossing text: lines `x <over> <under1> <under2>` and optional
// `arcs <name>...`; a crossing-free diagram must declare its single arc.
CrossingList parse_crossings(std::string_view text);
/// True when the text's first statement is `x` or `arcs`.
bool looks_like_crossings(std::string_view text);

/// One generator per arc, relation over * under1 = under2 per crossing.
/// Throws InconsistentArcs if the arcs cannot come from a closed diagram.
Presentation crossings_to_presentation(const CrossingList& d);

inline constexpr std::size_t kDefaultCompletionLimit = 10'000;

struct Completion {
  Quandle quandle;
  /// element carrying each generator
  std::vector<Element> generator_elements;
};

// Coset-enumeration style completion. The elements form a set acted on by
// the generator translations (each an involution). Every relation u(b) = v(c)
// contributes the point identification at the generator base points and the
// relator L_{u(b)} L_{v(c)} that must act trivially on every element; each
// base point is fixed by its own generator. Forced coincidences are merged
// with union-find. Elements are numbered breadth-first from the generator
// base points. Throws Overflow once more than `max_elements` live elements
// are needed.
Completion complete(const Presentation& p, std::size_t max_elements = kDefaultCompletionLimit);

struct UnknotVerdict {
  enum class Kind { trivial, nontrivial, inconclusive };
  Kind kind = Kind::inconclusive;
  /// order of the completed quandle when completion finished
  std::optional<std::size_t> order;
  /// modulus p of a non-constant coloring by core(Z_p), if one was used
  std::optional<unsigned> coloring_modulus;
};

std::string_view verdict_name(UnknotVerdict::Kind k);

/// Non-constant generator assignment into core(Z_p) satisfying every
/// relation, if one exists.
std::optional<std::vector<Element>> find_dihedral_coloring(const Presentation& p, unsigned modulus);

UnknotVerdict unknot_test(const CrossingList& d, std::size_t bound = kDefaultCompletionLimit);

}  // namespace ivq
