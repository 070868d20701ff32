#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "ivq/constructions.hpp"
#include "ivq/knot.hpp"
#include "support/generators.hpp"

using namespace ivq;

namespace {

constexpr const char* kTrefoil = "gens a b c; rel a c = b; rel b a = c; rel c b = a";
constexpr const char* kTrefoilDiagram = "x a b c\nx b c a\nx c a b\n";
constexpr const char* kFigureEight = "x a c d\nx b a d\nx c a b\nx d c b\n";

Completion complete_diagram(const std::string& text, std::size_t limit = kDefaultCompletionLimit) {
  return complete(crossings_to_presentation(parse_crossings(text)), limit);
}

}  // namespace

TEST_CASE("word normalization") {
  // a(a b) -> b
  CHECK(normalize_word(Word{{0, 0}, 1}) == Word{{}, 1});
  CHECK(normalize_word(Word{{0, 0, 1}, 1}) == Word{{}, 1});
  // a a -> a
  CHECK(normalize_word(Word{{0}, 0}) == Word{{}, 0});
  CHECK(normalize_word(Word{{1, 0}, 1}) == Word{{0}, 1});
  CHECK(normalize_word(Word{{0, 1}, 1}) == Word{{0, 1}, 1});
  gen::Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    Word w;
    w.terminal = rng() % 3;
    for (std::size_t k = rng() % 8; k > 0; --k) w.applicators.push_back(rng() % 3);
    auto n = normalize_word(w);
    CHECK(normalize_word(n) == n);
    for (std::size_t k = 0; k < n.applicators.size(); ++k) {
      if (k == 0) CHECK(n.applicators[k] != n.terminal);
      else CHECK(n.applicators[k] != n.applicators[k - 1]);
    }
    // normalization preserves the value in any model
    auto q = gen::random_kei(rng, 9);
    std::vector<Element> assign{static_cast<Element>(rng() % q.size()), static_cast<Element>(rng() % q.size()),
                                static_cast<Element>(rng() % q.size())};
    CHECK(evaluate(w, q, assign) == evaluate(n, q, assign));
  }
}

TEST_CASE("normal forms on two generators are the integers") {
  // core(Z) with a = 0, b = 1; Z_1001 is large enough for words of length <= 8
  auto q = abelian_core({1001});
  std::set<Word> normals;
  for (std::size_t len = 0; len <= 8; ++len)
    for (unsigned bits = 0; bits < (1u << (len + 1)); ++bits) {
      Word w{{}, bits & 1u};
      for (std::size_t k = 0; k < len; ++k) w.applicators.push_back((bits >> (k + 1)) & 1u);
      normals.insert(normalize_word(w));
    }
  std::map<Element, Word> seen;
  for (auto& w : normals) {
    auto v = evaluate(w, q, {0, 1});
    auto [it, fresh] = seen.emplace(v, w);
    CHECK_MESSAGE(fresh, "two normal forms share a value");
  }
  CHECK(normals.size() == 18);  // lengths 0..8 give 2 + 2 * 8 words
}

TEST_CASE("multiply") {
  Word a{{}, 0}, b{{}, 1};
  CHECK(multiply(a, b) == Word{{0}, 1});
  CHECK(multiply(a, a) == a);
  CHECK(multiply(a, multiply(a, b)) == b);
  auto c = Word{{}, 2};
  CHECK(multiply(c, multiply(a, b)) == multiply(multiply(c, a), multiply(c, b)));
}

TEST_CASE("presentation parsing") {
  auto p = parse_presentation(kTrefoil);
  CHECK(p.generators == std::vector<std::string>{"a", "b", "c"});
  CHECK(p.relations.size() == 3);
  CHECK(parse_presentation(p.to_text()).relations.size() == 3);
  auto one = parse_presentation("gens a; ");
  CHECK(one.generators.size() == 1);
  CHECK(one.relations.empty());
  CHECK_THROWS_AS(parse_presentation("rel a b = c"), UndeclaredGenerator);
  CHECK_THROWS_AS(parse_presentation("gens a b\nrel a b c"), SyntaxError);
  try {
    parse_presentation("gens a\nfoo a");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 2);
  }
  auto commented = parse_presentation("# comment\ngens a b # trailing\nrel a b = b a b\n");
  CHECK(commented.relations.size() == 1);
  CHECK(commented.relations[0].rhs == normalize_word(Word{{0, 1}, 1}));
}

TEST_CASE("crossing diagrams") {
  auto t = crossings_to_presentation(parse_crossings(kTrefoilDiagram));
  CHECK(t.generators.size() == 3);
  CHECK(t.relations.size() == 3);
  auto f = crossings_to_presentation(parse_crossings(kFigureEight));
  CHECK(f.generators.size() == 4);
  CHECK(f.relations.size() == 4);
  CHECK(f.word_text(f.relations[0].lhs) == "a c");
  auto u = crossings_to_presentation(parse_crossings("arcs a\n"));
  CHECK(u.generators.size() == 1);
  CHECK(u.relations.empty());
  CHECK(looks_like_crossings(kFigureEight));
  CHECK_FALSE(looks_like_crossings(kTrefoil));
  CHECK_THROWS_AS(crossings_to_presentation(parse_crossings("arcs a b\n")), InconsistentArcs);
  CHECK_THROWS_AS(crossings_to_presentation(parse_crossings("arcs a\nx a a b\n")), InconsistentArcs);
  CHECK_THROWS_AS(parse_crossings("x a b\n"), SyntaxError);
}

TEST_CASE("completion of the standard knots") {
  auto t = complete(parse_presentation(kTrefoil));
  CHECK(t.quandle.size() == 3);
  CHECK(are_isomorphic(t.quandle, abelian_core({3})));
  auto f = complete_diagram(kFigureEight);
  CHECK(f.quandle.size() == 5);
  CHECK(are_isomorphic(f.quandle, abelian_core({5})));
  auto u = complete(parse_presentation("gens a"));
  CHECK(u.quandle.size() == 1);
  // generator elements satisfy every relation
  auto p = parse_presentation(kTrefoil);
  for (auto& r : p.relations)
    CHECK(evaluate(r.lhs, t.quandle, t.generator_elements) == evaluate(r.rhs, t.quandle, t.generator_elements));
}

TEST_CASE("free presentation overflows at every bound") {
  auto p = parse_presentation("gens a b");
  for (std::size_t bound : {1u, 10u, 100u, 1000u, 5000u}) CHECK_THROWS_AS(complete(p, bound), Overflow);
}

TEST_CASE("completion is invariant under diagram rewrites") {
  gen::Rng rng(41);
  const std::string lines[] = {"x a c d", "x b a d", "x c a b", "x d c b"};
  for (int i = 0; i < 10; ++i) {
    std::vector<std::string> order(std::begin(lines), std::end(lines));
    std::shuffle(order.begin(), order.end(), rng);
    std::string text;
    for (auto& l : order) {
      // over * u1 = u2 is equivalent to over * u2 = u1
      if (rng() % 2) text += l.substr(0, 4) + l.substr(6, 1) + " " + l.substr(4, 1) + "\n";
      else text += l + "\n";
    }
    auto c = complete_diagram(text);
    CHECK(c.quandle.size() == 5);
    CHECK(are_isomorphic(c.quandle, abelian_core({5})));
  }
  // Reidemeister I: a kink on the unknot adds an arc and a self-crossing
  CHECK(complete_diagram("x a a b\nx b b a\n").quandle.size() == 1);
  CHECK(complete_diagram("x a a a\n").quandle.size() == 1);
  // Reidemeister II on the trefoil: arc a is pushed over c, splitting it into c, e, f
  auto r2 = complete_diagram("x a b c\nx b f a\nx c a b\nx a c e\nx a e f\n");
  CHECK(r2.quandle.size() == 3);
}

TEST_CASE("unknot test") {
  auto u = unknot_test(parse_crossings("arcs a\n"));
  CHECK(u.kind == UnknotVerdict::Kind::trivial);
  CHECK(u.order == 1u);
  auto t = unknot_test(parse_crossings(kTrefoilDiagram));
  CHECK(t.kind == UnknotVerdict::Kind::nontrivial);
  CHECK(t.order == 3u);
  auto f = unknot_test(parse_crossings(kFigureEight));
  CHECK(f.kind == UnknotVerdict::Kind::nontrivial);
  CHECK(f.order == 5u);
  CHECK(verdict_name(UnknotVerdict::Kind::inconclusive) == "inconclusive");
}

TEST_CASE("dihedral colorings") {
  auto t = parse_presentation(kTrefoil);
  auto c3 = find_dihedral_coloring(t, 3);
  REQUIRE(c3);
  auto z3 = abelian_core({3});
  for (auto& r : t.relations) CHECK(evaluate(r.lhs, z3, *c3) == evaluate(r.rhs, z3, *c3));
  CHECK_FALSE(find_dihedral_coloring(t, 5));
  CHECK(find_dihedral_coloring(parse_presentation("gens a b"), 7));
}
