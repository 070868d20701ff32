#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "ivq/analysis.hpp"
#include "ivq/constructions.hpp"
#include "ivq/enumerate.hpp"
#include "support/oracles.hpp"

using namespace ivq;

namespace {

constexpr std::size_t kQ[] = {0, 1, 0, 1, 0, 1, 1, 1, 0, 2, 1, 1, 3, 1};
constexpr std::size_t kL[] = {0, 1, 0, 1, 0, 1, 0, 1, 0, 2, 0, 1, 0, 1};

}  // namespace

TEST_CASE("connected counts for small orders") {
  for (std::size_t n = 1; n <= 10; ++n) {
    CAPTURE(n);
    auto r = counts(n);
    CHECK(r.q == kQ[n]);
    CHECK(r.l == kL[n]);
    CHECK(r.a == kL[n]);
  }
  CHECK(enumerate_connected(3).members.size() == 1);
  CHECK(enumerate_connected(8).members.empty());
  CHECK_THROWS_AS(enumerate_connected(0), SizeLimit);
  CHECK_THROWS_AS(enumerate_connected(kMaxEnumerationOrder + 1), SizeLimit);
}

TEST_CASE("order 12 has three connected members") {
  auto c = enumerate_connected(12, 2);
  CHECK(c.members.size() == 3);
  for (auto& q : c.members) CHECK_FALSE(is_latin(q));
}

TEST_CASE("catalog members are connected, canonical and pairwise distinct") {
  for (std::size_t n = 1; n <= 10; ++n) {
    auto c = enumerate_connected(n);
    for (std::size_t i = 0; i < c.members.size(); ++i) {
      CHECK(is_connected(c.members[i]));
      CHECK(canonical_form(c.members[i]) == c.members[i]);
      if (i > 0) CHECK(c.members[i - 1] < c.members[i]);
      for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(are_isomorphic(c.members[i], c.members[j]));
    }
  }
  // the order-6 member is the transposition class of S4, which is not latin
  auto six = enumerate_connected(6);
  REQUIRE(six.members.size() == 1);
  CHECK_FALSE(latin_criteria(six.members[0]).direct);
}

TEST_CASE("results do not depend on the worker count") {
  for (std::size_t n : {9u, 10u, 11u}) {
    auto one = enumerate_connected(n, 1);
    CHECK(enumerate_connected(n, 2).members == one.members);
    CHECK(enumerate_connected(n, 8).members == one.members);
  }
  CHECK(enumerate_all(5, 3).members == enumerate_all(5, 1).members);
}

TEST_CASE("all involutory quandles agree with raw table search") {
  for (std::size_t n = 1; n <= 5; ++n) {
    CAPTURE(n);
    auto brute = oracle::all_involutory_by_cells(n);
    auto mine = enumerate_all(n);
    CHECK(mine.members.size() == brute.size());
    CHECK(mine.members.size() == kAllInvolutoryCounts[n]);
    std::set<oracle::Cells> as_cells;
    for (auto& q : mine.members)
      as_cells.insert(oracle::canonical_by_permutations(n, oracle::cells_of(q)));
    CHECK(as_cells == brute);
  }
}

TEST_CASE("affine recognition") {
  CHECK(is_affine(abelian_core({9})) == std::vector<unsigned>{9});
  CHECK(is_affine(abelian_core({3, 3})) == std::vector<unsigned>{3, 3});
  CHECK_FALSE(is_affine(conj_involutions(symmetric_group(4)).quandle));
  // faithful medial catalog members are abelian cores
  for (std::size_t n = 1; n <= 11; ++n)
    for (auto& q : enumerate_connected(n).members)
      if (is_faithful(q) && is_medial(q)) CHECK(is_affine(q));
}

TEST_CASE("envelopes") {
  auto e3 = envelope_of(abelian_core({3}), 0);
  CHECK(e3.group.order() == 6);
  CHECK(e3.zeta.is_involution());
  CHECK(envelope_of(abelian_core({5}), 0).group.order() == 10);
  CHECK_THROWS_AS(envelope_of(abelian_core({2}), 0), NotConnected);

  for (std::size_t n = 1; n <= 10; ++n)
    for (auto& q : enumerate_connected(n).members)
      for (Element e = 0; e < n; ++e) CHECK(are_isomorphic(quandle_from_envelope(envelope_of(q, e)), q));

  auto c3 = Permutation::from_cycles(3, {{0, 1, 2}});
  CHECK_THROWS_AS(quandle_from_envelope({PermGroup(3, {c3}), 0, Permutation::identity(3)}), InvalidEnvelope);
  // A4 on 4 points with zeta of order 3 in the stabilizer of 0
  PermGroup a4(4, {Permutation::from_cycles(4, {{0, 1, 2}}), Permutation::from_cycles(4, {{1, 2, 3}})});
  CHECK_THROWS_AS(quandle_from_envelope({a4, 0, Permutation::from_cycles(4, {{1, 2, 3}})}), InvalidEnvelope);
  // zeta outside the group
  PermGroup z3(3, {c3});
  CHECK_THROWS_AS(quandle_from_envelope({z3, 0, Permutation::from_cycles(3, {{1, 2}})}), InvalidEnvelope);
}

TEST_CASE("catalog and counts files") {
  auto dir = std::filesystem::temp_directory_path() / "ivq_catalog_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  auto paths = write_catalog(dir, enumerate_connected(9));
  REQUIRE(paths.size() == 2);
  CHECK(paths[0].filename() == "ivq-n9-1.tbl");
  std::ifstream in(paths[1]);
  auto back = Quandle::checked(read_table(in));
  CHECK(is_connected(back));
  write_counts(dir / "counts.tsv", {counts(3), counts(4)});
  std::ifstream tsv(dir / "counts.tsv");
  std::string all((std::istreambuf_iterator<char>(tsv)), {});
  CHECK(all == "n\tq\tl\ta\n3\t1\t1\t1\n4\t0\t0\t0\n");
  std::filesystem::remove_all(dir);
}
