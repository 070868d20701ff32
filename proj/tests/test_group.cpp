#include <doctest.h>

#include <set>
#include <sstream>

#include "ivq/field.hpp"
#include "ivq/group.hpp"

using namespace ivq;

namespace {

// xy = yx over the whole table, with the identity and inverses recomputed
bool oracle_abelian(const GroupTable& g) {
  for (Element a = 0; a < g.size(); ++a)
    for (Element b = 0; b < g.size(); ++b)
      if (g(a, b) != g(b, a)) return false;
  return true;
}

std::size_t involution_count(const GroupTable& g) {
  std::size_t k = 0;
  for (Element a = 0; a < g.size(); ++a)
    if (a != g.identity() && g(a, a) == g.identity()) ++k;
  return k;
}

}  // namespace

TEST_CASE("finite fields") {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 9u}) {
    FiniteField f(q);
    CHECK(f.order() == q);
    for (FiniteField::Value a = 0; a < q; ++a) {
      CHECK(f.add(a, f.neg(a)) == 0);
      CHECK(f.mul(a, 1) == a);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      for (FiniteField::Value b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (FiniteField::Value c = 0; c < q; ++c) CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
  }
  CHECK(FiniteField(9).characteristic() == 3);
  CHECK(FiniteField(7).from_int(-1) == 6);
  CHECK_THROWS_AS(FiniteField(6), Error);
}

TEST_CASE("group orders and standard facts") {
  CHECK(special_linear_group(2).size() == 6);
  CHECK(special_linear_group(3).size() == 24);
  CHECK(special_linear_group(4).size() == 60);
  CHECK(special_linear_group(5).size() == 120);
  CHECK(quaternion_group().size() == 8);
  CHECK(involution_count(quaternion_group()) == 1);
  CHECK(symmetric_group(4).size() == 24);
  CHECK(alternating_group(5).size() == 60);
  CHECK(dihedral_group(8).size() == 16);
  CHECK(involution_count(dihedral_group(4)) == 5);
  CHECK(group_center(symmetric_group(3)).size() == 1);
  CHECK(group_center(dihedral_group(4)).size() == 2);
  CHECK(group_center(special_linear_group(3)).size() == 2);
  CHECK(is_abelian(abelian_group({2, 6})));
  CHECK_FALSE(is_abelian(symmetric_group(3)));
}

TEST_CASE("abelian group classification") {
  CHECK(abelian_groups(9) == std::vector<std::vector<unsigned>>{{9}, {3, 3}});
  CHECK(abelian_groups(8).size() == 3);
  CHECK(abelian_groups(45).size() == 2);
  CHECK(abelian_groups(1) == std::vector<std::vector<unsigned>>{{}});
  CHECK(abelian_groups(16).size() == 5);
  for (auto& f : abelian_groups(24)) {
    for (std::size_t i = 1; i < f.size(); ++i) CHECK(f[i] % f[i - 1] == 0);
    CHECK(abelian_group(f).size() == 24);
  }
  CHECK(abelian_name({3, 3}) == "Z3xZ3");
}

TEST_CASE("catalog members are valid, distinct groups") {
  auto cat = group_catalog();
  std::set<std::string> names;
  for (auto& g : cat) {
    CHECK(names.insert(g.name()).second);
    CHECK(g(g.identity(), 0) == 0);
    CHECK(is_abelian(g) == oracle_abelian(g));
    for (Element a = 0; a < g.size(); ++a) CHECK(g(a, g.inverse(a)) == g.identity());
  }
  std::size_t abelian = 0;
  for (unsigned n = 1; n <= 32; ++n) abelian += abelian_groups(n).size();
  for (std::size_t i = 0; i < abelian; ++i) CHECK(oracle_abelian(cat[i]));
  CHECK(cat.size() == abelian + 6 + 1 + 4 + 3 + 4);
}

TEST_CASE("group predicates") {
  auto z3 = group_predicates(cyclic_group(3));
  CHECK(z3.uniquely_2_divisible);
  CHECK(z3.center_involution_free);
  CHECK(z3.two_nilpotent);
  CHECK(z3.bruck_identity);
  auto z4 = group_predicates(cyclic_group(4));
  CHECK_FALSE(z4.uniquely_2_divisible);
  CHECK_FALSE(z4.center_involution_free);
  auto s3 = group_predicates(symmetric_group(3));
  CHECK_FALSE(s3.bruck_identity);
  CHECK(s3.bruck_witness.has_value());
  CHECK(group_predicates(quaternion_group()).two_nilpotent);
  CHECK_FALSE(group_predicates(symmetric_group(3)).two_nilpotent);
}

TEST_CASE("group file round-trip") {
  auto g = dihedral_group(3);
  std::stringstream s;
  write_group(s, g);
  auto h = read_group(s, "D3");
  CHECK(std::vector<Element>(h.cells().begin(), h.cells().end()) ==
        std::vector<Element>(g.cells().begin(), g.cells().end()));
  CHECK_THROWS_AS(GroupTable("bad", 2, {0, 0, 0, 0}), Error);
}
