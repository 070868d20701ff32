#include "ivq/analysis.hpp"

#include <algorithm>

namespace ivq {

std::vector<Permutation> left_translations(const Quandle& q) {
  std::vector<Permutation> out;
  out.reserve(q.size());
  for (Element x = 0; x < q.size(); ++x) out.emplace_back(std::vector<Point>(q.row(x).begin(), q.row(x).end()));
  return out;
}

namespace {

std::vector<Permutation> dis_generators(const Quandle& q) {
  auto l = left_translations(q);
  std::vector<Permutation> gens;
  for (Element a = 1; a < q.size(); ++a) {
    Permutation g = l[a] * l[0];
    if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(std::move(g));
  }
  return gens;
}

}  // namespace

PermGroup lmlt(const Quandle& q, std::size_t limit) {
  auto l = left_translations(q);
  std::vector<Permutation> gens;
  for (auto& p : l)
    if (!p.is_identity() && std::find(gens.begin(), gens.end(), p) == gens.end()) gens.push_back(p);
  return PermGroup(q.size(), std::move(gens), limit);
}

PermGroup dis(const Quandle& q, std::size_t limit) { return PermGroup(q.size(), dis_generators(q), limit); }

bool is_connected(const Quandle& q) { return orbits(q.size(), left_translations(q)).size() <= 1; }

bool translations_conjugate(const Quandle& q) {
  const auto n = static_cast<Element>(q.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const Element xy = q(x, y);
      for (Element z = 0; z < n; ++z)
        if (q(xy, z) != q(x, q(y, q(x, z)))) return false;
    }
  return true;
}

bool CycleProfile::all_odd() const {
  return std::all_of(lengths.begin(), lengths.end(), [](Element l) { return l % 2 == 1; });
}

CycleProfile cycle_profile(const Quandle& q, Element e) {
  if (e >= q.size()) throw Error("basepoint out of range");
  CycleProfile p;
  p.basepoint = e;
  p.lengths.resize(q.size());
  p.even_lengths.resize(q.size());
  // g = L_e L_a moves the odd powers of a among themselves and the even
  // ones (starting at e) among themselves
  for (Element a = 0; a < q.size(); ++a) {
    Element len = 1;
    bool meets_e = a == e;
    for (Element x = q(e, q(a, a)); x != a; x = q(e, q(a, x))) {
      ++len;
      meets_e = meets_e || x == e;
    }
    p.even_lengths[a] = len;
    p.lengths[a] = meets_e ? len : 2 * len;
  }
  return p;
}

LatinCriteria latin_criteria(const Quandle& q, std::size_t limit) {
  LatinCriteria c;
  c.direct = is_latin(q);
  c.odd_cycles = true;
  for (Element e = 0; e < q.size() && c.odd_cycles; ++e) c.odd_cycles = cycle_profile(q, e).all_odd();
  c.odd_derived = derived_subgroup(lmlt(q, limit)).order() % 2 == 1;
  return c;
}

MedialCriteria medial_criteria(const Quandle& q) {
  auto gens = dis_generators(q);
  bool abelian = true;
  for (std::size_t i = 0; i < gens.size() && abelian; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i]) {
        abelian = false;
        break;
      }
  return {is_medial(q), abelian};
}

SimplicityCriteria simplicity_criteria(const Quandle& q, std::size_t size_limit, std::size_t limit) {
  if (q.size() > size_limit)
    throw SizeLimit("simplicity criteria limited to " + std::to_string(size_limit) + " elements");
  SimplicityCriteria c;
  c.lattice = is_simple_lattice(q);
  c.group_criterion = false;
  if (q.size() >= 2 && is_connected(q) && is_faithful(q)) {
    PermGroup l = lmlt(q, limit);
    PermGroup d = dis(q, limit);
    c.group_criterion = is_minimal_normal(l, d);
  }
  return c;
}

SimpleStructure simple_structure_check(const Quandle& q, std::size_t limit) {
  if (!is_simple_lattice(q)) throw NotSimple("quandle is not simple");
  SimpleStructure s;
  s.order = q.size();
  PermGroup l = lmlt(q, limit);
  PermGroup d = dis(q, limit);
  s.dis_order = d.order();
  s.dis_minimal_normal = is_minimal_normal(l, d);
  s.product_branch = s.dis_order == s.order * s.order;
  return s;
}

AnalysisReport analyze(const Quandle& q, std::size_t limit) {
  AnalysisReport r;
  r.order = q.size();
  const auto props = basic_properties(q);
  r.faithful = props.faithful;
  r.latin = props.latin;
  r.medial = props.medial;
  r.balanced = props.balanced;
  r.orbit_count = orbit_decomposition(q).size();
  r.connected = r.orbit_count == 1;
  r.simple = is_simple_lattice(q);
  try {
    PermGroup l = lmlt(q, limit);
    r.lmlt_order = l.order();
    r.lmlt_derived_order = derived_subgroup(l).order();
    r.dis_order = dis(q, limit).order();
  } catch (const Overflow&) {
  }
  r.cycle_lengths.reserve(q.size());
  for (Element e = 0; e < q.size(); ++e) r.cycle_lengths.push_back(cycle_profile(q, e).lengths);
  return r;
}

}  // namespace ivq
