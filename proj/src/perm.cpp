#include "ivq/perm.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace ivq {

std::size_t element_limit_from_env(std::size_t fallback) {
  const char* raw = std::getenv("QF_MAX_ELEMENTS");
  if (!raw || !*raw) return fallback;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) return fallback;
  return static_cast<std::size_t>(v);
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<char> hit(images_.size());
  for (Point p : images_) {
    if (p >= images_.size() || hit[p]) throw Error("permutation images are not a bijection");
    hit[p] = 1;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree) throw DegreeMismatch("cycle point " + std::to_string(c[i]) + " exceeds degree");
      images[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::initializer_list<std::initializer_list<Point>> cycles) {
  std::vector<std::vector<Point>> v;
  for (auto c : cycles) v.emplace_back(c);
  return from_cycles(degree, v);
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (Point p = 0; p < images_.size(); ++p) inv[images_[p]] = p;
  Permutation out;
  out.images_ = std::move(inv);
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (Point p = 0; p < images_.size(); ++p)
    if (images_[p] != p) return false;
  return true;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<char> seen(images_.size());
  for (Point p = 0; p < images_.size(); ++p) {
    if (seen[p] || images_[p] == p) continue;
    auto& c = out.emplace_back();
    for (Point x = p; !seen[x]; x = images_[x]) {
      seen[x] = 1;
      c.push_back(x);
    }
  }
  return out;
}

std::size_t Permutation::order() const {
  std::size_t o = 1;
  for (const auto& c : cycles()) o = std::lcm(o, c.size());
  return o;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream out;
  for (const auto& c : cs) {
    out << '(';
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
    out << ')';
  }
  return out.str();
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw DegreeMismatch("cannot compose permutations of different degree");
  Permutation out;
  out.images_.resize(a.degree());
  for (Point p = 0; p < a.degree(); ++p) out.images_[p] = a.images_[b.images_[p]];
  return out;
}

Permutation conjugate(const Permutation& a, const Permutation& b) { return a * b * a.inverse(); }

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image array
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::vector<Permutation> closure(std::size_t degree, std::span<const Permutation> generators, std::size_t limit) {
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw DegreeMismatch("generator of degree " + std::to_string(g.degree()) + " in a group of degree " +
                           std::to_string(degree));
  std::vector<Permutation> elements{Permutation::identity(degree)};
  std::unordered_set<Permutation, PermutationHash> seen{elements.front()};
  if (limit < 1) throw Overflow(limit);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : generators) {
      Permutation p = g * elements[i];
      if (seen.insert(p).second) {
        if (elements.size() >= limit) throw Overflow(limit);
        elements.push_back(std::move(p));
      }
    }
  }
  return elements;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators, std::size_t limit)
    : degree_(degree), limit_(limit), generators_(std::move(generators)) {
  elements_ = closure(degree_, generators_, limit_);
  members_.insert(elements_.begin(), elements_.end());
}

std::vector<ElementSet> orbits(std::size_t degree, std::span<const Permutation> generators) {
  std::vector<Point> orbit_of(degree, static_cast<Point>(-1));
  std::vector<ElementSet> out;
  for (Point start = 0; start < degree; ++start) {
    if (orbit_of[start] != static_cast<Point>(-1)) continue;
    const auto id = static_cast<Point>(out.size());
    ElementSet orbit{start};
    orbit_of[start] = id;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const auto& g : generators) {
        Point y = g(orbit[i]);
        if (orbit_of[y] == static_cast<Point>(-1)) {
          orbit_of[y] = id;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<ElementSet> orbits(const PermGroup& g) { return orbits(g.degree(), g.generators()); }

bool is_transitive(const PermGroup& g) { return orbits(g).size() <= 1; }

namespace {

// Generators drawn from a materialized element list: greedily keep elements
// that enlarge the subgroup generated so far.
PermGroup subgroup_from_elements(const PermGroup& parent, const std::vector<Permutation>& members) {
  std::vector<Permutation> gens;
  std::unordered_set<Permutation, PermutationHash> span{Permutation::identity(parent.degree())};
  for (const auto& m : members) {
    if (span.count(m)) continue;
    gens.push_back(m);
    auto els = closure(parent.degree(), gens, parent.limit());
    span = {els.begin(), els.end()};
    if (span.size() == members.size()) break;
  }
  return PermGroup(parent.degree(), std::move(gens), parent.limit());
}

}  // namespace

PermGroup stabilizer(const PermGroup& g, Point e) {
  std::vector<Permutation> fixing;
  for (const auto& p : g.elements())
    if (p(e) == e) fixing.push_back(p);
  return subgroup_from_elements(g, fixing);
}

PermGroup center(const PermGroup& g) {
  std::vector<Permutation> central;
  for (const auto& p : g.elements()) {
    bool commutes = std::all_of(g.generators().begin(), g.generators().end(),
                                [&](const Permutation& s) { return s * p == p * s; });
    if (commutes) central.push_back(p);
  }
  return subgroup_from_elements(g, central);
}

PermGroup normal_closure(const PermGroup& g, std::span<const Permutation> s) {
  std::vector<Permutation> gens;
  for (const auto& x : s)
    if (!x.is_identity()) gens.push_back(x);
  auto current = closure(g.degree(), gens, g.limit());
  std::unordered_set<Permutation, PermutationHash> members(current.begin(), current.end());
  bool grown = true;
  while (grown) {
    grown = false;
    const std::size_t count = gens.size();
    for (std::size_t i = 0; i < count; ++i)
      for (const auto& t : g.generators()) {
        Permutation c = conjugate(t, gens[i]);
        if (!members.count(c)) {
          gens.push_back(c);
          current = closure(g.degree(), gens, g.limit());
          members = {current.begin(), current.end()};
          grown = true;
        }
      }
  }
  return PermGroup(g.degree(), std::move(gens), g.limit());
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Permutation> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Permutation c = commutator(gens[i], gens[j]);
      if (!c.is_identity() && std::find(comms.begin(), comms.end(), c) == comms.end()) comms.push_back(c);
    }
  return normal_closure(g, comms);
}

bool is_subgroup(const PermGroup& g, const PermGroup& h) {
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [&](const Permutation& x) { return g.contains(x); });
}

bool is_normal(const PermGroup& g, const PermGroup& h) {
  for (const auto& t : g.generators())
    for (const auto& x : h.generators())
      if (!h.contains(conjugate(t, x))) return false;
  return true;
}

bool is_abelian(const PermGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
  return true;
}

bool is_minimal_normal(const PermGroup& g, const PermGroup& h) {
  if (h.is_trivial() || !is_subgroup(g, h) || !is_normal(g, h)) return false;
  std::unordered_set<Permutation, PermutationHash> covered;
  for (const auto& x : h.elements()) {
    if (x.is_identity() || covered.count(x)) continue;
    // mark the g-conjugacy class of x
    std::vector<Permutation> cls{x};
    covered.insert(x);
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (const auto& t : g.generators()) {
        Permutation c = conjugate(t, cls[i]);
        if (covered.insert(c).second) cls.push_back(c);
      }
    const Permutation one[] = {x};
    if (normal_closure(g, one).order() != h.order()) return false;
  }
  return true;
}

}  // namespace ivq
