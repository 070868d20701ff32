#include "ivq/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <set>
#include <sstream>
#include <thread>

#include "ivq/analysis.hpp"
#include "ivq/constructions.hpp"
#include "ivq/group.hpp"

namespace ivq {

namespace {

constexpr std::size_t kCap = 16;
static_assert(kMaxEnumerationOrder < kCap);
constexpr std::uint8_t kUnset = 0xFF;

using Row = std::array<std::uint8_t, kCap>;

Row identity_row() {
  Row r{};
  for (std::size_t i = 0; i < kCap; ++i) r[i] = static_cast<std::uint8_t>(i);
  return r;
}

// (a b)(i) = a(b(i)); entries past n stay the identity
Row compose(const Row& a, const Row& b) {
  Row r{};
  for (std::size_t i = 0; i < kCap; ++i) r[i] = a[b[i]];
  return r;
}

struct SearchState {
  std::array<Row, kCap> rows{};
  std::uint32_t defined = 0;
  // column_fixed[v] = number of defined x with L_x(v) = v
  std::array<std::uint8_t, kCap> column_fixed{};

  bool has(std::size_t x) const { return (defined >> x) & 1u; }
};

// Involution being built as the next translation L_u.
struct PartialInvolution {
  Row image{};
  std::size_t assigned = 0;
  std::size_t fixed = 0;
  // pairs (A, B) with sigma A = B sigma
  std::vector<std::pair<Row, Row>> intertwiners;
};

// Orbits of <L_x : x in D> and, outside D, classes of points related by an
// isomorphism of their orbits as sets acted on by the L_x.
struct Symmetry {
  std::array<std::uint8_t, kCap> orbit_of{};
  std::array<std::uint8_t, kCap> class_of{};
  std::uint32_t d_orbits = 0;
};

class TranslationSearch {
public:
  TranslationSearch(std::size_t n, bool connected_only) : n_(n), connected_only_(connected_only) {}

  std::size_t order() const { return n_; }

  // L_0 fixes 0..f-1 and swaps (f f+1), (f+2 f+3), ...
  std::vector<std::pair<std::size_t, SearchState>> roots() const {
    std::vector<std::pair<std::size_t, SearchState>> out;
    for (std::size_t f = 1; f <= n_; ++f) {
      if ((n_ - f) % 2 != 0) continue;
      if (connected_only_ && f == n_ && n_ > 1) continue;
      Row l0 = identity_row();
      for (std::size_t i = f; i + 1 < n_; i += 2) {
        l0[i] = static_cast<std::uint8_t>(i + 1);
        l0[i + 1] = static_cast<std::uint8_t>(i);
      }
      SearchState s;
      for (auto& r : s.rows) r = identity_row();
      if (define(s, 0, l0, f) && close(s, 0, f)) out.emplace_back(f, s);
    }
    return out;
  }

  // Children of s for one undefined translation L_u, chosen as the one with
  // the fewest candidate involutions.
  void expand(const SearchState& s, std::size_t f, const std::function<void(const SearchState&)>& emit) const {
    const Symmetry sym = symmetry(s);
    std::size_t best_u = n_;
    std::size_t best_count = std::numeric_limits<std::size_t>::max();
    std::uint32_t tried_classes = 0;
    for (std::size_t u = 0; u < n_ && best_count > 1; ++u) {
      if (s.has(u) || ((tried_classes >> sym.class_of[u]) & 1u)) continue;
      tried_classes |= 1u << sym.class_of[u];
      PartialInvolution sigma;
      if (!initial_sigma(s, u, f, sigma)) return;
      std::size_t count = 0;
      build(s, sigma, sym, f, [&](const Row&) { return ++count < best_count; });
      if (count == 0) return;
      if (count < best_count) {
        best_count = count;
        best_u = u;
      }
    }
    if (best_u == n_) return;
    PartialInvolution sigma;
    initial_sigma(s, best_u, f, sigma);
    build(s, sigma, sym, f, [&](const Row& image) {
      SearchState child = s;
      if (define(child, best_u, image, f) && close(child, best_u, f)) {
        emit(child);
      }
      return true;
    });
  }

  // Every g in <L_x : x in D> fixing u commutes with sigma = L_u, since
  // L_{g(u)} = g L_u g^-1. The stabilizer is given by Schreier generators
  // t_{g(w)}^-1 g t_w over the orbit of u.
  bool initial_sigma(const SearchState& s, std::size_t u, std::size_t f, PartialInvolution& sigma) const {
    sigma.image.fill(kUnset);
    for (std::size_t i = n_; i < kCap; ++i) sigma.image[i] = static_cast<std::uint8_t>(i);
    std::array<Row, kCap> transversal;
    std::uint32_t in_orbit = 1u << u;
    std::array<std::uint8_t, kCap> orbit{};
    std::size_t size = 0;
    orbit[size++] = static_cast<std::uint8_t>(u);
    transversal[u] = identity_row();
    for (std::size_t i = 0; i < size; ++i) {
      const std::size_t w = orbit[i];
      for (std::size_t x = 0; x < n_; ++x) {
        if (!s.has(x)) continue;
        const std::size_t z = s.rows[x][w];
        if ((in_orbit >> z) & 1u) continue;
        in_orbit |= 1u << z;
        transversal[z] = compose(s.rows[x], transversal[w]);
        orbit[size++] = static_cast<std::uint8_t>(z);
      }
    }
    auto inverse = [](const Row& r) {
      Row inv{};
      for (std::size_t i = 0; i < kCap; ++i) inv[r[i]] = static_cast<std::uint8_t>(i);
      return inv;
    };
    const Row id = identity_row();
    for (std::size_t i = 0; i < size; ++i) {
      const std::size_t w = orbit[i];
      for (std::size_t x = 0; x < n_; ++x) {
        if (!s.has(x)) continue;
        const std::size_t z = s.rows[x][w];
        const Row g = compose(inverse(transversal[z]), compose(s.rows[x], transversal[w]));
        if (g == id) continue;
        if (std::any_of(sigma.intertwiners.begin(), sigma.intertwiners.end(),
                        [&](const auto& pr) { return pr.first == g; }))
          continue;
        sigma.intertwiners.emplace_back(g, g);
        const Row gi = inverse(g);
        if (gi != g) sigma.intertwiners.emplace_back(gi, gi);
      }
    }
    return assign(s, sigma, u, u, f);
  }

  void search(const SearchState& s, std::size_t f, const std::function<void(const SearchState&)>& leaf) const {
    if (s.defined == (1u << n_) - 1) {
      if (!connected_only_ || transitive(s)) leaf(s);
      return;
    }
    if (connected_only_ && !can_connect(s, f)) return;
    expand(s, f, [&](const SearchState& child) { search(child, f, leaf); });
  }

  Quandle to_quandle(const SearchState& s) const {
    std::vector<Element> cells(n_ * n_);
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = 0; y < n_; ++y) cells[x * n_ + y] = s.rows[x][y];
    return Quandle::assume_valid(MagmaTable(n_, std::move(cells)));
  }

private:
  // Undefined rows in one orbit of G_D = <L_x : x in D> are G_D-conjugate,
  // so the final group is G_D plus one row per such orbit. Each row has
  // (n - f) / 2 two-cycles and can merge at most that many orbits.
  bool can_connect(const SearchState& s, std::size_t f) const {
    std::array<std::uint8_t, kCap> parent;
    for (std::size_t v = 0; v < kCap; ++v) parent[v] = static_cast<std::uint8_t>(v);
    auto find = [&](std::size_t v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    std::size_t orbits = n_;
    for (std::size_t x = 0; x < n_; ++x) {
      if (!s.has(x)) continue;
      for (std::size_t v = 0; v < n_; ++v) {
        const std::size_t a = find(v), b = find(s.rows[x][v]);
        if (a != b) {
          parent[std::max(a, b)] = static_cast<std::uint8_t>(std::min(a, b));
          --orbits;
        }
      }
    }
    std::uint32_t undefined_roots = 0;
    for (std::size_t v = 0; v < n_; ++v)
      if (!s.has(v)) undefined_roots |= 1u << find(v);
    const std::size_t k = static_cast<std::size_t>(std::popcount(undefined_roots));
    return orbits <= 1 + k * ((n_ - f) / 2);
  }

  Symmetry symmetry(const SearchState& s) const {
    Symmetry sym;
    std::array<std::uint8_t, kCap> gens{};
    std::size_t ng = 0;
    for (std::size_t x = 0; x < n_; ++x)
      if (s.has(x)) gens[ng++] = static_cast<std::uint8_t>(x);

    sym.orbit_of.fill(kUnset);
    std::uint8_t orbit_count = 0;
    std::array<std::uint8_t, kCap> orbit_size{};
    for (std::size_t v = 0; v < n_; ++v) {
      if (sym.orbit_of[v] != kUnset) continue;
      std::array<std::uint8_t, kCap> stack{};
      std::size_t top = 0;
      stack[top++] = static_cast<std::uint8_t>(v);
      sym.orbit_of[v] = orbit_count;
      while (top > 0) {
        const std::size_t y = stack[--top];
        ++orbit_size[orbit_count];
        for (std::size_t i = 0; i < ng; ++i) {
          const std::size_t z = s.rows[gens[i]][y];
          if (sym.orbit_of[z] == kUnset) {
            sym.orbit_of[z] = orbit_count;
            stack[top++] = static_cast<std::uint8_t>(z);
          }
        }
      }
      ++orbit_count;
    }
    for (std::size_t x = 0; x < n_; ++x)
      if (s.has(x)) sym.d_orbits |= 1u << sym.orbit_of[x];

    // which generators fix v: equal for interchangeable points
    std::array<std::uint32_t, kCap> fixers{};
    for (std::size_t v = 0; v < n_; ++v)
      for (std::size_t i = 0; i < ng; ++i)
        if (s.rows[gens[i]][v] == v) fixers[v] |= 1u << i;

    auto equivalent = [&](std::size_t a, std::size_t b) {
      std::array<std::uint8_t, kCap> phi, inv;
      phi.fill(kUnset);
      inv.fill(kUnset);
      phi[a] = static_cast<std::uint8_t>(b);
      inv[b] = static_cast<std::uint8_t>(a);
      std::array<std::uint8_t, kCap> stack{};
      std::size_t top = 0;
      stack[top++] = static_cast<std::uint8_t>(a);
      while (top > 0) {
        const std::size_t y = stack[--top];
        for (std::size_t i = 0; i < ng; ++i) {
          const auto& g = s.rows[gens[i]];
          const std::size_t z = g[y], w = g[phi[y]];
          if (phi[z] == kUnset) {
            if (inv[w] != kUnset) return false;
            phi[z] = static_cast<std::uint8_t>(w);
            inv[w] = static_cast<std::uint8_t>(z);
            stack[top++] = static_cast<std::uint8_t>(z);
          } else if (phi[z] != w) {
            return false;
          }
        }
      }
      return true;
    };

    std::array<std::uint8_t, kCap> class_rep{};
    std::uint8_t class_count = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      sym.class_of[v] = kUnset;
      if (!s.has(v))
        for (std::uint8_t c = 0; c < class_count; ++c) {
          const std::size_t r = class_rep[c];
          if (s.has(r) || fixers[r] != fixers[v] || orbit_size[sym.orbit_of[r]] != orbit_size[sym.orbit_of[v]] ||
              s.column_fixed[r] != s.column_fixed[v])
            continue;
          if (equivalent(r, v)) {
            sym.class_of[v] = c;
            break;
          }
        }
      if (sym.class_of[v] == kUnset) {
        class_rep[class_count] = static_cast<std::uint8_t>(v);
        sym.class_of[v] = class_count++;
      }
    }
    return sym;
  }

  bool transitive(const SearchState& s) const {
    std::uint32_t seen = 1;
    std::array<std::uint8_t, kCap> stack{};
    std::size_t top = 0;
    stack[top++] = 0;
    while (top > 0) {
      const std::size_t y = stack[--top];
      for (std::size_t x = 0; x < n_; ++x) {
        const std::size_t z = s.rows[x][y];
        if (!((seen >> z) & 1u)) {
          seen |= 1u << z;
          stack[top++] = static_cast<std::uint8_t>(z);
        }
      }
    }
    return seen == (1u << n_) - 1;
  }

  // In a connected quandle every column u has exactly f entries x with
  // x*u = u, the same as the fixed-point count of each row.
  bool define(SearchState& s, std::size_t z, const Row& r, std::size_t f) const {
    s.rows[z] = r;
    s.defined |= 1u << z;
    for (std::size_t v = 0; v < n_; ++v)
      if (r[v] == v && ++s.column_fixed[v] > f && connected_only_) return false;
    return true;
  }

  // Closes the defined rows under L_{x*y} = L_x L_y L_x, starting from the
  // newly defined z.
  bool close(SearchState& s, std::size_t z, std::size_t f) const {
    std::array<std::uint8_t, kCap> queue{};
    std::size_t head = 0, tail = 0;
    queue[tail++] = static_cast<std::uint8_t>(z);
    while (head < tail) {
      const std::size_t x = queue[head++];
      for (std::size_t y = 0; y < n_; ++y) {
        if (!s.has(y)) continue;
        for (int side = 0; side < 2; ++side) {
          const std::size_t a = side == 0 ? x : y;
          const std::size_t b = side == 0 ? y : x;
          const std::size_t c = s.rows[a][b];
          const Row p = compose(s.rows[a], compose(s.rows[b], s.rows[a]));
          if (s.has(c)) {
            if (s.rows[c] != p) return false;
          } else {
            if (!define(s, c, p, f)) return false;
            queue[tail++] = static_cast<std::uint8_t>(c);
          }
          if (a == b) break;
        }
      }
    }
    return true;
  }

  bool fixed_count_feasible(const PartialInvolution& sigma, std::size_t f) const {
    if (!connected_only_) return true;
    const std::size_t free = n_ - sigma.assigned;
    if (sigma.fixed > f) return false;
    const std::size_t need = f - sigma.fixed;
    return need <= free && (free - need) % 2 == 0;
  }

  // Sets sigma(p) = q and sigma(q) = p with all consequences.
  bool assign(const SearchState& s, PartialInvolution& sigma, std::size_t p, std::size_t q, std::size_t f) const {
    std::vector<std::pair<std::uint8_t, std::uint8_t>> stack{{static_cast<std::uint8_t>(p), static_cast<std::uint8_t>(q)}};
    auto push_all = [&](const Row& a, const Row& b, std::size_t x, std::size_t y) {
      stack.emplace_back(a[x], b[y]);
      if (x != y) stack.emplace_back(a[y], b[x]);
    };
    while (!stack.empty()) {
      auto [a, b] = stack.back();
      stack.pop_back();
      if (sigma.image[a] != kUnset) {
        if (sigma.image[a] != b) return false;
        continue;
      }
      if (sigma.image[b] != kUnset) return false;
      sigma.image[a] = b;
      sigma.image[b] = a;
      if (a == b) {
        if (connected_only_ && s.column_fixed[a] + 1u > f) return false;
        ++sigma.fixed;
        ++sigma.assigned;
      } else {
        sigma.assigned += 2;
      }
      // sigma L_a sigma = L_b once both translations are known
      if (s.has(a) && s.has(b)) {
        sigma.intertwiners.emplace_back(s.rows[a], s.rows[b]);
        const auto& [ra, rb] = sigma.intertwiners.back();
        for (std::size_t x = 0; x < n_; ++x)
          if (sigma.image[x] != kUnset && x <= sigma.image[x]) push_all(ra, rb, x, sigma.image[x]);
      }
      for (const auto& [ra, rb] : sigma.intertwiners) push_all(ra, rb, a, b);
    }
    return fixed_count_feasible(sigma, f);
  }

  // Completes sigma point by point; `done` receives each complete
  // involution and returns false to stop the search.
  bool build(const SearchState& s, const PartialInvolution& sigma, const Symmetry& sym, std::size_t f,
             const std::function<bool(const Row&)>& done) const {
    std::size_t p = 0;
    while (p < n_ && sigma.image[p] != kUnset) ++p;
    if (p == n_) return done(sigma.image);
    // Relabelings commuting with every defined L_x and fixing D, u and the
    // assigned points preserve the state; they act on the free orbits, so
    // one candidate per interchangeable class suffices.
    std::uint32_t pinned = sym.d_orbits | (1u << sym.orbit_of[p]);
    for (std::size_t v = 0; v < n_; ++v)
      if (sigma.image[v] != kUnset) pinned |= 1u << sym.orbit_of[v];
    std::array<std::uint8_t, kCap> rep;
    rep.fill(kUnset);
    for (std::size_t v = n_; v-- > 0;)
      if (!((pinned >> sym.orbit_of[v]) & 1u)) rep[sym.class_of[v]] = static_cast<std::uint8_t>(v);
    for (std::size_t q = p; q < n_; ++q) {
      if (sigma.image[q] != kUnset) continue;
      if (!((pinned >> sym.orbit_of[q]) & 1u) && rep[sym.class_of[q]] != q) continue;
      PartialInvolution next = sigma;
      if (assign(s, next, p, q, f) && !build(s, next, sym, f, done)) return false;
    }
    return true;
  }

  std::size_t n_;
  bool connected_only_;
};

CanonicalCatalog run_search(std::size_t n, bool connected_only, unsigned workers) {
  if (n < 1 || n > kMaxEnumerationOrder)
    throw SizeLimit("enumeration supports orders 1.." + std::to_string(kMaxEnumerationOrder));
  const TranslationSearch search(n, connected_only);

  // tasks: the children of each root, in a fixed order
  struct Task {
    std::size_t f;
    SearchState state;
  };
  std::vector<Task> tasks;
  for (const auto& [f, root] : search.roots()) {
    if (root.defined == (1u << n) - 1) {
      tasks.push_back({f, root});
      continue;
    }
    const std::size_t fixed = f;
    search.expand(root, f, [&](const SearchState& child) { tasks.push_back({fixed, child}); });
  }

  workers = std::max(1u, workers);
  std::vector<std::set<MagmaTable>> found(workers);
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned w) {
    try {
      for (std::size_t i = next++; i < tasks.size(); i = next++)
        search.search(tasks[i].state, tasks[i].f, [&](const SearchState& leaf) {
          found[w].insert(canonical_form(search.to_quandle(leaf)).table());
        });
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::set<MagmaTable> all;
  for (auto& f : found) all.merge(f);
  CanonicalCatalog c;
  c.order = n;
  for (const auto& t : all) c.members.push_back(Quandle::assume_valid(t));
  return c;
}

}  // namespace

CanonicalCatalog enumerate_connected(std::size_t n, unsigned workers) { return run_search(n, true, workers); }

CanonicalCatalog enumerate_all(std::size_t n, unsigned workers) { return run_search(n, false, workers); }

std::optional<std::vector<unsigned>> is_affine(const Quandle& q) {
  for (const auto& factors : abelian_groups(static_cast<unsigned>(q.size())))
    if (are_isomorphic(q, abelian_core(factors))) return factors;
  return std::nullopt;
}

CountsRow counts(const CanonicalCatalog& catalog) {
  CountsRow r;
  r.n = catalog.order;
  r.q = catalog.members.size();
  for (const auto& m : catalog.members) {
    if (is_latin(m)) ++r.l;
    if (is_affine(m)) ++r.a;
  }
  return r;
}

CountsRow counts(std::size_t n, unsigned workers) { return counts(enumerate_connected(n, workers)); }

Envelope envelope_of(const Quandle& q, Element e, std::size_t limit) {
  if (e >= q.size()) throw Error("basepoint out of range");
  if (!is_connected(q)) throw NotConnected("envelope needs a connected quandle");
  PermGroup g = lmlt(q, limit);
  Permutation zeta = left_translations(q)[e];
  // LMlt of the one-element quandle has no generators; keep zeta's degree
  return Envelope{std::move(g), e, std::move(zeta)};
}

Quandle quandle_from_envelope(const Envelope& env) {
  const PermGroup& g = env.group;
  const std::size_t n = g.degree();
  const Element e = env.basepoint;
  const Permutation& zeta = env.zeta;
  if (n == 0) throw InvalidEnvelope("G acts on the empty set");
  if (e >= n) throw InvalidEnvelope("basepoint out of range");
  if (zeta.degree() != n) throw InvalidEnvelope("zeta has the wrong degree");
  if (!is_transitive(g)) throw InvalidEnvelope("G is not transitive");
  if (!g.contains(zeta)) throw InvalidEnvelope("zeta is not in G");
  if (zeta(e) != e) throw InvalidEnvelope("zeta does not fix the basepoint");
  for (const auto& h : g.elements())
    if (h(e) == e && h * zeta != zeta * h) throw InvalidEnvelope("zeta is not central in the stabilizer of e");
  if (!zeta.is_involution()) throw InvalidEnvelope("zeta is not an involution");
  const Permutation gens[] = {zeta};
  if (normal_closure(g, gens).order() != g.order()) throw InvalidEnvelope("normal closure of zeta is not G");

  std::vector<const Permutation*> carrier(n, nullptr);
  for (const auto& h : g.elements())
    if (!carrier[h(e)]) carrier[h(e)] = &h;
  std::vector<std::vector<Element>> rows(n);
  for (Element a = 0; a < n; ++a) {
    const Permutation la = conjugate(*carrier[a], zeta);
    rows[a].assign(la.images().begin(), la.images().end());
  }
  return Quandle::checked(MagmaTable::from_rows(rows));
}

std::vector<std::filesystem::path> write_catalog(const std::filesystem::path& dir, const CanonicalCatalog& c) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> paths;
  for (std::size_t i = 0; i < c.members.size(); ++i) {
    auto path = dir / ("ivq-n" + std::to_string(c.order) + "-" + std::to_string(i + 1) + ".tbl");
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    write_table(out, c.members[i].table(),
                "connected involutory quandle " + std::to_string(i + 1) + " of order " + std::to_string(c.order));
    paths.push_back(std::move(path));
  }
  return paths;
}

void write_counts(const std::filesystem::path& file, const std::vector<CountsRow>& rows) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  std::ofstream out(file);
  if (!out) throw Error("cannot write " + file.string());
  out << "n\tq\tl\ta\n";
  for (const auto& r : rows) out << r.n << '\t' << r.q << '\t' << r.l << '\t' << r.a << '\n';
}

}  // namespace ivq
