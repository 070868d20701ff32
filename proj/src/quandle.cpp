#include "ivq/quandle.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

namespace ivq {

namespace {

class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

  Element find(Element x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Keeps the smaller root so block representatives stay deterministic.
  bool unite(Element a, Element b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

private:
  std::vector<Element> parent_;
};

CongruencePartition normalize_blocks(std::span<const Element> raw) {
  CongruencePartition p;
  p.block.resize(raw.size());
  std::vector<Element> remap(raw.size(), static_cast<Element>(-1));
  Element next = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    Element r = raw[i];
    if (remap[r] == static_cast<Element>(-1)) remap[r] = next++;
    p.block[i] = remap[r];
  }
  return p;
}

CongruencePartition partition_of(UnionFind& uf, std::size_t n) {
  std::vector<Element> raw(n);
  for (Element x = 0; x < n; ++x) raw[x] = uf.find(x);
  return normalize_blocks(raw);
}

// Merges pairs until the equivalence is compatible with both arguments of
// the operation.
void close_congruence(const Quandle& q, UnionFind& uf, std::vector<std::pair<Element, Element>> pending) {
  const auto n = static_cast<Element>(q.size());
  while (!pending.empty()) {
    auto [a, b] = pending.back();
    pending.pop_back();
    for (Element z = 0; z < n; ++z) {
      Element l1 = q(z, a), l2 = q(z, b);
      if (uf.unite(l1, l2)) pending.emplace_back(l1, l2);
      Element r1 = q(a, z), r2 = q(b, z);
      if (uf.unite(r1, r2)) pending.emplace_back(r1, r2);
    }
  }
}

bool connected_by_rows(const Quandle& q) {
  const auto n = static_cast<Element>(q.size());
  UnionFind uf(n);
  std::size_t blocks = n;
  for (Element a = 0; a < n && blocks > 1; ++a)
    for (Element x = 0; x < n; ++x)
      if (uf.unite(x, q(a, x))) --blocks;
  return blocks <= 1;
}

Element fixed_points(const Quandle& q, Element x) {
  Element count = 0;
  for (Element y = 0; y < q.size(); ++y) count += q(x, y) == y;
  return count;
}

class CanonicalSearch {
public:
  explicit CanonicalSearch(const Quandle& q) : q_(q), n_(static_cast<Element>(q.size())), pos_(n_, kNone) {
    seq_.reserve(n_);
    connected_ = connected_by_rows(q);
    fix_.resize(n_);
    column_fix_.assign(n_, 0);
    for (Element x = 0; x < n_; ++x) {
      fix_[x] = fixed_points(q, x);
      for (Element y = 0; y < n_; ++y) column_fix_[y] += q(x, y) == y;
    }
    if (!connected_) {
      orbit_size_.resize(n_);
      for (const auto& orbit : orbit_decomposition(q))
        for (Element x : orbit) orbit_size_[x] = static_cast<Element>(orbit.size());
      if (n_ <= kTwinLimit) compute_twins();
    }
  }

  CanonicalLabeling run() {
    if (n_ == 0) return {q_, {}};
    descend(0);
    std::vector<Element> cells(std::size_t{n_} * n_);
    std::vector<Element> pos(n_);
    for (Element i = 0; i < n_; ++i) pos[best_order_[i]] = i;
    for (Element i = 0; i < n_; ++i)
      for (Element j = 0; j < n_; ++j) cells[i * n_ + j] = pos[q_(best_order_[i], best_order_[j])];
    return {Quandle::assume_valid(MagmaTable(n_, std::move(cells))), best_order_};
  }

private:
  static constexpr Element kNone = static_cast<Element>(-1);
  static constexpr Element kTwinLimit = 64;

  void label(Element x) {
    pos_[x] = static_cast<Element>(seq_.size());
    seq_.push_back(x);
  }

  void unwind(std::size_t size) {
    while (seq_.size() > size) {
      pos_[seq_.back()] = kNone;
      seq_.pop_back();
    }
  }

  void close(std::size_t& m) {
    while (m < seq_.size()) {
      const Element c = seq_[m];
      for (std::size_t i = 0; i <= m; ++i) {
        const Element a = seq_[i];
        if (Element p = q_(a, c); pos_[p] == kNone) label(p);
        if (Element p = q_(c, a); pos_[p] == kNone) label(p);
      }
      ++m;
    }
  }

  Element cell(Element i, Element j) const { return pos_[q_(seq_[i], seq_[j])]; }

  Element best_cell(Element i, Element j) const { return best_cells_[i * n_ + j]; }

  // Compares cells with max(i, j) < k in (max, row, column) block order.
  int compare_prefix(Element k) const {
    if (best_order_.empty()) return -1;
    for (Element b = 0; b < k; ++b) {
      for (Element i = 0; i <= b; ++i) {
        Element c = cell(i, b), d = best_cell(i, b);
        if (c != d) return c < d ? -1 : 1;
      }
      for (Element j = 0; j < b; ++j) {
        Element c = cell(b, j), d = best_cell(b, j);
        if (c != d) return c < d ? -1 : 1;
      }
    }
    return 0;
  }

  void record_best() {
    best_order_ = seq_;
    best_cells_.assign(std::size_t{n_} * n_, 0);
    for (Element i = 0; i < n_; ++i)
      for (Element j = 0; j < n_; ++j) best_cells_[i * n_ + j] = cell(i, j);
  }

  using Key = std::tuple<Element, Element, Element>;

  Key key(Element c) const {
    if (seq_.empty()) {
      if (connected_) return {fix_[c], 0, 0};
      return {fix_[c], orbit_size_[c], column_fix_[c]};
    }
    const Element s = seq_[0];
    Element len = 1;
    for (Element p = q_(s, q_(c, c)); p != c; p = q_(s, q_(c, p))) ++len;
    return {fix_[c], q_(s, c) == c ? 0u : 1u, len};
  }

  std::vector<Element> candidates() const {
    std::vector<Element> out;
    if (seq_.empty() && connected_) {
      out.push_back(0);
      return out;
    }
    Key best{kNone, kNone, kNone};
    for (Element c = 0; c < n_; ++c) {
      if (pos_[c] != kNone) continue;
      Key k = key(c);
      if (k < best) {
        best = k;
        out.clear();
      }
      if (k == best) out.push_back(c);
    }
    if (!twin_.empty()) {
      std::vector<Element> kept;
      for (Element c : out) {
        bool redundant = std::any_of(kept.begin(), kept.end(), [&](Element k) { return twin_[c] == twin_[k]; });
        if (!redundant) kept.push_back(c);
      }
      out.swap(kept);
    }
    return out;
  }

  void descend(std::size_t m) {
    close(m);
    const auto k = static_cast<Element>(seq_.size());
    int cmp = compare_prefix(k);
    if (cmp > 0) return;
    if (k == n_) {
      if (cmp < 0) record_best();
      return;
    }
    const std::size_t saved = seq_.size();
    for (Element c : candidates()) {
      label(c);
      descend(m);
      unwind(saved);
    }
  }

  // twin_[c] is the least c' such that the transposition (c c') is an
  // automorphism.
  void compute_twins() {
    twin_.resize(n_);
    std::iota(twin_.begin(), twin_.end(), 0u);
    std::vector<Element> swap(n_);
    for (Element a = 0; a < n_; ++a) {
      if (twin_[a] != a) continue;
      for (Element b = a + 1; b < n_; ++b) {
        if (twin_[b] != b) continue;
        std::iota(swap.begin(), swap.end(), 0u);
        std::swap(swap[a], swap[b]);
        bool automorphism = true;
        for (Element x = 0; x < n_ && automorphism; ++x)
          for (Element y = 0; y < n_; ++y)
            if (swap[q_(x, y)] != q_(swap[x], swap[y])) {
              automorphism = false;
              break;
            }
        if (automorphism) twin_[b] = a;
      }
    }
  }

  const Quandle& q_;
  Element n_;
  bool connected_ = false;
  std::vector<Element> seq_;
  std::vector<Element> pos_;
  std::vector<Element> fix_;
  std::vector<Element> column_fix_;
  std::vector<Element> orbit_size_;
  std::vector<Element> twin_;
  std::vector<Element> best_order_;
  std::vector<Element> best_cells_;
};

}  // namespace

MagmaTable::MagmaTable(std::size_t n, std::vector<Element> cells) : n_(n), cells_(std::move(cells)) {
  if (n == 0) throw MalformedTable("table must have at least one element");
  if (cells_.size() != n * n)
    throw MalformedTable("expected " + std::to_string(n * n) + " cells, got " + std::to_string(cells_.size()));
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i] >= n)
      throw MalformedTable("entry " + std::to_string(cells_[i]) + " at row " + std::to_string(i / n) +
                           ", column " + std::to_string(i % n) + " out of range");
}

MagmaTable MagmaTable::from_rows(const std::vector<std::vector<Element>>& rows) {
  const std::size_t n = rows.size();
  std::vector<Element> cells;
  cells.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n)
      throw MalformedTable("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                           " entries, expected " + std::to_string(n));
    cells.insert(cells.end(), rows[r].begin(), rows[r].end());
  }
  return MagmaTable(n, std::move(cells));
}

std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::idempotence: return "idempotence";
    case Axiom::involutory: return "involutory";
    case Axiom::left_distributivity: return "left distributivity";
  }
  return "unknown";
}

std::string AxiomViolation::message() const {
  static constexpr const char* names[] = {"x", "y", "z"};
  std::string out(axiom_name(axiom));
  out += " violated at ";
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i) out += ", ";
    out += names[i];
    out += '=';
    out += std::to_string(witness[i]);
  }
  return out;
}

std::optional<AxiomViolation> first_violation(const MagmaTable& m) {
  const auto n = static_cast<Element>(m.size());
  for (Element x = 0; x < n; ++x)
    if (m(x, x) != x) return AxiomViolation{Axiom::idempotence, {x}};
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (m(x, m(x, y)) != y) return AxiomViolation{Axiom::involutory, {x, y}};
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (m(x, m(y, z)) != m(m(x, y), m(x, z))) return AxiomViolation{Axiom::left_distributivity, {x, y, z}};
  return std::nullopt;
}

std::variant<Quandle, AxiomViolation> validate(const MagmaTable& m) {
  if (auto v = first_violation(m)) return *v;
  return Quandle(m);
}

Quandle Quandle::checked(MagmaTable table) {
  if (auto v = first_violation(table)) throw AxiomError(v->message());
  return Quandle(std::move(table));
}

Quandle Quandle::assume_valid(MagmaTable table) {
#ifndef NDEBUG
  if (table.size() <= 64) {
    if (auto v = first_violation(table)) throw AxiomError("internal: " + v->message());
  }
#endif
  return Quandle(std::move(table));
}

bool is_latin(const Quandle& q) {
  const auto n = static_cast<Element>(q.size());
  std::vector<char> seen(n);
  for (Element y = 0; y < n; ++y) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Element x = 0; x < n; ++x) {
      Element v = q(x, y);
      if (seen[v]) return false;
      seen[v] = 1;
    }
  }
  return true;
}

bool is_faithful(const Quandle& q) {
  const auto n = static_cast<Element>(q.size());
  std::set<std::vector<Element>> rows;
  for (Element x = 0; x < n; ++x)
    if (!rows.emplace(q.row(x).begin(), q.row(x).end()).second) return false;
  return true;
}

bool is_medial(const Quandle& q) {
  const auto n = static_cast<Element>(q.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const Element xy = q(x, y);
      for (Element u = 0; u < n; ++u) {
        const Element xu = q(x, u);
        for (Element v = 0; v < n; ++v)
          if (q(xy, q(u, v)) != q(xu, q(y, v))) return false;
      }
    }
  return true;
}

bool is_balanced(const Quandle& q) {
  const auto n = static_cast<Element>(q.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if ((q(x, y) == y) != (q(y, x) == x)) return false;
  return true;
}

bool is_right_distributive(const Quandle& q) {
  const auto n = static_cast<Element>(q.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (q(q(x, y), z) != q(q(x, z), q(y, z))) return false;
  return true;
}

Properties basic_properties(const Quandle& q) {
  return {is_latin(q), is_faithful(q), is_medial(q), is_balanced(q)};
}

MagmaTable relabel(const MagmaTable& m, std::span<const Element> sigma) {
  const std::size_t n = m.size();
  if (sigma.size() != n) throw MalformedTable("relabeling has wrong length");
  std::vector<Element> cells(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) cells[sigma[x] * n + sigma[y]] = sigma[m(x, y)];
  return MagmaTable(n, std::move(cells));
}

Quandle relabel(const Quandle& q, std::span<const Element> sigma) {
  return Quandle::assume_valid(relabel(q.table(), sigma));
}

CanonicalLabeling canonical_labeling(const Quandle& q) { return CanonicalSearch(q).run(); }

Quandle canonical_form(const Quandle& q) { return canonical_labeling(q).form; }

bool IsoCertificate::verify(const Quandle& from, const Quandle& to) const {
  const std::size_t n = from.size();
  if (to.size() != n || mapping.size() != n) return false;
  std::vector<char> hit(n);
  for (Element x : mapping) {
    if (x >= n || hit[x]) return false;
    hit[x] = 1;
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (mapping[from(x, y)] != to(mapping[x], mapping[y])) return false;
  return true;
}

std::optional<IsoCertificate> are_isomorphic(const Quandle& a, const Quandle& b) {
  if (a.size() != b.size()) return std::nullopt;
  auto ca = canonical_labeling(a);
  auto cb = canonical_labeling(b);
  if (ca.form != cb.form) return std::nullopt;
  // label i <-> a's ca.order[i] <-> b's cb.order[i]
  IsoCertificate cert;
  cert.mapping.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) cert.mapping[ca.order[i]] = cb.order[i];
  return cert;
}

ElementSet subquandle_generated(const Quandle& q, std::span<const Element> seed) {
  const std::size_t n = q.size();
  std::vector<char> in(n);
  std::vector<Element> members;
  for (Element s : seed) {
    if (s >= n) throw MalformedTable("seed element " + std::to_string(s) + " out of range");
    if (!in[s]) {
      in[s] = 1;
      members.push_back(s);
    }
  }
  for (std::size_t m = 0; m < members.size(); ++m) {
    const Element c = members[m];
    for (std::size_t i = 0; i <= m; ++i) {
      for (Element p : {q(members[i], c), q(c, members[i])}) {
        if (!in[p]) {
          in[p] = 1;
          members.push_back(p);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_subquandle(const Quandle& q, std::span<const Element> subset) {
  std::vector<char> in(q.size());
  for (Element x : subset) in[x] = 1;
  for (Element x : subset)
    for (Element y : subset)
      if (!in[q(x, y)]) return false;
  return true;
}

std::size_t CongruencePartition::block_count() const {
  Element top = 0;
  for (Element b : block) top = std::max(top, b + 1);
  return top;
}

std::vector<ElementSet> CongruencePartition::blocks() const {
  std::vector<ElementSet> out(block_count());
  for (Element x = 0; x < block.size(); ++x) out[block[x]].push_back(x);
  return out;
}

bool is_compatible(const Quandle& q, const CongruencePartition& p) {
  const auto n = static_cast<Element>(q.size());
  if (p.block.size() != n) return false;
  for (Element x = 0; x < n; ++x)
    for (Element x2 = x + 1; x2 < n; ++x2) {
      if (p.block[x] != p.block[x2]) continue;
      for (Element z = 0; z < n; ++z) {
        if (p.block[q(z, x)] != p.block[q(z, x2)]) return false;
        if (p.block[q(x, z)] != p.block[q(x2, z)]) return false;
      }
    }
  return true;
}

CongruencePartition principal_congruence(const Quandle& q, Element a, Element b) {
  UnionFind uf(q.size());
  if (uf.unite(a, b)) close_congruence(q, uf, {{a, b}});
  return partition_of(uf, q.size());
}

std::vector<CongruencePartition> congruences(const Quandle& q, std::size_t size_limit) {
  const auto n = static_cast<Element>(q.size());
  if (n > size_limit)
    throw SizeLimit("congruence lattice limited to " + std::to_string(size_limit) + " elements, got " +
                    std::to_string(n));
  std::set<CongruencePartition> principal;
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b) principal.insert(principal_congruence(q, a, b));

  std::vector<Element> identity(n);
  std::iota(identity.begin(), identity.end(), 0u);
  std::set<CongruencePartition> all{CongruencePartition{identity}};
  std::vector<CongruencePartition> frontier{CongruencePartition{identity}};
  // Every congruence is a join of principal ones.
  while (!frontier.empty()) {
    std::vector<CongruencePartition> next;
    for (const auto& c : frontier)
      for (const auto& p : principal) {
        // join: unite x with the first member of its block in c and in p
        UnionFind join(n);
        std::vector<Element> first_c(n, static_cast<Element>(-1)), first_p(n, static_cast<Element>(-1));
        for (Element x = 0; x < n; ++x) {
          if (first_c[c.block[x]] == static_cast<Element>(-1)) first_c[c.block[x]] = x;
          if (first_p[p.block[x]] == static_cast<Element>(-1)) first_p[p.block[x]] = x;
          join.unite(x, first_c[c.block[x]]);
          join.unite(x, first_p[p.block[x]]);
        }
        auto joined = partition_of(join, n);
        if (all.insert(joined).second) next.push_back(std::move(joined));
      }
    frontier.swap(next);
  }
  return {all.begin(), all.end()};
}

bool is_simple_lattice(const Quandle& q) {
  const auto n = static_cast<Element>(q.size());
  if (n < 3) return false;
  // Automorphisms are transitive on a connected quandle, so pairs (0, b)
  // represent every pair up to symmetry.
  const Element first_limit = connected_by_rows(q) ? 1 : n;
  for (Element a = 0; a < first_limit; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (!principal_congruence(q, a, b).is_full()) return false;
  return true;
}

std::vector<ElementSet> orbit_decomposition(const Quandle& q) {
  const auto n = static_cast<Element>(q.size());
  UnionFind uf(n);
  // Dis is generated by L_a L_0.
  for (Element a = 1; a < n; ++a)
    for (Element x = 0; x < n; ++x) uf.unite(x, q(a, q(0, x)));
  std::vector<ElementSet> orbits;
  std::vector<Element> index(n, static_cast<Element>(-1));
  for (Element x = 0; x < n; ++x) {
    Element r = uf.find(x);
    if (index[r] == static_cast<Element>(-1)) {
      index[r] = static_cast<Element>(orbits.size());
      orbits.emplace_back();
    }
    orbits[index[r]].push_back(x);
  }
  return orbits;
}

namespace {

// Reads whitespace-separated integers, skipping '#' comment lines, and
// reports positions of bad tokens.
struct TableTokenizer {
  std::istream& in;
  std::string line;
  std::istringstream current;
  std::size_t line_no = 0;
  bool have_line = false;

  bool next(long long& value) {
    std::string tok;
    while (true) {
      if (have_line && current >> tok) break;
      if (!std::getline(in, line)) return false;
      ++line_no;
      auto first = line.find_first_not_of(" \t\r");
      if (first != std::string::npos && line[first] == '#') {
        have_line = false;
        continue;
      }
      if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      current.clear();
      current.str(line);
      have_line = true;
    }
    std::size_t used = 0;
    try {
      value = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || value < 0)
      throw MalformedTable("line " + std::to_string(line_no) + ": bad entry '" + tok + "'");
    return true;
  }
};

}  // namespace

MagmaTable read_table(std::istream& in) {
  TableTokenizer tok{in, {}, {}, 0, false};
  long long n = 0;
  if (!tok.next(n)) throw MalformedTable("empty table");
  if (n <= 0 || n > 65535) throw MalformedTable("bad table size " + std::to_string(n));
  std::vector<Element> cells;
  cells.reserve(static_cast<std::size_t>(n * n));
  long long v = 0;
  while (cells.size() < static_cast<std::size_t>(n * n)) {
    if (!tok.next(v))
      throw MalformedTable("table truncated: expected " + std::to_string(n * n) + " entries, got " +
                           std::to_string(cells.size()));
    if (v >= n) throw MalformedTable("line " + std::to_string(tok.line_no) + ": entry " + std::to_string(v) +
                                     " out of range for n=" + std::to_string(n));
    cells.push_back(static_cast<Element>(v));
  }
  if (tok.next(v)) throw MalformedTable("line " + std::to_string(tok.line_no) + ": trailing entries after table");
  return MagmaTable(static_cast<std::size_t>(n), std::move(cells));
}

MagmaTable parse_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_table(in);
}

void write_table(std::ostream& out, const MagmaTable& m, std::string_view comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  const std::size_t n = m.size();
  out << n << '\n';
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (y) out << ' ';
      out << m(x, y);
    }
    out << '\n';
  }
}

std::string format_table(const MagmaTable& m, std::string_view comment) {
  std::ostringstream out;
  write_table(out, m, comment);
  return out.str();
}

}  // namespace ivq
