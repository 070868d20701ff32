#include "ivq/knot.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>

#include "ivq/constructions.hpp"

namespace ivq {

Word normalize_word(const Word& w) {
  Word out;
  out.terminal = w.terminal;
  for (GeneratorId a : w.applicators) {
    if (out.applicators.empty()) {
      if (a != w.terminal) out.applicators.push_back(a);
    } else if (out.applicators.back() == a) {
      out.applicators.pop_back();
    } else {
      out.applicators.push_back(a);
    }
  }
  return out;
}

Word multiply(const Word& x, const Word& y) {
  // L_x = L_{a_k} ... L_{a_1} L_g L_{a_1} ... L_{a_k}; the rightmost factor acts first
  Word out = y;
  const auto& a = x.applicators;
  out.applicators.insert(out.applicators.end(), a.rbegin(), a.rend());
  out.applicators.push_back(x.terminal);
  out.applicators.insert(out.applicators.end(), a.begin(), a.end());
  return normalize_word(out);
}

Element evaluate(const Word& w, const Quandle& q, const std::vector<Element>& assignment) {
  Element v = assignment.at(w.terminal);
  for (GeneratorId a : w.applicators) v = q(assignment.at(a), v);
  return v;
}

std::string Presentation::word_text(const Word& w) const {
  std::string s;
  for (auto it = w.applicators.rbegin(); it != w.applicators.rend(); ++it) s += generators.at(*it) + " ";
  return s + generators.at(w.terminal);
}

std::string Presentation::to_text() const {
  std::string s = "gens";
  for (const auto& g : generators) s += " " + g;
  s += "\n";
  for (const auto& r : relations) s += "rel " + word_text(r.lhs) + " = " + word_text(r.rhs) + "\n";
  return s;
}

namespace {

struct Token {
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

// Splits text into statements at newlines and ';'. Names and '=' are the
// only tokens.
std::vector<std::vector<Token>> statements(std::string_view text) {
  std::vector<std::vector<Token>> out(1);
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < text.size();) {
    const char c = text[i];
    if (c == '\n' || c == ';') {
      if (!out.back().empty()) out.emplace_back();
      if (c == '\n') ++line, col = 1;
      else ++col;
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i, ++col;
    } else if (c == '=') {
      out.back().push_back({"=", line, col});
      ++i, ++col;
    } else if (name_char(c)) {
      Token t{"", line, col};
      while (i < text.size() && name_char(text[i])) t.text += text[i++], ++col;
      out.back().push_back(std::move(t));
    } else {
      throw SyntaxError(line, col, std::string("unexpected character '") + c + "'");
    }
  }
  if (out.back().empty()) out.pop_back();
  return out;
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  std::map<std::string, GeneratorId> ids;
  auto side = [&](std::vector<Token>::const_iterator b, std::vector<Token>::const_iterator e,
                  const Token& at) {
    if (b == e) throw SyntaxError(at.line, at.column, "empty side of relation");
    Word w;
    for (auto it = e; it != b;) {
      --it;
      auto f = ids.find(it->text);
      if (f == ids.end())
        throw UndeclaredGenerator("line " + std::to_string(it->line) + ", column " +
                                  std::to_string(it->column) + ": undeclared generator '" + it->text + "'");
      if (it + 1 == e) w.terminal = f->second;
      else w.applicators.push_back(f->second);
    }
    return w;
  };

  for (const auto& st : statements(text)) {
    const Token& kw = st.front();
    if (kw.text == "gens") {
      for (std::size_t i = 1; i < st.size(); ++i) {
        if (st[i].text == "=") throw SyntaxError(st[i].line, st[i].column, "unexpected '='");
        if (!ids.emplace(st[i].text, p.generators.size()).second)
          throw SyntaxError(st[i].line, st[i].column, "duplicate generator '" + st[i].text + "'");
        p.generators.push_back(st[i].text);
      }
    } else if (kw.text == "rel") {
      auto eq = std::find_if(st.begin() + 1, st.end(), [](const Token& t) { return t.text == "="; });
      if (eq == st.end()) throw SyntaxError(kw.line, kw.column, "relation needs '='");
      if (std::find_if(eq + 1, st.end(), [](const Token& t) { return t.text == "="; }) != st.end())
        throw SyntaxError(kw.line, kw.column, "relation has more than one '='");
      Relation r;
      r.lhs = side(st.begin() + 1, eq, *eq);
      r.rhs = side(eq + 1, st.end(), *eq);
      p.relations.push_back(std::move(r));
    } else {
      throw SyntaxError(kw.line, kw.column, "expected 'gens' or 'rel', got '" + kw.text + "'");
    }
  }
  return p;
}

bool looks_like_crossings(std::string_view text) {
  try {
    auto st = statements(text);
    return !st.empty() && (st.front().front().text == "x" || st.front().front().text == "arcs");
  } catch (const SyntaxError&) {
    return false;
  }
}

CrossingList parse_crossings(std::string_view text) {
  CrossingList d;
  std::vector<std::string> seen;
  bool declared = false;
  auto note = [&](const std::string& a) {
    if (std::find(seen.begin(), seen.end(), a) == seen.end()) seen.push_back(a);
  };
  for (const auto& st : statements(text)) {
    const Token& kw = st.front();
    for (const auto& t : st)
      if (t.text == "=") throw SyntaxError(t.line, t.column, "unexpected '='");
    if (kw.text == "arcs") {
      declared = true;
      for (std::size_t i = 1; i < st.size(); ++i) {
        if (std::find(d.arcs.begin(), d.arcs.end(), st[i].text) != d.arcs.end())
          throw SyntaxError(st[i].line, st[i].column, "duplicate arc '" + st[i].text + "'");
        d.arcs.push_back(st[i].text);
      }
    } else if (kw.text == "x") {
      if (st.size() != 4) throw SyntaxError(kw.line, kw.column, "crossing needs over, under1, under2");
      d.crossings.push_back({st[1].text, st[2].text, st[3].text});
      for (std::size_t i = 1; i < 4; ++i) note(st[i].text);
    } else {
      throw SyntaxError(kw.line, kw.column, "expected 'x' or 'arcs', got '" + kw.text + "'");
    }
  }
  if (!declared) d.arcs = std::move(seen);
  return d;
}

Presentation crossings_to_presentation(const CrossingList& d) {
  Presentation p;
  std::map<std::string, GeneratorId> ids;
  for (const auto& a : d.arcs) {
    if (!ids.emplace(a, p.generators.size()).second) throw InconsistentArcs("duplicate arc '" + a + "'");
    p.generators.push_back(a);
  }
  if (d.crossings.empty()) {
    if (d.arcs.size() != 1) throw InconsistentArcs("a diagram without crossings has exactly one arc");
    return p;
  }
  auto id = [&](const std::string& a) {
    auto f = ids.find(a);
    if (f == ids.end()) throw InconsistentArcs("arc '" + a + "' is not declared");
    return f->second;
  };
  // weak closedness check: every arc ends at some crossing
  std::vector<int> ends(p.generators.size(), 0);
  for (const auto& c : d.crossings) {
    Relation r;
    r.lhs = Word{{id(c.over)}, id(c.under1)};
    r.rhs = Word{{}, id(c.under2)};
    ++ends[r.lhs.terminal];
    ++ends[r.rhs.terminal];
    p.relations.push_back(std::move(r));
  }
  for (std::size_t a = 0; a < ends.size(); ++a)
    if (ends[a] == 0) throw InconsistentArcs("arc '" + p.generators[a] + "' never passes under a crossing");
  return p;
}

namespace {

constexpr std::int64_t kUndefined = -1;

// Table of points acted on by k involutions. Cells are kept symmetric:
// cell(p, g) = q exactly when cell(q, g) = p.
class CosetTable {
public:
  CosetTable(std::size_t k, std::size_t limit) : k_(k), limit_(limit) {}

  std::size_t size() const noexcept { return parent_.size(); }
  std::size_t live() const noexcept { return live_; }
  bool is_live(std::size_t p) const noexcept { return parent_[p] == p; }
  std::int64_t cell(std::size_t p, std::size_t g) const noexcept { return table_[p * k_ + g]; }

  std::size_t new_point() {
    if (live_ >= limit_ || parent_.size() >= 64 * limit_ + 1024) throw Overflow(limit_);
    const std::size_t p = parent_.size();
    parent_.push_back(p);
    table_.resize(table_.size() + k_, kUndefined);
    ++live_;
    return p;
  }

  void define(std::size_t p, std::size_t g, std::size_t q) {
    set(p, g, static_cast<std::int64_t>(q));
    set(q, g, static_cast<std::int64_t>(p));
  }

  std::size_t act(std::size_t p, std::size_t g) {
    if (cell(p, g) == kUndefined) define(p, g, new_point());
    return static_cast<std::size_t>(cell(p, g));
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::vector<std::size_t> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const std::size_t dead = queue[i];
      for (std::size_t g = 0; g < k_; ++g) {
        if (cell(dead, g) == kUndefined) continue;
        const auto other = static_cast<std::size_t>(cell(dead, g));
        set(other, g, kUndefined);
        const std::size_t mu = find(dead);
        const std::size_t nu = find(other);
        if (cell(mu, g) != kUndefined) merge(nu, static_cast<std::size_t>(cell(mu, g)), queue);
        else if (cell(nu, g) != kUndefined) merge(mu, static_cast<std::size_t>(cell(nu, g)), queue);
        else define(mu, g, nu);
      }
    }
  }

  // HLT scan of relator r at p: define missing points until r closes at p,
  // recording a deduction or coincidence.
  void scan_and_fill(std::size_t p, const std::vector<std::size_t>& r) {
    std::size_t f = p, b = p;
    std::size_t i = 0, j = r.size();
    for (;;) {
      while (i < j && cell(f, r[i]) != kUndefined) f = static_cast<std::size_t>(cell(f, r[i++]));
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && cell(b, r[j - 1]) != kUndefined) b = static_cast<std::size_t>(cell(b, r[--j]));
      if (i == j) {
        coincidence(f, b);
        return;
      }
      if (i + 1 == j) {
        define(f, r[i], b);
        return;
      }
      define(f, r[i], new_point());
    }
  }

private:
  void set(std::size_t p, std::size_t g, std::int64_t v) { table_[p * k_ + g] = v; }

  void merge(std::size_t a, std::size_t b, std::vector<std::size_t>& queue) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    queue.push_back(b);
    --live_;
  }

  std::size_t k_;
  std::size_t limit_;
  std::size_t live_ = 0;
  std::vector<std::size_t> parent_;
  std::vector<std::int64_t> table_;
};

// Application sequence of L_w, first factor acting first.
std::vector<std::size_t> translation_sequence(const Word& w) {
  std::vector<std::size_t> s(w.applicators.rbegin(), w.applicators.rend());
  s.push_back(w.terminal);
  s.insert(s.end(), w.applicators.begin(), w.applicators.end());
  return s;
}

std::vector<std::size_t> free_reduce(const std::vector<std::size_t>& s) {
  std::vector<std::size_t> out;
  for (auto g : s) {
    if (!out.empty() && out.back() == g) out.pop_back();
    else out.push_back(g);
  }
  // cyclic reduction: relators hold at every point, so conjugates are equivalent
  std::size_t lo = 0, hi = out.size();
  while (hi - lo >= 2 && out[lo] == out[hi - 1]) ++lo, --hi;
  return {out.begin() + static_cast<std::ptrdiff_t>(lo), out.begin() + static_cast<std::ptrdiff_t>(hi)};
}

}  // namespace

Completion complete(const Presentation& p, std::size_t max_elements) {
  const std::size_t k = p.generators.size();
  if (k == 0) throw EmptyQuandle("presentation has no generators");
  for (const auto& r : p.relations)
    for (const Word* w : {&r.lhs, &r.rhs}) {
      if (w->terminal >= k) throw UndeclaredGenerator("generator index out of range");
      for (auto a : w->applicators)
        if (a >= k) throw UndeclaredGenerator("generator index out of range");
    }

  CosetTable t(k, max_elements);
  std::vector<std::size_t> base(k);
  for (std::size_t g = 0; g < k; ++g) {
    base[g] = t.new_point();
    t.define(base[g], g, base[g]);
  }

  std::vector<std::vector<std::size_t>> relators;
  for (const auto& r : p.relations) {
    auto s = translation_sequence(r.rhs);
    auto l = translation_sequence(r.lhs);
    s.insert(s.end(), l.begin(), l.end());
    if (auto red = free_reduce(s); !red.empty()) relators.push_back(std::move(red));
  }

  auto trace = [&](const Word& w) {
    std::size_t x = t.find(base[w.terminal]);
    for (auto a : w.applicators) x = t.act(x, a);
    return x;
  };
  for (const auto& r : p.relations) {
    const std::size_t a = trace(r.lhs);
    const std::size_t b = trace(r.rhs);
    if (t.find(a) != t.find(b)) t.coincidence(a, b);
  }

  for (std::size_t x = 0; x < t.size(); ++x) {
    if (!t.is_live(x)) continue;
    for (const auto& r : relators) {
      t.scan_and_fill(x, r);
      if (!t.is_live(x)) break;
    }
    if (!t.is_live(x)) continue;
    for (std::size_t g = 0; g < k; ++g) t.act(x, g);
  }

  // breadth-first numbering from the base points
  constexpr auto kNone = static_cast<Element>(-1);
  std::vector<Element> label(t.size(), kNone);
  std::vector<std::size_t> order;
  std::vector<std::pair<std::size_t, std::size_t>> via;  // (parent label, generator); parent kNone for base points
  Completion c{Quandle::assume_valid(MagmaTable(1, {0})), std::vector<Element>(k)};
  for (std::size_t g = 0; g < k; ++g) {
    const std::size_t r = t.find(base[g]);
    if (label[r] == kNone) {
      label[r] = static_cast<Element>(order.size());
      order.push_back(r);
      via.emplace_back(kNone, g);
    }
    c.generator_elements[g] = label[r];
  }
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t g = 0; g < k; ++g) {
      const auto y = t.find(static_cast<std::size_t>(t.cell(order[i], g)));
      if (label[y] == kNone) {
        label[y] = static_cast<Element>(order.size());
        order.push_back(y);
        via.emplace_back(i, g);
      }
    }

  const std::size_t n = order.size();
  std::vector<std::vector<Element>> column(k, std::vector<Element>(n));
  for (std::size_t g = 0; g < k; ++g)
    for (std::size_t x = 0; x < n; ++x)
      column[g][x] = label[t.find(static_cast<std::size_t>(t.cell(order[x], g)))];

  std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
  for (std::size_t x = 0; x < n; ++x) {
    const auto [par, g] = via[x];
    if (par == kNone) {
      rows[x] = column[g];
    } else {
      // x = g(par), so L_x = L_g L_par L_g
      const auto& cg = column[g];
      for (std::size_t z = 0; z < n; ++z) rows[x][z] = cg[rows[par][cg[z]]];
    }
  }
  c.quandle = Quandle::checked(MagmaTable::from_rows(rows));
  return c;
}

std::string_view verdict_name(UnknotVerdict::Kind k) {
  switch (k) {
    case UnknotVerdict::Kind::trivial: return "trivial";
    case UnknotVerdict::Kind::nontrivial: return "nontrivial";
    case UnknotVerdict::Kind::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::optional<std::vector<Element>> find_dihedral_coloring(const Presentation& p, unsigned modulus) {
  const std::size_t k = p.generators.size();
  if (k < 2 || modulus < 2) return std::nullopt;
  const Quandle target = abelian_core({modulus});

  // relations become checkable once their largest generator is assigned
  std::vector<std::vector<const Relation*>> due(k);
  for (const auto& r : p.relations) {
    std::size_t top = std::max(r.lhs.terminal, r.rhs.terminal);
    for (auto a : r.lhs.applicators) top = std::max(top, a);
    for (auto a : r.rhs.applicators) top = std::max(top, a);
    due[top].push_back(&r);
  }

  std::vector<Element> assign(k, 0);
  // translations of core(Z_p) are automorphisms, so generator 0 may be fixed to 0
  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == k) return std::any_of(assign.begin(), assign.end(), [](Element v) { return v != 0; });
    for (Element v = 0; v < modulus; ++v) {
      if (i == 0 && v != 0) break;
      assign[i] = v;
      bool ok = true;
      for (const Relation* r : due[i])
        if (evaluate(r->lhs, target, assign) != evaluate(r->rhs, target, assign)) {
          ok = false;
          break;
        }
      if (ok && self(self, i + 1)) return true;
    }
    return false;
  };
  if (search(search, 0)) return assign;
  return std::nullopt;
}

UnknotVerdict unknot_test(const CrossingList& d, std::size_t bound) {
  const Presentation p = crossings_to_presentation(d);
  UnknotVerdict v;
  try {
    const Completion c = complete(p, bound);
    v.order = c.quandle.size();
    // the involutory quandle of a knot is trivial exactly for the unknot
    v.kind = c.quandle.size() == 1 ? UnknotVerdict::Kind::trivial : UnknotVerdict::Kind::nontrivial;
    return v;
  } catch (const Overflow&) {
  }
  for (unsigned m = 2; m <= 13; ++m)
    if (find_dihedral_coloring(p, m)) {
      v.kind = UnknotVerdict::Kind::nontrivial;
      v.coloring_modulus = m;
      return v;
    }
  return v;
}

}  // namespace ivq
