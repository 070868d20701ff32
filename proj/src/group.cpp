#include "ivq/group.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "ivq/field.hpp"

namespace ivq {

GroupTable::GroupTable(std::string name, std::size_t n, std::vector<Element> table)
    : name_(std::move(name)), n_(n), table_(std::move(table)) {
  if (n_ == 0 || table_.size() != n_ * n_) throw Error("group table of " + name_ + " has the wrong shape");
  for (Element v : table_)
    if (v >= n_) throw Error("group table of " + name_ + " has an out-of-range entry");
  const auto m = static_cast<Element>(n_);
  bool found = false;
  for (Element e = 0; e < m && !found; ++e) {
    bool ok = true;
    for (Element x = 0; x < m && ok; ++x) ok = (*this)(e, x) == x && (*this)(x, e) == x;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw Error("group " + name_ + " has no identity");
  inverse_.assign(n_, static_cast<Element>(-1));
  for (Element x = 0; x < m; ++x)
    for (Element y = 0; y < m; ++y)
      if ((*this)(x, y) == identity_ && (*this)(y, x) == identity_) inverse_[x] = y;
  for (Element x = 0; x < m; ++x)
    if (inverse_[x] == static_cast<Element>(-1)) throw Error("element " + std::to_string(x) + " of " + name_ + " has no inverse");
  for (Element x = 0; x < m; ++x)
    for (Element y = 0; y < m; ++y) {
      const Element xy = (*this)(x, y);
      for (Element z = 0; z < m; ++z)
        if ((*this)(xy, z) != (*this)(x, (*this)(y, z)))
          throw Error("group " + name_ + " is not associative at (" + std::to_string(x) + "," + std::to_string(y) +
                      "," + std::to_string(z) + ")");
    }
}

GroupTable GroupTable::from_permutations(std::string name, const std::vector<Permutation>& elements) {
  std::unordered_map<Permutation, Element, PermutationHash> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], static_cast<Element>(i));
  const std::size_t n = elements.size();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto it = index.find(elements[a] * elements[b]);
      if (it == index.end()) throw Error("permutations not closed under composition");
      table[a * n + b] = it->second;
    }
  return GroupTable(std::move(name), n, std::move(table));
}

bool is_abelian(const GroupTable& g) {
  for (Element x = 0; x < g.size(); ++x)
    for (Element y = x + 1; y < g.size(); ++y)
      if (g(x, y) != g(y, x)) return false;
  return true;
}

std::vector<Element> group_center(const GroupTable& g) {
  std::vector<Element> out;
  for (Element z = 0; z < g.size(); ++z) {
    bool central = true;
    for (Element x = 0; x < g.size() && central; ++x) central = g(z, x) == g(x, z);
    if (central) out.push_back(z);
  }
  return out;
}

GroupPredicates group_predicates(const GroupTable& g) {
  const auto n = static_cast<Element>(g.size());
  GroupPredicates r;

  std::vector<char> is_square(n);
  r.uniquely_2_divisible = true;
  for (Element x = 0; x < n; ++x) {
    Element s = g(x, x);
    if (is_square[s]) r.uniquely_2_divisible = false;
    is_square[s] = 1;
  }

  const auto center = group_center(g);
  std::vector<char> central(n);
  for (Element z : center) central[z] = 1;
  r.center_involution_free = std::none_of(center.begin(), center.end(), [&](Element z) {
    return z != g.identity() && g(z, z) == g.identity();
  });

  r.two_nilpotent = true;
  for (Element x = 0; x < n && r.two_nilpotent; ++x)
    for (Element y = 0; y < n; ++y) {
      Element c = g(g(g.inverse(x), g.inverse(y)), g(x, y));
      if (!central[c]) {
        r.two_nilpotent = false;
        break;
      }
    }

  r.bruck_identity = true;
  for (Element x = 0; x < n && r.bruck_identity; ++x)
    for (Element y = 0; y < n; ++y) {
      Element lhs = g(g(x, g(y, y)), x);
      Element rhs = g(g(y, g(x, x)), y);
      if (lhs != rhs) {
        r.bruck_identity = false;
        r.bruck_witness = std::make_pair(x, y);
        break;
      }
    }
  return r;
}

std::string abelian_name(const std::vector<unsigned>& factors) {
  if (factors.empty()) return "Z1";
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += 'x';
    out += 'Z' + std::to_string(factors[i]);
  }
  return out;
}

GroupTable cyclic_group(unsigned n) { return abelian_group({n}); }

GroupTable abelian_group(const std::vector<unsigned>& factors) {
  std::size_t n = 1;
  for (unsigned f : factors) {
    if (f == 0) throw Error("cyclic factor of order 0");
    n *= f;
  }
  auto digits = [&](std::size_t v) {
    std::vector<unsigned> d(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
      d[i] = static_cast<unsigned>(v % factors[i]);
      v /= factors[i];
    }
    return d;
  };
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    auto da = digits(a);
    for (std::size_t b = 0; b < n; ++b) {
      auto db = digits(b);
      std::size_t v = 0;
      for (std::size_t i = 0; i < factors.size(); ++i) v = v * factors[i] + (da[i] + db[i]) % factors[i];
      table[a * n + b] = static_cast<Element>(v);
    }
  }
  return GroupTable(abelian_name(factors), n, std::move(table));
}

GroupTable dihedral_group(unsigned m) {
  if (m == 0) throw Error("dihedral group of a 0-gon");
  // (k, f): x -> (f ? -x : x) + k mod m, stored as f*m + k
  const std::size_t n = 2 * m;
  std::vector<Element> table(n * n);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) {
      unsigned ka = a % m, fa = a / m, kb = b % m, fb = b / m;
      // a(b(x)) = sa(sb x + kb) + ka
      unsigned k = (ka + (fa ? m - kb : kb)) % m;
      unsigned f = fa ^ fb;
      table[a * n + b] = f * m + k;
    }
  return GroupTable("D" + std::to_string(m), n, std::move(table));
}

GroupTable quaternion_group() {
  using Q = std::array<int, 4>;
  auto mul = [](const Q& x, const Q& y) {
    return Q{x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3],
             x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2],
             x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1],
             x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0]};
  };
  std::vector<Q> units;
  for (int axis = 0; axis < 4; ++axis)
    for (int sign : {1, -1}) {
      Q u{0, 0, 0, 0};
      u[axis] = sign;
      units.push_back(u);
    }
  return GroupTable::from_elements("Q8", units, mul);
}

GroupTable symmetric_group(unsigned degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<Permutation> elements;
  do {
    elements.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return GroupTable::from_permutations("S" + std::to_string(degree), elements);
}

GroupTable alternating_group(unsigned degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<Permutation> elements;
  do {
    Permutation p(images);
    std::size_t transpositions = 0;
    for (const auto& c : p.cycles()) transpositions += c.size() - 1;
    if (transpositions % 2 == 0) elements.push_back(std::move(p));
  } while (std::next_permutation(images.begin(), images.end()));
  return GroupTable::from_permutations("A" + std::to_string(degree), elements);
}

GroupTable special_linear_group(unsigned q) {
  const FiniteField f(q);
  using M = std::array<FiniteField::Value, 4>;  // row-major a b / c d
  std::vector<M> elements;
  for (FiniteField::Value a = 0; a < q; ++a)
    for (FiniteField::Value b = 0; b < q; ++b)
      for (FiniteField::Value c = 0; c < q; ++c)
        for (FiniteField::Value d = 0; d < q; ++d)
          if (f.sub(f.mul(a, d), f.mul(b, c)) == 1) elements.push_back({a, b, c, d});
  std::map<M, Element> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], static_cast<Element>(i));
  const std::size_t n = elements.size();
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const M& x = elements[i];
      const M& y = elements[j];
      M z{f.add(f.mul(x[0], y[0]), f.mul(x[1], y[2])), f.add(f.mul(x[0], y[1]), f.mul(x[1], y[3])),
          f.add(f.mul(x[2], y[0]), f.mul(x[3], y[2])), f.add(f.mul(x[2], y[1]), f.mul(x[3], y[3]))};
      table[i * n + j] = index.at(z);
    }
  return GroupTable("SL2(" + std::to_string(q) + ")", n, std::move(table));
}

namespace {

void partitions(unsigned e, unsigned max_part, std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out) {
  if (e == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned part = std::min(e, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(e - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<unsigned>> abelian_groups(unsigned n) {
  if (n == 0) throw Error("abelian groups of order 0");
  // prime factorization
  std::vector<std::pair<unsigned, unsigned>> primes;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) primes.emplace_back(p, e);
  }
  if (m > 1) primes.emplace_back(m, 1);

  std::vector<std::vector<unsigned>> result{{}};
  for (auto [p, e] : primes) {
    std::vector<std::vector<unsigned>> parts;
    std::vector<unsigned> cur;
    partitions(e, e, cur, parts);
    std::vector<std::vector<unsigned>> next;
    for (const auto& partial : result)
      for (const auto& part : parts) {
        // partial and part are both descending (largest invariant first)
        std::vector<unsigned> merged(std::max(partial.size(), part.size()), 1);
        for (std::size_t i = 0; i < merged.size(); ++i) {
          if (i < partial.size()) merged[i] *= partial[i];
          if (i < part.size()) {
            unsigned pp = 1;
            for (unsigned k = 0; k < part[i]; ++k) pp *= p;
            merged[i] *= pp;
          }
        }
        next.push_back(std::move(merged));
      }
    result.swap(next);
  }
  for (auto& r : result) std::reverse(r.begin(), r.end());
  std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return result;
}

std::vector<GroupTable> group_catalog() {
  std::vector<GroupTable> out;
  for (unsigned n = 1; n <= 32; ++n)
    for (const auto& f : abelian_groups(n)) out.push_back(abelian_group(f));
  for (unsigned m = 3; m <= 8; ++m) out.push_back(dihedral_group(m));
  out.push_back(quaternion_group());
  for (unsigned d = 1; d <= 4; ++d) out.push_back(symmetric_group(d));
  for (unsigned d = 3; d <= 5; ++d) out.push_back(alternating_group(d));
  for (unsigned q : {2u, 3u, 4u, 5u}) out.push_back(special_linear_group(q));
  return out;
}

GroupTable read_group(std::istream& in, std::string name) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream header(line);
    std::string word;
    long long v = 0;
    if (!(header >> word >> v) || word != "group" || v <= 0)
      throw MalformedTable("line " + std::to_string(line_no) + ": expected header 'group n'");
    n = static_cast<std::size_t>(v);
    break;
  }
  if (n == 0) throw MalformedTable("missing 'group n' header");
  std::ostringstream rest;
  rest << n << '\n' << in.rdbuf();
  MagmaTable t = parse_table(rest.str());
  return GroupTable(std::move(name), n, {t.cells().begin(), t.cells().end()});
}

void write_group(std::ostream& out, const GroupTable& g) {
  out << "# " << g.name() << '\n' << "group " << g.size() << '\n';
  for (Element x = 0; x < g.size(); ++x) {
    for (Element y = 0; y < g.size(); ++y) out << (y ? " " : "") << g(x, y);
    out << '\n';
  }
}

}  // namespace ivq
