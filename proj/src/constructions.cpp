#include "ivq/constructions.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>

namespace ivq {

Quandle core_of_group(const GroupTable& g) {
  return Quandle::assume_valid(
      MagmaTable::from_function(g.size(), [&](Element a, Element b) { return g(g(a, g.inverse(b)), a); }));
}

Quandle abelian_core(const std::vector<unsigned>& factors) {
  return core_of_group(abelian_group(factors));
}

ConjugationQuandle conj_involutions(const GroupTable& g) {
  std::vector<Element> els;
  std::vector<Element> index(g.size(), static_cast<Element>(-1));
  for (Element x = 0; x < g.size(); ++x)
    if (g(x, x) == g.identity()) {
      index[x] = static_cast<Element>(els.size());
      els.push_back(x);
    }
  auto q = Quandle::assume_valid(MagmaTable::from_function(
      els.size(), [&](Element a, Element b) { return index[g(g(els[a], els[b]), els[a])]; }));
  return {std::move(q), std::move(els)};
}

BilinearForm::BilinearForm(unsigned q, std::size_t dim, std::vector<FiniteField::Value> matrix)
    : field_(q), dim_(dim), matrix_(std::move(matrix)) {
  if (field_.characteristic() == 2) throw Error("bilinear form needs odd characteristic");
  if (dim_ == 0 || matrix_.size() != dim_ * dim_) throw Error("form matrix has the wrong shape");
  for (auto v : matrix_)
    if (v >= q) throw Error("form entry outside the field");
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (entry(i, j) != entry(j, i)) throw Error("form matrix is not symmetric");
  // Gaussian elimination for the determinant
  std::vector<FiniteField::Value> m = matrix_;
  for (std::size_t col = 0; col < dim_; ++col) {
    std::size_t pivot = col;
    while (pivot < dim_ && m[pivot * dim_ + col] == 0) ++pivot;
    if (pivot == dim_) throw Error("form is degenerate");
    for (std::size_t k = 0; k < dim_; ++k) std::swap(m[col * dim_ + k], m[pivot * dim_ + k]);
    const auto inv = field_.inv(m[col * dim_ + col]);
    for (std::size_t r = col + 1; r < dim_; ++r) {
      const auto factor = field_.mul(m[r * dim_ + col], inv);
      for (std::size_t k = col; k < dim_; ++k)
        m[r * dim_ + k] = field_.sub(m[r * dim_ + k], field_.mul(factor, m[col * dim_ + k]));
    }
  }
}

BilinearForm BilinearForm::identity(unsigned q, std::size_t dim) {
  return diagonal(q, std::vector<FiniteField::Value>(dim, 1));
}

BilinearForm BilinearForm::diagonal(unsigned q, const std::vector<FiniteField::Value>& entries) {
  const std::size_t dim = entries.size();
  std::vector<FiniteField::Value> m(dim * dim, 0);
  for (std::size_t i = 0; i < dim; ++i) m[i * dim + i] = entries[i];
  return BilinearForm(q, dim, std::move(m));
}

FiniteField::Value BilinearForm::operator()(const std::vector<FiniteField::Value>& a,
                                            const std::vector<FiniteField::Value>& b) const {
  FiniteField::Value acc = 0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      acc = field_.add(acc, field_.mul(a[i], field_.mul(entry(i, j), b[j])));
  return acc;
}

namespace {

using Vec = std::vector<FiniteField::Value>;

std::vector<Vec> all_vectors(const FiniteField& f, std::size_t dim) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) total *= f.order();
  std::vector<Vec> out(total, Vec(dim));
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t v = idx;
    for (std::size_t i = dim; i-- > 0;) {
      out[idx][i] = static_cast<FiniteField::Value>(v % f.order());
      v /= f.order();
    }
  }
  return out;
}

Vec scale(const FiniteField& f, FiniteField::Value c, const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = f.mul(c, v[i]);
  return out;
}

Vec canonical_rep(const FiniteField& f, const Vec& v) {
  auto lead = std::find_if(v.begin(), v.end(), [](auto x) { return x != 0; });
  return scale(f, f.inv(*lead), v);
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
}

}  // namespace

ReflectionQuandle reflection_quandle(const BilinearForm& form) {
  const FiniteField& f = form.field();
  std::map<Vec, Vec> unit_of_line;  // canonical rep -> one norm-1 vector on it
  for (const Vec& v : all_vectors(f, form.dim())) {
    if (is_zero(v) || form(v, v) != 1) continue;
    unit_of_line.emplace(canonical_rep(f, v), v);
  }
  if (unit_of_line.empty()) throw EmptyQuandle("no vector of norm 1 for this form");

  std::vector<ProjectiveLine> lines;
  std::map<Vec, Element> index;
  for (const auto& [rep, unit] : unit_of_line) {
    index.emplace(rep, static_cast<Element>(lines.size()));
    lines.push_back({rep});
  }
  const FiniteField::Value two = f.from_int(2);
  std::vector<Vec> units;
  for (const auto& [rep, unit] : unit_of_line) units.push_back(unit);
  auto table = MagmaTable::from_function(units.size(), [&](Element a, Element b) {
    const Vec& ua = units[a];
    const Vec& ub = units[b];
    const auto c = f.mul(two, form(ua, ub));
    Vec image(ub.size());
    for (std::size_t i = 0; i < ub.size(); ++i) image[i] = f.sub(ub[i], f.mul(c, ua[i]));
    return index.at(canonical_rep(f, image));
  });
  return {Quandle::checked(std::move(table)), std::move(lines)};
}

bool reflection_connectivity_criterion(const BilinearForm& form) {
  const FiniteField& f = form.field();
  std::map<FiniteField::Value, std::vector<Vec>> by_norm;
  for (const Vec& v : all_vectors(f, form.dim())) {
    if (is_zero(v)) continue;
    if (auto n = form(v, v); n != 0) by_norm[n].push_back(canonical_rep(f, v));
  }
  // two vectors are independent iff they span different lines
  for (auto& [norm, reps] : by_norm) {
    std::sort(reps.begin(), reps.end());
    if (std::unique(reps.begin(), reps.end()) - reps.begin() >= 2) return true;
  }
  return false;
}

double lorentz_product(const LorentzPoint& x, const LorentzPoint& y) {
  return -x.x1 * y.x1 - x.x2 * y.x2 + x.x3 * y.x3;
}

double surface_residual(const LorentzPoint& x) { return std::abs(lorentz_product(x, x) - 1.0); }

namespace {

// Rounding error of <x,x> scales with x3^2, so the tolerance is relative.
bool on_sheet(const LorentzPoint& x) {
  return x.x3 > 0 && surface_residual(x) <= kHyperboloidTolerance * std::max(1.0, x.x3 * x.x3);
}

}  // namespace

LorentzPoint hyperboloid_op(const LorentzPoint& x, const LorentzPoint& y) {
  if (!on_sheet(x) || !on_sheet(y)) throw ToleranceViolation("hyperboloid operand off the upper sheet");
  const double c = 2.0 * lorentz_product(x, y);
  LorentzPoint r{c * x.x1 - y.x1, c * x.x2 - y.x2, c * x.x3 - y.x3};
  if (!on_sheet(r)) throw ToleranceViolation("hyperboloid result drifted off the surface");
  // project back onto the sheet along x3
  r.x3 = std::sqrt(1.0 + r.x1 * r.x1 + r.x2 * r.x2);
  return r;
}

LorentzPoint hyperboloid_point(double r, double theta) {
  return {std::sinh(r) * std::cos(theta), std::sinh(r) * std::sin(theta), std::cosh(r)};
}

LorentzPoint random_hyperboloid_point(std::mt19937_64& rng, double max_radius) {
  std::uniform_real_distribution<double> radius(0.0, max_radius);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  return hyperboloid_point(radius(rng), angle(rng));
}

namespace {

unsigned parse_unsigned(std::string_view s, std::string_view what) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw UsageError("bad " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::map<std::string, std::string, std::less<>> parse_options(std::string_view s) {
  std::map<std::string, std::string, std::less<>> out;
  for (auto item : split(s, ',')) {
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw UsageError("expected key=value, got '" + std::string(item) + "'");
    out.emplace(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)));
  }
  return out;
}

unsigned option_q(const std::map<std::string, std::string, std::less<>>& opts) {
  auto it = opts.find("q");
  if (it == opts.end()) throw UsageError("missing q=<field order>");
  return parse_unsigned(it->second, "field order");
}

}  // namespace

GroupTable group_by_name(std::string_view name) {
  try {
    if (name.starts_with("SL2(") && name.ends_with(")"))
      return special_linear_group(parse_unsigned(name.substr(4, name.size() - 5), "field order"));
    if (name.starts_with("SL2_")) return special_linear_group(parse_unsigned(name.substr(4), "field order"));
    if (name == "Q8") return quaternion_group();
    if (name.starts_with("Z")) {
      std::vector<unsigned> factors;
      for (auto part : split(name, 'x')) {
        if (!part.starts_with("Z")) throw UsageError("bad cyclic factor '" + std::string(part) + "'");
        factors.push_back(parse_unsigned(part.substr(1), "cyclic order"));
      }
      if (factors.size() == 1 && factors[0] == 1) factors.clear();
      return abelian_group(factors);
    }
    if (name.starts_with("D")) return dihedral_group(parse_unsigned(name.substr(1), "polygon size"));
    if (name.starts_with("S")) {
      unsigned d = parse_unsigned(name.substr(1), "degree");
      if (d < 1 || d > 6) throw UsageError("symmetric group degree must be 1..6");
      return symmetric_group(d);
    }
    if (name.starts_with("A")) {
      unsigned d = parse_unsigned(name.substr(1), "degree");
      if (d < 1 || d > 6) throw UsageError("alternating group degree must be 1..6");
      return alternating_group(d);
    }
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    throw UsageError(std::string(name) + ": " + e.what());
  }
  throw UsageError("unknown group '" + std::string(name) + "'");
}

Quandle construct(std::string_view specifier) {
  auto colon = specifier.find(':');
  if (colon == std::string_view::npos) throw UsageError("specifier needs a kind, e.g. core:Z3");
  const auto kind = specifier.substr(0, colon);
  const auto arg = specifier.substr(colon + 1);
  if (kind == "core") return core_of_group(group_by_name(arg));
  if (kind == "conj") return conj_involutions(group_by_name(arg)).quandle;
  if (kind == "dihedral") return abelian_core({parse_unsigned(arg, "dihedral order")});
  if (kind == "sl2") {
    try {
      return core_of_group(special_linear_group(option_q(parse_options(arg))));
    } catch (const UsageError&) {
      throw;
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  if (kind == "refl") {
    auto opts = parse_options(arg);
    const unsigned q = option_q(opts);
    auto dim_it = opts.find("dim");
    auto form_it = opts.find("form");
    const std::string form_text = form_it == opts.end() ? "I" : form_it->second;
    try {
      const FiniteField field(q);
      std::vector<FiniteField::Value> diag;
      if (form_text == "I") {
        if (dim_it == opts.end()) throw UsageError("refl needs dim=<n> with form=I");
        diag.assign(parse_unsigned(dim_it->second, "dimension"), 1);
      } else {
        // diagonal entries separated by '/', e.g. form=1/1/6
        for (auto part : split(form_text, '/')) diag.push_back(field.from_int(parse_unsigned(part, "form entry")));
        if (dim_it != opts.end() && parse_unsigned(dim_it->second, "dimension") != diag.size())
          throw UsageError("dim does not match the number of form entries");
      }
      return reflection_quandle(BilinearForm::diagonal(q, diag)).quandle;
    } catch (const UsageError&) {
      throw;
    } catch (const EmptyQuandle&) {
      throw;
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  throw UsageError("unknown construction kind '" + std::string(kind) + "'");
}

}  // namespace ivq
