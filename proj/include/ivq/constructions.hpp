#pragma once

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ivq/field.hpp"
#include "ivq/group.hpp"
#include "ivq/quandle.hpp"

namespace ivq {

/// a * b = a b^-1 a on the elements of g.
Quandle core_of_group(const GroupTable& g);

/// Core of Z_{f1} x ... x Z_{fk}: a * b = 2a - b componentwise. Elements are
/// numbered in mixed radix with the first factor most significant. An empty
/// list gives the one-element quandle.
Quandle abelian_core(const std::vector<unsigned>& factors);

/// Elements x with x^2 = 1 (including 1) under x * y = x y x, numbered in
/// the order they appear in g.
struct ConjugationQuandle {
  Quandle quandle;
  std::vector<Element> group_elements;
};
ConjugationQuandle conj_involutions(const GroupTable& g);

/// Symmetric, non-degenerate bilinear form over F_q for odd q.
class BilinearForm {
public:
  /// Row-major dim x dim matrix with entries in the field's encoding.
  BilinearForm(unsigned q, std::size_t dim, std::vector<FiniteField::Value> matrix);
  static BilinearForm identity(unsigned q, std::size_t dim);
  static BilinearForm diagonal(unsigned q, const std::vector<FiniteField::Value>& entries);

  const FiniteField& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  FiniteField::Value entry(std::size_t i, std::size_t j) const noexcept { return matrix_[i * dim_ + j]; }
  FiniteField::Value operator()(const std::vector<FiniteField::Value>& a,
                                const std::vector<FiniteField::Value>& b) const;

private:
  FiniteField field_;
  std::size_t dim_;
  std::vector<FiniteField::Value> matrix_;
};

/// Line spanned by `rep`, whose first nonzero coordinate is 1.
struct ProjectiveLine {
  std::vector<FiniteField::Value> rep;
  friend bool operator==(const ProjectiveLine&, const ProjectiveLine&) = default;
  friend auto operator<=>(const ProjectiveLine&, const ProjectiveLine&) = default;
};

struct ReflectionQuandle {
  Quandle quandle;
  std::vector<ProjectiveLine> lines;
};

/// Lines containing a vector a with g(a,a) = 1, with <a> * <b> the image of
/// <b> under the reflection b -> b - 2 g(a,b) a. Throws EmptyQuandle when no
/// such line exists.
ReflectionQuandle reflection_quandle(const BilinearForm& form);

/// The criterion "there are linearly independent a, b with g(a,a) = g(b,b) != 0".
bool reflection_connectivity_criterion(const BilinearForm& form);

/// Point of the upper sheet x1^2 + x2^2 - x3^2 = -1, x3 > 0.
struct LorentzPoint {
  double x1 = 0, x2 = 0, x3 = 1;
};

inline constexpr double kHyperboloidTolerance = 1e-9;

/// -x1 y1 - x2 y2 + x3 y3
double lorentz_product(const LorentzPoint& x, const LorentzPoint& y);
/// Distance of x from the surface, |<x,x> - 1|.
double surface_residual(const LorentzPoint& x);
/// x * y = 2<x,y> x - y. Throws ToleranceViolation if an input or the
/// result leaves the surface by more than the tolerance.
LorentzPoint hyperboloid_op(const LorentzPoint& x, const LorentzPoint& y);
/// (sinh r cos t, sinh r sin t, cosh r)
LorentzPoint hyperboloid_point(double r, double theta);
LorentzPoint random_hyperboloid_point(std::mt19937_64& rng, double max_radius = 2.0);

/// Builds a quandle from a specifier such as `core:Z4`, `core:Z3xZ3`,
/// `conj:S3`, `refl:q=7,dim=2,form=I`, `sl2:q=3` or `dihedral:5`.
/// Throws UsageError on an unknown specifier.
Quandle construct(std::string_view specifier);
/// Group names accepted by construct: Z<n>[xZ<m>...], D<m>, Q8, S<k>, A<k>, SL2(<q>).
GroupTable group_by_name(std::string_view name);

}  // namespace ivq
