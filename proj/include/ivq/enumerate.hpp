#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <vector>

#include "ivq/perm.hpp"
#include "ivq/quandle.hpp"

namespace ivq {

/// Largest order accepted by the enumerators.
inline constexpr std::size_t kMaxEnumerationOrder = 15;

/// Canonical forms of order n, pairwise non-isomorphic, sorted by table.
struct CanonicalCatalog {
  std::size_t order = 0;
  std::vector<Quandle> members;
};

struct CountsRow {
  std::size_t n = 0;
  std::size_t q = 0;  // connected
  std::size_t l = 0;  // latin
  std::size_t a = 0;  // isomorphic to the core of an abelian group

  friend bool operator==(const CountsRow&, const CountsRow&) = default;
};

// Depth-first search over left translations. L_0 is fixed to a standard
// involution per fixed-point count; each further row L_u is built point by
// point under the constraints that follow from L_{x*y} = L_x L_y L_x, and the
// defined rows are closed under that identity before branching again.
// Isomorphic leaves are merged by canonical form. The result does not depend
// on `workers`. Throws SizeLimit for n outside 1..kMaxEnumerationOrder.
CanonicalCatalog enumerate_connected(std::size_t n, unsigned workers = 1);

/// Every involutory quandle of order n up to isomorphism, connected or not,
/// by the same translation search.
CanonicalCatalog enumerate_all(std::size_t n, unsigned workers = 1);

CountsRow counts(const CanonicalCatalog& catalog);
CountsRow counts(std::size_t n, unsigned workers = 1);

/// Invariant factors of an abelian group A with q isomorphic to core(A), if any.
std::optional<std::vector<unsigned>> is_affine(const Quandle& q);

/// Numbers of involutory quandles of order 0..5 up to isomorphism, connected
/// or not. Computed offline by two independent searches and pinned here.
inline constexpr std::array<std::size_t, 6> kAllInvolutoryCounts = {0, 1, 1, 3, 5, 13};

/// (G, e, zeta): G transitive, zeta in the centre of the stabilizer G_e, and
/// the normal closure of zeta equal to G.
struct Envelope {
  PermGroup group;
  Element basepoint = 0;
  Permutation zeta;
};

/// (LMlt(q), e, L_e). Throws NotConnected.
Envelope envelope_of(const Quandle& q, Element e, std::size_t limit = kDefaultElementLimit);

/// L_a = g zeta g^-1 for any g in G with g(e) = a. Since quandles here are
/// involutory, zeta must be an involution. Throws InvalidEnvelope naming the
/// first violated condition.
Quandle quandle_from_envelope(const Envelope& env);

/// Writes ivq-n<order>-<index>.tbl per member (index from 1) and returns the
/// paths written.
std::vector<std::filesystem::path> write_catalog(const std::filesystem::path& dir, const CanonicalCatalog& c);
/// Writes counts.tsv with header n, q, l, a.
void write_counts(const std::filesystem::path& file, const std::vector<CountsRow>& rows);

}  // namespace ivq
