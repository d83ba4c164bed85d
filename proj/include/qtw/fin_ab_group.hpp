#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qtw/circle.hpp"
#include "qtw/int_matrix.hpp"

namespace qtw {

// Coordinates modulo the factor list of the parent group; reduced into
// [0, n_i) on construction through the group's methods.
struct GroupElement {
  std::vector<std::int64_t> c;

  bool operator==(const GroupElement&) const = default;
  auto operator<=>(const GroupElement&) const = default;
  bool is_zero() const {
    for (auto x : c)
      if (x) return false;
    return true;
  }
  std::string str() const;
};

// A finite abelian group.  Two coordinate systems coexist: the decomposition
// the caller gave ("user" factors, order preserved, trivial factors dropped)
// and the normalized invariant-factor chain used for isomorphism tests.
// When the group arises from a presentation Z^rank / <relations>, the
// projection/lift pair and a basis of the relation lattice are kept so that
// cohomological constructions can move between the cover and the quotient.
class FinAbGroup {
 public:
  FinAbGroup() = default;  // trivial group

  static FinAbGroup from_factors(std::vector<std::int64_t> factors);
  static FinAbGroup trivial() { return FinAbGroup(); }
  // Gamma_1 = Z^rank modulo the column span of `relations`; throws
  // InfiniteQuotientError when the quotient is infinite.
  static FinAbGroup quotient(std::int64_t rank, const IntMatrix& relations);

  std::size_t num_factors() const { return factors_.size(); }
  const std::vector<std::int64_t>& factors() const { return factors_; }
  const std::vector<std::int64_t>& invariant_factors() const { return invariant_; }
  BigInt order() const;
  bool is_trivial() const { return factors_.empty(); }
  bool isomorphic(const FinAbGroup& o) const { return invariant_ == o.invariant_; }
  bool operator==(const FinAbGroup& o) const { return factors_ == o.factors_; }

  GroupElement zero() const { return GroupElement{std::vector<std::int64_t>(factors_.size(), 0)}; }
  GroupElement generator(std::size_t i) const;
  GroupElement make(std::vector<std::int64_t> coords) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement scaled(const GroupElement& a, std::int64_t k) const;
  std::int64_t element_order(const GroupElement& a) const;

  // |Gamma| as a machine integer; guards exhaustive loops.
  std::size_t size() const;
  std::size_t index_of(const GroupElement& a) const;  // lexicographic rank
  GroupElement at_index(std::size_t idx) const;
  std::vector<GroupElement> elements() const;  // lexicographic, each exactly once

  // Pontryagin pairing <chi, g> = sum chi_i g_i / n_i; the dual group is
  // presented with the same factor list.
  CircleValue pairing(const GroupElement& chi, const GroupElement& g) const;

  // ---- presentation access (throws NoPresentationError when absent)
  bool has_presentation() const { return presentation_.has_value(); }
  std::int64_t rank() const;
  const IntMatrix& relations() const;
  // Gamma_1 -> Gamma in user coordinates.
  GroupElement project(std::span<const BigInt> x) const;
  GroupElement project64(std::span<const std::int64_t> x) const;
  // Integral lift of a group element (composes with project to the identity).
  std::vector<BigInt> lift(const GroupElement& g) const;
  // Basis b_1..b_rank of Gamma_0 (columns, Gamma_1 coordinates).
  const IntMatrix& gamma0_basis() const;
  // Coordinates of an element of Gamma_0 in that basis; throws if x is not
  // in Gamma_0.
  std::vector<BigInt> gamma0_coords(std::span<const BigInt> x) const;

  std::string str() const;  // "Z/2 + Z/4" style

 private:
  struct Presentation {
    std::int64_t rank = 0;
    IntMatrix relations;     // rank x k
    IntMatrix proj;          // m x rank
    IntMatrix lift;          // rank x m
    IntMatrix gamma0;        // rank x rank, columns = basis of Gamma_0
    IntMatrix w_change;      // rank x rank: U with U*relations*V = D (w = U x)
    std::vector<std::int64_t> w_orders;  // d_1..d_rank (invariant factors incl. 1s)
  };

  std::vector<std::int64_t> factors_;
  std::vector<std::int64_t> invariant_;
  std::optional<Presentation> presentation_;

  void compute_invariants();
};

// ---- derived groups with elementary-object bookkeeping ----

struct TensorGroup {
  FinAbGroup group;
  std::vector<std::pair<std::size_t, std::size_t>> basis;  // kept (i, j) factor pairs

  GroupElement elementary(const FinAbGroup& g, const GroupElement& a, const FinAbGroup& h,
                          const GroupElement& b) const;
};

TensorGroup tensor_product(const FinAbGroup& g, const FinAbGroup& h);

struct TorGroup {
  FinAbGroup group;  // same invariant factors as the tensor product
  std::vector<std::pair<std::size_t, std::size_t>> basis;
  // Generators of ker(Gamma_0 (x) Delta -> Gamma_1 (x) Delta); block i of a
  // generator is the Delta-component along the Gamma_0 basis vector b_i.
  // Present only when the first group carries a presentation.
  std::vector<std::vector<GroupElement>> kernel_generators;
};

// Kernel data requires a presentation on g; pass with_kernel=false to skip.
TorGroup tor_group(const FinAbGroup& g, const FinAbGroup& h, bool with_kernel = false);

struct ExteriorPower {
  FinAbGroup group;
  int degree;  // 2 or 3
  std::vector<std::array<std::size_t, 3>> basis;  // (i,j,npos) or (i,j,k)

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  GroupElement wedge(const FinAbGroup& g, std::span<const GroupElement> elts) const;
};

ExteriorPower exterior_power(const FinAbGroup& g, int degree);

// A homomorphism of finite abelian groups given by generator images.
class AbHom {
 public:
  AbHom(FinAbGroup source, FinAbGroup target, IntMatrix generator_images);

  const FinAbGroup& source() const { return source_; }
  const FinAbGroup& target() const { return target_; }
  GroupElement apply(const GroupElement& x) const;

 private:
  FinAbGroup source_, target_;
  IntMatrix images_;  // target.num_factors() x source.num_factors()
};

}  // namespace qtw
