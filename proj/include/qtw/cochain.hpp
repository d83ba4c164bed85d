#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qtw/circle.hpp"
#include "qtw/fin_ab_group.hpp"

namespace qtw {

// Carry bit of a+b base n; well defined on Z/n x Z/n (0 <= a,b < n).
std::int64_t omega(std::int64_t n, std::int64_t a, std::int64_t b);

// A T-valued n-cochain on a finite abelian group, written additively.  The
// backing is a pure evaluator (closed forms stay closed under coboundary);
// a full table over Gamma^n can be materialized for the exhaustive loops.
class Cochain {
 public:
  using Evaluator = std::function<CircleValue(std::span<const GroupElement>)>;

  Cochain() = default;
  Cochain(FinAbGroup group, int degree, Evaluator eval, std::string label = "");

  static Cochain zero(FinAbGroup group, int degree);
  static Cochain from_table(FinAbGroup group, int degree, std::vector<CircleValue> table);

  const FinAbGroup& group() const { return impl_->group; }
  int degree() const { return impl_->degree; }
  const std::string& label() const { return impl_->label; }

  CircleValue operator()(std::span<const GroupElement> args) const;
  CircleValue at(std::initializer_list<GroupElement> args) const;

  // Flat table over Gamma^degree, tuple index = mixed-radix over element
  // indices (leftmost argument most significant).
  std::vector<CircleValue> materialize() const;

  // Pointwise group operations (products of T-valued cochains).
  Cochain operator*(const Cochain& o) const;
  Cochain inverse() const;
  Cochain power(std::int64_t k) const;

 private:
  struct Impl {
    FinAbGroup group;
    int degree = 0;
    Evaluator eval;
    std::string label;
  };
  std::shared_ptr<const Impl> impl_;
};

// Standard-complex coboundary; closed-form backing is preserved.
Cochain coboundary(const Cochain& phi);

struct CocycleReport {
  bool ok = true;
  bool exhaustive = true;
  std::vector<GroupElement> witness;  // first failing tuple when !ok
};

// Exhaustive when |Gamma|^(deg+1) fits the budget, else deterministic
// sampling (fixed seed, at least min_samples tuples).
CocycleReport is_cocycle(const Cochain& phi, std::size_t budget = 40'000'000,
                         std::uint64_t seed = 0x5eed, std::size_t min_samples = 100'000);

// ---- bar chains ----

// Integer combination of augmented bar simplices 1 (x) [g_1|...|g_n].
class BarChain {
 public:
  BarChain() = default;
  BarChain(FinAbGroup group, int degree) : group_(std::move(group)), degree_(degree) {}

  const FinAbGroup& group() const { return group_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(std::int64_t coeff, std::vector<GroupElement> tuple);
  const std::map<std::vector<GroupElement>, std::int64_t>& terms() const { return terms_; }

  BarChain operator+(const BarChain& o) const;
  BarChain operator-() const;

 private:
  FinAbGroup group_;
  int degree_ = 0;
  std::map<std::vector<GroupElement>, std::int64_t> terms_;
};

BarChain chain_boundary(const BarChain& c);

CircleValue pair(const Cochain& phi, const BarChain& c);

// ---- the paper's explicit generators and dual cycles ----

struct GeneratorIndex {
  std::vector<std::size_t> ix;  // 0-based factor indices, strictly increasing, size 1..3

  static GeneratorIndex single(std::size_t i) { return {{i}}; }
  static GeneratorIndex pair_ix(std::size_t i, std::size_t j) { return {{i, j}}; }
  static GeneratorIndex triple(std::size_t i, std::size_t j, std::size_t k) { return {{i, j, k}}; }
  std::string str() const;
};

// phi_i, phi_ij, phi_ijk as closed-form 3-cochains.
Cochain generator_phi(const FinAbGroup& g, const GeneratorIndex& ix);
// theta_i, theta_ij, theta_ijk dual 3-cycles.
BarChain cycle_theta(const FinAbGroup& g, const GeneratorIndex& ix);
// All generator indices of a group in canonical order (singles, pairs, triples).
std::vector<GeneratorIndex> all_generator_indices(const FinAbGroup& g);
// The order of the generator: n_i, (n_i,n_j) or (n_i,n_j,n_k).
std::int64_t generator_order(const FinAbGroup& g, const GeneratorIndex& ix);

// ---- classification ----

// Exponents of a third cohomology class against the generator basis.
struct H3Class {
  std::vector<std::int64_t> factors;                       // group factor list
  std::vector<std::int64_t> e_single;                      // e_i mod n_i
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> e_pair;  // mod (n_i,n_j)
  std::map<std::array<std::size_t, 3>, std::int64_t> e_triple;         // mod (n_i,n_j,n_k)

  bool is_zero() const;
  bool triples_vanish() const;
  H3Class operator+(const H3Class& o) const;
  H3Class operator-() const;
  bool operator==(const H3Class& o) const = default;
  std::string str() const;
};

H3Class zero_class(const FinAbGroup& g);
// Class with a single exponent set.
H3Class unit_class(const FinAbGroup& g, const GeneratorIndex& ix, std::int64_t e);

// Reads the class off the diagonal pairing matrix; validates the cocycle
// condition first (NotACocycleError with witness location on failure).
H3Class classify_3cocycle(const Cochain& phi, bool validate = true);

// <phi, g_1 ^ ... ^ g_n> as the signed product over S_n; degree <= 4.
CircleValue alternation_pair(const Cochain& phi, std::span<const GroupElement> args);

// A cocycle lifts to a coboundary on the covering lattice iff it annihilates
// every wedge cycle theta_ijk.
bool lifts_to_coboundary(const Cochain& phi, bool validate = true);

// n-character test: multiplicative backing validated, then coboundary iff the
// alternation vanishes on all wedge generator tuples.
bool is_character_coboundary(const Cochain& chi);

// Closed-form n-character on a free lattice Z^rank, stored by its values on
// basis tuples and extended multilinearly.
class FreeNCharacter {
 public:
  FreeNCharacter(std::size_t rank, int degree, std::vector<CircleValue> basis_values);

  std::size_t rank() const { return rank_; }
  int degree() const { return degree_; }
  CircleValue& basis_value(std::span<const std::size_t> ix);
  CircleValue eval(std::span<const std::vector<std::int64_t>> args) const;

 private:
  std::size_t rank_;
  int degree_;
  std::vector<CircleValue> values_;  // rank^degree
};

bool is_character_coboundary(const FreeNCharacter& chi);

}  // namespace qtw
