#include "qtw/fin_ab_group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qtw/error.hpp"

namespace qtw {

std::string GroupElement::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

FinAbGroup FinAbGroup::from_factors(std::vector<std::int64_t> factors) {
  FinAbGroup g;
  for (auto n : factors) {
    if (n < 1) throw Error("FinAbGroup: factor must be >= 1");
    if (n > 1) g.factors_.push_back(n);
  }
  std::size_t m = g.factors_.size();
  Presentation p;
  p.rank = static_cast<std::int64_t>(m);
  p.relations = IntMatrix::diagonal(g.factors_);
  p.proj = IntMatrix::identity(m);
  p.lift = IntMatrix::identity(m);
  p.gamma0 = p.relations;
  p.w_change = IntMatrix::identity(m);
  p.w_orders = g.factors_;
  g.presentation_ = std::move(p);
  g.compute_invariants();
  return g;
}

FinAbGroup FinAbGroup::quotient(std::int64_t rank, const IntMatrix& relations) {
  if (rank < 0) throw Error("FinAbGroup: negative rank");
  if (relations.rows() != static_cast<std::size_t>(rank))
    throw Error("FinAbGroup: relations must have `rank` rows");
  auto snf = smith_normal_form(relations);
  std::size_t r = static_cast<std::size_t>(rank);
  std::size_t diag = std::min(relations.rows(), relations.cols());
  std::vector<std::int64_t> d(r, 0);
  for (std::size_t i = 0; i < diag; ++i) {
    const BigInt& x = snf.d.at(i, i);
    if (x > INT64_MAX) throw OverflowError("quotient: invariant factor exceeds int64");
    d[i] = static_cast<std::int64_t>(x);
  }
  for (std::size_t i = 0; i < r; ++i)
    if (d[i] == 0) throw InfiniteQuotientError("quotient group is infinite (zero invariant factor)");

  FinAbGroup g;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < r; ++i)
    if (d[i] > 1) {
      kept.push_back(i);
      g.factors_.push_back(d[i]);
    }
  std::size_t m = kept.size();
  Presentation p;
  p.rank = rank;
  p.relations = relations;
  p.proj = IntMatrix(m, r);
  p.lift = IntMatrix(r, m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t j = 0; j < r; ++j) p.proj.at(a, j) = snf.u.at(kept[a], j);
    for (std::size_t i = 0; i < r; ++i) p.lift.at(i, a) = snf.u_inv.at(i, kept[a]);
  }
  IntMatrix dsq(r, r);
  for (std::size_t i = 0; i < r; ++i) dsq.at(i, i) = d[i];
  p.gamma0 = snf.u_inv * dsq;
  p.w_change = snf.u;
  p.w_orders = d;
  g.presentation_ = std::move(p);
  g.compute_invariants();
  return g;
}

void FinAbGroup::compute_invariants() {
  if (factors_.empty()) {
    invariant_.clear();
    return;
  }
  auto snf = smith_normal_form(IntMatrix::diagonal(factors_));
  invariant_.clear();
  for (auto x : snf.diagonal())
    if (x > 1) invariant_.push_back(x);
}

BigInt FinAbGroup::order() const {
  BigInt o = 1;
  for (auto n : factors_) o *= n;
  return o;
}

GroupElement FinAbGroup::generator(std::size_t i) const {
  if (i >= factors_.size()) throw BadIndexError("generator index out of range");
  GroupElement g = zero();
  g.c[i] = factors_[i] > 1 ? 1 : 0;
  return g;
}

GroupElement FinAbGroup::make(std::vector<std::int64_t> coords) const {
  if (coords.size() != factors_.size()) throw GroupMismatchError("coordinate length mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = pos_mod(coords[i], factors_[i]);
  return GroupElement{std::move(coords)};
}

GroupElement FinAbGroup::add(const GroupElement& a, const GroupElement& b) const {
  GroupElement r = a;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    r.c[i] += b.c[i];
    if (r.c[i] >= factors_[i]) r.c[i] -= factors_[i];
  }
  return r;
}

GroupElement FinAbGroup::sub(const GroupElement& a, const GroupElement& b) const {
  GroupElement r = a;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    r.c[i] -= b.c[i];
    if (r.c[i] < 0) r.c[i] += factors_[i];
  }
  return r;
}

GroupElement FinAbGroup::neg(const GroupElement& a) const {
  GroupElement r = a;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (r.c[i]) r.c[i] = factors_[i] - r.c[i];
  return r;
}

GroupElement FinAbGroup::scaled(const GroupElement& a, std::int64_t k) const {
  GroupElement r = zero();
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    std::int64_t kk = pos_mod(k, factors_[i]);
    r.c[i] = static_cast<std::int64_t>((__int128)a.c[i] * kk % factors_[i]);
  }
  return r;
}

std::int64_t FinAbGroup::element_order(const GroupElement& a) const {
  std::int64_t o = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    o = lcm64_checked(o, factors_[i] / std::gcd(factors_[i], a.c[i]));
  return o;
}

std::size_t FinAbGroup::size() const {
  BigInt o = order();
  if (o > 1'000'000'000) throw OverflowError("group too large for enumeration");
  return static_cast<std::size_t>(o);
}

std::size_t FinAbGroup::index_of(const GroupElement& a) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    idx = idx * static_cast<std::size_t>(factors_[i]) + static_cast<std::size_t>(a.c[i]);
  return idx;
}

GroupElement FinAbGroup::at_index(std::size_t idx) const {
  GroupElement g = zero();
  for (std::size_t i = factors_.size(); i-- > 0;) {
    g.c[i] = static_cast<std::int64_t>(idx % static_cast<std::size_t>(factors_[i]));
    idx /= static_cast<std::size_t>(factors_[i]);
  }
  return g;
}

std::vector<GroupElement> FinAbGroup::elements() const {
  std::size_t n = size();
  std::vector<GroupElement> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(at_index(i));
  return out;
}

CircleValue FinAbGroup::pairing(const GroupElement& chi, const GroupElement& g) const {
  CircleValue v;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    v += CircleValue::chi(factors_[i], chi.c[i]).scaled(g.c[i]);
  return v;
}

std::int64_t FinAbGroup::rank() const {
  if (!presentation_) throw NoPresentationError("group has no presentation");
  return presentation_->rank;
}

const IntMatrix& FinAbGroup::relations() const {
  if (!presentation_) throw NoPresentationError("group has no presentation");
  return presentation_->relations;
}

GroupElement FinAbGroup::project(std::span<const BigInt> x) const {
  if (!presentation_) throw NoPresentationError("group has no presentation");
  const auto& p = *presentation_;
  if (x.size() != static_cast<std::size_t>(p.rank)) throw GroupMismatchError("lattice vector length");
  GroupElement g = zero();
  for (std::size_t a = 0; a < factors_.size(); ++a) {
    BigInt acc = 0;
    for (std::size_t j = 0; j < x.size(); ++j)
      if (p.proj.at(a, j) != 0) acc += p.proj.at(a, j) * x[j];
    g.c[a] = pos_mod_big(acc, factors_[a]);
  }
  return g;
}

GroupElement FinAbGroup::project64(std::span<const std::int64_t> x) const {
  std::vector<BigInt> v(x.begin(), x.end());
  return project(v);
}

std::vector<BigInt> FinAbGroup::lift(const GroupElement& g) const {
  if (!presentation_) throw NoPresentationError("group has no presentation");
  const auto& p = *presentation_;
  std::vector<BigInt> x(static_cast<std::size_t>(p.rank));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t a = 0; a < factors_.size(); ++a)
      if (p.lift.at(i, a) != 0) x[i] += p.lift.at(i, a) * g.c[a];
  return x;
}

const IntMatrix& FinAbGroup::gamma0_basis() const {
  if (!presentation_) throw NoPresentationError("group has no presentation");
  return presentation_->gamma0;
}

std::vector<BigInt> FinAbGroup::gamma0_coords(std::span<const BigInt> x) const {
  if (!presentation_) throw NoPresentationError("group has no presentation");
  const auto& p = *presentation_;
  if (x.size() != static_cast<std::size_t>(p.rank)) throw GroupMismatchError("lattice vector length");
  std::vector<BigInt> y(x.size());
  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (p.w_change.at(i, j) != 0) y[i] += p.w_change.at(i, j) * x[j];
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] % p.w_orders[i] != 0) throw Error("gamma0_coords: vector not in Gamma_0");
    y[i] /= p.w_orders[i];
  }
  return y;
}

std::string FinAbGroup::str() const {
  if (factors_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) os << (i ? " + " : "") << "Z/" << factors_[i];
  return os.str();
}

// ---- tensor / Tor / exterior ----

TensorGroup tensor_product(const FinAbGroup& g, const FinAbGroup& h) {
  TensorGroup t;
  std::vector<std::int64_t> fs;
  for (std::size_t i = 0; i < g.num_factors(); ++i)
    for (std::size_t j = 0; j < h.num_factors(); ++j) {
      std::int64_t d = std::gcd(g.factors()[i], h.factors()[j]);
      if (d > 1) {
        fs.push_back(d);
        t.basis.emplace_back(i, j);
      }
    }
  t.group = FinAbGroup::from_factors(fs);
  return t;
}

GroupElement TensorGroup::elementary(const FinAbGroup& g, const GroupElement& a,
                                     const FinAbGroup& h, const GroupElement& b) const {
  (void)g;
  (void)h;
  std::vector<std::int64_t> c(basis.size());
  for (std::size_t t = 0; t < basis.size(); ++t) {
    auto [i, j] = basis[t];
    c[t] = a.c[i] * b.c[j];
  }
  return group.make(std::move(c));
}

TorGroup tor_group(const FinAbGroup& g, const FinAbGroup& h, bool with_kernel) {
  TorGroup t;
  auto tens = tensor_product(g, h);
  t.group = tens.group;
  t.basis = tens.basis;
  if (with_kernel) {
    if (!g.has_presentation()) throw NoPresentationError("tor_group kernel needs a presentation");
    // In the w-basis Gamma_0 = ⊕ d_i Z, so the kernel of Gamma_0 (x) h ->
    // Gamma_1 (x) h is ⊕_i h[d_i], the d_i-torsion of h in block i.
    auto snf = smith_normal_form(g.relations());
    auto d = snf.diagonal();
    std::size_t r = static_cast<std::size_t>(g.rank());
    for (std::size_t i = 0; i < r; ++i) {
      std::int64_t di = i < d.size() ? d[i] : 0;
      if (di == 0) throw InfiniteQuotientError("tor_group: presentation has infinite quotient");
      for (std::size_t j = 0; j < h.num_factors(); ++j) {
        std::int64_t mj = h.factors()[j];
        std::int64_t k = mj / std::gcd(di, mj);
        if (k == mj) continue;  // trivial torsion, zero generator
        std::vector<GroupElement> gen(r, h.zero());
        gen[i] = h.scaled(h.generator(j), k);
        t.kernel_generators.push_back(std::move(gen));
      }
    }
  }
  return t;
}

ExteriorPower exterior_power(const FinAbGroup& g, int degree) {
  if (degree != 2 && degree != 3) throw UnsupportedDegreeError("exterior_power: degree must be 2 or 3");
  ExteriorPower e;
  e.degree = degree;
  std::vector<std::int64_t> fs;
  std::size_t m = g.num_factors();
  if (degree == 2) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        std::int64_t d = std::gcd(g.factors()[i], g.factors()[j]);
        if (d > 1) {
          fs.push_back(d);
          e.basis.push_back({i, j, ExteriorPower::npos});
        }
      }
  } else {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        for (std::size_t k = j + 1; k < m; ++k) {
          std::int64_t d = std::gcd(std::gcd(g.factors()[i], g.factors()[j]), g.factors()[k]);
          if (d > 1) {
            fs.push_back(d);
            e.basis.push_back({i, j, k});
          }
        }
  }
  e.group = FinAbGroup::from_factors(fs);
  return e;
}

GroupElement ExteriorPower::wedge(const FinAbGroup& g, std::span<const GroupElement> elts) const {
  (void)g;
  if (elts.size() != static_cast<std::size_t>(degree))
    throw GroupMismatchError("wedge: wrong number of arguments");
  std::vector<std::int64_t> c(basis.size());
  for (std::size_t t = 0; t < basis.size(); ++t) {
    auto [i, j, k] = basis[t];
    if (degree == 2) {
      c[t] = elts[0].c[i] * elts[1].c[j] - elts[0].c[j] * elts[1].c[i];
    } else {
      // 3x3 determinant of the (i,j,k) coordinates.
      std::array<std::size_t, 3> ix{i, j, k};
      std::int64_t det = 0;
      static constexpr int perm[6][4] = {{0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1},
                                         {0, 2, 1, -1}, {2, 1, 0, -1}, {1, 0, 2, -1}};
      for (auto& p : perm)
        det += p[3] * elts[0].c[ix[static_cast<std::size_t>(p[0])]] *
               elts[1].c[ix[static_cast<std::size_t>(p[1])]] *
               elts[2].c[ix[static_cast<std::size_t>(p[2])]];
      c[t] = det;
    }
  }
  return group.make(std::move(c));
}

AbHom::AbHom(FinAbGroup source, FinAbGroup target, IntMatrix generator_images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(generator_images)) {
  if (images_.rows() != target_.num_factors() || images_.cols() != source_.num_factors())
    throw GroupMismatchError("AbHom: image matrix shape mismatch");
  // Well-definedness: n_i times the image of generator i must vanish.
  for (std::size_t i = 0; i < source_.num_factors(); ++i) {
    for (std::size_t a = 0; a < target_.num_factors(); ++a) {
      BigInt v = images_.at(a, i) * source_.factors()[i];
      if (v % target_.factors()[a] != 0)
        throw Error("AbHom: generator image violates source relation");
    }
  }
}

GroupElement AbHom::apply(const GroupElement& x) const {
  GroupElement out = target_.zero();
  for (std::size_t a = 0; a < target_.num_factors(); ++a) {
    BigInt acc = 0;
    for (std::size_t i = 0; i < source_.num_factors(); ++i)
      if (images_.at(a, i) != 0) acc += images_.at(a, i) * x.c[i];
    out.c[a] = pos_mod_big(acc, target_.factors()[a]);
  }
  return out;
}

}  // namespace qtw
