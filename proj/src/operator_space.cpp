#include "trivspec/operator_space.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace trivspec {

std::uint64_t alpha(std::uint64_t n, std::uint64_t d) {
  if (n == 0) return 0;
  return n * (d - 1) + d * n * (n - 1) / 2;
}

// ---------- OperatorSpace ----------

OperatorSpace::OperatorSpace(AlgebraPtr alg, std::size_t rows, std::size_t cols)
    : alg_(std::move(alg)), rows_(rows), cols_(cols), coords_(alg_->base(), rows * cols * alg_->degree()) {}

OperatorSpace OperatorSpace::span(AlgebraPtr alg, std::size_t rows, std::size_t cols,
                                  const std::vector<DMatrix>& gens) {
  std::vector<Vec> flat;
  for (const auto& g : gens) {
    if (!g.algebra()->same_as(*alg)) fail(Errc::DescriptorMismatch, "generator over a different algebra");
    if (g.rows() != rows || g.cols() != cols) fail(Errc::ShapeMismatch, "generator has the wrong shape");
    flat.push_back(g.flat());
  }
  return from_coords(alg, rows, cols, FSubspace::span(alg->base(), rows * cols * alg->degree(), flat));
}

OperatorSpace OperatorSpace::from_coords(AlgebraPtr alg, std::size_t rows, std::size_t cols,
                                         const FSubspace& coords) {
  OperatorSpace s(alg, rows, cols);
  if (coords.ambient() != rows * cols * alg->degree()) fail(Errc::ShapeMismatch, "coordinate space has wrong size");
  s.coords_ = coords;
  s.rebuild();
  return s;
}

OperatorSpace OperatorSpace::full(AlgebraPtr alg, std::size_t rows, std::size_t cols) {
  return from_coords(alg, rows, cols, FSubspace::full(alg->base(), rows * cols * alg->degree()));
}

void OperatorSpace::rebuild() {
  basis_.clear();
  real_.clear();
  for (const auto& v : coords_.basis()) {
    basis_.push_back(DMatrix::from_flat(alg_, rows_, cols_, v));
    real_.push_back(basis_.back().realify());
  }
}

DMatrix OperatorSpace::element(const Vec& coeffs) const {
  if (coeffs.size() != dim()) fail(Errc::ShapeMismatch, "coefficient vector has wrong length");
  Vec flat = zero_vec(field(), rows_ * cols_ * alg_->degree());
  for (std::size_t i = 0; i < dim(); ++i) axpy(flat, coeffs[i], coords_.basis()[i]);
  return DMatrix::from_flat(alg_, rows_, cols_, flat);
}

Matrix OperatorSpace::realified_element(const Vec& coeffs) const {
  const std::size_t d = alg_->degree();
  Matrix m(field(), rows_ * d, cols_ * d);
  for (std::size_t i = 0; i < dim(); ++i)
    if (!coeffs[i].is_zero()) m = m + real_[i].scaled(coeffs[i]);
  return m;
}

bool OperatorSpace::contains(const DMatrix& m) const {
  if (m.rows() != rows_ || m.cols() != cols_) return false;
  return coords_.contains(m.flat());
}

bool OperatorSpace::contains(const OperatorSpace& o) const { return coords_.contains(o.coords_); }

bool OperatorSpace::operator==(const OperatorSpace& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && alg_->same_as(*o.alg_) && coords_ == o.coords_;
}

OperatorSpace OperatorSpace::transformed(const DMatrix& left, const DMatrix& right) const {
  std::vector<DMatrix> gens;
  for (const auto& b : basis_) gens.push_back(left * b * right);
  return span(alg_, left.rows(), right.cols(), gens);
}

OperatorSpace OperatorSpace::conjugated(const DMatrix& q) const { return transformed(inverse_D(q), q); }

OperatorSpace OperatorSpace::sum(const OperatorSpace& o) const {
  return from_coords(alg_, rows_, cols_, coords_.sum(o.coords_));
}

OperatorSpace OperatorSpace::intersect(const OperatorSpace& o) const {
  return from_coords(alg_, rows_, cols_, coords_.intersect(o.coords_));
}

// ---------- DSubspace ----------

DSubspace DSubspace::span(AlgebraPtr alg, std::size_t n, const std::vector<Vec>& gens) {
  const std::size_t d = alg->degree();
  const Field& F = alg->base();
  DSubspace w;
  w.alg_ = alg;
  w.n_ = n;
  std::vector<Vec> fgens;
  for (const auto& g : gens)
    for (std::size_t k = 0; k < d; ++k) fgens.push_back(right_scale(*alg, g, alg->basis(k)));
  w.fspan_ = FSubspace::span(F, n * d, fgens);

  // Column reduction from the bottom row using right multiplications.
  std::vector<Vec> cols = w.fspan_.basis();
  std::vector<bool> used(cols.size(), false);
  for (std::size_t r = n; r-- > 0;) {
    std::size_t sel = cols.size();
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (!used[c] && !is_zero_vec(component(cols[c], d, r))) {
        sel = c;
        break;
      }
    if (sel == cols.size()) continue;
    used[sel] = true;
    cols[sel] = right_scale(*alg, cols[sel], alg->inv(component(cols[sel], d, r)));
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (c == sel) continue;
      Vec a = component(cols[c], d, r);
      if (is_zero_vec(a)) continue;
      cols[c] = sub(cols[c], right_scale(*alg, cols[sel], a));
    }
  }
  // Collect pivot columns sorted by pivot row.
  std::vector<std::pair<std::size_t, Vec>> piv;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (!used[c]) continue;
    std::size_t last = n;
    for (std::size_t r = n; r-- > 0;)
      if (!is_zero_vec(component(cols[c], d, r))) {
        last = r;
        break;
      }
    piv.emplace_back(last, cols[c]);
  }
  std::sort(piv.begin(), piv.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [r, v] : piv) {
    w.pivots_.push_back(r);
    w.basis_.push_back(v);
  }
  return w;
}

DSubspace DSubspace::full(AlgebraPtr alg, std::size_t n) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < n; ++i) {
    Vec x = zero_vec(alg->base(), n * alg->degree());
    Vec one = alg->one();
    std::copy(one.begin(), one.end(), x.begin() + i * alg->degree());
    gens.push_back(x);
  }
  return span(alg, n, gens);
}

DMatrix DSubspace::basis_matrix() const {
  const std::size_t d = alg_->degree();
  DMatrix m(alg_, n_, basis_.size());
  for (std::size_t c = 0; c < basis_.size(); ++c)
    for (std::size_t i = 0; i < n_; ++i) m.set(i, c, component(basis_[c], d, i));
  return m;
}

std::string DSubspace::str() const {
  std::ostringstream os;
  os << "<";
  for (std::size_t c = 0; c < basis_.size(); ++c)
    os << (c ? ", " : "") << DMatrix::column(alg_, basis_[c]).transpose().str();
  os << ">";
  return os.str();
}

// ---------- enumeration ----------

static bool odometer(std::vector<std::uint64_t>& t, std::uint64_t base) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (++t[i] < base) return true;
    t[i] = 0;
  }
  return false;
}

void for_each_projective_point(const Algebra& alg, std::size_t m, const std::function<bool(const Vec&)>& fn) {
  auto card = alg.cardinality();
  if (!card) fail(Errc::Unsupported, "projective enumeration needs a finite field");
  const std::size_t d = alg.degree();
  std::vector<Vec> elems;
  for (std::uint64_t i = 0; i < *card; ++i) elems.push_back(alg.element(i));
  for (std::size_t last = 0; last < m; ++last) {
    std::vector<std::uint64_t> t(last, 0);
    do {
      Vec x = zero_vec(alg.base(), m * d);
      for (std::size_t i = 0; i < last; ++i) std::copy(elems[t[i]].begin(), elems[t[i]].end(), x.begin() + i * d);
      std::copy(alg.unit().begin(), alg.unit().end(), x.begin() + last * d);
      if (!fn(x)) return;
    } while (odometer(t, *card));
  }
}

std::uint64_t projective_point_count(const Algebra& alg, std::size_t m) {
  auto card = alg.cardinality();
  if (!card) return UINT64_MAX;
  std::uint64_t total = 0, pw = 1;
  for (std::size_t i = 0; i < m; ++i) {
    total += pw;
    if (pw > UINT64_MAX / *card) return UINT64_MAX;
    pw *= *card;
  }
  return total;
}

std::uint64_t dsubspace_count(const Algebra& alg, std::size_t n, std::size_t k) {
  auto card = alg.cardinality();
  if (!card) return UINT64_MAX;
  if (k > n) return 0;
  // Gaussian binomial in Q = |D|.
  long double num = 1, den = 1;
  long double Q = static_cast<long double>(*card);
  for (std::size_t i = 0; i < k; ++i) {
    num *= std::pow(Q, static_cast<long double>(n - i)) - 1;
    den *= std::pow(Q, static_cast<long double>(i + 1)) - 1;
  }
  long double v = num / den;
  if (v > 1.8e19L) return UINT64_MAX;
  return static_cast<std::uint64_t>(v + 0.5L);
}

void for_each_dsubspace(const AlgebraPtr& alg, std::size_t n, std::size_t k,
                        const std::function<bool(const DSubspace&)>& fn) {
  auto card = alg->cardinality();
  if (!card) fail(Errc::Unsupported, "subspace enumeration needs a finite field");
  const std::size_t d = alg->degree();
  if (k > n) return;
  std::vector<Vec> elems;
  for (std::uint64_t i = 0; i < *card; ++i) elems.push_back(alg->element(i));
  std::vector<std::size_t> rows(k);
  for (std::size_t i = 0; i < k; ++i) rows[i] = i;
  while (true) {
    std::vector<bool> is_piv(n, false);
    for (auto r : rows) is_piv[r] = true;
    std::vector<std::pair<std::size_t, std::size_t>> slots;  // (column, row)
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t r = 0; r < rows[c]; ++r)
        if (!is_piv[r]) slots.emplace_back(c, r);
    std::vector<std::uint64_t> t(slots.size(), 0);
    do {
      std::vector<Vec> cols(k, zero_vec(alg->base(), n * d));
      for (std::size_t c = 0; c < k; ++c)
        std::copy(alg->unit().begin(), alg->unit().end(), cols[c].begin() + rows[c] * d);
      for (std::size_t s = 0; s < slots.size(); ++s) {
        const Vec& e = elems[t[s]];
        std::copy(e.begin(), e.end(), cols[slots[s].first].begin() + slots[s].second * d);
      }
      if (!fn(DSubspace::span(alg, n, cols))) return;
    } while (odometer(t, *card));
    // Next k-subset of rows in lexicographic order.
    std::size_t i = k;
    while (i > 0 && rows[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++rows[i - 1];
    for (std::size_t j = i; j < k; ++j) rows[j] = rows[j - 1] + 1;
  }
}

// ---------- constructions ----------

OperatorSpace joint(const std::vector<OperatorSpace>& blocks) {
  if (blocks.empty()) fail(Errc::InvalidInput, "joint of no spaces");
  AlgebraPtr alg = blocks[0].algebra();
  const std::size_t d = alg->degree();
  std::size_t n = 0;
  std::vector<std::size_t> off;
  for (const auto& b : blocks) {
    if (!b.square()) fail(Errc::NotSquare, "joint needs square blocks");
    if (!b.algebra()->same_as(*alg)) fail(Errc::DescriptorMismatch, "blocks over different algebras");
    off.push_back(n);
    n += b.rows();
  }
  std::vector<DMatrix> gens;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (const auto& u : blocks[i].basis()) {
      DMatrix m(alg, n, n);
      m.set_block(off[i], off[i], u);
      gens.push_back(m);
    }
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      for (std::size_t r = 0; r < blocks[i].rows(); ++r)
        for (std::size_t c = 0; c < blocks[j].rows(); ++c)
          for (std::size_t k = 0; k < d; ++k) {
            DMatrix m(alg, n, n);
            m.set(off[i] + r, off[j] + c, alg->basis(k));
            gens.push_back(m);
          }
  return OperatorSpace::span(alg, n, n, gens);
}

FSubspace evaluate(const OperatorSpace& s, const Vec& x) {
  const std::size_t d = s.algebra()->degree();
  if (x.size() != s.cols() * d) fail(Errc::ShapeMismatch, "vector has wrong length");
  std::vector<Vec> imgs;
  for (const auto& a : s.realified_basis()) imgs.push_back(a * x);
  return FSubspace::span(s.field(), s.rows() * d, imgs);
}

DSubspace socle(const AlgebraPtr& alg, std::size_t n, const FSubspace& u0) {
  const std::size_t d = alg->degree();
  if (u0.ambient() != n * d) fail(Errc::ShapeMismatch, "subspace has wrong ambient dimension");
  auto ann = u0.annihilator();
  std::vector<Vec> rows;
  for (std::size_t k = 0; k < d; ++k) {
    Matrix rk = right_scale_matrix(*alg, n, alg->basis(k));
    for (const auto& w : ann) rows.push_back(rk.transpose() * w);
  }
  if (rows.empty()) return DSubspace::full(alg, n);
  return DSubspace::span(alg, n, kernel(Matrix::from_rows(alg->base(), rows, n * d)));
}

static std::size_t image_rank(const OperatorSpace& s, const Vec& x) {
  if (s.dim() == 0) return 0;
  std::vector<Vec> imgs;
  for (const auto& a : s.realified_basis()) imgs.push_back(a * x);
  return rank(Matrix::from_rows(s.field(), imgs, s.rows() * s.algebra()->degree()));
}

RankResult transitive_rank(const OperatorSpace& s, std::uint64_t budget, Rng& rng) {
  const Algebra& alg = *s.algebra();
  const std::size_t d = alg.degree();
  RankResult res;
  res.witness = zero_vec(s.field(), s.cols() * d);
  if (s.dim() == 0 || s.cols() == 0) {
    res.verdict = Verdict::Certified;
    res.reason = "zero space";
    return res;
  }
  const std::size_t cap = std::min(s.dim(), s.rows() * d);
  if (s.field().is_finite() && projective_point_count(alg, s.cols()) <= budget) {
    for_each_projective_point(alg, s.cols(), [&](const Vec& x) {
      std::size_t r = image_rank(s, x);
      if (r > res.value) {
        res.value = r;
        res.witness = x;
      }
      return res.value < cap;
    });
    res.verdict = Verdict::Certified;
    res.reason = "exhaustive over D-lines";
    return res;
  }
  const int samples = s.field().is_finite() ? 64 : 16;
  for (int i = 0; i < samples && res.value < cap; ++i) {
    Vec x = rng.vec(s.field(), s.cols() * d, 1 << 20);
    std::size_t r = image_rank(s, x);
    if (r > res.value) {
      res.value = r;
      res.witness = x;
    }
  }
  if (res.value == cap) {
    res.verdict = Verdict::Certified;
    res.reason = "attains the trivial upper bound";
  } else if (s.field().is_finite()) {
    res.verdict = Verdict::BudgetExceeded;
    res.reason = "lower bound from " + std::to_string(samples) + " random vectors";
  } else {
    res.verdict = Verdict::CertifiedProbabilistic;
    res.reason = "random evaluation; each of " + std::to_string(samples) +
                 " samples misses the generic rank with probability below rank/2^21";
  }
  return res;
}

bool is_source_reduced(const OperatorSpace& s) {
  const std::size_t d = s.algebra()->degree();
  if (s.dim() == 0) return s.cols() == 0;
  Matrix stacked = s.realified_basis()[0];
  for (std::size_t i = 1; i < s.dim(); ++i) stacked = Matrix::vstack(stacked, s.realified_basis()[i]);
  return rank(stacked) == s.cols() * d;
}

bool is_target_reduced(const OperatorSpace& s) {
  const std::size_t d = s.algebra()->degree();
  if (s.dim() == 0) return s.rows() == 0;
  Matrix stacked = s.realified_basis()[0];
  for (std::size_t i = 1; i < s.dim(); ++i) stacked = Matrix::hstack(stacked, s.realified_basis()[i]);
  return rank(stacked) == s.rows() * d;
}

bool is_invariant(const OperatorSpace& s, const DSubspace& w) {
  if (!s.square()) fail(Errc::NotSquare, "invariance needs a square space");
  for (const auto& a : s.realified_basis())
    for (const auto& x : w.basis())
      if (!w.contains(a * x)) return false;
  return true;
}

std::vector<DSubspace> invariant_subspaces(const OperatorSpace& s, std::uint64_t budget,
                                          const std::vector<DSubspace>* candidates) {
  if (!s.square()) fail(Errc::NotSquare, "invariant subspaces need a square space");
  const AlgebraPtr& alg = s.algebra();
  const std::size_t n = s.rows();
  std::vector<DSubspace> out;
  if (!s.field().is_finite() || candidates) {
    if (!candidates) fail(Errc::Unsupported, "invariant subspaces over infinite fields need candidate subspaces");
    out.push_back(DSubspace::zero(alg, n));
    for (const auto& w : *candidates)
      if (w.dim() > 0 && w.dim() < n && is_invariant(s, w) &&
          std::find(out.begin(), out.end(), w) == out.end())
        out.push_back(w);
    out.push_back(DSubspace::full(alg, n));
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.dim() < b.dim(); });
    return out;
  }
  std::uint64_t total = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    std::uint64_t c = dsubspace_count(*alg, n, k);
    if (c == UINT64_MAX || total + c > budget) fail(Errc::BudgetExceeded, "too many subspaces to enumerate");
    total += c;
  }
  for (std::size_t k = 0; k <= n; ++k)
    for_each_dsubspace(alg, n, k, [&](const DSubspace& w) {
      if (is_invariant(s, w)) out.push_back(w);
      return true;
    });
  return out;
}

FlagDecomposition flag_decomposition(const OperatorSpace& s, std::uint64_t budget,
                                     const std::vector<DSubspace>* candidates) {
  auto inv = invariant_subspaces(s, budget, candidates);
  for (std::size_t i = 0; i < inv.size(); ++i)
    for (std::size_t j = i + 1; j < inv.size(); ++j)
      if (!inv[i].contains(inv[j]) && !inv[j].contains(inv[i]))
        fail(Errc::NotTotallyOrdered,
             "invariant subspaces " + inv[i].str() + " and " + inv[j].str() + " are not comparable");
  const AlgebraPtr& alg = s.algebra();
  const std::size_t n = s.rows();
  FlagDecomposition fd;
  fd.flag = inv;
  std::vector<Vec> cols;
  for (std::size_t i = 1; i < inv.size(); ++i) {
    for (const auto& v : inv[i].basis()) {
      DSubspace cur = DSubspace::span(alg, n, cols);
      if (!cur.contains(v)) cols.push_back(v);
    }
    fd.sizes.push_back(inv[i].dim() - inv[i - 1].dim());
  }
  const std::size_t d = alg->degree();
  fd.basis = DMatrix(alg, n, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t i = 0; i < n; ++i) fd.basis.set(i, c, component(cols[c], d, i));
  fd.conjugated = s.conjugated(fd.basis);
  std::size_t off = 0;
  for (std::size_t b = 0; b < fd.sizes.size(); ++b) {
    std::vector<DMatrix> gens;
    for (const auto& u : fd.conjugated.basis()) {
      for (std::size_t r = off + fd.sizes[b]; r < n; ++r)
        for (std::size_t c = off; c < off + fd.sizes[b]; ++c)
          if (!is_zero_vec(u.entry(r, c))) fail(Errc::Internal, "conjugated space is not block upper triangular");
      gens.push_back(u.block(off, off, fd.sizes[b], fd.sizes[b]));
    }
    fd.blocks.push_back(OperatorSpace::span(alg, fd.sizes[b], fd.sizes[b], gens));
    off += fd.sizes[b];
  }
  return fd;
}

FSubspace EV_D(const OperatorSpace& s, const Vec& x) {
  const Algebra& alg = *s.algebra();
  const std::size_t d = alg.degree();
  FSubspace sx = evaluate(s, x);
  std::vector<Vec> cols;
  for (std::size_t k = 0; k < d; ++k) cols.push_back(right_scale(alg, x, alg.basis(k)));
  Matrix xm = Matrix::from_cols(s.field(), cols, x.size());
  auto ann = sx.annihilator();
  if (ann.empty()) return FSubspace::full(s.field(), d);
  Matrix cond = Matrix::from_rows(s.field(), ann, x.size()) * xm;
  return FSubspace::span(s.field(), d, kernel(cond));
}

}  // namespace trivspec
