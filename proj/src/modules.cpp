#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "g11/graded.hpp"
#include "g11/groebner.hpp"

namespace g11 {

FreeModuleMap::FreeModuleMap(RingPtr R, std::vector<int> tgt, std::vector<int> src)
    : ring(std::move(R)), src_deg(std::move(src)), tgt_deg(std::move(tgt)) {
  entries.assign(tgt_deg.size(), std::vector<Poly>(src_deg.size(), Poly(ring)));
}

std::vector<Poly> FreeModuleMap::column(std::size_t j) const {
  std::vector<Poly> c;
  for (std::size_t i = 0; i < rows(); ++i) c.push_back(entries[i][j]);
  return c;
}

void FreeModuleMap::set_column(std::size_t j, const std::vector<Poly>& v) {
  for (std::size_t i = 0; i < rows(); ++i) entries[i][j] = v.at(i);
}

bool FreeModuleMap::is_zero() const {
  for (auto& r : entries)
    for (auto& e : r)
      if (!e.is_zero()) return false;
  return true;
}

bool FreeModuleMap::is_graded() const {
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) {
      const Poly& e = entries[i][j];
      if (e.is_zero()) continue;
      if (!e.is_homogeneous() || e.degree() != src_deg[j] - tgt_deg[i]) return false;
    }
  return true;
}

bool FreeModuleMap::has_unit_entry() const {
  for (auto& r : entries)
    for (auto& e : r)
      if (!e.is_zero() && e.degree() == 0) return true;
  return false;
}

FreeModuleMap FreeModuleMap::row(const RingPtr& R, const std::vector<Poly>& f) {
  std::vector<int> src;
  for (auto& g : f) src.push_back(std::max(g.degree(), 0));
  FreeModuleMap m(R, {0}, src);
  for (std::size_t j = 0; j < f.size(); ++j) m.entries[0][j] = f[j];
  return m;
}

FreeModuleMap FreeModuleMap::identity(const RingPtr& R, const std::vector<int>& degs) {
  FreeModuleMap m(R, degs, degs);
  for (std::size_t i = 0; i < degs.size(); ++i) m.entries[i][i] = Poly::constant(R, 1);
  return m;
}

FreeModuleMap FreeModuleMap::columns(const std::vector<std::size_t>& idx) const {
  std::vector<int> src;
  for (auto j : idx) src.push_back(src_deg.at(j));
  FreeModuleMap m(ring, tgt_deg, src);
  for (std::size_t k = 0; k < idx.size(); ++k) m.set_column(k, column(idx[k]));
  return m;
}

FreeModuleMap compose(const FreeModuleMap& a, const FreeModuleMap& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("compose: shape mismatch");
  FreeModuleMap m(a.ring, a.tgt_deg, b.src_deg);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.entries[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b.entries[k][j].is_zero()) m.entries[i][j] = m.entries[i][j] + a.entries[i][k] * b.entries[k][j];
    }
  return m;
}

FreeModuleMap operator+(const FreeModuleMap& a, const FreeModuleMap& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("sum: shape mismatch");
  FreeModuleMap m = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m.entries[i][j] = a.entries[i][j] + b.entries[i][j];
  return m;
}

FreeModuleMap operator-(const FreeModuleMap& a) {
  FreeModuleMap m = a;
  for (auto& r : m.entries)
    for (auto& e : r) e = -e;
  return m;
}

// ---------------------------------------------------------------------------

GradedPiece::GradedPiece(RingPtr R, std::vector<int> shifts, int d) : R_(std::move(R)), shifts_(std::move(shifts)), d_(d) {
  for (std::size_t c = 0; c < shifts_.size(); ++c) {
    offset_.push_back(size_);
    int e = d_ - shifts_[c];
    std::vector<Mono> b = e >= 0 ? graded_basis(*R_, static_cast<unsigned>(e)) : std::vector<Mono>{};
    std::unordered_map<Mono, std::size_t, MonoHash> idx;
    for (std::size_t k = 0; k < b.size(); ++k) idx.emplace(b[k], k);
    size_ += b.size();
    basis_.push_back(std::move(b));
    index_.push_back(std::move(idx));
  }
}

std::vector<Scalar> GradedPiece::coords(const std::vector<Poly>& v) const {
  std::vector<Scalar> out(size_, 0);
  for (std::size_t c = 0; c < v.size(); ++c)
    for (auto& t : v[c].terms()) {
      Mono m = t.m;
      m.comp = 0;
      auto it = index_[c].find(m);
      if (it == index_[c].end()) throw std::invalid_argument("graded piece: term of wrong degree");
      out[offset_[c] + it->second] = t.c;
    }
  return out;
}

std::vector<Poly> GradedPiece::element(std::span<const Scalar> x) const {
  std::vector<Poly> out;
  for (std::size_t c = 0; c < shifts_.size(); ++c) {
    std::vector<Term> t;
    for (std::size_t k = 0; k < basis_[c].size(); ++k)
      if (Scalar s = x[offset_[c] + k]) t.push_back({basis_[c][k], s});
    out.emplace_back(R_, std::move(t));
  }
  return out;
}

std::pair<std::size_t, Mono> GradedPiece::locate(std::size_t flat) const {
  std::size_t c = static_cast<std::size_t>(std::upper_bound(offset_.begin(), offset_.end(), flat) - offset_.begin()) - 1;
  while (basis_[c].empty() || flat - offset_[c] >= basis_[c].size()) ++c;
  return {c, basis_[c][flat - offset_[c]]};
}

Matrix map_matrix(const FreeModuleMap& F, int d) {
  GradedPiece src(F.ring, F.src_deg, d), tgt(F.ring, F.tgt_deg, d);
  std::vector<std::vector<Scalar>> cols;
  cols.reserve(src.size());
  for (std::size_t j = 0; j < F.cols(); ++j) {
    auto col = F.column(j);
    for (auto& m : src.basis(j)) {
      std::vector<Poly> img;
      for (auto& e : col) img.push_back(e.times_term(m, 1));
      cols.push_back(tgt.coords(img));
    }
  }
  return Matrix::from_columns(F.ring->field(), tgt.size(), cols);
}

std::vector<std::vector<Scalar>> submodule_piece(const RingPtr& R, const std::vector<int>& shifts,
                                                 const std::vector<std::vector<Poly>>& gens,
                                                 const std::vector<int>& gen_deg, int d) {
  GradedPiece P(R, shifts, d);
  std::vector<std::vector<Scalar>> out;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    int e = d - gen_deg[g];
    if (e < 0) continue;
    for (auto& m : graded_basis(*R, static_cast<unsigned>(e))) {
      std::vector<Poly> v;
      for (auto& x : gens[g]) v.push_back(x.times_term(m, 1));
      out.push_back(P.coords(v));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

FreeModuleMap syzygies_linear_algebra(const FreeModuleMap& F, int lo, int hi) {
  const Field& K = F.ring->field();
  std::vector<std::vector<Poly>> gens;
  std::vector<int> gdeg;
  for (int d = lo; d <= hi; ++d) {
    GradedPiece src(F.ring, F.src_deg, d);
    if (src.size() == 0) continue;
    Matrix A = map_matrix(F, d);
    Matrix Kb = kernel_basis(A);
    if (Kb.cols() == 0) continue;
    Echelon span(K, src.size());
    for (auto& v : submodule_piece(F.ring, F.src_deg, gens, gdeg, d)) span.insert(v);
    for (std::size_t c = 0; c < Kb.cols(); ++c) {
      auto v = Kb.column(c);
      if (span.insert(v)) {
        gens.push_back(src.element(v));
        gdeg.push_back(d);
      }
    }
  }
  FreeModuleMap out(F.ring, F.src_deg, gdeg);
  for (std::size_t j = 0; j < gens.size(); ++j) out.set_column(j, gens[j]);
  return out;
}

FreeModuleMap prune_generators(const FreeModuleMap& F) {
  if (!F.is_graded()) return F;
  std::vector<std::size_t> order(F.cols());
  for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return F.src_deg[a] < F.src_deg[b]; });
  std::vector<std::vector<Poly>> kept;
  std::vector<int> kdeg;
  std::vector<std::size_t> kidx;
  std::map<int, Echelon> pieces;
  for (auto j : order) {
    auto col = F.column(j);
    if (std::all_of(col.begin(), col.end(), [](const Poly& p) { return p.is_zero(); })) continue;
    int d = F.src_deg[j];
    auto it = pieces.find(d);
    if (it == pieces.end()) {
      GradedPiece P(F.ring, F.tgt_deg, d);
      Echelon e(F.ring->field(), P.size());
      for (auto& v : submodule_piece(F.ring, F.tgt_deg, kept, kdeg, d)) e.insert(v);
      it = pieces.emplace(d, std::move(e)).first;
    }
    GradedPiece P(F.ring, F.tgt_deg, d);
    if (it->second.insert(P.coords(col))) {
      kept.push_back(col);
      kdeg.push_back(d);
      kidx.push_back(j);
    }
  }
  return F.columns(kidx);
}

FreeModuleMap syzygies(const FreeModuleMap& F, int max_degree) {
  const RingPtr& R = F.ring;
  const std::size_t r = F.rows(), n = F.cols();
  if (n == 0) return FreeModuleMap(R, {}, {});
  std::vector<int> shifts = F.tgt_deg;
  shifts.insert(shifts.end(), F.src_deg.begin(), F.src_deg.end());
  RingPtr M = R->with_module_order(shifts, r);
  std::vector<Poly> gens;
  for (std::size_t j = 0; j < n; ++j) {
    Mono e;
    e.comp = static_cast<std::uint16_t>(r + j);
    Poly v = Poly::monomial(M, e, 1);
    for (std::size_t i = 0; i < r; ++i) v = v + in_component(F.entries[i][j], M, i);
    gens.push_back(v);
  }
  GroebnerOptions opt;
  opt.max_sugar = max_degree;
  std::vector<std::vector<Poly>> syz;
  std::vector<int> sdeg;
  for (auto& g : groebner(gens, opt)) {
    if (g.lead().m.comp < r) continue;
    std::vector<std::vector<Term>> parts(n);
    for (auto& t : g.terms()) {
      Mono m = t.m;
      std::size_t c = m.comp - r;
      m.comp = 0;
      parts[c].push_back({m, t.c});
    }
    std::vector<Poly> col;
    for (auto& p : parts) col.emplace_back(R, std::move(p));
    syz.push_back(std::move(col));
    sdeg.push_back(g.lead().m.deg + M->shift(g.lead().m.comp));
  }
  FreeModuleMap out(R, F.src_deg, sdeg);
  for (std::size_t j = 0; j < syz.size(); ++j) out.set_column(j, syz[j]);
  return prune_generators(out);
}

LiftResult lift_through(const FreeModuleMap& G, const FreeModuleMap& B) {
  if (G.tgt_deg != B.tgt_deg) throw std::invalid_argument("lift_through: targets differ");
  LiftResult res;
  FreeModuleMap X(G.ring, G.src_deg, B.src_deg);
  std::map<int, std::pair<GradedPiece, ColumnSpaceSolver>> cache;
  for (std::size_t j = 0; j < B.cols(); ++j) {
    auto col = B.column(j);
    if (std::all_of(col.begin(), col.end(), [](const Poly& p) { return p.is_zero(); })) continue;
    int d = B.src_deg[j];
    auto it = cache.find(d);
    if (it == cache.end()) {
      it = cache.emplace(std::piecewise_construct, std::forward_as_tuple(d),
                         std::forward_as_tuple(GradedPiece(G.ring, G.src_deg, d), ColumnSpaceSolver(map_matrix(G, d))))
               .first;
    }
    GradedPiece tgt(G.ring, G.tgt_deg, d);
    auto x = it->second.second.solve(tgt.coords(col));
    if (!x) {
      res.failed_column = j;
      return res;
    }
    X.set_column(j, it->second.first.element(*x));
  }
  res.X = std::move(X);
  return res;
}

}  // namespace g11
