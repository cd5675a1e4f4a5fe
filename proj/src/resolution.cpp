#include "g11/resolution.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace g11 {

std::string BettiTable::to_grid() const {
  int maxi = 0, minr = 0, maxr = 0;
  bool first = true;
  for (auto& [k, v] : entries) {
    int r = k.second - k.first;
    maxi = std::max(maxi, k.first);
    if (first) minr = maxr = r;
    minr = std::min(minr, r);
    maxr = std::max(maxr, r);
    first = false;
  }
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head{""}, total{"total:"};
  for (int i = 0; i <= maxi; ++i) {
    head.push_back(std::to_string(i));
    long long t = 0;
    for (auto& [k, v] : entries)
      if (k.first == i) t += v;
    total.push_back(std::to_string(t));
  }
  cells.push_back(head);
  cells.push_back(total);
  for (int r = minr; r <= maxr; ++r) {
    std::vector<std::string> row{std::to_string(r) + ":"};
    for (int i = 0; i <= maxi; ++i) {
      long long v = get(i, i + r);
      row.push_back(v ? std::to_string(v) : ".");
    }
    cells.push_back(row);
  }
  std::vector<std::size_t> w(maxi + 2, 0);
  for (auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) w[c] = std::max(w[c], row[c].size());
  std::ostringstream os;
  for (auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ' ';
      os << std::string(w[c] - row[c].size(), ' ') << row[c];
    }
    os << '\n';
  }
  return os.str();
}

std::vector<int> Resolution::degrees(std::size_t k) const {
  if (k == 0) return {0};
  return maps.at(k - 1).src_deg;
}

Resolution resolve(const Ideal& I, std::size_t length, int max_degree) {
  Resolution R;
  if (length == 0 || I.gens().empty()) return R;
  R.maps.push_back(prune_generators(FreeModuleMap::row(I.ring(), I.gens())));
  while (R.maps.size() < length) {
    FreeModuleMap s = syzygies(R.maps.back(), max_degree);
    if (s.cols() == 0) break;
    R.maps.push_back(std::move(s));
  }
  R.minimal = std::all_of(R.maps.begin(), R.maps.end(), [](const FreeModuleMap& m) { return m.is_graded() && !m.has_unit_entry(); });
  return R;
}

bool is_complex(const Resolution& R) {
  for (std::size_t k = 0; k + 1 < R.maps.size(); ++k)
    if (!compose(R.maps[k], R.maps[k + 1]).is_zero()) return false;
  return true;
}

namespace {

void erase_row(FreeModuleMap& m, std::size_t i) {
  m.entries.erase(m.entries.begin() + static_cast<long>(i));
  m.tgt_deg.erase(m.tgt_deg.begin() + static_cast<long>(i));
}

void erase_col(FreeModuleMap& m, std::size_t j) {
  for (auto& r : m.entries) r.erase(r.begin() + static_cast<long>(j));
  m.src_deg.erase(m.src_deg.begin() + static_cast<long>(j));
}

}  // namespace

Resolution minimalize(const Resolution& R) {
  Resolution out = R;
  auto& d = out.maps;
  for (std::size_t k = 0; k < d.size(); ++k) {
    for (;;) {
      FreeModuleMap& m = d[k];
      std::size_t pi = m.rows(), pj = m.cols();
      for (std::size_t i = 0; i < m.rows() && pi == m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
          if (!m.at(i, j).is_zero() && m.at(i, j).degree() == 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == m.rows()) break;
      const Field& F = m.ring->field();
      const Scalar uinv = F.inv(m.at(pi, pj).lead().c);
      // clear row pi by column operations; record them on the next map's rows
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (j == pj || m.at(pi, j).is_zero()) continue;
        Poly c = m.at(pi, j).scaled(uinv);
        for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = m.at(i, j) - c * m.at(i, pj);
        if (k + 1 < d.size()) {
          FreeModuleMap& n = d[k + 1];
          for (std::size_t s = 0; s < n.cols(); ++s) n.at(pj, s) = n.at(pj, s) + c * n.at(j, s);
        }
      }
      // clear column pj by row operations; record them on the previous map's columns
      for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i == pi || m.at(i, pj).is_zero()) continue;
        Poly c = m.at(i, pj).scaled(uinv);
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - c * m.at(pi, j);
        if (k > 0) {
          FreeModuleMap& p = d[k - 1];
          for (std::size_t r = 0; r < p.rows(); ++r) p.at(r, pi) = p.at(r, pi) + c * p.at(r, i);
        }
      }
      erase_row(m, pi);
      erase_col(m, pj);
      if (k + 1 < d.size()) erase_row(d[k + 1], pj);
      if (k > 0) erase_col(d[k - 1], pi);
    }
  }
  while (!d.empty() && d.back().cols() == 0) d.pop_back();
  out.minimal = true;
  return out;
}

BettiTable betti_table(const Resolution& R) {
  BettiTable b;
  b.set(0, 0, 1);
  for (std::size_t k = 0; k < R.maps.size(); ++k)
    for (int deg : R.maps[k].src_deg) b.set(static_cast<int>(k) + 1, deg, b.get(static_cast<int>(k) + 1, deg) + 1);
  return b;
}

std::vector<FreeModuleMap> chain_map(const Resolution& src, const Resolution& tgt, const FreeModuleMap& start) {
  std::vector<FreeModuleMap> V{start};
  const std::size_t L = std::min(src.length(), tgt.length());
  for (std::size_t k = 1; k <= L; ++k) {
    FreeModuleMap rhs = compose(V.back(), src.maps[k - 1]);
    auto l = lift_through(tgt.maps[k - 1], rhs);
    if (!l.ok()) throw std::runtime_error("chain_map: lifting failed at position " + std::to_string(k));
    V.push_back(std::move(*l.X));
  }
  return V;
}

// ---------------------------------------------------------------------------

GradedQuotient::GradedQuotient(const Ideal& I) : I_(I) { I_.gb(); }

const std::vector<Mono>& GradedQuotient::basis(int d) const {
  auto it = basis_.find(d);
  if (it != basis_.end()) return it->second;
  std::vector<Mono> b;
  if (d >= 0)
    for (auto& m : graded_basis(*I_.ring(), static_cast<unsigned>(d))) {
      bool standard = true;
      for (auto& g : I_.gb())
        if (g.lead().m.divides(m)) {
          standard = false;
          break;
        }
      if (standard) b.push_back(m);
    }
  auto& idx = index_[d];
  for (std::size_t k = 0; k < b.size(); ++k) idx.emplace(b[k], k);
  return basis_.emplace(d, std::move(b)).first->second;
}

std::vector<Scalar> GradedQuotient::coords(const Poly& f, int d) const {
  const auto& b = basis(d);
  std::vector<Scalar> x(b.size(), 0);
  const auto& idx = index_.at(d);
  const Poly r = normal_form(f, I_.gb());
  for (auto& t : r.terms()) {
    auto it = idx.find(t.m);
    if (it == idx.end()) throw std::invalid_argument("GradedQuotient::coords: wrong degree");
    x[it->second] = t.c;
  }
  return x;
}

Poly GradedQuotient::element(int d, std::span<const Scalar> x) const {
  return poly_from_coefficients(I_.ring(), basis(d), x);
}

const Matrix& GradedQuotient::multiplication(std::size_t v, int d) const {
  auto key = std::make_pair(v, d);
  auto it = mult_.find(key);
  if (it != mult_.end()) return it->second;
  const auto& src = basis(d);
  basis(d + 1);
  std::vector<std::vector<Scalar>> cols;
  for (auto& m : src) cols.push_back(coords(Poly::monomial(I_.ring(), m * Mono::var(v)), d + 1));
  return mult_.emplace(key, Matrix::from_columns(I_.ring()->field(), dim(d + 1), cols)).first->second;
}

std::vector<std::uint32_t> wedge_basis(std::size_t n, std::size_t i) {
  std::vector<std::uint32_t> out;
  if (i > n) return out;
  std::vector<std::size_t> c(i);
  for (std::size_t k = 0; k < i; ++k) c[k] = k;
  for (;;) {
    std::uint32_t m = 0;
    for (auto x : c) m |= 1u << x;
    out.push_back(m);
    std::size_t k = i;
    while (k > 0 && c[k - 1] == n - i + k - 1) --k;
    if (k == 0) break;
    ++c[k - 1];
    for (std::size_t l = k; l < i; ++l) c[l] = c[l - 1] + 1;
  }
  return out;
}

Matrix koszul_differential(const Field& F, std::size_t n, std::size_t i, std::size_t ds, std::size_t dt,
                           const std::function<const Matrix&(std::size_t)>& mult) {
  auto src = wedge_basis(n, i);
  auto tgt = wedge_basis(n, i - 1);
  Matrix M(F, tgt.size() * dt, src.size() * ds);
  if (ds == 0 || dt == 0) return M;
  std::unordered_map<std::uint32_t, std::size_t> tindex;
  for (std::size_t k = 0; k < tgt.size(); ++k) tindex.emplace(tgt[k], k);
  for (std::size_t s = 0; s < src.size(); ++s) {
    int pos = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (!(src[s] >> v & 1u)) continue;
      const std::size_t t = tindex.at(src[s] & ~(1u << v));
      const Matrix& mul = mult(v);
      const bool neg = pos % 2;
      for (std::size_t r = 0; r < dt; ++r)
        for (std::size_t c = 0; c < ds; ++c) {
          Scalar x = mul(r, c);
          if (x) M(t * dt + r, s * ds + c) = neg ? F.neg(x) : x;
        }
      ++pos;
    }
  }
  return M;
}

Matrix koszul_differential(const GradedQuotient& A, std::size_t i, int q) {
  const std::size_t n = A.ideal().ring()->nvars();
  const Field& F = A.ideal().ring()->field();
  return koszul_differential(F, n, i, A.dim(q), A.dim(q + 1),
                             [&](std::size_t v) -> const Matrix& { return A.multiplication(v, q); });
}

long long koszul_betti(const GradedQuotient& A, int i, int j) {
  const std::size_t n = A.ideal().ring()->nvars();
  const int q = j - i;
  if (i < 0 || q < 0 || static_cast<std::size_t>(i) > n) return 0;
  const long long dimC = static_cast<long long>(binomial(n, static_cast<std::size_t>(i)) * A.dim(q));
  if (dimC == 0) return 0;
  long long r_out = i >= 1 ? static_cast<long long>(rank(koszul_differential(A, static_cast<std::size_t>(i), q))) : 0;
  long long r_in = q >= 1 && static_cast<std::size_t>(i) + 1 <= n
                       ? static_cast<long long>(rank(koszul_differential(A, static_cast<std::size_t>(i) + 1, q - 1)))
                       : 0;
  return dimC - r_out - r_in;
}

long long koszul_betti(const Ideal& I, int i, int j) { return koszul_betti(GradedQuotient(I), i, j); }

LinearSection linear_section(const Ideal& I, std::size_t cuts, std::mt19937_64& rng) {
  const RingPtr& R = I.ring();
  const Field& F = R->field();
  const std::size_t n = R->nvars();
  if (cuts >= n) throw std::invalid_argument("linear_section: too many cuts");
  const std::size_t m = n - cuts;
  std::vector<std::string> names(R->names().begin(), R->names().begin() + static_cast<long>(m));
  auto T = Ring::make(F, names);
  LinearSection out;
  for (std::size_t i = 0; i < m; ++i) out.images.push_back(Poly::variable(T, i));
  for (std::size_t c = 0; c < cuts; ++c) {
    std::vector<Term> t;
    for (std::size_t i = 0; i < m; ++i) t.push_back({Mono::var(i), random_scalar(F, rng)});
    out.images.emplace_back(T, std::move(t));
  }
  std::vector<Poly> g;
  for (auto& f : I.gens()) g.push_back(substitute(f, out.images));
  out.ideal = Ideal(T, std::move(g));
  return out;
}

}  // namespace g11
