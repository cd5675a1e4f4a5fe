#include "g11/deform.hpp"

#include <algorithm>

namespace g11 {

namespace {

std::vector<std::array<unsigned, 3>> orders_of_degree(int d) {
  std::vector<std::array<unsigned, 3>> out;
  for (int a = d; a >= 0; --a)
    for (int b = d - a; b >= 0; --b) out.push_back({unsigned(a), unsigned(b), unsigned(d - a - b)});
  return out;
}

// Derivatives of the multiplicity-m conditions on g with respect to the
// affine coordinates (X, Y) of p: rows match singular_conditions.
Matrix point_rows(const Poly& g, const PlanePoint& p, int m) {
  const Field& F = g.field();
  auto alphas = orders_of_degree(m - 1);
  Matrix out(F, alphas.size(), 2);
  for (std::size_t r = 0; r < alphas.size(); ++r)
    for (std::size_t c = 0; c < 2; ++c) {
      auto o = alphas[r];
      ++o[c];
      out(r, c) = evaluate(partial_derivative(g, o), p.x);
    }
  return out;
}

Scalar det(Matrix a) {
  const Field& F = a.field();
  const std::size_t n = a.rows();
  Scalar d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
      d = F.neg(d);
    }
    d = F.mul(d, a(c, c));
    Scalar inv = F.inv(a(c, c));
    for (std::size_t r = c + 1; r < n; ++r) {
      Scalar f = F.mul(a(r, c), inv);
      if (!f) continue;
      for (std::size_t j = c; j < n; ++j) a(r, j) = F.sub(a(r, j), F.mul(f, a(c, j)));
    }
  }
  return d;
}

Matrix kernel_of(const Echelon& e) {
  const Field& F = e.reduced_basis().field();
  Matrix R = e.reduced_basis();
  auto piv = e.pivots();
  const std::size_t w = e.width();
  std::vector<bool> is_pivot(w, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> cols;
  for (std::size_t f = 0; f < w; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(w, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = F.neg(R(i, f));
    cols.push_back(std::move(v));
  }
  return Matrix::from_columns(F, w, cols);
}

std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

Poly from_coeffs(const RingPtr& R, const std::vector<Mono>& basis, std::span<const Scalar> x) {
  return poly_from_coefficients(R, basis, x);
}

}  // namespace

Matrix ninth_point_jacobian(const RingPtr& R, const std::vector<PlanePoint>& eight, const PlanePoint& r) {
  const Field& F = R->field();
  if (r.x[2] != 1) throw GenericityFailure("ninth point at infinity");
  auto cubics = linear_system(R, 3, {}, eight);
  if (cubics.size() != 2) throw GenericityFailure("eight points do not define a cubic pencil");
  ColumnSpaceSolver solver(condition_matrix(*R, 3, {}, eight));
  auto basis3 = graded_basis(*R, 3);
  Matrix G(F, 2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t c = 0; c < 2; ++c) G(i, c) = evaluate(partial_derivative(cubics[i], c), r.x);
  Scalar dg = F.sub(F.mul(G(0, 0), G(1, 1)), F.mul(G(0, 1), G(1, 0)));
  if (!dg) throw GenericityFailure("cubic pencil is singular at its ninth point");
  Scalar di = F.inv(dg);
  auto mono_at_r = singular_conditions(*R, r, 1, 3);
  Matrix J(F, 2, 16);
  for (std::size_t j = 0; j < 8; ++j)
    for (std::size_t c = 0; c < 2; ++c) {
      Scalar val[2];
      for (std::size_t i = 0; i < 2; ++i) {
        std::vector<Scalar> rhs(8, 0);
        rhs[j] = F.neg(evaluate(partial_derivative(cubics[i], c), eight[j].x));
        auto cdot = solver.solve(rhs);
        if (!cdot) throw GenericityFailure("cubic pencil does not deform");
        Scalar s = 0;
        for (std::size_t t = 0; t < basis3.size(); ++t) s = F.add(s, F.mul(mono_at_r(0, t), (*cdot)[t]));
        val[i] = F.neg(s);
      }
      // G * dR = val
      J(0, 2 * j + c) = F.mul(di, F.sub(F.mul(G(1, 1), val[0]), F.mul(G(0, 1), val[1])));
      J(1, 2 * j + c) = F.mul(di, F.sub(F.mul(G(0, 0), val[1]), F.mul(G(1, 0), val[0])));
    }
  return J;
}

SeveriTangentReport severi_tangent(const PlaneModel& model) {
  const auto& R = model.ring;
  const Field& F = R->field();
  const int d = model.degree;
  const Poly& f = model.form;
  auto basis = graded_basis(*R, d);
  const std::size_t N = basis.size();
  SeveriTangentReport rep;
  rep.m = static_cast<int>(model.extra.size());
  rep.octic = d == 8;
  rep.unknowns = N + 2 * model.specs.size();
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t s = 0; s < model.specs.size(); ++s) {
    const auto& sp = model.specs[s];
    if (sp.p.x[2] != 1) throw GenericityFailure("singular point at infinity");
    Matrix C = singular_conditions(*R, sp.p, sp.mult, d);
    Matrix D = point_rows(f, sp.p, sp.mult);
    for (std::size_t r = 0; r < C.rows(); ++r) {
      std::vector<Scalar> row(rep.unknowns, 0);
      std::copy(C.row(r).begin(), C.row(r).end(), row.begin());
      row[N + 2 * s] = D(r, 0);
      row[N + 2 * s + 1] = D(r, 1);
      rows.push_back(std::move(row));
    }
  }
  for (std::size_t l = 0; l < model.extra.size(); ++l) {
    const auto& r = model.extra[l];
    const auto& src = model.extra_sources.at(l);
    std::vector<PlanePoint> eight;
    for (int i : src) eight.push_back(model.specs[i].p);
    Matrix J = ninth_point_jacobian(R, eight, r);
    Matrix C = singular_conditions(*R, r, 1, d);
    Scalar gx = evaluate(partial_derivative(f, 0), r.x), gy = evaluate(partial_derivative(f, 1), r.x);
    std::vector<Scalar> row(rep.unknowns, 0);
    std::copy(C.row(0).begin(), C.row(0).end(), row.begin());
    for (std::size_t j = 0; j < 8; ++j)
      for (std::size_t c = 0; c < 2; ++c) {
        Scalar v = F.add(F.mul(gx, J(0, 2 * j + c)), F.mul(gy, J(1, 2 * j + c)));
        auto& slot = row[N + 2 * src[j] + c];
        slot = F.add(slot, v);
      }
    rows.push_back(std::move(row));
  }
  auto coeffs = coefficients_in(f, basis);
  std::vector<Scalar> norm(rep.unknowns, 0);
  for (std::size_t i = 0; i < N; ++i)
    if (coeffs[i]) {
      norm[i] = 1;
      break;
    }
  rows.push_back(norm);
  Matrix A(F, rows.size(), rep.unknowns);
  for (std::size_t i = 0; i < rows.size(); ++i) std::copy(rows[i].begin(), rows[i].end(), A.row(i).begin());
  rep.rows = rows.size();
  rep.kernel = kernel_basis(A);
  rep.kernel_dim = rep.kernel.cols();
  return rep;
}

// ---------------------------------------------------------------------------

std::vector<Poly> KodairaSpencerData::tuple(std::span<const Scalar> v) const {
  const std::size_t q = block();
  std::vector<Poly> out;
  for (std::size_t j = 0; j < gens.size(); ++j) out.push_back(A->element(2, v.subspan(j * q, q)));
  return out;
}

bool KodairaSpencerData::is_section(std::span<const Scalar> v) const { return section_span_->contains(v); }

KodairaSpencerData normal_space(const CanonicalCurve& c) {
  KodairaSpencerData ks;
  ks.A = std::make_shared<GradedQuotient>(c.ideal);
  ks.gens = c.ideal.gens();
  const auto& S = c.ring;
  const Field& F = S->field();
  const std::size_t n = S->nvars(), ng = ks.gens.size();
  const std::size_t q2 = ks.A->dim(2), q3 = ks.A->dim(3);
  const std::size_t width = ng * q2;

  auto basis3 = graded_basis(*S, 3);
  std::vector<std::vector<Scalar>> lcols;
  for (std::size_t j = 0; j < ng; ++j)
    for (std::size_t v = 0; v < n; ++v) lcols.push_back(coefficients_in(Poly::variable(S, v) * ks.gens[j], basis3));
  Matrix K = kernel_basis(Matrix::from_columns(F, basis3.size(), lcols));
  ks.syzygies = K.cols();

  std::vector<const Matrix*> mult(n);
  for (std::size_t v = 0; v < n; ++v) mult[v] = &ks.A->multiplication(v, 2);
  const std::uint64_t p = F.prime();
  Echelon E(F, width);
  std::vector<std::uint64_t> acc(width);
  std::vector<Scalar> row(width);
  for (std::size_t s = 0; s < K.cols(); ++s)
    for (std::size_t t = 0; t < q3; ++t) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t j = 0; j < ng; ++j)
        for (std::size_t v = 0; v < n; ++v) {
          const std::uint64_t coef = K(j * n + v, s);
          if (!coef) continue;
          auto mrow = mult[v]->row(t);
          for (std::size_t c = 0; c < q2; ++c) acc[j * q2 + c] += coef * mrow[c] % p;
        }
      for (std::size_t i = 0; i < width; ++i) row[i] = static_cast<Scalar>(acc[i] % p);
      E.insert(row);
    }
  ks.sections = kernel_of(E);

  auto sec = std::make_shared<Echelon>(F, width);
  for (std::size_t j = 0; j < ks.sections.cols(); ++j) sec->insert(ks.sections.column(j));
  ks.section_span_ = sec;

  std::vector<std::vector<Scalar>> triv;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<Scalar> v(width, 0);
      for (std::size_t j = 0; j < ng; ++j) {
        auto x = ks.A->coords(Poly::variable(S, a) * partial_derivative(ks.gens[j], b), 2);
        std::copy(x.begin(), x.end(), v.begin() + static_cast<long>(j * q2));
      }
      triv.push_back(std::move(v));
    }
  ks.trivial = column_basis(Matrix::from_columns(F, width, triv));
  for (std::size_t j = 0; j < ks.trivial.cols(); ++j)
    if (!ks.is_section(ks.trivial.column(j))) throw GenericityFailure("coordinate change outside the normal space");

  Echelon ext(F, width);
  for (std::size_t j = 0; j < ks.trivial.cols(); ++j) ext.insert(ks.trivial.column(j));
  std::vector<std::vector<Scalar>> comp;
  for (std::size_t j = 0; j < ks.sections.cols(); ++j) {
    auto col = ks.sections.column(j);
    if (ext.insert(col)) comp.push_back(std::move(col));
  }
  ks.complement = Matrix::from_columns(F, width, comp);
  return ks;
}

// ---------------------------------------------------------------------------

Matrix ObstructionMatrix::evaluate(std::span<const Scalar> b) const {
  Matrix out(parts.front().field(), parts.front().rows(), parts.front().cols());
  for (std::size_t t = 0; t < parts.size(); ++t)
    if (b[t]) out = out + parts[t].scaled(b[t]);
  return out;
}

std::vector<Scalar> ObstructionMatrix::entry(std::size_t i, std::size_t j) const {
  std::vector<Scalar> out;
  for (auto& P : parts) out.push_back(P(i, j));
  return out;
}

ObstructionMatrix obstruction_matrix(const CanonicalCurve& c, const KodairaSpencerData& ks, std::uint64_t seed,
                                     const std::vector<ScrollData>& scrolls) {
  std::mt19937_64 rng(seed);
  auto art = linear_section(c.ideal, 2, rng);
  const auto& T = art.ideal.ring();
  const Field& F = T->field();
  const std::size_t n = T->nvars();
  GradedQuotient A(art.ideal);
  const std::size_t a1 = A.dim(1), a2 = A.dim(2);
  if (a1 != n || A.dim(4) != 0) throw GenericityFailure("linear section is not a Gorenstein Artinian reduction");

  Matrix d6 = koszul_differential(A, 6, 0);
  Matrix d5 = koszul_differential(A, 5, 1);
  Matrix d4 = koszul_differential(A, 4, 2);

  ObstructionMatrix M;
  Echelon src(F, d5.cols());
  for (std::size_t j = 0; j < d6.cols(); ++j) src.insert(d6.column(j));
  const std::size_t b5 = src.rank();
  Matrix Z5 = kernel_basis(d5);
  M.beta_51 = static_cast<long long>(Z5.cols() - b5);
  std::vector<std::vector<Scalar>> reps;
  if (scrolls.empty()) {
    for (std::size_t j = 0; j < Z5.cols(); ++j) {
      auto col = Z5.column(j);
      if (src.insert(col)) reps.push_back(std::move(col));
    }
  } else {
    for (auto& s : scrolls) {
      std::vector<Poly> g;
      for (auto& m : s.minors) g.push_back(substitute(m, art.images));
      GradedQuotient As(Ideal(T, g));
      Matrix Zs = kernel_basis(koszul_differential(As, 5, 1));
      int count = 0;
      for (std::size_t j = 0; j < Zs.cols(); ++j) {
        auto col = Zs.column(j);
        if (src.insert(col)) {
          reps.push_back(std::move(col));
          M.blocks.push_back(s.pencil);
          ++count;
        }
      }
      if (count != 5)
        throw GenericityFailure("scroll of pencil " + std::to_string(s.pencil) + " contributes " + std::to_string(count) +
                                " extra syzygies");
    }
  }
  Matrix V = Matrix::from_columns(F, d5.cols(), reps);
  M.size = reps.size();

  Echelon tgt(F, d5.rows());
  for (std::size_t j = 0; j < d5.cols(); ++j) tgt.insert(d5.column(j));
  Matrix Z4 = kernel_basis(d4);
  std::vector<std::vector<Scalar>> beta;
  for (std::size_t j = 0; j < Z4.cols(); ++j) {
    auto col = Z4.column(j);
    if (tgt.insert(col)) beta.push_back(std::move(col));
  }
  M.beta_42 = static_cast<long long>(beta.size());
  Matrix Bt = Matrix::from_columns(F, d5.rows(), beta);
  Matrix LN = kernel_basis(d5.transpose()).transpose();  // functionals vanishing on boundaries
  Matrix Y = LN * Bt;
  Echelon rows(F, Y.cols());
  std::vector<std::size_t> pick;
  for (std::size_t i = 0; i < Y.rows() && pick.size() < beta.size(); ++i)
    if (rows.insert(Y.row(i))) pick.push_back(i);
  if (pick.size() != beta.size()) throw GenericityFailure("cannot coordinatize the target cohomology");
  auto cols = iota(Y.cols());
  auto all = iota(LN.cols());
  auto inv = solve(Y.submatrix(pick, cols), Matrix::identity(F, beta.size()));
  Matrix P = *inv.solution * LN.submatrix(pick, all);

  // deformed multiplication A_1 -> A_2
  auto T2 = graded_basis(*T, 2);
  std::vector<Poly> fbar;
  std::vector<std::vector<Scalar>> fcols;
  for (auto& g : ks.gens) {
    fbar.push_back(substitute(g, art.images));
    fcols.push_back(coefficients_in(fbar.back(), T2));
  }
  ColumnSpaceSolver fsolve(Matrix::from_columns(F, T2.size(), fcols));
  const auto& base1 = A.basis(1);
  std::vector<std::vector<std::vector<Scalar>>> G(n, std::vector<std::vector<Scalar>>(a1));
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t m = 0; m < a1; ++m) {
      Poly w = Poly::monomial(T, base1[m] * Mono::var(v));
      w = w - A.element(2, A.coords(w, 2));
      auto g = fsolve.solve(coefficients_in(w, T2));
      if (!g) throw GenericityFailure("quadric part of the Artinian ideal is not spanned by the curve quadrics");
      G[v][m] = *g;
    }
  const std::size_t ng = ks.gens.size();
  for (std::size_t t = 0; t < ks.complement.cols(); ++t) {
    auto h = ks.tuple(ks.complement.column(t));
    std::vector<std::vector<Scalar>> H;
    for (auto& hk : h) H.push_back(A.coords(substitute(hk, art.images), 2));
    std::vector<Matrix> dm;
    for (std::size_t v = 0; v < n; ++v) {
      Matrix D(F, a2, a1);
      for (std::size_t m = 0; m < a1; ++m)
        for (std::size_t k = 0; k < ng; ++k) {
          Scalar g = G[v][m][k];
          if (!g) continue;
          for (std::size_t r = 0; r < a2; ++r) D(r, m) = F.sub(D(r, m), F.mul(g, H[k][r]));
        }
      dm.push_back(std::move(D));
    }
    Matrix dprime = koszul_differential(F, n, 5, a1, a2, [&](std::size_t v) -> const Matrix& { return dm[v]; });
    Matrix Yt = dprime * V;
    if (!(d4 * Yt).is_zero()) throw std::logic_error("obstruction is not a cycle");
    M.parts.push_back(P * Yt);
  }
  return M;
}

std::size_t entry_span_dim(const ObstructionMatrix& M) {
  const Field& F = M.parts.front().field();
  Echelon e(F, M.parts.size());
  for (std::size_t i = 0; i < M.parts.front().rows(); ++i)
    for (std::size_t j = 0; j < M.parts.front().cols(); ++j) e.insert(M.entry(i, j));
  return e.rank();
}

FactorReport factor_M(const ObstructionMatrix& M, std::uint64_t seed) {
  FactorReport rep;
  const Field& F = M.parts.front().field();
  const std::size_t n = M.size, nb = M.parts.size();
  if (M.blocks.size() != n || n % 5 || static_cast<long long>(n) != M.beta_42) {
    rep.failure = "source basis is not a full set of scroll blocks";
    return rep;
  }
  const std::size_t k = n / 5;
  Matrix Nfull(F, n, n);
  auto rows = iota(n);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::size_t> cols{5 * i, 5 * i + 1, 5 * i + 2, 5 * i + 3, 5 * i + 4};
    std::vector<Matrix> blk;
    for (auto& P : M.parts) blk.push_back(P.submatrix(rows, cols));
    std::size_t t0 = 0;
    while (t0 < nb && blk[t0].is_zero()) ++t0;
    if (t0 == nb) {
      rep.failure = "block " + std::to_string(i) + " vanishes identically";
      return rep;
    }
    const Matrix& N = blk[t0];
    std::size_t r0 = 0, c0 = 0;
    bool found = false;
    for (std::size_t r = 0; r < n && !found; ++r)
      for (std::size_t c = 0; c < 5 && !found; ++c)
        if (N(r, c)) r0 = r, c0 = c, found = true;
    std::vector<Scalar> l(nb);
    for (std::size_t t = 0; t < nb; ++t) {
      l[t] = F.div(blk[t](r0, c0), N(r0, c0));
      if (!(blk[t] == N.scaled(l[t]))) {
        rep.failure = "block " + std::to_string(i) + " is not a constant matrix times one linear form";
        return rep;
      }
    }
    // l[t0] = 1 already; move the scale so the first nonzero coefficient is 1
    std::size_t first = 0;
    while (!l[first]) ++first;
    Scalar s = l[first];
    for (auto& x : l) x = F.div(x, s);
    Matrix Ns = N.scaled(s);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < 5; ++c) Nfull(r, 5 * i + c) = Ns(r, c);
    rep.forms.push_back(l);
    rep.w_ranks.push_back(n - rank(Ns));
  }
  rep.unit = det(Nfull);
  Echelon fe(F, nb);
  for (auto& l : rep.forms) fe.insert(l);
  rep.forms_rank = fe.rank();
  if (!rep.unit) {
    rep.failure = "constant part of the factorization is singular";
    return rep;
  }
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<Scalar> b(nb);
    for (auto& x : b) x = random_scalar(F, rng);
    Scalar rhs = rep.unit;
    for (auto& l : rep.forms) {
      Scalar v = 0;
      for (std::size_t t = 0; t < nb; ++t) v = F.add(v, F.mul(l[t], b[t]));
      rhs = F.mul(rhs, F.pow(v, 5));
    }
    if (det(M.evaluate(b)) == rhs) ++rep.det_checks;
  }
  rep.ok = rep.det_checks == 3;
  if (!rep.ok) rep.failure = "det M differs from unit * prod l_i^5 at a random point";
  return rep;
}

// ---------------------------------------------------------------------------

DifferentialRankReport differential_rank(const CanonicalCurve& c, const KodairaSpencerData& ks,
                                         const SeveriTangentReport& sev) {
  const PlaneModel& model = *c.model;
  const auto& R = model.ring;
  const auto& S = c.ring;
  const Field& F = R->field();
  const int d = model.degree, e = d - 3;
  const auto& adj = c.adjoints;
  const std::size_t g = adj.size();
  auto basis_d = graded_basis(*R, d);
  auto basis_e = graded_basis(*R, e);
  const std::size_t N = basis_d.size();

  std::vector<std::size_t> adj_specs;
  std::vector<SingularitySpec> adj_cond;
  for (std::size_t s = 0; s < model.specs.size(); ++s)
    if (model.specs[s].mult > 1) {
      adj_specs.push_back(s);
      adj_cond.push_back({model.specs[s].p, model.specs[s].mult - 1});
    }
  ColumnSpaceSolver adj_solver(condition_matrix(*R, e, adj_cond));
  std::vector<std::vector<Matrix>> adj_rows(g);
  for (std::size_t i = 0; i < g; ++i)
    for (auto& ac : adj_cond) adj_rows[i].push_back(point_rows(adj[i], ac.p, ac.mult));

  auto top = graded_basis(*R, 2 * e);
  auto low = graded_basis(*R, 2 * e - d);
  std::vector<std::vector<Scalar>> qcols;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i; j < g; ++j) {
      qcols.push_back(coefficients_in(adj[i] * adj[j], top));
      pairs.push_back({i, j});
    }
  for (auto& m : low) qcols.push_back(coefficients_in(model.form * Poly::monomial(R, m), top));
  ColumnSpaceSolver qsolver(Matrix::from_columns(F, top.size(), qcols));

  std::vector<Poly> cof;
  for (auto& q : ks.gens) {
    auto co = divide_exact(substitute(q, adj), model.form);
    if (!co) throw std::logic_error("quadric does not vanish on the plane model");
    cof.push_back(*co);
  }
  const std::size_t q2 = ks.block();
  const std::size_t width = ks.gens.size() * q2;

  auto push = [&](const Poly& df, const std::vector<std::array<Scalar, 2>>& dP) {
    std::vector<Poly> da;
    for (std::size_t i = 0; i < g; ++i) {
      std::vector<Scalar> rhs;
      for (std::size_t s = 0; s < adj_specs.size(); ++s) {
        const Matrix& D = adj_rows[i][s];
        const auto& dp = dP[adj_specs[s]];
        for (std::size_t r = 0; r < D.rows(); ++r)
          rhs.push_back(F.neg(F.add(F.mul(D(r, 0), dp[0]), F.mul(D(r, 1), dp[1]))));
      }
      auto x = adj_solver.solve(rhs);
      if (!x) throw std::logic_error("adjoint system does not deform");
      da.push_back(from_coeffs(R, basis_e, *x));
    }
    std::vector<Scalar> h(width, 0);
    for (std::size_t j = 0; j < ks.gens.size(); ++j) {
      Poly rhs = df * cof[j];
      for (auto& t : ks.gens[j].terms()) {
        std::size_t a = 0, b = 0;
        bool first = true;
        for (std::size_t v = 0; v < g; ++v)
          for (unsigned r = 0; r < t.m.e[v]; ++r) {
            if (first) a = v, first = false;
            else b = v;
          }
        rhs = rhs - (da[a] * adj[b] + adj[a] * da[b]).scaled(t.c);
      }
      auto x = qsolver.solve(coefficients_in(rhs, top));
      if (!x) throw std::logic_error("quadric deformation system is inconsistent");
      std::vector<Term> terms;
      for (std::size_t u = 0; u < pairs.size(); ++u)
        if ((*x)[u]) terms.push_back({Mono::var(pairs[u].first) * Mono::var(pairs[u].second), (*x)[u]});
      Poly dq(S, terms);
      auto co = ks.A->coords(dq, 2);
      std::copy(co.begin(), co.end(), h.begin() + static_cast<long>(j * q2));
    }
    return h;
  };

  DifferentialRankReport rep;
  rep.tangent_dim = sev.kernel_dim;
  std::vector<std::vector<Scalar>> img;
  rep.image_in_normal_space = true;
  for (std::size_t col = 0; col < sev.kernel.cols(); ++col) {
    auto v = sev.kernel.column(col);
    Poly df = from_coeffs(R, basis_d, std::span<const Scalar>(v).subspan(0, N));
    std::vector<std::array<Scalar, 2>> dP;
    for (std::size_t s = 0; s < model.specs.size(); ++s) dP.push_back({v[N + 2 * s], v[N + 2 * s + 1]});
    img.push_back(push(df, dP));
    if (!ks.is_section(img.back())) rep.image_in_normal_space = false;
  }
  Matrix I = Matrix::from_columns(F, width, img);
  rep.image_dim = rank(I);
  const std::size_t tr = ks.trivial.cols();
  const std::size_t joint = rank(I.hstack(ks.trivial));
  rep.intersection = rep.image_dim + tr - joint;
  rep.rank = joint - tr;

  // infinitesimal plane automorphisms x -> x + eps E_ab x
  std::vector<std::vector<Scalar>> pgl;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      Poly df = -(Poly::variable(R, b) * partial_derivative(model.form, a));
      std::vector<std::array<Scalar, 2>> dP;
      for (auto& sp : model.specs) {
        std::array<Scalar, 3> w{0, 0, 0};
        w[a] = sp.p.x[b];
        dP.push_back({F.sub(w[0], F.mul(sp.p.x[0], w[2])), F.sub(w[1], F.mul(sp.p.x[1], w[2]))});
      }
      pgl.push_back(push(df, dP));
    }
  Matrix Pg = Matrix::from_columns(F, width, pgl);
  rep.pgl_rank = rank(Pg);
  rep.pgl_in_intersection = rank(I.hstack(Pg)) == rep.image_dim && rank(ks.trivial.hstack(Pg)) == tr;
  return rep;
}

}  // namespace g11
