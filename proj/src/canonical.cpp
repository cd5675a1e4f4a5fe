#include "g11/canonical.hpp"

#include <algorithm>

namespace g11 {

namespace {

// Multiplicity of a pencil at p (minimum over the two generators).
int pencil_multiplicity(const PencilSpec& pc, const PlanePoint& p) {
  return std::min(multiplicity_at(pc.s0, p), multiplicity_at(pc.s1, p));
}

Poly linear_from_coeffs(const RingPtr& S, std::span<const Scalar> c) {
  std::vector<Term> t;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i]) t.push_back({Mono::var(i), c[i]});
  return Poly(S, t);
}

std::vector<Scalar> linear_coeffs(const Poly& l, std::size_t n) {
  std::vector<Scalar> out(n, 0);
  for (auto& t : l.terms())
    for (std::size_t i = 0; i < n; ++i)
      if (t.m.e[i]) out[i] = t.c;
  return out;
}

// Adjoint combinations vanishing on the moving part of the fiber s = 0.
std::optional<std::vector<Poly>> fiber_span(const CanonicalCurve& c, const Poly& s,
                                            const std::vector<SingularitySpec>& base) {
  const auto& R = c.model->ring;
  Ideal J(R, {c.model->form, s});
  for (auto& b : base) J = saturate(J, Ideal(R, lines_through(R, b.p)));
  auto h = hilbert(J);
  if (h.projective_dim() != 0 || h.degree != 6) return std::nullopt;
  const auto& G = J.gb();
  std::vector<Poly> nfs;
  std::vector<Mono> monos;
  for (auto& a : c.adjoints) {
    nfs.push_back(normal_form(a, G));
    for (auto& t : nfs.back().terms())
      monos.push_back(t.m);
  }
  std::sort(monos.begin(), monos.end(), [&](const Mono& x, const Mono& y) { return R->compare(x, y) > 0; });
  monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
  Matrix A(R->field(), monos.size(), nfs.size());
  for (std::size_t j = 0; j < nfs.size(); ++j) {
    auto col = coefficients_in(nfs[j], monos);
    for (std::size_t i = 0; i < monos.size(); ++i) A(i, j) = col[i];
  }
  auto K = kernel_basis(A);
  if (K.cols() != 6) return std::nullopt;
  std::vector<Poly> out;
  for (std::size_t j = 0; j < K.cols(); ++j) out.push_back(linear_from_coeffs(c.ring, K.column(j)));
  return out;
}

Matrix span_matrix(const std::vector<Poly>& forms, std::size_t n) {
  std::vector<std::vector<Scalar>> cols;
  for (auto& f : forms) cols.push_back(linear_coeffs(f, n));
  return Matrix::from_columns(forms.front().field(), n, cols);
}

}  // namespace

std::optional<Poly> CanonicalCurve::linear_form(const Poly& adjoint) const {
  auto bc = coordinates_in_basis(adjoint, adjoints);
  if (!bc.ok()) return std::nullopt;
  return linear_from_coeffs(ring, *bc.coords);
}

std::vector<Poly> adjoint_basis(const PlaneModel& m) {
  std::vector<SingularitySpec> adj;
  for (auto& s : m.specs)
    if (s.mult > 1) adj.push_back({s.p, s.mult - 1});
  auto out = linear_system(m.ring, m.degree - 3, adj);
  if (out.size() != static_cast<std::size_t>(m.expected_genus))
    throw GenericityFailure("adjoint system has dimension " + std::to_string(out.size()));
  return out;
}

CanonicalCurve canonical_ideal(const PlaneModel& m) {
  CanonicalCurve c;
  c.model = std::make_shared<const PlaneModel>(m);
  c.adjoints = adjoint_basis(m);
  const std::size_t g = c.adjoints.size();
  const Field& F = m.ring->field();
  c.ring = Ring::make(F, g);
  const int e = m.degree - 3;
  auto top = graded_basis(*m.ring, 2 * e);
  std::vector<std::vector<Scalar>> cols;
  std::vector<Mono> quad;
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i; j < g; ++j) {
      cols.push_back(coefficients_in(c.adjoints[i] * c.adjoints[j], top));
      quad.push_back(Mono::var(i) * Mono::var(j));
    }
  for (auto& mono : graded_basis(*m.ring, 2 * e - m.degree))
    cols.push_back(coefficients_in(m.form * Poly::monomial(m.ring, mono), top));
  auto K = kernel_basis(Matrix::from_columns(F, top.size(), cols));
  std::vector<std::size_t> rows(quad.size());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  std::vector<std::size_t> all(K.cols());
  for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
  auto Q = column_basis(K.submatrix(rows, all));
  std::vector<Poly> gens;
  for (std::size_t j = 0; j < Q.cols(); ++j) gens.push_back(poly_from_coefficients(c.ring, quad, Q.column(j)));
  const std::size_t expect = (g - 2) * (g - 3) / 2;
  if (gens.size() != expect)
    throw GenericityFailure("canonical curve has " + std::to_string(gens.size()) + " quadrics");
  c.ideal = Ideal(c.ring, std::move(gens));
  return c;
}

CanonicalCurve canonical_curve(int k, const Field& F, std::uint64_t seed, int retries) {
  std::string last;
  for (int t = 0; t < std::max(retries, 1); ++t) {
    std::uint64_t s = t == 0 ? seed : std::mt19937_64(seed ^ (0x5851f42d4c957f2dull * t))();
    auto m = random_model(k, F, s, retries);
    m.seed = seed;
    m.attempts += t;
    try {
      auto c = canonical_ideal(m);
      for (int i = 0; i < static_cast<int>(m.pencils.size()); ++i)
        if (m.pencils[i].kind != PencilKind::FourSecant && !pencil_sections(c, i).type_one())
          throw GenericityFailure(m.pencils[i].label + " is not of type I");
      return c;
    } catch (const GenericityFailure& e) {
      last = e.what();
    }
  }
  throw RetryExhausted("no canonical model after " + std::to_string(retries) + " draws: " + last);
}

PencilSections pencil_sections(const CanonicalCurve& c, int pencil) {
  const PlaneModel& m = *c.model;
  const PencilSpec& pc = m.pencils.at(pencil);
  PencilSections ps;
  ps.pencil = pencil;
  const std::size_t g = c.adjoints.size();
  if (pc.kind == PencilKind::FourSecant)
    throw GenericityFailure("pencil " + pc.label + " has no plane realization");
  ps.multiplication = pc.kind != PencilKind::CubicResidual;
  if (ps.multiplication) {
    std::vector<SingularitySpec> need;
    for (auto& s : m.specs) {
      int r = s.mult - 1 - pencil_multiplicity(pc, s.p);
      if (r > 0) need.push_back({s.p, r});
    }
    ps.residual = linear_system(m.ring, m.degree - 3 - pc.s0.degree(), need);
    if (ps.residual.size() != 6)
      throw GenericityFailure("residual system of " + pc.label + " has dimension " + std::to_string(ps.residual.size()));
    for (auto& r : ps.residual) {
      auto l0 = c.linear_form(pc.s0 * r), l1 = c.linear_form(pc.s1 * r);
      if (!l0 || !l1) throw GenericityFailure("residual product is not adjoint");
      ps.fiber0.push_back(*l0);
      ps.fiber1.push_back(*l1);
    }
  } else {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull + pencil);
    const Field& F = m.ring->field();
    Poly a = pc.s0, b = pc.s1;
    for (int attempt = 0; attempt < 10; ++attempt) {
      auto u = fiber_span(c, a, pc.base);
      auto w = u ? fiber_span(c, b, pc.base) : std::nullopt;
      if (u && w) {
        ps.fiber0 = *u;
        ps.fiber1 = *w;
        break;
      }
      a = pc.s0 + pc.s1.scaled(random_scalar(F, rng));
      b = pc.s0.scaled(random_scalar(F, rng)) + pc.s1;
    }
    if (ps.fiber0.empty()) throw GenericityFailure("no reduced fibers found for " + pc.label);
  }
  ps.h0_K_minus_2L = intersect_spans(span_matrix(ps.fiber0, g), span_matrix(ps.fiber1, g)).cols();
  return ps;
}

ScrollData scroll(const CanonicalCurve& c, const PencilSections& ps) {
  ScrollData sd;
  sd.pencil = ps.pencil;
  const auto& S = c.ring;
  sd.matrix[0] = ps.fiber0;
  if (ps.multiplication) {
    sd.matrix[1] = ps.fiber1;
  } else {
    // row 1 = w X with all minors in I_C
    const auto& u = ps.fiber0;
    const auto& w = ps.fiber1;
    GradedQuotient A(c.ideal);
    const std::size_t q = A.dim(2);
    std::vector<std::vector<std::vector<Scalar>>> uw(6, std::vector<std::vector<Scalar>>(6));
    for (std::size_t a = 0; a < 6; ++a)
      for (std::size_t k = 0; k < 6; ++k) uw[a][k] = A.coords(u[a] * w[k], 2);
    const Field& F = S->field();
    Matrix E(F, 15 * q, 36);
    std::size_t row = 0;
    for (std::size_t a = 0; a < 6; ++a)
      for (std::size_t b = a + 1; b < 6; ++b, row += q)
        for (std::size_t k = 0; k < 6; ++k)
          for (std::size_t t = 0; t < q; ++t) {
            E(row + t, k * 6 + b) = F.add(E(row + t, k * 6 + b), uw[a][k][t]);
            E(row + t, k * 6 + a) = F.sub(E(row + t, k * 6 + a), uw[b][k][t]);
          }
    auto K = kernel_basis(E);
    if (K.cols() != 1)
      throw GenericityFailure("span matching ambiguity has dimension " + std::to_string(K.cols()));
    auto x = K.column(0);
    for (std::size_t mcol = 0; mcol < 6; ++mcol) {
      Poly r(S);
      for (std::size_t k = 0; k < 6; ++k) r = r + w[k].scaled(x[k * 6 + mcol]);
      sd.matrix[1].push_back(r);
    }
  }
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = a + 1; b < 6; ++b)
      sd.minors.push_back(sd.matrix[0][a] * sd.matrix[1][b] - sd.matrix[0][b] * sd.matrix[1][a]);
  sd.ideal = Ideal(S, sd.minors);
  return sd;
}

ScrollData scroll(const CanonicalCurve& c, int pencil) { return scroll(c, pencil_sections(c, pencil)); }

bool minors_in_ideal(const ScrollData& s, const Ideal& I) {
  return std::all_of(s.minors.begin(), s.minors.end(), [&](const Poly& f) { return I.contains(f); });
}

bool counts_as_a(PencilKind k) {
  return k == PencilKind::LineThroughTriple || k == PencilKind::ConicThroughTriples;
}

SyzygySchemeReport syzygy_scheme(const CanonicalCurve& c, const std::vector<ScrollData>& scrolls,
                                 const std::vector<int>& subset) {
  SyzygySchemeReport rep;
  rep.subset = subset;
  std::vector<Poly> gens;
  for (int i : subset) {
    const ScrollData* s = nullptr;
    for (auto& x : scrolls)
      if (x.pencil == i) s = &x;
    if (!s) throw std::out_of_range("no scroll for pencil " + std::to_string(i));
    if (counts_as_a(c.model->pencils.at(i).kind)) ++rep.a;
    else ++rep.b;
    gens.insert(gens.end(), s->minors.begin(), s->minors.end());
  }
  Ideal J(c.ring, gens);
  auto h = hilbert(J);
  rep.dim = h.projective_dim();
  rep.degree = h.degree;
  if (rep.dim == 1) rep.genus = h.genus();
  GradedQuotient A(J);
  rep.linear_strand.set(0, 0, 1);
  for (int i = 1; i <= 3; ++i) rep.linear_strand.set(i, i + 1, koszul_betti(A, i, i + 1));
  return rep;
}

}  // namespace g11
