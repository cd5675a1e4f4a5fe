#include "g11/plane.hpp"

#include <algorithm>
#include <sstream>

namespace g11 {

namespace {

std::vector<std::array<unsigned, 3>> exponents_of_degree(int d) {
  std::vector<std::array<unsigned, 3>> out;
  for (int a = d; a >= 0; --a)
    for (int b = d - a; b >= 0; --b) out.push_back({unsigned(a), unsigned(b), unsigned(d - a - b)});
  return out;
}

// Coefficient vector of f in graded_basis(R, d).
std::vector<Scalar> coeffs_of(const Poly& f, int d) {
  auto basis = graded_basis(*f.ring(), d);
  return coefficients_in(f, basis);
}

// f(p + u a + v b) in K[u,v], with a, b the coordinate vectors other than
// the normalizing one of p.
Poly local_expansion(const Poly& f, const PlanePoint& p) {
  const Field& F = f.field();
  auto L = Ring::make(F, {"u", "v"});
  std::size_t c = 2;
  while (p.x[c] == 0) --c;
  std::vector<Poly> images;
  int next = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    Poly img = Poly::constant(L, p.x[i]);
    if (i != c) img = img + Poly::variable(L, next++);
    images.push_back(img);
  }
  return substitute(f, images);
}

std::vector<Scalar> trim(std::vector<Scalar> a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

// Remainder of a by b (coefficient vectors, low degree first).
std::vector<Scalar> poly_mod(const Field& F, std::vector<Scalar> a, const std::vector<Scalar>& b) {
  a = trim(std::move(a));
  Scalar lead_inv = F.inv(b.back());
  while (a.size() >= b.size()) {
    Scalar q = F.mul(a.back(), lead_inv);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = F.sub(a[shift + i], F.mul(q, b[i]));
    a = trim(std::move(a));
  }
  return a;
}

std::vector<Scalar> poly_gcd(const Field& F, std::vector<Scalar> a, std::vector<Scalar> b) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    auto r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

PlanePoint random_point(const Field& F, std::mt19937_64& rng) {
  Scalar x = random_scalar(F, rng);
  Scalar y = random_scalar(F, rng);
  return PlanePoint{{x, y, 1}};
}

std::vector<PlanePoint> random_points(const Field& F, std::mt19937_64& rng, int n) {
  std::vector<PlanePoint> out;
  for (int i = 0; i < n; ++i) out.push_back(random_point(F, rng));
  return out;
}

std::vector<PlanePoint> points_of(const std::vector<SingularitySpec>& s) {
  std::vector<PlanePoint> out;
  for (auto& x : s) out.push_back(x.p);
  return out;
}

std::string pt(const PlanePoint& p, const Field& F) {
  std::ostringstream os;
  os << "(" << F.to_signed(p.x[0]) << ":" << F.to_signed(p.x[1]) << ":" << F.to_signed(p.x[2]) << ")";
  return os.str();
}

PencilSpec make_pencil(PencilKind kind, int index, std::vector<Poly> forms, std::vector<SingularitySpec> base,
                       std::string label) {
  if (forms.size() != 2) throw std::domain_error("pencil system is not two-dimensional: " + label);
  return PencilSpec{kind, index, forms[0], forms[1], std::move(base), std::move(label)};
}

struct Draft {
  int degree;
  std::vector<SingularitySpec> specs;
  std::vector<PlanePoint> extra;
  std::vector<std::vector<int>> extra_sources;
  std::vector<PencilSpec> pencils;
};

Draft draft_model(int k, const RingPtr& R, std::mt19937_64& rng) {
  const Field& F = R->field();
  Draft d;
  auto triple = [](const std::vector<PlanePoint>& ps, int m) {
    std::vector<SingularitySpec> s;
    for (auto& p : ps) s.push_back({p, m});
    return s;
  };
  if (k >= 5 && k <= 9) {
    auto P = random_points(F, rng, 4);
    auto Q = random_points(F, rng, 5);
    d.degree = 9;
    d.specs = triple(P, 3);
    for (auto& s : triple(Q, 2)) d.specs.push_back(s);
    for (int i = 0; i < 4; ++i)
      d.pencils.push_back(make_pencil(PencilKind::LineThroughTriple, i + 1, lines_through(R, P[i]), {{P[i], 3}},
                                      "line through P" + std::to_string(i + 1)));
    d.pencils.push_back(make_pencil(PencilKind::ConicThroughTriples, 0, linear_system(R, 2, {}, P), triple(P, 3),
                                    "conic through P1..P4"));
    for (int j = 0; j < k - 5; ++j) {
      std::vector<PlanePoint> eight = P;
      for (int l = 0; l < 5; ++l)
        if (l != j) eight.push_back(Q[l]);
      PlanePoint r = ninth_base_point(R, eight);
      d.extra.push_back(r);
      std::vector<int> src{0, 1, 2, 3};
      for (int l = 0; l < 5; ++l)
        if (l != j) src.push_back(4 + l);
      d.extra_sources.push_back(src);
      auto base = triple(P, 3);
      for (int l = 0; l < 5; ++l)
        if (l != j) base.push_back({Q[l], 2});
      base.push_back({r, 1});
      d.pencils.push_back(make_pencil(PencilKind::CubicResidual, j + 1, linear_system(R, 3, {}, eight), base,
                                      "cubic residual to Q" + std::to_string(j + 1)));
    }
  } else if (k == 4) {
    auto P = random_points(F, rng, 3);
    auto Q = random_points(F, rng, 7);
    std::vector<PlanePoint> eight = P;
    for (int l = 0; l < 5; ++l) eight.push_back(Q[l]);
    PlanePoint r = ninth_base_point(R, eight);
    d.degree = 9;
    d.specs = triple(P, 3);
    for (auto& s : triple(Q, 2)) d.specs.push_back(s);
    d.specs.push_back({r, 2});
    for (int i = 0; i < 3; ++i)
      d.pencils.push_back(make_pencil(PencilKind::LineThroughTriple, i + 1, lines_through(R, P[i]), {{P[i], 3}},
                                      "line through P" + std::to_string(i + 1)));
    auto base = triple(P, 3);
    for (int l = 0; l < 5; ++l) base.push_back({Q[l], 2});
    base.push_back({r, 2});
    d.pencils.push_back(make_pencil(PencilKind::CubicResidual, 6, linear_system(R, 3, {}, eight), base,
                                    "cubic through P1..P3, Q1..Q5"));
  } else if (k == 10) {
    auto N = random_points(F, rng, 10);
    d.degree = 8;
    d.specs = triple(N, 2);
    for (int i = 0; i < 10; ++i)
      d.pencils.push_back(make_pencil(PencilKind::LineThroughNode, i + 1, lines_through(R, N[i]), {{N[i], 2}},
                                      "line through N" + std::to_string(i + 1)));
  } else if (k == 20) {
    auto P = random_points(F, rng, 5);
    auto Q = random_points(F, rng, 2);
    d.degree = 9;
    d.specs = triple(P, 3);
    for (auto& s : triple(Q, 2)) d.specs.push_back(s);
    for (int i = 0; i < 5; ++i)
      d.pencils.push_back(make_pencil(PencilKind::LineThroughTriple, i + 1, lines_through(R, P[i]), {{P[i], 3}},
                                      "line through P" + std::to_string(i + 1)));
    for (int i = 0; i < 5; ++i) {
      std::vector<PlanePoint> four;
      for (int l = 0; l < 5; ++l)
        if (l != i) four.push_back(P[l]);
      d.pencils.push_back(make_pencil(PencilKind::ConicThroughTriples, i + 1, linear_system(R, 2, {}, four),
                                      triple(four, 3), "conic omitting P" + std::to_string(i + 1)));
    }
    for (int i = 0; i < 10; ++i)
      d.pencils.push_back(PencilSpec{PencilKind::FourSecant, i + 1, Poly(R), Poly(R), {},
                                     "4-secant line " + std::to_string(i + 1) + " (space model)"});
  }
  return d;
}

}  // namespace

PlanePoint PlanePoint::normalized(const Field& F, std::array<Scalar, 3> v) {
  std::size_t c = 2;
  while (v[c] == 0) {
    if (c == 0) throw std::domain_error("zero vector is not a point of P^2");
    --c;
  }
  Scalar s = F.inv(v[c]);
  for (auto& x : v) x = F.mul(x, s);
  return PlanePoint{v};
}

const char* to_string(PencilKind k) {
  switch (k) {
    case PencilKind::LineThroughTriple: return "line-through-triple-point";
    case PencilKind::ConicThroughTriples: return "conic-through-four-triples";
    case PencilKind::CubicResidual: return "cubic-residual";
    case PencilKind::LineThroughNode: return "line-through-node";
    case PencilKind::FourSecant: return "4-secant";
  }
  return "?";
}

RingPtr plane_ring(const Field& F) { return Ring::make(F, {"x", "y", "z"}); }

bool supported_k(int k) { return (k >= 4 && k <= 10) || k == 20; }

Matrix singular_conditions(const Ring& R, const PlanePoint& p, int m, int d) {
  const Field& F = R.field();
  auto basis = graded_basis(R, d);
  auto alphas = exponents_of_degree(m - 1);
  Matrix out(F, alphas.size(), basis.size());
  for (std::size_t r = 0; r < alphas.size(); ++r) {
    auto& a = alphas[r];
    for (std::size_t c = 0; c < basis.size(); ++c) {
      const auto& b = basis[c].e;
      Scalar v = 1;
      for (std::size_t i = 0; i < 3 && v; ++i) {
        if (b[i] < a[i]) {
          v = 0;
          break;
        }
        for (unsigned t = 0; t < a[i]; ++t) v = F.mul(v, F.from_int(b[i] - t));
        v = F.mul(v, F.pow(p.x[i], b[i] - a[i]));
      }
      out(r, c) = v;
    }
  }
  return out;
}

Matrix condition_matrix(const Ring& R, int d, const std::vector<SingularitySpec>& specs,
                        const std::vector<PlanePoint>& simple) {
  Matrix out(R.field(), 0, binomial(d + 2, 2));
  for (auto& s : specs) out = out.vstack(singular_conditions(R, s.p, s.mult, d));
  for (auto& p : simple) out = out.vstack(singular_conditions(R, p, 1, d));
  return out;
}

std::vector<Poly> linear_system(const RingPtr& R, int d, const std::vector<SingularitySpec>& specs,
                                const std::vector<PlanePoint>& simple) {
  auto K = kernel_basis(condition_matrix(*R, d, specs, simple));
  auto basis = graded_basis(*R, d);
  std::vector<Poly> out;
  for (std::size_t j = 0; j < K.cols(); ++j) {
    auto col = K.column(j);
    out.push_back(poly_from_coefficients(R, basis, col));
  }
  return out;
}

std::vector<Poly> lines_through(const RingPtr& R, const PlanePoint& p) {
  return linear_system(R, 1, {}, {p});
}

PlanePoint ninth_base_point(const RingPtr& R, const std::vector<PlanePoint>& eight) {
  if (eight.size() != 8) throw std::invalid_argument("ninth_base_point needs eight points");
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i + 1; j < 8; ++j)
      if (eight[i] == eight[j]) throw std::domain_error("degenerate configuration: repeated point");
  auto cubics = linear_system(R, 3, {}, eight);
  if (cubics.size() != 2) throw std::domain_error("degenerate configuration: points fail to impose independent conditions on cubics");
  Ideal I(R, cubics);
  for (auto& p : eight) I = saturate(I, Ideal(R, lines_through(R, p)));
  const auto& G = I.gb();
  if (G.size() != 2 || G[0].degree() != 1 || G[1].degree() != 1)
    throw std::domain_error("degenerate configuration: base locus is not nine reduced points");
  Matrix A(R->field(), 2, 3);
  auto lin = graded_basis(*R, 1);
  for (std::size_t r = 0; r < 2; ++r) {
    auto c = coefficients_in(G[r], lin);
    for (std::size_t i = 0; i < 3; ++i) {
      // lin is decreasing: x, y, z
      for (std::size_t v = 0; v < 3; ++v)
        if (lin[i].e[v]) A(r, v) = c[i];
    }
  }
  auto K = kernel_basis(A);
  auto col = K.column(0);
  return PlanePoint::normalized(R->field(), {col[0], col[1], col[2]});
}

std::vector<Scalar> tangent_cone(const Poly& f, const PlanePoint& p, int m) {
  Poly loc = local_expansion(f, p);
  std::vector<Scalar> out(m + 1, 0);
  for (auto& t : loc.terms())
    if (t.m.deg == m) out[t.m.e[0]] = t.c;
  return out;
}

int multiplicity_at(const Poly& f, const PlanePoint& p) {
  Poly loc = local_expansion(f, p);
  int m = -1;
  for (auto& t : loc.terms())
    if (m < 0 || t.m.deg < m) m = t.m.deg;
  return m < 0 ? f.degree() + 1 : m;
}

bool binary_form_squarefree(const Field& F, const std::vector<Scalar>& c) {
  // c[i] is the coefficient of u^i v^(m-i); v-adic valuation is m - top index
  auto t = trim(c);
  if (t.empty()) return false;
  std::size_t m = c.size() - 1;
  if (m - (t.size() - 1) >= 2) return false;
  if (t.size() <= 2) return true;
  std::vector<Scalar> dt(t.size() - 1);
  for (std::size_t i = 1; i < t.size(); ++i) dt[i - 1] = F.mul(F.from_int(i), t[i]);
  return poly_gcd(F, t, dt).size() == 1;
}

bool ModelReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const ModelCheck& c) { return c.pass; });
}

ModelReport verify_model(const PlaneModel& m) {
  ModelReport rep;
  const auto& R = m.ring;
  const Field& F = R->field();
  const Poly& f = m.form;
  const int d = m.degree;
  rep.checks.push_back({"homogeneous of degree " + std::to_string(d), !f.is_zero() && f.is_homogeneous() && f.degree() == d, ""});
  auto coeffs = coeffs_of(f, d);
  long long tjurina = 0;
  long long delta = 0;
  auto pts = points_of(m.specs);
  for (auto& p : m.extra) pts.push_back(p);
  bool distinct = true;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i] == pts[j]) distinct = false;
  rep.checks.push_back({"points pairwise distinct", distinct, ""});
  for (auto& s : m.specs) {
    std::string where = pt(s.p, F);
    bool low = singular_conditions(*R, s.p, s.mult, d).apply(coeffs) == std::vector<Scalar>(s.mult * (s.mult + 1) / 2, 0);
    auto hi = singular_conditions(*R, s.p, s.mult + 1, d).apply(coeffs);
    bool exact = low && std::any_of(hi.begin(), hi.end(), [](Scalar v) { return v != 0; });
    rep.checks.push_back({"multiplicity " + std::to_string(s.mult) + " at " + where, exact, ""});
    bool ord = exact && binary_form_squarefree(F, tangent_cone(f, s.p, s.mult));
    rep.checks.push_back({"ordinary tangent cone at " + where, ord, ""});
    tjurina += (s.mult - 1) * (s.mult - 1);
    delta += s.mult * (s.mult - 1) / 2;
  }
  for (auto& p : m.extra) {
    Scalar v = evaluate(f, p.x);
    rep.checks.push_back({"passes through " + pt(p, F), v == 0, ""});
  }
  if (rep.ok()) {
    std::vector<Poly> jac;
    for (std::size_t v = 0; v < 3; ++v) jac.push_back(partial_derivative(f, v));
    auto h = hilbert(Ideal(R, jac));
    bool clean = tjurina == 0 ? h.krull_dim == 0 : (h.projective_dim() == 0 && h.degree == tjurina);
    rep.checks.push_back({"no unassigned singularities", clean,
                          "singular scheme degree " + std::to_string(h.degree) + ", assigned " + std::to_string(tjurina)});
  }
  rep.genus = static_cast<long long>((d - 1) * (d - 2) / 2) - delta;
  rep.checks.push_back({"geometric genus " + std::to_string(m.expected_genus), rep.genus == m.expected_genus,
                        "genus " + std::to_string(rep.genus)});
  return rep;
}

PlaneModel random_model(int k, const Field& F, std::uint64_t seed, int retries) {
  if (!supported_k(k)) throw UnsupportedK("no plane model for k = " + std::to_string(k) +
                                         "; supported k: 4, 5, 6, 7, 8, 9, 10, 20 (k = 12 and the infinite-pencil model are not implemented)");
  if (F.prime() <= 9) throw std::invalid_argument("prime must exceed 9");
  auto R = plane_ring(F);
  std::mt19937_64 rng(seed);
  for (int attempt = 1; attempt <= retries; ++attempt) {
    try {
      Draft dr = draft_model(k, R, rng);
      Matrix C = condition_matrix(*R, dr.degree, dr.specs, dr.extra);
      if (rank(C) != C.rows()) continue;
      auto sys = linear_system(R, dr.degree, dr.specs, dr.extra);
      Poly form(R);
      for (auto& b : sys) form = form + b.scaled(random_scalar(F, rng));
      PlaneModel m;
      m.k = k;
      m.degree = dr.degree;
      m.ring = R;
      m.form = form;
      m.specs = std::move(dr.specs);
      m.extra = std::move(dr.extra);
      m.extra_sources = std::move(dr.extra_sources);
      m.pencils = std::move(dr.pencils);
      m.seed = seed;
      m.attempts = attempt;
      if (verify_model(m).ok()) return m;
    } catch (const std::domain_error&) {
    }
  }
  throw RetryExhausted("no generic model for k = " + std::to_string(k) + " after " + std::to_string(retries) +
                       " attempts");
}

}  // namespace g11
