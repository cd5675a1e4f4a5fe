#include "g11/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace g11 {

namespace {

json spec_to_json(const SingularitySpec& s) { return {{"point", to_json(s.p)}, {"mult", s.mult}}; }

SingularitySpec spec_from_json(const Field& F, const json& j) {
  return {point_from_json(F, j.at("point")), j.at("mult").get<int>()};
}

}  // namespace

json to_json(const Poly& f) {
  json out = json::array();
  const std::size_t n = f.ring()->nvars();
  for (auto& t : f.terms()) {
    json e = json::array();
    for (std::size_t i = 0; i < n; ++i) e.push_back(static_cast<int>(t.m.e[i]));
    out.push_back(json::array({e, t.c}));
  }
  return out;
}

Poly poly_from_json(const RingPtr& R, const json& j) {
  const Field& F = R->field();
  std::vector<Term> terms;
  for (auto& t : j) {
    const auto& e = t.at(0);
    if (e.size() != R->nvars()) throw std::invalid_argument("term has " + std::to_string(e.size()) + " exponents");
    Mono m;
    m.deg = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      int v = e[i].get<int>();
      if (v < 0 || v > 255) throw std::invalid_argument("exponent out of range");
      m.e[i] = static_cast<std::uint8_t>(v);
      m.deg = static_cast<std::uint16_t>(m.deg + v);
    }
    long long c = t.at(1).get<long long>() % static_cast<long long>(F.prime());
    if (c < 0) c += F.prime();
    terms.push_back({m, static_cast<Scalar>(c)});
  }
  return Poly(R, std::move(terms));
}

json to_json(const PlanePoint& p) { return json::array({p.x[0], p.x[1], p.x[2]}); }

PlanePoint point_from_json(const Field& F, const json& j) {
  if (j.size() != 3) throw std::invalid_argument("plane point needs 3 coordinates");
  std::array<Scalar, 3> v{};
  for (int i = 0; i < 3; ++i) v[i] = static_cast<Scalar>(j[i].get<long long>() % F.prime());
  return PlanePoint::normalized(F, v);
}

PencilKind pencil_kind_from_string(const std::string& s) {
  for (auto k : {PencilKind::LineThroughTriple, PencilKind::ConicThroughTriples, PencilKind::CubicResidual,
                 PencilKind::LineThroughNode, PencilKind::FourSecant})
    if (s == to_string(k)) return k;
  throw std::invalid_argument("unknown pencil kind '" + s + "'");
}

json to_json(const PlaneModel& m) {
  json j;
  j["prime"] = m.ring->field().prime();
  j["seed"] = m.seed;
  j["k"] = m.k;
  j["degree"] = m.degree;
  j["genus"] = m.expected_genus;
  j["attempts"] = m.attempts;
  j["variables"] = m.ring->names();
  j["form"] = to_json(m.form);
  json pts = json::array();
  for (auto& s : m.specs) pts.push_back(spec_to_json(s));
  j["points"] = pts;
  json extra = json::array();
  for (std::size_t i = 0; i < m.extra.size(); ++i)
    extra.push_back({{"point", to_json(m.extra[i])},
                     {"sources", i < m.extra_sources.size() ? json(m.extra_sources[i]) : json::array()}});
  j["extra_points"] = extra;
  json pens = json::array();
  for (auto& p : m.pencils) {
    json b = json::array();
    for (auto& s : p.base) b.push_back(spec_to_json(s));
    pens.push_back({{"label", p.label},
                    {"kind", to_string(p.kind)},
                    {"index", p.index},
                    {"s0", to_json(p.s0)},
                    {"s1", to_json(p.s1)},
                    {"base", b}});
  }
  j["pencils"] = pens;
  return j;
}

PlaneModel model_from_json(const json& j) {
  Field F(j.at("prime").get<Scalar>());
  PlaneModel m;
  m.ring = plane_ring(F);
  m.seed = j.at("seed").get<std::uint64_t>();
  m.k = j.at("k").get<int>();
  m.degree = j.at("degree").get<int>();
  m.expected_genus = j.value("genus", 11);
  m.attempts = j.value("attempts", 1);
  m.form = poly_from_json(m.ring, j.at("form"));
  if (!m.form.is_zero() && m.form.degree() != m.degree) throw std::invalid_argument("form degree mismatch");
  for (auto& s : j.at("points")) m.specs.push_back(spec_from_json(F, s));
  for (auto& e : j.value("extra_points", json::array())) {
    m.extra.push_back(point_from_json(F, e.at("point")));
    m.extra_sources.push_back(e.value("sources", std::vector<int>{}));
  }
  for (auto& p : j.at("pencils")) {
    PencilSpec ps{pencil_kind_from_string(p.at("kind").get<std::string>()), p.at("index").get<int>(),
                  poly_from_json(m.ring, p.at("s0")), poly_from_json(m.ring, p.at("s1")), {},
                  p.at("label").get<std::string>()};
    for (auto& b : p.value("base", json::array())) ps.base.push_back(spec_from_json(F, b));
    m.pencils.push_back(std::move(ps));
  }
  return m;
}

json canonical_to_json(const CanonicalCurve& c) {
  json j;
  j["ambient_dim"] = c.adjoints.size() - 1;
  json a = json::array(), q = json::array();
  for (auto& f : c.adjoints) a.push_back(to_json(f));
  for (auto& f : c.ideal.gens()) q.push_back(to_json(f));
  j["adjoints"] = a;
  j["quadrics"] = q;
  return j;
}

json curve_file(const CanonicalCurve& c) { return {{"model", to_json(*c.model)}, {"canonical", canonical_to_json(c)}}; }

CanonicalCurve curve_from_file(const json& j) {
  CanonicalCurve c;
  auto m = std::make_shared<PlaneModel>(model_from_json(j.at("model")));
  c.model = m;
  const auto& cj = j.at("canonical");
  for (auto& f : cj.at("adjoints")) c.adjoints.push_back(poly_from_json(m->ring, f));
  c.ring = Ring::make(m->ring->field(), c.adjoints.size());
  std::vector<Poly> q;
  for (auto& f : cj.at("quadrics")) q.push_back(poly_from_json(c.ring, f));
  c.ideal = Ideal(c.ring, std::move(q));
  return c;
}

json to_json(const BettiTable& b) {
  json out = json::array();
  for (auto& [k, v] : b.entries) out.push_back({{"i", k.first}, {"j", k.second}, {"beta", v}});
  return out;
}

BettiTable betti_from_json(const json& j) {
  BettiTable b;
  for (auto& e : j) b.set(e.at("i").get<int>(), e.at("j").get<int>(), e.at("beta").get<long long>());
  return b;
}

json to_json(const SyzygySchemeReport& r) {
  json j;
  std::vector<int> one_based;
  for (int i : r.subset) one_based.push_back(i + 1);
  j["pencils"] = one_based;
  j["a"] = r.a;
  j["b"] = r.b;
  j["dim"] = r.dim;
  j["degree"] = r.degree;
  j["genus"] = r.genus ? json(*r.genus) : json(nullptr);
  j["linear_strand"] = to_json(r.linear_strand);
  return j;
}

std::string table_row(const SyzygySchemeReport& r) {
  std::ostringstream os;
  os << "a=" << r.a << " b=" << r.b << " | dim " << r.dim << " deg " << r.degree << " genus ";
  if (r.genus) os << *r.genus;
  else os << "-";
  os << " |";
  for (int i = 0; i <= 3; ++i) os << ' ' << r.linear_strand.get(i, i == 0 ? 0 : i + 1);
  os << " | {";
  for (std::size_t i = 0; i < r.subset.size(); ++i) os << (i ? "," : "") << r.subset[i] + 1;
  os << "}";
  return os.str();
}

}  // namespace g11
