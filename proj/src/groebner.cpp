#include "g11/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace g11 {

namespace {

std::uint32_t support_mask(const Mono& m) {
  std::uint32_t b = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (m.e[i]) b |= 1u << i;
  return b;
}

int term_degree(const Ring& R, const Mono& m) { return m.deg + (R.is_module() ? R.shift(m.comp) : 0); }

struct Element {
  Poly f;
  int sugar;
  std::uint32_t mask;
  bool active = true;
};

struct Pair {
  std::size_t i, j;
  Mono lcm;
  int sugar;
};

class Engine {
public:
  Engine(RingPtr R, const GroebnerOptions& opt) : R_(std::move(R)), opt_(opt), pairs_(PairLess{R_.get()}) {
    ideal_ = !R_->is_module();
  }

  void add_input(const Poly& f) {
    if (f.is_zero()) return;
    int s = 0;
    for (auto& t : f.terms()) s = std::max(s, term_degree(*R_, t.m));
    pending_.push_back({f.monic(), s, 0});
  }

  std::vector<Poly> run() {
    std::stable_sort(pending_.begin(), pending_.end(), [](const Element& a, const Element& b) { return a.sugar < b.sugar; });
    for (auto& e : pending_) {
      if (opt_.max_sugar >= 0 && e.sugar > opt_.max_sugar) continue;
      // Inputs enter through the pair queue as pseudo-pairs to respect sugar order.
      inputs_.push_back(e);
    }
    std::size_t next_input = 0;
    while (next_input < inputs_.size() || !pairs_.empty()) {
      bool take_input = next_input < inputs_.size() &&
                        (pairs_.empty() || inputs_[next_input].sugar <= pairs_.begin()->sugar);
      Poly h;
      int sugar;
      if (take_input) {
        h = inputs_[next_input].f;
        sugar = inputs_[next_input].sugar;
        ++next_input;
      } else {
        Pair p = *pairs_.begin();
        pairs_.erase(pairs_.begin());
        h = spoly(p);
        sugar = p.sugar;
      }
      top_reduce(h, sugar);
      if (h.is_zero()) continue;
      h = h.monic();
      if (ideal_ && h.lead().m.deg == 0) return {Poly::constant(R_, 1)};
      insert(std::move(h), sugar);
    }
    return finish();
  }

private:
  struct PairLess {
    const Ring* R;
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      if (int c = R->compare(a.lcm, b.lcm)) return c < 0;
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    }
  };

  Poly spoly(const Pair& p) const {
    const Poly& a = G_[p.i].f;
    const Poly& b = G_[p.j].f;
    Poly sa = a.times_term(a.lead().m.quotient_of(p.lcm), 1);
    Poly sb = b.times_term(b.lead().m.quotient_of(p.lcm), 1);
    return sa - sb;
  }

  const Element* find_reducer(const Mono& m) const {
    const std::uint32_t mask = support_mask(m);
    for (auto& g : G_) {
      if (!g.active || (g.mask & ~mask)) continue;
      if (g.f.lead().m.divides(m)) return &g;
    }
    return nullptr;
  }

  void top_reduce(Poly& h, int& sugar) const {
    const Field& F = R_->field();
    while (!h.is_zero()) {
      const Term& lt = h.lead();
      const Element* g = find_reducer(lt.m);
      if (!g) return;
      Mono q = g->f.lead().m.quotient_of(lt.m);
      sugar = std::max(sugar, static_cast<int>(q.deg) + g->sugar);
      h = h - g->f.times_term(q, F.div(lt.c, g->f.lead().c));
    }
  }

  void insert(Poly h, int sugar) {
    const Mono H = h.lead().m;
    const std::size_t hi = G_.size();
    G_.push_back({std::move(h), sugar, support_mask(H), true});
    const Element& he = G_.back();

    std::vector<Pair> C;
    for (std::size_t i = 0; i < hi; ++i) {
      if (!G_[i].active || G_[i].f.lead().m.comp != H.comp) continue;
      const Mono& L = G_[i].f.lead().m;
      int s = std::max(G_[i].sugar + (L.lcm(H).deg - L.deg), he.sugar + (L.lcm(H).deg - H.deg));
      C.push_back({i, hi, L.lcm(H), s});
    }
    auto coprime = [&](const Pair& p) { return ideal_ && G_[p.i].f.lead().m.coprime(H); };
    std::vector<Pair> D;
    for (std::size_t a = 0; a < C.size(); ++a) {
      const Pair& p = C[a];
      bool keep = coprime(p);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < C.size() && keep; ++b)
          if (C[b].lcm.divides(p.lcm)) keep = false;
        for (auto& q : D)
          if (keep && q.lcm.divides(p.lcm)) keep = false;
      }
      if (keep) D.push_back(p);
    }
    // Chain criterion on the old pairs.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Mono& L1 = G_[it->i].f.lead().m;
      const Mono& L2 = G_[it->j].f.lead().m;
      if (H.divides(it->lcm) && !(L1.lcm(H) == it->lcm) && !(L2.lcm(H) == it->lcm))
        it = pairs_.erase(it);
      else
        ++it;
    }
    for (auto& p : D) {
      if (coprime(p)) continue;
      if (opt_.max_sugar >= 0 && p.sugar > opt_.max_sugar) continue;
      pairs_.insert(p);
    }
    for (std::size_t i = 0; i < hi; ++i)
      if (G_[i].active && H.divides(G_[i].f.lead().m)) G_[i].active = false;
  }

  std::vector<Poly> finish() const {
    std::vector<Poly> basis;
    for (auto& g : G_)
      if (g.active) basis.push_back(g.f);
    std::sort(basis.begin(), basis.end(),
              [&](const Poly& a, const Poly& b) { return R_->compare(a.lead().m, b.lead().m) < 0; });
    std::vector<Poly> out;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      // tail reduction against every other element
      std::vector<Poly> others;
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (j != i) others.push_back(basis[j]);
      Poly tail = basis[i] - Poly::monomial(R_, basis[i].lead().m, basis[i].lead().c);
      Poly r = Poly::monomial(R_, basis[i].lead().m, basis[i].lead().c) + normal_form(tail, others);
      out.push_back(r.monic());
    }
    return out;
  }

  RingPtr R_;
  GroebnerOptions opt_;
  bool ideal_;
  std::vector<Element> pending_, inputs_;
  std::vector<Element> G_;
  std::set<Pair, PairLess> pairs_;
};

}  // namespace

std::vector<Poly> groebner(const std::vector<Poly>& gens, const GroebnerOptions& opt) {
  if (gens.empty()) return {};
  Engine e(gens.front().ring(), opt);
  for (auto& g : gens) e.add_input(g);
  return e.run();
}

Poly normal_form(const Poly& f, const std::vector<Poly>& G) {
  if (f.is_zero()) return f;
  const RingPtr& R = f.ring();
  const Field& F = R->field();
  std::vector<std::uint32_t> masks;
  for (auto& g : G) masks.push_back(g.is_zero() ? 0 : support_mask(g.lead().m));
  std::vector<Term> rem;
  Poly h = f;
  while (!h.is_zero()) {
    const Term lt = h.lead();
    const std::uint32_t mk = support_mask(lt.m);
    const Poly* red = nullptr;
    for (std::size_t i = 0; i < G.size(); ++i) {
      if (G[i].is_zero() || (masks[i] & ~mk)) continue;
      if (G[i].lead().m.divides(lt.m)) {
        red = &G[i];
        break;
      }
    }
    if (red) {
      h = h - red->times_term(red->lead().m.quotient_of(lt.m), F.div(lt.c, red->lead().c));
    } else {
      rem.push_back(lt);
      h = h - Poly::monomial(R, lt.m, lt.c);
    }
  }
  return Poly(R, std::move(rem));
}

std::optional<Poly> divide_exact(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  const Field& F = f.field();
  std::vector<Term> q;
  Poly r = f;
  while (!r.is_zero()) {
    if (!g.lead().m.divides(r.lead().m)) return std::nullopt;
    Mono m = g.lead().m.quotient_of(r.lead().m);
    Scalar c = F.div(r.lead().c, g.lead().c);
    q.push_back({m, c});
    r = r - g.times_term(m, c);
  }
  return Poly(f.ring(), std::move(q));
}

// ---------------------------------------------------------------------------

Ideal::Ideal(RingPtr R, std::vector<Poly> gens) : R_(std::move(R)) {
  for (auto& g : gens)
    if (!g.is_zero()) gens_.push_back(std::move(g));
}

const std::vector<Poly>& Ideal::gb() const {
  if (!gb_) gb_ = std::make_shared<const std::vector<Poly>>(groebner(gens_));
  return *gb_;
}

bool Ideal::contains(const Ideal& J) const {
  for (auto& g : J.gens())
    if (!contains(g)) return false;
  return true;
}

bool Ideal::is_unit() const {
  auto& G = gb();
  return G.size() == 1 && G.front().lead().m.deg == 0;
}

std::vector<Poly> Ideal::gens_of_degree(int d) const {
  std::vector<Poly> out;
  for (auto& g : gens_)
    if (g.degree() == d) out.push_back(g);
  return out;
}

Ideal operator+(const Ideal& a, const Ideal& b) {
  std::vector<Poly> g = a.gens();
  g.insert(g.end(), b.gens().begin(), b.gens().end());
  return Ideal(a.ring(), std::move(g));
}

// ---------------------------------------------------------------------------

namespace {

// Copies f into a ring with more variables (same leading variables).
Poly widen(const Poly& f, const RingPtr& T) { return Poly(T, f.terms()); }

Poly narrow(const Poly& f, const RingPtr& T) {
  for (auto& t : f.terms())
    for (std::size_t i = T->nvars(); i < kMaxVars; ++i)
      if (t.m.e[i]) throw std::logic_error("narrow: term uses a dropped variable");
  return Poly(T, f.terms());
}

}  // namespace

Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& vars) {
  const RingPtr& R = I.ring();
  if (vars.empty()) return Ideal(R, I.gb());
  std::vector<bool> mask(R->nvars(), false);
  for (auto v : vars) mask.at(v) = true;
  RingPtr E = R->with_elimination(mask);
  std::vector<Poly> g;
  for (auto& f : I.gens()) g.push_back(rebase(f, E));
  std::vector<Poly> out;
  for (auto& f : groebner(g)) {
    bool free = true;
    for (auto& t : f.terms())
      for (auto v : vars)
        if (t.m.e[v]) free = false;
    if (free) out.push_back(rebase(f, R));
  }
  return Ideal(R, std::move(out));
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  const RingPtr& R = I.ring();
  const std::size_t n = R->nvars();
  if (n + 1 > kMaxVars) throw std::invalid_argument("intersect: no room for the auxiliary variable");
  if (I.gens().empty() || J.gens().empty()) return Ideal(R, {});
  auto names = R->names();
  names.push_back("_t");
  std::vector<bool> mask(n + 1, false);
  mask[n] = true;
  auto T = std::make_shared<const Ring>(R->field(), names, OrderKind::Elimination, mask);
  Poly t = Poly::variable(T, n);
  Poly one_minus_t = Poly::constant(T, 1) - t;
  std::vector<Poly> g;
  for (auto& f : I.gens()) g.push_back(t * widen(f, T));
  for (auto& f : J.gens()) g.push_back(one_minus_t * widen(f, T));
  std::vector<Poly> out;
  for (auto& f : groebner(g)) {
    bool free = std::all_of(f.terms().begin(), f.terms().end(), [&](const Term& x) { return x.m.e[n] == 0; });
    if (free) out.push_back(narrow(f, R));
  }
  return Ideal(R, std::move(out));
}

Ideal quotient(const Ideal& I, const Ideal& J) {
  const RingPtr& R = I.ring();
  std::optional<Ideal> acc;
  for (auto& g : J.gens()) {
    Ideal ig = intersect(I, Ideal(R, {g}));
    std::vector<Poly> q;
    for (auto& f : ig.gens()) {
      auto d = divide_exact(f, g);
      if (!d) throw std::logic_error("quotient: intersection element not divisible");
      q.push_back(*d);
    }
    Ideal part(R, std::move(q));
    acc = acc ? intersect(*acc, part) : part;
  }
  if (!acc) return Ideal(R, {Poly::constant(R, 1)});
  return Ideal(R, acc->gb());
}

namespace {

bool is_homogeneous_ideal(const Ideal& I) {
  return std::all_of(I.gens().begin(), I.gens().end(), [](const Poly& f) { return f.is_homogeneous(); });
}

// I : l^infinity for a linear form l via the reverse lexicographic
// property of the last variable.
Ideal saturate_by_linear_form(const Ideal& I, const Poly& l) {
  const RingPtr& R = I.ring();
  const Field& F = R->field();
  const std::size_t n = R->nvars();
  std::size_t t = n;
  for (std::size_t i = n; i-- > 0;)
    if (l.coefficient(Mono::var(i))) {
      t = i;
      break;
    }
  std::vector<std::string> names;
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0, k = 0; i < n; ++i)
    if (i != t) {
      pos[i] = k++;
      names.push_back(R->names()[i]);
    }
  pos[t] = n - 1;
  names.push_back("_l");
  auto R2 = Ring::make(F, names);
  // forward: x_i -> y_pos(i), x_t -> (y_last - sum_{i != t} c_i y_pos(i)) / c_t
  const Scalar ct_inv = F.inv(l.coefficient(Mono::var(t)));
  std::vector<Poly> fwd(n), back(n);
  Poly xt = Poly::variable(R2, n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == t) continue;
    fwd[i] = Poly::variable(R2, pos[i]);
    xt = xt - fwd[i].scaled(l.coefficient(Mono::var(i)));
  }
  fwd[t] = xt.scaled(ct_inv);
  for (std::size_t i = 0; i < n; ++i)
    if (i != t) back[pos[i]] = Poly::variable(R, i);
  back[n - 1] = l;
  std::vector<Poly> g;
  for (auto& f : I.gens()) g.push_back(substitute(f, fwd));
  std::vector<Poly> out;
  for (auto& f : groebner(g)) {
    unsigned k = 255;
    for (auto& x : f.terms()) k = std::min<unsigned>(k, x.m.e[n - 1]);
    std::vector<Term> terms = f.terms();
    for (auto& x : terms) {
      x.m.e[n - 1] = static_cast<std::uint8_t>(x.m.e[n - 1] - k);
      x.m.deg = static_cast<std::uint16_t>(x.m.deg - k);
    }
    out.push_back(substitute(Poly(R2, std::move(terms)), back));
  }
  return Ideal(R, std::move(out));
}

}  // namespace

Ideal saturate(const Ideal& I, const Ideal& J) {
  const RingPtr& R = I.ring();
  if (J.gens().size() == 1 && J.gens().front().degree() == 1 && J.gens().front().is_homogeneous() &&
      is_homogeneous_ideal(I))
    return saturate_by_linear_form(I, J.gens().front());
  Ideal cur(R, I.gb());
  for (;;) {
    Ideal next = quotient(cur, J);
    if (next.gb() == cur.gb()) return next;
    cur = std::move(next);
  }
}

// ---------------------------------------------------------------------------
// Hilbert series.

namespace {

using Series = std::vector<long long>;

void add_into(Series& a, const Series& b, std::size_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
}

std::vector<Mono> minimal_monos(std::vector<Mono> m) {
  std::sort(m.begin(), m.end(), [](const Mono& a, const Mono& b) { return a.deg < b.deg; });
  std::vector<Mono> out;
  for (auto& x : m) {
    bool red = false;
    for (auto& y : out)
      if (y.divides(x)) {
        red = true;
        break;
      }
    if (!red) out.push_back(x);
  }
  return out;
}

Series numerator_rec(std::vector<Mono> M) {
  M = minimal_monos(std::move(M));
  if (M.empty()) return {1};
  if (M.front().deg == 0) return {0};
  // pairwise coprime: product of (1 - t^deg)
  std::uint32_t seen = 0;
  bool coprime = true;
  for (auto& m : M) {
    std::uint32_t s = support_mask(m);
    if (s & seen) {
      coprime = false;
      break;
    }
    seen |= s;
  }
  if (coprime) {
    Series r{1};
    for (auto& m : M) {
      Series nr(r.size() + m.deg, 0);
      for (std::size_t i = 0; i < r.size(); ++i) {
        nr[i] += r[i];
        nr[i + m.deg] -= r[i];
      }
      r = std::move(nr);
    }
    return r;
  }
  // pivot: most frequent variable among non-linear generators, median exponent
  std::array<int, kMaxVars> count{};
  for (auto& m : M)
    if (m.deg > 1)
      for (std::size_t i = 0; i < kMaxVars; ++i)
        if (m.e[i]) ++count[i];
  std::size_t v = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
  std::vector<int> ex;
  for (auto& m : M)
    if (m.e[v]) ex.push_back(m.e[v]);
  std::sort(ex.begin(), ex.end());
  unsigned e = static_cast<unsigned>(ex[ex.size() / 2]);
  for (auto& m : M)
    if (m.deg == m.e[v] && m.e[v] <= e) e = std::max(1u, m.e[v] - 1u);
  Mono p = Mono::var(v, e);
  std::vector<Mono> plus = M;
  plus.push_back(p);
  std::vector<Mono> colon;
  for (auto m : M) {
    unsigned d = std::min<unsigned>(m.e[v], e);
    m.e[v] = static_cast<std::uint8_t>(m.e[v] - d);
    m.deg = static_cast<std::uint16_t>(m.deg - d);
    colon.push_back(m);
  }
  Series a = numerator_rec(std::move(plus));
  Series b = numerator_rec(std::move(colon));
  add_into(a, b, e);
  while (a.size() > 1 && a.back() == 0) a.pop_back();
  return a;
}

long long binom_poly(long long x, int r) {
  // x (x-1) ... (x-r+1) / r!, exact for integer x
  __int128 num = 1, den = 1;
  for (int i = 0; i < r; ++i) {
    num *= (x - i);
    den *= (i + 1);
  }
  return static_cast<long long>(num / den);
}

}  // namespace

std::vector<long long> hilbert_numerator(std::vector<Mono> monos, std::size_t /*n*/) {
  for (auto& m : monos) m.comp = 0;
  return numerator_rec(std::move(monos));
}

long long HilbertData::hilbert_poly_at_zero() const {
  const int D = krull_dim;
  if (D == 0) return 0;
  long long s = 0;
  for (std::size_t k = 0; k < reduced.size(); ++k)
    s += reduced[k] * binom_poly(static_cast<long long>(D) - 1 - static_cast<long long>(k), D - 1);
  return s;
}

long long HilbertData::hilbert_function(int d) const {
  const int n = static_cast<int>(krull_dim);
  long long s = 0;
  for (std::size_t k = 0; k < reduced.size() && static_cast<int>(k) <= d; ++k) {
    if (n == 0) {
      if (static_cast<int>(k) == d) s += reduced[k];
      continue;
    }
    s += reduced[k] * binom_poly(d - static_cast<long long>(k) + n - 1, n - 1);
  }
  return s;
}

HilbertData hilbert(const Ideal& I) {
  if (!is_homogeneous_ideal(I)) throw std::invalid_argument("hilbert: ideal must be homogeneous");
  const std::size_t n = I.ring()->nvars();
  std::vector<Mono> leads;
  for (auto& g : I.gb()) leads.push_back(g.lead().m);
  HilbertData h;
  h.numerator = hilbert_numerator(leads, n);
  Series q = h.numerator;
  int c = 0;
  auto at_one = [](const Series& s) { return std::accumulate(s.begin(), s.end(), 0LL); };
  while (c < static_cast<int>(n) && at_one(q) == 0 && !(q.size() == 1 && q[0] == 0)) {
    // synthetic division by (1 - t)
    Series r(q.size() - 1, 0);
    long long acc = 0;
    for (std::size_t i = 0; i + 1 < q.size(); ++i) {
      acc += q[i];
      r[i] = acc;
    }
    q = r.empty() ? Series{0} : r;
    ++c;
  }
  h.reduced = q;
  h.krull_dim = static_cast<int>(n) - c;
  h.degree = at_one(q);
  if (q.size() == 1 && q[0] == 0) {
    h.krull_dim = 0;
    h.degree = 0;
  }
  return h;
}

}  // namespace g11
