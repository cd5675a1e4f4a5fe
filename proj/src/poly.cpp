#include "g11/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace g11 {

Ring::Ring(const Field& F, std::vector<std::string> names, OrderKind order, std::vector<bool> eliminate)
    : F_(F), names_(std::move(names)), order_(order), elim_(std::move(eliminate)) {
  if (names_.size() > kMaxVars) throw std::invalid_argument("too many variables");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw std::invalid_argument("duplicate variable name " + names_[i]);
  if (order_ == OrderKind::Elimination && elim_.size() != names_.size())
    throw std::invalid_argument("elimination mask must cover every variable");
  if (order_ == OrderKind::GRevLex) elim_.clear();
}

RingPtr Ring::make(const Field& F, std::size_t nvars, const std::string& prefix) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back(prefix + std::to_string(i));
  return std::make_shared<const Ring>(F, std::move(names));
}

RingPtr Ring::make(const Field& F, std::vector<std::string> names) {
  return std::make_shared<const Ring>(F, std::move(names));
}

// Degree reverse lexicographic comparison restricted to variables whose mask
// entry equals `want` (all variables when mask is null).
int Ring::grevlex(const Mono& a, const Mono& b, std::size_t n, const std::vector<bool>* mask, bool want) {
  int da = 0, db = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (mask && (*mask)[i] != want) continue;
    da += a.e[i];
    db += b.e[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = n; i-- > 0;) {
    if (mask && (*mask)[i] != want) continue;
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  }
  return 0;
}

int Ring::compare(const Mono& a, const Mono& b) const {
  const std::size_t n = names_.size();
  if (module_) {
    bool ha = a.comp < split_, hb = b.comp < split_;
    if (ha != hb) return ha ? 1 : -1;
    int da = a.deg + shift(a.comp), db = b.deg + shift(b.comp);
    if (da != db) return da > db ? 1 : -1;
  }
  if (order_ == OrderKind::GRevLex) {
    if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
    for (std::size_t i = n; i-- > 0;)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  } else {
    if (int c = grevlex(a, b, n, &elim_, true)) return c;
    if (int c = grevlex(a, b, n, &elim_, false)) return c;
  }
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return 0;
}

RingPtr Ring::with_module_order(std::vector<int> shifts, std::size_t split) const {
  auto r = std::make_shared<Ring>(*this);
  r->module_ = true;
  r->shifts_ = std::move(shifts);
  r->split_ = split;
  return r;
}

RingPtr Ring::base_ring() const {
  auto r = std::make_shared<Ring>(*this);
  r->module_ = false;
  r->shifts_.clear();
  r->split_ = 0;
  return r;
}

RingPtr Ring::with_elimination(std::vector<bool> mask) const {
  return std::make_shared<const Ring>(F_, names_, OrderKind::Elimination, std::move(mask));
}

// ---------------------------------------------------------------------------

namespace {

void normalize_terms(const Ring& R, std::vector<Term>& t) {
  std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return R.compare(a.m, b.m) > 0; });
  std::vector<Term> out;
  out.reserve(t.size());
  const Field& F = R.field();
  for (auto& x : t) {
    if (!out.empty() && out.back().m == x.m) {
      out.back().c = F.add(out.back().c, x.c);
    } else {
      out.push_back(x);
    }
  }
  std::erase_if(out, [](const Term& x) { return x.c == 0; });
  t = std::move(out);
}

}  // namespace

Poly::Poly(RingPtr R, std::vector<Term> terms) : R_(std::move(R)), terms_(std::move(terms)) {
  for (auto& t : terms_) t.c %= R_->field().prime();
  normalize_terms(*R_, terms_);
}

Poly Poly::constant(RingPtr R, Scalar c) {
  Poly p(R);
  c %= R->field().prime();
  if (c) p.terms_.push_back({Mono{}, c});
  return p;
}

Poly Poly::variable(RingPtr R, std::size_t i) {
  if (i >= R->nvars()) throw std::out_of_range("variable index");
  Poly p(R);
  p.terms_.push_back({Mono::var(i), 1});
  return p;
}

Poly Poly::monomial(RingPtr R, const Mono& m, Scalar c) {
  Poly p(R);
  c %= R->field().prime();
  if (c) p.terms_.push_back({m, c});
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (auto& t : terms_) d = std::max<int>(d, t.m.deg);
  return d;
}

bool Poly::is_homogeneous() const {
  for (auto& t : terms_)
    if (t.m.deg != terms_.front().m.deg) return false;
  return true;
}

Scalar Poly::coefficient(const Mono& m) const {
  for (auto& t : terms_)
    if (t.m == m) return t.c;
  return 0;
}

static void check_same_ring(const Poly& a, const Poly& b) {
  if (a.ring() != b.ring() && !(*a.ring() == *b.ring()))
    throw std::invalid_argument("polynomials live in different rings");
}

Poly Poly::operator+(const Poly& o) const {
  check_same_ring(*this, o);
  const Field& F = field();
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int c = i == terms_.size() ? -1 : j == o.terms_.size() ? 1 : R_->compare(terms_[i].m, o.terms_[j].m);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      Scalar s = F.add(terms_[i].c, o.terms_[j].c);
      if (s) out.push_back({terms_[i].m, s});
      ++i;
      ++j;
    }
  }
  Poly r(R_);
  r.terms_ = std::move(out);
  return r;
}

Poly Poly::operator-() const { return scaled(field().neg(1)); }
Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::scaled(Scalar c) const {
  Poly r(R_);
  c %= field().prime();
  if (!c) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.c = field().mul(t.c, c);
  return r;
}

Poly Poly::times_term(const Mono& m, Scalar c) const {
  Poly r(R_);
  if (!c) return r;
  r.terms_.reserve(terms_.size());
  for (auto& t : terms_) r.terms_.push_back({t.m * m, field().mul(t.c, c)});
  // Multiplying by a monomial preserves a monomial order.
  return r;
}

Poly Poly::operator*(const Poly& o) const { return multiply(*this, o); }

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].m == o.terms_[i].m) || terms_[i].c != o.terms_[i].c) return false;
  return true;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field().inv(lead().c));
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  const Field& F = field();
  bool first = true;
  for (auto& t : terms_) {
    long long c = F.to_signed(t.c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    long long a = c < 0 ? -c : c;
    bool need_star = false;
    if (a != 1 || t.m.deg == 0) {
      os << a;
      need_star = true;
    }
    for (std::size_t i = 0; i < R_->nvars(); ++i) {
      if (!t.m.e[i]) continue;
      if (need_star) os << "*";
      os << R_->names()[i];
      if (t.m.e[i] > 1) os << "^" << static_cast<int>(t.m.e[i]);
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

Poly multiply(const Poly& f, const Poly& g) {
  check_same_ring(f, g);
  const Field& F = f.field();
  if (f.is_zero() || g.is_zero()) return Poly(f.ring());
  if (f.size() == 1) return g.times_term(f.lead().m, f.lead().c);
  if (g.size() == 1) return f.times_term(g.lead().m, g.lead().c);
  std::unordered_map<Mono, std::uint64_t, MonoHash> acc;
  acc.reserve(f.size() * g.size());
  const std::uint64_t p = F.prime();
  for (auto& a : f.terms())
    for (auto& b : g.terms()) {
      auto& slot = acc[a.m * b.m];
      slot = (slot + static_cast<std::uint64_t>(a.c) * b.c) % p;
    }
  std::vector<Term> t;
  t.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c) t.push_back({m, static_cast<Scalar>(c)});
  return Poly(f.ring(), std::move(t));
}

Poly partial_derivative(const Poly& f, std::span<const unsigned> orders) {
  const Field& F = f.field();
  std::vector<Term> out;
  for (auto& t : f.terms()) {
    Mono m = t.m;
    Scalar c = t.c;
    bool zero = false;
    for (std::size_t i = 0; i < orders.size() && !zero; ++i) {
      unsigned k = orders[i];
      if (!k) continue;
      if (m.e[i] < k) {
        zero = true;
        break;
      }
      // falling factorial e (e-1) ... (e-k+1)
      for (unsigned j = 0; j < k; ++j) c = F.mul(c, F.from_int(m.e[i] - j));
      m.e[i] = static_cast<std::uint8_t>(m.e[i] - k);
      m.deg = static_cast<std::uint16_t>(m.deg - k);
    }
    if (!zero && c) out.push_back({m, c});
  }
  return Poly(f.ring(), std::move(out));
}

Poly partial_derivative(const Poly& f, std::size_t var, unsigned order) {
  std::vector<unsigned> o(f.ring()->nvars(), 0);
  o.at(var) = order;
  return partial_derivative(f, o);
}

Scalar evaluate(const Poly& f, std::span<const Scalar> point) {
  const Field& F = f.field();
  if (point.size() != f.ring()->nvars()) throw std::invalid_argument("evaluate: point length");
  std::uint64_t acc = 0;
  for (auto& t : f.terms()) {
    Scalar v = t.c;
    for (std::size_t i = 0; i < point.size(); ++i)
      if (t.m.e[i]) v = F.mul(v, F.pow(point[i], t.m.e[i]));
    acc = (acc + v) % F.prime();
  }
  return static_cast<Scalar>(acc);
}

Dual evaluate(const Poly& f, std::span<const Dual> point) {
  const Field& F = f.field();
  if (point.size() != f.ring()->nvars()) throw std::invalid_argument("evaluate: point length");
  Dual acc{};
  for (auto& t : f.terms()) {
    Dual v{t.c, 0};
    for (std::size_t i = 0; i < point.size(); ++i) {
      unsigned e = t.m.e[i];
      if (!e) continue;
      // (a + b eps)^e = a^e + e a^(e-1) b eps
      Dual pw{F.pow(point[i].re, e), F.mul(F.mul(F.from_int(e), F.pow(point[i].re, e - 1)), point[i].eps)};
      v = dual_mul(F, v, pw);
    }
    acc = dual_add(F, acc, v);
  }
  return acc;
}

Poly substitute(const Poly& f, std::span<const Poly> images) {
  if (images.size() != f.ring()->nvars()) throw std::invalid_argument("substitute: arity");
  if (images.empty()) throw std::invalid_argument("substitute: no images");
  RingPtr T = images.front().ring();
  // Cache powers of each image.
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](std::size_t i, unsigned e) -> const Poly& {
    auto& v = powers[i];
    if (v.empty()) v.push_back(Poly::constant(T, 1));
    while (v.size() <= e) v.push_back(v.back() * images[i]);
    return v[e];
  };
  Poly out(T);
  for (auto& t : f.terms()) {
    Poly term = Poly::constant(T, t.c);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (t.m.e[i]) term = term * power(i, t.m.e[i]);
    out = out + term;
  }
  return out;
}

Poly rebase(const Poly& f, RingPtr target) {
  if (target->nvars() != f.ring()->nvars()) throw std::invalid_argument("rebase: variable count");
  return Poly(std::move(target), f.terms());
}

Poly in_component(const Poly& f, RingPtr target, std::size_t comp) {
  std::vector<Term> t = f.terms();
  for (auto& x : t) x.m.comp = static_cast<std::uint16_t>(comp);
  return Poly(std::move(target), std::move(t));
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<Mono> graded_basis(const Ring& R, unsigned d) {
  std::vector<Mono> out;
  const std::size_t n = R.nvars();
  if (n == 0) {
    if (d == 0) out.push_back(Mono{});
    return out;
  }
  Mono m;
  m.deg = static_cast<std::uint16_t>(d);
  // enumerate compositions of d into n parts
  std::vector<unsigned> e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      for (std::size_t k = 0; k < n; ++k) m.e[k] = static_cast<std::uint8_t>(e[k]);
      out.push_back(m);
      return;
    }
    for (unsigned a = left + 1; a-- > 0;) {
      e[i] = a;
      self(self, i + 1, left - a);
    }
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), [&](const Mono& a, const Mono& b) { return R.compare(a, b) > 0; });
  return out;
}

std::vector<Scalar> coefficients_in(const Poly& f, std::span<const Mono> basis) {
  std::vector<Scalar> v(basis.size(), 0);
  const Ring& R = *f.ring();
  // basis is sorted decreasingly, so is f: merge.
  std::size_t j = 0;
  for (auto& t : f.terms()) {
    while (j < basis.size() && R.compare(basis[j], t.m) > 0) ++j;
    if (j == basis.size() || !(basis[j] == t.m))
      throw std::invalid_argument("coefficients_in: term outside the monomial basis");
    v[j] = t.c;
  }
  return v;
}

Poly poly_from_coefficients(const RingPtr& R, std::span<const Mono> basis, std::span<const Scalar> coeffs) {
  std::vector<Term> t;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (coeffs[i]) t.push_back({basis[i], coeffs[i]});
  return Poly(R, std::move(t));
}

BasisCoordinates coordinates_in_basis(const Poly& f, std::span<const Poly> basis) {
  const RingPtr& R = f.ring();
  const Field& F = R->field();
  BasisCoordinates out;
  out.residual = Poly(R);
  if (basis.empty()) {
    if (f.is_zero()) out.coords = std::vector<Scalar>{};
    else out.residual = f;
    return out;
  }
  // collect monomial support
  std::vector<Mono> support;
  auto add = [&](const Poly& p) {
    for (auto& t : p.terms()) support.push_back(t.m);
  };
  for (auto& b : basis) add(b);
  add(f);
  std::sort(support.begin(), support.end(), [&](const Mono& a, const Mono& b) { return R->compare(a, b) > 0; });
  support.erase(std::unique(support.begin(), support.end()), support.end());
  std::vector<std::vector<Scalar>> cols;
  for (auto& b : basis) cols.push_back(coefficients_in(b, support));
  Matrix A = Matrix::from_columns(F, support.size(), cols);
  ColumnSpaceSolver s(A);
  auto rhs = coefficients_in(f, support);
  if (auto x = s.solve(rhs)) {
    out.coords = std::move(*x);
    return out;
  }
  // residual: f minus its projection is not unique; report the echelon residual
  Echelon e(F, support.size());
  for (auto& c : cols) e.insert(c);
  out.residual = poly_from_coefficients(R, support, e.reduce(rhs).residual);
  return out;
}

// ---------------------------------------------------------------------------
// Text parser: sum of terms c*v^a*w^b.

namespace {

struct Lexer {
  const std::string& s;
  std::size_t i = 0;
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip();
    return i >= s.size();
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  long long number() {
    skip();
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) throw std::invalid_argument("expected number at position " + std::to_string(i));
    long long v = std::stoll(s.substr(i, j - i));
    i = j;
    return v;
  }
  std::string ident() {
    skip();
    std::size_t j = i;
    while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
    if (j == i || std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("expected variable at position " + std::to_string(i));
    std::string r = s.substr(i, j - i);
    i = j;
    return r;
  }
};

}  // namespace

Poly parse_poly(const RingPtr& R, const std::string& text) {
  const Field& F = R->field();
  Lexer lx{text};
  std::vector<Term> terms;
  bool first = true;
  while (!lx.eof()) {
    int sign = 1;
    char c = lx.peek();
    if (c == '+' || c == '-') {
      sign = c == '-' ? -1 : 1;
      ++lx.i;
    } else if (!first) {
      throw std::invalid_argument("expected + or - at position " + std::to_string(lx.i));
    }
    first = false;
    Term t{Mono{}, F.from_int(sign)};
    bool need_factor = true;
    while (need_factor) {
      char d = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(d))) {
        t.c = F.mul(t.c, F.from_int(lx.number()));
      } else {
        std::string v = lx.ident();
        auto it = std::find(R->names().begin(), R->names().end(), v);
        if (it == R->names().end()) throw std::invalid_argument("unknown variable " + v);
        std::size_t idx = static_cast<std::size_t>(it - R->names().begin());
        unsigned e = 1;
        if (lx.peek() == '^') {
          ++lx.i;
          e = static_cast<unsigned>(lx.number());
        }
        t.m.e[idx] = static_cast<std::uint8_t>(t.m.e[idx] + e);
        t.m.deg = static_cast<std::uint16_t>(t.m.deg + e);
      }
      if (lx.peek() == '*') {
        ++lx.i;
      } else {
        need_factor = false;
      }
    }
    terms.push_back(t);
  }
  return Poly(R, std::move(terms));
}

// ---------------------------------------------------------------------------

FirstOrderPoly::FirstOrderPoly(Poly base, std::vector<Poly> parts)
    : base_(std::move(base)), parts_(std::move(parts)) {
  for (auto& p : parts_) check_same_ring(base_, p);
}

FirstOrderPoly FirstOrderPoly::constant_part(Poly base, std::size_t nparams) {
  std::vector<Poly> parts(nparams, Poly(base.ring()));
  return FirstOrderPoly(std::move(base), std::move(parts));
}

bool FirstOrderPoly::is_zero() const {
  if (!base_.is_zero()) return false;
  for (auto& p : parts_)
    if (!p.is_zero()) return false;
  return true;
}

FirstOrderPoly FirstOrderPoly::operator+(const FirstOrderPoly& o) const {
  if (o.nparams() != nparams()) throw std::invalid_argument("parameter count mismatch");
  std::vector<Poly> parts;
  for (std::size_t t = 0; t < parts_.size(); ++t) parts.push_back(parts_[t] + o.parts_[t]);
  return {base_ + o.base_, std::move(parts)};
}

FirstOrderPoly FirstOrderPoly::operator-(const FirstOrderPoly& o) const {
  if (o.nparams() != nparams()) throw std::invalid_argument("parameter count mismatch");
  std::vector<Poly> parts;
  for (std::size_t t = 0; t < parts_.size(); ++t) parts.push_back(parts_[t] - o.parts_[t]);
  return {base_ - o.base_, std::move(parts)};
}

FirstOrderPoly FirstOrderPoly::operator*(const FirstOrderPoly& o) const {
  if (o.nparams() != nparams()) throw std::invalid_argument("parameter count mismatch");
  std::vector<Poly> parts;
  for (std::size_t t = 0; t < parts_.size(); ++t) parts.push_back(base_ * o.parts_[t] + parts_[t] * o.base_);
  return {base_ * o.base_, std::move(parts)};
}

}  // namespace g11
