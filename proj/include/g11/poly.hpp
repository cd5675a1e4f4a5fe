#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "g11/field.hpp"
#include "g11/matrix.hpp"

namespace g11 {

inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector with cached total degree. `comp` is the free-module
/// component and stays 0 for ring elements.
struct Mono {
  std::array<std::uint8_t, kMaxVars> e{};
  std::uint16_t deg = 0;
  std::uint16_t comp = 0;

  bool operator==(const Mono&) const = default;

  Mono operator*(const Mono& o) const {
    Mono r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint8_t>(e[i] + o.e[i]);
    r.deg = static_cast<std::uint16_t>(deg + o.deg);
    r.comp = static_cast<std::uint16_t>(comp + o.comp);
    return r;
  }
  /// Exponent-wise divisibility (components must agree; ignored when o.comp==0 is not enforced).
  bool divides(const Mono& o) const {
    if (deg > o.deg || comp != o.comp) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  /// o / this, assuming divides(o). Result has component 0.
  Mono quotient_of(const Mono& o) const {
    Mono r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint8_t>(o.e[i] - e[i]);
    r.deg = static_cast<std::uint16_t>(o.deg - deg);
    return r;
  }
  Mono lcm(const Mono& o) const {
    Mono r;
    r.deg = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      r.e[i] = std::max(e[i], o.e[i]);
      r.deg = static_cast<std::uint16_t>(r.deg + r.e[i]);
    }
    r.comp = comp;
    return r;
  }
  bool coprime(const Mono& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e[i] && o.e[i]) return false;
    return true;
  }
  static Mono var(std::size_t i, unsigned power = 1) {
    Mono m;
    m.e[i] = static_cast<std::uint8_t>(power);
    m.deg = static_cast<std::uint16_t>(power);
    return m;
  }
};

struct MonoHash {
  std::size_t operator()(const Mono& m) const {
    std::uint64_t h = 1469598103934665603ull ^ m.comp;
    for (auto x : m.e) h = (h ^ x) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }
};

enum class OrderKind { GRevLex, Elimination };

/// Polynomial ring K[x_0..x_{n-1}] over a prime field with a monomial order.
class Ring {
public:
  Ring(const Field& F, std::vector<std::string> names, OrderKind order = OrderKind::GRevLex,
       std::vector<bool> eliminate = {});

  /// Ring with variables x0..x{n-1}.
  static std::shared_ptr<const Ring> make(const Field& F, std::size_t nvars,
                                          const std::string& prefix = "x");
  static std::shared_ptr<const Ring> make(const Field& F, std::vector<std::string> names);

  const Field& field() const { return F_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  OrderKind order() const { return order_; }
  const std::vector<bool>& eliminated() const { return elim_; }

  /// Three-way comparison under the ring order (>0: a bigger). With a module
  /// order, components below `split` dominate, then shifted degree, then the
  /// monomial order, then the component index.
  int compare(const Mono& a, const Mono& b) const;

  /// Copy of this ring ordering free-module terms; shifts[c] is the degree of
  /// basis vector e_c.
  std::shared_ptr<const Ring> with_module_order(std::vector<int> shifts, std::size_t split = 0) const;
  /// Copy with the same variables but the plain monomial order.
  std::shared_ptr<const Ring> base_ring() const;
  /// Same variables, elimination order for the masked ones.
  std::shared_ptr<const Ring> with_elimination(std::vector<bool> mask) const;
  bool is_module() const { return module_; }
  const std::vector<int>& shifts() const { return shifts_; }
  int shift(std::size_t comp) const { return comp < shifts_.size() ? shifts_[comp] : 0; }

  bool operator==(const Ring& o) const {
    return F_ == o.F_ && names_ == o.names_ && order_ == o.order_ && elim_ == o.elim_ &&
           module_ == o.module_ && shifts_ == o.shifts_ && split_ == o.split_;
  }

private:
  static int grevlex(const Mono& a, const Mono& b, std::size_t n, const std::vector<bool>* mask,
                     bool want);
  Field F_;
  std::vector<std::string> names_;
  OrderKind order_;
  std::vector<bool> elim_;
  bool module_ = false;
  std::vector<int> shifts_;
  std::size_t split_ = 0;
};

using RingPtr = std::shared_ptr<const Ring>;

struct Term {
  Mono m;
  Scalar c;
};

/// Sparse polynomial; terms distinct, nonzero, sorted decreasingly in the ring order.
class Poly {
public:
  Poly() = default;
  explicit Poly(RingPtr R) : R_(std::move(R)) {}
  Poly(RingPtr R, std::vector<Term> terms);  // sorts, merges, drops zeros

  static Poly constant(RingPtr R, Scalar c);
  static Poly variable(RingPtr R, std::size_t i);
  static Poly monomial(RingPtr R, const Mono& m, Scalar c = 1);

  const RingPtr& ring() const { return R_; }
  const Field& field() const { return R_->field(); }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& lead() const { return terms_.front(); }
  int degree() const;  // -1 for zero
  bool is_homogeneous() const;
  Scalar coefficient(const Mono& m) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(Scalar c) const;
  Poly times_term(const Mono& m, Scalar c) const;
  bool operator==(const Poly& o) const;

  Poly monic() const;

  std::string to_string() const;

private:
  RingPtr R_;
  std::vector<Term> terms_;
};

/// Multiplication f*g.
Poly multiply(const Poly& f, const Poly& g);

/// Iterated formal partial derivative; orders[i] derivatives in variable i.
Poly partial_derivative(const Poly& f, std::span<const unsigned> orders);
Poly partial_derivative(const Poly& f, std::size_t var, unsigned order = 1);

Scalar evaluate(const Poly& f, std::span<const Scalar> point);
Dual evaluate(const Poly& f, std::span<const Dual> point);

/// Substitutes polys[i] for variable i (result lives in the ring of the images).
Poly substitute(const Poly& f, std::span<const Poly> images);

/// Same terms viewed in another ring with the same variables (re-sorted).
Poly rebase(const Poly& f, RingPtr target);
/// Moves every term of f to free-module component `comp`.
Poly in_component(const Poly& f, RingPtr target, std::size_t comp);

/// All monomials of degree d, decreasing in the ring order.
std::vector<Mono> graded_basis(const Ring& R, unsigned d);
std::size_t binomial(std::size_t n, std::size_t k);

/// Coefficient vector of a homogeneous poly in the monomial basis `basis`.
std::vector<Scalar> coefficients_in(const Poly& f, std::span<const Mono> basis);
Poly poly_from_coefficients(const RingPtr& R, std::span<const Mono> basis,
                            std::span<const Scalar> coeffs);

struct BasisCoordinates {
  std::optional<std::vector<Scalar>> coords;
  Poly residual;  // nonzero iff not in the span
  bool ok() const { return coords.has_value(); }
};
/// Expresses f as a combination of the (linearly independent) basis polys.
BasisCoordinates coordinates_in_basis(const Poly& f, std::span<const Poly> basis);

/// Parses the text form, e.g. "3*x^2*y - z^3 + 1".
Poly parse_poly(const RingPtr& R, const std::string& text);

/// Element of R tensor K[b_1..b_n]/(b)^2: base + sum_t b_t * parts[t].
///
/// With a single part this is the dual numbers K[eps]/(eps^2).
class FirstOrderPoly {
public:
  FirstOrderPoly() = default;
  FirstOrderPoly(Poly base, std::vector<Poly> parts);
  static FirstOrderPoly constant_part(Poly base, std::size_t nparams);

  const Poly& base() const { return base_; }
  const std::vector<Poly>& parts() const { return parts_; }
  std::size_t nparams() const { return parts_.size(); }
  bool is_zero() const;

  FirstOrderPoly operator+(const FirstOrderPoly& o) const;
  FirstOrderPoly operator-(const FirstOrderPoly& o) const;
  /// Square-zero product: products of two first-order parts vanish.
  FirstOrderPoly operator*(const FirstOrderPoly& o) const;
  bool operator==(const FirstOrderPoly& o) const { return base_ == o.base_ && parts_ == o.parts_; }

private:
  Poly base_;
  std::vector<Poly> parts_;
};

}  // namespace g11
