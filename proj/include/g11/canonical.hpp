#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "g11/plane.hpp"
#include "g11/resolution.hpp"

namespace g11 {

struct GenericityFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Canonical model in P^10 = Proj K[x0..x10], x_i <-> adjoint form a_i.
struct CanonicalCurve {
  std::shared_ptr<const PlaneModel> model;
  std::vector<Poly> adjoints;  // plane forms of degree d-3
  RingPtr ring;                // K[x0..x10]
  Ideal ideal;                 // 36 quadrics

  /// Linear form on P^10 of an adjoint combination; nullopt if outside the span.
  std::optional<Poly> linear_form(const Poly& adjoint) const;
};

/// Forms of degree d-3 with multiplicity m-1 at every m-fold point.
std::vector<Poly> adjoint_basis(const PlaneModel& m);
CanonicalCurve canonical_ideal(const PlaneModel& m);
/// Model plus canonical ideal with every realized pencil of type I; on
/// GenericityFailure the model is redrawn
/// from a derived seed, at most `retries` times in total.
CanonicalCurve canonical_curve(int k, const Field& F, std::uint64_t seed, int retries = 20);

struct PencilSections {
  int pencil = 0;             // index into model.pencils
  bool multiplication = true;  // residual system realized by plane forms
  std::vector<Poly> residual;  // 6 plane forms (multiplication method only)
  std::vector<Poly> fiber0;    // 6 linear forms on P^10 vanishing on the fiber of s0
  std::vector<Poly> fiber1;    // same for s1
  std::size_t h0_K_minus_2L = 0;
  bool type_one() const { return h0_K_minus_2L == 1; }
};
PencilSections pencil_sections(const CanonicalCurve& c, int pencil);

struct ScrollData {
  int pencil = 0;
  std::array<std::vector<Poly>, 2> matrix;  // 2 x 6 linear forms
  std::vector<Poly> minors;                 // 15 quadrics
  Ideal ideal;
};
ScrollData scroll(const CanonicalCurve& c, const PencilSections& ps);
ScrollData scroll(const CanonicalCurve& c, int pencil);

/// True if every 2x2 minor lies in the curve ideal.
bool minors_in_ideal(const ScrollData& s, const Ideal& I);

struct SyzygySchemeReport {
  std::vector<int> subset;  // pencil indices
  int a = 0, b = 0;         // line/conic vs cubic-type pencils
  int dim = -1;             // projective dimension
  long long degree = 0;
  std::optional<long long> genus;
  BettiTable linear_strand;  // beta_{i,i+1}, i = 0..3
};
SyzygySchemeReport syzygy_scheme(const CanonicalCurve& c, const std::vector<ScrollData>& scrolls,
                                 const std::vector<int>& subset);
bool counts_as_a(PencilKind k);

}  // namespace g11
