#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "g11/groebner.hpp"

namespace g11 {

/// Point of P^2, normalized so that the last nonzero coordinate is 1.
struct PlanePoint {
  std::array<Scalar, 3> x{0, 0, 1};
  static PlanePoint normalized(const Field& F, std::array<Scalar, 3> v);
  bool operator==(const PlanePoint&) const = default;
};

struct SingularitySpec {
  PlanePoint p;
  int mult = 2;
};

enum class PencilKind { LineThroughTriple, ConicThroughTriples, CubicResidual, LineThroughNode, FourSecant };
const char* to_string(PencilKind k);

/// Pencil of plane curves cutting a g^1_6; `base` is the assigned base divisor
/// (point with the intersection multiplicity it absorbs).
struct PencilSpec {
  PencilKind kind;
  int index = 0;  // P_i, Q_j or node number, 1-based
  Poly s0, s1;
  std::vector<SingularitySpec> base;
  std::string label;
};

struct PlaneModel {
  int k = 0;
  int degree = 9;
  RingPtr ring;  // K[x,y,z]
  Poly form;
  std::vector<SingularitySpec> specs;
  std::vector<PlanePoint> extra;  // simple base points R_l
  std::vector<std::vector<int>> extra_sources;  // spec indices of the eight points defining each R_l
  std::vector<PencilSpec> pencils;
  std::uint64_t seed = 0;
  int expected_genus = 11;
  int attempts = 1;
};

struct RetryExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnsupportedK : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

RingPtr plane_ring(const Field& F);

/// Linear conditions on the coefficients (graded_basis order) of a degree-d
/// form for multiplicity >= m at p: all order m-1 partials vanish.
Matrix singular_conditions(const Ring& R, const PlanePoint& p, int m, int d);
/// Stacked conditions of a list of specs plus simple points.
Matrix condition_matrix(const Ring& R, int d, const std::vector<SingularitySpec>& specs,
                        const std::vector<PlanePoint>& simple = {});
/// Basis of forms of degree d with the given multiplicities.
std::vector<Poly> linear_system(const RingPtr& R, int d, const std::vector<SingularitySpec>& specs,
                                const std::vector<PlanePoint>& simple = {});

/// Ninth base point of the cubic pencil through eight points.
PlanePoint ninth_base_point(const RingPtr& R, const std::vector<PlanePoint>& eight);

/// Random model with k pencils; throws UnsupportedK or RetryExhausted.
PlaneModel random_model(int k, const Field& F, std::uint64_t seed, int retries = 20);
bool supported_k(int k);

struct ModelCheck {
  std::string name;
  bool pass;
  std::string detail;
};
struct ModelReport {
  std::vector<ModelCheck> checks;
  long long genus = 0;
  bool ok() const;
};
ModelReport verify_model(const PlaneModel& m);

/// Tangent cone at p of a form with multiplicity m there, as a binary form
/// in local coordinates (u, v); returned as coefficients of u^i v^(m-i).
std::vector<Scalar> tangent_cone(const Poly& f, const PlanePoint& p, int m);
bool binary_form_squarefree(const Field& F, const std::vector<Scalar>& coeffs);
/// Exact multiplicity of f at p (0 if f(p) != 0).
int multiplicity_at(const Poly& f, const PlanePoint& p);

/// Linear forms vanishing at p (two of them).
std::vector<Poly> lines_through(const RingPtr& R, const PlanePoint& p);

}  // namespace g11
