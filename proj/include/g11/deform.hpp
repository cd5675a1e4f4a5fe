#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "g11/canonical.hpp"

namespace g11 {

/// Tangent space to the equisingular family through the model: unknowns are
/// the coefficient deltas of the form followed by (dX, dY) per singular point
/// (affine chart z = 1), with one coefficient normalized.
struct SeveriTangentReport {
  int m = 0;  // number of imposed ninth points
  bool octic = false;
  std::size_t unknowns = 0;
  std::size_t rows = 0;
  std::size_t kernel_dim = 0;
  Matrix kernel;  // unknowns x kernel_dim
};
SeveriTangentReport severi_tangent(const PlaneModel& model);

/// Derivative of the ninth base point with respect to the eight points:
/// 2 x 16 matrix, columns (dX_1, dY_1, ..., dX_8, dY_8).
Matrix ninth_point_jacobian(const RingPtr& R, const std::vector<PlanePoint>& eight, const PlanePoint& r);

/// Degree-0 sections of the normal sheaf of the canonical curve, as 36-tuples
/// of elements of (S/I_C)_2 flattened to vectors of length 36 * dim A_2.
struct KodairaSpencerData {
  std::shared_ptr<const GradedQuotient> A;  // S/I_C
  std::vector<Poly> gens;                   // the 36 quadrics, in order
  std::size_t syzygies = 0;                 // linear syzygies used
  Matrix sections;                          // 150 columns
  Matrix trivial;                           // 120 columns
  Matrix complement;                        // T: 30 columns
  std::size_t block() const { return A->dim(2); }
  /// Quadric representatives of a flattened tuple.
  std::vector<Poly> tuple(std::span<const Scalar> v) const;
  bool is_section(std::span<const Scalar> v) const;

 private:
  friend KodairaSpencerData normal_space(const CanonicalCurve& c);
  std::shared_ptr<const Echelon> section_span_;
};
KodairaSpencerData normal_space(const CanonicalCurve& c);

/// First-order obstruction map K_{5,1} -> K_{4,2} of the canonical ring under
/// the deformation sum_t b_t T_t, computed on an Artinian reduction.
/// M = sum_t b_t parts[t].
struct ObstructionMatrix {
  std::size_t size = 0;      // 5k
  std::vector<Matrix> parts;  // one constant matrix per deformation parameter
  std::vector<int> blocks;   // pencil of each source column when built from scrolls
  long long beta_51 = 0, beta_42 = 0;
  Matrix evaluate(std::span<const Scalar> b) const;
  /// Coefficient vector (over b) of entry (i, j).
  std::vector<Scalar> entry(std::size_t i, std::size_t j) const;
};

/// Source basis from the listed scrolls (5 classes each) when given, otherwise
/// an arbitrary complement of the boundaries.
ObstructionMatrix obstruction_matrix(const CanonicalCurve& c, const KodairaSpencerData& ks, std::uint64_t seed,
                                     const std::vector<ScrollData>& scrolls = {});

struct FactorReport {
  bool ok = false;
  std::vector<std::vector<Scalar>> forms;  // l_i as coefficient vectors in b, first nonzero = 1
  std::size_t forms_rank = 0;
  std::vector<std::size_t> w_ranks;  // rank W_i, expected 5(k-1)
  Scalar unit = 0;                   // det M = unit * prod l_i^5
  int det_checks = 0;                // random evaluations of the identity that held
  std::string failure;
};
FactorReport factor_M(const ObstructionMatrix& M, std::uint64_t seed);

/// Dimension of the span of all entries of M as linear forms in b.
std::size_t entry_span_dim(const ObstructionMatrix& M);

struct DifferentialRankReport {
  std::size_t tangent_dim = 0;
  std::size_t image_dim = 0;
  std::size_t intersection = 0;  // image meets the trivial subspace
  std::size_t rank = 0;          // rank of the composite to the quotient
  std::size_t pgl_rank = 0;
  bool pgl_in_intersection = false;
  bool image_in_normal_space = false;
};
DifferentialRankReport differential_rank(const CanonicalCurve& c, const KodairaSpencerData& ks,
                                         const SeveriTangentReport& sev);

}  // namespace g11
