#pragma once

#include <unordered_map>
#include <utility>
#include <vector>

#include "g11/groebner.hpp"
#include "g11/matrix.hpp"

namespace g11 {

/// Degree-d piece of the free module sum_c S(-shifts[c]) with flat coordinates.
class GradedPiece {
public:
  GradedPiece(RingPtr R, std::vector<int> shifts, int d);

  std::size_t size() const { return size_; }
  int degree() const { return d_; }
  const std::vector<Mono>& basis(std::size_t comp) const { return basis_[comp]; }
  std::size_t offset(std::size_t comp) const { return offset_[comp]; }
  std::vector<Scalar> coords(const std::vector<Poly>& v) const;
  std::vector<Poly> element(std::span<const Scalar> x) const;
  /// Component and monomial of a flat coordinate.
  std::pair<std::size_t, Mono> locate(std::size_t flat) const;

private:
  RingPtr R_;
  std::vector<int> shifts_;
  int d_;
  std::size_t size_ = 0;
  std::vector<std::size_t> offset_;
  std::vector<std::vector<Mono>> basis_;
  std::vector<std::unordered_map<Mono, std::size_t, MonoHash>> index_;
};

/// Matrix of F restricted to degree d (columns: source basis, rows: target basis).
Matrix map_matrix(const FreeModuleMap& F, int d);

/// Coordinate vectors of all monomial multiples of the generators landing in degree d.
std::vector<std::vector<Scalar>> submodule_piece(const RingPtr& R, const std::vector<int>& shifts,
                                                 const std::vector<std::vector<Poly>>& gens,
                                                 const std::vector<int>& gen_deg, int d);

}  // namespace g11
