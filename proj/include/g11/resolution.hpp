#pragma once

#include <functional>
#include <map>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "g11/groebner.hpp"

namespace g11 {

struct BettiTable {
  std::map<std::pair<int, int>, long long> entries;  // (i, j) -> beta_{i,j}

  long long get(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
  void set(int i, int j, long long v) {
    if (v) entries[{i, j}] = v;
    else entries.erase({i, j});
  }
  /// Grid with rows j-i, columns i, dots for zero.
  std::string to_grid() const;
  bool operator==(const BettiTable&) const = default;
};

/// maps[k] : F_{k+1} -> F_k, with F_0 = S.
struct Resolution {
  std::vector<FreeModuleMap> maps;
  bool minimal = false;
  std::size_t length() const { return maps.size(); }
  std::vector<int> degrees(std::size_t k) const;  // generator degrees of F_k
};

/// Free resolution of S/I up to homological degree `length`. With max_degree
/// >= 0, syzygies above that internal degree are not computed.
Resolution resolve(const Ideal& I, std::size_t length, int max_degree = -1);
Resolution minimalize(const Resolution& R);
BettiTable betti_table(const Resolution& R);
/// True if all consecutive composites vanish.
bool is_complex(const Resolution& R);

/// Comparison maps V^0..V^L with tgt.maps[k-1] V^k = V^{k-1} src.maps[k-1].
std::vector<FreeModuleMap> chain_map(const Resolution& src, const Resolution& tgt, const FreeModuleMap& start);

/// Graded pieces of A = S/I: standard monomial bases and multiplication maps.
class GradedQuotient {
public:
  explicit GradedQuotient(const Ideal& I);

  const Ideal& ideal() const { return I_; }
  const std::vector<Mono>& basis(int d) const;
  std::size_t dim(int d) const { return d < 0 ? 0 : basis(d).size(); }
  /// Coordinates of the class of a homogeneous f of degree d.
  std::vector<Scalar> coords(const Poly& f, int d) const;
  Poly element(int d, std::span<const Scalar> x) const;
  /// Multiplication by x_v as a map A_d -> A_{d+1} (column j = image of basis j).
  const Matrix& multiplication(std::size_t v, int d) const;

private:
  Ideal I_;
  mutable std::map<int, std::vector<Mono>> basis_;
  mutable std::map<int, std::unordered_map<Mono, std::size_t, MonoHash>> index_;
  mutable std::map<std::pair<std::size_t, int>, Matrix> mult_;
};

/// Lexicographically ordered i-subsets of {0..n-1} as bitmasks.
std::vector<std::uint32_t> wedge_basis(std::size_t n, std::size_t i);

/// Matrix of the Koszul differential  wedge^i V (x) A_q -> wedge^{i-1} V (x) A_{q+1}.
Matrix koszul_differential(const GradedQuotient& A, std::size_t i, int q);
/// Same shape with arbitrary multiplication maps mult(v) : A_q -> A_{q+1} (dt x ds).
Matrix koszul_differential(const Field& F, std::size_t n, std::size_t i, std::size_t ds, std::size_t dt,
                           const std::function<const Matrix&(std::size_t)>& mult);

/// beta_{i,j}(S/I) as Koszul homology at wedge^i V (x) A_{j-i}.
long long koszul_betti(const GradedQuotient& A, int i, int j);
long long koszul_betti(const Ideal& I, int i, int j);

/// Cuts a homogeneous ideal by `cuts` generic linear forms: eliminates the
/// last `cuts` variables by random linear substitutions. Returns the ideal in
/// the smaller ring plus the substitution images of all original variables.
struct LinearSection {
  Ideal ideal;
  std::vector<Poly> images;  // image of x_i in the smaller ring
};
LinearSection linear_section(const Ideal& I, std::size_t cuts, std::mt19937_64& rng);

}  // namespace g11
