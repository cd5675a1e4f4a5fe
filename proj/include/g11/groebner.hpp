#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "g11/poly.hpp"

namespace g11 {

struct GroebnerOptions {
  int max_sugar = -1;  // drop pairs of larger sugar (degree truncation); -1 = none
};

/// Reduced Groebner basis (monic, sorted by increasing lead term). Inputs may
/// be module elements when their ring carries a module order.
std::vector<Poly> groebner(const std::vector<Poly>& gens, const GroebnerOptions& opt = {});

/// Full reduction of f modulo G (any finite list; remainder w.r.t. G's leads).
Poly normal_form(const Poly& f, const std::vector<Poly>& G);

/// Exact quotient f / g; nullopt if g does not divide f.
std::optional<Poly> divide_exact(const Poly& f, const Poly& g);

/// Ideal with a write-once cached Groebner basis.
class Ideal {
public:
  Ideal() = default;
  Ideal(RingPtr R, std::vector<Poly> gens);

  const RingPtr& ring() const { return R_; }
  const std::vector<Poly>& gens() const { return gens_; }
  const std::vector<Poly>& gb() const;
  bool contains(const Poly& f) const { return normal_form(f, gb()).is_zero(); }
  bool contains(const Ideal& J) const;
  bool is_unit() const;
  bool operator==(const Ideal& o) const { return gb() == o.gb(); }

  /// Generators of degree d (homogeneous ideals).
  std::vector<Poly> gens_of_degree(int d) const;

private:
  RingPtr R_;
  std::vector<Poly> gens_;
  mutable std::shared_ptr<const std::vector<Poly>> gb_;
};

Ideal operator+(const Ideal& a, const Ideal& b);

/// Graded map of free modules  F_src = sum S(-src_deg[j]) -> F_tgt = sum S(-tgt_deg[i]).
struct FreeModuleMap {
  RingPtr ring;
  std::vector<int> src_deg, tgt_deg;
  std::vector<std::vector<Poly>> entries;  // entries[i][j]

  FreeModuleMap() = default;
  FreeModuleMap(RingPtr R, std::vector<int> tgt, std::vector<int> src);

  std::size_t rows() const { return tgt_deg.size(); }
  std::size_t cols() const { return src_deg.size(); }
  Poly& at(std::size_t i, std::size_t j) { return entries[i][j]; }
  const Poly& at(std::size_t i, std::size_t j) const { return entries[i][j]; }
  std::vector<Poly> column(std::size_t j) const;
  void set_column(std::size_t j, const std::vector<Poly>& v);

  bool is_zero() const;
  bool operator==(const FreeModuleMap& o) const {
    return src_deg == o.src_deg && tgt_deg == o.tgt_deg && entries == o.entries;
  }
  /// Every nonzero entry homogeneous of the degree dictated by the shifts.
  bool is_graded() const;
  /// True if some entry is a nonzero constant.
  bool has_unit_entry() const;

  /// Row of generators: the map S(-deg f_j) -> S.
  static FreeModuleMap row(const RingPtr& R, const std::vector<Poly>& f);
  static FreeModuleMap identity(const RingPtr& R, const std::vector<int>& degs);
  FreeModuleMap columns(const std::vector<std::size_t>& idx) const;
};

FreeModuleMap compose(const FreeModuleMap& a, const FreeModuleMap& b);  // a*b
FreeModuleMap operator+(const FreeModuleMap& a, const FreeModuleMap& b);
FreeModuleMap operator-(const FreeModuleMap& a);

/// Generators of the kernel of F (graded maps are minimalized). With
/// max_degree >= 0 only syzygies of degree <= max_degree are produced.
FreeModuleMap syzygies(const FreeModuleMap& F, int max_degree = -1);

/// Minimal generators of ker F in degrees [lo, hi], computed degreewise by
/// linear algebra. Agrees with syzygies() truncated at hi for graded F.
FreeModuleMap syzygies_linear_algebra(const FreeModuleMap& F, int lo, int hi);

/// Solves G * X = B for graded maps (degreewise linear algebra).
struct LiftResult {
  std::optional<FreeModuleMap> X;
  std::optional<std::size_t> failed_column;
  bool ok() const { return X.has_value(); }
};
LiftResult lift_through(const FreeModuleMap& G, const FreeModuleMap& B);

/// Drops generators that are combinations of the others (graded case).
FreeModuleMap prune_generators(const FreeModuleMap& F);

/// I intersected with the subring of the variables not in `vars`.
Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& vars);
/// I : J (single quotient) and I : J^infinity.
Ideal quotient(const Ideal& I, const Ideal& J);
Ideal saturate(const Ideal& I, const Ideal& J);
Ideal intersect(const Ideal& I, const Ideal& J);

struct HilbertData {
  std::vector<long long> numerator;  // of HS(t) = N(t)/(1-t)^n
  std::vector<long long> reduced;    // Q(t) with N = (1-t)^(n-krull) Q
  int krull_dim = 0;
  long long degree = 0;
  int projective_dim() const { return krull_dim - 1; }
  /// Constant term of the Hilbert polynomial (krull_dim <= 2).
  long long hilbert_poly_at_zero() const;
  /// Arithmetic genus 1 - HP(0) for curves.
  long long genus() const { return 1 - hilbert_poly_at_zero(); }
  /// Hilbert function value in degree d from the series.
  long long hilbert_function(int d) const;
};
/// Hilbert data of S/I for homogeneous I.
HilbertData hilbert(const Ideal& I);
/// Numerator of the Hilbert series of S/(monomials) in n variables.
std::vector<long long> hilbert_numerator(std::vector<Mono> monos, std::size_t n);

}  // namespace g11
