#pragma once
// Independent reference implementations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using i64 = long long;

inline i64 md(i64 a, i64 p) { return ((a % p) + p) % p; }
inline i64 pw(i64 a, i64 e, i64 p) {
  i64 r = 1;
  a = md(a, p);
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

/// Fraction-free (cross-multiplying) elimination rank over GF(p).
inline std::size_t rank(std::vector<std::vector<i64>> a, i64 p) {
  std::size_t r = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && md(a[piv][c], p) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      i64 f = md(a[i][c], p), g = md(a[r][c], p);
      if (!f) continue;
      for (std::size_t j = c; j < cols; ++j) a[i][j] = md(g * a[i][j] - f * a[r][j], p);
    }
    ++r;
  }
  return r;
}

/// Determinant by cofactor expansion (small matrices only).
inline i64 det(const std::vector<std::vector<i64>>& a, i64 p) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return md(a[0][0], p);
  i64 s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<i64>> m;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<i64> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      m.push_back(row);
    }
    i64 t = md(a[0][j], p) * det(m, p) % p;
    s = md(j % 2 ? s - t : s + t, p);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Naive Groebner bases: map exponent-vector -> coefficient, grevlex.

using Exp = std::vector<int>;
struct GrevlexGreater {
  bool operator()(const Exp& a, const Exp& b) const {
    int da = 0, db = 0;
    for (auto x : a) da += x;
    for (auto x : b) db += x;
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};
using P = std::map<Exp, i64, GrevlexGreater>;

inline void clean(P& f) {
  for (auto it = f.begin(); it != f.end();) it = it->second == 0 ? f.erase(it) : std::next(it);
}
inline bool divides(const Exp& a, const Exp& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}
inline P sub_mul(const P& f, const P& g, const Exp& m, i64 c, i64 p) {
  P r = f;
  for (auto& [e, v] : g) {
    Exp x = e;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += m[i];
    r[x] = md(r[x] - c * v, p);
  }
  clean(r);
  return r;
}
inline P reduce(P f, const std::vector<P>& G, i64 p) {
  P rem;
  while (!f.empty()) {
    auto [e, v] = *f.begin();
    bool done = false;
    for (auto& g : G) {
      if (g.empty()) continue;
      auto& [ge, gv] = *g.begin();
      if (!divides(ge, e)) continue;
      Exp m(e.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = e[i] - ge[i];
      f = sub_mul(f, g, m, v * pw(gv, p - 2, p) % p, p);
      done = true;
      break;
    }
    if (!done) {
      rem[e] = v;
      f.erase(f.begin());
    }
  }
  return rem;
}
inline P monic(P f, i64 p) {
  if (f.empty()) return f;
  i64 inv = pw(f.begin()->second, p - 2, p);
  for (auto& [e, v] : f) v = v * inv % p;
  return f;
}

/// Fixed-point S-pair closure followed by minimalization and interreduction.
inline std::vector<P> groebner(std::vector<P> G, i64 p) {
  std::erase_if(G, [](const P& f) { return f.empty(); });
  bool changed = true;
  while (changed) {
    changed = false;
    const std::size_t n = G.size();
    for (std::size_t i = 0; i < n && !changed; ++i)
      for (std::size_t j = i + 1; j < n && !changed; ++j) {
        const Exp& a = G[i].begin()->first;
        const Exp& b = G[j].begin()->first;
        Exp l(a.size()), ma(a.size()), mb(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) {
          l[k] = std::max(a[k], b[k]);
          ma[k] = l[k] - a[k];
          mb[k] = l[k] - b[k];
        }
        P s;
        s = sub_mul(s, G[i], ma, p - pw(G[i].begin()->second, p - 2, p), p);
        s = sub_mul(s, G[j], mb, pw(G[j].begin()->second, p - 2, p), p);
        P r = reduce(s, G, p);
        if (!r.empty()) {
          G.push_back(r);
          changed = true;
        }
      }
  }
  // minimal
  std::vector<P> M;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool red = false;
    for (std::size_t j = 0; j < G.size() && !red; ++j) {
      if (i == j) continue;
      const Exp& a = G[j].begin()->first;
      const Exp& b = G[i].begin()->first;
      if (divides(a, b) && (a != b || j < i)) red = true;
    }
    if (!red) M.push_back(monic(G[i], p));
  }
  std::vector<P> out;
  for (std::size_t i = 0; i < M.size(); ++i) {
    std::vector<P> others;
    for (std::size_t j = 0; j < M.size(); ++j)
      if (j != i) others.push_back(M[j]);
    P lead;
    lead[M[i].begin()->first] = M[i].begin()->second;
    P tail = M[i];
    tail.erase(tail.begin());
    P r = reduce(tail, others, p);
    r[M[i].begin()->first] = M[i].begin()->second;
    out.push_back(monic(r, p));
  }
  std::sort(out.begin(), out.end(), [](const P& a, const P& b) { return GrevlexGreater{}(b.begin()->first, a.begin()->first); });
  return out;
}

}  // namespace oracle
