// Acceptance run: one PASS/FAIL line per criterion, over the default
// configuration and three more (prime, seed) pairs.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "g11/verify.hpp"
#include "oracles.hpp"

using namespace g11;

namespace {

struct Config {
  Scalar p;
  std::uint64_t seed;
};

const std::vector<Config> kConfigs{{12347, 42}, {101, 1}, {7919, 123}, {32003, 7}};
const std::vector<int> kAllK{4, 5, 6, 7, 8, 9, 10, 20};

struct Outcome {
  bool pass = true;
  json record = json::array();
  std::string note;
  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (note.size() < 400) note += (note.empty() ? "" : "; ") + what;
    }
  }
};

class Curves {
 public:
  explicit Curves(Config c) : cfg_(c), F_(c.p) {}
  const CanonicalCurve& get(int k) {
    auto it = cache_.find(k);
    if (it == cache_.end()) it = cache_.emplace(k, canonical_curve(k, F_, cfg_.seed, 20)).first;
    return it->second;
  }
  const Field& field() const { return F_; }
  Config config() const { return cfg_; }

 private:
  Config cfg_;
  Field F_;
  std::map<int, CanonicalCurve> cache_;
};

std::string tag(Config c) { return "p=" + std::to_string(c.p) + " seed=" + std::to_string(c.seed); }

// ---------------------------------------------------------------------------

Matrix random_matrix(const Field& F, std::size_t r, std::size_t c, int shape, std::mt19937_64& rng) {
  Matrix m(F, r, c);
  auto rnd = [&] { return static_cast<Scalar>(rng() % F.prime()); };
  if (shape == 3) {  // low rank product
    std::size_t inner = 1 + rng() % std::max<std::size_t>(1, std::min(r, c) / 2);
    Matrix a(F, r, inner), b(F, inner, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < inner; ++j) a(i, j) = rnd();
    for (std::size_t i = 0; i < inner; ++i)
      for (std::size_t j = 0; j < c; ++j) b(i, j) = rnd();
    return a * b;
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      if (shape == 4 && rng() % 5) continue;  // sparse
      if (shape == 5) continue;                // zero
      m(i, j) = rnd();
    }
  return m;
}

void criterion1(Curves& cv, Outcome& o) {
  const Field& F = cv.field();
  std::mt19937_64 rng(cv.config().seed);
  const char* names[] = {"square", "tall", "wide", "low-rank", "sparse", "zero"};
  for (int shape = 0; shape < 6; ++shape) {
    int good = 0;
    for (int t = 0; t < 100; ++t) {
      std::size_t r = 1 + rng() % 30, c = 1 + rng() % 30;
      if (shape == 0) c = r;
      if (shape == 1) r = c + 1 + rng() % 10;
      if (shape == 2) c = r + 1 + rng() % 10;
      auto A = random_matrix(F, r, c, shape, rng);
      auto K = kernel_basis(A);
      std::vector<std::vector<long long>> rows(r, std::vector<long long>(c));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) rows[i][j] = A(i, j);
      const std::size_t rk = rank(A);
      bool ok = rk + K.cols() == c && rk == oracle::rank(rows, F.prime()) && K.rows() == c;
      if (ok && K.cols()) {
        auto Z = A * K;
        ok = std::all_of(Z.data().begin(), Z.data().end(), [](Scalar x) { return x == 0; }) && rank(K) == K.cols();
      }
      good += ok;
    }
    o.record.push_back({{"config", tag(cv.config())}, {"shape", names[shape]}, {"passed", good}});
    o.check(good == 100, tag(cv.config()) + " " + names[shape] + " " + std::to_string(good) + "/100");
  }
}

// ---------------------------------------------------------------------------

oracle::P to_oracle(const Poly& f) {
  oracle::P out;
  for (auto& t : f.terms()) {
    oracle::Exp e(f.ring()->nvars());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = t.m.e[i];
    out[e] = t.c;
  }
  return out;
}

void criterion2(Curves& cv, Outcome& o) {
  const Field& F = cv.field();
  std::mt19937_64 rng(cv.config().seed + 1);
  int agree = 0;
  for (int t = 0; t < 25; ++t) {
    auto R = Ring::make(F, 2 + rng() % 3);
    std::vector<Poly> gens;
    const int ng = 1 + static_cast<int>(rng() % 4);
    for (int g = 0; g < ng; ++g) {
      std::vector<Term> terms;
      const int nt = 1 + static_cast<int>(rng() % 3);
      for (int s = 0; s < nt; ++s) {
        auto basis = graded_basis(*R, static_cast<int>(rng() % 4));
        terms.push_back({basis[rng() % basis.size()], static_cast<Scalar>(1 + rng() % (F.prime() - 1))});
      }
      gens.emplace_back(R, terms);
    }
    auto G = groebner(gens);
    std::vector<oracle::P> og;
    for (auto& g : gens) og.push_back(to_oracle(g));
    auto O = oracle::groebner(og, F.prime());
    bool same = G.size() == O.size();
    for (std::size_t i = 0; same && i < G.size(); ++i) same = to_oracle(G[i]) == O[i];
    agree += same;
  }
  o.record.push_back({{"config", tag(cv.config())}, {"agree", agree}});
  o.check(agree == 25, tag(cv.config()) + " " + std::to_string(agree) + "/25");
}

// ---------------------------------------------------------------------------

void criterion3(Curves& cv, Outcome& o) {
  for (int k : kAllK) {
    const auto& c = cv.get(k);
    auto rep = verify_model(*c.model);
    auto h = hilbert(c.ideal);
    json r{{"config", tag(cv.config())}, {"k", k}, {"attempts", c.model->attempts}, {"model_ok", rep.ok()},
           {"genus", rep.genus}, {"quadrics", c.ideal.gens().size()}, {"dim", h.projective_dim()},
           {"degree", h.degree}};
    o.record.push_back(r);
    o.check(rep.ok() && rep.genus == 11 && c.ideal.gens().size() == 36 && h.projective_dim() == 1 && h.degree == 20,
            tag(cv.config()) + " k=" + std::to_string(k));
  }
}

void criterion4(Curves& cv, Outcome& o) {
  for (int k = 5; k <= 10; ++k) {
    auto b = canonical_betti(cv.get(k), cv.config().seed);
    o.record.push_back({{"config", tag(cv.config())}, {"k", k}, {"betti", to_json(b)}});
    o.check(b.get(1, 2) == 36 && b.get(2, 3) == 160, tag(cv.config()) + " k=" + std::to_string(k) + " linear start");
    o.check(b.get(4, 6) == 5 * k && b.get(5, 6) == 5 * k, tag(cv.config()) + " k=" + std::to_string(k) + " 5k");
  }
}

void criterion5(Curves& cv, Outcome& o) {
  for (int k = 5; k <= 10; ++k) {
    auto r = run_assertion("severi-tangent", cv.get(k), cv.config().seed);
    o.record.push_back(r.to_json());
    o.check(r.pass, tag(cv.config()) + " k=" + std::to_string(k));
  }
}

void criterion6(Curves& cv, Outcome& o) {
  for (int k : kAllK) {
    auto r = run_assertion("normal-150", cv.get(k), cv.config().seed);
    o.record.push_back(r.to_json());
    o.check(r.pass, tag(cv.config()) + " k=" + std::to_string(k));
  }
}

void criterion7(Curves& cv, Outcome& o) {
  for (int k : {5, 10}) {
    auto r = run_assertion("detM-factorization", cv.get(k), cv.config().seed);
    o.record.push_back(r.to_json());
    o.check(r.pass, tag(cv.config()) + " detM k=" + std::to_string(k));
  }
  auto r = run_assertion("g310", cv.get(20), cv.config().seed);
  o.record.push_back(r.to_json());
  o.check(r.pass, tag(cv.config()) + " g310");
  for (int k : kAllK) {
    auto b = canonical_betti(cv.get(k), cv.config().seed, true);
    o.record.push_back({{"config", tag(cv.config())}, {"k", k}, {"beta_56", b.get(5, 6)}});
    o.check(b.get(5, 6) == 5 * k, tag(cv.config()) + " beta_56/5 != " + std::to_string(k));
  }
}

void criterion8(Curves& cv, Outcome& o) {
  for (int k : {5, 10}) {
    auto r = run_assertion("differential-rank", cv.get(k), cv.config().seed);
    o.record.push_back(r.to_json());
    o.check(r.pass, tag(cv.config()) + " k=" + std::to_string(k));
  }
}

struct TableRow {
  int dim;
  long long deg, genus;
  long long b12, b23, b34;
};

// (a, b) -> syzygy scheme data of a nine-pencil curve
TableRow expected_row(int a, int b) {
  const TableRow curve{1, 20, 11, 36, 160, 315}, plus_line{1, 21, 12, 35, 151, 279};
  if (a + b >= 7) return curve;
  if (a + b == 2) return {2, 18, -1, 27, 96, 127};
  if (b == 0) return a == 3 ? TableRow{2, 16, -1, 29, 112, 182} : TableRow{2, 15, -1, 30, 120, 210};
  if (b == 1 || (a == 0 && b == 3)) return plus_line;
  return curve;
}

void criterion9(Curves& cv, Outcome& o, bool every_subset) {
  const auto& c = cv.get(9);
  auto sc = all_scrolls(c);
  std::vector<std::vector<int>> subsets;
  std::set<std::pair<int, int>> seen;
  for (unsigned mask = 0; mask < (1u << 9); ++mask) {
    std::vector<int> s;
    int a = 0, b = 0;
    for (int i = 0; i < 9; ++i)
      if (mask >> i & 1) {
        s.push_back(i);
        (counts_as_a(c.model->pencils[i].kind) ? a : b)++;
      }
    if (s.size() < 2) continue;
    if (every_subset || seen.insert({a, b}).second) subsets.push_back(s);
  }
  int good = 0;
  for (auto& s : subsets) {
    auto r = syzygy_scheme(c, sc, s);
    auto e = expected_row(r.a, r.b);
    bool ok = r.dim == e.dim && r.degree == e.deg && (e.genus < 0 ? r.dim != 1 : r.genus == e.genus);
    bool strand = r.linear_strand.get(1, 2) == e.b12 && r.linear_strand.get(2, 3) == e.b23 &&
                  r.linear_strand.get(3, 4) == e.b34;
    json j = to_json(r);
    j["config"] = tag(cv.config());
    o.record.push_back(j);
    o.check(ok && strand, tag(cv.config()) + " " + table_row(r));
    good += ok && strand;
  }
  o.note += (o.note.empty() ? "" : "; ");
  o.note += tag(cv.config()) + ": " + std::to_string(good) + "/" + std::to_string(subsets.size()) + " subsets";
}

// ---------------------------------------------------------------------------

using Criterion = std::function<void(Curves&, Outcome&, bool)>;

struct Entry {
  int id;
  std::string name;
  Criterion run;
};

std::vector<Entry> criteria() {
  auto plain = [](void (*f)(Curves&, Outcome&)) { return [f](Curves& c, Outcome& o, bool) { f(c, o); }; };
  return {{1, "kernel correctness", plain(criterion1)},
          {2, "groebner oracle equivalence", plain(criterion2)},
          {3, "construction", plain(criterion3)},
          {4, "betti numbers", plain(criterion4)},
          {5, "severi tangents", plain(criterion5)},
          {6, "normal space chain", plain(criterion6)},
          {7, "det M factorization", plain(criterion7)},
          {8, "differential ranks", plain(criterion8)},
          {9, "syzygy scheme tables", criterion9}};
}

// Runs one criterion on one configuration; exceptions count as failures.
Outcome run_one(const Entry& e, Curves& cv, bool full) {
  Outcome o;
  try {
    e.run(cv, o, full);
  } catch (const std::exception& ex) {
    o.check(false, tag(cv.config()) + " threw: " + ex.what());
  }
  return o;
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  std::vector<Curves> curves;
  for (auto c : kConfigs) curves.emplace_back(c);
  bool all = true;
  const auto list = criteria();
  std::vector<std::string> default_records;
  for (auto& e : list) {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    std::string note;
    for (std::size_t i = 0; i < curves.size(); ++i) {
      auto o = run_one(e, curves[i], i == 0);
      if (i == 0) default_records.push_back(o.record.dump());
      pass = pass && o.pass;
      if (!o.note.empty()) note += (note.empty() ? "" : "; ") + o.note;
    }
    all = all && pass;
    std::printf("criterion %d %s: %s (%.1f s)%s%s\n", e.id, pass ? "PASS" : "FAIL", e.name.c_str(), since(t0),
                note.empty() ? "" : " | ", note.c_str());
    std::fflush(stdout);
  }

  // rerun every criterion on the default configuration from scratch
  Outcome det;
  auto t0 = std::chrono::steady_clock::now();
  Curves fresh(kConfigs[0]);
  for (std::size_t i = 0; i < list.size(); ++i) {
    auto o = run_one(list[i], fresh, true);
    det.check(o.record.dump() == default_records[i], "criterion " + std::to_string(list[i].id) + " differs on rerun");
  }
  all = all && det.pass;
  std::printf("criterion 10 %s: determinism (%.1f s)%s%s\n", det.pass ? "PASS" : "FAIL", since(t0),
              det.note.empty() ? "" : " | ", det.note.c_str());
  return all ? 0 : 1;
}
