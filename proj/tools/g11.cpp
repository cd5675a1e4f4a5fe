// g11: construct genus 11 canonical curves with many g^1_6's and check
// their syzygy and deformation data.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "g11/verify.hpp"

using namespace g11;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kRetry = 3 };

struct Config {
  Scalar prime = Field::kDefaultPrime;
  std::uint64_t seed = 42;
  int k = 9;
  std::optional<int> m;
  int retries = 20;
  std::string curve;
  std::string out;
  std::string format = "json";
  std::vector<std::string> subsets;
  bool linear_strand_only = false;
  std::string assertion;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Stopwatch {
 public:
  explicit Stopwatch(std::string what) : what_(std::move(what)), t0_(std::chrono::steady_clock::now()) {}
  ~Stopwatch() {
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0_;
    std::cerr << what_ << ": " << dt.count() << " s\n";
  }

 private:
  std::string what_;
  std::chrono::steady_clock::time_point t0_;
};

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty() || cfg.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + cfg.out);
  f << text;
}

CanonicalCurve load_curve(const Config& cfg) {
  if (!cfg.curve.empty()) {
    std::ifstream f(cfg.curve);
    if (!f) throw UsageError("cannot read " + cfg.curve);
    try {
      return curve_from_file(json::parse(f));
    } catch (const json::exception& e) {
      throw UsageError(cfg.curve + ": " + e.what());
    }
  }
  int k = cfg.m ? 5 + *cfg.m : cfg.k;
  if (cfg.m && (*cfg.m < 0 || *cfg.m > 4)) throw UsageError("--m must lie in 0..4");
  Stopwatch sw("construct k=" + std::to_string(k));
  return canonical_curve(k, Field(cfg.prime), cfg.seed, cfg.retries);
}

std::vector<int> parse_subset(const std::string& s, int npencils) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    int v = 0;
    try {
      v = std::stoi(tok);
    } catch (const std::exception&) {
      throw UsageError("bad subset entry '" + tok + "'");
    }
    if (v < 1 || v > npencils) throw UsageError("pencil " + tok + " out of range 1.." + std::to_string(npencils));
    out.push_back(v - 1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.size() < 2) throw UsageError("a subset needs at least two pencils");
  return out;
}

int cmd_construct(const Config& cfg) {
  auto c = load_curve(cfg);
  emit(cfg, curve_file(c).dump(1) + "\n");
  std::cerr << "k=" << c.model->k << " degree " << c.model->degree << ", " << c.ideal.gens().size()
            << " quadrics, " << c.model->pencils.size() << " pencils\n";
  return kPass;
}

int cmd_verify(const Config& cfg) {
  auto c = load_curve(cfg);
  std::vector<std::string> names;
  if (cfg.assertion == "all") {
    for (auto& n : assertion_names())
      if (n == "g310" ? c.model->k == 20 : (n == "normal-150" || n == "betti" || (c.model->k >= 5 && c.model->k <= 10)))
        names.push_back(n);
  } else {
    names.push_back(cfg.assertion);
  }
  json out = json::array();
  bool pass = true;
  for (auto& n : names) {
    Stopwatch sw(n);
    Report r;
    try {
      r = run_assertion(n, c, cfg.seed, cfg.linear_strand_only);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    pass = pass && r.pass;
    out.push_back(r.to_json());
    std::cerr << n << ": " << (r.pass ? "pass" : "FAIL") << "\n";
  }
  emit(cfg, (names.size() == 1 ? out[0] : out).dump(1) + "\n");
  return pass ? kPass : kFail;
}

int cmd_betti(const Config& cfg) {
  auto c = load_curve(cfg);
  BettiTable b;
  {
    Stopwatch sw("betti");
    b = canonical_betti(c, cfg.seed, cfg.linear_strand_only);
  }
  if (cfg.format == "paper-grid") emit(cfg, b.to_grid());
  else emit(cfg, json{{"k", c.model->k}, {"betti", to_json(b)}}.dump(1) + "\n");
  return b.get(5, 6) == 5LL * c.model->k ? kPass : kFail;
}

int cmd_tables(const Config& cfg) {
  auto c = load_curve(cfg);
  const int n = static_cast<int>(c.model->pencils.size());
  for (auto& p : c.model->pencils)
    if (p.kind == PencilKind::FourSecant) throw UsageError("tables needs a curve whose pencils all have plane models");
  std::vector<std::vector<int>> subsets;
  if (cfg.subsets.empty()) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> s;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) s.push_back(i);
      if (s.size() >= 2) subsets.push_back(s);
    }
  } else {
    for (auto& s : cfg.subsets) subsets.push_back(parse_subset(s, n));
  }
  std::vector<ScrollData> sc;
  {
    Stopwatch sw("scrolls");
    sc = all_scrolls(c);
  }
  std::map<std::pair<int, int>, std::vector<SyzygySchemeReport>> groups;
  {
    Stopwatch sw("syzygy schemes (" + std::to_string(subsets.size()) + ")");
    for (auto& s : subsets) {
      auto r = syzygy_scheme(c, sc, s);
      groups[{r.a + r.b, r.b}].push_back(std::move(r));
    }
  }
  // claim: dim, degree and genus depend only on (a, b)
  bool uniform = true;
  json jg = json::array();
  std::string grid;
  for (auto& [key, rows] : groups) {
    const auto& r0 = rows.front();
    json jr = json::array();
    for (auto& r : rows) {
      uniform = uniform && r.dim == r0.dim && r.degree == r0.degree && r.genus == r0.genus;
      jr.push_back(to_json(r));
      grid += table_row(r) + "\n";
    }
    jg.push_back({{"a", r0.a}, {"b", r0.b}, {"rows", jr}});
  }
  if (cfg.format == "paper-grid") {
    emit(cfg, grid);
  } else {
    json out{{"prime", c.model->ring->field().prime()}, {"seed", c.model->seed}, {"k", c.model->k}};
    out["uniform_in_a_b"] = uniform;
    out["groups"] = jg;
    emit(cfg, out.dump(1) + "\n");
  }
  return uniform ? kPass : kFail;
}

int cmd_scrolls(const Config& cfg) {
  auto c = load_curve(cfg);
  json out = json::array();
  bool pass = true;
  for (int i = 0; i < static_cast<int>(c.model->pencils.size()); ++i) {
    const auto& pc = c.model->pencils[i];
    json j{{"pencil", i + 1}, {"label", pc.label}, {"kind", to_string(pc.kind)}};
    if (pc.kind == PencilKind::FourSecant) {
      j["realized"] = false;
      out.push_back(j);
      continue;
    }
    auto ps = pencil_sections(c, i);
    auto s = scroll(c, ps);
    auto h = hilbert(s.ideal);
    bool in_ideal = minors_in_ideal(s, c.ideal);
    json rows = json::array();
    for (auto& row : s.matrix) {
      json r = json::array();
      for (auto& f : row) r.push_back(to_json(f));
      rows.push_back(r);
    }
    j["realized"] = true;
    j["construction"] = ps.multiplication ? "multiplication" : "fiber-span";
    j["h0_K_minus_2L"] = ps.h0_K_minus_2L;
    j["minors_in_curve_ideal"] = in_ideal;
    j["dim"] = h.projective_dim();
    j["degree"] = h.degree;
    j["matrix"] = rows;
    pass = pass && in_ideal && ps.type_one() && h.projective_dim() == 5 && h.degree == 6;
    out.push_back(j);
  }
  emit(cfg, out.dump(1) + "\n");
  return pass ? kPass : kFail;
}

void curve_options(CLI::App* app, Config& cfg) {
  app->add_option("--curve", cfg.curve, "Curve file written by construct");
  app->add_option("--k", cfg.k, "Number of pencils: 4..10 or 20");
  app->add_option("--m", cfg.m, "Ninth base points on the degree 9 model (k = 5 + m)");
  app->add_option("--prime", cfg.prime, "Field characteristic")->check(CLI::Range(11u, 2147483647u));
  app->add_option("--seed", cfg.seed, "Random seed");
  app->add_option("--retries", cfg.retries, "Redraw bound for generic choices")->check(CLI::PositiveNumber);
  app->add_option("--out", cfg.out, "Output path (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Genus 11 canonical curves with many pencils of degree 6"};
  app.require_subcommand(1);
  Config cfg;

  auto* construct = app.add_subcommand("construct", "Build a plane model and its canonical ideal");
  curve_options(construct, cfg);
  construct->add_option("pencils", cfg.k, "Number of pencils (same as --k)");

  auto* verify = app.add_subcommand("verify", "Run a named assertion");
  verify->add_option("assertion", cfg.assertion, "severi-tangent, normal-150, detM-factorization, differential-rank, "
                                                 "g310, betti or all")
      ->required();
  curve_options(verify, cfg);
  verify->add_flag("--linear-strand-only", cfg.linear_strand_only, "Betti: linear strand only");

  auto* betti = app.add_subcommand("betti", "Betti table of the canonical ring");
  curve_options(betti, cfg);
  betti->add_flag("--linear-strand-only", cfg.linear_strand_only, "Only beta_{i,i+1}");
  betti->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "paper-grid"}));

  auto* tables = app.add_subcommand("tables", "Syzygy schemes of pencil subsets, grouped by (a, b)");
  curve_options(tables, cfg);
  tables->add_option("--subset", cfg.subsets, "Comma-separated pencil numbers (repeatable); default all");
  tables->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "paper-grid"}));

  auto* scrolls = app.add_subcommand("scrolls", "Scroll matrices of every pencil");
  curve_options(scrolls, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    if (*construct) return cmd_construct(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*betti) return cmd_betti(cfg);
    if (*tables) return cmd_tables(cfg);
    if (*scrolls) return cmd_scrolls(cfg);
  } catch (const UnsupportedK& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const RetryExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRetry;
  } catch (const GenericityFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRetry;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
