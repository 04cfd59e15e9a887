// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fractalscape/io.hpp"
#include "fractalscape/landscape.hpp"
#include "fractalscape/operator.hpp"
#include "fractalscape/persistence.hpp"
#include "fractalscape/presets.hpp"
#include "fractalscape/verify.hpp"
#include "oracles.hpp"

#ifdef FRACTALSCAPE_HAVE_CLI
#include "cli.hpp"
#endif

using namespace fractalscape;

namespace {

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 8) failures_.push_back(what);
    if (!ok) ++count_;
  }
  bool ok() const { return count_ == 0; }
  const std::vector<std::string>& failures() const { return failures_; }
  std::size_t count() const { return count_; }
  void note(const std::string& text) { notes_.push_back(text); }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
  std::size_t count_ = 0;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Criterion {
  int id;
  std::string title;
  double time_limit;  // seconds; 0 = none
  std::function<void(Check&)> body;
};

void fixed_point_matches(Check& check, const std::string& name, std::size_t levels,
                         const std::function<double(std::uint64_t)>& table) {
  const Landscape fp = fixed_point(preset_operator(name), levels);
  check.expect(fp.size() == levels, name + ": wrong level count");
  for (std::size_t j = 1; j <= levels; ++j) {
    const double got = oracle::death_of(fp.level(j));
    const double want = table(j);
    check.expect(oracle::rel_diff(got, want) <= 1e-15,
                 name + " level " + std::to_string(j) + ": " + fmt(got) + " vs " + fmt(want));
  }
}

void cantor_fixed_point(Check& check) { fixed_point_matches(check, "cantor3", 64, oracle::cantor3_death); }

void worked_examples(Check& check) {
  const std::vector<std::pair<std::string, std::function<double(std::uint64_t)>>> tables{
      {"right-third", oracle::right_third_death}, {"fifth", oracle::fifth_death},
      {"sixth", oracle::sixth_death},             {"mod-fifth", oracle::mod_fifth_death},
      {"triangle", oracle::triangle_death},       {"carpet", oracle::carpet_death},
  };
  for (const auto& [name, table] : tables) {
    const auto start = std::chrono::steady_clock::now();
    fixed_point_matches(check, name, 100, table);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.expect(secs < 1.0, name + " took " + fmt(secs) + " s");
  }
}

// Largest cloud S_{n_max} per preset: cantor3 4096 points, triangle 6561,
// carpet 4096, fifth 1458, sixth 2187, mod-fifth 1094.
const std::vector<std::pair<std::string, std::size_t>> kCommutationDepths{
    {"cantor3", 11}, {"right-third", 10}, {"fifth", 6}, {"sixth", 6},
    {"mod-fifth", 6}, {"triangle", 7},    {"carpet", 5},
};

void commutation(Check& check) {
  for (const auto& [name, n_max] : kCommutationDepths) {
    const Preset p = preset(name);
    const VerificationReport r = commutation_report(p.ifs, p.op, n_max);
    check.expect(r.rows.size() == n_max - 1, name + ": missing rows");
    for (const auto& row : r.rows) {
      check.expect(row.distance <= 1e-12,
                   name + " n=" + std::to_string(row.n) + " distance " + fmt(row.distance));
    }
  }
}

void convergence(Check& check) {
  const Preset cantor = preset("cantor3");
  const VerificationReport r = convergence_report(cantor.ifs, cantor.op, 10);
  for (const auto& row : r.rows) {
    if (row.n < 1) continue;
    const double bound = 1.0 / (2.0 * std::pow(3.0, static_cast<double>(row.n)));
    // The bound is attained, so allow rounding in the cloud coordinates.
    check.expect(row.distance <= bound + 1e-12, "cantor3 n=" + std::to_string(row.n) + ": " + fmt(row.distance) +
                                            " > " + fmt(bound));
  }
  for (const auto& [name, n_max] : kCommutationDepths) {
    const Preset p = preset(name);
    const VerificationReport rep = convergence_report(p.ifs, p.op, std::min<std::size_t>(n_max, 7));
    check.expect(rep.passed(), name + ": convergence report failed");
    for (std::size_t i = 2; i < rep.rows.size(); ++i) {
      const double prev = rep.rows[i - 1].distance, cur = rep.rows[i].distance;
      check.expect(cur <= (p.ifs.ratio() + kBoundSlack) * prev,
                   name + " n=" + std::to_string(rep.rows[i].n) + " decay " + fmt(cur / prev));
    }
  }
}

void deltas(Check& check) {
  const std::vector<std::pair<std::string, std::vector<double>>> exact{
      {"cantor3", {1.0, 1.0 / 3}},
      {"right-third", {0.5, 1.0 / 6}},
      {"fifth", {1.0, 0.2, 0.2}},
      {"sixth", {1.0, 1.0 / 3, 1.0 / 6}},
  };
  for (const auto& [name, want] : exact) {
    const AffineIfs ifs = preset(name).ifs;
    const auto got = deltas_1d(ifs);
    check.expect(got.size() == want.size(), name + ": delta count");
    for (std::size_t k = 0; k < std::min(got.size(), want.size()); ++k) {
      check.expect(oracle::rel_diff(got[k], want[k]) <= 1e-15,
                   name + " delta_" + std::to_string(k + 1) + " = " + fmt(got[k]));
    }
    for (std::size_t n = 2; n <= 8; ++n) {
      const auto eta = empirical_deltas(iterate(ifs, seed_points(ifs), n), ifs.size());
      const double bound = 2.0 * std::pow(ifs.ratio(), static_cast<double>(n)) * want[0];
      for (std::size_t k = 0; k < want.size(); ++k) {
        check.expect(std::abs(eta[k] - want[k]) <= bound, name + " n=" + std::to_string(n) + " eta_" +
                                                              std::to_string(k + 1) + " = " + fmt(eta[k]));
      }
    }
  }
}

void persistence_oracle(Check& check) {
  oracle::Rng rng(0xacce97a9ce0006ULL);
  for (int trial = 0; trial < 500; ++trial) {
    const PointCloud c = oracle::random_cloud(rng, rng.index(1, 3), rng.index(1, 40));
    check.expect(h0_diagram(c).deaths() == oracle::union_find_deaths(c), "cloud " + std::to_string(trial));
  }
}

void landscape_oracle(Check& check) {
  oracle::Rng rng(0xacce97a9ce0007ULL);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<PersistencePair> pairs;
    const std::size_t count = rng.index(1, 10);
    for (std::size_t i = 0; i < count; ++i) {
      const double a = rng.uniform(0.01, 2.0);
      pairs.push_back({a, a + rng.uniform(0.0, 2.0), rng.index(1, 2)});
    }
    const PersistenceDiagram d(pairs);
    const auto hats = oracle::expand(d);
    const Landscape l = landscape_kmax(d);
    double lo = INFINITY, hi = -INFINITY;
    for (const auto& [a, b] : hats) lo = std::min(lo, a), hi = std::max(hi, b);
    const double step = 1e-4 * (hi - lo);
    double worst = 0.0;
    for (std::size_t i = 0; lo + i * step <= hi; ++i) {
      const double t = lo + i * step;
      std::vector<double> values;
      for (const auto& [a, b] : hats) values.push_back(std::max(0.0, std::min(t - a, b - t)));
      std::sort(values.rbegin(), values.rend());
      for (std::size_t k = 1; k <= values.size() + 1; ++k) {
        const double want = k <= values.size() ? values[k - 1] : 0.0;
        worst = std::max(worst, std::abs(evaluate(l, k, t) - want));
      }
    }
    check.expect(worst <= 2e-4, "diagram " + std::to_string(trial) + " grid error " + fmt(worst));
  }
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<PersistencePair> pairs;
    const std::size_t count = rng.index(0, 15);
    for (std::size_t i = 0; i < count; ++i) pairs.push_back({0.0, rng.uniform(0.0, 3.0), rng.index(1, 3)});
    const PersistenceDiagram d(pairs);
    check.expect(landscape_kmax(d) == landscape_births_zero(d), "death multiset " + std::to_string(trial));
  }
}

Landscape random_landscape(oracle::Rng& rng) {
  std::vector<PersistencePair> pairs;
  const std::size_t count = rng.index(0, 10);
  for (std::size_t i = 0; i < count; ++i) {
    const double a = rng.index(0, 1) ? 0.0 : rng.uniform(0, 1);
    pairs.push_back({a, a + rng.uniform(0, 1.5), 1});
  }
  return landscape_from_diagram(PersistenceDiagram(pairs));
}

void properties(Check& check) {
  oracle::Rng rng(0xacce97a9ce0008ULL);
  const auto& names = preset_names();

  for (int trial = 0; trial < 1000; ++trial) {
    const LandscapeOperator op = preset_operator(names[trial % names.size()]);
    const LipschitzBound b = lipschitz_bound(op, random_landscape(rng), random_landscape(rng));
    check.expect(b.lhs <= b.rhs + 1e-12, "contraction pair " + std::to_string(trial));
  }

  const VerificationReport fuzz = stability_fuzz(200, 30, 0.05);
  check.expect(fuzz.rows.size() == 200 && fuzz.passed(), "stability fuzz");
  // Rows are checked against twice the Hausdorff distance. Report how often
  // the Hausdorff distance alone would have been exceeded.
  std::size_t over = 0;
  double worst = 0.0;
  for (const auto& row : fuzz.rows) {
    const double dh = row.bound / 2.0;
    if (row.distance > dh + kBoundSlack) ++over;
    if (dh > 0.0) worst = std::max(worst, row.distance / dh);
  }
  check.note("stability: " + std::to_string(over) + "/200 fuzz pairs exceed Lambda <= d_H; worst ratio " + fmt(worst) +
             " (bound checked: 2 d_H)");
  {
    const PointCloud y = oracle::cloud_1d({0.0, 1.0});
    const PointCloud z = oracle::cloud_1d({0.0, 0.2, 0.4, 0.6, 0.8, 1.0});
    const double d = sup_distance(cloud_landscape(y), cloud_landscape(z));
    const double dh = hausdorff(y, z);
    check.expect(d <= 2 * dh + kBoundSlack, "stability example {0,1} vs 0.2 grid");
    check.note("stability: {0,1} vs {0,0.2,...,1}: Lambda = " + fmt(d) + ", d_H = " + fmt(dh));
  }

  for (int trial = 0; trial < 200; ++trial) {
    const Landscape l = random_landscape(rng);
    std::vector<double> ts;
    for (const auto& f : l.levels()) {
      for (const auto& p : f.breakpoints()) ts.push_back(p.t);
    }
    for (std::size_t k = 1; k < l.size(); ++k) {
      for (double t : ts) check.expect(evaluate(l, k, t) >= evaluate(l, k + 1, t) - 1e-12, "level monotonicity");
    }
  }

  for (int trial = 0; trial < 50; ++trial) {
    const PointCloud c = oracle::random_cloud(rng, 2, rng.index(2, 30));
    std::size_t last = c.size();
    check.expect(epsilon_components(c, 0.0) == c.size(), "components at 0");
    check.expect(epsilon_components(c, diameter(c)) == 1, "components at diameter");
    for (double eps = 0.0; eps <= 1.5; eps += 0.005) {
      const std::size_t k = epsilon_components(c, eps);
      check.expect(k <= last, "component monotonicity");
      last = k;
    }
  }
  for (const auto& name : names) {
    const AffineIfs ifs = preset(name).ifs;
    const PointCloud f = iterate(ifs, seed_points(ifs), 3);
    const PointCloud s = iterate(ifs, f, 1);
    const double alpha = hausdorff(f, s);
    for (double eps = 2 * alpha + 1e-9; eps < diameter(s); eps += 0.007) {
      check.expect(epsilon_components(s, eps) <= epsilon_components(f, eps), name + " sandwich lower");
      check.expect(epsilon_components(f, eps) <= epsilon_components(s, eps - 2 * alpha), name + " sandwich upper");
    }
  }

  for (int trial = 0; trial < 100; ++trial) {
    const PointCloud c = oracle::random_cloud(rng, 2, rng.index(1, 30));
    const double r = rng.uniform(0.05, 3.0), th = rng.uniform(0, 6.283), dx = rng.uniform(-3, 3);
    std::vector<Vector> pts = c.points();
    for (auto& p : pts) p = {r * (std::cos(th) * p[0] - std::sin(th) * p[1]) + dx, r * (std::sin(th) * p[0] + std::cos(th) * p[1])};
    const auto moved = h0_diagram(PointCloud::from_points(2, pts)).deaths();
    const auto base = h0_diagram(c).deaths();
    check.expect(moved.size() == base.size(), "scaling: size");
    for (std::size_t i = 0; i < std::min(moved.size(), base.size()); ++i) {
      check.expect(std::abs(moved[i] - r * base[i]) <= 1e-12 * std::max(1.0, r * base[i]), "scaling equivariance");
    }
  }

  for (int trial = 0; trial < 100; ++trial) {
    const PointCloud y = oracle::random_cloud(rng, 2, rng.index(1, 15));
    std::vector<Vector> zp = oracle::random_cloud(rng, 2, rng.index(1, 15)).points();
    for (auto& p : zp) p[1] += 3.0 + rng.uniform(0, 2);
    std::vector<Vector> all = y.points();
    all.insert(all.end(), zp.begin(), zp.end());
    const PointCloud z = PointCloud::from_points(2, zp);
    double gap = INFINITY;
    for (std::size_t i = 0; i < y.size(); ++i) {
      for (std::size_t j = 0; j < z.size(); ++j) gap = std::min(gap, distance(y[i], z[j]));
    }
    std::vector<double> parts = mst_profile(y).weights;
    for (double w : mst_profile(z).weights) parts.push_back(w);
    std::sort(parts.rbegin(), parts.rend());
    std::vector<double> joined;
    for (double w : h0_diagram(PointCloud::from_points(2, all)).deaths()) {
      if (w < gap) joined.push_back(w);
    }
    check.expect(joined.size() == parts.size(), "additivity: size");
    for (std::size_t i = 0; i < std::min(joined.size(), parts.size()); ++i) {
      check.expect(std::abs(joined[i] - parts[i]) <= 1e-14, "disjoint-union additivity");
    }
  }
}

#ifdef FRACTALSCAPE_HAVE_CLI
int run_cli(std::vector<std::string> args, std::string* out = nullptr) {
  args.insert(args.begin(), "fractalscape");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream o, e;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), o, e);
  if (out) *out = o.str();
  return code;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void cli_round_trips(Check& check) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "fractalscape-acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);

  for (const auto& name : preset_names()) {
    std::string csv;
    check.expect(run_cli({"landscape", "--preset", name, "--levels", "50"}, &csv) == 0, name + ": landscape exit");
    std::istringstream in(csv);
    const Landscape back = read_landscape_csv(in);
    const Landscape want = fixed_point(preset_operator(name), 50);
    check.expect(back == want && sup_distance(back, want) == 0.0, name + ": landscape CSV round trip");

    const AffineIfs ifs = preset(name).ifs;
    const fs::path cfg = dir / (name + ".json");
    std::ofstream(cfg) << ifs_to_json(ifs);
    const AffineIfs parsed = load_ifs_config(cfg);
    check.expect(parsed.ratio() == ifs.ratio() && parsed.offsets() == ifs.offsets(), name + ": config round trip");
  }

  check.expect(run_cli({"verify", "cantor3", "--n-max", "8"}) == 0, "verify cantor3 exit 0");
  check.expect(run_cli({"verify", "carpet", "--n-max", "5"}) == 0, "verify carpet exit 0");
  check.expect(run_cli({"verify", "no-such-preset"}) == 2, "unknown preset exit 2");
  const Preset cantor = preset("cantor3");
  const VerificationReport failing = commutation_report(cantor.ifs, LandscapeOperator({1.0, 0.3}, 2, 1.0 / 3), 3);
  check.expect(cli::verdict_code({failing}) == 1, "failing report exit 1");

  const fs::path a = dir / "a.svg", b = dir / "b.svg";
  check.expect(run_cli({"plot", "--preset", "cantor3", "--levels", "33", "-o", a.string()}) == 0, "plot a");
  check.expect(run_cli({"plot", "--preset", "cantor3", "--levels", "33", "-o", b.string()}) == 0, "plot b");
  const std::string sa = slurp(a);
  check.expect(!sa.empty() && sa == slurp(b), "SVG byte determinism");
  fs::remove_all(dir);
}
#endif

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "Cantor fixed point levels 1..64 match closed form", 1.0, cantor_fixed_point},
      {2, "worked-example fixed points levels 1..100 match closed forms", 6.0, worked_examples},
      {3, "commutation op(f_n) = f_(n+1) within 1e-12", 30.0, commutation},
      {4, "convergence bound and per-step decay by c", 0.0, convergence},
      {5, "exact and empirical resolutions", 0.0, deltas},
      {6, "H0 diagrams match union-find oracle on 500 clouds", 10.0, persistence_oracle},
      {7, "landscapes match dense grid and births-zero path", 0.0, landscape_oracle},
      {8, "property suites", 0.0, properties},
#ifdef FRACTALSCAPE_HAVE_CLI
      {9, "CLI round trips, exit codes, SVG determinism", 0.0, cli_round_trips},
#endif
  };

  bool all_ok = true;
  for (const auto& c : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0.0) check.expect(secs < c.time_limit, "runtime " + fmt(secs) + " s over limit");
    std::printf("[%s] %d %s (%.2f s)\n", check.ok() ? "PASS" : "FAIL", c.id, c.title.c_str(), secs);
    for (const auto& f : check.failures()) std::printf("       %s\n", f.c_str());
    for (const auto& n : check.notes()) std::printf("       note: %s\n", n.c_str());
    if (check.count() > check.failures().size()) {
      std::printf("       ... %zu more\n", check.count() - check.failures().size());
    }
    all_ok = all_ok && check.ok();
  }
#ifndef FRACTALSCAPE_HAVE_CLI
  std::printf("[FAIL] 9 CLI round trips: tool not built\n");
  all_ok = false;
#endif
  return all_ok ? 0 : 1;
}
