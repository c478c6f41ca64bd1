#include "kreg/regularity.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>

#include <nlohmann/json.hpp>

#include "kreg/errors.hpp"
#include "kreg/parallel.hpp"
#include "kreg/rng.hpp"

namespace kreg {

using ordered_json = nlohmann::ordered_json;

DomainBall DomainBall::origin(std::size_t dim, const Rational& radius) {
  return DomainBall{std::vector<Rational>(dim, Rational(0)), radius};
}

bool DomainBall::contains(const std::vector<Rational>& point) const {
  if (point.size() != center.size()) throw ArityError("point dimension mismatch");
  Rational s(0);
  for (std::size_t i = 0; i < point.size(); ++i) {
    Rational d = point[i] - center[i];
    s += d * d;
  }
  return s <= radius * radius;
}

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::random: return "random";
    case Provenance::grid: return "grid";
    case Provenance::cluster: return "cluster";
    case Provenance::user: return "user";
  }
  return "?";
}

bool PointConfiguration::pairwise_distinct() const {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j]) return false;
  return true;
}

RationalMatrix evaluation_matrix(const PolyMap& f, const PointConfiguration& cfg) {
  RationalMatrix m(cfg.points.size(), f.size());
  for (std::size_t i = 0; i < cfg.points.size(); ++i) {
    auto row = f.apply(cfg.points[i]);
    for (std::size_t j = 0; j < row.size(); ++j) m.at(i, j) = row[j];
  }
  return m;
}

namespace {

// Smallest integer q >= 1 with q^2 >= s.
Int ceil_sqrt(const Rational& s) {
  if (s.sign() <= 0) return 1;
  Int c = s.num() / s.den() + 1;  // ceil-ish upper bound
  Int q;
  mpz_sqrt(q.get_mpz_t(), c.get_mpz_t());
  while (Rational(Int(q * q)) < s) ++q;
  if (q < 1) q = 1;
  return q;
}

Rational squared_norm(const std::vector<Rational>& v) {
  Rational s(0);
  for (const auto& x : v) s += x * x;
  return s;
}

}  // namespace

std::vector<Rational> sample_ball_point(Rng& rng, const DomainBall& ball) {
  const std::size_t m = ball.center.size();
  std::vector<Rational> u(m);
  for (std::size_t i = 0; i < m; ++i)
    u[i] = Rational(rng.range(-1000, 1000), rng.range(1, 1000));
  Int q = ceil_sqrt(squared_norm(u));
  Rational scale = ball.radius / Rational(q);
  std::vector<Rational> p(m);
  for (std::size_t i = 0; i < m; ++i) p[i] = ball.center[i] + scale * u[i];
  return p;
}

PointConfiguration sample_random_config(Rng& rng, const DomainBall& ball,
                                        std::size_t k) {
  PointConfiguration cfg;
  cfg.provenance = Provenance::random;
  while (cfg.points.size() < k) {
    auto p = sample_ball_point(rng, ball);
    bool dup = false;
    for (const auto& q : cfg.points)
      if (q == p) { dup = true; break; }
    if (!dup) cfg.points.push_back(std::move(p));
  }
  return cfg;
}

std::vector<std::vector<std::size_t>> grid_shapes(std::size_t k, std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(m, 1);
  auto rec = [&](auto&& self, std::size_t i, std::size_t rem) -> void {
    if (i + 1 == m) {
      cur[i] = rem;
      out.push_back(cur);
      return;
    }
    for (std::size_t f = 1; f <= rem; ++f) {
      if (rem % f != 0) continue;
      cur[i] = f;
      self(self, i + 1, rem / f);
    }
  };
  if (m == 0) return out;
  rec(rec, 0, k);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    std::size_t ma = *std::max_element(a.begin(), a.end());
    std::size_t mb = *std::max_element(b.begin(), b.end());
    if (ma != mb) return ma < mb;
    return a < b;
  });
  return out;
}

PointConfiguration sample_grid_config(Rng& rng, const DomainBall& ball,
                                      const std::vector<std::size_t>& shape) {
  const std::size_t m = ball.center.size();
  if (shape.size() != m) throw ArityError("grid shape dimension mismatch");
  // Axis offsets live in a box inscribed in the ball.
  Int q = ceil_sqrt(Rational(static_cast<long>(m)));
  Rational half = ball.radius / Rational(q);
  std::vector<std::vector<Rational>> axis(m);
  for (std::size_t i = 0; i < m; ++i) {
    while (axis[i].size() < shape[i]) {
      Rational v = ball.center[i] +
                   half * Rational(rng.range(-1000, 1000), 1000);
      if (std::find(axis[i].begin(), axis[i].end(), v) == axis[i].end())
        axis[i].push_back(v);
    }
  }
  PointConfiguration cfg;
  cfg.provenance = Provenance::grid;
  std::vector<std::size_t> idx(m, 0);
  for (;;) {
    std::vector<Rational> p(m);
    for (std::size_t i = 0; i < m; ++i) p[i] = axis[i][idx[i]];
    cfg.points.push_back(std::move(p));
    std::size_t i = m;
    while (i > 0) {
      --i;
      if (++idx[i] < shape[i]) break;
      idx[i] = 0;
      if (i == 0) return cfg;
    }
  }
}

namespace {

struct RankTester {
  const PolyMap& f;
  std::size_t k;
  std::uint64_t prime;

  RationalMatrix test_matrix(const PointConfiguration& cfg) const {
    RationalMatrix m = evaluation_matrix(f, cfg);
    if (f.kind != MapKind::affine) return m;
    // Affine independence = linear independence after appending a 1-column.
    RationalMatrix a(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      a.at(i, 0) = Rational(1);
      for (std::size_t j = 0; j < m.cols(); ++j) a.at(i, j + 1) = m.at(i, j);
    }
    return a;
  }

  // True when the configuration has full rank k.  The mod-p rank is a sound
  // full-rank certificate; a deficient answer triggers exact recomputation.
  bool full_rank(const RationalMatrix& m) const {
    try {
      if (rank_mod_p(m, prime) == k) return true;
    } catch (const BadPrimeError&) {
    }
    return rank(m) == k;
  }

  std::optional<std::vector<Rational>> left_kernel_vector(
      const RationalMatrix& m) const {
    auto basis = kernel_basis(m.transpose());
    if (basis.empty()) return std::nullopt;
    return basis.front();
  }
};

struct TrialOutcome {
  bool failed = false;
  bool certified = false;
  std::optional<Counterexample> cert;
  std::optional<std::string> warning;
};

// Runs trials in fixed-size blocks; stops after the first block containing a
// failure so reports are identical for any worker count.
struct StrategyRunner {
  static constexpr std::uint64_t kBlock = 64;

  template <typename TrialFn>
  StrategyStats run(const std::string& name, std::uint64_t budget,
                    TrialFn&& trial_fn, std::optional<Counterexample>& first_cert,
                    std::vector<std::string>& warnings) {
    StrategyStats stats{name, 0, 0};
    std::vector<TrialOutcome> block(kBlock);
    for (std::uint64_t start = 0; start < budget && !first_cert;
         start += kBlock) {
      const std::uint64_t n = std::min(kBlock, budget - start);
      for (auto& o : block) o = TrialOutcome{};
      parallel_for(n, [&](std::uint64_t i) { block[i] = trial_fn(start + i); });
      bool stop = false;
      for (std::uint64_t i = 0; i < n; ++i) {
        ++stats.trials;
        if (block[i].warning) warnings.push_back(*block[i].warning);
        if (!block[i].failed) continue;
        ++stats.failures;
        if (block[i].certified && !first_cert) {
          first_cert = block[i].cert;
          first_cert->strategy = name;
          first_cert->trial = start + i;
          stop = true;
        }
      }
      if (stop) break;
    }
    return stats;
  }
};

constexpr int kClusterScale = 20;  // epsilon schedule 1/2 .. 2^-20

}  // namespace

RegularityReport check_regularity(const PolyMap& f, std::size_t k,
                                  const DomainBall& domain,
                                  std::uint64_t budget, std::uint64_t seed,
                                  const CheckOptions& opts) {
  if (k < 1) throw DomainError("k must be >= 1");
  if (budget < 1) throw DomainError("budget must be >= 1");
  if (domain.radius.sign() <= 0) throw DomainError("ball radius must be positive");
  if (domain.center.size() != f.num_vars)
    throw ArityError("domain dimension does not match the map");

  RegularityReport report;
  report.map_id = opts.map_id;
  report.kind = f.kind;
  report.k = k;
  report.domain = domain;
  report.seed = seed;
  report.passed = true;

  RankTester tester{f, k, opts.prime};
  StrategyRunner runner;
  std::optional<Counterexample> cert;

  auto classify = [&](PointConfiguration cfg) {
    TrialOutcome out;
    RationalMatrix m = tester.test_matrix(cfg);
    if (tester.full_rank(m)) return out;
    out.failed = true;
    auto kv = tester.left_kernel_vector(m);
    if (kv) {
      out.certified = true;
      out.cert = Counterexample{std::move(cfg), std::move(*kv), "", 0};
    }
    return out;
  };

  // random
  report.strategies.push_back(runner.run(
      "random", budget,
      [&](std::uint64_t t) {
        Rng rng(mix_seed(seed, 1, t));
        return classify(sample_random_config(rng, domain, k));
      },
      cert, report.warnings));

  // grid: axis-aligned product configurations, most balanced shape first
  if (!cert && f.num_vars >= 2 && k >= 2) {
    auto shapes = grid_shapes(k, f.num_vars);
    report.strategies.push_back(runner.run(
        "grid", budget,
        [&](std::uint64_t t) {
          Rng rng(mix_seed(seed, 2, t));
          const auto& shape = shapes[t % shapes.size()];
          return classify(sample_grid_config(rng, domain, shape));
        },
        cert, report.warnings));
  }

  // cluster: k points p + eps * v_i with eps halving down to 2^-kClusterScale
  if (!cert && k >= 2) {
    report.strategies.push_back(runner.run(
        "cluster", budget,
        [&](std::uint64_t t) {
          Rng rng(mix_seed(seed, 3, t));
          DomainBall half{domain.center, domain.radius / Rational(2)};
          auto base = sample_ball_point(rng, half);
          DomainBall dirs = DomainBall::origin(f.num_vars, domain.radius / Rational(2));
          std::vector<std::vector<Rational>> vs;
          while (vs.size() < k) {
            auto v = sample_ball_point(rng, dirs);
            if (std::find(vs.begin(), vs.end(), v) == vs.end())
              vs.push_back(std::move(v));
          }
          Rational eps(1, 2);
          for (int step = 0; step < kClusterScale; ++step) {
            PointConfiguration cfg;
            cfg.provenance = Provenance::cluster;
            for (const auto& v : vs) {
              std::vector<Rational> p(f.num_vars);
              for (std::size_t i = 0; i < p.size(); ++i)
                p[i] = base[i] + eps * v[i];
              cfg.points.push_back(std::move(p));
            }
            TrialOutcome out = classify(std::move(cfg));
            if (out.failed) return out;
            eps = eps / Rational(2);
          }
          return TrialOutcome{};
        },
        cert, report.warnings));
  }

  // jet: curvilinear probe; a failing arc is certified by distinct points on it
  if (!cert) {
    report.strategies.push_back(runner.run(
        "jet", budget,
        [&](std::uint64_t t) -> TrialOutcome {
          Rng rng(mix_seed(seed, 4, t));
          DomainBall half{domain.center, domain.radius / Rational(2)};
          auto base = sample_ball_point(rng, half);
          JetResult jr = check_jet(f, k, base, 1, mix_seed(seed, 5, t), opts.prime);
          if (jr.passed) return TrialOutcome{};
          // Evaluate at k distinct parameters on the failing arc, shrinking
          // towards the base point, and certify with the first exact failure.
          Rational eps(1, 16);
          for (int shrink = 0; shrink < 8; ++shrink) {
            PointConfiguration cfg;
            cfg.provenance = Provenance::cluster;
            for (std::size_t j = 0; j < k; ++j) {
              Rational tj = eps * Rational(static_cast<long>(j));
              std::vector<Rational> p = base;
              Rational tp = tj;
              for (const auto& c : jr.counterexample->arc_coeffs) {
                for (std::size_t i = 0; i < p.size(); ++i) p[i] += tp * c[i];
                tp *= tj;
              }
              cfg.points.push_back(std::move(p));
            }
            bool inside = true;
            for (const auto& p : cfg.points)
              if (!domain.contains(p)) { inside = false; break; }
            if (inside && cfg.pairwise_distinct()) {
              TrialOutcome out = classify(std::move(cfg));
              if (out.failed) return out;
            }
            eps = eps / Rational(4);
          }
          TrialOutcome out;
          out.failed = true;
          out.warning = "jet trial " + std::to_string(t) +
                        " is rank-deficient but no distinct-point certificate "
                        "was found on the arc";
          return out;
        },
        cert, report.warnings));
  }

  if (cert) {
    report.passed = false;
    report.counterexample = std::move(cert);
  }
  return report;
}

bool RegularityReport::verify_counterexample(const PolyMap& f) const {
  if (!counterexample) return false;
  RankTester tester{f, k, 2147483647};
  RationalMatrix m = tester.test_matrix(counterexample->config);
  if (rank(m) >= k) return false;
  const auto& v = counterexample->kernel_vector;
  if (v.size() != m.rows()) return false;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Rational s(0);
    for (std::size_t i = 0; i < m.rows(); ++i) s += v[i] * m.at(i, j);
    if (!s.is_zero()) return false;
  }
  return true;
}

std::string RegularityReport::to_json() const {
  ordered_json j;
  j["schema"] = 1;
  j["map"] = map_id;
  j["kind"] = kind_name(kind);
  j["k"] = k;
  ordered_json dom;
  dom["center"] = ordered_json::array();
  for (const auto& c : domain.center) dom["center"].push_back(c.str());
  dom["radius"] = domain.radius.str();
  j["domain"] = dom;
  j["strategies"] = ordered_json::array();
  for (const auto& s : strategies) {
    ordered_json sj;
    sj["name"] = s.name;
    sj["trials"] = s.trials;
    sj["failures"] = s.failures;
    j["strategies"].push_back(sj);
  }
  j["verdict"] = passed ? "PASSED" : "COUNTEREXAMPLE";
  if (counterexample) {
    ordered_json c;
    c["points"] = ordered_json::array();
    for (const auto& p : counterexample->config.points) {
      ordered_json pj = ordered_json::array();
      for (const auto& x : p) pj.push_back(x.str());
      c["points"].push_back(pj);
    }
    ordered_json kv = ordered_json::array();
    for (const auto& x : counterexample->kernel_vector) kv.push_back(x.str());
    c["kernel_vector"] = kv;
    c["provenance"] = provenance_name(counterexample->config.provenance);
    c["strategy"] = counterexample->strategy;
    c["trial"] = counterexample->trial;
    j["counterexample"] = c;
  }
  j["seed"] = seed;
  if (!warnings.empty()) j["warnings"] = warnings;
  if (passed)
    j["note"] = "PASSED is probabilistic evidence; counterexamples are exact proofs";
  return j.dump(2);
}

}  // namespace kreg
