#pragma once

#include <chrono>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "asympt.hpp"
#include "contactmap.hpp"
#include "decompose.hpp"
#include "enumerate.hpp"
#include "holonomic.hpp"
#include "reduction.hpp"
#include "schroeder.hpp"
#include "structure.hpp"

// The reproduction suite: one named check per reproduced result.

namespace stacklab {

namespace expected {

inline const std::vector<long> kZigzag = {1, 2, 6, 20, 70, 255, 959, 3696, 14520, 57930, 234080, 955999};

/// r_m(n) for n = 1..12, rows m = 3..6.
inline const std::vector<std::vector<long>> kRegularLinear = {
    {1, 1, 1, 2, 6, 18, 54, 162, 491, 1509, 4692, 14729},
    {1, 1, 1, 1, 2, 6, 18, 52, 150, 434, 1263, 3699},
    {1, 1, 1, 1, 1, 2, 6, 18, 52, 148, 422, 1206},
    {1, 1, 1, 1, 1, 1, 2, 6, 18, 52, 148, 420},
};

struct Constants {
  std::string label;
  int m;  // 1 stands for the unrestricted zigzag equation
  double omega, gamma;
};

inline const std::vector<Constants> kAsymptotics = {
    {"z", 1, 4.6107186, 0.4781905},       {"r_2", 2, 4.1012475, 0.250536155}, {"r_3", 3, 3.5271506, 0.19005341},
    {"r_4", 4, 3.2431591, 0.145636571},   {"r_5", 5, 3.0833083, 0.112004701}, {"r_6", 6, 2.9880679, 0.086237333},
};

inline constexpr double kOmegaTolerance = 1e-6;
inline constexpr double kGammaTolerance = 1e-4;
inline constexpr double kAsymptSeconds = 30.0;

/// The three-part split of the 24-vertex contact map: stack, stack, queue.
inline const std::vector<ArcSet> kContactParts = {
    {{6, 17}, {7, 16}, {9, 16}, {10, 15}, {11, 14}, {17, 24}, {18, 23}, {19, 22}},
    {{13, 20}, {14, 19}, {15, 18}},
    {{1, 22}, {2, 23}, {3, 24}, {5, 24}},
};

/// A square-lattice walk whose contact map is exactly the union of the parts.
inline const std::string kContactWalk = "RRRUUUULLLLDRRRDLLLDRRR";

}  // namespace expected

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::vector<std::string> details;
  double seconds = 0;
};

struct SuiteOptions {
  int workers = 1;
};

namespace checks {

using Clock = std::chrono::steady_clock;

inline double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

inline std::string str(const Count& c) { return c.get_str(); }

inline Limits wide_limits() {
  Limits l;
  l.count_n = 32;
  l.enumerate_n = 32;
  return l;
}

inline CheckResult zigzag_table(const SuiteOptions& opt) {
  CheckResult r{1, "zigzag stack counts n=1..12", true, {}, 0};
  const auto t0 = Clock::now();
  int bad = 0;
  for (int n = 1; n <= 12; ++n) {
    const Count c = count_class(n, DiagramClass::zigzag(), opt.workers, wide_limits());
    if (c != expected::kZigzag[static_cast<std::size_t>(n - 1)]) {
      ++bad;
      r.details.push_back("n=" + std::to_string(n) + ": got " + str(c));
    }
  }
  r.seconds = since(t0);
  r.passed = bad == 0 && r.seconds < 60;
  r.details.push_back(std::to_string(12 - bad) + "/12 exact, " + std::to_string(r.seconds) + " s (limit 60 s)");
  return r;
}

inline CheckResult regular_linear_table(const SuiteOptions& opt) {
  CheckResult r{2, "m-regular linear stack table, m=3..6", true, {}, 0};
  const auto t0 = Clock::now();
  int good = 0;
  for (int m = 3; m <= 6; ++m)
    for (int n = 1; n <= 12; ++n) {
      const Count c = count_class(n, DiagramClass::regular_linear(m), opt.workers, wide_limits());
      if (c == expected::kRegularLinear[static_cast<std::size_t>(m - 3)][static_cast<std::size_t>(n - 1)]) ++good;
      else r.details.push_back("m=" + std::to_string(m) + " n=" + std::to_string(n) + ": got " + str(c));
    }
  r.seconds = since(t0);
  r.passed = good == 48 && r.seconds < 120;
  r.details.push_back(std::to_string(good) + "/48 exact, " + std::to_string(r.seconds) + " s (limit 120 s)");
  return r;
}

inline CheckResult series_oracle(const SuiteOptions& opt) {
  CheckResult r{3, "series coefficients equal brute-force counts, n<=13", true, {}, 0};
  const auto t0 = Clock::now();
  const int N = 13;
  int compared = 0;
  auto cmp = [&](const std::string& what, const IntSeries& s, const DiagramClass& cls) {
    for (int n = 0; n <= N; ++n) {
      ++compared;
      const Count c = count_class(n, cls, opt.workers, wide_limits());
      if (c != s[static_cast<std::size_t>(n)]) {
        r.passed = false;
        r.details.push_back(what + " n=" + std::to_string(n) + ": series " + str(s[static_cast<std::size_t>(n)]) +
                            ", count " + str(c));
      }
    }
  };
  cmp("z", series_z(N), DiagramClass::zigzag());
  for (int m = 2; m <= 6; ++m) {
    const IntSeries zm = series_Zm(m, N + m), rm = series_Rm(m, N + m);
    cmp("z_" + std::to_string(m), zm, DiagramClass::reduced_zigzag(m));
    cmp("r_" + std::to_string(m), rm, DiagramClass::regular_linear(m));
    for (int n = 0; n <= N; ++n)
      if (zm[static_cast<std::size_t>(n)] != rm[static_cast<std::size_t>(n + m - 1)]) {
        r.passed = false;
        r.details.push_back("z_m(n) != r_m(n+m-1) at m=" + std::to_string(m) + " n=" + std::to_string(n));
      }
  }
  r.seconds = since(t0);
  r.details.push_back(std::to_string(compared) + " coefficients compared");
  return r;
}

inline CheckResult bijection(const SuiteOptions&) {
  CheckResult r{4, "reduction round trips and image, n<=12, m=2..6", true, {}, 0};
  const auto t0 = Clock::now();
  long instances = 0, mismatches = 0;
  for (int m = 2; m <= 6; ++m)
    for (int n = 0; n <= 12; ++n) {
      std::vector<Diagram> image, reduced;
      for_each_diagram(n + m - 1, DiagramClass::regular_linear(m).constraints(), [&](const Diagram& S) {
        ++instances;
        const Diagram T = reduce(S, m);
        const DegreeProfile ps(S), pt(T);
        bool ok = expand(T, m) == S && T.size() == S.size();
        for (int i = 1; ok && i <= T.n(); ++i)
          ok = pt.ld[static_cast<std::size_t>(i)] == ps.ld[static_cast<std::size_t>(i + m - 1)] &&
               pt.rd[static_cast<std::size_t>(i)] == ps.rd[static_cast<std::size_t>(i)];
        if (!ok) ++mismatches;
        image.push_back(T);
      });
      for_each_diagram(n, DiagramClass::reduced_zigzag(m).constraints(), [&](const Diagram& T) {
        ++instances;
        if (reduce(expand(T, m), m) != T) ++mismatches;
        reduced.push_back(T);
      });
      std::sort(image.begin(), image.end());
      std::sort(reduced.begin(), reduced.end());
      const bool collisions = std::adjacent_find(image.begin(), image.end()) != image.end();
      if (collisions || image != reduced) {
        ++mismatches;
        r.details.push_back("image differs from the reduced class at m=" + std::to_string(m) + " n=" + std::to_string(n));
      }
    }
  r.seconds = since(t0);
  r.passed = mismatches == 0;
  r.details.push_back(std::to_string(instances) + " instances, " + std::to_string(mismatches) + " mismatches");
  return r;
}

inline CheckResult localization(const SuiteOptions&) {
  CheckResult r{5, "localized conditions agree with m-reducedness, n<=11, m=2..4", true, {}, 0};
  const auto t0 = Clock::now();
  long cases = 0, mismatches = 0;
  for (int n = 0; n <= 11; ++n)
    for_each_diagram(n, DiagramClass::zigzag().constraints(), [&](const Diagram& S) {
      for (int m = 2; m <= 4; ++m) {
        ++cases;
        if (verify_localization(S, m) != is_m_reduced(S, m)) ++mismatches;
      }
    });
  r.seconds = since(t0);
  r.passed = mismatches == 0;
  r.details.push_back(std::to_string(cases) + " (diagram, m) cases, " + std::to_string(mismatches) + " mismatches");
  return r;
}

inline CheckResult structural(const SuiteOptions& opt) {
  CheckResult r{6, "substructure generating functions and the master identity", true, {}, 0};
  const auto t0 = Clock::now();
  const int N = 40;
  auto first_nonzero = [](const IntSeries& s) { return s.valuation(); };
  struct Outcome {
    bool master = true, closed = true;
    std::string first;
  };
  auto evaluate = [&](const Reading& reading) {
    Outcome o;
    std::ostringstream where;
    for (int m = 2; m <= 5; ++m) {
      const Substructures s = substructures(m, N, reading);
      const int v = first_nonzero(master_identity_residual(s, reading));
      if (v >= 0) {
        o.master = false;
        where << " m=" << m << ": residual starts at x^" << v << ";";
      }
      const ClosedForms cf = closed_form_substructures(m, s.Z);
      const bool t2 = cf.T2 == s.T[2], t3 = cf.T3 == s.T[3], t5 = cf.T5 == s.T[5];
      if (!(t2 && t3 && t5)) {
        o.closed = false;
        where << " m=" << m << ": closed forms differ for" << (t2 ? "" : " T2") << (t3 ? "" : " T3") << (t5 ? "" : " T5")
              << ";";
      }
    }
    o.first = where.str();
    return o;
  };
  const Outcome printed = evaluate(Reading::as_printed());
  const Outcome fixed = evaluate(Reading::corrected());
  const Outcome only_h = evaluate(Reading{true, false});
  const Outcome only_square = evaluate(Reading{false, true});

  // Boundary oracle against the series, corrected reading.
  long oracle_bad = 0, oracle_total = 0, printed_h_bad = 0;
  for (int m = 2; m <= 5; ++m) {
    const Substructures s = substructures(m, 12);
    const Substructures p = substructures(m, 12, Reading::as_printed());
    for (int n = 0; n <= 12; ++n) {
      const auto k = static_cast<std::size_t>(n);
      for (int i = 1; i <= 6; ++i) {
        ++oracle_total;
        if (count_type(n, m, i, opt.workers) != s.T[static_cast<std::size_t>(i)][k]) ++oracle_bad;
      }
      oracle_total += 2;
      if (count_typeG(n, m, opt.workers) != s.G[k]) ++oracle_bad;
      const Count h = count_typeH(n, m, opt.workers);
      if (h != s.H[k]) ++oracle_bad;
      if (h != p.H[k]) ++printed_h_bad;
    }
  }
  r.passed = printed.master && printed.closed && oracle_bad == 0;
  r.details.push_back(std::string("as printed: master identity ") + (printed.master ? "holds" : "FAILS") +
                      ", closed forms " + (printed.closed ? "match" : "DIFFER") + ";" + printed.first);
  r.details.push_back(std::string("H with 1-x only: master identity ") + (only_h.master ? "holds" : "fails") + ";" +
                      only_h.first);
  r.details.push_back(std::string("squared last denominator only: master identity ") +
                      (only_square.master ? "holds" : "fails") + ";" + only_square.first);
  r.details.push_back(std::string("H with 1-x and squared last denominator: master identity ") +
                      (fixed.master ? "holds" : "fails") + ", closed forms " + (fixed.closed ? "match" : "differ") +
                      " through order 40");
  r.details.push_back("boundary oracle t_1..t_6, g, h (n<=12, m=2..5) vs corrected series: " +
                      std::to_string(oracle_total - oracle_bad) + "/" + std::to_string(oracle_total) + " agree; " +
                      "h(n) vs the printed H equation: " + std::to_string(printed_h_bad) + " disagreements");
  r.seconds = since(t0);
  return r;
}

inline CheckResult recurrences(const SuiteOptions&) {
  CheckResult r{7, "recurrences for z and r_m, n<=200", true, {}, 0};
  const auto t0 = Clock::now();
  const int H = 200;
  const RecurrenceReport printed = verify_printed_recurrence_z(H);
  const bool tail_clean = printed.nonzero.empty() || printed.nonzero.back() < printed.threshold;
  if (!tail_clean) r.passed = false;
  {
    std::ostringstream os;
    os << "seven-term z recurrence: " << printed.nonzero.size() << " nonzero residuals on [0," << H
       << "], valid from n=" << printed.threshold;
    r.details.push_back(os.str());
  }
  // Extension from the tabulated values alone.
  {
    std::vector<BigInt> head = {1};
    for (long v : expected::kZigzag) head.push_back(v);
    const auto ext = eval_recurrence(printed_recurrence_z(), head, H);
    if (ext != series_z(H).coefficients()) {
      r.passed = false;
      r.details.push_back("seven-term recurrence extension from the table disagrees with the series");
    }
  }
  auto derived = [&](const std::string& label, const BivarPoly& P, const IntSeries& s) {
    const PRecurrence rec = ode_to_recurrence(algebraic_to_ode(P));
    const int init = rec.order() + rec.n0;
    std::vector<BigInt> head(s.coefficients().begin(), s.coefficients().begin() + init);
    const auto ext = eval_recurrence(rec, head, H);
    std::vector<BigInt> want(s.coefficients().begin(), s.coefficients().begin() + H + 1);
    const std::vector<BigInt>& all = s.coefficients();
    const int thr = measured_threshold(rec, all, H);
    const bool ok = ext == want && thr <= rec.n0;
    if (!ok) r.passed = false;
    std::ostringstream os;
    os << label << ": ODE order " << algebraic_to_ode(P).order() << ", recurrence order " << rec.order()
       << ", measured threshold " << thr << ", extension " << (ext == want ? "reproduces" : "DIFFERS");
    r.details.push_back(os.str());
  };
  derived("z", build_eq_Z(), series_z(H + 8));
  for (int m = 2; m <= 6; ++m) derived("r_" + std::to_string(m), build_eq_Rm(m), series_Rm(m, H + 200));
  r.seconds = since(t0);
  return r;
}

inline CheckResult ode(const SuiteOptions&) {
  CheckResult r{8, "second-order ODE annihilates the z series", true, {}, 0};
  const auto t0 = Clock::now();
  const Series res = apply_ode(printed_ode_z(), to_rational(series_z(64)));
  r.passed = res.order() == 62 && res.valuation() < 0;
  r.details.push_back("residual exact through order " + std::to_string(res.order()) + ": " +
                      (res.valuation() < 0 ? "zero" : "first nonzero at x^" + std::to_string(res.valuation())));
  r.seconds = since(t0);
  return r;
}

inline CheckResult asymptotics(const SuiteOptions&) {
  CheckResult r{9, "growth rates and constants", true, {}, 0};
  const auto t0 = Clock::now();
  for (const auto& f : expected::kAsymptotics) {
    const auto t1 = Clock::now();
    const BivarPoly P = f.m == 1 ? build_eq_Z() : build_eq_Rm(f.m);
    const auto coeffs = coefficients_via_recurrence(P, 1, 400);
    const SingularityReport rep = analyze(P, 1, coeffs, 60);
    const double secs = since(t1);
    const double dw = std::abs(rep.omega.convert_to<double>() - f.omega);
    const double dg = std::abs(rep.gamma.convert_to<double>() - f.gamma);
    const bool ok = dw <= expected::kOmegaTolerance && dg <= expected::kGammaTolerance && secs < expected::kAsymptSeconds;
    if (!ok) r.passed = false;
    std::ostringstream os;
    os << f.label << ": omega " << decimal(rep.omega, 12) << " (|d|=" << dw << "), gamma " << decimal(rep.gamma, 12)
       << " (|d|=" << dg << "), extrapolation " << (rep.agrees ? "agrees" : "DISAGREES") << ", " << secs << " s";
    r.details.push_back(os.str());
  }
  r.seconds = since(t0);
  return r;
}

inline CheckResult rna(const SuiteOptions&) {
  CheckResult r{10, "RNA secondary structure formula, n<=14", true, {}, 0};
  const auto t0 = Clock::now();
  long compared = 0;
  for (int n = 0; n <= 14; ++n) {
    const auto hist = count_by_arcs(n, DiagramClass::rna_secondary().constraints());
    for (int k = 0; k < static_cast<int>(hist.size()); ++k) {
      ++compared;
      if (hist[static_cast<std::size_t>(k)] != count_rna_secondary(n, k)) {
        r.passed = false;
        r.details.push_back("n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
    }
  }
  r.details.push_back(std::to_string(compared) + " (n, k) pairs compared");
  r.seconds = since(t0);
  return r;
}

inline CheckResult schroeder_protocol(const SuiteOptions&) {
  CheckResult r{11, "stack count convention against 2^(n-1) a_(n-2), n<=8", true, {}, 0};
  const auto t0 = Clock::now();
  int matching = 0;
  bool stack_class_matches = false;
  for (const auto& res : stack_convention_experiment(8)) {
    std::string row = res.convention.describe() + ":";
    for (const auto& c : res.counts) row += " " + str(c);
    row += res.matches ? "  <- matches" : "";
    r.details.push_back(row);
    if (res.matches) {
      ++matching;
      stack_class_matches = res.convention.shared_endpoints && res.convention.isolated_vertices;
    }
  }
  const auto pred = schroeder_stack_prediction(8);
  for (int n = 2; n <= 8; ++n)
    if (count_class(n, DiagramClass::stack()) != pred[static_cast<std::size_t>(n - 2)]) stack_class_matches = false;
  r.passed = matching == 1 && stack_class_matches;
  r.seconds = since(t0);
  return r;
}

inline CheckResult connected(const SuiteOptions&) {
  CheckResult r{12, "connected zigzag stacks number n-1, 2<=n<=12", true, {}, 0};
  const auto t0 = Clock::now();
  for (int n = 2; n <= 12; ++n) {
    const Count c = count_class(n, DiagramClass::connected_zigzag());
    if (c != n - 1 || count_connected_zigzag(n) != c) {
      r.passed = false;
      r.details.push_back("n=" + std::to_string(n) + ": " + str(c));
    }
  }
  r.seconds = since(t0);
  return r;
}

inline CheckResult contact_map(const SuiteOptions&) {
  CheckResult r{13, "two stacks and one queue for the 24-vertex contact map", true, {}, 0};
  const auto t0 = Clock::now();
  std::vector<Arc> all;
  for (const auto& p : expected::kContactParts) all.insert(all.end(), p.begin(), p.end());
  const Diagram d(24, all);
  const bool verified = verify_decomposition(d, expected::kContactParts);
  const bool s1 = is_stack(Diagram(24, expected::kContactParts[0]));
  const bool s2 = is_stack(Diagram(24, expected::kContactParts[1]));
  const bool q = is_queue(Diagram(24, expected::kContactParts[2]));
  const bool walk = contacts(LatticeWalk(expected::kContactWalk)) == d;
  r.passed = verified && s1 && s2 && q;
  r.details.push_back(std::string("verifier ") + (verified ? "accepts" : "rejects") + "; parts: stack " +
                      (s1 ? "ok" : "no") + ", stack " + (s2 ? "ok" : "no") + ", queue " + (q ? "ok" : "no"));
  r.details.push_back(std::string("reconstructed walk ") + expected::kContactWalk + " gives " +
                      (walk ? "exactly these 15 arcs" : "a different contact map"));
  r.seconds = since(t0);
  return r;
}

}  // namespace checks

using Check = std::function<CheckResult(const SuiteOptions&)>;

inline std::vector<Check> reproduction_suite() {
  return {checks::zigzag_table, checks::regular_linear_table, checks::series_oracle, checks::bijection,
          checks::localization, checks::structural,           checks::recurrences,   checks::ode,
          checks::asymptotics,  checks::rna,                  checks::schroeder_protocol, checks::connected,
          checks::contact_map};
}

/// Runs every check; exceptions become failures of that check.
inline std::vector<CheckResult> run_reproduction_suite(const SuiteOptions& opt = {},
                                                const std::function<void(const CheckResult&)>& on_done = {}) {
  std::vector<CheckResult> out;
  int id = 0;
  for (const auto& check : reproduction_suite()) {
    ++id;
    CheckResult r;
    try {
      r = check(opt);
    } catch (const std::exception& e) {
      r.id = id;
      r.name = "check " + std::to_string(id);
      r.passed = false;
      r.details.push_back(std::string("error: ") + e.what());
    }
    if (on_done) on_done(r);
    out.push_back(std::move(r));
  }
  return out;
}

inline std::string format_result(const CheckResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << "  [" << (r.id < 10 ? " " : "") << r.id << "] " << r.name;
  return os.str();
}

}  // namespace stacklab
