#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <stacklab/stacklab.hpp>

using namespace stacklab;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string limits;
  int workers = 1;

  std::string cls;
  std::optional<int> m, k, type, i;
  int n = 0;
  bool json = false;
  std::string in, out;
  std::string walks, emit;
  std::string gf;
  int order = 20;
  bool as_printed = false;
  bool derive = false, printed = false;
  std::optional<int> extend;
  int digits = 30;
  std::string suite = "paper";
  std::vector<int> only;
  std::string which = "zigzag", source = "count", format = "plain";
  int nmax = 12;
};

Limits active_limits(const Options& o) { return o.limits.empty() ? limits_from_env() : parse_limits(o.limits, limits_from_env()); }

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read '" + path + "'");
  std::vector<std::string> lines;
  for (std::string s; std::getline(f, s);) lines.push_back(s);
  return lines;
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r") == std::string::npos; }

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw UsageError("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

ojson opt_int(const std::optional<int>& v) { return v ? ojson(*v) : ojson(nullptr); }

ojson strings(const std::vector<BigInt>& v) {
  ojson a = ojson::array();
  for (const auto& c : v) a.push_back(c.get_str());
  return a;
}

DiagramClass class_from(const Options& o) {
  try {
    return parse_class(o.cls, o.m, o.type);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int run_count(const Options& o) {
  const DiagramClass cls = class_from(o);
  const Limits lim = active_limits(o);
  Count value;
  if (o.k) {
    check_limit(o.n, lim.count_n, "counting");
    const auto hist = count_by_arcs(o.n, cls.constraints(), o.workers);
    value = *o.k >= 0 && static_cast<std::size_t>(*o.k) < hist.size() ? hist[static_cast<std::size_t>(*o.k)] : Count(0);
  } else {
    value = count_class(o.n, cls, o.workers, lim);
  }
  if (o.json) {
    ojson row;
    row["class"] = o.cls;
    row["m"] = opt_int(cls.m);
    row["n"] = o.n;
    if (o.k) row["k"] = *o.k;
    row["count"] = value.get_str();
    std::cout << row.dump() << "\n";
  } else {
    std::cout << value.get_str() << "\n";
  }
  return kOk;
}

int run_enumerate(const Options& o) {
  const DiagramClass cls = class_from(o);
  const auto all = enumerate_class(o.n, cls, active_limits(o));
  Output out(o.out);
  for (const auto& d : all) out.stream() << render(d) << "\n";
  return kOk;
}

int run_transform(const Options& o, bool reducing) {
  const int m = *o.m;
  require_regularity(m);
  const auto lines = read_lines(o.in);
  std::vector<std::string> results;
  int bad = 0;
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    if (blank(lines[ln])) continue;
    try {
      const Diagram d = parse_diagram(lines[ln]);
      results.push_back(render(reducing ? reduce(d, m) : expand(d, m)));
    } catch (const DiagramError& e) {
      ++bad;
      std::cerr << o.in << ":" << ln + 1 << ": " << e.what() << "\n";
    }
  }
  Output out(o.out);
  for (const auto& r : results) out.stream() << r << "\n";
  return bad == 0 ? kOk : kFailed;
}

ojson decomposition_json(const Diagram& S, int m) {
  ojson j;
  j["diagram"] = render(S);
  const Decomposition dec = primary_component(S);
  ojson comp;
  comp["vertices"] = dec.vertices;
  comp["arcs"] = render(dec.component);
  j["component"] = comp;
  ojson ivs = ojson::array();
  for (const Interval& iv : dec.public_intervals()) {
    ojson x;
    x["u"] = iv.u;
    x["v"] = iv.right_open ? ojson(nullptr) : ojson(iv.v);
    x["lo"] = iv.lo;
    x["hi"] = iv.hi;
    x["substructure"] = render(dec.substructure(iv));
    ivs.push_back(x);
  }
  j["intervals"] = ivs;
  ojson js = ojson::array();
  for (auto [a, b] : dec.jsets()) js.push_back({a, b});
  j["jsets"] = js;
  const bool reduced = is_m_reduced(S, m);
  j["m_reduced"] = reduced;
  j["localized_check"] = verify_localization(S, m);
  if (reduced && !dec.component.empty())
    j["tags"] = tag_strings(classify_intervals(dec, m));
  else
    j["tags"] = nullptr;
  return j;
}

int run_decompose(const Options& o) {
  const int m = *o.m;
  require_regularity(m);
  const auto lines = read_lines(o.in);
  ojson all = ojson::array();
  int bad = 0;
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    if (blank(lines[ln])) continue;
    try {
      all.push_back(decomposition_json(parse_diagram(lines[ln]), m));
    } catch (const DiagramError& e) {
      ++bad;
      std::cerr << o.in << ":" << ln + 1 << ": " << e.what() << "\n";
    }
  }
  std::cout << all.dump(2) << "\n";
  return bad == 0 ? kOk : kFailed;
}

std::string arcs_text(const ArcSet& s) {
  std::string t;
  for (const Arc& a : s) t += (t.empty() ? "" : " ") + std::to_string(a.i) + "-" + std::to_string(a.j);
  return "{" + t + "}";
}

int run_contactmap(const Options& o) {
  const auto lines = read_lines(o.walks);
  std::unique_ptr<Output> emit;
  if (!o.emit.empty()) emit = std::make_unique<Output>(o.emit);
  ojson all = ojson::array();
  int bad = 0;
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    std::string moves = lines[ln];
    moves.erase(std::remove_if(moves.begin(), moves.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
                moves.end());
    if (moves.empty()) continue;
    try {
      const Diagram d = contacts(LatticeWalk(moves));
      if (emit) emit->stream() << render(d) << "\n";
      const auto parts = decompose_heuristic(d);
      if (o.json) {
        ojson j;
        j["walk"] = moves;
        j["diagram"] = render(d);
        if (parts) {
          ojson p;
          p["stack1"] = arcs_text((*parts)[0]);
          p["stack2"] = arcs_text((*parts)[1]);
          p["queue"] = arcs_text((*parts)[2]);
          p["verified"] = verify_decomposition(d, *parts);
          j["decomposition"] = p;
        } else {
          j["decomposition"] = nullptr;
        }
        all.push_back(j);
      } else {
        std::cout << moves << "\t" << render(d) << "\n";
        if (parts)
          std::cout << "\tstack " << arcs_text((*parts)[0]) << " stack " << arcs_text((*parts)[1]) << " queue "
                    << arcs_text((*parts)[2]) << (verify_decomposition(d, *parts) ? "" : "  (rejected)") << "\n";
        else
          std::cout << "\tno two-stack one-queue split found\n";
      }
    } catch (const WalkError& e) {
      ++bad;
      std::cerr << o.walks << ":" << ln + 1 << ": " << e.what() << "\n";
    }
  }
  if (o.json) std::cout << all.dump(2) << "\n";
  return bad == 0 ? kOk : kFailed;
}

int need_m(const Options& o, const std::string& what) {
  if (!o.m) throw UsageError(what + " needs --m");
  return *o.m;
}

int run_series(const Options& o) {
  const Limits lim = active_limits(o);
  if (o.order < 0) throw UsageError("--order must be nonnegative");
  if (o.order > lim.series_order)
    throw LimitError("series order " + std::to_string(o.order) + " exceeds the limit " + std::to_string(lim.series_order));
  const Reading reading = o.as_printed ? Reading::as_printed() : Reading::corrected();
  IntSeries s;
  if (o.gf == "z") s = series_z(o.order);
  else if (o.gf == "zm") s = series_Zm(need_m(o, "zm"), o.order);
  else if (o.gf == "rm") s = series_Rm(need_m(o, "rm"), o.order);
  else if (o.gf == "exrna") s = series_extended_rna(o.order);
  else if (o.gf == "ti") {
    if (!o.i) throw UsageError("ti needs --i");
    s = series_T(need_m(o, "ti"), *o.i, o.order, reading);
  } else if (o.gf == "g") s = series_G(need_m(o, "g"), o.order);
  else if (o.gf == "h") s = series_H(need_m(o, "h"), o.order, reading);
  else if (o.gf == "schroeder") s = schroeder(o.order);
  else throw UsageError("unknown generating function '" + o.gf + "'");
  if (o.json) {
    ojson j;
    j["gf"] = o.gf;
    j["m"] = opt_int(o.m);
    if (o.gf == "ti") j["i"] = *o.i;
    j["order"] = o.order;
    j["coefficients"] = strings(s.coefficients());
    std::cout << j.dump() << "\n";
  } else {
    for (int n = 0; n <= s.order(); ++n) std::cout << n << "\t" << s[static_cast<std::size_t>(n)].get_str() << "\n";
  }
  return kOk;
}

BivarPoly equation_for(const Options& o) {
  if (o.gf == "z") return build_eq_Z();
  if (o.gf == "zm") return build_eq_Zm(need_m(o, "zm"));
  if (o.gf == "rm") return build_eq_Rm(need_m(o, "rm"));
  throw UsageError("unknown generating function '" + o.gf + "'");
}

int run_recurrence(const Options& o) {
  if (o.derive && o.printed) throw UsageError("--derive and --paper are exclusive");
  if (o.printed && o.gf != "z") throw UsageError("--paper is only available for z");
  const BivarPoly P = equation_for(o);
  PRecurrence rec;
  std::optional<LinearODE> ode;
  if (o.printed) {
    rec = printed_recurrence_z();
  } else {
    ode = algebraic_to_ode(P);
    rec = ode_to_recurrence(*ode);
  }
  // Certify on a window against the series.
  const int window = 100;
  const IntSeries s = solve_counting(P, 1, window + rec.order());
  const int threshold = measured_threshold(rec, s.coefficients(), window);
  std::vector<BigInt> terms;
  if (o.extend) {
    if (*o.extend < 0) throw UsageError("--extend must be nonnegative");
    const int init = std::min(*o.extend, rec.order() + std::max(rec.n0, threshold));
    std::vector<BigInt> head(s.coefficients().begin(), s.coefficients().begin() + init + 1);
    terms = eval_recurrence(rec, head, *o.extend);
  }
  if (o.json) {
    ojson j;
    j["gf"] = o.gf;
    j["m"] = opt_int(o.m);
    j["source"] = o.printed ? "printed" : "derived";
    if (ode) j["ode_order"] = ode->order();
    j["order"] = rec.order();
    j["n0"] = rec.n0;
    j["measured_threshold"] = threshold;
    ojson coeffs = ojson::array();
    for (const auto& p : rec.p) coeffs.push_back(strings(p.coefficients()));
    j["coefficients"] = coeffs;
    if (o.extend) j["terms"] = strings(terms);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "sum_{i=0}^{" << rec.order() << "} p_i(n) y(n+i) = 0 for n >= " << rec.n0
              << " (holds on the series from n = " << threshold << " through " << window << ")\n";
    if (ode) std::cout << "from an ODE of order " << ode->order() << "\n";
    Table t;
    std::size_t deg = 0;
    for (const auto& p : rec.p) deg = std::max(deg, p.coefficients().size());
    t.columns.push_back("i");
    for (std::size_t d = 0; d < deg; ++d) t.columns.push_back("n^" + std::to_string(d));
    for (std::size_t i = 0; i < rec.p.size(); ++i) {
      std::vector<Cell> row{Cell(static_cast<int>(i))};
      for (std::size_t d = 0; d < deg; ++d) row.push_back(rec.p[i].coeff(d).get_str());
      t.add(row);
    }
    emit_table(t, TableFormat::Plain, std::cout);
    if (o.extend)
      for (std::size_t n = 0; n < terms.size(); ++n) std::cout << n << "\t" << terms[n].get_str() << "\n";
  }
  return kOk;
}

int run_asympt(const Options& o) {
  const Limits lim = active_limits(o);
  if (o.digits < 20) throw UsageError("--digits must be at least 20");
  if (o.digits > lim.digits)
    throw LimitError("digits " + std::to_string(o.digits) + " exceed the limit " + std::to_string(lim.digits));
  BivarPoly P;
  if (o.gf == "z") P = build_eq_Z();
  else if (o.gf == "rm") P = build_eq_Rm(need_m(o, "rm"));
  else throw UsageError("asympt supports --gf z or rm");
  const auto coeffs = coefficients_via_recurrence(P, 1, 400);
  const SingularityReport rep = analyze(P, 1, coeffs, o.digits);
  const int shown = o.digits;
  const int ex_shown = 15;
  if (o.json) {
    ojson j;
    j["rho"] = decimal(rep.rho, shown);
    j["omega"] = decimal(rep.omega, shown);
    j["gamma"] = decimal(rep.gamma, shown);
    j["omega_extrap"] = decimal(rep.omega_extrap, ex_shown);
    j["gamma_extrap"] = decimal(rep.gamma_extrap, ex_shown);
    j["exponent"] = rep.exponent;
    j["z_at_rho"] = decimal(rep.z_at_rho, shown);
    j["omega_discrepancy"] = decimal(rep.omega_discrepancy, 3);
    j["gamma_discrepancy"] = decimal(rep.gamma_discrepancy, 3);
    j["extrapolation_agrees"] = rep.agrees;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "rho           " << decimal(rep.rho, shown) << "\n"
              << "omega         " << decimal(rep.omega, shown) << "\n"
              << "gamma         " << decimal(rep.gamma, shown) << "\n"
              << "Z(rho)        " << decimal(rep.z_at_rho, shown) << "\n"
              << "omega_extrap  " << decimal(rep.omega_extrap, ex_shown) << "  (relative difference "
              << decimal(rep.omega_discrepancy, 3) << ")\n"
              << "gamma_extrap  " << decimal(rep.gamma_extrap, ex_shown) << "  (relative difference "
              << decimal(rep.gamma_discrepancy, 3) << ")\n";
    if (!rep.agrees) std::cout << "warning: the two estimates disagree\n";
  }
  return rep.agrees ? kOk : kFailed;
}

int run_verify(const Options& o) {
  if (o.suite != "paper") throw UsageError("unknown suite '" + o.suite + "'");
  SuiteOptions so;
  so.workers = o.workers;
  const auto suite = reproduction_suite();
  for (int id : o.only)
    if (id < 1 || id > static_cast<int>(suite.size())) throw UsageError("no check numbered " + std::to_string(id));
  std::vector<CheckResult> results;
  int failed = 0;
  for (int id = 1; id <= static_cast<int>(suite.size()); ++id) {
    if (!o.only.empty() && std::find(o.only.begin(), o.only.end(), id) == o.only.end()) continue;
    CheckResult r;
    try {
      r = suite[static_cast<std::size_t>(id - 1)](so);
    } catch (const std::exception& e) {
      r = {id, "check " + std::to_string(id), false, {std::string("error: ") + e.what()}, 0};
    }
    if (!r.passed) ++failed;
    if (!o.json) {
      std::cout << format_result(r) << "\n";
      for (const auto& d : r.details) std::cout << "        " << d << "\n";
      std::cout.flush();
    }
    results.push_back(std::move(r));
  }
  if (o.json) {
    ojson arr = ojson::array();
    for (const auto& r : results) {
      ojson j;
      j["id"] = r.id;
      j["name"] = r.name;
      j["passed"] = r.passed;
      j["details"] = r.details;
      arr.push_back(j);
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    std::cout << results.size() - static_cast<std::size_t>(failed) << "/" << results.size() << " checks pass\n";
  }
  return failed == 0 ? kOk : kFailed;
}

int run_table(const Options& o) {
  const TableFormat fmt = parse_format(o.format);
  const bool from_series = o.source == "series";
  if (!from_series && o.source != "count") throw UsageError("--source is count or series");
  Table t;
  const Limits lim = active_limits(o);
  if (o.which == "zigzag") {
    t.columns = {"n", "count"};
    const IntSeries s = from_series ? series_z(o.nmax) : IntSeries();
    for (int n = 1; n <= o.nmax; ++n) {
      const Count c = from_series ? s[static_cast<std::size_t>(n)] : count_class(n, DiagramClass::zigzag(), o.workers, lim);
      t.add({n, c.get_str()});
    }
  } else if (o.which == "regular-linear") {
    t.columns = {"m"};
    for (int n = 1; n <= o.nmax; ++n) t.columns.push_back(std::to_string(n));
    for (int m = 3; m <= 6; ++m) {
      std::vector<Cell> row{m};
      const IntSeries s = from_series ? series_Rm(m, o.nmax) : IntSeries();
      for (int n = 1; n <= o.nmax; ++n) {
        const Count c =
            from_series ? s[static_cast<std::size_t>(n)] : count_class(n, DiagramClass::regular_linear(m), o.workers, lim);
        row.push_back(c.get_str());
      }
      t.add(row);
    }
  } else {
    throw UsageError("unknown table '" + o.which + "' (zigzag, regular-linear)");
  }
  emit_table(t, fmt, std::cout);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration and generating functions for stacks and zigzag stacks"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--limits", o.limits, "caps such as enum=14,count=16,order=512,digits=1000 (overrides STACKLAB_LIMITS)");
  app.add_option("--workers", o.workers, "threads for enumeration")->check(CLI::PositiveNumber);

  auto* count = app.add_subcommand("count", "count a diagram class on [n]");
  count->add_option("--class", o.cls, "stack, queue, zigzag, connected-zigzag, regular-linear, reduced-zigzag, rna, "
                                      "type-t1..type-t6, type-g, type-h")->required();
  count->add_option("--m", o.m, "regularity parameter");
  count->add_option("--k", o.k, "count only diagrams with exactly k arcs");
  count->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);
  count->add_flag("--json", o.json);
  count->add_option("--workers", o.workers)->check(CLI::PositiveNumber);

  auto* enumerate = app.add_subcommand("enumerate", "list a diagram class on [n], one diagram per line");
  enumerate->add_option("--class", o.cls)->required();
  enumerate->add_option("--m", o.m);
  enumerate->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);
  enumerate->add_option("--out", o.out, "output file (default stdout)");

  auto* reduce_cmd = app.add_subcommand("reduce", "map m-regular linear stacks to m-reduced zigzag stacks");
  auto* expand_cmd = app.add_subcommand("expand", "inverse of reduce");
  for (auto* c : {reduce_cmd, expand_cmd}) {
    c->add_option("--m", o.m)->required();
    c->add_option("--in", o.in)->required();
    c->add_option("--out", o.out, "output file (default stdout)");
  }

  auto* decompose = app.add_subcommand("decompose", "primary component, intervals and types as JSON");
  decompose->add_option("--m", o.m)->required();
  decompose->add_option("--in", o.in)->required();

  auto* contactmap = app.add_subcommand("contactmap", "contact maps of square-lattice walks");
  contactmap->add_option("--walks", o.walks)->required();
  contactmap->add_option("--emit-diagrams", o.emit);
  contactmap->add_flag("--json", o.json);

  auto* series = app.add_subcommand("series", "coefficients of a generating function");
  series->add_option("--gf", o.gf, "z, zm, rm, exrna, ti, g, h, schroeder")->required();
  series->add_option("--m", o.m);
  series->add_option("--i", o.i, "substructure type for ti");
  series->add_option("--order", o.order)->required();
  series->add_flag("--as-printed", o.as_printed, "use the H equation and master identity exactly as displayed");
  series->add_flag("--json", o.json);

  auto* recurrence = app.add_subcommand("recurrence", "P-recurrence for z, z_m or r_m");
  recurrence->add_option("--gf", o.gf, "z, zm, rm")->required();
  recurrence->add_option("--m", o.m);
  recurrence->add_flag("--derive", o.derive, "derive from the algebraic equation (default)");
  recurrence->add_flag("--paper", o.printed, "the printed seven-term recurrence (z only)");
  recurrence->add_option("--extend", o.extend, "print terms 0..N");
  recurrence->add_flag("--json", o.json);

  auto* asympt = app.add_subcommand("asympt", "dominant singularity and coefficient asymptotics");
  asympt->add_option("--gf", o.gf, "z or rm")->required();
  asympt->add_option("--m", o.m);
  asympt->add_option("--digits", o.digits, "significant digits (default 30)");
  asympt->add_flag("--json", o.json);

  auto* verify = app.add_subcommand("verify", "run the reproduction suite");
  verify->add_option("--suite", o.suite)->required();
  verify->add_option("--check", o.only, "run only these check numbers");
  verify->add_option("--workers", o.workers)->check(CLI::PositiveNumber);
  verify->add_flag("--json", o.json);

  auto* table = app.add_subcommand("table", "count tables as json, csv or plain text");
  table->add_option("--which", o.which, "zigzag or regular-linear");
  table->add_option("--source", o.source, "count (enumeration) or series");
  table->add_option("--nmax", o.nmax)->check(CLI::NonNegativeNumber);
  table->add_option("--format", o.format, "json, csv, plain");
  table->add_option("--workers", o.workers)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*count) return run_count(o);
    if (*enumerate) return run_enumerate(o);
    if (*reduce_cmd) return run_transform(o, true);
    if (*expand_cmd) return run_transform(o, false);
    if (*decompose) return run_decompose(o);
    if (*contactmap) return run_contactmap(o);
    if (*series) return run_series(o);
    if (*recurrence) return run_recurrence(o);
    if (*asympt) return run_asympt(o);
    if (*verify) return run_verify(o);
    if (*table) return run_table(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const LimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
