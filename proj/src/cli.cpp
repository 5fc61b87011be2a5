#include "p24/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <memory>
#include <ostream>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "p24/ball.hpp"
#include "p24/bessel.hpp"
#include "p24/errors.hpp"
#include "p24/expansion.hpp"
#include "p24/inequalities.hpp"
#include "p24/rademacher.hpp"
#include "p24/seqcore.hpp"

namespace p24::cli {
namespace {

using nlohmann::json;

enum class Format { Text, Json, Csv };

// Largest n for which the exact table is consulted as an oracle implicitly.
constexpr long kOracleLimit = 20000;

struct RunConfig {
  Format format = Format::Text;
  unsigned long precision = 0;  // 0: automatic
  unsigned long seed = 0;
  std::string table_method = "divisor";
};

class MismatchExit : public std::exception {};

mpfr_prec_t choose_precision(const RunConfig& cfg, mpfr_prec_t automatic) {
  return cfg.precision != 0 ? static_cast<mpfr_prec_t>(cfg.precision) : automatic;
}

// Digits supported by the radius, so printed midpoints carry no noise; at
// most 40.
int meaningful_digits(const Ball& b) {
  const int cap = std::min(40, static_cast<int>(static_cast<double>(b.precision()) * 0.30103) + 1);
  if (b.is_exact() || mpfr_zero_p(b.mid())) return cap;
  const double span = static_cast<double>(mpfr_get_exp(b.mid())) - b.log2_radius();
  return std::clamp(static_cast<int>(span * 0.30103) + 2, 3, cap);
}

std::string mid_text(const Ball& b) { return b.mid_string(meaningful_digits(b)); }

json ball_json(const Ball& b) { return {{"mid", mid_text(b)}, {"rad", b.rad_string()}}; }

seq::SequenceStore& store_for(const RunConfig& cfg, int colors) {
  static std::map<std::pair<int, std::string>, std::unique_ptr<seq::SequenceStore>> stores;
  auto& slot = stores[{colors, cfg.table_method}];
  if (!slot) {
    const auto method = cfg.table_method == "pentagonal" ? seq::TableMethod::Pentagonal : seq::TableMethod::DivisorSum;
    slot = std::make_unique<seq::SequenceStore>(colors, seq::cache_path_from_env(colors), method);
  }
  return *slot;
}

std::shared_ptr<const seq::SeqTable> ensure_table(const RunConfig& cfg, int colors, long n_max) {
  auto& store = store_for(cfg, colors);
  const long before = store.snapshot()->n_max();
  auto table = store.ensure(n_max);
  if (table->n_max() > before) store.checkpoint();
  return table;
}

void emit(std::ostream& out, const RunConfig& cfg, const json& j, const std::string& text) {
  if (cfg.format == Format::Json) {
    out << j.dump(2) << '\n';
  } else {
    out << text;
  }
}

std::string join_lines(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::string s;
  for (const auto& [k, v] : rows) s += k + ": " + v + "\n";
  return s;
}

// --- p24 ---

struct P24Args {
  long n = -1;
  long from = -1;
  long to = -1;
  int colors = 24;
};

int cmd_p24(const RunConfig& cfg, const P24Args& a, std::ostream& out) {
  long lo = a.n;
  long hi = a.n;
  if (a.n < 0) {
    if (a.from < 0 || a.to < a.from) throw CLI::ValidationError("p24 needs --n or a range --from A --to B");
    lo = a.from;
    hi = a.to;
  }
  const auto table = ensure_table(cfg, a.colors, hi);
  if (cfg.format == Format::Csv) {
    seq::write_csv(*table, out, lo, hi);
    return 0;
  }
  if (cfg.format == Format::Json) {
    json values = json::array();
    for (long n = lo; n <= hi; ++n) values.push_back({{"n", n}, {"value", (*table)[n].get_str()}});
    out << json{{"command", "p24"}, {"colors", a.colors}, {"values", values}}.dump(2) << '\n';
    return 0;
  }
  for (long n = lo; n <= hi; ++n) {
    if (lo != hi) out << n << ' ';
    out << (*table)[n].get_str() << '\n';
  }
  return 0;
}

// --- rademacher ---

struct RademacherArgs {
  long n = 0;
  long terms = 0;
};

int cmd_rademacher(const RunConfig& cfg, const RademacherArgs& a, std::ostream& out) {
  if (a.n < 2) throw DomainError("rademacher requires n >= 2");
  Ball partial, tail;
  long terms = 0;
  mpfr_prec_t prec = 0;
  std::optional<ExactInt> resolved;
  if (a.terms > 0 || cfg.precision != 0) {
    terms = a.terms > 0 ? a.terms : std::max<long>(1, static_cast<long>(std::ceil(std::sqrt(a.n))));
    prec = choose_precision(cfg, default_precision(a.n));
    partial = rademacher::exact_formula_partial(a.n, terms, prec);
    tail = rademacher::truncation_tail(a.n, terms, prec);
    Ball enc = partial;
    enc.add_error(tail);
    ExactInt z;
    if (unique_integer(enc, z)) resolved = z;
  } else {
    const auto r = rademacher::resolve(a.n);
    partial = r.partial;
    tail = r.tail;
    terms = r.terms;
    prec = r.precision;
    resolved = r.value;
  }
  std::optional<ExactInt> exact;
  if (a.n <= kOracleLimit) exact = (*ensure_table(cfg, 24, a.n))[a.n];
  const bool match = resolved && exact && *resolved == *exact;

  json j{{"command", "rademacher"},
         {"n", a.n},
         {"variant", rademacher::variant_name(rademacher::kSelectedVariant)},
         {"terms", terms},
         {"precision", prec},
         {"partial", ball_json(partial)},
         {"tail_bound", tail.upper_string(6)},
         {"resolved", resolved ? json(resolved->get_str()) : json()},
         {"exact", exact ? json(exact->get_str()) : json()},
         {"match", exact ? json(match) : json()}};
  emit(out, cfg, j,
       join_lines({{"n", std::to_string(a.n)},
                   {"terms", std::to_string(terms)},
                   {"precision", std::to_string(prec)},
                   {"partial", mid_text(partial) + " +- " + partial.rad_string()},
                   {"tail bound", tail.upper_string(6)},
                   {"resolved", resolved ? resolved->get_str() : "unresolved"},
                   {"exact", exact ? exact->get_str() : "not computed"},
                   {"status", !exact ? "no oracle" : (match ? "match" : "mismatch")}}));
  if (!resolved) throw PrecisionError("bracket does not isolate an integer; raise --terms or --precision");
  if (exact && !match) throw MismatchExit();
  return 0;
}

// --- bessel ---

struct BesselArgs {
  unsigned nu = 13;
  std::string x;
  unsigned N = 0;
};

int cmd_bessel(const RunConfig& cfg, const BesselArgs& a, std::ostream& out) {
  const mpfr_prec_t prec = choose_precision(cfg, 128);
  const Ball x = Ball::from_decimal(a.x, prec);
  const Ball series = bessel::bessel_i_series(a.nu, x);
  json j{{"command", "bessel"}, {"nu", a.nu}, {"x", a.x}, {"precision", prec}, {"series", ball_json(series)}};
  std::vector<std::pair<std::string, std::string>> rows{
      {"series", mid_text(series)}, {"radius", series.rad_string()}};
  bool ok = true;
  if (a.N > 0) {
    if (a.nu != 13) throw DomainError("the certified asymptotic expansion is implemented for nu = 13 only");
    const CertifiedValue asym = bessel::bessel_i13_asymptotic(x, a.N);
    ok = asym.enclosure().contains(series);
    j["N"] = a.N;
    j["asymptotic"] = ball_json(asym.value);
    j["bound"] = asym.bound.upper_string(6);
    j["series_inside_envelope"] = ok;
    rows.push_back({"asymptotic", mid_text(asym.value)});
    rows.push_back({"bound", asym.bound.upper_string(6)});
    rows.push_back({"series inside envelope", ok ? "yes" : "no"});
  }
  emit(out, cfg, j, join_lines(rows));
  if (!ok) throw MismatchExit();
  return 0;
}

// --- coeffs ---

struct CoeffArgs {
  std::string family = "Btilde";
  unsigned upto = 0;
};

int cmd_coeffs(const RunConfig& cfg, const CoeffArgs& a, std::ostream& out) {
  if (a.upto > 24) throw ResourceError("coefficient budget is m <= 24");
  const auto cs = expansion::coefficients(a.upto + 1);
  std::vector<PiLaurent> values;
  for (unsigned m = 0; m <= a.upto; ++m) {
    if (a.family == "T") {
      values.push_back(cs->T[m]);
    } else if (a.family == "Ahat") {
      values.push_back(PiLaurent(cs->Ahat[m]));
    } else if (a.family == "Bhat") {
      values.push_back(cs->Bhat[m]);
    } else if (a.family == "C") {
      values.push_back(cs->C[m]);
    } else {
      values.push_back(cs->Btilde[m]);
    }
  }
  if (cfg.format == Format::Csv) {
    out << "m,pi_pow,num,den\n";
    for (unsigned m = 0; m < values.size(); ++m) {
      for (const auto& [e, c] : values[m].terms()) {
        out << m << ',' << e << ',' << c.get_num().get_str() << ',' << c.get_den().get_str() << '\n';
      }
    }
    return 0;
  }
  json list = json::array();
  std::string text;
  for (unsigned m = 0; m < values.size(); ++m) {
    list.push_back({{"m", m}, {"value", values[m].to_json()}, {"text", values[m].to_string()}});
    text += std::to_string(m) + ": " + values[m].to_string() + "\n";
  }
  emit(out, cfg, json{{"command", "coeffs"}, {"family", a.family}, {"coefficients", list}}, text);
  return 0;
}

// --- expand ---

struct ExpandArgs {
  long n = 0;
  unsigned order = 1;
};

int cmd_expand(const RunConfig& cfg, const ExpandArgs& a, std::ostream& out) {
  const CertifiedValue v =
      expansion::asymptotic_p24(a.n, a.order, choose_precision(cfg, default_precision(std::max(a.n, 1L))));
  const Ball enc = v.enclosure();
  json j{{"command", "expand"},
         {"n", a.n},
         {"order", a.order},
         {"cutoff", expansion::cutoff_n(a.order)},
         {"value", ball_json(v.value)},
         {"bound", v.bound.upper_string(6)}};
  std::vector<std::pair<std::string, std::string>> rows{
      {"value", mid_text(v.value)}, {"bound", v.bound.upper_string(6)}};
  bool ok = true;
  if (a.n <= kOracleLimit) {
    const ExactInt exact = (*ensure_table(cfg, 24, a.n))[a.n];
    ok = enc.contains(exact);
    j["exact"] = exact.get_str();
    j["contains_exact"] = ok;
    rows.push_back({"exact", exact.get_str()});
    rows.push_back({"contains exact", ok ? "yes" : "no"});
  }
  emit(out, cfg, j, join_lines(rows));
  if (!ok) throw MismatchExit();
  return 0;
}

// --- scan ---

struct ScanArgs {
  std::string op;
  unsigned r = 1;
  unsigned m = 1;
  unsigned d = 2;
  long from = 0;
  long to = 0;
  unsigned workers = 0;
  std::string csv;
};

ineq::ScanOp parse_op(const std::string& s) {
  if (s == "logconcave") return ineq::ScanOp::LogConcave;
  if (s == "r-logconcave") return ineq::ScanOp::RLogConcave;
  if (s == "turan3") return ineq::ScanOp::Turan3;
  if (s == "laguerre") return ineq::ScanOp::Laguerre;
  return ineq::ScanOp::Jensen;
}

std::string list_text(const std::vector<long>& v) {
  if (v.empty()) return "none";
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

int cmd_scan(const RunConfig& cfg, const ScanArgs& a, std::ostream& out) {
  ineq::ScanSpec spec;
  spec.op = parse_op(a.op);
  spec.r = a.r;
  spec.m = a.m;
  spec.d = a.d;
  spec.n_lo = a.from;
  spec.n_hi = a.to;
  spec.workers = a.workers;
  if (spec.n_lo > spec.n_hi) throw CLI::ValidationError("--from must not exceed --to");
  const auto table = ensure_table(cfg, 24, ineq::required_extent(spec));

  std::ofstream file;
  std::ostream* rows = nullptr;
  if (!a.csv.empty()) {
    file.open(a.csv);
    if (!file) throw ResourceError("cannot open " + a.csv);
    rows = &file;
  } else if (cfg.format == Format::Csv) {
    rows = &out;
  }
  if (rows) *rows << "n,exact_value,sign\n";
  ineq::RowSink sink;
  if (rows) {
    sink = [rows](long n, const ExactInt& v, int sign) { *rows << n << ',' << v.get_str() << ',' << sign << '\n'; };
  }
  const ineq::ScanReport rep = ineq::scan(table->values, spec, sink);
  if (rows) rows->flush();
  if (cfg.format == Format::Csv && a.csv.empty()) return 0;

  json j = rep.to_json();
  j["command"] = "scan";
  emit(out, cfg, j,
       join_lines({{"op", rep.op},
                   {"range", std::to_string(rep.n_lo) + ".." + std::to_string(rep.n_hi)},
                   {"violations", list_text(rep.violations)},
                   {"zeros", list_text(rep.zeros)},
                   {"all hold from", std::to_string(rep.all_hold_from)}}));
  return 0;
}

// --- verify / conjecture ---

std::string trend_of(const std::vector<Ball>& ratios) {
  bool up = true, down = true;
  for (std::size_t i = 1; i < ratios.size(); ++i) {
    if (!certainly_less(ratios[i - 1], ratios[i])) up = false;
    if (!certainly_less(ratios[i], ratios[i - 1])) down = false;
  }
  if (ratios.size() < 2) return "single";
  return up ? "increasing" : (down ? "decreasing" : "mixed");
}

json conjecture_json(const std::vector<ExactInt>& values, unsigned m, const std::vector<long>& points,
                     std::string& text) {
  const auto ratios = ineq::conjecture_scan(values, m, points);
  json list = json::array();
  for (std::size_t i = 0; i < points.size(); ++i) {
    list.push_back({{"n", points[i]}, {"ratio", ball_json(ratios[i])}});
    text += "m=" + std::to_string(m) + " n=" + std::to_string(points[i]) + " ratio " + mid_text(ratios[i]) + "\n";
  }
  const std::string trend = trend_of(ratios);
  text += "m=" + std::to_string(m) + " trend " + trend + "\n";
  return {{"m", m}, {"ratios", list}, {"trend", trend}};
}

struct ConjectureArgs {
  std::vector<unsigned> m{1};
  std::vector<long> points{1000, 5000, 20000};
};

int cmd_conjecture(const RunConfig& cfg, const ConjectureArgs& a, std::ostream& out) {
  long hi = 0;
  unsigned mmax = 1;
  for (long p : a.points) {
    if (p < 0) throw RangeError("points must be nonnegative");
    hi = std::max(hi, p);
  }
  for (unsigned m : a.m) mmax = std::max(mmax, m);
  const auto table = ensure_table(cfg, 24, hi + 2 * static_cast<long>(mmax));
  std::string text;
  json results = json::array();
  for (unsigned m : a.m) results.push_back(conjecture_json(table->values, m, a.points, text));
  emit(out, cfg, json{{"command", "conjecture"}, {"results", results}}, text);
  return 0;
}

struct VerifyArgs {
  std::string target;
  unsigned m = 0;
  unsigned depth = 12;
  unsigned count = 100;
};

std::string symbolic_text(const ineq::SymbolicReport& r) {
  std::string s = r.name + (r.m ? "(m=" + std::to_string(r.m) + ")" : "") + " depth " + std::to_string(r.depth) +
                  "\n  leading z^" + std::to_string(r.leading_order) + ": " + r.leading.to_string() +
                  "  expected z^" + std::to_string(r.expected_order) + ": " + r.expected_leading.to_string() + "\n";
  if (r.expected_subleading) {
    s += "  subleading: " + r.subleading.to_string() + "  expected: " + r.expected_subleading->to_string() + "\n";
    if (r.subleading_scale && *r.subleading_scale != 1) {
      s += "  subleading / expected = " + to_string(*r.subleading_scale) + "\n";
    }
  }
  s += std::string("  ") + (r.match ? "match" : "MISMATCH") + "\n";
  return s;
}

// Randomized cross-checks between the scan operators, reproducible by seed.
json property_checks(const RunConfig& cfg, unsigned count, std::string& text, bool& ok) {
  const long hi = 2000;
  const auto table = ensure_table(cfg, 24, hi + 4);
  const auto& v = table->values;
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<long> pick(1, hi);
  long quad = 0, collapse = 0, cubic = 0;
  json fails = json::array();
  for (unsigned i = 0; i < count; ++i) {
    const long n = pick(rng);
    const bool q = ineq::is_hyperbolic(ineq::jensen_poly(v, 2, n).coefficients) ==
                   (ineq::logconcave_op(v[n], v[n + 1], v[n + 2]) >= 0);
    const bool c = ineq::laguerre_value(v, 1, n) == ExactRational(ineq::logconcave_op(v[n], v[n + 1], v[n + 2]));
    const bool t = ineq::is_hyperbolic(ineq::jensen_poly(v, 3, n - 1).coefficients) == (ineq::turan3_value(v, n) >= 0);
    quad += q;
    collapse += c;
    cubic += t;
    if (!(q && c && t)) fails.push_back(n);
  }
  ok = fails.empty();
  text += "quadratic Jensen vs log-concavity: " + std::to_string(quad) + "/" + std::to_string(count) + "\n";
  text += "Laguerre m=1 collapse: " + std::to_string(collapse) + "/" + std::to_string(count) + "\n";
  text += "cubic Jensen vs Turan order 3: " + std::to_string(cubic) + "/" + std::to_string(count) + "\n";
  return {{"seed", cfg.seed}, {"count", count}, {"quadratic", quad}, {"laguerre_collapse", collapse},
          {"cubic", cubic}, {"failures", fails}};
}

int cmd_verify(const RunConfig& cfg, const VerifyArgs& a, std::ostream& out) {
  json j{{"command", "verify"}, {"target", a.target}};
  std::string text;
  bool ok = true;
  if (a.target == "corollary1" || a.target == "corollary2") {
    const auto r = ineq::corollary_symbolic_check(
        a.target == "corollary1" ? ineq::Corollary::Turan3 : ineq::Corollary::LogConcave2, a.depth);
    ok = r.match;
    j["reports"] = json::array({r.to_json()});
    text = symbolic_text(r);
  } else if (a.target == "corollary3") {
    j["reports"] = json::array();
    const unsigned lo = a.m ? a.m : 2, hi = a.m ? a.m : 8;
    for (unsigned m = lo; m <= hi; ++m) {
      const auto r = ineq::corollary_symbolic_check(ineq::Corollary::Laguerre, std::max(a.depth, 3 * m), m);
      ok = ok && r.match;
      j["reports"].push_back(r.to_json());
      text += symbolic_text(r);
    }
  } else if (a.target == "conjecture") {
    const std::vector<long> points{1000, 5000, 20000};
    std::vector<unsigned> ms{1, 2, 3};
    if (a.m) ms = {a.m};
    const auto table = ensure_table(cfg, 24, points.back() + 2 * static_cast<long>(*std::max_element(ms.begin(), ms.end())));
    j["results"] = json::array();
    for (unsigned m : ms) j["results"].push_back(conjecture_json(table->values, m, points, text));
  } else {
    j["properties"] = property_checks(cfg, a.count, text, ok);
  }
  j["pass"] = ok;
  text += ok ? "PASS\n" : "FAIL\n";
  emit(out, cfg, j, text);
  if (!ok) throw MismatchExit();
  return 0;
}

// --- calibrate ---

struct CalibrateArgs {
  long from = 2;
  long to = 60;
  long bracket = -40;
  std::string out;
};

int cmd_calibrate(const RunConfig& cfg, const CalibrateArgs& a, std::ostream& out) {
  if (a.from < 2 || a.to < a.from) throw CLI::ValidationError("calibration range must satisfy 2 <= from <= to");
  const auto rep = rademacher::calibrate(a.from, a.to, a.bracket);
  json j = rep.to_json();
  if (!a.out.empty()) {
    std::ofstream f(a.out);
    if (!f) throw ResourceError("cannot open " + a.out);
    f << j.dump(2) << '\n';
  }
  j["command"] = "calibrate";
  std::string text;
  for (const auto& v : rep.variants) {
    text += rademacher::variant_name(v.variant) + ": " + (v.resolved_all ? "all resolved" : "fails at n = " + std::to_string(v.first_failure)) + "\n";
  }
  text += std::string("selected ") + rademacher::variant_name(rep.selected) + (rep.unique ? " (unique)\n" : " (NOT unique)\n");
  emit(out, cfg, j, text);
  if (!rep.unique) throw MismatchExit();
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"24-colored partition numbers: exact values, exact formula, certified asymptotics, inequality scans"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--precision", cfg.precision, "Working precision in bits (auto when omitted)")
      ->check(CLI::Range(64UL, 1UL << 24));
  app.add_option("--seed", cfg.seed, "Seed for randomized property checks");
  app.add_option("--table-method", cfg.table_method, "Exact table recurrence")
      ->check(CLI::IsMember({"divisor", "pentagonal"}));

  P24Args p24a;
  auto* p24c = app.add_subcommand("p24", "Exact values p_k(n)");
  p24c->add_option("--n", p24a.n, "Index")->check(CLI::NonNegativeNumber);
  p24c->add_option("--from", p24a.from, "First index of a range")->check(CLI::NonNegativeNumber);
  p24c->add_option("--to", p24a.to, "Last index of a range")->check(CLI::NonNegativeNumber);
  p24c->add_option("--colors", p24a.colors, "Number of colors k")->check(CLI::Range(1, 1000));

  RademacherArgs rad;
  auto* radc = app.add_subcommand("rademacher", "Exact formula evaluation and integer resolution");
  radc->add_option("--n", rad.n, "Index")->required();
  radc->add_option("--terms", rad.terms, "Number of k terms (automatic when omitted)")->check(CLI::PositiveNumber);

  BesselArgs bes;
  auto* besc = app.add_subcommand("bessel", "I-Bessel series and certified asymptotic envelope");
  besc->add_option("--nu", bes.nu, "Integer order")->check(CLI::Range(0U, 1000U));
  besc->add_option("--x", bes.x, "Argument, decimal")->required();
  besc->add_option("--N", bes.N, "Asymptotic truncation order (nu = 13)")->check(CLI::Range(1U, 60U));

  CoeffArgs co;
  auto* coc = app.add_subcommand("coeffs", "Exact expansion coefficients");
  coc->add_option("--family", co.family, "Coefficient family")
      ->required()
      ->check(CLI::IsMember({"T", "Ahat", "Bhat", "C", "Btilde"}));
  coc->add_option("--upto", co.upto, "Largest index")->required();

  ExpandArgs ex;
  auto* exc = app.add_subcommand("expand", "Certified asymptotic value of p_24(n)");
  exc->add_option("--n", ex.n, "Index")->required();
  exc->add_option("--order", ex.order, "Truncation order N")->required()->check(CLI::Range(1U, 24U));

  ScanArgs sc;
  auto* scc = app.add_subcommand("scan", "Exact inequality scan over a range");
  scc->add_option("--op", sc.op, "Operator")
      ->required()
      ->check(CLI::IsMember({"logconcave", "r-logconcave", "turan3", "laguerre", "jensen"}));
  scc->add_option("--r", sc.r, "Iterations for r-logconcave")->check(CLI::Range(1U, 64U));
  scc->add_option("--m", sc.m, "Laguerre order")->check(CLI::Range(1U, 64U));
  scc->add_option("--d", sc.d, "Jensen degree")->check(CLI::Range(1U, 64U));
  scc->add_option("--from", sc.from, "First index")->required()->check(CLI::NonNegativeNumber);
  scc->add_option("--to", sc.to, "Last index")->required()->check(CLI::NonNegativeNumber);
  scc->add_option("--workers", sc.workers, "Worker threads (0: all cores)");
  scc->add_option("--csv", sc.csv, "Stream rows n,exact_value,sign to this file");

  VerifyArgs ve;
  auto* vec = app.add_subcommand("verify", "Symbolic and numeric verification targets");
  vec->add_option("--target", ve.target, "Target")
      ->required()
      ->check(CLI::IsMember({"corollary1", "corollary2", "corollary3", "conjecture", "properties"}));
  vec->add_option("--m", ve.m, "Restrict to one order m")->check(CLI::Range(1U, 8U));
  vec->add_option("--depth", ve.depth, "Series depth")->check(CLI::Range(1U, 24U));
  vec->add_option("--count", ve.count, "Random samples for the properties target")->check(CLI::Range(1U, 100000U));

  ConjectureArgs cj;
  auto* cjc = app.add_subcommand("conjecture", "Laguerre ratios against the conjectured main term");
  cjc->add_option("--m", cj.m, "Orders m")->delimiter(',')->check(CLI::Range(1U, 64U));
  cjc->add_option("--points", cj.points, "Indices n")->delimiter(',');

  CalibrateArgs ca;
  auto* cac = app.add_subcommand("calibrate", "Select the Kloosterman sign convention against exact values");
  cac->add_option("--from", ca.from, "First index");
  cac->add_option("--to", ca.to, "Last index");
  cac->add_option("--bracket", ca.bracket, "log2 of the bracket half-width")->check(CLI::Range(-200L, -2L));
  cac->add_option("--out", ca.out, "Also write the report to this file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  cfg.format = format == "json" ? Format::Json : (format == "csv" ? Format::Csv : Format::Text);

  try {
    if (*p24c) return cmd_p24(cfg, p24a, out);
    if (*radc) return cmd_rademacher(cfg, rad, out);
    if (*besc) return cmd_bessel(cfg, bes, out);
    if (*coc) return cmd_coeffs(cfg, co, out);
    if (*exc) return cmd_expand(cfg, ex, out);
    if (*scc) return cmd_scan(cfg, sc, out);
    if (*vec) return cmd_verify(cfg, ve, out);
    if (*cjc) return cmd_conjecture(cfg, cj, out);
    if (*cac) return cmd_calibrate(cfg, ca, out);
  } catch (const MismatchExit&) {
    return 1;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const CalibrationError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return 3;
  }
  return 2;
}

}  // namespace p24::cli
