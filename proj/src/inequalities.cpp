#include "p24/inequalities.hpp"

#include <algorithm>
#include <thread>

#include "p24/errors.hpp"
#include "p24/expansion.hpp"
#include "p24/formal_series.hpp"

namespace p24::ineq {
namespace {

const ExactInt& at(const Values& a, long i) {
  if (i < 0 || i >= static_cast<long>(a.size())) {
    throw RangeError("sequence index " + std::to_string(i) + " outside available values");
  }
  return a[static_cast<std::size_t>(i)];
}

struct Row {
  long n;
  ExactInt value;
  int sign;
};

std::vector<Row> scan_chunk(const Values& a, const ScanSpec& spec, long lo, long hi) {
  std::vector<Row> rows;
  if (lo > hi) return rows;
  rows.reserve(static_cast<std::size_t>(hi - lo + 1));
  if (spec.op == ScanOp::LogConcave || spec.op == ScanOp::RLogConcave) {
    const unsigned r = spec.op == ScanOp::LogConcave ? 1 : spec.r;
    Values v(a.begin() + lo, a.begin() + hi + 2 * static_cast<long>(r) + 1);
    for (unsigned i = 0; i < r; ++i) v = apply_L(v);
    for (long n = lo; n <= hi; ++n) {
      const ExactInt& x = v[static_cast<std::size_t>(n - lo)];
      rows.push_back({n, x, sgn(x)});
    }
    return rows;
  }
  for (long n = lo; n <= hi; ++n) {
    switch (spec.op) {
      case ScanOp::Turan3: {
        ExactInt x = turan3_value(a, n);
        rows.push_back({n, x, sgn(x)});
        break;
      }
      case ScanOp::Laguerre: {
        ExactRational x = laguerre_value(a, spec.m, n);
        rows.push_back({n, x.get_num(), sgn(x)});
        break;
      }
      case ScanOp::Jensen: {
        const JensenPoly j = jensen_poly(a, spec.d, n);
        const long roots = poly::count_real_roots(j.coefficients);
        const bool hyp = is_hyperbolic(j.coefficients);
        rows.push_back({n, ExactInt(roots), hyp ? 1 : -1});
        break;
      }
      default:
        break;
    }
  }
  return rows;
}

FormalSeries shifted(unsigned depth, long s) { return expansion::series_oracle(depth, s); }

PiLaurent pi_poly(std::initializer_list<std::pair<int, long>> terms) {
  PiLaurent p;
  for (const auto& [e, c] : terms) p += PiLaurent::monomial(e, ExactRational(c));
  return p;
}

ExactInt double_factorial_odd(unsigned m) {
  ExactInt r = 1;
  for (unsigned k = 1; k <= 2 * m - 1; k += 2) r *= k;
  return r;
}

// q with a == q b, if one exists.
std::optional<ExactRational> proportionality(const PiLaurent& a, const PiLaurent& b) {
  if (a.is_zero() || b.is_zero() || a.terms().size() != b.terms().size()) return std::nullopt;
  std::optional<ExactRational> q;
  for (const auto& [e, c] : b.terms()) {
    const ExactRational r = a.coeff(e) / c;
    if (q && *q != r) return std::nullopt;
    q = r;
  }
  return q;
}

}  // namespace

ExactInt logconcave_op(const ExactInt& a0, const ExactInt& a1, const ExactInt& a2) { return a1 * a1 - a0 * a2; }

Values apply_L(const Values& v) {
  Values out;
  if (v.size() < 3) return out;
  out.reserve(v.size() - 2);
  for (std::size_t i = 0; i + 2 < v.size(); ++i) out.push_back(logconcave_op(v[i], v[i + 1], v[i + 2]));
  return out;
}

ExactInt r_logconcave_value(const Values& a, unsigned r, long n) {
  if (r < 1) throw DomainError("r must be positive");
  at(a, n);
  at(a, n + 2 * static_cast<long>(r));
  Values v(a.begin() + n, a.begin() + n + 2 * static_cast<long>(r) + 1);
  for (unsigned i = 0; i < r; ++i) v = apply_L(v);
  return v[0];
}

ExactInt turan3_value(const Values& a, long n) {
  if (n < 1) throw RangeError("turan3_value requires n >= 1");
  const ExactInt &am = at(a, n - 1), &a0 = at(a, n), &a1 = at(a, n + 1), &a2 = at(a, n + 2);
  const ExactInt f1 = a0 * a0 - am * a1;
  const ExactInt f2 = a1 * a1 - a0 * a2;
  const ExactInt g = a0 * a1 - am * a2;
  return 4 * f1 * f2 - g * g;
}

ExactRational laguerre_value(const Values& a, unsigned m, long n) {
  if (m < 1) throw DomainError("laguerre_value requires m >= 1");
  if (n < 0) throw RangeError("laguerre_value requires n >= 0");
  at(a, n + 2 * static_cast<long>(m));
  ExactInt sum = 0;
  for (unsigned k = 0; k <= 2 * m; ++k) {
    ExactInt t = binomial(2 * m, k) * at(a, n + k) * at(a, n + 2 * m - k);
    if ((m + k) % 2 == 0) {
      sum += t;
    } else {
      sum -= t;
    }
  }
  return make_rational(sum, ExactInt(2));
}

JensenPoly jensen_poly(const Values& a, unsigned d, long n) {
  if (d < 1) throw DomainError("jensen_poly requires d >= 1");
  if (n < 0) throw RangeError("jensen_poly requires n >= 0");
  JensenPoly j;
  j.d = d;
  j.n = n;
  for (unsigned i = 0; i <= d; ++i) j.coefficients.push_back(binomial(d, i) * at(a, n + i));
  if (j.coefficients.back() <= 0) throw DomainError("Jensen polynomial needs a positive leading coefficient");
  return j;
}

bool is_hyperbolic(const poly::IntPoly& p) { return poly::is_hyperbolic(p); }

std::string op_name(const ScanSpec& spec) {
  switch (spec.op) {
    case ScanOp::LogConcave: return "logconcave";
    case ScanOp::RLogConcave: return "r-logconcave(r=" + std::to_string(spec.r) + ")";
    case ScanOp::Turan3: return "turan3";
    case ScanOp::Laguerre: return "laguerre(m=" + std::to_string(spec.m) + ")";
    case ScanOp::Jensen: return "jensen(d=" + std::to_string(spec.d) + ")";
  }
  return "?";
}

long required_extent(const ScanSpec& spec) {
  switch (spec.op) {
    case ScanOp::LogConcave: return spec.n_hi + 2;
    case ScanOp::RLogConcave: return spec.n_hi + 2 * static_cast<long>(spec.r);
    case ScanOp::Turan3: return spec.n_hi + 2;
    case ScanOp::Laguerre: return spec.n_hi + 2 * static_cast<long>(spec.m);
    case ScanOp::Jensen: return spec.n_hi + static_cast<long>(spec.d);
  }
  return spec.n_hi;
}

long minimum_index(const ScanSpec& spec) { return spec.op == ScanOp::Turan3 ? 1 : 0; }

nlohmann::json ScanReport::to_json() const {
  return {{"op", op},
          {"n_lo", n_lo},
          {"n_hi", n_hi},
          {"violations", violations},
          {"zeros", zeros},
          {"all_hold_from", all_hold_from}};
}

ScanReport scan(const Values& a, const ScanSpec& spec, const RowSink& sink) {
  if (spec.n_lo > spec.n_hi) throw RangeError("empty scan range");
  if (spec.n_lo < minimum_index(spec)) throw RangeError("scan starts below the operator's first index");
  if (spec.op == ScanOp::RLogConcave && spec.r < 1) throw DomainError("r must be positive");
  if (spec.op == ScanOp::Laguerre && spec.m < 1) throw DomainError("m must be positive");
  if (spec.op == ScanOp::Jensen && spec.d < 1) throw DomainError("d must be positive");
  if (required_extent(spec) >= static_cast<long>(a.size())) {
    throw RangeError("scan needs values up to index " + std::to_string(required_extent(spec)));
  }
  unsigned workers = spec.workers != 0 ? spec.workers : std::max(1U, std::thread::hardware_concurrency());
  ScanReport rep;
  rep.op = op_name(spec);
  rep.n_lo = spec.n_lo;
  rep.n_hi = spec.n_hi;

  constexpr long kBlock = 2048;
  for (long block_lo = spec.n_lo; block_lo <= spec.n_hi; block_lo += kBlock) {
    const long block_hi = std::min(spec.n_hi, block_lo + kBlock - 1);
    const long len = block_hi - block_lo + 1;
    const long w = std::min<long>(workers, len);
    std::vector<std::vector<Row>> parts(static_cast<std::size_t>(w));
    if (w == 1) {
      parts[0] = scan_chunk(a, spec, block_lo, block_hi);
    } else {
      std::vector<std::thread> threads;
      std::vector<std::exception_ptr> errors(static_cast<std::size_t>(w));
      for (long i = 0; i < w; ++i) {
        const long lo = block_lo + len * i / w;
        const long hi = block_lo + len * (i + 1) / w - 1;
        threads.emplace_back([&, i, lo, hi] {
          try {
            parts[static_cast<std::size_t>(i)] = scan_chunk(a, spec, lo, hi);
          } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
          }
        });
      }
      for (auto& t : threads) t.join();
      for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
      }
    }
    for (const auto& part : parts) {
      for (const auto& row : part) {
        if (row.sign < 0) rep.violations.push_back(row.n);
        if (row.sign == 0) rep.zeros.push_back(row.n);
        if (sink) sink(row.n, row.value, row.sign);
      }
    }
  }
  rep.all_hold_from = rep.violations.empty() ? spec.n_lo : rep.violations.back() + 1;
  return rep;
}

ScanReport r_logconcave_scan(const Values& a, unsigned r, long n_lo, long n_hi, unsigned workers) {
  ScanSpec spec;
  spec.op = ScanOp::RLogConcave;
  spec.r = r;
  spec.n_lo = n_lo;
  spec.n_hi = n_hi;
  spec.workers = workers;
  return scan(a, spec);
}

nlohmann::json SymbolicReport::to_json() const {
  nlohmann::json j{{"name", name},
                   {"depth", depth},
                   {"expected_order", expected_order},
                   {"leading_order", leading_order},
                   {"leading", leading.to_json()},
                   {"leading_text", leading.to_string()},
                   {"subleading", subleading.to_json()},
                   {"subleading_text", subleading.to_string()},
                   {"expected_leading", expected_leading.to_json()},
                   {"expected_leading_text", expected_leading.to_string()},
                   {"match", match}};
  if (m != 0) j["m"] = m;
  if (expected_subleading) {
    j["expected_subleading"] = expected_subleading->to_json();
    j["expected_subleading_text"] = expected_subleading->to_string();
    j["subleading_scale"] = subleading_scale ? nlohmann::json(to_string(*subleading_scale)) : nlohmann::json();
  }
  return j;
}

SymbolicReport corollary_symbolic_check(Corollary which, unsigned depth, unsigned m) {
  SymbolicReport rep;
  rep.depth = depth;
  FormalSeries combo(depth);
  switch (which) {
    case Corollary::Turan3: {
      rep.name = "turan3";
      rep.expected_order = 9;
      rep.expected_leading = pi_poly({{3, 4}});
      rep.expected_subleading = pi_poly({{2, -1683}, {4, -64}});
      if (depth < 10) throw DomainError("turan3 check needs depth >= 10");
      if (depth > 24) throw ResourceError("depth budget is 24");
      const FormalSeries fm = shifted(depth, -1), f0 = shifted(depth, 0), f1 = shifted(depth, 1),
                         f2 = shifted(depth, 2);
      const FormalSeries a = f0 * f0 - fm * f1;
      const FormalSeries b = f1 * f1 - f0 * f2;
      const FormalSeries c = f0 * f1 - fm * f2;
      combo = a * b * PiLaurent(4L) - c * c;
      break;
    }
    case Corollary::LogConcave2: {
      rep.name = "logconcave2";
      rep.expected_order = 9;
      rep.expected_leading = pi_poly({{3, 2}});
      rep.expected_subleading = pi_poly({{2, -843}, {4, -64}});
      if (depth < 10) throw DomainError("logconcave2 check needs depth >= 10");
      if (depth > 24) throw ResourceError("depth budget is 24");
      // Centered at n: L_n = a_n^2 - a_{n-1}a_{n+1}, then L_n^2 - L_{n-1}L_{n+1}.
      std::vector<FormalSeries> f;
      for (long s = -2; s <= 2; ++s) f.push_back(shifted(depth, s));
      std::vector<FormalSeries> l;
      for (int i = 0; i < 3; ++i) l.push_back(f[i + 1] * f[i + 1] - f[i] * f[i + 2]);
      combo = l[1] * l[1] - l[0] * l[2];
      break;
    }
    case Corollary::Laguerre: {
      if (m < 1) throw DomainError("laguerre check needs m >= 1");
      rep.name = "laguerre";
      rep.m = m;
      rep.expected_order = 3 * m;
      const ExactInt lead_num = double_factorial_odd(m) << m;
      const ExactRational lead = make_rational(lead_num, ExactInt(2));
      rep.expected_leading = PiLaurent::monomial(static_cast<int>(m), lead);
      if (depth < 3 * m) throw DomainError("laguerre check needs depth >= 3m");
      if (depth > 24) throw ResourceError("depth budget is 24");
      std::vector<FormalSeries> f;
      for (unsigned s = 0; s <= 2 * m; ++s) f.push_back(shifted(depth, static_cast<long>(s)));
      FormalSeries sum(depth);
      for (unsigned k = 0; k <= 2 * m; ++k) {
        ExactRational c = make_rational(binomial(2 * m, k), ExactInt(2));
        if ((m + k) % 2 == 1) c = -c;
        sum += f[k] * f[2 * m - k] * PiLaurent(c);
      }
      combo = sum;
      break;
    }
  }
  rep.leading_order = combo.valuation();
  if (rep.leading_order <= combo.order()) rep.leading = combo[rep.leading_order];
  if (rep.leading_order + 1 <= combo.order()) rep.subleading = combo[rep.leading_order + 1];
  if (rep.expected_subleading) rep.subleading_scale = proportionality(rep.subleading, *rep.expected_subleading);
  rep.match = rep.leading_order == rep.expected_order && rep.leading == rep.expected_leading &&
              (!rep.expected_subleading || rep.subleading == *rep.expected_subleading);
  return rep;
}

std::vector<Ball> conjecture_scan(const Values& a, unsigned m, const std::vector<long>& points) {
  std::vector<Ball> out;
  for (long n : points) {
    const ExactRational L = laguerre_value(a, m, n);
    const mpfr_prec_t p = default_precision(4 * std::max(n, 1L)) + 64;
    const Ball pi = pi_ball(p);
    const Ball nb = Ball::from(n, p);
    const Ball sq = sqrt(nb);
    Ball main = pow(pi * 2, static_cast<long>(m)) * Ball::from(double_factorial_odd(m), p);
    main *= exp(pi * 8 * sq);
    main /= pow(nb, 13L) * sq * 4;
    main /= pow(nb, static_cast<long>(m)) * pow(sq, static_cast<long>(m));
    out.push_back(Ball::from(L, p) / main);
  }
  return out;
}

Ball turan3_normalized(const Values& a, long n) {
  const ExactInt t = turan3_value(a, n);
  const mpfr_prec_t p = default_precision(4 * n) + 64;
  const Ball pref = expansion::prefactor(n, p);
  const Ball nb = Ball::from(n, p);
  const Ball scale = pow(nb, 4L) * sqrt(nb);
  return Ball::from(t, p) * scale / (pow(pref, 4L) * pow(pi_ball(p), 3L) * 4);
}

}  // namespace p24::ineq
