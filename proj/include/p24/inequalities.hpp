#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "p24/ball.hpp"
#include "p24/numerics.hpp"
#include "p24/pi_laurent.hpp"
#include "p24/polynomial.hpp"

namespace p24::ineq {

using Values = std::vector<ExactInt>;

// a1^2 - a0 a2
ExactInt logconcave_op(const ExactInt& a0, const ExactInt& a1, const ExactInt& a2);
// {v_{i+1}^2 - v_i v_{i+2}}; two entries shorter than v.
Values apply_L(const Values& v);
// r-fold iterate of the operator at index n; uses a[n..n+2r].
ExactInt r_logconcave_value(const Values& a, unsigned r, long n);

// 4(a_n^2 - a_{n-1}a_{n+1})(a_{n+1}^2 - a_n a_{n+2}) - (a_n a_{n+1} - a_{n-1}a_{n+2})^2
ExactInt turan3_value(const Values& a, long n);

// (1/2) sum_{k=0}^{2m} (-1)^{m+k} binom(2m,k) a(n+k) a(n+2m-k)
ExactRational laguerre_value(const Values& a, unsigned m, long n);

struct JensenPoly {
  unsigned d = 0;
  long n = 0;
  poly::IntPoly coefficients;  // j-th entry binom(d,j) a_{n+j}
};

JensenPoly jensen_poly(const Values& a, unsigned d, long n);
bool is_hyperbolic(const poly::IntPoly& p);

enum class ScanOp { LogConcave, RLogConcave, Turan3, Laguerre, Jensen };

struct ScanSpec {
  ScanOp op = ScanOp::LogConcave;
  unsigned r = 1;
  unsigned m = 1;
  unsigned d = 2;
  long n_lo = 0;
  long n_hi = 0;
  unsigned workers = 0;  // 0: hardware concurrency
};

std::string op_name(const ScanSpec& spec);
// Largest sequence index the scan reads.
long required_extent(const ScanSpec& spec);
// Smallest admissible n_lo for the operator.
long minimum_index(const ScanSpec& spec);

struct ScanReport {
  std::string op;
  long n_lo = 0;
  long n_hi = 0;
  std::vector<long> violations;  // value < 0
  std::vector<long> zeros;       // value == 0, counted apart from violations
  long all_hold_from = 0;        // n_hi + 1 when the last index fails

  nlohmann::json to_json() const;
};

// Row sink: index, exact value, sign. Called in increasing n from the calling
// thread. For Jensen scans the value is the number of distinct real roots and
// the sign is +1 when hyperbolic, -1 otherwise.
using RowSink = std::function<void(long, const ExactInt&, int)>;

ScanReport scan(const Values& a, const ScanSpec& spec, const RowSink& sink = {});
ScanReport r_logconcave_scan(const Values& a, unsigned r, long n_lo, long n_hi, unsigned workers = 0);

enum class Corollary { Turan3, LogConcave2, Laguerre };

struct SymbolicReport {
  std::string name;
  unsigned m = 0;
  unsigned depth = 0;
  unsigned expected_order = 0;
  unsigned leading_order = 0;
  PiLaurent leading;
  PiLaurent subleading;
  PiLaurent expected_leading;
  std::optional<PiLaurent> expected_subleading;
  // q with subleading == q * expected_subleading, when the two are proportional.
  std::optional<ExactRational> subleading_scale;
  bool match = false;

  nlohmann::json to_json() const;
};

// Forms the corollary's combination of shifted normalized series, exactly.
SymbolicReport corollary_symbolic_check(Corollary which, unsigned depth, unsigned m = 2);

// L_m(p_24(n)) divided by (2 pi)^m (2m-1)!! e^{8 pi sqrt n} / (4 n^{3m/2} n^{27/2}).
std::vector<Ball> conjecture_scan(const Values& a, unsigned m, const std::vector<long>& points);

// turan3_value(n) n^{9/2} / (prefactor(n)^4 4 pi^3)
Ball turan3_normalized(const Values& a, long n);

}  // namespace p24::ineq
