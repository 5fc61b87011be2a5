#include "p24/polynomial.hpp"

#include "p24/errors.hpp"

namespace p24::poly {
namespace {

// Sign changes in a sequence of nonzero-or-zero signs, zeros skipped.
long sign_changes(const std::vector<int>& s) {
  long changes = 0;
  int last = 0;
  for (int v : s) {
    if (v == 0) continue;
    if (last != 0 && v != last) ++changes;
    last = v;
  }
  return changes;
}

}  // namespace

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

long degree(const IntPoly& p) { return static_cast<long>(p.size()) - 1; }

IntPoly derivative(const IntPoly& p) {
  IntPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
  trim(d);
  return d;
}

ExactInt content(const IntPoly& p) {
  ExactInt g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  IntPoly q = p;
  trim(q);
  if (q.empty()) return q;
  ExactInt g = content(q);
  if (q.back() < 0) g = -g;
  for (auto& c : q) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return q;
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  IntPoly r = a;
  trim(r);
  IntPoly d = b;
  trim(d);
  if (d.empty()) throw DomainError("pseudo-remainder by zero polynomial");
  const long db = degree(d);
  long delta = degree(r) - db + 1;
  if (delta <= 0) return r;
  const ExactInt& lb = d.back();
  while (!r.empty() && degree(r) >= db) {
    const ExactInt lr = r.back();
    const long shift = degree(r) - db;
    for (auto& c : r) c *= lb;
    for (long i = 0; i <= db; ++i) r[static_cast<std::size_t>(i + shift)] -= lr * d[static_cast<std::size_t>(i)];
    trim(r);
    --delta;
  }
  for (; delta > 0; --delta) {
    for (auto& c : r) c *= lb;
  }
  return r;
}

IntPoly gcd(IntPoly a, IntPoly b) {
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (degree(a) < degree(b)) std::swap(a, b);
  while (!b.empty()) {
    IntPoly r = primitive_part(pseudo_remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return primitive_part(a);
}

IntPoly exact_quotient(const IntPoly& a, const IntPoly& b) {
  IntPoly r = a;
  trim(r);
  IntPoly d = b;
  trim(d);
  if (d.empty()) throw DomainError("division by zero polynomial");
  if (r.empty()) return r;
  const long db = degree(d);
  if (degree(r) < db) throw DomainError("polynomial division is not exact");
  IntPoly q(static_cast<std::size_t>(degree(r) - db + 1));
  while (!r.empty() && degree(r) >= db) {
    const long shift = degree(r) - db;
    if (!mpz_divisible_p(r.back().get_mpz_t(), d.back().get_mpz_t())) {
      throw DomainError("polynomial division is not exact");
    }
    ExactInt c;
    mpz_divexact(c.get_mpz_t(), r.back().get_mpz_t(), d.back().get_mpz_t());
    q[static_cast<std::size_t>(shift)] = c;
    for (long i = 0; i <= db; ++i) r[static_cast<std::size_t>(i + shift)] -= c * d[static_cast<std::size_t>(i)];
    trim(r);
  }
  if (!r.empty()) throw DomainError("polynomial division is not exact");
  trim(q);
  return q;
}

IntPoly square_free_part(const IntPoly& p) {
  IntPoly q = primitive_part(p);
  if (degree(q) < 1) return q;
  return primitive_part(exact_quotient(q, gcd(q, derivative(q))));
}

long count_real_roots(const IntPoly& p) {
  IntPoly q = square_free_part(p);
  if (q.empty()) throw DomainError("zero polynomial has no finite root count");
  if (degree(q) < 1) return 0;
  // Sturm chain with positive rescalings of -rem(q_{i-1}, q_i).
  std::vector<IntPoly> chain{q, primitive_part(derivative(q))};
  while (degree(chain.back()) > 0) {
    const IntPoly& a = chain[chain.size() - 2];
    const IntPoly& b = chain.back();
    IntPoly r = pseudo_remainder(a, b);
    if (r.empty()) break;
    // prem = lc(b)^delta * rem; flip so the result is a positive multiple of -rem.
    const long delta = degree(a) - degree(b) + 1;
    const bool flips = sgn(b.back()) < 0 && delta % 2 != 0;
    IntPoly next = primitive_part(r);
    // primitive_part normalizes the leading sign; restore the true sign.
    const int true_sign = sgn(r.back()) * (flips ? -1 : 1) * -1;
    if (sgn(next.back()) != true_sign) {
      for (auto& c : next) c = -c;
    }
    chain.push_back(std::move(next));
  }
  std::vector<int> at_pos, at_neg;
  for (const auto& f : chain) {
    const int l = sgn(f.back());
    at_pos.push_back(l);
    at_neg.push_back(degree(f) % 2 == 0 ? l : -l);
  }
  return sign_changes(at_neg) - sign_changes(at_pos);
}

bool is_hyperbolic(const IntPoly& p) {
  IntPoly q = p;
  trim(q);
  if (q.empty()) throw DomainError("zero polynomial");
  const IntPoly sf = square_free_part(q);
  return count_real_roots(q) == degree(sf);
}

}  // namespace p24::poly
