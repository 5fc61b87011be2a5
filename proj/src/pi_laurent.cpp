#include "p24/pi_laurent.hpp"

#include <sstream>
#include <vector>

#include "p24/errors.hpp"

namespace p24 {

PiLaurent::PiLaurent(const ExactRational& constant) { add_term(0, constant); }

PiLaurent::PiLaurent(long constant) { add_term(0, ExactRational(constant)); }

PiLaurent PiLaurent::monomial(int pi_power, const ExactRational& coeff) {
  PiLaurent p;
  p.add_term(pi_power, coeff);
  return p;
}

void PiLaurent::add_term(int power, const ExactRational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(power, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ExactRational PiLaurent::coeff(int pi_power) const {
  auto it = terms_.find(pi_power);
  return it == terms_.end() ? ExactRational(0) : it->second;
}

int PiLaurent::min_power() const { return terms_.empty() ? 0 : terms_.begin()->first; }

int PiLaurent::max_power() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

PiLaurent& PiLaurent::operator+=(const PiLaurent& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k, c);
  return *this;
}

PiLaurent& PiLaurent::operator-=(const PiLaurent& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
  return *this;
}

PiLaurent operator*(const PiLaurent& a, const PiLaurent& b) {
  PiLaurent out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) out.add_term(ka + kb, ca * cb);
  }
  return out;
}

PiLaurent& PiLaurent::operator*=(const PiLaurent& rhs) {
  *this = *this * rhs;
  return *this;
}

PiLaurent& PiLaurent::operator*=(const ExactRational& rhs) {
  if (rhs == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= rhs;
  return *this;
}

PiLaurent PiLaurent::operator-() const {
  PiLaurent p(*this);
  for (auto& [k, c] : p.terms_) c = -c;
  return p;
}

PiLaurent PiLaurent::shifted(int k) const {
  PiLaurent p;
  for (const auto& [j, c] : terms_) p.terms_.emplace(j + k, c);
  return p;
}

Ball PiLaurent::evaluate(const Ball& pi) const {
  const mpfr_prec_t prec = pi.precision();
  if (terms_.empty()) return Ball(prec);
  const int lo = min_power();
  const int degree = max_power() - lo;
  // Q(pi) = sum c_j pi^{j - lo} = E(pi^2) + pi O(pi^2)
  std::vector<const ExactRational*> dense(static_cast<std::size_t>(degree) + 1, nullptr);
  for (const auto& [j, c] : terms_) dense[static_cast<std::size_t>(j - lo)] = &c;
  const Ball pi2 = pi * pi;
  auto horner = [&](int parity) {
    Ball acc(prec);
    int top = degree;
    if ((top & 1) != parity) --top;
    for (int d = top; d >= 0; d -= 2) {
      acc *= pi2;
      if (const ExactRational* c = dense[static_cast<std::size_t>(d)]) acc += Ball::from(*c, prec);
    }
    return acc;
  };
  Ball q = horner(0);
  if (degree >= 1) q += pi * horner(1);
  if (lo != 0) q *= pow(pi, static_cast<long>(lo));
  return q;
}

Ball PiLaurent::evaluate(mpfr_prec_t precision) const { return evaluate(pi_ball(precision)); }

std::string PiLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [j, c] = *it;
    ExactRational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (j == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "pi";
    if (j != 1) os << "^" << j;
  }
  return os.str();
}

nlohmann::json PiLaurent::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [j, c] : terms_) {
    terms.push_back({{"pi_pow", j}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  }
  return {{"terms", terms}};
}

PiLaurent PiLaurent::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array()) {
    throw DomainError("PiLaurent JSON must be an object with a \"terms\" array");
  }
  PiLaurent p;
  for (const auto& t : j.at("terms")) {
    ExactInt num(t.at("num").get<std::string>(), 10);
    ExactInt den(t.at("den").get<std::string>(), 10);
    if (den <= 0) throw DomainError("PiLaurent denominator must be positive");
    p.add_term(t.at("pi_pow").get<int>(), make_rational(num, den));
  }
  return p;
}

}  // namespace p24
