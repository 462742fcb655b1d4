#include "borbit/laurent.hpp"

#include <sstream>

namespace borbit {

Laurent Laurent::monomial(const Rat& coeff, int exp) {
  Laurent p;
  if (coeff != 0) p.terms_[exp] = coeff;
  return p;
}

bool Laurent::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rat Laurent::constant_term() const {
  auto it = terms_.find(0);
  return it == terms_.end() ? Rat(0) : it->second;
}

int Laurent::min_exponent() const {
  if (terms_.empty()) throw std::domain_error("min_exponent of zero polynomial");
  return terms_.begin()->first;
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      int e = ea + eb;
      auto it = r.terms_.find(e);
      if (it == r.terms_.end()) {
        Rat c = ca * cb;
        if (c != 0) r.terms_[e] = c;
      } else {
        it->second += ca * cb;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  return r;
}

Laurent& Laurent::operator*=(const Laurent& o) { return *this = *this * o; }

Laurent Laurent::inverse() const {
  if (!is_monomial()) throw std::domain_error("inverse requires a monomial");
  const auto& [e, c] = *terms_.begin();
  return monomial(Rat(1) / c, -e);
}

Rat Laurent::limit_at_zero() const {
  if (!terms_.empty() && min_exponent() < 0) throw NegativeExponentError(min_exponent());
  return constant_term();
}

Rat Laurent::eval_square_at(const Rat& v) const {
  if (v == 0) throw std::domain_error("square substitution at zero");
  Rat acc(0);
  for (const auto& [e, c] : terms_) {
    if (e % 2 != 0) throw std::domain_error("odd exponent in square substitution");
    acc += c * rat_pow(v, e / 2);
  }
  return acc;
}

std::string Laurent::str(char var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (e == 0) {
      os << rat_str(a);
    } else {
      if (a != 1) os << rat_str(a) << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace borbit
