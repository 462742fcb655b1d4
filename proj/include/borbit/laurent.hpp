#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "borbit/rational.hpp"

namespace borbit {

// Thrown when a limit at 0 is requested for a Laurent polynomial (or a matrix
// of them) that still carries negative exponents.  row/col are signed matrix
// indices when known, 0 otherwise.
struct NegativeExponentError : std::runtime_error {
  int row = 0, col = 0, min_exponent = 0;
  NegativeExponentError(int r, int c, int e)
      : std::runtime_error("negative exponent " + std::to_string(e) +
                           " survives at entry (" + std::to_string(r) + "," +
                           std::to_string(c) + ")"),
        row(r), col(c), min_exponent(e) {}
  explicit NegativeExponentError(int e)
      : std::runtime_error("negative exponent " + std::to_string(e) + " survives"),
        min_exponent(e) {}
};

// Laurent polynomial in one variable over Rat.  Terms are kept in a map
// exponent -> coefficient with no zero coefficients, so equality is
// representation equality.
class Laurent {
 public:
  Laurent() = default;
  explicit Laurent(int c) { if (c != 0) terms_[0] = Rat(c); }
  explicit Laurent(const Rat& c) { if (c != 0) terms_[0] = c; }
  static Laurent monomial(const Rat& coeff, int exp);
  static Laurent variable() { return monomial(Rat(1), 1); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  // Coefficient of the exponent-0 term (0 if absent).
  Rat constant_term() const;
  int min_exponent() const;  // pre: !is_zero()

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  // Inverse of a monomial q*x^k, i.e. (1/q)*x^-k.  Anything else throws.
  Laurent inverse() const;
  // Value at 0: the constant term, provided no negative exponent survives.
  Rat limit_at_zero() const;
  // Substitute x^2 -> v (v != 0).  Requires every exponent to be even; the
  // result is then an honest rational.
  Rat eval_square_at(const Rat& v) const;

  const std::map<int, Rat>& terms() const { return terms_; }
  std::string str(char var = 's') const;

 private:
  std::map<int, Rat> terms_;
};

inline Laurent ring_inverse(const Laurent& v) { return v.inverse(); }

}  // namespace borbit
