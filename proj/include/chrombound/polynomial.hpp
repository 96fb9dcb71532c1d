#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace chrombound {

using BigInt = boost::multiprecision::cpp_int;

// Dense polynomial in x with exact integer coefficients, lowest power first.
// Trailing zeros are always trimmed, so the zero polynomial has no
// coefficients and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const BigInt& c);
  static IntPoly x();
  // x - a
  static IntPoly x_minus(long a);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  BigInt coefficient(int power) const;
  BigInt leading() const { return is_zero() ? BigInt{0} : coeffs_.back(); }

  BigInt eval_at(const BigInt& x) const;

  IntPoly& operator+=(const IntPoly& q);
  IntPoly& operator-=(const IntPoly& q);
  IntPoly& operator*=(const IntPoly& q);
  friend IntPoly operator+(IntPoly p, const IntPoly& q) { return p += q; }
  friend IntPoly operator-(IntPoly p, const IntPoly& q) { return p -= q; }
  friend IntPoly operator*(const IntPoly& p, const IntPoly& q);
  friend IntPoly operator-(IntPoly p);

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

IntPoly add(const IntPoly& p, const IntPoly& q);
IntPoly sub(const IntPoly& p, const IntPoly& q);
IntPoly mul(const IntPoly& p, const IntPoly& q);
bool equal(const IntPoly& p, const IntPoly& q);
IntPoly pow(const IntPoly& p, int e);

// p / q when q divides p exactly over the integers; DivisibilityError
// otherwise (including a zero divisor).
IntPoly exact_div(const IntPoly& p, const IntPoly& q);

// p(x - 1) and p(x + 1).
IntPoly shift_down(const IntPoly& p);
IntPoly shift_up(const IntPoly& p);

// x(x-1)...(x-k+1); the constant 1 for k = 0.
IntPoly falling_factorial(int k);
// (x-1)(x-2)...(x-k), i.e. falling_factorial(k) evaluated at x-1.
IntPoly shifted_falling_factorial(int k);

BigInt eval_at(const IntPoly& p, const BigInt& x);
std::strong_ordering compare_at(const IntPoly& p, const IntPoly& q, const BigInt& x);

// (x)_k (x-1)^m
struct FallingPowerForm {
  int k = 0;
  int m = 0;
  friend bool operator==(const FallingPowerForm&, const FallingPowerForm&) = default;
};

IntPoly falling_power(const FallingPowerForm& form);
// Matches p against (x)_k (x-1)^m. Since (x)_1 (x-1) = (x)_2, the largest
// admissible k is reported.
std::optional<FallingPowerForm> match_falling_power(const IntPoly& p);

// "[0, -1, 1]"
std::string coefficient_list(const IntPoly& p);
// "x^2 - x"
std::string to_string(const IntPoly& p);
// "(x)_4 (x-1)^2"
std::string to_string(const FallingPowerForm& form);

}  // namespace chrombound
