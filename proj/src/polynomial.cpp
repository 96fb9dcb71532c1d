#include "chrombound/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "chrombound/errors.hpp"

namespace chrombound {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::x() { return IntPoly{0, 1}; }

IntPoly IntPoly::x_minus(long a) { return IntPoly{-a, 1}; }

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::coefficient(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[power];
}

BigInt IntPoly::eval_at(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& q) {
  if (q.coeffs_.size() > coeffs_.size()) coeffs_.resize(q.coeffs_.size());
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] += q.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& q) {
  if (q.coeffs_.size() > coeffs_.size()) coeffs_.resize(q.coeffs_.size());
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] -= q.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& q) {
  *this = *this * q;
  return *this;
}

IntPoly operator*(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<BigInt> out(p.coeffs_.size() + q.coeffs_.size() - 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    if (p.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) out[i + j] += p.coeffs_[i] * q.coeffs_[j];
  }
  return IntPoly(std::move(out));
}

IntPoly operator-(IntPoly p) {
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

IntPoly add(const IntPoly& p, const IntPoly& q) { return p + q; }
IntPoly sub(const IntPoly& p, const IntPoly& q) { return p - q; }
IntPoly mul(const IntPoly& p, const IntPoly& q) { return p * q; }
bool equal(const IntPoly& p, const IntPoly& q) { return p == q; }

IntPoly pow(const IntPoly& p, int e) {
  if (e < 0) throw InvalidArgument("negative polynomial exponent");
  IntPoly result = IntPoly::constant(1);
  IntPoly base = p;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

IntPoly exact_div(const IntPoly& p, const IntPoly& q) {
  if (q.is_zero()) throw DivisibilityError("division by the zero polynomial");
  if (p.is_zero()) return {};
  if (p.degree() < q.degree()) throw DivisibilityError("divisor has larger degree");
  std::vector<BigInt> rem = p.coefficients();
  const auto& d = q.coefficients();
  const BigInt& lead = d.back();
  const int shift_max = p.degree() - q.degree();
  std::vector<BigInt> quot(static_cast<std::size_t>(shift_max + 1));
  for (int s = shift_max; s >= 0; --s) {
    BigInt& top = rem[static_cast<std::size_t>(s + q.degree())];
    if (top == 0) continue;
    if (top % lead != 0) throw DivisibilityError("non-integral quotient coefficient");
    const BigInt c = top / lead;
    quot[static_cast<std::size_t>(s)] = c;
    for (std::size_t j = 0; j < d.size(); ++j) rem[s + j] -= c * d[j];
  }
  if (std::any_of(rem.begin(), rem.end(), [](const BigInt& c) { return c != 0; })) {
    throw DivisibilityError("nonzero remainder");
  }
  return IntPoly(std::move(quot));
}

namespace {

// p(x + a) by Horner's rule.
IntPoly substitute_shift(const IntPoly& p, long a) {
  const IntPoly step{a, 1};
  IntPoly acc;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * step + IntPoly::constant(*it);
  return acc;
}

}  // namespace

IntPoly shift_down(const IntPoly& p) { return substitute_shift(p, -1); }
IntPoly shift_up(const IntPoly& p) { return substitute_shift(p, 1); }

IntPoly falling_factorial(int k) {
  if (k < 0) throw InvalidArgument("negative falling factorial order");
  IntPoly out = IntPoly::constant(1);
  for (int i = 0; i < k; ++i) out *= IntPoly::x_minus(i);
  return out;
}

IntPoly shifted_falling_factorial(int k) {
  if (k < 0) throw InvalidArgument("negative falling factorial order");
  IntPoly out = IntPoly::constant(1);
  for (int i = 1; i <= k; ++i) out *= IntPoly::x_minus(i);
  return out;
}

BigInt eval_at(const IntPoly& p, const BigInt& x) { return p.eval_at(x); }

std::strong_ordering compare_at(const IntPoly& p, const IntPoly& q, const BigInt& x) {
  const BigInt a = p.eval_at(x);
  const BigInt b = q.eval_at(x);
  if (a < b) return std::strong_ordering::less;
  if (a > b) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

IntPoly falling_power(const FallingPowerForm& form) {
  return falling_factorial(form.k) * pow(IntPoly::x_minus(1), form.m);
}

std::optional<FallingPowerForm> match_falling_power(const IntPoly& p) {
  if (p.is_zero() || p.leading() != 1) return std::nullopt;
  for (int k = p.degree(); k >= 0; --k) {
    const FallingPowerForm form{k, p.degree() - k};
    if (falling_power(form) == p) return form;
  }
  return std::nullopt;
}

std::string coefficient_list(const IntPoly& p) {
  std::ostringstream out;
  out << '[';
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out << ", ";
    out << c[i];
  }
  out << ']';
  return out.str();
}

std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    BigInt c = p.coefficient(i);
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (c != 1 || i == 0) out << c;
    if (i >= 1) out << 'x';
    if (i >= 2) out << '^' << i;
  }
  return out.str();
}

std::string to_string(const FallingPowerForm& form) {
  std::ostringstream out;
  out << "(x)_" << form.k;
  if (form.m == 1) out << " (x-1)";
  if (form.m > 1) out << " (x-1)^" << form.m;
  return out.str();
}

}  // namespace chrombound
