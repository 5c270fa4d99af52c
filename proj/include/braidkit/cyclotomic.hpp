#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace braidkit {

long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);
long long euler_phi(long long n);

// The L-th cyclotomic polynomial, monic, coefficients in ascending degree.
// Computed once per conductor by exact division of x^L - 1 and cached.
const std::vector<mpq_class>& cyclotomic_polynomial(long long L);

// A root of unity e^{2 pi i k/N}, stored as the reduced exponent k/N in Q/Z
// with 0 <= k < N.  The multiplicative order is exactly N; 1 is 0/1.
class RootOfUnity {
 public:
  RootOfUnity() : num_(0), den_(1) {}
  RootOfUnity(long long num, long long den);

  long long exponent_num() const { return num_; }
  long long exponent_den() const { return den_; }
  long long order() const { return den_; }
  bool is_one() const { return num_ == 0; }

  RootOfUnity inverse() const;
  RootOfUnity pow(long long e) const;

  friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);
  bool operator==(const RootOfUnity& o) const = default;
  bool operator<(const RootOfUnity& o) const;

  std::string to_fraction() const;           // "k/N"
  std::string pretty() const;                // "1", "-1", "z5", "z5^2", ...
  static RootOfUnity parse(const std::string& s);
  static RootOfUnity primitive(long long N) { return RootOfUnity(1, N); }
  static RootOfUnity one() { return RootOfUnity(); }
  static RootOfUnity minus_one() { return RootOfUnity(1, 2); }

 private:
  long long num_, den_;
};

bool is_primitive_nth(const RootOfUnity& a, long long N);

// An element of Q(zeta_L): phi(L) rational coordinates in the power basis
// 1, zeta, ..., zeta^{phi(L)-1}, reduced modulo the L-th cyclotomic
// polynomial.  Mixed-conductor operands are lifted to the lcm conductor.
class CycNumber {
 public:
  CycNumber() : conductor_(1), coeffs_(1, mpq_class(0)) {}
  explicit CycNumber(long long n);
  explicit CycNumber(const mpq_class& r);
  static CycNumber embed(const RootOfUnity& a);

  long long conductor() const { return conductor_; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  mpq_class rational_value() const;  // valid when is_rational()

  CycNumber promoted(long long M) const;  // conductor() must divide M
  CycNumber inverse() const;              // throws std::domain_error on zero
  CycNumber pow(long long e) const;

  CycNumber& operator+=(const CycNumber& o);
  CycNumber& operator-=(const CycNumber& o);
  CycNumber& operator*=(const CycNumber& o);
  CycNumber& operator/=(const CycNumber& o);
  CycNumber operator-() const;

  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
  friend CycNumber operator*(CycNumber a, const CycNumber& b) { return a *= b; }
  friend CycNumber operator/(CycNumber a, const CycNumber& b) { return a /= b; }
  friend bool operator==(const CycNumber& a, const CycNumber& b);

  std::string to_string() const;  // {L: 3, c: ["1", "-1/2"]}

 private:
  CycNumber(long long conductor, std::vector<mpq_class> coeffs)
      : conductor_(conductor), coeffs_(std::move(coeffs)) {}

  long long conductor_;
  std::vector<mpq_class> coeffs_;
};

inline CycNumber operator*(const RootOfUnity& a, CycNumber b) {
  return b *= CycNumber::embed(a);
}

// (k)_q = 1 + q + ... + q^{k-1}; (0)_q = 0.
CycNumber q_number(long long k, const RootOfUnity& q);

// (n)_q! = (1)_q (2)_q ... (n)_q.
CycNumber q_factorial(long long n, const RootOfUnity& q);

// Gaussian binomial (n j)_q = (n)_q! / ((j)_q! (n-j)_q!).  Requires
// 0 <= j <= n and ord(q) > n when q != 1; a vanishing q-number in the
// denominator raises std::domain_error naming the offending G_k.
CycNumber q_binomial(long long n, long long j, const RootOfUnity& q);

}  // namespace braidkit
