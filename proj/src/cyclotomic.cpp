#include "braidkit/cyclotomic.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace braidkit {

long long gcd_ll(long long a, long long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long lcm_ll(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd_ll(a, b) * b;
}

long long euler_phi(long long n) {
  long long result = n;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

// Exact long division: num / den where den is monic.  Remainder must be zero.
std::vector<mpq_class> divide_exact(std::vector<mpq_class> num,
                                    const std::vector<mpq_class>& den) {
  long long dn = static_cast<long long>(num.size()) - 1;
  long long dd = static_cast<long long>(den.size()) - 1;
  std::vector<mpq_class> quot(dn - dd + 1, mpq_class(0));
  for (long long i = dn; i >= dd; --i) {
    mpq_class c = num[i];
    if (c == 0) continue;
    quot[i - dd] = c;
    for (long long j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  for (const auto& c : num)
    if (c != 0) throw std::logic_error("divide_exact: nonzero remainder");
  return quot;
}

}  // namespace

const std::vector<mpq_class>& cyclotomic_polynomial(long long L) {
  static std::mutex mu;
  static std::map<long long, std::vector<mpq_class>> cache;
  std::lock_guard<std::mutex> lock(mu);

  auto it = cache.find(L);
  if (it != cache.end()) return it->second;

  // phi_L = (x^L - 1) / prod_{d | L, d < L} phi_d, computed in increasing
  // order of divisors so that every phi_d we need is already cached.
  std::function<const std::vector<mpq_class>&(long long)> get =
      [&](long long n) -> const std::vector<mpq_class>& {
    auto found = cache.find(n);
    if (found != cache.end()) return found->second;
    std::vector<mpq_class> num(n + 1, mpq_class(0));
    num[0] = -1;
    num[n] = 1;
    for (long long d = 1; d < n; ++d)
      if (n % d == 0) num = divide_exact(std::move(num), get(d));
    return cache.emplace(n, std::move(num)).first->second;
  };
  return get(L);
}

RootOfUnity::RootOfUnity(long long num, long long den) {
  if (den <= 0) throw std::invalid_argument("RootOfUnity: denominator must be positive");
  num %= den;
  if (num < 0) num += den;
  long long g = gcd_ll(num, den);
  num_ = num / g;
  den_ = den / g;
}

RootOfUnity RootOfUnity::inverse() const { return RootOfUnity(den_ - num_, den_); }

RootOfUnity RootOfUnity::pow(long long e) const {
  long long r = e % den_;
  if (r < 0) r += den_;
  return RootOfUnity(num_ * r, den_);
}

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
  long long den = a.den_ * b.den_;
  long long num = a.num_ * b.den_ + b.num_ * a.den_;
  return RootOfUnity(num, den);
}

bool RootOfUnity::operator<(const RootOfUnity& o) const {
  if (den_ != o.den_) return den_ < o.den_;
  return num_ < o.num_;
}

std::string RootOfUnity::to_fraction() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string RootOfUnity::pretty() const {
  if (den_ == 1) return "1";
  if (den_ == 2) return "-1";
  std::string s = "z" + std::to_string(den_);
  if (num_ != 1) s += "^" + std::to_string(num_);
  return s;
}

RootOfUnity RootOfUnity::parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos)
    throw std::invalid_argument("root of unity: expected \"k/N\", got \"" + s + "\"");
  try {
    size_t pos1 = 0, pos2 = 0;
    long long num = std::stoll(s.substr(0, slash), &pos1);
    long long den = std::stoll(s.substr(slash + 1), &pos2);
    if (pos1 != slash || pos2 != s.size() - slash - 1)
      throw std::invalid_argument("trailing characters");
    return RootOfUnity(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("root of unity: cannot parse \"" + s + "\"");
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("root of unity: out of range \"" + s + "\"");
  }
}

bool is_primitive_nth(const RootOfUnity& a, long long N) {
  if (N < 1) throw std::invalid_argument("is_primitive_nth: N must be positive");
  return a.order() == N;
}

namespace {

// Reduce a raw coefficient vector modulo phi_L in place, then truncate to
// degree < phi(L).
std::vector<mpq_class> reduce_mod_cyclotomic(std::vector<mpq_class> v, long long L) {
  const auto& phi = cyclotomic_polynomial(L);
  long long deg = static_cast<long long>(phi.size()) - 1;
  if (static_cast<long long>(v.size()) < deg) v.resize(deg, mpq_class(0));
  for (long long i = static_cast<long long>(v.size()) - 1; i >= deg; --i) {
    mpq_class c = v[i];
    if (c == 0) continue;
    v[i] = 0;
    for (long long j = 0; j < deg; ++j) v[i - deg + j] -= c * phi[j];
  }
  v.resize(deg);
  return v;
}

}  // namespace

CycNumber::CycNumber(long long n)
    : conductor_(1), coeffs_(1, mpq_class(static_cast<long>(n))) {}

CycNumber::CycNumber(const mpq_class& r) : conductor_(1), coeffs_(1, r) {}

CycNumber CycNumber::embed(const RootOfUnity& a) {
  long long L = a.order();
  std::vector<mpq_class> raw(a.exponent_num() + 1, mpq_class(0));
  raw[a.exponent_num()] = 1;
  return CycNumber(L, reduce_mod_cyclotomic(std::move(raw), L));
}

bool CycNumber::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycNumber::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

mpq_class CycNumber::rational_value() const {
  if (!is_rational()) throw std::domain_error("CycNumber: not rational");
  return coeffs_[0];
}

CycNumber CycNumber::promoted(long long M) const {
  if (M == conductor_) return *this;
  if (M % conductor_ != 0)
    throw std::invalid_argument("CycNumber::promoted: conductor must divide target");
  long long step = M / conductor_;
  std::vector<mpq_class> raw(coeffs_.size() * step, mpq_class(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) raw[i * step] = coeffs_[i];
  return CycNumber(M, reduce_mod_cyclotomic(std::move(raw), M));
}

CycNumber& CycNumber::operator+=(const CycNumber& o) {
  long long M = lcm_ll(conductor_, o.conductor_);
  CycNumber a = promoted(M);
  CycNumber b = o.promoted(M);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
  *this = std::move(a);
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& o) {
  long long M = lcm_ll(conductor_, o.conductor_);
  CycNumber a = promoted(M);
  CycNumber b = o.promoted(M);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] -= b.coeffs_[i];
  *this = std::move(a);
  return *this;
}

CycNumber& CycNumber::operator*=(const CycNumber& o) {
  long long M = lcm_ll(conductor_, o.conductor_);
  CycNumber a = promoted(M);
  CycNumber b = o.promoted(M);
  std::vector<mpq_class> raw(a.coeffs_.size() + b.coeffs_.size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  *this = CycNumber(M, reduce_mod_cyclotomic(std::move(raw), M));
  return *this;
}

CycNumber CycNumber::inverse() const {
  if (is_zero()) throw std::domain_error("CycNumber: division by zero");
  // Extended Euclid in Q[x] against phi_L; phi_L is irreducible over Q so
  // the gcd with any nonzero residue is a nonzero constant.
  const auto& phi = cyclotomic_polynomial(conductor_);
  std::vector<mpq_class> r0(phi), r1(coeffs_);
  while (!r1.empty() && r1.back() == 0) r1.pop_back();
  std::vector<mpq_class> s0{mpq_class(0)}, s1{mpq_class(1)};
  while (true) {
    // r0 = q r1 + r2
    std::vector<mpq_class> r2(r0);
    std::vector<mpq_class> q(std::max<size_t>(r0.size(), 1), mpq_class(0));
    long long d1 = static_cast<long long>(r1.size()) - 1;
    mpq_class lead = r1.back();
    for (long long i = static_cast<long long>(r2.size()) - 1; i >= d1; --i) {
      if (r2[i] == 0) continue;
      mpq_class c = r2[i] / lead;
      q[i - d1] = c;
      for (long long j = 0; j <= d1; ++j) r2[i - d1 + j] -= c * r1[j];
    }
    while (!r2.empty() && r2.back() == 0) r2.pop_back();
    // s2 = s0 - q s1
    std::vector<mpq_class> s2(std::max(s0.size(), q.size() + s1.size()), mpq_class(0));
    for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
    }
    while (!s2.empty() && s2.back() == 0) s2.pop_back();
    if (r2.empty()) {
      // r1 is the gcd, a nonzero constant times a unit: s1 * this == r1 mod phi.
      if (r1.size() != 1)
        throw std::logic_error("CycNumber::inverse: nonconstant gcd with cyclotomic polynomial");
      std::vector<mpq_class> inv(s1);
      for (auto& c : inv) c /= r1[0];
      return CycNumber(conductor_, reduce_mod_cyclotomic(std::move(inv), conductor_));
    }
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
}

CycNumber& CycNumber::operator/=(const CycNumber& o) { return *this *= o.inverse(); }

CycNumber CycNumber::operator-() const {
  CycNumber r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycNumber CycNumber::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  CycNumber base(*this), acc(1);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

bool operator==(const CycNumber& a, const CycNumber& b) {
  long long M = lcm_ll(a.conductor_, b.conductor_);
  CycNumber pa = a.promoted(M);
  CycNumber pb = b.promoted(M);
  return pa.coeffs_ == pb.coeffs_;
}

std::string CycNumber::to_string() const {
  std::ostringstream os;
  os << "{L: " << conductor_ << ", c: [";
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ", ";
    os << "\"" << coeffs_[i].get_str() << "\"";
  }
  os << "]}";
  return os.str();
}

CycNumber q_number(long long k, const RootOfUnity& q) {
  if (k < 0) throw std::invalid_argument("q_number: k must be nonnegative");
  CycNumber acc(0);
  for (long long j = 0; j < k; ++j) acc += CycNumber::embed(q.pow(j));
  return acc;
}

CycNumber q_factorial(long long n, const RootOfUnity& q) {
  if (n < 0) throw std::invalid_argument("q_factorial: n must be nonnegative");
  CycNumber acc(1);
  for (long long k = 1; k <= n; ++k) acc *= q_number(k, q);
  return acc;
}

CycNumber q_binomial(long long n, long long j, const RootOfUnity& q) {
  if (j < 0 || j > n) throw std::invalid_argument("q_binomial: need 0 <= j <= n");
  if (q.order() >= 2 && q.order() <= n)
    throw std::domain_error("q_binomial: q lies in G_" + std::to_string(q.order()) +
                            " with " + std::to_string(q.order()) + " <= n, so (" +
                            std::to_string(q.order()) + ")_q = 0 divides the denominator");
  return q_factorial(n, q) / (q_factorial(j, q) * q_factorial(n - j, q));
}

}  // namespace braidkit
