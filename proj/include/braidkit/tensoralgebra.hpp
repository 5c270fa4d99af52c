#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "braidkit/braiding.hpp"
#include "braidkit/cyclotomic.hpp"

namespace braidkit {

// A word in the letters x_1..x_theta, stored as 0-based indices.  The empty
// word is the unit of T(V).  Words compare lexicographically with
// x_1 < ... < x_theta and a proper prefix smaller than the full word.
using Word = std::vector<int>;

using BraidingPtr = std::shared_ptr<const BraidingMatrix>;

std::vector<long long> multidegree(const Word& w, int rank);
std::string word_to_string(const Word& w);  // "x1.x1.x2", "1" for the unit

// chi(deg u, deg v) = prod_{a in u, b in v} q_ab.
RootOfUnity braid_factor(const BraidingMatrix& b, const Word& u, const Word& v);

// c(u (x) v) = chi(deg u, deg v) (v (x) u) on basis words.
std::pair<RootOfUnity, std::pair<Word, Word>> braid_swap(const BraidingMatrix& b,
                                                         const Word& u, const Word& v);

// Finite linear combination of words with cyclotomic coefficients, tied to a
// braiding context.  Operations require matching contexts.
class NCPoly {
 public:
  using Terms = std::map<Word, CycNumber>;

  explicit NCPoly(BraidingPtr ctx);
  static NCPoly unit(BraidingPtr ctx);
  static NCPoly generator(BraidingPtr ctx, int i);
  static NCPoly monomial(BraidingPtr ctx, Word w, CycNumber coeff = CycNumber(1));

  const BraidingPtr& context() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int rank() const { return ctx_->rank(); }

  void add_term(const Word& w, const CycNumber& c);

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const NCPoly& o);  // concatenation product of T(V)
  NCPoly operator-() const;

  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(NCPoly a, const NCPoly& b) { return a *= b; }
  friend NCPoly operator*(const CycNumber& c, NCPoly p);
  friend NCPoly operator*(const RootOfUnity& c, NCPoly p);
  friend bool operator==(const NCPoly& a, const NCPoly& b);

  // total degree when homogeneous; -1 for zero; throws if mixed lengths
  long long homogeneous_degree() const;

  std::string to_string() const;

 private:
  BraidingPtr ctx_;
  Terms terms_;
};

void require_same_context(const BraidingPtr& a, const BraidingPtr& b);

// [x, y]_c = xy - chi(deg x, deg y) yx, extended bilinearly over terms.
NCPoly braided_commutator(const NCPoly& x, const NCPoly& y);

// n-fold iterate of z -> [x_i, z]_c.
NCPoly ad_c_power(int i, long long n, const NCPoly& y);

bool is_lyndon(const Word& u);

// Shirshov decomposition u = vw of a Lyndon word of length >= 2: both
// factors Lyndon, w lexicographically smallest among such splits.
std::pair<Word, Word> shirshov(const Word& u);

// [u]_c for Lyndon u: x_i on letters, [[v]_c, [w]_c]_c along the Shirshov
// decomposition.
NCPoly hyperletter(BraidingPtr ctx, const Word& u);

// Element of T(V) (x) T(V).
class TensorElement {
 public:
  using Terms = std::map<std::pair<Word, Word>, CycNumber>;

  explicit TensorElement(BraidingPtr ctx);
  static TensorElement simple(BraidingPtr ctx, Word left, Word right,
                              CycNumber coeff = CycNumber(1));

  const BraidingPtr& context() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Word& l, const Word& r, const CycNumber& c);

  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  // braided product: (a (x) b)(c (x) d) = chi(deg b, deg c) (ac (x) bd)
  TensorElement& operator*=(const TensorElement& o);

  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(TensorElement a, const TensorElement& b) { return a *= b; }
  friend bool operator==(const TensorElement& a, const TensorElement& b);

 private:
  BraidingPtr ctx_;
  Terms terms_;
};

// Graded braided coproduct of T(V): each x_i is primitive and Delta is
// multiplicative for the braided product on T(V) (x) T(V).
TensorElement coproduct(const NCPoly& p);

// All words with the given letter multiplicities, sorted.
std::vector<Word> words_of_multidegree(const std::vector<long long>& deg);
std::vector<std::vector<long long>> compositions(long long n, int parts);

// Row echelon accumulator over dense cyclotomic vectors; used for rank and
// span-membership computations.
class CycEchelon {
 public:
  bool insert(std::vector<CycNumber> v);  // true if independent
  bool in_span(std::vector<CycNumber> v) const;
  long long rank() const { return static_cast<long long>(rows_.size()); }

 private:
  void reduce(std::vector<CycNumber>& v) const;
  std::vector<std::vector<CycNumber>> rows_;  // monic pivots, increasing pivot index
  std::vector<size_t> pivots_;
};

// Kernel of the linear map whose j-th column is cols[j] (all columns the
// same length); basis vectors have length cols.size().
std::vector<std::vector<CycNumber>> kernel_of_columns(
    const std::vector<std::vector<CycNumber>>& cols);

// Degreewise Nichols-algebra engine for a fixed braiding.  The degree-n
// component of the Nichols ideal I(V) is the kernel of the iterated
// (1, n-1)-deconcatenation map T^n -> V^{(x) n}; dimensions come from its
// rank, block by multidegree.
class NicholsCalculator {
 public:
  explicit NicholsCalculator(BraidingPtr ctx);

  const BraidingPtr& context() const { return ctx_; }

  // symmetrizer image of a word in the word basis of V^{(x) n}
  const std::map<Word, CycNumber>& omega(const Word& w);

  // membership of a homogeneous element in I(V); throws on mixed lengths
  bool in_ideal(const NCPoly& p);

  long long nichols_dim(const std::vector<long long>& deg);  // dim B(V)_deg
  long long nichols_dim_total(long long n);                  // dim B(V)_n
  long long ideal_dim_total(long long n) { return pow_theta(n) - nichols_dim_total(n); }

  std::vector<NCPoly> ideal_basis(long long n);
  std::vector<long long> hilbert(long long max_degree);

  long long pow_theta(long long n) const;

 private:
  BraidingPtr ctx_;
  std::map<Word, std::map<Word, CycNumber>> omega_cache_;
  std::map<std::vector<long long>, long long> dim_cache_;
};

// One-shot convenience wrappers.
std::vector<NCPoly> nichols_ideal_basis(BraidingPtr ctx, long long n);
std::vector<long long> hilbert_series(BraidingPtr ctx, long long max_degree);
bool in_nichols_ideal(const NCPoly& p);

}  // namespace braidkit
