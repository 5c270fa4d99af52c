#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidkit/braiding.hpp"

namespace braidkit {

// Finite abelian group Z/n_1 x ... x Z/n_k with componentwise arithmetic.
struct AbelianGroup {
  std::vector<long long> factors;

  using Element = std::vector<long long>;

  explicit AbelianGroup(std::vector<long long> orders);
  int num_factors() const { return static_cast<int>(factors.size()); }
  Element identity() const { return Element(factors.size(), 0); }
  Element normalized(Element e) const;
  Element mul(const Element& a, const Element& b) const;
  Element power(const Element& a, long long n) const;
};

// Character of an abelian group, given by its values on the generators; the
// j-th value must have order dividing the j-th factor order.
struct Character {
  std::vector<RootOfUnity> values;

  RootOfUnity eval(const AbelianGroup& g, const AbelianGroup::Element& e) const;
  bool is_trivial() const;
  Character power(long long n) const;
  Character times(const Character& o) const;
  bool operator==(const Character& o) const = default;
};

// Yetter-Drinfeld datum: group elements g_i and characters chi_i with
// chi_j(g_i) realizing a diagonal braiding.
struct YDDatum {
  AbelianGroup group;
  std::vector<AbelianGroup::Element> g;
  std::vector<Character> chi;

  int rank() const { return static_cast<int>(g.size()); }
  BraidingMatrix braiding() const;  // q_ij = chi_j(g_i)
  void validate() const;            // throws std::invalid_argument
};

// Canonical realization over (Z/L)^theta, L the lcm of the entry orders:
// g_i the i-th standard generator and chi_j(g_i) = q_ij.
YDDatum realize(const BraidingMatrix& b);

// chi_ij = chi_i^{m_ij + 1} chi_j and g_ij = g_i^{m_ij + 1} g_j; nullopt
// when m_ij is undefined.
struct ChiGPair {
  Character chi;
  AbelianGroup::Element g;
  long long m;
};
std::optional<ChiGPair> chi_g_pair(const YDDatum& d, int i, int j);

// Does (chi_ij, g_ij) avoid every (chi_l, g_l)?  Applicable only under the
// hypothesis q_ii^{m_ij + 1} != 1.
struct DistinctnessResult {
  enum class Status { Distinct, Collision, NotApplicable } status;
  int witness = -1;  // colliding l when status == Collision
  std::string reason;
  bool distinct() const { return status == Status::Distinct; }
};
DistinctnessResult lemma_distinct(const YDDatum& d, int i, int j);

enum class LiftStatus { ForcedZero, Liftable, Mismatch, NotApplicable };

enum class LiftCase { c1i, c1ii, c2i, c2ii, c3i, c3ii, c3iii, c3iv, c4i };

std::string lift_case_name(LiftCase c);  // "1i", "3iv", ...
std::string lift_status_name(LiftStatus s);

struct LiftVerdict {
  LiftStatus status;
  std::optional<LiftCase> case_id;  // set when status == Liftable
  RootOfUnity q_sub[2][2];          // the 2x2 braiding submatrix at (i, j)
  long long m = -1;                 // m_ij, when defined
  std::string reason;
};

// Classification of the quantum Serre lifting at the ordered pair (i, j):
// the relation can lift to a nonzero multiple of 1 - g_i^{m+1} g_j only when
// chi_ij is trivial, and then only in one of nine matrix patterns.
// "Liftable" records that the character obstruction vanishes and the pattern
// matches; a trivial chi_ij with no matching pattern is flagged Mismatch.
LiftVerdict lifting_case(const YDDatum& d, int i, int j);

struct ScanRow {
  BraidingMatrix braiding;  // the realization the verdict refers to
  int i, j;
  LiftVerdict verdict;
  DistinctnessResult distinctness;
};

// Exhaustive rank-2 scan: all twist classes with entry orders <= n_max that
// are standard with finite Cartan matrix and satisfy q_ii^{m+1} != 1, each
// ordered pair classified on the unique realization whose chi_ij evaluates
// trivially on g_i (when that realization stays inside the order bound).
std::vector<ScanRow> scan_liftable(long long n_max, int max_points = kDefaultMaxPoints);

}  // namespace braidkit
