#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidkit/cyclotomic.hpp"

namespace braidkit {

// Reflection requested at a vertex whose m-row is not fully defined.
struct reflection_undefined : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// theta x theta matrix (q_ij) of roots of unity; the braiding is
// c(x_i (x) x_j) = q_ij x_j (x) x_i.
struct BraidingMatrix {
  std::vector<std::vector<RootOfUnity>> q;

  BraidingMatrix() = default;
  explicit BraidingMatrix(std::vector<std::vector<RootOfUnity>> entries);
  static BraidingMatrix rank1(const RootOfUnity& q11);
  static BraidingMatrix rank2(const RootOfUnity& q11, const RootOfUnity& q12,
                              const RootOfUnity& q21, const RootOfUnity& q22);
  // Representative of the twist class with the given diagonal and edge
  // products: q12 = p12, q21 = 1, etc.
  static BraidingMatrix rank2_class(const RootOfUnity& q11, const RootOfUnity& q22,
                                    const RootOfUnity& p12);

  int rank() const { return static_cast<int>(q.size()); }
  const RootOfUnity& at(int i, int j) const { return q[i][j]; }
  RootOfUnity edge_product(int i, int j) const { return q[i][j] * q[j][i]; }

  // chi(a, b) = prod q_ij^{a_i b_j}, the bicharacter on Z^theta.
  RootOfUnity bicharacter(const std::vector<mpz_class>& a,
                          const std::vector<mpz_class>& b) const;
  RootOfUnity bicharacter(const std::vector<long long>& a,
                          const std::vector<long long>& b) const;

  // lcm of the orders of all entries.
  long long conductor() const;

  bool operator==(const BraidingMatrix& o) const = default;
};

struct DynkinDiagram {
  struct Edge {
    int i, j;  // i < j
    RootOfUnity label;
    bool operator==(const Edge& o) const = default;
  };
  std::vector<RootOfUnity> vertex_labels;
  std::vector<Edge> edges;  // sorted by (i, j); labels never 1

  bool operator==(const DynkinDiagram& o) const = default;
};

DynkinDiagram dynkin_diagram(const BraidingMatrix& b);

// Same generalized Dynkin diagram up to a label-preserving vertex
// permutation.  Throws std::invalid_argument on rank mismatch.
bool twist_equivalent(const BraidingMatrix& b1, const BraidingMatrix& b2);

// Minimal m with (m+1)_{q_ii} (q_ii^m q_ij q_ji - 1) = 0, if any.
std::optional<long long> m_entry(const BraidingMatrix& b, int i, int j);
std::optional<long long> m_entry_from(const RootOfUnity& qii, const RootOfUnity& p);

// Full m-matrix; diagonal entries are fixed to 2.
using MMatrix = std::vector<std::vector<std::optional<long long>>>;
MMatrix m_matrix(const BraidingMatrix& b);
bool m_fully_defined(const MMatrix& m);

struct CartanMatrix {
  std::vector<std::vector<long long>> a;  // a_ii = 2, a_ij <= 0 off-diagonal

  explicit CartanMatrix(std::vector<std::vector<long long>> entries);
  int rank() const { return static_cast<int>(a.size()); }
  bool operator==(const CartanMatrix& o) const = default;
};

// Cartan matrix (-m_ij) of a fully defined m-matrix.
CartanMatrix cartan_from_m(const MMatrix& m);

// A point of the Weyl groupoid: a basis F of Z^theta (columns = f_i in the
// canonical basis), the braiding values q^F_ij = chi(f_i, f_j) and the
// m-matrix computed from them.
struct GroupoidPoint {
  std::vector<std::vector<mpz_class>> basis;  // basis[i] = coordinates of f_i
  BraidingMatrix q;
  MMatrix m;
};

GroupoidPoint initial_point(const BraidingMatrix& b);

// s^F_k: f_j -> f_j + m_kj f_k for j != k, f_k -> -f_k.  Requires row k of
// the m-matrix to be defined; throws reflection_undefined otherwise.
GroupoidPoint reflect(const GroupoidPoint& p, int k);

// Recompute q^F from the bilinear form on the stored basis (validation path).
BraidingMatrix q_from_basis(const BraidingMatrix& original,
                            const std::vector<std::vector<mpz_class>>& basis);

struct GroupoidExploration {
  std::vector<GroupoidPoint> points;  // one representative per twist class
  bool overflow = false;
};

// Breadth-first closure of the canonical point under all defined
// reflections, deduplicated by the permutation-canonical (diagram, m) key.
GroupoidExploration groupoid_points(const BraidingMatrix& b, int max_points);

enum class Standardness { Standard, NotStandard, Indeterminate };

struct StandardnessResult {
  Standardness status;
  std::optional<CartanMatrix> cartan;  // present iff status == Standard
  bool is_standard() const { return status == Standardness::Standard; }
};

constexpr int kDefaultMaxPoints = 10000;

// Standard braiding: every groupoid point has a fully defined m-matrix equal
// to the initial one.  Overflow of the point cap yields Indeterminate.
StandardnessResult is_standard(const BraidingMatrix& b,
                               int max_points = kDefaultMaxPoints);

struct CartanComponent {
  std::string type;           // "A3", "B2", "G2", ...
  std::vector<int> vertices;  // ascending
};

struct CartanClassification {
  bool finite = false;
  std::vector<CartanComponent> components;  // empty when not finite
  std::string to_string() const;            // "A2", "A1 x A1", "not finite"
};

CartanClassification cartan_type(const CartanMatrix& c);

// Positive roots of a finite-type Cartan matrix, in simple-root coordinates,
// sorted by (height, lexicographic).  Throws std::invalid_argument when the
// matrix is not of finite type.
std::vector<std::vector<long long>> positive_roots(const CartanMatrix& c);

// q_alpha = chi(alpha, alpha) and N_alpha = ord(q_alpha).
RootOfUnity root_scalar(const BraidingMatrix& b, const std::vector<long long>& alpha);
long long root_order(const BraidingMatrix& b, const std::vector<long long>& alpha);

// Rank-2 diagram classes over the N-th roots of unity together with -1,
// deduplicated by twist equivalence, vertex swap and simultaneous Galois
// conjugation of all labels.  Sorted by canonical representative.
struct Rank2Class {
  RootOfUnity q11, q22, p;  // canonical representative of the class
  StandardnessResult standard;
};

std::vector<Rank2Class> enumerate_rank2_diagrams(long long order,
                                                 int max_points = kDefaultMaxPoints);

}  // namespace braidkit
