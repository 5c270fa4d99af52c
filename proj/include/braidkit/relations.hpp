#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidkit/tensoralgebra.hpp"

namespace braidkit {

enum class RelationKind {
  RootVectorPower,  // x_alpha^{N_alpha}
  QuantumSerre,     // ad_c(x_k)^{1+m_kj}(x_j)
  AType,            // [(ad x_k)x_j, (ad x_k)x_l]_c
  BType,            // [(ad x_k)^2 x_j, (ad x_k)x_j]_c
  B2Type,           // [(ad x_k)^2 (ad x_j)x_l, (ad x_k)x_j]_c
  G2First,          // [(ad x_k)^3 x_j, (ad x_k)^2 x_j]_c
  G2Second,         // [x_k, [x_k^2 x_j x_k x_j]_c]_c
  G2Third,          // [[x_k^2 x_j x_k x_j]_c, [x_k x_j]_c]_c
  G2Fourth,         // [[x_k^2 x_j]_c, [x_k^2 x_j x_k x_j]_c]_c
  Square,           // x_k^2
  MixedCommutator,  // [ad_c x_j (ad_c x_k (x_l)), x_k]_c
  B2Cross,          // [(ad x_k)^2 (ad x_j)x_l, (ad x_j)x_k]_c
};

std::string relation_kind_name(RelationKind k);

struct RelationInstance {
  RelationKind kind;
  std::vector<int> vertices;  // 0-based, in the role order of the kind
  NCPoly element;
  bool applicable;
  std::string reason;  // why the instance is not applicable, when it is not

  std::vector<long long> degree() const { return multidegree_of(element); }
  long long total_degree() const;

 private:
  static std::vector<long long> multidegree_of(const NCPoly& p);
};

// ad_c(x_i)^{1+m_ij}(x_j); applicable iff q_ii^{m_ij+1} != 1.  An undefined
// m_ij yields a not-applicable instance with a zero element.
RelationInstance quantum_serre(BraidingPtr ctx, int i, int j);

// x_alpha^{N_alpha} for a positive root alpha of a standard braiding, with
// x_alpha the hyperletter of the smallest Lyndon word of multidegree alpha
// that survives in the Nichols algebra.
RelationInstance root_vector_power(BraidingPtr ctx, const std::vector<long long>& alpha);

// Instances of the coupled relations attached to A/B/B2/G2 configurations,
// one per ordered vertex tuple whose hypothesis holds.
std::vector<RelationInstance> special_relations(BraidingPtr ctx);

// Extra relations that hold under braiding-pattern hypotheses: the square
// x_k^2 and mixed commutator for the balanced-edge pattern, the doubled
// commutator pairs for (m_kj, m_jk) = (1, 2) configurations.
std::vector<RelationInstance> lemma_relations(BraidingPtr ctx);

struct PbwDimension {
  bool finite = false;
  mpz_class value;  // product of N_alpha when finite
};

// prod_{alpha in Delta_+} N_alpha for a standard braiding with finite Cartan
// matrix; Infinite (finite = false) for standard braidings whose Cartan
// matrix is not of finite type.  Throws std::invalid_argument when the
// braiding is not standard.
PbwDimension pbw_dimension(BraidingPtr ctx, int max_points = kDefaultMaxPoints);

struct RelationVerdict {
  RelationInstance instance;
  std::optional<bool> in_ideal;  // set when applicable and degree <= max_degree
};

struct DimensionRow {
  long long degree;
  long long dim_tensor;
  long long dim_nichols;
  long long dim_quotient;  // of T(V) modulo the ideal generated by the relations
};

struct PresentationReport {
  BraidingMatrix braiding;
  CartanMatrix cartan = CartanMatrix(std::vector<std::vector<long long>>{{2}});
  std::string cartan_type;
  long long max_degree = 0;
  std::vector<RelationVerdict> relations;
  std::vector<DimensionRow> dims;
  bool all_applicable_in_ideal = true;
  bool dims_match = true;
  PbwDimension pbw;
};

// Verify the defining relations of a standard finite-type braiding: build
// every relation instance, test membership in the Nichols ideal degreewise,
// and compare the dimensions of T(V) modulo the generated ideal with the
// Nichols algebra dimensions up to max_degree.
PresentationReport verify_presentation(BraidingPtr ctx, long long max_degree,
                                       int max_points = kDefaultMaxPoints);

}  // namespace braidkit
