#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braidkit/relations.hpp"

using namespace braidkit;

namespace {

RootOfUnity z(long long k, long long n) { return RootOfUnity(k, n); }

BraidingPtr make_ctx(BraidingMatrix b) {
  return std::make_shared<const BraidingMatrix>(std::move(b));
}

BraidingPtr cartan_a2(long long n) {
  RootOfUnity q(1, n);
  return make_ctx(BraidingMatrix::rank2_class(q, q, q.inverse()));
}

BraidingPtr cartan_b2(long long n) {
  RootOfUnity q(1, n);
  return make_ctx(BraidingMatrix::rank2_class(q, q.pow(2), q.pow(-2)));
}

BraidingPtr cartan_g2(long long n) {
  RootOfUnity q(1, n);
  return make_ctx(BraidingMatrix::rank2_class(q, q.pow(3), q.pow(-3)));
}

BraidingPtr d3_ctx() {
  RootOfUnity m = RootOfUnity::minus_one();
  return make_ctx(BraidingMatrix::rank2_class(m, m, m));
}

const RelationInstance* find_kind(const std::vector<RelationInstance>& v, RelationKind k) {
  for (const auto& r : v)
    if (r.kind == k) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("quantum Serre instances") {
  auto a2 = cartan_a2(3);
  RelationInstance s = quantum_serre(a2, 0, 1);
  CHECK(s.applicable);
  CHECK(s.element == ad_c_power(0, 2, NCPoly::generator(a2, 1)));
  CHECK(s.total_degree() == 3);
  CHECK(in_nichols_ideal(s.element));

  // all vertex labels -1: the hypothesis q_kk^{m+1} != 1 fails
  RelationInstance sd3 = quantum_serre(d3_ctx(), 0, 1);
  CHECK_FALSE(sd3.applicable);
  CHECK_FALSE(sd3.element.is_zero());  // element still constructed

  auto b2 = cartan_b2(5);
  RelationInstance sb = quantum_serre(b2, 0, 1);
  CHECK(sb.applicable);
  CHECK(sb.element == ad_c_power(0, 3, NCPoly::generator(b2, 1)));

  // undefined m: not applicable, no element
  auto bad = make_ctx(BraidingMatrix::rank2_class(RootOfUnity::one(), z(1, 5), z(1, 3)));
  RelationInstance su = quantum_serre(bad, 0, 1);
  CHECK_FALSE(su.applicable);
  CHECK(su.element.is_zero());

  CHECK_THROWS_AS(quantum_serre(a2, 0, 0), std::invalid_argument);
}

TEST_CASE("root vector powers") {
  auto a2 = cartan_a2(3);
  RelationInstance r1 = root_vector_power(a2, {1, 0});
  CHECK(r1.element == NCPoly::monomial(a2, {0, 0, 0}));

  // alpha = e1 + e2 at a cube root: the hyperletter [x1 x2]_c cubed
  RelationInstance r12 = root_vector_power(a2, {1, 1});
  NCPoly h = hyperletter(a2, {0, 1});
  CHECK(r12.element == h * h * h);
  CHECK(r12.total_degree() == 6);
  CHECK(in_nichols_ideal(r12.element));

  // D1 shape at a fifth root: e2 carries scalar -1, so the power is a square
  auto d1 = make_ctx(BraidingMatrix::rank2_class(z(1, 5), RootOfUnity::minus_one(),
                                                 z(1, 5).inverse()));
  RelationInstance r2 = root_vector_power(d1, {0, 1});
  CHECK(r2.element == NCPoly::monomial(d1, {1, 1}));
  CHECK(in_nichols_ideal(r2.element));

  CHECK_THROWS_AS(root_vector_power(a2, {2, 1}), std::invalid_argument);
}

TEST_CASE("coupled relations for an A3-like shape with a -1 center") {
  // vertices all -1, path edges q and q^{-1}, no 1-3 edge
  RootOfUnity m = RootOfUnity::minus_one();
  RootOfUnity q = z(1, 3);
  auto ctx = make_ctx(BraidingMatrix({{m, q, RootOfUnity::one()},
                                      {RootOfUnity::one(), m, q.inverse()},
                                      {RootOfUnity::one(), RootOfUnity::one(), m}}));
  REQUIRE(is_standard(*ctx).is_standard());

  auto special = special_relations(ctx);
  const RelationInstance* a = find_kind(special, RelationKind::AType);
  REQUIRE(a != nullptr);
  CHECK(a->vertices[0] == 1);  // the center is the doubled vertex
  NCPoly expect = braided_commutator(ad_c_power(1, 1, NCPoly::generator(ctx, 0)),
                                     ad_c_power(1, 1, NCPoly::generator(ctx, 2)));
  bool found = false;
  for (const auto& r : special)
    if (r.kind == RelationKind::AType && r.element == expect) found = true;
  CHECK(found);
  CHECK(in_nichols_ideal(expect));

  // the same braiding matches the square/mixed-commutator pattern at the center
  auto lemmas = lemma_relations(ctx);
  const RelationInstance* sq = find_kind(lemmas, RelationKind::Square);
  REQUIRE(sq != nullptr);
  CHECK(sq->element == NCPoly::monomial(ctx, {1, 1}));
  CHECK(in_nichols_ideal(sq->element));
  const RelationInstance* mx = find_kind(lemmas, RelationKind::MixedCommutator);
  REQUIRE(mx != nullptr);
  CHECK(in_nichols_ideal(mx->element));
}

TEST_CASE("B-type relations") {
  // Cartan B2 at a cube root: m12 = 2, m21 = 1, q11 in G_3
  auto b2 = cartan_b2(3);
  auto special = special_relations(b2);
  const RelationInstance* bt = find_kind(special, RelationKind::BType);
  REQUIRE(bt != nullptr);
  CHECK(bt->vertices == std::vector<int>{0, 1});
  NCPoly expect = braided_commutator(ad_c_power(0, 2, NCPoly::generator(b2, 1)),
                                     ad_c_power(0, 1, NCPoly::generator(b2, 1)));
  CHECK(bt->element == expect);
  CHECK(in_nichols_ideal(bt->element));

  // q_jj = -1 variant at a fourth root
  RootOfUnity q4 = z(1, 4);
  auto b2m = make_ctx(BraidingMatrix::rank2_class(q4, RootOfUnity::minus_one(), q4.pow(-2)));
  REQUIRE(m_entry(*b2m, 0, 1) == 2);
  REQUIRE(m_entry(*b2m, 1, 0) == 1);
  auto special2 = special_relations(b2m);
  const RelationInstance* bt2 = find_kind(special2, RelationKind::BType);
  REQUIRE(bt2 != nullptr);
  CHECK(is_standard(*b2m).is_standard());
  CHECK(in_nichols_ideal(bt2->element));

  // the swapped-role doubled commutator from the (1,2) pattern
  auto lemmas = lemma_relations(b2);
  const RelationInstance* lb = find_kind(lemmas, RelationKind::BType);
  REQUIRE(lb != nullptr);
  CHECK(lb->vertices == std::vector<int>{0, 1});  // doubled vertex first
}

TEST_CASE("G2 relation family") {
  auto g2 = cartan_g2(4);
  auto special = special_relations(g2);
  REQUIRE(find_kind(special, RelationKind::G2First) != nullptr);
  REQUIRE(find_kind(special, RelationKind::G2Second) != nullptr);
  REQUIRE(find_kind(special, RelationKind::G2Third) != nullptr);
  REQUIRE(find_kind(special, RelationKind::G2Fourth) != nullptr);

  // the degree-5 hyperword agrees with the Shirshov recursion
  NCPoly w6 = braided_commutator(
      braided_commutator(NCPoly::generator(g2, 0),
                         braided_commutator(NCPoly::generator(g2, 0), NCPoly::generator(g2, 1))),
      braided_commutator(NCPoly::generator(g2, 0), NCPoly::generator(g2, 1)));
  CHECK(w6 == hyperletter(g2, {0, 0, 1, 0, 1}));

  const RelationInstance* g1 = find_kind(special, RelationKind::G2First);
  CHECK(g1->total_degree() == 7);
  const RelationInstance* g4i = find_kind(special, RelationKind::G2Fourth);
  CHECK(g4i->total_degree() == 8);

  // no G2 instances on an A2 braiding
  CHECK(special_relations(cartan_a2(3)).empty());
}

TEST_CASE("B2-cross relations need a third vertex") {
  // B2 pair (m_kj, m_jk) = (1, 2) with q_kk = -1 plus an A1 neighbor of k
  RootOfUnity q = z(1, 3), one = RootOfUnity::one(), m = RootOfUnity::minus_one();
  auto ctx = make_ctx(BraidingMatrix({{m, q, q},
                                      {one, q, one},
                                      {one, one, m}}));
  // vertices: k=0 (label -1), j=1 (label q), l=2
  REQUIRE(m_entry(*ctx, 0, 1) == 1);
  REQUIRE(m_entry(*ctx, 1, 0) == 2);
  REQUIRE(m_entry(*ctx, 1, 2) == 0);
  REQUIRE(m_entry(*ctx, 2, 1) == 0);
  REQUIRE(m_entry(*ctx, 0, 2) == 1);
  auto lemmas = lemma_relations(ctx);
  const RelationInstance* bc = find_kind(lemmas, RelationKind::B2Cross);
  REQUIRE(bc != nullptr);
  CHECK(bc->vertices == std::vector<int>{0, 1, 2});
  CHECK(bc->total_degree() == 6);
  if (is_standard(*ctx).is_standard()) CHECK(in_nichols_ideal(bc->element));
}

TEST_CASE("no matching hypotheses yields no instances") {
  auto a2 = cartan_a2(5);
  CHECK(special_relations(a2).empty());
  CHECK(lemma_relations(a2).empty());
}

TEST_CASE("pbw dimensions") {
  PbwDimension a2 = pbw_dimension(cartan_a2(3));
  REQUIRE(a2.finite);
  CHECK(a2.value == 27);

  PbwDimension r1 = pbw_dimension(make_ctx(BraidingMatrix::rank1(z(1, 6))));
  REQUIRE(r1.finite);
  CHECK(r1.value == 6);

  // D1 at a fifth root: orders 5, 2, 2 across the three roots
  auto d1 = make_ctx(
      BraidingMatrix::rank2_class(z(1, 5), RootOfUnity::minus_one(), z(1, 5).inverse()));
  PbwDimension pd1 = pbw_dimension(d1);
  REQUIRE(pd1.finite);
  CHECK(pd1.value == 20);

  // affine Cartan braiding: standard but not finite type
  RootOfUnity q5 = z(1, 5);
  auto affine = make_ctx(BraidingMatrix::rank2_class(q5, q5, q5.pow(-2)));
  PbwDimension pa = pbw_dimension(affine);
  CHECK_FALSE(pa.finite);

  CHECK_THROWS_AS(
      pbw_dimension(make_ctx(BraidingMatrix::rank2_class(RootOfUnity::one(), q5, z(1, 3)))),
      std::invalid_argument);
}

TEST_CASE("pbw dimension agrees with the Hilbert total") {
  for (BraidingPtr ctx :
       {cartan_a2(3),
        make_ctx(BraidingMatrix::rank2_class(z(1, 5), RootOfUnity::minus_one(),
                                             z(1, 5).inverse())),
        d3_ctx()}) {
    PbwDimension p = pbw_dimension(ctx);
    REQUIRE(p.finite);
    // run the series out until it vanishes
    NicholsCalculator calc(ctx);
    mpz_class total = 0;
    long long last_nonzero = 0;
    for (long long d = 0;; ++d) {
      long long dim = calc.nichols_dim_total(d);
      total += static_cast<long>(dim);
      if (dim == 0) break;
      last_nonzero = dim;
      REQUIRE(d <= 16);
    }
    CHECK(total == p.value);
    CHECK(last_nonzero == 1);  // the top component is a line
  }
}

TEST_CASE("presentation verification for Cartan A2 at a cube root") {
  PresentationReport rep = verify_presentation(cartan_a2(3), 7);
  CHECK(rep.cartan_type == "A2");
  CHECK(rep.all_applicable_in_ideal);
  CHECK(rep.dims_match);
  REQUIRE(rep.dims.size() == 8);
  std::vector<long long> expect{1, 2, 4, 4, 5, 4, 4, 2};
  for (size_t i = 0; i < rep.dims.size(); ++i) {
    CHECK(rep.dims[i].dim_nichols == expect[i]);
    CHECK(rep.dims[i].dim_quotient == expect[i]);
  }
  REQUIRE(rep.pbw.finite);
  CHECK(rep.pbw.value == 27);
  // relations present: x1^3, x2^3, [x1 x2]^3, both Serre elements
  int root_powers = 0, serres = 0;
  for (const auto& v : rep.relations) {
    if (v.instance.kind == RelationKind::RootVectorPower) ++root_powers;
    if (v.instance.kind == RelationKind::QuantumSerre && v.instance.applicable) ++serres;
  }
  CHECK(root_powers == 3);
  CHECK(serres == 2);
}

TEST_CASE("presentation verification for the all--1 A2 shape at a fifth root edge") {
  RootOfUnity q = z(1, 5), m = RootOfUnity::minus_one();
  auto ctx = make_ctx(BraidingMatrix::rank2_class(m, m, q));
  PresentationReport rep = verify_presentation(ctx, 6);
  CHECK(rep.cartan_type == "A2");
  CHECK(rep.all_applicable_in_ideal);
  CHECK(rep.dims_match);
  // x1^2 and x2^2 alone cut T(V) down to the alternating words in low degree
  for (const auto& row : rep.dims)
    if (row.degree >= 1) CHECK(row.dim_quotient == 2);
}

TEST_CASE("presentation verification in rank 1") {
  PresentationReport rep = verify_presentation(make_ctx(BraidingMatrix::rank1(z(1, 4))), 6);
  std::vector<long long> expect{1, 1, 1, 1, 0, 0, 0};
  REQUIRE(rep.dims.size() == expect.size());
  for (size_t i = 0; i < expect.size(); ++i) {
    CHECK(rep.dims[i].dim_nichols == expect[i]);
    CHECK(rep.dims[i].dim_quotient == expect[i]);
  }
  CHECK(rep.all_applicable_in_ideal);
  CHECK(rep.dims_match);
}

TEST_CASE("the degree-6 G2 relation carries a hyperletter-square correction") {
  // [x_k, [x_k^2 x_j x_k x_j]_c]_c alone is a nonzero multiple of
  // [x_k^2 x_j]_c^2 in the Nichols algebra; the relation instance subtracts
  // that multiple and lands in the ideal.
  for (BraidingPtr g2 : {cartan_g2(4),
                         make_ctx(BraidingMatrix::rank2_class(z(1, 6), RootOfUnity::minus_one(),
                                                              RootOfUnity::minus_one())),
                         make_ctx(BraidingMatrix::rank2_class(z(2, 8), z(7, 8), z(1, 8)))}) {
    NCPoly xk = NCPoly::generator(g2, 0), xj = NCPoly::generator(g2, 1);
    NCPoly w2 = braided_commutator(xk, xj);
    NCPoly w6 = braided_commutator(braided_commutator(xk, w2), w2);
    NCPoly raw = braided_commutator(xk, w6);
    CHECK_FALSE(in_nichols_ideal(raw));
    auto special = special_relations(g2);
    const RelationInstance* inst = find_kind(special, RelationKind::G2Second);
    REQUIRE(inst != nullptr);
    CHECK(in_nichols_ideal(inst->element));
    // the correction is proportional to the square of the (2,1) root vector
    NCPoly w3 = braided_commutator(xk, w2);
    NCPoly diff = raw - inst->element;
    CHECK_FALSE(diff.is_zero());
    for (const auto& [w, c] : diff.terms())
      CHECK(multidegree(w, 2) == std::vector<long long>{4, 2});
  }
}

TEST_CASE("presentation completeness for B2 and G2 instances") {
  struct Case {
    BraidingPtr ctx;
    std::string type;
    std::vector<long long> dims;
  };
  std::vector<Case> cases = {
      {cartan_g2(4), "G2", {1, 2, 4, 7, 10, 15, 21, 28}},
      {cartan_b2(3), "B2", {1, 2, 4, 5, 7, 8, 9, 9}},
  };
  for (auto& c : cases) {
    PresentationReport rep = verify_presentation(c.ctx, 7);
    CHECK(rep.cartan_type == c.type);
    CHECK(rep.all_applicable_in_ideal);
    CHECK(rep.dims_match);
    REQUIRE(rep.dims.size() == c.dims.size());
    for (size_t i = 0; i < c.dims.size(); ++i) {
      CHECK(rep.dims[i].dim_nichols == c.dims[i]);
      CHECK(rep.dims[i].dim_quotient == c.dims[i]);
    }
  }
}

TEST_CASE("presentation rejects non-standard input") {
  auto bad = make_ctx(BraidingMatrix::rank2_class(RootOfUnity::one(), z(1, 5), z(1, 3)));
  CHECK_THROWS_AS(verify_presentation(bad, 4), std::invalid_argument);
  auto affine = make_ctx(BraidingMatrix::rank2_class(z(1, 5), z(1, 5), z(1, 5).pow(-2)));
  CHECK_THROWS_AS(verify_presentation(affine, 4), std::invalid_argument);
}
