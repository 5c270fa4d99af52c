#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "braidkit/braiding.hpp"

using namespace braidkit;

namespace {

RootOfUnity z(long long k, long long n) { return RootOfUnity(k, n); }

// The four standard A2 diagram shapes at a fixed primitive root q.
BraidingMatrix d1(const RootOfUnity& q) {
  return BraidingMatrix::rank2_class(q, RootOfUnity::minus_one(), q.inverse());
}
BraidingMatrix d2(const RootOfUnity& q) {
  return BraidingMatrix::rank2_class(RootOfUnity::minus_one(), RootOfUnity::minus_one(), q);
}
BraidingMatrix d3() {
  return BraidingMatrix::rank2_class(RootOfUnity::minus_one(), RootOfUnity::minus_one(),
                                     RootOfUnity::minus_one());
}
BraidingMatrix d4(const RootOfUnity& q) { return BraidingMatrix::rank2_class(q, q, q.inverse()); }

// Cartan braiding for a finite Cartan matrix: q_ii = q^{d_i}, with
// q_ij q_ji = q_ii^{a_ij} realized as q12 = product, q21 = 1.
BraidingMatrix cartan_braiding_b2(const RootOfUnity& q) {
  return BraidingMatrix::rank2_class(q, q.pow(2), q.pow(-2));
}
BraidingMatrix cartan_braiding_g2(const RootOfUnity& q) {
  return BraidingMatrix::rank2_class(q, q.pow(3), q.pow(-3));
}

// Independent oracle: evaluate the defining expression of the m-set in the
// cyclotomic field and take the minimum over one full period.
std::optional<long long> m_entry_oracle(const RootOfUnity& qii, const RootOfUnity& p) {
  long long bound = qii.order() * p.order() + 1;
  for (long long m = 0; m <= bound; ++m) {
    CycNumber factor1 = q_number(m + 1, qii);
    CycNumber factor2 = CycNumber::embed(qii.pow(m) * p) - CycNumber(1);
    if ((factor1 * factor2).is_zero()) return m;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("dynkin diagram construction") {
  RootOfUnity q = z(1, 5);
  DynkinDiagram d = dynkin_diagram(d1(q));
  CHECK(d.vertex_labels == std::vector<RootOfUnity>{q, RootOfUnity::minus_one()});
  REQUIRE(d.edges.size() == 1);
  CHECK(d.edges[0].i == 0);
  CHECK(d.edges[0].j == 1);
  CHECK(d.edges[0].label == q.inverse());

  // q12 q21 = 1 gives two disconnected labeled vertices
  BraidingMatrix disc = BraidingMatrix::rank2(q, z(1, 3), z(2, 3), q);
  CHECK(dynkin_diagram(disc).edges.empty());

  DynkinDiagram single = dynkin_diagram(BraidingMatrix::rank1(RootOfUnity::minus_one()));
  CHECK(single.vertex_labels.size() == 1);
  CHECK(single.edges.empty());
}

TEST_CASE("twist equivalence") {
  RootOfUnity q = z(1, 5);
  BraidingMatrix a = BraidingMatrix::rank2(q, q.inverse(), RootOfUnity::one(), q);
  BraidingMatrix b = BraidingMatrix::rank2(q, RootOfUnity::one(), q.inverse(), q);
  CHECK(twist_equivalent(a, b));
  CHECK_FALSE(twist_equivalent(d1(q), d2(q)));
  CHECK(twist_equivalent(d4(q), d4(q)));
  // vertex swap is an isomorphism of labeled diagrams
  BraidingMatrix swapped = BraidingMatrix::rank2_class(RootOfUnity::minus_one(), q, q.inverse());
  CHECK(twist_equivalent(d1(q), swapped));
  CHECK_THROWS_AS(twist_equivalent(d1(q), BraidingMatrix::rank1(q)), std::invalid_argument);
}

TEST_CASE("m entries") {
  RootOfUnity q5 = z(1, 5);
  CHECK(m_entry_from(q5, q5.inverse()) == 1);
  CHECK(m_entry_from(RootOfUnity::minus_one(), z(1, 3)) == 1);
  CHECK(m_entry_from(RootOfUnity::minus_one(), RootOfUnity::one()) == 0);
  // q11 of order 5 against an order-3 product: (5)_q = 0 puts m = 4 in the
  // defining set even though the second factor never vanishes.
  CHECK(m_entry_from(q5, z(1, 3)) == 4);
  CHECK(m_entry_from(q5, z(1, 3)) == m_entry_oracle(q5, z(1, 3)));
  // undefined only at q11 = 1 with a nontrivial product
  CHECK_FALSE(m_entry_from(RootOfUnity::one(), z(1, 3)).has_value());
  CHECK(m_entry_from(RootOfUnity::one(), RootOfUnity::one()) == 0);
  CHECK_THROWS_AS(m_entry(d4(q5), 0, 0), std::invalid_argument);
}

TEST_CASE("m entry matches the cyclotomic oracle") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long long> den(1, 9);
  for (int t = 0; t < 120; ++t) {
    long long dq = den(rng), dp = den(rng);
    RootOfUnity qii(rng() % dq, dq), p(rng() % dp, dp);
    auto impl = m_entry_from(qii, p);
    auto oracle = m_entry_oracle(qii, p);
    CHECK(impl == oracle);
  }
}

TEST_CASE("reflections") {
  RootOfUnity q = z(1, 5);
  GroupoidPoint p0 = initial_point(d4(q));

  SUBCASE("involution on bases") {
    for (int k = 0; k < 2; ++k) {
      GroupoidPoint p2 = reflect(reflect(p0, k), k);
      CHECK(p2.basis == p0.basis);
    }
  }

  SUBCASE("reflected point is twist equivalent for Cartan A2") {
    GroupoidPoint p1 = reflect(p0, 0);
    CHECK(twist_equivalent(p1.q, p0.q));
    // stored q agrees with recomputing the bilinear form on the new basis
    CHECK(q_from_basis(d4(q), p1.basis) == p1.q);
  }

  SUBCASE("rank 1 negates the basis") {
    GroupoidPoint r0 = initial_point(BraidingMatrix::rank1(RootOfUnity::minus_one()));
    GroupoidPoint r1 = reflect(r0, 0);
    CHECK(r1.basis[0][0] == -1);
    CHECK(r1.q == r0.q);
  }

  SUBCASE("undefined row is an error") {
    BraidingMatrix bad = BraidingMatrix::rank2_class(RootOfUnity::one(), q, z(1, 3));
    GroupoidPoint pb = initial_point(bad);
    CHECK_THROWS_AS(reflect(pb, 0), reflection_undefined);
  }
}

TEST_CASE("stored q matrices match the bilinear form along BFS") {
  for (const BraidingMatrix& b :
       {d1(z(1, 5)), d2(z(1, 5)), d3(), d4(z(1, 3)), cartan_braiding_b2(z(1, 5)),
        cartan_braiding_g2(z(1, 4))}) {
    GroupoidExploration g = groupoid_points(b, 100);
    CHECK_FALSE(g.overflow);
    for (const auto& p : g.points) {
      CHECK(q_from_basis(b, p.basis) == p.q);
      // every defined reflection is an involution on bases
      for (int k = 0; k < b.rank(); ++k) {
        bool defined = true;
        for (int j = 0; j < b.rank(); ++j)
          if (!p.m[k][j].has_value()) defined = false;
        if (!defined) continue;
        GroupoidPoint r = reflect(p, k);
        CHECK(reflect(r, k).basis == p.basis);
        CHECK(q_from_basis(b, r.basis) == r.q);
      }
    }
  }
}

TEST_CASE("groupoid point sets") {
  RootOfUnity q = z(1, 5);
  // Cartan A2: every reflection lands in the same twist class.
  CHECK(groupoid_points(d4(q), 100).points.size() == 1);
  // the D1/D2 shapes reflect into each other
  CHECK(groupoid_points(d1(q), 100).points.size() == 2);
  CHECK(groupoid_points(d2(q), 100).points.size() == 2);
  CHECK(groupoid_points(d3(), 100).points.size() == 1);
  for (const auto& p : groupoid_points(d1(q), 100).points) {
    REQUIRE(m_fully_defined(p.m));
    CHECK(*p.m[0][1] == 1);
    CHECK(*p.m[1][0] == 1);
  }
  // undefined rows block their reflections; with both rows undefined the
  // BFS cannot leave the initial point
  BraidingMatrix bad =
      BraidingMatrix::rank2_class(RootOfUnity::one(), RootOfUnity::one(), z(1, 3));
  GroupoidExploration g = groupoid_points(bad, 100);
  CHECK(g.points.size() == 1);
  CHECK_FALSE(is_standard(bad).is_standard());
  // one undefined entry already rules out standardness even though the
  // other reflection stays available
  BraidingMatrix half = BraidingMatrix::rank2_class(RootOfUnity::one(), q, z(1, 3));
  CHECK_FALSE(is_standard(half).is_standard());
}

TEST_CASE("overflow reporting") {
  GroupoidExploration g = groupoid_points(d1(z(1, 5)), 1);
  CHECK(g.overflow);
  CHECK(is_standard(d1(z(1, 5)), 1).status == Standardness::Indeterminate);
}

TEST_CASE("standardness of the A2 shapes") {
  RootOfUnity q = z(1, 5);
  CartanMatrix a2({{2, -1}, {-1, 2}});
  for (const BraidingMatrix& b : {d1(q), d2(q), d3(), d4(q)}) {
    StandardnessResult r = is_standard(b);
    REQUIRE(r.is_standard());
    CHECK(*r.cartan == a2);
    CHECK(cartan_type(*r.cartan).to_string() == "A2");
  }
}

TEST_CASE("standardness of Cartan braidings recovers the Cartan matrix") {
  StandardnessResult b2 = is_standard(cartan_braiding_b2(z(1, 5)));
  REQUIRE(b2.is_standard());
  CHECK(*b2.cartan == CartanMatrix({{2, -2}, {-1, 2}}));
  CHECK(cartan_type(*b2.cartan).to_string() == "B2");

  StandardnessResult g2 = is_standard(cartan_braiding_g2(z(1, 4)));
  REQUIRE(g2.is_standard());
  CHECK(*g2.cartan == CartanMatrix({{2, -3}, {-1, 2}}));
  CHECK(cartan_type(*g2.cartan).to_string() == "G2");

  StandardnessResult g2b = is_standard(cartan_braiding_g2(z(1, 7)));
  REQUIRE(g2b.is_standard());
  CHECK(cartan_type(*g2b.cartan).to_string() == "G2");

  // rank-3 Cartan A3 braiding
  RootOfUnity q = z(1, 5);
  BraidingMatrix a3({{q, q.inverse(), RootOfUnity::one()},
                     {RootOfUnity::one(), q, q.inverse()},
                     {RootOfUnity::one(), RootOfUnity::one(), q}});
  StandardnessResult r3 = is_standard(a3);
  REQUIRE(r3.is_standard());
  CHECK(cartan_type(*r3.cartan).to_string() == "A3");

  // undefined m-entry: not standard, no Cartan matrix
  BraidingMatrix bad = BraidingMatrix::rank2_class(RootOfUnity::one(), q, z(1, 3));
  StandardnessResult rb = is_standard(bad);
  CHECK(rb.status == Standardness::NotStandard);
  CHECK_FALSE(rb.cartan.has_value());
}

TEST_CASE("cartan classification") {
  CHECK(cartan_type(CartanMatrix({{2, -1}, {-1, 2}})).to_string() == "A2");
  CHECK(cartan_type(CartanMatrix({{2, -1}, {-3, 2}})).to_string() == "G2");
  CHECK_FALSE(cartan_type(CartanMatrix({{2, -2}, {-2, 2}})).finite);
  CHECK(cartan_type(CartanMatrix({{2, 0}, {0, 2}})).to_string() == "A1 x A1");
  CHECK_FALSE(cartan_type(CartanMatrix({{2, -1}, {0, 2}})).finite);
  CHECK(cartan_type(CartanMatrix({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}})).to_string() == "A3");
  CHECK(cartan_type(CartanMatrix({{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}})).to_string() == "B3");
  CHECK(cartan_type(CartanMatrix({{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}})).to_string() == "C3");
  CHECK(cartan_type(CartanMatrix({{2, -1, -1, -1}, {-1, 2, 0, 0}, {-1, 0, 2, 0}, {-1, 0, 0, 2}}))
            .to_string() == "D4");
  CHECK(cartan_type(CartanMatrix({{2, -1, 0, 0},
                                  {-1, 2, -1, 0},
                                  {0, -2, 2, -1},
                                  {0, 0, -1, 2}}))
            .to_string() == "F4");
  CHECK_THROWS_AS(CartanMatrix({{2, -1}, {1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(CartanMatrix({{1, 0}, {0, 2}}), std::invalid_argument);
}

TEST_CASE("positive roots") {
  auto a2 = positive_roots(CartanMatrix({{2, -1}, {-1, 2}}));
  CHECK(a2 == std::vector<std::vector<long long>>{{0, 1}, {1, 0}, {1, 1}});
  CHECK(positive_roots(CartanMatrix({{2, -2}, {-1, 2}})).size() == 4);
  CHECK(positive_roots(CartanMatrix({{2, -3}, {-1, 2}})).size() == 6);
  CHECK(positive_roots(CartanMatrix({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}})).size() == 6);
  CHECK_THROWS_AS(positive_roots(CartanMatrix({{2, -2}, {-2, 2}})), std::invalid_argument);
}

TEST_CASE("root scalars and orders") {
  // Cartan A2 at a cube root: chi(alpha, alpha) has order 3 on all roots.
  BraidingMatrix b = d4(z(1, 3));
  for (const auto& alpha : positive_roots(CartanMatrix({{2, -1}, {-1, 2}}))) {
    // direct product oracle: q11^{a^2} (q12 q21)^{ab} q22^{b^2}
    long long a = alpha[0], c = alpha[1];
    RootOfUnity expect = b.at(0, 0).pow(a * a) * b.edge_product(0, 1).pow(a * c) *
                         b.at(1, 1).pow(c * c);
    CHECK(root_scalar(b, alpha) == expect);
    CHECK(root_order(b, alpha) == 3);
  }
  // D1 at a fifth root: e2 has scalar -1
  BraidingMatrix bd1 = d1(z(1, 5));
  CHECK(root_scalar(bd1, {0, 1}) == RootOfUnity::minus_one());
  CHECK(root_order(bd1, {1, 0}) == 5);
  CHECK(root_order(bd1, {1, 1}) == 2);
}

TEST_CASE("twist equivalence is an equivalence relation on samples") {
  std::vector<BraidingMatrix> sample = {d1(z(1, 5)), d2(z(1, 5)), d3(), d4(z(1, 5)),
                                        d1(z(2, 5)), cartan_braiding_b2(z(1, 5))};
  for (const auto& a : sample) CHECK(twist_equivalent(a, a));
  for (const auto& a : sample)
    for (const auto& b : sample) CHECK(twist_equivalent(a, b) == twist_equivalent(b, a));
  for (const auto& a : sample)
    for (const auto& b : sample)
      for (const auto& c : sample)
        if (twist_equivalent(a, b) && twist_equivalent(b, c)) CHECK(twist_equivalent(a, c));
}

TEST_CASE("rank-2 enumeration finds exactly the four standard A2 classes at order 5") {
  auto classes = enumerate_rank2_diagrams(5);
  std::vector<Rank2Class> standard_a2;
  for (const auto& c : classes) {
    if (!c.standard.is_standard()) continue;
    if (cartan_type(*c.standard.cartan).to_string() != "A2") continue;
    standard_a2.push_back(c);
  }
  REQUIRE(standard_a2.size() == 4);
  // each expected shape appears exactly once
  RootOfUnity q = z(1, 5);
  int matched = 0;
  for (const BraidingMatrix& shape : {d1(q), d2(q), d3(), d4(q)}) {
    for (const auto& c : standard_a2)
      if (twist_equivalent(BraidingMatrix::rank2_class(c.q11, c.q22, c.p), shape) ||
          // same shape up to replacing q by another primitive root
          [&] {
            for (long long t = 2; t <= 4; ++t)
              if (twist_equivalent(BraidingMatrix::rank2_class(c.q11.pow(t), c.q22.pow(t),
                                                               c.p.pow(t)),
                                   shape))
                return true;
            return false;
          }())
        ++matched;
  }
  CHECK(matched == 4);
}
