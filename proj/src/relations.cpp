#include "braidkit/relations.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace braidkit {

std::string relation_kind_name(RelationKind k) {
  switch (k) {
    case RelationKind::RootVectorPower: return "root-power";
    case RelationKind::QuantumSerre: return "quantum-serre";
    case RelationKind::AType: return "A";
    case RelationKind::BType: return "B";
    case RelationKind::B2Type: return "B2";
    case RelationKind::G2First: return "G2-1";
    case RelationKind::G2Second: return "G2-2";
    case RelationKind::G2Third: return "G2-3";
    case RelationKind::G2Fourth: return "G2-4";
    case RelationKind::Square: return "square";
    case RelationKind::MixedCommutator: return "mixed";
    case RelationKind::B2Cross: return "B2-cross";
  }
  return "?";
}

std::vector<long long> RelationInstance::multidegree_of(const NCPoly& p) {
  if (p.is_zero()) return std::vector<long long>(p.rank(), 0);
  std::vector<long long> deg = multidegree(p.terms().begin()->first, p.rank());
  for (const auto& [w, c] : p.terms())
    if (multidegree(w, p.rank()) != deg)
      throw std::logic_error("relation element is not multidegree-homogeneous");
  return deg;
}

long long RelationInstance::total_degree() const {
  long long t = 0;
  for (long long d : degree()) t += d;
  return t;
}

RelationInstance quantum_serre(BraidingPtr ctx, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= ctx->rank() || j >= ctx->rank())
    throw std::invalid_argument("quantum_serre: need distinct vertices in range");
  auto m = m_entry(*ctx, i, j);
  if (!m.has_value()) {
    RelationInstance inst{RelationKind::QuantumSerre, {i, j}, NCPoly(ctx), false,
                          "m_ij is undefined"};
    return inst;
  }
  NCPoly elem = ad_c_power(i, *m + 1, NCPoly::generator(ctx, j));
  bool applicable = !ctx->at(i, i).pow(*m + 1).is_one();
  return RelationInstance{RelationKind::QuantumSerre, {i, j}, std::move(elem), applicable,
                          applicable ? "" : "q_ii^{m+1} = 1"};
}

namespace {

// Smallest Lyndon word of the given multidegree whose hyperletter is nonzero
// in the Nichols algebra.
Word lyndon_word_of_root(NicholsCalculator& calc, const std::vector<long long>& alpha) {
  for (const Word& w : words_of_multidegree(alpha)) {
    if (!is_lyndon(w)) continue;
    NCPoly h = hyperletter(calc.context(), w);
    if (!calc.in_ideal(h)) return w;
  }
  throw std::logic_error("no Lyndon word of the root survives in the Nichols algebra");
}

RelationInstance root_vector_power_with(NicholsCalculator& calc,
                                        const std::vector<long long>& alpha,
                                        long long n_alpha) {
  Word w = lyndon_word_of_root(calc, alpha);
  NCPoly x = hyperletter(calc.context(), w);
  NCPoly elem = NCPoly::unit(calc.context());
  for (long long k = 0; k < n_alpha; ++k) elem *= x;
  std::vector<int> verts(w.begin(), w.end());
  bool applicable = n_alpha >= 2;
  return RelationInstance{RelationKind::RootVectorPower, verts, std::move(elem), applicable,
                          applicable ? "" : "root scalar is 1"};
}

}  // namespace

RelationInstance root_vector_power(BraidingPtr ctx, const std::vector<long long>& alpha) {
  StandardnessResult st = is_standard(*ctx);
  if (!st.is_standard())
    throw std::invalid_argument("root_vector_power: braiding is not standard");
  auto roots = positive_roots(*st.cartan);
  if (std::find(roots.begin(), roots.end(), alpha) == roots.end())
    throw std::invalid_argument("root_vector_power: alpha is not a positive root");
  NicholsCalculator calc(ctx);
  return root_vector_power_with(calc, alpha, root_order(*ctx, alpha));
}

namespace {

NCPoly g2_hyperword(BraidingPtr ctx, int k, int j) {
  // [x_k^2 x_j x_k x_j]_c = [[x_k^2 x_j]_c, [x_k x_j]_c]_c with
  // [x_k^2 x_j]_c = [x_k, [x_k, x_j]_c]_c; matches the Shirshov recursion
  // for the word x_k x_k x_j x_k x_j when k precedes j.
  NCPoly xk = NCPoly::generator(ctx, k), xj = NCPoly::generator(ctx, j);
  NCPoly w2 = braided_commutator(xk, xj);
  NCPoly w3 = braided_commutator(xk, w2);
  return braided_commutator(w3, w2);
}

bool in_g3(const RootOfUnity& q) { return q.order() == 3; }
bool in_g4(const RootOfUnity& q) { return q.order() == 4; }
bool is_minus_one(const RootOfUnity& q) { return q.order() == 2; }

}  // namespace

std::vector<RelationInstance> special_relations(BraidingPtr ctx) {
  const BraidingMatrix& b = *ctx;
  int n = b.rank();
  MMatrix m = m_matrix(b);
  auto mval = [&](int i, int j) -> std::optional<long long> { return m[i][j]; };

  std::vector<RelationInstance> out;

  // [(ad x_k)x_j, (ad x_k)x_l]_c = 0 when m_kj = m_kl = 1 and q_kk = -1
  for (int k = 0; k < n; ++k) {
    if (!is_minus_one(b.at(k, k))) continue;
    for (int j = 0; j < n; ++j) {
      if (j == k || mval(k, j) != 1) continue;
      for (int l = 0; l < n; ++l) {
        if (l == k || l == j || mval(k, l) != 1) continue;
        NCPoly e = braided_commutator(ad_c_power(k, 1, NCPoly::generator(ctx, j)),
                                      ad_c_power(k, 1, NCPoly::generator(ctx, l)));
        out.push_back({RelationKind::AType, {k, j, l}, std::move(e), true, ""});
      }
    }
  }

  // [(ad x_k)^2 x_j, (ad x_k)x_j]_c = 0 when m_kj = 2, m_jk = 1 and
  // q_kk in G_3 or q_jj = -1
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) {
      if (j == k || mval(k, j) != 2 || mval(j, k) != 1) continue;
      if (!(in_g3(b.at(k, k)) || is_minus_one(b.at(j, j)))) continue;
      NCPoly e = braided_commutator(ad_c_power(k, 2, NCPoly::generator(ctx, j)),
                                    ad_c_power(k, 1, NCPoly::generator(ctx, j)));
      out.push_back({RelationKind::BType, {k, j}, std::move(e), true, ""});
    }

  // [(ad x_k)^2 (ad x_j) x_l, (ad x_k)x_j]_c = 0 when m_kj = 2,
  // m_jk = m_jl = 1 and q_kk in G_3 or q_jj = -1
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) {
      if (j == k || mval(k, j) != 2 || mval(j, k) != 1) continue;
      if (!(in_g3(b.at(k, k)) || is_minus_one(b.at(j, j)))) continue;
      for (int l = 0; l < n; ++l) {
        if (l == k || l == j || mval(j, l) != 1) continue;
        NCPoly inner = ad_c_power(j, 1, NCPoly::generator(ctx, l));
        NCPoly e = braided_commutator(
            braided_commutator(NCPoly::generator(ctx, k),
                               braided_commutator(NCPoly::generator(ctx, k), inner)),
            ad_c_power(k, 1, NCPoly::generator(ctx, j)));
        out.push_back({RelationKind::B2Type, {k, j, l}, std::move(e), true, ""});
      }
    }

  // G2 pair: m_kj = 3, m_jk = 1, the two vertices isolated from the rest,
  // and q_kk in G_4 or q_jj = -1
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) {
      if (j == k || mval(k, j) != 3 || mval(j, k) != 1) continue;
      bool component = true;
      for (int l = 0; l < n && component; ++l) {
        if (l == k || l == j) continue;
        if (mval(k, l) != 0 || mval(l, k) != 0 || mval(j, l) != 0 || mval(l, j) != 0)
          component = false;
      }
      if (!component) continue;
      if (!(in_g4(b.at(k, k)) || is_minus_one(b.at(j, j)))) continue;

      NCPoly xk = NCPoly::generator(ctx, k), xj = NCPoly::generator(ctx, j);
      NCPoly w6 = g2_hyperword(ctx, k, j);
      NCPoly e1 = braided_commutator(ad_c_power(k, 3, xj), ad_c_power(k, 2, xj));
      out.push_back({RelationKind::G2First, {k, j}, std::move(e1), true, ""});
      // [x_k, [x_k^2 x_j x_k x_j]_c]_c equals a multiple of [x_k^2 x_j]_c^2
      // in the Nichols algebra; the relation is their difference.  With
      // a = q_kk, b = q_kj, e = q_kj q_jk, d = q_jj the coefficient is
      //   a^2 b e d (3)_a (1 - a^2 e) / (1 + a^4 e^2 d) + a^2 b (1 - e d),
      // the first summand from straightening [(ad x_k)^3 x_j, [x_k x_j]_c]_c
      // and the second from the braided Jacobi identity.
      {
        CycNumber a = CycNumber::embed(b.at(k, k));
        CycNumber bq = CycNumber::embed(b.at(k, j));
        CycNumber e = CycNumber::embed(b.edge_product(k, j));
        CycNumber dq = CycNumber::embed(b.at(j, j));
        CycNumber qw3 = a.pow(4) * e * e * dq;
        NCPoly elem = braided_commutator(xk, w6);
        if (!(CycNumber(1) + qw3).is_zero()) {
          CycNumber coeff = a * a * bq * e * dq * (CycNumber(1) + a + a * a) *
                                (CycNumber(1) - a * a * e) / (CycNumber(1) + qw3) +
                            a * a * bq * (CycNumber(1) - e * dq);
          NCPoly w3 = braided_commutator(xk, braided_commutator(xk, xj));
          elem -= coeff * (w3 * w3);
        }
        out.push_back({RelationKind::G2Second, {k, j}, std::move(elem), true, ""});
      }
      out.push_back({RelationKind::G2Third,
                     {k, j},
                     braided_commutator(w6, braided_commutator(xk, xj)),
                     true,
                     ""});
      NCPoly w3 = braided_commutator(xk, braided_commutator(xk, xj));
      out.push_back({RelationKind::G2Fourth, {k, j}, braided_commutator(w3, w6), true, ""});
    }

  return out;
}

std::vector<RelationInstance> lemma_relations(BraidingPtr ctx) {
  const BraidingMatrix& b = *ctx;
  int n = b.rank();
  MMatrix m = m_matrix(b);
  std::vector<RelationInstance> out;

  // x_k^2 = 0 and [ad_c x_j (ad_c x_k (x_l)), x_k]_c = 0 when q_kk = -1,
  // q_kj q_jk = (q_kl q_lk)^{-1} != 1 and q_jl q_lj = 1
  for (int k = 0; k < n; ++k) {
    if (!is_minus_one(b.at(k, k))) continue;
    for (int j = 0; j < n; ++j) {
      if (j == k) continue;
      for (int l = 0; l < n; ++l) {
        if (l == k || l == j) continue;
        RootOfUnity pkj = b.edge_product(k, j), pkl = b.edge_product(k, l);
        if (pkj.is_one() || !(pkj * pkl).is_one()) continue;
        if (!b.edge_product(j, l).is_one()) continue;
        out.push_back({RelationKind::Square,
                       {k},
                       NCPoly::monomial(ctx, {k, k}),
                       true,
                       ""});
        NCPoly inner = braided_commutator(
            NCPoly::generator(ctx, j),
            braided_commutator(NCPoly::generator(ctx, k), NCPoly::generator(ctx, l)));
        out.push_back({RelationKind::MixedCommutator,
                       {j, k, l},
                       braided_commutator(inner, NCPoly::generator(ctx, k)),
                       true,
                       ""});
      }
    }
  }

  // [(ad_c x_j)^2 x_k, (ad_c x_j)x_k]_c = 0 when m_kj = 1, m_jk = 2 and the
  // vertex pattern excludes nothing: both the (q_jj not in G_3 or q_kk != -1)
  // case and the complementary (q_jj in G_3 and q_kk = -1) case produce it.
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      if (j == k || m[k][j] != 1 || m[j][k] != 2) continue;
      NCPoly e = braided_commutator(ad_c_power(j, 2, NCPoly::generator(ctx, k)),
                                    ad_c_power(j, 1, NCPoly::generator(ctx, k)));
      out.push_back({RelationKind::BType, {j, k}, std::move(e), true, ""});
    }

  // [(ad_c x_k)^2 (ad_c x_j) x_l, (ad_c x_j) x_k]_c = 0 when m_kj = 1,
  // m_jk = 2, m_jl = m_lj = 0, m_kl = 1 and (1 + q_kk)(1 - q_jj^3) = 0
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      if (j == k || m[k][j] != 1 || m[j][k] != 2) continue;
      bool factor = is_minus_one(b.at(k, k)) || b.at(j, j).pow(3).is_one();
      if (!factor) continue;
      for (int l = 0; l < n; ++l) {
        if (l == k || l == j || m[j][l] != 0 || m[l][j] != 0 || m[k][l] != 1) continue;
        NCPoly inner = ad_c_power(j, 1, NCPoly::generator(ctx, l));
        NCPoly e = braided_commutator(
            braided_commutator(NCPoly::generator(ctx, k),
                               braided_commutator(NCPoly::generator(ctx, k), inner)),
            ad_c_power(j, 1, NCPoly::generator(ctx, k)));
        out.push_back({RelationKind::B2Cross, {k, j, l}, std::move(e), true, ""});
      }
    }

  return out;
}

PbwDimension pbw_dimension(BraidingPtr ctx, int max_points) {
  StandardnessResult st = is_standard(*ctx, max_points);
  if (st.status == Standardness::Indeterminate)
    throw std::invalid_argument("pbw_dimension: groupoid exploration overflowed");
  if (!st.is_standard()) throw std::invalid_argument("pbw_dimension: braiding is not standard");
  PbwDimension out;
  if (!cartan_type(*st.cartan).finite) return out;  // Infinite
  out.finite = true;
  out.value = 1;
  for (const auto& alpha : positive_roots(*st.cartan))
    out.value *= static_cast<long>(root_order(*ctx, alpha));
  return out;
}

PresentationReport verify_presentation(BraidingPtr ctx, long long max_degree, int max_points) {
  StandardnessResult st = is_standard(*ctx, max_points);
  if (st.status == Standardness::Indeterminate)
    throw std::invalid_argument("verify_presentation: groupoid exploration overflowed");
  if (!st.is_standard())
    throw std::invalid_argument("verify_presentation: braiding is not standard");
  CartanClassification cls = cartan_type(*st.cartan);
  if (!cls.finite)
    throw std::invalid_argument("verify_presentation: Cartan matrix is not of finite type");

  PresentationReport rep;
  rep.braiding = *ctx;
  rep.cartan = *st.cartan;
  rep.cartan_type = cls.to_string();
  rep.max_degree = max_degree;
  NicholsCalculator calc(ctx);

  // Assemble the presentation: root-vector powers, quantum Serre relations,
  // and the coupled special relations, deduplicated by element.
  std::vector<RelationInstance> instances;
  for (const auto& alpha : positive_roots(*st.cartan)) {
    long long n_alpha = root_order(*ctx, alpha);
    long long deg = 0;
    for (long long a : alpha) deg += a;
    if (deg * n_alpha > max_degree) continue;  // power exceeds the window
    instances.push_back(root_vector_power_with(calc, alpha, n_alpha));
  }
  for (int i = 0; i < ctx->rank(); ++i)
    for (int j = 0; j < ctx->rank(); ++j)
      if (i != j) instances.push_back(quantum_serre(ctx, i, j));
  for (auto& inst : special_relations(ctx)) instances.push_back(std::move(inst));

  for (auto& inst : instances) {
    RelationVerdict v{std::move(inst), std::nullopt};
    RelationInstance& r = v.instance;
    if (r.applicable && !r.element.is_zero() && r.total_degree() <= max_degree) {
      v.in_ideal = calc.in_ideal(r.element);
      if (!*v.in_ideal) rep.all_applicable_in_ideal = false;
    }
    rep.relations.push_back(std::move(v));
  }
  std::set<std::string> seen_elements;
  std::vector<const RelationInstance*> quotient_relations;
  for (const auto& v : rep.relations) {
    const RelationInstance& kept = v.instance;
    if (kept.applicable && !kept.element.is_zero() && kept.total_degree() <= max_degree &&
        seen_elements.insert(kept.element.to_string()).second)
      quotient_relations.push_back(&kept);
  }

  // Degreewise spanning closure of the two-sided ideal generated by the
  // relations, blocked by multidegree.
  for (long long d = 0; d <= max_degree; ++d) {
    DimensionRow row;
    row.degree = d;
    row.dim_tensor = calc.pow_theta(d);
    row.dim_nichols = calc.nichols_dim_total(d);

    std::map<std::vector<long long>, CycEchelon> blocks;
    std::map<std::vector<long long>, std::map<Word, size_t>> block_index;
    for (const RelationInstance* r : quotient_relations) {
      long long dr = r->total_degree();
      if (dr > d) continue;
      std::vector<long long> rdeg = r->degree();
      for (long long la = 0; la + dr <= d; ++la) {
        long long lb = d - dr - la;
        for (const auto& adeg : compositions(la, ctx->rank()))
          for (const Word& a : words_of_multidegree(adeg))
            for (const auto& bdeg : compositions(lb, ctx->rank()))
              for (const Word& bw : words_of_multidegree(bdeg)) {
                std::vector<long long> md(ctx->rank());
                for (int t = 0; t < ctx->rank(); ++t) md[t] = adeg[t] + rdeg[t] + bdeg[t];
                auto& index = block_index[md];
                if (index.empty()) {
                  auto words = words_of_multidegree(md);
                  for (size_t i = 0; i < words.size(); ++i) index.emplace(words[i], i);
                }
                std::vector<CycNumber> vec(index.size(), CycNumber(0));
                for (const auto& [w, c] : r->element.terms()) {
                  Word full = a;
                  full.insert(full.end(), w.begin(), w.end());
                  full.insert(full.end(), bw.begin(), bw.end());
                  vec[index.at(full)] += c;
                }
                blocks[md].insert(std::move(vec));
              }
      }
    }
    long long ideal_dim = 0;
    for (const auto& [md, ech] : blocks) ideal_dim += ech.rank();
    row.dim_quotient = row.dim_tensor - ideal_dim;
    if (row.dim_quotient != row.dim_nichols) rep.dims_match = false;
    rep.dims.push_back(row);
  }

  rep.pbw = pbw_dimension(ctx, max_points);
  return rep;
}

}  // namespace braidkit
