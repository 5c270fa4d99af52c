#include "braidkit/lifting.hpp"

#include <algorithm>
#include <stdexcept>

namespace braidkit {

AbelianGroup::AbelianGroup(std::vector<long long> orders) : factors(std::move(orders)) {
  for (long long n : factors)
    if (n < 1) throw std::invalid_argument("AbelianGroup: factor orders must be positive");
}

AbelianGroup::Element AbelianGroup::normalized(Element e) const {
  if (e.size() != factors.size()) throw std::invalid_argument("AbelianGroup: element size mismatch");
  for (size_t t = 0; t < factors.size(); ++t) {
    e[t] %= factors[t];
    if (e[t] < 0) e[t] += factors[t];
  }
  return e;
}

AbelianGroup::Element AbelianGroup::mul(const Element& a, const Element& b) const {
  Element r(factors.size());
  for (size_t t = 0; t < factors.size(); ++t) r[t] = a[t] + b[t];
  return normalized(std::move(r));
}

AbelianGroup::Element AbelianGroup::power(const Element& a, long long n) const {
  Element r(factors.size());
  for (size_t t = 0; t < factors.size(); ++t) r[t] = (a[t] % factors[t]) * (n % factors[t]);
  return normalized(std::move(r));
}

RootOfUnity Character::eval(const AbelianGroup&, const AbelianGroup::Element& e) const {
  RootOfUnity r;
  for (size_t t = 0; t < values.size(); ++t) r = r * values[t].pow(e[t]);
  return r;
}

bool Character::is_trivial() const {
  return std::all_of(values.begin(), values.end(),
                     [](const RootOfUnity& v) { return v.is_one(); });
}

Character Character::power(long long n) const {
  Character r;
  r.values.reserve(values.size());
  for (const auto& v : values) r.values.push_back(v.pow(n));
  return r;
}

Character Character::times(const Character& o) const {
  if (values.size() != o.values.size())
    throw std::invalid_argument("Character: size mismatch");
  Character r;
  r.values.reserve(values.size());
  for (size_t t = 0; t < values.size(); ++t) r.values.push_back(values[t] * o.values[t]);
  return r;
}

BraidingMatrix YDDatum::braiding() const {
  std::vector<std::vector<RootOfUnity>> q(rank(), std::vector<RootOfUnity>(rank()));
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) q[i][j] = chi[j].eval(group, g[i]);
  return BraidingMatrix(std::move(q));
}

void YDDatum::validate() const {
  if (g.size() != chi.size()) throw std::invalid_argument("YDDatum: rank mismatch");
  for (const auto& e : g)
    if (e.size() != group.factors.size())
      throw std::invalid_argument("YDDatum: group element size mismatch");
  for (const auto& c : chi) {
    if (c.values.size() != group.factors.size())
      throw std::invalid_argument("YDDatum: character size mismatch");
    for (size_t t = 0; t < c.values.size(); ++t)
      if (group.factors[t] % c.values[t].order() != 0)
        throw std::invalid_argument(
            "YDDatum: character value order does not divide the factor order");
  }
}

YDDatum realize(const BraidingMatrix& b) {
  long long l = b.conductor();
  int n = b.rank();
  YDDatum d{AbelianGroup(std::vector<long long>(n, l)), {}, {}};
  for (int i = 0; i < n; ++i) {
    AbelianGroup::Element e(n, 0);
    e[i] = 1;
    d.g.push_back(std::move(e));
  }
  for (int j = 0; j < n; ++j) {
    Character c;
    for (int i = 0; i < n; ++i) c.values.push_back(b.at(i, j));
    d.chi.push_back(std::move(c));
  }
  d.validate();
  return d;
}

std::optional<ChiGPair> chi_g_pair(const YDDatum& d, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= d.rank() || j >= d.rank())
    throw std::invalid_argument("chi_g_pair: need distinct vertices in range");
  BraidingMatrix b = d.braiding();
  auto m = m_entry(b, i, j);
  if (!m.has_value()) return std::nullopt;
  ChiGPair out{d.chi[i].power(*m + 1).times(d.chi[j]),
               d.group.mul(d.group.power(d.g[i], *m + 1), d.g[j]), *m};
  return out;
}

DistinctnessResult lemma_distinct(const YDDatum& d, int i, int j) {
  auto pair = chi_g_pair(d, i, j);
  if (!pair.has_value())
    return {DistinctnessResult::Status::NotApplicable, -1, "m_ij is undefined"};
  BraidingMatrix b = d.braiding();
  if (b.at(i, i).pow(pair->m + 1).is_one())
    return {DistinctnessResult::Status::NotApplicable, -1, "q_ii^{m+1} = 1"};
  for (int l = 0; l < d.rank(); ++l)
    if (pair->chi == d.chi[l] && pair->g == d.g[l])
      return {DistinctnessResult::Status::Collision, l,
              "matches the datum of vertex " + std::to_string(l + 1)};
  return {DistinctnessResult::Status::Distinct, -1, ""};
}

std::string lift_case_name(LiftCase c) {
  switch (c) {
    case LiftCase::c1i: return "1i";
    case LiftCase::c1ii: return "1ii";
    case LiftCase::c2i: return "2i";
    case LiftCase::c2ii: return "2ii";
    case LiftCase::c3i: return "3i";
    case LiftCase::c3ii: return "3ii";
    case LiftCase::c3iii: return "3iii";
    case LiftCase::c3iv: return "3iv";
    case LiftCase::c4i: return "4i";
  }
  return "?";
}

std::string lift_status_name(LiftStatus s) {
  switch (s) {
    case LiftStatus::ForcedZero: return "forced-zero";
    case LiftStatus::Liftable: return "liftable";
    case LiftStatus::Mismatch: return "mismatch";
    case LiftStatus::NotApplicable: return "not-applicable";
  }
  return "?";
}

namespace {

// The nine liftable patterns, as (m, 2x2 matrix) predicates.  Every pattern
// has rows (q_ii, q_ij) = (q_ji, q_jj), which is forced by triviality of
// chi_ij together with q_ii^m q_ij q_ji = 1.
std::optional<LiftCase> match_case(long long m, const RootOfUnity q[2][2]) {
  const RootOfUnity &qii = q[0][0], &qij = q[0][1], &qji = q[1][0], &qjj = q[1][1];
  if (!(qji == qii) || !(qjj == qij)) return std::nullopt;
  long long ord = qii.order();
  auto is = [&](const RootOfUnity& a, const RootOfUnity& b) { return a == b; };

  switch (m) {
    case 3:
      if (ord == 7 && is(qij, qii.pow(3))) return LiftCase::c1i;
      if (ord == 8 && is(qij, RootOfUnity::minus_one())) return LiftCase::c1ii;
      return std::nullopt;
    case 2:
      if (ord == 5 && is(qij, qii.pow(2))) return LiftCase::c2i;
      if (ord == 6 && is(qij, RootOfUnity::minus_one())) return LiftCase::c2ii;
      return std::nullopt;
    case 1: {
      if (ord == 4 && is(qij, RootOfUnity::minus_one())) return LiftCase::c3ii;
      if (ord == 6) {
        // q_ii = -xi with xi a primitive cube root and q_ij = xi
        RootOfUnity xi = qii * RootOfUnity::minus_one();
        if (xi.order() == 3 && is(qij, xi)) return LiftCase::c3iii;
        return std::nullopt;
      }
      if (ord == 8 && is(qij, qii.pow(-2))) return LiftCase::c3iv;
      if (ord % 2 == 1 && ord >= 3) {
        // q_jj primitive of odd order 2m'+1 with q_ii = q_jj^{m'}
        long long mprime = (qij.order() - 1) / 2;
        if (qij.order() == 2 * mprime + 1 && mprime >= 1 && is(qii, qij.pow(mprime)))
          return LiftCase::c3i;
        return std::nullopt;
      }
      return std::nullopt;
    }
    case 0:
      if (ord > 1 && is(qij, qii.inverse())) return LiftCase::c4i;
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

}  // namespace

LiftVerdict lifting_case(const YDDatum& d, int i, int j) {
  LiftVerdict v{LiftStatus::NotApplicable, std::nullopt, {}, -1, ""};
  if (i == j || i < 0 || j < 0 || i >= d.rank() || j >= d.rank()) {
    v.reason = "need distinct vertices in range";
    return v;
  }
  BraidingMatrix b = d.braiding();
  v.q_sub[0][0] = b.at(i, i);
  v.q_sub[0][1] = b.at(i, j);
  v.q_sub[1][0] = b.at(j, i);
  v.q_sub[1][1] = b.at(j, j);

  auto pair = chi_g_pair(d, i, j);
  if (!pair.has_value()) {
    v.reason = "m_ij is undefined";
    return v;
  }
  v.m = pair->m;
  if (b.at(i, i).pow(v.m + 1).is_one()) {
    v.reason = "q_ii^{m+1} = 1";
    return v;
  }
  if (!pair->chi.is_trivial()) {
    v.status = LiftStatus::ForcedZero;
    v.reason = "chi_ij is nontrivial";
    return v;
  }
  auto c = match_case(v.m, v.q_sub);
  if (c.has_value()) {
    v.status = LiftStatus::Liftable;
    v.case_id = c;
    v.reason = "";
  } else {
    v.status = LiftStatus::Mismatch;
    v.reason = "chi_ij is trivial but no listed pattern matches";
  }
  return v;
}

std::vector<ScanRow> scan_liftable(long long n_max, int max_points) {
  if (n_max < 2) throw std::invalid_argument("scan_liftable: n_max must be >= 2");

  std::vector<RootOfUnity> roots;
  for (long long den = 1; den <= n_max; ++den)
    for (long long num = 0; num < den; ++num)
      if (gcd_ll(num, den) == 1) roots.push_back(RootOfUnity(num, den));
  std::sort(roots.begin(), roots.end());

  std::vector<ScanRow> out;

  for (const auto& q11 : roots)
    for (const auto& q22 : roots)
      for (const auto& p : roots) {
        // one representative per twist class: vertex swap gives the same
        // diagram, so only process the ordered diagonal
        if (q22 < q11) continue;

        // cheap pruning: both m-entries must exist and be at most 3 for a
        // finite rank-2 Cartan matrix
        auto m12 = m_entry_from(q11, p);
        auto m21 = m_entry_from(q22, p);
        if (!m12.has_value() || !m21.has_value()) continue;
        if (*m12 > 3 || *m21 > 3 || (*m12) * (*m21) > 3) continue;

        BraidingMatrix rep = BraidingMatrix::rank2_class(q11, q22, p);
        StandardnessResult st = is_standard(rep, max_points);
        if (!st.is_standard() || !cartan_type(*st.cartan).finite) continue;

        const RootOfUnity qd[2] = {q11, q22};
        const long long mm[2][2] = {{2, *m12}, {*m21, 2}};
        for (int i = 0; i < 2; ++i) {
          int j = 1 - i;
          long long m = mm[i][j];
          if (qd[i].pow(m + 1).is_one()) continue;
          // unique realization with chi_ij(g_i) = 1: q_ij = q_ii^{-(m+1)}
          RootOfUnity qij = qd[i].pow(-(m + 1));
          RootOfUnity qji = p * qij.inverse();
          if (qij.order() > n_max || qji.order() > n_max) continue;
          BraidingMatrix realized =
              (i == 0) ? BraidingMatrix::rank2(q11, qij, qji, q22)
                       : BraidingMatrix::rank2(q11, qji, qij, q22);
          YDDatum datum = realize(realized);
          ScanRow row{realized, i, j, lifting_case(datum, i, j), lemma_distinct(datum, i, j)};
          out.push_back(std::move(row));
        }
      }
  return out;
}

}  // namespace braidkit
