#include "braidkit/braiding.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace braidkit {

BraidingMatrix::BraidingMatrix(std::vector<std::vector<RootOfUnity>> entries)
    : q(std::move(entries)) {
  for (const auto& row : q)
    if (row.size() != q.size())
      throw std::invalid_argument("BraidingMatrix: matrix must be square");
}

BraidingMatrix BraidingMatrix::rank1(const RootOfUnity& q11) {
  return BraidingMatrix({{q11}});
}

BraidingMatrix BraidingMatrix::rank2(const RootOfUnity& q11, const RootOfUnity& q12,
                                     const RootOfUnity& q21, const RootOfUnity& q22) {
  return BraidingMatrix({{q11, q12}, {q21, q22}});
}

BraidingMatrix BraidingMatrix::rank2_class(const RootOfUnity& q11,
                                           const RootOfUnity& q22,
                                           const RootOfUnity& p12) {
  return BraidingMatrix({{q11, p12}, {RootOfUnity::one(), q22}});
}

RootOfUnity BraidingMatrix::bicharacter(const std::vector<mpz_class>& a,
                                        const std::vector<mpz_class>& b) const {
  RootOfUnity r;
  for (int i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) {
      if (b[j] == 0) continue;
      mpz_class e = a[i] * b[j];
      long long den = q[i][j].order();
      mpz_class em = e % static_cast<long>(den);
      r = r * q[i][j].pow(em.get_si());
    }
  }
  return r;
}

RootOfUnity BraidingMatrix::bicharacter(const std::vector<long long>& a,
                                        const std::vector<long long>& b) const {
  std::vector<mpz_class> az(a.size()), bz(b.size());
  for (size_t i = 0; i < a.size(); ++i) az[i] = static_cast<long>(a[i]);
  for (size_t i = 0; i < b.size(); ++i) bz[i] = static_cast<long>(b[i]);
  return bicharacter(az, bz);
}

long long BraidingMatrix::conductor() const {
  long long l = 1;
  for (const auto& row : q)
    for (const auto& e : row) l = lcm_ll(l, e.order());
  return l;
}

DynkinDiagram dynkin_diagram(const BraidingMatrix& b) {
  DynkinDiagram d;
  d.vertex_labels.reserve(b.rank());
  for (int i = 0; i < b.rank(); ++i) d.vertex_labels.push_back(b.at(i, i));
  for (int i = 0; i < b.rank(); ++i)
    for (int j = i + 1; j < b.rank(); ++j) {
      RootOfUnity p = b.edge_product(i, j);
      if (!p.is_one()) d.edges.push_back({i, j, p});
    }
  return d;
}

namespace {

bool diagrams_isomorphic(const DynkinDiagram& a, const DynkinDiagram& b) {
  int n = static_cast<int>(a.vertex_labels.size());
  if (b.vertex_labels.size() != a.vertex_labels.size()) return false;

  auto edge_label = [](const DynkinDiagram& d, int i, int j) -> RootOfUnity {
    for (const auto& e : d.edges)
      if ((e.i == i && e.j == j) || (e.i == j && e.j == i)) return e.label;
    return RootOfUnity::one();
  };

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      if (!(a.vertex_labels[i] == b.vertex_labels[perm[i]])) ok = false;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        if (!(edge_label(a, i, j) == edge_label(b, perm[i], perm[j]))) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

bool twist_equivalent(const BraidingMatrix& b1, const BraidingMatrix& b2) {
  if (b1.rank() != b2.rank())
    throw std::invalid_argument("twist_equivalent: rank mismatch");
  return diagrams_isomorphic(dynkin_diagram(b1), dynkin_diagram(b2));
}

std::optional<long long> m_entry_from(const RootOfUnity& qii, const RootOfUnity& p) {
  if (qii.is_one()) {
    if (p.is_one()) return 0;
    return std::nullopt;
  }
  // Membership of m is periodic with period ord(q_ii): the first factor
  // vanishes iff ord | m+1, the second iff q_ii^m = p^{-1}.
  long long ord = qii.order();
  for (long long m = 0; m < ord; ++m) {
    if ((m + 1) % ord == 0) return m;
    if ((qii.pow(m) * p).is_one()) return m;
  }
  return std::nullopt;
}

std::optional<long long> m_entry(const BraidingMatrix& b, int i, int j) {
  if (i == j) throw std::invalid_argument("m_entry: i and j must differ (m_ii = 2 is fixed)");
  return m_entry_from(b.at(i, i), b.edge_product(i, j));
}

MMatrix m_matrix(const BraidingMatrix& b) {
  int n = b.rank();
  MMatrix m(n, std::vector<std::optional<long long>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = (i == j) ? std::optional<long long>(2) : m_entry(b, i, j);
  return m;
}

bool m_fully_defined(const MMatrix& m) {
  for (const auto& row : m)
    for (const auto& e : row)
      if (!e.has_value()) return false;
  return true;
}

CartanMatrix::CartanMatrix(std::vector<std::vector<long long>> entries) : a(std::move(entries)) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != a.size())
      throw std::invalid_argument("CartanMatrix: matrix must be square");
    if (a[i][i] != 2) throw std::invalid_argument("CartanMatrix: diagonal entries must be 2");
    for (size_t j = 0; j < a.size(); ++j)
      if (i != j && a[i][j] > 0)
        throw std::invalid_argument("CartanMatrix: off-diagonal entries must be <= 0");
  }
}

CartanMatrix cartan_from_m(const MMatrix& m) {
  std::vector<std::vector<long long>> a(m.size(), std::vector<long long>(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j) {
      if (!m[i][j].has_value())
        throw std::invalid_argument("cartan_from_m: undefined m-entry");
      a[i][j] = (i == j) ? 2 : -*m[i][j];
    }
  return CartanMatrix(std::move(a));
}

GroupoidPoint initial_point(const BraidingMatrix& b) {
  int n = b.rank();
  GroupoidPoint p;
  p.basis.assign(n, std::vector<mpz_class>(n, 0));
  for (int i = 0; i < n; ++i) p.basis[i][i] = 1;
  p.q = b;
  p.m = m_matrix(b);
  return p;
}

GroupoidPoint reflect(const GroupoidPoint& p, int k) {
  int n = p.q.rank();
  if (k < 0 || k >= n) throw std::invalid_argument("reflect: vertex out of range");
  for (int j = 0; j < n; ++j)
    if (!p.m[k][j].has_value())
      throw reflection_undefined("reflect: m[" + std::to_string(k + 1) + "][" +
                                 std::to_string(j + 1) + "] is undefined");

  GroupoidPoint r;
  r.basis.assign(n, std::vector<mpz_class>(n, 0));
  for (int a = 0; a < n; ++a) {
    if (a == k) {
      for (int t = 0; t < n; ++t) r.basis[a][t] = -p.basis[k][t];
    } else {
      long long mka = *p.m[k][a];
      for (int t = 0; t < n; ++t)
        r.basis[a][t] = p.basis[a][t] + static_cast<long>(mka) * p.basis[k][t];
    }
  }

  // q' from the current q-matrix; exponents stay small because the update
  // only involves the m-row of k.
  std::vector<std::vector<RootOfUnity>> nq(n, std::vector<RootOfUnity>(n));
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      if (a == k && c == k) {
        nq[a][c] = p.q.at(k, k);
      } else if (a == k) {
        long long mkc = *p.m[k][c];
        nq[a][c] = (p.q.at(k, c) * p.q.at(k, k).pow(mkc)).inverse();
      } else if (c == k) {
        long long mka = *p.m[k][a];
        nq[a][c] = (p.q.at(a, k) * p.q.at(k, k).pow(mka)).inverse();
      } else {
        long long mka = *p.m[k][a], mkc = *p.m[k][c];
        nq[a][c] = p.q.at(a, c) * p.q.at(a, k).pow(mkc) * p.q.at(k, c).pow(mka) *
                   p.q.at(k, k).pow(mka * mkc);
      }
    }
  r.q = BraidingMatrix(std::move(nq));
  r.m = m_matrix(r.q);
  return r;
}

BraidingMatrix q_from_basis(const BraidingMatrix& original,
                            const std::vector<std::vector<mpz_class>>& basis) {
  int n = original.rank();
  std::vector<std::vector<RootOfUnity>> nq(n, std::vector<RootOfUnity>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) nq[i][j] = original.bicharacter(basis[i], basis[j]);
  return BraidingMatrix(std::move(nq));
}

namespace {

// Canonical key of (diagram of q, m) under vertex permutations.  Undefined
// m-entries are encoded as (-1, -1).
using PointKey = std::vector<std::pair<long long, long long>>;

PointKey point_key(const BraidingMatrix& q, const MMatrix& m) {
  int n = q.rank();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  PointKey best;
  do {
    PointKey cur;
    cur.reserve(n * n + n);
    for (int i = 0; i < n; ++i) {
      const RootOfUnity& v = q.at(perm[i], perm[i]);
      cur.emplace_back(v.exponent_num(), v.exponent_den());
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        RootOfUnity p = q.edge_product(perm[i], perm[j]);
        cur.emplace_back(p.exponent_num(), p.exponent_den());
      }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const auto& e = m[perm[i]][perm[j]];
        cur.emplace_back(e.has_value() ? *e : -1, -1);
      }
    if (best.empty() || cur < best) best = std::move(cur);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

struct ExplorationState {
  GroupoidExploration result;
  bool all_m_constant = true;  // every point's m defined and equal to initial
};

ExplorationState explore(const BraidingMatrix& b, int max_points, bool stop_when_nonconstant) {
  if (max_points < 1) throw std::invalid_argument("groupoid exploration: max_points must be >= 1");
  ExplorationState st;
  GroupoidPoint init = initial_point(b);
  MMatrix target = init.m;
  bool init_defined = m_fully_defined(init.m);
  if (!init_defined) st.all_m_constant = false;

  std::set<PointKey> seen;
  seen.insert(point_key(init.q, init.m));
  st.result.points.push_back(init);
  if (!st.all_m_constant && stop_when_nonconstant) return st;

  std::deque<size_t> queue{0};
  while (!queue.empty()) {
    GroupoidPoint p = st.result.points[queue.front()];
    queue.pop_front();
    for (int k = 0; k < b.rank(); ++k) {
      bool row_ok = true;
      for (int j = 0; j < b.rank(); ++j)
        if (!p.m[k][j].has_value()) row_ok = false;
      if (!row_ok) continue;
      GroupoidPoint r = reflect(p, k);
      if (!(m_fully_defined(r.m) && r.m == target)) {
        st.all_m_constant = false;
        if (stop_when_nonconstant) return st;
      }
      PointKey key = point_key(r.q, r.m);
      if (seen.count(key)) continue;
      if (static_cast<int>(st.result.points.size()) >= max_points) {
        st.result.overflow = true;
        return st;
      }
      seen.insert(std::move(key));
      st.result.points.push_back(std::move(r));
      queue.push_back(st.result.points.size() - 1);
    }
  }
  return st;
}

}  // namespace

GroupoidExploration groupoid_points(const BraidingMatrix& b, int max_points) {
  return explore(b, max_points, /*stop_when_nonconstant=*/false).result;
}

StandardnessResult is_standard(const BraidingMatrix& b, int max_points) {
  ExplorationState st = explore(b, max_points, /*stop_when_nonconstant=*/true);
  if (!st.all_m_constant) return {Standardness::NotStandard, std::nullopt};
  if (st.result.overflow) return {Standardness::Indeterminate, std::nullopt};
  return {Standardness::Standard, cartan_from_m(st.result.points.front().m)};
}

namespace {

std::vector<std::vector<int>> connected_components(const CartanMatrix& c) {
  int n = c.rank();
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::deque<int> q{s};
    comp[s] = ncomp;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int w = 0; w < n; ++w)
        if (w != v && comp[w] == -1 && c.a[v][w] != 0) {
          comp[w] = ncomp;
          q.push_back(w);
        }
    }
    ++ncomp;
  }
  std::vector<std::vector<int>> out(ncomp);
  for (int v = 0; v < n; ++v) out[comp[v]].push_back(v);
  return out;
}

// Positive definiteness of a symmetric rational matrix via leading minors.
bool positive_definite(std::vector<std::vector<mpq_class>> s) {
  int n = static_cast<int>(s.size());
  for (int k = 0; k < n; ++k) {
    if (s[k][k] <= 0) return false;
    for (int i = k + 1; i < n; ++i) {
      mpq_class f = s[i][k] / s[k][k];
      for (int j = k; j < n; ++j) s[i][j] -= f * s[k][j];
    }
  }
  return true;
}

// Classify one connected component; empty string when not of finite type.
std::string classify_component(const CartanMatrix& c, const std::vector<int>& verts) {
  int n = static_cast<int>(verts.size());
  if (n == 1) return "A1";

  auto a = [&](int i, int j) { return c.a[verts[i]][verts[j]]; };

  // Symmetrizer d_i > 0 with d_i a_ij = d_j a_ji, normalized to min 1.
  std::vector<mpq_class> d(n, 0);
  d[0] = 1;
  std::deque<int> q{0};
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w = 0; w < n; ++w) {
      if (w == v || a(v, w) == 0) continue;
      mpq_class dw = d[v] * static_cast<long>(a(v, w)) / static_cast<long>(a(w, v));
      if (d[w] == 0) {
        d[w] = dw;
        q.push_back(w);
      } else if (d[w] != dw) {
        return "";  // not symmetrizable
      }
    }
  }

  std::vector<std::vector<mpq_class>> sym(n, std::vector<mpq_class>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sym[i][j] = d[i] * static_cast<long>(a(i, j));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (sym[i][j] != sym[j][i]) return "";
  if (!positive_definite(sym)) return "";

  // Edge weights a_ij a_ji and vertex degrees.
  std::vector<int> degree(n, 0);
  std::vector<std::pair<int, int>> edges;
  int nedges = 0;
  long long maxw = 0;
  int w2count = 0, w3count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (a(i, j) == 0) continue;
      long long w = a(i, j) * a(j, i);
      maxw = std::max(maxw, w);
      if (w == 2) ++w2count;
      if (w == 3) ++w3count;
      edges.emplace_back(i, j);
      ++degree[i];
      ++degree[j];
      ++nedges;
    }
  if (nedges != n - 1) return "";  // cycles cannot be positive definite anyway
  if (maxw >= 4) return "";

  int branch = -1, maxdeg = 0;
  for (int i = 0; i < n; ++i) {
    maxdeg = std::max(maxdeg, degree[i]);
    if (degree[i] == 3) branch = i;
  }
  if (maxdeg > 3) return "";
  int nbranch = 0;
  for (int i = 0; i < n; ++i)
    if (degree[i] == 3) ++nbranch;
  if (nbranch > 1) return "";

  if (w3count > 0) {
    if (n == 2 && w3count == 1) return "G2";
    return "";
  }

  if (w2count == 0) {
    // Simply laced: path or a single degree-3 branch.
    if (branch == -1) return "A" + std::to_string(n);
    std::vector<int> arms;
    for (int s = 0; s < n; ++s) {
      if (s == branch || a(branch, s) == 0) continue;
      int len = 1, prev = branch, cur = s;
      while (true) {
        int next = -1;
        for (int t = 0; t < n; ++t)
          if (t != prev && t != cur && a(cur, t) != 0) next = t;
        if (next == -1) break;
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms.size() != 3) return "";
    if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(n);
    if (arms[0] == 1 && arms[1] == 2 && arms[2] == 2) return "E6";
    if (arms[0] == 1 && arms[1] == 2 && arms[2] == 3) return "E7";
    if (arms[0] == 1 && arms[1] == 2 && arms[2] == 4) return "E8";
    return "";
  }

  if (w2count == 1 && branch == -1) {
    if (n == 2) return "B2";
    // Root lengths from the symmetrizer decide B vs C vs F4.
    mpq_class dmin = d[0], dmax = d[0];
    for (const auto& x : d) {
      dmin = std::min(dmin, x);
      dmax = std::max(dmax, x);
    }
    int nshort = 0;
    for (const auto& x : d)
      if (x == dmin) ++nshort;
    if (n == 4 && nshort == 2) {
      // F4 has the doubled edge in the middle of the path.
      for (auto [i, j] : edges)
        if (a(i, j) * a(j, i) == 2 && degree[i] == 2 && degree[j] == 2) return "F4";
      return "";
    }
    if (nshort == 1) return "B" + std::to_string(n);
    if (nshort == n - 1) return "C" + std::to_string(n);
    return "";
  }
  return "";
}

}  // namespace

std::string CartanClassification::to_string() const {
  if (!finite) return "not finite";
  std::string s;
  for (size_t i = 0; i < components.size(); ++i) {
    if (i) s += " x ";
    s += components[i].type;
  }
  return s;
}

CartanClassification cartan_type(const CartanMatrix& c) {
  CartanClassification out;
  // Asymmetric zero patterns are reported as not of finite type.
  for (int i = 0; i < c.rank(); ++i)
    for (int j = 0; j < c.rank(); ++j)
      if ((c.a[i][j] == 0) != (c.a[j][i] == 0)) return out;

  for (auto& comp : connected_components(c)) {
    std::string type = classify_component(c, comp);
    if (type.empty()) return CartanClassification{};
    out.components.push_back({std::move(type), std::move(comp)});
  }
  out.finite = true;
  return out;
}

std::vector<std::vector<long long>> positive_roots(const CartanMatrix& c) {
  if (!cartan_type(c).finite)
    throw std::invalid_argument("positive_roots: Cartan matrix is not of finite type");
  int n = c.rank();
  std::set<std::vector<long long>> roots;
  std::vector<std::vector<long long>> frontier;
  for (int i = 0; i < n; ++i) {
    std::vector<long long> e(n, 0);
    e[i] = 1;
    roots.insert(e);
    frontier.push_back(std::move(e));
  }
  // Height-by-height closure via root strings: beta + e_i is a root iff
  // p - <beta, alpha_i^vee> > 0 where p is the depth of the string below.
  while (!frontier.empty()) {
    std::vector<std::vector<long long>> next;
    for (const auto& beta : frontier) {
      for (int i = 0; i < n; ++i) {
        long long pairing = 0;
        for (int j = 0; j < n; ++j) pairing += c.a[i][j] * beta[j];
        long long p = 0;
        std::vector<long long> down = beta;
        while (true) {
          down[i] -= 1;
          bool zero = std::all_of(down.begin(), down.end(), [](long long v) { return v == 0; });
          if (zero || down[i] < 0 || !roots.count(down)) break;
          ++p;
        }
        if (p - pairing > 0) {
          std::vector<long long> up = beta;
          up[i] += 1;
          if (roots.insert(up).second) next.push_back(std::move(up));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::vector<long long>> out(roots.begin(), roots.end());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    long long hx = std::accumulate(x.begin(), x.end(), 0LL);
    long long hy = std::accumulate(y.begin(), y.end(), 0LL);
    if (hx != hy) return hx < hy;
    return x < y;
  });
  return out;
}

RootOfUnity root_scalar(const BraidingMatrix& b, const std::vector<long long>& alpha) {
  if (static_cast<int>(alpha.size()) != b.rank())
    throw std::invalid_argument("root_scalar: dimension mismatch");
  return b.bicharacter(alpha, alpha);
}

long long root_order(const BraidingMatrix& b, const std::vector<long long>& alpha) {
  return root_scalar(b, alpha).order();
}

namespace {

std::vector<RootOfUnity> roots_of_order_dividing_or_minus_one(long long order) {
  std::vector<RootOfUnity> out;
  for (long long k = 0; k < order; ++k) out.push_back(RootOfUnity(k, order));
  RootOfUnity minus = RootOfUnity::minus_one();
  if (std::find(out.begin(), out.end(), minus) == out.end()) out.push_back(minus);
  std::sort(out.begin(), out.end());
  return out;
}

using ClassKey = std::array<std::pair<long long, long long>, 3>;

ClassKey class_key(const RootOfUnity& q11, const RootOfUnity& q22, const RootOfUnity& p) {
  return {std::make_pair(q11.exponent_num(), q11.exponent_den()),
          std::make_pair(q22.exponent_num(), q22.exponent_den()),
          std::make_pair(p.exponent_num(), p.exponent_den())};
}

// Canonical representative under vertex swap and simultaneous Galois
// conjugation of the three labels.
ClassKey canonical_class_key(const RootOfUnity& q11, const RootOfUnity& q22,
                             const RootOfUnity& p) {
  long long l = lcm_ll(lcm_ll(q11.order(), q22.order()), p.order());
  ClassKey best = class_key(q11, q22, p);
  for (long long t = 1; t < std::max<long long>(l, 2); ++t) {
    if (gcd_ll(t, l) != 1) continue;
    RootOfUnity a = q11.pow(t), b = q22.pow(t), pp = p.pow(t);
    best = std::min(best, class_key(a, b, pp));
    best = std::min(best, class_key(b, a, pp));
  }
  return best;
}

}  // namespace

std::vector<Rank2Class> enumerate_rank2_diagrams(long long order, int max_points) {
  if (order < 1) throw std::invalid_argument("enumerate_rank2_diagrams: order must be positive");
  std::vector<RootOfUnity> universe = roots_of_order_dividing_or_minus_one(order);
  std::set<ClassKey> seen;
  std::vector<Rank2Class> out;
  for (const auto& q11 : universe)
    for (const auto& q22 : universe)
      for (const auto& p : universe) {
        ClassKey key = canonical_class_key(q11, q22, p);
        if (!seen.insert(key).second) continue;
        Rank2Class cls;
        cls.q11 = RootOfUnity(key[0].first, key[0].second);
        cls.q22 = RootOfUnity(key[1].first, key[1].second);
        cls.p = RootOfUnity(key[2].first, key[2].second);
        cls.standard =
            is_standard(BraidingMatrix::rank2_class(cls.q11, cls.q22, cls.p), max_points);
        out.push_back(std::move(cls));
      }
  std::sort(out.begin(), out.end(), [](const Rank2Class& a, const Rank2Class& b) {
    return class_key(a.q11, a.q22, a.p) < class_key(b.q11, b.q22, b.p);
  });
  return out;
}

}  // namespace braidkit
