#include "braidkit/tensoralgebra.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace braidkit {

std::vector<long long> multidegree(const Word& w, int rank) {
  std::vector<long long> deg(rank, 0);
  for (int a : w) {
    if (a < 0 || a >= rank) throw std::invalid_argument("multidegree: letter out of range");
    ++deg[a];
  }
  return deg;
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ".";
    s += "x" + std::to_string(w[i] + 1);
  }
  return s;
}

RootOfUnity braid_factor(const BraidingMatrix& b, const Word& u, const Word& v) {
  RootOfUnity r;
  for (int a : u)
    for (int c : v) r = r * b.at(a, c);
  return r;
}

std::pair<RootOfUnity, std::pair<Word, Word>> braid_swap(const BraidingMatrix& b,
                                                         const Word& u, const Word& v) {
  return {braid_factor(b, u, v), {v, u}};
}

void require_same_context(const BraidingPtr& a, const BraidingPtr& b) {
  if (!a || !b) throw std::invalid_argument("missing braiding context");
  if (a == b) return;
  if (!(*a == *b)) throw std::invalid_argument("mismatched braiding contexts");
}

NCPoly::NCPoly(BraidingPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw std::invalid_argument("NCPoly: missing braiding context");
}

NCPoly NCPoly::unit(BraidingPtr ctx) { return monomial(std::move(ctx), {}); }

NCPoly NCPoly::generator(BraidingPtr ctx, int i) {
  if (i < 0 || i >= ctx->rank()) throw std::invalid_argument("NCPoly::generator: index out of range");
  return monomial(std::move(ctx), {i});
}

NCPoly NCPoly::monomial(BraidingPtr ctx, Word w, CycNumber coeff) {
  NCPoly p(std::move(ctx));
  p.add_term(w, coeff);
  return p;
}

void NCPoly::add_term(const Word& w, const CycNumber& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  require_same_context(ctx_, o.ctx_);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  require_same_context(ctx_, o.ctx_);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const NCPoly& o) {
  require_same_context(ctx_, o.ctx_);
  NCPoly r(ctx_);
  for (const auto& [u, cu] : terms_)
    for (const auto& [v, cv] : o.terms_) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      r.add_term(w, cu * cv);
    }
  *this = std::move(r);
  return *this;
}

NCPoly NCPoly::operator-() const {
  NCPoly r(ctx_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

NCPoly operator*(const CycNumber& c, NCPoly p) {
  NCPoly r(p.ctx_);
  if (!c.is_zero())
    for (const auto& [w, t] : p.terms_) r.add_term(w, c * t);
  return r;
}

NCPoly operator*(const RootOfUnity& c, NCPoly p) { return CycNumber::embed(c) * std::move(p); }

bool operator==(const NCPoly& a, const NCPoly& b) {
  require_same_context(a.ctx_, b.ctx_);
  return a.terms_ == b.terms_;
}

long long NCPoly::homogeneous_degree() const {
  if (terms_.empty()) return -1;
  long long n = static_cast<long long>(terms_.begin()->first.size());
  for (const auto& [w, c] : terms_)
    if (static_cast<long long>(w.size()) != n)
      throw std::invalid_argument("NCPoly: not homogeneous");
  return n;
}

std::string NCPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.to_string() + " * " + word_to_string(w);
  }
  return s;
}

NCPoly braided_commutator(const NCPoly& x, const NCPoly& y) {
  require_same_context(x.context(), y.context());
  const BraidingMatrix& b = *x.context();
  NCPoly r(x.context());
  for (const auto& [u, cu] : x.terms())
    for (const auto& [v, cv] : y.terms()) {
      CycNumber c = cu * cv;
      Word uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      r.add_term(uv, c);
      Word vu = v;
      vu.insert(vu.end(), u.begin(), u.end());
      r.add_term(vu, -(braid_factor(b, u, v) * c));
    }
  return r;
}

NCPoly ad_c_power(int i, long long n, const NCPoly& y) {
  if (n < 0) throw std::invalid_argument("ad_c_power: n must be nonnegative");
  NCPoly xi = NCPoly::generator(y.context(), i);
  NCPoly r = y;
  for (long long k = 0; k < n; ++k) r = braided_commutator(xi, r);
  return r;
}

bool is_lyndon(const Word& u) {
  if (u.empty()) return false;
  for (size_t k = 1; k < u.size(); ++k) {
    Word suffix(u.begin() + k, u.end());
    if (!(u < suffix)) return false;
  }
  return true;
}

std::pair<Word, Word> shirshov(const Word& u) {
  if (u.size() < 2) throw std::invalid_argument("shirshov: word must have length >= 2");
  if (!is_lyndon(u)) throw std::invalid_argument("shirshov: word is not Lyndon");
  bool found = false;
  std::pair<Word, Word> best;
  for (size_t k = 1; k < u.size(); ++k) {
    Word v(u.begin(), u.begin() + k), w(u.begin() + k, u.end());
    if (!is_lyndon(v) || !is_lyndon(w)) continue;
    if (!found || w < best.second) {
      best = {std::move(v), std::move(w)};
      found = true;
    }
  }
  if (!found) throw std::logic_error("shirshov: no admissible factorization");
  return best;
}

NCPoly hyperletter(BraidingPtr ctx, const Word& u) {
  if (!is_lyndon(u)) throw std::invalid_argument("hyperletter: word is not Lyndon");
  if (u.size() == 1) return NCPoly::generator(std::move(ctx), u[0]);
  auto [v, w] = shirshov(u);
  return braided_commutator(hyperletter(ctx, v), hyperletter(ctx, w));
}

TensorElement::TensorElement(BraidingPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw std::invalid_argument("TensorElement: missing braiding context");
}

TensorElement TensorElement::simple(BraidingPtr ctx, Word left, Word right, CycNumber coeff) {
  TensorElement t(std::move(ctx));
  t.add_term(left, right, coeff);
  return t;
}

void TensorElement::add_term(const Word& l, const Word& r, const CycNumber& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(l, r);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  require_same_context(ctx_, o.ctx_);
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  require_same_context(ctx_, o.ctx_);
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

TensorElement& TensorElement::operator*=(const TensorElement& o) {
  require_same_context(ctx_, o.ctx_);
  const BraidingMatrix& bm = *ctx_;
  TensorElement r(ctx_);
  for (const auto& [ab, c1] : terms_)
    for (const auto& [cd, c2] : o.terms_) {
      RootOfUnity swap = braid_factor(bm, ab.second, cd.first);
      Word l = ab.first;
      l.insert(l.end(), cd.first.begin(), cd.first.end());
      Word rt = ab.second;
      rt.insert(rt.end(), cd.second.begin(), cd.second.end());
      r.add_term(l, rt, swap * (c1 * c2));
    }
  *this = std::move(r);
  return *this;
}

bool operator==(const TensorElement& a, const TensorElement& b) {
  require_same_context(a.ctx_, b.ctx_);
  return a.terms_ == b.terms_;
}

TensorElement coproduct(const NCPoly& p) {
  const BraidingMatrix& b = *p.context();
  TensorElement out(p.context());
  for (const auto& [w, c] : p.terms()) {
    size_t n = w.size();
    if (n > 62) throw std::invalid_argument("coproduct: word too long");
    // Delta(w) = sum over subsets S of positions going to the left factor;
    // the scalar collects q_{w_i w_j} for every crossing i < j with i on the
    // right and j on the left.
    for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
      Word left, right;
      RootOfUnity scalar;
      for (size_t j = 0; j < n; ++j) {
        if (mask & (1ULL << j)) {
          for (size_t i = 0; i < j; ++i)
            if (!(mask & (1ULL << i))) scalar = scalar * b.at(w[i], w[j]);
          left.push_back(w[j]);
        } else {
          right.push_back(w[j]);
        }
      }
      out.add_term(left, right, scalar * c);
    }
  }
  return out;
}

std::vector<std::vector<long long>> compositions(long long n, int parts) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur(parts, 0);
  std::function<void(int, long long)> rec = [&](int idx, long long rest) {
    if (idx == parts - 1) {
      cur[idx] = rest;
      out.push_back(cur);
      return;
    }
    for (long long k = 0; k <= rest; ++k) {
      cur[idx] = k;
      rec(idx + 1, rest - k);
    }
  };
  if (parts == 0) {
    if (n == 0) out.push_back({});
    return out;
  }
  rec(0, n);
  return out;
}

std::vector<Word> words_of_multidegree(const std::vector<long long>& deg) {
  Word sorted;
  for (size_t a = 0; a < deg.size(); ++a)
    for (long long k = 0; k < deg[a]; ++k) sorted.push_back(static_cast<int>(a));
  std::vector<Word> out;
  do {
    out.push_back(sorted);
  } while (std::next_permutation(sorted.begin(), sorted.end()));
  std::sort(out.begin(), out.end());
  return out;
}

void CycEchelon::reduce(std::vector<CycNumber>& v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    size_t pc = pivots_[r];
    if (pc >= v.size()) continue;
    if (v[pc].is_zero()) continue;
    CycNumber f = v[pc];
    for (size_t j = pc; j < v.size(); ++j)
      if (!rows_[r][j].is_zero()) v[j] -= f * rows_[r][j];
  }
}

bool CycEchelon::insert(std::vector<CycNumber> v) {
  reduce(v);
  size_t pc = v.size();
  for (size_t j = 0; j < v.size(); ++j)
    if (!v[j].is_zero()) {
      pc = j;
      break;
    }
  if (pc == v.size()) return false;
  CycNumber inv = v[pc].inverse();
  for (size_t j = pc; j < v.size(); ++j)
    if (!v[j].is_zero()) v[j] *= inv;
  // keep rows ordered by pivot so reduce() is one pass
  size_t at = rows_.size();
  for (size_t r = 0; r < rows_.size(); ++r)
    if (pivots_[r] > pc) {
      at = r;
      break;
    }
  rows_.insert(rows_.begin() + at, std::move(v));
  pivots_.insert(pivots_.begin() + at, pc);
  return true;
}

bool CycEchelon::in_span(std::vector<CycNumber> v) const {
  reduce(v);
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

std::vector<std::vector<CycNumber>> kernel_of_columns(
    const std::vector<std::vector<CycNumber>>& cols) {
  size_t ncols = cols.size();
  if (ncols == 0) return {};
  size_t nrows = cols[0].size();
  // row-major copy
  std::vector<std::vector<CycNumber>> a(nrows, std::vector<CycNumber>(ncols));
  for (size_t j = 0; j < ncols; ++j) {
    if (cols[j].size() != nrows) throw std::invalid_argument("kernel_of_columns: ragged input");
    for (size_t i = 0; i < nrows; ++i) a[i][j] = cols[j][i];
  }
  // reduced row echelon form
  std::vector<size_t> pivot_cols;
  size_t r = 0;
  for (size_t c = 0; c < ncols && r < nrows; ++c) {
    size_t sel = nrows;
    for (size_t i = r; i < nrows; ++i)
      if (!a[i][c].is_zero()) {
        sel = i;
        break;
      }
    if (sel == nrows) continue;
    std::swap(a[r], a[sel]);
    CycNumber inv = a[r][c].inverse();
    for (size_t j = c; j < ncols; ++j)
      if (!a[r][j].is_zero()) a[r][j] *= inv;
    for (size_t i = 0; i < nrows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      CycNumber f = a[i][c];
      for (size_t j = c; j < ncols; ++j)
        if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(ncols, false);
  for (size_t c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<CycNumber>> kernel;
  for (size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<CycNumber> v(ncols, CycNumber(0));
    v[f] = CycNumber(1);
    for (size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a[i][f];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

NicholsCalculator::NicholsCalculator(BraidingPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw std::invalid_argument("NicholsCalculator: missing braiding context");
}

long long NicholsCalculator::pow_theta(long long n) const {
  long long r = 1;
  for (long long i = 0; i < n; ++i) r *= ctx_->rank();
  return r;
}

const std::map<Word, CycNumber>& NicholsCalculator::omega(const Word& w) {
  auto it = omega_cache_.find(w);
  if (it != omega_cache_.end()) return it->second;

  std::map<Word, CycNumber> result;
  if (w.size() <= 1) {
    result.emplace(w, CycNumber(1));
  } else {
    const BraidingMatrix& b = *ctx_;
    for (size_t k = 0; k < w.size(); ++k) {
      RootOfUnity scalar;
      for (size_t i = 0; i < k; ++i) scalar = scalar * b.at(w[i], w[k]);
      Word rest = w;
      rest.erase(rest.begin() + k);
      const auto& sub = omega(rest);
      CycNumber sc = CycNumber::embed(scalar);
      for (const auto& [u, c] : sub) {
        Word full;
        full.reserve(w.size());
        full.push_back(w[k]);
        full.insert(full.end(), u.begin(), u.end());
        auto fit = result.find(full);
        if (fit == result.end()) {
          CycNumber val = sc * c;
          if (!val.is_zero()) result.emplace(std::move(full), std::move(val));
        } else {
          fit->second += sc * c;
          if (fit->second.is_zero()) result.erase(fit);
        }
      }
    }
  }
  return omega_cache_.emplace(w, std::move(result)).first->second;
}

bool NicholsCalculator::in_ideal(const NCPoly& p) {
  require_same_context(ctx_, p.context());
  if (p.is_zero()) return true;
  p.homogeneous_degree();  // throws on mixed lengths
  std::map<Word, CycNumber> acc;
  for (const auto& [w, c] : p.terms()) {
    for (const auto& [u, s] : omega(w)) {
      auto it = acc.find(u);
      if (it == acc.end()) {
        CycNumber val = c * s;
        if (!val.is_zero()) acc.emplace(u, std::move(val));
      } else {
        it->second += c * s;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
  }
  return acc.empty();
}

long long NicholsCalculator::nichols_dim(const std::vector<long long>& deg) {
  auto it = dim_cache_.find(deg);
  if (it != dim_cache_.end()) return it->second;

  std::vector<Word> words = words_of_multidegree(deg);
  std::map<Word, size_t> index;
  for (size_t i = 0; i < words.size(); ++i) index.emplace(words[i], i);

  CycEchelon ech;
  for (const Word& w : words) {
    std::vector<CycNumber> col(words.size(), CycNumber(0));
    for (const auto& [u, c] : omega(w)) col[index.at(u)] = c;
    ech.insert(std::move(col));
  }
  long long rank = ech.rank();
  dim_cache_.emplace(deg, rank);
  return rank;
}

long long NicholsCalculator::nichols_dim_total(long long n) {
  long long total = 0;
  for (const auto& deg : compositions(n, ctx_->rank())) total += nichols_dim(deg);
  return total;
}

std::vector<NCPoly> NicholsCalculator::ideal_basis(long long n) {
  if (n < 0) throw std::invalid_argument("ideal_basis: degree must be nonnegative");
  std::vector<NCPoly> out;
  for (const auto& deg : compositions(n, ctx_->rank())) {
    std::vector<Word> words = words_of_multidegree(deg);
    std::map<Word, size_t> index;
    for (size_t i = 0; i < words.size(); ++i) index.emplace(words[i], i);
    std::vector<std::vector<CycNumber>> cols(words.size());
    for (size_t j = 0; j < words.size(); ++j) {
      cols[j].assign(words.size(), CycNumber(0));
      for (const auto& [u, c] : omega(words[j])) cols[j][index.at(u)] = c;
    }
    for (auto& v : kernel_of_columns(cols)) {
      NCPoly p(ctx_);
      for (size_t j = 0; j < v.size(); ++j) p.add_term(words[j], v[j]);
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<long long> NicholsCalculator::hilbert(long long max_degree) {
  if (max_degree < 0) throw std::invalid_argument("hilbert: max degree must be nonnegative");
  std::vector<long long> dims;
  for (long long n = 0; n <= max_degree; ++n) dims.push_back(nichols_dim_total(n));
  return dims;
}

std::vector<NCPoly> nichols_ideal_basis(BraidingPtr ctx, long long n) {
  if (n < 2) throw std::invalid_argument("nichols_ideal_basis: degree must be >= 2");
  return NicholsCalculator(std::move(ctx)).ideal_basis(n);
}

std::vector<long long> hilbert_series(BraidingPtr ctx, long long max_degree) {
  return NicholsCalculator(std::move(ctx)).hilbert(max_degree);
}

bool in_nichols_ideal(const NCPoly& p) {
  NicholsCalculator calc(p.context());
  return calc.in_ideal(p);
}

}  // namespace braidkit
