#include "nglie/lattice.hpp"

#include <sstream>
#include <stdexcept>

namespace nglie {

static void check_dim(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
}

RatVec vec_add(const RatVec& a, const RatVec& b) {
  check_dim(a, b);
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); i++) r[i] = a[i] + b[i];
  return r;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
  check_dim(a, b);
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); i++) r[i] = a[i] - b[i];
  return r;
}

RatVec vec_neg(const RatVec& a) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); i++) r[i] = -a[i];
  return r;
}

RatVec vec_scale(const Rat& c, const RatVec& a) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); i++) r[i] = c * a[i];
  return r;
}

bool vec_is_zero(const RatVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

RatVec vec_zero(int dim) { return RatVec(dim, Rat(0)); }

std::string vec_str(const RatVec& a) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < a.size(); i++) {
    if (i) os << ",";
    os << rat_str(a[i]);
  }
  os << ")";
  return os.str();
}

RatMat mat_identity(int n) {
  RatMat m(n, RatVec(n, Rat(0)));
  for (int i = 0; i < n; i++) m[i][i] = 1;
  return m;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
  if (a.empty() || b.empty()) return {};
  std::size_t n = a.size(), k = b.size(), p = b[0].size();
  RatMat r(n, RatVec(p, Rat(0)));
  for (std::size_t i = 0; i < n; i++) {
    if (a[i].size() != k) throw std::invalid_argument("shape mismatch");
    for (std::size_t j = 0; j < k; j++) {
      if (a[i][j] == 0) continue;
      for (std::size_t l = 0; l < p; l++) r[i][l] += a[i][j] * b[j][l];
    }
  }
  return r;
}

RatVec mat_row_mul(const RatVec& v, const RatMat& m) {
  if (m.empty()) return {};
  if (v.size() != m.size()) throw std::invalid_argument("dimension mismatch");
  RatVec r(m[0].size(), Rat(0));
  for (std::size_t i = 0; i < v.size(); i++) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < r.size(); j++) r[j] += v[i] * m[i][j];
  }
  return r;
}

RatMat mat_inverse(const RatMat& m) {
  int n = static_cast<int>(m.size());
  RatMat a = m;
  RatMat inv = mat_identity(n);
  for (int col = 0; col < n; col++) {
    int piv = -1;
    for (int r = col; r < n; r++)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::domain_error("singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rat d = a[col][col];
    for (int j = 0; j < n; j++) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (int r = 0; r < n; r++) {
      if (r == col || a[r][col] == 0) continue;
      Rat f = a[r][col];
      for (int j = 0; j < n; j++) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

int mat_rank(RatMat m) {
  int rank = 0;
  if (m.empty()) return 0;
  std::size_t cols = m[0].size();
  for (std::size_t col = 0; col < cols && rank < static_cast<int>(m.size()); col++) {
    int piv = -1;
    for (std::size_t r = rank; r < m.size(); r++)
      if (m[r][col] != 0) {
        piv = static_cast<int>(r);
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < m.size(); r++) {
      if (static_cast<int>(r) == rank || m[r][col] == 0) continue;
      Rat f = m[r][col] / m[rank][col];
      for (std::size_t j = col; j < cols; j++) m[r][j] -= f * m[rank][j];
    }
    rank++;
  }
  return rank;
}

bool mat_is_skew(const RatMat& m) {
  for (std::size_t i = 0; i < m.size(); i++)
    for (std::size_t j = 0; j < m.size(); j++)
      if (m[i][j] != -m[j][i]) return false;
  return true;
}

IntMat hnf_rows(IntMat m) {
  if (m.empty()) return m;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; c++) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) piv++;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    // Clear below the pivot with row gcd combinations.
    for (std::size_t k = r + 1; k < rows; k++) {
      while (m[k][c] != 0) {
        Int q = m[r][c] / m[k][c];  // truncated division is fine here
        for (std::size_t j = 0; j < cols; j++) m[r][j] -= q * m[k][j];
        std::swap(m[r], m[k]);
      }
    }
    if (m[r][c] < 0)
      for (std::size_t j = 0; j < cols; j++) m[r][j] = -m[r][j];
    // Reduce entries above the pivot into [0, pivot).
    for (std::size_t k = 0; k < r; k++) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), m[k][c].get_mpz_t(), m[r][c].get_mpz_t());
      if (q != 0)
        for (std::size_t j = 0; j < cols; j++) m[k][j] -= q * m[r][j];
    }
    r++;
  }
  m.resize(r);
  return m;
}

Lattice Lattice::from_generators(std::vector<RatVec> gens, int dim) {
  if (dim < 0) throw std::invalid_argument("negative dimension");
  for (const auto& g : gens)
    if (static_cast<int>(g.size()) != dim)
      throw std::invalid_argument("generator dimension mismatch");
  Lattice l;
  l.dim_ = dim;
  l.gens_ = std::move(gens);

  Int d = 1;
  for (const auto& g : l.gens_)
    for (const auto& x : g) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den().get_mpz_t());
  IntMat m;
  m.reserve(l.gens_.size());
  for (const auto& g : l.gens_) {
    IntVec row(dim);
    for (int j = 0; j < dim; j++) {
      Rat scaled = g[j] * d;
      row[j] = scaled.get_num();  // exact: d clears every denominator
    }
    m.push_back(std::move(row));
  }
  IntMat h = hnf_rows(std::move(m));
  // Minimise the pair (h, d) by the gcd of all entries and d.
  Int g = d;
  for (const auto& row : h)
    for (const auto& x : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1) {
    for (auto& row : h)
      for (auto& x : row) x /= g;
    d /= g;
  }
  l.hnf_ = std::move(h);
  l.denom_ = d;
  return l;
}

bool Lattice::contains(const RatVec& v) const {
  if (static_cast<int>(v.size()) != dim_)
    throw std::invalid_argument("dimension mismatch");
  IntVec w(dim_);
  for (int j = 0; j < dim_; j++) {
    Rat scaled = v[j] * denom_;
    if (scaled.get_den() != 1) return false;
    w[j] = scaled.get_num();
  }
  // Forward-substitute against the Hermite staircase.
  for (const auto& row : hnf_) {
    std::size_t c = 0;
    while (c < row.size() && row[c] == 0) c++;
    if (c == row.size()) continue;
    if (w[c] % row[c] != 0) {
      if (w[c] != 0) {
        // Entry not divisible by the pivot: not an integer combination.
        return false;
      }
      continue;
    }
    Int q = w[c] / row[c];
    if (q == 0) continue;
    for (std::size_t j = c; j < row.size(); j++) w[j] -= q * row[j];
  }
  for (const auto& x : w)
    if (x != 0) return false;
  return true;
}

std::vector<RatVec> Lattice::basis() const {
  std::vector<RatVec> b;
  b.reserve(hnf_.size());
  for (const auto& row : hnf_) {
    RatVec v(dim_);
    for (int j = 0; j < dim_; j++) {
      Rat q(row[j], denom_);
      q.canonicalize();
      v[j] = q;
    }
    b.push_back(std::move(v));
  }
  return b;
}

bool Lattice::meets_line(const RatVec& dir) const {
  if (static_cast<int>(dir.size()) != dim_)
    throw std::invalid_argument("dimension mismatch");
  if (vec_is_zero(dir)) return false;
  // Nonzero multiples of dir reach the lattice iff dir lies in its Q-span.
  RatMat rows;
  for (const auto& v : basis()) rows.push_back(v);
  int r0 = mat_rank(rows);
  rows.push_back(dir);
  return mat_rank(rows) == r0;
}

bool lattice_equal(const Lattice& a, const Lattice& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  return a.denom() == b.denom() && a.hnf() == b.hnf();
}

Lattice lattice_direct_sum(const Lattice& a, const Lattice& b) {
  int dim = a.dim() + b.dim();
  std::vector<RatVec> gens;
  for (const auto& g : a.generators()) {
    RatVec v = g;
    v.resize(dim, Rat(0));
    gens.push_back(std::move(v));
  }
  for (const auto& g : b.generators()) {
    RatVec v = vec_zero(a.dim());
    v.insert(v.end(), g.begin(), g.end());
    gens.push_back(std::move(v));
  }
  return Lattice::from_generators(std::move(gens), dim);
}

BlockMatrix g_check(const RatMat& m, int l2, int l3) {
  int n = l2 + l3;
  if (static_cast<int>(m.size()) != n)
    throw std::invalid_argument("matrix must be (l2+l3) x (l2+l3)");
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("matrix must be (l2+l3) x (l2+l3)");
  for (int i = 0; i < l2; i++)
    for (int j = l2; j < n; j++)
      if (m[i][j] != 0)
        throw std::invalid_argument("top-right block must be zero");
  auto submat = [&](int r0, int c0, int k) {
    RatMat s(k, RatVec(k));
    for (int i = 0; i < k; i++)
      for (int j = 0; j < k; j++) s[i][j] = m[r0 + i][c0 + j];
    return s;
  };
  if (l2 > 0 && mat_rank(submat(0, 0, l2)) != l2)
    throw std::invalid_argument("singular A block");
  if (l3 > 0 && mat_rank(submat(l2, l2, l3)) != l3)
    throw std::invalid_argument("singular C block");
  return BlockMatrix{l2, l3, m};
}

RatVec g_act_vector(const BlockMatrix& g, const RatVec& v) {
  if (v.size() != g.entries.size())
    throw std::invalid_argument("dimension mismatch");
  return mat_row_mul(v, mat_inverse(g.entries));
}

Lattice g_act_lattice(const BlockMatrix& g, const Lattice& l) {
  if (l.dim() != static_cast<int>(g.entries.size()))
    throw std::invalid_argument("dimension mismatch");
  RatMat inv = mat_inverse(g.entries);
  std::vector<RatVec> gens;
  gens.reserve(l.generators().size());
  for (const auto& v : l.generators()) gens.push_back(mat_row_mul(v, inv));
  return Lattice::from_generators(std::move(gens), l.dim());
}

}  // namespace nglie
