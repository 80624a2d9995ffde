#include "raag/matrix.hpp"

#include <random>
#include <stdexcept>

namespace raag {

IntMatrix identity_matrix(int n) {
  IntMatrix a(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 1;
  return a;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty() || b.empty()) return {};
  const int n = static_cast<int>(a.size());
  const int m = static_cast<int>(b[0].size());
  const int k = static_cast<int>(b.size());
  if (static_cast<int>(a[0].size()) != k) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix c(n, std::vector<Int>(m, 0));
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (int j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

Int determinant(IntMatrix a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  const int n = static_cast<int>(a.size());
  Int det = determinant(a);
  if (det != 1 && det != -1)
    throw std::invalid_argument("matrix is not invertible over the integers");
  // Gauss-Jordan over exact rationals kept as integer pairs would work too,
  // but with det = +-1 the adjugate is already the (signed) inverse.
  IntMatrix adj(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      IntMatrix minor;
      minor.reserve(n - 1);
      for (int r = 0; r < n; ++r) {
        if (r == i) continue;
        std::vector<Int> row;
        row.reserve(n - 1);
        for (int c = 0; c < n; ++c)
          if (c != j) row.push_back(a[r][c]);
        minor.push_back(std::move(row));
      }
      Int cof = determinant(std::move(minor));
      if ((i + j) % 2) cof = -cof;
      adj[j][i] = cof * det;  // det = 1/det for +-1
    }
  return adj;
}

StabPattern StabPattern::of(const Context& ctx, VertexSet y) {
  const ClosureLattice& lat = ctx.lattice();
  if (!lat.is_closed(y)) throw std::invalid_argument("pattern requires a closed set");
  StabPattern p;
  p.ctx_ = &ctx;
  p.set_ = y;
  p.verts_ = ctx.order().sorted(y);
  const int r = static_cast<int>(p.verts_.size());
  p.block_of_.assign(r, -1);
  // Classes are order intervals, so inside y they occupy consecutive
  // positions; walk the sorted vertices and cut at class boundaries.
  int start = 0;
  while (start < r) {
    VertexSet cls = lat.equiv_class(p.verts_[start]);
    int end = start;
    while (end < r && cls.contains(p.verts_[end])) ++end;
    int b = static_cast<int>(p.blocks_.size());
    p.blocks_.emplace_back(start, end);
    for (int i = start; i < end; ++i) p.block_of_[i] = b;
    start = end;
  }
  p.allowed_.assign(r, std::vector<bool>(r, false));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (p.block_of_[i] == p.block_of_[j])
        p.allowed_[i][j] = true;
      else if (i < j && lat.l_less(p.verts_[j], p.verts_[i]))
        p.allowed_[i][j] = true;
    }
  return p;
}

bool StabMatrix::is_member(const IntMatrix& a, const StabPattern& p) {
  const int r = p.dim();
  if (static_cast<int>(a.size()) != r) return false;
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(a[i].size()) != r) return false;
    for (int j = 0; j < r; ++j)
      if (a[i][j] != 0 && !p.allows(i, j)) return false;
  }
  for (auto [lo, hi] : p.blocks()) {
    IntMatrix block;
    for (int i = lo; i < hi; ++i)
      block.emplace_back(a[i].begin() + lo, a[i].begin() + hi);
    Int det = determinant(std::move(block));
    if (det != 1 && det != -1) return false;
  }
  return true;
}

StabMatrix StabMatrix::checked(StabPattern p, IntMatrix a) {
  if (!is_member(a, p)) throw std::invalid_argument("matrix does not satisfy the pattern");
  return StabMatrix(std::move(p), std::move(a));
}

StabMatrix StabMatrix::identity(StabPattern p) {
  IntMatrix a = identity_matrix(p.dim());
  return StabMatrix(std::move(p), std::move(a));
}

StabMatrix StabMatrix::operator*(const StabMatrix& o) const {
  if (!(pattern_ == o.pattern_)) throw std::invalid_argument("pattern mismatch in matrix product");
  return checked(pattern_, mat_mul(entries_, o.entries_));
}

StabMatrix StabMatrix::inverse() const {
  return checked(pattern_, unimodular_inverse(entries_));
}

StabMatrix StabMatrix::minor_to(VertexSet z) const {
  const Context& ctx = pattern_.context();
  if (!z.subset_of(pattern_.set()))
    throw std::invalid_argument("minor target is not contained in the matrix set");
  if (!ctx.lattice().is_closed(z)) throw std::invalid_argument("minor target is not closed");
  std::vector<int> keep;
  for (int i = 0; i < dim(); ++i)
    if (z.contains(pattern_.vertices()[i])) keep.push_back(i);
  IntMatrix a(keep.size(), std::vector<Int>(keep.size()));
  for (size_t i = 0; i < keep.size(); ++i)
    for (size_t j = 0; j < keep.size(); ++j) a[i][j] = entries_[keep[i]][keep[j]];
  return checked(StabPattern::of(ctx, z), std::move(a));
}

StabMatrix StabMatrix::embed_into(VertexSet y) const {
  const Context& ctx = pattern_.context();
  if (!pattern_.set().subset_of(y))
    throw std::invalid_argument("embedding target does not contain the matrix set");
  StabPattern big = StabPattern::of(ctx, y);
  std::vector<int> where(big.dim(), -1);  // big index -> small index
  for (int i = 0; i < big.dim(); ++i) {
    for (int k = 0; k < dim(); ++k)
      if (pattern_.vertices()[k] == big.vertices()[i]) where[i] = k;
  }
  IntMatrix a = identity_matrix(big.dim());
  for (int i = 0; i < big.dim(); ++i) {
    if (where[i] < 0) continue;
    for (int j = 0; j < big.dim(); ++j)
      if (where[j] >= 0) a[i][j] = entries_[where[i]][where[j]];
  }
  return checked(std::move(big), std::move(a));
}

std::pair<StabMatrix, StabMatrix> StabMatrix::split_semidirect() const {
  IntMatrix d(dim(), std::vector<Int>(dim(), 0));
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      if (pattern_.in_diag_block(i, j)) d[i][j] = entries_[i][j];
  StabMatrix dd = checked(pattern_, std::move(d));
  StabMatrix u = *this * dd.inverse();
  return {u, dd};
}

bool StabMatrix::is_block_diagonal() const {
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      if (entries_[i][j] != 0 && !pattern_.in_diag_block(i, j)) return false;
  return true;
}

bool StabMatrix::is_block_unipotent() const {
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      if (pattern_.in_diag_block(i, j) && entries_[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

bool max_pattern_check(const IntMatrix& a, const Context& ctx) {
  const int n = ctx.size();
  if (static_cast<int>(a.size()) != n) throw std::invalid_argument("matrix must be |X| x |X|");
  for (int i = 0; i < n; ++i) {
    int x = ctx.order().sequence()[i];
    VertexSet support = ctx.lattice().max_support(x);
    for (int j = 0; j < n; ++j)
      if (a[i][j] != 0 && !support.contains(ctx.order().sequence()[j])) return false;
  }
  return true;
}

StabMatrix sample_member(const StabPattern& p, int bound, std::uint64_t seed) {
  if (bound < 0) throw std::invalid_argument("sample bound must be nonnegative");
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) {
    return static_cast<int>(std::uniform_int_distribution<int>(lo, hi)(rng));
  };
  IntMatrix a = identity_matrix(p.dim());
  for (auto [lo, hi] : p.blocks()) {
    const int k = hi - lo;
    // Random unimodular block: a product of elementary transvections and
    // sign flips, so membership holds by construction.
    for (int step = 0; step < bound; ++step) {
      int kind = uniform(0, 2);
      if (kind == 0 && k >= 2) {
        int i = uniform(0, k - 1), j = uniform(0, k - 1);
        if (i == j) continue;
        int e = uniform(-bound, bound);
        for (int c = 0; c < k; ++c) a[lo + i][lo + c] += e * a[lo + j][lo + c];
      } else if (kind == 1) {
        int i = uniform(0, k - 1);
        for (int c = 0; c < k; ++c) a[lo + i][lo + c] = -a[lo + i][lo + c];
      } else if (k >= 2) {
        int i = uniform(0, k - 1), j = uniform(0, k - 1);
        if (i != j) std::swap(a[lo + i], a[lo + j]);
      }
    }
  }
  for (int i = 0; i < p.dim(); ++i)
    for (int j = 0; j < p.dim(); ++j)
      if (p.allows(i, j) && !p.in_diag_block(i, j) && bound > 0) a[i][j] = uniform(-bound, bound);
  return StabMatrix::checked(p, std::move(a));
}

}  // namespace raag
