#include "toricapolar/linalg.hpp"

#include <algorithm>

#include "toricapolar/error.hpp"

namespace toricapolar {

namespace {

// a * x - b * y over sparse rows
SparseRow combine(const Integer& a, const SparseRow& x, const Integer& b, const SparseRow& y) {
  SparseRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -b * y[j].second);
      ++j;
    } else {
      Integer v = a * x[i].second - b * y[j].second;
      if (v != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

const Integer* find_entry(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  if (it == row.end() || it->first != col) return nullptr;
  return &it->second;
}

// Divide by the content and make the leading entry positive.
void make_primitive(SparseRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// Eliminate `col` from `target` using `pivot_row`, whose entry at `col` is `pv`.
void eliminate(SparseRow& target, const SparseRow& pivot_row, std::size_t col, const Integer& pv) {
  const Integer* tv = find_entry(target, col);
  if (!tv) return;
  Integer g = gcd(pv, *tv);
  Integer a = pv / g;
  Integer b = *tv / g;
  target = combine(a, target, b, pivot_row);
  make_primitive(target);
}

}  // namespace

SparseRow to_sparse_integer_row(const std::vector<Rational>& row) {
  Integer l = 1;
  for (const auto& v : row)
    if (v != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  SparseRow out;
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (row[c] == 0) continue;
    Integer v = row[c].get_num() * (l / row[c].get_den());
    out.emplace_back(c, std::move(v));
  }
  return out;
}

bool EchelonBasis::insert(SparseRow row) {
  if (!row.empty() && row.back().first >= cols_) throw Error(ErrorKind::InvalidInput, "row longer than basis width");
  make_primitive(row);
  for (std::size_t r = 0; r < rows_.size() && !row.empty(); ++r) {
    const std::size_t pc = pivot_col_of_row_[r];
    const Integer* pv = find_entry(rows_[r], pc);
    eliminate(row, rows_[r], pc, *pv);
  }
  if (row.empty()) return false;
  const std::size_t pc = row.front().first;
  const Integer pv = row.front().second;
  for (auto& existing : rows_) eliminate(existing, row, pc, pv);
  row_of_pivot_[pc] = rows_.size();
  pivot_col_of_row_.push_back(pc);
  rows_.push_back(std::move(row));
  return true;
}

bool EchelonBasis::insert(const std::vector<Rational>& row) {
  if (row.size() != cols_) throw Error(ErrorKind::InvalidInput, "row width mismatch");
  return insert(to_sparse_integer_row(row));
}

std::vector<std::size_t> EchelonBasis::pivot_columns() const {
  auto out = pivot_col_of_row_;
  std::sort(out.begin(), out.end());
  return out;
}

RationalMatrix EchelonBasis::reduced_rows() const {
  RationalMatrix out;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (!row_of_pivot_[c]) continue;
    const auto& row = rows_[*row_of_pivot_[c]];
    const Integer* pv = find_entry(row, c);
    std::vector<Rational> dense(cols_);
    for (const auto& [col, v] : row) {
      dense[col] = Rational(v, *pv);
      dense[col].canonicalize();
    }
    out.push_back(std::move(dense));
  }
  return out;
}

RationalMatrix EchelonBasis::nullspace() const {
  RationalMatrix out;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (row_of_pivot_[f]) continue;
    Integer l = 1;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (!find_entry(rows_[r], f)) continue;
      const Integer* pv = find_entry(rows_[r], pivot_col_of_row_[r]);
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), pv->get_mpz_t());
    }
    std::vector<Integer> x(cols_, 0);
    x[f] = l;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Integer* e = find_entry(rows_[r], f);
      if (!e) continue;
      const std::size_t pc = pivot_col_of_row_[r];
      const Integer* pv = find_entry(rows_[r], pc);
      x[pc] = -(*e) * (l / *pv);
    }
    Integer g = 0;
    for (const auto& v : x) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    std::vector<Rational> q(cols_);
    for (std::size_t c = 0; c < cols_; ++c) q[c] = Rational(x[c] / g);
    out.push_back(std::move(q));
  }
  return out;
}

std::vector<Rational> EchelonBasis::residual(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw Error(ErrorKind::InvalidInput, "vector width mismatch");
  std::vector<Rational> out = v;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t pc = pivot_col_of_row_[r];
    if (out[pc] == 0) continue;
    const Integer* pv = find_entry(rows_[r], pc);
    Rational coeff = out[pc] / Rational(*pv);
    for (const auto& [c, val] : rows_[r]) out[c] -= coeff * val;
  }
  return out;
}

std::size_t rank(const RationalMatrix& m) {
  if (m.empty()) return 0;
  EchelonBasis eb(m.front().size());
  for (const auto& row : m) eb.insert(row);
  return eb.rank();
}

RationalMatrix nullspace(const RationalMatrix& m, std::size_t cols) {
  EchelonBasis eb(cols);
  for (const auto& row : m) eb.insert(row);
  return eb.nullspace();
}

RationalMatrix transpose(const RationalMatrix& m, std::size_t cols) {
  RationalMatrix t(cols, std::vector<Rational>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  return t;
}

RationalMatrix left_nullspace(const RationalMatrix& m, std::size_t cols) {
  return nullspace(transpose(m, cols), m.size());
}

Rational determinant(const RationalMatrix& m) {
  const std::size_t n = m.size();
  IntMatrix a(n, n);
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw Error(ErrorKind::NonSquare, "determinant of non-square matrix");
    Integer l = 1;
    for (const auto& v : m[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m[i][j].get_num() * (l / m[i][j].get_den());
    scale *= l;
  }
  Rational d(a.determinant(), scale);
  d.canonicalize();
  return d;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b) {
  const std::size_t n = a.size();
  RationalMatrix aug(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw Error(ErrorKind::NonSquare, "solve needs a square system");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n] = b.at(i);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && aug[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(aug[c], aug[p]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || aug[i][c] == 0) continue;
      Rational f = aug[i][c] / aug[c][c];
      for (std::size_t j = c; j <= n; ++j) aug[i][j] -= f * aug[c][j];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n] / aug[i][i];
  return x;
}

// ---------------------------------------------------------------- Z/p

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

std::optional<std::uint64_t> reduce_mod(const Rational& q, std::uint64_t p) {
  Integer pp = static_cast<unsigned long>(p);
  Integer den;
  mpz_fdiv_r(den.get_mpz_t(), q.get_den_mpz_t(), pp.get_mpz_t());
  if (den == 0) return std::nullopt;
  Integer num;
  mpz_fdiv_r(num.get_mpz_t(), q.get_num_mpz_t(), pp.get_mpz_t());
  return num.get_ui() * inv_mod(den.get_ui(), p) % p;
}

std::size_t rank_mod(ModMatrix m, std::uint64_t p) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] % p == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    const std::uint64_t inv = inv_mod(m[r][c] % p, p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::uint64_t f = m[i][c] % p * inv % p;
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) m[i][j] = (m[i][j] + (p - f) * (m[r][j] % p)) % p;
    }
    ++r;
  }
  return r;
}

std::uint64_t determinant_mod(ModMatrix m, std::uint64_t p) {
  const std::size_t n = m.size();
  std::uint64_t det = 1 % p;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[c].size() != n) throw Error(ErrorKind::NonSquare, "determinant of non-square matrix");
    std::size_t piv = c;
    while (piv < n && m[piv][c] % p == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[c], m[piv]);
      det = (p - det) % p;
    }
    det = det * (m[c][c] % p) % p;
    const std::uint64_t inv = inv_mod(m[c][c] % p, p);
    for (std::size_t i = c + 1; i < n; ++i) {
      const std::uint64_t f = m[i][c] % p * inv % p;
      if (f == 0) continue;
      for (std::size_t j = c; j < n; ++j) m[i][j] = (m[i][j] + (p - f) * (m[c][j] % p)) % p;
    }
  }
  return det;
}

RankResult rank_with_prescreen(const RationalMatrix& m, std::size_t cols, std::uint64_t p) {
  const std::size_t full = std::min(m.size(), cols);
  if (full == 0) return {0, false};
  if (p != 0) {
    ModMatrix mm;
    mm.reserve(m.size());
    bool ok = true;
    for (const auto& row : m) {
      std::vector<std::uint64_t> r;
      r.reserve(cols);
      for (const auto& v : row) {
        auto x = reduce_mod(v, p);
        if (!x) {
          ok = false;
          break;
        }
        r.push_back(*x);
      }
      if (!ok) break;
      mm.push_back(std::move(r));
    }
    if (ok && rank_mod(std::move(mm), p) == full) return {full, true};
  }
  EchelonBasis eb(cols);
  for (const auto& row : m) {
    eb.insert(row);
    if (eb.rank() == full) break;
  }
  return {eb.rank(), false};
}

}  // namespace toricapolar
