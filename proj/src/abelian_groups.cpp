#include "toricapolar/abelian_groups.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "toricapolar/error.hpp"

namespace toricapolar {

namespace {

std::int64_t to_int64(const Integer& v) {
  if (!v.fits_slong_p()) throw Error(ErrorKind::InvalidInput, "integer does not fit in 64 bits: " + v.get_str());
  return v.get_si();
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Inverse of a unit modulo m (m >= 2, gcd(a, m) == 1).
std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  Integer inv;
  Integer av = mod_floor(a, m);
  Integer mv = m;
  mpz_invert(inv.get_mpz_t(), av.get_mpz_t(), mv.get_mpz_t());
  return inv.get_si();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  if (trim(text).empty()) return out;
  for (const auto& piece : split(text, ',')) {
    auto t = trim(piece);
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(t, &used);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "bad integer '" + t + "'");
    }
    if (used != t.size()) throw Error(ErrorKind::ParseError, "bad integer '" + t + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorKind::InvalidInput, "ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw Error(ErrorKind::InvalidInput, "matrix shape mismatch in product");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Integer IntMatrix::determinant() const {
  if (rows_ != cols_) throw Error(ErrorKind::NonSquare, "determinant of non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(target, j) += factor * (*this)(source, j);
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, target) += factor * (*this)(i, source);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

// ---------------------------------------------------------------- Smith form

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix a = m;
  IntMatrix left = IntMatrix::identity(rows);
  IntMatrix right = IntMatrix::identity(cols);
  const std::size_t n = std::min(rows, cols);

  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      bool found = false;
      std::size_t pr = t, pc = t;
      Integer best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (a(i, j) == 0) continue;
          Integer v = abs(a(i, j));
          if (!found || v < best) {
            found = true;
            best = v;
            pr = i;
            pc = j;
          }
        }
      if (!found) break;
      a.swap_rows(t, pr);
      left.swap_rows(t, pr);
      a.swap_cols(t, pc);
      right.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        a.add_row_multiple(i, t, -q);
        left.add_row_multiple(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        a.add_col_multiple(j, t, -q);
        right.add_col_multiple(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility condition on the trailing block
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            a.add_row_multiple(t, i, 1);
            left.add_row_multiple(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      left.negate_row(t);
    }
  }

  SmithDecomposition out{std::move(left), {}, std::move(right)};
  out.diag.reserve(n);
  for (std::size_t t = 0; t < n; ++t) out.diag.push_back(a(t, t));
  return out;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error(ErrorKind::NonSquare, "inverse of non-square matrix");
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m(i, j);
    aug[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && aug[p][c] == 0) ++p;
    if (p == n) throw Error(ErrorKind::InvalidInput, "singular matrix is not unimodular");
    std::swap(aug[c], aug[p]);
    Rational piv = aug[c][c];
    for (auto& v : aug[c]) v /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || aug[i][c] == 0) continue;
      Rational f = aug[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) aug[i][j] -= f * aug[c][j];
    }
  }
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& v = aug[i][n + j];
      if (v.get_den() != 1) throw Error(ErrorKind::InvalidInput, "matrix is not unimodular");
      inv(i, j) = v.get_num();
    }
  return inv;
}

// ---------------------------------------------------------------- GradedGroup

GradedGroup::GradedGroup(std::size_t free_rank, std::vector<std::int64_t> torsion_orders)
    : free_rank_(free_rank) {
  for (auto d : torsion_orders) {
    if (d < 0) d = -d;
    if (d == 0) {
      ++free_rank_;
      continue;
    }
    if (d >= 2) torsion_orders_.push_back(d);
  }
  std::sort(torsion_orders_.begin(), torsion_orders_.end());
}

DegreeClass GradedGroup::zero() const {
  return DegreeClass{std::vector<std::int64_t>(free_rank_, 0),
                     std::vector<std::int64_t>(torsion_orders_.size(), 0)};
}

void GradedGroup::check(const DegreeClass& d) const {
  if (d.free_part.size() != free_rank_ || d.torsion_part.size() != torsion_orders_.size())
    throw Error(ErrorKind::GroupMismatch, "degree " + std::to_string(d.free_part.size()) + "+" +
                                              std::to_string(d.torsion_part.size()) +
                                              " components used in group " + describe());
}

DegreeClass GradedGroup::normalize(DegreeClass d) const {
  check(d);
  for (std::size_t i = 0; i < torsion_orders_.size(); ++i)
    d.torsion_part[i] = mod_floor(d.torsion_part[i], torsion_orders_[i]);
  return d;
}

bool GradedGroup::contains(const DegreeClass& d) const {
  if (d.free_part.size() != free_rank_ || d.torsion_part.size() != torsion_orders_.size()) return false;
  for (std::size_t i = 0; i < torsion_orders_.size(); ++i)
    if (d.torsion_part[i] < 0 || d.torsion_part[i] >= torsion_orders_[i]) return false;
  return true;
}

DegreeClass GradedGroup::add(const DegreeClass& a, const DegreeClass& b) const {
  check(a);
  check(b);
  DegreeClass r = a;
  for (std::size_t i = 0; i < free_rank_; ++i) r.free_part[i] += b.free_part[i];
  for (std::size_t i = 0; i < torsion_orders_.size(); ++i) r.torsion_part[i] += b.torsion_part[i];
  return normalize(std::move(r));
}

DegreeClass GradedGroup::sub(const DegreeClass& a, const DegreeClass& b) const {
  check(a);
  check(b);
  DegreeClass r = a;
  for (std::size_t i = 0; i < free_rank_; ++i) r.free_part[i] -= b.free_part[i];
  for (std::size_t i = 0; i < torsion_orders_.size(); ++i) r.torsion_part[i] -= b.torsion_part[i];
  return normalize(std::move(r));
}

DegreeClass GradedGroup::scale(const DegreeClass& a, std::int64_t k) const {
  check(a);
  DegreeClass r = a;
  for (auto& v : r.free_part) v *= k;
  for (std::size_t i = 0; i < torsion_orders_.size(); ++i)
    r.torsion_part[i] = mod_floor(mod_floor(r.torsion_part[i], torsion_orders_[i]) *
                                      mod_floor(k, torsion_orders_[i]),
                                  torsion_orders_[i]);
  return normalize(std::move(r));
}

std::string GradedGroup::format(const DegreeClass& d) const {
  std::ostringstream os;
  for (std::size_t i = 0; i < d.free_part.size(); ++i) os << (i ? "," : "") << d.free_part[i];
  if (!d.torsion_part.empty()) {
    os << ';';
    for (std::size_t i = 0; i < d.torsion_part.size(); ++i) os << (i ? "," : "") << d.torsion_part[i];
  }
  return os.str();
}

DegreeClass GradedGroup::parse(const std::string& text) const {
  auto parts = split(text, ';');
  if (parts.size() > 2) throw Error(ErrorKind::ParseError, "degree '" + text + "' has more than one ';'");
  DegreeClass d;
  d.free_part = parse_int_list(parts[0]);
  if (parts.size() == 2) d.torsion_part = parse_int_list(parts[1]);
  if (d.free_part.size() != free_rank_ || d.torsion_part.size() != torsion_orders_.size())
    throw Error(ErrorKind::GroupMismatch, "degree '" + text + "' does not match group " + describe());
  return normalize(std::move(d));
}

std::string GradedGroup::describe() const {
  std::vector<std::string> parts;
  if (free_rank_ == 1) parts.push_back("Z");
  if (free_rank_ > 1) parts.push_back("Z^" + std::to_string(free_rank_));
  for (auto d : torsion_orders_) parts.push_back("Z/" + std::to_string(d));
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " x " + parts[i];
  return out;
}

// ---------------------------------------------------------------- Cokernel

Cokernel::Cokernel(GradedGroup group, IntMatrix projection, IntMatrix lift)
    : group_(std::move(group)), projection_(std::move(projection)), lift_(std::move(lift)) {}

DegreeClass Cokernel::project(std::span<const Integer> v) const {
  if (v.size() != projection_.cols())
    throw Error(ErrorKind::GroupMismatch, "vector length does not match ambient rank");
  DegreeClass d = group_.zero();
  const std::size_t l = group_.free_rank();
  const auto& orders = group_.torsion_orders();
  for (std::size_t c = 0; c < group_.components(); ++c) {
    Integer acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j) acc += projection_(c, j) * v[j];
    if (c < l) {
      d.free_part[c] = to_int64(acc);
    } else {
      Integer r;
      mpz_fdiv_r_ui(r.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(orders[c - l]));
      d.torsion_part[c - l] = r.get_si();
    }
  }
  return d;
}

DegreeClass Cokernel::project(std::span<const std::int64_t> v) const {
  std::vector<Integer> big(v.begin(), v.end());
  return project(std::span<const Integer>(big));
}

DegreeClass Cokernel::project_unit(std::size_t i) const {
  std::vector<Integer> e(ambient_rank(), 0);
  e.at(i) = 1;
  return project(std::span<const Integer>(e));
}

std::vector<Integer> Cokernel::lift(const DegreeClass& d) const {
  auto n = group_.normalize(d);
  std::vector<Integer> out(ambient_rank(), 0);
  const std::size_t l = group_.free_rank();
  for (std::size_t c = 0; c < group_.components(); ++c) {
    std::int64_t coeff = c < l ? n.free_part[c] : n.torsion_part[c - l];
    if (coeff == 0) continue;
    Integer k = coeff;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += k * lift_(j, c);
  }
  return out;
}

std::optional<Cokernel> Cokernel::rebased(std::span<const std::size_t> generators) const {
  const std::size_t l = group_.free_rank();
  const auto& orders = group_.torsion_orders();
  const std::size_t k = orders.size();
  if (generators.size() != l) return std::nullopt;

  IntMatrix basis(l, l);            // free parts of generator images, as columns
  std::vector<std::vector<std::int64_t>> tors(k, std::vector<std::int64_t>(l));
  for (std::size_t g = 0; g < l; ++g) {
    auto d = project_unit(generators[g]);
    for (std::size_t r = 0; r < l; ++r) basis(r, g) = d.free_part[r];
    for (std::size_t t = 0; t < k; ++t) tors[t][g] = d.torsion_part[t];
  }
  if (abs(basis.determinant()) != 1) return std::nullopt;
  IntMatrix inv = unimodular_inverse(basis);

  // forward change of coordinates, before unit rescaling of torsion
  auto forward = [&](const DegreeClass& d) {
    DegreeClass out = group_.zero();
    for (std::size_t r = 0; r < l; ++r) {
      Integer acc = 0;
      for (std::size_t c = 0; c < l; ++c) acc += inv(r, c) * d.free_part[c];
      out.free_part[r] = to_int64(acc);
    }
    for (std::size_t t = 0; t < k; ++t) {
      std::int64_t v = d.torsion_part[t];
      for (std::size_t g = 0; g < l; ++g) v -= mod_floor(tors[t][g] * mod_floor(out.free_part[g], orders[t]), orders[t]);
      out.torsion_part[t] = mod_floor(v, orders[t]);
    }
    return out;
  };

  const std::size_t n = ambient_rank();
  std::vector<DegreeClass> images;
  images.reserve(n);
  for (std::size_t j = 0; j < n; ++j) images.push_back(forward(project_unit(j)));

  std::vector<std::int64_t> unit(k, 1);
  for (std::size_t t = 0; t < k; ++t)
    for (const auto& img : images) {
      std::int64_t r = img.torsion_part[t];
      if (r != 0 && std::gcd(r, orders[t]) == 1) {
        unit[t] = inverse_mod(r, orders[t]);
        break;
      }
    }

  IntMatrix proj(group_.components(), n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t r = 0; r < l; ++r) proj(r, j) = images[j].free_part[r];
    for (std::size_t t = 0; t < k; ++t) proj(l + t, j) = mod_floor(images[j].torsion_part[t] * unit[t], orders[t]);
  }

  // inverse change of coordinates for the section
  IntMatrix lift(n, group_.components());
  for (std::size_t c = 0; c < group_.components(); ++c) {
    DegreeClass target = group_.zero();
    if (c < l) {
      target.free_part[c] = 1;
    } else {
      target.torsion_part[c - l] = 1;
    }
    DegreeClass old = group_.zero();
    for (std::size_t r = 0; r < l; ++r) {
      Integer acc = 0;
      for (std::size_t g = 0; g < l; ++g) acc += basis(r, g) * target.free_part[g];
      old.free_part[r] = to_int64(acc);
    }
    for (std::size_t t = 0; t < k; ++t) {
      std::int64_t v = target.torsion_part[t] * inverse_mod(unit[t], orders[t]);
      for (std::size_t g = 0; g < l; ++g) v += tors[t][g] * target.free_part[g];
      old.torsion_part[t] = mod_floor(v, orders[t]);
    }
    auto pre = this->lift(old);
    for (std::size_t j = 0; j < n; ++j) lift(j, c) = pre[j];
  }
  return Cokernel(group_, std::move(proj), std::move(lift));
}

Cokernel cokernel(const IntMatrix& m) {
  auto snf = smith_normal_form(m);
  std::size_t rank = 0;
  for (const auto& d : snf.diag)
    if (d != 0) ++rank;
  if (rank < m.cols())
    throw Error(ErrorKind::NotFullRank, "matrix has column rank " + std::to_string(rank) + " < " +
                                            std::to_string(m.cols()));

  std::vector<std::size_t> free_rows;
  std::vector<std::size_t> tors_rows;
  std::vector<std::int64_t> orders;
  for (std::size_t i = 0; i < rank; ++i)
    if (snf.diag[i] != 1) {
      tors_rows.push_back(i);
      orders.push_back(to_int64(snf.diag[i]));
    }
  for (std::size_t i = rank; i < m.rows(); ++i) free_rows.push_back(i);

  GradedGroup group(free_rows.size(), orders);
  const std::size_t comps = free_rows.size() + tors_rows.size();
  IntMatrix proj(comps, m.rows());
  IntMatrix left_inv = unimodular_inverse(snf.left);
  IntMatrix lift(m.rows(), comps);
  std::vector<std::size_t> order = free_rows;
  order.insert(order.end(), tors_rows.begin(), tors_rows.end());
  for (std::size_t c = 0; c < comps; ++c) {
    const std::size_t src = order[c];
    for (std::size_t j = 0; j < m.rows(); ++j) {
      proj(c, j) = snf.left(src, j);
      if (c >= free_rows.size()) mpz_fdiv_r(proj(c, j).get_mpz_t(), proj(c, j).get_mpz_t(), snf.diag[src].get_mpz_t());
      lift(j, c) = left_inv(j, src);
    }
  }
  return Cokernel(std::move(group), std::move(proj), std::move(lift));
}

}  // namespace toricapolar
