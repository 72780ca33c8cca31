#include "snc/gf.hpp"

#include <sstream>

namespace snc {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

uint32_t next_prime_at_least(uint32_t n) {
  uint32_t p = n < 2 ? 2 : n;
  while (!is_prime(p)) ++p;
  return p;
}

PrimeField::PrimeField(uint32_t q) : q_(q) {
  if (q < 2 || q >= (uint32_t{1} << 31) || !is_prime(q))
    fail(Errc::not_prime, "field modulus " + std::to_string(q) + " is not a prime in [2, 2^31)");
}

uint32_t PrimeField::inv(uint32_t a) const {
  if (a == 0) fail(Errc::singular, "zero has no inverse");
  // extended Euclid on (a, q)
  int64_t t = 0, new_t = 1, r = q_, new_r = a;
  while (new_r != 0) {
    int64_t quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  return static_cast<uint32_t>(t < 0 ? t + q_ : t);
}

FieldMatrix::FieldMatrix(int rows, int cols, PrimeField field)
    : rows_(rows), cols_(cols), field_(field), a_(static_cast<size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0) fail(Errc::dimension_mismatch, "negative matrix dimension");
}

FieldMatrix FieldMatrix::identity(int n, PrimeField field) {
  FieldMatrix m(n, n, field);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FieldMatrix FieldMatrix::from_columns(const std::vector<std::vector<uint32_t>>& cols,
                                      PrimeField field) {
  int r = cols.empty() ? 0 : static_cast<int>(cols[0].size());
  FieldMatrix m(r, static_cast<int>(cols.size()), field);
  for (size_t c = 0; c < cols.size(); ++c) {
    if (static_cast<int>(cols[c].size()) != r)
      fail(Errc::dimension_mismatch, "ragged column set");
    for (int i = 0; i < r; ++i) m.set(i, static_cast<int>(c), cols[c][i]);
  }
  return m;
}

std::vector<uint32_t> FieldMatrix::column(int c) const {
  std::vector<uint32_t> v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, c);
  return v;
}

FieldMatrix FieldMatrix::transposed() const {
  FieldMatrix t(cols_, rows_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  return t;
}

std::string FieldMatrix::render() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << at(i, j);
    }
    os << '\n';
  }
  return os.str();
}

FieldMatrix hconcat(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.rows() != b.rows() || !(a.field() == b.field()))
    fail(Errc::dimension_mismatch, "hconcat needs equal row dimension and field");
  FieldMatrix m(a.rows(), a.cols() + b.cols(), a.field());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) m.set(i, j, a.at(i, j));
    for (int j = 0; j < b.cols(); ++j) m.set(i, a.cols() + j, b.at(i, j));
  }
  return m;
}

FieldMatrix matmul(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols() != b.rows() || !(a.field() == b.field()))
    fail(Errc::dimension_mismatch, "matmul dimension mismatch");
  const PrimeField& f = a.field();
  FieldMatrix m(a.rows(), b.cols(), f);
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      uint32_t aik = a.at(i, k);
      if (!aik) continue;
      for (int j = 0; j < b.cols(); ++j)
        m.set(i, j, f.add(m.at(i, j), f.mul(aik, b.at(k, j))));
    }
  return m;
}

std::vector<uint32_t> row_times_matrix(const std::vector<uint32_t>& x, const FieldMatrix& m) {
  if (static_cast<int>(x.size()) != m.rows())
    fail(Errc::dimension_mismatch, "row vector length does not match matrix rows");
  const PrimeField& f = m.field();
  std::vector<uint32_t> y(m.cols(), 0);
  for (int i = 0; i < m.rows(); ++i) {
    if (!x[i]) continue;
    for (int j = 0; j < m.cols(); ++j) y[j] = f.add(y[j], f.mul(x[i], m.at(i, j)));
  }
  return y;
}

int rank(FieldMatrix m) {
  const PrimeField& f = m.field();
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m.at(i, c)) { pivot = i; break; }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = c; j < m.cols(); ++j) {
        uint32_t t = m.at(r, j);
        m.set(r, j, m.at(pivot, j));
        m.set(pivot, j, t);
      }
    uint32_t piv_inv = f.inv(m.at(r, c));
    for (int i = r + 1; i < m.rows(); ++i) {
      uint32_t factor = f.mul(m.at(i, c), piv_inv);
      if (!factor) continue;
      for (int j = c; j < m.cols(); ++j)
        m.set(i, j, f.sub(m.at(i, j), f.mul(factor, m.at(r, j))));
    }
    ++r;
  }
  return r;
}

FieldMatrix rref_rows(FieldMatrix m) {
  const PrimeField& f = m.field();
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m.at(i, c)) { pivot = i; break; }
    if (pivot < 0) continue;
    for (int j = 0; j < m.cols(); ++j) {
      uint32_t t = m.at(r, j);
      m.set(r, j, m.at(pivot, j));
      m.set(pivot, j, t);
    }
    uint32_t piv_inv = f.inv(m.at(r, c));
    for (int j = 0; j < m.cols(); ++j) m.set(r, j, f.mul(m.at(r, j), piv_inv));
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      uint32_t factor = m.at(i, c);
      if (!factor) continue;
      for (int j = 0; j < m.cols(); ++j)
        m.set(i, j, f.sub(m.at(i, j), f.mul(factor, m.at(r, j))));
    }
    ++r;
  }
  FieldMatrix out(r, m.cols(), f);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < m.cols(); ++j) out.set(i, j, m.at(i, j));
  return out;
}

FieldMatrix invert(const FieldMatrix& m) {
  if (m.rows() != m.cols()) fail(Errc::dimension_mismatch, "only square matrices invert");
  const PrimeField& f = m.field();
  int n = m.rows();
  FieldMatrix work = hconcat(m, FieldMatrix::identity(n, f));
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int i = c; i < n; ++i)
      if (work.at(i, c)) { pivot = i; break; }
    if (pivot < 0) fail(Errc::singular, "matrix is singular");
    for (int j = 0; j < 2 * n; ++j) {
      uint32_t t = work.at(c, j);
      work.set(c, j, work.at(pivot, j));
      work.set(pivot, j, t);
    }
    uint32_t piv_inv = f.inv(work.at(c, c));
    for (int j = 0; j < 2 * n; ++j) work.set(c, j, f.mul(work.at(c, j), piv_inv));
    for (int i = 0; i < n; ++i) {
      if (i == c) continue;
      uint32_t factor = work.at(i, c);
      if (!factor) continue;
      for (int j = 0; j < 2 * n; ++j)
        work.set(i, j, f.sub(work.at(i, j), f.mul(factor, work.at(c, j))));
    }
  }
  FieldMatrix inv(n, n, f);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.set(i, j, work.at(i, n + j));
  return inv;
}

bool spans_intersect_trivially(const FieldMatrix& b, const FieldMatrix& f) {
  if (b.rows() != f.rows() || !(b.field() == f.field()))
    fail(Errc::dimension_mismatch, "span test needs equal row dimension and field");
  return rank(hconcat(b, f)) == rank(b) + rank(f);
}

FieldMatrix parse_matrix_rows(const std::vector<std::string>& lines, int rows, int cols,
                              PrimeField field) {
  if (static_cast<int>(lines.size()) != rows)
    fail(Errc::parse, "expected " + std::to_string(rows) + " matrix rows");
  FieldMatrix m(rows, cols, field);
  for (int i = 0; i < rows; ++i) {
    std::istringstream is(lines[i]);
    long long v;
    for (int j = 0; j < cols; ++j) {
      if (!(is >> v) || v < 0 || v >= field.q())
        fail(Errc::parse, "bad matrix entry in row " + std::to_string(i + 1));
      m.set(i, j, static_cast<uint32_t>(v));
    }
    std::string rest;
    if (is >> rest) fail(Errc::parse, "extra tokens in matrix row " + std::to_string(i + 1));
  }
  return m;
}

}  // namespace snc
