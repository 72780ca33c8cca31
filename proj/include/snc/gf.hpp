#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "snc/error.hpp"

namespace snc {

// Arithmetic in F_q for a prime modulus q, 2 <= q < 2^31. Primality is
// checked deterministically at construction.
class PrimeField {
public:
  explicit PrimeField(uint32_t q);

  uint32_t q() const { return q_; }
  uint32_t add(uint32_t a, uint32_t b) const { uint32_t s = a + b; return s >= q_ ? s - q_ : s; }
  uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + q_ - b; }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : q_ - a; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % q_);
  }
  uint32_t inv(uint32_t a) const;  // throws on 0
  uint32_t reduce(long long v) const {
    long long r = v % static_cast<long long>(q_);
    return static_cast<uint32_t>(r < 0 ? r + q_ : r);
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.q_ == b.q_; }

private:
  uint32_t q_;
};

bool is_prime(uint32_t n);
uint32_t next_prime_at_least(uint32_t n);

// Dense row-major matrix over a prime field; entries kept reduced mod q.
class FieldMatrix {
public:
  FieldMatrix(int rows, int cols, PrimeField field);
  static FieldMatrix identity(int n, PrimeField field);
  static FieldMatrix from_columns(const std::vector<std::vector<uint32_t>>& cols, PrimeField field);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const PrimeField& field() const { return field_; }

  uint32_t at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
  void set(int r, int c, uint32_t v) { a_[static_cast<size_t>(r) * cols_ + c] = v; }

  std::vector<uint32_t> column(int c) const;
  FieldMatrix transposed() const;

  // Decimal integers, row-major, space-separated, one row per line.
  std::string render() const;

  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.a_ == b.a_;
  }

private:
  int rows_, cols_;
  PrimeField field_;
  std::vector<uint32_t> a_;
};

FieldMatrix hconcat(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix matmul(const FieldMatrix& a, const FieldMatrix& b);
std::vector<uint32_t> row_times_matrix(const std::vector<uint32_t>& x, const FieldMatrix& m);

int rank(FieldMatrix m);                 // exact elimination over F_q
FieldMatrix invert(const FieldMatrix& m);  // throws singular
FieldMatrix rref_rows(FieldMatrix m);    // reduced row echelon form, zero rows dropped

// True iff the column spans of b and f meet only in the zero vector, i.e.
// rank([b | f]) == rank(b) + rank(f). Both need the same row dimension.
bool spans_intersect_trivially(const FieldMatrix& b, const FieldMatrix& f);

FieldMatrix parse_matrix_rows(const std::vector<std::string>& lines, int rows, int cols,
                              PrimeField field);

}  // namespace snc
