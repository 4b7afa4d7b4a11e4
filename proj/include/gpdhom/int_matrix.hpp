#ifndef GPDHOM_INT_MATRIX_HPP
#define GPDHOM_INT_MATRIX_HPP

// Sparse matrices over Z with arbitrary-precision entries. These carry every
// boundary map, chain map and presentation in the library, so the storage
// invariant (no explicit zeros, indices in range) is enforced on every write.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gpdhom/errors.hpp"

namespace gpdhom {

using Int = boost::multiprecision::cpp_int;

class IntMatrix {
public:
  using EntryMap = std::map<std::pair<int, int>, Int>;

  IntMatrix() : rows_(0), cols_(0) {}

  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative dimension");
  }

  static IntMatrix zero(int rows, int cols) { return IntMatrix(rows, cols); }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(rows[i].size()) != c)
        throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
      for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
  }

  static IntMatrix column_vector(const std::vector<Int>& v) {
    IntMatrix m(static_cast<int>(v.size()), 1);
    for (int i = 0; i < static_cast<int>(v.size()); ++i) m.set(i, 0, v[i]);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int at(int i, int j) const {
    check_index(i, j);
    auto it = entries_.find({i, j});
    return it == entries_.end() ? Int(0) : it->second;
  }

  void set(int i, int j, Int v) {
    check_index(i, j);
    if (v == 0)
      entries_.erase({i, j});
    else
      entries_[{i, j}] = std::move(v);
  }

  void add_to(int i, int j, const Int& v) {
    check_index(i, j);
    if (v == 0) return;
    auto [it, inserted] = entries_.try_emplace({i, j}, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) entries_.erase(it);
    }
  }

  // Row-major ordered nonzero entries.
  const EntryMap& entries() const { return entries_; }

  std::size_t nonzero_count() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
  }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  IntMatrix operator-() const {
    IntMatrix m(rows_, cols_);
    for (const auto& [ij, v] : entries_) m.entries_[ij] = -v;
    return m;
  }

  IntMatrix operator+(const IntMatrix& o) const {
    require_same_shape(o, "+");
    IntMatrix m = *this;
    for (const auto& [ij, v] : o.entries_) m.add_to(ij.first, ij.second, v);
    return m;
  }

  IntMatrix operator-(const IntMatrix& o) const {
    require_same_shape(o, "-");
    IntMatrix m = *this;
    for (const auto& [ij, v] : o.entries_) m.add_to(ij.first, ij.second, -v);
    return m;
  }

  IntMatrix operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_)
      throw std::invalid_argument("IntMatrix: product shape mismatch " + shape_string() + " * " +
                                  o.shape_string());
    IntMatrix m(rows_, o.cols_);
    for (const auto& [ik, a] : entries_) {
      const int i = ik.first, k = ik.second;
      auto it = o.entries_.lower_bound({k, 0});
      auto end = o.entries_.lower_bound({k + 1, 0});
      for (; it != end; ++it) m.add_to(i, it->first.second, a * it->second);
    }
    return m;
  }

  IntMatrix operator*(const Int& c) const {
    IntMatrix m(rows_, cols_);
    if (c != 0)
      for (const auto& [ij, v] : entries_) m.entries_[ij] = c * v;
    return m;
  }

  std::vector<Int> apply(const std::vector<Int>& x) const {
    if (static_cast<int>(x.size()) != cols_)
      throw std::invalid_argument("IntMatrix::apply: vector length mismatch");
    std::vector<Int> y(rows_, Int(0));
    for (const auto& [ij, v] : entries_) y[ij.first] += v * x[ij.second];
    return y;
  }

  IntMatrix transpose() const {
    IntMatrix m(cols_, rows_);
    for (const auto& [ij, v] : entries_) m.entries_[{ij.second, ij.first}] = v;
    return m;
  }

  std::vector<Int> column(int j) const {
    if (j < 0 || j >= cols_) throw std::invalid_argument("IntMatrix::column: index out of range");
    std::vector<Int> v(rows_, Int(0));
    for (int i = 0; i < rows_; ++i) {
      auto it = entries_.find({i, j});
      if (it != entries_.end()) v[i] = it->second;
    }
    return v;
  }

  // Columns [first, first+count) as a matrix.
  IntMatrix column_slice(int first, int count) const {
    if (first < 0 || count < 0 || first + count > cols_)
      throw std::invalid_argument("IntMatrix::column_slice: range out of bounds");
    IntMatrix m(rows_, count);
    for (const auto& [ij, v] : entries_) {
      if (ij.second >= first && ij.second < first + count)
        m.entries_[{ij.first, ij.second - first}] = v;
    }
    return m;
  }

  void set_column(int j, const std::vector<Int>& v) {
    if (static_cast<int>(v.size()) != rows_)
      throw std::invalid_argument("IntMatrix::set_column: length mismatch");
    for (int i = 0; i < rows_; ++i) set(i, j, v[i]);
  }

  static IntMatrix hcat(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_) throw std::invalid_argument("IntMatrix::hcat: row mismatch");
    IntMatrix m(a.rows_, a.cols_ + b.cols_);
    m.entries_ = a.entries_;
    for (const auto& [ij, v] : b.entries_) m.entries_[{ij.first, ij.second + a.cols_}] = v;
    return m;
  }

  static IntMatrix vcat(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.cols_) throw std::invalid_argument("IntMatrix::vcat: column mismatch");
    IntMatrix m(a.rows_ + b.rows_, a.cols_);
    m.entries_ = a.entries_;
    for (const auto& [ij, v] : b.entries_) m.entries_[{ij.first + a.rows_, ij.second}] = v;
    return m;
  }

  std::vector<std::vector<Int>> to_dense() const {
    std::vector<std::vector<Int>> d(rows_, std::vector<Int>(cols_, Int(0)));
    for (const auto& [ij, v] : entries_) d[ij.first][ij.second] = v;
    return d;
  }

  std::string shape_string() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

  std::string to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
      if (i) os << "; ";
      for (int j = 0; j < cols_; ++j) {
        if (j) os << " ";
        os << at(i, j);
      }
    }
    os << "] (" << shape_string() << ")";
    return os.str();
  }

private:
  void check_index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
      throw std::invalid_argument("IntMatrix: index (" + std::to_string(i) + "," +
                                  std::to_string(j) + ") outside " + shape_string());
  }

  void require_same_shape(const IntMatrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument(std::string("IntMatrix: shape mismatch for '") + op + "': " +
                                  shape_string() + " vs " + o.shape_string());
  }

  int rows_, cols_;
  EntryMap entries_;
};

inline IntMatrix operator*(const Int& c, const IntMatrix& m) { return m * c; }

}  // namespace gpdhom

#endif  // GPDHOM_INT_MATRIX_HPP
