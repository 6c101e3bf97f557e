#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "cqf/errors.hpp"

namespace cqf {

/// Dense real matrix, row-major, 64-bit floats. Value semantics throughout;
/// every operation returns a fresh matrix and never aliases its inputs.
class Mat {
  public:
    Mat() = default;
    Mat(int rows, int cols);  // zero-filled
    Mat(int rows, int cols, std::vector<double> entries);
    Mat(std::initializer_list<std::initializer_list<double>> rows);

    static Mat identity(int n);
    static Mat zero(int rows, int cols);
    static Mat column(const std::vector<double>& v);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    Mat block(int i0, int j0, int r, int c) const;
    void set_block(int i0, int j0, const Mat& m);

    bool all_finite() const;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat operator-(const Mat& a);
Mat operator*(const Mat& a, const Mat& b);
Mat operator*(double s, const Mat& a);
Mat operator*(const Mat& a, double s);

Mat transpose(const Mat& a);

/// (M + M^T)/2. Output is symmetric exactly: entry (i,j) and (j,i) are
/// computed from the same expression.
Mat symmetrize(const Mat& m);

/// Entrywise inner product sum_ij a_ij b_ij = Tr(a^T b) for real matrices.
double frob_inner(const Mat& a, const Mat& b);
double frob_norm(const Mat& a);
double max_abs(const Mat& a);

Mat kron(const Mat& a, const Mat& b);

/// [[a, 0], [0, d]]
Mat block_diag(const Mat& a, const Mat& d);
/// [[a, b], [c, d]] with consistent shapes
Mat block2x2(const Mat& a, const Mat& b, const Mat& c, const Mat& d);

Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);

bool same_shape(const Mat& a, const Mat& b);
void require_square(const Mat& a, const char* who);
void require_same_shape(const Mat& a, const Mat& b, const char* who);

}  // namespace cqf
