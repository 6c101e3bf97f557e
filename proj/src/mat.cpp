#include "cqf/mat.hpp"

#include <cmath>
#include <string>

namespace cqf {

namespace {

void require(bool cond, ErrorKind kind, const std::string& msg) {
    if (!cond) throw Error(kind, msg);
}

}  // namespace

Mat::Mat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0.0) {
    require(rows >= 0 && cols >= 0, ErrorKind::DimensionMismatch, "negative matrix dimension");
}

Mat::Mat(int rows, int cols, std::vector<double> entries) : rows_(rows), cols_(cols), data_(std::move(entries)) {
    require(rows >= 0 && cols >= 0, ErrorKind::DimensionMismatch, "negative matrix dimension");
    require(data_.size() == static_cast<std::size_t>(rows) * cols, ErrorKind::DimensionMismatch,
            "entry count does not match rows*cols");
    require(all_finite(), ErrorKind::NotFinite, "matrix entries must be finite");
}

Mat::Mat(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    data_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        require(static_cast<int>(r.size()) == cols_, ErrorKind::DimensionMismatch, "ragged initializer list");
        data_.insert(data_.end(), r.begin(), r.end());
    }
    require(all_finite(), ErrorKind::NotFinite, "matrix entries must be finite");
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Mat Mat::zero(int rows, int cols) { return Mat(rows, cols); }

Mat Mat::column(const std::vector<double>& v) {
    Mat m(static_cast<int>(v.size()), 1);
    m.data_ = v;
    require(m.all_finite(), ErrorKind::NotFinite, "vector entries must be finite");
    return m;
}

bool Mat::all_finite() const {
    for (double x : data_)
        if (!std::isfinite(x)) return false;
    return true;
}

Mat Mat::block(int i0, int j0, int r, int c) const {
    require(i0 >= 0 && j0 >= 0 && r >= 0 && c >= 0 && i0 + r <= rows_ && j0 + c <= cols_,
            ErrorKind::DimensionMismatch, "block out of range");
    Mat out(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) out(i, j) = (*this)(i0 + i, j0 + j);
    return out;
}

void Mat::set_block(int i0, int j0, const Mat& m) {
    require(i0 >= 0 && j0 >= 0 && i0 + m.rows() <= rows_ && j0 + m.cols() <= cols_, ErrorKind::DimensionMismatch,
            "set_block out of range");
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) (*this)(i0 + i, j0 + j) = m(i, j);
}

bool same_shape(const Mat& a, const Mat& b) { return a.rows() == b.rows() && a.cols() == b.cols(); }

void require_square(const Mat& a, const char* who) {
    if (!a.square()) throw Error(ErrorKind::DimensionMismatch, std::string(who) + ": matrix must be square");
}

void require_same_shape(const Mat& a, const Mat& b, const char* who) {
    if (!same_shape(a, b)) throw Error(ErrorKind::DimensionMismatch, std::string(who) + ": shape mismatch");
}

Mat operator+(const Mat& a, const Mat& b) {
    require_same_shape(a, b, "operator+");
    Mat out = a;
    for (std::size_t k = 0; k < out.data().size(); ++k) out.data()[k] += b.data()[k];
    return out;
}

Mat operator-(const Mat& a, const Mat& b) {
    require_same_shape(a, b, "operator-");
    Mat out = a;
    for (std::size_t k = 0; k < out.data().size(); ++k) out.data()[k] -= b.data()[k];
    return out;
}

Mat operator-(const Mat& a) { return -1.0 * a; }

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "operator*: inner dimensions disagree");
    Mat out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

Mat operator*(double s, const Mat& a) {
    Mat out = a;
    for (double& x : out.data()) x *= s;
    return out;
}

Mat operator*(const Mat& a, double s) { return s * a; }

Mat transpose(const Mat& a) {
    Mat out(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
    return out;
}

Mat symmetrize(const Mat& m) {
    require_square(m, "symmetrize");
    Mat out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j <= i; ++j) {
            const double v = 0.5 * (m(i, j) + m(j, i));
            out(i, j) = v;
            out(j, i) = v;
        }
    return out;
}

double frob_inner(const Mat& a, const Mat& b) {
    require_same_shape(a, b, "frob_inner");
    double s = 0.0;
    for (std::size_t k = 0; k < a.data().size(); ++k) s += a.data()[k] * b.data()[k];
    return s;
}

double frob_norm(const Mat& a) { return std::sqrt(frob_inner(a, a)); }

double max_abs(const Mat& a) {
    double m = 0.0;
    for (double x : a.data()) m = std::max(m, std::abs(x));
    return m;
}

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const double aij = a(i, j);
            if (aij == 0.0) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

Mat block_diag(const Mat& a, const Mat& d) {
    Mat out(a.rows() + d.rows(), a.cols() + d.cols());
    out.set_block(0, 0, a);
    out.set_block(a.rows(), a.cols(), d);
    return out;
}

Mat block2x2(const Mat& a, const Mat& b, const Mat& c, const Mat& d) {
    if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() || b.cols() != d.cols())
        throw Error(ErrorKind::DimensionMismatch, "block2x2: inconsistent block shapes");
    Mat out(a.rows() + c.rows(), a.cols() + b.cols());
    out.set_block(0, 0, a);
    out.set_block(0, a.cols(), b);
    out.set_block(a.rows(), 0, c);
    out.set_block(a.rows(), a.cols(), d);
    return out;
}

Mat hstack(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "hstack: row counts disagree");
    Mat out(a.rows(), a.cols() + b.cols());
    out.set_block(0, 0, a);
    out.set_block(0, a.cols(), b);
    return out;
}

Mat vstack(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols()) throw Error(ErrorKind::DimensionMismatch, "vstack: column counts disagree");
    Mat out(a.rows() + b.rows(), a.cols());
    out.set_block(0, 0, a);
    out.set_block(a.rows(), 0, b);
    return out;
}

}  // namespace cqf
