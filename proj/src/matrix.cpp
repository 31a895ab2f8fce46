#include "schober/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace schober {

Matrix Matrix::identity(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::logic_error("matrix shape mismatch in +");
    Matrix m(field_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] + o.e_[i];
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::logic_error("matrix shape mismatch in -");
    Matrix m(field_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] - o.e_[i];
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::logic_error("matrix shape mismatch in *");
    Matrix m(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (!b.is_zero()) m.at(i, j) += a * b;
            }
        }
    return m;
}

Matrix Matrix::operator*(const Scalar& s) const {
    Matrix m(field_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] * s;
    return m;
}

Matrix Matrix::operator-() const {
    Matrix m(field_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = -e_[i];
    return m;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& s : e_)
        if (!s.is_zero()) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix m(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Matrix Matrix::hstack(const Matrix& o) const {
    if (rows_ != o.rows_) throw std::logic_error("hstack row mismatch");
    Matrix m(field_, rows_, cols_ + o.cols_);
    m.set_block(0, 0, *this);
    m.set_block(0, cols_, o);
    return m;
}

Matrix Matrix::vstack(const Matrix& o) const {
    if (cols_ != o.cols_) throw std::logic_error("vstack col mismatch");
    Matrix m(field_, rows_ + o.rows_, cols_);
    m.set_block(0, 0, *this);
    m.set_block(rows_, 0, o);
    return m;
}

Matrix Matrix::col(std::size_t c) const { return cols_slice(c, 1); }

Matrix Matrix::cols_slice(std::size_t from, std::size_t count) const {
    Matrix m(field_, rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < count; ++j) m.at(i, j) = at(i, from + j);
    return m;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::logic_error("set_block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) at(r0 + i, c0 + j) = b.at(i, j);
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t r, std::size_t c) const {
    Matrix m(field_, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = at(r0 + i, c0 + j);
    return m;
}

Matrix Matrix::tensor(const Matrix& o) const {
    Matrix m(field_, rows_ * o.rows_, cols_ * o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Scalar& a = at(i, j);
            if (a.is_zero()) continue;
            for (std::size_t k = 0; k < o.rows_; ++k)
                for (std::size_t l = 0; l < o.cols_; ++l)
                    m.at(i * o.rows_ + k, j * o.cols_ + l) = a * o.at(k, l);
        }
    return m;
}

std::vector<std::pair<std::size_t, std::size_t>> Matrix::echelon(Matrix& m) {
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols_ && row < m.rows_; ++col) {
        std::size_t pr = row;
        while (pr < m.rows_ && m.at(pr, col).is_zero()) ++pr;
        if (pr == m.rows_) continue;
        if (pr != row)
            for (std::size_t j = 0; j < m.cols_; ++j) std::swap(m.at(pr, j), m.at(row, j));
        Scalar inv = m.at(row, col).inv();
        for (std::size_t j = col; j < m.cols_; ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows_; ++i) {
            if (i == row) continue;
            const Scalar f = m.at(i, col);
            if (f.is_zero()) continue;
            for (std::size_t j = col; j < m.cols_; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.emplace_back(row, col);
        ++row;
    }
    return pivots;
}

std::size_t Matrix::rank() const {
    Matrix m = *this;
    return echelon(m).size();
}

std::vector<std::size_t> Matrix::pivot_columns() const {
    Matrix m = *this;
    auto pv = echelon(m);
    std::vector<std::size_t> out;
    out.reserve(pv.size());
    for (auto& p : pv) out.push_back(p.second);
    return out;
}

Matrix Matrix::kernel_basis() const {
    Matrix m = *this;
    auto pivots = echelon(m);
    std::vector<bool> is_pivot(cols_, false);
    for (auto& p : pivots) is_pivot[p.second] = true;
    std::size_t free_count = cols_ - pivots.size();
    Matrix k(field_, cols_, free_count);
    std::size_t fc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (is_pivot[c]) continue;
        k.at(c, fc) = Scalar::one(field_);
        for (auto& p : pivots)
            if (p.second < c) k.at(p.second, fc) = -m.at(p.first, c);
        ++fc;
    }
    return k;
}

std::optional<Matrix> Matrix::solve(const Matrix& b) const {
    if (b.rows_ != rows_) throw std::logic_error("solve: rhs row mismatch");
    Matrix aug = hstack(b);
    auto pivots = echelon(aug);
    // any pivot in the augmented part means inconsistency
    for (auto& p : pivots)
        if (p.second >= cols_) return std::nullopt;
    Matrix x(field_, cols_, b.cols_);
    for (auto& p : pivots)
        for (std::size_t j = 0; j < b.cols_; ++j) x.at(p.second, j) = aug.at(p.first, cols_ + j);
    return x;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << rows_ << "x" << cols_ << " [";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j) os << at(i, j).str() << (j + 1 < cols_ ? ", " : "");
        os << "]" << (i + 1 < rows_ ? ", " : "");
    }
    os << "]";
    return os.str();
}

}  // namespace schober
