#include "qrep/field.hpp"

#include <stdexcept>
#include <utility>

#include "qrep/errors.hpp"

namespace qrep {

bool is_supported_prime(int p) noexcept { return p == 2 || p == 3 || p == 5 || p == 7; }

PrimeField::PrimeField(int p) : p_(p), primitive_(1) {
    if (!is_supported_prime(p)) throw InputError("field order must be a prime <= 7, got " + std::to_string(p));
    for (int a = 1; a < p; ++a)
        for (int b = 1; b < p; ++b)
            if (a * b % p == 1) inverse_[a] = static_cast<Elem>(b);
    for (int g = 1; g < p; ++g) {
        int x = g, ord = 1;
        while (x != 1) {
            x = x * g % p;
            ++ord;
        }
        if (ord == p - 1) {
            primitive_ = static_cast<Elem>(g);
            break;
        }
    }
}

Elem PrimeField::inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return inverse_[a];
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool Matrix::is_zero() const {
    for (Elem x : a)
        if (x) return false;
    return true;
}

Matrix multiply(const PrimeField& f, const Matrix& x, const Matrix& y) {
    Matrix r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            Elem xik = x(i, k);
            if (!xik) continue;
            for (int j = 0; j < y.cols; ++j) r(i, j) = f.add(r(i, j), f.mul(xik, y(k, j)));
        }
    return r;
}

Matrix add(const PrimeField& f, const Matrix& x, const Matrix& y) {
    Matrix r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = f.add(r.a[i], y.a[i]);
    return r;
}

Matrix scale(const PrimeField& f, Elem c, const Matrix& x) {
    Matrix r = x;
    for (Elem& e : r.a) e = f.mul(c, e);
    return r;
}

std::vector<int> row_reduce(const PrimeField& f, Matrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int piv = -1;
        for (int r = row; r < m.rows; ++r)
            if (m(r, col)) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(row, j));
        Elem s = f.inv(m(row, col));
        for (int j = col; j < m.cols; ++j) m(row, j) = f.mul(s, m(row, j));
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || !m(r, col)) continue;
            Elem c = m(r, col);
            for (int j = col; j < m.cols; ++j) m(r, j) = f.sub(m(r, j), f.mul(c, m(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(const PrimeField& f, Matrix m) { return static_cast<int>(row_reduce(f, m).size()); }

std::vector<std::vector<Elem>> nullspace(const PrimeField& f, Matrix m) {
    auto pivots = row_reduce(f, m);
    std::vector<char> is_pivot(m.cols, 0);
    for (int c : pivots) is_pivot[c] = 1;
    std::vector<std::vector<Elem>> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Elem> v(m.cols, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(m(static_cast<int>(r), free));
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace qrep
