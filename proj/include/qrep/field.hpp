#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace qrep {

using Elem = std::uint8_t;

// Arithmetic in F_p for a small prime p (2, 3, 5 or 7).
class PrimeField {
public:
    explicit PrimeField(int p = 2);

    int order() const noexcept { return p_; }
    Elem add(Elem a, Elem b) const noexcept { return static_cast<Elem>((a + b) % p_); }
    Elem sub(Elem a, Elem b) const noexcept { return static_cast<Elem>((a + p_ - b) % p_); }
    Elem neg(Elem a) const noexcept { return static_cast<Elem>((p_ - a) % p_); }
    Elem mul(Elem a, Elem b) const noexcept { return static_cast<Elem>((a * b) % p_); }
    Elem inv(Elem a) const;  // a != 0
    // Generator of the multiplicative group.
    Elem primitive() const noexcept { return primitive_; }

    bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }

private:
    int p_;
    Elem primitive_;
    std::array<Elem, 8> inverse_{};
};

bool is_supported_prime(int p) noexcept;

struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<Elem> a;  // row-major

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    static Matrix identity(int n);

    Elem& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    Elem operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
    bool is_zero() const;
    bool operator==(const Matrix&) const = default;
};

Matrix multiply(const PrimeField& f, const Matrix& x, const Matrix& y);
Matrix add(const PrimeField& f, const Matrix& x, const Matrix& y);
Matrix scale(const PrimeField& f, Elem c, const Matrix& x);

// Row-reduces in place; returns the pivot columns.
std::vector<int> row_reduce(const PrimeField& f, Matrix& m);
int rank(const PrimeField& f, Matrix m);

// Basis of {x : m x = 0}, one vector per free column (ascending), read
// off the reduced row echelon form, so the result is deterministic.
std::vector<std::vector<Elem>> nullspace(const PrimeField& f, Matrix m);

}  // namespace qrep
