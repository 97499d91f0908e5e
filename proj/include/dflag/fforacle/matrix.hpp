/*
Copyright 2026 The dflag Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dflag/fforacle/field.hpp"

namespace dflag::fforacle {

/// Dense row-major matrix over a prime field.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> data;

    Matrix() = default;
    Matrix(int r, int c)
        : rows(r),
          cols(c),
          data(static_cast<std::size_t>(r * c), 0)
    {
    }

    static Matrix identity(int d)
    {
        Matrix m(d, d);
        for (int i = 0; i < d; ++i) {
            m.at(i, i) = 1;
        }
        return m;
    }

    std::uint8_t& at(int r, int c) { return data[static_cast<std::size_t>(r * cols + c)]; }
    std::uint8_t at(int r, int c) const { return data[static_cast<std::size_t>(r * cols + c)]; }

    bool operator==(const Matrix&) const = default;

    std::string key() const { return std::string(data.begin(), data.end()); }
};

inline Matrix multiply(const PrimeField& f, const Matrix& a, const Matrix& b)
{
    Matrix out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int k = 0; k < a.cols; ++k) {
            const int x = a.at(i, k);
            if (x == 0) {
                continue;
            }
            for (int j = 0; j < b.cols; ++j) {
                out.at(i, j) = f.add(out.at(i, j), f.mul(x, b.at(k, j)));
            }
        }
    }
    return out;
}

inline Matrix transpose(const Matrix& a)
{
    Matrix out(a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) {
            out.at(j, i) = a.at(i, j);
        }
    }
    return out;
}

/// Brings `m` to reduced row echelon form in place; returns the rank. Zero rows are dropped.
inline int rref(const PrimeField& f, Matrix& m)
{
    int rank = 0;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r) {
            if (m.at(r, c) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) {
            continue;
        }
        if (pivot != rank) {
            for (int j = 0; j < m.cols; ++j) {
                std::swap(m.at(pivot, j), m.at(rank, j));
            }
        }
        const int s = f.inv(m.at(rank, c));
        for (int j = 0; j < m.cols; ++j) {
            m.at(rank, j) = f.mul(m.at(rank, j), s);
        }
        for (int r = 0; r < m.rows; ++r) {
            const int x = m.at(r, c);
            if (r == rank || x == 0) {
                continue;
            }
            for (int j = 0; j < m.cols; ++j) {
                m.at(r, j) = f.sub(m.at(r, j), f.mul(x, m.at(rank, j)));
            }
        }
        ++rank;
    }
    m.rows = rank;
    m.data.resize(static_cast<std::size_t>(rank * m.cols));
    return rank;
}

/// Matrix inverse by Gauss-Jordan elimination; throws on a singular input.
inline Matrix inverse(const PrimeField& f, const Matrix& a)
{
    const int d = a.rows;
    Matrix aug(d, 2 * d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            aug.at(i, j) = a.at(i, j);
        }
        aug.at(i, d + i) = 1;
    }
    if (rref(f, aug) != d) {
        throw InvalidInput("inverse: singular matrix");
    }
    for (int i = 0; i < d; ++i) {
        if (aug.at(i, i) != 1) {
            throw InvalidInput("inverse: singular matrix");
        }
    }
    Matrix out(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            out.at(i, j) = aug.at(i, d + j);
        }
    }
    return out;
}

/// exp(X) = sum X^k / k! for a nilpotent X with X^q = 0.
inline Matrix exp_nilpotent(const PrimeField& f, const Matrix& x)
{
    const int d = x.rows;
    Matrix out = Matrix::identity(d);
    Matrix power = Matrix::identity(d);
    int factorial = 1;
    for (int k = 1; k < f.q(); ++k) {
        power = multiply(f, power, x);
        factorial = factorial * k % f.q();
        const int c = f.inv(factorial);
        for (std::size_t i = 0; i < out.data.size(); ++i) {
            out.data[i] = f.add(out.data[i], f.mul(c, power.data[i]));
        }
    }
    if (multiply(f, power, x) != Matrix(d, d)) {
        throw InvalidInput("exp_nilpotent: X^q != 0");
    }
    return out;
}

} // namespace dflag::fforacle
