/*
   Copyright 2026 The geokow authors

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

#ifndef GEOKOW_ALGEBRA_HPP
#define GEOKOW_ALGEBRA_HPP

#include <array>
#include <optional>
#include <vector>

#include "multipoly.hpp"

namespace geokow {

/// Half-discriminant of a quadratic A v^2 + 2B v + C:  D_v := B^2 - AC.
/// This is the convention used throughout; the classical b^2-4ac equals 4*D_v.
inline MultiPoly discriminant_half(const MultiPoly& p, const std::string& v) {
    if (p.degree(v) != 2) throw std::invalid_argument("discriminant_half: not quadratic in variable");
    MultiPoly A = p.coeff_of(v, 2);
    MultiPoly B = Rational(1, 2) * p.coeff_of(v, 1);
    MultiPoly C = p.coeff_of(v, 0);
    return B * B - A * C;
}

/// Invertible fractional-linear map v -> (a v + b) / (c v + d).
struct Moebius {
    Rational a, b, c, d;

    Moebius(Rational a_, Rational b_, Rational c_, Rational d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
        if ((a * d - c * b).is_zero()) throw std::invalid_argument("degenerate Moebius");
    }
    static Moebius identity() { return Moebius(1, 0, 0, 1); }
    Moebius inverse() const { return Moebius(d, -b, -c, a); }

    Rational det() const { return a * d - b * c; }
    Rational apply(const Rational& x) const {
        Rational den = c * x + d;
        if (den.is_zero()) throw std::domain_error("Moebius: pole");
        return (a * x + b) / den;
    }
    std::complex<double> apply(const std::complex<double>& x) const {
        return (a.to_double() * x + b.to_double()) / (c.to_double() * x + d.to_double());
    }
};

/// Substitute v <- (a v + b)/(c v + d) and clear denominators with
/// (c v + d)^deg_v(p).
inline MultiPoly moebius_substitute(const MultiPoly& p, const std::string& v, const Moebius& m) {
    int d = p.degree(v);
    if (d < 0) return p;
    const auto& vars = p.vars();
    MultiPoly num = Rational(1) * MultiPoly::var(vars, v);
    MultiPoly lin_num = m.a * MultiPoly::var(vars, v) + MultiPoly::constant(vars, m.b);
    MultiPoly lin_den = m.c * MultiPoly::var(vars, v) + MultiPoly::constant(vars, m.d);
    std::vector<MultiPoly> np{MultiPoly::constant(vars, Rational(1))};
    std::vector<MultiPoly> dp{MultiPoly::constant(vars, Rational(1))};
    for (int k = 1; k <= d; ++k) {
        np.push_back(np.back() * lin_num);
        dp.push_back(dp.back() * lin_den);
    }
    MultiPoly out(vars);
    for (int k = 0; k <= d; ++k) {
        MultiPoly ck = p.coeff_of(v, k);
        if (ck.is_zero()) continue;
        out += ck * np[static_cast<std::size_t>(k)] * dp[static_cast<std::size_t>(d - k)];
    }
    return out;
}

/// Dense exact-rational matrix.
class RatMatrix {
public:
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    /// Exact rank by Gaussian elimination over Q.
    std::size_t rank() const {
        RatMatrix m = *this;
        std::size_t rk = 0;
        for (std::size_t col = 0; col < cols_ && rk < rows_; ++col) {
            std::size_t piv = rk;
            while (piv < rows_ && m.at(piv, col).is_zero()) ++piv;
            if (piv == rows_) continue;
            if (piv != rk)
                for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(rk, j));
            for (std::size_t i = rk + 1; i < rows_; ++i) {
                if (m.at(i, col).is_zero()) continue;
                Rational f = m.at(i, col) / m.at(rk, col);
                for (std::size_t j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(rk, j);
            }
            ++rk;
        }
        return rk;
    }

    /// Solve m x = b for square m (exact); throws on singular.
    std::vector<Rational> solve(std::vector<Rational> b) const {
        if (rows_ != cols_ || b.size() != rows_) throw std::invalid_argument("RatMatrix::solve shape");
        RatMatrix m = *this;
        std::size_t n = rows_;
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t piv = k;
            while (piv < n && m.at(piv, k).is_zero()) ++piv;
            if (piv == n) throw std::domain_error("RatMatrix::solve: singular");
            if (piv != k) {
                for (std::size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(k, j));
                std::swap(b[piv], b[k]);
            }
            for (std::size_t i = k + 1; i < n; ++i) {
                if (m.at(i, k).is_zero()) continue;
                Rational f = m.at(i, k) / m.at(k, k);
                for (std::size_t j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
                b[i] -= f * b[k];
            }
        }
        std::vector<Rational> x(n, Rational(0));
        for (std::size_t i = n; i-- > 0;) {
            Rational acc = b[i];
            for (std::size_t j = i + 1; j < n; ++j) acc -= m.at(i, j) * x[j];
            x[i] = acc / m.at(i, i);
        }
        return x;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

/// 5x5 coefficient matrix T with T[i][j] = coeff of x1^i x2^j (0-based),
/// for a polynomial in exactly the two variables x1name, x2name of degree
/// <= 4 in each.
inline RatMatrix coeff_matrix(const MultiPoly& p, const std::string& x1name,
                              const std::string& x2name) {
    std::size_t i1 = p.index_of(x1name), i2 = p.index_of(x2name);
    RatMatrix T(5, 5);
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t j = 0; j < e.size(); ++j)
            if (j != i1 && j != i2 && e[j] != 0)
                throw std::invalid_argument("coeff_matrix: extra variables present");
        if (e[i1] > 4 || e[i2] > 4) throw std::invalid_argument("coeff_matrix: degree > 4");
        T.at(static_cast<std::size_t>(e[i1]), static_cast<std::size_t>(e[i2])) = c;
    }
    return T;
}

inline std::size_t rank(const RatMatrix& m) { return m.rank(); }

/// Exact multivariate division; returns quotient iff division is exact.
inline std::optional<MultiPoly> try_divide_exact(const MultiPoly& p, const MultiPoly& q) {
    if (q.is_zero()) return std::nullopt;
    MultiPoly rem = p;
    MultiPoly quot(p.vars());
    const auto& qlead = *q.terms().rbegin();  // lex-largest exponent
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().rbegin();
        MultiPoly::Exps diff(rlead.first.size());
        for (std::size_t i = 0; i < diff.size(); ++i) {
            diff[i] = rlead.first[i] - qlead.first[i];
            if (diff[i] < 0) return std::nullopt;
        }
        MultiPoly t(p.vars());
        t.add_term(diff, rlead.second / qlead.second);
        quot += t;
        rem -= t * q;
    }
    return quot;
}

}  // namespace geokow

#endif  // GEOKOW_ALGEBRA_HPP
