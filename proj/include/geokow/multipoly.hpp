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

#ifndef GEOKOW_MULTIPOLY_HPP
#define GEOKOW_MULTIPOLY_HPP

#include <algorithm>
#include <complex>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace geokow {

/// Exact multivariate polynomial over Rational with a fixed, ordered variable
/// list. Terms map exponent tuples to nonzero coefficients. Variable order is
/// part of the type's value; mixing polynomials over different variable lists
/// is an error (align explicitly with aligned_to()).
class MultiPoly {
public:
    using Exps = std::vector<int>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(std::vector<std::string> vars, const Rational& c) {
        MultiPoly p(std::move(vars));
        if (!c.is_zero()) p.terms_[Exps(p.vars_.size(), 0)] = c;
        return p;
    }
    static MultiPoly var(std::vector<std::string> vars, const std::string& name, int power = 1) {
        MultiPoly p(std::move(vars));
        Exps e(p.vars_.size(), 0);
        e[p.index_of(name)] = power;
        p.terms_[e] = Rational(1);
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exps, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    std::size_t index_of(const std::string& name) const {
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) throw std::invalid_argument("MultiPoly: unknown variable " + name);
        return static_cast<std::size_t>(it - vars_.begin());
    }
    bool has_var(const std::string& name) const {
        return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
    }

    void add_term(const Exps& e, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MultiPoly operator-() const {
        MultiPoly r(vars_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        a.check_same(b);
        MultiPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        a.check_same(b);
        MultiPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_same(b);
        MultiPoly r(a.vars_);
        Exps e(a.vars_.size());
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    friend MultiPoly operator*(const Rational& c, const MultiPoly& p) {
        MultiPoly r(p.vars_);
        if (c.is_zero()) return r;
        for (const auto& [e, pc] : p.terms_) r.terms_[e] = c * pc;
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    MultiPoly pow(int e) const {
        if (e < 0) throw std::invalid_argument("MultiPoly: negative power");
        MultiPoly r = constant(vars_, Rational(1));
        MultiPoly base = *this;
        while (e) {
            if (e & 1) r *= base;
            if (e >>= 1) base *= base;
        }
        return r;
    }

    int degree(const std::string& name) const {
        std::size_t i = index_of(name);
        int d = -1;  // -1 for the zero polynomial
        for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
        return d;
    }
    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_)
            d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
        return d;
    }

    /// Coefficient of name^k, as a polynomial over the same variable list
    /// (with that variable's exponent set to 0).
    MultiPoly coeff_of(const std::string& name, int k) const {
        std::size_t i = index_of(name);
        MultiPoly r(vars_);
        for (const auto& [e, c] : terms_)
            if (e[i] == k) {
                Exps e2 = e;
                e2[i] = 0;
                r.add_term(e2, c);
            }
        return r;
    }

    MultiPoly derivative(const std::string& name) const {
        std::size_t i = index_of(name);
        MultiPoly r(vars_);
        for (const auto& [e, c] : terms_)
            if (e[i] > 0) {
                Exps e2 = e;
                e2[i] -= 1;
                r.add_term(e2, Rational(e[i]) * c);
            }
        return r;
    }

    /// Substitute one variable by an exact rational value.
    MultiPoly subst(const std::string& name, const Rational& v) const {
        std::size_t i = index_of(name);
        MultiPoly r(vars_);
        for (const auto& [e, c] : terms_) {
            Exps e2 = e;
            e2[i] = 0;
            r.add_term(e2, c * v.pow(e[i]));
        }
        return r;
    }

    /// Substitute one variable by a polynomial over the same variable list.
    MultiPoly subst(const std::string& name, const MultiPoly& v) const {
        check_same(v);
        std::size_t i = index_of(name);
        int dmax = degree(name);
        std::vector<MultiPoly> vpow;
        vpow.push_back(constant(vars_, Rational(1)));
        for (int k = 1; k <= dmax; ++k) vpow.push_back(vpow.back() * v);
        MultiPoly r(vars_);
        for (const auto& [e, c] : terms_) {
            Exps e2 = e;
            e2[i] = 0;
            MultiPoly t(vars_);
            t.terms_[e2] = c;
            r += t * vpow[static_cast<std::size_t>(e[i])];
        }
        return r;
    }

    Rational eval(const std::vector<Rational>& point) const {
        if (point.size() != vars_.size()) throw std::invalid_argument("MultiPoly::eval arity");
        Rational acc(0);
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < e.size(); ++i) t *= point[i].pow(e[i]);
            acc += t;
        }
        return acc;
    }

    std::complex<double> eval(const std::vector<std::complex<double>>& point) const {
        if (point.size() != vars_.size()) throw std::invalid_argument("MultiPoly::eval arity");
        std::complex<double> acc = 0.0;
        for (const auto& [e, c] : terms_) {
            std::complex<double> t = c.to_double();
            for (std::size_t i = 0; i < e.size(); ++i)
                for (int k = 0; k < e[i]; ++k) t *= point[i];
            acc += t;
        }
        return acc;
    }

    /// Embed into a wider variable list (must contain every present variable).
    MultiPoly aligned_to(const std::vector<std::string>& wider) const {
        MultiPoly r(wider);
        std::vector<std::size_t> where(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) where[i] = r.index_of(vars_[i]);
        for (const auto& [e, c] : terms_) {
            Exps e2(wider.size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) e2[where[i]] = e[i];
            r.add_term(e2, c);
        }
        return r;
    }

    /// Univariate dense coefficient vector (low to high); poly must involve
    /// only `name`.
    std::vector<Rational> univariate(const std::string& name) const {
        std::size_t i = index_of(name);
        int d = std::max(degree(name), 0);
        std::vector<Rational> out(static_cast<std::size_t>(d) + 1, Rational(0));
        for (const auto& [e, c] : terms_) {
            for (std::size_t j = 0; j < e.size(); ++j)
                if (j != i && e[j] != 0)
                    throw std::invalid_argument("MultiPoly::univariate: extra variable present");
            out[static_cast<std::size_t>(e[i])] = c;
        }
        return out;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c.str() << ")";
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                os << "*" << vars_[i];
                if (e[i] != 1) os << "^" << e[i];
            }
        }
        return os.str();
    }

private:
    void check_same(const MultiPoly& o) const {
        if (vars_ != o.vars_)
            throw std::invalid_argument("MultiPoly: variable lists differ (align first)");
    }

    std::vector<std::string> vars_;
    std::map<Exps, Rational> terms_;
};

/// Rectangular matrix of polynomials sharing one variable list.
class PolyMatrix {
public:
    PolyMatrix(std::size_t rows, std::size_t cols, const std::vector<std::string>& vars)
        : rows_(rows), cols_(cols), data_(rows * cols, MultiPoly::constant(vars, Rational(0))) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    MultiPoly& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const MultiPoly& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    PolyMatrix minor_matrix(std::size_t di, std::size_t dj) const {
        PolyMatrix m(rows_ - 1, cols_ - 1, data_[0].vars());
        for (std::size_t i = 0, mi = 0; i < rows_; ++i) {
            if (i == di) continue;
            for (std::size_t j = 0, mj = 0; j < cols_; ++j) {
                if (j == dj) continue;
                m.at(mi, mj) = at(i, j);
                ++mj;
            }
            ++mi;
        }
        return m;
    }

    /// Exact determinant by cofactor expansion along the first row.
    MultiPoly det() const {
        if (rows_ != cols_) throw std::invalid_argument("PolyMatrix::det: non-square matrix");
        if (rows_ == 1) return at(0, 0);
        MultiPoly acc(data_[0].vars());
        for (std::size_t j = 0; j < cols_; ++j) {
            if (at(0, j).is_zero()) continue;
            MultiPoly term = at(0, j) * minor_matrix(0, j).det();
            acc += (j % 2 == 0) ? term : -term;
        }
        return acc;
    }

private:
    std::size_t rows_, cols_;
    std::vector<MultiPoly> data_;
};

}  // namespace geokow

#endif  // GEOKOW_MULTIPOLY_HPP
