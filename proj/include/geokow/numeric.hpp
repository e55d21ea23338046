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

#ifndef GEOKOW_NUMERIC_HPP
#define GEOKOW_NUMERIC_HPP

#include <algorithm>
#include <complex>
#include <random>
#include <vector>

#include "rational.hpp"

namespace geokow {

using Cx = std::complex<double>;

inline double cabs(const Cx& z) { return std::abs(z); }

/// Roots of a dense complex polynomial (low-to-high coefficients) by
/// Durand-Kerner iteration with Newton polishing. Degrees here are <= 6.
inline std::vector<Cx> poly_roots(std::vector<Cx> coeffs) {
    while (!coeffs.empty() && cabs(coeffs.back()) == 0.0) coeffs.pop_back();
    if (coeffs.size() < 2) return {};
    const std::size_t n = coeffs.size() - 1;
    const Cx lead = coeffs.back();
    for (auto& c : coeffs) c /= lead;

    auto eval = [&](const Cx& z) {
        Cx acc = 0.0;
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
        return acc;
    };
    auto deriv = [&](const Cx& z) {
        Cx acc = 0.0;
        for (std::size_t i = coeffs.size(); i-- > 1;) acc = acc * z + double(i) * coeffs[i];
        return acc;
    };

    std::vector<Cx> r(n);
    Cx seed(0.4, 0.9);
    Cx p = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        p *= seed;
        r[i] = p;
    }
    for (int iter = 0; iter < 500; ++iter) {
        double delta = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            Cx num = eval(r[i]);
            Cx den = 1.0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) den *= (r[i] - r[j]);
            Cx step = num / den;
            r[i] -= step;
            delta = std::max(delta, cabs(step));
        }
        if (delta < 1e-14) break;
    }
    for (auto& z : r)
        for (int k = 0; k < 3; ++k) {
            Cx d = deriv(z);
            if (cabs(d) > 1e-300) z -= eval(z) / d;
        }
    return r;
}

/// Roots of a quadratic a z^2 + b z + c (a != 0), numerically stable pairing.
inline std::pair<Cx, Cx> quadratic_roots(const Cx& a, const Cx& b, const Cx& c) {
    Cx disc = std::sqrt(b * b - 4.0 * a * c);
    if (std::real(std::conj(b) * disc) < 0.0) disc = -disc;
    Cx q = -0.5 * (b + disc);
    Cx r1 = q / a;
    Cx r2 = (cabs(q) > 0.0) ? c / q : -r1 - b / a;
    return {r1, r2};
}

/// Scale-relative multiset distance: min over pairings of max element gap.
/// n is tiny (2 or 4), so brute-force over permutations.
inline double multiset_distance(std::vector<Cx> a, std::vector<Cx> b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    std::vector<std::size_t> idx(a.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    double best = std::numeric_limits<double>::infinity();
    do {
        double worst = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i)
            worst = std::max(worst, cabs(a[i] - b[idx[i]]));
        best = std::min(best, worst);
    } while (std::next_permutation(idx.begin(), idx.end()));
    return best;
}

inline double multiset_scale(const std::vector<Cx>& a, const std::vector<Cx>& b) {
    double s = 1.0;
    for (const auto& z : a) s = std::max(s, cabs(z));
    for (const auto& z : b) s = std::max(s, cabs(z));
    return s;
}

inline bool multisets_match(const std::vector<Cx>& a, const std::vector<Cx>& b, double tol) {
    return multiset_distance(a, b) <= tol * multiset_scale(a, b);
}

/// Deterministic draws for tests and seeded verification runs.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::mt19937_64& engine() { return eng_; }

    /// Small rational with numerator in [-bound, bound] and denominator in [1, dbound].
    Rational rational(int bound = 9, int dbound = 5) {
        std::uniform_int_distribution<int> num(-bound, bound);
        std::uniform_int_distribution<int> den(1, dbound);
        return Rational(num(eng_), den(eng_));
    }
    Rational nonzero_rational(int bound = 9, int dbound = 5) {
        for (;;) {
            Rational q = rational(bound, dbound);
            if (!q.is_zero()) return q;
        }
    }
    double real(double lo = -1.0, double hi = 1.0) {
        std::uniform_real_distribution<double> d(lo, hi);
        return d(eng_);
    }
    Cx complex(double scale = 1.0) { return Cx(real(-scale, scale), real(-scale, scale)); }
    Cx unit_offset_complex(double scale = 1.0) {
        // bounded away from 0
        for (;;) {
            Cx z = complex(scale);
            if (cabs(z) > 0.2 * scale) return z;
        }
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace geokow

#endif  // GEOKOW_NUMERIC_HPP
