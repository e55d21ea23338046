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

#ifndef GEOKOW_DISCRIMSEP_HPP
#define GEOKOW_DISCRIMSEP_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "numeric.hpp"
#include "pencil.hpp"

namespace geokow {

namespace detail {

inline std::optional<Rational> constant_ratio(const MultiPoly& p, const MultiPoly& q) {
    // p == r*q for a nonzero rational r?
    if (p.is_zero() || q.is_zero()) return std::nullopt;
    if (p.terms().size() != q.terms().size()) return std::nullopt;
    auto ip = p.terms().begin();
    auto iq = q.terms().begin();
    Rational r = ip->second / iq->second;
    for (; ip != p.terms().end(); ++ip, ++iq) {
        if (ip->first != iq->first) return std::nullopt;
        if (ip->second != r * iq->second) return std::nullopt;
    }
    return r;
}

inline std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q.sign() < 0) return std::nullopt;
    if (q.is_zero()) return Rational(0);
    BigInt sn = boost::multiprecision::sqrt(q.num());
    BigInt sd = boost::multiprecision::sqrt(q.den());
    if (sn * sn != q.num() || sd * sd != q.den()) return std::nullopt;
    return Rational(sn, sd);
}

}  // namespace detail

enum class SeparabilityVerdict { strongly, symmetrically, plainly, weakly, not_separable };

/// Certificate-bearing result of the separability test on a three-variable
/// polynomial of degree <= 2 in each variable.
struct SeparabilityReport {
    SeparabilityVerdict verdict = SeparabilityVerdict::not_separable;
    bool degenerate = false;         // some discriminant vanished identically
    bool needs_imaginary_unit = false;  // consistent only after an i-rescale of two factors
    std::array<std::size_t, 3> ranks{};  // rank of T for each discriminant
    std::vector<std::string> variables;
    // Consistent triple f_i(v_i) when verdict is separable (plain or better):
    // D_{v_i}(F) == prod_{j != i} f_j  exactly (up to i-rescale when flagged).
    std::vector<MultiPoly> factors;
    // Per-discriminant rank-1 splits (always filled when ranks permit): for
    // discriminant i, the two univariate factors in the remaining variables.
    std::array<std::array<MultiPoly, 2>, 3> splits{};

    bool separable() const {
        return verdict != SeparabilityVerdict::not_separable &&
               verdict != SeparabilityVerdict::weakly;
    }
};

namespace detail {

/// Split a rank<=1 two-variable polynomial (deg <= 4 each) into univariate
/// factors u(va) * v(vb); v normalized monic, u carries the constant.
inline std::pair<MultiPoly, MultiPoly> rank1_split(const MultiPoly& D, const std::string& va,
                                                   const std::string& vb) {
    const auto vars = D.vars();
    RatMatrix T = coeff_matrix(D, va, vb);
    std::size_t r0 = 0, c0 = 0;
    bool found = false;
    for (std::size_t i = 0; i < 5 && !found; ++i)
        for (std::size_t j = 0; j < 5 && !found; ++j)
            if (!T.at(i, j).is_zero()) {
                r0 = i;
                c0 = j;
                found = true;
            }
    MultiPoly u(vars), v(vars);
    if (!found) return {u, v};  // zero polynomial: zero factors
    for (std::size_t i = 0; i < 5; ++i)
        u.add_term([&] {
            MultiPoly::Exps e(vars.size(), 0);
            e[D.index_of(va)] = static_cast<int>(i);
            return e;
        }(), T.at(i, c0));
    for (std::size_t j = 0; j < 5; ++j)
        v.add_term([&] {
            MultiPoly::Exps e(vars.size(), 0);
            e[D.index_of(vb)] = static_cast<int>(j);
            return e;
        }(), T.at(r0, j) / T.at(r0, c0));
    // monic-leading v, constant into u
    Rational lead(0);
    for (const auto& [e, cc] : v.terms()) lead = cc;  // map order: last is highest exponent
    if (!lead.is_zero() && !(lead == Rational(1))) {
        v = (Rational(1) / lead) * v;
        u = lead * u;
    }
    return {u, v};
}

}  // namespace detail

/// Tests discriminant separability of F(v1,v2,v3), degree <= 2 in each.
inline SeparabilityReport check_separable(const MultiPoly& F) {
    const auto& V = F.vars();
    if (V.size() != 3) throw std::invalid_argument("check_separable: need exactly 3 variables");
    for (const auto& v : V)
        if (F.degree(v) > 2) throw std::invalid_argument("check_separable: degree > 2 in " + v);

    SeparabilityReport rep;
    rep.variables = V;

    std::array<MultiPoly, 3> D{MultiPoly(V), MultiPoly(V), MultiPoly(V)};
    for (std::size_t i = 0; i < 3; ++i) {
        if (F.degree(V[i]) != 2) {
            // pad: B^2 - AC still makes sense with A = 0 only if deg < 2; use
            // the general quadratic data with missing leading part.
            MultiPoly A = F.coeff_of(V[i], 2);
            MultiPoly B = Rational(1, 2) * F.coeff_of(V[i], 1);
            MultiPoly C = F.coeff_of(V[i], 0);
            D[i] = B * B - A * C;
        } else {
            D[i] = discriminant_half(F, V[i]);
        }
    }

    bool any_zero = false, any_rank2 = false;
    for (std::size_t i = 0; i < 3; ++i) {
        std::string va = V[(i + 1) % 3], vb = V[(i + 2) % 3];
        if (V.size() == 3) {
            // keep natural variable order within the split
            std::size_t ia = F.index_of(va), ib = F.index_of(vb);
            if (ia > ib) std::swap(va, vb);
        }
        RatMatrix T = coeff_matrix(D[i], va, vb);
        rep.ranks[i] = T.rank();
        if (rep.ranks[i] == 0) any_zero = true;
        if (rep.ranks[i] >= 2) any_rank2 = true;
        if (rep.ranks[i] <= 1) {
            auto [u, v] = detail::rank1_split(D[i], va, vb);
            rep.splits[i] = {u, v};
        }
    }
    rep.degenerate = any_zero;
    if (any_rank2) {
        rep.verdict = SeparabilityVerdict::not_separable;
        return rep;
    }
    if (any_zero) {
        // All-zero: the definition holds trivially with zero factors. A mix
        // of zero and nonzero discriminants cannot carry a consistent triple.
        bool all_zero = rep.ranks[0] == 0 && rep.ranks[1] == 0 && rep.ranks[2] == 0;
        rep.verdict = all_zero ? SeparabilityVerdict::plainly : SeparabilityVerdict::weakly;
        if (all_zero) rep.factors = {MultiPoly(V), MultiPoly(V), MultiPoly(V)};
        return rep;
    }

    // Assemble a consistent triple from the splits of D2 (gives f1, f3) and
    // D3 (gives f1, f2); then D1 must equal f2*f3 up to the square of the
    // normalization constant, which we remove exactly.
    // locate which split slot corresponds to which variable
    auto split_for = [&](std::size_t disc, const std::string& var) -> MultiPoly {
        for (const auto& s : rep.splits[disc]) {
            bool uses = false, other = false;
            for (const auto& [e, c] : s.terms())
                for (std::size_t k = 0; k < V.size(); ++k)
                    if (e[k] > 0) (V[k] == var ? uses : other) = true;
            if (uses && !other) return s;
        }
        // constant split parts: return the slot matching position convention
        std::string va = V[(disc + 1) % 3], vb = V[(disc + 2) % 3];
        std::size_t ia = F.index_of(va), ib = F.index_of(vb);
        if (ia > ib) std::swap(va, vb);
        return (var == va) ? rep.splits[disc][0] : rep.splits[disc][1];
    };

    MultiPoly f1 = split_for(1, V[0]);  // from D2 = f1 * f3
    MultiPoly f3 = split_for(1, V[2]);
    MultiPoly f2q = split_for(2, V[1]);  // from D3 = f1 * f2
    MultiPoly f1q = split_for(2, V[0]);

    auto r1 = detail::constant_ratio(f1q, f1);
    if (!r1) {
        rep.verdict = SeparabilityVerdict::weakly;
        return rep;
    }
    // Rescale so that D3 == f1 * f2 exactly: D3 = f1q*f2q = r1*f1*f2q.
    MultiPoly f2 = *r1 * f2q;
    // Now D1 must equal kappa * f2 * f3 with kappa the square of the f1
    // ambiguity; remove it exactly when it is a rational square.
    MultiPoly prod = f2 * f3;
    auto kappa = detail::constant_ratio(D[0], prod);
    if (!kappa) {
        rep.verdict = SeparabilityVerdict::weakly;
        return rep;
    }
    auto alpha = detail::rational_sqrt(*kappa);
    if (alpha) {
        f2 = *alpha * f2;
        f3 = *alpha * f3;
        f1 = (Rational(1) / *alpha) * f1;
    } else {
        auto alpha_neg = detail::rational_sqrt(-*kappa);
        if (alpha_neg) {
            // factors consistent only after multiplying two of them by i
            f2 = *alpha_neg * f2;
            f3 = *alpha_neg * f3;
            f1 = (Rational(1) / *alpha_neg) * f1;
            rep.needs_imaginary_unit = true;
        } else {
            rep.verdict = SeparabilityVerdict::weakly;  // irrational constant: not exact
            return rep;
        }
    }

    rep.factors = {f1, f2, f3};
    // proportionality up to variable renaming: compare coefficient vectors
    auto coeffs_of = [&](const MultiPoly& f, const std::string& var) {
        std::vector<Rational> c(5, Rational(0));
        for (const auto& [e, cc] : f.terms()) c[static_cast<std::size_t>(e[f.index_of(var)])] = cc;
        return c;
    };
    auto vec_ratio = [](const std::vector<Rational>& a,
                        const std::vector<Rational>& b) -> std::optional<Rational> {
        Rational r(0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i].is_zero() != b[i].is_zero()) return std::nullopt;
            if (!a[i].is_zero()) {
                Rational q = a[i] / b[i];
                if (r.is_zero())
                    r = q;
                else if (q != r)
                    return std::nullopt;
            }
        }
        if (r.is_zero()) return std::nullopt;
        return r;
    };
    auto c1 = coeffs_of(f1, V[0]), c2 = coeffs_of(f2, V[1]), c3 = coeffs_of(f3, V[2]);
    bool p12 = vec_ratio(c1, c2).has_value();
    bool p23 = vec_ratio(c2, c3).has_value();
    bool p13 = vec_ratio(c1, c3).has_value();
    if (p12 && p23 && p13)
        rep.verdict = SeparabilityVerdict::strongly;
    else if (p23)
        rep.verdict = SeparabilityVerdict::symmetrically;
    else
        rep.verdict = SeparabilityVerdict::plainly;
    return rep;
}

/// rank T_{B^2-AC} == 1 criterion for F = A(x1,x2) s^2 + 2B s + C.
struct Rank1Result {
    bool separable = false;
    std::size_t rank_value = 0;
    bool degenerate_zero = false;  // D == 0: separable with a zero factor
};

inline Rank1Result rank1_criterion(const MultiPoly& F, const std::string& svar,
                                   const std::string& x1var, const std::string& x2var) {
    MultiPoly A = F.coeff_of(svar, 2);
    MultiPoly B = Rational(1, 2) * F.coeff_of(svar, 1);
    MultiPoly C = F.coeff_of(svar, 0);
    MultiPoly D = B * B - A * C;
    Rank1Result r;
    RatMatrix T = coeff_matrix(D, x1var, x2var);
    r.rank_value = T.rank();
    r.degenerate_zero = (r.rank_value == 0);
    r.separable = r.rank_value <= 1;
    return r;
}

/// Literal rank T_{B^2} == 2 criterion for F = A(x1) s^2 + 2B s + C(x2).
struct Rank2Result {
    bool criterion = false;      // literal reading: rank == 2
    std::size_t rank_value = 0;
    bool logged_below_two = false;  // rank < 2 degenerate subcase
};

inline Rank2Result rank2_criterion(const MultiPoly& F, const std::string& svar,
                                   const std::string& x1var, const std::string& x2var) {
    MultiPoly A = F.coeff_of(svar, 2);
    MultiPoly C = F.coeff_of(svar, 0);
    for (const auto& [e, c] : A.terms())
        if (e[A.index_of(x2var)] > 0)
            throw std::invalid_argument("rank2_criterion: A must depend only on " + x1var);
    for (const auto& [e, c] : C.terms())
        if (e[C.index_of(x1var)] > 0)
            throw std::invalid_argument("rank2_criterion: C must depend only on " + x2var);
    MultiPoly B = Rational(1, 2) * F.coeff_of(svar, 1);
    MultiPoly B2 = B * B;
    Rank2Result r;
    r.rank_value = coeff_matrix(B2, x1var, x2var).rank();
    r.criterion = (r.rank_value == 2);
    r.logged_below_two = (r.rank_value < 2);
    return r;
}

/// Transposition: A s^2 + 2B s + C  ->  C s^2 + 2B s + A (roots s -> 1/s).
inline MultiPoly transpose(const MultiPoly& F, const std::string& svar) {
    if (F.degree(svar) > 2) throw std::invalid_argument("transpose: degree > 2 in " + svar);
    MultiPoly A = F.coeff_of(svar, 2);
    MultiPoly B1 = F.coeff_of(svar, 1);
    MultiPoly C = F.coeff_of(svar, 0);
    MultiPoly s = MultiPoly::var(F.vars(), svar);
    return C * s * s + B1 * s + A;
}

/// F(gamma(s), alpha(x1), beta(x2)) with denominators cleared.
inline MultiPoly moebius_closure(const MultiPoly& F, const std::string& svar, const Moebius& gamma,
                                 const std::string& x1var, const Moebius& alpha,
                                 const std::string& x2var, const Moebius& beta) {
    MultiPoly out = moebius_substitute(F, svar, gamma);
    out = moebius_substitute(out, x1var, alpha);
    out = moebius_substitute(out, x2var, beta);
    return out;
}

/// Numeric check of the separable-differential relation on the surface F = 0:
/// there is a sign assignment eps with |sum eps_i dx_i / sqrt(f_i(x_i))| small.
struct DifferentialCheck {
    int tested = 0;
    int passed = 0;
    int skipped = 0;  // samples near branch points or singular fibers
    double max_residual = 0.0;
};

inline DifferentialCheck differential_separability_check(const MultiPoly& F,
                                                         const SeparabilityReport& rep,
                                                         int sample_count, double tol,
                                                         std::uint64_t seed) {
    if (!rep.separable())
        throw std::invalid_argument("differential_separability_check: F not separable");
    const auto& V = F.vars();
    DifferentialCheck out;
    Rng rng(seed);

    auto fval = [&](std::size_t i, const Cx& x) {
        std::vector<Cx> pt(3, Cx(0.0));
        pt[i] = x;
        return rep.factors[i].eval(pt);
    };

    std::array<MultiPoly, 3> dF{F.derivative(V[0]), F.derivative(V[1]), F.derivative(V[2])};
    int attempts = 0;
    while (out.tested + out.skipped < sample_count && attempts < 20 * sample_count) {
        ++attempts;
        Cx x1 = rng.complex(1.2), x2 = rng.complex(1.2);
        // solve F(v0, x1, x2) = 0 for the first variable
        std::vector<Cx> pt{Cx(0), x1, x2};
        auto at = [&](const MultiPoly& p, const Cx& v0) {
            std::vector<Cx> q{v0, x1, x2};
            return p.eval(q);
        };
        Cx A = F.coeff_of(V[0], 2).eval(pt), B = F.coeff_of(V[0], 1).eval(pt),
           C = F.coeff_of(V[0], 0).eval(pt);
        if (cabs(A) < 1e-10) {
            ++out.skipped;
            continue;
        }
        Cx x0 = quadratic_roots(A, B, C).first;
        std::array<Cx, 3> x{x0, x1, x2};
        std::array<Cx, 3> grad{at(dF[0], x0), at(dF[1], x0), at(dF[2], x0)};
        if (cabs(grad[0]) < 1e-8) {
            ++out.skipped;
            continue;
        }
        std::array<Cx, 3> f{fval(0, x[0]), fval(1, x[1]), fval(2, x[2])};
        if (cabs(f[0]) < 1e-6 || cabs(f[1]) < 1e-6 || cabs(f[2]) < 1e-6) {
            ++out.skipped;
            continue;
        }
        Cx dx1 = rng.complex(), dx2 = rng.complex();
        Cx dx0 = -(grad[1] * dx1 + grad[2] * dx2) / grad[0];
        std::array<Cx, 3> term{dx0 / std::sqrt(f[0]), dx1 / std::sqrt(f[1]),
                               dx2 / std::sqrt(f[2])};
        double scale = std::max({cabs(term[0]), cabs(term[1]), cabs(term[2]), 1e-30});
        double best = std::numeric_limits<double>::infinity();
        for (int s1 = -1; s1 <= 1; s1 += 2)
            for (int s2 = -1; s2 <= 1; s2 += 2)
                best = std::min(best,
                                cabs(term[0] + double(s1) * term[1] + double(s2) * term[2]));
        double resid = best / scale;
        ++out.tested;
        out.max_residual = std::max(out.max_residual, resid);
        if (resid < tol) ++out.passed;
    }
    return out;
}

/// Euler-equation corollary: with the first variable frozen, the two-term
/// relation dx1/sqrt(f1(x1)) +- dx2/sqrt(f1(x2)) = 0 holds along the fiber.
inline DifferentialCheck euler_two_term_check(const MultiPoly& F, const SeparabilityReport& rep,
                                              int sample_count, double tol, std::uint64_t seed) {
    if (!rep.separable()) throw std::invalid_argument("euler_two_term_check: F not separable");
    const auto& V = F.vars();
    DifferentialCheck out;
    Rng rng(seed);
    std::array<MultiPoly, 3> dF{F.derivative(V[0]), F.derivative(V[1]), F.derivative(V[2])};
    int attempts = 0;
    while (out.tested + out.skipped < sample_count && attempts < 20 * sample_count) {
        ++attempts;
        Cx x1 = rng.complex(1.2), x2 = rng.complex(1.2);
        std::vector<Cx> pt{Cx(0), x1, x2};
        Cx A = F.coeff_of(V[0], 2).eval(pt), B = F.coeff_of(V[0], 1).eval(pt),
           C = F.coeff_of(V[0], 0).eval(pt);
        if (cabs(A) < 1e-10) {
            ++out.skipped;
            continue;
        }
        Cx x0 = quadratic_roots(A, B, C).first;
        std::vector<Cx> q{x0, x1, x2};
        Cx g1 = dF[1].eval(q), g2 = dF[2].eval(q);
        std::vector<Cx> p1(3, Cx(0)), p2(3, Cx(0));
        p1[1] = x1;
        p2[2] = x2;
        Cx f1 = rep.factors[1].eval(p1), f2 = rep.factors[2].eval(p2);
        if (cabs(g1) < 1e-8 || cabs(f1) < 1e-6 || cabs(f2) < 1e-6) {
            ++out.skipped;
            continue;
        }
        // along the frozen-x0 fiber: g1 dx1 + g2 dx2 = 0
        Cx dx1 = 1.0, dx2 = -g1 / g2;
        Cx t1 = dx1 / std::sqrt(f1), t2 = dx2 / std::sqrt(f2);
        double scale = std::max({cabs(t1), cabs(t2), 1e-30});
        double resid = std::min(cabs(t1 + t2), cabs(t1 - t2)) / scale;
        ++out.tested;
        out.max_residual = std::max(out.max_residual, resid);
        if (resid < tol) ++out.passed;
    }
    return out;
}

/// Fits a symmetric F with leading (x1-x2)^2 into the pencil family; the
/// linear part (K) determines a0..a5 and the constant part (H) is the
/// membership certificate.
struct FamilyFit {
    bool member = false;
    PencilSpec spec{};
    MultiPoly residual;  // H - H_det when not a member
};

inline FamilyFit symmetric_family_fit(const MultiPoly& F, const std::string& svar = "s",
                                      const std::string& x1var = "x1",
                                      const std::string& x2var = "x2") {
    const auto& V = F.vars();
    MultiPoly L = F.coeff_of(svar, 2);
    MultiPoly x1 = MultiPoly::var(V, x1var), x2 = MultiPoly::var(V, x2var);
    if (!(L - (x1 - x2) * (x1 - x2)).is_zero())
        throw std::invalid_argument("symmetric_family_fit: leading coefficient is not (x1-x2)^2");
    MultiPoly Kp = F.coeff_of(svar, 1);
    auto kc = [&](int d1, int d2) {
        MultiPoly c = Kp.coeff_of(x1var, d1).coeff_of(x2var, d2);
        if (c.is_zero()) return Rational(0);
        return c.terms().begin()->second;
    };
    PencilSpec sp{};
    sp[0] = -kc(2, 2);
    sp[1] = Rational(1, 2) * kc(2, 1);
    sp[5] = -kc(2, 0);
    sp[2] = Rational(-1, 4) * kc(1, 1);
    sp[3] = Rational(1, 2) * kc(1, 0);
    sp[4] = -kc(0, 0);
    FamilyFit fit{false, sp, MultiPoly(V)};
    PencilPolys pp = pencil_F_darboux(sp);
    MultiPoly Kref = pp.K.aligned_to(V);
    MultiPoly Href = pp.H.aligned_to(V);
    // rename reference variables if needed
    if (!(Kp - Kref).is_zero()) {
        fit.residual = Kp - Kref;
        return fit;
    }
    MultiPoly H = F.coeff_of(svar, 0);
    fit.residual = H - Href;
    fit.member = fit.residual.is_zero();
    return fit;
}

/// Numeric symmetrizer: a Moebius alpha aligning the x1-factor's roots with
/// the x2-factor's roots, when their cross-ratios allow it.
struct SymmetrizeResult {
    bool found = false;
    CxMoebius alpha{};
    double residual = std::numeric_limits<double>::infinity();
};

inline SymmetrizeResult symmetrize(const MultiPoly& F, const SeparabilityReport& rep) {
    SymmetrizeResult out;
    if (!rep.separable()) return out;
    const auto& V = F.vars();
    auto uni_cx = [&](const MultiPoly& f, const std::string& var) {
        std::vector<Cx> c(5, Cx(0));
        for (const auto& [e, cc] : f.terms())
            c[static_cast<std::size_t>(e[f.index_of(var)])] = cc.to_complex();
        while (!c.empty() && cabs(c.back()) == 0.0) c.pop_back();
        return c;
    };
    auto f1c = uni_cx(rep.factors[1], V[1]);
    auto f2c = uni_cx(rep.factors[2], V[2]);
    if (f1c.size() < 5 || f2c.size() < 5) return out;  // need genuine quartics
    auto r1 = poly_roots(f1c);
    auto r2 = poly_roots(f2c);
    detail::sort_deterministic(r1);
    detail::sort_deterministic(r2);

    // alpha must map roots(f1) onto roots(f2) so that F(s, alpha(x1), x2) has
    // matching branch loci in both slots.
    std::array<int, 4> perm{0, 1, 2, 3};
    double scale = 1.0;
    for (auto& z : r2) scale = std::max(scale, cabs(z));
    do {
        std::array<Cx, 3> src{r1[0], r1[1], r1[2]};
        std::array<Cx, 3> dst{r2[static_cast<std::size_t>(perm[0])],
                              r2[static_cast<std::size_t>(perm[1])],
                              r2[static_cast<std::size_t>(perm[2])]};
        CxMoebius cand = moebius_through(src, dst);
        Cx img = cand.apply(r1[3]);
        double err = cabs(img - r2[static_cast<std::size_t>(perm[3])]);
        if (err < out.residual) {
            out.residual = err;
            out.alpha = cand;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    out.residual /= scale;
    out.found = out.residual < 1e-8;
    return out;
}

}  // namespace geokow

#endif  // GEOKOW_DISCRIMSEP_HPP
