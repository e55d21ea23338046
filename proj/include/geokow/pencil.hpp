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

#ifndef GEOKOW_PENCIL_HPP
#define GEOKOW_PENCIL_HPP

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "multipoly.hpp"
#include "numeric.hpp"

namespace geokow {

/// Tangential coefficients a0..a5 of the conic C1; C2 is w2^2 - 4 w1 w3 = 0.
/// The pencil is C1 + s C2.
struct PencilSpec {
    std::array<Rational, 6> a;

    const Rational& operator[](std::size_t i) const { return a[i]; }
    Rational& operator[](std::size_t i) { return a[i]; }

    static PencilSpec of(int a0, int a1, int a2, int a3, int a4, int a5) {
        return PencilSpec{{Rational(a0), Rational(a1), Rational(a2), Rational(a3), Rational(a4),
                           Rational(a5)}};
    }
};

namespace vars {
inline const std::vector<std::string> sz{"s", "z1", "z2", "z3"};
inline const std::vector<std::string> sxx{"s", "x1", "x2"};
inline const std::vector<std::string> x{"x"};
inline const std::vector<std::string> s{"s"};
}  // namespace vars

/// The bordered matrix M(s, z1, z2, z3) whose determinant is the coordinate
/// equation of the pencil.
inline PolyMatrix pencil_matrix(const PencilSpec& sp) {
    const auto& V = vars::sz;
    PolyMatrix M(4, 4, V);
    auto cst = [&](const Rational& q) { return MultiPoly::constant(V, q); };
    MultiPoly s = MultiPoly::var(V, "s");
    MultiPoly z1 = MultiPoly::var(V, "z1"), z2 = MultiPoly::var(V, "z2"),
              z3 = MultiPoly::var(V, "z3");
    MultiPoly a5m2s = cst(sp[5]) - Rational(2) * s;
    M.at(0, 1) = z1; M.at(0, 2) = z2; M.at(0, 3) = z3;
    M.at(1, 0) = z1; M.at(1, 1) = cst(sp[0]); M.at(1, 2) = cst(sp[1]); M.at(1, 3) = a5m2s;
    M.at(2, 0) = z2; M.at(2, 1) = cst(sp[1]); M.at(2, 2) = cst(sp[2]) + s; M.at(2, 3) = cst(sp[3]);
    M.at(3, 0) = z3; M.at(3, 1) = a5m2s; M.at(3, 2) = cst(sp[3]); M.at(3, 3) = cst(sp[4]);
    return M;
}

inline MultiPoly pencil_F_xyz(const PencilSpec& sp) { return pencil_matrix(sp).det(); }

/// Darboux coordinates of a point: the two tangent parameters, i.e. the roots
/// of z1 l^2 - 2 z2 l + z3 = 0.
inline std::pair<Cx, Cx> darboux_forward(const Cx& z1, const Cx& z2, const Cx& z3) {
    if (cabs(z1) == 0.0)
        throw std::domain_error("darboux_forward: point on line at infinity of the parameterization");
    return quadratic_roots(z1, -2.0 * z2, z3);
}

/// Inverse map: (x1, x2) -> (1, (x1+x2)/2, x1 x2).
inline std::array<Cx, 3> darboux_inverse(const Cx& x1, const Cx& x2) {
    return {Cx(1.0), 0.5 * (x1 + x2), x1 * x2};
}
inline std::array<Rational, 3> darboux_inverse(const Rational& x1, const Rational& x2) {
    return {Rational(1), Rational(1, 2) * (x1 + x2), x1 * x2};
}

/// Pencil polynomial in Darboux coordinates: F = H + K s + L s^2, derived
/// from the bordered determinant (ground truth; the printed closed form for H
/// is not used).
struct PencilPolys {
    MultiPoly H, K, L, F;  // over vars (s, x1, x2)
};

inline PencilPolys pencil_F_darboux(const PencilSpec& sp) {
    const auto& V = vars::sxx;
    PolyMatrix M(4, 4, V);
    auto cst = [&](const Rational& q) { return MultiPoly::constant(V, q); };
    MultiPoly s = MultiPoly::var(V, "s");
    MultiPoly x1 = MultiPoly::var(V, "x1"), x2 = MultiPoly::var(V, "x2");
    MultiPoly z1 = cst(Rational(1));
    MultiPoly z2 = Rational(1, 2) * (x1 + x2);
    MultiPoly z3 = x1 * x2;
    MultiPoly a5m2s = cst(sp[5]) - Rational(2) * s;
    M.at(0, 1) = z1; M.at(0, 2) = z2; M.at(0, 3) = z3;
    M.at(1, 0) = z1; M.at(1, 1) = cst(sp[0]); M.at(1, 2) = cst(sp[1]); M.at(1, 3) = a5m2s;
    M.at(2, 0) = z2; M.at(2, 1) = cst(sp[1]); M.at(2, 2) = cst(sp[2]) + s; M.at(2, 3) = cst(sp[3]);
    M.at(3, 0) = z3; M.at(3, 1) = a5m2s; M.at(3, 2) = cst(sp[3]); M.at(3, 3) = cst(sp[4]);
    PencilPolys out{MultiPoly(V), MultiPoly(V), MultiPoly(V), M.det()};
    out.H = out.F.coeff_of("s", 0);
    out.K = out.F.coeff_of("s", 1);
    out.L = out.F.coeff_of("s", 2);
    return out;
}

/// P(x) = a0 x^4 - 4 a1 x^3 + (2 a5 + 4 a2) x^2 - 4 a3 x + a4.
inline MultiPoly poly_P(const PencilSpec& sp) {
    MultiPoly p(vars::x);
    MultiPoly x = MultiPoly::var(vars::x, "x");
    p += sp[0] * x.pow(4);
    p += (Rational(-4) * sp[1]) * x.pow(3);
    p += (Rational(2) * sp[5] + Rational(4) * sp[2]) * x.pow(2);
    p += (Rational(-4) * sp[3]) * x;
    p += MultiPoly::constant(vars::x, sp[4]);
    return p;
}

/// J(s) = -4 s^3 + 4(a5-a2) s^2 + (a0 a4 - a5^2 + 4(a5 a2 - a1 a3)) s
///        - a3^2 a0 + a0 a4 a2 + 2 a1 a3 a5 - a4 a1^2 - a2 a5^2.
inline MultiPoly poly_J(const PencilSpec& sp) {
    const Rational &a0 = sp[0], &a1 = sp[1], &a2 = sp[2], &a3 = sp[3], &a4 = sp[4], &a5 = sp[5];
    MultiPoly j(vars::s);
    MultiPoly s = MultiPoly::var(vars::s, "s");
    j += Rational(-4) * s.pow(3);
    j += (Rational(4) * (a5 - a2)) * s.pow(2);
    j += (a0 * a4 - a5 * a5 + Rational(4) * (a5 * a2 - a1 * a3)) * s;
    j += MultiPoly::constant(vars::s,
                             -a3 * a3 * a0 + a0 * a4 * a2 + Rational(2) * a1 * a3 * a5 -
                                 a4 * a1 * a1 - a2 * a5 * a5);
    return j;
}

/// Exact separation identities in the fixed half-discriminant convention:
///   4 D_s(F)  ==  P(x1) P(x2)
///   4 D_x2(F) == -J(s) P(x1)     (the sign is forced by the Jacobi identity)
struct SeparationIdentities {
    bool ds_ok = false;
    bool dx2_ok = false;
    bool symmetric_ok = false;
};

inline SeparationIdentities separation_identities(const PencilSpec& sp) {
    SeparationIdentities out;
    PencilPolys pp = pencil_F_darboux(sp);
    const auto& V = vars::sxx;
    MultiPoly P1 = poly_P(sp);  // in "x"
    // Build P(x1), P(x2), J(s) directly over (s,x1,x2).
    auto build_in = [&](const MultiPoly& uni, const std::string& uvar, const std::string& tvar) {
        MultiPoly out2(V);
        MultiPoly t = MultiPoly::var(V, tvar);
        auto cs = uni.univariate(uvar);
        MultiPoly power = MultiPoly::constant(V, Rational(1));
        for (std::size_t k = 0; k < cs.size(); ++k) {
            out2 += cs[k] * power;
            power *= t;
        }
        return out2;
    };
    MultiPoly Px1 = build_in(P1, "x", "x1");
    MultiPoly Px2 = build_in(P1, "x", "x2");
    MultiPoly Js = build_in(poly_J(sp), "s", "s");

    MultiPoly Ds = discriminant_half(pp.F, "s");
    MultiPoly Dx2 = discriminant_half(pp.F, "x2");
    out.ds_ok = (Rational(4) * Ds - Px1 * Px2).is_zero();
    out.dx2_ok = (Rational(4) * Dx2 + Js * Px1).is_zero();
    // F symmetric under x1 <-> x2, via rename through a temp variable
    {
        const std::vector<std::string> VT{"s", "x1", "x2", "t"};
        MultiPoly f = pp.F.aligned_to(VT);
        f = f.subst("x1", MultiPoly::var(VT, "t"));
        f = f.subst("x2", MultiPoly::var(VT, "x1"));
        f = f.subst("t", MultiPoly::var(VT, "x2"));
        out.symmetric_ok = (f - pp.F.aligned_to(VT)).is_zero();
    }
    return out;
}

/// Result of the double-bordered determinant checks.
struct JacobiReport {
    bool jacobi_ok = false;        // Mh11*Mh22 - Mh12^2 == Mh * Mh_{12,12}
    bool minor_is_J = false;       // Mh_{12,12} == J(s)
    bool mhat_sub_ok = false;      // Mh == P(x1)(x2-x2')^2/4 under the substitution
    bool vtw_ok = false;           // V^2 - 4 T W == -J(s) P(x1)
};

inline JacobiReport jacobi_identity_check(const PencilSpec& sp) {
    JacobiReport rep;
    const std::vector<std::string> V{"s", "z1", "z2", "z3", "w1", "w2", "w3"};
    auto cst = [&](const Rational& q) { return MultiPoly::constant(V, q); };
    MultiPoly s = MultiPoly::var(V, "s");
    auto z = [&](int i) { return MultiPoly::var(V, "z" + std::to_string(i)); };
    auto w = [&](int i) { return MultiPoly::var(V, "w" + std::to_string(i)); };
    MultiPoly a5m2s = cst(sp[5]) - Rational(2) * s;
    MultiPoly zero = MultiPoly::constant(V, Rational(0));

    PolyMatrix Mh(5, 5, V);
    Mh.at(0, 0) = zero; Mh.at(0, 1) = zero; Mh.at(0, 2) = w(1); Mh.at(0, 3) = w(2); Mh.at(0, 4) = w(3);
    Mh.at(1, 0) = zero; Mh.at(1, 1) = zero; Mh.at(1, 2) = z(1); Mh.at(1, 3) = z(2); Mh.at(1, 4) = z(3);
    Mh.at(2, 0) = w(1); Mh.at(2, 1) = z(1); Mh.at(2, 2) = cst(sp[0]); Mh.at(2, 3) = cst(sp[1]); Mh.at(2, 4) = a5m2s;
    Mh.at(3, 0) = w(2); Mh.at(3, 1) = z(2); Mh.at(3, 2) = cst(sp[1]); Mh.at(3, 3) = cst(sp[2]) + s; Mh.at(3, 4) = cst(sp[3]);
    Mh.at(4, 0) = w(3); Mh.at(4, 1) = z(3); Mh.at(4, 2) = a5m2s; Mh.at(4, 3) = cst(sp[3]); Mh.at(4, 4) = cst(sp[4]);

    MultiPoly M11 = Mh.minor_matrix(0, 0).det();
    MultiPoly M22 = Mh.minor_matrix(1, 1).det();
    MultiPoly M12 = Mh.minor_matrix(0, 1).det();
    MultiPoly Md = Mh.det();
    MultiPoly M1212 = Mh.minor_matrix(0, 0).minor_matrix(0, 0).det();

    rep.jacobi_ok = (M11 * M22 - M12 * M12 - Md * M1212).is_zero();
    rep.minor_is_J = (M1212 - poly_J(sp).aligned_to(V)).is_zero();

    // Substitution z = (1,(x1+x2)/2, x1 x2), w = (1,(x1+x2')/2, x1 x2').
    const std::vector<std::string> W{"s", "x1", "x2", "y2"};
    auto to_sub = [&](const MultiPoly& p) {
        MultiPoly q = p.aligned_to({"s", "z1", "z2", "z3", "w1", "w2", "w3", "x1", "x2", "y2"});
        const auto& VV = q.vars();
        MultiPoly x1 = MultiPoly::var(VV, "x1"), x2 = MultiPoly::var(VV, "x2"),
                  y2 = MultiPoly::var(VV, "y2");
        q = q.subst("z1", MultiPoly::constant(VV, Rational(1)));
        q = q.subst("z2", Rational(1, 2) * (x1 + x2));
        q = q.subst("z3", x1 * x2);
        q = q.subst("w1", MultiPoly::constant(VV, Rational(1)));
        q = q.subst("w2", Rational(1, 2) * (x1 + y2));
        q = q.subst("w3", x1 * y2);
        return q;
    };
    MultiPoly Md_sub = to_sub(Md);
    {
        const auto& VV = Md_sub.vars();
        MultiPoly x1 = MultiPoly::var(VV, "x1"), x2 = MultiPoly::var(VV, "x2"),
                  y2 = MultiPoly::var(VV, "y2");
        auto cs = poly_P(sp).univariate("x");
        MultiPoly Px1(VV);
        MultiPoly pw = MultiPoly::constant(VV, Rational(1));
        for (std::size_t k = 0; k < cs.size(); ++k) {
            Px1 += cs[k] * pw;
            pw *= x1;
        }
        MultiPoly target = Rational(1, 4) * Px1 * (x2 - y2) * (x2 - y2);
        rep.mhat_sub_ok = (Md_sub - target).is_zero();
    }
    {
        PencilPolys pp = pencil_F_darboux(sp);
        MultiPoly T = pp.F.coeff_of("x2", 2), Vc = pp.F.coeff_of("x2", 1),
                  Wc = pp.F.coeff_of("x2", 0);
        auto cs = poly_P(sp).univariate("x");
        const auto& VV = pp.F.vars();
        MultiPoly x1 = MultiPoly::var(VV, "x1");
        MultiPoly Px1(VV);
        MultiPoly pw = MultiPoly::constant(VV, Rational(1));
        for (std::size_t k = 0; k < cs.size(); ++k) {
            Px1 += cs[k] * pw;
            pw *= x1;
        }
        auto js = poly_J(sp).univariate("s");
        MultiPoly Js(VV);
        MultiPoly sw = MultiPoly::constant(VV, Rational(1));
        MultiPoly sv = MultiPoly::var(VV, "s");
        for (std::size_t k = 0; k < js.size(); ++k) {
            Js += js[k] * sw;
            sw *= sv;
        }
        rep.vtw_ok = (Vc * Vc - Rational(4) * T * Wc + Js * Px1).is_zero();
    }
    return rep;
}

// ----------------------------------------------------------------------------
// Curve pair Gamma1: y^2 = P(x), Gamma2 canonicalized to n^2 = 4m^3 - g2 m - g3.
// The conic parameter s maps to the canonical coordinate m = s/2 + (a2-a5)/6,
// and t^2 = J(s) corresponds to n = t/tau with tau^2 = -8.
// ----------------------------------------------------------------------------

/// Complex fractional-linear map used in numeric mode.
struct CxMoebius {
    Cx a, b, c, d;

    Cx apply(const Cx& w) const { return (a * w + b) / (c * w + d); }
    Cx apply_inf() const { return a / c; }
    Cx inverse_apply(const Cx& x) const { return (d * x - b) / (-c * x + a); }
    Cx deriv(const Cx& w) const {
        Cx den = c * w + d;
        return (a * d - b * c) / (den * den);
    }
    CxMoebius compose(const CxMoebius& o) const {  // this after o
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
};

/// Moebius sending (w1,w2,w3) to (0,1,inf).
inline CxMoebius moebius_to_01inf(const Cx& w1, const Cx& w2, const Cx& w3) {
    // w -> (w-w1)(w2-w3) / ((w-w3)(w2-w1))
    return {(w2 - w3), -w1 * (w2 - w3), (w2 - w1), -w3 * (w2 - w1)};
}
inline CxMoebius moebius_through(const std::array<Cx, 3>& src, const std::array<Cx, 3>& dst) {
    CxMoebius A = moebius_to_01inf(src[0], src[1], src[2]);
    CxMoebius B = moebius_to_01inf(dst[0], dst[1], dst[2]);
    CxMoebius Binv{B.d, -B.b, -B.c, B.a};
    return Binv.compose(A);
}

struct CurvePair {
    MultiPoly P;        // quartic in x
    MultiPoly J;        // cubic in s
    Rational g2, g3;    // canonical form of Gamma2
    Rational lambda{Rational(1, 2)}, mu;  // m = lambda*s + mu (traceability)
    CxMoebius psi_hat;  // canonical coordinate m -> Darboux coordinate x
    std::vector<Cx> p_roots;   // zeros of P, deterministic order
    std::vector<Cx> e_roots;   // zeros of 4m^3 - g2 m - g3

    Cx m_of_s(const Cx& s) const { return lambda.to_double() * s + mu.to_double(); }
    Cx s_of_m(const Cx& m) const { return (m - mu.to_double()) / lambda.to_double(); }
    Cx curve_rhs(const Cx& m) const {
        return 4.0 * m * m * m - g2.to_double() * m - g3.to_double();
    }
};

namespace detail {
inline std::vector<Rational> uni_derivative(const std::vector<Rational>& c) {
    std::vector<Rational> d;
    for (std::size_t k = 1; k < c.size(); ++k) d.push_back(Rational(int(k)) * c[k]);
    return d;
}
inline std::vector<Rational> uni_rem(std::vector<Rational> a, const std::vector<Rational>& b) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
    std::vector<Rational> bb = b;
    while (!bb.empty() && bb.back().is_zero()) bb.pop_back();
    if (bb.empty()) throw std::domain_error("uni_rem: zero divisor");
    while (a.size() >= bb.size() && !a.empty()) {
        Rational f = a.back() / bb.back();
        std::size_t off = a.size() - bb.size();
        for (std::size_t i = 0; i < bb.size(); ++i) a[off + i] -= f * bb[i];
        while (!a.empty() && a.back().is_zero()) a.pop_back();
    }
    return a;
}
inline bool squarefree(const std::vector<Rational>& p) {
    // gcd(p, p') is constant iff the iterated remainder chain ends at a nonzero constant
    std::vector<Rational> a = p, b = uni_derivative(p);
    while (true) {
        while (!b.empty() && b.back().is_zero()) b.pop_back();
        if (b.empty()) return false;
        if (b.size() == 1) return true;
        auto r = uni_rem(a, b);
        a = b;
        b = r;
    }
}
inline std::vector<Cx> to_cx(const std::vector<Rational>& c) {
    std::vector<Cx> out;
    out.reserve(c.size());
    for (const auto& q : c) out.emplace_back(q.to_double(), 0.0);
    return out;
}
inline void sort_deterministic(std::vector<Cx>& v) {
    std::sort(v.begin(), v.end(), [](const Cx& a, const Cx& b) {
        if (std::abs(a.real() - b.real()) > 1e-12) return a.real() < b.real();
        return a.imag() < b.imag();
    });
}
}  // namespace detail

/// Builds the isomorphic curve pair. Throws on non-simple spectrum of P or a
/// degenerate J.
inline CurvePair curve_pair(const PencilSpec& sp) {
    CurvePair cp{poly_P(sp), poly_J(sp), Rational(0), Rational(0)};
    auto pc = cp.P.univariate("x");
    if (pc.size() != 5 || pc[4].is_zero())
        throw std::domain_error("curve_pair: P not a quartic");
    if (!detail::squarefree(pc)) throw std::domain_error("non-simple spectrum");
    auto jc = cp.J.univariate("s");
    if (jc.size() != 4) throw std::domain_error("curve_pair: J degenerate");

    // m = s/2 + (a2 - a5)/6  =>  J(2(m - mu)) / (-8) = 4m^3 - g2 m - g3, exact.
    cp.mu = (sp[2] - sp[5]) / Rational(6);
    {
        const std::vector<std::string> VM{"m"};
        MultiPoly m = MultiPoly::var(VM, "m");
        MultiPoly s_of_m = Rational(2) * m - MultiPoly::constant(VM, Rational(2) * cp.mu);
        MultiPoly Jm(VM);
        MultiPoly pw = MultiPoly::constant(VM, Rational(1));
        for (std::size_t k = 0; k < jc.size(); ++k) {
            Jm += jc[k] * pw;
            pw *= s_of_m;
        }
        Jm = Rational(-1, 8) * Jm;
        auto cm = Jm.univariate("m");
        cm.resize(4, Rational(0));
        if (cm[3] != Rational(4) || !cm[2].is_zero())
            throw std::domain_error("curve_pair: canonicalization failed");
        cp.g2 = -cm[1];
        cp.g3 = -cm[0];
    }

    cp.p_roots = poly_roots(detail::to_cx(pc));
    detail::sort_deterministic(cp.p_roots);
    std::vector<Cx> cubic{-cp.g3.to_complex(), -cp.g2.to_complex(), Cx(0.0), Cx(4.0)};
    cp.e_roots = poly_roots(cubic);
    detail::sort_deterministic(cp.e_roots);

    // psi_hat: {e1,e2,e3, inf} -> zeros of P, with inf paired to the first
    // zero in the deterministic order; choose the permutation of the finite
    // pairs whose Moebius actually sends inf there.
    double scale = 1.0;
    for (const auto& z : cp.p_roots) scale = std::max(scale, cabs(z));
    double best_err = std::numeric_limits<double>::infinity();
    CxMoebius best{};
    std::array<int, 3> perm{0, 1, 2};
    std::sort(perm.begin(), perm.end());
    do {
        std::array<Cx, 3> src{cp.e_roots[0], cp.e_roots[1], cp.e_roots[2]};
        std::array<Cx, 3> dst{cp.p_roots[static_cast<std::size_t>(perm[0]) + 1],
                              cp.p_roots[static_cast<std::size_t>(perm[1]) + 1],
                              cp.p_roots[static_cast<std::size_t>(perm[2]) + 1]};
        CxMoebius cand = moebius_through(src, dst);
        double err = cabs(cand.apply_inf() - cp.p_roots[0]);
        if (err < best_err) {
            best_err = err;
            best = cand;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (best_err > 1e-6 * scale) throw std::domain_error("curve_pair: branch matching failed");
    cp.psi_hat = best;
    return cp;
}

// ----------------------------------------------------------------------------
// Kowalevski dictionary (Eq. (19)-style coefficients).
// ----------------------------------------------------------------------------

inline PencilSpec kowalevski_spec(const Rational& l1, const Rational& l, const Rational& c,
                                  const Rational& k) {
    PencilSpec sp{};
    sp[0] = Rational(-2);
    sp[1] = Rational(0);
    sp[2] = Rational(3) * l1;
    sp[3] = Rational(-2) * c * l;
    sp[4] = Rational(2) * (c * c - k * k);
    sp[5] = Rational(0);
    return sp;
}

/// Inverse dictionary under the k = 0 normalization: l1 = a2/3, c = sqrt(a4/2),
/// l = -a3/(2c). The printed closed form fails its own worked example; this is
/// the unique choice that round-trips with k = 0 (see docs/pencil_notes.md).
struct KowalevskiParams {
    double l1, l, c;
};

inline KowalevskiParams kowalevski_params(const PencilSpec& sp) {
    if (!sp[1].is_zero() || !sp[5].is_zero() || sp[0] != Rational(-2))
        throw std::domain_error("not of Kowalevski type");
    double a4 = sp[4].to_double();
    if (a4 < 0.0) throw std::domain_error("parameters not real");
    double c = std::sqrt(a4 / 2.0);
    if (c == 0.0 && !sp[3].is_zero()) throw std::domain_error("parameters not real");
    double l = (c == 0.0) ? 0.0 : -sp[3].to_double() / (2.0 * c);
    return {sp[2].to_double() / 3.0, l, c};
}

/// Exact check that the pencil polynomial with Eq. (19) coefficients equals
/// the Kowalevski fundamental polynomial (and its w = 2s - l1 variant).
struct KowFundamentalReport {
    bool q_matches = false;       // F(w,x1,x2) == (x1-x2)^2 w^2 - 2R w - R1
    bool w2_coeff_ok = false;     // coefficient of w^2 is (x1-x2)^2
    bool shifted_matches = false; // Qhat(s) == Q(2s - l1)/4
};

inline KowFundamentalReport kowalevski_fundamental_check() {
    KowFundamentalReport rep;
    const std::vector<std::string> V{"w", "x1", "x2", "l1", "l", "c", "k"};
    auto cst = [&](int q) { return MultiPoly::constant(V, Rational(q)); };
    MultiPoly w = MultiPoly::var(V, "w"), x1 = MultiPoly::var(V, "x1"),
              x2 = MultiPoly::var(V, "x2"), l1 = MultiPoly::var(V, "l1"),
              l = MultiPoly::var(V, "l"), c = MultiPoly::var(V, "c"), k = MultiPoly::var(V, "k");

    // Pencil determinant with symbolic Eq. (19) entries, border in Darboux form.
    PolyMatrix M(4, 4, V);
    MultiPoly z1 = cst(1), z2 = Rational(1, 2) * (x1 + x2), z3 = x1 * x2;
    MultiPoly a0 = cst(-2), a1p = cst(0), a2p = Rational(3) * l1;
    MultiPoly a3p = Rational(-2) * c * l, a4p = Rational(2) * (c * c - k * k), a5p = cst(0);
    MultiPoly a5m2s = a5p - Rational(2) * w;
    M.at(0, 1) = z1; M.at(0, 2) = z2; M.at(0, 3) = z3;
    M.at(1, 0) = z1; M.at(1, 1) = a0; M.at(1, 2) = a1p; M.at(1, 3) = a5m2s;
    M.at(2, 0) = z2; M.at(2, 1) = a1p; M.at(2, 2) = a2p + w; M.at(2, 3) = a3p;
    M.at(3, 0) = z3; M.at(3, 1) = a5m2s; M.at(3, 2) = a3p; M.at(3, 3) = a4p;
    MultiPoly F = M.det();

    MultiPoly R = -(x1 * x1 * x2 * x2) + Rational(6) * l1 * x1 * x2 +
                  Rational(2) * l * c * (x1 + x2) + c * c - k * k;
    MultiPoly R1 = Rational(-6) * l1 * x1 * x1 * x2 * x2 - (c * c - k * k) * (x1 + x2).pow(2) -
                   Rational(4) * c * l * x1 * x2 * (x1 + x2) + Rational(6) * l1 * (c * c - k * k) -
                   Rational(4) * c * c * l * l;
    MultiPoly Q = (x1 - x2).pow(2) * w * w - Rational(2) * R * w - R1;
    rep.q_matches = (F - Q).is_zero();
    rep.w2_coeff_ok = (F.coeff_of("w", 2) - (x1 - x2).pow(2)).is_zero();

    // Qhat(s) := (x1-x2)^2 (s - l1/2)^2 - R (s - l1/2) - R1/4 == Q(2s - l1)/4.
    MultiPoly s = w;  // reuse symbol
    MultiPoly sh = s - Rational(1, 2) * l1;
    MultiPoly Qhat = (x1 - x2).pow(2) * sh * sh - R * sh - Rational(1, 4) * R1;
    MultiPoly Qsub = Q.subst("w", Rational(2) * s - l1);
    rep.shifted_matches = (Qhat - Rational(1, 4) * Qsub).is_zero();
    return rep;
}

}  // namespace geokow

#endif  // GEOKOW_PENCIL_HPP
