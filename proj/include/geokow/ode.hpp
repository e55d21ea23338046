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

#ifndef GEOKOW_ODE_HPP
#define GEOKOW_ODE_HPP

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "numeric.hpp"

namespace geokow {

/// Dormand-Prince 5(4) embedded pair over complex state vectors, PI step
/// control, per-component mixed relative/absolute error.
class DormandPrince {
public:
    using State = std::vector<Cx>;
    using Field = std::function<State(double, const State&)>;

    struct Options {
        double rtol = 1e-10;
        double atol = 1e-12;
        double h_init = 1e-3;
        double h_min = 1e-14;
        std::size_t max_steps = 2'000'000;
    };

    struct StepFailure : std::runtime_error {
        State last_state;
        double last_time;
        StepFailure(std::string msg, State s, double t)
            : std::runtime_error(std::move(msg)), last_state(std::move(s)), last_time(t) {}
    };

    DormandPrince(Field f, Options opt = {}) : f_(std::move(f)), opt_(opt) {}

    /// Integrate from (t0, y0) to t1, appending (t, y) samples at the given
    /// output times (must be increasing within [t0, t1]).
    std::vector<std::pair<double, State>> solve(double t0, State y0, double t1,
                                                const std::vector<double>& out_times) const {
        std::vector<std::pair<double, State>> out;
        out.reserve(out_times.size());
        std::size_t next_out = 0;
        while (next_out < out_times.size() && out_times[next_out] <= t0 + 1e-15) {
            out.emplace_back(t0, y0);
            ++next_out;
        }
        if (t1 <= t0) return out;

        double t = t0, h = std::min(opt_.h_init, t1 - t0);
        State y = std::move(y0);
        State k1 = f_(t, y);
        double err_prev = 1.0;
        for (std::size_t step = 0; step < opt_.max_steps && t < t1 - 1e-14; ++step) {
            bool hit_output = false;
            double target = t1;
            if (next_out < out_times.size()) target = std::min(target, out_times[next_out]);
            if (t + h >= target - 1e-14) {
                h = target - t;
                hit_output = (next_out < out_times.size() && target == out_times[next_out]);
            }
            auto [y5, err] = attempt(t, y, k1, h);
            if (err <= 1.0) {
                t += h;
                y = std::move(y5);
                k1 = f_(t, y);
                if (hit_output) {
                    out.emplace_back(t, y);
                    ++next_out;
                }
                double fac = 0.9 * std::pow(err > 1e-12 ? err : 1e-12, -0.7 / 5.0) *
                             std::pow(err_prev > 1e-12 ? err_prev : 1e-12, 0.4 / 5.0);
                fac = std::clamp(fac, 0.2, 6.0);
                err_prev = err;
                h *= fac;
            } else {
                h *= std::max(0.2, 0.9 * std::pow(err, -0.2));
                if (h < opt_.h_min)
                    throw StepFailure("ode: step underflow near singular set", y, t);
            }
        }
        if (t < t1 - 1e-12) throw StepFailure("ode: max step count exceeded", y, t);
        return out;
    }

    /// Fixed-step classical pass (for convergence-order studies).
    std::vector<std::pair<double, State>> solve_fixed(double t0, State y0, double t1,
                                                      std::size_t n_steps) const {
        std::vector<std::pair<double, State>> out;
        out.reserve(n_steps + 1);
        double h = (t1 - t0) / static_cast<double>(n_steps);
        double t = t0;
        State y = std::move(y0);
        out.emplace_back(t, y);
        for (std::size_t i = 0; i < n_steps; ++i) {
            State k1 = f_(t, y);
            auto [y5, err] = attempt(t, y, k1, h);
            (void)err;
            t = t0 + h * static_cast<double>(i + 1);
            y = std::move(y5);
            out.emplace_back(t, y);
        }
        return out;
    }

private:
    std::pair<State, double> attempt(double t, const State& y, const State& k1, double h) const {
        static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
        static constexpr double a21 = 1.0 / 5;
        static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
        static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
        static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                                a53 = 64448.0 / 6561, a54 = -212.0 / 729;
        static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                                a64 = 49.0 / 176, a65 = -5103.0 / 18656;
        static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                                b5 = -2187.0 / 6784, b6 = 11.0 / 84;
        static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                                e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
        const std::size_t n = y.size();
        State tmp(n);

        auto axpy = [&](const std::vector<std::pair<double, const State*>>& terms) {
            for (std::size_t i = 0; i < n; ++i) {
                Cx acc = y[i];
                for (const auto& [c, v] : terms) acc += h * c * (*v)[i];
                tmp[i] = acc;
            }
            return tmp;
        };

        State k2 = f_(t + c2 * h, axpy({{a21, &k1}}));
        State k3 = f_(t + c3 * h, axpy({{a31, &k1}, {a32, &k2}}));
        State k4 = f_(t + c4 * h, axpy({{a41, &k1}, {a42, &k2}, {a43, &k3}}));
        State k5 = f_(t + c5 * h, axpy({{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
        State k6 = f_(t + h, axpy({{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
        State y5(n);
        for (std::size_t i = 0; i < n; ++i)
            y5[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        State k7 = f_(t + h, y5);

        double err = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            Cx e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                        e7 * k7[i]);
            double sc = opt_.atol + opt_.rtol * std::max(cabs(y[i]), cabs(y5[i]));
            double r = cabs(e) / sc;
            err = std::max(err, r);
        }
        return {std::move(y5), err};
    }

    Field f_;
    Options opt_;
};

}  // namespace geokow

#endif  // GEOKOW_ODE_HPP
