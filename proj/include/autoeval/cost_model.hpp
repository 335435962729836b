// Copyright 2026 the autoeval authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Closed-form multiplication-count formulas for the decomposition methods,
// the optimal-depth window search, and the Horner comparison. All pure
// integer functions; the only floating point is the window center, which is
// padded by one integer on each side.

#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "autoeval/field.hpp"
#include "autoeval/numeric.hpp"

namespace autoeval::cost {

enum class Method { direct, horner, m1, m2, ext_basis, ext_m2 };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::direct: return "direct";
        case Method::horner: return "horner";
        case Method::m1: return "m1";
        case Method::m2: return "m2";
        case Method::ext_basis: return "ext_basis";
        case Method::ext_m2: return "ext_m2";
    }
    return "?";
}

inline std::optional<Method> parse_method(std::string_view name) {
    for (Method m : {Method::direct, Method::horner, Method::m1, Method::m2,
                     Method::ext_basis, Method::ext_m2}) {
        if (name == method_name(m)) return m;
    }
    return std::nullopt;
}

// c_p: multiplications in one p-th power by square-and-multiply.
inline u32 cp(u32 p) { return cp_cost(p); }

namespace detail {
inline u128 ipow(u64 base, u32 e) {
    u128 r = 1;
    for (u32 i = 0; i < e; ++i) r *= base;
    return r;
}
}  // namespace detail

// One-step method-1 count: 2p - 3 + floor(n/p)(p - 1).
inline u64 m_step(u32 p, u64 n) { return 2ull * p - 3 + (n / p) * (p - 1); }

// Method-1 count at depth L: floor(n/p^L)(p-1) + L(p-1) + p^L - 2.
inline u64 g1(u32 p, u64 n, u32 L) {
    if (L == 0) throw std::invalid_argument("g1 requires L >= 1");
    u64 pL = static_cast<u64>(detail::ipow(p, L));
    return (n / pL) * (p - 1) + static_cast<u64>(L) * (p - 1) + pL - 2;
}

// Method-2 count at depth L:
// floor(n/p^L) - 1 + c_p (p^{L+1}-p)/(p-1) + (p^L-1) + floor(n/p^L)(p-2).
inline u64 g2(u32 p, u64 n, u32 L) {
    if (L == 0) throw std::invalid_argument("g2 requires L >= 1");
    u64 pL = static_cast<u64>(detail::ipow(p, L));
    i64 q = static_cast<i64>(n / pL);
    i64 geom = static_cast<i64>((detail::ipow(p, L + 1) - p) / (p - 1));
    i64 v = q - 1 + geom * cp(p) + (static_cast<i64>(pL) - 1) + q * (p - 2);
    return static_cast<u64>(v);
}

// Method-2 count over F_{p^s} coefficients at depth L:
// c_p (p^{L+1}-p)/(p-1) + p^L - 1 + c_{p^{s-1}} p^L + floor(n/p^L)(p^s - 1),
// with c_{p^{s-1}} = (s-1) c_p (a p^{s-1}-th power is s-1 p-th powers).
inline u64 g2_ext(u32 p, u32 s, u64 n, u32 L) {
    if (L == 0) throw std::invalid_argument("g2_ext requires L >= 1");
    if (s < 2) throw std::invalid_argument("g2_ext requires s >= 2");
    u64 pL = static_cast<u64>(detail::ipow(p, L));
    u64 ps = static_cast<u64>(detail::ipow(p, s));
    u64 geom = static_cast<u64>((detail::ipow(p, L + 1) - p) / (p - 1));
    return geom * cp(p) + pL - 1 + static_cast<u64>(s - 1) * cp(p) * pL + (n / pL) * (ps - 1);
}

// Worst-case ceiling for the basis-split first method over F_{p^s}:
// ceil(2s(sqrt(n(p-1)) + 1/2)) = ceil(sqrt(4 s^2 n (p-1))) + s, integer-exact.
inline u64 g1_ext_firstmethod_bound(u32 p, u32 s, u64 n) {
    u64 t = 4ull * s * s * n * (p - 1);
    u64 r = isqrt_u64(t);
    return (r * r == t ? r : r + 1) + s;
}

// A chosen method and depth with its predicted multiplication count and the
// candidate depth window that was examined (width at most 3).
struct EvalPlan {
    Method method = Method::horner;
    u32 L = 0;
    u64 predicted_mul = 0;
    u32 window_lo = 0;
    u32 window_hi = 0;
};

// Formula dispatch at a fixed depth. direct is the running-powers schedule
// (2n - 1 generic multiplications), horner is n.
inline u64 predicted(Method method, u32 p, u32 s, u64 n, u32 L) {
    switch (method) {
        case Method::direct: return n == 0 ? 0 : 2 * n - 1;
        case Method::horner: return n;
        case Method::m1: return L == 0 ? (n == 0 ? 0 : 2 * n - 1) : g1(p, n, L);
        case Method::m2: return g2(p, n, L);
        case Method::ext_basis: return g1_ext_firstmethod_bound(p, s, n);
        case Method::ext_m2: return g2_ext(p, s, n, L);
    }
    throw std::invalid_argument("unknown method");
}

inline u32 floor_log(u32 p, u64 n) {
    u32 k = 0;
    u64 t = n;
    while (t >= p) {
        t /= p;
        ++k;
    }
    return k;
}

// Optimal-depth search for the depth-parameterized methods. The center is the
// real minimizer of the cost formula; the exact formula is evaluated at every
// integer L in [floor(center)-1, ceil(center)+1] clamped to [1, floor(log_p n)+1]
// (empty clamp falls back to {1}), and the argmin is returned, ties resolved
// toward smaller L.
inline EvalPlan lopt(Method kind, u32 p, u32 s, u64 n) {
    if (n == 0) throw std::invalid_argument("lopt requires n >= 1");
    double center;
    const double c = cp(p);
    switch (kind) {
        case Method::m1:
            center = 0.5 * std::log(static_cast<double>(n) * (p - 1)) / std::log(p);
            break;
        case Method::m2:
            center = 0.5 *
                     std::log(static_cast<double>(n) * (p - 1) * (p - 1) / (p * c + p - 1)) /
                     std::log(p);
            break;
        case Method::ext_m2: {
            if (s < 2) throw std::invalid_argument("ext_m2 depth search requires s >= 2");
            double ps = std::pow(static_cast<double>(p), static_cast<double>(s));
            center = 0.5 *
                     std::log(static_cast<double>(n) * (p - 1) * (ps - 1) /
                              (p * c + p - 1 + (s - 1) * c * (p - 1))) /
                     std::log(p);
            break;
        }
        default:
            throw std::invalid_argument("lopt kind must be m1, m2 or ext_m2");
    }
    i64 lo = static_cast<i64>(std::floor(center)) - 1;
    i64 hi = static_cast<i64>(std::ceil(center)) + 1;
    i64 cap = static_cast<i64>(floor_log(p, n)) + 1;
    if (lo < 1) lo = 1;
    if (hi > cap) hi = cap;
    if (lo > hi) {
        lo = 1;
        hi = 1;
    }
    EvalPlan plan;
    plan.method = kind;
    plan.window_lo = static_cast<u32>(lo);
    plan.window_hi = static_cast<u32>(hi);
    bool first = true;
    for (i64 L = lo; L <= hi; ++L) {
        u64 v = predicted(kind, p, s, n, static_cast<u32>(L));
        if (first || v < plan.predicted_mul) {
            plan.L = static_cast<u32>(L);
            plan.predicted_mul = v;
            first = false;
        }
    }
    return plan;
}

// A cost question: which method/depth for coefficients declared in F_{p^s} at
// degree n; L absent means "optimize".
struct CostQuery {
    u32 p = 2;
    u32 s = 1;
    u64 n = 0;
    std::optional<u32> L;
};

struct HornerComparison {
    u64 horner_mul = 0;
    EvalPlan best;
    bool wins = false;
};

// Best decomposition plan for coefficients declared in F_{p^s}: candidates are
// Horner plus, for s = 1, m1 and m2 at their optimal depths, or, for s >= 2,
// the basis-split bound and ext_m2 at its optimal depth. Ties keep the earlier
// candidate in that order.
inline EvalPlan best_plan(u32 p, u32 s, u64 n) {
    EvalPlan best{Method::horner, 0, n, 0, 0};
    if (n == 0) return best;
    auto consider = [&best](const EvalPlan& cand) {
        if (cand.predicted_mul < best.predicted_mul) best = cand;
    };
    if (s == 1) {
        consider(lopt(Method::m1, p, 1, n));
        consider(lopt(Method::m2, p, 1, n));
    } else {
        consider(EvalPlan{Method::ext_basis, 0, g1_ext_firstmethod_bound(p, s, n), 0, 0});
        consider(lopt(Method::ext_m2, p, s, n));
    }
    return best;
}

inline HornerComparison compare_horner(u32 p, u32 s, u64 n) {
    HornerComparison out;
    out.horner_mul = n;
    out.best = best_plan(p, s, n);
    out.wins = out.best.predicted_mul < n;
    return out;
}

}  // namespace autoeval::cost
