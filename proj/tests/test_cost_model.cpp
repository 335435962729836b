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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "autoeval/cost_model.hpp"
#include "autoeval/numeric.hpp"

using namespace autoeval;
using cost::Method;

TEST_CASE("single step formula") {
    CHECK(cost::m_step(3, 10) == 9);
    CHECK(cost::m_step(2, 1) == 1);
    CHECK(cost::m_step(5, 100) == 87);
    // One radix level is exactly the single-step count.
    for (u32 p : {2u, 3u, 5u, 7u, 11u, 13u}) {
        for (u64 n = 0; n <= 2000; ++n) {
            CHECK(cost::g1(p, n, 1) == cost::m_step(p, n));
        }
    }
}

TEST_CASE("frozen formula values") {
    CHECK(cost::g1(2, 255, 4) == 33);
    CHECK(cost::g1(3, 100, 2) == 33);
    CHECK(cost::g2(2, 255, 3) == 51);
    CHECK(cost::g2(3, 100, 2) == 53);
    CHECK(cost::g2_ext(2, 4, 255, 4) == 318);
    CHECK(cost::g1_ext_firstmethod_bound(2, 2, 1000) == 129);
    CHECK(cost::g1_ext_firstmethod_bound(2, 2, 0) == 2);
    CHECK_THROWS(cost::g1(3, 10, 0));
    CHECK_THROWS(cost::g2_ext(2, 1, 10, 1));
}

TEST_CASE("optimal depth on pinned instances") {
    cost::EvalPlan p1 = cost::lopt(Method::m1, 2, 1, 255);
    CHECK(p1.L == 4);
    CHECK(p1.predicted_mul == 33);
    CHECK(p1.window_lo == 2);
    CHECK(p1.window_hi == 5);

    cost::EvalPlan p2 = cost::lopt(Method::m2, 2, 1, 255);
    CHECK(p2.L == 3);
    CHECK(p2.predicted_mul == 51);

    cost::EvalPlan p3 = cost::lopt(Method::m1, 3, 1, 10);
    CHECK(p3.L == 1);
    CHECK(p3.predicted_mul == 9);

    CHECK_THROWS(cost::lopt(Method::m1, 3, 1, 0));
}

static u32 exhaustive_argmin(Method kind, u32 p, u32 s, u64 n) {
    u32 hi = cost::floor_log(p, n) + 1;
    u32 best_L = 1;
    u64 best = ~0ull;
    for (u32 L = 1; L <= hi; ++L) {
        u64 v = cost::predicted(kind, p, s, n, L);
        if (v < best) {
            best = v;
            best_L = L;
        }
    }
    return best_L;
}

TEST_CASE("lopt windows contain and return the exhaustive argmin") {
    SplitMix64 rng(2024);
    const u32 primes[] = {2, 3, 5, 7, 11, 13};
    for (int t = 0; t < 300; ++t) {
        u32 p = primes[t % 6];
        u64 n = 1 + rng.below(100000);
        for (Method kind : {Method::m1, Method::m2}) {
            cost::EvalPlan plan = cost::lopt(kind, p, 1, n);
            u32 arg = exhaustive_argmin(kind, p, 1, n);
            CHECK(plan.L == arg);
            CHECK(plan.window_lo <= arg);
            CHECK(arg <= plan.window_hi);
            CHECK(plan.window_hi - plan.window_lo <= 3);
            CHECK(plan.predicted_mul == cost::predicted(kind, p, 1, n, plan.L));
        }
    }
    for (int t = 0; t < 300; ++t) {
        const std::pair<u32, u32> cfgs[] = {{2, 2}, {2, 4}, {3, 2}};
        auto [p, s] = cfgs[t % 3];
        u64 n = 1 + rng.below(100000);
        cost::EvalPlan plan = cost::lopt(Method::ext_m2, p, s, n);
        u32 arg = exhaustive_argmin(Method::ext_m2, p, s, n);
        CHECK(plan.L == arg);
        CHECK(plan.window_lo <= arg);
        CHECK(arg <= plan.window_hi);
    }
}

TEST_CASE("predicted costs for the trivial methods") {
    CHECK(cost::predicted(Method::direct, 3, 1, 0, 0) == 0);
    CHECK(cost::predicted(Method::direct, 3, 1, 10, 0) == 19);
    CHECK(cost::predicted(Method::horner, 3, 1, 10, 0) == 10);
}

TEST_CASE("best plan and the horner comparison") {
    cost::HornerComparison c9 = cost::compare_horner(3, 1, 9);
    CHECK_FALSE(c9.wins);
    cost::HornerComparison c10 = cost::compare_horner(3, 1, 10);
    CHECK(c10.wins);
    CHECK(c10.best.method == Method::m1);
    CHECK(c10.best.L == 1);
    CHECK(c10.best.predicted_mul == 9);

    cost::EvalPlan b = cost::best_plan(2, 4, 1000);
    CHECK(b.method == Method::ext_basis);
    CHECK(b.predicted_mul == cost::g1_ext_firstmethod_bound(2, 4, 1000));

    cost::EvalPlan z = cost::best_plan(2, 1, 0);
    CHECK(z.method == Method::horner);
    CHECK(z.predicted_mul == 0);

    // The planner never predicts worse than Horner.
    SplitMix64 rng(77);
    for (int t = 0; t < 200; ++t) {
        u32 p = (t % 2) ? 2u : 3u;
        u32 s = (t % 3 == 0) ? 2u : 1u;
        u64 n = rng.below(100000);
        cost::EvalPlan plan = cost::best_plan(p, s, n);
        CHECK(plan.predicted_mul <= n);
    }
}

TEST_CASE("method names parse back") {
    for (Method m : {Method::direct, Method::horner, Method::m1, Method::m2, Method::ext_basis,
                     Method::ext_m2}) {
        auto parsed = cost::parse_method(cost::method_name(m));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == m);
    }
    CHECK_FALSE(cost::parse_method("bogus").has_value());
}

TEST_CASE("asymptotic ratios at large degree") {
    const u64 n = 1000000;
    for (u32 p : {2u, 3u, 5u}) {
        u64 best = cost::lopt(Method::m1, p, 1, n).predicted_mul;
        double ratio = static_cast<double>(best) / (2.0 * std::sqrt(static_cast<double>(n) * (p - 1)));
        CHECK(ratio >= 0.85);
        CHECK(ratio <= 1.15);
    }
    for (u32 p : {2u, 3u, 5u}) {
        u64 best = cost::lopt(Method::m2, p, 1, n).predicted_mul;
        double target = 2.0 * std::sqrt(static_cast<double>(n) * (p * cost::cp(p) + p - 1));
        double ratio = static_cast<double>(best) / target;
        CHECK(ratio >= 0.8);
        CHECK(ratio <= 1.2);
    }
}
