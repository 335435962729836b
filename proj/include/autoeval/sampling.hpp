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

// Seeded sampling of elements and polynomials. The seed fully determines
// every sample; all randomness flows through SplitMix64.

#pragma once

#include <vector>

#include "autoeval/field.hpp"
#include "autoeval/numeric.hpp"
#include "autoeval/poly.hpp"

namespace autoeval {

// Uniform over all p^m elements.
inline FieldElement sample_element(const FieldContext& ctx, SplitMix64& rng) {
    u64 q = ctx.order_minus_1();
    if (q == ~0ull) return ctx.from_index(rng.next());
    return ctx.from_index(rng.below(q + 1));
}

inline FieldElement sample_nonzero(const FieldContext& ctx, SplitMix64& rng) {
    for (;;) {
        FieldElement e = sample_element(ctx, rng);
        if (!e.is_zero()) return e;
    }
}

// Degree exactly n (leading coefficient resampled until nonzero), coefficients
// uniform in F_{p^s}; n < 0 gives the zero polynomial.
inline DensePoly sample_poly(const FieldContext& ctx, SplitMix64& rng, i64 n, u32 s) {
    if (n < 0) return {ctx, {}, s};
    const std::vector<FieldElement>& elems = ctx.subfield_elements(s);
    std::vector<FieldElement> c;
    c.reserve(static_cast<std::size_t>(n) + 1);
    for (i64 i = 0; i <= n; ++i) c.push_back(elems[rng.below(elems.size())]);
    while (c.back().is_zero()) c.back() = elems[rng.below(elems.size())];
    return {ctx, std::move(c), s};
}

// Worst-case coefficients: everything drawn outside {0, 1} so no counted
// multiplication is skipped on coefficient grounds. Over F_2 the only choice
// is all-ones. The subfield element list puts zero at index 0 and one at 1.
inline DensePoly sample_worstcase_poly(const FieldContext& ctx, SplitMix64& rng, i64 n, u32 s) {
    if (n < 0) return {ctx, {}, s};
    const std::vector<FieldElement>& elems = ctx.subfield_elements(s);
    std::vector<FieldElement> c;
    c.reserve(static_cast<std::size_t>(n) + 1);
    for (i64 i = 0; i <= n; ++i) {
        if (elems.size() <= 2) c.push_back(ctx.one());
        else c.push_back(elems[2 + rng.below(elems.size() - 2)]);
    }
    return {ctx, std::move(c), s};
}

}  // namespace autoeval
