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

// The five evaluation algorithms. Each is scheduled exactly as its cost
// formula itemizes: shared power tables at the evaluation point, eager
// products of every nontrivial coefficient value with every needed power
// (reused across leaves), and Horner-style reconstruction at each tree level.

#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "autoeval/cost_model.hpp"
#include "autoeval/field.hpp"
#include "autoeval/poly.hpp"

namespace autoeval {

struct EvalResult {
    FieldElement value;
    OpCounter counts;
};

namespace detail {

inline void require_prime_field_coeffs(const DensePoly& P) {
    const FieldContext& ctx = P.context();
    for (const FieldElement& c : P.coeffs()) {
        if (!ctx.sigma_fixed(c)) throw std::invalid_argument("coefficients outside F_p");
    }
}

inline i64 max_leaf_degree(const RadixTree& tree) {
    i64 d = -1;
    for (const DensePoly& leaf : tree.leaves) d = std::max(d, leaf.degree());
    return d;
}

// Shared leaf-evaluation tables at a point w: powers[t] = w^t for t <= D, and
// for every coefficient value c outside {0,1} the products c * w^t (index 0
// holds c itself, which costs nothing).
struct LeafTables {
    std::vector<FieldElement> powers;
    std::vector<std::vector<FieldElement>> products;  // one row per value
};

inline std::vector<FieldElement> counted_powers(EvalSession& sess, const FieldElement& w, i64 D) {
    std::vector<FieldElement> powers{sess.context().one()};
    if (D >= 1) powers.push_back(w);
    for (i64 t = 2; t <= D; ++t) powers.push_back(sess.mul(powers.back(), w));
    return powers;
}

inline LeafTables build_leaf_tables(EvalSession& sess, const FieldElement& w, i64 D,
                                    const std::vector<FieldElement>& values) {
    LeafTables tables;
    tables.powers = counted_powers(sess, w, D);
    for (const FieldElement& c : values) {
        std::vector<FieldElement> row{c};
        for (i64 t = 1; t <= D; ++t) row.push_back(sess.mul(c, tables.powers[t]));
        tables.products.push_back(std::move(row));
    }
    return tables;
}

// The p - 2 nontrivial prime-field values 2..p-1.
inline std::vector<FieldElement> prime_field_values(const FieldContext& ctx) {
    std::vector<FieldElement> values;
    for (u32 r = 2; r < ctx.p(); ++r) values.push_back(ctx.from_residue(r));
    return values;
}

// Leaf value by table lookups: coefficient 0 contributes a zero term,
// coefficient 1 the bare power, anything else the precomputed product. Terms
// are summed from the top exponent down, one counted addition per exponent.
inline FieldElement leaf_value_lookup(EvalSession& sess, const DensePoly& leaf,
                                      const LeafTables& tables,
                                      const std::map<std::vector<u32>, u32>& value_index) {
    const FieldContext& ctx = leaf.context();
    if (leaf.is_zero()) return ctx.zero();
    auto term = [&](std::size_t t) -> FieldElement {
        const FieldElement& c = leaf.coeffs()[t];
        if (c.is_zero()) return ctx.zero();
        if (c.is_one()) return tables.powers[t];
        if (t == 0) return c;
        return tables.products[value_index.at(c.coeffs())][t];
    };
    std::size_t top = leaf.coeffs().size() - 1;
    FieldElement acc = term(top);
    for (std::size_t t = top; t-- > 0;) acc = sess.add(acc, term(t));
    return acc;
}

inline std::map<std::vector<u32>, u32> index_values(const std::vector<FieldElement>& values) {
    std::map<std::vector<u32>, u32> idx;
    for (u32 i = 0; i < values.size(); ++i) idx.emplace(values[i].coeffs(), i);
    return idx;
}

// Bottom-up reconstruction for the first method: the node at depth d combines
// its children Horner-style in the point pts[d]; children of node (d, K) sit
// at K + p^d * j.
inline FieldElement climb_m1(EvalSession& sess, std::vector<FieldElement> v, u32 p, u32 L,
                             const std::vector<FieldElement>& pts) {
    std::size_t width = v.size() / p;
    for (u32 d = L; d-- > 0; width /= p) {
        std::vector<FieldElement> parent(width, sess.context().zero());
        for (std::size_t K = 0; K < width; ++K) {
            FieldElement H = v[K + width * (p - 1)];
            for (u32 j = p - 1; j-- > 0;) {
                H = sess.add(sess.mul(H, pts[d]), v[K + width * j]);
            }
            parent[K] = H;
        }
        v = std::move(parent);
    }
    return v[0];
}

// Bottom-up reconstruction for the second method: every child value passes
// through one p-th power, and the combination is Horner-style in alpha.
inline FieldElement climb_m2(EvalSession& sess, std::vector<FieldElement> v, u32 p, u32 L,
                             const FieldElement& alpha) {
    std::size_t width = v.size() / p;
    for (u32 d = L; d-- > 0; width /= p) {
        std::vector<FieldElement> parent(width, sess.context().zero());
        for (std::size_t K = 0; K < width; ++K) {
            FieldElement H = sess.pth_power(v[K + width * (p - 1)]);
            for (u32 j = p - 1; j-- > 0;) {
                H = sess.add(sess.mul(H, alpha), sess.pth_power(v[K + width * j]));
            }
            parent[K] = H;
        }
        v = std::move(parent);
    }
    return v[0];
}

// The Frobenius point chain: pts[i] = sigma^i(alpha), each level reached by
// p - 1 counted multiplications (the running powers of pts[i], whose p-th
// entry is pts[i+1]). Levels beyond `last` are not built.
inline std::vector<FieldElement> frobenius_point_chain(EvalSession& sess, const FieldElement& alpha,
                                                       u32 last) {
    std::vector<FieldElement> pts{alpha};
    for (u32 i = 0; i < last; ++i) {
        FieldElement t = pts[i];
        for (u32 j = 1; j < sess.context().p(); ++j) t = sess.mul(t, pts[i]);
        pts.push_back(t);
    }
    return pts;
}

}  // namespace detail

// Running-powers evaluation: eta_{i+1} = alpha * eta_i, then sum a_i eta_i.
// Worst case 2n - 1 multiplications and n additions.
inline EvalResult eval_direct(const DensePoly& P, const FieldElement& alpha) {
    const FieldContext& ctx = P.context();
    EvalSession sess(ctx);
    if (P.is_zero()) return {ctx.zero(), sess.counts()};
    FieldElement acc = P.coeffs()[0];
    FieldElement pw = alpha;
    std::size_t n = P.coeffs().size() - 1;
    for (std::size_t i = 1; i <= n; ++i) {
        acc = sess.add(acc, sess.mul(P.coeffs()[i], pw));
        if (i < n) pw = sess.mul(pw, alpha);
    }
    return {acc, sess.counts()};
}

// Horner iteration from a_n down: n multiplications and n additions at most.
inline EvalResult eval_horner(const DensePoly& P, const FieldElement& alpha) {
    const FieldContext& ctx = P.context();
    EvalSession sess(ctx);
    if (P.is_zero()) return {ctx.zero(), sess.counts()};
    FieldElement acc = P.coeffs().back();
    for (std::size_t i = P.coeffs().size() - 1; i-- > 0;) {
        acc = sess.add(sess.mul(acc, alpha), P.coeffs()[i]);
    }
    return {acc, sess.counts()};
}

// First method at depth L: leaves of the radix tree are evaluated at
// sigma^L(alpha) through shared power/product tables, then reconstructed with
// the point chain sigma^i(alpha). Worst-case multiplication count G1(p,n,L).
inline EvalResult eval_m1(const DensePoly& P, const FieldElement& alpha, u32 L) {
    detail::require_prime_field_coeffs(P);
    if (L == 0) return eval_direct(P, alpha);
    const FieldContext& ctx = P.context();
    EvalSession sess(ctx);
    RadixTree tree = radix_tree(P, L);
    i64 D = detail::max_leaf_degree(tree);

    // pts[0..L-1] feed the reconstruction; pts[L] is only needed when some
    // leaf has positive degree.
    std::vector<FieldElement> pts =
        detail::frobenius_point_chain(sess, alpha, D >= 1 ? L : L - 1);

    std::vector<FieldElement> values = detail::prime_field_values(ctx);
    detail::LeafTables tables = detail::build_leaf_tables(sess, D >= 1 ? pts[L] : ctx.one(),
                                                          D, values);
    std::map<std::vector<u32>, u32> idx = detail::index_values(values);

    std::vector<FieldElement> leaf_vals;
    leaf_vals.reserve(tree.leaves.size());
    for (const DensePoly& leaf : tree.leaves) {
        leaf_vals.push_back(detail::leaf_value_lookup(sess, leaf, tables, idx));
    }
    FieldElement root = detail::climb_m1(sess, std::move(leaf_vals), ctx.p(), L, pts);
    return {root, sess.counts()};
}

// Second method at depth L: leaves evaluated at alpha itself, reconstruction
// applies one p-th power per child. Worst-case charged count G2(p,n,L).
inline EvalResult eval_m2(const DensePoly& P, const FieldElement& alpha, u32 L) {
    detail::require_prime_field_coeffs(P);
    if (L == 0) throw std::invalid_argument("eval_m2 requires L >= 1");
    const FieldContext& ctx = P.context();
    EvalSession sess(ctx);
    RadixTree tree = radix_tree(P, L);
    i64 D = detail::max_leaf_degree(tree);

    std::vector<FieldElement> values = detail::prime_field_values(ctx);
    detail::LeafTables tables = detail::build_leaf_tables(sess, alpha, D, values);
    std::map<std::vector<u32>, u32> idx = detail::index_values(values);

    std::vector<FieldElement> leaf_vals;
    leaf_vals.reserve(tree.leaves.size());
    for (const DensePoly& leaf : tree.leaves) {
        leaf_vals.push_back(detail::leaf_value_lookup(sess, leaf, tables, idx));
    }
    FieldElement root = detail::climb_m2(sess, std::move(leaf_vals), ctx.p(), L, alpha);
    return {root, sess.counts()};
}

// Basis-split first method over F_{p^s}: split P into s prime-field
// polynomials, evaluate them with the first method at one jointly chosen
// depth (parts falling back to Horner when decomposition does not pay),
// sharing the point chain and the leaf tables across parts, then recombine
// Horner-style in beta with s - 1 multiplications and s - 1 additions.
inline EvalResult eval_ext_basis(const DensePoly& P, const FieldElement& alpha) {
    const u32 s = P.coeff_field_s();
    if (s < 2) throw std::invalid_argument("eval_ext_basis requires coefficients declared over F_{p^s}, s > 1");
    const FieldContext& ctx = P.context();
    const u32 p = ctx.p();
    const FieldElement& beta = ctx.subfield_generator(s);
    std::vector<DensePoly> parts = basis_split(P, beta);

    i64 d_max = -1;
    for (const DensePoly& part : parts) d_max = std::max(d_max, part.degree());

    // One shared depth for every part: the point chain and the leaf power
    // table are built once, so only the climbs (p^L - 1 each) scale with the
    // number of parts. Independent per-part depths would duplicate the tables
    // and can overshoot the 2s(sqrt(n(p-1)) + 1/2) ceiling. L = 0 stands for
    // plain Horner everywhere; at L >= 1 a part joins the trees only when the
    // climb undercuts its own Horner cost.
    u32 best_L = 0;
    u64 best_cost = s - 1;
    for (const DensePoly& part : parts) {
        if (part.degree() >= 1) best_cost += static_cast<u64>(part.degree());
    }
    u64 pLm1 = 1;  // p^(L-1)
    for (u32 L = 1; d_max >= 1 && pLm1 <= static_cast<u64>(d_max); ++L, pLm1 *= p) {
        const u64 pL = pLm1 * p;
        u64 cost = s - 1;
        i64 D = -1;
        bool any = false;
        for (const DensePoly& part : parts) {
            i64 d = part.degree();
            if (d < 1) continue;
            if (pL - 1 < static_cast<u64>(d)) {
                cost += pL - 1;
                D = std::max(D, d / static_cast<i64>(pL));
                any = true;
            } else {
                cost += static_cast<u64>(d);
            }
        }
        if (!any) continue;
        cost += static_cast<u64>(D >= 1 ? L : L - 1) * (p - 1);
        if (D >= 1) cost += static_cast<u64>(D) * (p - 1) - 1;
        if (cost < best_cost) {
            best_cost = cost;
            best_L = L;
        }
    }

    EvalSession sess(ctx);
    const u32 L = best_L;
    std::vector<char> in_tree(s, 0);
    std::vector<RadixTree> trees(s);
    i64 D = -1;
    if (L >= 1) {
        u64 pL = 1;
        for (u32 i = 0; i < L; ++i) pL *= p;
        for (u32 i = 0; i < s; ++i) {
            i64 d = parts[i].degree();
            if (d < 1 || pL - 1 >= static_cast<u64>(d)) continue;
            in_tree[i] = 1;
            trees[i] = radix_tree(parts[i], L);
            D = std::max(D, detail::max_leaf_degree(trees[i]));
        }
    }

    std::vector<FieldElement> pts;
    std::vector<FieldElement> values;
    std::map<std::vector<u32>, u32> idx;
    detail::LeafTables tables;
    if (std::find(in_tree.begin(), in_tree.end(), 1) != in_tree.end()) {
        pts = detail::frobenius_point_chain(sess, alpha, D >= 1 ? L : L - 1);
        values = detail::prime_field_values(ctx);
        idx = detail::index_values(values);
        tables = detail::build_leaf_tables(sess, D >= 1 ? pts[L] : ctx.one(), D, values);
    }

    std::vector<FieldElement> part_vals;
    part_vals.reserve(s);
    for (u32 i = 0; i < s; ++i) {
        if (!in_tree[i]) {
            // Horner on the part (constants come out with zero operations).
            FieldElement acc = ctx.zero();
            if (!parts[i].is_zero()) {
                acc = parts[i].coeffs().back();
                for (std::size_t t = parts[i].coeffs().size() - 1; t-- > 0;) {
                    acc = sess.add(sess.mul(acc, alpha), parts[i].coeffs()[t]);
                }
            }
            part_vals.push_back(acc);
            continue;
        }
        std::vector<FieldElement> leaf_vals;
        leaf_vals.reserve(trees[i].leaves.size());
        for (const DensePoly& leaf : trees[i].leaves) {
            leaf_vals.push_back(detail::leaf_value_lookup(sess, leaf, tables, idx));
        }
        part_vals.push_back(detail::climb_m1(sess, std::move(leaf_vals), p, L, pts));
    }

    FieldElement acc = part_vals[s - 1];
    for (u32 i = s - 1; i-- > 0;) acc = sess.add(sess.mul(acc, beta), part_vals[i]);
    return {acc, sess.counts()};
}

// Second method over F_{p^s} at depth L: leaves keep their original
// coefficients and are evaluated at sigma^K(alpha) with K = L mod s; each
// nonzero leaf value then receives sigma^{-K} (charged as K p-th powers), and
// the reconstruction is exactly the second method's climb at alpha. Since
// sigma^{L-K} fixes F_{p^s} coefficients, the leaf values coincide with the
// sigma^{-L}-of-value-at-sigma^L(alpha) formulation. Worst-case charged count
// G2(p^s,n,L).
inline EvalResult eval_ext_m2(const DensePoly& P, const FieldElement& alpha, u32 L) {
    const u32 s = P.coeff_field_s();
    if (s < 2) throw std::invalid_argument("eval_ext_m2 requires coefficients declared over F_{p^s}, s > 1");
    if (L == 0) throw std::invalid_argument("eval_ext_m2 requires L >= 1");
    const FieldContext& ctx = P.context();
    EvalSession sess(ctx);
    RadixTree tree = radix_tree(P, L);
    i64 D = detail::max_leaf_degree(tree);
    const u32 K = L % s;

    std::vector<FieldElement> values;
    for (const FieldElement& e : ctx.subfield_elements(s)) {
        if (!e.is_zero() && !e.is_one()) values.push_back(e);
    }
    std::map<std::vector<u32>, u32> idx = detail::index_values(values);

    // Point preparation: sigma^K(alpha) is uncounted, like the evaluation
    // point itself. Only the per-leaf inverse transforms carry a charge.
    FieldElement w = alpha;
    for (u32 i = 0; i < K; ++i) w = ctx.sigma_apply(w);
    if (D < 1) w = ctx.one();
    detail::LeafTables tables = detail::build_leaf_tables(sess, w, D, values);

    std::vector<FieldElement> leaf_vals;
    leaf_vals.reserve(tree.leaves.size());
    for (const DensePoly& leaf : tree.leaves) {
        FieldElement v = detail::leaf_value_lookup(sess, leaf, tables, idx);
        leaf_vals.push_back(sess.charged_inverse_frobenius(v, K));
    }
    FieldElement root = detail::climb_m2(sess, std::move(leaf_vals), ctx.p(), L, alpha);
    return {root, sess.counts()};
}

struct BestResult {
    FieldElement value;
    cost::EvalPlan plan;
    OpCounter counts;
};

// Cost-model-driven evaluation: picks the predicted-cheapest applicable method
// for P's declared coefficient field and runs it.
inline BestResult eval_best(const DensePoly& P, const FieldElement& alpha) {
    const FieldContext& ctx = P.context();
    if (P.is_zero()) {
        EvalSession sess(ctx);
        return {ctx.zero(), cost::EvalPlan{cost::Method::horner, 0, 0, 0, 0}, sess.counts()};
    }
    cost::EvalPlan plan = cost::best_plan(ctx.p(), P.coeff_field_s(),
                                          static_cast<u64>(P.degree()));
    EvalResult r;
    switch (plan.method) {
        case cost::Method::horner: r = eval_horner(P, alpha); break;
        case cost::Method::m1: r = eval_m1(P, alpha, plan.L); break;
        case cost::Method::m2: r = eval_m2(P, alpha, plan.L); break;
        case cost::Method::ext_basis: r = eval_ext_basis(P, alpha); break;
        case cost::Method::ext_m2: r = eval_ext_m2(P, alpha, plan.L); break;
        case cost::Method::direct: r = eval_direct(P, alpha); break;
    }
    return {r.value, plan, r.counts};
}

// The count a method's formula predicts: charged multiplications for the
// second-method family (p-th powers folded in at c_p each), plain
// multiplications otherwise.
inline u64 measured_mul(cost::Method method, const OpCounter& counts) {
    if (method == cost::Method::m2 || method == cost::Method::ext_m2) return counts.charged_mul();
    return counts.mul;
}

}  // namespace autoeval
