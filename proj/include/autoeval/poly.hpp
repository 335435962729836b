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

// Dense polynomials over a declared coefficient subfield, the radix-p
// decomposition tree, and the beta-basis split of a polynomial over F_{p^s}
// into s prime-field polynomials.

#pragma once

#include <cstddef>
#include <istream>
#include <memory>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "autoeval/field.hpp"
#include "autoeval/numeric.hpp"

namespace autoeval {

// Coefficients indexed by exponent, trailing coefficient nonzero; the zero
// polynomial is the empty sequence with degree sentinel -1 (standing in for
// degree minus infinity). coeff_field_s declares the subfield F_{p^s} the
// coefficients live in; coefficients are stored embedded in F_{p^m}.
class DensePoly {
public:
    DensePoly() = default;
    DensePoly(const FieldContext& ctx, std::vector<FieldElement> coeffs, u32 s)
        : ctx_(&ctx), coeffs_(std::move(coeffs)), s_(s) {
        if (s == 0 || ctx.m() % s != 0) throw std::invalid_argument("coefficient subfield degree must divide m");
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
        if (s != ctx.m()) {
            for (const FieldElement& c : coeffs_) {
                if (!ctx.is_in_subfield(c, s)) {
                    throw std::invalid_argument("coefficient outside the declared subfield");
                }
            }
        }
    }

    const FieldContext& context() const {
        if (ctx_ == nullptr) throw std::invalid_argument("polynomial has no context");
        return *ctx_;
    }
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    u32 coeff_field_s() const { return s_; }
    bool is_zero() const { return coeffs_.empty(); }
    i64 degree() const { return static_cast<i64>(coeffs_.size()) - 1; }

    // Coefficient of x^i, zero beyond the stored range.
    FieldElement coeff(std::size_t i) const {
        if (i < coeffs_.size()) return coeffs_[i];
        return context().zero();
    }

private:
    const FieldContext* ctx_ = nullptr;
    std::vector<FieldElement> coeffs_;
    u32 s_ = 1;
};

// Raw uncounted evaluation by running powers; independent oracle for the
// counted evaluators.
inline FieldElement poly_value(const DensePoly& P, const FieldElement& alpha) {
    const FieldContext& ctx = P.context();
    FieldElement acc = ctx.zero();
    FieldElement pw = ctx.one();
    for (std::size_t i = 0; i < P.coeffs().size(); ++i) {
        acc = acc + P.coeffs()[i] * pw;
        pw = pw * alpha;
    }
    return acc;
}

inline DensePoly poly_add(const DensePoly& a, const DensePoly& b) {
    const FieldContext& ctx = a.context();
    std::size_t len = std::max(a.coeffs().size(), b.coeffs().size());
    std::vector<FieldElement> out;
    out.reserve(len);
    for (std::size_t i = 0; i < len; ++i) out.push_back(a.coeff(i) + b.coeff(i));
    return {ctx, std::move(out), static_cast<u32>(std::lcm(a.coeff_field_s(), b.coeff_field_s()))};
}

inline DensePoly poly_mul(const DensePoly& a, const DensePoly& b) {
    const FieldContext& ctx = a.context();
    u32 s = static_cast<u32>(std::lcm(a.coeff_field_s(), b.coeff_field_s()));
    if (a.is_zero() || b.is_zero()) return {ctx, {}, s};
    std::vector<FieldElement> out(a.coeffs().size() + b.coeffs().size() - 1, ctx.zero());
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
            out[i + j] = out[i + j] + a.coeffs()[i] * b.coeffs()[j];
        }
    }
    return {ctx, std::move(out), s};
}

// P(x) = sum_{j<p} x^j P_j(x^p): part j takes the coefficients with exponent
// congruent to j mod p. The zero polynomial splits into p zero polynomials.
inline std::vector<DensePoly> radix_split(const DensePoly& P) {
    const FieldContext& ctx = P.context();
    u32 p = ctx.p();
    std::vector<DensePoly> out;
    out.reserve(p);
    for (u32 j = 0; j < p; ++j) {
        std::vector<FieldElement> c;
        for (std::size_t i = j; i < P.coeffs().size(); i += p) c.push_back(P.coeffs()[i]);
        out.emplace_back(ctx, std::move(c), P.coeff_field_s());
    }
    return out;
}

// Depth-L iterated radix-p split. Leaves are indexed little-endian in split
// residues: leaf J = j1 + p*j2 + ... + p^{L-1}*jL where j1 is the first
// split's residue, so leaf J holds the original coefficients a_i with
// i = t*p^L + J.
struct RadixTree {
    u32 p = 0;
    u32 depth = 0;
    std::vector<DensePoly> leaves;
};

inline RadixTree radix_tree(const DensePoly& P, u32 L) {
    const FieldContext& ctx = P.context();
    RadixTree tree{ctx.p(), L, {P}};
    std::size_t width = 1;
    for (u32 step = 0; step < L; ++step) {
        std::vector<DensePoly> next(width * tree.p);
        for (std::size_t K = 0; K < width; ++K) {
            std::vector<DensePoly> parts = radix_split(tree.leaves[K]);
            for (u32 j = 0; j < tree.p; ++j) next[K + width * j] = std::move(parts[j]);
        }
        tree.leaves = std::move(next);
        width *= tree.p;
    }
    return tree;
}

// Expresses every coefficient of P (declared over F_{p^s}) in the basis
// {1, beta, ..., beta^{s-1}} and collects the coordinates into s prime-field
// polynomials with sum beta^i P_i = P. One s x s system is solved up front
// (an invertible pivot-row submatrix and its inverse); each coefficient then
// costs one matrix-vector product plus a full-membership check.
inline std::vector<DensePoly> basis_split(const DensePoly& P, const FieldElement& beta) {
    const FieldContext& ctx = P.context();
    const u32 p = ctx.p();
    const u32 m = ctx.m();
    const u32 s = P.coeff_field_s();

    // Columns of B are the coordinates of beta^i over the polynomial basis.
    std::vector<std::vector<u32>> B(m, std::vector<u32>(s, 0));
    FieldElement pw = ctx.one();
    for (u32 i = 0; i < s; ++i) {
        for (u32 r = 0; r < m; ++r) B[r][i] = pw.coeffs()[r];
        pw = pw * beta;
    }

    // Select s independent rows of B by elimination on a working copy.
    std::vector<std::vector<u32>> W = B;
    std::vector<u32> pivot_rows;
    std::vector<bool> used(m, false);
    for (u32 col = 0; col < s; ++col) {
        u32 sel = m;
        for (u32 r = 0; r < m; ++r) {
            if (!used[r] && W[r][col] != 0) {
                sel = r;
                break;
            }
        }
        if (sel == m) throw std::invalid_argument("beta does not generate a basis");
        used[sel] = true;
        pivot_rows.push_back(sel);
        u32 inv = detail::fp_inv_scalar(W[sel][col], p);
        for (u32 r = 0; r < m; ++r) {
            if (used[r] || W[r][col] == 0) continue;
            u32 f = static_cast<u32>(static_cast<u64>(W[r][col]) * inv % p);
            for (u32 c = col; c < s; ++c) {
                W[r][c] = static_cast<u32>((W[r][c] + static_cast<u64>(f) * (p - W[sel][c])) % p);
            }
        }
    }

    // Invert the s x s pivot submatrix A = B[pivot_rows] by Gauss-Jordan.
    std::vector<std::vector<u32>> A(s, std::vector<u32>(2 * s, 0));
    for (u32 r = 0; r < s; ++r) {
        for (u32 c = 0; c < s; ++c) A[r][c] = B[pivot_rows[r]][c];
        A[r][s + r] = 1;
    }
    for (u32 col = 0; col < s; ++col) {
        u32 sel = col;
        while (sel < s && A[sel][col] == 0) ++sel;
        if (sel == s) throw std::invalid_argument("beta does not generate a basis");
        std::swap(A[sel], A[col]);
        u32 inv = detail::fp_inv_scalar(A[col][col], p);
        for (u32 c = 0; c < 2 * s; ++c) A[col][c] = static_cast<u32>(static_cast<u64>(A[col][c]) * inv % p);
        for (u32 r = 0; r < s; ++r) {
            if (r == col || A[r][col] == 0) continue;
            u32 f = A[r][col];
            for (u32 c = 0; c < 2 * s; ++c) {
                A[r][c] = static_cast<u32>((A[r][c] + static_cast<u64>(f) * (p - A[col][c])) % p);
            }
        }
    }

    std::vector<std::vector<FieldElement>> parts(s);
    for (const FieldElement& coef : P.coeffs()) {
        // y = A^{-1} * coef[pivot_rows], then verify B*y == coef everywhere.
        std::vector<u32> y(s, 0);
        for (u32 r = 0; r < s; ++r) {
            u64 acc = 0;
            for (u32 c = 0; c < s; ++c) {
                acc += static_cast<u64>(A[r][s + c]) * coef.coeffs()[pivot_rows[c]];
            }
            y[r] = static_cast<u32>(acc % p);
        }
        for (u32 r = 0; r < m; ++r) {
            u64 acc = 0;
            for (u32 c = 0; c < s; ++c) acc += static_cast<u64>(B[r][c]) * y[c];
            if (acc % p != coef.coeffs()[r]) {
                throw std::invalid_argument("coefficient outside F_{p^s}");
            }
        }
        for (u32 i = 0; i < s; ++i) parts[i].push_back(ctx.from_residue(y[i]));
    }

    std::vector<DensePoly> out;
    out.reserve(s);
    for (u32 i = 0; i < s; ++i) out.emplace_back(ctx, std::move(parts[i]), 1);
    return out;
}

// Polynomial file format: header "p=<p> s=<s> m=<m> mod=<modulus>", then one
// coefficient per line in the canonical element encoding, exponent order 0..n.
inline void write_poly(std::ostream& os, const DensePoly& P) {
    const FieldContext& ctx = P.context();
    os << "p=" << ctx.p() << " s=" << P.coeff_field_s() << " m=" << ctx.m()
       << " mod=" << ctx.modulus_text() << "\n";
    for (const FieldElement& c : P.coeffs()) os << c.to_string() << "\n";
}

struct PolyFile {
    std::unique_ptr<FieldContext> ctx;
    DensePoly poly;
};

inline PolyFile read_poly(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) throw std::invalid_argument("empty polynomial file");
    std::optional<u64> p, s, m;
    std::optional<std::string> mod;
    std::stringstream hs(header);
    std::string part;
    while (hs >> part) {
        std::size_t eq = part.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad polynomial header field: " + part);
        std::string key = part.substr(0, eq);
        std::string val = part.substr(eq + 1);
        if (key == "mod") {
            mod = val;
            continue;
        }
        std::size_t pos = 0;
        unsigned long long v = std::stoull(val, &pos);
        if (pos != val.size()) throw std::invalid_argument("bad polynomial header value: " + part);
        if (key == "p") p = v;
        else if (key == "s") s = v;
        else if (key == "m") m = v;
        else throw std::invalid_argument("unknown polynomial header key: " + key);
    }
    if (!p || !s || !m || !mod) throw std::invalid_argument("polynomial header needs p, s, m, mod");
    auto ctx = std::make_unique<FieldContext>(static_cast<u32>(*p),
                                              FieldContext::parse_modulus_text(*mod, static_cast<u32>(*p)));
    if (ctx->m() != *m) throw std::invalid_argument("polynomial header m disagrees with modulus degree");
    std::vector<FieldElement> coeffs;
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        coeffs.push_back(ctx->from_string(line));
    }
    DensePoly poly(*ctx, std::move(coeffs), static_cast<u32>(*s));
    return {std::move(ctx), std::move(poly)};
}

}  // namespace autoeval
