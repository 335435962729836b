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

#include <set>
#include <string>
#include <vector>

#include "autoeval/field.hpp"
#include "autoeval/numeric.hpp"
#include "autoeval/sampling.hpp"

using namespace autoeval;

TEST_CASE("context construction and validation") {
    FieldContext F(2, {1, 0, 0, 1, 0, 1, 0, 1, 1});
    CHECK(F.p() == 2);
    CHECK(F.m() == 8);
    CHECK(F.order_minus_1() == 255);

    CHECK_THROWS(FieldContext(4, {1, 0, 1, 1}));           // p not prime
    CHECK_THROWS(FieldContext(3, {2, 0, 1, 2}));           // not monic
    CHECK_THROWS(FieldContext(2, {1, 0, 1}));              // x^2+1 = (x+1)^2 reducible
    CHECK_THROWS(FieldContext(3, {5, 0, 1}));              // coefficient >= p
    CHECK_THROWS(FieldContext(70001, {1, 1, 1}));          // p >= 2^16
}

TEST_CASE("default irreducible moduli") {
    FieldContext F8 = FieldContext::from_spec("p=2,m=8");
    CHECK(F8.modulus_text() == "100101011");
    FieldContext F4 = FieldContext::from_spec("p=2,m=4");
    CHECK(F4.modulus_text() == "11001");
    FieldContext F35 = FieldContext::from_spec("p=3,m=5");
    CHECK(F35.m() == 5);
    FieldContext F1 = FieldContext::from_spec("p=13,m=1");
    CHECK(F1.order_minus_1() == 12);
    CHECK_THROWS(FieldContext::from_spec("p=4,m=2"));
    CHECK_THROWS(FieldContext::from_spec("nonsense"));
}

TEST_CASE("spec string round trip") {
    FieldContext F = FieldContext::from_spec("p=3,m=5");
    FieldContext G = FieldContext::from_spec(F.spec_string());
    CHECK(G.spec_string() == F.spec_string());
    CHECK(G.p() == 3);
    CHECK(G.m() == 5);
}

static void check_field_laws(const FieldContext& F, u64 seed) {
    SplitMix64 rng(seed);
    for (int t = 0; t < 1000; ++t) {
        FieldElement a = sample_element(F, rng);
        FieldElement b = sample_element(F, rng);
        FieldElement c = sample_element(F, rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == F.zero());
        CHECK(a * F.one() == a);
        CHECK(a + F.zero() == a);
        if (!a.is_zero()) {
            CHECK(a * a.pow(F.order_minus_1() - 1) == F.one());
        }
    }
}

TEST_CASE("field laws hold on random triples") {
    FieldContext F8 = FieldContext::from_spec("p=2,m=8");
    FieldContext F35 = FieldContext::from_spec("p=3,m=5");
    FieldContext F73 = FieldContext::from_spec("p=7,m=3");
    check_field_laws(F8, 11);
    check_field_laws(F35, 12);
    check_field_laws(F73, 13);
}

TEST_CASE("frobenius map") {
    FieldContext F = FieldContext::from_spec("p=3,m=5");
    SplitMix64 rng(21);
    for (int t = 0; t < 200; ++t) {
        FieldElement a = sample_element(F, rng);
        CHECK(F.sigma_apply(a) == a.pow(3));
        FieldElement it = a;
        for (u32 k = 0; k < F.m(); ++k) it = F.sigma_apply(it);
        CHECK(it == a);  // sigma^m is the identity
        CHECK(F.sigma_fixed(a) == (F.sigma_apply(a) == a));
    }
    // The fixed field of sigma is exactly F_p.
    u32 fixed = 0;
    for (u64 v = 0; v < 243; ++v) {
        if (F.sigma_fixed(F.from_index(v))) ++fixed;
    }
    CHECK(fixed == 3);
}

TEST_CASE("element encodings") {
    FieldContext F8 = FieldContext::from_spec("p=2,m=8");
    CHECK(F8.zero().to_string() == "00");
    CHECK(F8.one().to_string() == "01");
    CHECK(F8.from_coeffs({0, 1}).to_string() == "02");
    SplitMix64 rng(31);
    for (int t = 0; t < 100; ++t) {
        FieldElement a = sample_element(F8, rng);
        CHECK(F8.from_string(a.to_string()) == a);
    }
    FieldContext F35 = FieldContext::from_spec("p=3,m=5");
    CHECK(F35.from_coeffs({1, 2}).to_string() == "1,2,0,0,0");
    for (int t = 0; t < 100; ++t) {
        FieldElement a = sample_element(F35, rng);
        CHECK(F35.from_string(a.to_string()) == a);
    }
    // from_index enumerates the field without collision.
    std::set<std::string> seen;
    FieldContext F9 = FieldContext::from_spec("p=3,m=2");
    for (u64 v = 0; v < 9; ++v) seen.insert(F9.from_index(v).to_string());
    CHECK(seen.size() == 9);
}

TEST_CASE("primitive element and subfields") {
    FieldContext F = FieldContext::from_spec("p=2,m=8");
    CHECK(F.is_primitive(F.alpha()));
    CHECK(F.multiplicative_order(F.alpha()) == 255);

    FieldElement beta = F.subfield_generator(4);
    CHECK(F.multiplicative_order(beta) == 15);
    CHECK(F.is_in_subfield(beta, 4));
    CHECK(F.subfield_elements(4).size() == 16);
    u32 in16 = 0;
    for (u64 v = 0; v < 256; ++v) {
        if (F.is_in_subfield(F.from_index(v), 4)) ++in16;
    }
    CHECK(in16 == 16);
    u32 in4 = 0;
    for (u64 v = 0; v < 256; ++v) {
        if (F.is_in_subfield(F.from_index(v), 2)) ++in4;
    }
    CHECK(in4 == 4);
}

TEST_CASE("cross context operations throw") {
    FieldContext A = FieldContext::from_spec("p=2,m=8");
    FieldContext B = FieldContext::from_spec("p=2,m=8");
    CHECK_THROWS(A.one() + B.one());
    CHECK_THROWS(A.one() * B.one());
}

TEST_CASE("session counting conventions") {
    FieldContext F = FieldContext::from_spec("p=3,m=5");
    EvalSession sess(F);
    FieldElement two = F.from_residue(2);
    FieldElement x = F.from_coeffs({0, 1});

    CHECK(sess.counts().mul == 0);
    (void)sess.mul(F.zero(), x);
    (void)sess.mul(F.one(), x);
    (void)sess.mul(x, F.one());
    CHECK(sess.counts().mul == 0);  // 0/1 operands are free
    (void)sess.mul(two, x);
    CHECK(sess.counts().mul == 1);

    (void)sess.add(F.zero(), F.zero());
    CHECK(sess.counts().add == 1);  // additions always count

    // p-th powers: free on sigma-fixed inputs, one unit otherwise.
    u64 before = sess.counts().pth_power;
    (void)sess.pth_power(two);
    CHECK(sess.counts().pth_power == before);
    (void)sess.pth_power(x);
    CHECK(sess.counts().pth_power == before + 1);
    CHECK(sess.counts().frobenius_apps >= 2);

    // charged_mul folds p-th powers in at cost c_p.
    OpCounter c;
    c.cp = cp_cost(3);
    c.mul = 5;
    c.pth_power = 4;
    CHECK(c.charged_mul() == 5 + 4 * 2);
    CHECK(cp_cost(2) == 1);
    CHECK(cp_cost(3) == 2);
    CHECK(cp_cost(5) == 3);
    CHECK(cp_cost(7) == 4);
    CHECK(cp_cost(11) == 5);
    CHECK(cp_cost(13) == 5);
}

TEST_CASE("session frobenius helpers") {
    FieldContext F = FieldContext::from_spec("p=2,m=8");
    EvalSession sess(F);
    SplitMix64 rng(77);
    for (int t = 0; t < 50; ++t) {
        FieldElement a = sample_element(F, rng);
        CHECK(sess.frobenius(a, 3) == a.pow(8));
        CHECK(sess.inverse_frobenius(sess.frobenius(a, 5), 5) == a);
        CHECK(sess.charged_inverse_frobenius(a, 2) == a.pow(1ull << 6));
    }
    // frobenius(a, k) charges k mod m p-th powers on non-fixed inputs.
    EvalSession s2(F);
    FieldElement g = F.alpha();
    u64 before = s2.counts().pth_power;
    (void)s2.frobenius(g, 11);
    CHECK(s2.counts().pth_power == before + 3);
    (void)s2.frobenius(F.one(), 5);
    CHECK(s2.counts().pth_power == before + 3);
}
