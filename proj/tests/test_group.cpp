// Copyright 2026 The repcheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "repcheck/group.hpp"

namespace repcheck {
namespace {

const std::vector<BuiltinGroup> kAll{BuiltinGroup::K4, BuiltinGroup::Z4, BuiltinGroup::D4, BuiltinGroup::D8,
                                     BuiltinGroup::Pauli1};

std::vector<std::string> rep_words(const GroupTable &g) {
    std::vector<std::string> out;
    for (Element r : g.classes().representatives) out.push_back(g.word(r));
    return out;
}

std::vector<std::string> words_of(const GroupTable &g, const std::vector<Element> &xs) {
    std::vector<std::string> out;
    for (Element x : xs) out.push_back(g.word(x));
    return out;
}

TEST(Group, BuiltinOrders) {
    EXPECT_EQ(builtin_group(BuiltinGroup::K4)->order(), 4u);
    EXPECT_EQ(builtin_group(BuiltinGroup::Z4)->order(), 4u);
    EXPECT_EQ(builtin_group(BuiltinGroup::D4)->order(), 8u);
    EXPECT_EQ(builtin_group(BuiltinGroup::D8)->order(), 16u);
    EXPECT_EQ(builtin_group(BuiltinGroup::Pauli1)->order(), 16u);
}

TEST(Group, GeneratorNames) {
    auto d4 = builtin_group(BuiltinGroup::D4);
    EXPECT_EQ(d4->word(d4->generator("r")), "r");
    EXPECT_EQ(d4->word(d4->generator("s")), "s");
    auto d8 = builtin_group(BuiltinGroup::D8);
    EXPECT_EQ(d8->element_order(d8->generator("ζ")), 8u);
    EXPECT_EQ(d8->element_order(d8->generator("η")), 2u);
    auto p = builtin_group(BuiltinGroup::Pauli1);
    for (const char *g : {"i𝟙", "σx", "σy", "σz"}) EXPECT_NO_THROW((void)p->generator(g));
    EXPECT_THROW((void)p->generator("τ"), Error);
}

TEST(Group, D4Classes) {
    auto d4 = builtin_group(BuiltinGroup::D4);
    EXPECT_EQ(rep_words(*d4), (std::vector<std::string>{"e", "r", "r^2", "s", "rs"}));
    EXPECT_EQ(d4->classes().sizes, (std::vector<std::size_t>{1, 2, 1, 2, 2}));
    auto sizes = d4->classes().sizes;
    std::sort(sizes.begin(), sizes.end());
    EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 1, 2, 2, 2}));
}

TEST(Group, D8Classes) {
    auto d8 = builtin_group(BuiltinGroup::D8);
    EXPECT_EQ(rep_words(*d8), (std::vector<std::string>{"e", "ζ", "ζ^2", "ζ^3", "ζ^4", "η", "ζη"}));
    EXPECT_EQ(d8->classes().sizes, (std::vector<std::size_t>{1, 2, 2, 2, 1, 4, 4}));
}

TEST(Group, AbelianGroupsHaveSingletonClasses) {
    for (auto g : {BuiltinGroup::K4, BuiltinGroup::Z4}) {
        auto grp = builtin_group(g);
        EXPECT_EQ(grp->num_classes(), grp->order());
        EXPECT_EQ(center(*grp).size(), grp->order());
    }
}

TEST(Group, Centers) {
    auto d4 = builtin_group(BuiltinGroup::D4);
    EXPECT_EQ(words_of(*d4, center(*d4)), (std::vector<std::string>{"e", "r^2"}));
    auto d8 = builtin_group(BuiltinGroup::D8);
    EXPECT_EQ(words_of(*d8, center(*d8)), (std::vector<std::string>{"e", "ζ^4"}));
    EXPECT_EQ(center(*builtin_group(BuiltinGroup::Pauli1)).size(), 4u);
}

// Independent center oracle for D8 from the relation η ζ^k η = ζ^-k:
// ζ^k is central iff ζ^k = ζ^-k, i.e. k in {0, 4}; no reflection is central.
TEST(Group, D8CenterFromRelations) {
    auto d8 = builtin_group(BuiltinGroup::D8);
    const Element z = d8->generator("ζ");
    std::set<Element> want;
    for (int k = 0; k < 8; k++) {
        if ((8 - k) % 8 == k) want.insert(d8->power(z, k));
    }
    auto got = center(*d8);
    EXPECT_EQ(std::set<Element>(got.begin(), got.end()), want);
}

TEST(Group, QuotientD4ByCenterIsK4) {
    auto d4 = builtin_group(BuiltinGroup::D4);
    auto [q, proj] = quotient(d4, center(*d4));
    EXPECT_EQ(q->order(), 4u);
    for (Element x = 0; x < q->order(); x++) {
        if (x != q->identity()) {
            EXPECT_EQ(q->element_order(x), 2u);
        }
    }
    EXPECT_TRUE(verify_hom(proj));
    EXPECT_TRUE(is_isomorphic(q, builtin_group(BuiltinGroup::K4)));
}

TEST(Group, QuotientD8ByCenterIsD4) {
    auto d8 = builtin_group(BuiltinGroup::D8);
    auto [q, proj] = quotient(d8, center(*d8));
    EXPECT_EQ(q->order(), 8u);
    EXPECT_TRUE(verify_hom(proj));
    EXPECT_TRUE(is_isomorphic(q, builtin_group(BuiltinGroup::D4)));
    EXPECT_FALSE(is_isomorphic(q, builtin_group(BuiltinGroup::Z4)));
}

TEST(Group, QuotientPauliByCenterIsK4) {
    auto p = builtin_group(BuiltinGroup::Pauli1);
    auto [q, proj] = quotient(p, center(*p));
    EXPECT_TRUE(verify_hom(proj));
    EXPECT_TRUE(is_isomorphic(q, builtin_group(BuiltinGroup::K4)));
}

TEST(Group, QuotientErrors) {
    auto d4 = builtin_group(BuiltinGroup::D4);
    const Element e = d4->identity(), r = d4->generator("r"), s = d4->generator("s");
    try {
        (void)quotient(d4, {e, s});
        FAIL() << "{e, s} is not normal";
    } catch (const Error &err) {
        EXPECT_EQ(err.kind(), ErrorKind::NotNormal);
    }
    try {
        (void)quotient(d4, {e, r});
        FAIL() << "{e, r} is not closed";
    } catch (const Error &err) {
        EXPECT_EQ(err.kind(), ErrorKind::NotSubgroup);
    }
}

TEST(Group, VerifyHomExamples) {
    auto d4 = builtin_group(BuiltinGroup::D4);
    auto k4 = builtin_group(BuiltinGroup::K4);
    auto z4 = builtin_group(BuiltinGroup::Z4);
    const Element a = k4->generator("a");
    EXPECT_TRUE(verify_hom(hom_from_generators(d4, k4, {{"r", a}, {"s", a}})));
    // r -> t, s -> e violates s r s^-1 = r^-1 since t != t^3.
    EXPECT_FALSE(verify_hom(hom_from_generators(d4, z4, {{"r", z4->generator("t")}, {"s", z4->identity()}})));
}

TEST(GroupProperty, AxiomsAndClassSizes) {
    for (auto which : kAll) {
        auto g = builtin_group(which);
        const std::size_t n = g->order();
        for (Element a = 0; a < n; a++) {
            EXPECT_EQ(g->mul(a, g->inverse(a)), g->identity());
            EXPECT_EQ(g->mul(g->inverse(a), a), g->identity());
            for (Element b = 0; b < n; b++)
                for (Element c = 0; c < n; c++) ASSERT_EQ(g->mul(g->mul(a, b), c), g->mul(a, g->mul(b, c)));
        }
        std::size_t total = 0;
        for (std::size_t k = 0; k < g->num_classes(); k++) {
            const auto &cls = g->classes().classes[k];
            EXPECT_EQ(n % cls.size(), 0u);
            total += cls.size();
            for (Element x : cls)
                for (Element by = 0; by < n; by++) EXPECT_EQ(g->class_of(g->conjugate(x, by)), k);
        }
        EXPECT_EQ(total, n);
    }
}

TEST(GroupProperty, CenterQuotientProjectionsAreHoms) {
    for (auto which : kAll) {
        auto g = builtin_group(which);
        auto [q, proj] = quotient(g, center(*g));
        EXPECT_TRUE(verify_hom(proj));
        EXPECT_TRUE(is_surjective(proj));
        EXPECT_EQ(kernel(proj).size() * q->order(), g->order());
    }
}

TEST(Group, GenerateFromMatrices) {
    // Z4 as powers of the 2x2 rotation by a quarter turn, over plain integers.
    using M = std::array<int, 4>;
    auto mul = [](const M &a, const M &b) {
        return M{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
                 a[2] * b[1] + a[3] * b[3]};
    };
    auto [g, elems] = generate_group<M>("rot", M{1, 0, 0, 1}, {{"q", M{0, -1, 1, 0}}}, mul);
    EXPECT_EQ(g.order(), 4u);
    EXPECT_EQ(elems.size(), 4u);
    EXPECT_TRUE(is_isomorphic(std::make_shared<const GroupTable>(g), builtin_group(BuiltinGroup::Z4)));
}

TEST(Group, TextDump) {
    const std::string dump = format_group(*builtin_group(BuiltinGroup::K4));
    EXPECT_EQ(dump.substr(0, dump.find('\n')), "group K4 order 4");
    EXPECT_EQ(std::count(dump.begin(), dump.end(), '\n'), 5);
}

TEST(Group, RejectsInvalidTables) {
    EXPECT_THROW(GroupTable("bad", {{0, 0}, {0, 1}}, {"e", "x"}, {}), Error);
    // Latin square without associativity: the loop of order 5 with this table.
    std::vector<std::vector<Element>> loop{
        {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
    EXPECT_THROW(GroupTable("loop", loop, {"e", "a", "b", "c", "d"}, {}), Error);
}

TEST(Group, ParseNames) {
    EXPECT_EQ(parse_builtin_group("D8"), BuiltinGroup::D8);
    EXPECT_FALSE(parse_builtin_group("S3").has_value());
}

}  // namespace
}  // namespace repcheck
