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

#include "repcheck/classifier.hpp"

namespace repcheck {
namespace {

std::set<std::string> kinds(const Verdict &v) {
    std::set<std::string> out;
    for (const auto &o : v.obstructions) out.insert(obstruction_kind_name(o.kind));
    return out;
}

Verdict verdict_for(FamilyName n) { return classify(make_family(n)); }

TEST(Classifier, FamilyDimensions) {
    std::vector<std::int64_t> dims;
    for (const auto &f : seven_families()) dims.push_back(f.dimension);
    EXPECT_EQ(dims, (std::vector<std::int64_t>{4, 4, 4, 4, 4, 6, 8}));
}

TEST(Classifier, EveryFamilyContainsTrivialOnce) {
    for (const auto &f : seven_families()) {
        EXPECT_EQ(inner_product(trivial_character(f.group), f.target), CycloNum(1)) << f.label();
    }
}

TEST(Classifier, TargetsFromTables) {
    const auto &d4 = char_table(BuiltinGroup::D4);
    EXPECT_EQ(make_family(FamilyName::D4_125).target, d4["χ1"] + d4["χ2"] + d4["χ5"]);
    EXPECT_EQ(make_family(FamilyName::D4_123452).target,
              d4["χ1"] + d4["χ2"] + d4["χ3"] + d4["χ4"] + CycloNum(2) * d4["χ5"]);
}

TEST(Classifier, DimensionBound) {
    auto d = check_dimension_bound(make_family(FamilyName::D4_12345));
    ASSERT_TRUE(d);
    EXPECT_EQ(d->detail["required_dimension"], 6);
    EXPECT_EQ(d->detail["max_dimension"], 4);
    EXPECT_EQ(check_dimension_bound(make_family(FamilyName::D4_123452))->detail["required_dimension"], 8);
    EXPECT_FALSE(check_dimension_bound(make_family(FamilyName::D4_125)));
}

TEST(Classifier, WitnessEnumeration) {
    auto k4 = enumerate_witnesses(make_family(FamilyName::K4_1234));
    ASSERT_EQ(k4.size(), 1u);
    EXPECT_EQ(k4[0].character_label, "χ5");
    EXPECT_EQ(k4[0].cover_group, "D4");
    EXPECT_EQ(k4[0].projective_class, ProjectiveClassTag::Trivial);
    EXPECT_NE(k4[0].alternate_label.find("χσ of Pauli1"), std::string::npos);

    auto d125 = enumerate_witnesses(make_family(FamilyName::D4_125));
    std::vector<std::string> labels;
    for (const auto &w : d125) {
        labels.push_back(w.character_label);
        EXPECT_EQ(w.projective_class, ProjectiveClassTag::NonTrivial);
    }
    EXPECT_EQ(labels, (std::vector<std::string>{"χE1", "χE3"}));
    EXPECT_TRUE(enumerate_witnesses(make_family(FamilyName::D4_135)).empty());
    EXPECT_TRUE(enumerate_witnesses(make_family(FamilyName::Z4_1234)).empty());
}

TEST(Classifier, Z4Abelian) {
    EXPECT_TRUE(check_z4_abelian(make_family(FamilyName::Z4_1234)));
    EXPECT_THROW((void)check_z4_abelian(make_family(FamilyName::D4_125)), Error);
    // One linear character: m1 = 1 but the conjugation character has degree 1.
    const auto &z4 = char_table(BuiltinGroup::Z4);
    EXPECT_EQ(conj_character(z4["χ1"]).at_identity(), CycloNum(1));
    // Two distinct linear characters: m1 = 2.
    EXPECT_EQ(inner_product(z4.trivial(), conj_character(z4["χ0"] + z4["χ1"])), CycloNum(2));
}

TEST(Classifier, Parity) {
    EXPECT_EQ(check_parity(make_family(FamilyName::D4_135))->detail["chi5_multiplicity"], 1);
    EXPECT_TRUE(check_parity(make_family(FamilyName::D4_145)));
    // K4_1234 viewed on D4 is χ1+χ2+χ3+χ4: chi5 multiplicity 0.
    const auto &d4 = char_table(BuiltinGroup::D4);
    const Family k4_as_d4{FamilyName::K4_1234, d4.group, combine(d4, {1, 1, 1, 1, 0}), 4};
    EXPECT_FALSE(check_parity(k4_as_d4));
    EXPECT_THROW((void)check_parity(make_family(FamilyName::K4_1234)), Error);
}

TEST(Classifier, ReflectionVanishing) {
    auto r135 = check_reflection_vanishing(make_family(FamilyName::D4_135));
    ASSERT_TRUE(r135);
    EXPECT_EQ(r135->detail["nonzero_at"][0]["class"], "s");
    EXPECT_EQ(r135->detail["nonzero_at"][0]["target_value"], "2");
    auto r145 = check_reflection_vanishing(make_family(FamilyName::D4_145));
    ASSERT_TRUE(r145);
    EXPECT_EQ(r145->detail["nonzero_at"][0]["class"], "rs");
    EXPECT_FALSE(check_reflection_vanishing(make_family(FamilyName::D4_125)));
    EXPECT_THROW((void)check_reflection_vanishing(make_family(FamilyName::Z4_1234)), Error);
}

TEST(Classifier, Verdicts) {
    std::vector<std::string> realizable;
    for (const auto &v : classify_all()) {
        EXPECT_EQ(v.realizable, v.witness.has_value());
        EXPECT_EQ(v.realizable, v.obstructions.empty());
        if (v.realizable) realizable.push_back(v.family.label());
    }
    EXPECT_EQ(realizable, (std::vector<std::string>{"K4_1234", "D4_125"}));

    const auto k4 = verdict_for(FamilyName::K4_1234);
    EXPECT_EQ(k4.witness->character_label, "χ5");
    EXPECT_EQ(k4.witness->projective_class, ProjectiveClassTag::Trivial);
    EXPECT_TRUE(kinds(verdict_for(FamilyName::Z4_1234)).count("AbelianFixedProjectors"));
}

TEST(Classifier, ObstructionSets) {
    using S = std::set<std::string>;
    EXPECT_EQ(kinds(verdict_for(FamilyName::Z4_1234)), S({"AbelianFixedProjectors"}));
    for (auto n : {FamilyName::D4_135, FamilyName::D4_145}) {
        EXPECT_EQ(kinds(verdict_for(n)),
                  S({"TrivialClassMismatch", "IrreducibilityForced", "ParityOfChi5", "ReflectionVanishing"}));
    }
    EXPECT_EQ(kinds(verdict_for(FamilyName::D4_12345)),
              S({"DimensionBound", "TrivialClassMismatch", "IrreducibilityForced", "ParityOfChi5"}));
    EXPECT_EQ(kinds(verdict_for(FamilyName::D4_123452)),
              S({"DimensionBound", "TrivialClassMismatch", "IrreducibilityForced"}));
}

TEST(ClassifierProperty, CheckOrderDoesNotMatter) {
    std::array<ObstructionKind, 6> order = kDefaultCheckOrder;
    std::sort(order.begin(), order.end());
    std::vector<std::vector<std::pair<bool, std::set<std::string>>>> seen;
    do {
        std::vector<std::pair<bool, std::set<std::string>>> row;
        for (const auto &f : seven_families()) {
            auto v = classify(f, order);
            row.emplace_back(v.realizable, kinds(v));
        }
        seen.push_back(row);
    } while (std::next_permutation(order.begin(), order.end()));
    EXPECT_EQ(seen.size(), 720u);
    for (const auto &row : seen) EXPECT_EQ(row, seen.front());
}

// Exhaustive oracle: every character of degree <= 4 in both projective
// classes; only irreducible ones may reproduce a family target.
TEST(ClassifierProperty, NoReducibleCharacterMatchesAnyFamily) {
    const auto &d4 = char_table(BuiltinGroup::D4);
    std::vector<ClassFunction> views;
    for (const auto &f : seven_families()) {
        if (detail::has_d4_view(f)) views.push_back(detail::d4_view(f));
    }
    std::set<std::string> matched;
    std::size_t swept = 0;
    for (int a = 0; a <= 4; a++)
        for (int b = 0; a + b <= 4; b++)
            for (int c = 0; a + b + c <= 4; c++)
                for (int d = 0; a + b + c + d <= 4; d++)
                    for (int e = 0; a + b + c + d + 2 * e <= 4; e++) {
                        const int parts = a + b + c + d + e;
                        if (parts == 0) continue;
                        swept++;
                        const ClassFunction cc = conj_character(combine(d4, {a, b, c, d, e}));
                        for (const auto &v : views) {
                            if (cc == v) {
                                EXPECT_EQ(parts, 1) << "reducible linear character matches a family";
                                matched.insert(combine(d4, {a, b, c, d, e}).str());
                            }
                        }
                    }
    const auto &d8 = char_table(BuiltinGroup::D8);
    for (int x = 0; x <= 2; x++)
        for (int y = 0; x + y <= 2; y++) {
            if (x + y == 0) continue;
            swept++;
            const ClassFunction u = CycloNum(x) * d8["χE1"] + CycloNum(y) * d8["χE3"];
            const ClassFunction cc = push_to_quotient(conj_character(u));
            for (const auto &v : views) {
                if (cc == v) {
                    EXPECT_EQ(x + y, 1) << "reducible projective character matches a family";
                    matched.insert(u.str());
                }
            }
        }
    EXPECT_EQ(swept, 90u);  // 85 D4 characters of degree <= 4, 5 D8 combinations
    EXPECT_EQ(matched.size(), 3u);  // χ5, χE1, χE3
}

TEST(ClassifierProperty, ParityFormulaMatchesEnumeration) {
    EXPECT_GT(detail::parity_sweep().size, 0u);
}

TEST(Classifier, ReportJson) {
    const auto doc = full_report();
    ASSERT_EQ(doc.json["families"].size(), 7u);
    EXPECT_EQ(doc.json["realizable"], Json::array({"K4_1234", "D4_125"}));
    const auto &d125 = doc.json["families"][2];
    EXPECT_EQ(d125["family"], "D4_125");
    EXPECT_EQ(d125["witness"]["character_label"], "χE1");
    EXPECT_EQ(d125["witness"]["projective_class"], "non-trivial");
    EXPECT_EQ(d125["chi_conj_decomposition"], Json::array({1, 1, 0, 0, 1}));
    bool found = false;
    for (const auto &c : doc.json["d4_candidates"]) {
        if (c["character_label"] == "χE1") {
            EXPECT_EQ(c["chi_conj_decomposition"], Json::array({1, 1, 0, 0, 1}));
            found = true;
        }
    }
    EXPECT_TRUE(found);
    EXPECT_EQ(doc.json["families"][0]["d4_pullback_decomposition"], Json::array({1, 1, 1, 1, 0}));
    EXPECT_TRUE(doc.json["families"][1]["witness"].is_null());
}

TEST(Classifier, ReportIsDeterministic) {
    const auto a = full_report();
    const auto b = full_report();
    EXPECT_EQ(a.text, b.text);
    EXPECT_EQ(a.json.dump(), b.json.dump());
    const std::string tail = "realizable: K4_1234, D4_125\n";
    ASSERT_GE(a.text.size(), tail.size());
    EXPECT_EQ(a.text.substr(a.text.size() - tail.size()), tail);
}

}  // namespace
}  // namespace repcheck
