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

// Quantum realizability of the seven teleportation-stable families.
//
// A family is realized by a (possibly projective) unitary representation U of
// its correction group when |chi_U|^2 equals the family's target character.
// Every family has the trivial character with multiplicity one, which forces
// chi_U to be irreducible, so the search space is the irreducibles of each
// projective class. Each obstruction below is a standalone predicate that
// rules out one or more projective classes on its own.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "repcheck/character.hpp"
#include "repcheck/io.hpp"

namespace repcheck {

enum class FamilyName { K4_1234, Z4_1234, D4_125, D4_135, D4_145, D4_12345, D4_123452 };

inline constexpr std::array<FamilyName, 7> kAllFamilies{FamilyName::K4_1234,  FamilyName::Z4_1234,
                                                       FamilyName::D4_125,   FamilyName::D4_135,
                                                       FamilyName::D4_145,   FamilyName::D4_12345,
                                                       FamilyName::D4_123452};

inline std::string family_label(FamilyName f) {
    switch (f) {
        case FamilyName::K4_1234: return "K4_1234";
        case FamilyName::Z4_1234: return "Z4_1234";
        case FamilyName::D4_125: return "D4_125";
        case FamilyName::D4_135: return "D4_135";
        case FamilyName::D4_145: return "D4_145";
        case FamilyName::D4_12345: return "D4_12345";
        case FamilyName::D4_123452: return "D4_123452";
    }
    return "?";
}

struct Family {
    FamilyName name;
    GroupPtr group;
    ClassFunction target;
    std::int64_t dimension;

    std::string label() const { return family_label(name); }
};

inline Family make_family(FamilyName name) {
    auto d4_family = [&](std::vector<std::int64_t> m) {
        const auto &t = char_table(BuiltinGroup::D4);
        ClassFunction target = combine(t, m);
        return Family{name, t.group, target, *target.degree()};
    };
    Family f = [&] {
        switch (name) {
            case FamilyName::K4_1234: {
                const auto &t = char_table(BuiltinGroup::K4);
                ClassFunction target = combine(t, {1, 1, 1, 1});
                return Family{name, t.group, target, *target.degree()};
            }
            case FamilyName::Z4_1234: {
                const auto &t = char_table(BuiltinGroup::Z4);
                ClassFunction target = combine(t, {1, 1, 1, 1});
                return Family{name, t.group, target, *target.degree()};
            }
            case FamilyName::D4_125: return d4_family({1, 1, 0, 0, 1});
            case FamilyName::D4_135: return d4_family({1, 0, 1, 0, 1});
            case FamilyName::D4_145: return d4_family({1, 0, 0, 1, 1});
            case FamilyName::D4_12345: return d4_family({1, 1, 1, 1, 1});
            case FamilyName::D4_123452: return d4_family({1, 1, 1, 1, 2});
        }
        throw std::logic_error("unknown family");
    }();
    // Input axiom: the trivial character occurs exactly once in every family.
    if (inner_product(trivial_character(f.group), f.target) != CycloNum(1)) {
        throw std::logic_error(f.label() + ": trivial multiplicity is not one");
    }
    return f;
}

inline std::vector<Family> seven_families() {
    std::vector<Family> out;
    for (FamilyName n : kAllFamilies) out.push_back(make_family(n));
    return out;
}

enum class ObstructionKind {
    DimensionBound,
    IrreducibilityForced,
    TrivialClassMismatch,
    ParityOfChi5,
    ReflectionVanishing,
    AbelianFixedProjectors,
};

inline constexpr std::array<ObstructionKind, 6> kDefaultCheckOrder{
    ObstructionKind::DimensionBound,      ObstructionKind::TrivialClassMismatch,
    ObstructionKind::IrreducibilityForced, ObstructionKind::ParityOfChi5,
    ObstructionKind::ReflectionVanishing,  ObstructionKind::AbelianFixedProjectors};

inline std::string obstruction_kind_name(ObstructionKind k) {
    switch (k) {
        case ObstructionKind::DimensionBound: return "DimensionBound";
        case ObstructionKind::IrreducibilityForced: return "IrreducibilityForced";
        case ObstructionKind::TrivialClassMismatch: return "TrivialClassMismatch";
        case ObstructionKind::ParityOfChi5: return "ParityOfChi5";
        case ObstructionKind::ReflectionVanishing: return "ReflectionVanishing";
        case ObstructionKind::AbelianFixedProjectors: return "AbelianFixedProjectors";
    }
    return "?";
}

/// Which projective classes an obstruction excludes.
enum class ObstructionScope { AllClasses, TrivialClass, NonTrivialClass };

struct ObstructionRecord {
    ObstructionKind kind;
    ObstructionScope scope;
    Json detail;
};

struct Witness {
    std::string character_label;
    std::string cover_group;
    ProjectiveClassTag projective_class;
    ClassFunction chi_conj;  // on D4 for D4 and K4 families, on Z4 for Z4
    std::string alternate_label;
};

struct Verdict {
    Family family;
    bool realizable;
    std::optional<Witness> witness;
    std::vector<Witness> all_witnesses;
    std::vector<ObstructionRecord> obstructions;
};

namespace detail {

// Target as a D4 class function: K4 families are pulled back along D4 -> K4.
inline ClassFunction d4_view(const Family &f) {
    const auto &name = f.group->name();
    if (name == "D4") return f.target;
    if (name == "K4") return pullback(f.target, d4_to_k4());
    throw Error(ErrorKind::WrongGroup, f.label() + " has no D4 view");
}

inline bool has_d4_view(const Family &f) { return f.group->name() == "D4" || f.group->name() == "K4"; }

struct Candidate {
    std::string label;
    std::string cover;
    ProjectiveClassTag tag;
    ClassFunction chi_conj_on_d4;
};

inline const std::vector<Candidate> &d4_candidates() {
    static const std::vector<Candidate> c = [] {
        std::vector<Candidate> out;
        for (auto tag : {ProjectiveClassTag::Trivial, ProjectiveClassTag::NonTrivial}) {
            ProjectiveIrreps p = projective_irreps_D4(tag);
            for (std::size_t k = 0; k < p.characters.size(); k++) {
                ClassFunction cc = conj_character(p.characters[k]);
                if (tag == ProjectiveClassTag::NonTrivial) cc = push_to_quotient(cc);
                out.push_back({p.labels[k], p.cover->name(), tag, cc});
            }
        }
        return out;
    }();
    return c;
}

// Witnesses for a K4 family found directly on K4: its linear characters plus
// the Pauli1 characters that do not factor through Pauli1 -> K4.
inline std::vector<std::string> k4_native_witnesses(const Family &f) {
    std::vector<std::string> out;
    const auto &k4 = char_table(BuiltinGroup::K4);
    for (std::size_t k = 0; k < k4.size(); k++) {
        if (conj_character(k4.irreducibles[k]) == f.target) out.push_back(k4.labels[k] + " of K4");
    }
    const auto &pauli = char_table(BuiltinGroup::Pauli1);
    GroupPtr p1 = pauli.group;
    const Element i1 = p1->generator("i𝟙");
    for (std::size_t k = 0; k < pauli.size(); k++) {
        const auto &chi = pauli.irreducibles[k];
        if (chi.at_element(i1) == chi.at_identity()) continue;  // linear on K4 already
        if (push_forward(conj_character(chi), pauli_to_k4()) == f.target) {
            out.push_back(pauli.labels[k] + " of Pauli1 (projective K4 rep, Pauli multiplier)");
        }
    }
    return out;
}

struct ParitySweep {
    std::size_t size = 0;
};

// m5 = 2e(a+b+c+d) checked against the enumerated decomposition for every
// chi_U = a chi1 + b chi2 + c chi3 + d chi4 + e chi5 of degree <= 4.
inline const ParitySweep &parity_sweep() {
    static const ParitySweep s = [] {
        const auto &t = char_table(BuiltinGroup::D4);
        ParitySweep out;
        for (int a = 0; a <= 4; a++)
            for (int b = 0; a + b <= 4; b++)
                for (int c = 0; a + b + c <= 4; c++)
                    for (int d = 0; a + b + c + d <= 4; d++)
                        for (int e = 0; a + b + c + d + 2 * e <= 4; e++) {
                            if (a + b + c + d + e == 0) continue;
                            ClassFunction u = combine(t, {a, b, c, d, e});
                            auto m = decompose(conj_character(u), t);
                            if (m[4] != 2 * e * (a + b + c + d)) {
                                throw std::logic_error("chi5 parity formula disagrees with enumeration at " +
                                                       u.str());
                            }
                            out.size++;
                        }
        return out;
    }();
    return s;
}

}  // namespace detail

/// Fires when the family needs an operator space larger than the square of the
/// largest irreducible degree over D4 and its Schur cover D8.
inline std::optional<ObstructionRecord> check_dimension_bound(const Family &f) {
    std::int64_t max_degree = 0;
    for (auto g : {BuiltinGroup::D4, BuiltinGroup::D8}) {
        for (const auto &chi : char_table(g).irreducibles) max_degree = std::max(max_degree, *chi.degree());
    }
    const std::int64_t bound = max_degree * max_degree;
    if (f.dimension <= bound) return std::nullopt;
    return ObstructionRecord{ObstructionKind::DimensionBound, ObstructionScope::AllClasses,
                             Json{{"required_dimension", f.dimension},
                                  {"max_irreducible_degree", max_degree},
                                  {"max_dimension", bound}}};
}

/// Irreducible candidates of every projective class whose conjugation
/// character equals the family target.
inline std::vector<Witness> enumerate_witnesses(const Family &f) {
    std::vector<Witness> out;
    if (f.group->name() == "Z4") {
        const auto &t = char_table(BuiltinGroup::Z4);
        for (std::size_t k = 0; k < t.size(); k++) {
            ClassFunction cc = conj_character(t.irreducibles[k]);
            if (cc == f.target) out.push_back({t.labels[k], "Z4", ProjectiveClassTag::Trivial, cc, ""});
        }
        return out;
    }
    const ClassFunction view = detail::d4_view(f);
    for (const auto &c : detail::d4_candidates()) {
        if (c.chi_conj_on_d4 == view) out.push_back({c.label, c.cover, c.tag, c.chi_conj_on_d4, ""});
    }
    if (f.group->name() == "K4") {
        auto native = detail::k4_native_witnesses(f);
        if (native.empty() != out.empty()) {
            throw std::logic_error(f.label() + ": D4 pullback and K4-native witness searches disagree");
        }
        std::string alt;
        for (const auto &n : native) alt += (alt.empty() ? "" : "; ") + n;
        for (auto &w : out) w.alternate_label = alt;
    }
    return out;
}

/// No trivial-class (linear D4) irreducible reproduces the target.
inline std::optional<ObstructionRecord> check_trivial_class_mismatch(const Family &f) {
    if (!detail::has_d4_view(f)) throw Error(ErrorKind::WrongGroup, f.label());
    const ClassFunction view = detail::d4_view(f);
    const auto &t = char_table(BuiltinGroup::D4);
    Json produced = Json::object();
    for (const auto &c : detail::d4_candidates()) {
        if (c.tag != ProjectiveClassTag::Trivial) continue;
        if (c.chi_conj_on_d4 == view) return std::nullopt;
        produced[c.label] = decompose(c.chi_conj_on_d4, t);
    }
    return ObstructionRecord{ObstructionKind::TrivialClassMismatch, ObstructionScope::TrivialClass,
                             Json{{"target_decomposition", decompose(view, t)}, {"candidates", produced}}};
}

/// In the non-trivial class chi_U must be an irreducible of D8 with ζ^4 = -1;
/// none of those reproduces the target.
inline std::optional<ObstructionRecord> check_irreducibility_forced(const Family &f) {
    if (!detail::has_d4_view(f)) throw Error(ErrorKind::WrongGroup, f.label());
    const ClassFunction view = detail::d4_view(f);
    const auto &t = char_table(BuiltinGroup::D4);
    Json produced = Json::object();
    for (const auto &c : detail::d4_candidates()) {
        if (c.tag != ProjectiveClassTag::NonTrivial) continue;
        if (c.chi_conj_on_d4 == view) return std::nullopt;
        produced[c.label] = decompose(c.chi_conj_on_d4, t);
    }
    return ObstructionRecord{ObstructionKind::IrreducibilityForced, ObstructionScope::NonTrivialClass,
                             Json{{"target_decomposition", decompose(view, t)}, {"candidates", produced}}};
}

/// Trivial class: chi5 enters |chi_U|^2 with even multiplicity 2e(a+b+c+d).
inline std::optional<ObstructionRecord> check_parity(const Family &f) {
    if (f.group->name() != "D4") throw Error(ErrorKind::WrongGroup, f.label() + " is not a D4 family");
    const auto &sweep = detail::parity_sweep();
    const std::int64_t m5 = decompose(f.target, char_table(BuiltinGroup::D4))[4];
    if (m5 % 2 == 0) return std::nullopt;
    return ObstructionRecord{ObstructionKind::ParityOfChi5, ObstructionScope::TrivialClass,
                             Json{{"chi5_multiplicity", m5}, {"sweep_size", sweep.size}}};
}

/// Non-trivial class: every candidate's conjugation character vanishes on the
/// reflection classes; the target must too.
inline std::optional<ObstructionRecord> check_reflection_vanishing(const Family &f) {
    if (f.group->name() != "D4") throw Error(ErrorKind::WrongGroup, f.label() + " is not a D4 family");
    const auto &d4 = *f.group;
    Json hits = Json::array();
    for (const char *refl : {"s", "rs"}) {
        const std::size_t cls = d4.class_of(*d4.find_word(refl));
        bool all_vanish = true;
        for (const auto &c : detail::d4_candidates()) {
            if (c.tag == ProjectiveClassTag::NonTrivial) all_vanish = all_vanish && c.chi_conj_on_d4[cls].is_zero();
        }
        if (all_vanish && !f.target[cls].is_zero()) {
            hits.push_back(Json{{"class", refl}, {"target_value", f.target[cls].str()}});
        }
    }
    if (hits.empty()) return std::nullopt;
    return ObstructionRecord{ObstructionKind::ReflectionVanishing, ObstructionScope::NonTrivialClass,
                             Json{{"nonzero_at", hits}}};
}

/// Z4 has trivial multiplier, so U is a sum of d linear characters and the
/// d diagonal projectors are fixed: m1 = sum n_k^2 >= d.
inline std::optional<ObstructionRecord> check_z4_abelian(const Family &f) {
    if (f.group->name() != "Z4") throw Error(ErrorKind::WrongGroup, f.label() + " is not a Z4 family");
    const auto &t = char_table(BuiltinGroup::Z4);
    const ClassFunction triv = t.trivial();
    std::size_t checked = 0;
    std::int64_t min_m1_multi = -1;
    bool realizes = false;
    for (int a = 0; a <= 4; a++)
        for (int b = 0; a + b <= 4; b++)
            for (int c = 0; a + b + c <= 4; c++)
                for (int d = 0; a + b + c + d <= 4; d++) {
                    const int dim = a + b + c + d;
                    if (dim == 0) continue;
                    ClassFunction cc = conj_character(combine(t, {a, b, c, d}));
                    CycloNum m1 = inner_product(triv, cc);
                    const std::int64_t sum_sq = a * a + b * b + c * c + d * d;
                    if (m1 != CycloNum(Rational(sum_sq)) || sum_sq < dim) {
                        throw std::logic_error("abelian fixed-projector bound violated");
                    }
                    if (dim >= 2 && (min_m1_multi < 0 || sum_sq < min_m1_multi)) min_m1_multi = sum_sq;
                    realizes = realizes || (sum_sq == 1 && cc == f.target);
                    checked++;
                }
    if (realizes) return std::nullopt;
    return ObstructionRecord{ObstructionKind::AbelianFixedProjectors, ObstructionScope::AllClasses,
                             Json{{"multisets_checked", checked},
                                  {"min_m1_for_dim_ge_2", min_m1_multi},
                                  {"chi_conj_dimension_for_dim_1", 1},
                                  {"target_dimension", f.dimension}}};
}

inline bool check_applies(ObstructionKind k, const Family &f) {
    const auto &g = f.group->name();
    switch (k) {
        case ObstructionKind::DimensionBound: return true;
        case ObstructionKind::TrivialClassMismatch:
        case ObstructionKind::IrreducibilityForced: return g == "D4" || g == "K4";
        case ObstructionKind::ParityOfChi5:
        case ObstructionKind::ReflectionVanishing: return g == "D4";
        case ObstructionKind::AbelianFixedProjectors: return g == "Z4";
    }
    return false;
}

inline std::optional<ObstructionRecord> run_check(ObstructionKind k, const Family &f) {
    switch (k) {
        case ObstructionKind::DimensionBound: return check_dimension_bound(f);
        case ObstructionKind::TrivialClassMismatch: return check_trivial_class_mismatch(f);
        case ObstructionKind::IrreducibilityForced: return check_irreducibility_forced(f);
        case ObstructionKind::ParityOfChi5: return check_parity(f);
        case ObstructionKind::ReflectionVanishing: return check_reflection_vanishing(f);
        case ObstructionKind::AbelianFixedProjectors: return check_z4_abelian(f);
    }
    return std::nullopt;
}

/// Runs the applicable obstruction battery in the given order and cross-checks
/// it against witness enumeration. Throws std::logic_error on disagreement.
inline Verdict classify(const Family &f, std::span<const ObstructionKind> order = kDefaultCheckOrder) {
    std::vector<ObstructionRecord> fired;
    bool trivial_out = false;
    bool nontrivial_out = false;
    for (ObstructionKind k : order) {
        if (!check_applies(k, f)) continue;
        auto rec = run_check(k, f);
        if (!rec) continue;
        trivial_out = trivial_out || rec->scope != ObstructionScope::NonTrivialClass;
        nontrivial_out = nontrivial_out || rec->scope != ObstructionScope::TrivialClass;
        fired.push_back(std::move(*rec));
    }
    // Z4 has a single (linear) projective class.
    const bool has_nontrivial_class = f.group->name() != "Z4";
    const bool obstructed = trivial_out && (nontrivial_out || !has_nontrivial_class);
    std::vector<Witness> witnesses = enumerate_witnesses(f);
    if (witnesses.empty() != obstructed) {
        throw std::logic_error(f.label() + ": witness enumeration and obstruction battery disagree");
    }
    Verdict v{f, !witnesses.empty(), std::nullopt, witnesses, {}};
    if (v.realizable) {
        v.witness = witnesses.front();
    } else {
        v.obstructions = std::move(fired);
    }
    return v;
}

inline std::vector<Verdict> classify_all() {
    std::vector<Verdict> out;
    for (const auto &f : seven_families()) out.push_back(classify(f));
    return out;
}

struct ReportDocument {
    Json json;
    std::string text;
};

inline Json verdict_json(const Verdict &v) {
    const auto &f = v.family;
    Json witness = nullptr;
    if (v.witness) {
        witness = Json{{"character_label", v.witness->character_label},
                       {"projective_class", projective_class_name(v.witness->projective_class)},
                       {"cover_group", v.witness->cover_group}};
        if (!v.witness->alternate_label.empty()) witness["alternate_label"] = v.witness->alternate_label;
    }
    Json obstructions = Json::array();
    for (const auto &o : v.obstructions) {
        obstructions.push_back(Json{{"kind", obstruction_kind_name(o.kind)}, {"detail", o.detail}});
    }
    Json entry{{"family", f.label()},
               {"dimension", f.dimension},
               {"realizable", v.realizable},
               {"witness", witness},
               {"obstructions", obstructions},
               {"chi_conj_decomposition", decompose(f.target, char_table(*f.group))}};
    if (f.group->name() == "K4") {
        entry["d4_pullback_decomposition"] = decompose(detail::d4_view(f), char_table(BuiltinGroup::D4));
    }
    return entry;
}

/// All seven verdicts plus the conjugation characters of every irreducible candidate.
inline ReportDocument full_report() {
    std::vector<Verdict> verdicts = classify_all();
    Json families = Json::array();
    Json realizable = Json::array();
    for (const auto &v : verdicts) {
        families.push_back(verdict_json(v));
        if (v.realizable) realizable.push_back(v.family.label());
    }
    Json candidates = Json::array();
    const auto &d4 = char_table(BuiltinGroup::D4);
    for (const auto &c : detail::d4_candidates()) {
        Json values = Json::array();
        for (const auto &x : c.chi_conj_on_d4.values()) values.push_back(x.str());
        candidates.push_back(Json{{"character_label", c.label},
                                  {"cover_group", c.cover},
                                  {"projective_class", projective_class_name(c.tag)},
                                  {"chi_conj_on_D4", values},
                                  {"chi_conj_decomposition", decompose(c.chi_conj_on_d4, d4)}});
    }
    ReportDocument doc;
    doc.json = Json{{"families", families}, {"realizable", realizable}, {"d4_candidates", candidates}};

    std::ostringstream os;
    os << pad("family", 11) << pad("dim", 5) << pad("verdict", 12) << "witness / obstructions\n";
    for (const auto &v : verdicts) {
        os << pad(v.family.label(), 11) << pad(std::to_string(v.family.dimension), 5)
           << pad(v.realizable ? "realizable" : "obstructed", 12);
        if (v.witness) {
            os << v.witness->character_label << " of " << v.witness->cover_group << " ("
               << projective_class_name(v.witness->projective_class) << " class)";
            for (std::size_t k = 1; k < v.all_witnesses.size(); k++) {
                os << ", " << v.all_witnesses[k].character_label << " of " << v.all_witnesses[k].cover_group;
            }
            if (!v.witness->alternate_label.empty()) os << "; also " << v.witness->alternate_label;
        } else {
            for (std::size_t k = 0; k < v.obstructions.size(); k++) {
                os << (k ? ", " : "") << obstruction_kind_name(v.obstructions[k].kind);
            }
        }
        os << "\n";
    }
    os << "realizable: ";
    for (std::size_t k = 0; k < realizable.size(); k++) os << (k ? ", " : "") << realizable[k].get<std::string>();
    os << "\n";
    doc.text = os.str();
    return doc;
}

}  // namespace repcheck
