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

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "repcheck/cyclo.hpp"
#include "repcheck/group.hpp"

namespace repcheck {

inline bool same_group(const GroupPtr &a, const GroupPtr &b) { return a == b || *a == *b; }

/// Function on the conjugacy classes of a group, indexed in the group's
/// canonical class order.
class ClassFunction {
   public:
    ClassFunction(GroupPtr group, std::vector<CycloNum> values) : group_(std::move(group)), values_(std::move(values)) {
        if (values_.size() != group_->num_classes()) {
            throw Error(ErrorKind::DimensionMismatch, "class function on " + group_->name() + " needs " +
                                                          std::to_string(group_->num_classes()) + " values");
        }
    }

    const GroupPtr &group() const { return group_; }
    const std::vector<CycloNum> &values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    const CycloNum &operator[](std::size_t cls) const { return values_.at(cls); }
    const CycloNum &at_element(Element x) const { return values_.at(group_->class_of(x)); }
    const CycloNum &at_identity() const { return at_element(group_->identity()); }

    /// Value at the identity when it is a positive integer (a character degree).
    std::optional<std::int64_t> degree() const {
        const CycloNum &v = at_identity();
        if (!v.is_integer() || v.rational_value() <= 0) return std::nullopt;
        return boost::multiprecision::numerator(v.rational_value()).convert_to<std::int64_t>();
    }

    friend bool operator==(const ClassFunction &a, const ClassFunction &b) {
        return same_group(a.group_, b.group_) && a.values_ == b.values_;
    }
    friend bool operator!=(const ClassFunction &a, const ClassFunction &b) { return !(a == b); }

    friend ClassFunction operator+(const ClassFunction &a, const ClassFunction &b) {
        a.require_same(b);
        std::vector<CycloNum> v(a.values_);
        for (std::size_t k = 0; k < v.size(); k++) v[k] += b.values_[k];
        return {a.group_, std::move(v)};
    }
    friend ClassFunction operator*(const CycloNum &s, const ClassFunction &a) {
        std::vector<CycloNum> v(a.values_);
        for (auto &x : v) x = s * x;
        return {a.group_, std::move(v)};
    }

    void require_same(const ClassFunction &other) const {
        if (!same_group(group_, other.group_)) {
            throw Error(ErrorKind::GroupMismatch, group_->name() + " vs " + other.group_->name());
        }
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t k = 0; k < values_.size(); k++) s += (k ? "," : "") + values_[k].str();
        return s + ")";
    }

   private:
    GroupPtr group_;
    std::vector<CycloNum> values_;
};

struct CharTable {
    GroupPtr group;
    std::vector<ClassFunction> irreducibles;
    std::vector<std::string> labels;

    const ClassFunction &operator[](const std::string &label) const {
        for (std::size_t k = 0; k < labels.size(); k++) {
            if (labels[k] == label) return irreducibles[k];
        }
        throw Error(ErrorKind::NotACharacter, "no irreducible labelled " + label + " in " + group->name());
    }
    const ClassFunction &trivial() const { return irreducibles.front(); }
    std::size_t size() const { return irreducibles.size(); }
};

enum class ProjectiveClassTag { Trivial, NonTrivial };

inline std::string projective_class_name(ProjectiveClassTag t) {
    return t == ProjectiveClassTag::Trivial ? "trivial" : "non-trivial";
}

inline CycloNum inner_product(const ClassFunction &a, const ClassFunction &b) {
    a.require_same(b);
    const auto &g = *a.group();
    const auto &sizes = g.classes().sizes;
    CycloNum acc;
    for (std::size_t k = 0; k < a.size(); k++) {
        acc += CycloNum(static_cast<int>(sizes[k])) * a[k].conj() * b[k];
    }
    return acc * CycloNum(Rational(1, static_cast<long>(g.order())));
}

inline ClassFunction trivial_character(const GroupPtr &g) {
    return {g, std::vector<CycloNum>(g->num_classes(), CycloNum(1))};
}

inline ClassFunction regular_character(const GroupPtr &g) {
    std::vector<CycloNum> v(g->num_classes(), CycloNum(0));
    v[g->class_of(g->identity())] = CycloNum(static_cast<int>(g->order()));
    return {g, std::move(v)};
}

/// Pointwise x -> |x|^2: the character of X -> U X U^dagger on the operator space.
inline ClassFunction conj_character(const ClassFunction &u) {
    std::vector<CycloNum> v;
    v.reserve(u.size());
    for (const auto &x : u.values()) v.push_back(x.conj() * x);
    return {u.group(), std::move(v)};
}

inline ClassFunction tensor(const ClassFunction &a, const ClassFunction &b) {
    a.require_same(b);
    std::vector<CycloNum> v;
    v.reserve(a.size());
    for (std::size_t k = 0; k < a.size(); k++) v.push_back(a[k] * b[k]);
    return {a.group(), std::move(v)};
}

/// Integer multiplicities of each irreducible in f.
inline std::vector<std::int64_t> decompose(const ClassFunction &f, const CharTable &t) {
    if (!same_group(f.group(), t.group)) {
        throw Error(ErrorKind::GroupMismatch, f.group()->name() + " vs " + t.group->name());
    }
    std::vector<std::int64_t> m;
    for (std::size_t k = 0; k < t.size(); k++) {
        CycloNum ip = inner_product(t.irreducibles[k], f);
        if (!ip.is_integer() || ip.rational_value() < 0) {
            throw Error(ErrorKind::NotACharacter,
                        "multiplicity of " + t.labels[k] + " in " + f.str() + " is " + ip.str());
        }
        m.push_back(boost::multiprecision::numerator(ip.rational_value()).convert_to<std::int64_t>());
    }
    return m;
}

/// Sum of n_k times the k-th irreducible.
inline ClassFunction combine(const CharTable &t, const std::vector<std::int64_t> &multiplicities) {
    if (multiplicities.size() != t.size()) {
        throw Error(ErrorKind::DimensionMismatch, "multiplicity vector length does not match table");
    }
    ClassFunction acc{t.group, std::vector<CycloNum>(t.group->num_classes())};
    for (std::size_t k = 0; k < t.size(); k++) {
        if (multiplicities[k] != 0) {
            acc = acc + CycloNum(Rational(multiplicities[k])) * t.irreducibles[k];
        }
    }
    return acc;
}

/// g -> f(proj(g)) for f on proj.target.
inline ClassFunction pullback(const ClassFunction &f, const GroupHom &proj) {
    if (!same_group(f.group(), proj.target)) {
        throw Error(ErrorKind::GroupMismatch, "pullback: function lives on " + f.group()->name() +
                                                  ", hom targets " + proj.target->name());
    }
    const auto &src = *proj.source;
    std::vector<CycloNum> v;
    for (const auto &cls : src.classes().classes) {
        const CycloNum &first = f.at_element(proj(cls.front()));
        for (Element x : cls) {
            if (f.at_element(proj(x)) != first) {
                throw Error(ErrorKind::NotClassConstant, "pullback not constant on class of " + src.word(cls.front()));
            }
        }
        v.push_back(first);
    }
    return {proj.source, std::move(v)};
}

/// Descends f along a surjection when f is constant on every fibre.
inline ClassFunction push_forward(const ClassFunction &f, const GroupHom &proj) {
    if (!same_group(f.group(), proj.source)) {
        throw Error(ErrorKind::GroupMismatch, "push_forward: function lives on " + f.group()->name() +
                                                  ", hom starts at " + proj.source->name());
    }
    if (!is_surjective(proj)) {
        throw Error(ErrorKind::NotDescendable, "projection is not surjective");
    }
    const auto &tgt = *proj.target;
    std::vector<std::optional<CycloNum>> at(tgt.order());
    for (Element x = 0; x < proj.source->order(); x++) {
        const CycloNum &v = f.at_element(x);
        auto &slot = at[proj(x)];
        if (!slot) {
            slot = v;
        } else if (*slot != v) {
            throw Error(ErrorKind::NotDescendable,
                        "value differs across the fibre over " + tgt.word(proj(x)) + " (" + slot->str() + " vs " +
                            v.str() + ")");
        }
    }
    std::vector<CycloNum> v;
    for (const auto &cls : tgt.classes().classes) {
        for (Element y : cls) {
            if (*at[y] != *at[cls.front()]) {
                throw Error(ErrorKind::NotClassConstant, "descended function not constant on class of " +
                                                             tgt.word(cls.front()));
            }
        }
        v.push_back(*at[cls.front()]);
    }
    return {proj.target, std::move(v)};
}

namespace detail {

inline void verify_char_table(const CharTable &t) {
    const auto &g = *t.group;
    auto fail = [&](const std::string &why) {
        throw Error(ErrorKind::TableVerificationFailed, g.name() + ": " + why);
    };
    if (t.size() != g.num_classes() || t.labels.size() != t.size()) {
        fail("number of irreducibles differs from number of classes");
    }
    Rational degree_sum = 0;
    for (std::size_t a = 0; a < t.size(); a++) {
        if (!t.irreducibles[a].degree()) fail(t.labels[a] + " has no positive integer degree");
        degree_sum += Rational(*t.irreducibles[a].degree() * *t.irreducibles[a].degree());
        for (std::size_t b = 0; b < t.size(); b++) {
            CycloNum ip = inner_product(t.irreducibles[a], t.irreducibles[b]);
            if (ip != CycloNum(a == b ? 1 : 0)) {
                fail("<" + t.labels[a] + "," + t.labels[b] + "> = " + ip.str());
            }
        }
    }
    if (degree_sum != Rational(static_cast<long>(g.order()))) fail("sum of squared degrees is not the group order");
    // Column orthogonality: sum_chi conj(chi(K_a)) chi(K_b) = delta_ab |G| / |K_a|.
    const auto &sizes = g.classes().sizes;
    for (std::size_t a = 0; a < g.num_classes(); a++) {
        for (std::size_t b = 0; b < g.num_classes(); b++) {
            CycloNum s;
            for (const auto &chi : t.irreducibles) s += chi[a].conj() * chi[b];
            CycloNum want = a == b ? CycloNum(Rational(static_cast<long>(g.order()), static_cast<long>(sizes[a])))
                                   : CycloNum(0);
            if (s != want) fail("column orthogonality fails at classes " + std::to_string(a) + "," + std::to_string(b));
        }
    }
}

inline CharTable make_table(const GroupPtr &g, const std::vector<std::pair<std::string, std::vector<CycloNum>>> &rows) {
    CharTable t{g, {}, {}};
    for (const auto &[label, values] : rows) {
        t.irreducibles.emplace_back(g, values);
        t.labels.push_back(label);
    }
    verify_char_table(t);
    return t;
}

inline CharTable make_builtin_table(BuiltinGroup which) {
    const GroupPtr g = builtin_group(which);
    const CycloNum r2 = CycloNum::sqrt2();
    const CycloNum i = CycloNum::i();
    switch (which) {
        case BuiltinGroup::K4:
            // at (e, a, b, ab)
            return make_table(g, {{"χ1", {1, 1, 1, 1}},
                                  {"χ2", {1, -1, 1, -1}},
                                  {"χ3", {1, 1, -1, -1}},
                                  {"χ4", {1, -1, -1, 1}}});
        case BuiltinGroup::Z4:
            // chi_k(t^j) = i^{kj}
            return make_table(g, {{"χ0", {1, 1, 1, 1}},
                                  {"χ1", {1, i, -1, -i}},
                                  {"χ2", {1, -1, 1, -1}},
                                  {"χ3", {1, -i, -1, i}}});
        case BuiltinGroup::D4: {
            // at (e, r, r^2, s, rs)
#ifdef REPCHECK_INJECT_TABLE_FAULT
            const int chi5_r2 = 2;
#else
            const int chi5_r2 = -2;
#endif
            return make_table(g, {{"χ1", {1, 1, 1, 1, 1}},
                                  {"χ2", {1, 1, 1, -1, -1}},
                                  {"χ3", {1, -1, 1, 1, -1}},
                                  {"χ4", {1, -1, 1, -1, 1}},
                                  {"χ5", {2, 0, chi5_r2, 0, 0}}});
        }
        case BuiltinGroup::D8:
            // at (e, ζ, ζ^2, ζ^3, ζ^4, η, ζη)
            return make_table(g, {{"χ1", {1, 1, 1, 1, 1, 1, 1}},
                                  {"χ2", {1, 1, 1, 1, 1, -1, -1}},
                                  {"χ3", {1, -1, 1, -1, 1, 1, -1}},
                                  {"χ4", {1, -1, 1, -1, 1, -1, 1}},
                                  {"χE1", {2, r2, 0, -r2, -2, 0, 0}},
                                  {"χE2", {2, 0, -2, 0, 2, 0, 0}},
                                  {"χE3", {2, -r2, 0, r2, -2, 0, 0}}});
        case BuiltinGroup::Pauli1: {
            // Classes: e, i𝟙, -𝟙, -i𝟙, then {±σ}, {±iσ} for σ = σx, σy, σz.
            // Linear characters are fixed by signs on i𝟙, σx, σz; the two
            // faithful characters are tr and its conjugate.
            std::vector<std::pair<std::string, std::vector<CycloNum>>> rows;
            for (int ei : {1, -1}) {
                for (int ex : {1, -1}) {
                    for (int ez : {1, -1}) {
                        int ey = ei * ex * ez;
                        auto sign = [](int e) { return e > 0 ? std::string("+") : std::string("-"); };
                        rows.push_back({"χ" + sign(ei) + sign(ex) + sign(ez),
                                        {1, ei, 1, ei, ex, ei * ex, ey, ei * ey, ez, ei * ez}});
                    }
                }
            }
            rows.push_back({"χσ", {2, 2 * i, -2, -2 * i, 0, 0, 0, 0, 0, 0}});
            rows.push_back({"χσ̄", {2, -2 * i, -2, 2 * i, 0, 0, 0, 0, 0, 0}});
            return make_table(g, rows);
        }
    }
    throw Error(ErrorKind::UnknownGroup, "no table");
}

}  // namespace detail

/// Hard-coded character table of a built-in group, verified before it is returned.
inline const CharTable &char_table(BuiltinGroup which) {
    switch (which) {
        case BuiltinGroup::K4: {
            static const CharTable t = detail::make_builtin_table(which);
            return t;
        }
        case BuiltinGroup::Z4: {
            static const CharTable t = detail::make_builtin_table(which);
            return t;
        }
        case BuiltinGroup::D4: {
            static const CharTable t = detail::make_builtin_table(which);
            return t;
        }
        case BuiltinGroup::D8: {
            static const CharTable t = detail::make_builtin_table(which);
            return t;
        }
        case BuiltinGroup::Pauli1: {
            static const CharTable t = detail::make_builtin_table(which);
            return t;
        }
    }
    throw Error(ErrorKind::UnknownGroup, "no table");
}

inline const CharTable &char_table(const GroupTable &g) {
    auto which = parse_builtin_group(g.name());
    if (!which || !(*builtin_group(*which) == g)) {
        throw Error(ErrorKind::UnknownGroup, g.name() + " is not a built-in group");
    }
    return char_table(*which);
}

/// D8 -> D4 with ζ -> r, η -> s; kernel {e, ζ^4}.
inline const GroupHom &d8_to_d4() {
    static const GroupHom h = [] {
        GroupPtr d8 = builtin_group(BuiltinGroup::D8);
        GroupPtr d4 = builtin_group(BuiltinGroup::D4);
        GroupHom p = hom_from_generators(d8, d4, {{"ζ", d4->generator("r")}, {"η", d4->generator("s")}});
        if (!verify_hom(p) || !is_surjective(p)) {
            throw Error(ErrorKind::IsoNotFound, "ζ -> r, η -> s is not a surjection D8 -> D4");
        }
        return p;
    }();
    return h;
}

namespace detail {

inline GroupHom projection_onto(const GroupPtr &g, const GroupPtr &target) {
    auto [q, proj] = quotient(g, center(*g), g->name() + "/Z");
    auto iso = find_isomorphism(q, target);
    if (!iso) throw Error(ErrorKind::IsoNotFound, q->name() + " is not isomorphic to " + target->name());
    return compose(proj, *iso);
}

}  // namespace detail

/// D4 -> D4/<r^2> -> K4.
inline const GroupHom &d4_to_k4() {
    static const GroupHom h =
        detail::projection_onto(builtin_group(BuiltinGroup::D4), builtin_group(BuiltinGroup::K4));
    return h;
}

/// Pauli1 -> Pauli1/<i𝟙> -> K4.
inline const GroupHom &pauli_to_k4() {
    static const GroupHom h =
        detail::projection_onto(builtin_group(BuiltinGroup::Pauli1), builtin_group(BuiltinGroup::K4));
    return h;
}

/// Irreducible (projective) characters of D4 in one projective class.
///
/// The trivial class is the ordinary D4 table. The non-trivial class is read
/// off the Schur cover D8: the irreducibles on which ζ^4 acts as -1.
struct ProjectiveIrreps {
    ProjectiveClassTag tag;
    GroupPtr cover;
    std::vector<ClassFunction> characters;
    std::vector<std::string> labels;
    std::vector<Element> lift;  // D4 element -> chosen preimage in cover
};

inline ProjectiveIrreps projective_irreps_D4(ProjectiveClassTag tag) {
    GroupPtr d4 = builtin_group(BuiltinGroup::D4);
    if (tag == ProjectiveClassTag::Trivial) {
        const auto &t = char_table(BuiltinGroup::D4);
        std::vector<Element> lift(d4->order());
        for (Element x = 0; x < lift.size(); x++) lift[x] = x;
        return {tag, d4, t.irreducibles, t.labels, lift};
    }
    GroupPtr d8 = builtin_group(BuiltinGroup::D8);
    const auto &t = char_table(BuiltinGroup::D8);
    const Element z4 = d8->power(d8->generator("ζ"), 4);
    ProjectiveIrreps out{tag, d8, {}, {}, std::vector<Element>(d4->order(), d8->order())};
    for (std::size_t k = 0; k < t.size(); k++) {
        const auto &chi = t.irreducibles[k];
        if (chi.at_element(z4) == -chi.at_identity()) {
            out.characters.push_back(chi);
            out.labels.push_back(t.labels[k]);
        }
    }
    const auto &proj = d8_to_d4();
    for (Element x = 0; x < d8->order(); x++) {
        Element y = proj(x);
        if (out.lift[y] == d8->order()) out.lift[y] = x;
    }
    return out;
}

/// Class function on D8 that is constant on cosets of <ζ^4>, viewed on D4.
inline ClassFunction push_to_quotient(const ClassFunction &f) {
    GroupPtr d8 = builtin_group(BuiltinGroup::D8);
    if (!same_group(f.group(), d8)) throw Error(ErrorKind::WrongGroup, "push_to_quotient expects a D8 class function");
    const Element z4 = d8->power(d8->generator("ζ"), 4);
    for (Element g = 0; g < d8->order(); g++) {
        if (f.at_element(d8->mul(z4, g)) != f.at_element(g)) {
            throw Error(ErrorKind::NotDescendable,
                        "f(ζ^4·" + d8->word(g) + ") != f(" + d8->word(g) + ")");
        }
    }
    return push_forward(f, d8_to_d4());
}

}  // namespace repcheck
