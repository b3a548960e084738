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

#include <algorithm>
#include <cstddef>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "repcheck/error.hpp"

namespace repcheck {

using Element = std::size_t;

struct ConjClassPartition {
    std::vector<std::vector<Element>> classes;
    std::vector<Element> representatives;
    std::vector<std::size_t> sizes;
    std::vector<std::size_t> class_of;  // element -> class index
};

/// A finite group given by its full multiplication table.
///
/// Element indices follow the canonical word order: index 0 is not necessarily
/// the identity, but every derived ordering (class representatives, coset
/// representatives) picks the lowest index, so iteration order is deterministic.
class GroupTable {
   public:
    using Generators = std::vector<std::pair<std::string, Element>>;

    GroupTable(std::string name, std::vector<std::vector<Element>> mul, std::vector<std::string> words,
               Generators generators)
        : name_(std::move(name)), mul_(std::move(mul)), words_(std::move(words)), generators_(std::move(generators)) {
        validate();
        classes_ = compute_classes();
    }

    const std::string &name() const { return name_; }
    std::size_t order() const { return mul_.size(); }
    Element mul(Element a, Element b) const { return mul_[a][b]; }
    const std::vector<std::vector<Element>> &table() const { return mul_; }
    Element identity() const { return identity_; }
    Element inverse(Element a) const { return inverse_[a]; }
    Element conjugate(Element x, Element by) const { return mul(mul(by, x), inverse(by)); }
    const Generators &generators() const { return generators_; }
    const std::string &word(Element a) const { return words_[a]; }
    const std::vector<std::string> &words() const { return words_; }

    Element generator(const std::string &gen_name) const {
        for (const auto &[n, e] : generators_) {
            if (n == gen_name) return e;
        }
        throw Error(ErrorKind::UnknownGroup, "group " + name_ + " has no generator '" + gen_name + "'");
    }

    std::optional<Element> find_word(const std::string &w) const {
        for (Element e = 0; e < order(); e++) {
            if (words_[e] == w) return e;
        }
        return std::nullopt;
    }

    Element power(Element a, long k) const {
        Element base = k < 0 ? inverse(a) : a;
        Element acc = identity_;
        for (long n = 0; n < (k < 0 ? -k : k); n++) acc = mul(acc, base);
        return acc;
    }

    std::size_t element_order(Element a) const {
        std::size_t n = 1;
        for (Element x = a; x != identity_; x = mul(x, a)) n++;
        return n;
    }

    const ConjClassPartition &classes() const { return classes_; }
    std::size_t num_classes() const { return classes_.classes.size(); }
    std::size_t class_of(Element a) const { return classes_.class_of[a]; }

    friend bool operator==(const GroupTable &a, const GroupTable &b) {
        return a.name_ == b.name_ && a.mul_ == b.mul_;
    }

   private:
    void validate() {
        const std::size_t n = mul_.size();
        if (n == 0) throw Error(ErrorKind::NotSubgroup, name_ + ": empty group");
        if (words_.size() != n) throw Error(ErrorKind::NotSubgroup, name_ + ": word list size mismatch");
        for (const auto &row : mul_) {
            if (row.size() != n) throw Error(ErrorKind::NotSubgroup, name_ + ": table is not square");
        }
        // Latin square.
        for (std::size_t a = 0; a < n; a++) {
            std::vector<bool> row_seen(n), col_seen(n);
            for (std::size_t b = 0; b < n; b++) {
                if (mul_[a][b] >= n || mul_[b][a] >= n || row_seen[mul_[a][b]] || col_seen[mul_[b][a]]) {
                    throw Error(ErrorKind::NotSubgroup, name_ + ": table is not a Latin square");
                }
                row_seen[mul_[a][b]] = true;
                col_seen[mul_[b][a]] = true;
            }
        }
        std::optional<Element> id;
        for (Element e = 0; e < n && !id; e++) {
            bool ok = true;
            for (Element x = 0; x < n && ok; x++) ok = mul_[e][x] == x && mul_[x][e] == x;
            if (ok) id = e;
        }
        if (!id) throw Error(ErrorKind::NotSubgroup, name_ + ": no two-sided identity");
        identity_ = *id;
        inverse_.assign(n, n);
        for (Element a = 0; a < n; a++) {
            for (Element b = 0; b < n; b++) {
                if (mul_[a][b] == identity_ && mul_[b][a] == identity_) inverse_[a] = b;
            }
            if (inverse_[a] == n) throw Error(ErrorKind::NotSubgroup, name_ + ": element without inverse");
        }
        for (Element a = 0; a < n; a++) {
            for (Element b = 0; b < n; b++) {
                for (Element c = 0; c < n; c++) {
                    if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]]) {
                        throw Error(ErrorKind::NotSubgroup, name_ + ": table is not associative");
                    }
                }
            }
        }
        for (const auto &[gname, g] : generators_) {
            if (g >= n) throw Error(ErrorKind::NotSubgroup, name_ + ": generator " + gname + " out of range");
        }
    }

    ConjClassPartition compute_classes() const {
        const std::size_t n = order();
        ConjClassPartition p;
        p.class_of.assign(n, n);
        for (Element x = 0; x < n; x++) {
            if (p.class_of[x] != n) continue;
            std::set<Element> orbit;
            for (Element g = 0; g < n; g++) orbit.insert(conjugate(x, g));
            const std::size_t idx = p.classes.size();
            for (Element y : orbit) p.class_of[y] = idx;
            p.classes.emplace_back(orbit.begin(), orbit.end());
            p.representatives.push_back(*orbit.begin());
            p.sizes.push_back(orbit.size());
        }
        return p;
    }

    std::string name_;
    std::vector<std::vector<Element>> mul_;
    std::vector<std::string> words_;
    Generators generators_;
    Element identity_ = 0;
    std::vector<Element> inverse_;
    ConjClassPartition classes_;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

/// Conjugacy classes ordered by lowest element index; each representative is
/// the lowest-index (canonical-word) member of its class.
inline ConjClassPartition conjugacy_classes(const GroupTable &g) { return g.classes(); }

/// Builds a table from concrete elements with a multiplication closure.
/// Each product must land back in `elements`.
template <class T, class Mul>
GroupTable table_from_elements(std::string name, const std::vector<T> &elements, std::vector<std::string> words,
                               const std::vector<std::pair<std::string, T>> &generators, Mul mul) {
    const std::size_t n = elements.size();
    auto index_of = [&](const T &x) -> Element {
        for (Element k = 0; k < n; k++) {
            if (elements[k] == x) return k;
        }
        throw Error(ErrorKind::NotSubgroup, name + ": element set is not closed under multiplication");
    };
    std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
    for (Element a = 0; a < n; a++) {
        for (Element b = 0; b < n; b++) table[a][b] = index_of(mul(elements[a], elements[b]));
    }
    GroupTable::Generators gens;
    for (const auto &[gname, g] : generators) gens.emplace_back(gname, index_of(g));
    return GroupTable(std::move(name), std::move(table), std::move(words), std::move(gens));
}

/// Closure of a generating set under right multiplication, enumerated breadth
/// first so every element is labelled by its shortlex-minimal word.
/// Returns the elements alongside the table.
template <class T, class Mul>
std::pair<GroupTable, std::vector<T>> generate_group(std::string name, const T &identity,
                                                     const std::vector<std::pair<std::string, T>> &generators, Mul mul,
                                                     std::size_t max_order = 64) {
    std::vector<T> elements{identity};
    std::vector<std::vector<std::size_t>> word_letters{{}};
    std::deque<std::size_t> queue{0};
    auto find = [&](const T &x) -> std::optional<std::size_t> {
        for (std::size_t k = 0; k < elements.size(); k++) {
            if (elements[k] == x) return k;
        }
        return std::nullopt;
    };
    while (!queue.empty()) {
        std::size_t cur = queue.front();
        queue.pop_front();
        for (std::size_t gi = 0; gi < generators.size(); gi++) {
            T next = mul(elements[cur], generators[gi].second);
            if (find(next)) continue;
            if (elements.size() >= max_order) {
                throw Error(ErrorKind::NotSubgroup, name + ": generated group exceeds order bound");
            }
            elements.push_back(next);
            auto w = word_letters[cur];
            w.push_back(gi);
            word_letters.push_back(std::move(w));
            queue.push_back(elements.size() - 1);
        }
    }
    std::vector<std::string> words;
    for (const auto &letters : word_letters) {
        if (letters.empty()) {
            words.emplace_back("e");
            continue;
        }
        std::string w;
        for (std::size_t k = 0; k < letters.size();) {
            std::size_t run = 1;
            while (k + run < letters.size() && letters[k + run] == letters[k]) run++;
            if (!w.empty()) w += "·";
            w += generators[letters[k]].first;
            if (run > 1) w += "^" + std::to_string(run);
            k += run;
        }
        words.push_back(std::move(w));
    }
    GroupTable table = table_from_elements(std::move(name), elements, std::move(words), generators, mul);
    return {std::move(table), std::move(elements)};
}

enum class BuiltinGroup { K4, Z4, D4, D8, Pauli1 };

inline std::string builtin_group_name(BuiltinGroup g) {
    switch (g) {
        case BuiltinGroup::K4: return "K4";
        case BuiltinGroup::Z4: return "Z4";
        case BuiltinGroup::D4: return "D4";
        case BuiltinGroup::D8: return "D8";
        case BuiltinGroup::Pauli1: return "Pauli1";
    }
    return "?";
}

inline std::optional<BuiltinGroup> parse_builtin_group(const std::string &s) {
    for (auto g : {BuiltinGroup::K4, BuiltinGroup::Z4, BuiltinGroup::D4, BuiltinGroup::D8, BuiltinGroup::Pauli1}) {
        if (builtin_group_name(g) == s) return g;
    }
    return std::nullopt;
}

namespace detail {

inline std::string power_word(const std::string &letter, int k) {
    if (k == 0) return "";
    if (k == 1) return letter;
    return letter + "^" + std::to_string(k);
}

// Dihedral group of order 2n in normal form r^a s^b, index a + n*b.
inline GroupTable make_dihedral(const std::string &name, int n, const std::string &r, const std::string &s) {
    using E = std::pair<int, int>;
    std::vector<E> elements;
    std::vector<std::string> words;
    for (int b = 0; b < 2; b++) {
        for (int a = 0; a < n; a++) {
            elements.emplace_back(a, b);
            std::string w = power_word(r, a) + power_word(s, b);
            words.push_back(w.empty() ? "e" : w);
        }
    }
    auto mul = [n](const E &x, const E &y) {
        int a = x.second ? x.first - y.first : x.first + y.first;
        return E{((a % n) + n) % n, x.second ^ y.second};
    };
    return table_from_elements<E>(name, elements, words, {{r, {1, 0}}, {s, {0, 1}}}, mul);
}

inline GroupTable make_k4() {
    using E = std::pair<int, int>;
    std::vector<E> elements{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    std::vector<std::string> words{"e", "a", "b", "ab"};
    auto mul = [](const E &x, const E &y) { return E{x.first ^ y.first, x.second ^ y.second}; };
    return table_from_elements<E>("K4", elements, words, {{"a", {1, 0}}, {"b", {0, 1}}}, mul);
}

inline GroupTable make_z4() {
    std::vector<int> elements{0, 1, 2, 3};
    std::vector<std::string> words{"e", "t", "t^2", "t^3"};
    auto mul = [](int x, int y) { return (x + y) % 4; };
    return table_from_elements<int>("Z4", elements, words, {{"t", 1}}, mul);
}

// Single-qubit Pauli group: (j, k) stands for sigma_j * (i 1)^k, index 4j + k.
inline GroupTable make_pauli1() {
    using E = std::pair<int, int>;
    static const char *const kSigma[4] = {"", "σx", "σy", "σz"};
    std::vector<E> elements;
    std::vector<std::string> words;
    for (int j = 0; j < 4; j++) {
        for (int k = 0; k < 4; k++) {
            elements.emplace_back(j, k);
            std::string phase = k == 0 ? "" : (k == 1 ? "i𝟙" : "(i𝟙)^" + std::to_string(k));
            std::string w = phase + kSigma[j];
            words.push_back(w.empty() ? "e" : w);
        }
    }
    // sigma_j sigma_l = i^p sigma_{j xor l}; p = 1 for cyclic (x,y),(y,z),(z,x), 3 for anticyclic.
    auto phase = [](int j, int l) {
        if (j == 0 || l == 0 || j == l) return 0;
        return ((l - j + 3) % 3) == 1 ? 1 : 3;
    };
    auto mul = [phase](const E &x, const E &y) {
        return E{x.first ^ y.first, (x.second + y.second + phase(x.first, y.first)) % 4};
    };
    return table_from_elements<E>("Pauli1", elements, words,
                                  {{"i𝟙", {0, 1}}, {"σx", {1, 0}}, {"σy", {2, 0}}, {"σz", {3, 0}}}, mul);
}

}  // namespace detail

/// Verified built-in group; each instance is constructed once and shared.
inline GroupPtr builtin_group(BuiltinGroup which) {
    switch (which) {
        case BuiltinGroup::K4: {
            static const GroupPtr g = std::make_shared<const GroupTable>(detail::make_k4());
            return g;
        }
        case BuiltinGroup::Z4: {
            static const GroupPtr g = std::make_shared<const GroupTable>(detail::make_z4());
            return g;
        }
        case BuiltinGroup::D4: {
            static const GroupPtr g = std::make_shared<const GroupTable>(detail::make_dihedral("D4", 4, "r", "s"));
            return g;
        }
        case BuiltinGroup::D8: {
            static const GroupPtr g = std::make_shared<const GroupTable>(detail::make_dihedral("D8", 8, "ζ", "η"));
            return g;
        }
        case BuiltinGroup::Pauli1: {
            static const GroupPtr g = std::make_shared<const GroupTable>(detail::make_pauli1());
            return g;
        }
    }
    throw Error(ErrorKind::UnknownGroup, "unknown built-in group");
}

inline std::vector<Element> center(const GroupTable &g) {
    std::vector<Element> z;
    for (Element x = 0; x < g.order(); x++) {
        bool central = true;
        for (Element y = 0; y < g.order() && central; y++) central = g.mul(x, y) == g.mul(y, x);
        if (central) z.push_back(x);
    }
    return z;
}

struct GroupHom {
    GroupPtr source;
    GroupPtr target;
    std::vector<Element> image;

    Element operator()(Element x) const { return image.at(x); }
};

inline bool verify_hom(const GroupHom &h) {
    const auto &s = *h.source;
    const auto &t = *h.target;
    if (h.image.size() != s.order()) return false;
    for (Element x : h.image) {
        if (x >= t.order()) return false;
    }
    for (Element a = 0; a < s.order(); a++) {
        for (Element b = 0; b < s.order(); b++) {
            if (h.image[s.mul(a, b)] != t.mul(h.image[a], h.image[b])) return false;
        }
    }
    return true;
}

inline std::vector<Element> kernel(const GroupHom &h) {
    std::vector<Element> k;
    for (Element x = 0; x < h.source->order(); x++) {
        if (h.image[x] == h.target->identity()) k.push_back(x);
    }
    return k;
}

inline bool is_surjective(const GroupHom &h) {
    std::set<Element> im(h.image.begin(), h.image.end());
    return im.size() == h.target->order();
}

inline bool is_bijective(const GroupHom &h) {
    return h.source->order() == h.target->order() && is_surjective(h);
}

/// The map determined by generator images, extended along shortlex words.
/// No relation checking happens here; run verify_hom on the result.
inline GroupHom hom_from_generators(const GroupPtr &source, const GroupPtr &target,
                                    const std::map<std::string, Element> &generator_images) {
    const auto &s = *source;
    const std::size_t n = s.order();
    std::vector<Element> image(n, target->order());
    image[s.identity()] = target->identity();
    std::deque<Element> queue{s.identity()};
    while (!queue.empty()) {
        Element x = queue.front();
        queue.pop_front();
        for (const auto &[gname, g] : s.generators()) {
            auto it = generator_images.find(gname);
            if (it == generator_images.end()) {
                throw Error(ErrorKind::IsoNotFound, "no image given for generator " + gname);
            }
            Element y = s.mul(x, g);
            if (image[y] == target->order()) {
                image[y] = target->mul(image[x], it->second);
                queue.push_back(y);
            }
        }
    }
    if (std::find(image.begin(), image.end(), target->order()) != image.end()) {
        throw Error(ErrorKind::NotSubgroup, s.name() + ": generators do not generate the group");
    }
    return GroupHom{source, target, std::move(image)};
}

inline GroupHom compose(const GroupHom &first, const GroupHom &second) {
    if (!(*first.target == *second.source)) {
        throw Error(ErrorKind::GroupMismatch, "cannot compose " + first.target->name() + " with " + second.source->name());
    }
    std::vector<Element> image(first.image.size());
    for (Element x = 0; x < image.size(); x++) image[x] = second.image[first.image[x]];
    return GroupHom{first.source, second.target, std::move(image)};
}

/// First isomorphism a -> b found by searching generator images in index order,
/// restricted to images of matching element order.
inline std::optional<GroupHom> find_isomorphism(const GroupPtr &a, const GroupPtr &b) {
    if (a->order() != b->order()) return std::nullopt;
    const auto &gens = a->generators();
    std::vector<std::vector<Element>> options(gens.size());
    for (std::size_t k = 0; k < gens.size(); k++) {
        std::size_t ord = a->element_order(gens[k].second);
        for (Element y = 0; y < b->order(); y++) {
            if (b->element_order(y) == ord) options[k].push_back(y);
        }
        if (options[k].empty()) return std::nullopt;
    }
    std::vector<std::size_t> pick(gens.size(), 0);
    while (true) {
        std::map<std::string, Element> images;
        for (std::size_t k = 0; k < gens.size(); k++) images[gens[k].first] = options[k][pick[k]];
        GroupHom h = hom_from_generators(a, b, images);
        if (is_bijective(h) && verify_hom(h)) return h;
        std::size_t k = 0;
        while (k < pick.size() && ++pick[k] == options[k].size()) pick[k++] = 0;
        if (k == pick.size()) return std::nullopt;
    }
}

inline bool is_isomorphic(const GroupPtr &a, const GroupPtr &b) { return find_isomorphism(a, b).has_value(); }

/// Coset group g/n together with the projection. Cosets are labelled by their
/// lowest-index member.
inline std::pair<GroupPtr, GroupHom> quotient(const GroupPtr &g, const std::vector<Element> &n,
                                              std::optional<std::string> name = std::nullopt) {
    const auto &G = *g;
    std::set<Element> sub(n.begin(), n.end());
    if (sub.empty() || !sub.count(G.identity())) {
        throw Error(ErrorKind::NotSubgroup, "subset does not contain the identity");
    }
    for (Element a : sub) {
        for (Element b : sub) {
            if (!sub.count(G.mul(a, b))) throw Error(ErrorKind::NotSubgroup, "subset is not closed");
        }
    }
    for (Element a : sub) {
        for (Element x = 0; x < G.order(); x++) {
            if (!sub.count(G.conjugate(a, x))) {
                throw Error(ErrorKind::NotNormal, "conjugate of " + G.word(a) + " by " + G.word(x) + " escapes subgroup");
            }
        }
    }
    // coset_rep[x] = min(x * n).
    std::vector<Element> coset_rep(G.order());
    for (Element x = 0; x < G.order(); x++) {
        Element best = G.order();
        for (Element a : sub) best = std::min(best, G.mul(x, a));
        coset_rep[x] = best;
    }
    std::vector<Element> reps(coset_rep.begin(), coset_rep.end());
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    auto rep_index = [&](Element x) {
        return static_cast<Element>(std::lower_bound(reps.begin(), reps.end(), coset_rep[x]) - reps.begin());
    };
    const std::size_t m = reps.size();
    std::vector<std::vector<Element>> table(m, std::vector<Element>(m));
    for (Element i = 0; i < m; i++) {
        for (Element j = 0; j < m; j++) table[i][j] = rep_index(G.mul(reps[i], reps[j]));
    }
    std::vector<std::string> words;
    for (Element r : reps) words.push_back(G.word(r));
    GroupTable::Generators gens;
    for (const auto &[gname, e] : G.generators()) {
        Element img = rep_index(e);
        bool dup = img == rep_index(G.identity());
        for (const auto &[_, other] : gens) dup = dup || other == img;
        if (!dup) gens.emplace_back(gname, img);
    }
    std::string qname = name ? *name : G.name() + "/N";
    auto q = std::make_shared<const GroupTable>(std::move(qname), std::move(table), std::move(words), std::move(gens));
    std::vector<Element> image(G.order());
    for (Element x = 0; x < G.order(); x++) image[x] = rep_index(x);
    return {q, GroupHom{g, q, std::move(image)}};
}

/// Text dump: header line, then one row of element words per left factor.
inline std::string format_group(const GroupTable &g) {
    std::ostringstream os;
    os << "group " << g.name() << " order " << g.order() << "\n";
    for (Element a = 0; a < g.order(); a++) {
        for (Element b = 0; b < g.order(); b++) {
            if (b) os << ' ';
            os << g.word(g.mul(a, b));
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace repcheck
