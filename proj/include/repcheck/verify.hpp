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

// Invariant battery shared by `repcheck verify-all` and the test suites.

#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "repcheck/classifier.hpp"
#include "repcheck/quantum.hpp"

namespace repcheck {

/// Raised by a battery check whose invariant does not hold.
class CheckFailed : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

inline void require(bool ok, const std::string &what) {
    if (!ok) throw CheckFailed(what);
}

/// Rational in [-bound, bound] with denominator in [1, bound].
inline Rational random_rational(std::mt19937_64 &rng, int bound = 5) {
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, bound);
    return Rational(num(rng), den(rng));
}

/// a + b i with random rational a, b.
inline CycloNum random_gaussian_rational(std::mt19937_64 &rng, int bound = 5) {
    return CycloNum(random_rational(rng, bound)) + CycloNum(random_rational(rng, bound)) * CycloNum::i();
}

inline ExactMatrix random_matrix(std::mt19937_64 &rng, std::size_t n, int bound = 5) {
    ExactMatrix m(n, n);
    for (std::size_t r = 0; r < n; r++)
        for (std::size_t c = 0; c < n; c++) m(r, c) = random_gaussian_rational(rng, bound);
    return m;
}

/// Non-zero qubit state with Gaussian-rational amplitudes.
inline PureState random_qubit(std::mt19937_64 &rng, int bound = 5) {
    while (true) {
        PureState s(std::vector<CycloNum>{random_gaussian_rational(rng, bound), random_gaussian_rational(rng, bound)});
        if (!s.is_zero()) return s;
    }
}

struct MultiplicitySweep {
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;
    std::set<std::int64_t> m1_values;
    bool doubled_irreducible_gives_4 = false;   // U1 ⊕ U1
    bool distinct_pair_gives_2 = false;         // U1 ⊕ U2
    bool irreducible_gives_1 = false;
};

/// <trivial, chi_conj(chi_U)> against sum n_i^2 for every chi_U = sum n_i chi_i
/// on D4 of degree at most `max_degree`.
inline MultiplicitySweep multiplicity_sweep(int max_degree = 6) {
    const auto &t = char_table(BuiltinGroup::D4);
    const GroupPtr d4 = t.group;
    std::vector<int> deg;
    for (const auto &chi : t.irreducibles) deg.push_back(static_cast<int>(*chi.degree()));
    MultiplicitySweep out;
    std::vector<std::int64_t> n(t.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t k, int used) {
        if (k == n.size()) {
            std::int64_t parts = 0, sq = 0, distinct = 0, maxn = 0;
            for (auto x : n) {
                parts += x;
                sq += x * x;
                distinct += x > 0;
                maxn = std::max(maxn, x);
            }
            if (parts == 0) return;
            out.cases++;
            const CycloNum m1 = inner_product(trivial_character(d4), conj_character(combine(t, n)));
            if (m1 != CycloNum(Rational(sq))) {
                if (!out.failures++) out.first_failure = combine(t, n).str() + " gives m1 = " + m1.str();
                return;
            }
            out.m1_values.insert(sq);
            if (parts == 2 && maxn == 2 && sq == 4) out.doubled_irreducible_gives_4 = true;
            if (parts == 2 && distinct == 2 && sq == 2) out.distinct_pair_gives_2 = true;
            if (parts == 1 && sq == 1) out.irreducible_gives_1 = true;
            return;
        }
        for (int x = 0; used + x * deg[k] <= max_degree; x++) {
            n[k] = x;
            rec(k + 1, used + x * deg[k]);
        }
        n[k] = 0;
    };
    rec(0, 0);
    return out;
}

struct BatteryCheck {
    std::string name;
    std::function<std::string()> run;  // returns a short summary, throws on failure
};

struct BatteryResult {
    std::string name;
    bool passed = false;
    std::string message;
};

namespace detail {

inline std::string check_tables() {
    std::string names;
    for (auto g : {BuiltinGroup::K4, BuiltinGroup::Z4, BuiltinGroup::D4, BuiltinGroup::D8, BuiltinGroup::Pauli1}) {
        const auto &t = char_table(g);
        detail::verify_char_table(t);
        names += (names.empty() ? "" : ", ") + t.group->name();
    }
    return "orthogonality verified for " + names;
}

inline std::string check_multiplicity() {
    const auto s = multiplicity_sweep(6);
    require(s.failures == 0, "m1 != sum n_i^2: " + s.first_failure);
    require(s.doubled_irreducible_gives_4 && s.distinct_pair_gives_2 && s.irreducible_gives_1,
            "m1 in {4, 2, 1} cases not all covered");
    return std::to_string(s.cases) + " characters of degree <= 6";
}

inline std::string check_classification() {
    std::vector<std::string> realizable;
    for (const auto &v : classify_all()) {
        if (v.realizable) realizable.push_back(v.family.label());
    }
    require(realizable == std::vector<std::string>{"K4_1234", "D4_125"}, "realizable set differs from {K4_1234, D4_125}");
    return "realizable: K4_1234, D4_125";
}

inline std::string check_conj_steps() {
    const auto &d4 = char_table(BuiltinGroup::D4);
    const auto &d8 = char_table(BuiltinGroup::D8);
    const ClassFunction c5 = conj_character(d4["χ5"]);
    require(c5 == combine(d4, {1, 1, 1, 1, 0}), "conj(χ5) != χ1+χ2+χ3+χ4");
    for (const char *label : {"χE1", "χE3"}) {
        const ClassFunction c = push_to_quotient(conj_character(d8[label]));
        require(decompose(c, d4) == std::vector<std::int64_t>{1, 1, 0, 0, 1},
                std::string("conj(") + label + ") on D4 does not decompose as χ1+χ2+χ5");
    }
    return "conj(χ5) = χ1+χ2+χ3+χ4; conj(χE1) = conj(χE3) = χ1+χ2+χ5";
}

inline std::string check_tsirelson() {
    const CycloNum v = chsh_value(phi_plus());
    require(v == CycloNum(2) * CycloNum::sqrt2(), "CHSH(Φ+) = " + v.str());
    return "CHSH(Φ+) = " + v.str();
}

inline std::string check_teleport() {
    std::mt19937_64 rng(20260418);
    for (int n = 0; n < 100; n++) {
        const PureState in = random_qubit(rng);
        const auto t = teleport(in);
        for (const auto &o : t.outcomes) {
            require(o.probability == Rational(1, 4), "teleport outcome probability " + to_string(o.probability));
            require(o.restored, "teleport output not proportional to input " + in.str());
        }
    }
    return "100 states, every outcome 1/4 and restored";
}

inline std::string check_swap() {
    const auto p = povm_construction();
    const auto trace = entanglement_swap(p);
    require(trace.total_probability() == 1, "swap probabilities do not sum to 1");
    for (const auto &o : trace.outcomes) {
        require(o.probability == Rational(1, 8), o.outcome + " has probability " + to_string(o.probability));
        require(o.restored, o.outcome + " not restored to Φ+");
        require(o.chsh && *o.chsh == CycloNum(2) * CycloNum::sqrt2(), o.outcome + " CHSH differs from 2√2");
    }
    const CycloNum tsirelson = CycloNum(2) * CycloNum::sqrt2();
    for (const auto &it : iterate_swap_exhaustive(p.instrument, p.corrections, 2)) {
        for (const auto &c : it.chsh) require(c == tsirelson, "depth-2 path loses CHSH");
    }
    for (std::uint64_t seed = 0; seed < 20; seed++) {
        for (const auto &c : iterate_swap(p.instrument, p.corrections, 5, seed).chsh) {
            require(c == tsirelson, "seeded depth-5 path loses CHSH");
        }
    }
    return "8 outcomes at 1/8, CHSH 2√2; 64 depth-2 paths and 20 depth-5 paths stable";
}

inline std::string check_cocycle() {
    return "σxSσxS = " + verify_cocycle().str() + "·𝟙";
}

inline std::string check_groups() {
    const auto rep = correction_group_check();
    require(rep.order_of_s == 4 && rep.order_of_sigma_x == 2 && rep.reflection_relation,
            "projective relations of [S], [σx] fail");
    require(rep.pauli_matches_builtin, "Pauli matrix group differs from builtin Pauli1");
    return "corrections mod phases ≅ D4 (r -> [S], s -> [σx]); Paulis mod phases ≅ K4";
}

inline std::string check_pvm_counting() {
    const auto c = pvm_counting_check();
    require(!c.sufficient, "rank-one PVM unexpectedly has enough outcomes");
    return c.note;
}

inline std::string check_matrix_characters() {
    const auto &d4 = char_table(BuiltinGroup::D4);
    const auto &d8 = char_table(BuiltinGroup::D8);
    const auto &pauli = char_table(BuiltinGroup::Pauli1);
    const auto k4 = conj_rep_character_from_matrices(builtin_group(BuiltinGroup::K4), pauli_assignment_k4());
    require(k4 == push_forward(conj_character(pauli["χσ"]), pauli_to_k4()), "Pauli assignment disagrees with χσ");
    require(pullback(k4, d4_to_k4()) == conj_character(d4["χ5"]), "Pauli assignment disagrees with conj(χ5)");
    const auto on_d4 = conj_rep_character_from_matrices(builtin_group(BuiltinGroup::D4), s_sigma_x_assignment_d4());
    require(on_d4 == push_to_quotient(conj_character(d8["χE3"])), "{S, σx} assignment disagrees with conj(χE3)");
    const auto on_d8 = conj_rep_character_from_matrices(builtin_group(BuiltinGroup::D8), s_sigma_x_lift_d8());
    require(on_d8 == conj_character(d8["χE1"]), "D8 lift disagrees with |χE1|^2");
    return "K4 " + k4.str() + ", D4 " + on_d4.str();
}

inline std::string check_negative_control() {
    const auto p = povm_construction();
    const auto bad = entanglement_swap(p.instrument, shifted_correction_table());
    bool detected = false;
    for (const auto &o : bad.outcomes) {
        detected = detected || !o.restored || !o.chsh || *o.chsh != CycloNum(2) * CycloNum::sqrt2();
    }
    require(detected, "shifted correction table went undetected");
    return "shifted correction table detected";
}

}  // namespace detail

inline std::vector<BatteryCheck> verification_battery() {
    return {
        {"character tables", detail::check_tables},
        {"conjugation multiplicity sweep", detail::check_multiplicity},
        {"classification", detail::check_classification},
        {"conjugation characters", detail::check_conj_steps},
        {"tsirelson value", detail::check_tsirelson},
        {"teleportation", detail::check_teleport},
        {"entanglement swapping", detail::check_swap},
        {"cocycle", detail::check_cocycle},
        {"correction groups", detail::check_groups},
        {"pvm counting", detail::check_pvm_counting},
        {"matrix-level characters", detail::check_matrix_characters},
        {"negative control", detail::check_negative_control},
    };
}

inline BatteryResult run_battery_check(const BatteryCheck &c) {
    try {
        return {c.name, true, c.run()};
    } catch (const std::exception &e) {
        return {c.name, false, e.what()};
    }
}

inline std::vector<BatteryResult> run_battery() {
    std::vector<BatteryResult> out;
    for (const auto &c : verification_battery()) out.push_back(run_battery_check(c));
    return out;
}

}  // namespace repcheck
