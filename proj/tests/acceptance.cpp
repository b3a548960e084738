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


// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <cmath>
#include <functional>
#include <map>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "repcheck/classifier.hpp"
#include "repcheck/quantum.hpp"
#include "repcheck/verify.hpp"

using namespace repcheck;

namespace {

const CycloNum kTsirelson = CycloNum(2) * CycloNum::sqrt2();

std::set<std::string> kinds(const Verdict &v) {
    std::set<std::string> out;
    for (const auto &o : v.obstructions) out.insert(obstruction_kind_name(o.kind));
    return out;
}

std::vector<CycloNum> ints(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

std::string classification() {
    std::vector<std::string> realizable, obstructed;
    std::map<std::string, std::set<std::string>> fired;
    for (const auto &v : classify_all()) {
        (v.realizable ? realizable : obstructed).push_back(v.family.label());
        fired[v.family.label()] = kinds(v);
    }
    require(realizable == std::vector<std::string>{"K4_1234", "D4_125"}, "realizable set");
    require(obstructed == std::vector<std::string>{"Z4_1234", "D4_135", "D4_145", "D4_12345", "D4_123452"},
            "obstructed set");
    for (const char *f : {"D4_12345", "D4_123452"}) require(fired[f].count("DimensionBound"), std::string(f) + " DimensionBound");
    require(fired["Z4_1234"].count("AbelianFixedProjectors"), "Z4_1234 AbelianFixedProjectors");
    for (const char *f : {"D4_135", "D4_145"}) {
        require(fired[f].count("ParityOfChi5") && fired[f].count("ReflectionVanishing"),
                std::string(f) + " ParityOfChi5 + ReflectionVanishing");
    }
    return "realizable {K4_1234, D4_125}; five obstructed with the expected kinds";
}

std::string trivial_class_steps() {
    const auto &d4 = char_table(BuiltinGroup::D4);
    const ClassFunction c = conj_character(d4["χ5"]);
    require(c.values() == ints({4, 0, 4, 0, 0}), "conj(χ5) = " + c.str());
    require(decompose(c, d4) == std::vector<std::int64_t>{1, 1, 1, 1, 0}, "decomposition of conj(χ5)");
    return "conj(χ5) = (4,0,4,0,0) -> (1,1,1,1,0)";
}

std::string nontrivial_class_steps() {
    const auto &d4 = char_table(BuiltinGroup::D4);
    const auto &d8 = char_table(BuiltinGroup::D8);
    for (const char *l : {"χE1", "χE3"}) {
        const ClassFunction c = push_to_quotient(conj_character(d8[l]));
        require(c.values() == ints({4, 2, 0, 0, 0}), std::string(l) + ": " + c.str());
        require(decompose(c, d4) == std::vector<std::int64_t>{1, 1, 0, 0, 1}, std::string(l) + " decomposition");
    }
    return "conj(χE1) = conj(χE3) = (4,2,0,0,0) -> (1,1,0,0,1)";
}

std::string multiplicity() {
    const auto s = multiplicity_sweep(6);
    require(s.failures == 0, s.first_failure);
    require(s.doubled_irreducible_gives_4 && s.distinct_pair_gives_2 && s.irreducible_gives_1, "m1 cases {4,2,1}");
    require(s.m1_values.count(4) && s.m1_values.count(2) && s.m1_values.count(1), "m1 values");
    return std::to_string(s.cases) + " characters of degree <= 6, m1 = Σn² in every case";
}

std::string tsirelson() {
    const CycloNum v = chsh_value(phi_plus(), standard_chsh_settings());
    require(v.coeffs() == CycloNum::Coeffs{Rational(0), Rational(2), Rational(0), Rational(-2)},
            "coefficients of " + v.str());
    require(std::abs(v.to_complex().real() - 2.8284271247461903) <= 1e-12, "float embedding");
    return "CHSH(Φ+) = 2√2 = (0,2,0,-2)";
}

std::string teleportation() {
    std::mt19937_64 rng(1);
    for (int n = 0; n < 100; n++) {
        const PureState in = random_qubit(rng);
        for (const auto &o : teleport(in).outcomes) {
            require(o.probability == Rational(1, 4), "probability " + to_string(o.probability));
            require(in.parallel_to(o.corrected_state), "output not proportional to " + in.str());
        }
    }
    return "100 random rational states, all outcomes 1/4 and restored";
}

std::string swapping() {
    const auto p = povm_construction();
    ExactMatrix sum(4, 4);
    for (const auto &e : p.effects) sum += e.matrix;
    require(p.effects.size() == 8 && sum == ExactMatrix::identity(4), "effects sum");
    require(p.instrument.is_complete(), "Kraus completeness");
    const auto t = entanglement_swap(p);
    for (const auto &o : t.outcomes) {
        require(o.probability == Rational(1, 8), o.outcome + " probability");
        require(phi_plus().parallel_to(o.corrected_state), o.outcome + " not ∝ Φ+");
        require(o.chsh && *o.chsh == kTsirelson, o.outcome + " CHSH");
    }
    for (const auto &it : iterate_swap_exhaustive(p.instrument, p.corrections, 2)) {
        for (const auto &c : it.chsh) require(c == kTsirelson, "depth-2 path");
    }
    for (std::uint64_t seed = 0; seed < 20; seed++) {
        const auto it = iterate_swap(p.instrument, p.corrections, 5, seed);
        require(it.chsh.size() == 5, "depth-5 length");
        for (const auto &c : it.chsh) require(c == kTsirelson, "depth-5 path");
    }
    return "8 outcomes at 1/8 with CHSH 2√2; 64 depth-2 and 20 seeded depth-5 paths stable";
}

std::string cocycle_and_groups() {
    require(verify_cocycle() == CycloNum::i(), "cocycle phase");
    const auto rep = correction_group_check();
    require(rep.projective_group->order() == 8 && is_bijective(rep.d4_iso) && verify_hom(rep.d4_iso), "D4 iso");
    require(rep.pauli_projective_group->order() == 4 && is_bijective(rep.k4_iso), "K4 iso");
    const auto &d4 = char_table(BuiltinGroup::D4);
    const auto &d8 = char_table(BuiltinGroup::D8);
    const auto k4m = conj_rep_character_from_matrices(builtin_group(BuiltinGroup::K4), pauli_assignment_k4());
    require(pullback(k4m, d4_to_k4()) == conj_character(d4["χ5"]), "teleportation construction character");
    const auto d4m = conj_rep_character_from_matrices(builtin_group(BuiltinGroup::D4), s_sigma_x_assignment_d4());
    require(d4m == push_to_quotient(conj_character(d8["χE1"])), "swapping construction character");
    return "σxSσxS = i𝟙; corrections/phases ≅ D4, Paulis/phases ≅ K4; matrix traces match χ_conj";
}

std::string properties() {
    for (auto g : {BuiltinGroup::K4, BuiltinGroup::Z4, BuiltinGroup::D4, BuiltinGroup::D8, BuiltinGroup::Pauli1}) {
        detail::verify_char_table(char_table(g));
    }
    std::mt19937_64 rng(2);
    std::vector<ExactMatrix> us;
    for (int k = 0; k < 4; k++) {
        us.push_back(pauli(k));
        us.push_back(phase_s() * pauli(k));
    }
    for (const auto &u : us) {
        for (int n = 0; n < 5; n++) {
            const ExactMatrix x = random_matrix(rng, 2), y = random_matrix(rng, 2);
            require(hs_inner(u * x * u.adjoint(), u * y * u.adjoint()) == hs_inner(x, y), "HS unitarity");
        }
    }
    for (int n = 0; n < 20; n++) {
        const ExactMatrix m = random_matrix(rng, 2);
        require(phi_plus().inner(kron(m, ExactMatrix::identity(2)) * phi_plus()) ==
                    CycloNum(Rational(1, 2)) * m.trace(),
                "partial-trace identity");
    }
    const auto p = povm_construction();
    bool detected = false;
    for (const auto &o : entanglement_swap(p.instrument, shifted_correction_table()).outcomes) {
        detected = detected || !o.chsh || *o.chsh != kTsirelson;
    }
    require(detected, "corrupted correction table not detected");
    return "Schur orthogonality x5, HS unitarity, partial trace, negative control";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
        {"1 classification", classification},
        {"2 trivial-class conjugation character", trivial_class_steps},
        {"3 non-trivial-class conjugation character", nontrivial_class_steps},
        {"4 multiplicity sweep", multiplicity},
        {"5 Tsirelson value", tsirelson},
        {"6 teleportation", teleportation},
        {"7 entanglement swapping", swapping},
        {"8 cocycle and group structure", cocycle_and_groups},
        {"9 property suite", properties},
    };
    int failed = 0;
    for (const auto &[name, fn] : criteria) {
        try {
            const std::string msg = fn();
            std::cout << "PASS  " << name << ": " << msg << "\n";
        } catch (const std::exception &e) {
            std::cout << "FAIL  " << name << ": " << e.what() << "\n";
            failed++;
        }
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
