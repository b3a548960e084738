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

// Exact qubit protocols: Bell-basis teleportation with Pauli corrections and
// entanglement swapping through an eight-outcome POVM with Lüders updates.
// Every amplitude lives in Q(zeta8), so Tsirelson's 2*sqrt(2) is an equality.

#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "repcheck/character.hpp"
#include "repcheck/io.hpp"
#include "repcheck/matrix.hpp"

namespace repcheck {

inline ExactMatrix pauli(int k) {
    const CycloNum i = CycloNum::i();
    switch (k) {
        case 0: return {{1, 0}, {0, 1}};
        case 1: return {{0, 1}, {1, 0}};
        case 2: return {{0, -i}, {i, 0}};
        case 3: return {{1, 0}, {0, -1}};
        default: throw Error(ErrorKind::DimensionMismatch, "Pauli index must be 0..3");
    }
}

/// Phase gate diag(1, i).
inline ExactMatrix phase_s() { return {{1, 0}, {0, CycloNum::i()}}; }

/// (|00> + |11>) / sqrt(2), normalized exactly.
inline PureState phi_plus() {
    const CycloNum h = CycloNum::inv_sqrt2();
    return PureState(std::vector<CycloNum>{h, 0, 0, h});
}

/// |Phi+_k> = (sigma_k ⊗ 1)|Phi+>, checked to be orthonormal.
inline std::array<PureState, 4> bell_basis() {
    std::array<PureState, 4> out;
    for (int k = 0; k < 4; k++) out[k] = kron(pauli(k), ExactMatrix::identity(2)) * phi_plus();
    for (int j = 0; j < 4; j++)
        for (int k = 0; k < 4; k++) {
            if (out[j].inner(out[k]) != CycloNum(j == k ? 1 : 0)) {
                throw std::logic_error("Bell basis is not orthonormal");
            }
        }
    return out;
}

struct ChshSettings {
    ExactMatrix a0, a1, c0, c1;
};

/// A0 = σz, A1 = σx, C0 = (σz+σx)/√2, C1 = (σz-σx)/√2.
inline ChshSettings standard_chsh_settings() {
    const CycloNum h = CycloNum::inv_sqrt2();
    return {pauli(3), pauli(1), h * (pauli(3) + pauli(1)), h * (pauli(3) - pauli(1))};
}

inline ExactMatrix chsh_operator(const ChshSettings &s) {
    for (const ExactMatrix *o : {&s.a0, &s.a1, &s.c0, &s.c1}) {
        if (o->rows() != 2 || !o->is_hermitian() || *o * *o != ExactMatrix::identity(2)) {
            throw Error(ErrorKind::NotDichotomic, "observable is not a Hermitian involution:\n" + o->str());
        }
    }
    return kron(s.a0, s.c0 + s.c1) + kron(s.a1, s.c0 - s.c1);
}

/// <psi|B|psi> / <psi|psi>.
inline CycloNum chsh_value(const PureState &state, const ChshSettings &settings) {
    if (state.dim() != 4) throw Error(ErrorKind::DimensionMismatch, "CHSH needs a two-qubit state");
    if (state.is_zero()) throw Error(ErrorKind::ZeroState, "CHSH of the zero vector");
    return state.inner(chsh_operator(settings) * state) / CycloNum(state.norm2());
}

inline CycloNum chsh_value(const PureState &state) { return chsh_value(state, standard_chsh_settings()); }

struct OutcomeRecord {
    std::string outcome;
    Rational probability;
    PureState conditional_state;
    std::string correction_label;
    PureState corrected_state;
    bool restored = false;                 // corrected state is parallel to the reference
    std::optional<CycloNum> phase;         // normalized corrected state = phase * reference
    std::optional<CycloNum> chsh;
};

struct ProtocolTrace {
    std::vector<OutcomeRecord> outcomes;

    Rational total_probability() const {
        Rational p = 0;
        for (const auto &o : outcomes) p += o.probability;
        return p;
    }
};

/// Teleports the last qubit of `input` (a qubit, or a qubit with a reference
/// qubit in front) through |Phi+> using a Bell measurement and correction σk.
inline ProtocolTrace teleport(const PureState &input) {
    if (input.dim() != 2 && input.dim() != 4) {
        throw Error(ErrorKind::DimensionMismatch, "teleport input must have dimension 2 or 4");
    }
    if (input.is_zero()) throw Error(ErrorKind::ZeroState, "cannot teleport the zero vector");
    const std::size_t ref = input.dim() / 2;
    const ExactMatrix id_ref = ExactMatrix::identity(ref);
    const PureState joint = kron(input, phi_plus());
    const Rational total = joint.norm2();
    const auto bell = bell_basis();
    ProtocolTrace trace;
    for (int k = 0; k < 4; k++) {
        // <Phi+_k| on the input qubit and Alice's half.
        const ExactMatrix project = kron(id_ref, kron(bell[k].column().adjoint(), ExactMatrix::identity(2)));
        OutcomeRecord rec;
        rec.outcome = "Φ" + std::to_string(k);
        rec.conditional_state = project * joint;
        rec.probability = rec.conditional_state.norm2() / total;
        rec.correction_label = "σ" + std::to_string(k);
        rec.corrected_state = kron(id_ref, pauli(k)) * rec.conditional_state;
        rec.restored = input.parallel_to(rec.corrected_state);
        if (input.dim() == 4 && !rec.corrected_state.is_zero()) rec.chsh = chsh_value(rec.corrected_state);
        trace.outcomes.push_back(std::move(rec));
    }
    return trace;
}

struct Effect {
    std::string label;
    ExactMatrix matrix;
};

struct Instrument {
    std::vector<std::string> labels;
    std::vector<ExactMatrix> kraus;

    bool is_complete() const {
        if (kraus.empty()) return false;
        ExactMatrix sum(kraus.front().cols(), kraus.front().cols());
        for (const auto &k : kraus) sum += k.adjoint() * k;
        return sum == ExactMatrix::identity(sum.rows());
    }
};

struct CorrectionTable {
    std::vector<std::string> labels;
    std::vector<ExactMatrix> unitaries;
};

struct PovmConstruction {
    std::vector<Effect> effects;
    Instrument instrument;
    CorrectionTable corrections;
};

/// Eight effects ½|b_k><b_k| and ½|a_k><a_k| with |b_k> = (σk⊗1)|Phi+>,
/// |a_k> = (Sσk⊗1)|Phi+>, the rank-one Lüders Kraus operators, and the
/// corrections σk and Sσk.
inline PovmConstruction povm_construction() {
    const ExactMatrix id2 = ExactMatrix::identity(2);
    const ExactMatrix id4 = ExactMatrix::identity(4);
    const CycloNum half(Rational(1, 2));
    const CycloNum h = CycloNum::inv_sqrt2();
    PovmConstruction out;
    ExactMatrix resolution_b(4, 4), resolution_a(4, 4), effect_sum(4, 4);
    for (const char family : {'b', 'a'}) {
        for (int k = 0; k < 4; k++) {
            const ExactMatrix local = family == 'b' ? pauli(k) : phase_s() * pauli(k);
            const ExactMatrix v = (kron(local, id2) * phi_plus()).column();
            const ExactMatrix proj = v * v.adjoint();
            (family == 'b' ? resolution_b : resolution_a) += proj;
            const std::string label = std::string(1, family) + std::to_string(k);
            out.effects.push_back({label, half * proj});
            effect_sum += half * proj;
            out.instrument.labels.push_back(label);
            out.instrument.kraus.push_back(h * proj);
            out.corrections.labels.push_back((family == 'b' ? "σ" : "Sσ") + std::to_string(k));
            out.corrections.unitaries.push_back(local);
        }
    }
    if (resolution_b != id4 || resolution_a != id4 || effect_sum != id4) {
        throw std::logic_error("POVM effects do not resolve the identity");
    }
    if (!out.instrument.is_complete()) throw std::logic_error("Kraus operators are not complete");
    return out;
}

/// V_(b,k) -> σ_{k+1}, V_(a,k) -> Sσ_{k+1}: a deliberately wrong table.
inline CorrectionTable shifted_correction_table() {
    CorrectionTable t;
    for (const char family : {'b', 'a'}) {
        for (int k = 0; k < 4; k++) {
            const int j = (k + 1) % 4;
            t.labels.push_back((family == 'b' ? "σ" : "Sσ") + std::to_string(j));
            t.unitaries.push_back(family == 'b' ? pauli(j) : phase_s() * pauli(j));
        }
    }
    return t;
}

namespace detail {

// K = u w^dagger for a rank-one Kraus operator.
inline std::pair<ExactMatrix, ExactMatrix> rank_one_factors(const ExactMatrix &k) {
    for (std::size_t c = 0; c < k.cols(); c++) {
        for (std::size_t r = 0; r < k.rows(); r++) {
            if (k(r, c).is_zero()) continue;
            ExactMatrix u(k.rows(), 1);
            for (std::size_t rr = 0; rr < k.rows(); rr++) u(rr, 0) = k(rr, c);
            ExactMatrix wdag(1, k.cols());
            for (std::size_t cc = 0; cc < k.cols(); cc++) wdag(0, cc) = k(r, cc) / u(r, 0);
            if (u * wdag != k) break;
            return {u, wdag};
        }
    }
    throw Error(ErrorKind::UnsupportedInstrument, "Kraus operator is not rank one");
}

// Normalizes exactly when the norm lies in the field; otherwise returns the input.
inline PureState normalized_if_possible(const PureState &s) {
    auto n = sqrt_in_field(s.norm2());
    if (!n || n->is_zero()) return s;
    return n->inverse() * s;
}

struct SwapBranch {
    Rational probability;  // conditional on the incoming state
    PureState conditional;
    PureState corrected;
};

// Left pair (A, B1) in `left`, fresh |Phi+> on (B2, C); Bob measures B1 B2.
inline SwapBranch swap_branch(const PureState &left, const ExactMatrix &kraus, const ExactMatrix &correction) {
    const ExactMatrix id2 = ExactMatrix::identity(2);
    const PureState joint = kron(left, phi_plus());
    const auto [u, wdag] = rank_one_factors(kraus);
    SwapBranch b;
    b.conditional = kron(id2, kron(wdag, id2)) * joint;
    b.probability = (u.adjoint() * u)(0, 0).rational_value() * b.conditional.norm2() / joint.norm2();
    b.corrected = kron(id2, correction) * b.conditional;
    return b;
}

inline void require_instrument(const Instrument &inst, const CorrectionTable &corrections) {
    if (!inst.is_complete()) throw Error(ErrorKind::IncompleteInstrument, "sum of K^dagger K is not the identity");
    if (corrections.unitaries.size() != inst.kraus.size()) {
        throw Error(ErrorKind::DimensionMismatch, "one correction per outcome required");
    }
}

}  // namespace detail

/// Bob measures the middle pair of |Phi+>_{A1B1} ⊗ |Phi+>_{B2C1}; Charlie corrects.
inline ProtocolTrace entanglement_swap(const Instrument &inst, const CorrectionTable &corrections) {
    detail::require_instrument(inst, corrections);
    const PureState reference = phi_plus();
    ProtocolTrace trace;
    for (std::size_t k = 0; k < inst.kraus.size(); k++) {
        auto b = detail::swap_branch(phi_plus(), inst.kraus[k], corrections.unitaries[k]);
        OutcomeRecord rec;
        rec.outcome = inst.labels[k];
        rec.probability = b.probability;
        rec.conditional_state = b.conditional;
        rec.correction_label = corrections.labels[k];
        rec.corrected_state = b.corrected;
        if (!b.corrected.is_zero()) {
            auto c = reference.ratio_to(detail::normalized_if_possible(b.corrected));
            rec.restored = c.has_value();
            rec.phase = c;
            rec.chsh = chsh_value(b.corrected);
        }
        trace.outcomes.push_back(std::move(rec));
    }
    return trace;
}

inline ProtocolTrace entanglement_swap(const PovmConstruction &p) {
    return entanglement_swap(p.instrument, p.corrections);
}

struct SwapIteration {
    std::vector<std::size_t> path;
    std::vector<Rational> probabilities;  // conditional, per round
    std::vector<CycloNum> chsh;           // after each round's correction
    Rational path_probability() const {
        Rational p = 1;
        for (const auto &q : probabilities) p *= q;
        return p;
    }
};

/// Chains swaps along a fixed outcome path: the corrected (A, C) pair becomes
/// the left leg of the next round with a fresh |Phi+> on the right.
inline SwapIteration iterate_swap_path(const Instrument &inst, const CorrectionTable &corrections,
                                       std::span<const std::size_t> path) {
    detail::require_instrument(inst, corrections);
    SwapIteration it;
    PureState state = phi_plus();
    for (std::size_t k : path) {
        if (k >= inst.kraus.size()) throw Error(ErrorKind::DimensionMismatch, "outcome index out of range");
        auto b = detail::swap_branch(state, inst.kraus[k], corrections.unitaries[k]);
        if (b.corrected.is_zero()) throw Error(ErrorKind::ZeroState, "outcome path has probability zero");
        it.path.push_back(k);
        it.probabilities.push_back(b.probability);
        it.chsh.push_back(chsh_value(b.corrected));
        state = detail::normalized_if_possible(b.corrected);
    }
    return it;
}

/// Every outcome path of the given depth, in lexicographic order.
inline std::vector<SwapIteration> iterate_swap_exhaustive(const Instrument &inst, const CorrectionTable &corrections,
                                                          std::size_t depth) {
    std::vector<SwapIteration> out;
    const std::size_t n = inst.kraus.size();
    std::vector<std::size_t> path(depth, 0);
    while (true) {
        out.push_back(iterate_swap_path(inst, corrections, path));
        std::size_t k = depth;
        while (k > 0 && ++path[k - 1] == n) path[--k] = 0;
        if (k == 0) break;
    }
    return out;
}

/// One outcome path of `rounds` swaps, each outcome drawn with its exact
/// probability from a seeded generator.
inline SwapIteration iterate_swap(const Instrument &inst, const CorrectionTable &corrections, std::size_t rounds,
                                  std::uint64_t seed) {
    if (rounds == 0) throw Error(ErrorKind::DimensionMismatch, "rounds must be positive");
    detail::require_instrument(inst, corrections);
    std::mt19937_64 rng(seed);
    SwapIteration it;
    PureState state = phi_plus();
    for (std::size_t r = 0; r < rounds; r++) {
        std::vector<detail::SwapBranch> branches;
        for (std::size_t k = 0; k < inst.kraus.size(); k++) {
            branches.push_back(detail::swap_branch(state, inst.kraus[k], corrections.unitaries[k]));
        }
        // 53 random bits -> uniform in [0, 1), compared against exact cumulative sums.
        const Rational u(BigInt(rng() >> 11), BigInt(1) << 53);
        Rational acc = 0;
        std::size_t pick = branches.size() - 1;
        for (std::size_t k = 0; k < branches.size(); k++) {
            acc += branches[k].probability;
            if (u < acc) {
                pick = k;
                break;
            }
        }
        it.path.push_back(pick);
        it.probabilities.push_back(branches[pick].probability);
        it.chsh.push_back(chsh_value(branches[pick].corrected));
        state = detail::normalized_if_possible(branches[pick].corrected);
    }
    return it;
}

inline SwapIteration iterate_swap(std::size_t rounds, std::uint64_t seed = 0) {
    const auto p = povm_construction();
    return iterate_swap(p.instrument, p.corrections, rounds, seed);
}

/// σx S σx S = i𝟙; returns the phase i.
inline CycloNum verify_cocycle() {
    const ExactMatrix s = phase_s();
    const ExactMatrix x = pauli(1);
    const ExactMatrix id = ExactMatrix::identity(2);
    const CycloNum i = CycloNum::i();
    auto require = [](bool ok, const std::string &what) {
        if (!ok) throw Error(ErrorKind::CocycleMismatch, what);
    };
    require(s * s == pauli(3), "S^2 != σz");
    require(s * s * s * s == id, "S^4 != 1");
    require(x * s * x == i * (s * s * s), "σx S σx != i S^3");
    const ExactMatrix loop = x * s * x * s;
    auto phase = loop.as_scalar();
    require(phase.has_value() && *phase == i, "σx S σx S != i·1");
    return *phase;
}

struct CorrectionGroupReport {
    GroupPtr matrix_group;       // generated by the eight corrections and i𝟙
    GroupPtr projective_group;   // matrix_group modulo scalars
    GroupHom d4_iso;             // D4 -> projective_group, r -> [S], s -> [σx]
    std::size_t order_of_s = 0;
    std::size_t order_of_sigma_x = 0;
    bool reflection_relation = false;  // [σx][S][σx]^-1 == [S]^-1
    GroupPtr pauli_matrix_group;
    GroupPtr pauli_projective_group;
    GroupHom k4_iso;             // K4 -> Pauli mod phases
    bool pauli_matches_builtin = false;
};

namespace detail {

inline std::vector<Element> scalar_elements(const GroupTable &g, const std::vector<ExactMatrix> &mats) {
    std::vector<Element> out;
    for (Element e = 0; e < g.order(); e++) {
        if (mats[e].as_scalar()) out.push_back(e);
    }
    return out;
}

inline Element index_of_matrix(const std::vector<ExactMatrix> &mats, const ExactMatrix &m) {
    for (Element e = 0; e < mats.size(); e++) {
        if (mats[e] == m) return e;
    }
    throw Error(ErrorKind::IsoNotFound, "matrix not in generated group");
}

}  // namespace detail

/// The correction sets modulo phases: {σk, Sσk} gives D4, {σk} gives K4.
inline CorrectionGroupReport correction_group_check() {
    auto mul = [](const ExactMatrix &a, const ExactMatrix &b) { return a * b; };
    const ExactMatrix id = ExactMatrix::identity(2);
    const ExactMatrix phase = CycloNum::i() * id;
    CorrectionGroupReport rep;

    std::vector<std::pair<std::string, ExactMatrix>> gens;
    const auto povm = povm_construction();
    for (std::size_t k = 0; k < povm.corrections.unitaries.size(); k++) {
        gens.emplace_back(povm.corrections.labels[k], povm.corrections.unitaries[k]);
    }
    gens.emplace_back("i𝟙", phase);
    auto [mg, mats] = generate_group("⟨σk,Sσk⟩", id, gens, mul);
    rep.matrix_group = std::make_shared<const GroupTable>(std::move(mg));
    auto [pg, proj] = quotient(rep.matrix_group, detail::scalar_elements(*rep.matrix_group, mats), "⟨σk,Sσk⟩/phases");
    rep.projective_group = pg;
    if (pg->order() != 8) throw Error(ErrorKind::IsoNotFound, "correction group mod phases has order " +
                                                                  std::to_string(pg->order()));
    const Element s_class = proj(detail::index_of_matrix(mats, phase_s()));
    const Element x_class = proj(detail::index_of_matrix(mats, pauli(1)));
    rep.order_of_s = pg->element_order(s_class);
    rep.order_of_sigma_x = pg->element_order(x_class);
    rep.reflection_relation = pg->conjugate(s_class, x_class) == pg->inverse(s_class);
    GroupPtr d4 = builtin_group(BuiltinGroup::D4);
    rep.d4_iso = hom_from_generators(d4, pg, {{"r", s_class}, {"s", x_class}});
    if (!verify_hom(rep.d4_iso) || !is_bijective(rep.d4_iso)) {
        throw Error(ErrorKind::IsoNotFound, "r -> [S], s -> [σx] does not define an isomorphism from D4");
    }

    std::vector<std::pair<std::string, ExactMatrix>> pgens{
        {"i𝟙", phase}, {"σx", pauli(1)}, {"σy", pauli(2)}, {"σz", pauli(3)}};
    auto [pm, pmats] = generate_group("⟨i𝟙,σx,σy,σz⟩", id, pgens, mul);
    rep.pauli_matrix_group = std::make_shared<const GroupTable>(std::move(pm));
    auto [pq, pproj] =
        quotient(rep.pauli_matrix_group, detail::scalar_elements(*rep.pauli_matrix_group, pmats), "Pauli/phases");
    rep.pauli_projective_group = pq;
    GroupPtr k4 = builtin_group(BuiltinGroup::K4);
    rep.k4_iso = hom_from_generators(
        k4, pq, {{"a", pproj(detail::index_of_matrix(pmats, pauli(1)))}, {"b", pproj(detail::index_of_matrix(pmats, pauli(2)))}});
    if (!verify_hom(rep.k4_iso) || !is_bijective(rep.k4_iso)) {
        throw Error(ErrorKind::IsoNotFound, "a -> [σx], b -> [σy] does not define an isomorphism from K4");
    }
    rep.pauli_matches_builtin = is_isomorphic(builtin_group(BuiltinGroup::Pauli1), rep.pauli_matrix_group);
    return rep;
}

/// Why a rank-one PVM on C^2 ⊗ C^2 cannot carry the D4 corrections.
struct PvmCounting {
    std::size_t hilbert_dimension = 0;
    std::size_t pvm_outcomes = 0;
    std::size_t required_outcomes = 0;
    bool sufficient = false;
    std::string note;
};

inline PvmCounting pvm_counting_check() {
    PvmCounting c;
    // A rank-one PVM resolving the identity has tr(1) = sum of tr(P_k) = number of outcomes.
    const ExactMatrix id = kron(ExactMatrix::identity(2), ExactMatrix::identity(2));
    c.hilbert_dimension = id.rows();
    ExactMatrix bell_sum(4, 4);
    std::size_t count = 0;
    for (const auto &b : bell_basis()) {
        ExactMatrix p = b.column() * b.column().adjoint();
        if (p.trace() != CycloNum(1)) throw std::logic_error("Bell projector is not rank one");
        bell_sum += p;
        count++;
    }
    if (bell_sum != id) throw std::logic_error("Bell PVM does not resolve the identity");
    const auto outcomes = boost::multiprecision::numerator(id.trace().rational_value()).convert_to<std::size_t>();
    if (outcomes != count) throw std::logic_error("rank-one PVM outcome count mismatch");
    c.pvm_outcomes = outcomes;
    c.required_outcomes = builtin_group(BuiltinGroup::D4)->order();
    c.sufficient = c.pvm_outcomes >= c.required_outcomes;
    c.note = "rank-one PVM on C^2⊗C^2 has " + std::to_string(c.pvm_outcomes) + " outcomes < |D4| = " +
             std::to_string(c.required_outcomes) +
             "; use an 8-outcome POVM (implemented) or a Naimark dilation to a rank-one PVM (not implemented)";
    return c;
}

/// Trace of X -> U_g X U_g^dagger on the matrix-unit basis E_ij, per class.
/// `unitaries[g]` is the operator assigned to element g; the assignment must
/// satisfy the group law up to scalars.
inline ClassFunction conj_rep_character_from_matrices(const GroupPtr &group, const std::vector<ExactMatrix> &unitaries) {
    const auto &g = *group;
    if (unitaries.size() != g.order()) throw Error(ErrorKind::DimensionMismatch, "one operator per element required");
    const std::size_t d = unitaries.front().rows();
    for (const auto &u : unitaries) {
        if (u.rows() != d || !u.is_unitary()) throw Error(ErrorKind::NotProjectiveRep, "operators must be d×d unitaries");
    }
    for (Element a = 0; a < g.order(); a++)
        for (Element b = 0; b < g.order(); b++) {
            ExactMatrix m = unitaries[a] * unitaries[b] * unitaries[g.mul(a, b)].adjoint();
            if (!m.as_scalar()) {
                throw Error(ErrorKind::NotProjectiveRep,
                            "U(" + g.word(a) + ")U(" + g.word(b) + ") is not a scalar multiple of U(" +
                                g.word(g.mul(a, b)) + ")");
            }
        }
    auto conj_trace = [&](const ExactMatrix &u) {
        CycloNum t;
        const ExactMatrix udag = u.adjoint();
        for (std::size_t i = 0; i < d; i++)
            for (std::size_t j = 0; j < d; j++) {
                ExactMatrix e(d, d);
                e(i, j) = 1;
                t += hs_inner(e, u * e * udag);
            }
        return t;
    };
    std::vector<CycloNum> values;
    for (const auto &cls : g.classes().classes) {
        const CycloNum v = conj_trace(unitaries[cls.front()]);
        for (Element x : cls) {
            if (conj_trace(unitaries[x]) != v) {
                throw Error(ErrorKind::NotClassConstant, "conjugation trace varies on class of " + g.word(cls.front()));
            }
        }
        if (v != unitaries[cls.front()].trace().norm2()) {
            throw std::logic_error("conjugation trace differs from |tr U|^2 on class of " + g.word(cls.front()));
        }
        values.push_back(v);
    }
    return {group, std::move(values)};
}

/// K4 -> U(2): e, a, b, ab -> σ0, σx, σy, σz.
inline std::vector<ExactMatrix> pauli_assignment_k4() { return {pauli(0), pauli(1), pauli(2), pauli(3)}; }

/// D4 -> U(2) projectively: r^a s^b -> S^a σx^b.
inline std::vector<ExactMatrix> s_sigma_x_assignment_d4() {
    GroupPtr d4 = builtin_group(BuiltinGroup::D4);
    std::vector<ExactMatrix> out(d4->order());
    // Builtin D4 stores r^a s^b at index a + 4b.
    for (Element e = 0; e < d4->order(); e++) {
        const int a = static_cast<int>(e % 4);
        const int b = static_cast<int>(e / 4);
        ExactMatrix m = ExactMatrix::identity(2);
        for (int k = 0; k < a; k++) m = m * phase_s();
        if (b) m = m * pauli(1);
        out[e] = m;
    }
    return out;
}

/// Linear lift to D8: ζ^a η^b -> (ζ8^3 S)^a σx^b, on which ζ^4 acts as -1.
inline std::vector<ExactMatrix> s_sigma_x_lift_d8() {
    GroupPtr d8 = builtin_group(BuiltinGroup::D8);
    const ExactMatrix rot = CycloNum::zeta_pow(3) * phase_s();
    std::vector<ExactMatrix> out(d8->order());
    for (Element e = 0; e < d8->order(); e++) {
        const int a = static_cast<int>(e % 8);
        const int b = static_cast<int>(e / 8);
        ExactMatrix m = ExactMatrix::identity(2);
        for (int k = 0; k < a; k++) m = m * rot;
        if (b) m = m * pauli(1);
        out[e] = m;
    }
    return out;
}

inline Json trace_json(const ProtocolTrace &t) {
    Json arr = Json::array();
    for (const auto &o : t.outcomes) {
        Json e{{"outcome", o.outcome},
               {"probability", rational_json(o.probability)},
               {"correction_label", o.correction_label},
               {"restored", o.restored}};
        e["chsh"] = o.chsh ? cyclo_json(*o.chsh) : Json(nullptr);
        arr.push_back(e);
    }
    return arr;
}

}  // namespace repcheck
