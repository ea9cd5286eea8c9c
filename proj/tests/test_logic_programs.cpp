#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "semanc/cilp.hpp"
#include "semanc/logic_program.hpp"
#include "semanc/parser.hpp"

using namespace semanc;

namespace {

// P = {C <- A, C <- B, A <-}
LogicProgram example_program() {
    return parse_kb("atoms A B C;\nC :- A.\nC :- B.\nA.\n", ParseKind::Program).program.value();
}

Interpretation interp(const UniversePtr& at, std::initializer_list<double> values) {
    return {at, std::vector<double>(values)};
}

} // namespace

TEST_CASE("tp_step fires satisfied rule heads") {
    const LogicProgram p = example_program();
    const auto at = p.universe();
    const Interpretation m = interp(at, {1, 0, 0});
    const Interpretation next = tp_step(p, m);
    CHECK(next.values == std::vector<double>{1, 0, 1});
    // applying again leaves it unchanged
    CHECK(tp_step(p, next).values == next.values);
}

TEST_CASE("tp_step of the empty program is all-false") {
    LogicProgram p;
    p.atoms = {"A", "B"};
    const auto at = p.universe();
    CHECK(tp_step(p, interp(at, {1, 1})).values == std::vector<double>{0, 0});
}

TEST_CASE("tp_fixpoint reaches the example fixed point from all-false") {
    const LogicProgram p = example_program();
    const auto at = p.universe();
    const FixpointResult r = tp_fixpoint(p, interp(at, {0, 0, 0}), 10);
    CHECK(r.kind == FixpointResult::Kind::FixedPoint);
    CHECK(r.iterations <= 3);
    REQUIRE(r.states.size() == 1);
    CHECK(r.states[0].values == std::vector<double>{1, 0, 1});
}

TEST_CASE("tp_fixpoint detects the negation cycle") {
    const LogicProgram p = parse_kb("A :- ~A.\n", ParseKind::Program).program.value();
    const auto at = p.universe();
    const FixpointResult r = tp_fixpoint(p, interp(at, {0}), 10);
    CHECK(r.kind == FixpointResult::Kind::Cycle);
    CHECK(r.states.size() == 2);
}

TEST_CASE("tp_fixpoint at a fixed point returns in one iteration") {
    const LogicProgram p = example_program();
    const auto at = p.universe();
    const FixpointResult r = tp_fixpoint(p, interp(at, {1, 0, 1}), 10);
    CHECK(r.kind == FixpointResult::Kind::FixedPoint);
    CHECK(r.iterations == 1);
}

TEST_CASE("tp_fixpoint reports budget exhaustion") {
    const LogicProgram p = parse_kb("A :- ~B.\nB :- A.\nC :- B.\nD :- C.\n", ParseKind::Program)
                               .program.value();
    const auto at = p.universe();
    const FixpointResult r = tp_fixpoint(p, interp(at, {0, 0, 0, 0}), 1);
    CHECK(r.kind == FixpointResult::Kind::MaxIter);
}

TEST_CASE("acyclicity of the dependency graph") {
    CHECK(is_acyclic(example_program()));
    CHECK_FALSE(is_acyclic(parse_kb("A :- ~A.\n", ParseKind::Program).program.value()));
    CHECK_FALSE(is_acyclic(parse_kb("A :- B.\nB :- A.\n", ParseKind::Program).program.value()));
}

TEST_CASE("compiled example program stabilizes at the fixed point") {
    const LogicProgram p = example_program();
    const Network net = compile_cilp(p);
    const CilpLayout layout = cilp_layout(net);
    const auto at = p.universe();

    Interpretation m = interp(at, {1, 0, 0});
    for (int i = 0; i < 5; ++i) m = cilp_sweep(net, layout, m);
    CHECK(m.values == std::vector<double>{1, 0, 1});
    CHECK(cilp_sweep(net, layout, m) == m);
}

TEST_CASE("compiled empty program outputs all zeros") {
    LogicProgram p;
    p.atoms = {"A", "B"};
    const Network net = compile_cilp(p);
    const CilpLayout layout = cilp_layout(net);
    const auto at = p.universe();
    for (std::uint32_t idx = 0; idx < 4; ++idx) {
        const Interpretation m = Interpretation::from_index(at, idx);
        CHECK(cilp_sweep(net, layout, m).values == std::vector<double>{0, 0});
    }
}

TEST_CASE("a fact compiles to an always-firing hidden unit") {
    const LogicProgram p = parse_kb("A.\n", ParseKind::Program).program.value();
    const Network net = compile_cilp(p);
    // hidden neuron for the fact has bias 0
    bool found_hidden = false;
    for (const Neuron& n : net.neurons()) {
        if (std::holds_alternative<HiddenRole>(n.role)) {
            found_hidden = true;
            CHECK(n.bias == 0.0);
        }
    }
    CHECK(found_hidden);
    const CilpLayout layout = cilp_layout(net);
    const auto at = p.universe();
    for (std::uint32_t idx = 0; idx < 2; ++idx) {
        const Interpretation m = Interpretation::from_index(at, idx);
        CHECK(cilp_sweep(net, layout, m).values == std::vector<double>{1});
    }
}

TEST_CASE("verify_tp_equivalence accepts the compiled example over all 8 states") {
    const LogicProgram p = example_program();
    const TpEquivalence v = verify_tp_equivalence(p, compile_cilp(p));
    CHECK(v.equivalent);
    CHECK_FALSE(v.countermodel.has_value());
}

TEST_CASE("verify_tp_equivalence rejects a flipped weight with a countermodel") {
    const LogicProgram p = example_program();
    Network net = compile_cilp(p);
    // flip the first body-literal weight (A -> hidden of rule C :- A)
    int flipped = -1;
    for (std::size_t e = 0; e < net.edges().size(); ++e) {
        const Edge& ed = net.edges()[e];
        if (std::holds_alternative<HiddenRole>(net.neuron_at(net.pos_of(ed.to)).role)) {
            flipped = static_cast<int>(e);
            break;
        }
    }
    REQUIRE(flipped >= 0);
    net.set_weight(flipped, -net.edges()[static_cast<std::size_t>(flipped)].weight);
    const TpEquivalence v = verify_tp_equivalence(p, net);
    CHECK_FALSE(v.equivalent);
    REQUIRE(v.countermodel.has_value());
    // the reported countermodel really does disagree
    const CilpLayout layout = cilp_layout(net);
    CHECK_FALSE(cilp_sweep(net, layout, *v.countermodel) == tp_step(p, *v.countermodel));
}

TEST_CASE("empty program is equivalent to its compiled network") {
    LogicProgram p;
    const TpEquivalence v = verify_tp_equivalence(p, compile_cilp(p));
    CHECK(v.equivalent);
}

TEST_CASE("random acyclic programs converge to a fixed point from all-false") {
    testutil::Rand rng(5);
    for (int i = 0; i < 60; ++i) {
        const LogicProgram p = testutil::random_program(rng, 2 + rng.below(7), 12, true);
        REQUIRE(is_acyclic(p));
        const auto at = p.universe();
        Interpretation zero{at, std::vector<double>(static_cast<std::size_t>(at->size()), 0.0)};
        const FixpointResult r = tp_fixpoint(p, zero, 300);
        REQUIRE(r.kind == FixpointResult::Kind::FixedPoint);
        CHECK(tp_step(p, r.states[0]) == r.states[0]);
    }
}

TEST_CASE("compilation is T_P-equivalent for random programs") {
    testutil::Rand rng(9);
    for (int i = 0; i < 60; ++i) {
        const LogicProgram p = testutil::random_program(rng, 1 + rng.below(8), 12, false);
        const TpEquivalence v = verify_tp_equivalence(p, compile_cilp(p));
        CHECK(v.equivalent);
    }
}

TEST_CASE("clamp-stable states are exactly the T_P fixed points") {
    testutil::Rand rng(13);
    for (int i = 0; i < 40; ++i) {
        const int n = 1 + rng.below(8);
        const LogicProgram p = testutil::random_program(rng, n, 12, false);
        const Network net = compile_cilp(p);
        const CilpLayout layout = cilp_layout(net);
        const auto at = p.universe();
        const std::vector<Interpretation> stable = clamp_stable_states(net, layout);
        std::size_t fixed_points = 0;
        for (std::uint32_t idx = 0; idx < (1u << n); ++idx) {
            const Interpretation m = Interpretation::from_index(at, idx);
            const bool is_fixed = tp_step(p, m) == m;
            if (is_fixed) ++fixed_points;
            bool in_stable = false;
            for (const Interpretation& s : stable)
                if (s.values == m.values) in_stable = true;
            CHECK(is_fixed == in_stable);
        }
        CHECK(fixed_points == stable.size());
    }
}
