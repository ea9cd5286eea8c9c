#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "semanc/cilp.hpp"
#include "semanc/encoding.hpp"
#include "semanc/errors.hpp"
#include "semanc/models.hpp"
#include "semanc/parser.hpp"

using namespace semanc;

namespace {

Network flipflop_net() {
    std::vector<Neuron> neurons{{0, 2.0, Activation::StepGeq0, AtomRole{"A"}},
                                {1, 2.0, Activation::StepGeq0, AtomRole{"B"}}};
    std::vector<Edge> edges{{0, 0, -1.0}, {1, 1, -1.0}, {0, 1, -1.5}, {1, 0, -1.5}};
    return Network(UpdateMode::Synchronous, std::move(neurons), std::move(edges));
}

EncodingSpec flipflop_nat(const Network& n, const UniversePtr& at, Agg agg = Agg::Union) {
    return EncodingSpec::nat(n, NatSpec{{{0, "A"}, {1, "B"}}}, agg, at);
}

KnowledgeBase parse_prop(const std::string& text) {
    return parse_kb(text, ParseKind::Prop).kb.value();
}

// Single binary input x in {d0, d1}; output P fires exactly on d1.
Network threshold_dat_net() {
    std::vector<Neuron> neurons{{0, 0.0, Activation::Identity, VarRole{"x", 0}},
                                {1, -0.5, Activation::StepGeq0, PredRole{"P", {"x"}}}};
    std::vector<Edge> edges{{0, 1, 1.0}};
    return Network(UpdateMode::Feedforward, std::move(neurons), std::move(edges));
}

DatSpec threshold_dat_spec() {
    DatSpec d;
    d.vars.push_back({"x", {0}, {{"d0", {0.0}}, {"d1", {1.0}}}});
    d.preds.push_back({"P", 1, {"x"}});
    d.inputs = {{"d0"}, {"d1"}};
    return d;
}

} // namespace

TEST_CASE("NAT encoding maps a state to the fixed-atoms cube") {
    const Network n = flipflop_net();
    const auto at = make_universe({"A", "B", "C"}); // C stays free
    const EncodingSpec spec = flipflop_nat(n, at);
    const InterpretationSet s = apply_encoding(spec, {0, 1});
    // {M | A=0, B=1}: two completions over C
    CHECK(s.count() == 2);
    CHECK(s.contains_index(0b010));
    CHECK(s.contains_index(0b110));
    CHECK_FALSE(s.contains_index(0b011));
}

TEST_CASE("NAT encoding rejects fuzzy states") {
    const Network n = flipflop_net();
    const auto at = make_universe({"A", "B"});
    CHECK_THROWS_AS(apply_encoding(flipflop_nat(n, at), {0.5, 1}), DomainError);
}

TEST_CASE("DAT encoding fixes the grounded atom named by the inputs") {
    const Network n = threshold_dat_net();
    const auto at = make_universe({"P(d0)", "P(d1)"});
    const EncodingSpec spec = EncodingSpec::dat(n, threshold_dat_spec(), Agg::Intersection, at);
    // state: x carries d1, P outputs 1
    const InterpretationSet s = apply_encoding(spec, {1.0, 1.0});
    CHECK(s.count() == 2); // P(d1)=1 fixed, P(d0) free
    CHECK(s.contains_index(0b10));
    CHECK(s.contains_index(0b11));
}

TEST_CASE("a network with only hidden neurons encodes the unconstrained set") {
    std::vector<Neuron> neurons{{0, 1.0, Activation::StepGeq0, HiddenRole{}}};
    const Network n(UpdateMode::Synchronous, std::move(neurons), {});
    const auto at = make_universe({"A"});
    const EncodingSpec spec = EncodingSpec::nat(n, NatSpec{}, Agg::Union, at);
    const InterpretationSet s = apply_encoding(spec, {1});
    CHECK(s.count() == 2);
}

TEST_CASE("encoding specs cannot reference hidden neurons") {
    std::vector<Neuron> neurons{{0, 0.0, Activation::StepGeq0, HiddenRole{}},
                                {1, 0.0, Activation::StepGeq0, AtomRole{"A"}}};
    const Network n(UpdateMode::Synchronous, std::move(neurons), {});
    const auto at = make_universe({"A"});
    CHECK_THROWS_AS(EncodingSpec::nat(n, NatSpec{{{0, "A"}}}, Agg::Union, at), DomainError);
}

TEST_CASE("aggregation by union and intersection") {
    const auto at = make_universe({"A", "B"});
    const InterpretationSet both_false = InterpretationSet::from_cube(at, {{0, false}, {1, false}});
    const InterpretationSet both_true = InterpretationSet::from_cube(at, {{0, true}, {1, true}});
    std::vector<InterpretationSet> sets{both_false, both_true};

    const InterpretationSet u = aggregate(Agg::Union, sets);
    const KnowledgeBase kb = parse_prop("atoms A B;\nA & B | ~A & ~B.\n");
    CHECK(u.same_as(enumerate_models(kb, at)));

    const InterpretationSet i = aggregate(Agg::Intersection, sets);
    CHECK(i.empty()); // inconsistent beliefs
}

TEST_CASE("intersection of per-grounding DAT sets leaves a single interpretation") {
    const auto at = make_universe({"P(d0)", "P(d1)"});
    const InterpretationSet s0 = InterpretationSet::from_cube(at, {{0, false}});
    const InterpretationSet s1 = InterpretationSet::from_cube(at, {{1, true}});
    std::vector<InterpretationSet> sets{s0, s1};
    const InterpretationSet i = aggregate(Agg::Intersection, sets);
    CHECK(i.count() == 1);
    CHECK(i.contains_index(0b10)); // P(d0)=0, P(d1)=1
}

TEST_CASE("belief set of the flip-flop net is the models of its sentence") {
    const Network n = flipflop_net();
    const auto at = make_universe({"A", "B"});
    const InterpretationSet beliefs = belief_set(n, flipflop_nat(n, at));
    const KnowledgeBase kb = parse_prop("atoms A B;\nA & B | ~A & ~B.\n");
    CHECK(beliefs.to_explicit().same_as(enumerate_models(kb, at)));
}

TEST_CASE("belief set of a feedforward DAT net is the single encoded interpretation") {
    const Network n = threshold_dat_net();
    const auto at = make_universe({"P(d0)", "P(d1)"});
    const EncodingSpec spec = EncodingSpec::dat(n, threshold_dat_spec(), Agg::Intersection, at);
    const InterpretationSet beliefs = belief_set(n, spec);
    CHECK(beliefs.count() == 1);
    CHECK(beliefs.contains_index(0b10));
}

TEST_CASE("neural-model and semantic-encoding checks on the flip-flop net") {
    const Network n = flipflop_net();
    const auto at = make_universe({"A", "B"});
    const EncodingSpec spec = flipflop_nat(n, at);

    const KnowledgeBase exact = parse_prop("atoms A B;\nA & B | ~A & ~B.\n");
    EncodingVerdict v = check_semantic_encoding(n, spec, exact);
    CHECK(v.is_neural_model);
    CHECK(v.is_semantic_encoding);

    const KnowledgeBase conj = parse_prop("atoms A B;\nA & B.\n");
    v = check_neural_model(n, spec, conj);
    CHECK_FALSE(v.is_neural_model);
    REQUIRE(v.counterexample.has_value());
    CHECK(v.counterexample->values == std::vector<double>{0, 0});

    const KnowledgeBase taut = parse_prop("atoms A B;\nA | ~A.\n");
    v = check_semantic_encoding(n, spec, taut);
    CHECK(v.is_neural_model);           // strict subset still a neural model
    CHECK_FALSE(v.is_semantic_encoding); // but not all 4 models are believed
}

TEST_CASE("unsatisfiable knowledge bases are never neurally modeled") {
    const Network n = flipflop_net();
    const auto at = make_universe({"A", "B"});
    const KnowledgeBase contradiction = parse_prop("atoms A B;\nA.\n~A.\n");
    const EncodingVerdict v = check_neural_model(n, flipflop_nat(n, at), contradiction);
    CHECK_FALSE(v.is_neural_model);
    CHECK_FALSE(v.is_semantic_encoding);
}

TEST_CASE("empty belief sets fail the neural-model condition") {
    // Intersection of the two contradictory flip-flop limit states.
    const Network n = flipflop_net();
    const auto at = make_universe({"A", "B"});
    const EncodingSpec spec = flipflop_nat(n, at, Agg::Intersection);
    const KnowledgeBase taut = parse_prop("atoms A B;\nA | ~A.\n");
    const EncodingVerdict v = check_neural_model(n, spec, taut);
    CHECK(v.beliefs.to_explicit().empty());
    CHECK_FALSE(v.is_neural_model);
}

TEST_CASE("softmax exclusivity KB") {
    const KnowledgeBase kb2 = softmax_exclusivity_kb(2);
    REQUIRE(kb2.sentences.size() == 2);
    CHECK(to_string(*kb2.sentences[0].formula) == "Y1 <-> ~Y2");
    CHECK(to_string(*kb2.sentences[1].formula) == "Y2 <-> ~Y1");

    const KnowledgeBase kb3 = softmax_exclusivity_kb(3);
    const auto at = make_universe({"Y1", "Y2", "Y3"});
    const InterpretationSet models = enumerate_models(kb3, at);
    CHECK(models.count() == 3);
    CHECK(models.contains_index(0b001));
    CHECK(models.contains_index(0b010));
    CHECK(models.contains_index(0b100));

    CHECK_THROWS_AS(softmax_exclusivity_kb(1), DomainError);
}

TEST_CASE("softmax output groups always pass the exclusivity neural-model check") {
    // 1 input, 3 softmax outputs with arbitrary weights.
    std::vector<Neuron> neurons{{0, 0.0, Activation::Identity, HiddenRole{}},
                                {1, 0.3, Activation::Sigmoid, AtomRole{"Y1"}},
                                {2, -0.1, Activation::Sigmoid, AtomRole{"Y2"}},
                                {3, 0.8, Activation::Sigmoid, AtomRole{"Y3"}}};
    std::vector<Edge> edges{{0, 1, 0.7}, {0, 2, -0.4}, {0, 3, 1.3}};
    const Network n(UpdateMode::Feedforward, std::move(neurons), std::move(edges), {{1, 2, 3}});
    const auto at = make_universe({"Y1", "Y2", "Y3"});
    NatSpec nat{{{1, "Y1"}, {2, "Y2"}, {3, "Y3"}},
                {{-1, 0, 0, 0}, {0, 0, 0, 0}, {0.7, 0, 0, 0}, {2, 0, 0, 0}}};
    const EncodingSpec spec = EncodingSpec::nat(n, std::move(nat), Agg::Union, at);
    const EncodingVerdict v = check_neural_model(n, spec, softmax_exclusivity_kb(3));
    CHECK(v.is_neural_model);
}

TEST_CASE("union aggregation is monotone, intersection antitone") {
    testutil::Rand rng(61);
    const auto at = make_universe(testutil::atom_names(4));
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<InterpretationSet> sets;
        const int k = 2 + rng.below(3);
        for (int i = 0; i < k; ++i) {
            PartialAssignment cube;
            for (int a = 0; a < 4; ++a)
                if (rng.flip()) cube.push_back({a, rng.flip()});
            sets.push_back(InterpretationSet::from_cube(at, cube));
        }
        const InterpretationSet u_all = aggregate(Agg::Union, sets);
        const InterpretationSet i_all = aggregate(Agg::Intersection, sets);
        std::vector<InterpretationSet> fewer(sets.begin(), sets.end() - 1);
        const InterpretationSet u_fewer = aggregate(Agg::Union, fewer);
        const InterpretationSet i_fewer = aggregate(Agg::Intersection, fewer);
        CHECK(u_fewer.subset_of(u_all));
        CHECK(i_all.subset_of(i_fewer));
    }
}

TEST_CASE("compiled programs: beliefs over clamp-stable states are T_P fixed points") {
    testutil::Rand rng(67);
    for (int i = 0; i < 25; ++i) {
        const int n_atoms = 1 + rng.below(8);
        const LogicProgram p = testutil::random_program(rng, n_atoms, 12);
        const Network net = compile_cilp(p);
        const CilpLayout layout = cilp_layout(net);
        const auto at = p.universe();
        const std::vector<Interpretation> stable = clamp_stable_states(net, layout);
        if (stable.empty()) continue; // cyclic program without fixed points

        // NAT over the output neurons, cube per stable state, union.
        NatSpec nat;
        for (std::size_t a = 0; a < layout.atoms.size(); ++a)
            nat.atoms.push_back({layout.output_ids[a], layout.atoms[a]});
        const EncodingSpec spec = EncodingSpec::nat(net, nat, Agg::Union, at);

        std::vector<InterpretationSet> encoded;
        for (const Interpretation& m : stable) {
            NetworkState x(static_cast<std::size_t>(net.size()), 0.0);
            for (std::size_t a = 0; a < layout.atoms.size(); ++a)
                x[static_cast<std::size_t>(net.pos_of(layout.output_ids[a]))] =
                    m.value_of(layout.atoms[a]);
            encoded.push_back(apply_encoding(spec, x));
        }
        const InterpretationSet beliefs = aggregate(Agg::Union, encoded);
        for (std::uint32_t idx : beliefs.member_indices()) {
            const Interpretation m = Interpretation::from_index(at, idx);
            CHECK(tp_step(p, m) == m);
        }
    }
}

TEST_CASE("constant-image tables are flagged") {
    const Network n = flipflop_net();
    const auto at = make_universe({"A"});
    TableSpec t;
    t.visible_neurons = {0, 1};
    t.entries = {{{0, 0}, {{"A", true}}}, {{1, 1}, {{"A", true}}}};
    const EncodingSpec spec = EncodingSpec::table(n, t, Agg::Union, at);
    REQUIRE(spec.warnings().size() == 1);

    TableSpec informative;
    informative.visible_neurons = {0, 1};
    informative.entries = {{{0, 0}, {{"A", false}}}, {{1, 1}, {{"A", true}}}};
    CHECK(EncodingSpec::table(n, informative, Agg::Union, at).warnings().empty());
}

TEST_CASE("semantic encodings agree with entailment on sampled conclusions") {
    const Network n = flipflop_net();
    const auto at = make_universe({"A", "B"});
    const EncodingSpec spec = flipflop_nat(n, at);
    const KnowledgeBase l = parse_prop("atoms A B;\nA & B | ~A & ~B.\n");
    REQUIRE(check_semantic_encoding(n, spec, l).is_semantic_encoding);
    const InterpretationSet beliefs = belief_set(n, spec).to_explicit();

    testutil::Rand rng(71);
    for (int i = 0; i < 100; ++i) {
        KnowledgeBase l2;
        l2.signature.prop_atoms = {"A", "B"};
        l2.add(testutil::random_formula(rng, {"A", "B"}, 3));
        CHECK(entails(l, l2, at) == beliefs.subset_of(enumerate_models(l2, at)));
    }
}

#include "semanc/encoding_json.hpp"

TEST_CASE("encoding spec JSON round-trips") {
    EncodingSpecFile dat;
    dat.kind = EncodingSpecFile::Kind::Dat;
    dat.agg = Agg::Intersection;
    dat.dat.vars.push_back({"x", {0}, {{"d0", {0.0}}, {"d1", {1.0}}}});
    dat.dat.preds.push_back({"P", 1, {"x"}});
    dat.dat.inputs = {{"d0"}, {"d1"}};
    const EncodingSpecFile back = encoding_spec_from_json(encoding_spec_to_json(dat));
    CHECK(back.kind == EncodingSpecFile::Kind::Dat);
    CHECK(back.agg == Agg::Intersection);
    REQUIRE(back.dat.vars.size() == 1);
    CHECK(back.dat.vars[0].elements[1].name == "d1");
    CHECK(back.dat.inputs == dat.dat.inputs);

    EncodingSpecFile nat;
    nat.kind = EncodingSpecFile::Kind::Nat;
    nat.agg = Agg::Union;
    nat.nat.atoms = {{0, "A"}, {1, "B"}};
    const EncodingSpecFile nat_back = encoding_spec_from_json(encoding_spec_to_json(nat));
    CHECK(nat_back.nat.atoms == nat.nat.atoms);

    // resolves against a network and drives the belief-set pipeline
    const Network n = threshold_dat_net();
    const auto at = make_universe({"P(d0)", "P(d1)"});
    const EncodingSpec spec = build_encoding(dat, n, at);
    CHECK(belief_set(n, spec).count() == 1);
}
