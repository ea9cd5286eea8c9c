#include "semanc/model_dist.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <thread>

#include "semanc/errors.hpp"
#include "semanc/eval.hpp"
#include "semanc/fidelity.hpp"
#include "semanc/models.hpp"

namespace semanc {

double ModelDistribution::prob_of_index(std::uint32_t idx) const {
    for (std::size_t i = 0; i < support.size(); ++i)
        if (support[i] == idx) return probs[i];
    return 0.0;
}

DecayFn pow2_decay() {
    return [](int k) { return std::pow(2.0, -k); };
}

DecayFn exp_decay() {
    return [](int k) { return std::exp(-static_cast<double>(k)); };
}

ModelDistribution synthetic_model_dist(const KnowledgeBase& l, const UniversePtr& at,
                                       ComplexitySearcher& searcher, const DecayFn& f,
                                       const std::string& f_name) {
    require_same_universe(at, searcher.universe());
    const InterpretationSet models = enumerate_models(l, at);
    if (models.empty()) throw DomainError("knowledge base has no models");

    ModelDistribution dist;
    dist.universe = at;
    dist.provenance = "synthetic(" + f_name + ")";
    double z = 0.0;
    for (std::uint32_t idx : models.member_indices()) {
        const ComplexityResult r = searcher.complexity_of_index(idx);
        if (!r.exact) dist.exact_complexities = false;
        const double w = f(r.k);
        if (w <= 0.0) throw DomainError("decay function must be positive");
        dist.support.push_back(idx);
        dist.probs.push_back(w);
        z += w;
    }
    for (double& p : dist.probs) p /= z;
    return dist;
}

namespace {

struct TrialSetup {
    Network net;
    DatSpec binding;
    std::vector<VariableAssignment> groundings;
    KnowledgeBase data_kb;
    KnowledgeBase extra;
    UniversePtr at;
    InterpretationSet models;
};

// Fully connected input -> hidden -> output sigmoid net for the task shape.
Network build_task_net(const ClassificationTask& task, int hidden) {
    const int d = task.inputs.empty() ? 0 : static_cast<int>(task.inputs.front().size());
    const int n_labels = static_cast<int>(task.labels.size());
    std::vector<Neuron> neurons;
    std::vector<Edge> edges;
    for (int i = 0; i < d; ++i)
        neurons.push_back({i, 0.0, Activation::Identity, VarRole{"x", i}});
    for (int h = 0; h < hidden; ++h) {
        neurons.push_back({d + h, 0.0, Activation::Sigmoid, HiddenRole{}});
        for (int i = 0; i < d; ++i) edges.push_back({i, d + h, 0.0});
    }
    for (int y = 0; y < n_labels; ++y) {
        const int id = d + hidden + y;
        neurons.push_back({id, 0.0, Activation::Sigmoid,
                           PredRole{task.labels[static_cast<std::size_t>(y)], {"x"}}});
        for (int h = 0; h < hidden; ++h) edges.push_back({d + h, id, 0.0});
    }
    return Network(UpdateMode::Feedforward, std::move(neurons), std::move(edges));
}

DatSpec build_task_binding(const ClassificationTask& task, const Network& net, int hidden) {
    const int d = task.inputs.empty() ? 0 : static_cast<int>(task.inputs.front().size());
    DatSpec binding;
    DatVar var;
    var.name = "x";
    for (int i = 0; i < d; ++i) var.neurons.push_back(i);
    for (std::size_t i = 0; i < task.inputs.size(); ++i)
        var.elements.push_back({task.input_names[i], task.inputs[i]});
    binding.vars.push_back(std::move(var));
    for (int y = 0; y < static_cast<int>(task.labels.size()); ++y) {
        binding.preds.push_back(
            {task.labels[static_cast<std::size_t>(y)], d + hidden + y, {"x"}});
    }
    (void)net;
    return binding;
}

// Rounded network outputs over all inputs, as a crisp interpretation.
Interpretation rounded_interpretation(const Network& net, const TrialSetup& setup,
                                      const ClassificationTask& task) {
    Interpretation m{setup.at,
                     std::vector<double>(static_cast<std::size_t>(setup.at->size()), 0.0)};
    const DatVar& var = setup.binding.vars.front();
    for (std::size_t i = 0; i < task.inputs.size(); ++i) {
        std::vector<std::pair<int, double>> clamps;
        for (std::size_t k = 0; k < var.neurons.size(); ++k)
            clamps.push_back({var.neurons[k], task.inputs[i][k]});
        const NetworkState x = forward_with_clamps(net, clamps);
        for (const DatPred& p : setup.binding.preds) {
            const double v = x[static_cast<std::size_t>(net.pos_of(p.neuron))];
            const int idx =
                setup.at->index_of(ground_atom_name(p.name, {task.input_names[i]}));
            m.values[static_cast<std::size_t>(idx)] = v >= 0.5 ? 1.0 : 0.0;
        }
    }
    return m;
}

} // namespace

ModelDistribution empirical_model_dist(const ClassificationTask& task,
                                       const KnowledgeBase& extra, const TrainConfig& trainer,
                                       int trials, const EmpiricalOptions& opts) {
    if (trials < 1) throw DomainError("empirical distribution requires trials >= 1");
    task.validate();
    const UniversePtr at = task_universe(task);
    if (at->size() > 12) throw DomainError("task universe too large for empirical training");

    TrialSetup setup{build_task_net(task, opts.hidden),
                     {},
                     {},
                     task_to_kb(task, opts.closed_world),
                     extra,
                     at,
                     InterpretationSet::empty_set(at)};
    setup.binding = build_task_binding(task, setup.net, opts.hidden);
    for (const std::string& x : task.input_names) setup.groundings.push_back({{"x", x}});

    // The trained-on KB: data plus background knowledge. A zero knowledge
    // weight removes the extra KB from training and from the model set alike.
    KnowledgeBase combined = setup.data_kb;
    if (trainer.lambda_kb > 0.0)
        for (const Sentence& s : extra.sentences) combined.sentences.push_back(s);
    setup.models = enumerate_models(combined, at);
    if (setup.models.empty()) throw DomainError("training knowledge base is unsatisfiable");

    std::vector<std::int64_t> outcome(static_cast<std::size_t>(trials), -1); // model idx or -1
    auto run_range = [&](int lo, int hi) {
        for (int t = lo; t < hi; ++t) {
            TrainConfig cfg = trainer;
            cfg.seed = trainer.seed + static_cast<std::uint64_t>(t);
            if (cfg.init_scale <= 0.0) cfg.init_scale = opts.init_scale;
            const TrainResult res = train_soft(setup.net, setup.data_kb, setup.extra,
                                               setup.binding, setup.groundings, cfg);
            if (res.diverged) continue;
            const Interpretation rounded = rounded_interpretation(res.net, setup, task);
            if (setup.models.contains(rounded)) {
                outcome[static_cast<std::size_t>(t)] = rounded.to_index();
            } else {
                const KbDistance nearest = distance_to_kb(rounded, combined, at);
                outcome[static_cast<std::size_t>(t)] =
                    static_cast<std::int64_t>(nearest.witness.to_index());
            }
        }
    };

    const int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        run_range(0, trials);
    } else {
        std::vector<std::thread> workers;
        const int chunk = (trials + jobs - 1) / jobs;
        for (int w = 0; w < jobs; ++w) {
            const int lo = w * chunk;
            const int hi = std::min(trials, lo + chunk);
            if (lo >= hi) break;
            workers.emplace_back(run_range, lo, hi);
        }
        for (auto& th : workers) th.join();
    }

    std::map<std::uint32_t, int> histogram;
    int succeeded = 0;
    int diverged = 0;
    for (std::int64_t o : outcome) {
        if (o < 0) {
            ++diverged;
            continue;
        }
        ++histogram[static_cast<std::uint32_t>(o)];
        ++succeeded;
    }
    if (succeeded == 0) throw DomainError("every trial diverged");

    ModelDistribution dist;
    dist.universe = at;
    dist.provenance = "empirical(trials=" + std::to_string(trials) +
                      ",seed=" + std::to_string(trainer.seed) + ")";
    dist.diverged_trials = diverged;
    for (const auto& [idx, count] : histogram) {
        dist.support.push_back(idx);
        dist.probs.push_back(static_cast<double>(count) / static_cast<double>(succeeded));
    }
    return dist;
}

Prop1Report property1_check(const ModelDistribution& base, const KnowledgeBase& l2,
                            const ModelDistribution* observed) {
    Prop1Report report;
    report.conditional.universe = base.universe;
    report.conditional.provenance = "conditional(" + base.provenance + ")";

    double mass = 0.0;
    for (std::size_t i = 0; i < base.support.size(); ++i) {
        const Interpretation m = Interpretation::from_index(base.universe, base.support[i]);
        if (satisfies(l2, m)) {
            report.conditional.support.push_back(base.support[i]);
            report.conditional.probs.push_back(base.probs[i]);
            mass += base.probs[i];
        }
    }
    if (mass <= 0.0) throw DomainError("conditioning event has probability 0");
    for (double& p : report.conditional.probs) p /= mass;
    report.prob_satisfies = mass;
    report.uplift = 1.0 / mass;
    if (observed) report.tv_distance = total_variation(report.conditional, *observed);
    return report;
}

double property2_ratio(const KnowledgeBase& l, const KnowledgeBase& l2, const UniversePtr& at,
                       ComplexitySearcher& searcher, const DecayFn& f, const Interpretation* m) {
    const InterpretationSet models_l = enumerate_models(l, at);
    const InterpretationSet models_l2 = enumerate_models(l2, at);
    if (m) {
        if (!models_l.contains(*m) || !models_l2.contains(*m))
            throw DomainError("interpretation must model both knowledge bases");
    }
    double z_l = 0.0;
    double z_removed = 0.0; // mass of models of l that l2 rules out
    for (std::uint32_t idx : models_l.member_indices()) {
        const double w = f(searcher.complexity_of_index(idx).k);
        z_l += w;
        if (!models_l2.contains_index(idx)) z_removed += w;
    }
    const double denom = z_l - z_removed;
    if (denom <= 0.0) throw DomainError("no surviving models: the combined KB is unsatisfiable");
    return 1.0 + z_removed / denom;
}

double total_variation(const ModelDistribution& a, const ModelDistribution& b) {
    require_same_universe(a.universe, b.universe);
    std::map<std::uint32_t, double> diff;
    for (std::size_t i = 0; i < a.support.size(); ++i) diff[a.support[i]] += a.probs[i];
    for (std::size_t i = 0; i < b.support.size(); ++i) diff[b.support[i]] -= b.probs[i];
    double tv = 0.0;
    for (const auto& [idx, d] : diff) tv += std::abs(d);
    return tv / 2.0;
}

} // namespace semanc
