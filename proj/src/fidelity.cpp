#include "semanc/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "semanc/errors.hpp"
#include "semanc/eval.hpp"
#include "semanc/models.hpp"

namespace semanc {

double interpretation_distance(const Interpretation& m1, const Interpretation& m2) {
    require_same_universe(m1.universe, m2.universe);
    if (m1.values.empty()) return 0.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < m1.values.size(); ++i)
        sum += std::abs(m1.values[i] - m2.values[i]);
    return sum / static_cast<double>(m1.values.size());
}

KbDistance distance_to_kb(const Interpretation& m, const KnowledgeBase& l,
                          const UniversePtr& at) {
    const InterpretationSet models = enumerate_models(l, at);
    if (models.empty()) throw DomainError("distance to an unsatisfiable knowledge base");
    double best = std::numeric_limits<double>::infinity();
    std::optional<Interpretation> witness;
    for (const Interpretation& model : models.members()) {
        const double d = interpretation_distance(m, model);
        if (d < best) {
            best = d;
            witness = model;
        }
    }
    return {best, std::move(*witness)};
}

namespace {

double base_distance(BaseDistance base, const Interpretation& a, const Interpretation& b) {
    if (base == BaseDistance::Discrete) return a.values == b.values ? 0.0 : 1.0;
    return interpretation_distance(a, b);
}

// max over a of min over b (one directed Hausdorff half).
double directed_hausdorff(BaseDistance base, const std::vector<Interpretation>& from,
                          const std::vector<Interpretation>& to,
                          const Interpretation** arg_sup) {
    double sup = 0.0;
    for (const Interpretation& a : from) {
        double inf = std::numeric_limits<double>::infinity();
        for (const Interpretation& b : to) inf = std::min(inf, base_distance(base, a, b));
        if (inf > sup) {
            sup = inf;
            if (arg_sup) *arg_sup = &a;
        }
    }
    return sup;
}

} // namespace

FidelityReport fidelity_hausdorff(const Network& n, const EncodingSpec& spec,
                                  const KnowledgeBase& l, const FidelityConfig& cfg) {
    if (cfg.d_max <= 0.0) throw DomainError("d_max must be positive");
    const InterpretationSet beliefs = belief_set(n, spec).to_explicit();
    const InterpretationSet model_set = enumerate_models(l, spec.universe());
    if (beliefs.empty()) throw DomainError("empty belief set");
    if (model_set.empty()) throw DomainError("unsatisfiable knowledge base");

    const std::vector<Interpretation> mn = beliefs.members();
    const std::vector<Interpretation> ml = model_set.members();
    const Interpretation* witness = nullptr;
    const double fwd = directed_hausdorff(cfg.base, mn, ml, &witness);
    const Interpretation* witness_back = nullptr;
    const double bwd = directed_hausdorff(cfg.base, ml, mn, &witness_back);
    double dh = fwd;
    if (bwd > dh) {
        dh = bwd;
        witness = witness_back;
    }

    FidelityReport report;
    report.measure = "hausdorff";
    report.value = std::max(0.0, cfg.d_max - dh) / cfg.d_max;
    report.is_neural_model = beliefs.subset_of(model_set); // beliefs nonempty here
    if (witness) report.witness = *witness;
    return report;
}

double interval_distance(double v, double lo, double hi) {
    return std::max({lo - v, v - hi, 0.0});
}

std::vector<Interpretation>
fuzzy_belief_interpretations(const Network& n, const EncodingSpec& spec,
                             const std::vector<NetworkState>* input_states) {
    const UniversePtr& at = spec.universe();
    if (n.mode() == UpdateMode::Feedforward && spec.is_dat()) {
        // One combined interpretation: each enumerated input fixes its own
        // ground atoms; atoms never touched stay 0.
        Interpretation combined{at, std::vector<double>(static_cast<std::size_t>(at->size()), 0.0)};
        const DatSpec& d = spec.dat_spec();
        for (const NetworkState& x0 : dat_input_states(n, spec)) {
            const NetworkState x = update(n, x0);
            for (std::size_t p = 0; p < d.preds.size(); ++p) {
                const DatPred& pr = d.preds[p];
                std::vector<std::string> elems;
                for (const std::string& arg : pr.args) {
                    for (std::size_t v = 0; v < d.vars.size(); ++v) {
                        if (d.vars[v].name != arg) continue;
                        for (const DatElement& el : d.vars[v].elements) {
                            bool match = true;
                            const auto& pos = spec.var_positions()[v];
                            for (std::size_t i = 0; i < pos.size(); ++i)
                                if (x[static_cast<std::size_t>(pos[i])] != el.values[i])
                                    match = false;
                            if (match) {
                                elems.push_back(el.name);
                                break;
                            }
                        }
                        break;
                    }
                }
                const int idx = at->index_of(ground_atom_name(pr.name, elems));
                if (idx < 0) throw DomainError("ground atom outside universe");
                combined.values[static_cast<std::size_t>(idx)] =
                    x[static_cast<std::size_t>(spec.pred_positions()[p])];
            }
        }
        return {std::move(combined)};
    }

    if (!spec.is_nat())
        throw DomainError("fuzzy beliefs require a NAT spec or a feedforward DAT spec");
    std::vector<NetworkState> states;
    if (!input_states && !spec.nat_spec().input_states.empty())
        input_states = &spec.nat_spec().input_states;
    if (input_states) {
        for (const NetworkState& x0 : *input_states) states.push_back(update(n, x0));
    } else {
        states = limit_set(n).states;
    }
    std::vector<Interpretation> out;
    for (const NetworkState& x : states) {
        Interpretation m{at, std::vector<double>(static_cast<std::size_t>(at->size()), 0.0)};
        const auto& pairs = spec.nat_spec().atoms;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const int idx = at->index_of(pairs[i].second);
            m.values[static_cast<std::size_t>(idx)] =
                x[static_cast<std::size_t>(spec.nat_positions()[i])];
        }
        out.push_back(std::move(m));
    }
    return out;
}

FidelityReport fuzzy_fidelity(const Network& n, const EncodingSpec& spec,
                              const KnowledgeBase& fuzzy_l, const FidelityConfig& cfg,
                              const std::vector<NetworkState>* input_states) {
    for (const Sentence& s : fuzzy_l.sentences)
        if (!std::holds_alternative<FuzzyInterval>(s.ann))
            throw DomainError("fuzzy fidelity requires fuzzy annotations on every sentence");
    const std::vector<Interpretation> beliefs =
        fuzzy_belief_interpretations(n, spec, input_states);
    if (beliefs.empty()) throw DomainError("empty belief set");

    FidelityReport report;
    report.measure = "fuzzy";
    report.value = std::numeric_limits<double>::infinity();
    for (const Interpretation& m : beliefs) {
        double agg = 1.0;
        const Sentence* worst = nullptr;
        double worst_term = 2.0;
        for (const Sentence& s : fuzzy_l.sentences) {
            const auto& interval = std::get<FuzzyInterval>(s.ann);
            const double truth = evaluate_fuzzy(*s.formula, m, FuzzyConfig{});
            const double term = 1.0 - interval_distance(truth, interval.lo, interval.hi);
            if (term < worst_term) {
                worst_term = term;
                worst = &s;
            }
            agg = cfg.sat_agg == SatAgg::Min ? std::min(agg, term) : agg * term;
        }
        if (agg < report.value) {
            report.value = agg;
            report.witness = m;
            if (worst) report.witness_sentence = to_string(*worst->formula);
        }
    }
    report.is_neural_model = report.value == 1.0;
    return report;
}

Wmc weighted_model_count(const KnowledgeBase& l, const UniversePtr& at,
                         std::span<const double> probs, bool with_grad) {
    const int n = at->size();
    if (n > 20) throw DomainError("too many output atoms for exact model counting");
    if (static_cast<int>(probs.size()) != n)
        throw DomainError("probability count does not match universe size");
    for (double p : probs)
        if (p < 0.0 || p > 1.0) throw DomainError("probability outside [0,1]");

    const std::uint32_t n_states = 1u << n;
    std::vector<double> weights; // per satisfying world, in index order
    std::vector<double> grad(with_grad ? static_cast<std::size_t>(n) : 0, 0.0);
    std::vector<double> prefix(static_cast<std::size_t>(n) + 1),
        suffix(static_cast<std::size_t>(n) + 1);
    for (std::uint32_t idx = 0; idx < n_states; ++idx) {
        const Interpretation m = Interpretation::from_index(at, idx);
        if (!satisfies(l, m)) continue;
        // factor_i = p_i or (1-p_i); weight = prod factor_i
        prefix[0] = 1.0;
        for (int i = 0; i < n; ++i) {
            const bool bit = (idx >> i) & 1u;
            const double f = bit ? probs[static_cast<std::size_t>(i)]
                                 : 1.0 - probs[static_cast<std::size_t>(i)];
            prefix[static_cast<std::size_t>(i) + 1] = prefix[static_cast<std::size_t>(i)] * f;
        }
        weights.push_back(prefix[static_cast<std::size_t>(n)]);
        if (with_grad) {
            suffix[static_cast<std::size_t>(n)] = 1.0;
            for (int i = n - 1; i >= 0; --i) {
                const bool bit = (idx >> i) & 1u;
                const double f = bit ? probs[static_cast<std::size_t>(i)]
                                     : 1.0 - probs[static_cast<std::size_t>(i)];
                suffix[static_cast<std::size_t>(i)] = suffix[static_cast<std::size_t>(i) + 1] * f;
            }
            for (int i = 0; i < n; ++i) {
                const bool bit = (idx >> i) & 1u;
                const double others =
                    prefix[static_cast<std::size_t>(i)] * suffix[static_cast<std::size_t>(i) + 1];
                grad[static_cast<std::size_t>(i)] += bit ? others : -others;
            }
        }
    }

    // Pairwise summation: a fixed reduction tree independent of partitioning.
    const auto pairwise_sum = [](std::vector<double> v) {
        if (v.empty()) return 0.0;
        while (v.size() > 1) {
            std::vector<double> next;
            next.reserve((v.size() + 1) / 2);
            for (std::size_t i = 0; i + 1 < v.size(); i += 2) next.push_back(v[i] + v[i + 1]);
            if (v.size() % 2) next.push_back(v.back());
            v = std::move(next);
        }
        return v[0];
    };

    Wmc out;
    out.p = pairwise_sum(std::move(weights));
    out.grad = std::move(grad);
    return out;
}

FidelityReport prob_fidelity(const std::vector<std::pair<std::string, double>>& atom_probs,
                             const KnowledgeBase& l) {
    std::vector<std::string> atoms;
    std::vector<double> probs;
    for (const auto& [name, p] : atom_probs) {
        atoms.push_back(name);
        probs.push_back(p);
    }
    const UniversePtr at = make_universe(std::move(atoms));
    FidelityReport report;
    report.measure = "prob";
    report.value = weighted_model_count(l, at, probs).p;
    report.is_neural_model = report.value == 1.0;
    return report;
}

} // namespace semanc
