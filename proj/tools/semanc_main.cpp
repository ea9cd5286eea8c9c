// semanc: command-line front end for the semantic-encoding toolkit.
// Reports are single JSON documents on stdout; diagnostics go to stderr.
// Exit codes: 0 success (including negative verification results),
// 1 domain error, 2 usage or parse error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "semanc/cilp.hpp"
#include "semanc/complexity.hpp"
#include "semanc/encoding.hpp"
#include "semanc/encoding_json.hpp"
#include "semanc/errors.hpp"
#include "semanc/eval.hpp"
#include "semanc/fidelity.hpp"
#include "semanc/ground.hpp"
#include "semanc/model_dist.hpp"
#include "semanc/models.hpp"
#include "semanc/network_json.hpp"
#include "semanc/parser.hpp"
#include "semanc/task.hpp"
#include "semanc/train.hpp"

using namespace semanc;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fnv1a_digest(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) h = (h ^ c) * 1099511628211ull;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct Report {
    json inputs = json::object();
    json config = json::object();
    json result = json::object();
    std::uint64_t seed = 0;

    void note_input(const std::string& path, const std::string& bytes) {
        inputs[path] = fnv1a_digest(bytes);
    }
};

// KB plus the universe its ground sentences live over. First-order KBs are
// grounded over their declared signature.
struct LoadedKb {
    KnowledgeBase kb;
    UniversePtr universe;
    Signature signature;
};

LoadedKb load_kb_file(const std::string& path, const std::string& kind_name, Report& report) {
    const std::string text = read_file(path);
    report.note_input(path, text);
    const ParseKind kind = parse_kind_from_name(kind_name);
    if (kind == ParseKind::Program) throw DomainError("expected a knowledge base, got a program");
    ParseResult parsed = parse_kb(text, kind);
    LoadedKb out;
    out.signature = parsed.signature;
    if (parsed.signature.predicates.empty()) {
        out.kb = std::move(*parsed.kb);
        out.universe = universe_of(parsed.signature);
    } else {
        out.kb = ground(*parsed.kb);
        out.universe = ground_universe(parsed.signature);
    }
    return out;
}

LogicProgram load_program_file(const std::string& path, Report& report) {
    const std::string text = read_file(path);
    report.note_input(path, text);
    return parse_kb(text, ParseKind::Program).program.value();
}

Network load_network_file(const std::string& path, Report& report) {
    const std::string text = read_file(path);
    report.note_input(path, text);
    return network_from_json(text);
}

Interpretation interpretation_from_bits(const UniversePtr& at, const std::string& bits) {
    if (static_cast<int>(bits.size()) != at->size())
        throw DomainError("expected " + std::to_string(at->size()) + " bits, got '" + bits + "'");
    Interpretation m{at, std::vector<double>(bits.size(), 0.0)};
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != '0' && bits[i] != '1') throw DomainError("bits must be 0/1");
        m.values[i] = bits[i] == '1' ? 1.0 : 0.0;
    }
    return m;
}

json state_to_json(const NetworkState& x) {
    json out = json::array();
    for (double v : x) out.push_back(v);
    return out;
}

json model_list_json(const InterpretationSet& set) {
    json out = json::array();
    for (const Interpretation& m : set.members()) out.push_back(m.bits());
    return out;
}

json verdict_json(const EncodingVerdict& v) {
    json out;
    out["is_neural_model"] = v.is_neural_model;
    out["is_semantic_encoding"] = v.is_semantic_encoding;
    out["m_n"] = model_list_json(v.beliefs.to_explicit());
    if (v.counterexample) out["counterexample"] = v.counterexample->bits();
    return out;
}

json dist_json(const ModelDistribution& d) {
    json models = json::array();
    for (std::size_t i = 0; i < d.support.size(); ++i) {
        models.push_back({{"model", Interpretation::from_index(d.universe, d.support[i]).bits()},
                          {"p", d.probs[i]}});
    }
    return {{"provenance", d.provenance},
            {"diverged_trials", d.diverged_trials},
            {"models", std::move(models)}};
}

void write_dist_csv(const ModelDistribution& d, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DomainError("cannot write " + path);
    out << "model,p\n";
    for (std::size_t i = 0; i < d.support.size(); ++i)
        out << Interpretation::from_index(d.universe, d.support[i]).bits() << ',' << d.probs[i]
            << '\n';
}

// Grounding CSV: a column `v` holds element names for variable v, columns
// `v.K` hold that element's K-th input value.
struct GroundingFile {
    std::vector<VariableAssignment> rows;
    std::map<std::string, std::vector<DatElement>> elements; // per var
};

GroundingFile parse_grounding_csv(const std::string& text) {
    GroundingFile out;
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw DomainError("empty grounding CSV");
    std::vector<std::string> header;
    {
        std::istringstream hs(line);
        std::string cell;
        while (std::getline(hs, cell, ',')) header.push_back(cell);
    }
    struct VarCols {
        int name_col = -1;
        std::vector<int> value_cols;
    };
    std::map<std::string, VarCols> cols;
    std::vector<std::string> var_order;
    for (int c = 0; c < static_cast<int>(header.size()); ++c) {
        const std::string& h = header[static_cast<std::size_t>(c)];
        const auto dot = h.find('.');
        const std::string var = h.substr(0, dot);
        if (!cols.count(var)) var_order.push_back(var);
        if (dot == std::string::npos)
            cols[var].name_col = c;
        else
            cols[var].value_cols.push_back(c);
    }
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        VariableAssignment row;
        for (const std::string& var : var_order) {
            const VarCols& vc = cols[var];
            if (vc.name_col < 0) throw DomainError("grounding CSV lacks name column for " + var);
            const std::string elem = cells.at(static_cast<std::size_t>(vc.name_col));
            row[var] = elem;
            DatElement el{elem, {}};
            for (int c : vc.value_cols)
                el.values.push_back(std::stod(cells.at(static_cast<std::size_t>(c))));
            auto& known = out.elements[var];
            const auto found = std::find_if(known.begin(), known.end(),
                                            [&](const DatElement& e) { return e.name == elem; });
            if (found == known.end())
                known.push_back(std::move(el));
            else if (found->values != el.values)
                throw DomainError("conflicting values for element " + elem);
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

// DAT binding from the network's var/pred roles plus a grounding file's
// element tables.
DatSpec binding_from_roles(const Network& n, const GroundingFile& g) {
    DatSpec binding;
    std::map<std::string, std::map<int, int>> var_neurons; // var -> index -> id
    for (const Neuron& nr : n.neurons()) {
        if (const auto* v = std::get_if<VarRole>(&nr.role)) var_neurons[v->arg][v->index] = nr.id;
    }
    for (const auto& [var, by_index] : var_neurons) {
        DatVar dv;
        dv.name = var;
        for (const auto& [idx, id] : by_index) dv.neurons.push_back(id);
        if (auto it = g.elements.find(var); it != g.elements.end()) dv.elements = it->second;
        binding.vars.push_back(std::move(dv));
    }
    for (const Neuron& nr : n.neurons()) {
        if (const auto* p = std::get_if<PredRole>(&nr.role))
            binding.preds.push_back({p->name, nr.id, p->args});
    }
    if (binding.preds.empty()) throw DomainError("network declares no predicate outputs");
    return binding;
}

// Task CSV rows: split,labels,f0,f1,...  with labels |-separated (may be
// empty). Inputs are named x0, x1, ... in row order.
ClassificationTask parse_task_csv(const std::string& text) {
    ClassificationTask task;
    std::map<std::string, int> label_index;
    std::istringstream in(text);
    std::string line;
    int row = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (cells.size() < 3) throw DomainError("task CSV rows need split,labels,features...");
        const int idx = static_cast<int>(task.inputs.size());
        if (cells[0] == "train")
            task.train_indices.push_back(idx);
        else if (cells[0] == "test")
            task.test_indices.push_back(idx);
        else
            throw DomainError("task CSV split must be train or test: " + cells[0]);
        std::vector<int> ys;
        if (!cells[1].empty()) {
            std::istringstream ss(cells[1]);
            std::string label;
            while (std::getline(ss, label, '|')) {
                if (!label_index.count(label)) {
                    label_index[label] = static_cast<int>(task.labels.size());
                    task.labels.push_back(label);
                }
                ys.push_back(label_index[label]);
            }
        }
        std::vector<double> features;
        for (std::size_t c = 2; c < cells.size(); ++c) features.push_back(std::stod(cells[c]));
        task.input_names.push_back("x" + std::to_string(row));
        task.inputs.push_back(std::move(features));
        task.truth.push_back(std::move(ys));
        ++row;
    }
    task.validate();
    return task;
}

std::vector<std::pair<std::string, std::string>> parse_hierarchy(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> order;
    std::istringstream in(text);
    std::string pair;
    while (std::getline(in, pair, ';')) {
        const auto lt = pair.find('<');
        if (lt == std::string::npos) throw DomainError("hierarchy pairs look like lo<hi");
        order.push_back({pair.substr(0, lt), pair.substr(lt + 1)});
    }
    return order;
}

DecayFn decay_from_name(const std::string& name, std::string& label) {
    if (name == "pow2") {
        label = "2^-k";
        return pow2_decay();
    }
    if (name == "exp") {
        label = "e^-k";
        return exp_decay();
    }
    if (name.rfind("custom:", 0) == 0) {
        const std::string path = name.substr(7);
        auto table = std::make_shared<std::map<int, double>>();
        std::istringstream in(read_file(path));
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            std::istringstream ls(line);
            std::string k, v;
            std::getline(ls, k, ',');
            std::getline(ls, v, ',');
            (*table)[std::stoi(k)] = std::stod(v);
        }
        label = "custom";
        return [table](int k) {
            auto it = table->find(k);
            if (it == table->end())
                throw DomainError("custom f table missing k=" + std::to_string(k));
            return it->second;
        };
    }
    throw DomainError("unknown decay function: " + name);
}

TrainConfig train_config_from(double lr, int epochs, std::uint64_t seed, double lambda_data,
                              double lambda_kb, const std::string& quant, const std::string& loss,
                              const std::string& tnorm, double init_scale, double epsilon) {
    TrainConfig cfg;
    cfg.lr = lr;
    cfg.epochs = epochs;
    cfg.seed = seed;
    cfg.lambda_data = lambda_data;
    cfg.lambda_kb = lambda_kb;
    cfg.epsilon = epsilon;
    cfg.init_scale = init_scale;
    if (quant == "min") {
        cfg.quant = QuantifierMode::HardMin;
    } else if (quant.rfind("softmin:", 0) == 0) {
        cfg.quant = QuantifierMode::SoftMin;
        cfg.temperature = std::stod(quant.substr(8));
    } else if (quant == "softmin") {
        cfg.quant = QuantifierMode::SoftMin;
    } else {
        throw DomainError("unknown quantifier mode: " + quant);
    }
    if (loss == "neglog")
        cfg.loss = LossForm::NegLog;
    else if (loss == "oneminus")
        cfg.loss = LossForm::OneMinus;
    else
        throw DomainError("unknown loss form: " + loss);
    if (tnorm == "min")
        cfg.tnorm = TNorm::Min;
    else if (tnorm == "product")
        cfg.tnorm = TNorm::Product;
    else if (tnorm == "lukasiewicz")
        cfg.tnorm = TNorm::Lukasiewicz;
    else
        throw DomainError("unknown t-norm: " + tnorm);
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"semantic-encoding toolkit"};
    app.require_subcommand(1);

    std::string format = "json";
    std::uint64_t seed = 0;
    bool seed_given = false;
    int jobs = 1;
    app.add_option("--format", format, "output format: json|csv");
    app.add_option("--seed", seed, "RNG seed (drawn and echoed when omitted)")
        ->each([&](const std::string&) { seed_given = true; });
    app.add_option("--jobs", jobs, "worker cap for parallel sections");

    std::string kb_path, kb_kind = "prop", second_path, net_path, out_path;

    auto* parse_cmd = app.add_subcommand("parse", "parse and echo a knowledge base or program");
    parse_cmd->add_option("file", kb_path)->required();
    parse_cmd->add_option("--kind", kb_kind, "prop|fol|program|penalty|fuzzy");

    auto* models_cmd = app.add_subcommand("models", "enumerate the models of a knowledge base");
    models_cmd->add_option("file", kb_path)->required();
    models_cmd->add_option("--kind", kb_kind);

    auto* entail_cmd = app.add_subcommand("entail", "does the first KB entail the second?");
    entail_cmd->add_option("file", kb_path)->required();
    entail_cmd->add_option("file2", second_path)->required();
    entail_cmd->add_option("--kind", kb_kind);

    std::string from_bits;
    int max_iter = 100;
    auto* tp_cmd = app.add_subcommand("tp", "iterate the immediate-consequence operator");
    tp_cmd->add_option("file", kb_path)->required();
    tp_cmd->add_option("--from", from_bits, "initial interpretation bits (default all-false)");
    tp_cmd->add_option("--max-iter", max_iter);

    auto* compile_cmd = app.add_subcommand("compile", "compile a program to a recurrent net");
    compile_cmd->add_option("file", kb_path)->required();
    compile_cmd->add_option("-o,--out", out_path, "network JSON output path")->required();

    std::string state_bits;
    int steps = 100;
    auto* sim_cmd = app.add_subcommand("simulate", "run a network trajectory");
    sim_cmd->add_option("net", net_path)->required();
    sim_cmd->add_option("--state", state_bits, "initial state bits")->required();
    sim_cmd->add_option("--steps", steps);

    auto* xinf_cmd = app.add_subcommand("xinf", "compute the limit set of a network");
    xinf_cmd->add_option("net", net_path)->required();

    std::string encoding_arg = "nat", agg_name = "union";
    auto* verify_cmd = app.add_subcommand("verify", "neural-model / semantic-encoding check");
    verify_cmd->add_option("net", net_path)->required();
    verify_cmd->add_option("kb", kb_path)->required();
    verify_cmd->add_option("--kind", kb_kind);
    verify_cmd->add_option("--encoding", encoding_arg,
                           "nat (from atom roles) or a spec JSON path");
    verify_cmd->add_option("--agg", agg_name, "union|intersection");

    std::string measure = "hausdorff", probs_path, base_name = "fraction", sat_agg_name = "min";
    double d_max = 1.0;
    auto* fid_cmd = app.add_subcommand("fidelity", "fidelity of a network to a knowledge base");
    fid_cmd->add_option("kb", kb_path)->required();
    fid_cmd->add_option("--kind", kb_kind);
    fid_cmd->add_option("--net", net_path);
    fid_cmd->add_option("--encoding", encoding_arg);
    fid_cmd->add_option("--agg", agg_name);
    fid_cmd->add_option("--measure", measure, "hausdorff|fuzzy|prob");
    fid_cmd->add_option("--prob", probs_path, "JSON list of {atom,p} for --measure prob");
    fid_cmd->add_option("--base", base_name, "hausdorff base distance: discrete|fraction");
    fid_cmd->add_option("--d-max", d_max);
    fid_cmd->add_option("--sat-agg", sat_agg_name, "fuzzy aggregation: min|product");

    std::string data_path, groundings_path, history_path, kb_kind2 = "prop",
                            quant = "softmin:0.1", loss_form = "neglog", tnorm_name = "product";
    double lr = 0.5, lambda_data = 1.0, lambda_kb = 1.0, init_scale = 0.0, epsilon = 1e-9;
    int epochs = 500;
    auto* train_cmd = app.add_subcommand("train", "gradient descent on data + knowledge losses");
    train_cmd->add_option("net", net_path)->required();
    train_cmd->add_option("--data", data_path, "data KB file");
    train_cmd->add_option("--kb", kb_path, "constraint KB file");
    train_cmd->add_option("--kind", kb_kind, "data KB kind");
    train_cmd->add_option("--kb-kind", kb_kind2, "constraint KB kind");
    train_cmd->add_option("--groundings", groundings_path, "grounding CSV")->required();
    train_cmd->add_option("-o,--out", out_path, "trained network JSON")->required();
    train_cmd->add_option("--history", history_path, "per-epoch CSV");
    train_cmd->add_option("--lr", lr);
    train_cmd->add_option("--epochs", epochs);
    train_cmd->add_option("--lambda-data", lambda_data);
    train_cmd->add_option("--lambda-kb", lambda_kb);
    train_cmd->add_option("--quant", quant, "min|softmin:T");
    train_cmd->add_option("--loss", loss_form, "neglog|oneminus");
    train_cmd->add_option("--tnorm", tnorm_name, "min|product|lukasiewicz");
    train_cmd->add_option("--init-scale", init_scale, "re-init params U(-s,s) when > 0");
    train_cmd->add_option("--epsilon", epsilon, "early-stop loss threshold");

    std::string atoms_arg, assign_bits;
    int max_cost = 12;
    auto* k_cmd = app.add_subcommand("complexity", "minimal description cost of a model");
    k_cmd->add_option("--atoms", atoms_arg, "comma-separated atom names")->required();
    k_cmd->add_option("--assign", assign_bits, "interpretation bits")->required();
    k_cmd->add_option("--max-cost", max_cost);

    std::string exp_kind, task_path, hierarchy_arg, extra_path, extra_kind = "fol",
                          f_name = "pow2", csv_prefix;
    int trials = 100, hidden = 8;
    bool closed_world = false;
    auto* exp_cmd = app.add_subcommand("experiment", "prop1|prop2|kdist studies");
    exp_cmd->add_option("which", exp_kind, "prop1|prop2|kdist")->required();
    exp_cmd->add_option("--task", task_path, "task CSV (prop1)");
    exp_cmd->add_option("--hierarchy", hierarchy_arg, "label order, e.g. cat<animal;dog<animal");
    exp_cmd->add_option("--extra", extra_path, "extra KB file (L')");
    exp_cmd->add_option("--extra-kind", extra_kind);
    exp_cmd->add_option("--kb", kb_path, "base KB file (prop2/kdist)");
    exp_cmd->add_option("--kind", kb_kind);
    exp_cmd->add_option("--trials", trials);
    exp_cmd->add_option("--hidden", hidden);
    exp_cmd->add_option("--epochs", epochs);
    exp_cmd->add_option("--lr", lr);
    exp_cmd->add_option("--lambda-kb", lambda_kb);
    exp_cmd->add_flag("--closed-world", closed_world);
    exp_cmd->add_option("--f", f_name, "pow2|exp|custom:<csv>");
    exp_cmd->add_option("--csv", csv_prefix, "also write distribution CSV files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const auto t0 = std::chrono::steady_clock::now();
    Report report;
    if (!seed_given) {
        seed = std::random_device{}();
        std::cerr << "seed: " << seed << std::endl;
    }
    report.seed = seed;

    try {
        std::string subcommand;

        if (parse_cmd->parsed()) {
            subcommand = "parse";
            const std::string text = read_file(kb_path);
            report.note_input(kb_path, text);
            const ParseResult r = parse_kb(text, parse_kind_from_name(kb_kind));
            if (r.program) {
                report.result["kind"] = "program";
                report.result["atoms"] = r.program->atoms;
                report.result["rules"] = static_cast<int>(r.program->rules.size());
                report.result["printed"] = to_string(*r.program);
            } else {
                report.result["kind"] = kb_kind;
                report.result["atoms"] = r.signature.prop_atoms;
                report.result["sentences"] = static_cast<int>(r.kb->sentences.size());
                report.result["printed"] = print_kb(*r.kb);
            }
        } else if (models_cmd->parsed()) {
            subcommand = "models";
            const LoadedKb l = load_kb_file(kb_path, kb_kind, report);
            const InterpretationSet ms = enumerate_models(l.kb, l.universe);
            report.result["atoms"] = l.universe->atoms();
            report.result["count"] = ms.count();
            report.result["models"] = model_list_json(ms);
            if (format == "csv") {
                std::cout << "model\n";
                for (const Interpretation& m : ms.members()) std::cout << m.bits() << '\n';
                return 0;
            }
        } else if (entail_cmd->parsed()) {
            subcommand = "entail";
            const LoadedKb l = load_kb_file(kb_path, kb_kind, report);
            const LoadedKb l2 = load_kb_file(second_path, kb_kind, report);
            report.result["entails"] = entails(l.kb, l2.kb, l.universe);
        } else if (tp_cmd->parsed()) {
            subcommand = "tp";
            const LogicProgram p = load_program_file(kb_path, report);
            const auto at = p.universe();
            Interpretation m0 =
                from_bits.empty()
                    ? Interpretation{at,
                                     std::vector<double>(static_cast<std::size_t>(at->size()), 0.0)}
                    : interpretation_from_bits(at, from_bits);
            const FixpointResult r = tp_fixpoint(p, m0, max_iter);
            report.result["atoms"] = p.atoms;
            report.result["iterations"] = r.iterations;
            report.result["kind"] = r.kind == FixpointResult::Kind::FixedPoint ? "fixed_point"
                                    : r.kind == FixpointResult::Kind::Cycle    ? "cycle"
                                                                               : "max_iter";
            json states = json::array();
            for (const Interpretation& m : r.states) states.push_back(m.bits());
            report.result["states"] = std::move(states);
        } else if (compile_cmd->parsed()) {
            subcommand = "compile";
            const LogicProgram p = load_program_file(kb_path, report);
            const Network net = compile_cilp(p);
            save_network(net, out_path);
            report.result["neurons"] = net.size();
            report.result["edges"] = static_cast<int>(net.edges().size());
            report.result["out"] = out_path;
        } else if (sim_cmd->parsed()) {
            subcommand = "simulate";
            const Network net = load_network_file(net_path, report);
            NetworkState x0(static_cast<std::size_t>(net.size()), 0.0);
            if (static_cast<int>(state_bits.size()) != net.size())
                throw DomainError("state bits must match neuron count");
            for (std::size_t i = 0; i < state_bits.size(); ++i)
                x0[i] = state_bits[i] == '1' ? 1.0 : 0.0;
            const Trajectory t = trajectory(net, x0, steps);
            json states = json::array();
            for (const NetworkState& s : t.states) states.push_back(state_to_json(s));
            report.result["states"] = std::move(states);
            if (t.cycle)
                report.result["cycle"] = {{"start", t.cycle->start}, {"length", t.cycle->length}};
        } else if (xinf_cmd->parsed()) {
            subcommand = "xinf";
            const Network net = load_network_file(net_path, report);
            const LimitSet ls = limit_set(net);
            json states = json::array();
            for (const NetworkState& s : ls.states) states.push_back(state_to_json(s));
            report.result["states"] = std::move(states);
            report.result["cycle_count"] = static_cast<int>(ls.cycles.size());
        } else if (verify_cmd->parsed()) {
            subcommand = "verify";
            const Network net = load_network_file(net_path, report);
            const LoadedKb l = load_kb_file(kb_path, kb_kind, report);
            const Agg agg = agg_name == "union" ? Agg::Union : Agg::Intersection;
            std::optional<EncodingSpec> spec;
            if (encoding_arg == "nat") {
                NatSpec nat;
                for (const Neuron& nr : net.neurons()) {
                    if (const auto* a = std::get_if<AtomRole>(&nr.role)) {
                        // keep the last neuron carrying each atom label (the
                        // output copy in compiled nets)
                        std::erase_if(nat.atoms,
                                      [&](const auto& pair) { return pair.second == a->name; });
                        nat.atoms.push_back({nr.id, a->name});
                    }
                }
                spec = EncodingSpec::nat(net, std::move(nat), agg, l.universe);
            } else {
                EncodingSpecFile file = load_encoding_spec(encoding_arg);
                file.agg = agg;
                spec = build_encoding(file, net, l.universe);
            }
            const EncodingVerdict v = check_semantic_encoding(net, *spec, l.kb);
            report.result = verdict_json(v);
        } else if (fid_cmd->parsed()) {
            subcommand = "fidelity";
            if (measure == "prob") {
                if (probs_path.empty()) throw DomainError("--measure prob needs --prob FILE");
                const std::string text = read_file(probs_path);
                report.note_input(probs_path, text);
                std::vector<std::pair<std::string, double>> probs;
                for (const json& e : json::parse(text))
                    probs.push_back({e.at("atom").get<std::string>(), e.at("p").get<double>()});
                const LoadedKb l = load_kb_file(kb_path, kb_kind, report);
                const FidelityReport r = prob_fidelity(probs, l.kb);
                report.result = {{"measure", r.measure}, {"value", r.value}};
            } else {
                if (net_path.empty()) throw DomainError("this measure needs --net");
                const Network net = load_network_file(net_path, report);
                const LoadedKb l = load_kb_file(kb_path, kb_kind, report);
                FidelityConfig cfg;
                cfg.base =
                    base_name == "discrete" ? BaseDistance::Discrete : BaseDistance::AtomFraction;
                cfg.d_max = d_max;
                cfg.sat_agg = sat_agg_name == "product" ? SatAgg::Product : SatAgg::Min;
                const Agg agg = agg_name == "union" ? Agg::Union : Agg::Intersection;
                EncodingSpec spec = [&] {
                    if (encoding_arg == "nat") {
                        NatSpec nat;
                        for (const Neuron& nr : net.neurons())
                            if (const auto* a = std::get_if<AtomRole>(&nr.role))
                                nat.atoms.push_back({nr.id, a->name});
                        return EncodingSpec::nat(net, std::move(nat), agg, l.universe);
                    }
                    EncodingSpecFile file = load_encoding_spec(encoding_arg);
                    file.agg = agg;
                    return build_encoding(file, net, l.universe);
                }();
                const FidelityReport r = measure == "fuzzy"
                                             ? fuzzy_fidelity(net, spec, l.kb, cfg)
                                             : fidelity_hausdorff(net, spec, l.kb, cfg);
                report.result["measure"] = r.measure;
                report.result["value"] = r.value;
                report.result["is_neural_model"] = r.is_neural_model;
                if (r.witness) {
                    if (r.witness->is_crisp())
                        report.result["witness"] = r.witness->bits();
                    else
                        report.result["witness"] = r.witness->values; // fuzzy interpretation
                }
                if (r.witness_sentence) report.result["witness_sentence"] = *r.witness_sentence;
            }
        } else if (train_cmd->parsed()) {
            subcommand = "train";
            Network net = load_network_file(net_path, report);
            const std::string gtext = read_file(groundings_path);
            report.note_input(groundings_path, gtext);
            const GroundingFile gf = parse_grounding_csv(gtext);
            const DatSpec binding = binding_from_roles(net, gf);

            KnowledgeBase data, kb;
            if (!data_path.empty()) {
                const std::string text = read_file(data_path);
                report.note_input(data_path, text);
                data = *parse_kb(text, parse_kind_from_name(kb_kind)).kb;
            }
            if (!kb_path.empty()) {
                const std::string text = read_file(kb_path);
                report.note_input(kb_path, text);
                kb = *parse_kb(text, parse_kind_from_name(kb_kind2)).kb;
            }
            const TrainConfig cfg = train_config_from(lr, epochs, seed, lambda_data, lambda_kb,
                                                      quant, loss_form, tnorm_name, init_scale,
                                                      epsilon);
            report.config = {{"lr", lr},
                             {"epochs", epochs},
                             {"lambda_data", lambda_data},
                             {"lambda_kb", lambda_kb},
                             {"quant", quant},
                             {"loss", loss_form},
                             {"tnorm", tnorm_name}};
            const TrainResult r = train_soft(net, data, kb, binding, gf.rows, cfg);
            if (r.diverged) throw DomainError(r.diagnostic);
            save_network(r.net, out_path);
            if (!history_path.empty()) {
                std::ofstream h(history_path);
                h << "epoch,data_loss,kb_loss,fidelity\n";
                for (const EpochStats& e : r.history)
                    h << e.epoch << ',' << e.data_loss << ',' << e.kb_loss << ',' << e.fidelity
                      << '\n';
            }
            report.result["epochs_run"] = r.epochs_run;
            report.result["final_data_loss"] = r.history.back().data_loss;
            report.result["final_kb_loss"] = r.history.back().kb_loss;
            report.result["final_fidelity"] = r.history.back().fidelity;
            report.result["out"] = out_path;
        } else if (k_cmd->parsed()) {
            subcommand = "complexity";
            std::vector<std::string> atoms;
            std::istringstream as(atoms_arg);
            std::string a;
            while (std::getline(as, a, ',')) atoms.push_back(a);
            const auto at = make_universe(atoms);
            ComplexityConfig cfg;
            cfg.max_cost = max_cost;
            const ComplexityResult r =
                model_complexity(interpretation_from_bits(at, assign_bits), cfg);
            report.result["k"] = r.k;
            report.result["witness"] = to_string(*r.witness);
            report.result["exact"] = r.exact;
        } else if (exp_cmd->parsed()) {
            subcommand = "experiment " + exp_kind;
            std::string f_label;
            const DecayFn f = decay_from_name(f_name, f_label);
            report.config["f"] = f_label;

            if (exp_kind == "prop1") {
                if (task_path.empty()) throw DomainError("prop1 needs --task");
                const std::string ttext = read_file(task_path);
                report.note_input(task_path, ttext);
                const ClassificationTask task = parse_task_csv(ttext);

                KnowledgeBase extra;
                if (!hierarchy_arg.empty()) {
                    extra = hierarchy_kb(parse_hierarchy(hierarchy_arg), task);
                } else if (!extra_path.empty()) {
                    const std::string text = read_file(extra_path);
                    report.note_input(extra_path, text);
                    extra = *parse_kb(text, parse_kind_from_name(extra_kind)).kb;
                } else {
                    throw DomainError("prop1 needs --hierarchy or --extra");
                }

                const TrainConfig cfg = train_config_from(lr, epochs, seed, 1.0, lambda_kb, quant,
                                                          loss_form, tnorm_name, 1.0, 1e-9);
                EmpiricalOptions opts;
                opts.hidden = hidden;
                opts.closed_world = closed_world;
                opts.jobs = jobs;
                const ModelDistribution base =
                    empirical_model_dist(task, KnowledgeBase{}, cfg, trials, opts);
                const ModelDistribution observed =
                    empirical_model_dist(task, extra, cfg, trials, opts);
                const Prop1Report r = property1_check(base, extra, &observed);
                report.config["trials"] = trials;
                report.config["epochs"] = epochs;
                report.result["prob_satisfies"] = r.prob_satisfies;
                report.result["uplift"] = r.uplift;
                report.result["tv_distance"] = *r.tv_distance;
                report.result["base"] = dist_json(base);
                report.result["predicted_conditional"] = dist_json(r.conditional);
                report.result["observed"] = dist_json(observed);
                const Interpretation truth = true_interpretation(task);
                report.result["true_model"] = truth.bits();
                report.result["base_p_true"] = base.prob_of_index(truth.to_index());
                report.result["predicted_p_true"] = r.conditional.prob_of_index(truth.to_index());
                report.result["observed_p_true"] = observed.prob_of_index(truth.to_index());
                if (!csv_prefix.empty()) {
                    write_dist_csv(base, csv_prefix + "_base.csv");
                    write_dist_csv(r.conditional, csv_prefix + "_predicted.csv");
                    write_dist_csv(observed, csv_prefix + "_observed.csv");
                }
            } else if (exp_kind == "prop2") {
                if (kb_path.empty() || extra_path.empty())
                    throw DomainError("prop2 needs --kb and --extra");
                const LoadedKb l = load_kb_file(kb_path, kb_kind, report);
                const LoadedKb l2 = load_kb_file(extra_path, extra_kind, report);
                ComplexitySearcher searcher(l.universe);
                const double ratio = property2_ratio(l.kb, l2.kb, l.universe, searcher, f);
                const ModelDistribution before =
                    synthetic_model_dist(l.kb, l.universe, searcher, f, f_label);
                KnowledgeBase both = l.kb;
                for (const Sentence& s : l2.kb.sentences) both.sentences.push_back(s);
                const ModelDistribution after =
                    synthetic_model_dist(both, l.universe, searcher, f, f_label);
                report.result["ratio"] = ratio;
                report.result["before"] = dist_json(before);
                report.result["after"] = dist_json(after);
                if (!csv_prefix.empty()) {
                    write_dist_csv(before, csv_prefix + "_before.csv");
                    write_dist_csv(after, csv_prefix + "_after.csv");
                }
            } else if (exp_kind == "kdist") {
                if (kb_path.empty()) throw DomainError("kdist needs --kb");
                const LoadedKb l = load_kb_file(kb_path, kb_kind, report);
                ComplexitySearcher searcher(l.universe);
                const ModelDistribution d =
                    synthetic_model_dist(l.kb, l.universe, searcher, f, f_label);
                json models = json::array();
                for (std::size_t i = 0; i < d.support.size(); ++i) {
                    const ComplexityResult k = searcher.complexity_of_index(d.support[i]);
                    models.push_back(
                        {{"model", Interpretation::from_index(l.universe, d.support[i]).bits()},
                         {"k", k.k},
                         {"exact", k.exact},
                         {"witness", to_string(*k.witness)},
                         {"p", d.probs[i]}});
                }
                report.result["models"] = std::move(models);
                if (!csv_prefix.empty()) write_dist_csv(d, csv_prefix + "_kdist.csv");
            } else {
                throw DomainError("unknown experiment: " + exp_kind);
            }
        }

        const auto t1 = std::chrono::steady_clock::now();
        json out;
        out["subcommand"] = subcommand;
        out["inputs"] = report.inputs;
        if (!report.config.empty()) out["config"] = report.config;
        out["seed"] = report.seed;
        out["wall_time_s"] = std::chrono::duration<double>(t1 - t0).count();
        out["result"] = report.result;
        std::cout << out.dump(2) << std::endl;
        return 0;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << std::endl;
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
}
