#include "semanc/network_json.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "semanc/errors.hpp"

namespace semanc {

using nlohmann::json;

std::string format_double(double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
}

double parse_double(const std::string& s) {
    double v = 0.0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw DomainError("bad decimal number: " + s);
    return v;
}

namespace {

std::string activation_name(Activation a) {
    switch (a) {
    case Activation::StepGeq0: return "step_geq0";
    case Activation::Sigmoid: return "sigmoid";
    case Activation::Relu: return "relu";
    case Activation::Identity: return "identity";
    }
    return "";
}

Activation activation_from(const std::string& s) {
    if (s == "step_geq0") return Activation::StepGeq0;
    if (s == "sigmoid") return Activation::Sigmoid;
    if (s == "relu") return Activation::Relu;
    if (s == "identity") return Activation::Identity;
    throw DomainError("unknown activation: " + s);
}

json role_to_json(const Role& r) {
    if (const auto* a = std::get_if<AtomRole>(&r)) return {{"type", "atom"}, {"name", a->name}};
    if (const auto* v = std::get_if<VarRole>(&r))
        return {{"type", "var"}, {"arg", v->arg}, {"index", v->index}};
    if (const auto* p = std::get_if<PredRole>(&r))
        return {{"type", "pred"}, {"name", p->name}, {"args", p->args}};
    return {{"type", "hidden"}};
}

Role role_from_json(const json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "atom") return AtomRole{j.at("name").get<std::string>()};
    if (type == "var") return VarRole{j.at("arg").get<std::string>(), j.at("index").get<int>()};
    if (type == "pred")
        return PredRole{j.at("name").get<std::string>(),
                        j.at("args").get<std::vector<std::string>>()};
    if (type == "hidden") return HiddenRole{};
    throw DomainError("unknown neuron role: " + type);
}

} // namespace

std::string network_to_json(const Network& n) {
    json j;
    j["update"] = n.mode() == UpdateMode::Synchronous ? "synchronous" : "feedforward";
    j["neurons"] = json::array();
    for (const Neuron& nr : n.neurons()) {
        j["neurons"].push_back({{"id", nr.id},
                                {"bias", format_double(nr.bias)},
                                {"activation", activation_name(nr.activation)},
                                {"role", role_to_json(nr.role)}});
    }
    j["edges"] = json::array();
    for (const Edge& e : n.edges())
        j["edges"].push_back({{"from", e.from}, {"to", e.to}, {"w", format_double(e.weight)}});
    j["softmax_groups"] = n.softmax_groups();
    return j.dump(2);
}

Network network_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad network JSON: ") + e.what(), 1, 1);
    }
    const std::string mode_name = j.at("update").get<std::string>();
    UpdateMode mode;
    if (mode_name == "synchronous")
        mode = UpdateMode::Synchronous;
    else if (mode_name == "feedforward")
        mode = UpdateMode::Feedforward;
    else
        throw DomainError("unknown update mode: " + mode_name);

    std::vector<Neuron> neurons;
    for (const json& nj : j.at("neurons")) {
        Neuron n;
        n.id = nj.at("id").get<int>();
        n.bias = parse_double(nj.at("bias").get<std::string>());
        n.activation = activation_from(nj.at("activation").get<std::string>());
        n.role = nj.contains("role") ? role_from_json(nj.at("role")) : Role{HiddenRole{}};
        neurons.push_back(std::move(n));
    }
    std::vector<Edge> edges;
    for (const json& ej : j.at("edges")) {
        edges.push_back({ej.at("from").get<int>(), ej.at("to").get<int>(),
                         parse_double(ej.at("w").get<std::string>())});
    }
    std::vector<std::vector<int>> groups;
    if (j.contains("softmax_groups")) groups = j.at("softmax_groups").get<decltype(groups)>();
    return Network(mode, std::move(neurons), std::move(edges), std::move(groups));
}

Network load_network(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open network file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return network_from_json(ss.str());
}

void save_network(const Network& n, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DomainError("cannot write network file: " + path);
    out << network_to_json(n) << '\n';
}

} // namespace semanc
