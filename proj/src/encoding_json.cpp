#include "semanc/encoding_json.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "semanc/errors.hpp"

namespace semanc {

using nlohmann::json;

namespace {

Agg agg_from(const std::string& s) {
    if (s == "union") return Agg::Union;
    if (s == "intersection") return Agg::Intersection;
    throw DomainError("unknown aggregation: " + s);
}

} // namespace

EncodingSpecFile encoding_spec_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad encoding spec JSON: ") + e.what(), 1, 1);
    }
    EncodingSpecFile out;
    out.agg = agg_from(j.at("agg").get<std::string>());
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "nat") {
        out.kind = EncodingSpecFile::Kind::Nat;
        for (const auto& [id, atom] : j.at("atoms").items())
            out.nat.atoms.push_back({std::stoi(id), atom.get<std::string>()});
        if (j.contains("input_states"))
            out.nat.input_states = j.at("input_states").get<std::vector<NetworkState>>();
    } else if (kind == "dat") {
        out.kind = EncodingSpecFile::Kind::Dat;
        for (const json& vj : j.at("vars")) {
            DatVar v;
            v.name = vj.at("name").get<std::string>();
            v.neurons = vj.at("neurons").get<std::vector<int>>();
            for (const json& ej : vj.at("elements"))
                v.elements.push_back({ej.at("name").get<std::string>(),
                                      ej.at("values").get<std::vector<double>>()});
            out.dat.vars.push_back(std::move(v));
        }
        for (const json& pj : j.at("preds")) {
            out.dat.preds.push_back({pj.at("name").get<std::string>(),
                                     pj.at("neuron").get<int>(),
                                     pj.at("args").get<std::vector<std::string>>()});
        }
        if (j.contains("inputs"))
            out.dat.inputs = j.at("inputs").get<std::vector<std::vector<std::string>>>();
    } else {
        throw DomainError("unknown encoding kind: " + kind);
    }
    return out;
}

EncodingSpecFile load_encoding_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open encoding spec: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return encoding_spec_from_json(ss.str());
}

std::string encoding_spec_to_json(const EncodingSpecFile& spec) {
    json j;
    j["agg"] = spec.agg == Agg::Union ? "union" : "intersection";
    if (spec.kind == EncodingSpecFile::Kind::Nat) {
        j["kind"] = "nat";
        json atoms = json::object();
        for (const auto& [id, atom] : spec.nat.atoms) atoms[std::to_string(id)] = atom;
        j["atoms"] = std::move(atoms);
        if (!spec.nat.input_states.empty()) j["input_states"] = spec.nat.input_states;
    } else {
        j["kind"] = "dat";
        j["vars"] = json::array();
        for (const DatVar& v : spec.dat.vars) {
            json elements = json::array();
            for (const DatElement& el : v.elements)
                elements.push_back({{"name", el.name}, {"values", el.values}});
            j["vars"].push_back(
                {{"name", v.name}, {"neurons", v.neurons}, {"elements", std::move(elements)}});
        }
        j["preds"] = json::array();
        for (const DatPred& p : spec.dat.preds)
            j["preds"].push_back({{"name", p.name}, {"neuron", p.neuron}, {"args", p.args}});
        j["inputs"] = spec.dat.inputs;
    }
    return j.dump(2);
}

EncodingSpec build_encoding(const EncodingSpecFile& file, const Network& n, UniversePtr at) {
    if (file.kind == EncodingSpecFile::Kind::Nat)
        return EncodingSpec::nat(n, file.nat, file.agg, std::move(at));
    return EncodingSpec::dat(n, file.dat, file.agg, std::move(at));
}

} // namespace semanc
