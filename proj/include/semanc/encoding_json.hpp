#pragma once

#include <string>

#include "semanc/encoding.hpp"

namespace semanc {

// Encoding-spec interchange format:
//   {"kind":"nat","atoms":{"0":"A","1":"B"},"agg":"union",
//    "input_states":[[...], ...]}                       (input_states optional)
//   {"kind":"dat","vars":[{"name":"x","neurons":[0],
//                          "elements":[{"name":"d0","values":[0]}]}],
//    "preds":[{"name":"P","neuron":1,"args":["x"]}],
//    "inputs":[["d0"],["d1"]],"agg":"intersection"}
struct EncodingSpecFile {
    enum class Kind { Nat, Dat } kind = Kind::Nat;
    NatSpec nat;
    DatSpec dat;
    Agg agg = Agg::Union;
};

EncodingSpecFile encoding_spec_from_json(const std::string& text);
EncodingSpecFile load_encoding_spec(const std::string& path);
std::string encoding_spec_to_json(const EncodingSpecFile& spec);

// Resolves the file against a concrete network and atom universe.
EncodingSpec build_encoding(const EncodingSpecFile& file, const Network& n, UniversePtr at);

} // namespace semanc
