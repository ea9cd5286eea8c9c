#pragma once

#include <string>

#include "semanc/network.hpp"

namespace semanc {

// Interchange format. Weights and biases are serialized as shortest
// round-tripping decimal strings so files reload bit-exactly:
//
// {"update":"synchronous|feedforward",
//  "neurons":[{"id":0,"bias":"2","activation":"step_geq0",
//              "role":{"type":"atom","name":"A"}}, ...],
//  "edges":[{"from":0,"to":1,"w":"-1.5"}, ...],
//  "softmax_groups":[[2,3]]}
std::string network_to_json(const Network& n);
Network network_from_json(const std::string& text);

Network load_network(const std::string& path);
void save_network(const Network& n, const std::string& path);

std::string format_double(double v);  // shortest decimal that round-trips
double parse_double(const std::string& s);

} // namespace semanc
