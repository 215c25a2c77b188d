#pragma once

#include <cstdint>
#include <string>

#include "traceclust/event_log.hpp"

namespace traceclust {

// Synthetic log recipe: a random directly-follows graph over `alphabet_size`
// activities is sampled from the seed (each activity gets between
// out_degree_min and out_degree_max successors), traces are random walks of
// a per-trace target length drawn from [min_len, max_len], and with
// probability `noise` one perturbation (insert / swap / skip) is applied
// per trace. Deterministic for a fixed spec.
struct GeneratorSpec {
    std::uint64_t seed = 0;
    int n_traces = 0;
    int alphabet_size = 0;
    double noise = 0.0;
    int min_len = 1;
    int max_len = 1;
    int out_degree_min = 1;
    int out_degree_max = 3;
};

// Throws ConfigError when the spec is infeasible (empty length range,
// noise outside [0,1], non-positive counts, bad out-degree bounds).
EventLog generate_log(const GeneratorSpec& spec, const std::string& name = "generated");

}  // namespace traceclust
