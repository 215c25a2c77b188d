#include "traceclust/log_generator.hpp"

#include <cstdio>
#include <vector>

#include "traceclust/errors.hpp"
#include "traceclust/rng.hpp"

namespace traceclust {
namespace {

void validate(const GeneratorSpec& spec) {
    if (spec.n_traces < 1) throw ConfigError("generator: n_traces must be >= 1");
    if (spec.alphabet_size < 1) throw ConfigError("generator: alphabet_size must be >= 1");
    if (spec.min_len < 1) throw ConfigError("generator: min_len must be >= 1");
    if (spec.max_len < spec.min_len) throw ConfigError("generator: empty trace-length range");
    if (spec.noise < 0.0 || spec.noise > 1.0) throw ConfigError("generator: noise must be in [0,1]");
    if (spec.out_degree_min < 1 || spec.out_degree_max < spec.out_degree_min ||
        spec.out_degree_max > spec.alphabet_size) {
        throw ConfigError("generator: out-degree bounds must satisfy 1 <= min <= max <= alphabet_size");
    }
}

std::string activity_name(int index) {
    char buffer[16];
    std::snprintf(buffer, sizeof(buffer), "act_%03d", index);
    return buffer;
}

}  // namespace

EventLog generate_log(const GeneratorSpec& spec, const std::string& name) {
    validate(spec);
    Rng rng(derive_seed(spec.seed, 0x67656e));

    // Sample the directly-follows graph: successor lists per activity.
    const int alphabet = spec.alphabet_size;
    std::vector<std::vector<int>> successors(alphabet);
    for (int a = 0; a < alphabet; ++a) {
        const int degree = static_cast<int>(rng.range(spec.out_degree_min, spec.out_degree_max));
        const auto picked = rng.sample_indices(static_cast<std::size_t>(alphabet),
                                               static_cast<std::size_t>(degree));
        for (std::size_t s : picked) successors[a].push_back(static_cast<int>(s));
    }
    const int start_activity = static_cast<int>(rng.below(static_cast<std::uint64_t>(alphabet)));

    std::vector<Trace> traces;
    traces.reserve(static_cast<std::size_t>(spec.n_traces));
    for (int t = 0; t < spec.n_traces; ++t) {
        const int target_len = static_cast<int>(rng.range(spec.min_len, spec.max_len));
        std::vector<int> walk;
        walk.reserve(static_cast<std::size_t>(target_len) + 1);
        int current = start_activity;
        walk.push_back(current);
        while (static_cast<int>(walk.size()) < target_len) {
            const auto& next = successors[current];
            current = next[rng.below(next.size())];
            walk.push_back(current);
        }

        if (spec.noise > 0.0 && rng.unit() < spec.noise) {
            // One perturbation, uniform over the ops feasible at this length.
            // insert is always feasible; swap/skip need >= 2 events so a
            // trace can never end up empty.
            const int n_ops = walk.size() >= 2 ? 3 : 1;
            switch (rng.below(static_cast<std::uint64_t>(n_ops))) {
                case 0: {  // insert a random activity
                    const auto pos = rng.below(walk.size() + 1);
                    const int inserted = static_cast<int>(rng.below(static_cast<std::uint64_t>(alphabet)));
                    walk.insert(walk.begin() + static_cast<std::ptrdiff_t>(pos), inserted);
                    break;
                }
                case 1: {  // swap two adjacent events
                    const auto pos = rng.below(walk.size() - 1);
                    std::swap(walk[pos], walk[pos + 1]);
                    break;
                }
                case 2: {  // skip one event
                    const auto pos = rng.below(walk.size());
                    walk.erase(walk.begin() + static_cast<std::ptrdiff_t>(pos));
                    break;
                }
            }
        }

        Trace trace;
        trace.case_id = "case_" + std::to_string(t + 1);
        trace.events.reserve(walk.size());
        for (int activity : walk) trace.events.push_back(Event{activity_name(activity), std::nullopt});
        traces.push_back(std::move(trace));
    }
    return make_event_log(name, std::move(traces));
}

}  // namespace traceclust
