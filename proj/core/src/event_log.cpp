#include "traceclust/event_log.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "traceclust/errors.hpp"

namespace traceclust {

EventLog make_event_log(std::string name, std::vector<Trace> traces) {
    if (traces.empty()) {
        throw ConfigError("event log '" + name + "' has no traces");
    }
    std::set<std::string> activities;
    for (const Trace& trace : traces) {
        if (trace.events.empty()) {
            throw ConfigError("trace '" + trace.case_id + "' has no events");
        }
        for (const Event& event : trace.events) {
            if (event.activity.empty()) {
                throw ConfigError("trace '" + trace.case_id + "' contains an event with an empty activity");
            }
            activities.insert(event.activity);
        }
    }
    EventLog log;
    log.name = std::move(name);
    log.traces = std::move(traces);
    log.alphabet.assign(activities.begin(), activities.end());
    return log;
}

std::vector<std::string> activity_sequence(const Trace& trace) {
    std::vector<std::string> sequence;
    sequence.reserve(trace.events.size());
    for (const Event& event : trace.events) sequence.push_back(event.activity);
    return sequence;
}

std::vector<Variant> variants_of(const EventLog& log) {
    std::map<std::vector<std::string>, std::size_t> counts;
    for (const Trace& trace : log.traces) {
        ++counts[activity_sequence(trace)];
    }
    std::vector<Variant> variants;
    variants.reserve(counts.size());
    for (auto& [sequence, count] : counts) {
        variants.push_back(Variant{sequence, count});
    }
    std::sort(variants.begin(), variants.end(), [](const Variant& a, const Variant& b) {
        if (a.count != b.count) return a.count > b.count;
        return a.activity_sequence < b.activity_sequence;
    });
    return variants;
}

std::vector<std::vector<int>> index_traces(const EventLog& log) {
    std::unordered_map<std::string, int> index;
    index.reserve(log.alphabet.size());
    for (std::size_t i = 0; i < log.alphabet.size(); ++i) {
        index.emplace(log.alphabet[i], static_cast<int>(i));
    }
    std::vector<std::vector<int>> indexed;
    indexed.reserve(log.traces.size());
    for (const Trace& trace : log.traces) {
        std::vector<int> row;
        row.reserve(trace.events.size());
        for (const Event& event : trace.events) row.push_back(index.at(event.activity));
        indexed.push_back(std::move(row));
    }
    return indexed;
}

}  // namespace traceclust
