#pragma once

#include <optional>
#include <string>
#include <vector>

namespace traceclust {

// One executed activity. The optional timestamp is carried through parsing
// and serialization but never used for ordering.
struct Event {
    std::string activity;
    std::optional<std::string> timestamp;
};

// One case: a non-empty event sequence in recorded order.
struct Trace {
    std::string case_id;
    std::vector<Event> events;
};

// Immutable after construction via make_event_log. `alphabet` is the
// lexicographically sorted set of activities observed anywhere in the log.
struct EventLog {
    std::string name;
    std::vector<Trace> traces;
    std::vector<std::string> alphabet;
};

// Validates invariants (at least one trace, no empty traces, no empty
// activity names) and computes the alphabet. Throws ConfigError on breach.
EventLog make_event_log(std::string name, std::vector<Trace> traces);

// A distinct activity sequence together with how many traces share it.
struct Variant {
    std::vector<std::string> activity_sequence;
    std::size_t count = 0;
};

// Variants ordered by descending count, ties by lexicographic sequence.
std::vector<Variant> variants_of(const EventLog& log);

std::vector<std::string> activity_sequence(const Trace& trace);

// Traces re-expressed as indices into log.alphabet; the workhorse view for
// encoders and entropy estimators.
std::vector<std::vector<int>> index_traces(const EventLog& log);

}  // namespace traceclust
