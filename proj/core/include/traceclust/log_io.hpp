#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "traceclust/event_log.hpp"

namespace traceclust {

// XES subset reader: log > trace > event elements and the "concept:name"
// string attribute; everything else is skipped. Throws ParseError with
// line/column on malformed XML, events without "concept:name", empty
// traces, or a log without traces ("empty log").
EventLog parse_xes(std::istream& in, std::string log_name);

struct CsvLogColumns {
    std::string case_col = "case:concept:name";
    std::string activity_col = "concept:name";
};

// CSV reader: header row, traces grouped by case id in first-appearance
// order, event order = file order within a case. Missing columns throw
// ConfigError; a file without data rows throws ParseError ("empty log").
EventLog parse_csv(std::istream& in, std::string log_name, const CsvLogColumns& columns = {});

void write_xes(std::ostream& out, const EventLog& log);
void write_csv(std::ostream& out, const EventLog& log, const CsvLogColumns& columns = {});

enum class LogFormat { kCsv, kXes };

// Dispatches on the file extension (.xes vs anything else -> CSV).
EventLog load_log_file(const std::filesystem::path& path);
void save_log_file(const std::filesystem::path& path, const EventLog& log, LogFormat format);

}  // namespace traceclust
