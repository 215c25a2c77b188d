#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_map>

#include "traceclust/errors.hpp"
#include "traceclust/log_io.hpp"
#include "traceclust/table_io.hpp"

namespace traceclust {

EventLog parse_csv(std::istream& in, std::string log_name, const CsvLogColumns& columns) {
    const CsvData data = read_csv_data(in);
    if (data.header.empty()) throw ParseError("empty log", 1, 1);

    auto column_index = [&](const std::string& name) {
        const auto it = std::find(data.header.begin(), data.header.end(), name);
        if (it == data.header.end()) {
            throw ConfigError("column '" + name + "' not found in CSV header");
        }
        return static_cast<std::size_t>(it - data.header.begin());
    };
    const std::size_t case_idx = column_index(columns.case_col);
    const std::size_t activity_idx = column_index(columns.activity_col);

    if (data.rows.empty()) throw ParseError("empty log", 1, 1);

    // Cases keep their first-appearance order; events keep file order.
    std::vector<Trace> traces;
    std::unordered_map<std::string, std::size_t> case_slot;
    for (std::size_t r = 0; r < data.rows.size(); ++r) {
        const auto& row = data.rows[r];
        const std::string& case_id = row[case_idx];
        const std::string& activity = row[activity_idx];
        if (activity.empty()) {
            throw ParseError("empty activity name", data.row_lines[r], 1);
        }
        auto [it, inserted] = case_slot.emplace(case_id, traces.size());
        if (inserted) traces.push_back(Trace{case_id, {}});
        traces[it->second].events.push_back(Event{activity, std::nullopt});
    }
    return make_event_log(std::move(log_name), std::move(traces));
}

void write_csv(std::ostream& out, const EventLog& log, const CsvLogColumns& columns) {
    write_csv_row(out, {columns.case_col, columns.activity_col});
    for (const Trace& trace : log.traces) {
        for (const Event& event : trace.events) {
            write_csv_row(out, {trace.case_id, event.activity});
        }
    }
}

EventLog load_log_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open log file: " + path.string());
    const std::string name = path.stem().string();
    if (path.extension() == ".xes") return parse_xes(in, name);
    return parse_csv(in, name);
}

void save_log_file(const std::filesystem::path& path, const EventLog& log, LogFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write log file: " + path.string());
    if (format == LogFormat::kXes) write_xes(out, log);
    else write_csv(out, log);
}

}  // namespace traceclust
