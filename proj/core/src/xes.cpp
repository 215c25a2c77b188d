#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "traceclust/errors.hpp"
#include "traceclust/log_io.hpp"

namespace traceclust {
namespace {

struct Attribute {
    std::string name;
    std::string value;
};

// Minimal pull reader for the XES subset: elements, attributes, comments,
// processing instructions and character data (skipped). No CDATA, no
// DOCTYPE internal subsets.
class XmlReader {
public:
    explicit XmlReader(std::string text) : text_(std::move(text)) {
        if (text_.size() >= 3 && text_.compare(0, 3, "\xef\xbb\xbf") == 0) pos_ = 3;
    }

    struct Tag {
        std::string name;
        std::vector<Attribute> attributes;
        bool closing = false;       // </name>
        bool self_closing = false;  // <name/>
        std::size_t line = 0;
        std::size_t column = 0;
    };

    // Advances to the next tag; returns false at end of input.
    bool next(Tag& tag) {
        for (;;) {
            skip_character_data();
            if (at_end()) return false;
            const std::size_t tag_line = line_;
            const std::size_t tag_col = column_;
            advance();  // '<'
            if (at_end()) fail("unterminated tag");
            const char c = peek();
            if (c == '?') {
                skip_until("?>");
                continue;
            }
            if (c == '!') {
                if (text_.compare(pos_, 3, "!--") == 0) {
                    skip_until("-->");
                } else {
                    fail("unsupported markup declaration");
                }
                continue;
            }
            tag = Tag{};
            tag.line = tag_line;
            tag.column = tag_col;
            if (c == '/') {
                advance();
                tag.closing = true;
                tag.name = read_name();
                skip_whitespace();
                expect('>');
                return true;
            }
            tag.name = read_name();
            for (;;) {
                skip_whitespace();
                if (at_end()) fail("unterminated tag");
                if (peek() == '/') {
                    advance();
                    expect('>');
                    tag.self_closing = true;
                    return true;
                }
                if (peek() == '>') {
                    advance();
                    return true;
                }
                Attribute attr;
                attr.name = read_name();
                skip_whitespace();
                expect('=');
                skip_whitespace();
                attr.value = read_attribute_value();
                tag.attributes.push_back(std::move(attr));
            }
        }
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, line_, column_);
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void expect(char c) {
        if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
        advance();
    }

    void skip_whitespace() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }

    void skip_character_data() {
        while (!at_end() && peek() != '<') {
            if (peek() == '&') decode_entity();  // validate and discard
            else advance();
        }
    }

    void skip_until(const char* terminator) {
        const std::string_view needle(terminator);
        while (!at_end()) {
            if (text_.compare(pos_, needle.size(), needle) == 0) {
                for (std::size_t i = 0; i < needle.size(); ++i) advance();
                return;
            }
            advance();
        }
        fail(std::string("unterminated construct, expected \"") + terminator + "\"");
    }

    static bool is_name_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == ':' || c == '_' || c == '-' || c == '.';
    }

    std::string read_name() {
        if (at_end() || !is_name_char(peek())) fail("expected a name");
        std::string name;
        while (!at_end() && is_name_char(peek())) {
            name.push_back(peek());
            advance();
        }
        return name;
    }

    std::string read_attribute_value() {
        if (at_end() || (peek() != '"' && peek() != '\'')) fail("expected a quoted attribute value");
        const char quote = peek();
        advance();
        std::string value;
        while (!at_end() && peek() != quote) {
            if (peek() == '<') fail("'<' inside attribute value");
            if (peek() == '&') {
                value.push_back(decode_entity());
            } else {
                value.push_back(peek());
                advance();
            }
        }
        if (at_end()) fail("unterminated attribute value");
        advance();  // closing quote
        return value;
    }

    char decode_entity() {
        const std::size_t semi = text_.find(';', pos_);
        if (semi == std::string::npos || semi - pos_ > 8) fail("malformed entity reference");
        const std::string entity = text_.substr(pos_ + 1, semi - pos_ - 1);
        char decoded;
        if (entity == "amp") decoded = '&';
        else if (entity == "lt") decoded = '<';
        else if (entity == "gt") decoded = '>';
        else if (entity == "quot") decoded = '"';
        else if (entity == "apos") decoded = '\'';
        else if (!entity.empty() && entity[0] == '#') {
            const bool hex = entity.size() > 1 && (entity[1] == 'x' || entity[1] == 'X');
            int code = 0;
            try {
                code = std::stoi(entity.substr(hex ? 2 : 1), nullptr, hex ? 16 : 10);
            } catch (const std::exception&) {
                fail("malformed character reference");
            }
            if (code <= 0 || code > 127) fail("unsupported character reference");
            decoded = static_cast<char>(code);
        } else {
            fail("unknown entity '" + entity + "'");
        }
        while (pos_ <= semi) advance();
        return decoded;
    }

    std::string text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

std::string find_attribute(const XmlReader::Tag& tag, const std::string& name) {
    for (const Attribute& attr : tag.attributes) {
        if (attr.name == name) return attr.value;
    }
    return {};
}

void xml_escape(std::ostream& out, const std::string& value) {
    for (char c : value) {
        switch (c) {
            case '&': out << "&amp;"; break;
            case '<': out << "&lt;"; break;
            case '>': out << "&gt;"; break;
            case '"': out << "&quot;"; break;
            default: out << c;
        }
    }
}

}  // namespace

EventLog parse_xes(std::istream& in, std::string log_name) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    XmlReader reader(buffer.str());

    std::vector<std::string> open;  // element stack
    std::vector<Trace> traces;
    Trace trace;
    Event event;
    bool in_trace = false;
    bool in_event = false;
    bool event_named = false;
    bool seen_root = false;
    std::size_t trace_line = 0, trace_col = 0;
    std::size_t event_line = 0, event_col = 0;
    std::size_t root_line = 1, root_col = 1;

    XmlReader::Tag tag;
    while (reader.next(tag)) {
        if (tag.closing) {
            if (open.empty() || open.back() != tag.name) {
                throw ParseError("mismatched closing tag </" + tag.name + ">", tag.line, tag.column);
            }
            open.pop_back();
            if (in_event && tag.name == "event" && open.size() == 2) {
                if (!event_named) {
                    throw ParseError("event without a \"concept:name\" string attribute", event_line, event_col);
                }
                trace.events.push_back(std::move(event));
                in_event = false;
            } else if (in_trace && tag.name == "trace" && open.size() == 1) {
                if (trace.events.empty()) {
                    throw ParseError("trace without events", trace_line, trace_col);
                }
                if (trace.case_id.empty()) {
                    trace.case_id = "case_" + std::to_string(traces.size() + 1);
                }
                traces.push_back(std::move(trace));
                in_trace = false;
            }
            continue;
        }

        if (open.empty()) {
            if (seen_root) throw ParseError("content after the root element", tag.line, tag.column);
            if (tag.name != "log") throw ParseError("root element is <" + tag.name + ">, expected <log>", tag.line, tag.column);
            seen_root = true;
            root_line = tag.line;
            root_col = tag.column;
            if (tag.self_closing) break;
            open.push_back(tag.name);
            continue;
        }

        const bool at_log_level = open.size() == 1;
        const bool at_trace_level = in_trace && open.size() == 2;
        const bool at_event_level = in_event && open.size() == 3;

        if (at_log_level && tag.name == "trace" && !tag.self_closing) {
            in_trace = true;
            trace = Trace{};
            trace_line = tag.line;
            trace_col = tag.column;
        } else if (at_trace_level && tag.name == "event" && !tag.self_closing) {
            in_event = true;
            event = Event{};
            event_named = false;
            event_line = tag.line;
            event_col = tag.column;
        } else if (at_event_level && tag.name == "string" && find_attribute(tag, "key") == "concept:name") {
            event.activity = find_attribute(tag, "value");
            if (event.activity.empty()) {
                throw ParseError("event \"concept:name\" value is empty", tag.line, tag.column);
            }
            event_named = true;
        } else if (at_trace_level && tag.name == "string" && find_attribute(tag, "key") == "concept:name") {
            trace.case_id = find_attribute(tag, "value");
        } else if (at_log_level && tag.name == "trace" && tag.self_closing) {
            throw ParseError("trace without events", tag.line, tag.column);
        }
        // Anything else (extensions, classifiers, other attribute kinds) is
        // skipped, but still tracked for well-formedness.
        if (!tag.self_closing) open.push_back(tag.name);
    }

    if (!seen_root) throw ParseError("no root element", 1, 1);
    if (!open.empty()) {
        throw ParseError("unclosed element <" + open.back() + ">", root_line, root_col);
    }
    if (traces.empty()) {
        throw ParseError("empty log", root_line, root_col);
    }
    return make_event_log(std::move(log_name), std::move(traces));
}

void write_xes(std::ostream& out, const EventLog& log) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<log xes.version=\"1.0\">\n";
    for (const Trace& trace : log.traces) {
        out << "  <trace>\n";
        out << "    <string key=\"concept:name\" value=\"";
        xml_escape(out, trace.case_id);
        out << "\"/>\n";
        for (const Event& event : trace.events) {
            out << "    <event>\n";
            out << "      <string key=\"concept:name\" value=\"";
            xml_escape(out, event.activity);
            out << "\"/>\n";
            out << "    </event>\n";
        }
        out << "  </trace>\n";
    }
    out << "</log>\n";
}

}  // namespace traceclust
