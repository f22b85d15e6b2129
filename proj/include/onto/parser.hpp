#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "onto/detail/lexeme.hpp"
#include "onto/errors.hpp"
#include "onto/value.hpp"

namespace onto {

namespace detail {

// A scanned element: decoded content plus whether backticks forced string
// interpretation.
struct Element {
    std::string content;
    bool quoted = false;
};

class SegmentScanner {
public:
    SegmentScanner(std::string_view payload, std::size_t line, std::size_t col_base)
        : payload_(payload), line_(line), col_base_(col_base) {}

    // Scans one element starting at pos: either a backtick span (which must
    // open at the element start and end at a delimiter) or a literal run up
    // to the next `|`/`^`. Backticks later in an unquoted run are literal
    // characters.
    Element element(std::size_t& pos) const {
        Element el;
        if (pos < payload_.size() && payload_[pos] == '`') {
            std::size_t open = pos;
            std::size_t p = pos + 1;
            bool closed = false;
            while (p < payload_.size()) {
                if (payload_[p] != '`') {
                    el.content += payload_[p++];
                    continue;
                }
                if (p + 1 < payload_.size() && payload_[p + 1] == '`') {
                    el.content += '`';
                    p += 2;
                    continue;
                }
                ++p;
                closed = true;
                break;
            }
            if (!closed)
                throw ParseError(ParseErrorKind::UnterminatedBacktick, line_,
                                 col_base_ + open,
                                 "opening backtick with no closing backtick on "
                                 "the same line");
            if (p < payload_.size() && payload_[p] != '|' && payload_[p] != '^')
                throw ParseError(ParseErrorKind::StrayContent, line_,
                                 col_base_ + p,
                                 "content after closing backtick");
            el.quoted = true;
            pos = p;
            return el;
        }
        std::size_t start = pos;
        while (pos < payload_.size() && payload_[pos] != '|' && payload_[pos] != '^')
            ++pos;
        el.content = std::string(payload_.substr(start, pos - start));
        if (!el.content.empty() &&
            (el.content.front() == ' ' || el.content.back() == ' '))
            throw ParseError(ParseErrorKind::StrayContent, line_,
                             col_base_ + start,
                             "value has a leading or trailing space; "
                             "backtick-quote it");
        return el;
    }

private:
    std::string_view payload_;
    std::size_t line_;
    std::size_t col_base_;
};

inline Value value_of_element(const Element& el) {
    if (el.quoted) return Value(el.content);
    std::string_view s = el.content;
    if (s.empty()) return Value();
    if (s == "true") return Value(true);
    if (s == "false") return Value(false);
    if (is_int_lexeme(s)) {
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec == std::errc{} && p == s.data() + s.size()) return Value(v);
        return Value(el.content); // out of 64-bit range: keep the text
    }
    if (is_float_lexeme(s)) {
        double v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec == std::errc{} && p == s.data() + s.size()) return Value(v);
        return Value(el.content); // magnitude outside double range
    }
    return Value(el.content);
}

inline std::vector<Value> split_payload(std::string_view payload, std::size_t line,
                                        std::size_t col_base) {
    SegmentScanner scan(payload, line, col_base);
    std::vector<Value> out;
    std::size_t pos = 0;
    while (true) {
        Element first = scan.element(pos);
        if (pos < payload.size() && payload[pos] == '^') {
            Array arr;
            arr.push_back(value_of_element(first));
            while (pos < payload.size() && payload[pos] == '^') {
                ++pos;
                arr.push_back(value_of_element(scan.element(pos)));
            }
            out.push_back(Value(std::move(arr)));
        } else {
            out.push_back(value_of_element(first));
        }
        if (pos == payload.size()) break;
        ++pos; // consume '|'; a trailing pipe yields a trailing empty segment
        if (pos == payload.size()) {
            out.push_back(Value());
            break;
        }
    }
    return out;
}

struct SourceLine {
    std::size_t number = 0; // 1-based
    std::size_t indent = 0; // leading spaces
    std::string_view content; // after the indent
    bool blank = false;
};

class Parser {
public:
    explicit Parser(std::string_view source) { normalize(source); }

    OntoDocument run() {
        OntoDocument doc;
        while (i_ < lines_.size()) {
            const SourceLine& line = lines_[i_];
            if (line.blank) {
                ++i_;
                continue;
            }
            if (line.indent != 0)
                throw ParseError(ParseErrorKind::StrayContent, line.number,
                                 line.indent + 1,
                                 "indented line outside an entity block");
            EntityBlock block = parse_header(line);
            for (const EntityBlock& prev : doc.entities)
                if (prev.name == block.name)
                    throw ParseError(ParseErrorKind::DuplicateField, line.number,
                                     1, "duplicate entity name \"" + block.name +
                                            "\"");
            std::size_t first_line = line.number;
            ++i_;
            block.fields = parse_fields(1, block.count, "");
            if (block.fields.empty() && block.count > 0)
                throw ParseError(ParseErrorKind::EmptyGroup, first_line, 1,
                                 "entity \"" + block.name + "\" declares " +
                                     std::to_string(block.count) +
                                     " records but has no fields");
            std::size_t last_line = i_ > 0 ? lines_[i_ - 1].number : first_line;
            doc.entities.push_back(std::move(block));
            doc.source_spans.emplace_back(first_line, last_line);
        }
        return doc;
    }

private:
    void normalize(std::string_view source) {
        text_.reserve(source.size());
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < source.size(); ++i) {
            char c = source[i];
            if (c == '\r') {
                if (i + 1 < source.size() && source[i + 1] == '\n') {
                    ++i;
                    c = '\n';
                } else {
                    throw ParseError(ParseErrorKind::StrayContent, line, col,
                                     "carriage return without line feed");
                }
            }
            text_ += c;
            if (c == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        split_lines();
    }

    void split_lines() {
        std::string_view text = text_;
        std::size_t number = 1;
        while (!text.empty()) {
            std::size_t nl = text.find('\n');
            std::string_view raw =
                nl == std::string_view::npos ? text : text.substr(0, nl);
            add_line(number++, raw);
            if (nl == std::string_view::npos) break;
            text.remove_prefix(nl + 1);
        }
    }

    void add_line(std::size_t number, std::string_view raw) {
        SourceLine line;
        line.number = number;
        std::size_t i = 0;
        while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) {
            if (raw[i] == '\t')
                throw ParseError(ParseErrorKind::TabCharacter, number, i + 1,
                                 "tab in leading whitespace; indentation is "
                                 "spaces only");
            ++i;
        }
        if (i == raw.size()) {
            if (i > 0)
                throw ParseError(ParseErrorKind::StrayContent, number, 1,
                                 "whitespace-only line");
            line.blank = true;
            lines_.push_back(line);
            return;
        }
        if (i % kIndentWidth != 0)
            throw ParseError(ParseErrorKind::BadIndentation, number, i + 1,
                             "indentation of " + std::to_string(i) +
                                 " spaces is not a multiple of 4");
        line.indent = i;
        line.content = raw.substr(i);
        lines_.push_back(line);
    }

    static std::size_t identifier_end(std::string_view s) {
        if (s.empty()) return 0;
        char c0 = s[0];
        if (!(std::isalpha(static_cast<unsigned char>(c0)) || c0 == '_')) return 0;
        std::size_t j = 1;
        while (j < s.size()) {
            char c = s[j];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
                c == '.' || c == '-')
                ++j;
            else
                break;
        }
        return j;
    }

    EntityBlock parse_header(const SourceLine& line) const {
        std::string_view s = line.content;
        auto fail = [&](std::size_t col, const std::string& detail) -> ParseError {
            return ParseError(ParseErrorKind::BadEntityHeader, line.number, col,
                              detail + " (expected Name[N]:)");
        };
        std::size_t j = identifier_end(s);
        if (j == 0) throw fail(1, "top-level line does not start with a name");
        if (j >= s.size() || s[j] != '[')
            throw fail(j + 1, "expected '[' after entity name");
        std::size_t d = j + 1;
        while (d < s.size() && s[d] >= '0' && s[d] <= '9') ++d;
        if (d == j + 1) throw fail(d + 1, "expected record count digits");
        std::size_t count = 0;
        auto [p, ec] = std::from_chars(s.data() + j + 1, s.data() + d, count);
        if (ec != std::errc{} || p != s.data() + d)
            throw fail(j + 2, "record count out of range");
        if (d >= s.size() || s[d] != ']') throw fail(d + 1, "expected ']'");
        if (d + 1 >= s.size() || s[d + 1] != ':')
            throw fail(d + 2, "expected ':' after ']'");
        if (d + 2 != s.size())
            throw fail(d + 3, "unexpected content after entity header");
        EntityBlock block;
        block.name = std::string(s.substr(0, j));
        block.count = count;
        return block;
    }

    std::vector<FieldNode> parse_fields(std::size_t level, std::size_t count,
                                        const std::string& path_prefix) {
        std::vector<FieldNode> fields;
        while (i_ < lines_.size()) {
            const SourceLine& line = lines_[i_];
            if (line.blank) break;
            std::size_t depth = line.indent / kIndentWidth;
            if (depth < level) break;
            if (depth > level) {
                if (fields.empty())
                    throw ParseError(ParseErrorKind::BadIndentation, line.number,
                                     line.indent + 1,
                                     "indent jumps more than one level deeper");
                throw ParseError(ParseErrorKind::StrayContent, line.number,
                                 line.indent + 1,
                                 "content nested under a leaf field");
            }

            std::string_view s = line.content;
            std::size_t j = identifier_end(s);
            if (j == 0)
                throw ParseError(ParseErrorKind::BadFieldName, line.number,
                                 line.indent + 1,
                                 "field name must start with a letter or "
                                 "underscore");
            if (j >= s.size() || s[j] != ':')
                throw ParseError(ParseErrorKind::BadFieldName, line.number,
                                 line.indent + j + 1,
                                 "expected ':' after field name");
            std::string name(s.substr(0, j));
            for (const FieldNode& sib : fields)
                if (sib.name == name)
                    throw ParseError(ParseErrorKind::DuplicateField, line.number,
                                     line.indent + 1,
                                     "duplicate field name \"" + name + "\"");
            std::string path = detail::join_path(path_prefix, name);

            std::string_view rest = s.substr(j + 1);
            std::size_t sep = 0;
            while (sep < rest.size() && rest[sep] == ' ') ++sep;
            std::string_view payload = rest.substr(sep);
            std::size_t payload_col = line.indent + j + 1 + sep + 1;

            if (payload.empty()) {
                bool deeper_follows =
                    i_ + 1 < lines_.size() && !lines_[i_ + 1].blank &&
                    lines_[i_ + 1].indent / kIndentWidth > level;
                if (deeper_follows) {
                    if (level + 1 > kMaxDepth)
                        throw ParseError(ParseErrorKind::BadIndentation,
                                         lines_[i_ + 1].number,
                                         lines_[i_ + 1].indent + 1,
                                         "nesting depth exceeds 8");
                    ++i_;
                    fields.push_back(
                        FieldNode::group(name, parse_fields(level + 1, count, path)));
                    continue;
                }
                if (count != 0)
                    throw ParseError(
                        ParseErrorKind::CountMismatch, line.number, payload_col,
                        "field \"" + path + "\" has 0 values, entity declares " +
                            std::to_string(count));
                fields.push_back(FieldNode::leaf(name, {}));
                ++i_;
                continue;
            }

            std::vector<Value> values =
                split_payload(payload, line.number, payload_col);
            if (values.size() != count)
                throw ParseError(
                    ParseErrorKind::CountMismatch, line.number, payload_col,
                    "field \"" + path + "\" has " + std::to_string(values.size()) +
                        " values, entity declares " + std::to_string(count));
            fields.push_back(FieldNode::leaf(name, std::move(values)));
            ++i_;
        }
        return fields;
    }

    std::string text_;
    std::vector<SourceLine> lines_;
    std::size_t i_ = 0;
};

} // namespace detail

// Parses ONTO text into a document. Throws ParseError with a 1-based line
// and byte column on the first violation.
inline OntoDocument loads(std::string_view source) {
    return detail::Parser(source).run();
}

// Infers one delimiter-free segment's value: empty → Null, backticked →
// Str, true/false → Bool, then integer and float lexemes, else Str.
inline Value infer_scalar(std::string_view raw) {
    detail::SegmentScanner scan(raw, 1, 1);
    std::size_t pos = 0;
    detail::Element el = scan.element(pos);
    if (pos != raw.size())
        throw ParseError(ParseErrorKind::StrayContent, 1, pos + 1,
                         "delimiter inside scalar segment");
    return detail::value_of_element(el);
}

// Splits one leaf payload into values: `|` separates records, `^` makes
// caret arrays, backtick spans shield both delimiters.
inline std::vector<Value> split_values(std::string_view payload) {
    return detail::split_payload(payload, 1, 1);
}

} // namespace onto
