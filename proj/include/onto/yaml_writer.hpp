#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "onto/detail/lexeme.hpp"
#include "onto/value.hpp"
#include "onto/writer.hpp"

namespace onto {

namespace detail {

// Words YAML 1.1/1.2 readers may resolve to non-strings.
inline bool yaml_reserved_word(std::string_view s) {
    return s == "null" || s == "Null" || s == "NULL" || s == "~" ||
           s == "true" || s == "True" || s == "TRUE" || s == "false" ||
           s == "False" || s == "FALSE" || s == "yes" || s == "Yes" ||
           s == "YES" || s == "no" || s == "No" || s == "NO" || s == "on" ||
           s == "On" || s == "ON" || s == "off" || s == "Off" || s == "OFF";
}

inline bool yaml_needs_quotes(std::string_view s) {
    if (s.empty()) return true;
    if (s.front() == ' ' || s.back() == ' ') return true;
    static constexpr std::string_view leading_specials = "-?:[]{}&*!|>'\"%@`#,";
    if (leading_specials.find(s.front()) != std::string_view::npos) return true;
    if (is_int_lexeme(s) || is_float_lexeme(s) || yaml_reserved_word(s))
        return true;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '\n' || c == '\r' || c == '\t') return true;
        // ": " and " #" end a plain scalar; a bare ':' inside (timestamps)
        // does not.
        if (c == ':' && (i + 1 == s.size() || s[i + 1] == ' ')) return true;
        if (c == '#' && i > 0 && s[i - 1] == ' ') return true;
    }
    return false;
}

class YamlEmitter {
public:
    explicit YamlEmitter(TagWriter& w) : w_(w) {}

    void document(const std::vector<Record>& records) {
        if (records.empty()) {
            w_.put("[]", ByteCategory::Punctuation);
            w_.put('\n', ByteCategory::Whitespace);
            return;
        }
        for (const Record& rec : records) {
            w_.put('-', ByteCategory::Punctuation);
            if (rec.fields.empty()) {
                w_.put(' ', ByteCategory::Whitespace);
                w_.put("{}", ByteCategory::Punctuation);
                w_.put('\n', ByteCategory::Whitespace);
                continue;
            }
            w_.put(' ', ByteCategory::Whitespace);
            mapping(rec, 1);
        }
    }

private:
    // Emits a block mapping whose first key continues the current line;
    // later keys indent 2 spaces per depth level.
    void mapping(const Record& rec, std::size_t depth) {
        for (std::size_t i = 0; i < rec.fields.size(); ++i) {
            if (i > 0)
                for (std::size_t s = 0; s < depth * 2; ++s)
                    w_.put(' ', ByteCategory::StructureIndent);
            const auto& [key, val] = rec.fields[i];
            w_.put(key, ByteCategory::Key);
            w_.put(':', ByteCategory::Punctuation);
            if (val.is_record() && !val.as_record().fields.empty()) {
                w_.put('\n', ByteCategory::Whitespace);
                for (std::size_t s = 0; s < (depth + 1) * 2; ++s)
                    w_.put(' ', ByteCategory::StructureIndent);
                mapping(val.as_record(), depth + 1);
            } else {
                w_.put(' ', ByteCategory::Whitespace);
                scalar_line(val);
            }
        }
    }

    void scalar_line(const Value& v) {
        flow_value(v);
        w_.put('\n', ByteCategory::Whitespace);
    }

    void flow_value(const Value& v) {
        switch (v.kind()) {
            case ValueKind::Null:
                w_.put("null", ByteCategory::Value);
                return;
            case ValueKind::Bool:
                w_.put(v.as_bool() ? "true" : "false", ByteCategory::Value);
                return;
            case ValueKind::Int:
                w_.put(format_int(v.as_int()), ByteCategory::Value);
                return;
            case ValueKind::Float:
                w_.put(format_float(v.as_float()), ByteCategory::Value);
                return;
            case ValueKind::Str: {
                const std::string& s = v.as_str();
                for (char c : s)
                    if (c == '\n' || c == '\r')
                        throw UnrepresentableValue(
                            "string contains a line break; this emitter has "
                            "no multi-line scalar form");
                if (!yaml_needs_quotes(s)) {
                    w_.put(s, ByteCategory::Value);
                    return;
                }
                w_.put('\'', ByteCategory::Punctuation);
                for (char c : s) {
                    if (c == '\'') w_.put('\'', ByteCategory::Value);
                    w_.put(c, ByteCategory::Value);
                }
                w_.put('\'', ByteCategory::Punctuation);
                return;
            }
            case ValueKind::Array: {
                const Array& a = v.as_array();
                w_.put('[', ByteCategory::Punctuation);
                for (std::size_t i = 0; i < a.size(); ++i) {
                    if (i > 0) {
                        w_.put(',', ByteCategory::Punctuation);
                        w_.put(' ', ByteCategory::Whitespace);
                    }
                    flow_value(a[i]);
                }
                w_.put(']', ByteCategory::Punctuation);
                return;
            }
            case ValueKind::Record:
                w_.put("{}", ByteCategory::Punctuation);
                return;
        }
    }

    TagWriter& w_;
};

} // namespace detail

// Minimal deterministic block-style YAML: a sequence of mappings with
// 2-space nesting, flow arrays, and single-quoting only where a plain
// scalar would be misread.
inline TaggedText to_yaml_tagged(const std::vector<Record>& records) {
    TagWriter w;
    detail::YamlEmitter(w).document(records);
    return w.take();
}

inline std::string to_yaml(const std::vector<Record>& records) {
    return to_yaml_tagged(records).text;
}

} // namespace onto
