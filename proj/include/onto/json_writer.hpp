#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "onto/detail/lexeme.hpp"
#include "onto/value.hpp"
#include "onto/writer.hpp"

namespace onto {

enum class JsonStyle { Compact, Spaced, Indented };

struct JsonOptions {
    JsonStyle style = JsonStyle::Spaced;
    std::size_t indent_width = 2;
};

namespace detail {

class JsonEmitter {
public:
    JsonEmitter(TagWriter& w, JsonOptions opt) : w_(w), opt_(opt) {}

    void document(const std::vector<Record>& records) {
        w_.put('[', ByteCategory::Punctuation);
        for (std::size_t i = 0; i < records.size(); ++i) {
            if (i > 0) comma();
            element_break(1);
            record(records[i], 1);
        }
        if (!records.empty()) element_break(0);
        w_.put(']', ByteCategory::Punctuation);
    }

    void single(const Record& rec) { record(rec, 0); }

private:
    void comma() {
        w_.put(',', ByteCategory::Punctuation);
        if (opt_.style == JsonStyle::Spaced)
            w_.put(' ', ByteCategory::Whitespace);
    }

    // In indented style every element starts on its own line.
    void element_break(std::size_t depth) {
        if (opt_.style != JsonStyle::Indented) return;
        w_.put('\n', ByteCategory::Whitespace);
        for (std::size_t i = 0; i < depth * opt_.indent_width; ++i)
            w_.put(' ', ByteCategory::StructureIndent);
    }

    void record(const Record& rec, std::size_t depth) {
        w_.put('{', ByteCategory::Punctuation);
        for (std::size_t i = 0; i < rec.fields.size(); ++i) {
            if (i > 0) comma();
            element_break(depth + 1);
            quoted(rec.fields[i].first, ByteCategory::Key, ByteCategory::Key);
            w_.put(':', ByteCategory::Punctuation);
            if (opt_.style != JsonStyle::Compact)
                w_.put(' ', ByteCategory::Whitespace);
            value(rec.fields[i].second, depth + 1);
        }
        if (!rec.fields.empty()) element_break(depth);
        w_.put('}', ByteCategory::Punctuation);
    }

    void value(const Value& v, std::size_t depth) {
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
            case ValueKind::Str:
                quoted(v.as_str(), ByteCategory::Value, ByteCategory::Punctuation);
                return;
            case ValueKind::Array: {
                const Array& a = v.as_array();
                w_.put('[', ByteCategory::Punctuation);
                for (std::size_t i = 0; i < a.size(); ++i) {
                    if (i > 0) comma();
                    element_break(depth + 1);
                    value(a[i], depth + 1);
                }
                if (!a.empty()) element_break(depth);
                w_.put(']', ByteCategory::Punctuation);
                return;
            }
            case ValueKind::Record:
                record(v.as_record(), depth);
                return;
        }
    }

    // Key quotes count as key bytes, value-string quotes as punctuation.
    void quoted(std::string_view s, ByteCategory body, ByteCategory quote) {
        w_.put('"', quote);
        for (char c : s) {
            switch (c) {
                case '"': w_.put("\\\"", body); break;
                case '\\': w_.put("\\\\", body); break;
                case '\b': w_.put("\\b", body); break;
                case '\f': w_.put("\\f", body); break;
                case '\n': w_.put("\\n", body); break;
                case '\r': w_.put("\\r", body); break;
                case '\t': w_.put("\\t", body); break;
                default:
                    if (static_cast<unsigned char>(c) < 0x20) {
                        char buf[8];
                        std::snprintf(buf, sizeof buf, "\\u%04x", c);
                        w_.put(buf, body);
                    } else {
                        w_.put(c, body);
                    }
            }
        }
        w_.put('"', quote);
    }

    TagWriter& w_;
    JsonOptions opt_;
};

} // namespace detail

// RFC 8259 JSON over the same value model: `compact` has no whitespace,
// `spaced` is one line with ", "/": " separators, `indented` is the usual
// pretty form. Key order is preserved.
inline TaggedText to_json_tagged(const std::vector<Record>& records,
                                 JsonOptions opt = {}) {
    TagWriter w;
    detail::JsonEmitter(w, opt).document(records);
    return w.take();
}

inline std::string to_json(const std::vector<Record>& records,
                           JsonOptions opt = {}) {
    return to_json_tagged(records, opt).text;
}

// One object instead of an array of them (report lines, config echoes).
inline std::string to_json_object(const Record& rec, JsonOptions opt = {}) {
    TagWriter w;
    detail::JsonEmitter emitter(w, opt);
    emitter.single(rec);
    return w.take().text;
}

inline JsonStyle json_style_of(std::string_view name) {
    if (name == "compact") return JsonStyle::Compact;
    if (name == "spaced") return JsonStyle::Spaced;
    if (name == "indented") return JsonStyle::Indented;
    throw std::invalid_argument("unknown JSON style: " + std::string(name) +
                                " (expected compact|spaced|indented)");
}

} // namespace onto
