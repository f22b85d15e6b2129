#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "onto/detail/lexeme.hpp"
#include "onto/errors.hpp"
#include "onto/value.hpp"
#include "onto/writer.hpp"

namespace onto {

namespace detail {

inline bool str_needs_backticks(std::string_view s) {
    if (s.empty()) return true;
    if (s.front() == ' ' || s.back() == ' ') return true;
    for (char c : s)
        if (c == '|' || c == '^' || c == '`') return true;
    // Anything that would re-infer as a non-string must be shielded, even
    // numerics outside the 64-bit range.
    return is_bool_lexeme(s) || is_int_lexeme(s) || is_float_lexeme(s);
}

inline void check_str_emittable(std::string_view s) {
    for (char c : s)
        if (c == '\n' || c == '\r')
            throw UnrepresentableValue(
                "string contains a line break; the format is line-oriented");
}

inline void emit_scalar(TagWriter& w, const Value& v) {
    switch (v.kind()) {
        case ValueKind::Null:
            return; // empty segment
        case ValueKind::Bool:
            w.put(v.as_bool() ? "true" : "false", ByteCategory::Value);
            return;
        case ValueKind::Int:
            w.put(format_int(v.as_int()), ByteCategory::Value);
            return;
        case ValueKind::Float:
            w.put(format_float(v.as_float()), ByteCategory::Value);
            return;
        case ValueKind::Str: {
            const std::string& s = v.as_str();
            check_str_emittable(s);
            if (!str_needs_backticks(s)) {
                w.put(s, ByteCategory::Value);
                return;
            }
            w.put('`', ByteCategory::Punctuation);
            for (char c : s) {
                if (c == '`') w.put('`', ByteCategory::Value);
                w.put(c, ByteCategory::Value);
            }
            w.put('`', ByteCategory::Punctuation);
            return;
        }
        case ValueKind::Array:
        case ValueKind::Record:
            throw UnrepresentableValue("nested value where a scalar is required");
    }
}

inline void emit_segment(TagWriter& w, const Value& v) {
    if (v.is_record())
        throw UnrepresentableValue("record value inside a leaf; use a group");
    if (v.is_array()) {
        const Array& a = v.as_array();
        check_array_usable(a);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i > 0) w.put('^', ByteCategory::Punctuation);
            emit_scalar(w, a[i]);
        }
        return;
    }
    emit_scalar(w, v);
}

inline void emit_fields(TagWriter& w, const std::vector<FieldNode>& fields,
                        std::size_t depth, std::size_t count) {
    if (depth > kMaxDepth)
        throw UnrepresentableValue("nesting depth exceeds 8");
    for (std::size_t i = 0; i < fields.size(); ++i) {
        const FieldNode& f = fields[i];
        if (!is_identifier(f.name))
            throw UnrepresentableValue("field name \"" + f.name +
                                       "\" is not a valid identifier");
        for (std::size_t k = 0; k < i; ++k)
            if (fields[k].name == f.name)
                throw UnrepresentableValue("duplicate field name \"" + f.name +
                                           "\"");
        for (std::size_t s = 0; s < depth; ++s)
            w.put("    ", ByteCategory::StructureIndent);
        w.put(f.name, ByteCategory::Key);
        w.put(':', ByteCategory::Punctuation);
        if (f.kind == FieldNode::Kind::Group) {
            if (f.children.empty())
                throw UnrepresentableValue("group \"" + f.name +
                                           "\" has no children");
            w.put('\n', ByteCategory::Whitespace);
            emit_fields(w, f.children, depth + 1, count);
            continue;
        }
        if (f.values.size() != count)
            throw UnrepresentableValue(
                "leaf \"" + f.name + "\" has " + std::to_string(f.values.size()) +
                " values, entity declares " + std::to_string(count));
        if (count == 0) {
            w.put('\n', ByteCategory::Whitespace);
            continue;
        }
        if (count == 1 && f.values[0].is_null())
            throw UnrepresentableValue(
                "leaf \"" + f.name +
                "\" holds a single null; an empty payload under [1] has no "
                "textual form");
        w.put(' ', ByteCategory::Whitespace);
        for (std::size_t v = 0; v < count; ++v) {
            if (v > 0) w.put('|', ByteCategory::Punctuation);
            emit_segment(w, f.values[v]);
        }
        w.put('\n', ByteCategory::Whitespace);
    }
}

inline void emit_entity(TagWriter& w, const EntityBlock& block) {
    if (!is_identifier(block.name))
        throw UnrepresentableValue("entity name \"" + block.name +
                                   "\" is not a valid identifier");
    if (block.count > 0 && block.fields.empty())
        throw UnrepresentableValue(
            "entity \"" + block.name +
            "\" declares records but has no fields; field-less records have "
            "no textual form");
    w.put(block.name, ByteCategory::Key);
    w.put('[', ByteCategory::Punctuation);
    w.put(format_int(static_cast<std::int64_t>(block.count)),
          ByteCategory::Value);
    w.put(']', ByteCategory::Punctuation);
    w.put(':', ByteCategory::Punctuation);
    w.put('\n', ByteCategory::Whitespace);
    emit_fields(w, block.fields, 1, block.count);
}

} // namespace detail

// Canonical ONTO text with per-byte role tags; loads(dumps(doc)) == doc and
// dumps is byte-deterministic.
inline TaggedText dumps_tagged(const OntoDocument& doc) {
    TagWriter w;
    for (std::size_t i = 0; i < doc.entities.size(); ++i) {
        for (std::size_t k = 0; k < i; ++k)
            if (doc.entities[k].name == doc.entities[i].name)
                throw UnrepresentableValue("duplicate entity name \"" +
                                           doc.entities[i].name + "\"");
        detail::emit_entity(w, doc.entities[i]);
    }
    return w.take();
}

inline std::string dumps(const OntoDocument& doc) { return dumps_tagged(doc).text; }

inline TaggedText dumps_tagged(const EntityBlock& block) {
    TagWriter w;
    detail::emit_entity(w, block);
    return w.take();
}

inline std::string dumps(const EntityBlock& block) { return dumps_tagged(block).text; }

// block_of then dumps: the row-oriented convenience entry point.
inline std::string dumps_records(const std::string& entity_name,
                                 const std::vector<Record>& records) {
    return dumps(block_of(entity_name, records));
}

inline TaggedText dumps_records_tagged(const std::string& entity_name,
                                       const std::vector<Record>& records) {
    return dumps_tagged(block_of(entity_name, records));
}

} // namespace onto
