#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "onto/errors.hpp"

namespace onto {

class Value;

// Arrays hold scalars only (no nesting); that invariant is enforced where
// arrays are consumed (records_of, dumps), not at construction, so tests
// can build malformed values and watch them get rejected.
using Array = std::vector<Value>;

// Field order is significant and preserved end-to-end, hence a vector of
// pairs instead of a map.
struct Record {
    std::vector<std::pair<std::string, Value>> fields;

    Record() = default;
    Record(std::initializer_list<std::pair<std::string, Value>> init);

    void set(std::string name, Value v);
    const Value* find(const std::string& name) const;
    std::size_t size() const { return fields.size(); }

    bool operator==(const Record&) const = default;
};

enum class ValueKind { Null, Bool, Int, Float, Str, Array, Record };

class Value {
public:
    Value() : v_(std::monostate{}) {}
    Value(std::nullptr_t) : v_(std::monostate{}) {}
    Value(bool b) : v_(b) {}
    Value(int i) : v_(static_cast<std::int64_t>(i)) {}
    Value(long i) : v_(static_cast<std::int64_t>(i)) {}
    Value(long long i) : v_(static_cast<std::int64_t>(i)) {}
    Value(double d) : v_(d) {
        if (!std::isfinite(d)) throw UnrepresentableValue("non-finite float");
    }
    Value(const char* s) : v_(std::string(s)) {}
    Value(std::string s) : v_(std::move(s)) {}
    Value(Array a) : v_(std::move(a)) {}
    Value(Record r) : v_(std::move(r)) {}

    ValueKind kind() const { return static_cast<ValueKind>(v_.index()); }

    bool is_null() const { return kind() == ValueKind::Null; }
    bool is_record() const { return kind() == ValueKind::Record; }
    bool is_array() const { return kind() == ValueKind::Array; }

    bool as_bool() const { return std::get<bool>(v_); }
    std::int64_t as_int() const { return std::get<std::int64_t>(v_); }
    double as_float() const { return std::get<double>(v_); }
    const std::string& as_str() const { return std::get<std::string>(v_); }
    const Array& as_array() const { return std::get<Array>(v_); }
    const Record& as_record() const { return std::get<Record>(v_); }

    bool operator==(const Value&) const = default;

private:
    std::variant<std::monostate, bool, std::int64_t, double, std::string,
                 Array, Record>
        v_;
};

inline Record::Record(std::initializer_list<std::pair<std::string, Value>> init)
    : fields(init.begin(), init.end()) {}

inline void Record::set(std::string name, Value v) {
    fields.emplace_back(std::move(name), std::move(v));
}

inline const Value* Record::find(const std::string& name) const {
    for (const auto& [k, v] : fields)
        if (k == name) return &v;
    return nullptr;
}

inline bool is_identifier(std::string_view name) {
    if (name.empty()) return false;
    char c0 = name[0];
    if (!(std::isalpha(static_cast<unsigned char>(c0)) || c0 == '_')) return false;
    for (char c : name.substr(1)) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
              c == '.' || c == '-'))
            return false;
    }
    return true;
}

// One named column (Leaf, one value per record) or a named sub-tree (Group).
struct FieldNode {
    enum class Kind { Leaf, Group };

    std::string name;
    Kind kind = Kind::Leaf;
    std::vector<Value> values;    // Leaf only
    std::vector<FieldNode> children; // Group only

    static FieldNode leaf(std::string name, std::vector<Value> values) {
        FieldNode n;
        n.name = std::move(name);
        n.kind = Kind::Leaf;
        n.values = std::move(values);
        return n;
    }

    static FieldNode group(std::string name, std::vector<FieldNode> children) {
        FieldNode n;
        n.name = std::move(name);
        n.kind = Kind::Group;
        n.children = std::move(children);
        return n;
    }

    bool operator==(const FieldNode&) const = default;
};

struct EntityBlock {
    std::string name;
    std::size_t count = 0;
    std::vector<FieldNode> fields;

    bool operator==(const EntityBlock&) const = default;
};

struct OntoDocument {
    std::vector<EntityBlock> entities;
    // Populated by the parser: (first line, last line) of each entity,
    // 1-based inclusive. Empty for documents built in memory.
    std::vector<std::pair<std::size_t, std::size_t>> source_spans;

    bool operator==(const OntoDocument& other) const {
        return entities == other.entities;
    }
};

namespace detail {

inline constexpr std::size_t kIndentWidth = 4;
inline constexpr std::size_t kMaxDepth = 8;

inline void check_array_usable(const Array& a) {
    if (a.size() < 2)
        throw UnrepresentableValue(
            "arrays need at least two elements (a one-element array has no "
            "textual form; a bare value is a scalar)");
    for (const Value& e : a)
        if (e.is_array() || e.is_record())
            throw UnrepresentableValue("array elements must be scalars");
}

inline std::string join_path(const std::string& prefix, const std::string& name) {
    return prefix.empty() ? name : prefix + "." + name;
}

} // namespace detail

// Pivots a column-oriented block back into one Record per row.
inline std::vector<Record> records_of(const EntityBlock& block) {
    struct Walk {
        std::size_t index;
        Record operator()(const std::vector<FieldNode>& fields) const {
            Record rec;
            for (const FieldNode& f : fields) {
                if (f.kind == FieldNode::Kind::Group) {
                    rec.set(f.name, Value((*this)(f.children)));
                } else {
                    const Value& v = f.values.at(index);
                    if (v.is_array()) detail::check_array_usable(v.as_array());
                    rec.set(f.name, v);
                }
            }
            return rec;
        }
    };
    std::vector<Record> out;
    out.reserve(block.count);
    for (std::size_t i = 0; i < block.count; ++i)
        out.push_back(Walk{i}(block.fields));
    return out;
}

namespace detail {

inline std::vector<FieldNode> pivot_records(const std::vector<const Record*>& recs,
                                            const std::string& path_prefix) {
    const Record& first = *recs[0];
    for (std::size_t j = 0; j < first.size(); ++j) {
        const std::string& name = first.fields[j].first;
        if (!is_identifier(name))
            throw UnrepresentableValue("field name \"" + name +
                                       "\" is not a valid identifier");
        for (std::size_t k = 0; k < j; ++k)
            if (first.fields[k].first == name)
                throw UnrepresentableValue("duplicate field name \"" + name + "\"");
    }
    // Every record must list the same field names in the same order.
    for (std::size_t i = 1; i < recs.size(); ++i) {
        const Record& r = *recs[i];
        std::size_t limit = std::min(first.size(), r.size());
        for (std::size_t j = 0; j < limit; ++j)
            if (first.fields[j].first != r.fields[j].first)
                throw HeterogeneousRecords(
                    i, join_path(path_prefix, r.fields[j].first));
        if (r.size() != first.size()) {
            const auto& longer = r.size() > first.size() ? r : first;
            throw HeterogeneousRecords(
                i, join_path(path_prefix, longer.fields[limit].first));
        }
    }

    std::vector<FieldNode> fields;
    fields.reserve(first.size());
    for (std::size_t j = 0; j < first.size(); ++j) {
        const std::string& name = first.fields[j].first;
        bool group = first.fields[j].second.is_record();
        if (group) {
            std::vector<const Record*> subs;
            subs.reserve(recs.size());
            for (std::size_t i = 0; i < recs.size(); ++i) {
                const Value& v = recs[i]->fields[j].second;
                if (!v.is_record())
                    throw HeterogeneousRecords(i, join_path(path_prefix, name));
                subs.push_back(&v.as_record());
            }
            fields.push_back(FieldNode::group(
                name, pivot_records(subs, join_path(path_prefix, name))));
        } else {
            std::vector<Value> column;
            column.reserve(recs.size());
            for (std::size_t i = 0; i < recs.size(); ++i) {
                const Value& v = recs[i]->fields[j].second;
                if (v.is_record())
                    throw HeterogeneousRecords(i, join_path(path_prefix, name));
                column.push_back(v);
            }
            fields.push_back(FieldNode::leaf(name, std::move(column)));
        }
    }
    return fields;
}

} // namespace detail

// Inverse of records_of; rejects records that do not share one field tree.
inline EntityBlock block_of(const std::string& entity_name,
                            const std::vector<Record>& records) {
    if (!is_identifier(entity_name))
        throw UnrepresentableValue("entity name \"" + entity_name +
                                   "\" is not a valid identifier");
    EntityBlock block;
    block.name = entity_name;
    block.count = records.size();
    if (records.empty()) return block;

    std::vector<const Record*> ptrs;
    ptrs.reserve(records.size());
    for (const Record& r : records) ptrs.push_back(&r);
    block.fields = detail::pivot_records(ptrs, "");
    return block;
}

} // namespace onto
