#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace onto {

// One kind per distinct grammar violation; fixtures in the test suite
// exercise each of these individually.
enum class ParseErrorKind {
    BadIndentation,
    BadEntityHeader,
    BadFieldName,
    CountMismatch,
    UnterminatedBacktick,
    TabCharacter,
    DuplicateField,
    EmptyGroup,
    StrayContent,
};

inline const char* to_string(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::BadIndentation: return "BadIndentation";
        case ParseErrorKind::BadEntityHeader: return "BadEntityHeader";
        case ParseErrorKind::BadFieldName: return "BadFieldName";
        case ParseErrorKind::CountMismatch: return "CountMismatch";
        case ParseErrorKind::UnterminatedBacktick: return "UnterminatedBacktick";
        case ParseErrorKind::TabCharacter: return "TabCharacter";
        case ParseErrorKind::DuplicateField: return "DuplicateField";
        case ParseErrorKind::EmptyGroup: return "EmptyGroup";
        case ParseErrorKind::StrayContent: return "StrayContent";
    }
    return "ParseError";
}

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, std::size_t line, std::size_t column,
               const std::string& detail)
        : std::runtime_error(std::string(to_string(kind)) + " at line " +
                             std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + detail),
          kind_(kind), line_(line), column_(column) {}

    ParseErrorKind kind() const { return kind_; }
    // 1-based; column counts bytes within the line.
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    ParseErrorKind kind_;
    std::size_t line_;
    std::size_t column_;
};

// A value exists in memory but has no textual form (non-finite float,
// single-element array, string containing a line break, ...).
class UnrepresentableValue : public std::runtime_error {
public:
    explicit UnrepresentableValue(const std::string& detail)
        : std::runtime_error("unrepresentable value: " + detail) {}
};

// Record vectors feeding one entity must share a field tree; thrown with
// the first record that deviates and the path of the offending field.
class HeterogeneousRecords : public std::runtime_error {
public:
    HeterogeneousRecords(std::size_t record_index, const std::string& field_path)
        : std::runtime_error("heterogeneous records: record " +
                             std::to_string(record_index) +
                             " deviates at field \"" + field_path + "\""),
          record_index_(record_index), field_path_(field_path) {}

    std::size_t record_index() const { return record_index_; }
    const std::string& field_path() const { return field_path_; }

private:
    std::size_t record_index_;
    std::string field_path_;
};

class MalformedRankFile : public std::runtime_error {
public:
    MalformedRankFile(std::size_t line, const std::string& detail)
        : std::runtime_error("malformed rank file, line " + std::to_string(line) +
                             ": " + detail),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Composition analysis only works on text carrying emitter byte-role tags.
class UnknownProvenance : public std::runtime_error {
public:
    explicit UnknownProvenance(const std::string& detail)
        : std::runtime_error("unknown provenance: " + detail) {}
};

} // namespace onto
