#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "onto/bpe.hpp"
#include "onto/errors.hpp"
#include "onto/writer.hpp"

namespace onto {

// Table-3-style decomposition of one document's token count.
struct CompositionReport {
    std::size_t keys = 0;
    std::size_t punctuation = 0;
    std::size_t values = 0;
    std::size_t structure_indent = 0;
    std::size_t whitespace = 0;
    std::size_t total = 0;
    std::string format;

    std::size_t sum() const {
        return keys + punctuation + values + structure_indent + whitespace;
    }
};

// Validates emitter-provided byte roles and exposes them as categories.
// Only text carrying role metadata can be analyzed; heuristic re-labeling
// of arbitrary text is deliberately unsupported.
inline std::vector<ByteCategory> classify_bytes(const TaggedText& tagged) {
    if (!tagged.consistent())
        throw UnknownProvenance(
            "text lacks per-byte emitter roles; composition analysis only "
            "works on documents emitted by this library");
    std::vector<ByteCategory> out;
    out.reserve(tagged.roles.size());
    for (char c : tagged.roles) {
        switch (c) {
            case 'k': out.push_back(ByteCategory::Key); break;
            case 'p': out.push_back(ByteCategory::Punctuation); break;
            case 'v': out.push_back(ByteCategory::Value); break;
            case 's': out.push_back(ByteCategory::StructureIndent); break;
            case 'w': out.push_back(ByteCategory::Whitespace); break;
            default:
                throw UnknownProvenance(std::string("unknown byte role '") + c +
                                        "'");
        }
    }
    return out;
}

// Assigns each token to the category owning most of its bytes; ties break
// key > punctuation > structure_indent > whitespace > value.
inline CompositionReport compose(const TokenizerModel& model,
                                 const std::string& format,
                                 const TaggedText& tagged) {
    std::vector<ByteCategory> roles = classify_bytes(tagged);
    CompositionReport report;
    report.format = format;

    static constexpr ByteCategory tie_order[] = {
        ByteCategory::Key, ByteCategory::Punctuation,
        ByteCategory::StructureIndent, ByteCategory::Whitespace,
        ByteCategory::Value};

    for (const TokenSpan& span : encode_with_spans(model, tagged.text)) {
        std::array<std::size_t, 5> counts{};
        auto slot = [](ByteCategory c) -> std::size_t {
            switch (c) {
                case ByteCategory::Key: return 0;
                case ByteCategory::Punctuation: return 1;
                case ByteCategory::StructureIndent: return 2;
                case ByteCategory::Whitespace: return 3;
                case ByteCategory::Value: return 4;
            }
            return 4;
        };
        for (std::size_t i = span.begin; i < span.end; ++i)
            ++counts[slot(roles[i])];
        ByteCategory winner = ByteCategory::Value;
        std::size_t winner_count = 0;
        for (ByteCategory c : tie_order) {
            std::size_t n = counts[slot(c)];
            if (n > winner_count) {
                winner_count = n;
                winner = c;
            }
        }
        switch (winner) {
            case ByteCategory::Key: ++report.keys; break;
            case ByteCategory::Punctuation: ++report.punctuation; break;
            case ByteCategory::StructureIndent: ++report.structure_indent; break;
            case ByteCategory::Whitespace: ++report.whitespace; break;
            case ByteCategory::Value: ++report.values; break;
        }
        ++report.total;
    }
    return report;
}

} // namespace onto
