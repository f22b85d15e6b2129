#pragma once

#include <string>
#include <utility>
#include <vector>

#include "onto/bpe.hpp"
#include "onto/composition.hpp"
#include "onto/datagen.hpp"
#include "onto/json_writer.hpp"
#include "onto/serializer.hpp"
#include "onto/value.hpp"
#include "onto/version.hpp"
#include "onto/yaml_writer.hpp"

namespace onto {

// One benchmark cell: a dataset measured across the three formats.
// Reductions are always derived from the stored counts, never stored.
struct TokenReport {
    DatasetKind kind = DatasetKind::Iot;
    std::size_t n_records = 0;
    std::uint64_t seed = 0;
    std::string json_style;
    std::vector<std::pair<std::string, CompositionReport>> formats;
    std::string rank_file_sha256;
    std::string tool_version;

    const CompositionReport* find(const std::string& format) const {
        for (const auto& [name, comp] : formats)
            if (name == format) return &comp;
        return nullptr;
    }

    std::size_t tokens(const std::string& format) const {
        const CompositionReport* comp = find(format);
        if (!comp) throw std::invalid_argument("no such format: " + format);
        return comp->total;
    }

    // 1 − tokens(format) / tokens(json)
    double reduction_vs_json(const std::string& format) const {
        double json_tokens = static_cast<double>(tokens("json"));
        return 1.0 - static_cast<double>(tokens(format)) / json_tokens;
    }
};

// Generates, serializes into every format, counts and decomposes tokens.
inline TokenReport run_cell(const TokenizerModel& model, const DatasetSpec& spec,
                            JsonOptions json_opt = {}) {
    std::vector<Record> records = generate(spec);
    EntityBlock block = block_of(entity_name_of(spec.kind), records);

    TokenReport report;
    report.kind = spec.kind;
    report.n_records = spec.n_records;
    report.seed = spec.seed;
    report.json_style = json_opt.style == JsonStyle::Compact    ? "compact"
                        : json_opt.style == JsonStyle::Indented ? "indented"
                                                                : "spaced";
    report.rank_file_sha256 = model.rank_file_sha256;
    report.tool_version = kVersion;
    report.formats.emplace_back(
        "json", compose(model, "json", to_json_tagged(records, json_opt)));
    report.formats.emplace_back("yaml",
                                compose(model, "yaml", to_yaml_tagged(records)));
    report.formats.emplace_back("onto",
                                compose(model, "onto", dumps_tagged(block)));
    return report;
}

inline Record composition_record(const CompositionReport& comp) {
    Record r;
    r.set("keys", static_cast<std::int64_t>(comp.keys));
    r.set("punctuation", static_cast<std::int64_t>(comp.punctuation));
    r.set("values", static_cast<std::int64_t>(comp.values));
    r.set("structure_indent", static_cast<std::int64_t>(comp.structure_indent));
    r.set("whitespace", static_cast<std::int64_t>(comp.whitespace));
    r.set("total", static_cast<std::int64_t>(comp.total));
    return r;
}

inline Record report_record(const TokenReport& report) {
    Record r;
    r.set("dataset", std::string(to_string(report.kind)));
    r.set("n_records", static_cast<std::int64_t>(report.n_records));
    r.set("seed", static_cast<std::int64_t>(report.seed));
    r.set("json_style", report.json_style);

    Record tokens, reductions, compositions;
    for (const auto& [name, comp] : report.formats) {
        tokens.set(name, static_cast<std::int64_t>(comp.total));
        if (name != "json") reductions.set(name, report.reduction_vs_json(name));
        compositions.set(name, Value(composition_record(comp)));
    }
    r.set("tokens", Value(std::move(tokens)));
    r.set("reduction_vs_json", Value(std::move(reductions)));
    r.set("composition", Value(std::move(compositions)));
    r.set("rank_file_sha256", report.rank_file_sha256);
    r.set("tool_version", report.tool_version);
    return r;
}

// One self-describing JSON line per benchmark cell.
inline std::string report_jsonl_line(const TokenReport& report) {
    return to_json_object(report_record(report));
}

} // namespace onto
