// The `onto` command-line tool: format conversion and validation plus the
// token-measurement workflows (bench, crossover, analyze, prompt-pack).

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "onto/onto.hpp"
#include "onto/warm_prompt.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitInvalidInput = 2;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open " + path);
    out << content;
    if (!out) throw std::ios_base::failure("write failed: " + path);
}

std::string resolve_rank_file(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("ONTO_RANK_FILE"); env && *env)
        return env;
    const std::string fallback = "data/cl100k_base.tiktoken";
    if (std::filesystem::exists(fallback)) return fallback;
    throw std::runtime_error(
        "no rank file: pass --rank-file, set ONTO_RANK_FILE, or place "
        "cl100k_base.tiktoken under data/");
}

onto::Value value_from_json(const nlohmann::ordered_json& j);

onto::Record record_from_json(const nlohmann::ordered_json& j) {
    onto::Record rec;
    for (const auto& [key, val] : j.items())
        rec.set(key, value_from_json(val));
    return rec;
}

onto::Value value_from_json(const nlohmann::ordered_json& j) {
    using nlohmann::ordered_json;
    switch (j.type()) {
        case ordered_json::value_t::null: return onto::Value();
        case ordered_json::value_t::boolean: return onto::Value(j.get<bool>());
        case ordered_json::value_t::number_integer:
            return onto::Value(j.get<long long>());
        case ordered_json::value_t::number_unsigned: {
            auto u = j.get<unsigned long long>();
            if (u <= 0x7fffffffffffffffull)
                return onto::Value(static_cast<long long>(u));
            return onto::Value(static_cast<double>(u));
        }
        case ordered_json::value_t::number_float:
            return onto::Value(j.get<double>());
        case ordered_json::value_t::string:
            return onto::Value(j.get<std::string>());
        case ordered_json::value_t::array: {
            onto::Array arr;
            for (const auto& el : j) arr.push_back(value_from_json(el));
            return onto::Value(std::move(arr));
        }
        case ordered_json::value_t::object:
            return onto::Value(record_from_json(j));
        default:
            throw std::runtime_error("unsupported JSON value");
    }
}

std::vector<onto::Record> records_from_json_text(const std::string& text) {
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(text);
    if (!j.is_array())
        throw std::runtime_error("JSON input must be an array of objects");
    std::vector<onto::Record> records;
    records.reserve(j.size());
    for (const auto& el : j) {
        if (!el.is_object())
            throw std::runtime_error("JSON input must be an array of objects");
        records.push_back(record_from_json(el));
    }
    return records;
}

struct ConvertArgs {
    std::string input = "-";
    std::string from = "json";
    std::string to = "onto";
    std::string entity = "Data";
    std::string json_style = "spaced";
    std::string output;
};

int cmd_convert(const ConvertArgs& args) {
    std::string text = read_input(args.input);
    std::vector<onto::Record> records;
    std::string entity = args.entity;
    if (args.from == "json") {
        records = records_from_json_text(text);
    } else {
        onto::OntoDocument doc = onto::loads(text);
        if (doc.entities.empty())
            throw std::runtime_error("input contains no entity blocks");
        const onto::EntityBlock* block = &doc.entities.front();
        if (!args.entity.empty() && args.entity != "Data") {
            block = nullptr;
            for (const auto& e : doc.entities)
                if (e.name == args.entity) block = &e;
            if (!block)
                throw std::runtime_error("no entity named \"" + args.entity +
                                         "\" in input");
        }
        entity = block->name;
        records = onto::records_of(*block);
    }

    std::string out;
    if (args.to == "onto") {
        out = onto::dumps_records(entity, records);
    } else {
        onto::JsonOptions opt;
        opt.style = onto::json_style_of(args.json_style);
        out = onto::to_json(records, opt) + "\n";
    }
    write_output(args.output, out);
    return kExitOk;
}

int cmd_validate(const std::string& input) {
    std::string text = read_input(input);
    onto::OntoDocument doc = onto::loads(text);
    std::size_t leaves = 0;
    struct Count {
        static std::size_t leaves(const std::vector<onto::FieldNode>& fs) {
            std::size_t n = 0;
            for (const auto& f : fs)
                n += f.kind == onto::FieldNode::Kind::Group ? leaves(f.children)
                                                            : 1;
            return n;
        }
    };
    for (const auto& e : doc.entities) leaves += Count::leaves(e.fields);
    std::cout << "OK: " << doc.entities.size() << " entity block(s), " << leaves
              << " leaf field(s)";
    for (const auto& e : doc.entities)
        std::cout << "; " << e.name << "[" << e.count << "]";
    std::cout << "\n";
    return kExitOk;
}

struct GenerateArgs {
    std::string kind = "iot";
    std::size_t n = 100;
    std::uint64_t seed = 1000;
    std::string format = "json";
    std::string json_style = "spaced";
    std::string output;
};

int cmd_generate(const GenerateArgs& args) {
    onto::DatasetSpec spec{onto::dataset_kind_of(args.kind), args.n, args.seed};
    std::vector<onto::Record> records = onto::generate(spec);
    std::string out;
    if (args.format == "json") {
        onto::JsonOptions opt;
        opt.style = onto::json_style_of(args.json_style);
        out = onto::to_json(records, opt) + "\n";
    } else if (args.format == "onto") {
        out = onto::dumps_records(onto::entity_name_of(spec.kind), records);
    } else if (args.format == "yaml") {
        out = onto::to_yaml(records);
    } else {
        throw std::invalid_argument("unknown format: " + args.format +
                                    " (expected json|onto|yaml)");
    }
    write_output(args.output, out);
    return kExitOk;
}

struct BenchArgs {
    std::vector<std::string> kinds = {"iot", "metrics", "logs"};
    std::vector<std::size_t> scales = {100, 500, 1000};
    std::size_t runs = 5;
    std::uint64_t base_seed = 1000;
    std::string rank_file;
    std::string json_style = "spaced";
    std::string output;
    std::size_t workers = 0;
};

int cmd_bench(const BenchArgs& args) {
    onto::TokenizerModel model = onto::load_model(resolve_rank_file(args.rank_file));
    onto::JsonOptions json_opt;
    json_opt.style = onto::json_style_of(args.json_style);

    std::vector<onto::DatasetSpec> specs;
    for (const std::string& kind : args.kinds)
        for (std::size_t n : args.scales)
            for (std::size_t run = 0; run < args.runs; ++run)
                specs.push_back(
                    {onto::dataset_kind_of(kind), n, args.base_seed + run});

    // Cells are independent; a small worker pool keeps memory bounded.
    std::size_t workers = args.workers ? args.workers
                                       : std::max(1u, std::thread::hardware_concurrency());
    std::vector<onto::TokenReport> reports(specs.size());
    std::atomic<std::size_t> cursor{0};
    std::vector<std::future<void>> pool;
    for (std::size_t w = 0; w < std::min(workers, specs.size()); ++w)
        pool.push_back(std::async(std::launch::async, [&] {
            while (true) {
                std::size_t i = cursor.fetch_add(1);
                if (i >= specs.size()) return;
                reports[i] = onto::run_cell(model, specs[i], json_opt);
            }
        }));
    for (auto& f : pool) f.get();

    std::string stream;
    for (const auto& report : reports) stream += onto::report_jsonl_line(report) + "\n";
    std::ostream& table = args.output.empty() ? std::cerr : std::cout;
    write_output(args.output, stream);

    // Mean reduction per (kind, N) cell, then the per-kind scale drift.
    table << "dataset   N      runs  json-tokens  yaml-tokens  onto-tokens  "
             "onto-reduction\n";
    std::map<std::string, std::map<std::size_t, double>> mean_reduction;
    for (const std::string& kind : args.kinds) {
        for (std::size_t n : args.scales) {
            double json_sum = 0, yaml_sum = 0, onto_sum = 0, red_sum = 0;
            std::size_t count = 0;
            for (const auto& r : reports) {
                if (to_string(r.kind) != kind || r.n_records != n) continue;
                json_sum += static_cast<double>(r.tokens("json"));
                yaml_sum += static_cast<double>(r.tokens("yaml"));
                onto_sum += static_cast<double>(r.tokens("onto"));
                red_sum += r.reduction_vs_json("onto");
                ++count;
            }
            double denom = static_cast<double>(count);
            mean_reduction[kind][n] = 100.0 * red_sum / denom;
            char line[160];
            std::snprintf(line, sizeof line,
                          "%-9s %-6zu %-5zu %-12.1f %-12.1f %-12.1f %.2f%%\n",
                          kind.c_str(), n, count, json_sum / denom,
                          yaml_sum / denom, onto_sum / denom,
                          mean_reduction[kind][n]);
            table << line;
        }
    }
    if (args.scales.size() > 1) {
        std::size_t n_lo = *std::min_element(args.scales.begin(), args.scales.end());
        std::size_t n_hi = *std::max_element(args.scales.begin(), args.scales.end());
        for (const std::string& kind : args.kinds) {
            double drift =
                mean_reduction[kind][n_hi] - mean_reduction[kind][n_lo];
            char line[120];
            std::snprintf(line, sizeof line,
                          "scale drift %-8s N=%zu -> N=%zu: %+.2f pp\n",
                          kind.c_str(), n_lo, n_hi, drift);
            table << line;
        }
    }
    return kExitOk;
}

struct CrossoverArgs {
    std::string kind = "iot";
    std::uint64_t seed = 1000;
    std::string rank_file;
    std::string json_style = "spaced";
};

int cmd_crossover(const CrossoverArgs& args) {
    onto::TokenizerModel model = onto::load_model(resolve_rank_file(args.rank_file));
    onto::JsonOptions json_opt;
    json_opt.style = onto::json_style_of(args.json_style);
    onto::DatasetKind kind = onto::dataset_kind_of(args.kind);

    std::size_t crossover = 0;
    std::cout << "N     json-tokens  onto-tokens  onto/json\n";
    for (std::size_t n = 1; n <= 10; ++n) {
        std::vector<onto::Record> records = onto::generate({kind, n, args.seed});
        std::size_t j = onto::count_tokens(model, onto::to_json(records, json_opt));
        std::size_t o = onto::count_tokens(
            model,
            onto::dumps_records(onto::entity_name_of(kind), records));
        char line[120];
        std::snprintf(line, sizeof line, "%-5zu %-12zu %-12zu %.3f%s\n", n, j, o,
                      static_cast<double>(o) / static_cast<double>(j),
                      o < j && crossover == 0 ? "  <-- crossover" : "");
        std::cout << line;
        if (o < j && crossover == 0) crossover = n;
    }
    if (crossover == 0) {
        std::cout << "no crossover within N <= 10\n";
        return kExitRuntime;
    }
    std::cout << "crossover at N = " << crossover << "\n";
    return kExitOk;
}

struct AnalyzeArgs {
    std::string kind = "iot";
    std::size_t n = 1000;
    std::uint64_t seed = 1000;
    std::string rank_file;
    std::string json_style = "spaced";
    std::string output;
};

int cmd_analyze(const AnalyzeArgs& args) {
    onto::TokenizerModel model = onto::load_model(resolve_rank_file(args.rank_file));
    onto::JsonOptions json_opt;
    json_opt.style = onto::json_style_of(args.json_style);
    onto::DatasetSpec spec{onto::dataset_kind_of(args.kind), args.n, args.seed};
    onto::TokenReport report = onto::run_cell(model, spec, json_opt);

    std::ostringstream out;
    out << "token composition: " << args.kind << " N=" << args.n
        << " seed=" << args.seed << "\n";
    out << "format  keys      punct     values    indent    space     total\n";
    for (const auto& [name, c] : report.formats) {
        char line[160];
        std::snprintf(line, sizeof line,
                      "%-7s %-9zu %-9zu %-9zu %-9zu %-9zu %zu\n", name.c_str(),
                      c.keys, c.punctuation, c.values, c.structure_indent,
                      c.whitespace, c.total);
        out << line;
    }
    write_output(args.output, out.str());
    return kExitOk;
}

struct PromptPackArgs {
    std::string kind = "iot";
    std::size_t n = 100;
    std::uint64_t seed = 1000;
    bool warm = false;
    std::string json_style = "spaced";
    std::string out_dir = ".";
};

int cmd_prompt_pack(const PromptPackArgs& args) {
    onto::DatasetSpec spec{onto::dataset_kind_of(args.kind), args.n, args.seed};
    std::vector<onto::Record> records = onto::generate(spec);
    onto::JsonOptions json_opt;
    json_opt.style = onto::json_style_of(args.json_style);

    std::filesystem::create_directories(args.out_dir);
    auto pack = [&](const std::string& format, const std::string& body,
                    bool warm_applies) {
        std::string text;
        if (args.warm && warm_applies) {
            text += onto::kWarmPrompt;
            text += "\n";
        }
        text += body;
        if (text.empty() || text.back() != '\n') text += "\n";
        text += "\n";
        text += onto::kTaskLine;
        text += "\n";
        std::string path = args.out_dir + "/prompt_" + format + ".txt";
        write_output(path, text);
        std::cout << path << "\n";
    };
    // The warm prompt explains ONTO; the baselines are sent bare.
    pack("onto",
         onto::dumps_records(onto::entity_name_of(spec.kind), records), true);
    pack("json", onto::to_json(records, json_opt), false);
    pack("yaml", onto::to_yaml(records), false);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ONTO columnar format tools and token benchmarks"};
    app.require_subcommand(1);

    ConvertArgs convert_args;
    auto* convert = app.add_subcommand(
        "convert", "Convert between JSON arrays and ONTO documents");
    convert->add_option("input", convert_args.input,
                        "input file, or - for stdin");
    convert->add_option("--from", convert_args.from, "input format")
        ->check(CLI::IsMember({"json", "onto"}));
    convert->add_option("--to", convert_args.to, "output format")
        ->check(CLI::IsMember({"json", "onto"}));
    convert->add_option("--entity", convert_args.entity,
                        "entity name (json input) or selector (onto input)");
    convert->add_option("--json-style", convert_args.json_style,
                        "compact|spaced|indented");
    convert->add_option("-o,--output", convert_args.output, "output path");

    std::string validate_input = "-";
    auto* validate =
        app.add_subcommand("validate", "Parse ONTO text and report violations");
    validate->add_option("input", validate_input, "input file, or - for stdin");

    GenerateArgs generate_args;
    auto* generate = app.add_subcommand(
        "generate", "Emit a deterministic synthetic dataset");
    generate->add_option("--kind", generate_args.kind, "iot|metrics|logs");
    generate->add_option("-n,--records", generate_args.n, "record count");
    generate->add_option("--seed", generate_args.seed, "PRNG seed");
    generate->add_option("--format", generate_args.format, "json|onto|yaml");
    generate->add_option("--json-style", generate_args.json_style,
                         "compact|spaced|indented");
    generate->add_option("-o,--output", generate_args.output, "output path");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand(
        "bench", "Token counts per format across kinds, scales, and runs");
    bench->add_option("--kinds", bench_args.kinds, "subset of iot,metrics,logs")
        ->delimiter(',');
    bench->add_option("--scales", bench_args.scales, "record counts to test")
        ->delimiter(',');
    bench->add_option("--runs", bench_args.runs, "seeds per cell");
    bench->add_option("--seed", bench_args.base_seed,
                      "base seed; run r uses seed+r");
    bench->add_option("--rank-file", bench_args.rank_file,
                      "cl100k_base rank file (default $ONTO_RANK_FILE)");
    bench->add_option("--json-style", bench_args.json_style,
                      "compact|spaced|indented");
    bench->add_option("--workers", bench_args.workers,
                      "parallel cells (default: hardware)");
    bench->add_option("-o,--output", bench_args.output,
                      "JSON-lines report path (default stdout)");

    CrossoverArgs crossover_args;
    auto* crossover = app.add_subcommand(
        "crossover", "Find the smallest N where ONTO beats JSON");
    crossover->add_option("--kind", crossover_args.kind, "iot|metrics|logs");
    crossover->add_option("--seed", crossover_args.seed, "PRNG seed");
    crossover->add_option("--rank-file", crossover_args.rank_file, "rank file");
    crossover->add_option("--json-style", crossover_args.json_style,
                          "compact|spaced|indented");

    AnalyzeArgs analyze_args;
    auto* analyze = app.add_subcommand(
        "analyze", "Decompose token counts into five categories");
    analyze->add_option("--kind", analyze_args.kind, "iot|metrics|logs");
    analyze->add_option("-n,--records", analyze_args.n, "record count");
    analyze->add_option("--seed", analyze_args.seed, "PRNG seed");
    analyze->add_option("--rank-file", analyze_args.rank_file, "rank file");
    analyze->add_option("--json-style", analyze_args.json_style,
                        "compact|spaced|indented");
    analyze->add_option("-o,--output", analyze_args.output, "output path");

    PromptPackArgs prompt_args;
    auto* prompt = app.add_subcommand(
        "prompt-pack", "Write ready-to-send prompt files per format");
    prompt->add_option("--kind", prompt_args.kind, "iot|metrics|logs");
    prompt->add_option("-n,--records", prompt_args.n, "record count");
    prompt->add_option("--seed", prompt_args.seed, "PRNG seed");
    prompt->add_flag("--warm", prompt_args.warm,
                     "prepend the ONTO-explainer system prompt");
    prompt->add_option("--json-style", prompt_args.json_style,
                       "compact|spaced|indented");
    prompt->add_option("-o,--out-dir", prompt_args.out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        if (*convert) return cmd_convert(convert_args);
        if (*validate) return cmd_validate(validate_input);
        if (*generate) return cmd_generate(generate_args);
        if (*bench) return cmd_bench(bench_args);
        if (*crossover) return cmd_crossover(crossover_args);
        if (*analyze) return cmd_analyze(analyze_args);
        if (*prompt) return cmd_prompt_pack(prompt_args);
    } catch (const onto::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const onto::HeterogeneousRecords& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const onto::UnrepresentableValue& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const onto::MalformedRankFile& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: invalid JSON input: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitOk;
}
