#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "onto/composition.hpp"
#include "onto/datagen.hpp"
#include "onto/json_writer.hpp"
#include "onto/report.hpp"
#include "onto/serializer.hpp"
#include "onto/yaml_writer.hpp"

using namespace onto;

namespace {

const TokenizerModel& tiny_model() {
    static TokenizerModel model =
        load_model(testutil::source_path("tests/fixtures/tiny_ranks.tiktoken"));
    return model;
}

const TokenizerModel& full_model() {
    static TokenizerModel model = load_model(testutil::rank_file_path());
    return model;
}

} // namespace

TEST_CASE("classify_bytes validates provenance") {
    TaggedText good{"ab", "kv"};
    std::vector<ByteCategory> roles = classify_bytes(good);
    REQUIRE(roles.size() == 2);
    CHECK(roles[0] == ByteCategory::Key);
    CHECK(roles[1] == ByteCategory::Value);

    CHECK_THROWS_AS(classify_bytes(TaggedText{"abc", "k"}), UnknownProvenance);
    CHECK_THROWS_AS(classify_bytes(TaggedText{"ab", "kx"}), UnknownProvenance);
}

TEST_CASE("token attribution by byte majority") {
    // "abc" is one token in the tiny model; two value bytes beat one key.
    CompositionReport r =
        compose(tiny_model(), "t", TaggedText{"abc", "kvv"});
    CHECK(r.values == 1);
    CHECK(r.total == 1);
    CHECK(r.format == "t");
}

TEST_CASE("token attribution tie order") {
    // "ab" is one token; a key/value tie resolves to key.
    CompositionReport kv = compose(tiny_model(), "t", TaggedText{"ab", "kv"});
    CHECK(kv.keys == 1);
    CHECK(kv.values == 0);

    // "  " is one token; indent beats whitespace.
    CompositionReport sw = compose(tiny_model(), "t", TaggedText{"  ", "sw"});
    CHECK(sw.structure_indent == 1);
    CHECK(sw.whitespace == 0);

    // punctuation beats indent and whitespace but loses to key.
    CompositionReport pw = compose(tiny_model(), "t", TaggedText{"||", "pw"});
    CHECK(pw.punctuation == 1);
    CompositionReport kp = compose(tiny_model(), "t", TaggedText{"ab", "kp"});
    CHECK(kp.keys == 1);
}

TEST_CASE("category sums equal totals for every emitter") {
    std::vector<Record> records = generate({DatasetKind::Iot, 30, 1000});
    EntityBlock block = block_of("Telemetry", records);
    for (const TaggedText& tagged :
         {to_json_tagged(records), to_yaml_tagged(records),
          dumps_tagged(block)}) {
        CompositionReport r = compose(full_model(), "x", tagged);
        CHECK(r.sum() == r.total);
        CHECK(r.total == count_tokens(full_model(), tagged.text));
        CHECK(r.total > 0);
    }
}

TEST_CASE("ONTO key tokens do not grow with record count") {
    auto keys_at = [&](std::size_t n) {
        std::vector<Record> records = generate({DatasetKind::Iot, n, 1000});
        EntityBlock block = block_of("Telemetry", records);
        return compose(full_model(), "onto", dumps_tagged(block)).keys;
    };
    std::size_t k10 = keys_at(10);
    CHECK(k10 == keys_at(100));
    CHECK(k10 == keys_at(400));
}

TEST_CASE("JSON key tokens grow with record count") {
    auto keys_at = [&](std::size_t n) {
        std::vector<Record> records = generate({DatasetKind::Iot, n, 1000});
        return compose(full_model(), "json", to_json_tagged(records)).keys;
    };
    std::size_t k10 = keys_at(10);
    std::size_t k100 = keys_at(100);
    CHECK(k100 > k10 * 8);
    CHECK(k100 < k10 * 12);
}
