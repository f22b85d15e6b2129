#include <fstream>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include "helpers.hpp"
#include "onto/bpe.hpp"

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

std::vector<std::uint32_t> ids(const TokenizerModel& model,
                               std::string_view text) {
    std::vector<std::uint32_t> out;
    for (const TokenSpan& s : encode_with_spans(model, text))
        out.push_back(s.id);
    return out;
}

} // namespace

TEST_CASE("tiny model: hand-derived merges") {
    const TokenizerModel& m = tiny_model();
    using V = std::vector<std::uint32_t>;
    CHECK(ids(m, "hello") == V{261});
    CHECK(ids(m, "abc") == V{257});
    CHECK(ids(m, "abca") == V{257, 97});
    CHECK(ids(m, "hello world") == V{261, 266});
    CHECK(ids(m, "temp") == V{269});
    CHECK(ids(m, "123") == V{271});
    CHECK(ids(m, "    ") == V{274});
    CHECK(ids(m, "||") == V{272});
    CHECK(ids(m, "xyz") == V{120, 121, 122});
    CHECK(ids(m, "") == V{});
}

TEST_CASE("tiny model: merge order is lowest rank first") {
    // "hell" has pairs he(258) and ll(259): he merges first, then no pair
    // of { "he", "ll" } exists, so two tokens remain.
    CHECK(ids(tiny_model(), "hell") == std::vector<std::uint32_t>{258, 259});
}

TEST_CASE("spans partition the input bytes exactly") {
    const TokenizerModel& m = tiny_model();
    for (std::string_view text :
         {std::string_view("hello world, temp 123!"),
          std::string_view("   \n\t mixed\r\n123456 sensor-001|x^y"),
          std::string_view("\xf0\x9f\x98\x80 emoji"),
          std::string_view("a"), std::string_view("\n")}) {
        std::vector<TokenSpan> spans = encode_with_spans(m, text);
        std::size_t pos = 0;
        for (const TokenSpan& s : spans) {
            REQUIRE(s.begin == pos);
            REQUIRE(s.end > s.begin);
            pos = s.end;
        }
        REQUIRE(pos == text.size());
    }
}

TEST_CASE("model metadata") {
    const TokenizerModel& m = full_model();
    CHECK(m.name == "cl100k_base");
    CHECK(m.pattern == kCl100kPattern);
    CHECK(m.ranks.size() == 100256);
    // The frozen rank file; the golden fixture was generated against it.
    CHECK(m.rank_file_sha256 ==
          "223921b76ee99bde995b7ff738513eef100fb51d18c93597a113bcffe865b2a7");
}

TEST_CASE("golden fixture: 500 reference encodings match exactly") {
    const TokenizerModel& m = full_model();
    std::ifstream in(
        testutil::source_path("tests/fixtures/cl100k_golden.jsonl"));
    REQUIRE(in.good());
    std::string line;
    std::size_t cases = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line);
        std::string text = j.at("text").get<std::string>();
        std::vector<std::uint32_t> expected =
            j.at("ids").get<std::vector<std::uint32_t>>();
        INFO("case " << cases << ": " << text);
        REQUIRE(ids(m, text) == expected);
        ++cases;
    }
    CHECK(cases == 500);
}

TEST_CASE("count_tokens equals span count") {
    const TokenizerModel& m = full_model();
    std::string text = "Telemetry[3]:\n    device_id: sensor-001|sensor-002\n";
    CHECK(count_tokens(m, text) == encode_with_spans(m, text).size());
    CHECK(count_tokens(m, "") == 0);
}

TEST_CASE("malformed rank files") {
    auto write_and_load = [](const std::string& content) {
        std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR")
                                                             : "/tmp") +
                           "/onto_test_ranks.tiktoken";
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        out << content;
        out.close();
        return load_model(path);
    };

    CHECK_THROWS_AS(load_model("/nonexistent/path.tiktoken"),
                    MalformedRankFile);
    CHECK_THROWS_AS(write_and_load(""), MalformedRankFile);
    CHECK_THROWS_AS(write_and_load("not-base64!! 0\n"), MalformedRankFile);
    CHECK_THROWS_AS(write_and_load("YQ==\n"), MalformedRankFile);
    CHECK_THROWS_AS(write_and_load("YQ== abc\n"), MalformedRankFile);
    CHECK_THROWS_AS(write_and_load("YQ== 0\nYQ== 1\n"), MalformedRankFile);
    // A file with one valid entry still fails the byte-coverage invariant.
    CHECK_THROWS_AS(write_and_load("YQ== 0\n"), MalformedRankFile);

    try {
        write_and_load("YQ== 0\nYg==\n");
        FAIL("expected MalformedRankFile");
    } catch (const MalformedRankFile& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("pre-tokenization edge cases against known encodings") {
    const TokenizerModel& m = full_model();
    using V = std::vector<std::uint32_t>;
    // Spot checks covering each pattern alternative (also present in the
    // golden fixture; kept here readable for debugging regressions).
    CHECK(ids(m, "don't") == V{15357, 956});          // contraction split
    CHECK(ids(m, "hello world") == V{15339, 1917});   // space+letters
    CHECK(ids(m, "1234") == V{4513, 19});             // digits max 3 per piece
    CHECK(ids(m, "a  b") == V{64, 220, 293});         // \s+(?!\S) keeps one
    CHECK(ids(m, "a\n\nb") == V{64, 271, 65});        // newline run
}
