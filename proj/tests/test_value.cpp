#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "onto/datagen.hpp"
#include "onto/value.hpp"

using namespace onto;

TEST_CASE("value kinds and accessors") {
    CHECK(Value().kind() == ValueKind::Null);
    CHECK(Value(nullptr).is_null());
    CHECK(Value(true).as_bool());
    CHECK(Value(42).as_int() == 42);
    CHECK(Value(-7LL).as_int() == -7);
    CHECK(Value(2.5).as_float() == 2.5);
    CHECK(Value("x").as_str() == "x");
    CHECK(Value(Array{Value(1), Value(2)}).is_array());
    CHECK(Value(Record{{"a", Value(1)}}).is_record());
}

TEST_CASE("non-finite floats are rejected at construction") {
    CHECK_THROWS_AS(Value(std::numeric_limits<double>::infinity()),
                    UnrepresentableValue);
    CHECK_THROWS_AS(Value(std::numeric_limits<double>::quiet_NaN()),
                    UnrepresentableValue);
}

TEST_CASE("value equality distinguishes kinds") {
    CHECK(Value(1) == Value(1LL));
    CHECK(Value(1) != Value(1.0));
    CHECK(Value(true) != Value("true"));
    CHECK(Value() == Value(nullptr));
}

TEST_CASE("record preserves insertion order and finds by name") {
    Record r{{"b", Value(1)}, {"a", Value(2)}};
    r.set("c", Value(3));
    REQUIRE(r.size() == 3);
    CHECK(r.fields[0].first == "b");
    CHECK(r.fields[2].first == "c");
    REQUIRE(r.find("a") != nullptr);
    CHECK(r.find("a")->as_int() == 2);
    CHECK(r.find("missing") == nullptr);
}

TEST_CASE("identifier shape") {
    CHECK(is_identifier("device_id"));
    CHECK(is_identifier("_x"));
    CHECK(is_identifier("a.b-c"));
    CHECK(is_identifier("Telemetry"));
    CHECK_FALSE(is_identifier(""));
    CHECK_FALSE(is_identifier("9a"));
    CHECK_FALSE(is_identifier("-a"));
    CHECK_FALSE(is_identifier(".a"));
    CHECK_FALSE(is_identifier("a b"));
    CHECK_FALSE(is_identifier("a|b"));
}

TEST_CASE("records_of pivots the canonical telemetry block") {
    std::vector<Record> records = records_of(testutil::telemetry_block());
    REQUIRE(records.size() == 3);
    const Record& r0 = records[0];
    CHECK(r0.find("device_id")->as_str() == "sensor-001");
    CHECK(r0.find("temperature")->as_float() == 23.5);
    CHECK(r0.find("humidity")->as_float() == 45.2);
    const Record& loc = r0.find("location")->as_record();
    CHECK(loc.find("lat")->as_float() == 37.77);
    CHECK(loc.find("lon")->as_float() == -122.41);
    CHECK(records[2].find("device_id")->as_str() == "sensor-003");
}

TEST_CASE("records_of on an empty block yields no records") {
    EntityBlock block;
    block.name = "E";
    block.count = 0;
    block.fields = {FieldNode::leaf("f", {})};
    CHECK(records_of(block).empty());
}

TEST_CASE("records_of passes nulls through") {
    EntityBlock block;
    block.name = "E";
    block.count = 3;
    block.fields = {FieldNode::leaf("f", {Value(1), Value(), Value(3)})};
    std::vector<Record> records = records_of(block);
    REQUIRE(records.size() == 3);
    CHECK(records[1].find("f")->is_null());
}

TEST_CASE("records_of rejects unusable arrays") {
    EntityBlock block;
    block.name = "E";
    block.count = 1;
    block.fields = {FieldNode::leaf("f", {Value(Array{Value(1)})})};
    CHECK_THROWS_AS(records_of(block), UnrepresentableValue);

    block.fields = {FieldNode::leaf(
        "f", {Value(Array{Value(1), Value(Array{Value(2), Value(3)})})})};
    CHECK_THROWS_AS(records_of(block), UnrepresentableValue);
}

TEST_CASE("block_of rebuilds the canonical telemetry block") {
    EntityBlock expected = testutil::telemetry_block();
    std::vector<Record> records = records_of(expected);
    CHECK(block_of("Telemetry", records) == expected);
}

TEST_CASE("block_of on an empty record list") {
    EntityBlock block = block_of("E", {});
    CHECK(block.count == 0);
    CHECK(block.fields.empty());
}

TEST_CASE("block_of reports the first heterogeneous record") {
    Record a{{"a", Value(1)}};
    Record ab{{"a", Value(1)}, {"b", Value(2)}};
    try {
        block_of("E", {a, ab});
        FAIL("expected HeterogeneousRecords");
    } catch (const HeterogeneousRecords& e) {
        CHECK(e.record_index() == 1);
        CHECK(e.field_path() == "b");
    }
}

TEST_CASE("block_of reports nested deviations with a dotted path") {
    Record a{{"location", Value(Record{{"lat", Value(1)}})}};
    Record b{{"location", Value(Record{{"lon", Value(2)}})}};
    try {
        block_of("E", {a, b});
        FAIL("expected HeterogeneousRecords");
    } catch (const HeterogeneousRecords& e) {
        CHECK(e.record_index() == 1);
        CHECK(e.field_path() == "location.lon");
    }
}

TEST_CASE("block_of rejects a record/scalar mix in one field") {
    Record a{{"f", Value(Record{{"x", Value(1)}})}};
    Record b{{"f", Value(2)}};
    CHECK_THROWS_AS(block_of("E", {a, b}), HeterogeneousRecords);
    CHECK_THROWS_AS(block_of("E", {b, a}), HeterogeneousRecords);
}

TEST_CASE("block_of treats null as schema-compatible with scalars") {
    Record a{{"f", Value(1)}};
    Record b{{"f", Value()}};
    EntityBlock block = block_of("E", {a, b});
    REQUIRE(block.fields.size() == 1);
    CHECK(block.fields[0].values[1].is_null());
}

TEST_CASE("block_of validates names") {
    CHECK_THROWS_AS(block_of("9bad", {}), UnrepresentableValue);
    Record bad_field{{"not a name", Value(1)}};
    CHECK_THROWS_AS(block_of("E", {bad_field}), UnrepresentableValue);
    Record dup;
    dup.set("f", Value(1));
    dup.set("f", Value(2));
    CHECK_THROWS_AS(block_of("E", {dup}), UnrepresentableValue);
}

namespace {

// Random homogeneous datasets for the pivot round-trip property: depth <= 2,
// N <= 200, all scalar kinds plus arrays and nulls.
Value random_scalar(onto::detail::SplitMix64& rng, bool allow_null) {
    switch (rng.next() % (allow_null ? 5 : 4)) {
        case 0: return Value(static_cast<long long>(rng.uniform_int(-1000000, 1000000)));
        case 1: return Value(rng.uniform_real(-500.0, 500.0, 3));
        case 2: return Value(rng.next() % 2 == 0);
        case 3: {
            static const char* words[] = {"alpha", "beta|pipe", "ca^ret",
                                          "back`tick", " padded ", "true",
                                          "12345", "3.14", "", "9999999999999999999"};
            return Value(words[rng.next() % 10]);
        }
        default: return Value();
    }
}

std::vector<Record> random_records(onto::detail::SplitMix64& rng) {
    std::size_t n = 1 + rng.next() % 200;
    std::size_t n_fields = 1 + rng.next() % 6;
    // The field shapes are drawn once so every record shares one tree;
    // scalars and arrays may still vary record-to-record within a leaf.
    enum class Shape { Scalar, MaybeArray, Group };
    std::vector<Shape> shapes;
    for (std::size_t f = 0; f < n_fields; ++f)
        shapes.push_back(static_cast<Shape>(rng.next() % 3));

    std::vector<Record> out;
    for (std::size_t i = 0; i < n; ++i) {
        Record rec;
        for (std::size_t f = 0; f < n_fields; ++f) {
            std::string name = "f" + std::to_string(f);
            switch (shapes[f]) {
                case Shape::Scalar:
                    rec.set(name, random_scalar(rng, n > 1));
                    break;
                case Shape::MaybeArray:
                    if (rng.next() % 2 == 0) {
                        Array arr;
                        std::size_t len = 2 + rng.next() % 3;
                        for (std::size_t k = 0; k < len; ++k)
                            arr.push_back(random_scalar(rng, true));
                        rec.set(name, Value(std::move(arr)));
                    } else {
                        rec.set(name, random_scalar(rng, n > 1));
                    }
                    break;
                case Shape::Group: {
                    Record sub;
                    sub.set("x", random_scalar(rng, n > 1));
                    sub.set("y", random_scalar(rng, n > 1));
                    rec.set(name, Value(std::move(sub)));
                    break;
                }
            }
        }
        out.push_back(std::move(rec));
    }
    return out;
}

} // namespace

TEST_CASE("pivot round trip over random homogeneous datasets") {
    onto::detail::SplitMix64 rng(20240101);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Record> records = random_records(rng);
        EntityBlock block = block_of("E", records);
        CHECK(records_of(block) == records);
    }
}

TEST_CASE("leaf-length law after block_of") {
    struct Walk {
        static void check(const std::vector<FieldNode>& fields, std::size_t count) {
            for (const FieldNode& f : fields) {
                if (f.kind == FieldNode::Kind::Group)
                    check(f.children, count);
                else
                    REQUIRE(f.values.size() == count);
            }
        }
    };
    onto::detail::SplitMix64 rng(20240102);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Record> records = random_records(rng);
        EntityBlock block = block_of("E", records);
        REQUIRE(block.count == records.size());
        Walk::check(block.fields, block.count);
    }
}
