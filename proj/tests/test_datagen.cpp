#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "onto/datagen.hpp"
#include "onto/serializer.hpp"

using namespace onto;

TEST_CASE("splitmix64 reference values") {
    // First outputs for seed 1234567, from the published splitmix64
    // reference implementation.
    detail::SplitMix64 rng(1234567);
    CHECK(rng.next() == 6457827717110365317ull);
    CHECK(rng.next() == 3203168211198807973ull);
    CHECK(rng.next() == 9817491932198370423ull);
}

TEST_CASE("generation is deterministic per spec") {
    for (auto kind : {DatasetKind::Iot, DatasetKind::Metrics, DatasetKind::Logs}) {
        DatasetSpec spec{kind, 20, 1000};
        CHECK(generate(spec) == generate(spec));
        DatasetSpec other{kind, 20, 1001};
        CHECK(generate(spec) != generate(other));
    }
}

TEST_CASE("iot records: frozen reference values (seed 1000)") {
    std::vector<Record> records = generate({DatasetKind::Iot, 2, 1000});
    REQUIRE(records.size() == 2);
    const Record& r0 = records[0];
    CHECK(r0.find("device_id")->as_str() == "sensor-001");
    CHECK(r0.find("timestamp")->as_str() == "2024-01-01T00:00:00Z");
    CHECK(r0.find("temperature")->as_float() == 19.7);
    CHECK(r0.find("humidity")->as_float() == 62.6);
    CHECK(r0.find("pressure")->as_float() == 1026.4);
    CHECK(r0.find("battery_level")->as_int() == 66);
    const Record& loc0 = r0.find("location")->as_record();
    CHECK(loc0.find("lat")->as_float() == 37.77);
    CHECK(loc0.find("lon")->as_float() == -122.42);

    const Record& r1 = records[1];
    CHECK(r1.find("device_id")->as_str() == "sensor-002");
    CHECK(r1.find("timestamp")->as_str() == "2024-01-01T00:01:00Z");
    CHECK(r1.find("temperature")->as_float() == 16.5);
    CHECK(r1.find("humidity")->as_float() == 56.0);
    CHECK(r1.find("pressure")->as_float() == 1011.4);
    CHECK(r1.find("battery_level")->as_int() == 38);
}

TEST_CASE("iot records: frozen reference values (seed 7)") {
    std::vector<Record> records = generate({DatasetKind::Iot, 1, 7});
    const Record& r = records[0];
    CHECK(r.find("temperature")->as_float() == 22.8);
    CHECK(r.find("humidity")->as_float() == 30.7);
    CHECK(r.find("pressure")->as_float() == 1034.0);
    CHECK(r.find("battery_level")->as_int() == 16);
    const Record& loc = r.find("location")->as_record();
    CHECK(loc.find("lat")->as_float() == 37.75);
    CHECK(loc.find("lon")->as_float() == -122.48);
}

TEST_CASE("metrics records: frozen reference values (seed 1000)") {
    std::vector<Record> records = generate({DatasetKind::Metrics, 2, 1000});
    const Record& r0 = records[0];
    CHECK(r0.find("host")->as_str() == "host-01");
    CHECK(r0.find("cpu_percent")->as_float() == 23.5);
    CHECK(r0.find("memory_percent")->as_float() == 81.4);
    CHECK(r0.find("disk_io_read")->as_int() == 49);
    CHECK(r0.find("disk_io_write")->as_int() == 22441186);
    CHECK(r0.find("network_in")->as_int() == 599015031);
    CHECK(r0.find("network_out")->as_int() == 291301);

    const Record& r1 = records[1];
    CHECK(r1.find("host")->as_str() == "host-02");
    CHECK(r1.find("cpu_percent")->as_float() == 71.5);
    CHECK(r1.find("memory_percent")->as_float() == 82.0);
    CHECK(r1.find("disk_io_read")->as_int() == 84593);
    CHECK(r1.find("disk_io_write")->as_int() == 7);
    CHECK(r1.find("network_in")->as_int() == 40960348);
    CHECK(r1.find("network_out")->as_int() == 1328);
}

TEST_CASE("logs records: frozen reference values (seed 1000)") {
    std::vector<Record> records = generate({DatasetKind::Logs, 2, 1000});
    const Record& r0 = records[0];
    CHECK(r0.find("timestamp")->as_str() == "2024-01-01T00:00:00Z");
    CHECK(r0.find("level")->as_str() == "INFO");
    CHECK(r0.find("service")->as_str() == "scheduler");
    CHECK(r0.find("message")->as_str() == "Request completed in 7339 ms");
    CHECK(r0.find("request_id")->as_str() == "f247a5b8");
    CHECK(r0.find("duration_ms")->as_int() == 317);
    CHECK(r0.find("status_code")->as_int() == 200);

    const Record& r1 = records[1];
    CHECK(r1.find("level")->as_str() == "INFO");
    CHECK(r1.find("service")->as_str() == "search");
    CHECK(r1.find("message")->as_str() == "Worker 1726 started");
    CHECK(r1.find("request_id")->as_str() == "80a10cea");
    CHECK(r1.find("duration_ms")->as_int() == 3238);
    CHECK(r1.find("status_code")->as_int() == 200);
}

TEST_CASE("logs records: frozen reference values (seed 7)") {
    std::vector<Record> records = generate({DatasetKind::Logs, 1, 7});
    const Record& r = records[0];
    CHECK(r.find("level")->as_str() == "INFO");
    CHECK(r.find("service")->as_str() == "inventory");
    CHECK(r.find("message")->as_str() == "Session 5875 expired");
    CHECK(r.find("request_id")->as_str() == "a16e19bc");
    CHECK(r.find("duration_ms")->as_int() == 3991);
    CHECK(r.find("status_code")->as_int() == 200);
}

TEST_CASE("field trees per kind") {
    std::vector<Record> iot = generate({DatasetKind::Iot, 3, 42});
    REQUIRE(iot[0].size() == 7);
    CHECK(iot[0].fields[0].first == "device_id");
    CHECK(iot[0].find("location")->is_record());
    CHECK(iot[0].find("location")->as_record().size() == 2);

    std::vector<Record> metrics = generate({DatasetKind::Metrics, 3, 42});
    REQUIRE(metrics[0].size() == 8);
    for (const auto& [name, value] : metrics[0].fields)
        CHECK_FALSE(value.is_record());

    std::vector<Record> logs = generate({DatasetKind::Logs, 3, 42});
    REQUIRE(logs[0].size() == 7);
    for (const auto& [name, value] : logs[0].fields)
        CHECK_FALSE(value.is_record());
}

TEST_CASE("generated records are homogeneous at any scale") {
    for (auto kind : {DatasetKind::Iot, DatasetKind::Metrics, DatasetKind::Logs}) {
        std::vector<Record> records = generate({kind, 50, 1000});
        EntityBlock block = block_of(entity_name_of(kind), records);
        CHECK(block.count == 50);
        CHECK(records_of(block) == records);
    }
}

TEST_CASE("round-robin ids wrap") {
    std::vector<Record> iot = generate({DatasetKind::Iot, 52, 9});
    CHECK(iot[49].find("device_id")->as_str() == "sensor-050");
    CHECK(iot[50].find("device_id")->as_str() == "sensor-001");
    std::vector<Record> metrics = generate({DatasetKind::Metrics, 21, 9});
    CHECK(metrics[19].find("host")->as_str() == "host-20");
    CHECK(metrics[20].find("host")->as_str() == "host-01");
}

TEST_CASE("timestamps step one minute per record") {
    std::vector<Record> logs = generate({DatasetKind::Logs, 3, 11});
    CHECK(logs[0].find("timestamp")->as_str() == "2024-01-01T00:00:00Z");
    CHECK(logs[1].find("timestamp")->as_str() == "2024-01-01T00:01:00Z");
    CHECK(logs[2].find("timestamp")->as_str() == "2024-01-01T00:02:00Z");
    // Day rollover.
    std::vector<Record> more = generate({DatasetKind::Logs, 1441, 11});
    CHECK(more[1440].find("timestamp")->as_str() == "2024-01-02T00:00:00Z");
}

TEST_CASE("level and status distributions stay within the weighted domains") {
    std::vector<Record> logs = generate({DatasetKind::Logs, 300, 3});
    for (const Record& r : logs) {
        const std::string& level = r.find("level")->as_str();
        CHECK((level == "DEBUG" || level == "INFO" || level == "WARN" ||
               level == "ERROR"));
        std::int64_t code = r.find("status_code")->as_int();
        CHECK((code == 200 || code == 201 || code == 400 || code == 404 ||
               code == 500));
        std::int64_t ms = r.find("duration_ms")->as_int();
        CHECK(ms >= 1);
        CHECK(ms <= 5000);
        CHECK(r.find("request_id")->as_str().size() == 8);
    }
}

TEST_CASE("schema_only strips every value and zeroes the count") {
    std::vector<Record> records = generate({DatasetKind::Iot, 25, 1000});
    EntityBlock block = block_of("Telemetry", records);
    EntityBlock schema = schema_only(block);
    CHECK(schema.count == 0);
    CHECK(schema.name == "Telemetry");
    CHECK(dumps(schema) ==
          "Telemetry[0]:\n"
          "    device_id:\n"
          "    timestamp:\n"
          "    temperature:\n"
          "    humidity:\n"
          "    pressure:\n"
          "    battery_level:\n"
          "    location:\n"
          "        lat:\n"
          "        lon:\n");
}

TEST_CASE("dataset kind names") {
    CHECK(dataset_kind_of("iot") == DatasetKind::Iot);
    CHECK(dataset_kind_of("metrics") == DatasetKind::Metrics);
    CHECK(dataset_kind_of("logs") == DatasetKind::Logs);
    CHECK_THROWS_AS(dataset_kind_of("bogus"), std::invalid_argument);
    CHECK(std::string(entity_name_of(DatasetKind::Iot)) == "Telemetry");
    CHECK(std::string(to_string(DatasetKind::Metrics)) == "metrics");
}
