#pragma once

// Shared fixtures for the unit and acceptance suites: the canonical
// Telemetry[3] listing, its expected in-memory form, and rank-file lookup.

#include <cstdlib>
#include <string>

#include "onto/value.hpp"

#ifndef ONTO_SOURCE_DIR
#define ONTO_SOURCE_DIR "."
#endif

namespace testutil {

inline const char* kTelemetryListing =
    "Telemetry[3]:\n"
    "    device_id: sensor-001|sensor-002|sensor-003\n"
    "    temperature: 23.5|24.1|22.9\n"
    "    humidity: 45.2|43.8|46.1\n"
    "    location:\n"
    "        lat: 37.77|37.78|37.79\n"
    "        lon: -122.41|-122.42|-122.43\n";

inline onto::EntityBlock telemetry_block() {
    using onto::FieldNode;
    using onto::Value;
    onto::EntityBlock block;
    block.name = "Telemetry";
    block.count = 3;
    block.fields = {
        FieldNode::leaf("device_id", {Value("sensor-001"), Value("sensor-002"),
                                      Value("sensor-003")}),
        FieldNode::leaf("temperature", {Value(23.5), Value(24.1), Value(22.9)}),
        FieldNode::leaf("humidity", {Value(45.2), Value(43.8), Value(46.1)}),
        FieldNode::group("location",
                         {FieldNode::leaf("lat", {Value(37.77), Value(37.78),
                                                  Value(37.79)}),
                          FieldNode::leaf("lon", {Value(-122.41), Value(-122.42),
                                                  Value(-122.43)})}),
    };
    return block;
}

inline std::string source_path(const std::string& relative) {
    return std::string(ONTO_SOURCE_DIR) + "/" + relative;
}

inline std::string rank_file_path() {
    if (const char* env = std::getenv("ONTO_RANK_FILE"); env && *env)
        return env;
    return source_path("data/cl100k_base.tiktoken");
}

} // namespace testutil
