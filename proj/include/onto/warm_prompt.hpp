#pragma once

#include <string_view>

namespace onto {

// The system prompt that teaches a model to read ONTO before it sees data
// (the "warm" condition). assets/warm_prompt.txt carries the same text for
// direct use outside this library; a test keeps the two in sync.
inline constexpr std::string_view kWarmPrompt =
    "You are analyzing data in ONTO format. ONTO is a columnar notation "
    "where:\n"
    "- First line declares: EntityName[count]:\n"
    "- Each field has its own line: fieldname: val1|val2|val3\n"
    "- Pipe (|) separates values across records\n"
    "- Indented blocks represent nested structures\n"
    "- Empty values (||) represent null\n"
    "- The ^ character separates array elements\n"
    "\n"
    "Example:\n"
    "Sensors[2]:\n"
    "    device_id: sensor-001|sensor-002\n"
    "    temperature: 23.5|24.1\n"
    "    status: active|inactive\n"
    "    location:\n"
    "        lat: 37.77|37.78\n"
    "        lon: -122.41|-122.42\n"
    "\n"
    "Parse data by reading each field line and matching pipe-separated "
    "values to record positions.\n";

// The benchmark task appended after the serialized dataset.
inline constexpr std::string_view kTaskLine =
    "Summarize this data in one sentence.";

} // namespace onto
