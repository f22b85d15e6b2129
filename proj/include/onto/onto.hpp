#pragma once

// Umbrella header: the ONTO columnar format (parse/serialize), the JSON and
// YAML baseline emitters, cl100k_base token counting, token-composition
// analysis, and the seeded dataset generators behind the benchmarks.

#include "onto/bpe.hpp"
#include "onto/composition.hpp"
#include "onto/datagen.hpp"
#include "onto/errors.hpp"
#include "onto/json_writer.hpp"
#include "onto/parser.hpp"
#include "onto/report.hpp"
#include "onto/serializer.hpp"
#include "onto/value.hpp"
#include "onto/version.hpp"
#include "onto/writer.hpp"
#include "onto/yaml_writer.hpp"
