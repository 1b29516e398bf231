// Uniform output shape for the command line tool.
//
// Every command produces one OutputRecord: the command name, the modulus,
// an echo of the parameters, a payload of value rows, and free-form notes.
// Text output prints the payload rows only; CSV adds a header line; JSON
// serializes the whole record with sorted keys, newline-terminated.
// -inf renders as the token "-inf" in text and CSV and as null in JSON.
#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ffcalc/extended.hpp"
#include "ffcalc/fp.hpp"
#include "ffcalc/gaussian.hpp"

namespace ffcalc {

using Cell = std::variant<Fp, Ext, Gaussian>;

struct OutputRecord {
  std::string command;
  std::uint64_t p = 0;
  nlohmann::json params = nlohmann::json::object();
  std::vector<std::string> columns;  // CSV header names, one per payload column
  std::vector<std::vector<Cell>> payload;
  std::vector<std::string> notes;
};

enum class OutputFormat { Text, Csv, Json };

// Maps --format values; throws ParseError-compatible std::invalid_argument
// for unknown names (the CLI turns that into a usage error).
OutputFormat parse_format(const std::string& name);

// One cell as a token: canonical residue, or signed representative when
// balanced; Gaussian cells look like "2+j3", pure imaginaries like "j3".
std::string cell_text(const Cell& cell, bool balanced);

std::string render_text(const OutputRecord& rec, bool balanced);
std::string render_csv(const OutputRecord& rec, bool balanced);
std::string render_json(const OutputRecord& rec, bool balanced);
std::string render(const OutputRecord& rec, OutputFormat format,
                   bool balanced);

}  // namespace ffcalc
