#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "painlab/cli.hpp"

namespace painlab::cli {

using json = nlohmann::ordered_json;

enum class Format { csv, json };

struct RunContext {
  std::uint64_t seed = 0;
  Format format = Format::csv;
};

/// A column-oriented numeric table; empty cells are written as blanks (CSV)
/// or null (JSON).
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::optional<double>>> rows;

  std::string to_csv() const;
  std::string to_json() const;
};

/// A data file produced by a command, written only after the command succeeds.
struct Artifact {
  std::string file_name;
  std::string content;
  bool plottable = false;  // CSV with a known schema
};

using Handler = std::function<std::vector<Artifact>(const RunContext&)>;

struct Command {
  CLI::App* app = nullptr;
  Handler handler;
};

std::vector<Command> register_commands(CLI::App& root);

json complex_json(cplx z);

/// Serializes a table in the requested format under `stem`.
Artifact table_artifact(const std::string& stem, const Table& t, Format f);

}  // namespace painlab::cli
