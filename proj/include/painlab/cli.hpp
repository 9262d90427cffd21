#pragma once

#include <complex>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "painlab/errors.hpp"

namespace painlab::cli {

/// Exit codes of the command line tool.
inline constexpr int kOk = 0;
inline constexpr int kInvalid = 2;
inline constexpr int kNumerical = 3;

/// Runs the tool on an argument vector (args[0] is the program name).
/// Data files land in --out-dir; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "re,im" (or a bare real number) into a complex value.
cplx parse_complex(const std::string& text);

/// Shortest round-trip text for a double ("%.17g").
std::string format_double(double v);

/// Writes to a temporary sibling and renames it into place.
void write_atomic(const std::filesystem::path& path, const std::string& content);

/// Plot kinds understood by emit_gnuplot.
enum class PlotKind { automatic, potential, error, residual, trajectory, comparison };
PlotKind parse_plot_kind(const std::string& name);

/// Writes a gnuplot script next to `csv` (same stem, .gp) for the schema in
/// its header row. Throws UnknownSchema when the header is not recognized or
/// does not fit `kind`, InputError when the file cannot be read.
std::filesystem::path emit_gnuplot(const std::filesystem::path& csv, PlotKind kind);

}  // namespace painlab::cli
