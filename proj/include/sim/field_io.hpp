#pragma once

#include "sim/grid.hpp"

#include <filesystem>
#include <string>

namespace sim {

/// Field snapshot file format: one header line "nx ny lx ly t", then ny lines
/// of nx space-separated values (row-major, shortest round-trip precision,
/// '.' decimal separator regardless of locale).
void save_field(const Field& f, double t, const std::filesystem::path& path);

struct LoadedField {
    Field field;
    double t = 0.0;
};

LoadedField load_field(const std::filesystem::path& path);

/// Locale-independent shortest round-trip formatting (used for snapshots,
/// CSV and summaries).
std::string format_double(double v);

} // namespace sim
