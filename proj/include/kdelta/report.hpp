#pragma once

// Report rendering: canonical JSON (sorted keys, exact "p/q" strings, no
// floating point) and TSV tables for the CLI and golden-file tests. Every
// rendered number is produced by rat_str, so output is deterministic.

#include "kdelta/catalog.hpp"
#include "kdelta/zariski.hpp"

#include <string>
#include <vector>

namespace kdelta {

std::string value_mode_str(ValueMode mode);
std::string verdict_str(DeltaVerdict verdict);

// Full delta report; when `path` is given the chamber walk is embedded under
// the "path" key.
std::string delta_report_json(const DeltaReport& report,
                              const ZariskiPath* path = nullptr);
// Flat "key<TAB>value" rendering of the scalar fields plus one line per
// marked point.
std::string delta_report_tsv(const DeltaReport& report);

// Chamber walk: breakpoints, per-segment negative support with affine
// coefficients, P(t) data, and the exact volume quadratic.
std::string zariski_report_json(const ZariskiPath& path);

// Model dump: basis, intersection matrix, -K, (-K)^2, curves, contracted
// set, singularities, marked points.
std::string model_dump_json(const SurfaceModel& model);
std::string model_dump_text(const SurfaceModel& model);

// Single classification row with its evidence items (delta evidence embeds
// its DeltaReport).
std::string classification_json(const ClassificationRow& row);

// Classification table. JSON carries full member rows with evidence items;
// TSV has one line per row group: family, k label, status, comma-joined
// distinct evidence kinds.
std::string table1_json(const std::vector<Table1Row>& rows);
std::string table1_tsv(const std::vector<Table1Row>& rows);

}  // namespace kdelta
