#pragma once

#include <string>

#include "vgit/assignments.hpp"
#include "vgit/curves.hpp"
#include "vgit/linearization.hpp"
#include "vgit/trees.hpp"
#include "vgit/walls.hpp"

namespace vgit {

// JSON file formats (see docs/formats.md). Rationals travel as "p/q" strings
// only; decimal notation is rejected. Loading validates the full invariants
// (cross-section identity with its exact residual, tree stability, curve
// hypertree structure) and reports the offending field.

std::string to_json(const Linearization& L);
Linearization linearization_from_json(const std::string& text);
Linearization load_linearization(const std::string& path);
void save_linearization(const Linearization& L, const std::string& path);

std::string to_json(const DualTree& T);
DualTree tree_from_json(const std::string& text);
DualTree load_tree(const std::string& path);

std::string to_json(const CurveType& C);
CurveType curve_from_json(const std::string& text);
CurveType load_curve(const std::string& path);

ExtremalAssignment assignment_from_json(const std::string& text);
ExtremalAssignment load_assignment(const std::string& path);

// Line-delimited machine records ("records mode" of the CLI). Each line is a
// JSON object with "record" (the record type) and "schema" (currently 1).
namespace records {
constexpr int kSchemaVersion = 1;
std::string wall(const Wall& w, const Rational& witness_gamma);
std::string scan_event(const ScanEvent& ev);
std::string sigma_value(int card_or_minus1, const std::string& subset, int value);
}  // namespace records

}  // namespace vgit
