#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "slr/scimap.hpp"

// Standalone SVG 1.1 plots. Output depends only on the input values.
namespace slr::svg {

/// Interest (papers) vs impact (citations) bubble chart. Bubble radius grows
/// with sqrt(max(growth_pct, 0) + 1); dashed lines mark median, q3 and p90 on
/// both axes. No profiles gives an axes-only plot.
std::string scatter_svg(const scimap::ScienceMap& m);

/// Yearly papers (top panel) and citations (bottom panel), one polyline per
/// listed topic. Unknown ids are skipped; an empty list gives empty axes.
std::string evolution_svg(const scimap::ScienceMap& m, std::span<const int> topic_ids);

/// File variants; throw Error(IoError).
void emit_scatter_svg(const scimap::ScienceMap& m, const std::filesystem::path& path);
void emit_evolution_svg(const scimap::ScienceMap& m, std::span<const int> topic_ids,
                        const std::filesystem::path& path);

}  // namespace slr::svg
