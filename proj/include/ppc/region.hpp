#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "ppc/feasibility.hpp"

namespace ppc {

struct RegionRow {
  std::uint32_t d = 0;
  std::optional<MinOrder> best;  // empty when d is infeasible on the grid
};

/// min_order for every d in [d_min, d_max]; infeasible d give empty rows.
std::vector<RegionRow> region_table(std::uint32_t d_min, std::uint32_t d_max, const SearchGrid& grid = {});

/// CSV with header d,a,b,m,log10_n_min; infeasible rows keep d and leave the rest blank.
void write_region_csv(const std::vector<RegionRow>& rows, std::ostream& out);

/// Staircase chart of log10_n_min against d with a log-scale order axis.
void emit_region_svg(const std::vector<RegionRow>& rows, std::ostream& out);

}  // namespace ppc
