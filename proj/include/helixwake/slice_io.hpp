#pragma once

#include <iosfwd>
#include <string>

#include "helixwake/wake.hpp"

namespace helixwake {

/// (u - u_ref) / reference_speed, node by node. Grids must match.
SliceField relative_slice(const SliceField& field, const SliceField& reference, double reference_speed);

/// Plain-text grid: '#' comment lines, then "x_over_d ny nz dy dz", then
/// nz rows of ny velocities (row 0 is the lowest z).
void write_slice_grid(std::ostream& os, const SliceField& field, const std::string& header_comment = {});
/// Throws std::runtime_error on malformed input. y0/z0 are recentred.
SliceField read_slice_grid(std::istream& is);

/// Long-format CSV: y,z,u per node.
void write_slice_csv(std::ostream& os, const SliceField& field, const std::string& header_comment = {});

/// Binary PPM (P6) with a blue-white-red scale centred on `centre`; values
/// at centre +/- half_range saturate. The header comment carries provenance.
void write_heatmap_ppm(std::ostream& os, const SliceField& field, double centre, double half_range,
                       const std::string& comment = {});

}  // namespace helixwake
