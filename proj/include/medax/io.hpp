#ifndef MEDAX_IO_HPP
#define MEDAX_IO_HPP

#include <string>

#include "medax/grid.hpp"

namespace medax {

/// Malformed input file or unparseable text.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// MMAF1 field format: one-line JSON header
///   {"magic":"MMAF1","nx":..,"ny":..,"origin_x":..,"origin_y":..,"spacing_h":..}
/// terminated by '\n', followed by nx*ny row-major float64 little-endian
/// samples.
void write_field(const std::string& path, const ScalarField2& field);
ScalarField2 read_field(const std::string& path);

/// Binary PGM (P5) with 255 for set cells; read accepts P2 and P5 and maps
/// any nonzero sample to true.
void write_pgm_mask(const std::string& path, const BinaryMask2& mask);
BinaryMask2 read_pgm_mask(const std::string& path, const GridSpec& spec);

/// 8-bit min-max normalized rendering plus a JSON sidecar (path + ".json")
/// recording the normalization range.
void write_pgm_rendering(const std::string& path, const ScalarField2& field);

/// One "x,y" pair per line; blank lines and '#' comments allowed.
PointSet2 read_points_csv(const std::string& path);

}  // namespace medax

#endif
