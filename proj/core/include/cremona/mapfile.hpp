#pragma once

#include <map>
#include <string>

#include "cremona/projective.hpp"

namespace cremona {

/// Named maps loaded from the text format:
///
///   # comment
///   n = 4
///   map a1 = [X0*X2 : X1*X2 : X2^2 : X1*X3 : X2*X4]
///   affine psi = (X2, X3 + X2^2, X4)
///
/// The header fixes the projective ambient dimension; projective tuples
/// have n+1 homogeneous components of one shared degree separated by ':';
/// affine tuples use variables X1..Xm with m the component count.  Entries
/// may span lines until the closing bracket.  Names are unique.
struct MapFile {
    int ambient_n = 0;
    std::map<std::string, ProjectiveMap> maps;
    std::map<std::string, AffinePolyMap> affine_maps;
};

MapFile parse_map_file(const std::string& content);
MapFile load_map_file(const std::string& path);

}  // namespace cremona
