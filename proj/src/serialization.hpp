// File formats for grid functions: CSV (`x,value`, uniform increasing x)
// and JSON ({lo, hi, n, values}) with bit-exact double round-trips.
#ifndef SHARPYOUNG_SERIALIZATION_HPP
#define SHARPYOUNG_SERIALIZATION_HPP

#include <string>

#include "grid_function.hpp"

namespace sharpyoung {

std::string to_csv(const GridFunction& f);
GridFunction from_csv(const std::string& text);

std::string to_json(const GridFunction& f);
GridFunction from_json(const std::string& text);

GridFunction read_function_file(const std::string& path);  // by .csv/.json suffix
void write_function_file(const GridFunction& f, const std::string& path);

// Shortest decimal representation that round-trips the double exactly.
std::string format_double(double v);

}  // namespace sharpyoung

#endif
