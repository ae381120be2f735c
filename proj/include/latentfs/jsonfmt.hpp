#pragma once

#include <string>
#include <vector>

namespace latentfs {

// Deterministic number and string formatting for the tool's JSON and CSV
// output. Doubles are printed with 17 significant digits, which is enough
// for exact round-trips, and always the same way, so identical inputs give
// byte-identical files.
std::string fmt_double(double v);
std::string fmt_double_array(const std::vector<double> &values);
std::string fmt_int_array(const std::vector<int> &values);
std::string json_escape(const std::string &s);

}  // namespace latentfs
