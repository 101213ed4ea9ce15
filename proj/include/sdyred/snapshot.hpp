#pragma once

#include <string>
#include <vector>

#include "sdyred/field.hpp"

namespace sdyred {

// On-disk layout: one JSON header line terminated by '\n', followed by the
// raw values as little-endian complex128 (real, imag) pairs in grid order.
struct Snapshot {
  std::string name;
  double time = 0.0;
  std::vector<std::string> axes;
  ScalarField field;
};

void write_snapshot(const std::string& path, const Snapshot& snap);
Snapshot read_snapshot(const std::string& path);  // throws IoError

std::vector<std::string> default_axis_labels(int ndim);

}  // namespace sdyred
