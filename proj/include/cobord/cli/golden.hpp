#pragma once

#include <string>
#include <vector>

#include "cobord/exact/matrix.hpp"

namespace cobord::golden {

/// A matrix transcribed verbatim from the reference tables for QZ5 and Z(QS3).
struct Fixture {
  std::string name;
  exact::Matrix expected;
};

std::vector<Fixture> fixtures();

struct Comparison {
  std::string name;
  std::string expected;  // matrix JSON
  std::string actual;
  bool match = false;
};

/// Rebuilds every fixture from the constructions and compares serialized forms byte for byte.
std::vector<Comparison> run();

}  // namespace cobord::golden
