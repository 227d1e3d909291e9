#pragma once

#include <string>

#include "quivercover/algebra.hpp"
#include "quivercover/fixture_io.hpp"

inline std::string fixture(const std::string& name) { return std::string(QC_FIXTURE_DIR) + "/" + name; }

inline qc::AlgebraPtr fixture_algebra(const std::string& name) {
  return qc::Algebra::create(qc::load_presentation(fixture(name)));
}
