#pragma once

#include "symspace/satake.hpp"

namespace symspace::catalog {

// Data directory resolution: $SYMSPACE_DATA_DIR if set, else the directory
// the library was configured with.
std::string data_dir();

std::vector<std::string> list();

// Loads a named entry. A ".GxT" suffix returns the doubled group-times-torus
// datum derived from the base entry.
IRootDatum get(const std::string& name);

}  // namespace symspace::catalog
