#include "symspace/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>

#include "symspace/json_io.hpp"

#ifndef SYMSPACE_DEFAULT_DATA_DIR
#define SYMSPACE_DEFAULT_DATA_DIR "data"
#endif

namespace symspace::catalog {

namespace fs = std::filesystem;

std::string data_dir() {
  if (const char* env = std::getenv("SYMSPACE_DATA_DIR")) return env;
  return SYMSPACE_DEFAULT_DATA_DIR;
}

std::vector<std::string> list() {
  std::vector<std::string> names;
  const fs::path dir(data_dir());
  if (!fs::is_directory(dir)) throw std::runtime_error("catalog data directory not found: " + dir.string());
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() != ".json") continue;
    names.push_back(entry.path().stem().string());
  }
  std::sort(names.begin(), names.end());
  return names;
}

IRootDatum get(const std::string& name) {
  const std::string suffix = ".GxT";
  if (name.size() > suffix.size() && name.ends_with(suffix)) {
    IRootDatum base = get(name.substr(0, name.size() - suffix.size()));
    return doubled_iroot_datum(base);
  }
  const fs::path file = fs::path(data_dir()) / (name + ".json");
  if (!fs::is_regular_file(file)) throw std::invalid_argument("unknown symmetric space: " + name);
  InputDocument doc = load_input_file(file.string());
  return doc.ird;
}

}  // namespace symspace::catalog
