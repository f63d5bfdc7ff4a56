#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "igconn/catalog.hpp"
#include "igconn/group.hpp"
#include "igconn/lattice.hpp"

namespace test_support {

inline igconn::FiniteGroup group(const std::string& label) {
  return igconn::build_catalog_group(label);
}

inline igconn::SubgroupLattice lattice(const std::string& label) {
  return igconn::SubgroupLattice::build(group(label));
}

// Default catalog, built once.
inline const std::vector<igconn::FiniteGroup>& catalog_groups() {
  static const std::vector<igconn::FiniteGroup> groups = [] {
    std::vector<igconn::FiniteGroup> out;
    const auto entries = igconn::standard_families();
    for (const auto& e : entries) out.push_back(igconn::build_entry(e, entries));
    return out;
  }();
  return groups;
}

inline std::filesystem::path data_file(const std::string& name) {
  return std::filesystem::path(IGCONN_TEST_DATA) / name;
}

}  // namespace test_support
