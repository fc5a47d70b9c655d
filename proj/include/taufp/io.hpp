#pragma once

#include <string>

#include "json.hpp"
#include "taufp/lattice.hpp"
#include "taufp/quiver.hpp"

namespace taufp {

// {"vertices": ["1","2"], "arrows": [["1","2",1], ...]}
Quiver quiver_from_json(const nlohmann::json& j);
nlohmann::json quiver_to_json(const Quiver& q);

// {"elements": [...], "covers": [["upper","lower"], ...]}
FiniteLattice lattice_from_json(const nlohmann::json& j,
                                FiniteLattice::Validation validation = FiniteLattice::Validation::Full);
nlohmann::json lattice_to_json(const FiniteLattice& l);

/// Reads and parses a JSON file; parse errors carry line and column.
nlohmann::json read_json_file(const std::string& path);

Quiver load_quiver(const std::string& path);
FiniteLattice load_lattice(const std::string& path,
                           FiniteLattice::Validation validation = FiniteLattice::Validation::Full);

}  // namespace taufp
