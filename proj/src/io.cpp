#include "taufp/io.hpp"

#include <fstream>
#include <sstream>

#include "taufp/error.hpp"

namespace taufp {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key, const char* what) {
  if (!j.is_object()) invalid(std::string(what) + " JSON must be an object");
  auto it = j.find(key);
  if (it == j.end() || !it->is_array()) {
    invalid(std::string(what) + " JSON needs an array \"" + key + "\"");
  }
  return *it;
}

std::string label_of(const json& v, const char* what) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  invalid(std::string(what) + " must be a string, got " + v.dump());
}

}  // namespace

Quiver quiver_from_json(const json& j) {
  std::vector<std::string> labels;
  for (const auto& v : field(j, "vertices", "quiver")) labels.push_back(label_of(v, "vertex label"));
  std::vector<Quiver::Arrow> arrows;
  for (const auto& a : field(j, "arrows", "quiver")) {
    if (!a.is_array() || a.size() < 2 || a.size() > 3) {
      invalid("arrow must be [src, dst] or [src, dst, mult], got " + a.dump());
    }
    Quiver::Arrow arrow{label_of(a[0], "arrow source"), label_of(a[1], "arrow target"), 1};
    if (a.size() == 3) {
      if (!a[2].is_number_integer() || a[2].get<long long>() < 1) {
        invalid("arrow multiplicity must be a positive integer, got " + a[2].dump());
      }
      arrow.mult = a[2].get<int>();
    }
    arrows.push_back(std::move(arrow));
  }
  return Quiver(std::move(labels), arrows);
}

json quiver_to_json(const Quiver& q) {
  json arrows = json::array();
  const auto& l = q.labels();
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (q.arrows(i, j) != 0) arrows.push_back({l[i], l[j], q.arrows(i, j)});
    }
  }
  return {{"vertices", l}, {"arrows", arrows}};
}

FiniteLattice lattice_from_json(const json& j, FiniteLattice::Validation validation) {
  std::vector<std::string> elements;
  for (const auto& v : field(j, "elements", "lattice")) elements.push_back(label_of(v, "element"));
  std::vector<FiniteLattice::Cover> covers;
  for (const auto& c : field(j, "covers", "lattice")) {
    if (!c.is_array() || c.size() != 2) invalid("cover must be [upper, lower], got " + c.dump());
    covers.emplace_back(label_of(c[0], "cover"), label_of(c[1], "cover"));
  }
  return FiniteLattice::from_covers(std::move(elements), covers, validation);
}

json lattice_to_json(const FiniteLattice& l) {
  json covers = json::array();
  for (const auto& [u, d] : l.covers()) covers.push_back({u, d});
  return {{"elements", l.elements()}, {"covers", covers}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) invalid("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    // e.byte is a stream offset; map it to line/column.
    std::ifstream again(path);
    std::ostringstream buf;
    buf << again.rdbuf();
    const std::string text = buf.str();
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    invalid(path + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what());
  }
}

Quiver load_quiver(const std::string& path) { return quiver_from_json(read_json_file(path)); }

FiniteLattice load_lattice(const std::string& path, FiniteLattice::Validation validation) {
  return lattice_from_json(read_json_file(path), validation);
}

}  // namespace taufp
