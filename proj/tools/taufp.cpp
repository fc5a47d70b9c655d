// taufp: command-line front end for the FP-dimension toolkit.
//
// Exit codes: 0 success, 1 failed verdict or internal consistency error,
// 2 invalid input, 3 budget exceeded.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "taufp/coxeter.hpp"
#include "taufp/error.hpp"
#include "taufp/io.hpp"
#include "taufp/lattice.hpp"
#include "taufp/nakayama.hpp"
#include "taufp/preproj.hpp"
#include "taufp/quiver.hpp"
#include "taufp/spectral.hpp"

using nlohmann::json;
using namespace taufp;

namespace {

constexpr int kExitVerdict = 1;

// Reals carry 12 significant digits in JSON.
double round12(double x) {
  if (x == 0.0 || !std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.11e", x);
  return std::strtod(buf, nullptr);
}

std::string fixed12(double x) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(12) << x;
  return os.str();
}

struct Report {
  std::string command;
  json inputs = json::object();
  json result = json::object();
  json verdicts = json::array();
  std::string text;  // raw text (DOT) printed verbatim in human mode

  void real(const std::string& key, double v) { result[key] = round12(v); }
  void verdict(const std::string& name, bool pass) { verdicts.push_back({{"name", name}, {"pass", pass}}); }
  bool all_pass() const {
    for (const auto& v : verdicts) {
      if (!v["pass"].get<bool>()) return false;
    }
    return true;
  }
};

void print_human_value(std::ostream& os, const json& v) {
  if (v.is_number_float()) {
    os << fixed12(v.get<double>());
  } else if (v.is_string()) {
    os << v.get<std::string>();
  } else {
    os << v.dump();
  }
}

void emit(const Report& r, bool as_json) {
  if (as_json) {
    json out = {{"schema", 1},       {"command", r.command}, {"inputs", r.inputs},
                {"result", r.result}, {"verdicts", r.verdicts}};
    std::cout << out.dump(2) << "\n";
    return;
  }
  if (!r.text.empty()) {
    std::cout << r.text;
    if (r.text.back() != '\n') std::cout << "\n";
  }
  for (const auto& [key, value] : r.result.items()) {
    if (key == "dot") continue;
    std::cout << key << ": ";
    print_human_value(std::cout, value);
    std::cout << "\n";
  }
  for (const auto& v : r.verdicts) {
    std::cout << (v["pass"].get<bool>() ? "PASS " : "FAIL ") << v["name"].get<std::string>() << "\n";
  }
}

unsigned long long budget_from_env() {
  const char* env = std::getenv("TAUFP_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultBudget;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) invalid(std::string("TAUFP_BUDGET must be a positive integer, got ") + env);
  return v;
}

std::vector<int> parse_kupisch(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      invalid("bad Kupisch entry '" + item + "'");
    }
  }
  return out;
}

Shape parse_shape(const std::string& s) {
  if (s == "linear") return Shape::Linear;
  if (s == "cyclic") return Shape::Cyclic;
  invalid("shape must be linear or cyclic, got '" + s + "'");
}

char parse_type(const std::string& s) {
  if (s.size() != 1) invalid("Dynkin type must be one letter, got '" + s + "'");
  return static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
}

json poly_coeffs(const IntPolynomial& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) {
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max()) {
      arr.push_back(static_cast<long long>(c));
    } else {
      arr.push_back(c.str());
    }
  }
  return arr;
}

// ---------------------------------------------------------------------------

struct Options {
  bool json = false;
  std::string file;
  std::string element;
  std::string type;
  int rank = 0;
  int multiplier = 1;
  std::string shape;
  std::string kupisch;
  bool verify = false;
  bool with_lattice = false;
};

Report cmd_quiver(const std::string& sub, const Options& o) {
  Report r;
  r.command = "quiver " + sub;
  r.inputs["file"] = o.file;
  const Quiver q = load_quiver(o.file);
  if (sub == "rho") {
    r.real("rho", spectral_radius(q, kDefaultTol, o.verify));
  } else if (sub == "charpoly") {
    const IntPolynomial p = char_poly(q);
    r.result["polynomial"] = p.to_string();
    r.result["coefficients"] = poly_coeffs(p);
  } else if (sub == "separated") {
    const Quiver s = separated_quiver(q);
    r.result["quiver"] = quiver_to_json(s);
    r.result["components"] = connected_components(s).size();
    r.text = to_dot(s);
  } else if (sub == "classify") {
    if (q.empty()) invalid("cannot classify the empty quiver");
    json names = json::array();
    for (const auto& c : connected_components(q)) names.push_back(classify_underlying_graph(c).name());
    if (names.size() == 1) {
      r.result["class"] = names[0];
    } else {
      r.result["components"] = names;
    }
  } else {  // dot
    r.text = to_dot(q);
    r.result["dot"] = r.text;
  }
  return r;
}

Report cmd_lattice(const std::string& sub, const Options& o) {
  Report r;
  r.command = "lattice " + sub;
  r.inputs["file"] = o.file;
  const FiniteLattice l = load_lattice(o.file);
  if (sub == "fpdim") {
    const LatticeFpdim f = fpdim_lattice(l);
    r.real("fpdim", f.value);
    r.result["witness"] = l.name(f.witness);
  } else if (sub == "qu") {
    r.inputs["element"] = o.element;
    const std::size_t x = l.index_of(o.element);
    const auto& dp = l.upper_covers(x);
    if (dp.empty()) invalid("element '" + o.element + "' is the maximum; dp is empty");
    const Quiver q = q_of(l, x, dp);
    r.result["quiver"] = quiver_to_json(q);
    r.real("rho", spectral_radius(q));
    r.text = to_dot(q);
  } else {  // check
    r.result["valid"] = true;
    r.result["size"] = l.size();
    r.result["top"] = l.name(l.top());
    r.result["bottom"] = l.name(l.bottom());
  }
  return r;
}

Report cmd_coxeter(const std::string& sub, const Options& o) {
  Report r;
  r.command = "coxeter " + sub;
  const char type = parse_type(o.type);
  r.inputs["type"] = std::string(1, type);
  r.inputs["rank"] = o.rank;
  const WeakOrder w = weak_order(type, o.rank, budget_from_env());
  if (sub == "order") {
    r.result["order"] = w.elements.size();
    r.result["formula"] = weyl_group_order(type, o.rank);
    r.verdict("BFS count equals the Weyl group order", w.elements.size() == weyl_group_order(type, o.rank));
  } else if (sub == "lattice") {
    r.result["lattice"] = lattice_to_json(w.lattice);
  } else if (sub == "longest") {
    const WeylElement& w0 = longest_element(w);
    r.result["word"] = word_name(w0.word);
    r.result["length"] = w0.length;
  } else {  // fpdim
    const FiniteLattice op = w.lattice.opposite();
    const LatticeFpdim f = fpdim_lattice(op);
    r.real("fpdim", f.value);
    r.result["witness"] = op.name(f.witness);
  }
  return r;
}

Report cmd_preproj(const std::string& sub, const Options& o) {
  Report r;
  r.command = "preproj " + sub;
  if (sub == "table") {
    json rows = json::array();
    std::ostringstream text;
    for (const auto& row : preproj_table()) {
      rows.push_back({{"type", row.cartan.name()},
                      {"multiplier", row.cartan.multiplier},
                      {"computed", round12(row.computed)},
                      {"closed_form", round12(row.closed_form)},
                      {"pass", row.pass}});
      text << std::left << std::setw(4) << row.cartan.name() << " c=" << row.cartan.multiplier << "  "
           << fixed12(row.computed) << "  " << fixed12(row.closed_form) << "  "
           << (row.pass ? "PASS" : "FAIL") << "\n";
      r.verdict(row.cartan.name() + " c=" + std::to_string(row.cartan.multiplier), row.pass);
    }
    r.result["rows"] = rows;
    r.text = text.str();
    return r;
  }
  const char type = parse_type(o.type);
  r.inputs["type"] = std::string(1, type);
  r.inputs["rank"] = o.rank;
  r.inputs["multiplier"] = o.multiplier;
  const CartanData c = cartan_data(type, o.rank, o.multiplier);
  const Quiver q = gabriel_quiver(c);
  if (sub == "quiver") {
    r.result["quiver"] = quiver_to_json(q);
    r.result["symmetrizer"] = c.symmetrizer;
    r.text = to_dot(q);
    if (o.with_lattice) r.result["lattice"] = lattice_to_json(weak_order(c, budget_from_env()).lattice);
  } else {  // rho
    const double computed = spectral_radius(q);
    const double closed = dynkin_rho(type, o.rank, c.minimal());
    r.real("computed", computed);
    r.real("closed_form", closed);
    r.verdict("computed rho matches the closed form", std::abs(computed - closed) <= 1e-9);
  }
  return r;
}

Report cmd_nakayama(const std::string& sub, const Options& o) {
  Report r;
  r.command = "nakayama " + sub;
  r.inputs["shape"] = o.shape;
  r.inputs["kupisch"] = o.kupisch;
  const NakayamaAlgebra a = NakayamaAlgebra::make(parse_shape(o.shape), parse_kupisch(o.kupisch));
  if (sub == "fpdim") {
    r.real("fpdim", fpdim_nakayama(a));
  } else if (sub == "pairs") {
    json names = json::array();
    for (const auto& p : tau_tilting_pairs(a)) names.push_back(pair_name(p));
    r.result["count"] = names.size();
    r.result["pairs"] = names;
  } else {
    const SandwichReport s = sandwich(a);
    if (sub == "report") {
      json mods = json::array();
      for (const auto& m : indecomposables(a)) {
        const auto t = tau(a, m);
        mods.push_back({{"module", module_name(m)},
                        {"top", a.top(m)},
                        {"projective", a.is_projective(m)},
                        {"brick", is_brick(a, m)},
                        {"tau_rigid", is_tau_rigid_module(a, m)},
                        {"tau", t ? module_name(*t) : "0"}});
      }
      r.result["indecomposables"] = mods;
      r.result["semibricks"] = s.semibrick_count;
      r.result["tau_tilting_pairs"] = s.pair_count;
    }
    r.real("fpdim_lattice", s.fpdim_lattice);
    r.result["d_b"] = s.d_b;
    r.real("fpdim", s.fpdim);
    r.verdict("max(FPdim(L), d_b) <= FPdim(A) <= FPdim(L) + d_b", s.bounds_hold);
    r.verdict("|semibricks| = |tau-tilting pairs|", s.counts_match);
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frobenius-Perron dimensions of quivers, lattices, Weyl groups and Nakayama algebras"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Emit a JSON report");

  std::string chosen_group, chosen_sub;
  auto add_group = [&](const std::string& name, const std::string& desc,
                       const std::vector<std::pair<std::string, std::string>>& subs, auto&& configure) {
    CLI::App* g = app.add_subcommand(name, desc);
    g->require_subcommand(1);
    g->fallthrough();
    for (const auto& [s, help] : subs) {
      CLI::App* c = g->add_subcommand(s, help);
      c->fallthrough();
      configure(s, c);
      c->callback([&chosen_group, &chosen_sub, name, s] {
        chosen_group = name;
        chosen_sub = s;
      });
    }
  };

  add_group("quiver", "Quiver spectra and shapes", {{"rho", "Spectral radius"},
             {"charpoly", "Characteristic polynomial"},
             {"separated", "Separated quiver and its components"},
             {"classify", "Dynkin class of the underlying graph"},
             {"dot", "Graphviz rendering"}},
            [&](const std::string& s, CLI::App* c) {
              c->add_option("--file", o.file, "Quiver JSON")->required();
              if (s == "rho") c->add_flag("--verify", o.verify, "Cross-check against the exact root");
            });
  add_group("lattice", "Finite lattices", {{"fpdim", "FPdim and witness"}, {"qu", "Local quiver at an element"}, {"check", "Validate the lattice axioms"}}, [&](const std::string& s, CLI::App* c) {
    c->add_option("--file", o.file, "Lattice JSON")->required();
    if (s == "qu") c->add_option("--element", o.element, "Element x")->required();
  });
  add_group("coxeter", "Weyl groups and the weak order", {{"order", "Group order (BFS and formula)"},
             {"lattice", "Weak order as a lattice"},
             {"longest", "Longest element"},
             {"fpdim", "FPdim of the weak order"}},
            [&](const std::string&, CLI::App* c) {
              c->add_option("--type", o.type, "Dynkin type A..G")->required();
              c->add_option("--rank", o.rank, "Rank")->required();
            });
  add_group("preproj", "Generalized preprojective algebras", {{"quiver", "Gabriel quiver"},
             {"rho", "Spectral radius against the closed form"},
             {"table", "All types and multipliers"}},
            [&](const std::string& s, CLI::App* c) {
              if (s == "table") return;
              c->add_option("--type", o.type, "Dynkin type A..G")->required();
              c->add_option("--rank", o.rank, "Rank")->required();
              c->add_option("--multiplier", o.multiplier, "Symmetrizer multiplier c");
              if (s == "quiver") c->add_flag("--lattice", o.with_lattice, "Include the weak-order lattice");
            });
  add_group("nakayama", "Nakayama algebras", {{"report", "Module counts and invariants"},
             {"fpdim", "Brute-force FPdim"},
             {"pairs", "tau-tilting pairs and their lattice"},
             {"sandwich", "FPdim bounds from the lattice"}},
            [&](const std::string&, CLI::App* c) {
              c->add_option("--shape", o.shape, "linear or cyclic")->required();
              c->add_option("--kupisch", o.kupisch, "Comma-separated Kupisch series")->required();
            });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ErrorKind::InvalidInput);
  }

  try {
    Report r;
    if (chosen_group == "quiver") {
      r = cmd_quiver(chosen_sub, o);
    } else if (chosen_group == "lattice") {
      r = cmd_lattice(chosen_sub, o);
    } else if (chosen_group == "coxeter") {
      r = cmd_coxeter(chosen_sub, o);
    } else if (chosen_group == "preproj") {
      r = cmd_preproj(chosen_sub, o);
    } else {
      r = cmd_nakayama(chosen_sub, o);
    }
    emit(r, o.json);
    return r.all_pass() ? 0 : kExitVerdict;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerdict;
  }
}
