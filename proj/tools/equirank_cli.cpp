// Command-line front end: parses group and G-set specs, runs one analysis and
// prints JSON (default) or a text table.
#include <CLI11.hpp>

#include <iostream>
#include <new>
#include <string>

#include "equirank/error.hpp"
#include "equirank/report.hpp"
#include "equirank/spec.hpp"
#include "equirank/verify.hpp"
#include "equirank/wreath.hpp"

using namespace equirank;

namespace {

enum class Command { kLattice, kBoxes, kEnumerate, kRank, kCa, kVerify };

struct RunConfig {
  Command command;
  std::string group_spec;
  std::string gset_spec;
  std::string rule;
  std::string output = "json";
  std::size_t budget = kDefaultClosureCap;
  bool paper_layout = false;
  bool verify = false;
  bool aut_only = false;
  bool maps = false;
};

void emit(const RunConfig& cfg, const Json& j, const std::string& table) {
  if (cfg.output == "table") std::cout << table;
  else std::cout << j.dump(2) << "\n";
}

LatticePtr lattice_of(const GroupPtr& g) {
  return std::make_shared<const SubgroupLattice>(g);
}

// "0,1:0110": memory set elements, then the rule table as digits (or
// comma-separated values when q > 10).
LocalRule parse_rule(const std::string& text, const ShiftSpace& space) {
  const auto colon = text.rfind(':');
  if (colon == std::string::npos) {
    throw SpecError("malformed-rule", "expected <memory-set>:<rule-table>");
  }
  LocalRule r;
  const std::string set = text.substr(0, colon);
  const std::string table = text.substr(colon + 1);
  std::size_t start = 0;
  while (start < set.size()) {
    std::size_t end = set.find(',', start);
    if (end == std::string::npos) end = set.size();
    const std::string tok = set.substr(start, end - start);
    bool found = false;
    for (Element e = 0; e < space.group->order() && !found; ++e) {
      if (std::to_string(e) == tok || space.group->label(e) == tok) {
        r.memory_set.push_back(e);
        found = true;
      }
    }
    if (!found) {
      throw SpecError("unknown-element", "unknown memory set element \"" + tok +
                                             "\" at position " + std::to_string(start));
    }
    start = end + 1;
  }
  auto digit = [&](const std::string& tok, std::size_t pos) -> std::uint32_t {
    try {
      std::size_t used = 0;
      const auto v = std::stoul(tok, &used, 36);
      if (used == tok.size()) return static_cast<std::uint32_t>(v);
    } catch (const std::exception&) {
    }
    throw SpecError("malformed-rule", "bad rule value at position " + std::to_string(pos));
  };
  if (table.find(',') != std::string::npos) {
    std::size_t s = 0;
    while (s <= table.size()) {
      std::size_t e = table.find(',', s);
      if (e == std::string::npos) e = table.size();
      r.table.push_back(digit(table.substr(s, e - s), colon + 1 + s));
      s = e + 1;
    }
  } else {
    for (std::size_t k = 0; k < table.size(); ++k) {
      r.table.push_back(digit(table.substr(k, 1), colon + 1 + k));
    }
  }
  // Presented in display order; LocalRule wants the same.
  std::sort(r.memory_set.begin(), r.memory_set.end(), [&](Element a, Element b) {
    return space.position[a] < space.position[b];
  });
  return r;
}

int run_lattice(const RunConfig& cfg) {
  const auto lat = lattice_of(parse_group_spec(cfg.group_spec));
  Json j = envelope("lattice");
  j.update(lattice_json(*lat));
  emit(cfg, j, lattice_table(*lat));
  return 0;
}

int run_boxes(const RunConfig& cfg) {
  const auto g = parse_group_spec(cfg.group_spec);
  const auto x = parse_gset_spec(cfg.gset_spec, g);
  const BoxDecomposition boxes(x.gset, lattice_of(g));
  if (cfg.paper_layout) {
    std::cout << paper_layout(boxes);
    return 0;
  }
  Json j = envelope("boxes");
  j.update(boxes_json(boxes));
  emit(cfg, j, paper_layout(boxes));
  return 0;
}

int run_enumerate(const RunConfig& cfg) {
  const auto g = parse_group_spec(cfg.group_spec);
  const auto x = parse_gset_spec(cfg.gset_spec, g);
  Json j = envelope("enumerate");
  j["points"] = x.gset->size();
  std::string table;
  auto list = [&](const MonoidClosure& m) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
      const auto img = m.elements[i];
      arr.push_back(std::vector<Point>(img.begin(), img.end()));
    }
    return arr;
  };
  if (!cfg.aut_only) {
    const auto end = enumerate_end(x.gset, cfg.budget);
    j["end_size"] = end.size();
    table += "|End| = " + std::to_string(end.size()) + "\n";
    if (cfg.maps) j["end"] = list(end);
  }
  const auto aut = enumerate_aut(x.gset, cfg.budget);
  j["aut_size"] = aut.size();
  table += "|Aut| = " + std::to_string(aut.size()) + "\n";
  if (cfg.maps) j["aut"] = list(aut);
  emit(cfg, j, table);
  return 0;
}

int run_rank(const RunConfig& cfg) {
  const auto g = parse_group_spec(cfg.group_spec);
  const auto x = parse_gset_spec(cfg.gset_spec, g);
  const BoxDecomposition boxes(x.gset, lattice_of(g));
  const auto report = relative_rank(boxes);
  Json j = envelope("rank");
  j.update(rank_json(boxes, report));
  std::string table = rank_table(boxes, report);
  int status = 0;
  if (x.shift) {
    const auto predicted = predicted_shift_kappa(boxes, x.shift->q);
    j["kappa_shortcut"] = predicted;
    j["kappa_shortcut_agrees"] = predicted == report.kappa;
    if (predicted != report.kappa) status = static_cast<int>(ExitCode::kPropertyFailure);
  }
  if (cfg.verify) {
    auto results = verify_rank(boxes, report, cfg.budget);
    try {
      const auto orders = wreath_order_checks(boxes, cfg.budget);
      std::size_t observed = 0;
      for (const auto& o : orders) observed += o.observed.has_value();
      results.push_back({"wreath-orders", CheckStatus::kPass,
                         std::to_string(observed) + " of " + std::to_string(orders.size()) +
                             " orders enumerated"});
    } catch (const PropertyError& e) {
      results.push_back({"wreath-orders", CheckStatus::kFail, e.what()});
    }
    j["verification"] = properties_json(results);
    table += properties_table(results);
    for (const auto& r : results) {
      if (r.status == CheckStatus::kFail) status = static_cast<int>(ExitCode::kPropertyFailure);
    }
  }
  emit(cfg, j, table);
  return status;
}

int run_ca(const RunConfig& cfg) {
  const auto g = parse_group_spec(cfg.group_spec);
  std::string spec = cfg.gset_spec;
  if (spec.starts_with("q=")) spec = "shift:" + spec;
  const auto x = parse_gset_spec(spec, g);
  if (!x.shift) throw SpecError("invalid-alphabet", "ca needs q=<n>");
  const ShiftSpace& s = *x.shift;
  const auto rule = parse_rule(cfg.rule, s);
  const auto tau = ca_from_rule(s, rule);
  const auto s0 = minimal_memory_set(s, tau);
  Json j = envelope("ca");
  j["group"] = group_json(*g);
  j["q"] = s.q;
  j["memory_set"] = rule.memory_set;
  j["equivariant"] = is_equivariant(*s.gset, tau.image());
  j["invertible"] = tau.is_bijective();
  j["rank"] = map_rank(tau);
  j["minimal_memory_set"] = s0;
  j["image"] = tau.image();
  std::string table = "equivariant yes\ninvertible " +
                      std::string(tau.is_bijective() ? "yes" : "no") + "\nminimal memory set {";
  for (std::size_t k = 0; k < s0.size(); ++k) table += (k ? ", " : "") + g->label(s0[k]);
  table += "}\n";
  emit(cfg, j, table);
  return 0;
}

int run_verify(const RunConfig& cfg) {
  if (cfg.group_spec.empty()) {
    const auto results = run_acceptance();
    Json j = envelope("verify");
    j["criteria"] = criteria_json(results);
    std::string table;
    bool ok = true;
    for (const auto& c : results) {
      ok = ok && c.passed;
      table += std::string(c.passed ? "PASS" : "FAIL") + " criterion " +
               std::to_string(c.id) + ": " + c.title + " (" + c.detail + ")\n";
    }
    emit(cfg, j, table);
    return ok ? 0 : static_cast<int>(ExitCode::kPropertyFailure);
  }
  if (cfg.gset_spec.empty()) throw SpecError("missing-gset", "verify needs a G-set spec");
  const auto g = parse_group_spec(cfg.group_spec);
  const auto x = parse_gset_spec(cfg.gset_spec, g);
  const auto results = verify_instance(lattice_of(g), x, cfg.budget);
  Json j = envelope("verify");
  j["properties"] = properties_json(results);
  emit(cfg, j, properties_table(results));
  for (const auto& r : results) {
    if (r.status == CheckStatus::kFail) return static_cast<int>(ExitCode::kPropertyFailure);
  }
  return 0;
}

int fail(int code, const std::string& error_code, const std::string& message) {
  Json j = envelope("error");
  j["error"] = {{"code", error_code}, {"message", message}};
  std::cerr << j.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relative rank of G-equivariant transformation monoids"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub, bool needs_gset) {
    sub->add_option("group", cfg.group_spec, "Z<n>, S<n>, D<n>, Q8, products AxB, perm:...")
        ->required(needs_gset || sub->get_name() == "lattice");
    if (needs_gset) {
      sub->add_option("gset", cfg.gset_spec, "shift:q=<n>, cosets:<elems>, union:a+b")
          ->required();
    }
    sub->add_option("--budget", cfg.budget, "cap on enumerated and closure sizes")
        ->check(CLI::PositiveNumber);
    sub->add_option("--output", cfg.output, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
  };

  auto* lattice = app.add_subcommand("lattice", "subgroups, classes and Moebius values");
  common(lattice, false);
  lattice->callback([&] { cfg.command = Command::kLattice; });

  auto* boxes = app.add_subcommand("boxes", "box decomposition of a G-set");
  common(boxes, true);
  boxes->add_flag("--paper-layout", cfg.paper_layout, "print box tables as text");
  boxes->callback([&] { cfg.command = Command::kBoxes; });

  auto* enumerate = app.add_subcommand("enumerate", "enumerate End_G(X) and Aut_G(X)");
  common(enumerate, true);
  enumerate->add_flag("--aut-only", cfg.aut_only, "skip End_G(X)");
  enumerate->add_flag("--maps", cfg.maps, "include image arrays");
  enumerate->callback([&] { cfg.command = Command::kEnumerate; });

  auto* rank = app.add_subcommand("rank", "relative rank of End_G(X) modulo Aut_G(X)");
  common(rank, true);
  rank->add_flag("--verify", cfg.verify, "check generation and irredundancy by closure");
  rank->callback([&] { cfg.command = Command::kRank; });

  auto* ca = app.add_subcommand("ca", "apply a local rule on A^G");
  common(ca, true);
  ca->add_option("--rule", cfg.rule, "<memory-set>:<rule-table>, e.g. 0,1:0110")
      ->required();
  ca->callback([&] { cfg.command = Command::kCa; });

  auto* verify = app.add_subcommand("verify", "property suite for one instance, or all "
                                              "acceptance criteria without arguments");
  verify->add_option("group", cfg.group_spec);
  verify->add_option("gset", cfg.gset_spec);
  verify->add_option("--budget", cfg.budget)->check(CLI::PositiveNumber);
  verify->add_option("--output", cfg.output)->check(CLI::IsMember({"json", "table"}));
  verify->callback([&] { cfg.command = Command::kVerify; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return fail(static_cast<int>(ExitCode::kSpecError), "usage", e.what());
  }

  try {
    switch (cfg.command) {
      case Command::kLattice: return run_lattice(cfg);
      case Command::kBoxes: return run_boxes(cfg);
      case Command::kEnumerate: return run_enumerate(cfg);
      case Command::kRank: return run_rank(cfg);
      case Command::kCa: return run_ca(cfg);
      case Command::kVerify: return run_verify(cfg);
    }
  } catch (const Error& e) {
    return fail(static_cast<int>(e.exit_code()), e.code(), e.what());
  } catch (const std::bad_alloc&) {
    return fail(static_cast<int>(ExitCode::kBudget), "out-of-memory", "allocation failed");
  } catch (const std::exception& e) {
    return fail(static_cast<int>(ExitCode::kInternal), "internal", e.what());
  }
  return static_cast<int>(ExitCode::kInternal);
}
