#include "equirank/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace equirank {

namespace {

std::string subgroup_name(const SubgroupLattice& lat, SubgroupId h) {
  if (h == lat.whole()) return "G";
  return "H" + std::to_string(h);
}

std::string element_list(const FiniteGroup& g, const Subgroup& h) {
  std::string s = "{";
  for (std::size_t i = 0; i < h.elements().size(); ++i) {
    s += (i ? ", " : "") + g.label(h.elements()[i]);
  }
  return s + "}";
}

Json nclass_json(const NClass& c) {
  return Json{{"canonical", c.canonical}, {"members", c.members}};
}

}  // namespace

Json envelope(const std::string& command) {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  return j;
}

Json group_json(const FiniteGroup& g) {
  Json j;
  j["name"] = g.name;
  j["order"] = g.order();
  j["labels"] = g.labels();
  j["display_order"] = g.display_order();
  return j;
}

Json subgroup_json(const SubgroupLattice& lat, SubgroupId h) {
  Json j;
  j["id"] = h;
  j["order"] = lat.subgroup(h).order();
  j["elements"] = lat.subgroup(h).elements();
  return j;
}

Json lattice_json(const SubgroupLattice& lat) {
  Json j;
  j["group"] = group_json(lat.group());
  Json subs = Json::array();
  for (SubgroupId h = 0; h < lat.size(); ++h) {
    Json s = subgroup_json(lat, h);
    s["normalizer"] = lat.normalizer(h);
    s["class"] = lat.class_of(h);
    subs.push_back(std::move(s));
  }
  j["subgroups"] = std::move(subs);
  Json classes = Json::array();
  for (ClassId c = 0; c < lat.classes().size(); ++c) {
    classes.push_back({{"id", c},
                       {"representative", lat.classes()[c].representative},
                       {"members", lat.classes()[c].members}});
  }
  j["classes"] = std::move(classes);
  Json order = Json::array();
  for (auto [a, b] : lat.conj_order_graph()) order.push_back({a, b});
  j["class_order"] = std::move(order);
  Json mu = Json::array();
  for (const auto& [hk, v] : lat.moebius_table()) {
    mu.push_back({{"h", hk.first}, {"k", hk.second}, {"mu", v}});
  }
  j["moebius"] = std::move(mu);
  return j;
}

Json boxes_json(const BoxDecomposition& boxes) {
  const auto& lat = boxes.lattice();
  const auto k = kappa(boxes);
  Json j;
  j["group"] = group_json(lat.group());
  j["points"] = boxes.gset().size();
  j["orbit_count"] = boxes.orbits().size();
  Json arr = Json::array();
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    const Box& b = boxes.box(i);
    Json e;
    e["index"] = i;
    e["class"] = b.class_id;
    e["representative"] = subgroup_json(lat, b.representative);
    e["normalizer"] = lat.normalizer(b.representative);
    e["alpha"] = b.alpha();
    e["kappa"] = std::find(k.begin(), k.end(), i) != k.end();
    e["aut_orbits"] = aut_orbits_in_box(boxes, i);
    e["points"] = b.points;
    e["orbits"] = b.orbits;
    Json subs = Json::array();
    for (std::size_t s = 0; s < b.sub_boxes.size(); ++s) {
      subs.push_back({{"subgroup", b.sub_box_groups[s]}, {"points", b.sub_boxes[s]}});
    }
    e["sub_boxes"] = std::move(subs);
    arr.push_back(std::move(e));
  }
  j["boxes"] = std::move(arr);
  j["kappa"] = k;
  return j;
}

Json rank_json(const BoxDecomposition& boxes, const RankReport& r) {
  Json j;
  j["group"] = group_json(boxes.lattice().group());
  j["points"] = boxes.gset().size();
  Json classes = Json::array();
  for (const auto& c : r.classes) {
    Json e;
    e["box"] = c.box;
    e["class"] = c.class_id;
    e["representative"] = c.representative;
    e["normalizer"] = c.normalizer;
    e["alpha"] = c.alpha;
    Json u = Json::array();
    for (const auto& n : c.u) u.push_back(nclass_json(n));
    e["u"] = std::move(u);
    e["u_size"] = c.u.size();
    classes.push_back(std::move(e));
  }
  j["classes"] = std::move(classes);
  j["kappa"] = r.kappa;
  j["relative_rank"] = r.relative_rank;
  Json gens = Json::array();
  for (const auto& g : r.generating_set) {
    gens.push_back({{"tag", g.tag},
                    {"from", g.from},
                    {"to", g.to},
                    {"image", g.map.image()}});
  }
  j["generating_set"] = std::move(gens);
  return j;
}

Json properties_json(const std::vector<PropertyResult>& results) {
  Json arr = Json::array();
  for (const auto& p : results) {
    arr.push_back({{"name", p.name}, {"status", to_string(p.status)}, {"detail", p.detail}});
  }
  return arr;
}

Json criteria_json(const std::vector<CriterionResult>& results) {
  Json arr = Json::array();
  for (const auto& c : results) {
    arr.push_back({{"id", c.id},
                   {"title", c.title},
                   {"status", c.passed ? "pass" : "fail"},
                   {"detail", c.detail}});
  }
  return arr;
}

std::string paper_layout(const BoxDecomposition& boxes) {
  const auto& lat = boxes.lattice();
  const GSet& x = boxes.gset();
  std::ostringstream out;
  std::size_t width = 1;
  for (Point p = 0; p < x.size(); ++p) width = std::max(width, x.label(p).size());

  auto grid = [&](const std::vector<std::vector<Point>>& columns) {
    std::size_t rows = 0;
    for (const auto& c : columns) rows = std::max(rows, c.size());
    for (std::size_t r = 0; r < rows; ++r) {
      out << "    ";
      for (const auto& c : columns) {
        out << std::setw(static_cast<int>(width)) << (r < c.size() ? x.label(c[r]) : "")
            << "  ";
      }
      out << "\n";
    }
  };

  for (std::size_t i = boxes.size(); i-- > 0;) {
    const Box& b = boxes.box(i);
    out << "B[" << subgroup_name(lat, b.representative) << "]  "
        << element_list(lat.group(), lat.subgroup(b.representative)) << "  |B| = "
        << b.points.size() << "  alpha = " << b.alpha() << "\n";
    if (b.sub_box_groups.size() == 1) {
      grid(b.orbits);
      continue;
    }
    for (std::size_t s = 0; s < b.sub_boxes.size(); ++s) {
      const SubgroupId k = b.sub_box_groups[s];
      out << "  B'[" << subgroup_name(lat, k) << "]  "
          << element_list(lat.group(), lat.subgroup(k)) << "\n";
      // Within a sub-box, group points by orbit.
      std::vector<std::vector<Point>> cols;
      for (const auto& orb : b.orbits) {
        std::vector<Point> col;
        for (Point p : orb) {
          if (boxes.stabilizer_of(p) == k) col.push_back(p);
        }
        if (!col.empty()) cols.push_back(std::move(col));
      }
      grid(cols);
    }
  }
  return out.str();
}

std::string lattice_table(const SubgroupLattice& lat) {
  std::ostringstream out;
  const FiniteGroup& g = lat.group();
  out << "group " << g.name << " of order " << g.order() << ", " << lat.size()
      << " subgroups in " << lat.classes().size() << " classes\n";
  for (SubgroupId h = 0; h < lat.size(); ++h) {
    out << "  " << std::setw(4) << subgroup_name(lat, h) << "  order "
        << std::setw(3) << lat.subgroup(h).order() << "  class " << std::setw(3)
        << lat.class_of(h) << "  N = " << subgroup_name(lat, lat.normalizer(h)) << "  "
        << element_list(g, lat.subgroup(h)) << "\n";
  }
  return out.str();
}

std::string rank_table(const BoxDecomposition& boxes, const RankReport& r) {
  const auto& lat = boxes.lattice();
  std::ostringstream out;
  for (const auto& c : r.classes) {
    out << "box " << c.box << "  H = " << subgroup_name(lat, c.representative)
        << "  alpha = " << c.alpha << "  |U| = " << c.u.size() << "  U = {";
    for (std::size_t k = 0; k < c.u.size(); ++k) {
      out << (k ? ", " : "") << "{";
      for (std::size_t m = 0; m < c.u[k].members.size(); ++m) {
        out << (m ? "," : "") << subgroup_name(lat, c.u[k].members[m]);
      }
      out << "}";
    }
    out << "}\n";
  }
  out << "kappa = {";
  for (std::size_t k = 0; k < r.kappa.size(); ++k) out << (k ? ", " : "") << r.kappa[k];
  out << "}\nrelative rank = " << r.relative_rank << "\n";
  for (const auto& g : r.generating_set) {
    out << "  " << g.tag << "  [" << boxes.gset().label(g.from) << " -> "
        << boxes.gset().label(g.to) << "]\n";
  }
  return out.str();
}

std::string properties_table(const std::vector<PropertyResult>& results) {
  std::ostringstream out;
  for (const auto& p : results) {
    out << std::left << std::setw(8) << to_string(p.status) << std::setw(20) << p.name
        << p.detail << "\n";
  }
  return out.str();
}

}  // namespace equirank
