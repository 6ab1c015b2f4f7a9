#include "tables.hpp"

#include <filesystem>
#include <fstream>
#include <functional>

#include "pool.hpp"
#include "saitoforge/errors.hpp"

namespace sf::cli {

std::string field_text(const std::vector<RatFn>& v, const Ring& r) {
  std::string out;
  for (std::size_t a = 0; a < v.size(); ++a) {
    if (v[a].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + v[a].to_string() + ") d/d" + r->names[a];
  }
  return out.empty() ? "0" : out;
}

bool Table::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.ok; });
}

TableRow flat_row(const std::string& group) {
  GroupPtr g = make_group(group);
  SaitoData s = natural_saito(g);
  FlatCoordinates f = flat_coordinates(s);
  SaitoData flat = to_flat_frame(s, f);
  int n = g->rank;
  std::vector<RatFn> product;
  for (int c = 0; c < n; ++c) product.push_back(flat.C[n - 1](c, n - 1));
  ResidualReport ss = check_ss(flat);

  TableRow row;
  row.ok = ss.ok();
  Json inv = Json::array(), t = Json::array();
  std::string text = g->name + "\n";
  for (int a = 0; a < n; ++a) {
    inv.push_back(g->invariants[a].to_string());
    text += "  " + g->x_ring->names[a] + " = " + g->invariants[a].to_string() + "\n";
  }
  for (int a = 0; a < n; ++a) {
    t.push_back(f.t[a].to_string());
    text += "  " + f.t_ring->names[a] + " = " + f.t[a].to_string() + "\n";
  }
  std::string last = f.t_ring->names[n - 1];
  std::string prod = field_text(product, f.t_ring);
  text += "  d/d" + last + " * d/d" + last + " = " + prod + "\n";
  text += std::string("  axioms: ") + (ss.ok() ? "pass" : "fail " + ss.first_failure()->name) + "\n";
  row.text = text;
  row.json = Json{{"group", g->name},
                  {"invariants", inv},
                  {"flat", t},
                  {"product", prod},
                  {"product_terms", Json::array()},
                  {"status", ss.ok() ? "pass" : "fail"}};
  for (const auto& p : product) row.json["product_terms"].push_back(to_json(p));
  return row;
}

TableRow covering_row(const CoveringMap& pi, int index) {
  CoveringRowReport r = verify_covering_row(pi);
  TableRow row;
  row.ok = r.ok();
  row.json = to_json(r);
  row.json["row"] = index;
  std::string e;
  for (std::size_t a = 0; a < r.e.size(); ++a) {
    e += (a ? ", " : "") + r.e[a].to_string();
  }
  std::string text = r.group + " row " + std::to_string(index) + ": K = " + r.source + ", " + r.label +
                     ", e = (" + e + ")\n";
  if (r.push.poles.divisor.ring()) {
    text += "  divisor " + r.push.poles.divisor.to_string() + ", logarithmic poles";
    for (const PoleEntry* p : r.push.poles.logarithmic()) {
      text += " Gamma^" + std::to_string(p->gamma + 1) + "_" + std::to_string(p->alpha + 1) +
              std::to_string(p->beta + 1);
    }
    text += "\n";
  }
  for (const auto& c : r.checks) {
    text += std::string("  ") + (c.passed ? "pass " : "FAIL ") + c.name;
    if (!c.detail.empty()) text += " (" + c.detail + ")";
    text += "\n";
  }
  row.text = text;
  return row;
}

TableRow lines_row(const std::string& group) {
  GroupPtr g = make_group(group);
  LineSearch ls = find_natural_e_lines(g);
  TableRow row;
  row.json = to_json(ls);
  row.json["group"] = g->name;
  std::string text = g->name + ": " + std::to_string(ls.lines.size()) + " line(s)";
  for (const auto& l : ls.lines) text += " " + l.to_string();
  text += "\n  " + std::to_string(ls.forms) + " residual forms, top degree " +
          std::to_string(ls.max_degree) + ", gcd degree " + std::to_string(ls.gcd_degree) + "\n";
  row.text = text;
  return row;
}

std::vector<Table> build_tables() {
  std::vector<Table> tables;
  std::vector<std::pair<std::size_t, std::function<TableRow()>>> jobs;
  auto add_table = [&](std::string file, std::string title) {
    tables.push_back(Table{std::move(file), std::move(title), {}});
    return tables.size() - 1;
  };
  auto flat = [&](const std::string& file, const std::string& title,
                  const std::vector<std::string>& groups) {
    std::size_t t = add_table(file, title);
    for (const auto& g : groups) jobs.emplace_back(t, [g] { return flat_row(g); });
  };
  auto cover = [&](const std::string& file, const std::string& title,
                   const std::vector<std::string>& groups) {
    std::size_t t = add_table(file, title);
    for (const auto& g : groups) {
      std::vector<CoveringMap> rows = covering_rows(g);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        jobs.emplace_back(t, [pi = rows[i], i] { return covering_row(pi, static_cast<int>(i + 1)); });
      }
    }
  };

  std::vector<std::string> monomial;
  for (int m = 2; m <= 6; ++m) monomial.push_back("G(" + std::to_string(m) + ",1,2)");
  for (int m = 3; m <= 6; ++m) monomial.push_back("G(" + std::to_string(m) + "," + std::to_string(m) + ",2)");
  flat("flat_monomial", "Natural Saito structures for G(m,1,2) and G(m,m,2)", monomial);
  flat("flat_tetrahedral", "Natural Saito structures, tetrahedral duality groups", {"G4", "G5", "G6"});
  flat("flat_octahedral", "Natural Saito structures, octahedral duality groups",
       {"G8", "G9", "G10", "G14"});
  flat("flat_icosahedral", "Natural Saito structures, icosahedral duality groups",
       {"G16", "G17", "G18", "G20", "G21"});
  cover("cover_Gkpp2", "Covering maps for G(kp,p,2), p > 2, k > 1", {"G(6,3,2)", "G(8,4,2)"});
  cover("cover_G2k22", "Covering maps for G(2k,2,2), k > 1", {"G(4,2,2)", "G(6,2,2)"});
  cover("cover_G7", "Covering maps for G7", {"G7"});
  cover("cover_G11", "Covering maps for G11", {"G11"});
  cover("cover_G15", "Covering map for G15", {"G15"});
  cover("cover_G19", "Covering maps for G19", {"G19"});
  std::size_t lt = add_table("lines", "Lines of unit fields giving natural almost Saito structures");
  for (const char* g : {"G(4,2,2)", "G(6,2,2)", "G7", "G11", "G19", "G12", "G13", "G22"}) {
    jobs.emplace_back(lt, [g = std::string(g)] { return lines_row(g); });
  }

  std::vector<TableRow> rows =
      parallel_map<TableRow>(jobs.size(), [&](std::size_t i) { return jobs[i].second(); });
  for (std::size_t i = 0; i < jobs.size(); ++i) tables[jobs[i].first].rows.push_back(std::move(rows[i]));
  return tables;
}

void write_tables(const std::vector<Table>& tables, const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& t : tables) {
    std::string text = t.title + "\n\n";
    Json rows = Json::array();
    for (const auto& r : t.rows) {
      text += r.text + "\n";
      rows.push_back(r.json);
    }
    std::filesystem::path base = std::filesystem::path(dir) / t.file;
    std::ofstream(base.string() + ".txt", std::ios::binary) << text;
    store(base.string() + ".json",
          envelope("table", Json{{"title", t.title}, {"rows", rows}, {"status", t.ok() ? "pass" : "fail"}}));
  }
}

}  // namespace sf::cli
