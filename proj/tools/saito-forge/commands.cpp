#include "commands.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <iostream>
#include <optional>

#include "json_io.hpp"
#include "saitoforge/errors.hpp"
#include "scalars.hpp"
#include "tables.hpp"

namespace sf::cli {

namespace {

// Raised while validating arguments; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Outcome {
  bool pass = true;
  Json json;
  std::string text;
};

GroupPtr group_arg(const std::string& name) {
  try {
    parse_group_spec(name);
  } catch (const Error& ex) {
    throw UsageError(ex.what());
  }
  return make_group(name);
}

CycNum rational_arg(const std::string& text, const char* flag) {
  try {
    return parse_rational(text);
  } catch (const Error& ex) {
    throw UsageError(std::string(flag) + ": " + ex.what());
  }
}

std::string index_name(int g, int a, int b) {
  return "^" + std::to_string(g + 1) + "_" + std::to_string(a + 1) + std::to_string(b + 1);
}

// Nonzero entries of a family of matrices, M^g_{ab} = ms[a](g, b).
std::string entries_text(const std::string& symbol, const std::vector<Matrix<RatFn>>& ms) {
  std::string out;
  for (std::size_t a = 0; a < ms.size(); ++a) {
    for (int g = 0; g < ms[a].rows(); ++g) {
      for (int b = 0; b < ms[a].cols(); ++b) {
        if (ms[a](g, b).is_zero()) continue;
        out += "  " + symbol + index_name(g, static_cast<int>(a), b) + " = " + ms[a](g, b).to_string() + "\n";
      }
    }
  }
  return out;
}

std::string report_text(const ResidualReport& r) {
  std::string out;
  for (const auto& it : r.items) {
    out += "  " + it.name + ": ";
    if (it.zero()) {
      out += "zero\n";
    } else {
      const MPoly& num = it.value.num();
      out += "nonzero, leading term " + MPoly::from_terms(num.ring(), {num.lead()}).to_string() + "\n";
    }
  }
  return out;
}

Json group_json(const GroupData& g) {
  Json params;
  if (g.spec.monomial()) {
    params = Json{{"m", g.spec.m}, {"p", g.spec.p}, {"n", g.spec.n}};
  } else {
    params = Json{{"st", g.spec.st}};
  }
  Json inv = Json::array();
  for (const auto& p : g.invariants) inv.push_back(terms_json(p));
  return Json{{"name", g.name},
              {"params", params},
              {"rank", g.rank},
              {"degrees", g.degrees},
              {"u_ring", to_json(g.u_ring)},
              {"x_ring", to_json(g.x_ring)},
              {"invariants", inv},
              {"Delta", terms_json(g.discriminant_x)},
              {"delta", terms_json(g.discriminant_u)},
              {"generators", g.generator_names},
              {"duality_group", g.is_duality_group()}};
}

Outcome cmd_group_info(const std::string& name) {
  GroupPtr g = group_arg(name);
  Outcome o;
  o.json = envelope("group", group_json(*g));
  std::string t = g->name + "\n  rank " + std::to_string(g->rank) + ", degrees";
  for (int d : g->degrees) t += " " + std::to_string(d);
  t += "\n";
  for (int a = 0; a < g->rank; ++a) {
    t += "  " + g->x_ring->names[a] + " = " + g->invariants[a].to_string() + "\n";
  }
  t += "  Delta = " + g->discriminant_x.to_string() + "\n";
  t += "  generators:";
  for (const auto& n : g->generator_names) t += " " + n;
  t += std::string("\n  duality group: ") + (g->is_duality_group() ? "yes" : "no") + "\n";
  o.text = t;
  return o;
}

Outcome cmd_group_list() {
  Outcome o;
  Json names = Json::array();
  for (const auto& n : catalog_duality_rank2()) names.push_back(n);
  for (const auto& n : catalog_rank3()) names.push_back(n);
  for (const char* n : {"G7", "G11", "G12", "G13", "G15", "G19", "G22"}) names.push_back(n);
  o.json = envelope("catalog", Json{{"groups", names}});
  for (const auto& n : names) o.text += n.get<std::string>() + "\n";
  return o;
}

Outcome cmd_connection(const std::string& name) {
  GroupPtr g = group_arg(name);
  OmegaFamily om = natural_connection(g);
  Outcome o;
  Json p = Json::array();
  for (const auto& m : om.P) p.push_back(to_json(m));
  o.json = envelope("connection", Json{{"group", g->name},
                                       {"ring", to_json(g->x_ring)},
                                       {"Delta", terms_json(om.delta)},
                                       {"P", p}});
  std::string t = g->name + ": Omega^g_ab = P^g_ab / Delta\n  Delta = " + om.delta.to_string() + "\n";
  for (int a = 0; a < om.rank(); ++a) {
    for (int c = 0; c < om.rank(); ++c) {
      for (int b = 0; b < om.rank(); ++b) {
        if (om.P[a](c, b).is_zero()) continue;
        t += "  P" + index_name(c, a, b) + " = " + om.P[a](c, b).to_string() + "\n";
      }
    }
  }
  o.text = t;
  return o;
}

Outcome cmd_saito(const std::string& name, bool flat, const std::string& out_path) {
  GroupPtr g = group_arg(name);
  SaitoData s = natural_saito(g);
  Json extra;
  std::string head = g->name + " natural Saito structure";
  if (flat) {
    FlatCoordinates f = flat_coordinates(s);
    Json t = Json::array();
    for (const auto& p : f.t) t.push_back(terms_json(p));
    extra = Json{{"x_ring", to_json(s.ring)}, {"X", to_json(f.X)}, {"t", t}};
    head += " in flat coordinates";
    for (std::size_t a = 0; a < f.t.size(); ++a) {
      head += "\n  " + f.t_ring->names[a] + " = " + f.t[a].to_string();
    }
    s = to_flat_frame(s, f);
  }
  ResidualReport rep = check_ss(s);
  Outcome o;
  o.pass = rep.ok();
  Json data = to_json(s);
  if (flat) data["flat_change"] = extra;
  data["axioms"] = to_json(rep, s.ring);
  o.json = envelope("saito", data);
  o.text = head + "\n  unit " + field_text(s.e, s.ring) + "\n  Euler " + field_text(s.E, s.ring) + "\n" +
           entries_text("C", s.C) + entries_text("Gamma", s.Gamma) + "axioms:\n" + report_text(rep);
  if (!out_path.empty()) store(out_path, o.json);
  return o;
}

Outcome cmd_verify(const std::string& path) {
  Json doc = load(path);
  std::string kind = doc.is_object() && doc.contains("kind") && doc["kind"].is_string()
                         ? doc["kind"].get<std::string>()
                         : "";
  ResidualReport rep;
  Ring ring;
  std::string label;
  if (kind == "almost_saito") {
    AlmostSaitoData a = almost_from_json(open_envelope(doc, kind));
    rep = check_ass(a);
    ring = a.ring;
    label = a.group + " almost Saito structure";
  } else {
    SaitoData s = saito_from_json(open_envelope(doc, "saito"));
    rep = check_ss(s);
    ring = s.ring;
    label = s.group + " Saito structure";
  }
  Outcome o;
  o.pass = rep.ok();
  o.json = envelope("report", to_json(rep, ring));
  o.json["data"]["subject"] = label;
  o.text = label + ": " + (rep.ok() ? "pass" : "fail") + "\n" + report_text(rep);
  return o;
}

Outcome cmd_flat(const std::string& name) {
  GroupPtr g = group_arg(name);
  SaitoData s = natural_saito(g);
  FlatCoordinates f = flat_coordinates(s);
  Outcome o;
  Json t = Json::array(), x = Json::array();
  std::string text = g->name + " flat coordinates\n";
  for (std::size_t a = 0; a < f.t.size(); ++a) {
    t.push_back(terms_json(f.t[a]));
    x.push_back(terms_json(f.x_of_t[a]));
    text += "  " + f.t_ring->names[a] + " = " + f.t[a].to_string() + "\n";
  }
  for (std::size_t a = 0; a < f.x_of_t.size(); ++a) {
    text += "  " + s.ring->names[a] + " = " + f.x_of_t[a].to_string() + "\n";
  }
  o.json = envelope("flat", Json{{"group", g->name},
                                 {"x_ring", to_json(s.ring)},
                                 {"t_ring", to_json(f.t_ring)},
                                 {"t", t},
                                 {"x_of_t", x},
                                 {"X", to_json(f.X)}});
  o.text = text;
  return o;
}

Outcome cmd_dual(const std::string& name, const std::optional<std::string>& lambda,
                 const std::optional<std::string>& r, const std::optional<std::string>& nu,
                 const std::string& out_path) {
  CycNum lam = lambda ? rational_arg(*lambda, "--lambda") : CycNum();
  std::optional<CycNum> rv;
  if (r) rv = rational_arg(*r, "--r");
  CycNum nv = nu ? rational_arg(*nu, "--nu") : CycNum();
  GroupPtr g = group_arg(name);
  SaitoData s = natural_saito(g);
  AlmostSaitoData a = dual_almost(s, lam, rv ? *rv : CycNum(1, g->degrees[0]));
  if (!nv.is_zero()) a = family_shift(a, CycNum(), nv);
  ResidualReport rep = check_ass(a);
  Outcome o;
  o.pass = rep.ok();
  Json data = to_json(a);
  data["axioms"] = to_json(rep, a.ring);
  o.json = envelope("almost_saito", data);
  o.text = g->name + " almost Saito structure, lambda = " + lam.to_string() + ", r = " + a.r.to_string() +
           "\n  unit " + field_text(a.E, a.ring) + "\n  e " + field_text(a.e, a.ring) + "\n" +
           entries_text("B", a.B) + entries_text("Omega", a.Omega) + "axioms:\n" + report_text(rep);
  if (!out_path.empty()) store(out_path, o.json);
  return o;
}

Outcome cmd_test_e(const std::string& name, const std::string& e_text) {
  std::vector<CycNum> e;
  try {
    e = parse_vector(e_text);
  } catch (const Error& ex) {
    throw UsageError(std::string("--e: ") + ex.what());
  }
  GroupPtr g = group_arg(name);
  if (static_cast<int>(e.size()) != g->rank) {
    throw UsageError("--e needs " + std::to_string(g->rank) + " components");
  }
  for (int a = 0; a < g->rank; ++a) {
    if (!e[a].is_zero() && g->degrees[a] != g->degrees[0]) {
      throw UsageError("--e may only involve coordinates of degree " + std::to_string(g->degrees[0]));
    }
  }
  if (std::all_of(e.begin(), e.end(), [](const CycNum& c) { return c.is_zero(); })) {
    throw UsageError("--e must be nonzero");
  }
  NaturalTest t = natural_ass_test(natural_connection(g), e);
  Outcome o;
  o.pass = t.verdict == Verdict::Natural;
  Json data = to_json(t, g->x_ring);
  data["group"] = g->name;
  Json ej = Json::array();
  for (const auto& c : e) ej.push_back(to_json(c));
  data["e"] = ej;
  o.json = envelope("natural_test", data);
  std::string text = g->name + ", e = (" + e_text + "): " + verdict_name(t.verdict) + "\n";
  for (const auto& r : t.residuals) {
    text += "  " + r.name + ": ";
    if (r.zero()) {
      text += "zero\n";
    } else {
      const MPoly& num = r.value.num();
      text += "nonzero, " + std::to_string(num.size()) + " terms, leading " +
              MPoly::from_terms(num.ring(), {num.lead()}).to_string() + "\n";
    }
  }
  o.text = text;
  return o;
}

Outcome cmd_search_e(const std::string& name) {
  GroupPtr g = group_arg(name);
  TableRow row = lines_row(g->name);
  Outcome o;
  o.json = envelope("lines", row.json);
  o.text = row.text;
  return o;
}

Outcome cmd_cover(const std::string& name, int row) {
  GroupPtr g = group_arg(name);
  std::vector<CoveringMap> rows;
  try {
    rows = covering_rows(g->name);
  } catch (const UnsupportedGroup& ex) {
    throw UsageError(ex.what());
  }
  if (row < 0 || row > static_cast<int>(rows.size())) {
    throw UsageError("--row must be between 1 and " + std::to_string(rows.size()));
  }
  Outcome o;
  Json list = Json::array();
  for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
    if (row != 0 && row != i + 1) continue;
    TableRow r = covering_row(rows[i], i + 1);
    o.pass = o.pass && r.ok;
    o.text += r.text;
    list.push_back(r.json);
  }
  o.json = envelope("covering", Json{{"group", g->name}, {"rows", list}});
  return o;
}

Outcome cmd_tables(const std::string& dir) {
  std::vector<Table> tables = build_tables();
  write_tables(tables, dir);
  Outcome o;
  Json list = Json::array();
  for (const auto& t : tables) {
    o.pass = o.pass && t.ok();
    list.push_back(Json{{"file", t.file}, {"rows", t.rows.size()}, {"status", t.ok() ? "pass" : "fail"}});
    o.text += t.file + ": " + std::to_string(t.rows.size()) + " rows, " + (t.ok() ? "pass" : "fail") + "\n";
  }
  o.json = envelope("tables", Json{{"directory", dir}, {"tables", list}});
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Natural Saito structures on orbit spaces of complex reflection groups", "saito-forge"};
  app.require_subcommand(1);
  bool json = false, verbose = false;
  app.add_flag("-v,--verbose", verbose, "Print timing to stderr");

  std::string group, path, e_text, out_path;
  bool flat = false;
  int row = 0;
  std::optional<std::string> lambda, r, nu;
  std::function<Outcome()> action;

  auto with_json = [&](CLI::App* sub) { sub->add_flag("--json", json, "Write JSON instead of text"); };
  auto with_group = [&](CLI::App* sub) { sub->add_option("group", group, "Group, e.g. G4 or G(3,3,2)")->required(); };

  CLI::App* grp = app.add_subcommand("group", "Group catalog");
  grp->require_subcommand(1);
  CLI::App* info = grp->add_subcommand("info", "Degrees, invariants and discriminant");
  with_group(info);
  with_json(info);
  info->callback([&] { action = [&] { return cmd_group_info(group); }; });
  CLI::App* list = grp->add_subcommand("list", "Catalog group names");
  with_json(list);
  list->callback([&] { action = [] { return cmd_group_list(); }; });

  CLI::App* conn = app.add_subcommand("connection", "Natural connection Omega = P / Delta");
  with_group(conn);
  with_json(conn);
  conn->callback([&] { action = [&] { return cmd_connection(group); }; });

  CLI::App* saito = app.add_subcommand("saito", "Natural Saito structure");
  with_group(saito);
  with_json(saito);
  saito->add_flag("--flat", flat, "Rewrite in flat coordinates");
  saito->add_option("--out", out_path, "Also store the JSON document here");
  saito->callback([&] { action = [&] { return cmd_saito(group, flat, out_path); }; });

  CLI::App* verify = app.add_subcommand("verify", "Check the axioms of a stored structure");
  verify->add_option("file", path, "JSON document")->required();
  with_json(verify);
  verify->callback([&] { action = [&] { return cmd_verify(path); }; });

  CLI::App* fl = app.add_subcommand("flat", "Flat coordinates of the natural Saito structure");
  with_group(fl);
  with_json(fl);
  fl->callback([&] { action = [&] { return cmd_flat(group); }; });

  CLI::App* dual = app.add_subcommand("dual", "Dual almost Saito structure");
  with_group(dual);
  with_json(dual);
  dual->add_option("--lambda", lambda, "Twist of the unit (rational)");
  dual->add_option("--r", r, "Parameter r (rational), default 1/d_1");
  dual->add_option("--nu", nu, "Shift of r along the family (rational)");
  dual->add_option("--out", out_path, "Also store the JSON document here");
  dual->callback([&] { action = [&] { return cmd_dual(group, lambda, r, nu, out_path); }; });

  CLI::App* te = app.add_subcommand("test-e", "Natural almost Saito test for a unit field");
  with_group(te);
  with_json(te);
  te->add_option("--e", e_text, "Components of e, e.g. \"1,0\" or \"12*i*sqrt3,1\"")->required();
  te->callback([&] { action = [&] { return cmd_test_e(group, e_text); }; });

  CLI::App* se = app.add_subcommand("search-e", "Lines of unit fields giving natural structures");
  with_group(se);
  with_json(se);
  se->callback([&] { action = [&] { return cmd_search_e(group); }; });

  CLI::App* cover = app.add_subcommand("cover", "Verify covering rows");
  with_group(cover);
  with_json(cover);
  cover->add_option("--row", row, "Row number, 1-based; all rows when omitted")->check(CLI::NonNegativeNumber);
  cover->callback([&] { action = [&] { return cmd_cover(group, row); }; });

  CLI::App* tables = app.add_subcommand("tables", "Regenerate every table under a directory");
  std::string dir;
  tables->add_option("--out", dir, "Output directory")->required();
  with_json(tables);
  tables->callback([&] { action = [&] { return cmd_tables(dir); }; });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  auto start = std::chrono::steady_clock::now();
  try {
    Outcome o = action();
    out << (json ? dump(o.json) : o.text);
    if (verbose) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
      err << "elapsed " << ms.count() << " ms\n";
    }
    return o.pass ? kPass : kFail;
  } catch (const UsageError& ex) {
    err << "usage error: " << ex.what() << "\n";
    return kUsage;
  } catch (const Error& ex) {
    err << "error " << ex.name() << ": " << ex.what() << "\n";
    return kFail;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kFail;
  }
}

}  // namespace sf::cli
