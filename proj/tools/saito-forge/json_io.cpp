#include "json_io.hpp"

#include <fstream>
#include <sstream>

#include "saitoforge/errors.hpp"
#include "scalars.hpp"

namespace sf::cli {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

mpq_class rational_from(const Json& j) {
  if (!j.is_string()) throw ParseError("expected a rational string");
  return parse_rational(j.get<std::string>()).rational();
}

std::string rational_text(const mpq_class& q) { return q.get_str(); }

template <typename T, typename F>
Matrix<T> matrix_from(const Json& j, const T& zero, F entry) {
  if (!j.is_array()) throw ParseError("expected a matrix");
  int rows = static_cast<int>(j.size());
  int cols = rows == 0 ? 0 : static_cast<int>(j[0].size());
  Matrix<T> m(rows, cols, zero);
  for (int i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols) throw ParseError("ragged matrix");
    for (int k = 0; k < cols; ++k) m(i, k) = entry(j[i][k]);
  }
  return m;
}

template <typename T>
Json matrix_json(const Matrix<T>& m) {
  Json out = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.cols(); ++k) {
      if constexpr (std::is_same_v<T, MPoly>) {
        row.push_back(terms_json(m(i, k)));
      } else {
        row.push_back(to_json(m(i, k)));
      }
    }
    out.push_back(std::move(row));
  }
  return out;
}

template <typename T>
Json list_json(const std::vector<T>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

std::vector<Matrix<RatFn>> matrices_from(const Json& j, const Ring& r) {
  if (!j.is_array()) throw ParseError("expected a list of matrices");
  std::vector<Matrix<RatFn>> out;
  for (const auto& m : j) out.push_back(matrix_from_json(m, r));
  return out;
}

std::vector<RatFn> fields_from(const Json& j, const Ring& r) {
  if (!j.is_array()) throw ParseError("expected a vector field");
  std::vector<RatFn> out;
  for (const auto& f : j) out.push_back(ratfn_from_json(f, r));
  return out;
}

void frame_to_json(Json& out, const std::vector<MPoly>& frame_u) {
  if (frame_u.empty()) return;
  out["u_ring"] = to_json(frame_u[0].ring());
  Json f = Json::array();
  for (const auto& p : frame_u) f.push_back(terms_json(p));
  out["frame_u"] = std::move(f);
}

std::vector<MPoly> frame_from_json(const Json& j) {
  std::vector<MPoly> out;
  if (!j.contains("frame_u")) return out;
  Ring ur = ring_from_json(field(j, "u_ring"));
  for (const auto& p : field(j, "frame_u")) out.push_back(poly_from_json(p, ur));
  return out;
}

Json residual_json(const Residual& r) {
  Json out;
  out["name"] = r.name;
  out["zero"] = r.zero();
  if (!r.zero()) {
    const MPoly& num = r.value.num();
    out["leading"] = MPoly::from_terms(num.ring(), {num.lead()}).to_string();
    out["terms"] = num.size();
  }
  return out;
}

}  // namespace

Json to_json(const CycNum& c) {
  if (c.is_rational()) return rational_text(c.rational());
  Json coeffs = Json::array();
  for (const auto& q : c.coeffs()) coeffs.push_back(rational_text(q));
  return Json{{"order", c.order()}, {"coeffs", coeffs}};
}

CycNum cycnum_from_json(const Json& j) {
  if (j.is_string()) return CycNum(rational_from(j));
  if (j.is_number_integer()) return CycNum(j.get<long>());
  std::vector<mpq_class> coeffs;
  for (const auto& q : field(j, "coeffs")) coeffs.push_back(rational_from(q));
  const Json& order = field(j, "order");
  if (!order.is_number_integer() || order.get<int>() <= 0) throw ParseError("bad field order");
  return CycNum::from_coeffs(order.get<int>(), coeffs);
}

Json to_json(const Ring& r) { return Json{{"names", r->names}, {"weights", r->weights}}; }

Ring ring_from_json(const Json& j) {
  try {
    auto names = field(j, "names").get<std::vector<std::string>>();
    auto weights = field(j, "weights").get<std::vector<int>>();
    if (names.size() != weights.size() || names.size() > static_cast<std::size_t>(kMaxVars)) {
      throw ParseError("ring names and weights disagree");
    }
    return make_ring(std::move(names), std::move(weights));
  } catch (const Json::exception& ex) {
    throw ParseError(std::string("bad ring: ") + ex.what());
  }
}

Json terms_json(const MPoly& p) {
  Json out = Json::array();
  int n = p.nvars();
  for (const auto& t : p.terms()) {
    std::vector<int> e(t.m.e.begin(), t.m.e.begin() + n);
    out.push_back(Json::array({e, to_json(t.c)}));
  }
  return out;
}

MPoly poly_from_json(const Json& j, const Ring& r) {
  if (!j.is_array()) throw ParseError("expected a term list");
  MPoly out(r);
  std::size_t n = r->names.size();
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_array() || t[0].size() != n) {
      throw ParseError("bad term " + t.dump());
    }
    std::vector<int> e;
    for (const auto& v : t[0]) {
      if (!v.is_number_integer() || v.get<int>() < 0) throw ParseError("bad exponent " + v.dump());
      e.push_back(v.get<int>());
    }
    out += MPoly::monomial(r, e, cycnum_from_json(t[1]));
  }
  return out;
}

Json to_json(const RatFn& f) {
  if (f.is_zero()) return Json::array();
  if (f.den().is_constant() && f.den().constant().is_one()) return terms_json(f.num());
  return Json{{"num", terms_json(f.num())}, {"den", terms_json(f.den())}};
}

RatFn ratfn_from_json(const Json& j, const Ring& r) {
  if (j.is_array()) return RatFn(poly_from_json(j, r));
  MPoly den = poly_from_json(field(j, "den"), r);
  if (den.is_zero()) throw ParseError("zero denominator");
  return RatFn(poly_from_json(field(j, "num"), r), den);
}

Json to_json(const Matrix<RatFn>& m) { return matrix_json(m); }
Json to_json(const Matrix<MPoly>& m) { return matrix_json(m); }

Matrix<RatFn> matrix_from_json(const Json& j, const Ring& r) {
  return matrix_from(j, RatFn(MPoly(r)), [&](const Json& e) { return ratfn_from_json(e, r); });
}

Matrix<MPoly> poly_matrix_from_json(const Json& j, const Ring& r) {
  return matrix_from(j, MPoly(r), [&](const Json& e) { return poly_from_json(e, r); });
}

Json to_json(const SaitoData& s) {
  Json out;
  out["group"] = s.group;
  out["ring"] = to_json(s.ring);
  out["degrees"] = s.degrees;
  out["Gamma"] = list_json(s.Gamma);
  out["C"] = list_json(s.C);
  out["E"] = list_json(s.E);
  out["unit"] = list_json(s.e);
  frame_to_json(out, s.frame_u);
  return out;
}

SaitoData saito_from_json(const Json& j) {
  try {
    SaitoData s;
    s.group = field(j, "group").get<std::string>();
    s.ring = ring_from_json(field(j, "ring"));
    s.degrees = field(j, "degrees").get<std::vector<int>>();
    s.Gamma = matrices_from(field(j, "Gamma"), s.ring);
    s.C = matrices_from(field(j, "C"), s.ring);
    s.E = fields_from(field(j, "E"), s.ring);
    s.e = fields_from(field(j, "unit"), s.ring);
    s.frame_u = frame_from_json(j);
    auto n = s.ring->names.size();
    if (s.degrees.size() != n || s.Gamma.size() != n || s.C.size() != n || s.E.size() != n ||
        s.e.size() != n) {
      throw ParseError("Saito structure components disagree in rank");
    }
    return s;
  } catch (const Json::exception& ex) {
    throw ParseError(ex.what());
  }
}

Json to_json(const AlmostSaitoData& a) {
  Json out;
  out["group"] = a.group;
  out["ring"] = to_json(a.ring);
  out["degrees"] = a.degrees;
  out["Omega"] = list_json(a.Omega);
  out["B"] = list_json(a.B);
  out["E"] = list_json(a.E);
  out["e"] = list_json(a.e);
  out["r"] = to_json(a.r);
  frame_to_json(out, a.frame_u);
  return out;
}

AlmostSaitoData almost_from_json(const Json& j) {
  try {
    AlmostSaitoData a;
    a.group = field(j, "group").get<std::string>();
    a.ring = ring_from_json(field(j, "ring"));
    a.degrees = field(j, "degrees").get<std::vector<int>>();
    a.Omega = matrices_from(field(j, "Omega"), a.ring);
    a.B = matrices_from(field(j, "B"), a.ring);
    a.E = fields_from(field(j, "E"), a.ring);
    a.e = fields_from(field(j, "e"), a.ring);
    a.r = cycnum_from_json(field(j, "r"));
    a.frame_u = frame_from_json(j);
    auto n = a.ring->names.size();
    if (a.degrees.size() != n || a.Omega.size() != n || a.B.size() != n || a.E.size() != n ||
        a.e.size() != n) {
      throw ParseError("almost Saito structure components disagree in rank");
    }
    return a;
  } catch (const Json::exception& ex) {
    throw ParseError(ex.what());
  }
}

Json to_json(const ResidualReport& r, const Ring&) {
  Json items = Json::array();
  for (const auto& it : r.items) items.push_back(residual_json(it));
  return Json{{"status", r.ok() ? "pass" : "fail"}, {"residuals", items}};
}

Json to_json(const NaturalTest& t, const Ring& ring) {
  Json items = Json::array();
  for (const auto& it : t.residuals) items.push_back(residual_json(it));
  Json out{{"verdict", verdict_name(t.verdict)}, {"residuals", items}};
  if (!t.witness_name.empty()) {
    out["witness"] = Json{{"name", t.witness_name}, {"polynomial", terms_json(t.witness)}};
    out["ring"] = to_json(ring);
  }
  return out;
}

Json to_json(const CoveringRowReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  Json out{{"group", r.group}, {"source", r.source}, {"map", r.label}, {"e", list_json(r.e)},
           {"status", r.ok() ? "pass" : "fail"}, {"checks", checks}};
  if (r.push.poles.divisor.ring()) {
    out["divisor"] = r.push.poles.divisor.to_string();
    Json poles = Json::array();
    for (const auto& p : r.push.poles.entries) {
      if (p.kind == PoleKind::Polynomial) continue;
      poles.push_back(Json{{"index", {p.gamma + 1, p.alpha + 1, p.beta + 1}},
                           {"kind", pole_kind_name(p.kind)}});
    }
    out["poles"] = poles;
  }
  return out;
}

Json to_json(const LineSearch& l) {
  Json lines = Json::array();
  for (const auto& line : l.lines) lines.push_back(list_json(line.coords));
  return Json{{"lines", lines},
              {"forms", l.forms},
              {"max_degree", l.max_degree},
              {"gcd_degree", l.gcd_degree}};
}

Json envelope(const std::string& kind, Json data) {
  return Json{{"schema", kSchema}, {"kind", kind}, {"data", std::move(data)}};
}

const Json& open_envelope(const Json& doc, const std::string& kind) {
  if (!doc.is_object() || !doc.contains("schema")) throw SchemaMismatch("no schema field");
  if (doc.at("schema") != kSchema) {
    throw SchemaMismatch("schema " + doc.at("schema").dump() + ", expected \"" + kSchema + "\"");
  }
  if (!doc.contains("kind") || doc.at("kind") != kind) {
    throw SchemaMismatch("document kind is not '" + kind + "'");
  }
  return field(doc, "data");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& ex) {
    throw ParseError(ex.what());
  }
}

void store(const std::string& path, const Json& doc) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot write " + path);
  f << dump(doc);
}

Json load(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse(ss.str());
}

}  // namespace sf::cli
