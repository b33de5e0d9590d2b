#include "torsionlab/serialize.hpp"

#include <cctype>
#include <regex>
#include <sstream>

#include "json.hpp"
#include "torsionlab/errors.hpp"

namespace torsionlab {
namespace {

using nlohmann::json;

json rat_json(const Rational& r) { return json::array({r.num_string(), r.den_string()}); }

Rational rat_from(const json& j, const char* where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
    fail(errc::parse_error, std::string(where) + ": rational must be [\"num\",\"den\"]");
  return Rational::from_string(j[0].get<std::string>() + "/" + j[1].get<std::string>());
}

json poly_json(const Poly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(rat_json(c));
  return json{{"variable", var_name(p.var())}, {"coeffs", coeffs}};
}

Poly poly_from(const json& j, const char* where) {
  if (!j.is_object() || !j.contains("variable") || !j.contains("coeffs"))
    fail(errc::parse_error, std::string(where) + ": polynomial needs variable and coeffs");
  const std::string v = j["variable"].get<std::string>();
  Var var;
  if (v == "m")
    var = Var::m;
  else if (v == "t")
    var = Var::t;
  else
    fail(errc::parse_error, std::string(where) + ": unknown variable " + v);
  std::vector<Rational> coeffs;
  for (const auto& c : j["coeffs"]) coeffs.push_back(rat_from(c, where));
  return Poly(var, std::move(coeffs));
}

json rats_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(rat_json(r));
  return out;
}

std::vector<Rational> rats_from(const json& j, const char* where) {
  if (!j.is_array()) fail(errc::parse_error, std::string(where) + ": expected array");
  std::vector<Rational> out;
  for (const auto& e : j) out.push_back(rat_from(e, where));
  return out;
}

json constant_json(const SymbolicConstant& c) {
  json extra = json::array();
  for (const auto& [name, exp] : c.extra) extra.push_back(json{{"name", name}, {"exp", exp}});
  return json{{"rational", rat_json(c.rational)},
              {"pi_exp", c.pi_exp},
              {"vol_X_exp", c.vol_x_exp},
              {"vol_dual_exp", c.vol_dual_exp},
              {"extra_factors", extra}};
}

SymbolicConstant constant_from(const json& j, const char* where) {
  if (!j.is_object()) fail(errc::parse_error, std::string(where) + ": constant must be object");
  SymbolicConstant c;
  c.rational = rat_from(j.at("rational"), where);
  c.pi_exp = j.at("pi_exp").get<int>();
  c.vol_x_exp = j.at("vol_X_exp").get<int>();
  c.vol_dual_exp = j.at("vol_dual_exp").get<int>();
  if (j.contains("extra_factors"))
    for (const auto& e : j["extra_factors"])
      c.extra.emplace_back(e.at("name").get<std::string>(), e.at("exp").get<int>());
  return c;
}

json torsion_json(const TorsionResult& t) {
  return json{{"poly", poly_json(t.poly)},
              {"prefactor", constant_json(t.prefactor)},
              {"zero", t.zero_flag}};
}

TorsionResult torsion_from(const json& j, const char* where) {
  TorsionResult t;
  t.poly = poly_from(j.at("poly"), where);
  t.prefactor = constant_from(j.at("prefactor"), where);
  t.zero_flag = j.at("zero").get<bool>();
  return t;
}

json affine_weight_json(const AffineWeight& w) {
  json coords = json::array();
  for (int i = 0; i < w.rank(); ++i)
    coords.push_back(json{{"slope", rat_json(w.coord(i).slope)},
                          {"offset", rat_json(w.coord(i).offset)}});
  return json{{"basis", basis_name(w.basis())}, {"coords", coords}};
}

AffineWeight affine_weight_from(const json& j, const char* where) {
  const std::string b = j.at("basis").get<std::string>();
  WBasis basis;
  if (b == "e")
    basis = WBasis::so_full;
  else if (b == "em")
    basis = WBasis::so_levi;
  else if (b == "f")
    basis = WBasis::sl3_full;
  else if (b == "fm")
    basis = WBasis::sl3_levi;
  else
    fail(errc::parse_error, std::string(where) + ": unknown basis " + b);
  std::vector<AffineCoord> coords;
  for (const auto& c : j.at("coords"))
    coords.push_back(AffineCoord{rat_from(c.at("slope"), where), rat_from(c.at("offset"), where)});
  return AffineWeight(basis, std::move(coords));
}

json parse_doc(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(errc::parse_error, "invalid JSON document");
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void check_command(const json& j, const char* name) {
  if (!j.is_object() || !j.contains("command") || j["command"] != name)
    fail(errc::parse_error, std::string("expected a ") + name + " document");
}

std::string latex_magnitude(const Rational& c, int degree, Var v) {
  const Rational a = c.abs();
  std::string head;
  if (a.is_integer()) {
    if (!(a == Rational(1) && degree > 0)) head = a.num_string();
  } else {
    head = "\\frac{" + a.num_string() + "}{" + a.den_string() + "}";
  }
  if (degree == 0) return head.empty() ? std::string("1") : head;
  std::string var = var_name(v);
  if (degree > 1) var += "^{" + std::to_string(degree) + "}";
  return head + var;
}

}  // namespace

std::string poly_latex(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int d = p.degree(); d >= 0; --d) {
    const Rational& c = p.coeff(d);
    if (c.is_zero()) continue;
    if (out.empty())
      out += c.sign() < 0 ? "-" : "";
    else
      out += c.sign() < 0 ? " - " : " + ";
    out += latex_magnitude(c, d, p.var());
  }
  return out;
}

namespace {

struct LatexCursor {
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) != 0)) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool eat_word(const std::string& w) {
    skip_ws();
    if (s.compare(i, w.size(), w) == 0) {
      i += w.size();
      return true;
    }
    return false;
  }
  std::string integer() {
    skip_ws();
    if (i < s.size() && s[i] == '+') ++i;
    size_t start = i;
    if (i < s.size() && s[i] == '-') ++i;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) != 0)) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      fail(errc::parse_error, "expected integer in polynomial expression");
    return s.substr(start, i - start);
  }
};

}  // namespace

Poly poly_from_latex(const std::string& text, Var v) {
  LatexCursor cur{text};
  if (cur.done()) fail(errc::parse_error, "empty polynomial expression");
  std::vector<Rational> coeffs;
  auto bump = [&](int d, const Rational& c) {
    if (static_cast<int>(coeffs.size()) <= d) coeffs.resize(d + 1, Rational(0));
    coeffs[d] = coeffs[d] + c;
  };
  bool first = true;
  while (!cur.done()) {
    int sign = 1;
    if (cur.eat('+')) {
      sign = 1;
    } else if (cur.eat('-')) {
      sign = -1;
    } else if (!first) {
      fail(errc::parse_error, "expected + or - between polynomial terms");
    }
    first = false;
    Rational mag(1);
    bool have_coeff = false;
    cur.skip_ws();
    if (cur.eat_word("\\frac")) {
      if (!cur.eat('{')) fail(errc::parse_error, "malformed \\frac");
      std::string num = cur.integer();
      if (!cur.eat('}') || !cur.eat('{')) fail(errc::parse_error, "malformed \\frac");
      std::string den = cur.integer();
      if (!cur.eat('}')) fail(errc::parse_error, "malformed \\frac");
      mag = Rational::from_string(num + "/" + den);
      have_coeff = true;
    } else {
      cur.skip_ws();
      if (cur.i < cur.s.size() && (std::isdigit(static_cast<unsigned char>(cur.s[cur.i])) != 0)) {
        std::string digits = cur.integer();
        if (cur.eat('/'))
          mag = Rational::from_string(digits + "/" + cur.integer());
        else
          mag = Rational::from_string(digits);
        have_coeff = true;
      }
    }
    cur.eat('*');
    int degree = 0;
    if (cur.eat_word(var_name(v))) {
      degree = 1;
      if (cur.eat('^')) {
        if (cur.eat('{')) {
          degree = std::stoi(cur.integer());
          if (!cur.eat('}')) fail(errc::parse_error, "malformed exponent");
        } else {
          degree = std::stoi(cur.integer());
        }
        if (degree < 0) fail(errc::parse_error, "negative exponent in polynomial");
      }
    } else if (!have_coeff) {
      fail(errc::parse_error, "expected coefficient or variable in polynomial term");
    }
    bump(degree, Rational(sign) * mag);
  }
  return Poly(v, std::move(coeffs));
}

std::string constant_latex(const SymbolicConstant& c) {
  if (c.is_zero()) return "0";
  std::string out;
  if (c.rational == Rational(-1))
    out = "-";
  else if (!(c.rational == Rational(1)))
    out = c.rational.is_integer()
              ? c.rational.to_string()
              : std::string(c.rational.sign() < 0 ? "-" : "") + "\\frac{" +
                    c.rational.abs().num_string() + "}{" + c.rational.abs().den_string() + "}";
  auto power = [&](const std::string& base, int e) {
    if (e == 0) return;
    if (!out.empty() && out != "-") out += " ";
    out += base;
    if (e != 1) out += "^{" + std::to_string(e) + "}";
  };
  power("\\pi", c.pi_exp);
  power("\\mathrm{vol}(X)", c.vol_x_exp);
  power("\\mathrm{vol}(X_d)", c.vol_dual_exp);
  for (const auto& [name, exp] : c.extra) power("\\mathrm{" + name + "}", exp);
  if (out.empty() || out == "-") out += "1";
  return out;
}

std::string to_json(const ComputeResponse& r) {
  json j{{"command", "compute"},
         {"group", r.group},
         {"weight", rats_json(r.weight)},
         {"torsion", torsion_json(r.result)}};
  if (r.m) j["m"] = *r.m;
  if (r.value) j["value"] = rat_json(*r.value);
  return dump(j);
}

ComputeResponse parse_compute_response(const std::string& text) {
  json j = parse_doc(text);
  check_command(j, "compute");
  ComputeResponse r;
  r.group = j.at("group").get<std::string>();
  r.weight = rats_from(j.at("weight"), "weight");
  r.result = torsion_from(j.at("torsion"), "torsion");
  if (j.contains("m")) r.m = j["m"].get<long>();
  if (j.contains("value")) r.value = rat_from(j["value"], "value");
  return r;
}

std::string to_json(const DimResponse& r) {
  json j{{"command", "dim"},
         {"group", r.group},
         {"weight", rats_json(r.weight)},
         {"dim", poly_json(r.dim)}};
  if (r.m) j["m"] = *r.m;
  if (r.value) j["value"] = rat_json(*r.value);
  return dump(j);
}

DimResponse parse_dim_response(const std::string& text) {
  json j = parse_doc(text);
  check_command(j, "dim");
  DimResponse r;
  r.group = j.at("group").get<std::string>();
  r.weight = rats_from(j.at("weight"), "weight");
  r.dim = poly_from(j.at("dim"), "dim");
  if (j.contains("m")) r.m = j["m"].get<long>();
  if (j.contains("value")) r.value = rat_from(j["value"], "value");
  return r;
}

std::string to_json(const KostantResponse& r) {
  json data = json::array();
  for (const auto& d : r.data)
    data.push_back(json{{"length", d.length},
                        {"lambda", poly_json(d.lambda)},
                        {"sigma", affine_weight_json(d.sigma)}});
  return dump(json{{"command", "kostant"},
                   {"group", r.group},
                   {"weight", rats_json(r.weight)},
                   {"normalized_weight", rats_json(r.normalized_weight)},
                   {"data", data}});
}

KostantResponse parse_kostant_response(const std::string& text) {
  json j = parse_doc(text);
  check_command(j, "kostant");
  KostantResponse r;
  r.group = j.at("group").get<std::string>();
  r.weight = rats_from(j.at("weight"), "weight");
  r.normalized_weight = rats_from(j.at("normalized_weight"), "normalized_weight");
  for (const auto& d : j.at("data"))
    r.data.push_back(KostantDatum{d.at("length").get<int>(), poly_from(d.at("lambda"), "lambda"),
                                  affine_weight_from(d.at("sigma"), "sigma")});
  return r;
}

std::string to_json(const PlancherelResponse& r) {
  return dump(json{{"command", "plancherel"},
                   {"group", r.group},
                   {"sigma", rats_json(r.sigma)},
                   {"density", poly_json(r.density)}});
}

PlancherelResponse parse_plancherel_response(const std::string& text) {
  json j = parse_doc(text);
  check_command(j, "plancherel");
  PlancherelResponse r;
  r.group = j.at("group").get<std::string>();
  r.sigma = rats_from(j.at("sigma"), "sigma");
  r.density = poly_from(j.at("density"), "density");
  return r;
}

std::string to_json(const GapResponse& r) {
  return dump(json{{"command", "gap"},
                   {"group", r.group},
                   {"weight", rats_json(r.weight)},
                   {"m", r.m},
                   {"p", r.p},
                   {"gap", rat_json(r.gap)}});
}

GapResponse parse_gap_response(const std::string& text) {
  json j = parse_doc(text);
  check_command(j, "gap");
  GapResponse r;
  r.group = j.at("group").get<std::string>();
  r.weight = rats_from(j.at("weight"), "weight");
  r.m = j.at("m").get<long>();
  r.p = j.at("p").get<int>();
  r.gap = rat_from(j.at("gap"), "gap");
  return r;
}

std::string to_json(const TableResponse& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    json jr{{"group", row.group}, {"constant", constant_json(row.constant)}};
    if (row.leading) jr["leading"] = rat_json(*row.leading);
    rows.push_back(jr);
  }
  return dump(json{{"command", "table"}, {"table", r.table}, {"rows", rows}});
}

TableResponse parse_table_response(const std::string& text) {
  json j = parse_doc(text);
  check_command(j, "table");
  TableResponse r;
  r.table = j.at("table").get<std::string>();
  for (const auto& row : j.at("rows")) {
    TableRow tr;
    tr.group = row.at("group").get<std::string>();
    tr.constant = constant_from(row.at("constant"), "constant");
    if (row.contains("leading")) tr.leading = rat_from(row["leading"], "leading");
    r.rows.push_back(std::move(tr));
  }
  return r;
}

std::string to_json(const ErrorResponse& r) {
  return dump(json{{"error", json{{"code", r.code}, {"message", r.message}}}});
}

ErrorResponse parse_error_response(const std::string& text) {
  json j = parse_doc(text);
  if (!j.is_object() || !j.contains("error")) fail(errc::parse_error, "expected error document");
  return ErrorResponse{j["error"].at("code").get<std::string>(),
                       j["error"].at("message").get<std::string>()};
}

std::string to_json(const GoldenRecord& r) {
  json j{{"group", r.group},
         {"weight", rats_json(r.weight)},
         {"poly_coeffs", rats_json(r.poly_coeffs)},
         {"prefactor", constant_json(r.prefactor)}};
  return j.dump();
}

GoldenRecord parse_golden_record(const std::string& line) {
  json j = parse_doc(line);
  GoldenRecord r;
  r.group = j.at("group").get<std::string>();
  r.weight = rats_from(j.at("weight"), "weight");
  r.poly_coeffs = rats_from(j.at("poly_coeffs"), "poly_coeffs");
  r.prefactor = constant_from(j.at("prefactor"), "prefactor");
  return r;
}

namespace {

std::string weight_text(const std::vector<Rational>& w) {
  std::string out = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ", ";
    out += w[i].to_string();
  }
  return out + ")";
}

}  // namespace

std::string to_text(const ComputeResponse& r) {
  std::ostringstream os;
  os << "group: " << r.group << "\n";
  os << "weight: " << weight_text(r.weight) << "\n";
  os << "prefactor: " << r.result.prefactor.to_string() << "\n";
  os << "poly: " << to_string(r.result.poly) << "\n";
  if (r.result.zero_flag) os << "identically zero\n";
  if (r.m) os << "m: " << *r.m << "\n";
  if (r.value) os << "value: " << r.value->to_string() << "\n";
  return os.str();
}

std::string to_text(const DimResponse& r) {
  std::ostringstream os;
  os << "group: " << r.group << "\n";
  os << "weight: " << weight_text(r.weight) << "\n";
  os << "dim: " << to_string(r.dim) << "\n";
  if (r.m) os << "m: " << *r.m << "\n";
  if (r.value) os << "value: " << r.value->to_string() << "\n";
  return os.str();
}

std::string to_text(const KostantResponse& r) {
  std::ostringstream os;
  os << "group: " << r.group << "\n";
  os << "weight: " << weight_text(r.weight) << "\n";
  os << "normalized: " << weight_text(r.normalized_weight) << "\n";
  for (const auto& d : r.data) {
    os << "length " << d.length << ": lambda = " << to_string(d.lambda) << ", sigma = (";
    for (int i = 0; i < d.sigma.rank(); ++i) {
      if (i) os << ", ";
      os << to_string(Poly::affine(Var::m, d.sigma.coord(i).slope, d.sigma.coord(i).offset));
    }
    os << ") [" << basis_name(d.sigma.basis()) << "]\n";
  }
  return os.str();
}

std::string to_text(const PlancherelResponse& r) {
  std::ostringstream os;
  os << "group: " << r.group << "\n";
  os << "sigma: " << weight_text(r.sigma) << "\n";
  os << "density: " << to_string(r.density) << "\n";
  return os.str();
}

std::string to_text(const GapResponse& r) {
  std::ostringstream os;
  os << "group: " << r.group << "\n";
  os << "weight: " << weight_text(r.weight) << "\n";
  os << "m: " << r.m << "\n";
  os << "p: " << r.p << "\n";
  os << "gap: " << r.gap.to_string() << "\n";
  return os.str();
}

std::string to_text(const TableResponse& r) {
  std::ostringstream os;
  os << "table: " << r.table << "\n";
  for (const auto& row : r.rows) {
    os << row.group << ": " << row.constant.to_string();
    if (row.leading) os << "  (leading " << row.leading->to_string() << ")";
    os << "\n";
  }
  return os.str();
}

std::string to_latex(const ComputeResponse& r) {
  std::ostringstream os;
  os << "% " << r.group << " weight " << weight_text(r.weight) << "\n";
  os << "P_{\\Lambda}(m) = " << constant_latex(r.result.prefactor) << " \\left( "
     << poly_latex(r.result.poly) << " \\right)\n";
  if (r.m && r.value)
    os << "P_{\\Lambda}(" << *r.m << ")/C = " << poly_latex(Poly::constant(Var::m, *r.value))
       << "\n";
  return os.str();
}

std::string to_latex(const DimResponse& r) {
  std::ostringstream os;
  os << "% " << r.group << " weight " << weight_text(r.weight) << "\n";
  os << "\\dim \\tau(m) = " << poly_latex(r.dim) << "\n";
  if (r.m && r.value)
    os << "\\dim \\tau(" << *r.m << ") = " << poly_latex(Poly::constant(Var::m, *r.value)) << "\n";
  return os.str();
}

std::string to_latex(const KostantResponse& r) {
  std::ostringstream os;
  os << "% " << r.group << " weight " << weight_text(r.weight) << "\n";
  for (const auto& d : r.data) {
    os << "\\lambda_{" << d.length << "}(m) = " << poly_latex(d.lambda) << ", \\quad \\sigma = (";
    for (int i = 0; i < d.sigma.rank(); ++i) {
      if (i) os << ", ";
      os << poly_latex(Poly::affine(Var::m, d.sigma.coord(i).slope, d.sigma.coord(i).offset));
    }
    os << ")\n";
  }
  return os.str();
}

std::string to_latex(const PlancherelResponse& r) {
  std::ostringstream os;
  os << "% " << r.group << " sigma " << weight_text(r.sigma) << "\n";
  os << "p_{\\sigma}(t) = " << poly_latex(r.density) << "\n";
  return os.str();
}

std::string to_latex(const GapResponse& r) {
  std::ostringstream os;
  os << "% " << r.group << " weight " << weight_text(r.weight) << ", m = " << r.m
     << ", p = " << r.p << "\n";
  os << "\\mathrm{gap} = " << poly_latex(Poly::constant(Var::m, r.gap)) << "\n";
  return os.str();
}

std::string to_latex(const TableResponse& r) {
  std::ostringstream os;
  os << "% table " << r.table << "\n";
  os << "\\begin{array}{ll}\n";
  for (const auto& row : r.rows) {
    os << row.group << " & " << constant_latex(row.constant);
    if (row.leading) os << " \\quad [" << poly_latex(Poly::constant(Var::m, *row.leading)) << "]";
    os << " \\\\\n";
  }
  os << "\\end{array}\n";
  return os.str();
}

namespace {

const json* resolve_ref(const json& root, const std::string& ref,
                        std::vector<std::string>& errs) {
  const std::string prefix = "#/$defs/";
  if (ref.rfind(prefix, 0) != 0) {
    errs.push_back("unsupported $ref target: " + ref);
    return nullptr;
  }
  const std::string name = ref.substr(prefix.size());
  if (!root.contains("$defs") || !root["$defs"].contains(name)) {
    errs.push_back("unresolved $ref: " + ref);
    return nullptr;
  }
  return &root["$defs"][name];
}

bool type_matches(const json& doc, const std::string& type) {
  if (type == "object") return doc.is_object();
  if (type == "array") return doc.is_array();
  if (type == "string") return doc.is_string();
  if (type == "integer") return doc.is_number_integer();
  if (type == "number") return doc.is_number();
  if (type == "boolean") return doc.is_boolean();
  if (type == "null") return doc.is_null();
  return false;
}

void validate_node(const json& doc, const json& schema, const json& root, const std::string& path,
                   std::vector<std::string>& errs);

bool validates_quietly(const json& doc, const json& schema, const json& root) {
  std::vector<std::string> scratch;
  validate_node(doc, schema, root, "", scratch);
  return scratch.empty();
}

void validate_node(const json& doc, const json& schema, const json& root, const std::string& path,
                   std::vector<std::string>& errs) {
  const std::string at = path.empty() ? "$" : path;
  if (schema.is_boolean()) {
    if (!schema.get<bool>()) errs.push_back(at + ": schema forbids this value");
    return;
  }
  if (!schema.is_object()) {
    errs.push_back(at + ": malformed schema node");
    return;
  }
  if (schema.contains("$ref")) {
    const json* target = resolve_ref(root, schema["$ref"].get<std::string>(), errs);
    if (target) validate_node(doc, *target, root, path, errs);
    return;
  }
  if (schema.contains("oneOf")) {
    int hits = 0;
    for (const auto& sub : schema["oneOf"])
      if (validates_quietly(doc, sub, root)) ++hits;
    if (hits != 1)
      errs.push_back(at + ": matched " + std::to_string(hits) + " of oneOf, expected exactly 1");
    return;
  }
  if (schema.contains("type")) {
    bool ok = false;
    if (schema["type"].is_array()) {
      for (const auto& t : schema["type"]) ok = ok || type_matches(doc, t.get<std::string>());
    } else {
      ok = type_matches(doc, schema["type"].get<std::string>());
    }
    if (!ok) {
      errs.push_back(at + ": wrong type, expected " + schema["type"].dump());
      return;
    }
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& e : schema["enum"]) found = found || e == doc;
    if (!found) errs.push_back(at + ": value not in enum " + schema["enum"].dump());
  }
  if (schema.contains("pattern") && doc.is_string()) {
    std::regex re(schema["pattern"].get<std::string>(), std::regex::ECMAScript);
    if (!std::regex_search(doc.get<std::string>(), re))
      errs.push_back(at + ": string does not match pattern " + schema["pattern"].dump());
  }
  if (schema.contains("minimum") && doc.is_number()) {
    if (doc.get<double>() < schema["minimum"].get<double>())
      errs.push_back(at + ": below minimum " + schema["minimum"].dump());
  }
  if (schema.contains("maximum") && doc.is_number()) {
    if (doc.get<double>() > schema["maximum"].get<double>())
      errs.push_back(at + ": above maximum " + schema["maximum"].dump());
  }
  if (doc.is_object()) {
    if (schema.contains("required"))
      for (const auto& key : schema["required"])
        if (!doc.contains(key.get<std::string>()))
          errs.push_back(at + ": missing required key " + key.dump());
    const json props = schema.value("properties", json::object());
    for (auto it = doc.begin(); it != doc.end(); ++it) {
      const std::string child = at + "." + it.key();
      if (props.contains(it.key())) {
        validate_node(it.value(), props[it.key()], root, child, errs);
      } else if (schema.contains("additionalProperties")) {
        const json& ap = schema["additionalProperties"];
        if (ap.is_boolean() && !ap.get<bool>())
          errs.push_back(child + ": unexpected key");
        else if (!ap.is_boolean())
          validate_node(it.value(), ap, root, child, errs);
      }
    }
  }
  if (doc.is_array()) {
    if (schema.contains("minItems") && doc.size() < schema["minItems"].get<size_t>())
      errs.push_back(at + ": fewer than minItems " + schema["minItems"].dump());
    if (schema.contains("maxItems") && doc.size() > schema["maxItems"].get<size_t>())
      errs.push_back(at + ": more than maxItems " + schema["maxItems"].dump());
    if (schema.contains("items"))
      for (size_t i = 0; i < doc.size(); ++i)
        validate_node(doc[i], schema["items"], root, at + "[" + std::to_string(i) + "]", errs);
  }
}

}  // namespace

std::vector<std::string> schema_validate(const std::string& document_json,
                                         const std::string& schema_json) {
  json doc = parse_doc(document_json);
  json schema = parse_doc(schema_json);
  std::vector<std::string> errs;
  validate_node(doc, schema, schema, "", errs);
  return errs;
}

}  // namespace torsionlab
