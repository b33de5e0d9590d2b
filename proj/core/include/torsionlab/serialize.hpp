#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torsionlab/torsion.hpp"

namespace torsionlab {

// Typed response documents for the command-line surface. All JSON emitters
// follow fixed conventions: rationals as ["num","den"] decimal strings, polys
// as ascending coefficient arrays, prefactors with explicit exponent fields.

struct ComputeResponse {
  std::string group;
  std::vector<Rational> weight;  // input coordinates
  TorsionResult result;
  std::optional<long> m;
  std::optional<Rational> value;

  friend bool operator==(const ComputeResponse& a, const ComputeResponse& b) {
    return a.group == b.group && a.weight == b.weight && a.result == b.result && a.m == b.m &&
           a.value == b.value;
  }
};

struct DimResponse {
  std::string group;
  std::vector<Rational> weight;
  Poly dim{Var::m};
  std::optional<long> m;
  std::optional<Rational> value;

  friend bool operator==(const DimResponse& a, const DimResponse& b) {
    return a.group == b.group && a.weight == b.weight && a.dim == b.dim && a.m == b.m &&
           a.value == b.value;
  }
};

struct KostantResponse {
  std::string group;
  std::vector<Rational> weight;             // as given
  std::vector<Rational> normalized_weight;  // theta-normalized input coordinates
  std::vector<KostantDatum> data;

  friend bool operator==(const KostantResponse& a, const KostantResponse& b) {
    return a.group == b.group && a.weight == b.weight &&
           a.normalized_weight == b.normalized_weight && a.data == b.data;
  }
};

struct PlancherelResponse {
  std::string group;
  std::vector<Rational> sigma;
  Poly density{Var::t};  // constant sigma, so the m-dependence is trivial

  friend bool operator==(const PlancherelResponse& a, const PlancherelResponse& b) {
    return a.group == b.group && a.sigma == b.sigma && a.density == b.density;
  }
};

struct GapResponse {
  std::string group;
  std::vector<Rational> weight;
  long m = 0;
  int p = 0;
  Rational gap{0};

  friend bool operator==(const GapResponse& a, const GapResponse& b) {
    return a.group == b.group && a.weight == b.weight && a.m == b.m && a.p == b.p &&
           a.gap == b.gap;
  }
};

struct TableRow {
  std::string group;
  SymbolicConstant constant;              // multiplies vol(X) * m * dim tau(m)
  std::optional<Rational> leading;        // leading torsion constant when fixed

  friend bool operator==(const TableRow& a, const TableRow& b) {
    return a.group == b.group && a.constant == b.constant && a.leading == b.leading;
  }
};

struct TableResponse {
  std::string table;
  std::vector<TableRow> rows;

  friend bool operator==(const TableResponse& a, const TableResponse& b) {
    return a.table == b.table && a.rows == b.rows;
  }
};

struct ErrorResponse {
  std::string code;
  std::string message;

  friend bool operator==(const ErrorResponse& a, const ErrorResponse& b) {
    return a.code == b.code && a.message == b.message;
  }
};

struct GoldenRecord {
  std::string group;
  std::vector<Rational> weight;
  std::vector<Rational> poly_coeffs;
  SymbolicConstant prefactor;

  friend bool operator==(const GoldenRecord& a, const GoldenRecord& b) {
    return a.group == b.group && a.weight == b.weight && a.poly_coeffs == b.poly_coeffs &&
           a.prefactor == b.prefactor;
  }
};

std::string to_json(const ComputeResponse& r);
std::string to_json(const DimResponse& r);
std::string to_json(const KostantResponse& r);
std::string to_json(const PlancherelResponse& r);
std::string to_json(const GapResponse& r);
std::string to_json(const TableResponse& r);
std::string to_json(const ErrorResponse& r);
std::string to_json(const GoldenRecord& r);

ComputeResponse parse_compute_response(const std::string& json);
DimResponse parse_dim_response(const std::string& json);
KostantResponse parse_kostant_response(const std::string& json);
PlancherelResponse parse_plancherel_response(const std::string& json);
GapResponse parse_gap_response(const std::string& json);
TableResponse parse_table_response(const std::string& json);
ErrorResponse parse_error_response(const std::string& json);
GoldenRecord parse_golden_record(const std::string& json_line);

std::string to_text(const ComputeResponse& r);
std::string to_text(const DimResponse& r);
std::string to_text(const KostantResponse& r);
std::string to_text(const PlancherelResponse& r);
std::string to_text(const GapResponse& r);
std::string to_text(const TableResponse& r);

// LaTeX for polynomials, parseable back bit-exactly by poly_from_latex.
std::string poly_latex(const Poly& p);
Poly poly_from_latex(const std::string& text, Var v);
std::string constant_latex(const SymbolicConstant& c);

std::string to_latex(const ComputeResponse& r);
std::string to_latex(const DimResponse& r);
std::string to_latex(const KostantResponse& r);
std::string to_latex(const PlancherelResponse& r);
std::string to_latex(const GapResponse& r);
std::string to_latex(const TableResponse& r);

// Minimal JSON-Schema subset validator (type, enum, pattern, required,
// properties, additionalProperties, items, min/maxItems, oneOf, $ref into
// $defs). Returns human-readable violations; empty means valid.
std::vector<std::string> schema_validate(const std::string& document_json,
                                         const std::string& schema_json);

}  // namespace torsionlab
