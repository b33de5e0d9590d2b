#include "torsionlab/cli.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "torsionlab/errors.hpp"
#include "torsionlab/serialize.hpp"
#include "torsionlab/spectrum.hpp"
#include "torsionlab/verify.hpp"

namespace torsionlab {
namespace {

std::vector<Rational> parse_coord_list(const std::string& text) {
  std::vector<Rational> out;
  size_t pos = 0;
  while (true) {
    size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                  : comma - pos);
    size_t a = tok.find_first_not_of(" \t");
    size_t b = tok.find_last_not_of(" \t");
    if (a == std::string::npos) fail(errc::bad_args, "empty entry in coordinate list");
    out.push_back(Rational::from_string(tok.substr(a, b - a + 1)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

enum class Fmt { json, latex, text };

Fmt parse_format(const std::string& f) {
  if (f == "json") return Fmt::json;
  if (f == "latex") return Fmt::latex;
  if (f == "text") return Fmt::text;
  fail(errc::bad_args, "unknown format: " + f);
}

template <class R>
std::string render(const R& resp, Fmt fmt) {
  switch (fmt) {
    case Fmt::json:
      return to_json(resp);
    case Fmt::latex:
      return to_latex(resp);
    case Fmt::text:
      return to_text(resp);
  }
  return {};
}

struct GoldenCase {
  const char* group;
  const char* weight;
};

// The committed corpus, regenerated verbatim by golden-write.
const GoldenCase kGoldenCases[] = {
    {"so(3,1)", "1,1"},         {"so(3,1)", "2,1"},
    {"so(3,1)", "2,2"},         {"so(3,1)", "3,1"},
    {"so(3,1)", "3,-2"},        {"so(5,1)", "1,1,1"},
    {"so(5,1)", "2,1,1"},       {"so(5,1)", "2,2,1"},
    {"so(5,3)", "1,1,1,1"},     {"so(5,3)", "2,1,1,1"},
    {"so(5,3)", "2,2,1,-1"},    {"so(7,1)", "1,1,1,1"},
    {"so(7,3)", "1,1,1,1,1"},   {"so(7,5)", "1,1,1,1,1,1"},
    {"so(7,5)", "2,1,1,1,1,1"}, {"so(9,7)", "1,1,1,1,1,1,1,1"},
    {"sl3", "1,0"},             {"sl3", "0,1"},
    {"sl3", "2,0"},             {"sl3", "2,1"},
    {"sl3", "3,1"},             {"sl3", "3,2"},
    {"sl3", "4,2"},             {"sl3", "5,1"},
};

}  // namespace

DispatchResult dispatch(const std::vector<std::string>& args) {
  DispatchResult res;
  CLI::App app{"exact torsion polynomials for odd orthogonal and rank-two special linear families",
               "torsionlab"};
  app.require_subcommand(1);

  std::string group, weight, sigma_text, format = "json";
  std::string golden_path, out_path, table_name;
  std::vector<std::string> suites;
  long m_val = 0;
  int p_val = 0;
  int max_rank = 6;
  std::uint64_t seed_val = 0;
  bool symbolic = false, quick = false;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "latex", "text"}));
  };

  CLI::App* compute = app.add_subcommand("compute", "torsion growth polynomial of a weight family");
  compute->add_option("--group", group, "group, so(p,q) with p,q odd or sl3")->required();
  compute->add_option("--weight", weight, "highest weight coordinates, comma separated")
      ->required();
  compute->add_option("--m", m_val, "also evaluate the polynomial at this parameter");
  compute->add_flag("--symbolic", symbolic, "emit the symbolic polynomial (default)");
  add_format(compute);

  CLI::App* dim = app.add_subcommand("dim", "dimension polynomial of a weight family");
  dim->add_option("--group", group)->required();
  dim->add_option("--weight", weight)->required();
  dim->add_option("--m", m_val, "also evaluate at this parameter");
  dim->add_flag("--symbolic", symbolic);
  add_format(dim);

  CLI::App* kostant = app.add_subcommand("kostant", "cohomological parameter table of a family");
  kostant->add_option("--group", group)->required();
  kostant->add_option("--weight", weight)->required();
  add_format(kostant);

  CLI::App* plancherel =
      app.add_subcommand("plancherel", "reduced spectral density of a principal series parameter");
  plancherel->add_option("--group", group)->required();
  plancherel->add_option("--sigma", sigma_text, "Levi weight coordinates")->required();
  add_format(plancherel);

  CLI::App* gap = app.add_subcommand("gap", "spectral gap of the twisted form Laplacian (sl3)");
  gap->add_option("--group", group)->required();
  gap->add_option("--weight", weight)->required();
  gap->add_option("--m", m_val, "family parameter, >= 1")->required();
  gap->add_option("--p", p_val, "form degree, 0..5")->required();
  add_format(gap);

  CLI::App* verify = app.add_subcommand("verify", "run the exactness and identity suites");
  verify->add_option("--seed", seed_val, "randomization seed");
  verify->add_option("--max-rank", max_rank, "cap for the randomized sweeps");
  verify->add_option("--golden", golden_path, "golden corpus to diff against");
  verify->add_option("--suite", suites, "run only the named suites");
  verify->add_flag("--quick", quick, "reduced case counts");
  verify->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}));

  CLI::App* table = app.add_subcommand("table", "built-in constant tables");
  table->add_option("name", table_name, "table name")->required();
  add_format(table);

  CLI::App* golden_write =
      app.add_subcommand("golden-write", "recompute the golden corpus records");
  golden_write->add_option("--out", out_path, "destination file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    if (compute->parsed()) {
      GroupSpec g = parse_group(group);
      std::vector<Rational> coords = parse_coord_list(weight);
      ComputeResponse r;
      r.group = g.name();
      r.weight = coords;
      r.result = l2_torsion(g, make_weight(g, coords));
      if (compute->count("--m") > 0) {
        r.m = m_val;
        r.value = r.result.poly(Rational(m_val));
      }
      res.out = render(r, parse_format(format));
    } else if (dim->parsed()) {
      GroupSpec g = parse_group(group);
      std::vector<Rational> coords = parse_coord_list(weight);
      DimResponse r;
      r.group = g.name();
      r.weight = coords;
      r.dim = weyl_dim_poly(g, make_weight(g, coords));
      if (dim->count("--m") > 0) {
        r.m = m_val;
        r.value = r.dim(Rational(m_val));
      }
      res.out = render(r, parse_format(format));
    } else if (kostant->parsed()) {
      GroupSpec g = parse_group(group);
      std::vector<Rational> coords = parse_coord_list(weight);
      Weight w = make_weight(g, coords);
      Weight norm = theta_normalize(g, w);
      KostantResponse r;
      r.group = g.name();
      r.weight = coords;
      r.normalized_weight = weight_input_coords(g, norm);
      r.data = kostant_data(g, norm);
      res.out = render(r, parse_format(format));
    } else if (plancherel->parsed()) {
      GroupSpec g = parse_group(group);
      std::vector<Rational> coords = parse_coord_list(sigma_text);
      const size_t expected = g.family == Family::sl3 ? 1 : static_cast<size_t>(g.rank) - 1;
      if (coords.size() != expected)
        fail(errc::bad_sigma, "expected " + std::to_string(expected) +
                                  " Levi coordinates for " + g.name());
      std::vector<AffineCoord> ac;
      for (const auto& c : coords) ac.push_back(AffineCoord{Rational(0), c});
      AffineWeight sigma(g.family == Family::sl3 ? WBasis::sl3_levi : WBasis::so_levi,
                         std::move(ac));
      PlancherelResponse r;
      r.group = g.name();
      r.sigma = coords;
      r.density = reduced_density(g, sigma).eval_m(Rational(0));
      res.out = render(r, parse_format(format));
    } else if (gap->parsed()) {
      GroupSpec g = parse_group(group);
      std::vector<Rational> coords = parse_coord_list(weight);
      GapResponse r;
      r.group = g.name();
      r.weight = coords;
      r.m = m_val;
      r.p = p_val;
      r.gap = spectral_gap(g, make_weight(g, coords), m_val, p_val);
      res.out = render(r, parse_format(format));
    } else if (verify->parsed()) {
      VerifyOptions opt;
      if (const char* env = std::getenv("TORSIONLAB_SEED"))
        opt.seed = std::strtoull(env, nullptr, 10);
      if (verify->count("--seed") > 0) opt.seed = seed_val;
      opt.max_rank = max_rank;
      opt.golden_path = golden_path;
      opt.quick = quick;
      VerifyReport report = run_verify(suites, opt);
      res.out = format == "text" ? to_text(report) : to_json(report);
      res.exit_code = report.all_passed() ? 0 : 1;
    } else if (table->parsed()) {
      if (table_name != "corollary-constants")
        fail(errc::bad_args, "unknown table: " + table_name);
      TableResponse r;
      r.table = table_name;
      const std::pair<int, int> so_list[] = {{3, 1}, {5, 1}, {3, 3}, {5, 3}, {7, 1}, {5, 5},
                                             {7, 3}, {9, 1}, {7, 5}, {9, 3}, {11, 1}};
      for (auto [p, q] : so_list) {
        GroupSpec g = make_so(p, q);
        LeadingConstant lc =
            leading_constant(g, make_weight(g, std::vector<Rational>(g.rank, Rational(1))));
        TableRow row;
        row.group = g.name();
        row.constant = prefactor_constant(p, q) * sym_rational(lc.value);
        row.leading = lc.value;
        r.rows.push_back(std::move(row));
      }
      {
        GroupSpec g = make_sl3();
        LeadingConstant lc = leading_constant(g, make_weight(g, {Rational(1), Rational(0)}));
        TableRow row;
        row.group = g.name();
        row.constant = SymbolicConstant{Rational(1), 1, 0, -1, {}} * sym_rational(lc.value);
        row.leading = lc.value;
        r.rows.push_back(std::move(row));
      }
      res.out = render(r, parse_format(format));
    } else if (golden_write->parsed()) {
      std::ofstream out(out_path);
      if (!out) fail(errc::io_error, "cannot open " + out_path + " for writing");
      long count = 0;
      for (const auto& gc : kGoldenCases) {
        GroupSpec g = parse_group(gc.group);
        std::vector<Rational> coords = parse_coord_list(gc.weight);
        TorsionResult t = l2_torsion(g, make_weight(g, coords));
        GoldenRecord rec{gc.group, coords, t.poly.coeffs(), t.prefactor};
        out << to_json(rec) << "\n";
        ++count;
      }
      res.out = "wrote " + std::to_string(count) + " records to " + out_path + "\n";
    }
  } catch (const CLI::CallForHelp&) {
    res.out = app.help();
  } catch (const CLI::CallForAllHelp&) {
    res.out = app.help("", CLI::AppFormatMode::All);
  } catch (const CLI::ParseError& e) {
    res.exit_code = 2;
    res.err = to_json(ErrorResponse{"BAD_ARGS", e.what()});
  } catch (const error& e) {
    res.exit_code = 2;
    res.err = to_json(ErrorResponse{error_code_name(e.code()), e.what()});
  } catch (const std::exception& e) {
    res.exit_code = 2;
    res.err = to_json(ErrorResponse{"INTERNAL", e.what()});
  }
  return res;
}

int run_main(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  DispatchResult r = dispatch(args);
  if (!r.out.empty()) std::cout << r.out;
  if (!r.err.empty()) std::cerr << r.err;
  return r.exit_code;
}

}  // namespace torsionlab
