// ffcalc: exact function tables, series, derivatives, integrals and Fourier
// transforms over a prime field GF(p).
//
// Exit codes: 0 on success, 2 on usage or parse errors, 3 on domain errors
// (composite modulus, order violations, non-bijective inversion, ...).
#include <cstdint>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "ffcalc/calculus.hpp"
#include "ffcalc/error.hpp"
#include "ffcalc/funcspec.hpp"
#include "ffcalc/integration.hpp"
#include "ffcalc/interp.hpp"
#include "ffcalc/record.hpp"
#include "ffcalc/special.hpp"
#include "ffcalc/transform.hpp"

namespace {

using namespace ffcalc;

struct CommonArgs {
  std::uint64_t p = 0;
  std::string format = "text";
  bool balanced = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("-p,--prime", args.p, "odd prime modulus")->required();
  cmd->add_option("--format", args.format, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  cmd->add_flag("--balanced", args.balanced,
                "print signed representatives in [-(p-1)/2, (p-1)/2]");
}

std::vector<std::string> indexed_columns(const std::string& stem,
                                         std::size_t n) {
  std::vector<std::string> cols;
  cols.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    cols.push_back(stem + std::to_string(i));
  return cols;
}

template <typename V>
std::vector<Cell> value_row(const std::vector<V>& values) {
  std::vector<Cell> row;
  row.reserve(values.size());
  for (const V& v : values) row.emplace_back(v);
  return row;
}

std::vector<Fp> to_field(const std::vector<std::int64_t>& raw,
                         PrimeModulus m) {
  std::vector<Fp> out;
  out.reserve(raw.size());
  for (std::int64_t v : raw) out.emplace_back(v, m);
  return out;
}

nlohmann::json json_int_list(const std::vector<std::int64_t>& raw) {
  nlohmann::json arr = nlohmann::json::array();
  for (std::int64_t v : raw) arr.push_back(v);
  return arr;
}

void emit(const OutputRecord& rec, const CommonArgs& args) {
  std::cout << render(rec, parse_format(args.format), args.balanced);
}

// ---- table ----------------------------------------------------------------

void run_table(const CommonArgs& args, const std::string& fspec) {
  const PrimeModulus m(args.p);
  OutputRecord rec;
  rec.command = "table";
  rec.p = args.p;
  rec.params["f"] = fspec;
  if (args.balanced) rec.params["balanced"] = true;

  const FuncSpec spec = parse_funcspec(fspec);
  const TableVariant table = spec_table(spec, m, rec.notes);
  std::visit(
      [&rec](const auto& t) {
        rec.columns = indexed_columns("f", t.size());
        rec.payload.push_back(value_row(t.values()));
      },
      table);
  emit(rec, args);
}

// ---- series ---------------------------------------------------------------

void run_series(const CommonArgs& args, const std::string& fspec,
                const std::string& values) {
  if (fspec.empty() == values.empty())
    throw ParseError("series needs exactly one of --function or --values");
  const PrimeModulus m(args.p);
  OutputRecord rec;
  rec.command = "series";
  rec.p = args.p;
  if (args.balanced) rec.params["balanced"] = true;

  FuncSpec spec;
  if (!fspec.empty()) {
    rec.params["f"] = fspec;
    spec = parse_funcspec(fspec);
  } else {
    spec.kind = FuncSpec::Kind::Values;
    spec.values = parse_int_list(values);
    rec.params["values"] = json_int_list(spec.values);
  }
  const SeriesVariant series = spec_series(spec, m, rec.notes);
  std::visit(
      [&rec](const auto& poly) {
        rec.columns = indexed_columns("a", poly.coeffs().size());
        rec.payload.push_back(value_row(poly.coeffs()));
      },
      series);
  emit(rec, args);
}

// ---- expand ---------------------------------------------------------------

void run_expand(const CommonArgs& args, const std::string& coeffs,
                std::int64_t beta) {
  const PrimeModulus m(args.p);
  OutputRecord rec;
  rec.command = "expand";
  rec.p = args.p;
  const std::vector<std::int64_t> raw = parse_int_list(coeffs);
  rec.params["coeffs"] = json_int_list(raw);
  rec.params["beta"] = beta;
  if (args.balanced) rec.params["balanced"] = true;

  const FpPolynomial poly(m, to_field(raw, m));
  const AdicExpansion<Fp> e = taylor_expand(poly, Fp(beta, m));
  rec.columns = indexed_columns("b", e.coeffs.size());
  rec.payload.push_back(value_row(e.coeffs));
  emit(rec, args);
}

// ---- derive ---------------------------------------------------------------

void run_derive(const CommonArgs& args, const std::string& coeffs,
                const std::string& ring_name, std::uint64_t order,
                const std::string& kind) {
  const PrimeModulus m(args.p);
  OutputRecord rec;
  rec.command = "derive";
  rec.p = args.p;
  const std::vector<std::int64_t> raw = parse_int_list(coeffs);
  rec.params["coeffs"] = json_int_list(raw);
  rec.params["ring"] = ring_name;
  rec.params["order"] = order;
  rec.params["kind"] = kind;
  if (args.balanced) rec.params["balanced"] = true;

  Ring ring = Ring::Plain;
  if (ring_name == "cyclic") ring = Ring::Cyclic;
  else if (ring_name == "negacyclic") ring = Ring::Negacyclic;

  const FpPolynomial poly(m, to_field(raw, m), ring);
  std::vector<Fp> out;
  if (ring == Ring::Negacyclic) {
    if (kind == "classical")
      throw WrongRing("the classical derivative is not defined on the "
                      "negacyclic ring");
    out = negacyclic_hasse_derivative(poly, order).padded(args.p - 1);
  } else if (kind == "classical") {
    out = classical_derivative(poly, order).coeffs();
  } else {
    out = hasse_derivative(poly, order).coeffs();
  }
  rec.columns = indexed_columns("a", out.size());
  rec.payload.push_back(value_row(out));
  emit(rec, args);
}

// ---- integrate ------------------------------------------------------------

void run_integrate(const CommonArgs& args, const std::string& values,
                   const std::string& coeffs, bool powersum,
                   std::int64_t upper, bool upper_given) {
  const PrimeModulus m(args.p);
  OutputRecord rec;
  rec.command = "integrate";
  rec.p = args.p;
  if (args.balanced) rec.params["balanced"] = true;

  const int modes = int(!values.empty()) + int(!coeffs.empty()) + int(powersum);
  if (modes != 1)
    throw ParseError(
        "integrate needs exactly one of --values, --coeffs, --powersum-table");
  if (upper_given && (upper < 0 || static_cast<std::uint64_t>(upper) > args.p - 1))
    throw IndexOutOfRange("upper limit " + std::to_string(upper) +
                          " outside 0..p-1");

  if (powersum) {
    rec.params["powersum_table"] = true;
    const std::uint64_t n_max =
        upper_given ? static_cast<std::uint64_t>(upper) : args.p - 1;
    rec.params["nmax"] = n_max;
    rec.columns = indexed_columns("i", args.p);
    for (const auto& row : power_sum_table(m, n_max))
      rec.payload.push_back(value_row(row));
    emit(rec, args);
    return;
  }

  rec.columns = {"value"};
  if (!values.empty()) {
    const std::vector<std::int64_t> raw = parse_int_list(values);
    rec.params["values"] = json_int_list(raw);
    const FpTable f = values_table(raw, m);
    Fp result = Fp::zero(args.p);
    if (upper_given && static_cast<std::uint64_t>(upper) != args.p - 1) {
      rec.params["upper"] = upper;
      result = partial_integral(f, static_cast<std::uint64_t>(upper));
      // Power-sum route: sum_i a_i S_N(i) over the MacLaurin coefficients.
      const std::vector<Fp> a = maclaurin(f).padded(args.p);
      const auto table = power_sum_table(m, static_cast<std::uint64_t>(upper));
      Fp via_sums = Fp::zero(args.p);
      for (std::uint64_t i = 0; i < args.p; ++i)
        via_sums += a[i] * table.back()[i];
      rec.notes.push_back(via_sums == result
                              ? "power-sum route agrees"
                              : "power-sum route DISAGREES");
    } else {
      result = definite_integral(f);
      const FpPolynomial a = maclaurin(f);
      rec.notes.push_back(integral_via_coefficient(a) == result
                              ? "coefficient route (p-1)*a[p-1] agrees"
                              : "coefficient route DISAGREES");
    }
    rec.payload.push_back({Cell(result)});
  } else {
    const std::vector<std::int64_t> raw = parse_int_list(coeffs);
    rec.params["coeffs"] = json_int_list(raw);
    const FpPolynomial poly(m, to_field(raw, m));
    const Fp result = integral_via_coefficient(poly);
    const Fp direct =
        definite_integral(tabulate(poly, DomainDescriptor::full_field(m)));
    rec.notes.push_back(direct == result ? "direct summation agrees"
                                         : "direct summation DISAGREES");
    rec.payload.push_back({Cell(result)});
  }
  emit(rec, args);
}

// ---- ffft -----------------------------------------------------------------

void run_ffft(const CommonArgs& args, std::int64_t alpha_raw,
              const std::string& coeffs, const std::string& values,
              bool inverse, bool bridge) {
  const PrimeModulus m(args.p);
  OutputRecord rec;
  rec.command = "ffft";
  rec.p = args.p;
  rec.params["alpha"] = alpha_raw;
  if (args.balanced) rec.params["balanced"] = true;

  const Fp alpha(alpha_raw, m);
  if (!coeffs.empty() && values.empty() && !inverse && !bridge) {
    const std::vector<std::int64_t> raw = parse_int_list(coeffs);
    rec.params["coeffs"] = json_int_list(raw);
    rec.params["direction"] = "forward";
    const SpectrumVector spectrum = ffft(to_field(raw, m), alpha);
    rec.columns = indexed_columns("A", spectrum.values.size());
    rec.payload.push_back(value_row(spectrum.values));
  } else if (coeffs.empty() && !values.empty() && inverse && !bridge) {
    const std::vector<std::int64_t> raw = parse_int_list(values);
    rec.params["values"] = json_int_list(raw);
    rec.params["direction"] = "inverse";
    const std::vector<Fp> out =
        inverse_ffft(SpectrumVector{alpha, to_field(raw, m)});
    rec.columns = indexed_columns("a", out.size());
    rec.payload.push_back(value_row(out));
  } else if (coeffs.empty() && !values.empty() && bridge && !inverse) {
    const std::vector<std::int64_t> raw = parse_int_list(values);
    rec.params["values"] = json_int_list(raw);
    rec.params["direction"] = "bridge";
    const BridgeReport report = table_to_series_bridge(values_table(raw, m), alpha);
    rec.columns = indexed_columns("c", report.recovered.size());
    rec.payload.push_back(value_row(report.recovered));
    std::string mac = "maclaurin coefficients:";
    for (const Fp& a : report.maclaurin) mac += " " + a.str();
    rec.notes.push_back(mac);
    if (report.exact) {
      rec.notes.push_back("recovery exact: top coefficient is zero");
    } else {
      rec.notes.push_back(
          "constant slot holds a0 + a[p-1] = " + report.constant_slot.str() +
          " (top coefficient nonzero)");
    }
    rec.notes.push_back("f(0) = " + report.f_at_zero.str() +
                        " carried out of band");
  } else {
    throw ParseError(
        "ffft needs --coeffs, or --values with --inverse or --bridge");
  }
  emit(rec, args);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact function tables, series and transforms over a prime field"};
  app.require_subcommand(1);

  CommonArgs table_args;
  std::string table_spec;
  CLI::App* table_cmd =
      app.add_subcommand("table", "tabulate a function over its domain");
  add_common(table_cmd, table_args);
  table_cmd->add_option("-f,--function", table_spec, "function spec")
      ->required();

  CommonArgs series_args;
  std::string series_spec, series_values;
  CLI::App* series_cmd =
      app.add_subcommand("series", "MacLaurin coefficients of a function");
  add_common(series_cmd, series_args);
  series_cmd->add_option("-f,--function", series_spec, "function spec");
  series_cmd->add_option("--values", series_values,
                         "explicit value table v0,v1,...");

  CommonArgs expand_args;
  std::string expand_coeffs;
  std::int64_t expand_beta = 0;
  CLI::App* expand_cmd = app.add_subcommand(
      "expand", "rewrite a polynomial in powers of (x - beta)");
  add_common(expand_cmd, expand_args);
  expand_cmd->add_option("-c,--coeffs", expand_coeffs, "coefficients a0,a1,...")
      ->required();
  expand_cmd->add_option("-b,--beta", expand_beta, "expansion point")
      ->required();

  CommonArgs derive_args;
  std::string derive_coeffs, derive_ring = "plain", derive_kind = "hasse";
  std::uint64_t derive_order = 1;
  CLI::App* derive_cmd = app.add_subcommand("derive", "derivative of a polynomial");
  add_common(derive_cmd, derive_args);
  derive_cmd->add_option("-c,--coeffs", derive_coeffs, "coefficients a0,a1,...")
      ->required();
  derive_cmd->add_option("--ring", derive_ring, "plain, cyclic or negacyclic")
      ->check(CLI::IsMember({"plain", "cyclic", "negacyclic"}));
  derive_cmd->add_option("--order", derive_order, "derivative order r");
  derive_cmd->add_option("--kind", derive_kind, "hasse or classical")
      ->check(CLI::IsMember({"hasse", "classical"}));

  CommonArgs integrate_args;
  std::string integrate_values, integrate_coeffs;
  bool integrate_powersum = false;
  std::int64_t integrate_upper = 0;
  CLI::App* integrate_cmd =
      app.add_subcommand("integrate", "definite integrals and partial sums");
  add_common(integrate_cmd, integrate_args);
  integrate_cmd->add_option("--values", integrate_values,
                            "value table v0,v1,...");
  integrate_cmd->add_option("-c,--coeffs", integrate_coeffs,
                            "coefficients a0,a1,...");
  integrate_cmd->add_flag("--powersum-table", integrate_powersum,
                          "print the partial power sum table S_N(i)");
  CLI::Option* upper_opt = integrate_cmd->add_option(
      "-N,--upper", integrate_upper, "upper summation limit");

  CommonArgs ffft_args;
  std::string ffft_coeffs, ffft_values;
  std::int64_t ffft_alpha = 0;
  bool ffft_inverse = false, ffft_bridge = false;
  CLI::App* ffft_cmd =
      app.add_subcommand("ffft", "finite field Fourier transform");
  add_common(ffft_cmd, ffft_args);
  ffft_cmd->add_option("-a,--alpha", ffft_alpha, "transform kernel")
      ->required();
  ffft_cmd->add_option("-c,--coeffs", ffft_coeffs, "coefficients a0,a1,...");
  ffft_cmd->add_option("--values", ffft_values, "spectrum or table values");
  ffft_cmd->add_flag("--inverse", ffft_inverse, "invert a spectrum");
  ffft_cmd->add_flag("--bridge", ffft_bridge,
                     "recover series coefficients from a full field table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (table_cmd->parsed()) {
      run_table(table_args, table_spec);
    } else if (series_cmd->parsed()) {
      run_series(series_args, series_spec, series_values);
    } else if (expand_cmd->parsed()) {
      run_expand(expand_args, expand_coeffs, expand_beta);
    } else if (derive_cmd->parsed()) {
      run_derive(derive_args, derive_coeffs, derive_ring, derive_order,
                 derive_kind);
    } else if (integrate_cmd->parsed()) {
      run_integrate(integrate_args, integrate_values, integrate_coeffs,
                    integrate_powersum, integrate_upper,
                    upper_opt->count() > 0);
    } else if (ffft_cmd->parsed()) {
      run_ffft(ffft_args, ffft_alpha, ffft_coeffs, ffft_values, ffft_inverse,
               ffft_bridge);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
