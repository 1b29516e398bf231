// The little language naming functions on the command line.
//
//   exp <alpha>            powers alpha^i over the full field
//   affine <a> <b>         x -> ax + b
//   log <alpha>            discrete log table (alpha primitive)
//   recip                  x -> 1/x with 1/0 = -inf
//   expseries              the truncated exponential series
//   cosk <alpha> <k>       k-trigonometric cosine row
//   sink <alpha> <k>       k-trigonometric sine row
//   compose <spec> ; <spec>   left spec applied after the right one
//   values v0,v1,...       an explicit value table
//
// Parsing errors are usage errors (ParseError, exit code 2); evaluation
// errors are the library's domain errors (exit code 3).
#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ffcalc/polynomial.hpp"
#include "ffcalc/tabulated.hpp"

namespace ffcalc {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FuncSpec {
  enum class Kind {
    Exp,
    Affine,
    Log,
    Recip,
    ExpSeries,
    CosK,
    SinK,
    Compose,
    Values,
  };

  Kind kind = Kind::Recip;
  std::int64_t a = 0;  // alpha, or the affine slope
  std::int64_t b = 0;  // k, or the affine offset
  std::vector<std::int64_t> values;
  std::unique_ptr<FuncSpec> outer;
  std::unique_ptr<FuncSpec> inner;
};

FuncSpec parse_funcspec(const std::string& text);

// Comma-separated integer list; shared by --values and --coeffs.
std::vector<std::int64_t> parse_int_list(const std::string& text);

using TableVariant = std::variant<FpTable, GaussianTable, ExtTable>;
using SeriesVariant = std::variant<FpPolynomial, GaussianPolynomial>;

// Tabulates the spec over GF(p). Notes collect human-readable remarks
// (e.g. the degenerate trig mode).
TableVariant spec_table(const FuncSpec& spec, PrimeModulus m,
                        std::vector<std::string>& notes);

// MacLaurin series of the spec: interpolation of its table, except that
// expseries yields its coefficients directly. Tables containing -inf have
// no series and raise Undefined.
SeriesVariant spec_series(const FuncSpec& spec, PrimeModulus m,
                          std::vector<std::string>& notes);

// Builds a field table from explicit values: a full-field table when
// exactly p values are given, otherwise an index-ring table.
FpTable values_table(const std::vector<std::int64_t>& values, PrimeModulus m);

}  // namespace ffcalc
