#include "ffcalc/funcspec.hpp"

#include <sstream>

#include "ffcalc/interp.hpp"
#include "ffcalc/special.hpp"

namespace ffcalc {

namespace {

std::vector<std::string> tokenize(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

std::int64_t parse_int(const std::string& tok) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + tok + "'");
  }
  if (used != tok.size())
    throw ParseError("expected an integer, got '" + tok + "'");
  return v;
}

class Parser {
 public:
  explicit Parser(std::vector<std::string> tokens)
      : tokens_(std::move(tokens)) {}

  FuncSpec parse() {
    FuncSpec spec = parse_spec();
    if (pos_ != tokens_.size())
      throw ParseError("unexpected trailing token '" + tokens_[pos_] + "'");
    return spec;
  }

 private:
  FuncSpec parse_spec() {
    const std::string head = next("function name");
    FuncSpec spec;
    if (head == "exp") {
      spec.kind = FuncSpec::Kind::Exp;
      spec.a = parse_int(next("alpha"));
    } else if (head == "affine") {
      spec.kind = FuncSpec::Kind::Affine;
      spec.a = parse_int(next("slope"));
      spec.b = parse_int(next("offset"));
    } else if (head == "log") {
      spec.kind = FuncSpec::Kind::Log;
      spec.a = parse_int(next("alpha"));
    } else if (head == "recip") {
      spec.kind = FuncSpec::Kind::Recip;
    } else if (head == "expseries") {
      spec.kind = FuncSpec::Kind::ExpSeries;
    } else if (head == "cosk" || head == "sink") {
      spec.kind = head == "cosk" ? FuncSpec::Kind::CosK : FuncSpec::Kind::SinK;
      spec.a = parse_int(next("alpha"));
      spec.b = parse_int(next("k"));
      if (spec.b < 0) throw ParseError("k must be nonnegative");
    } else if (head == "compose") {
      spec.kind = FuncSpec::Kind::Compose;
      spec.outer = std::make_unique<FuncSpec>(parse_spec());
      const std::string sep = next("';'");
      if (sep != ";")
        throw ParseError("expected ';' between composed specs, got '" + sep +
                         "'");
      spec.inner = std::make_unique<FuncSpec>(parse_spec());
    } else if (head == "values") {
      spec.kind = FuncSpec::Kind::Values;
      spec.values = parse_int_list(next("value list"));
    } else {
      throw ParseError("unknown function '" + head + "'");
    }
    return spec;
  }

  std::string next(const char* what) {
    if (pos_ >= tokens_.size())
      throw ParseError(std::string("missing ") + what);
    return tokens_[pos_++];
  }

  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

FuncSpec parse_funcspec(const std::string& text) {
  return Parser(tokenize(text)).parse();
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) out.push_back(parse_int(item));
  if (out.empty()) throw ParseError("empty value list");
  return out;
}

FpTable values_table(const std::vector<std::int64_t>& values, PrimeModulus m) {
  const std::uint64_t p = m.value();
  if (values.size() > p)
    throw DomainMismatch("more than p values for p = " + std::to_string(p));
  std::vector<Fp> vals;
  vals.reserve(values.size());
  for (std::int64_t v : values) vals.push_back(Fp(v, m));
  DomainDescriptor dom = values.size() == p
                             ? DomainDescriptor::full_field(m)
                             : DomainDescriptor::index_ring(m, values.size());
  return FpTable(dom, std::move(vals));
}

namespace {

FpTable affine_table(std::int64_t a, std::int64_t b, PrimeModulus m) {
  const std::uint64_t p = m.value();
  const Fp slope(a, m), offset(b, m);
  std::vector<Fp> vals;
  vals.reserve(p);
  for (std::uint64_t x = 0; x < p; ++x)
    vals.push_back(slope * Fp::raw(x, p) + offset);
  return FpTable(DomainDescriptor::full_field(m), std::move(vals));
}

GaussianTable trig_table(const FuncSpec& spec, PrimeModulus m,
                         std::vector<std::string>& notes) {
  const Fp alpha(spec.a, m);
  const KTrigTable t =
      k_trig(alpha, static_cast<std::uint64_t>(spec.b), TrigMode::Auto);
  if (t.mode == TrigMode::Degenerate)
    notes.push_back("degenerate mode: sine values taken in GF(p) through a "
                    "square root of -1");
  const auto& row =
      spec.kind == FuncSpec::Kind::CosK ? t.cos_values : t.sin_values;
  return GaussianTable(DomainDescriptor::index_ring(m, t.order), row);
}

}  // namespace

TableVariant spec_table(const FuncSpec& spec, PrimeModulus m,
                        std::vector<std::string>& notes) {
  switch (spec.kind) {
    case FuncSpec::Kind::Exp:
      return exp_alpha_table(Fp(spec.a, m));
    case FuncSpec::Kind::Affine:
      return affine_table(spec.a, spec.b, m);
    case FuncSpec::Kind::Log:
      return log_table(Fp(spec.a, m));
    case FuncSpec::Kind::Recip:
      return reciprocal_table(m);
    case FuncSpec::Kind::ExpSeries:
      return exp_table(m);
    case FuncSpec::Kind::CosK:
    case FuncSpec::Kind::SinK:
      return trig_table(spec, m, notes);
    case FuncSpec::Kind::Values:
      return values_table(spec.values, m);
    case FuncSpec::Kind::Compose: {
      TableVariant outer = spec_table(*spec.outer, m, notes);
      TableVariant inner_v = spec_table(*spec.inner, m, notes);
      const FpTable* inner = std::get_if<FpTable>(&inner_v);
      if (inner == nullptr)
        throw DomainMismatch("inner spec of a composition must take values "
                             "in GF(p)");
      if (auto* t = std::get_if<FpTable>(&outer)) return compose(*t, *inner);
      if (auto* t = std::get_if<GaussianTable>(&outer))
        return compose(*t, *inner);
      return compose(std::get<ExtTable>(outer), *inner);
    }
  }
  throw ParseError("unhandled function spec");
}

SeriesVariant spec_series(const FuncSpec& spec, PrimeModulus m,
                          std::vector<std::string>& notes) {
  if (spec.kind == FuncSpec::Kind::ExpSeries) return exp_series(m);
  TableVariant table = spec_table(spec, m, notes);
  if (std::holds_alternative<ExtTable>(table))
    throw Undefined("a table containing -inf has no MacLaurin series");
  if (auto* t = std::get_if<FpTable>(&table)) {
    FpPolynomial v = vandermonde_solve(*t);
    FpPolynomial l = lagrange_interpolate(*t);
    notes.push_back(v == l ? "lagrange and vandermonde routes agree"
                           : "lagrange and vandermonde routes DISAGREE");
    return v;
  }
  const auto& t = std::get<GaussianTable>(table);
  GaussianPolynomial v = vandermonde_solve(t);
  GaussianPolynomial l = lagrange_interpolate(t);
  notes.push_back(v == l ? "lagrange and vandermonde routes agree"
                         : "lagrange and vandermonde routes DISAGREE");
  return v;
}

}  // namespace ffcalc
