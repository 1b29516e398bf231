#include "ffcalc/record.hpp"

#include <sstream>
#include <stdexcept>

namespace ffcalc {

namespace {

std::string fp_text(const Fp& v, bool balanced) {
  return balanced ? std::to_string(v.balanced()) : std::to_string(v.value());
}

std::string gaussian_text(const Gaussian& z, bool balanced) {
  const std::string re = fp_text(z.re(), balanced);
  if (z.im().is_zero()) return re;
  std::int64_t im_repr = balanced
                             ? z.im().balanced()
                             : static_cast<std::int64_t>(z.im().value());
  const bool neg = im_repr < 0;
  const std::string mag = std::to_string(neg ? -im_repr : im_repr);
  if (z.re().is_zero()) return (neg ? "-j" : "j") + mag;
  return re + (neg ? "-j" : "+j") + mag;
}

nlohmann::json fp_json(const Fp& v, bool balanced) {
  if (balanced) return v.balanced();
  return v.value();
}

nlohmann::json cell_json(const Cell& cell, bool balanced) {
  if (const Fp* v = std::get_if<Fp>(&cell)) return fp_json(*v, balanced);
  if (const Ext* v = std::get_if<Ext>(&cell)) {
    if (v->is_minus_infinity()) return nullptr;
    return fp_json(v->finite(), balanced);
  }
  const Gaussian& z = std::get<Gaussian>(cell);
  nlohmann::json out;
  out["re"] = fp_json(z.re(), balanced);
  out["im"] = fp_json(z.im(), balanced);
  return out;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown format '" + name + "'");
}

std::string cell_text(const Cell& cell, bool balanced) {
  if (const Fp* v = std::get_if<Fp>(&cell)) return fp_text(*v, balanced);
  if (const Ext* v = std::get_if<Ext>(&cell))
    return v->is_minus_infinity() ? "-inf" : fp_text(v->finite(), balanced);
  return gaussian_text(std::get<Gaussian>(cell), balanced);
}

std::string render_text(const OutputRecord& rec, bool balanced) {
  std::ostringstream out;
  for (const auto& row : rec.payload) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ' ';
      out << cell_text(row[i], balanced);
    }
    out << '\n';
  }
  return out.str();
}

std::string render_csv(const OutputRecord& rec, bool balanced) {
  std::ostringstream out;
  for (std::size_t i = 0; i < rec.columns.size(); ++i) {
    if (i > 0) out << ',';
    out << rec.columns[i];
  }
  out << '\n';
  for (const auto& row : rec.payload) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ',';
      out << cell_text(row[i], balanced);
    }
    out << '\n';
  }
  return out.str();
}

std::string render_json(const OutputRecord& rec, bool balanced) {
  nlohmann::json doc;
  doc["command"] = rec.command;
  doc["p"] = rec.p;
  doc["params"] = rec.params;
  nlohmann::json payload = nlohmann::json::array();
  bool has_inf = false;
  for (const auto& row : rec.payload) {
    nlohmann::json jrow = nlohmann::json::array();
    for (const Cell& cell : row) {
      if (const Ext* v = std::get_if<Ext>(&cell))
        has_inf = has_inf || v->is_minus_infinity();
      jrow.push_back(cell_json(cell, balanced));
    }
    payload.push_back(jrow);
  }
  doc["payload"] = payload;
  nlohmann::json notes = nlohmann::json::array();
  for (const std::string& n : rec.notes) notes.push_back(n);
  if (has_inf) notes.push_back("null denotes -inf");
  doc["notes"] = notes;
  return doc.dump() + "\n";
}

std::string render(const OutputRecord& rec, OutputFormat format,
                   bool balanced) {
  switch (format) {
    case OutputFormat::Text: return render_text(rec, balanced);
    case OutputFormat::Csv: return render_csv(rec, balanced);
    case OutputFormat::Json: return render_json(rec, balanced);
  }
  return "";
}

}  // namespace ffcalc
