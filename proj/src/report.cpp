#include "zetaline/report.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace zetaline {

namespace {

const char kCsvHeader[] =
    "t,quantity,computed_mid,computed_rad,bound_mid,bound_rad,margin_mid,"
    "margin_rad,verdict";

std::string shortest(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void emit_csv(const std::vector<VerificationRecord>& records,
              std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const VerificationRecord& r : records) {
    out << shortest(r.t) << ',' << to_string(r.quantity) << ','
        << shortest(r.computed.mid_d()) << ',' << shortest(r.computed.rad())
        << ',' << shortest(r.bound.mid_d()) << ',' << shortest(r.bound.rad())
        << ',' << shortest(r.margin.mid_d()) << ',' << shortest(r.margin.rad())
        << ',' << to_string(r.verdict) << '\n';
  }
}

void emit_json(const std::vector<VerificationRecord>& records,
               std::ostream& out) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const VerificationRecord& r : records) {
    nlohmann::ordered_json obj;
    obj["t"] = r.t;
    obj["quantity"] = to_string(r.quantity);
    obj["computed_mid"] = r.computed.mid_d();
    obj["computed_rad"] = r.computed.rad();
    obj["bound_mid"] = r.bound.mid_d();
    obj["bound_rad"] = r.bound.rad();
    obj["margin_mid"] = r.margin.mid_d();
    obj["margin_rad"] = r.margin.rad();
    obj["verdict"] = to_string(r.verdict);
    if (!r.reason.empty()) obj["reason"] = r.reason;
    arr.push_back(std::move(obj));
  }
  out << arr.dump(2) << '\n';
}

void emit_plot(const std::vector<VerificationRecord>& records,
               std::ostream& out) {
  const Quantity order[] = {Quantity::logderiv, Quantity::inv_zeta,
                            Quantity::zeta, Quantity::log_zeta};
  bool first = true;
  for (Quantity q : order) {
    bool any = false;
    for (const VerificationRecord& r : records) {
      if (r.quantity != q) continue;
      if (!any) {
        if (!first) out << '\n';
        out << "# " << to_string(q) << '\n';
        any = true;
        first = false;
      }
      out << shortest(r.t) << ' ' << shortest(r.computed.mid_d()) << ' '
          << shortest(r.bound.mid_d()) << '\n';
    }
  }
}

double parse_double(const std::string& field, long line) {
  const char* b = field.c_str();
  char* e = nullptr;
  double v = std::strtod(b, &e);
  if (e == b || *e != '\0')
    throw ParseError("csv line " + std::to_string(line) +
                     ": bad number: " + field);
  return v;
}

// Exact reconstruction; from_mid_rad would pad the radius by an ulp.
BallReal parse_ball(const std::string& mid, const std::string& rad, long line) {
  BallReal out = BallReal::from_double(parse_double(mid, line), 64);
  double r = parse_double(rad, line);
  if (r < 0) throw ParseError("csv line " + std::to_string(line) +
                              ": negative radius");
  out.set_rad(r);
  return out;
}

}  // namespace

ReportFormat report_format_from_string(const std::string& name) {
  if (name == "csv") return ReportFormat::csv;
  if (name == "json") return ReportFormat::json;
  if (name == "plot") return ReportFormat::plot;
  throw ParseError("unknown report format: " + name);
}

void emit_report(const std::vector<VerificationRecord>& records,
                 ReportFormat format, std::ostream& out) {
  if (records.empty()) throw ArgumentError("emit_report: no records");
  switch (format) {
    case ReportFormat::csv: emit_csv(records, out); break;
    case ReportFormat::json: emit_json(records, out); break;
    case ReportFormat::plot: emit_plot(records, out); break;
  }
  if (!out) throw Error("emit_report: stream write failed");
}

void emit_report(const std::vector<VerificationRecord>& records,
                 ReportFormat format, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw Error("emit_report: cannot open " + path);
  emit_report(records, format, f);
  f.flush();
  if (!f) throw Error("emit_report: write to " + path + " failed");
}

std::vector<VerificationRecord> parse_csv_report(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader)
    throw ParseError("csv line 1: missing or mangled header");
  std::vector<VerificationRecord> out;
  long ln = 1;
  while (std::getline(in, line)) {
    ++ln;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream row(line);
    std::string field;
    while (std::getline(row, field, ',')) fields.push_back(field);
    if (fields.size() != 9)
      throw ParseError("csv line " + std::to_string(ln) + ": expected 9 "
                       "fields, got " + std::to_string(fields.size()));
    VerificationRecord rec;
    rec.t = parse_double(fields[0], ln);
    rec.quantity = quantity_from_string(fields[1]);
    rec.computed = parse_ball(fields[2], fields[3], ln);
    rec.bound = parse_ball(fields[4], fields[5], ln);
    rec.margin = parse_ball(fields[6], fields[7], ln);
    rec.verdict = verdict_from_string(fields[8]);
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace zetaline
