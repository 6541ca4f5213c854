#include "jmspin/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <system_error>

namespace jmspin {
namespace {

std::string chars_or_throw(char* first, std::to_chars_result r) {
  if (r.ec != std::errc()) throw Error(ErrorKind::InvalidArgument, "number formatting failed");
  return std::string(first, r.ptr);
}

void append_row(std::string& out, std::initializer_list<std::string> fields) {
  bool first = true;
  for (const auto& f : fields) {
    if (!first) out += ',';
    out += f;
    first = false;
  }
  out += '\n';
}

}  // namespace

std::string format_fixed(double value, int decimals) {
  // Rounds to zero would otherwise print as "-0.000000000".
  if (std::abs(value) < 0.5 * std::pow(10.0, -decimals)) value = 0.0;
  char buf[64];
  return chars_or_throw(buf, std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, decimals));
}

std::string format_shortest(double value) {
  char buf[64];
  return chars_or_throw(buf, std::to_chars(buf, buf + sizeof buf, value));
}

std::string boundary_csv(double theta_deg, Metric metric, const std::vector<TradeoffPoint>& curve) {
  std::string out = "theta_deg,metric,d1,d2\n";
  const std::string theta = format_shortest(theta_deg);
  for (const TradeoffPoint& pt : curve)
    append_row(out, {theta, to_string(metric), format_fixed(pt.d1), format_fixed(pt.d2)});
  return out;
}

Figure parse_figure(const std::string& name) {
  if (name == "fig2") return Figure::Statistical;
  if (name == "fig4") return Figure::Rms;
  throw Error(ErrorKind::InvalidArgument, "unknown figure '" + name + "' (expected fig2 or fig4)");
}

const char* to_string(Figure f) noexcept { return f == Figure::Statistical ? "fig2" : "fig4"; }

std::vector<CsvFile> figure_data(Figure which, int n_points) {
  const Metric metric = which == Figure::Statistical ? Metric::Statistical : Metric::Rms;
  std::vector<CsvFile> files;
  for (double theta_deg : kFigureThetasDeg) {
    const ProblemInstance inst = ProblemInstance::from_degrees(theta_deg);
    const std::string theta = format_shortest(theta_deg);
    std::string out = "theta_deg,metric,kind,d1,d2\n";
    for (const TradeoffPoint& pt : boundary_curve(inst, metric, n_points))
      append_row(out, {theta, to_string(metric), "curve", format_fixed(pt.d1), format_fixed(pt.d2)});
    if (metric == Metric::Statistical) {
      const SymmetricOptimum s = symmetric_optimum(inst);
      append_row(out, {theta, to_string(metric), "marker", format_fixed(s.d_sym), format_fixed(s.d_sym)});
    } else {
      const TradeoffPoint s = rms_symmetric_point(inst);
      append_row(out, {theta, to_string(metric), "marker", format_fixed(s.d1), format_fixed(s.d2)});
    }
    files.push_back({std::string(to_string(which)) + "_theta" + theta + ".csv", std::move(out)});
  }
  return files;
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorKind::IoFailure, "cannot open '" + path + "' for writing");
  f.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  f.close();
  if (!f) throw Error(ErrorKind::IoFailure, "write to '" + path + "' failed");
}

}  // namespace jmspin
