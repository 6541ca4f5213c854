#pragma once

// CSV emission for boundary curves and figure data. Output is locale-free:
// '.' decimal separator, LF line endings, fixed 9-decimal values.

#include <string>
#include <vector>

#include "jmspin/boundary.hpp"

namespace jmspin {

inline constexpr int kCsvDecimals = 9;
inline constexpr int kFigurePoints = 200;
inline constexpr double kFigureThetasDeg[] = {30.0, 60.0, 90.0};

std::string format_fixed(double value, int decimals = kCsvDecimals);
// Shortest round-trip representation, e.g. "90" or "22.5".
std::string format_shortest(double value);

// Header "theta_deg,metric,d1,d2" followed by one row per point.
std::string boundary_csv(double theta_deg, Metric metric, const std::vector<TradeoffPoint>& curve);

enum class Figure { Statistical, Rms };  // fig2, fig4
Figure parse_figure(const std::string& name);
const char* to_string(Figure f) noexcept;

struct CsvFile {
  std::string name;
  std::string contents;
};

// One file per theta in kFigureThetasDeg with header "theta_deg,metric,kind,d1,d2";
// `curve` rows are followed by one `marker` row for the symmetric point.
std::vector<CsvFile> figure_data(Figure which, int n_points = kFigurePoints);

// Throws IoFailure.
void write_text_file(const std::string& path, const std::string& contents);

}  // namespace jmspin
