#include <algorithm>
#include <cmath>
#include <fstream>
#include <locale>

#include "mlf/cli.hpp"
#include "mlf/errors.hpp"

#ifndef MLF_VERSION
#define MLF_VERSION "dev"
#endif

namespace mlf::cli {

namespace {

constexpr double kWidth = 640, kHeight = 400, kMargin = 50;
constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace

void emit_svg(const std::vector<Series>& series, const std::filesystem::path& path) {
  double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
  }
  if (series.empty() || !(x0 <= x1)) throw DomainError("nothing to plot: the series are empty");
  if (x1 == x0) x1 = x0 + 1.0;
  if (y1 == y0) y1 = y0 + 1.0;
  const auto px = [&](double x) { return kMargin + (x - x0) / (x1 - x0) * (kWidth - 2 * kMargin); };
  const auto py = [&](double y) { return kHeight - kMargin - (y - y0) / (y1 - y0) * (kHeight - 2 * kMargin); };

  std::ofstream svg(path);
  if (!svg) throw IOError("cannot write " + path.string());
  svg.imbue(std::locale::classic());
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<!-- generator: mlf " MLF_VERSION " -->\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_human(kWidth) << "\" height=\""
      << format_human(kHeight) << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<g stroke=\"black\" fill=\"none\">"
      << "<line x1=\"" << kMargin << "\" y1=\"" << kHeight - kMargin << "\" x2=\"" << kWidth - kMargin << "\" y2=\""
      << kHeight - kMargin << "\"/>"
      << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\"" << kMargin << "\" y2=\""
      << kHeight - kMargin << "\"/></g>\n";
  svg << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  svg << "<text x=\"" << kMargin << "\" y=\"" << kHeight - kMargin + 16 << "\">" << format_human(x0) << "</text>\n";
  svg << "<text x=\"" << kWidth - kMargin << "\" y=\"" << kHeight - kMargin + 16 << "\" text-anchor=\"end\">"
      << format_human(x1) << "</text>\n";
  svg << "<text x=\"" << kMargin - 4 << "\" y=\"" << kHeight - kMargin << "\" text-anchor=\"end\">"
      << format_human(y0) << "</text>\n";
  svg << "<text x=\"" << kMargin - 4 << "\" y=\"" << kMargin + 4 << "\" text-anchor=\"end\">" << format_human(y1)
      << "</text>\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kColors[i % std::size(kColors)];
    svg << "<text x=\"" << kWidth - kMargin - 120 << "\" y=\"" << kMargin + 14 * i << "\" fill=\"" << color << "\">"
        << escape(series[i].label) << "</text>\n";
  }
  svg << "</g>\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    svg << "<polyline fill=\"none\" stroke=\"" << kColors[i % std::size(kColors)] << "\" points=\"";
    bool first = true;
    for (const auto& [x, y] : series[i].points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      svg << (first ? "" : " ") << format_human(px(x)) << ',' << format_human(py(y));
      first = false;
    }
    svg << "\"/>\n";
  }
  svg << "</svg>\n";
  if (!svg) throw IOError("cannot write " + path.string());

  std::filesystem::path csv_path = path;
  csv_path.replace_extension(".csv");
  std::ofstream csv(csv_path);
  if (!csv) throw IOError("cannot write " + csv_path.string());
  csv << "series,x,y\n";
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) csv << csv_field(s.label) << ',' << format_csv(x) << ',' << format_csv(y) << '\n';
  }
  if (!csv) throw IOError("cannot write " + csv_path.string());
}

}  // namespace mlf::cli
