// SPDX-License-Identifier: Apache-2.0
#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace textrec {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

} // namespace

std::string svg_bar_chart(const std::string& title,
                          const std::vector<std::pair<std::string, double>>& bars) {
  const int width = 640, height = 400;
  const int ml = 60, mr = 20, mt = 40, mb = 60;
  const int plot_w = width - ml - mr, plot_h = height - mt - mb;
  double vmax = 1.0;
  for (const auto& [_, v] : bars) vmax = std::max(vmax, v);

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" "
        "font-family=\"sans-serif\" font-size=\"16\">"
     << escape(title) << "</text>\n";
  os << "<line x1=\"" << ml << "\" y1=\"" << mt + plot_h << "\" x2=\"" << ml + plot_w
     << "\" y2=\"" << mt + plot_h << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
     << mt + plot_h << "\" stroke=\"black\"/>\n";
  os << "<text x=\"16\" y=\"" << mt + 4 << "\" font-family=\"sans-serif\" "
        "font-size=\"10\">"
     << fmt(vmax) << "</text>\n";

  if (!bars.empty()) {
    double slot = static_cast<double>(plot_w) / bars.size();
    double bw = std::max(1.0, slot * 0.8);
    bool sparse_labels = bars.size() > 30;
    for (size_t i = 0; i < bars.size(); ++i) {
      double h = bars[i].second / vmax * plot_h;
      double x = ml + i * slot + (slot - bw) / 2;
      double y = mt + plot_h - h;
      os << "<rect x=\"" << fmt(x) << "\" y=\"" << fmt(y) << "\" width=\"" << fmt(bw)
         << "\" height=\"" << fmt(h) << "\" fill=\"#4878a8\"/>\n";
      if (!sparse_labels || i % 5 == 0)
        os << "<text x=\"" << fmt(x + bw / 2) << "\" y=\"" << mt + plot_h + 16
           << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
              "font-size=\"10\">"
           << escape(bars[i].first) << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::string svg_scatter(const std::string& title, const std::string& x_label,
                        const std::string& y_label,
                        const std::vector<std::pair<double, double>>& points) {
  const int width = 640, height = 480;
  const int ml = 60, mr = 20, mt = 40, mb = 50;
  const int plot_w = width - ml - mr, plot_h = height - mt - mb;
  double xmax = 1.0, ymax = 1.0;
  for (const auto& [x, y] : points) {
    xmax = std::max(xmax, x);
    ymax = std::max(ymax, y);
  }

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" "
        "font-family=\"sans-serif\" font-size=\"16\">"
     << escape(title) << "</text>\n";
  os << "<line x1=\"" << ml << "\" y1=\"" << mt + plot_h << "\" x2=\"" << ml + plot_w
     << "\" y2=\"" << mt + plot_h << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
     << mt + plot_h << "\" stroke=\"black\"/>\n";
  os << "<text x=\"" << ml + plot_w / 2 << "\" y=\"" << height - 12
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
     << escape(x_label) << " (max " << fmt(xmax) << ")</text>\n";
  os << "<text x=\"16\" y=\"" << mt - 8
     << "\" font-family=\"sans-serif\" font-size=\"12\">" << escape(y_label)
     << " (max " << fmt(ymax) << ")</text>\n";
  for (const auto& [x, y] : points) {
    double px = ml + x / xmax * plot_w;
    double py = mt + plot_h - y / ymax * plot_h;
    os << "<circle cx=\"" << fmt(px) << "\" cy=\"" << fmt(py)
       << "\" r=\"2\" fill=\"#4878a8\" fill-opacity=\"0.5\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string svg_contact_sheet(const std::string& title,
                              const std::vector<std::string>& image_files,
                              int tile_w, int tile_h, int columns) {
  if (columns < 1) columns = 1;
  int rows = static_cast<int>((image_files.size() + columns - 1) / columns);
  const int pad = 8, header = 32;
  int width = columns * (tile_w + pad) + pad;
  int height = header + rows * (tile_h + pad) + pad;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" "
        "xmlns:xlink=\"http://www.w3.org/1999/xlink\" width=\""
     << width << "\" height=\"" << height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"#e8e8e8\"/>\n";
  os << "<text x=\"" << pad << "\" y=\"22\" font-family=\"sans-serif\" "
        "font-size=\"14\">"
     << escape(title) << "</text>\n";
  for (size_t i = 0; i < image_files.size(); ++i) {
    int col = static_cast<int>(i) % columns;
    int row = static_cast<int>(i) / columns;
    int x = pad + col * (tile_w + pad);
    int y = header + pad + row * (tile_h + pad);
    os << "<image x=\"" << x << "\" y=\"" << y << "\" width=\"" << tile_w
       << "\" height=\"" << tile_h << "\" xlink:href=\"" << escape(image_files[i])
       << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

} // namespace textrec
