#include "shelfpack/svg.hpp"

#include <algorithm>
#include <cstdio>

namespace shelfpack::svg {
namespace {

constexpr double kMargin = 20.0;
constexpr double kLabelBand = 36.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s(buf);
  // Trim trailing zeros for compact, stable output.
  s.erase(s.find_last_not_of('0') + 1);
  if (s.back() == '.') s.pop_back();
  if (s == "-0") s = "0";
  return s;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
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

}  // namespace

std::string render(const Figure& figure, double scale) {
  if (!(scale > 0)) throw DomainError("render: scale must be positive");
  if (figure.circles.empty()) throw DomainError("render: empty placement");

  double max_radius = 0;
  for (const auto& c : figure.circles) max_radius = std::max(max_radius, c.radius);
  const double span = figure.right_wall - figure.left_wall;
  const double width = span * scale + 2 * kMargin;
  const double baseline = kMargin + 2 * max_radius * scale;
  const double height = baseline + kLabelBand;
  const double wall_top = 2 * max_radius + kMargin / (2 * scale);
  const double pad = kMargin / (2 * scale);

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" +
         num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // Model coordinates inside the group: x along the shelf, y up.
  out += "<g transform=\"translate(" + num(kMargin - figure.left_wall * scale) + " " +
         num(baseline) + ") scale(" + num(scale) + " " + num(-scale) + ")\" stroke=\"black\" " +
         "fill=\"none\" vector-effect=\"non-scaling-stroke\">\n";
  out += "<line class=\"baseline\" x1=\"" + num(figure.left_wall - pad) + "\" y1=\"0\" x2=\"" +
         num(figure.right_wall + pad) + "\" y2=\"0\" stroke-width=\"1.5\" " +
         "vector-effect=\"non-scaling-stroke\"/>\n";
  for (const auto& c : figure.circles) {
    out += "<circle cx=\"" + num(c.footpoint) + "\" cy=\"" + num(c.radius) + "\" r=\"" +
           num(c.radius) + "\" fill=\"#dde6f0\" vector-effect=\"non-scaling-stroke\"><title>" +
           escape(c.id) + "</title></circle>\n";
  }
  for (double wall : {figure.left_wall, figure.right_wall}) {
    out += "<line class=\"wall\" x1=\"" + num(wall) + "\" y1=\"0\" x2=\"" + num(wall) +
           "\" y2=\"" + num(wall_top) + "\" stroke-dasharray=\"4 3\" " +
           "vector-effect=\"non-scaling-stroke\"/>\n";
  }
  out += "</g>\n";

  const double x0 = kMargin;
  const double x1 = kMargin + span * scale;
  const double y = baseline + 12;
  out += "<g class=\"span\" stroke=\"black\">\n";
  out += "<line x1=\"" + num(x0) + "\" y1=\"" + num(y) + "\" x2=\"" + num(x1) + "\" y2=\"" +
         num(y) + "\"/>\n";
  for (double x : {x0, x1}) {
    out += "<line x1=\"" + num(x) + "\" y1=\"" + num(y - 5) + "\" x2=\"" + num(x) + "\" y2=\"" +
           num(y + 5) + "\"/>\n";
  }
  out += "</g>\n";
  out += "<text x=\"" + num((x0 + x1) / 2) + "\" y=\"" + num(y + 18) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" +
         escape(figure.span_label) + "</text>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace shelfpack::svg
