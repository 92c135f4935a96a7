#include "picker/render.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace picker {

namespace {

struct Frame {
  double scale = 1.0;
  double margin = 30.0;
  double height = 0.0; // warehouse height in distance units
  std::vector<double> aisle_x;

  double x(int aisle) const { return margin + aisle_x[aisle - 1] * scale; }
  double y(Length h) const { return margin + (height - static_cast<double>(h)) * scale; }
};

std::string fmt(double v) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(1) << v;
  return out.str();
}

void line(std::ostringstream &out, double x1, double y1, double x2, double y2,
          const char *style) {
  out << "<line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2)
      << "\" y2=\"" << fmt(y2) << "\" " << style << "/>";
}

} // namespace

std::string render_svg(const WarehouseGraph &graph, const TourSubgraph *tour) {
  const auto &instance = graph.instance();
  Frame frame;
  frame.aisle_x.push_back(0.0);
  for (Length w : instance.gap_widths)
    frame.aisle_x.push_back(frame.aisle_x.back() + static_cast<double>(w));
  for (Length b : instance.block_lengths)
    frame.height += static_cast<double>(b);
  const double extent = std::max({frame.aisle_x.back(), frame.height, 1.0});
  frame.scale = 600.0 / extent;
  const double width = 2 * frame.margin + frame.aisle_x.back() * frame.scale;
  const double height = 2 * frame.margin + frame.height * frame.scale;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
      << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
  out << "<g class=\"layout\">\n";
  const Length top = graph.vertex(graph.intersection(1, graph.cross_aisles())).height;
  for (int i = 1; i <= graph.aisles(); ++i) {
    line(out, frame.x(i), frame.y(0), frame.x(i), frame.y(top),
         "stroke=\"#bbbbbb\" stroke-width=\"6\"");
    out << "\n";
  }
  for (int j = 1; j <= graph.cross_aisles(); ++j) {
    const Length h = graph.vertex(graph.intersection(1, j)).height;
    line(out, frame.x(1), frame.y(h), frame.x(graph.aisles()), frame.y(h),
         "stroke=\"#bbbbbb\" stroke-width=\"6\"");
    out << "\n";
  }
  out << "</g>\n";

  if (tour != nullptr) {
    out << "<g class=\"tour\">\n";
    constexpr double offset = 3.0;
    for (EdgeId e = 0; e < graph.edge_count(); ++e) {
      const int mult = (*tour)[e];
      if (mult == 0)
        continue;
      const Edge &edge = graph.edge(e);
      const Vertex &u = graph.vertex(edge.u);
      const Vertex &v = graph.vertex(edge.v);
      double x1 = frame.x(u.aisle), y1 = frame.y(u.height);
      double x2 = frame.x(v.aisle), y2 = frame.y(v.height);
      const bool vertical = edge.kind == EdgeKind::Vertical;
      out << "<g class=\"edge\" data-edge=\"" << e << "\" data-mult=\"" << mult << "\">";
      for (int copy = 0; copy < mult; ++copy) {
        const double shift = mult == 1 ? 0.0 : (copy - (mult - 1) / 2.0) * 2 * offset;
        const double dx = vertical ? shift : 0.0;
        const double dy = vertical ? 0.0 : shift;
        line(out, x1 + dx, y1 + dy, x2 + dx, y2 + dy, "stroke=\"#1f4e9c\" stroke-width=\"2\"");
      }
      out << "</g>\n";
    }
    out << "</g>\n";
  }

  out << "<g class=\"points\">\n";
  for (const Vertex &v : graph.vertices())
    if (v.kind == VertexKind::Item)
      out << "<circle cx=\"" << fmt(frame.x(v.aisle)) << "\" cy=\"" << fmt(frame.y(v.height))
          << "\" r=\"4\" fill=\"#c0392b\"/>\n";
  const Vertex &depot = graph.vertex(graph.depot());
  out << "<rect x=\"" << fmt(frame.x(depot.aisle) - 6) << "\" y=\"" << fmt(frame.y(depot.height) - 6)
      << "\" width=\"12\" height=\"12\" fill=\"#27ae60\"/>\n";
  out << "</g>\n</svg>\n";
  return out.str();
}

} // namespace picker
