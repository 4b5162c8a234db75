#include "cli/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace dyckdiv::cli {

std::vector<PathPoint> path_points(const TriWord& w) {
  std::vector<PathPoint> points{{0, 0}};
  points.reserve(w.size() + 1);
  for (char ch : w) {
    PathPoint next = points.back();
    ++next.x;
    if (ch == 'a') ++next.y;
    if (ch == 'b') --next.y;
    points.push_back(next);
  }
  return points;
}

std::string render_ascii(const TriWord& w) {
  // band h is the strip between levels h and h + 1
  std::map<long, std::string, std::greater<>> rows;
  long level = 0;
  for (std::size_t col = 0; col < w.size(); ++col) {
    long band = level;
    char glyph = '_';
    if (w[col] == 'a') {
      glyph = '/';
      ++level;
    } else if (w[col] == 'b') {
      glyph = '\\';
      band = --level;
    }
    auto& row = rows[band];
    row.resize(w.size(), ' ');
    row[col] = glyph;
  }

  std::string out;
  if (rows.empty()) return out;
  for (long band = rows.begin()->first; band >= rows.rbegin()->first; --band) {
    std::string row = rows.count(band) ? rows[band] : std::string();
    row.erase(row.find_last_not_of(' ') + 1);
    out += row;
    out += '\n';
  }
  return out;
}

std::string render_svg(const TriWord& w, int cell_size) {
  const auto points = path_points(w);
  long top = 0, bottom = 0;
  for (const auto& p : points) {
    top = std::max(top, p.y);
    bottom = std::min(bottom, p.y);
  }
  const long margin = cell_size;
  const long width = static_cast<long>(w.size()) * cell_size + 2 * margin;
  const long height = (top - bottom) * cell_size + 2 * margin;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" stroke-linejoin=\"round\""
      << " vector-effect=\"non-scaling-stroke\""
      << " transform=\"translate(" << margin << ' ' << margin + top * cell_size << ") scale(" << cell_size << ' '
      << -cell_size << ")\"\n"
      << "            points=\"";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i != 0) svg << ' ';
    svg << points[i].x << ',' << points[i].y;
  }
  svg << "\"/>\n</svg>\n";
  return svg.str();
}

std::string render(const RenderSpec& spec) {
  if (spec.word.empty()) throw std::invalid_argument("cannot render the empty word");
  if (spec.cell_size <= 0) throw std::invalid_argument("cell size must be positive");
  return spec.format == RenderFormat::Svg ? render_svg(spec.word, spec.cell_size) : render_ascii(spec.word);
}

}  // namespace dyckdiv::cli
