#include "suig2/svg.hpp"

#include <sstream>

namespace suig2 {

namespace {

const Rat kScale(100);
const Rat kPad(1, 2);

std::string num(const Rat& r) { return r.decimal(4); }

}  // namespace

std::string emit_svg(const Representation& r) {
  Rat min_x(0), max_x(1), min_y(0), max_y(Rat(3) + r.epsilon);
  if (r.n() > 0) {
    min_x = max_x = r.squares[0].x;
    for (const UnitSquare& s : r.squares) {
      min_x = rat_min(min_x, s.x);
      max_x = rat_max(max_x, s.x);
      min_y = rat_min(min_y, s.y);
      max_y = rat_max(max_y, s.y + Rat(1));
    }
    max_x += Rat(1);
  }
  min_y = rat_min(min_y, Rat(0));
  max_y = rat_max(max_y, Rat(2) + r.epsilon);
  Rat x0 = min_x - kPad, x1 = max_x + kPad;
  Rat y0 = min_y - kPad, y1 = max_y + kPad;
  Rat width = (x1 - x0) * kScale, height = (y1 - y0) * kScale;
  auto sx = [&](const Rat& x) { return (x - x0) * kScale; };
  // flip: world y maps to height - (y - y0)
  auto sy = [&](const Rat& y) { return (y1 - y) * kScale; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << num(width) << "\" height=\"" << num(height) << "\" viewBox=\"0 0 "
      << num(width) << " " << num(height) << "\">\n";
  out << "  <rect x=\"0\" y=\"0\" width=\"" << num(width) << "\" height=\""
      << num(height) << "\" fill=\"white\"/>\n";
  for (const Rat& line_y : {Rat(1), Rat(2) + r.epsilon}) {
    out << "  <line x1=\"0\" y1=\"" << num(sy(line_y)) << "\" x2=\""
        << num(width) << "\" y2=\"" << num(sy(line_y))
        << "\" stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"8 6\"/>\n";
  }
  for (int v = 0; v < r.n(); ++v) {
    const UnitSquare& s = r.squares[v];
    const char* color = s.stab == Stab::Lower ? "#1f77b4" : "#d62728";
    out << "  <rect x=\"" << num(sx(s.x)) << "\" y=\"" << num(sy(s.y + Rat(1)))
        << "\" width=\"" << num(kScale) << "\" height=\"" << num(kScale)
        << "\" fill=\"" << color << "\" fill-opacity=\"0.18\" stroke=\""
        << color << "\" stroke-width=\"1.5\"/>\n";
    out << "  <text x=\"" << num(sx(s.x) + Rat(50)) << "\" y=\""
        << num(sy(s.y + Rat(1)) + Rat(55))
        << "\" font-family=\"sans-serif\" font-size=\"28\" text-anchor=\"middle\">"
        << v << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace suig2
