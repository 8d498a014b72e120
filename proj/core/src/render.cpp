#include "porigami/render.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <map>

#include "porigami/errors.hpp"

namespace porigami {

namespace {

std::string word_text(const std::string& letters) {
  if (letters.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    out += letters[i];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace

Layout layout_origami(const Origami& o, std::size_t cap) {
  const std::uint64_t order = o.group().order();
  if (order > cap) throw CapExceeded("origami with " + std::to_string(order) + " squares", cap);
  const auto& elems = o.group().elements(cap);
  const std::size_t n = elems.size();
  std::vector<std::size_t> right(n), up(n);
  for (std::size_t g = 0; g < n; ++g) {
    right[g] = elems.index_of(elems[g] * o.x());
    up[g] = elems.index_of(elems[g] * o.y());
  }

  Layout layout;
  layout.cells.assign(n, Cell{0, 0});
  std::vector<bool> placed(n, false);
  std::map<std::pair<int, int>, std::size_t> occupied;
  int max_x = 0;
  std::deque<std::size_t> queue;
  const auto place = [&](std::size_t g, Cell c) {
    placed[g] = true;
    layout.cells[g] = c;
    occupied.emplace(std::pair{c.x, c.y}, g);
    max_x = std::max(max_x, c.x);
    queue.push_back(g);
  };
  place(0, {0, 0});
  for (std::size_t next_root = 0;;) {
    while (!queue.empty()) {
      const std::size_t g = queue.front();
      queue.pop_front();
      const Cell c = layout.cells[g];
      const std::pair<std::size_t, Cell> steps[] = {{right[g], {c.x + 1, c.y}}, {up[g], {c.x, c.y + 1}}};
      for (const auto& [h, target] : steps)
        if (!placed[h] && !occupied.contains({target.x, target.y})) place(h, target);
    }
    while (next_root < n && placed[next_root]) ++next_root;
    if (next_root == n) break;
    place(next_root, {max_x + 2, 0});
  }

  for (std::size_t g = 0; g < n; ++g) {
    const Cell c = layout.cells[g];
    if (layout.cells[right[g]] == Cell{c.x + 1, c.y} && right[g] != g)
      layout.adjacent_right.emplace_back(g, right[g]);
    else
      layout.glued.push_back({layout.glued.size(), g, right[g], false});
    if (layout.cells[up[g]] == Cell{c.x, c.y + 1} && up[g] != g)
      layout.adjacent_up.emplace_back(g, up[g]);
    else
      layout.glued.push_back({layout.glued.size(), g, up[g], true});
  }

  // Shortest positive words, x before y.
  std::vector<std::string> words(n);
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> bfs{0};
  seen[0] = true;
  while (!bfs.empty()) {
    const std::size_t g = bfs.front();
    bfs.pop_front();
    for (const auto& [h, letter] : {std::pair{right[g], 'x'}, std::pair{up[g], 'y'}})
      if (!seen[h]) {
        seen[h] = true;
        words[h] = words[g] + letter;
        bfs.push_back(h);
      }
  }
  layout.labels.reserve(n);
  for (const auto& w : words) layout.labels.push_back(word_text(w));

  layout.vertices = vertex_classes(o, cap);
  layout.multiplicity = commutator(o.x(), o.y()).order();
  return layout;
}

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  if (s == "-0") s = "0";
  return s;
}

std::string vertex_color(std::size_t id, std::size_t count, const std::string& palette) {
  char buf[48];
  if (palette == "mono") {
    const unsigned v = static_cast<unsigned>(20 + id * 200 / std::max<std::size_t>(count, 1));
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", v, v, v);
  } else {
    const std::size_t tenths = id * 3600 / std::max<std::size_t>(count, 1);
    std::snprintf(buf, sizeof buf, "hsl(%zu.%zu,70%%,45%%)", tenths / 10, tenths % 10);
  }
  return buf;
}

struct Canvas {
  int px;
  int min_x, max_y, margin;

  double left(Cell c) const { return margin + static_cast<double>(c.x - min_x) * px; }
  double top(Cell c) const { return margin + static_cast<double>(max_y - c.y) * px; }
};

/// Glyph for `mark` centred at (mx, my) on an edge running vertically
/// (right/left sides) or horizontally (top/bottom sides).
void emit_mark(std::string& out, std::size_t mark, const char* side, double mx, double my,
               bool edge_vertical, int px) {
  out += "<g class=\"mark\" data-mark=\"" + std::to_string(mark) + "\" data-side=\"" + side + "\">";
  const double half = px / 10.0;
  const double gap = px / 14.0;
  const std::size_t glyph = mark % 6;
  const auto line = [&](double x1, double y1, double x2, double y2) {
    out += "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) + "\" y2=\"" +
           num(y2) + "\"/>";
  };
  if (glyph < 3) {
    const int ticks = static_cast<int>(glyph) + 1;
    for (int t = 0; t < ticks; ++t) {
      const double off = (t - (ticks - 1) / 2.0) * gap;
      if (edge_vertical)
        line(mx - half, my + off, mx + half, my + off);
      else
        line(mx + off, my - half, mx + off, my + half);
    }
  } else if (glyph == 3) {
    out += "<circle cx=\"" + num(mx) + "\" cy=\"" + num(my) + "\" r=\"" + num(half * 0.8) +
           "\" fill=\"none\"/>";
  } else if (glyph == 4) {
    out += "<rect x=\"" + num(mx - half * 0.7) + "\" y=\"" + num(my - half * 0.7) + "\" width=\"" +
           num(half * 1.4) + "\" height=\"" + num(half * 1.4) + "\" fill=\"none\"/>";
  } else if (edge_vertical) {
    line(mx - half, my + half * 0.6, mx, my - half * 0.6);
    line(mx, my - half * 0.6, mx + half, my + half * 0.6);
  } else {
    line(mx - half * 0.6, my - half, mx + half * 0.6, my);
    line(mx + half * 0.6, my, mx - half * 0.6, my + half);
  }
  if (mark >= 6) {
    const double tx = edge_vertical ? mx + half * 1.3 : mx;
    const double ty = edge_vertical ? my : my - half * 1.3;
    out += "<text x=\"" + num(tx) + "\" y=\"" + num(ty) + "\" font-size=\"" + num(px / 6.0) +
           "\" stroke=\"none\" fill=\"#202020\">" + std::to_string(mark / 6 + 1) + "</text>";
  }
  out += "</g>\n";
}

}  // namespace

std::string emit_svg(const Layout& layout, const SvgStyle& style) {
  const int px = std::max(style.square_px, 8);
  int min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  for (const Cell& c : layout.cells) {
    min_x = std::min(min_x, c.x);
    max_x = std::max(max_x, c.x);
    min_y = std::min(min_y, c.y);
    max_y = std::max(max_y, c.y);
  }
  const Canvas cv{px, min_x, max_y, px / 2};
  const int width = (max_x - min_x + 1) * px + 2 * cv.margin;
  const int height = (max_y - min_y + 1) * px + 2 * cv.margin;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) + " " +
         std::to_string(height) + "\">\n";
  out += "<g class=\"squares\" fill=\"#ffffff\" stroke=\"#9a9a9a\" stroke-width=\"1\">\n";
  for (const Cell& c : layout.cells)
    out += "<rect x=\"" + num(cv.left(c)) + "\" y=\"" + num(cv.top(c)) + "\" width=\"" +
           std::to_string(px) + "\" height=\"" + std::to_string(px) + "\"/>\n";
  out += "</g>\n";

  out += "<g class=\"labels\" font-family=\"sans-serif\" font-size=\"" + num(px / 4.5) +
         "\" text-anchor=\"middle\" dominant-baseline=\"central\" fill=\"#303030\">\n";
  for (std::size_t g = 0; g < layout.cells.size(); ++g) {
    const Cell c = layout.cells[g];
    out += "<text x=\"" + num(cv.left(c) + px / 2.0) + "\" y=\"" + num(cv.top(c) + px / 2.0) + "\">" +
           layout.labels[g] + "</text>\n";
  }
  out += "</g>\n";

  out += "<g class=\"glued\" stroke=\"#202020\" stroke-width=\"1.5\" fill=\"none\">\n";
  for (const GluedPair& gp : layout.glued) {
    const Cell a = layout.cells[gp.square];
    const Cell b = layout.cells[gp.neighbour];
    if (gp.vertical) {
      const double ax = cv.left(a) + px / 2.0, ay = cv.top(a);
      const double bx = cv.left(b) + px / 2.0, by = cv.top(b) + px;
      emit_mark(out, gp.mark, "top", ax, ay, false, px);
      emit_mark(out, gp.mark, "bottom", bx, by, false, px);
    } else {
      const double ax = cv.left(a) + px, ay = cv.top(a) + px / 2.0;
      const double bx = cv.left(b), by = cv.top(b) + px / 2.0;
      emit_mark(out, gp.mark, "right", ax, ay, true, px);
      emit_mark(out, gp.mark, "left", bx, by, true, px);
    }
  }
  out += "</g>\n";

  // Corner slots in the order LL, LR, UL, UR.
  const double inset = px / 7.0;
  const double radius = px / 16.0;
  const bool torus = layout.multiplicity == 1;
  out += "<g class=\"vertices\" stroke=\"none\">\n";
  for (std::size_t g = 0; g < layout.cells.size(); ++g) {
    const Cell c = layout.cells[g];
    const double l = cv.left(c), t = cv.top(c);
    const double xs[] = {l + inset, l + px - inset, l + inset, l + px - inset};
    const double ys[] = {t + px - inset, t + px - inset, t + inset, t + inset};
    for (std::size_t k = 0; k < 4; ++k) {
      const std::size_t id = layout.vertices.class_of[4 * g + k];
      const std::string fill =
          torus ? std::string("#8c8c8c") : vertex_color(id, layout.vertices.count, style.palette);
      out += "<circle class=\"" + std::string(torus ? "v0" : "v") + "\" cx=\"" + num(xs[k]) +
             "\" cy=\"" + num(ys[k]) + "\" r=\"" + num(radius) + "\" fill=\"" + fill + "\"/>\n";
    }
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace porigami
