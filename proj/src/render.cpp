#include "mdopt/render.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <vector>

namespace mdopt {

namespace {

const char* kPalette[] = {"#b8d4ea", "#b5dcb2", "#f6c28f", "#cfc4e2",
                          "#f2b8c6", "#e6e29a", "#a9dcd9", "#d9c4a9"};
const char* kNone = "#ededed";

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

struct Canvas {
  const Box& box;
  RenderOptions opt;
  std::ostringstream out;

  Canvas(const Box& b, const RenderOptions& o) : box(b), opt(o) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.width
        << "\" height=\"" << opt.height << "\" viewBox=\"0 0 " << opt.width
        << " " << opt.height << "\">\n"
        << "<rect width=\"" << opt.width << "\" height=\"" << opt.height
        << "\" fill=\"#ffffff\"/>\n";
  }

  double sx(double x) const {
    return opt.margin + (x - box.lo[0]) / (box.hi[0] - box.lo[0]) *
                            (opt.width - 2.0 * opt.margin);
  }
  double sy(double y) const {
    return opt.height - opt.margin -
           (y - box.lo[1]) / (box.hi[1] - box.lo[1]) *
               (opt.height - 2.0 * opt.margin);
  }

  // Color the box by classifying raster cell centers, merging equal runs.
  void raster(const std::function<int(const Vec&)>& classify,
              const std::function<const char*(int)>& color) {
    const int R = opt.raster;
    const double dx = (box.hi[0] - box.lo[0]) / R;
    const double dy = (box.hi[1] - box.lo[1]) / R;
    for (int iy = 0; iy < R; ++iy) {
      const double yc = box.lo[1] + (iy + 0.5) * dy;
      int run_id = 0, run_start = 0;
      bool first = true;
      auto flush = [&](int end) {
        const double x0 = box.lo[0] + run_start * dx;
        const double x1 = box.lo[0] + end * dx;
        const double y0 = box.lo[1] + iy * dy;
        const double y1 = y0 + dy;
        out << "<rect x=\"" << num(sx(x0)) << "\" y=\"" << num(sy(y1))
            << "\" width=\"" << num(sx(x1) - sx(x0)) << "\" height=\""
            << num(sy(y0) - sy(y1)) << "\" fill=\"" << color(run_id)
            << "\"/>\n";
      };
      for (int ix = 0; ix < R; ++ix) {
        const Vec p = {box.lo[0] + (ix + 0.5) * dx, yc};
        const int id = classify(p);
        if (first) {
          run_id = id;
          run_start = ix;
          first = false;
        } else if (id != run_id) {
          flush(ix);
          run_id = id;
          run_start = ix;
        }
      }
      if (!first) flush(R);
    }
  }

  void polyline(const std::vector<Vec>& pts, const char* stroke,
                const char* dash = nullptr) {
    if (pts.size() < 2) return;
    out << "<path d=\"";
    for (std::size_t i = 0; i < pts.size(); ++i)
      out << (i == 0 ? "M" : " L") << num(sx(pts[i][0])) << " "
          << num(sy(pts[i][1]));
    out << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1.6\"";
    if (dash) out << " stroke-dasharray=\"" << dash << "\"";
    out << "/>\n";
  }

  void text(double x, double y, const std::string& s, int size = 15,
            const char* fill = "#222222") {
    out << "<text x=\"" << num(x) << "\" y=\"" << num(y) << "\" font-size=\""
        << size << "\" font-family=\"sans-serif\" fill=\"" << fill << "\">" << s
        << "</text>\n";
  }

  void frame() {
    out << "<rect x=\"" << num(sx(box.lo[0])) << "\" y=\"" << num(sy(box.hi[1]))
        << "\" width=\"" << num(sx(box.hi[0]) - sx(box.lo[0]))
        << "\" height=\"" << num(sy(box.lo[1]) - sy(box.hi[1]))
        << "\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1.2\"/>\n";
  }

  std::string finish() {
    out << "</svg>\n";
    return out.str();
  }
};

// Average position of the raster cells with a given id; used to place labels.
struct Centroid {
  double x = 0, y = 0;
  long n = 0;
};

}  // namespace

std::string render_menu_svg(const Menu& menu, const Box& box,
                            const RenderOptions& options) {
  Canvas cv(box, options);
  std::vector<Centroid> cent(menu.items.size() + 1);
  auto classify = [&](const Vec& p) {
    const int w = menu_winner(menu, p);
    Centroid& c = cent[w + 1];
    c.x += p[0];
    c.y += p[1];
    ++c.n;
    return w;
  };
  auto color = [&](int id) {
    return id < 0 ? kNone : kPalette[id % 8];
  };
  cv.raster(classify, color);
  cv.frame();
  for (std::size_t k = 0; k + 1 < cent.size(); ++k) {
    const Centroid& c = cent[k + 1];
    if (c.n == 0) continue;
    std::ostringstream lbl;
    lbl << "item " << k << " @ " << menu.items[k].price;
    cv.text(cv.sx(c.x / c.n) - 28, cv.sy(c.y / c.n), lbl.str(), 13);
  }
  if (cent[0].n > 0)
    cv.text(cv.sx(cent[0].x / cent[0].n) - 10, cv.sy(cent[0].y / cent[0].n),
            "0", 13, "#666666");
  return cv.finish();
}

std::string render_partition_svg(const Partition2D& p,
                                 const RenderOptions& options) {
  Canvas cv(p.box, options);
  std::vector<Centroid> cent(4);
  auto classify = [&](const Vec& x) {
    int id = 0;
    if (p.W.contains(x, 1e-9))
      id = 3;
    else if (p.has_A && p.A.contains(x, 1e-9))
      id = 1;
    else if (p.has_B && p.B.contains(x, 1e-9))
      id = 2;
    Centroid& c = cent[id];
    c.x += x[0];
    c.y += x[1];
    ++c.n;
    return id;
  };
  auto color = [&](int id) { return id == 0 ? kNone : kPalette[id - 1]; };
  cv.raster(classify, color);

  // Exclusion boundary curves, clipped to the box.
  const int M = 256;
  std::vector<Vec> sig, tau;
  for (int k = 0; k <= M; ++k) {
    const double x = p.box.lo[0] + (p.box.hi[0] - p.box.lo[0]) * k / M;
    const double y = std::min(p.box.hi[1], std::max(p.box.lo[1], p.sigma(x)));
    sig.push_back({x, y});
    const double t = p.box.lo[1] + (p.box.hi[1] - p.box.lo[1]) * k / M;
    const double s = std::min(p.box.hi[0], std::max(p.box.lo[0], p.tau(t)));
    tau.push_back({s, t});
  }
  cv.polyline(sig, "#1f4e79");
  cv.polyline(tau, "#1f4e79");

  // Bundle price line inside the box.
  const double x0 = std::max(p.box.lo[0], p.price - p.box.hi[1]);
  const double x1 = std::min(p.box.hi[0], p.price - p.box.lo[1]);
  if (x1 > x0)
    cv.polyline({{x0, p.price - x0}, {x1, p.price - x1}}, "#8c2d2d", "6 4");

  static const char* names[4] = {"Z", "A", "B", "W"};
  for (int id = 0; id < 4; ++id) {
    if (cent[id].n == 0) continue;
    cv.text(cv.sx(cent[id].x / cent[id].n) - 6,
            cv.sy(cent[id].y / cent[id].n) + 5, names[id], 17);
  }
  cv.frame();
  std::ostringstream head;
  head << "bundle price " << p.price;
  cv.text(options.margin, options.margin - 14, head.str(), 14, "#444444");
  return cv.finish();
}

}  // namespace mdopt
