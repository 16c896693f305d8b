#include "beloch/render.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "beloch/error.hpp"
#include "beloch/parabola.hpp"

namespace beloch {

namespace {

std::string num(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string path_from(const std::vector<Point>& pts) {
  std::string d;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    d += i == 0 ? "M" : " L";
    d += num(pts[i].x) + " " + num(pts[i].y);
  }
  return d;
}

std::vector<Point> sample_orbit(const OrbitTrace& tr, const Rect& view, int n) {
  std::vector<Point> pts;
  pts.reserve(n);
  if (tr.r_lo && tr.r_hi) {
    for (int i = 0; i < n; ++i) {
      const double r = i + 1 == n ? *tr.r_hi : *tr.r_lo + (*tr.r_hi - *tr.r_lo) * i / (n - 1);
      pts.push_back(orbit(tr.params, r).point());
    }
    return pts;
  }
  // sinh spacing keeps the samples dense near r = 0 where the loop lives.
  const double u = std::asinh(escape_parameter(tr.params, view));
  for (int i = 0; i < n; ++i) {
    const double r = std::sinh(-u + 2.0 * u * i / (n - 1));
    pts.push_back(orbit(tr.params, r).point());
  }
  return pts;
}

std::vector<Point> sample_parabola(double alpha, const Rect& view, int n) {
  const double pad = 0.1 * view.height();
  const double y0 = view.y0 - pad;
  const double y1 = view.y1 + pad;
  std::vector<Point> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double y = y0 + (y1 - y0) * i / (n - 1);
    pts.push_back({-y * y / (2.0 * alpha), y});
  }
  return pts;
}

std::vector<Point> fold_segment(const FoldTrace& tr, const Rect& view) {
  const Line l = fold_for(tr.params, tr.r);
  const Point mid{0.5 * (view.x0 + view.x1), 0.5 * (view.y0 + view.y1)};
  const Point foot = mid - l.normal() * l.eval(mid);
  const Point dir{-l.b(), l.a()};
  const double reach = view.width() + view.height();
  return {foot - dir * reach, foot + dir * reach};
}

std::string_view marker_class(MarkerKind kind) {
  switch (kind) {
    case MarkerKind::SingularPoint: return "singular";
    case MarkerKind::Isolated: return "isolated";
    case MarkerKind::Anchor: return "anchor";
    case MarkerKind::Witness: return "witness";
  }
  return "singular";
}

}  // namespace

double escape_parameter(const BelochParams& params, const Rect& view) {
  const Rect wide{view.x0 - 1.0, view.y0 - 1.0, view.x1 + 1.0, view.y1 + 1.0};
  double r = 1.0;
  while (r < 1e8 && (wide.contains(orbit(params, r).point()) || wide.contains(orbit(params, -r).point()))) {
    r *= 2.0;
  }
  return r;
}

std::string render_svg(const PlotScene& scene) {
  if (scene.items.empty()) throw Error(ErrorCode::EmptyScene, "nothing to draw");
  const Rect& v = scene.viewport;
  if (!(v.x0 < v.x1 && v.y0 < v.y1) || !std::isfinite(v.width()) || !std::isfinite(v.height())) {
    throw Error(ErrorCode::InvalidArgument, "viewport must be nonempty");
  }
  if (scene.samples_per_curve < 64) throw Error(ErrorCode::InvalidArgument, "samples_per_curve must be >= 64");

  const int n = scene.samples_per_curve;
  const double unit = std::max(v.width(), v.height()) / 400.0;
  const std::string stroke = num(2.0 * unit);

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" height=\"" +
         num(600.0 * v.height() / v.width()) + "\" viewBox=\"" + num(v.x0) + " " + num(-v.y1) + " " +
         num(v.width()) + " " + num(v.height()) + "\">\n";
  svg += "<defs><clipPath id=\"viewport\"><rect x=\"" + num(v.x0) + "\" y=\"" + num(v.y0) + "\" width=\"" +
         num(v.width()) + "\" height=\"" + num(v.height()) + "\"/></clipPath></defs>\n";
  svg += "<rect x=\"" + num(v.x0) + "\" y=\"" + num(-v.y1) + "\" width=\"" + num(v.width()) + "\" height=\"" +
         num(v.height()) + "\" fill=\"white\"/>\n";
  svg += "<g transform=\"scale(1,-1)\" clip-path=\"url(#viewport)\" fill=\"none\" stroke-width=\"" + stroke +
         "\">\n";

  // Axes first so that curves draw over them.
  svg += "<path class=\"axes\" stroke=\"#bbbbbb\" d=\"M" + num(v.x0) + " 0 L" + num(v.x1) + " 0 M0 " + num(v.y0) +
         " L0 " + num(v.y1) + "\"/>\n";

  std::string markers;
  for (const SceneItem& item : scene.items) {
    if (const auto* o = std::get_if<OrbitTrace>(&item)) {
      svg += "<path class=\"orbit\" stroke=\"#1f4e9c\" d=\"" + path_from(sample_orbit(*o, v, n)) + "\"/>\n";
    } else if (const auto* g = std::get_if<ParabolaTrace>(&item)) {
      svg += "<path class=\"parabola\" stroke=\"#c0392b\" d=\"" + path_from(sample_parabola(g->alpha, v, n)) +
             "\"/>\n";
    } else if (const auto* f = std::get_if<FoldTrace>(&item)) {
      svg += "<path class=\"fold\" stroke=\"#7f8c8d\" stroke-dasharray=\"" + num(6.0 * unit) + "\" d=\"" +
             path_from(fold_segment(*f, v)) + "\"/>\n";
    } else if (const auto* c = std::get_if<CircleTrace>(&item)) {
      svg += "<circle class=\"circle\" stroke=\"#27ae60\" cx=\"" + num(c->circle.center.x) + "\" cy=\"" +
             num(c->circle.center.y) + "\" r=\"" + num(c->circle.radius) + "\"/>\n";
    } else if (const auto* m = std::get_if<Marker>(&item)) {
      const bool hollow = m->kind == MarkerKind::Isolated;
      markers += "<circle class=\"" + std::string(marker_class(m->kind)) + "\" cx=\"" + num(m->at.x) + "\" cy=\"" +
                 num(m->at.y) + "\" r=\"" + num(5.0 * unit) + "\" stroke=\"black\" fill=\"" +
                 (hollow ? "white" : "black") + "\"/>\n";
    }
  }
  svg += markers;
  svg += "</g>\n</svg>\n";
  return svg;
}

PlotScene make_scene(const BelochParams& params, std::optional<Rect> viewport) {
  PlotScene scene;
  const ShapeClass shape = classify(params);
  scene.items.push_back(OrbitTrace{params, std::nullopt, std::nullopt});
  scene.items.push_back(ParabolaTrace{params.alpha});

  std::vector<Marker> markers;
  markers.push_back({params.singular_point(),
                     shape == ShapeClass::IsolatedPoint ? MarkerKind::Isolated : MarkerKind::SingularPoint});
  markers.push_back({params.anchor(), MarkerKind::Anchor});
  if (params.alpha == 2.0) {
    for (double r : fg_intersection_count(params).witnesses) {
      markers.push_back({orbit(params, r).point(), MarkerKind::Witness});
    }
  }

  if (viewport) {
    scene.viewport = *viewport;
  } else {
    Rect& v = scene.viewport;
    for (const Marker& m : markers) {
      v.x0 = std::min(v.x0, m.at.x - 1.0);
      v.y0 = std::min(v.y0, m.at.y - 1.0);
      v.x1 = std::max(v.x1, m.at.x + 1.0);
      v.y1 = std::max(v.y1, m.at.y + 1.0);
    }
  }
  for (const Marker& m : markers) scene.items.push_back(m);
  return scene;
}

std::string export_orbit_csv(const BelochParams& params, double r_min, double r_max, int n) {
  if (!std::isfinite(r_min) || !std::isfinite(r_max) || !(r_min < r_max) || n < 2) {
    throw Error(ErrorCode::BadRange, "need r_min < r_max and n >= 2");
  }
  std::string out = "r,s,t\n";
  char buf[96];
  for (int i = 0; i < n; ++i) {
    const double r = i + 1 == n ? r_max : r_min + (r_max - r_min) * i / (n - 1);
    OrbitPoint o = orbit(params, r);
    if (o.s == 0.0) o.s = 0.0;
    if (o.t == 0.0) o.t = 0.0;
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", r == 0.0 ? 0.0 : r, o.s, o.t);
    out += buf;
  }
  return out;
}

std::vector<OrbitPoint> parse_orbit_csv(std::string_view text) {
  auto next_line = [&text]() {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return line;
  };
  if (next_line() != "r,s,t") throw Error(ErrorCode::InvalidArgument, "CSV header must be r,s,t");

  std::vector<OrbitPoint> rows;
  while (!text.empty()) {
    const std::string_view line = next_line();
    if (line.empty()) continue;
    double v[3];
    const char* at = line.data();
    const char* end = line.data() + line.size();
    for (int k = 0; k < 3; ++k) {
      const auto [ptr, ec] = std::from_chars(at, end, v[k]);
      if (ec != std::errc{}) throw Error(ErrorCode::InvalidArgument, "bad CSV field: " + std::string(line));
      at = ptr;
      if (k < 2) {
        if (at == end || *at != ',') throw Error(ErrorCode::InvalidArgument, "bad CSV row: " + std::string(line));
        ++at;
      }
    }
    if (at != end) throw Error(ErrorCode::InvalidArgument, "bad CSV row: " + std::string(line));
    rows.push_back({v[0], v[1], v[2]});
  }
  return rows;
}

}  // namespace beloch
