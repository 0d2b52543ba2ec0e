#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <string>

#include "sosperm/farey.hpp"
#include "sosperm/geometry.hpp"
#include "sosperm/rational.hpp"

namespace sosperm {

namespace detail {
inline std::string px(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}
}  // namespace detail

/// Renders a partition as SVG. One path per domain, fill keyed by shape;
/// Farey verticals and the diagonal lines i*alpha + beta = j overlaid.
/// Exact rational vertices are converted to pixels only here, and beta grows
/// upward (the y axis is flipped at emission). Permutation labels are drawn
/// when the partition has at most label_threshold domains.
inline std::string render_svg(const square_partition& part, std::int64_t width_px,
                              std::int64_t label_threshold) {
  if (width_px < 1) throw std::invalid_argument("render_svg: width must be positive");
  const double w = static_cast<double>(width_px);
  const auto X = [&](const rational& alpha) { return detail::px(to_double(alpha) * w); };
  const auto Y = [&](const rational& beta) { return detail::px((1.0 - to_double(beta)) * w); };

  const auto fill_of = [](region_shape s) {
    switch (s) {
      case region_shape::triangle_left: return "#b5cde6";
      case region_shape::triangle_right: return "#8db3d8";
      default: return "#f3c98b";
    }
  };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(width_px) +
         "\" height=\"" + std::to_string(width_px) + "\" viewBox=\"0 0 " +
         std::to_string(width_px) + " " + std::to_string(width_px) + "\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(width_px) + "\" height=\"" +
         std::to_string(width_px) + "\" fill=\"#ffffff\"/>\n";

  svg += "<g class=\"domains\" stroke=\"none\">\n";
  for (const domain& dom : part.domains) {
    std::string d;
    for (std::size_t i = 0; i < dom.vertices.size(); ++i) {
      d += i == 0 ? "M" : " L";
      d += X(dom.vertices[i].alpha) + "," + Y(dom.vertices[i].beta);
    }
    d += " Z";
    svg += "<path class=\"" + std::string(to_string(dom.shape)) + "\" data-perm=\"" +
           dom.perm.str() + "\" fill=\"" + fill_of(dom.shape) + "\" d=\"" + d + "\"/>\n";
  }
  svg += "</g>\n";

  svg += "<g class=\"farey-lines\" stroke=\"#444444\" stroke-width=\"1\">\n";
  for (const farey_fraction& f : farey_sequence(part.n)) {
    const std::string x = X(f.to_rational());
    svg += "<line x1=\"" + x + "\" y1=\"" + Y(rational(0)) + "\" x2=\"" + x + "\" y2=\"" +
           Y(rational(1)) + "\"/>\n";
  }
  svg += "</g>\n";

  // Each diagonal line i*alpha + beta = j clipped to the square runs from
  // ((j-1)/i, 1) down to (j/i, 0).
  svg += "<g class=\"diagonal-lines\" stroke=\"#888888\" stroke-width=\"0.7\">\n";
  for (std::int64_t i = 1; i <= part.n; ++i)
    for (std::int64_t j = 1; j <= i; ++j)
      svg += "<line x1=\"" + X(rational(bigint(j - 1), bigint(i))) + "\" y1=\"" +
             Y(rational(1)) + "\" x2=\"" + X(rational(bigint(j), bigint(i))) + "\" y2=\"" +
             Y(rational(0)) + "\"/>\n";
  svg += "</g>\n";

  if (static_cast<std::int64_t>(part.domains.size()) <= label_threshold) {
    const std::int64_t font = std::max<std::int64_t>(8, width_px / 50);
    svg += "<g class=\"labels\" font-family=\"monospace\" font-size=\"" +
           std::to_string(font) + "\" text-anchor=\"middle\" fill=\"#222222\">\n";
    for (const domain& dom : part.domains) {
      rational cx, cy;
      for (const param_point& v : dom.vertices) {
        cx += v.alpha;
        cy += v.beta;
      }
      const rational count(bigint(dom.vertices.size()));
      svg += "<text x=\"" + X(cx / count) + "\" y=\"" + Y(cy / count) + "\">" +
             dom.perm.str() + "</text>\n";
    }
    svg += "</g>\n";
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace sosperm
