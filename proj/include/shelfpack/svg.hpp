#pragma once

#include <string>
#include <vector>

#include "shelfpack/geometry.hpp"

namespace shelfpack::svg {

struct Circle {
  std::string id;
  double footpoint;
  double radius;
};

struct Figure {
  std::vector<Circle> circles;
  double left_wall;
  double right_wall;
  std::string span_label;
};

/// Deterministic SVG: baseline, one circle per disk resting on it, dashed
/// walls and a span bracket. `scale` is pixels per unit; must be positive.
std::string render(const Figure& figure, double scale);

template <Scalar T>
Figure figure_of(const Placement<T>& p) {
  using Traits = ScalarTraits<T>;
  const auto report = span(p);
  Figure f{{}, Traits::to_double(report.left_wall), Traits::to_double(report.right_wall),
           Traits::to_display(report.span)};
  for (const auto& d : p) {
    f.circles.push_back({d.disk.id.str(), Traits::to_double(d.footpoint),
                         Traits::to_double(d.disk.radius())});
  }
  return f;
}

template <Scalar T>
std::string render(const Placement<T>& p, double scale) {
  return render(figure_of(p), scale);
}

}  // namespace shelfpack::svg
