#pragma once

#include <memory>

#include "pucci2d/geometry.hpp"

namespace pucci2d {

/// Which half of the vertical cut an ellipse segment keeps, relative to the
/// center: Positive keeps x - cx > b/2, Negative keeps x - cx < -b/2.
enum class CutSide { Positive, Negative };

/// Closed-form 2D domain: primitives plus set algebra, evaluated as point
/// predicates. `contains` tests the open set, `contains_closed` its closure
/// (for the algebra nodes these are the natural per-node approximations).
class DomainSpec {
  public:
    static DomainSpec rectangle(double x0, double x1, double y0, double y1);
    static DomainSpec disc(Vec2 center, double radius);
    /// Truncated strip [0, M] x [-L/2, L/2].
    static DomainSpec strip_truncated(double width, double length);
    static DomainSpec ellipse_segment(Vec2 center, double b, double c, CutSide cut);
    static DomainSpec unite(DomainSpec a, DomainSpec b);
    static DomainSpec intersect(DomainSpec a, DomainSpec b);
    static DomainSpec subtract(DomainSpec a, DomainSpec b);

    bool contains(Vec2 p) const;
    bool contains_closed(Vec2 p) const;
    BBox bounding_box() const;

  private:
    struct Node;
    explicit DomainSpec(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

}  // namespace pucci2d
