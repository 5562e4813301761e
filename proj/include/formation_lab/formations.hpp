#pragma once

#include <optional>
#include <string>

#include "formation_lab/core.hpp"

namespace formlab {

enum class Shape { Circle, Square, Triangle };

std::string shape_name(Shape s);
Shape shape_from_name(const std::string& name);

// Requested formation geometry. For the triangle the area is split evenly
// between height and half-base (a = b = sqrt(area)) unless the two are given
// explicitly through triangle_formation.
struct FormationSpec {
    Shape shape = Shape::Circle;
    int count = 0;
    double area = 0.0;
    std::optional<int> triangle_bottom;  // interior slot count on the base
};

Formation make_formation_from_spec(const FormationSpec& spec);

// n slots evenly spaced counterclockwise on the circle of the given area,
// slot 0 at angle 0.
Formation circle_formation(int n, double area);

// n slots evenly spaced along the perimeter of the square of the given area,
// walked clockwise from the top edge midpoint, then recentred on the slot
// centroid.
Formation square_formation(int n, double area);

// Isosceles triangle: apex up, height a (apex to base midpoint), base length
// 2*b, so the triangle area is a*b. Vertices count 3; x interior slots on
// each waist edge and y = bottom_count on the base, with 3 + 2x + y = n.
// Slot order: apex, base-left, base-right, left waist top-to-bottom, right
// waist top-to-bottom, base left-to-right. The construction centres the
// vertex triangle (apex (0, 2a/3), base midpoint (0, -a/3)); the full slot
// set is then recentred on its own centroid, a no-op when x == y.
// bottom_count < 0 picks the y that makes waist and base slot spacing most
// even (ties to the smaller y).
Formation triangle_formation(int n, double a, double b, int bottom_count = -1);

// Slot with maximum y; ties broken by smaller x, then smaller index.
int leading_slot(const Formation& f);

// Center that minimizes the total squared distance between robots and their
// slots, over all center choices and assignments jointly: the centroid of
// the initial positions (the formation's own centroid being the origin).
Vec2 optimal_center(const std::vector<Vec2>& initial);

}  // namespace formlab
