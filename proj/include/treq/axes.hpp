#pragma once

#include <optional>
#include <vector>

#include "treq/word.hpp"

namespace treq {

// Configuration of two axes in the Cayley graph. Separated covers
// |L_g intersect L_h| <= 1 with D the distance between the axes (D = 0 is
// touching at one point); Overlap records the segment length d(x, y) and
// whether the two isometries translate the segment the same way; Unbounded
// means the axes coincide (the elements are powers of one primitive root).
struct AxisConfig {
  enum class Kind { Separated, Overlap, Unbounded };
  enum class Direction { Same, Opposite };

  Kind kind;
  long distance = 0;  // Separated
  long overlap = 0;   // Overlap: d(x, y) >= 1
  std::optional<Direction> direction;  // Overlap and Unbounded
};

// Vertices v with |v| <= radius and d(v, gv) = ||g||, in path order along
// the axis; g translates toward the end of the returned vector.
std::vector<Word> axis_points(const Word& g, long radius);

// c * rho * c^-1 for g = c * rho^m * c^-1 with rho a primitive cyclically
// reduced block; every element is a positive power of its root, so equal
// roots mean equal axes and direction, inverse roots mean equal axes and
// opposite direction.
Word primitive_root(const Word& g);

// |g| + |h| + ||gh|| + 4, enough ball to see the whole interaction region.
long default_radius(const Word& g, const Word& h);

// Classifies the configuration of L_g and L_h inside the radius-R ball.
// Throws RadiusError when the ball provably cannot certify the answer.
AxisConfig classify(const Word& g, const Word& h, long radius);

// The product-length case formula. Throws UnboundedConfigError for the
// unbounded configuration, where the answer depends on the direction bit:
// same direction adds lengths, opposite takes |lg - lh|.
long predicted_product_length(const AxisConfig& cfg, long lg, long lh);

struct ProductReport {
  AxisConfig config;
  long predicted;
  long actual;
  bool match;
};

// Predicts ||gh|| from the axis configuration and compares with the truth.
// radius <= 0 means the default radius.
ProductReport verify_product(const Word& g, const Word& h, long radius = 0);

struct PowerSumRow {
  int sum;      // p + q
  long value;   // the common value of ||g^p h^q||
};

struct PowerRedistributionReport {
  AxisConfig config;
  long base_length;
  int max_sum;
  bool all_equal;       // within every exponent-sum class
  bool formula_match;   // values match the axis-case formula
  std::vector<PowerSumRow> rows;
};

// For every p, q, i, j >= 1 with p + q = i + j <= max_sum checks
// ||g^p h^q|| = ||g^i h^j|| and replays the case formula
// (s*a + 2D separated, s*a same-direction, s*a - 2*overlap opposite).
// Requires ||g|| = ||h|| > 0 and g != h^-1.
PowerRedistributionReport check_power_redistribution(const Word& g, const Word& h, int max_sum);

}  // namespace treq
