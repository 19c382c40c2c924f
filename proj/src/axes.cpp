#include "treq/axes.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "treq/cyclic_word.hpp"
#include "treq/errors.hpp"

namespace treq {

namespace {

long cyclic_length(const Word& w) {
  return w.empty() ? 0 : static_cast<long>(CyclicWord(w).length());
}

long word_distance(const Word& u, const Word& v) {
  return static_cast<long>((u.inverse() * v).length());
}

std::string vertex_key(const Word& w) {
  std::string k;
  k.reserve(w.length());
  for (Letter l : w.letters()) k.push_back(static_cast<char>(l.code()));
  return k;
}

// The in-ball part of the axis as an ordered vertex path; g translates
// toward increasing index by ||g||. Distances from the basepoint along a
// line in a tree are V-shaped, so the in-ball part is one contiguous run.
struct AxisLine {
  std::vector<Word> verts;
};

AxisLine axis_line(const Word& g, long radius) {
  auto [c, core] = CyclicWord::reduce(g);
  const auto& u = core.letters();
  const long n = static_cast<long>(u.size());
  const long span = radius + static_cast<long>(c.length()) + 1;

  auto walk = [&](bool forward) {
    std::vector<Word> out;
    std::vector<Letter> cur(c.letters().begin(), c.letters().end());
    for (long t = 0; t < span; ++t) {
      Letter step = forward ? u[static_cast<std::size_t>(t % n)]
                            : u[static_cast<std::size_t>(n - 1 - (t % n))].inverse();
      append_reduced(cur, step);
      out.push_back(Word(g.rank(), cur));
    }
    return out;
  };

  std::vector<Word> fwd = walk(true);
  std::vector<Word> bwd = walk(false);

  AxisLine line;
  for (auto it = bwd.rbegin(); it != bwd.rend(); ++it) {
    if (static_cast<long>(it->length()) <= radius) line.verts.push_back(*it);
  }
  if (static_cast<long>(c.length()) <= radius) line.verts.push_back(c);
  for (const Word& w : fwd) {
    if (static_cast<long>(w.length()) <= radius) line.verts.push_back(w);
  }
  return line;
}

}  // namespace

std::vector<Word> axis_points(const Word& g, long radius) {
  if (g.empty()) throw DomainError("axis_points: trivial word");
  if (radius < 0) throw DomainError("axis_points: negative radius");
  return axis_line(g, radius).verts;
}

Word primitive_root(const Word& g) {
  if (g.empty()) throw DomainError("primitive_root: trivial word");
  // Peel w = c * core * c^-1 keeping the core in its original rotation, so
  // the returned c * block * c^-1 concatenates without cancellation.
  const auto& L = g.letters();
  std::size_t i = 0, j = L.size();
  while (j - i >= 2 && L[i] == L[j - 1].inverse()) {
    ++i;
    --j;
  }
  const std::size_t n = j - i;
  std::size_t d = n;
  for (std::size_t cand = 1; cand < n; ++cand) {
    if (n % cand != 0) continue;
    bool periodic = true;
    for (std::size_t t = cand; t < n; ++t) {
      if (L[i + t] != L[i + (t % cand)]) {
        periodic = false;
        break;
      }
    }
    if (periodic) {
      d = cand;
      break;
    }
  }
  std::vector<Letter> out(L.begin(), L.begin() + static_cast<std::ptrdiff_t>(i));
  out.insert(out.end(), L.begin() + static_cast<std::ptrdiff_t>(i),
             L.begin() + static_cast<std::ptrdiff_t>(i + d));
  for (std::size_t t = i; t > 0; --t) out.push_back(L[t - 1].inverse());
  return Word(g.rank(), out);
}

long default_radius(const Word& g, const Word& h) {
  return static_cast<long>(g.length() + h.length()) + cyclic_length(g * h) + 4;
}

AxisConfig classify(const Word& g, const Word& h, long radius) {
  if (g.empty() || h.empty()) throw DomainError("classify: trivial input");
  if (g.rank() != h.rank()) throw DomainError("classify: rank mismatch");
  if (radius < default_radius(g, h)) {
    throw RadiusError("classify: radius below |g| + |h| + ||gh|| + 4");
  }

  Word rg = primitive_root(g), rh = primitive_root(h);
  if (rg == rh) return {AxisConfig::Kind::Unbounded, 0, 0, AxisConfig::Direction::Same};
  if (rg == rh.inverse()) {
    return {AxisConfig::Kind::Unbounded, 0, 0, AxisConfig::Direction::Opposite};
  }

  AxisLine A = axis_line(g, radius);
  AxisLine B = axis_line(h, radius);
  std::unordered_map<std::string, std::size_t> b_index;
  for (std::size_t k = 0; k < B.verts.size(); ++k) b_index.emplace(vertex_key(B.verts[k]), k);

  std::vector<std::size_t> common;  // indices into A.verts
  for (std::size_t k = 0; k < A.verts.size(); ++k) {
    if (b_index.count(vertex_key(A.verts[k]))) common.push_back(k);
  }
  for (std::size_t t = 1; t < common.size(); ++t) {
    if (common[t] != common[t - 1] + 1) {
      throw std::logic_error("classify: axis intersection is not a segment");
    }
  }

  if (common.empty()) {
    long best = -1;
    for (const Word& u : A.verts) {
      for (const Word& v : B.verts) {
        long duv = word_distance(u, v);
        if (best < 0 || duv < best) best = duv;
      }
    }
    return {AxisConfig::Kind::Separated, best, 0, std::nullopt};
  }
  if (common.size() == 1) return {AxisConfig::Kind::Separated, 0, 0, std::nullopt};

  const std::size_t i0 = common.front(), i1 = common.back();
  std::size_t pbx = b_index.at(vertex_key(A.verts[i0]));
  std::size_t pby = b_index.at(vertex_key(A.verts[i1]));
  if (i0 == 0 || i1 + 1 == A.verts.size() || std::min(pbx, pby) == 0 ||
      std::max(pbx, pby) + 1 == B.verts.size()) {
    throw RadiusError("classify: overlap reaches the ball boundary; enlarge the radius");
  }
  AxisConfig::Direction dir =
      pbx < pby ? AxisConfig::Direction::Same : AxisConfig::Direction::Opposite;
  return {AxisConfig::Kind::Overlap, 0, static_cast<long>(i1 - i0), dir};
}

long predicted_product_length(const AxisConfig& cfg, long lg, long lh) {
  switch (cfg.kind) {
    case AxisConfig::Kind::Separated:
      return lg + lh + 2 * cfg.distance;
    case AxisConfig::Kind::Overlap:
      if (cfg.direction == AxisConfig::Direction::Same) return lg + lh;
      if (lg >= cfg.overlap && lh >= cfg.overlap) return lg + lh - 2 * cfg.overlap;
      return lg > lh ? lg - lh : lh - lg;
    case AxisConfig::Kind::Unbounded:
      throw UnboundedConfigError(
          "predicted_product_length: unbounded overlap; dispatch on the direction bit");
  }
  throw std::logic_error("predicted_product_length: bad kind");
}

ProductReport verify_product(const Word& g, const Word& h, long radius) {
  if (radius <= 0) radius = default_radius(g, h);
  AxisConfig cfg = classify(g, h, radius);
  long lg = cyclic_length(g), lh = cyclic_length(h);
  long predicted;
  if (cfg.kind == AxisConfig::Kind::Unbounded) {
    predicted = (cfg.direction == AxisConfig::Direction::Same) ? lg + lh
                : (lg > lh ? lg - lh : lh - lg);
  } else {
    predicted = predicted_product_length(cfg, lg, lh);
  }
  long actual = cyclic_length(g * h);
  return {cfg, predicted, actual, predicted == actual};
}

PowerRedistributionReport check_power_redistribution(const Word& g, const Word& h, int max_sum) {
  if (g.empty() || h.empty()) throw DomainError("check_power_redistribution: trivial input");
  long a = cyclic_length(g);
  if (a != cyclic_length(h)) {
    throw DomainError("check_power_redistribution: ||g|| and ||h|| must agree");
  }
  if (g == h.inverse()) throw DomainError("check_power_redistribution: g = h^-1");
  if (max_sum < 2) throw DomainError("check_power_redistribution: max_sum must be >= 2");

  AxisConfig cfg = classify(g, h, default_radius(g, h));
  if (cfg.kind == AxisConfig::Kind::Unbounded &&
      cfg.direction == AxisConfig::Direction::Opposite) {
    // Equal lengths on a shared axis with opposite directions would force
    // g = h^-1, which is excluded above.
    throw std::logic_error("check_power_redistribution: impossible configuration");
  }

  PowerRedistributionReport report{cfg, a, max_sum, true, true, {}};
  for (int s = 2; s <= max_sum; ++s) {
    long expected;
    switch (cfg.kind) {
      case AxisConfig::Kind::Separated:
        expected = s * a + 2 * cfg.distance;
        break;
      case AxisConfig::Kind::Overlap:
        expected = (cfg.direction == AxisConfig::Direction::Same) ? s * a
                                                                  : s * a - 2 * cfg.overlap;
        break;
      default:
        expected = s * a;  // unbounded, same direction
    }
    long common_value = -1;
    for (int p = 1; p < s; ++p) {
      long value = cyclic_length(g.pow(p) * h.pow(s - p));
      if (common_value < 0) common_value = value;
      if (value != common_value) report.all_equal = false;
      if (value != expected) report.formula_match = false;
    }
    report.rows.push_back({s, common_value});
  }
  return report;
}

}  // namespace treq
