#include "minkdec/polygon.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace minkdec {

LabeledPolygon::LabeledPolygon(const CoxeterPartition& partition)
    : partition_(partition) {
  int n = partition.n();
  cycle_.reserve(static_cast<std::size_t>(n) + 2);
  cycle_.push_back(0);
  for (int d : partition.down_elements()) cycle_.push_back(d);
  cycle_.push_back(n + 1);
  const auto& ups = partition.up_elements();
  for (auto it = ups.rbegin(); it != ups.rend(); ++it) cycle_.push_back(*it);

  pos_.assign(static_cast<std::size_t>(n) + 2, -1);
  for (int i = 0; i < size(); ++i) pos_[static_cast<std::size_t>(cycle_[i])] = i;
}

int LabeledPolygon::position(int label) const {
  if (label < 0 || label > partition_.n() + 1) {
    throw std::out_of_range("label " + std::to_string(label) +
                            " outside {0,...,n+1}");
  }
  return pos_[static_cast<std::size_t>(label)];
}

bool LabeledPolygon::boundary_adjacent(int x, int y) const {
  int L = size();
  int dist = position(x) - position(y);
  dist = ((dist % L) + L) % L;
  return dist == 1 || dist == L - 1;
}

Diagonal LabeledPolygon::diagonal(int x, int y) const {
  position(x);  // range checks
  position(y);
  Diagonal d;
  d.x = std::min(x, y);
  d.y = std::max(x, y);
  if (x == y) {
    d.kind = DiagonalKind::degenerate;
  } else if (boundary_adjacent(x, y)) {
    d.kind = DiagonalKind::non_proper_boundary;
  } else {
    d.kind = DiagonalKind::proper;
  }
  return d;
}

LabeledPolygon build_polygon(const CoxeterPartition& partition) {
  return LabeledPolygon(partition);
}

std::vector<Diagonal> all_diagonals(const LabeledPolygon& polygon) {
  int top = polygon.partition().n() + 1;
  std::vector<Diagonal> out;
  out.reserve(static_cast<std::size_t>(top + 1) * top / 2);
  for (int x = 0; x <= top; ++x) {
    for (int y = x + 1; y <= top; ++y) {
      out.push_back(polygon.diagonal(x, y));
    }
  }
  return out;
}

Subset right_set(const LabeledPolygon& polygon, const Diagonal& diagonal) {
  const CoxeterPartition& part = polygon.partition();
  int n = part.n();
  polygon.position(diagonal.x);  // range checks
  polygon.position(diagonal.y);

  if (!diagonal.is_proper()) {
    if (diagonal.x == 0 && diagonal.y == n + 1 && part.up_set() == 0) {
      return full_set(n);
    }
    auto in_extended_down = [&](int label) {
      return label == 0 || label == n + 1 || part.is_down(label);
    };
    if (in_extended_down(diagonal.x) && in_extended_down(diagonal.y)) return 0;
    return full_set(n);
  }

  // Walk the cycle from the smaller to the larger label; the labels passed
  // strictly in between lie on the right of the oriented diagonal.
  int L = polygon.size();
  int px = polygon.position(diagonal.x);
  int py = polygon.position(diagonal.y);
  Subset right = 0;
  bool saw_zero = false, saw_top = false;
  for (int p = (px + 1) % L; p != py; p = (p + 1) % L) {
    int label = polygon.cycle()[static_cast<std::size_t>(p)];
    if (label == 0) {
      saw_zero = true;
    } else if (label == n + 1) {
      saw_top = true;
    } else {
      right = with_element(right, label);
    }
  }
  // 0 and n+1 stand in for the smaller respectively larger endpoint of the
  // diagonal lying in the up set; for a proper diagonal the matching endpoint
  // always exists when they occur.
  if (saw_zero) {
    if (!part.is_up(diagonal.x)) {
      throw std::logic_error("no up endpoint available to replace label 0");
    }
    right = with_element(right, diagonal.x);
  }
  if (saw_top) {
    if (!part.is_up(diagonal.y)) {
      throw std::logic_error("no up endpoint available to replace label n+1");
    }
    right = with_element(right, diagonal.y);
  }
  return right;
}

bool diagonals_cross(const LabeledPolygon& polygon, const Diagonal& d1,
                     const Diagonal& d2) {
  if (!d1.is_proper() || !d2.is_proper()) {
    throw std::invalid_argument("diagonals_cross requires proper diagonals");
  }
  if (d1.x == d2.x || d1.x == d2.y || d1.y == d2.x || d1.y == d2.y) {
    return false;
  }
  int L = polygon.size();
  int a = polygon.position(d1.x);
  int b = polygon.position(d1.y);
  // Is p strictly inside the cyclic arc from a to b?
  auto inside = [&](int p) {
    int rel = ((p - a) % L + L) % L;
    int end = ((b - a) % L + L) % L;
    return 0 < rel && rel < end;
  };
  return inside(polygon.position(d2.x)) != inside(polygon.position(d2.y));
}

}  // namespace minkdec
