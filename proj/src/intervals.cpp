#include "minkdec/intervals.hpp"

#include <algorithm>
#include <stdexcept>

namespace minkdec {

namespace {

// Next element of the up set strictly above `label`, or 0 if none.
int up_successor(const CoxeterPartition& part, int label) {
  for (int u : part.up_elements()) {
    if (u > label) return u;
  }
  return 0;
}

}  // namespace

Subset NestedComponent::members() const {
  Subset s = down.elems;
  for (const UpInterval& u : ups) s |= u.elems;
  return s;
}

UpDownDecomposition decompose(const CoxeterPartition& partition, Subset I) {
  int n = partition.n();
  if (I == 0) throw std::invalid_argument("cannot decompose the empty set");
  if ((I & ~full_set(n)) != 0) {
    throw std::invalid_argument("subset exceeds the ground set");
  }

  const std::vector<int>& downs = partition.down_elements();
  int ell = static_cast<int>(downs.size());

  // Maximal runs of consecutive down elements contained in I, recorded as
  // open intervals whose bounds are the neighbouring members of Do u {0,n+1}.
  struct Candidate {
    DownInterval down;
  };
  std::vector<Candidate> candidates;
  for (int j = 0; j < ell;) {
    if (!contains(I, downs[static_cast<std::size_t>(j)])) {
      ++j;
      continue;
    }
    int first = j;
    while (j < ell && contains(I, downs[static_cast<std::size_t>(j)])) ++j;
    int last = j - 1;
    DownInterval d;
    d.lo = first == 0 ? 0 : downs[static_cast<std::size_t>(first - 1)];
    d.hi = last == ell - 1 ? n + 1 : downs[static_cast<std::size_t>(last + 1)];
    for (int k = first; k <= last; ++k) {
      d.elems = with_element(d.elems, downs[static_cast<std::size_t>(k)]);
    }
    candidates.push_back({d});
  }

  // Empty down intervals between consecutive down elements, skipping the
  // pairs already spanned by a run above.
  for (int j = 0; j + 1 < ell; ++j) {
    int lo = downs[static_cast<std::size_t>(j)];
    int hi = downs[static_cast<std::size_t>(j + 1)];
    bool inside_run = false;
    for (const Candidate& c : candidates) {
      if (c.down.lo <= lo && hi <= c.down.hi) {
        inside_run = true;
        break;
      }
    }
    if (inside_run) continue;
    DownInterval d;
    d.lo = lo;
    d.hi = hi;
    d.empty_index = j + 1;  // index r of the pair (d_r, d_{r+1})
    candidates.push_back({d});
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              return a.down.lo != b.down.lo ? a.down.lo < b.down.lo
                                            : a.down.hi < b.down.hi;
            });

  // Up intervals: maximal blocks of up elements of I, consecutive in the up
  // set and confined to one candidate interval.
  UpDownDecomposition dec;
  dec.subject = I;
  const std::vector<int>& ups = partition.up_elements();
  for (const Candidate& c : candidates) {
    NestedComponent comp;
    comp.down = c.down;
    UpInterval current;
    int prev_index = -2;
    for (int ui = 0; ui < static_cast<int>(ups.size()); ++ui) {
      int u = ups[static_cast<std::size_t>(ui)];
      if (u <= c.down.lo || u >= c.down.hi || !contains(I, u)) continue;
      if (prev_index == ui - 1) {
        current.beta = u;
        current.elems = with_element(current.elems, u);
      } else {
        if (current.elems != 0) comp.ups.push_back(current);
        current = UpInterval{u, u, with_element(0, u)};
      }
      prev_index = ui;
    }
    if (current.elems != 0) comp.ups.push_back(current);

    // An empty down interval only enters the decomposition when it hosts an
    // up interval.
    if (comp.down.empty() && comp.ups.empty()) continue;
    dec.type_w += static_cast<int>(comp.ups.size());
    dec.components.push_back(std::move(comp));
  }
  dec.type_v = static_cast<int>(dec.components.size());
  return dec;
}

UpDownDecomposition associated_diagonals(const CoxeterPartition& partition,
                                         Subset I) {
  UpDownDecomposition dec = decompose(partition, I);
  LabeledPolygon polygon = build_polygon(partition);

  for (NestedComponent& comp : dec.components) {
    if (comp.ups.empty()) {
      comp.diagonals.push_back(polygon.diagonal(comp.down.lo, comp.down.hi));
    } else {
      comp.diagonals.push_back(
          polygon.diagonal(comp.down.lo, comp.ups.front().alpha));
      for (std::size_t j = 1; j < comp.ups.size(); ++j) {
        comp.diagonals.push_back(
            polygon.diagonal(comp.ups[j - 1].beta, comp.ups[j].alpha));
      }
      comp.diagonals.push_back(
          polygon.diagonal(comp.ups.back().beta, comp.down.hi));
    }
    for (int j = 0; j < static_cast<int>(comp.diagonals.size()); ++j) {
      if (comp.diagonals[static_cast<std::size_t>(j)].is_proper()) {
        comp.proper_indices.push_back(j + 1);
      }
    }
    comp.rightmost = comp.proper_indices.empty() ? 0 : comp.proper_indices.back();
  }

  // Reconstruction identity over the proper associated diagonals. Only the
  // full ground set lacks a proper diagonal per component.
  int n = partition.n();
  if (I != full_set(n)) {
    Subset recon = 0;
    for (const NestedComponent& comp : dec.components) {
      if (comp.rightmost == 0) {
        throw std::logic_error("component of a proper subset without proper diagonals");
      }
      Subset part_set = right_set(
          polygon, comp.diagonals[static_cast<std::size_t>(comp.rightmost - 1)]);
      for (int j : comp.proper_indices) {
        if (j == comp.rightmost) continue;
        Subset rj =
            right_set(polygon, comp.diagonals[static_cast<std::size_t>(j - 1)]);
        part_set &= ~(full_set(n) & ~rj);
      }
      recon |= part_set;
    }
    if (recon != I) {
      throw std::logic_error("reconstruction identity failed");
    }
  }
  return dec;
}

FourDiagonalFrame four_diagonal_frame(const CoxeterPartition& partition,
                                      Subset I) {
  UpDownDecomposition dec = decompose(partition, I);
  if (dec.type_v != 1) {
    throw std::invalid_argument(
        "four-diagonal frame undefined: subset has " +
        std::to_string(dec.type_v) + " nested components");
  }
  LabeledPolygon polygon = build_polygon(partition);
  FourDiagonalFrame frame;
  frame.gamma = min_element(I);
  frame.Gamma = max_element(I);
  frame.a = dec.components.front().down.lo;
  frame.b = dec.components.front().down.hi;
  frame.deltas[0] = polygon.diagonal(frame.a, frame.b);
  frame.deltas[1] = polygon.diagonal(frame.a, frame.Gamma);
  frame.deltas[2] = polygon.diagonal(frame.gamma, frame.b);
  frame.deltas[3] = polygon.diagonal(frame.gamma, frame.Gamma);
  return frame;
}

unsigned FourDiagonalFrame::proper_mask() const {
  unsigned mask = 0;
  for (int i = 0; i < 4; ++i) {
    if (deltas[static_cast<std::size_t>(i)].is_proper()) mask |= 1u << i;
  }
  return mask;
}

std::string frame_case_name(FrameCase c) {
  switch (c) {
    case FrameCase::d1: return "d1";
    case FrameCase::d1d4_a: return "d1d4a";
    case FrameCase::d1d4_b: return "d1d4b";
    case FrameCase::d2d3_a: return "d2d3a";
    case FrameCase::d2d3_b: return "d2d3b";
    case FrameCase::d1d2d3_a: return "d1d2d3a";
    case FrameCase::d1d2d3_b: return "d1d2d3b";
    case FrameCase::d1d2d4_a: return "d1d2d4a";
    case FrameCase::d1d2d4_b: return "d1d2d4b";
    case FrameCase::d1d2d4_c: return "d1d2d4c";
    case FrameCase::d1d3d4_a: return "d1d3d4a";
    case FrameCase::d1d3d4_b: return "d1d3d4b";
    case FrameCase::d1d3d4_c: return "d1d3d4c";
    case FrameCase::d2d3d4: return "d2d3d4";
    case FrameCase::full: return "full";
    case FrameCase::ground_set: return "ground";
  }
  return "?";
}

FrameCase classify_frame(const CoxeterPartition& partition, Subset I) {
  int n = partition.n();
  if (I == full_set(n)) return FrameCase::ground_set;

  UpDownDecomposition dec = decompose(partition, I);
  if (dec.type_v != 1) {
    throw std::invalid_argument("classification requires a nested subset");
  }
  FourDiagonalFrame f = four_diagonal_frame(partition, I);
  Subset down_part = dec.components.front().down.elems;
  Subset up_part = I & partition.up_set();
  auto fail = [&]() -> FrameCase {
    throw std::logic_error("frame shape contradicts its structural case");
  };

  switch (f.proper_mask()) {
    case 0b0001: {  // delta1 only
      if (f.gamma != f.Gamma || !partition.is_down(f.gamma)) return fail();
      return FrameCase::d1;
    }
    case 0b1001: {  // delta1 and delta4
      if (partition.is_down(f.gamma) && partition.is_up(f.Gamma)) {
        // I = {1, u_1} below the second down element.
        if (f.gamma != 1 || f.Gamma != partition.up_elements().front() ||
            f.Gamma > partition.down_successor(1) ||
            I != (with_element(0, 1) | with_element(0, f.Gamma))) {
          return fail();
        }
        return FrameCase::d1d4_a;
      }
      if (partition.is_up(f.gamma) && partition.is_down(f.Gamma)) {
        if (f.Gamma != n || f.gamma != partition.up_elements().back() ||
            f.gamma < partition.down_predecessor(n) ||
            I != (with_element(0, n) | with_element(0, f.gamma))) {
          return fail();
        }
        return FrameCase::d1d4_b;
      }
      return fail();
    }
    case 0b0110: {  // delta2 and delta3
      if (!partition.is_up(f.gamma) || !partition.is_up(f.Gamma) ||
          down_part != 0) {
        return fail();
      }
      if (f.gamma == f.Gamma) {
        if (set_size(I) != 1) return fail();
        return FrameCase::d2d3_a;
      }
      if (f.Gamma != up_successor(partition, f.gamma) ||
          I != (with_element(0, f.gamma) | with_element(0, f.Gamma))) {
        return fail();
      }
      return FrameCase::d2d3_b;
    }
    case 0b0111: {  // delta1, delta2, delta3
      if (partition.is_down(f.gamma) && partition.is_down(f.Gamma)) {
        // Down pair consecutive in Do; any up elements of I lie between them.
        if (f.Gamma != partition.down_successor(f.gamma) ||
            down_part != (with_element(0, f.gamma) | with_element(0, f.Gamma))) {
          return fail();
        }
        for (int u : elements(up_part)) {
          if (u < f.gamma || u > f.Gamma) return fail();
        }
        return FrameCase::d1d2d3_a;
      }
      if (partition.is_up(f.gamma) && partition.is_up(f.Gamma)) {
        if (f.Gamma != up_successor(partition, f.gamma) || down_part == 0 ||
            up_part != (with_element(0, f.gamma) | with_element(0, f.Gamma))) {
          return fail();
        }
        return FrameCase::d1d2d3_b;
      }
      return fail();
    }
    case 0b1011: {  // delta1, delta2, delta4
      if (partition.is_up(f.gamma)) {
        if (f.gamma != partition.up_elements().back() || f.Gamma != n ||
            f.b != n + 1 || f.a != partition.down_predecessor(f.gamma) ||
            up_part != with_element(0, f.gamma)) {
          return fail();
        }
        return FrameCase::d1d2d4_a;
      }
      if (!partition.is_up(f.Gamma) || down_part != with_element(0, f.gamma) ||
          f.b != partition.down_successor(f.gamma)) {
        return fail();
      }
      if (f.gamma != 1) return FrameCase::d1d2d4_b;
      if (f.Gamma <= partition.up_elements().front()) return fail();
      return FrameCase::d1d2d4_c;
    }
    case 0b1101: {  // delta1, delta3, delta4
      if (partition.is_up(f.Gamma)) {
        if (f.gamma != 1 || f.Gamma != partition.up_elements().front() ||
            f.a != 0 || up_part != with_element(0, f.Gamma)) {
          return fail();
        }
        return FrameCase::d1d3d4_a;
      }
      if (!partition.is_up(f.gamma) || down_part != with_element(0, f.Gamma) ||
          f.a != partition.down_predecessor(f.Gamma)) {
        return fail();
      }
      if (f.Gamma != n) return FrameCase::d1d3d4_b;
      // The smallest up element cannot be the last one, else delta3 would be
      // a boundary edge.
      if (f.gamma == partition.up_elements().back()) return fail();
      return FrameCase::d1d3d4_c;
    }
    case 0b1110: {  // delta2, delta3, delta4
      if (down_part != 0 || !partition.is_up(f.gamma) ||
          !partition.is_up(f.Gamma) ||
          f.Gamma == up_successor(partition, f.gamma) || f.gamma == f.Gamma) {
        return fail();
      }
      return FrameCase::d2d3d4;
    }
    case 0b1111:
      return FrameCase::full;
    default:
      throw std::logic_error("inadmissible set of proper frame diagonals");
  }
}

}  // namespace minkdec
