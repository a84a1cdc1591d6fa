#include "minkdec/ycoeffs.hpp"

#include <stdexcept>

#include "minkdec/intervals.hpp"
#include "minkdec/polygon.hpp"

namespace minkdec {

std::string y_method_name(YMethod m) {
  switch (m) {
    case YMethod::moebius: return "moebius";
    case YMethod::four_term: return "four-term";
    case YMethod::product: return "product";
  }
  return "?";
}

const Rat& YTable::at(Subset I) const {
  auto it = coefficients.find(I);
  if (it == coefficients.end()) {
    throw std::invalid_argument("y-table misses a subset");
  }
  return it->second;
}

Rat y_moebius(const CoxeterPartition& partition, Subset I,
              const ZTable& ztable) {
  (void)partition;
  if (I == 0) throw std::invalid_argument("y undefined for the empty set");
  // Alternating sum over all subsets J of I; the empty set contributes 0.
  Rat y = 0;
  int bits_I = set_size(I);
  Subset J = I;
  while (J != 0) {
    if (((bits_I - set_size(J)) & 1) == 0) {
      y += ztable.at(J);
    } else {
      y -= ztable.at(J);
    }
    J = (J - 1) & I;
  }
  return y;
}

namespace {

// z-value of an extended right set: facet sets are read from the table,
// the empty set counts 0 and the full set counts the total.
Rat extended_z(const ZTable& ztable, Subset r) {
  if (r == 0) return Rat(0);
  return ztable.at(r);
}

}  // namespace

Rat y_four_term(const CoxeterPartition& partition, Subset I,
                const ZTable& ztable) {
  if (I == 0) throw std::invalid_argument("y undefined for the empty set");
  UpDownDecomposition dec = decompose(partition, I);
  if (dec.type_v > 1) return Rat(0);

  FourDiagonalFrame frame = four_diagonal_frame(partition, I);
  LabeledPolygon polygon = build_polygon(partition);
  Subset r1 = right_set(polygon, frame.deltas[0]);
  Subset r2 = right_set(polygon, frame.deltas[1]);
  Subset r3 = right_set(polygon, frame.deltas[2]);
  Subset r4 = right_set(polygon, frame.deltas[3]);

  Rat sum = extended_z(ztable, r1) - extended_z(ztable, r2) -
            extended_z(ztable, r3) + extended_z(ztable, r4);
  if (set_size(I & ~r1) % 2 != 0) sum = -sum;
  return sum;
}

SignedLengths signed_lengths(const CoxeterPartition& partition, Subset I) {
  FourDiagonalFrame frame = four_diagonal_frame(partition, I);
  LabeledPolygon polygon = build_polygon(partition);
  int L = polygon.size();

  // Edge count of the boundary path between two vertices that avoids a third.
  auto path_length = [&](int from, int to, int avoiding) {
    int pf = polygon.position(from);
    int pt = polygon.position(to);
    int pa = polygon.position(avoiding);
    int forward = ((pt - pf) % L + L) % L;
    int rel_avoid = ((pa - pf) % L + L) % L;
    bool avoid_on_forward = 0 < rel_avoid && rel_avoid < forward;
    return avoid_on_forward ? L - forward : forward;
  };

  SignedLengths k;
  k.k_Gamma = path_length(frame.b, frame.Gamma, frame.a);
  if (partition.is_down(frame.Gamma)) k.k_Gamma = -k.k_Gamma;
  k.k_gamma = path_length(frame.a, frame.gamma, frame.b);
  if (partition.is_down(frame.gamma)) k.k_gamma = -k.k_gamma;
  return k;
}

Rat y_product(const CoxeterPartition& partition, Subset I) {
  if (I == 0) throw std::invalid_argument("y undefined for the empty set");
  UpDownDecomposition dec = decompose(partition, I);
  if (dec.type_v > 1) return Rat(0);

  SignedLengths k = signed_lengths(partition, I);
  Rat value = Rat(k.k_gamma) * Rat(k.k_Gamma);
  bool single_up = set_size(I) == 1 && partition.is_up(min_element(I));
  if (single_up) value -= Rat(partition.n() + 1);

  Subset down_part = dec.components.front().down.elems;
  if (set_size(I & ~down_part) % 2 != 0) value = -value;
  return value;
}

Rat y_top(const CoxeterPartition& partition) {
  return set_size(partition.up_set()) % 2 == 0 ? Rat(1) : Rat(-1);
}

bool is_zero_coefficient(const CoxeterPartition& partition, Subset I) {
  if (I == 0) throw std::invalid_argument("y undefined for the empty set");
  UpDownDecomposition dec = decompose(partition, I);
  if (dec.type_v > 1) return true;
  return partition.n() == 3 && I == partition.up_set() &&
         I == with_element(0, 2);
}

YTable full_y_table(const CoxeterPartition& partition, const ZTable& ztable,
                    YMethod method) {
  if (method == YMethod::product &&
      ztable.provenance != Provenance::default_spec) {
    throw std::invalid_argument(
        "the product route is only valid for the default facet values");
  }
  YTable table{partition, {}, method};
  for (Subset I = 1; I <= full_set(partition.n()); ++I) {
    Rat y;
    switch (method) {
      case YMethod::moebius: y = y_moebius(partition, I, ztable); break;
      case YMethod::four_term: y = y_four_term(partition, I, ztable); break;
      case YMethod::product: y = y_product(partition, I); break;
    }
    table.coefficients.emplace(I, std::move(y));
  }
  return table;
}

}  // namespace minkdec
