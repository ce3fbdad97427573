#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "shapeslab/numeric.hpp"

namespace shapeslab {

// Local models at the collision strata of the moduli space.  Curvatures are
// exact rationals in units of pi, so link fractions and group orders come
// out exact.

// Cone angle around the stratum where two cone points of curvature ai, aj
// collide: pi - ai for an equal pair (the points can be interchanged after
// half a turn), otherwise 2*pi - ai - aj.  Arguments and result in units
// of pi.
inline Rat collision_cone_angle(const Rat& ai, const Rat& aj) {
  if (!(ai > Rat(0) && ai < Rat(2) && aj > Rat(0) && aj < Rat(2)))
    throw std::domain_error("curvatures must lie in (0, 2pi)");
  if (ai + aj >= Rat(2)) throw std::domain_error("no collision stratum");
  if (ai == aj) return Rat(1) - ai;
  return Rat(2) - ai - aj;
}

struct MultiCollision {
  Rat scalar_cone_angle;                  // units of pi
  Rat complex_link_fraction;
  Rat real_link_fraction;
  std::optional<int64_t> local_group_order;  // present when 1/real fraction is integral
};

inline Rat rat_pow(Rat base, int e) {
  Rat r(1);
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// Stratum where k = |kappas| cone points collapse (complex codimension
// k - 1).  N is the order of the subgroup of the symmetric group preserving
// the multiset of curvatures.  The scalar cone angle is gamma = 2pi - sum;
// the complex and real link fractions are (gamma/2pi)^(k-2)/N and
// (gamma/2pi)^(k-1)/N.  When the reciprocal of the real fraction is an
// integer it is the order of the local orbifold group; for k equal
// curvatures 2*pi*a this is k!/(1-k*a)^(k-1).
inline MultiCollision multi_collision(const std::vector<Rat>& kappas) {
  if (kappas.size() < 2) throw std::domain_error("need at least two curvatures");
  Rat sum(0);
  for (const Rat& k : kappas) {
    if (!(k > Rat(0) && k < Rat(2))) throw std::domain_error("curvatures must lie in (0, 2pi)");
    sum += k;
  }
  if (sum >= Rat(2)) throw std::domain_error("no collision stratum");
  int k = (int)kappas.size();

  std::map<std::pair<int64_t, int64_t>, int> mult;
  for (const Rat& x : kappas) mult[{x.num, x.den}]++;
  Rat n_sym(1);
  for (auto& [_, c] : mult)
    for (int i = 2; i <= c; ++i) n_sym *= Rat(i);

  MultiCollision out;
  out.scalar_cone_angle = Rat(2) - sum;
  Rat frac = out.scalar_cone_angle / Rat(2);  // gamma / 2pi
  out.complex_link_fraction = rat_pow(frac, k - 2) / n_sym;
  out.real_link_fraction = rat_pow(frac, k - 1) / n_sym;
  Rat order = Rat(1) / out.real_link_fraction;
  if (order.is_integer()) out.local_group_order = order.num;
  return out;
}

}  // namespace shapeslab
