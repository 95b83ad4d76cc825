#pragma once

#include <cstddef>
#include <vector>

#include "brouwerlab/brouwer.hpp"
#include "brouwerlab/order.hpp"

namespace brouwerlab {

/// The free distributive lattice over a finite implicative usl, realised as
/// up(U). Element e stands for the meet of the generators in masks[e]; the
/// empty mask is the top.
struct FreeLattice {
  ImplicativeUsl base;
  BrouwerAlgebra algebra;
  std::vector<Mask> masks;  // up-set of each algebra element, ascending
  std::vector<Elem> iota;   // generator x -> element [x)

  /// Element denoting the meet of the generators in `x`.
  Elem element(Mask x) const;
};

/// Throws CapExceeded, or InvalidAlgebra if the generator image is not
/// exactly the set of meet-irreducibles.
FreeLattice free_over(const ImplicativeUsl& u, std::size_t cap = kDefaultUpsetCap, const Exec& exec = {});

/// Every y in Y lies above some x in X.
bool free_leq(const UpperSemilattice& u, Mask x, Mask y);

inline constexpr std::size_t kMaxMedvedev = 4;
inline constexpr std::size_t kMaxMedvedevLarge = 5;

/// free_over(boolean_reverse_usl(n)). n above 4 needs allow_large.
FreeLattice medvedev_algebra(std::size_t n, bool allow_large = false, const Exec& exec = {});

struct Extension {
  std::vector<Elem> map;  // algebra element of f -> target element
  Report report;
};

/// Extends a join-preserving g : U -> target to the meets of generators.
/// Throws NotAUslHom(x, y) when g(x + y) != g(x) v g(y).
Extension universal_extend(const FreeLattice& f, const std::vector<Elem>& g, const BrouwerAlgebra& target);

/// iota(x -> y) = arrow(iota x, iota y) for every pair of the base.
Report iota_arrow_check(const FreeLattice& f);

/// Meet-irreducibility via the single-cover criterion; linear per element.
std::vector<Elem> meet_irreducibles_fast(const BrouwerAlgebra& b);

}  // namespace brouwerlab
