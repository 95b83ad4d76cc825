#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "brouwerlab/brouwer.hpp"
#include "brouwerlab/freedist.hpp"
#include "brouwerlab/logic.hpp"
#include "brouwerlab/order.hpp"
#include "brouwerlab/report.hpp"
#include "brouwerlab/upsets.hpp"

namespace brouwerlab {

/// Elements x_i of A whose pairwise joins leave A. Throws NotDownwardClosed
/// when `a` is not a down-set.
Report check_strong_u_antichain(const UpperSemilattice& u, Mask a, const std::vector<std::size_t>& xs);

inline constexpr std::size_t kMaxAntichain = 12;

/// X -> A^c together with the up-closures of x_i for i in X. Subsets X of
/// I = {0..n-1} are bit masks.
class AlphaMap {
 public:
  /// Throws PreconditionFailed unless xs is a strong u-antichain; `force`
  /// skips that check so broken instances can be examined.
  AlphaMap(ImplicativeUsl u, Mask a, std::vector<std::size_t> xs, bool force = false);

  const ImplicativeUsl& usl() const { return u_; }
  Mask down_set() const { return a_; }
  const std::vector<std::size_t>& xs() const { return xs_; }
  std::size_t n() const { return xs_.size(); }
  Mask index_set() const { return full_mask(xs_.size()); }

  Mask operator()(Mask x) const { return cache_[x]; }

 private:
  ImplicativeUsl u_;
  Mask a_;
  std::vector<std::size_t> xs_;
  std::vector<Mask> cache_;
};

/// Usl-with-arrow embedding of the subsets of I under reverse inclusion
/// into [alpha(I), alpha({})] of up(U).
Report verify_alpha_embedding(const AlphaMap& am, const Exec& exec = {});

struct GammaResult {
  Interval domain;             // [0, iota(top)] of B_n: meets of nonempty generator sets
  FreeLattice target;          // free lattice over up(U)
  Interval image_interval;     // [d(alpha(I)), d(alpha({}))] in the target
  std::vector<Elem> map;       // domain element -> target element
  Report report;
};

/// Extends x -> d(alpha(x)) to meets of generators and checks the result is
/// a Brouwer embedding into the interval. Throws PreconditionFailed when the
/// alpha map fails verification.
GammaResult gamma_embedding(std::size_t n, const AlphaMap& am, const Corpus* corpus = nullptr,
                            std::uint64_t cap = kDefaultValuationCap, const Exec& exec = {});

struct EmbeddingInstance {
  std::string name;
  ImplicativeUsl usl;
  Mask down_set;
  std::vector<std::size_t> xs;
};

/// "n1", "n2", and the non-antichain "broken". Throws UnknownName.
EmbeddingInstance canned_embedding_instance(const std::string& name);
std::vector<std::string> canned_embedding_names();

}  // namespace brouwerlab
