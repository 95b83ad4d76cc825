#pragma once

#include <cstdint>

#include "brouwerlab/formula.hpp"

namespace brouwerlab {

inline constexpr std::uint64_t kDefaultProverCap = 5'000'000;

/// Decides intuitionistic provability with the contraction-free calculus
/// G4ip, which terminates without loop checks. Throws CapExceeded when the
/// search visits more than `cap` sequents.
bool ipc_prove(const Formula& f, std::uint64_t cap = kDefaultProverCap);

}  // namespace brouwerlab
