#pragma once

#include "lelong/ball.hpp"
#include "lelong/upoly.hpp"

#include <vector>

namespace lelong {

/// Isolating disks for every complex root of a squarefree polynomial, sorted
/// by center (real part, then imaginary part). Each disk contains exactly one
/// root; disks are pairwise disjoint. When `max_radius` is positive every
/// radius is at most that.
std::vector<Disk> isolate_roots(const QPoly& p, const Rational& max_radius = Rational(0));

/// Shrinks an isolating disk of a root of squarefree `p` to radius at most
/// `max_radius`. The result meets the input disk and isolates the same root.
Disk refine_root(const QPoly& p, const Disk& d, const Rational& max_radius);

/// Rational roots of `p`, ascending. `p` need not be squarefree.
std::vector<Rational> rational_roots(const QPoly& p);

}  // namespace lelong
