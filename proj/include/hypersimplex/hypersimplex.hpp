// Umbrella header.

#ifndef HYPERSIMPLEX_HYPERSIMPLEX_HPP
#define HYPERSIMPLEX_HYPERSIMPLEX_HPP

#include "combinatorics.hpp"
#include "dual_graph.hpp"
#include "geometry.hpp"
#include "rational.hpp"
#include "serialization.hpp"
#include "subdivision.hpp"

#endif  // HYPERSIMPLEX_HYPERSIMPLEX_HPP
