#pragma once

/// Umbrella header: exact Möbius/interaction/Banzhaf transforms, extremal
/// capacities attaining the exact Möbius bounds, and exhaustive
/// verification over the 0/1 capacity vertices.

#include "capax/bernoulli.hpp"
#include "capax/bounds.hpp"
#include "capax/capacity.hpp"
#include "capax/cli.hpp"
#include "capax/combinatorics.hpp"
#include "capax/document.hpp"
#include "capax/families.hpp"
#include "capax/rational.hpp"
#include "capax/scalar.hpp"
#include "capax/set_function.hpp"
#include "capax/subset.hpp"
#include "capax/transforms.hpp"
#include "capax/verifier.hpp"
