#pragma once

#include "cobord/surface/cobordism.hpp"

namespace cobord::surface {

// Contexts that preserve equality under any 2TQFT. Each one is built by actual gluing.

/// Caps the given circle: precompose with a unit disc on an ingoing circle, or postcompose
/// with a counit disc on an outgoing one.
Cobordism fill_hole(const Cobordism& k, const BoundaryLabel& label);

/// (K (x) id) after the comultiplication pants, for K : 1 -> 0. Result 1 -> 1.
Cobordism stretch1(const Cobordism& k);
/// The multiplication pants after (K (x) id), for K : 0 -> 1. Result 1 -> 1.
Cobordism stretch1_dual(const Cobordism& k);
/// (K (x) id) after (id (x) E(2,0,0)), for K : 2 -> 0. Result 1 -> 1.
Cobordism stretch2(const Cobordism& k);
/// (id (x) E(0,0,2)) after (K (x) id), for K : 0 -> 2. Result 1 -> 1.
Cobordism stretch2_dual(const Cobordism& k);

/// E(0,a,1) after K after E(1,a,0), for K : 1 -> 1. The result is closed.
Cobordism closure(const Cobordism& k, Genus a);

}  // namespace cobord::surface
