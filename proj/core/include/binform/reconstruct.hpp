#pragma once

#include "binform/rational.hpp"
#include "binform/roots.hpp"

#include <optional>

namespace binform {

// The unique rational p/q with |q| <= height_bound and |p| <= height_bound
// inside the enclosure mid +/- rad, found through the continued fraction of
// mid, or nullopt. Uniqueness needs rad < 1/(2*height_bound^2); enclosures
// wider than that yield nullopt. Callers re-verify every reconstruction
// exactly, so the acceptance comparison may be loose by a few ulps.
std::optional<Rat> rational_reconstruct(const NReal& mid, const NReal& rad, const Int& height_bound);

// Convenience overload for a real box; rejects boxes that are not certified
// real unless |im| is inside the radius.
std::optional<Rat> rational_reconstruct(const ComplexBox& box, const Int& height_bound);

}  // namespace binform
