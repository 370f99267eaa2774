#pragma once

#include "skeline/image.hpp"

namespace skeline {

/// Zhang-Suen parallel thinning to a one-pixel-wide skeleton.
///
/// Pixels outside the image count as background. Each subiteration marks all
/// deletable pixels against the same grid state and then removes them together;
/// subiteration pairs repeat until a pair deletes nothing.
BinaryImage thin_zhang_suen(const BinaryImage& img);

}  // namespace skeline
