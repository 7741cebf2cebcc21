#pragma once

#include <cstdint>
#include <vector>

#include "stochdet/boxgeom.hpp"

namespace stochdet {

// One detected object: box, class id within the configured vocabulary,
// and confidence in [0, 1].
struct Detection {
  Box box;
  int class_id = 0;
  double confidence = 0.0;

  bool operator==(const Detection& o) const = default;
};

struct NmsConfig {
  double iou_threshold = 0.5;  // in (0, 1]
  bool class_agnostic = false;
};

// Greedy non-maximum suppression.
//
// Detections are processed in descending confidence order (stable: ties keep
// input order). A detection is kept iff no already-kept detection of the same
// class (any class when class_agnostic) overlaps it with iou >= threshold.
// Output is the kept subset, unchanged, in descending confidence order.
std::vector<Detection> nms(const std::vector<Detection>& dets,
                           const NmsConfig& cfg);

}  // namespace stochdet
