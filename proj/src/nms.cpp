#include "stochdet/nms.hpp"

#include <algorithm>
#include <numeric>

#include "stochdet/errors.hpp"

namespace stochdet {

std::vector<Detection> nms(const std::vector<Detection>& dets,
                           const NmsConfig& cfg) {
  if (cfg.iou_threshold <= 0.0 || cfg.iou_threshold > 1.0) {
    throw ConfigError("nms: iou_threshold must be in (0, 1]");
  }
  if (dets.empty()) return {};

  std::vector<std::size_t> order(dets.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&dets](std::size_t a, std::size_t b) {
                     return dets[a].confidence > dets[b].confidence;
                   });

  std::vector<Detection> kept;
  kept.reserve(dets.size());
  for (std::size_t idx : order) {
    const Detection& d = dets[idx];
    bool suppressed = false;
    for (const Detection& k : kept) {
      if (!cfg.class_agnostic && k.class_id != d.class_id) continue;
      if (iou(k.box, d.box) >= cfg.iou_threshold) {
        suppressed = true;
        break;
      }
    }
    if (!suppressed) kept.push_back(d);
  }
  return kept;
}

}  // namespace stochdet
