#pragma once

#include <algorithm>
#include <cmath>

namespace stochdet {

// Axis-aligned box in continuous image coordinates (pixels), corner form.
// Degenerate boxes (zero width or height) are valid and have area 0.
struct Box {
  double x_min = 0.0;
  double y_min = 0.0;
  double x_max = 0.0;
  double y_max = 0.0;

  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
  double cx() const { return 0.5 * (x_min + x_max); }
  double cy() const { return 0.5 * (y_min + y_max); }

  bool operator==(const Box& o) const = default;
};

inline bool box_valid(const Box& b) {
  return std::isfinite(b.x_min) && std::isfinite(b.y_min) &&
         std::isfinite(b.x_max) && std::isfinite(b.y_max) &&
         b.x_min <= b.x_max && b.y_min <= b.y_max;
}

inline double area(const Box& b) { return b.width() * b.height(); }

inline double intersection_area(const Box& a, const Box& b) {
  const double w =
      std::min(a.x_max, b.x_max) - std::max(a.x_min, b.x_min);
  const double h =
      std::min(a.y_max, b.y_max) - std::max(a.y_min, b.y_min);
  if (w <= 0.0 || h <= 0.0) return 0.0;
  return w * h;
}

// Intersection over union. Returns 0 when the union has zero area
// (both boxes degenerate).
inline double iou(const Box& a, const Box& b) {
  const double inter = intersection_area(a, b);
  const double uni = area(a) + area(b) - inter;
  return uni > 0.0 ? inter / uni : 0.0;
}

enum class SizeBucket { Small = 0, Medium = 1, Large = 2 };

inline const char* to_string(SizeBucket b) {
  switch (b) {
    case SizeBucket::Small: return "small";
    case SizeBucket::Medium: return "medium";
    case SizeBucket::Large: return "large";
  }
  return "?";
}

// Area thresholds for the small/medium/large partition. Defaults follow the
// COCO convention (32^2 and 96^2); intervals are half-open with the boundary
// falling in the larger bucket.
struct SizeBucketThresholds {
  double small_max_area = 32.0 * 32.0;
  double medium_max_area = 96.0 * 96.0;
};

inline SizeBucket bucket(const Box& b,
                         const SizeBucketThresholds& thr = {}) {
  const double a = area(b);
  if (a < thr.small_max_area) return SizeBucket::Small;
  if (a < thr.medium_max_area) return SizeBucket::Medium;
  return SizeBucket::Large;
}

inline Box clip_to_image(const Box& b, double img_w, double img_h) {
  Box out;
  out.x_min = std::clamp(b.x_min, 0.0, img_w);
  out.y_min = std::clamp(b.y_min, 0.0, img_h);
  out.x_max = std::clamp(b.x_max, 0.0, img_w);
  out.y_max = std::clamp(b.y_max, 0.0, img_h);
  if (out.x_max < out.x_min) out.x_max = out.x_min;
  if (out.y_max < out.y_min) out.y_max = out.y_min;
  return out;
}

}  // namespace stochdet
