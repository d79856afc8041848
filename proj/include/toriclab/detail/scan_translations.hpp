#pragma once

#include <algorithm>
#include <limits>

namespace toriclab::detail {

template <typename Visit>
void scan_translations(const std::vector<HalfPlane>& planes, const std::vector<long long>& offsets,
                       Point lo, Point hi, Visit&& visit) {
    for (long long ax = lo.x; ax <= hi.x; ++ax) {
        long long ylo = lo.y;
        long long yhi = hi.y;
        bool feasible = true;
        for (std::size_t i = 0; i < planes.size() && feasible; ++i) {
            const Point w = planes[i].w;
            // w.x * ax + w.y * ay >= c - offset
            const long long rhs = planes[i].c - offsets[i] - w.x * ax;
            if (w.y > 0) {
                ylo = std::max(ylo, ceil_div(rhs, w.y));
            } else if (w.y < 0) {
                yhi = std::min(yhi, floor_div(-rhs, -w.y));
            } else if (rhs > 0) {
                feasible = false;
            }
        }
        if (!feasible) continue;
        for (long long ay = ylo; ay <= yhi; ++ay) {
            if (!visit(Point{ax, ay})) return;
        }
    }
}

}  // namespace toriclab::detail
