#include "apv/geometry.hpp"

#include <algorithm>
#include <limits>

namespace apv {

Vec3 Rect3::corner(int i) const {
    switch (i & 3) {
    case 0:
        return origin;
    case 1:
        return origin + u;
    case 2:
        return origin + u + v;
    default:
        return origin + v;
    }
}

double polygon_area(const Polygon2& poly) {
    const std::size_t n = poly.size();
    if (n < 3) {
        return 0.0;
    }
    double twice = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& p = poly[i];
        const Point2& q = poly[(i + 1) % n];
        twice += p.x * q.y - q.x * p.y;
    }
    return std::abs(twice) * 0.5;
}

Polygon2 clip_half_plane(const Polygon2& subject, double a, double b, double c) {
    Polygon2 out;
    const std::size_t n = subject.size();
    if (n == 0) {
        return out;
    }
    out.reserve(n + 2);
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& p = subject[i];
        const Point2& q = subject[(i + 1) % n];
        const double fp = a * p.x + b * p.y - c;
        const double fq = a * q.x + b * q.y - c;
        const bool p_in = fp <= 0.0;
        const bool q_in = fq <= 0.0;
        if (p_in) {
            out.push_back(p);
        }
        if (p_in != q_in) {
            const double t = fp / (fp - fq);
            out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
        }
    }
    if (out.size() < 3) {
        out.clear();
    }
    return out;
}

Polygon2 clip_box(const Polygon2& subject, double x0, double y0, double x1, double y1) {
    Polygon2 r = clip_half_plane(subject, 1.0, 0.0, x1);
    r = clip_half_plane(r, -1.0, 0.0, -x0);
    r = clip_half_plane(r, 0.0, 1.0, y1);
    r = clip_half_plane(r, 0.0, -1.0, -y0);
    return r;
}

std::optional<std::pair<double, double>> convex_span_at(const Polygon2& poly, double y) {
    const std::size_t n = poly.size();
    if (n < 3) {
        return std::nullopt;
    }
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& p = poly[i];
        const Point2& q = poly[(i + 1) % n];
        if ((p.y <= y && y <= q.y) || (q.y <= y && y <= p.y)) {
            if (p.y == q.y) {
                lo = std::min({lo, p.x, q.x});
                hi = std::max({hi, p.x, q.x});
            } else {
                const double t = (y - p.y) / (q.y - p.y);
                const double x = p.x + t * (q.x - p.x);
                lo = std::min(lo, x);
                hi = std::max(hi, x);
            }
        }
    }
    if (lo > hi) {
        return std::nullopt;
    }
    return std::make_pair(lo, hi);
}

double convex_union_area(std::span<const Polygon2> polys) {
    std::vector<const Polygon2*> live;
    for (const auto& p : polys) {
        if (p.size() >= 3) {
            live.push_back(&p);
        }
    }
    if (live.empty()) {
        return 0.0;
    }
    if (live.size() == 1) {
        return polygon_area(*live.front());
    }

    std::vector<double> ys;
    for (const auto* p : live) {
        for (const auto& v : *p) {
            ys.push_back(v.y);
        }
    }
    // Edge-edge crossings between different polygons change the order of
    // span endpoints, so they are slab boundaries too.
    for (std::size_t i = 0; i < live.size(); ++i) {
        const Polygon2& a = *live[i];
        for (std::size_t j = i + 1; j < live.size(); ++j) {
            const Polygon2& b = *live[j];
            for (std::size_t ea = 0; ea < a.size(); ++ea) {
                const Point2 p = a[ea];
                const Point2 r{a[(ea + 1) % a.size()].x - p.x, a[(ea + 1) % a.size()].y - p.y};
                for (std::size_t eb = 0; eb < b.size(); ++eb) {
                    const Point2 q = b[eb];
                    const Point2 s{b[(eb + 1) % b.size()].x - q.x, b[(eb + 1) % b.size()].y - q.y};
                    const double denom = r.x * s.y - r.y * s.x;
                    if (denom == 0.0) {
                        continue;
                    }
                    const double qpx = q.x - p.x;
                    const double qpy = q.y - p.y;
                    const double t = (qpx * s.y - qpy * s.x) / denom;
                    const double u = (qpx * r.y - qpy * r.x) / denom;
                    if (t > 0.0 && t < 1.0 && u > 0.0 && u < 1.0) {
                        ys.push_back(p.y + t * r.y);
                    }
                }
            }
        }
    }
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

    std::vector<std::pair<double, double>> spans;
    double area = 0.0;
    for (std::size_t k = 0; k + 1 < ys.size(); ++k) {
        const double dy = ys[k + 1] - ys[k];
        if (dy <= 0.0) {
            continue;
        }
        const double ym = 0.5 * (ys[k] + ys[k + 1]);
        spans.clear();
        for (const auto* p : live) {
            if (auto s = convex_span_at(*p, ym)) {
                spans.push_back(*s);
            }
        }
        if (spans.empty()) {
            continue;
        }
        std::sort(spans.begin(), spans.end());
        double width = 0.0;
        double cur_lo = spans.front().first;
        double cur_hi = spans.front().second;
        for (std::size_t i = 1; i < spans.size(); ++i) {
            if (spans[i].first > cur_hi) {
                width += cur_hi - cur_lo;
                cur_lo = spans[i].first;
                cur_hi = spans[i].second;
            } else {
                cur_hi = std::max(cur_hi, spans[i].second);
            }
        }
        width += cur_hi - cur_lo;
        area += width * dy;
    }
    return area;
}

bool ray_hits_rect(Vec3 origin, Vec3 direction, const Rect3& rect) {
    const Vec3 n = cross(rect.u, rect.v);
    const double denom = dot(n, direction);
    if (denom == 0.0) {
        return false;
    }
    const double t = dot(n, rect.origin - origin) / denom;
    if (t <= 0.0) {
        return false;
    }
    const Vec3 hit = origin + t * direction - rect.origin;
    const double a = dot(hit, rect.u) / dot(rect.u, rect.u);
    const double b = dot(hit, rect.v) / dot(rect.v, rect.v);
    return a >= 0.0 && a <= 1.0 && b >= 0.0 && b <= 1.0;
}

}  // namespace apv
