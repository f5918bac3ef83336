#include "acute/oracle.hpp"

#include "acute/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>

namespace acute {

namespace {

using Big = boost::multiprecision::int512_t;

// cos(angle) = dot / sqrt(norms); larger angle means smaller cosine.
struct Corner {
    Wide dot;
    Wide norms;
};

Corner corner(Point apex, Point a, Point b) {
    const Point da = a - apex;
    const Point db = b - apex;
    return {acute::dot(da, db), acute::dot(da, da) * acute::dot(db, db)};
}

// -1, 0, 1 as angle(x) is smaller than, equal to, larger than angle(y).
int compare_angles(const Corner& x, const Corner& y) {
    const int sx = (x.dot > 0) - (x.dot < 0);
    const int sy = (y.dot > 0) - (y.dot < 0);
    if (sx != sy) return sx > sy ? -1 : 1;
    if (sx == 0) return 0;
    // Same sign: compare dot_x^2 * norms_y against dot_y^2 * norms_x.
    const Big lhs = Big(x.dot) * Big(x.dot) * Big(y.norms);
    const Big rhs = Big(y.dot) * Big(y.dot) * Big(x.norms);
    if (lhs == rhs) return 0;
    // For positive cosines a larger |cos| is a smaller angle.
    const bool x_larger_cos_magnitude = lhs > rhs;
    return (x_larger_cos_magnitude == (sx > 0)) ? -1 : 1;
}

class AngleTable {
public:
    explicit AngleTable(const PointSet& points) : n_(points.size()), rank_(n_ * n_ * n_, 0) {
        struct Entry {
            std::size_t apex, a, b;
            Corner c;
        };
        std::vector<Entry> entries;
        for (std::size_t apex = 0; apex < n_; ++apex) {
            for (std::size_t a = 0; a < n_; ++a) {
                for (std::size_t b = a + 1; b < n_; ++b) {
                    if (a == apex || b == apex) continue;
                    entries.push_back({apex, a, b, corner(points[apex], points[a], points[b])});
                }
            }
        }
        std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
            return compare_angles(x.c, y.c) < 0;
        });
        std::uint16_t r = 0;
        for (std::size_t k = 0; k < entries.size(); ++k) {
            if (k > 0 && compare_angles(entries[k - 1].c, entries[k].c) != 0) ++r;
            const Entry& e = entries[k];
            rank_[index(e.apex, e.a, e.b)] = r;
            rank_[index(e.apex, e.b, e.a)] = r;
        }
    }

    std::uint16_t rank(std::size_t prev, std::size_t at, std::size_t next) const {
        return rank_[index(at, prev, next)];
    }

private:
    std::size_t index(std::size_t apex, std::size_t a, std::size_t b) const {
        return (apex * n_ + a) * n_ + b;
    }

    std::size_t n_;
    std::vector<std::uint16_t> rank_;
};

struct Search {
    const AngleTable& table;
    std::size_t n;
    std::vector<std::size_t> path;
    std::vector<bool> used;
    std::vector<std::size_t> best;
    int best_rank = -1;

    void extend(int partial) {
        const std::size_t depth = path.size();
        if (depth == n) {
            const std::size_t last = path.back();
            if (path[1] > last) return;
            const int closing = std::max<int>(table.rank(path[depth - 2], last, path[0]),
                                              table.rank(last, path[0], path[1]));
            const int total = std::max(partial, closing);
            if (best_rank < 0 || total < best_rank) {
                best_rank = total;
                best = path;
            }
            return;
        }
        for (std::size_t next = 1; next < n; ++next) {
            if (used[next]) continue;
            int worst = partial;
            if (depth >= 2) {
                worst = std::max<int>(worst, table.rank(path[depth - 2], path[depth - 1], next));
            }
            if (best_rank >= 0 && worst >= best_rank) continue;
            used[next] = true;
            path.push_back(next);
            extend(worst);
            path.pop_back();
            used[next] = false;
        }
    }
};

}  // namespace

OracleResult exhaustive_min_max_tour(const PointSet& points) {
    const std::size_t n = points.size();
    if (n < 3 || n > kMaxOracleSize) {
        throw UnsupportedSize("the exhaustive oracle handles 3 <= n <= " +
                              std::to_string(kMaxOracleSize) + ", got n = " + std::to_string(n));
    }
    const AngleTable table(points);
    Search search{table, n, {0}, std::vector<bool>(n, false), {}, -1};
    search.used[0] = true;
    search.extend(-1);

    OracleResult result;
    result.best_order = std::move(search.best);
    result.min_max_angle = tour_max_angle(points, result.best_order);
    result.acute_tour_exists = true;
    for (std::size_t k = 0; k < n; ++k) {
        const Point prev = points[result.best_order[(k + n - 1) % n]];
        const Point next = points[result.best_order[(k + 1) % n]];
        if (!nonobtuse_at(points[result.best_order[k]], prev, next)) {
            result.acute_tour_exists = false;
        }
    }
    return result;
}

Angle tour_max_angle(const PointSet& points, std::span<const std::size_t> order) {
    const std::size_t n = order.size();
    if (n < 3) {
        throw InvalidInput("a tour needs at least three points");
    }
    std::size_t worst = 0;
    Corner worst_corner{1, 1};
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t prev = order[(k + n - 1) % n];
        const std::size_t next = order[(k + 1) % n];
        if (std::max({prev, order[k], next}) >= points.size()) {
            throw InvalidInput("tour index out of range");
        }
        const Corner c = corner(points[order[k]], points[prev], points[next]);
        if (k == 0 || compare_angles(c, worst_corner) > 0) {
            worst = k;
            worst_corner = c;
        }
    }
    return rotation_angle(points[order[(worst + n - 1) % n]], points[order[worst]],
                          points[order[(worst + 1) % n]]);
}

}  // namespace acute
