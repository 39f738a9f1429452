#pragma once

// The bijections between the three object classes.
//
// Plane partition -> shifted triangle: n - b_{ij} is the border length
// #{l : c_{n+m-j, l} >= 1-i+j}.  The inverse reads each entry of c off the
// monotone membership predicate of the triangle.
//
// Plane partition <-> 0/1 cube: each column of c is a strict partition; its
// self-conjugate closure gives the column heights above the half level in one
// octant of the cube, and total symmetry plus complementation determine the
// rest.  The cube is only a verification witness at small sizes.

#include "ppgf/objects.hpp"

#include <array>

namespace ppgf {

/// Border length: number of entries >= threshold in row i of c.
inline int border_length(const PlanePartition& c, int row, int threshold) {
    int len = 0;
    while (c.at(row, len + 1) >= threshold) ++len;
    return len;
}

inline ShiftedPP cspp_to_tspp(const PlanePartition& c, const CsppClass& cls) {
    if (!is_cspp(c, cls)) throw std::invalid_argument("cspp_to_tspp: not a class member");
    int side = cls.levels() - 1;
    std::vector<std::vector<int>> rows(static_cast<size_t>(side));
    for (int i = 1; i <= side; ++i)
        for (int j = i; j <= side; ++j)
            rows[static_cast<size_t>(i - 1)].push_back(
                cls.n - border_length(c, cls.levels() - j, 1 - i + j));
    return ShiftedPP(cls, std::move(rows));
}

inline PlanePartition tspp_to_cspp(const ShiftedPP& b) {
    const CsppClass& cls = b.cls();
    int levels = cls.levels();
    std::vector<std::vector<int>> rows;
    for (int x = 1; x <= levels - 1; ++x) {
        std::vector<int> row;
        for (int y = 1; y <= cls.n; ++y) {
            // largest z with b_{n+m+1-x-z, n+m-x} <= n - y; monotone in z
            int v = 0;
            for (int z = 1; x + z <= levels; ++z) {
                if (b.at(levels + 1 - x - z, levels - x) <= cls.n - y)
                    v = z;
                else
                    break;
            }
            if (v == 0) break;
            row.push_back(v);
        }
        if (row.empty()) break;
        rows.push_back(std::move(row));
    }
    PlanePartition c(std::move(rows));
    if (!is_cspp(c, cls)) throw std::invalid_argument("tspp_to_cspp: image invalid");
    return c;
}

// ---------------------------------------------------------------------------
// The cube
// ---------------------------------------------------------------------------

/// 0/1 occupancy cube of side 2(n+m): an order ideal, invariant under all
/// coordinate permutations, self-complementary, and with the central 2m-box
/// pinned to its lower half.
class Tsscpp3D {
public:
    Tsscpp3D() = default;
    Tsscpp3D(CsppClass cls, std::vector<char> cells) : cls_(cls), cells_(std::move(cells)) {
        int side = 2 * cls_.levels();
        if (static_cast<int>(cells_.size()) != side * side * side)
            throw std::invalid_argument("cube size mismatch");
    }

    const CsppClass& cls() const { return cls_; }
    int side() const { return 2 * cls_.levels(); }

    bool contains(int x, int y, int z) const {
        int s = side();
        if (x < 1 || y < 1 || z < 1 || x > s || y > s || z > s) return false;
        return cells_[index(x, y, z)] != 0;
    }

    long filled_count() const {
        long c = 0;
        for (char v : cells_) c += v != 0;
        return c;
    }

    bool operator==(const Tsscpp3D& o) const { return cells_ == o.cells_; }

    size_t index(int x, int y, int z) const {
        int s = side();
        return (static_cast<size_t>(x - 1) * s + (y - 1)) * s + (z - 1);
    }

private:
    CsppClass cls_;
    std::vector<char> cells_;
};

namespace detail {

/// Self-conjugate closure of a strict partition mu: the partition whose
/// principal hooks have arm and leg both mu_i - 1.
inline std::vector<int> self_conjugate_closure(const std::vector<int>& mu, int rows) {
    std::vector<int> lambda(static_cast<size_t>(rows), 0);
    int d = static_cast<int>(mu.size());
    for (int r = 1; r <= rows; ++r) {
        int len = 0;
        for (int i = 1; i <= d; ++i) {
            if (r == i)
                len = std::max(len, mu[static_cast<size_t>(i - 1)] + i - 1);
            else if (r <= mu[static_cast<size_t>(i - 1)] + i - 1 && i <= rows)
                len = std::max(len, i);
        }
        lambda[static_cast<size_t>(r - 1)] = len;
    }
    return lambda;
}

}  // namespace detail

inline Tsscpp3D cspp_to_tsscpp(const PlanePartition& c, const CsppClass& cls) {
    if (cls.levels() > kCubeLevelGuard)
        throw std::invalid_argument("cspp_to_tsscpp: cube guard exceeded");
    if (!is_cspp(c, cls)) throw std::invalid_argument("cspp_to_tsscpp: not a class member");
    int levels = cls.levels();

    // Column heights above the half level in the x>N, y<=N, z>N octant.
    std::vector<std::vector<int>> gamma(static_cast<size_t>(levels),
                                        std::vector<int>(static_cast<size_t>(levels), 0));
    for (int j = 1; j <= levels; ++j) {
        std::vector<int> mu;
        for (int i = 1; c.at(i, j) > 0; ++i) mu.push_back(c.at(i, j));
        std::vector<int> lambda = detail::self_conjugate_closure(mu, levels);
        for (int i = 1; i <= levels; ++i)
            gamma[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
                lambda[static_cast<size_t>(i - 1)];
    }

    int s = 2 * levels;
    auto octant = [&](int hi1, int lo, int hi2) {
        // cell with two coordinates above the half level, smaller one first
        return gamma[static_cast<size_t>(hi1 - levels - 1)][static_cast<size_t>(lo - 1)] >=
               hi2 - levels;
    };
    auto member = [&](int x, int y, int z) {
        std::array<int, 3> p{x, y, z};
        auto plus = [&](int v) { return v > levels; };
        int pluses = plus(x) + plus(y) + plus(z);
        if (pluses == 0) return true;
        if (pluses == 3) return false;
        if (pluses == 1) {
            // complement has two pluses
            std::array<int, 3> q{s + 1 - x, s + 1 - y, s + 1 - z};
            std::array<int, 2> hi;
            int lo = 0, w = 0;
            for (int v : q) (plus(v) ? hi[w++] : lo) = v;
            if (hi[0] > hi[1]) std::swap(hi[0], hi[1]);
            return !octant(hi[0], lo, hi[1]);
        }
        std::array<int, 2> hi;
        int lo = 0, w = 0;
        for (int v : p) (plus(v) ? hi[w++] : lo) = v;
        if (hi[0] > hi[1]) std::swap(hi[0], hi[1]);
        return octant(hi[0], lo, hi[1]);
    };

    std::vector<char> cells(static_cast<size_t>(s) * s * s, 0);
    Tsscpp3D cube(cls, std::move(cells));
    std::vector<char> filled(static_cast<size_t>(s) * s * s, 0);
    for (int x = 1; x <= s; ++x)
        for (int y = 1; y <= s; ++y)
            for (int z = 1; z <= s; ++z)
                filled[cube.index(x, y, z)] = member(x, y, z) ? 1 : 0;
    return Tsscpp3D(cls, std::move(filled));
}

inline PlanePartition tsscpp_to_cspp(const Tsscpp3D& cube) {
    const CsppClass& cls = cube.cls();
    int levels = cls.levels();
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= levels; ++i) {
        std::vector<int> row;
        for (int j = 1; j <= levels; ++j) {
            int gamma = 0;
            for (int z = levels + 1; z <= 2 * levels; ++z)
                if (cube.contains(i + levels, j, z)) ++gamma;
            int v = gamma - i + 1;
            if (v <= 0) break;
            row.push_back(v);
        }
        if (row.empty()) break;
        rows.push_back(std::move(row));
    }
    PlanePartition c(std::move(rows));
    if (!is_cspp(c, cls)) throw std::invalid_argument("tsscpp_to_cspp: image invalid");
    return c;
}

/// Full validity check: order ideal, total symmetry, self-complementarity,
/// and the pinned central box.
inline bool validate_tsscpp(const Tsscpp3D& cube) {
    const CsppClass& cls = cube.cls();
    int levels = cls.levels();
    int s = 2 * levels;
    for (int x = 1; x <= s; ++x)
        for (int y = 1; y <= s; ++y)
            for (int z = 1; z <= s; ++z) {
                bool in = cube.contains(x, y, z);
                if (in) {
                    if (x > 1 && !cube.contains(x - 1, y, z)) return false;
                    if (y > 1 && !cube.contains(x, y - 1, z)) return false;
                    if (z > 1 && !cube.contains(x, y, z - 1)) return false;
                }
                if (in != cube.contains(y, x, z)) return false;
                if (in != cube.contains(y, z, x)) return false;
                if (in == cube.contains(s + 1 - x, s + 1 - y, s + 1 - z)) return false;
            }
    // central 2m-box: exactly the cells with at most one coordinate above the
    // half level
    for (int x = levels - cls.m + 1; x <= levels + cls.m; ++x)
        for (int y = levels - cls.m + 1; y <= levels + cls.m; ++y)
            for (int z = levels - cls.m + 1; z <= levels + cls.m; ++z) {
                if (x < 1 || y < 1 || z < 1) continue;
                int pluses = (x > levels) + (y > levels) + (z > levels);
                if (cube.contains(x, y, z) != (pluses <= 1)) return false;
            }
    return true;
}

// ---------------------------------------------------------------------------
// Orbit moves (verification oracle for the signed enumeration)
// ---------------------------------------------------------------------------

/// Move counts per orbit family relative to the base cube (the one whose
/// image is the empty plane partition): family 1 holds the diagonal orbits,
/// family 2 the two-equal-coordinate orbits, family 3 the rest.  Each orbit
/// where the cube differs from the base counts as one move.
inline std::array<long, 3> orbit_moves(const Tsscpp3D& cube) {
    const CsppClass& cls = cube.cls();
    Tsscpp3D base = cspp_to_tsscpp(PlanePartition(), cls);
    int s = cube.side();
    std::vector<char> seen(static_cast<size_t>(s) * s * s, 0);
    std::array<long, 3> moves{0, 0, 0};
    for (int x = 1; x <= s; ++x)
        for (int y = 1; y <= s; ++y)
            for (int z = 1; z <= s; ++z) {
                if (seen[cube.index(x, y, z)]) continue;
                // orbit under coordinate permutations and complementation
                std::vector<std::array<int, 3>> orbit;
                std::array<int, 3> p{x, y, z};
                std::sort(p.begin(), p.end());
                do {
                    orbit.push_back(p);
                    orbit.push_back({s + 1 - p[0], s + 1 - p[1], s + 1 - p[2]});
                } while (std::next_permutation(p.begin(), p.end()));
                bool differs = false;
                for (const auto& q : orbit) {
                    seen[cube.index(q[0], q[1], q[2])] = 1;
                    if (cube.contains(q[0], q[1], q[2]) != base.contains(q[0], q[1], q[2]))
                        differs = true;
                }
                if (!differs) continue;
                int family = (x == y && y == z) ? 0 : (x == y || y == z || x == z) ? 1 : 2;
                ++moves[static_cast<size_t>(family)];
            }
    return moves;
}

}  // namespace ppgf
