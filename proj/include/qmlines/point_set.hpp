#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace qmlines {

inline constexpr int kMaxPoints = 64;

/// Subset of the points 0..n-1 of a finite space, as a 64-bit mask.
class PointSet {
public:
    constexpr PointSet() = default;
    constexpr explicit PointSet(std::uint64_t mask) : mask_(mask) {}

    static constexpr PointSet full(int n) {
        return PointSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static PointSet of(std::initializer_list<int> points) {
        PointSet s;
        for (int p : points) s.insert(p);
        return s;
    }

    constexpr void insert(int p) { mask_ |= std::uint64_t{1} << p; }
    constexpr bool contains(int p) const { return (mask_ >> p) & 1U; }
    constexpr int size() const { return std::popcount(mask_); }
    constexpr bool empty() const { return mask_ == 0; }
    constexpr std::uint64_t mask() const { return mask_; }

    std::vector<int> points() const {
        std::vector<int> out;
        for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
        return out;
    }

    friend constexpr bool operator==(PointSet, PointSet) = default;
    friend constexpr auto operator<=>(PointSet a, PointSet b) { return a.mask_ <=> b.mask_; }

private:
    std::uint64_t mask_ = 0;
};

}  // namespace qmlines
