#include "qspace/enumerate.hpp"

#include "qspace/error.hpp"

#include <algorithm>

namespace qspace {

std::vector<QPoint> enumerate_qpoints(DistanceSet& S, std::size_t depth, Nat width) {
    if (S.ensure(depth) < depth) throw Error("enumerate_qpoints: S has fewer than requested values");
    std::vector<QPoint> out;
    if (width == 0) {
        if (depth == 0) out.emplace_back();
        return out;
    }
    std::size_t total = 1;
    for (std::size_t i = 0; i < depth; ++i) {
        if (total > (std::size_t(1) << 40) / width) throw Error("enumerate_qpoints: window too large");
        total *= width;
    }
    out.reserve(total);
    std::vector<Nat> digits(depth, 0);
    for (std::size_t n = 0; n < total; ++n) {
        std::vector<QPoint::Entry> entries;
        for (std::size_t i = 0; i < depth; ++i)
            if (digits[i] != 0) entries.emplace_back(S.value(i), digits[i]);
        out.push_back(QPoint::from_pairs(std::move(entries)));
        // odometer, least significant digit = smallest coordinate
        for (std::size_t i = depth; i-- > 0;) {
            if (++digits[i] < width) break;
            digits[i] = 0;
        }
    }
    return out;
}

void PointEnumerator::grow() {
    ++stage_;
    const std::size_t t = stage_;
    const Nat width = static_cast<Nat>(t);
    const std::size_t depth = S_.ensure(t);
    if (depth == 0 && t > 1) throw Error("PointEnumerator: S is empty, only the empty map exists");
    const std::size_t prev_depth = std::min<std::size_t>(t - 1, depth);
    auto from_previous_stage = [&](const QPoint& p) {
        if (t == 1) return false;
        for (const auto& [coord, v] : p.support()) {
            if (v >= width - 1) return false;                       // value needs stage t
            if (prev_depth == 0 || coord < S_.value(prev_depth - 1)) return false; // coordinate needs stage t
        }
        return true;
    };
    const std::size_t use_depth = std::min<std::size_t>(t, depth);
    for (const QPoint& p : enumerate_qpoints(S_, use_depth, width))
        if (!from_previous_stage(p)) emitted_.push_back(p);
}

const QPoint& PointEnumerator::at(std::size_t i) {
    while (emitted_.size() <= i) grow();
    return emitted_[i];
}

std::vector<QPoint> PointEnumerator::prefix(std::size_t n) {
    if (n > 0) at(n - 1);
    return std::vector<QPoint>(emitted_.begin(), emitted_.begin() + static_cast<std::ptrdiff_t>(n));
}

} // namespace qspace
