#include "qspace/qpoint.hpp"

#include "qspace/error.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace qspace {

QPoint QPoint::from_pairs(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return b.first < a.first; });
    QPoint p;
    for (auto& e : entries) {
        if (!e.first.is_positive()) throw Error("QPoint: coordinates must be positive distances");
        if (!p.support_.empty() && p.support_.back().first == e.first)
            throw Error("QPoint: duplicate coordinate " + e.first.str());
        if (e.second != 0) p.support_.push_back(std::move(e));
    }
    return p;
}

Nat QPoint::at(const Rational& s) const {
    for (const auto& [coord, v] : support_) {
        if (coord == s) return v;
        if (coord < s) break; // support is decreasing
    }
    return 0;
}

QPoint QPoint::with(const Rational& s, Nat v) const {
    QPoint out;
    out.support_.reserve(support_.size() + 1);
    bool placed = false;
    for (const auto& e : support_) {
        if (!placed && e.first < s) {
            if (v != 0) out.support_.emplace_back(s, v);
            placed = true;
        }
        if (e.first == s) {
            if (v != 0) out.support_.emplace_back(s, v);
            placed = true;
            continue;
        }
        out.support_.push_back(e);
    }
    if (!placed && v != 0) out.support_.emplace_back(s, v);
    return out;
}

QPoint QPoint::filtered(const std::function<bool(const Rational&)>& keep) const {
    QPoint out;
    for (const auto& e : support_)
        if (keep(e.first)) out.support_.push_back(e);
    return out;
}

std::string QPoint::str() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [coord, v] : support_) {
        if (!first) os << ", ";
        os << coord.str() << "->" << v;
        first = false;
    }
    os << '}';
    return os.str();
}

Rational q_distance(const QPoint& x, const QPoint& y) {
    const auto& a = x.support();
    const auto& b = y.support();
    std::size_t i = 0, j = 0;
    // Both supports decrease; the first coordinate where the values differ is
    // the max differing coordinate.
    while (i < a.size() && j < b.size()) {
        if (a[i].first == b[j].first) {
            if (a[i].second != b[j].second) return a[i].first;
            ++i;
            ++j;
        } else if (b[j].first < a[i].first) {
            return a[i].first; // y has 0 here
        } else {
            return b[j].first;
        }
    }
    if (i < a.size()) return a[i].first;
    if (j < b.size()) return b[j].first;
    return Rational(0);
}

std::ostream& operator<<(std::ostream& os, const QPoint& p) {
    return os << p.str();
}

} // namespace qspace
