#include "qspace/coloring.hpp"

#include "qspace/error.hpp"

namespace qspace {

OracleColoring::OracleColoring(Nat arity, std::function<Nat(const QPoint&)> eval)
    : arity_(arity), eval_(std::move(eval)), memo_(std::make_shared<std::map<QPoint, Nat>>()) {
    if (arity_ == 0) throw Error("OracleColoring: arity must be positive");
}

Nat OracleColoring::operator()(const QPoint& x) const {
    auto it = memo_->find(x);
    if (it != memo_->end()) return it->second;
    Nat c = eval_(x);
    if (c >= arity_) throw Error("OracleColoring: oracle produced color " + std::to_string(c) +
                                 " outside arity " + std::to_string(arity_));
    memo_->emplace(x, c);
    return c;
}

OracleColoring OracleColoring::constant(Nat arity, Nat value) {
    if (value >= arity) throw Error("OracleColoring: constant value outside arity");
    return OracleColoring(arity, [value](const QPoint&) { return value; });
}

OracleColoring OracleColoring::coordinate_mod(const Rational& coordinate, Nat modulus) {
    if (modulus == 0) throw Error("OracleColoring: zero modulus");
    return OracleColoring(modulus,
                          [coordinate, modulus](const QPoint& x) { return x.at(coordinate) % modulus; });
}

OracleColoring OracleColoring::table(Nat arity, std::map<QPoint, Nat> entries, Nat default_value) {
    if (default_value >= arity) throw Error("OracleColoring: default value outside arity");
    auto shared = std::make_shared<std::map<QPoint, Nat>>(std::move(entries));
    return OracleColoring(arity, [shared, default_value](const QPoint& x) {
        auto it = shared->find(x);
        return it == shared->end() ? default_value : it->second;
    });
}

QPoint restrict_point(const QPoint& x, DistanceSet& S_prime) {
    return x.filtered([&](const Rational& s) { return S_prime.contains(s); });
}

OracleColoring lift_point_coloring(const OracleColoring& chi_prime, DistanceSet S_prime) {
    return OracleColoring(chi_prime.arity(), [chi_prime, S_prime](const QPoint& x) mutable {
        return chi_prime(restrict_point(x, S_prime));
    });
}

std::function<Nat(const std::vector<QPoint>&)>
lift_copy_coloring(std::function<Nat(const std::vector<QPoint>&)> chi_prime, DistanceSet S_prime) {
    return [chi_prime = std::move(chi_prime), S_prime](const std::vector<QPoint>& tuple) mutable {
        for (std::size_t i = 0; i < tuple.size(); ++i)
            for (std::size_t j = i + 1; j < tuple.size(); ++j) {
                Rational d = q_distance(tuple[i], tuple[j]);
                if (!S_prime.contains(d))
                    throw Error("lift_copy_coloring: pair distance " + d.str() +
                                " lies outside S', restriction is not isometric on this copy");
            }
        std::vector<QPoint> restricted;
        restricted.reserve(tuple.size());
        for (const QPoint& p : tuple) restricted.push_back(restrict_point(p, S_prime));
        return chi_prime(restricted);
    };
}

} // namespace qspace
