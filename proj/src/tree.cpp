#include "qspace/tree.hpp"

#include "qspace/error.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

namespace qspace {

RootedTree::RootedTree() : parent_{-1}, children_{{}} {}

RootedTree RootedTree::from_parents(const std::vector<int>& parents) {
    if (parents.empty() || parents[0] != -1) throw Error("RootedTree: parents[0] must be -1");
    RootedTree t;
    t.parent_ = parents;
    t.children_.assign(parents.size(), {});
    for (std::size_t v = 1; v < parents.size(); ++v) {
        if (parents[v] < 0 || static_cast<std::size_t>(parents[v]) >= v)
            throw Error("RootedTree: parents must precede children");
        t.children_[static_cast<std::size_t>(parents[v])].push_back(static_cast<int>(v));
    }
    return t;
}

int RootedTree::add_child(int parent) {
    if (parent < 0 || static_cast<std::size_t>(parent) >= size()) throw Error("RootedTree: bad parent index");
    int v = static_cast<int>(size());
    parent_.push_back(parent);
    children_.emplace_back();
    children_[static_cast<std::size_t>(parent)].push_back(v);
    return v;
}

int RootedTree::depth(int v) const {
    int d = 0;
    while (parent_[static_cast<std::size_t>(v)] != -1) {
        v = parent_[static_cast<std::size_t>(v)];
        ++d;
    }
    return d;
}

std::vector<int> RootedTree::leaves() const {
    std::vector<int> out;
    for (std::size_t v = 0; v < size(); ++v)
        if (children_[v].empty()) out.push_back(static_cast<int>(v));
    return out;
}

bool RootedTree::uniform_leaf_depth(std::size_t& depth_out) const {
    auto ls = leaves();
    depth_out = static_cast<std::size_t>(depth(ls[0]));
    for (int l : ls)
        if (static_cast<std::size_t>(depth(l)) != depth_out) return false;
    return true;
}

std::vector<std::size_t> RootedTree::subtree_sizes() const {
    std::vector<std::size_t> sz(size(), 1);
    for (std::size_t v = size(); v-- > 1;) sz[static_cast<std::size_t>(parent_[v])] += sz[v];
    return sz;
}

namespace {

std::string encode_at(const RootedTree& t, int v) {
    std::vector<std::string> parts;
    for (int c : t.children(v)) parts.push_back(encode_at(t, c));
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (const auto& p : parts) out += p;
    out += ")";
    return out;
}

void rebuild_sorted(const RootedTree& t, int v, RootedTree& out, int out_parent) {
    int nv = (out_parent == -1) ? 0 : out.add_child(out_parent);
    std::vector<std::pair<std::string, int>> order;
    for (int c : t.children(v)) order.emplace_back(encode_at(t, c), c);
    std::sort(order.begin(), order.end());
    for (const auto& [enc, c] : order) rebuild_sorted(t, c, out, nv);
}

} // namespace

RootedTree RootedTree::canonicalized() const {
    RootedTree out;
    rebuild_sorted(*this, 0, out, -1);
    return out;
}

std::string canonical_encoding(const RootedTree& t) {
    return encode_at(t, 0);
}

bool is_isomorphic(const RootedTree& a, const RootedTree& b) {
    return canonical_encoding(a) == canonical_encoding(b);
}

BigNat count_linear_extensions(const RootedTree& t) {
    BigNat num;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(t.size()));
    BigNat den = 1;
    for (std::size_t s : t.subtree_sizes()) den *= static_cast<unsigned long>(s);
    BigNat q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw Error("count_linear_extensions: hook product does not divide the factorial");
    return q;
}

namespace {

void extensions_rec(const RootedTree& t, std::vector<int>& pending_parents, std::vector<int>& order,
                    BigNat& count, std::vector<std::vector<int>>* sink, std::size_t max_orders) {
    if (order.size() == t.size()) {
        ++count;
        if (sink) {
            if (sink->size() >= max_orders) throw Error("enumerate_linear_extensions: too many extensions");
            sink->push_back(order);
        }
        return;
    }
    for (std::size_t v = 0; v < t.size(); ++v) {
        if (pending_parents[v] != 0) continue;
        pending_parents[v] = -1; // placed
        for (int c : t.children(static_cast<int>(v))) --pending_parents[static_cast<std::size_t>(c)];
        order.push_back(static_cast<int>(v));
        extensions_rec(t, pending_parents, order, count, sink, max_orders);
        order.pop_back();
        for (int c : t.children(static_cast<int>(v))) ++pending_parents[static_cast<std::size_t>(c)];
        pending_parents[v] = 0;
    }
}

void run_extensions(const RootedTree& t, BigNat& count, std::vector<std::vector<int>>* sink,
                    std::size_t max_orders) {
    std::vector<int> pending(t.size(), 1);
    pending[0] = 0;
    std::vector<int> order;
    order.reserve(t.size());
    extensions_rec(t, pending, order, count, sink, max_orders);
}

} // namespace

BigNat brute_force_extensions(const RootedTree& t, std::size_t node_bound) {
    if (t.size() > node_bound)
        throw Error("brute_force_extensions: tree has " + std::to_string(t.size()) + " nodes, bound is " +
                    std::to_string(node_bound));
    BigNat count = 0;
    run_extensions(t, count, nullptr, 0);
    return count;
}

std::vector<std::vector<int>> enumerate_linear_extensions(const RootedTree& t, std::size_t max_orders) {
    BigNat count = 0;
    std::vector<std::vector<int>> out;
    run_extensions(t, count, &out, max_orders);
    return out;
}

BigNat count_automorphisms(const RootedTree& t) {
    std::function<BigNat(int)> aut = [&](int v) -> BigNat {
        BigNat result = 1;
        std::map<std::string, unsigned long> classes;
        for (int c : t.children(v)) {
            result *= aut(c);
            ++classes[encode_at(t, c)];
        }
        for (const auto& [enc, mult] : classes) {
            BigNat f;
            mpz_fac_ui(f.get_mpz_t(), mult);
            result *= f;
        }
        return result;
    };
    return aut(0);
}

std::vector<std::vector<int>> enumerate_tree_isomorphisms(const RootedTree& a, const RootedTree& b) {
    std::vector<std::vector<int>> out;
    if (a.size() != b.size()) return out;
    std::vector<int> node_map(a.size(), -1);
    std::vector<std::string> enc_a(a.size()), enc_b(b.size());
    for (std::size_t v = 0; v < a.size(); ++v) enc_a[v] = encode_at(a, static_cast<int>(v));
    for (std::size_t v = 0; v < b.size(); ++v) enc_b[v] = encode_at(b, static_cast<int>(v));

    // Depth-first over a worklist of matched pairs; at each pair try every
    // encoding-compatible assignment of children.
    std::function<void(std::vector<std::pair<int, int>>, std::size_t)> walk =
        [&](std::vector<std::pair<int, int>> pairs, std::size_t idx) {
            if (idx == pairs.size()) {
                out.push_back(node_map);
                return;
            }
            auto [va, vb] = pairs[idx];
            const auto& ca = a.children(va);
            const auto& cb = b.children(vb);
            if (ca.size() != cb.size()) return;
            std::vector<bool> used(cb.size(), false);
            std::function<void(std::size_t, std::vector<std::pair<int, int>>&)> choose =
                [&](std::size_t i, std::vector<std::pair<int, int>>& acc) {
                    if (i == ca.size()) {
                        auto next = pairs;
                        next.insert(next.end(), acc.begin(), acc.end());
                        walk(next, idx + 1);
                        return;
                    }
                    for (std::size_t j = 0; j < cb.size(); ++j) {
                        if (used[j] || enc_a[static_cast<std::size_t>(ca[i])] !=
                                           enc_b[static_cast<std::size_t>(cb[j])])
                            continue;
                        used[j] = true;
                        node_map[static_cast<std::size_t>(ca[i])] = cb[j];
                        acc.emplace_back(ca[i], cb[j]);
                        choose(i + 1, acc);
                        acc.pop_back();
                        node_map[static_cast<std::size_t>(ca[i])] = -1;
                        used[j] = false;
                    }
                };
            std::vector<std::pair<int, int>> acc;
            choose(0, acc);
        };

    if (enc_a[0] != enc_b[0]) return out;
    node_map[0] = 0;
    walk({{0, 0}}, 0);
    return out;
}

namespace {

RootedTree parse_tree_at(const std::string& text, std::size_t& pos);

void skip_ws(const std::string& text, std::size_t& pos) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

void parse_children(const std::string& text, std::size_t& pos, RootedTree& t, int parent) {
    skip_ws(text, pos);
    if (pos >= text.size() || text[pos] != '[')
        throw Error("parse_tree: expected '[' at position " + std::to_string(pos));
    ++pos;
    skip_ws(text, pos);
    bool first = true;
    while (pos < text.size() && text[pos] != ']') {
        if (!first) {
            if (text[pos] != ',') throw Error("parse_tree: expected ',' at position " + std::to_string(pos));
            ++pos;
            skip_ws(text, pos);
        }
        int child = t.add_child(parent);
        parse_children(text, pos, t, child);
        skip_ws(text, pos);
        first = false;
    }
    if (pos >= text.size()) throw Error("parse_tree: unterminated '['");
    ++pos; // ']'
}

} // namespace

RootedTree parse_tree(const std::string& text) {
    RootedTree t;
    std::size_t pos = 0;
    parse_children(text, pos, t, 0);
    skip_ws(text, pos);
    if (pos != text.size()) throw Error("parse_tree: trailing input at position " + std::to_string(pos));
    return t;
}

namespace {

void format_at(const RootedTree& t, int v, std::string& out) {
    out += '[';
    const auto& cs = t.children(v);
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i) out += ',';
        format_at(t, cs[i], out);
    }
    out += ']';
}

} // namespace

std::string format_tree(const RootedTree& t) {
    std::string out;
    format_at(t, 0, out);
    return out;
}

} // namespace qspace
