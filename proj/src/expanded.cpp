#include "qspace/expanded.hpp"

#include "qspace/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace qspace {

NodeSet sorted_nodeset(NodeSet nodes) {
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    return nodes;
}

Seq meet(const Seq& a, const Seq& b) {
    std::size_t n = std::min(a.size(), b.size());
    std::size_t k = 0;
    while (k < n && a[k] == b[k]) ++k;
    return Seq(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(k));
}

bool is_strictly_increasing(const Seq& s) {
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] <= s[i - 1]) return false;
    return true;
}

namespace {

void require_rooted_meet_closed(const NodeSet& nodes, const char* who) {
    std::set<Seq> present(nodes.begin(), nodes.end());
    if (!present.count(Seq{})) throw Error(std::string(who) + ": node set does not contain the root");
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (!present.count(meet(nodes[i], nodes[j])))
                throw Error(std::string(who) + ": node set is not closed under meets");
}

} // namespace

bool is_expanded(const NodeSet& nodes) {
    require_rooted_meet_closed(nodes, "is_expanded");
    for (const Seq& s : nodes)
        if (!is_strictly_increasing(s)) return false;
    // Divergence persists: entries may never agree again past a disagreement.
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
            const Seq& u = nodes[i];
            const Seq& v = nodes[j];
            std::size_t common = std::min(u.size(), v.size());
            bool diverged = false;
            for (std::size_t k = 0; k < common; ++k) {
                if (diverged && u[k] == v[k]) return false;
                if (u[k] != v[k]) diverged = true;
            }
        }
    return true;
}

RootedTree tree_of_nodeset(const NodeSet& nodes, std::vector<Seq>& node_of) {
    require_rooted_meet_closed(nodes, "tree_of_nodeset");
    NodeSet sorted = sorted_nodeset(nodes);
    // Sorted order puts every prefix before its extensions, so the parent (the
    // longest proper prefix present) always exists by the time a node arrives.
    RootedTree t;
    node_of.assign(1, Seq{});
    std::map<Seq, int> index;
    index[Seq{}] = 0;
    for (const Seq& s : sorted) {
        if (s.empty()) continue;
        int parent = -1;
        for (std::size_t cut = s.size(); cut-- > 0;) {
            Seq prefix(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(cut));
            auto it = index.find(prefix);
            if (it != index.end()) {
                parent = it->second;
                break;
            }
        }
        int v = t.add_child(parent);
        index[s] = v;
        node_of.push_back(s);
    }
    return t;
}

std::vector<TypeLabel> type_of(const NodeSet& copy, const RootedTree& T) {
    std::vector<Seq> node_of;
    RootedTree ct = tree_of_nodeset(copy, node_of);
    auto isos = enumerate_tree_isomorphisms(ct, T);
    if (isos.empty()) throw Error("type_of: copy is not isomorphic to the pattern tree");

    // Last-entry order on the copy; the root comes first.
    std::vector<int> by_last(ct.size());
    for (std::size_t v = 0; v < ct.size(); ++v) by_last[v] = static_cast<int>(v);
    std::set<Nat> last_entries;
    for (std::size_t v = 1; v < ct.size(); ++v) {
        if (!last_entries.insert(node_of[v].back()).second) return {}; // no linear order, no type
    }
    std::sort(by_last.begin(), by_last.end(), [&](int a, int b) {
        if (node_of[static_cast<std::size_t>(a)].empty()) return !node_of[static_cast<std::size_t>(b)].empty();
        if (node_of[static_cast<std::size_t>(b)].empty()) return false;
        return node_of[static_cast<std::size_t>(a)].back() < node_of[static_cast<std::size_t>(b)].back();
    });

    std::set<TypeLabel> types;
    for (const auto& iso : isos) {
        TypeLabel order;
        order.reserve(ct.size());
        for (int v : by_last) order.push_back(iso[static_cast<std::size_t>(v)]);
        types.insert(std::move(order));
    }
    return std::vector<TypeLabel>(types.begin(), types.end());
}

std::vector<Nat> psi(const NodeSet& copy) {
    if (!is_expanded(copy)) throw Error("psi: node set is not expanded");
    std::vector<Nat> out;
    for (const Seq& s : copy)
        if (!s.empty()) out.push_back(s.back());
    std::sort(out.begin(), out.end());
    return out;
}

NodeSet phi(const TypeLabel& order, const std::vector<Nat>& M, const RootedTree& T) {
    if (order.size() != T.size()) throw Error("phi: order length does not match the tree");
    if (M.size() + 1 != T.size())
        throw Error("phi: |M| = " + std::to_string(M.size()) + " but the tree needs " +
                    std::to_string(T.size() - 1) + " labels");
    if (order.empty() || order[0] != 0) throw Error("phi: order must start at the root");
    std::vector<Nat> labels = M;
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
        throw Error("phi: label set has duplicates");

    std::vector<int> position(T.size(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        if (v < 0 || static_cast<std::size_t>(v) >= T.size() || position[static_cast<std::size_t>(v)] != -1)
            throw Error("phi: order is not a permutation of the tree nodes");
        position[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    std::vector<Seq> seq_of(T.size());
    NodeSet out;
    out.push_back(Seq{});
    for (std::size_t i = 1; i < order.size(); ++i) {
        int v = order[i];
        int p = T.parent(v);
        if (position[static_cast<std::size_t>(p)] >= static_cast<int>(i))
            throw Error("phi: order does not extend the tree order");
        Seq s = seq_of[static_cast<std::size_t>(p)];
        s.push_back(labels[i - 1]);
        seq_of[static_cast<std::size_t>(v)] = s;
        out.push_back(std::move(s));
    }
    return sorted_nodeset(std::move(out));
}

NodeSet expanded_universal(const std::vector<Nat>& N, std::size_t h, Nat width) {
    std::vector<Nat> pool = N;
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

    std::size_t needed = 0;
    std::size_t level = 1;
    for (std::size_t d = 1; d <= h; ++d) {
        level *= width;
        needed += level;
    }
    if (pool.size() < needed)
        throw Error("expanded_universal: need " + std::to_string(needed) + " labels, got " +
                    std::to_string(pool.size()));

    NodeSet out;
    out.push_back(Seq{});
    std::size_t next = 0;
    std::function<void(const Seq&)> build = [&](const Seq& node) {
        if (node.size() == h) return;
        std::vector<Seq> children;
        for (Nat c = 0; c < width; ++c) {
            Seq child = node;
            child.push_back(pool[next++]);
            out.push_back(child);
            children.push_back(std::move(child));
        }
        for (const Seq& child : children) build(child);
    };
    build(Seq{});
    return sorted_nodeset(std::move(out));
}

std::vector<NodeSet> enumerate_expanded_copies(const RootedTree& T, Nat value_bound, std::size_t height_bound) {
    // Candidate nonempty nodes: strictly increasing sequences over the value
    // window of length <= height_bound.
    std::vector<Seq> candidates;
    std::function<void(Seq&)> gen = [&](Seq& cur) {
        if (!cur.empty()) candidates.push_back(cur);
        if (cur.size() == height_bound) return;
        Nat from = cur.empty() ? 0 : cur.back() + 1;
        for (Nat v = from; v < value_bound; ++v) {
            cur.push_back(v);
            gen(cur);
            cur.pop_back();
        }
    };
    Seq cur;
    gen(cur);

    const std::size_t want = T.size() - 1;
    std::string target_enc = canonical_encoding(T);
    std::vector<NodeSet> out;
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> choose = [&](std::size_t from) {
        if (pick.size() == want) {
            NodeSet nodes;
            nodes.push_back(Seq{});
            for (std::size_t i : pick) nodes.push_back(candidates[i]);
            nodes = sorted_nodeset(std::move(nodes));
            if (nodes.size() != T.size()) return;
            // Downward closure: every prefix present. This keeps node heights
            // equal to tree depths, which the last-entry reconstruction needs;
            // it subsumes meet-closure.
            std::set<Seq> present(nodes.begin(), nodes.end());
            for (const Seq& s : nodes)
                for (std::size_t cut = 0; cut < s.size(); ++cut)
                    if (!present.count(Seq(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(cut)))) return;
            if (!is_expanded(nodes)) return;
            std::vector<Seq> node_of;
            RootedTree ct = tree_of_nodeset(nodes, node_of);
            if (canonical_encoding(ct) != target_enc) return;
            out.push_back(std::move(nodes));
            return;
        }
        for (std::size_t i = from; i < candidates.size(); ++i) {
            pick.push_back(i);
            choose(i + 1);
            pick.pop_back();
        }
    };
    if (want == 0) {
        out.push_back(NodeSet{Seq{}});
        return out;
    }
    choose(0);
    return out;
}

} // namespace qspace
