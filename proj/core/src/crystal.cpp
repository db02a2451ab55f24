#include "heckeb/crystal.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "heckeb/format.hpp"

namespace heckeb {

namespace {

int math_mod(long long x, int e) {
    const long long m = x % e;
    return static_cast<int>(m < 0 ? m + e : m);
}

void check_params(const Multipartition& lam, const ChargeVector& u, int e) {
    if (static_cast<int>(u.size()) != lam.level())
        throw std::invalid_argument("charge vector length must equal the level");
    if (e < 2)
        throw std::invalid_argument("e must be >= 2");
}

long long content(const Node& g, const ChargeVector& u) {
    return static_cast<long long>(g.col) - g.row + u[static_cast<size_t>(g.comp) - 1];
}

}  // namespace

int residue(const Node& g, const ChargeVector& u, int e) {
    if (g.comp < 1 || g.comp > static_cast<int>(u.size()))
        throw std::invalid_argument("residue: component out of range");
    if (e < 2)
        throw std::invalid_argument("residue: e must be >= 2");
    return math_mod(content(g, u), e);
}

bool node_above(const Node& g1, const Node& g2, const ChargeVector& u, NodeOrder order) {
    if (order == NodeOrder::ariki)
        return g2.comp < g1.comp || (g1.comp == g2.comp && g2.row < g1.row);
    const long long c1 = content(g1, u);
    const long long c2 = content(g2, u);
    if (c1 != c2)
        return c1 < c2;
    const int u1 = u[static_cast<size_t>(g1.comp) - 1];
    const int u2 = u[static_cast<size_t>(g2.comp) - 1];
    if (u1 != u2)
        return g2.comp < g1.comp;
    return g1.comp < g2.comp;
}

std::vector<Node> addable_nodes(const Multipartition& lam) {
    std::vector<Node> out;
    for (int c = 1; c <= lam.level(); ++c) {
        const Partition& p = lam.component(c);
        for (int a = 1; a <= p.length() + 1; ++a)
            if (a == 1 || p.part(a - 1) > p.part(a))
                out.push_back({a, p.part(a) + 1, c});
    }
    return out;
}

std::vector<Node> removable_nodes(const Multipartition& lam) {
    std::vector<Node> out;
    for (int c = 1; c <= lam.level(); ++c) {
        const Partition& p = lam.component(c);
        for (int a = 1; a <= p.length(); ++a)
            if (p.part(a) > p.part(a + 1))
                out.push_back({a, p.part(a), c});
    }
    return out;
}

Multipartition add_node(const Multipartition& lam, const Node& g) {
    std::vector<Partition> comps = lam.components();
    const Partition& p = lam.component(g.comp);
    if (g.col != p.part(g.row) + 1 || (g.row > 1 && p.part(g.row - 1) <= p.part(g.row)))
        throw std::invalid_argument("add_node: node is not addable");
    std::vector<int> parts = p.parts();
    if (g.row == p.length() + 1)
        parts.push_back(1);
    else
        ++parts[static_cast<size_t>(g.row) - 1];
    comps[static_cast<size_t>(g.comp) - 1] = Partition(std::move(parts));
    return Multipartition(std::move(comps));
}

Multipartition remove_node(const Multipartition& lam, const Node& g) {
    std::vector<Partition> comps = lam.components();
    const Partition& p = lam.component(g.comp);
    if (g.col != p.part(g.row) || p.part(g.row) <= p.part(g.row + 1))
        throw std::invalid_argument("remove_node: node is not removable");
    std::vector<int> parts = p.parts();
    --parts[static_cast<size_t>(g.row) - 1];
    comps[static_cast<size_t>(g.comp) - 1] = Partition(std::move(parts));
    return Multipartition(std::move(comps));
}

std::optional<Node> good_node(const Multipartition& lam, int res, const ChargeVector& u,
                              int e, NodeOrder order) {
    check_params(lam, u, e);

    struct Letter {
        Node node;
        bool removable;
    };
    std::vector<Letter> word;
    for (const Node& g : addable_nodes(lam))
        if (residue(g, u, e) == res)
            word.push_back({g, false});
    for (const Node& g : removable_nodes(lam))
        if (residue(g, u, e) == res)
            word.push_back({g, true});

    std::sort(word.begin(), word.end(), [&](const Letter& x, const Letter& y) {
        return node_above(x.node, y.node, u, order);
    });
    // The order is total on the res-nodes of one multipartition: two
    // distinct boundary nodes of a component never share a diagonal.
    for (size_t i = 0; i + 1 < word.size(); ++i)
        assert(node_above(word[i].node, word[i + 1].node, u, order));

    // Delete each removable standing immediately above an addable; the
    // survivors read A...AR...R from highest to lowest.
    std::vector<Letter> reduced;
    for (const Letter& l : word) {
        if (!l.removable && !reduced.empty() && reduced.back().removable)
            reduced.pop_back();
        else
            reduced.push_back(l);
    }
    for (const Letter& l : reduced)
        if (l.removable)
            return l.node;
    return std::nullopt;
}

namespace {

using MemoKey = std::tuple<Multipartition, ChargeVector, int, int>;

bool in_uglov_memo(const Multipartition& lam, const ChargeVector& u, int e, NodeOrder order,
                   std::map<MemoKey, bool>& memo) {
    if (lam.is_empty())
        return true;
    const MemoKey key{lam, u, e, static_cast<int>(order)};
    if (auto it = memo.find(key); it != memo.end())
        return it->second;
    bool member = false;
    for (int res = 0; res < e && !member; ++res) {
        if (auto g = good_node(lam, res, u, e, order))
            member = in_uglov_memo(remove_node(lam, *g), u, e, order, memo);
    }
    memo.emplace(key, member);
    return member;
}

std::map<MemoKey, bool>& memo_table() {
    thread_local std::map<MemoKey, bool> table;
    return table;
}

}  // namespace

bool in_uglov(const Multipartition& lam, const ChargeVector& u, int e, NodeOrder order) {
    check_params(lam, u, e);
    return in_uglov_memo(lam, u, e, order, memo_table());
}

std::vector<Multipartition> uglov_set(int n, const ChargeVector& u, int e, NodeOrder order) {
    if (n < 0)
        throw std::invalid_argument("uglov_set: n must be >= 0");
    if (u.empty())
        throw std::invalid_argument("uglov_set: charge vector must be non-empty");
    if (e < 2)
        throw std::invalid_argument("uglov_set: e must be >= 2");
    std::vector<Multipartition> out;
    for (const auto& lam : enumerate_multipartitions(n, static_cast<int>(u.size())))
        if (in_uglov(lam, u, e, order))
            out.push_back(lam);
    return out;
}

bool flotw_test(const Multipartition& lam, const ChargeVector& u, int e) {
    check_params(lam, u, e);
    const int r = lam.level();
    for (size_t i = 0; i < u.size(); ++i) {
        if (u[i] < 0 || u[i] > e - 1)
            throw std::invalid_argument("flotw_test: charges must lie in 0..e-1");
        if (i > 0 && u[i] < u[i - 1])
            throw std::invalid_argument("flotw_test: charges must be weakly increasing");
    }

    // Cylindrical row conditions.  The shifts are the mod-e normalizations
    // of the charge gaps (row shift in 0..e-1, wrap shift in 1..e); for
    // e = 2 this coincides with using the gaps directly, and it is the
    // reading under which the conditions match the good-node recursion for
    // every e (the raw gaps fail already on one-letter signature words).
    for (int j = 1; j <= r; ++j) {
        const int next = j < r ? j + 1 : 1;
        const int gap = j < r ? u[static_cast<size_t>(j)] - u[static_cast<size_t>(j - 1)]
                              : u[static_cast<size_t>(r - 1)] - u[0];
        const int shift = j < r ? ((-gap) % e + e) % e : ((gap - 1) % e + e) % e + 1;
        const Partition& upper = lam.component(next);
        const Partition& lower = lam.component(j);
        const int rows = std::max(upper.length(), lower.length()) + 1;
        for (int i = 1; i <= rows; ++i)
            if (upper.part(i) < lower.part(i + shift))
                return false;
    }

    // For every occurring row length, the right-end residues must miss a
    // class mod e.
    std::map<int, std::set<int>> right_end_residues;
    for (int c = 1; c <= r; ++c) {
        const Partition& p = lam.component(c);
        for (int a = 1; a <= p.length(); ++a) {
            const int k = p.part(a);
            right_end_residues[k].insert(residue({a, k, c}, u, e));
        }
    }
    for (const auto& entry : right_end_residues)
        if (static_cast<int>(entry.second.size()) == e)
            return false;
    return true;
}

std::vector<Multipartition> kleshchev_set(int n, int r, int e, const ChargeVector& u) {
    if (static_cast<int>(u.size()) != r)
        throw std::invalid_argument("kleshchev_set: charge vector length must equal r");
    return uglov_set(n, u, e, NodeOrder::ariki);
}

CrystalGraph crystal_graph(int n_max, const ChargeVector& u, int e, NodeOrder order) {
    if (n_max < 0)
        throw std::invalid_argument("crystal_graph: n_max must be >= 0");
    CrystalGraph g;
    g.levels.reserve(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n)
        g.levels.push_back(uglov_set(n, u, e, order));
    for (int n = 1; n <= n_max; ++n) {
        const std::set<Multipartition> below(g.levels[static_cast<size_t>(n) - 1].begin(),
                                             g.levels[static_cast<size_t>(n) - 1].end());
        for (const auto& mu : g.levels[static_cast<size_t>(n)]) {
            for (int res = 0; res < e; ++res) {
                if (auto gamma = good_node(mu, res, u, e, order)) {
                    Multipartition parent = remove_node(mu, *gamma);
                    if (below.count(parent))
                        g.edges.push_back({std::move(parent), mu, res});
                }
            }
        }
    }
    return g;
}

void write_dot(const CrystalGraph& g, std::ostream& os) {
    os << "digraph crystal {\n";
    for (const auto& level : g.levels)
        for (const auto& v : level)
            os << "  \"" << to_text(v) << "\";\n";
    for (const auto& edge : g.edges)
        os << "  \"" << to_text(edge.from) << "\" -> \"" << to_text(edge.to)
           << "\" [label=\"" << edge.res << "\"];\n";
    os << "}\n";
}

std::string crystal_json(const CrystalGraph& g) {
    nlohmann::json doc;
    auto mp_json = [](const Multipartition& m) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& comp : m.components())
            arr.push_back(comp.parts());
        return arr;
    };
    doc["vertices"] = nlohmann::json::array();
    for (const auto& level : g.levels)
        for (const auto& v : level)
            doc["vertices"].push_back(mp_json(v));
    doc["edges"] = nlohmann::json::array();
    for (const auto& edge : g.edges)
        doc["edges"].push_back({{"from", mp_json(edge.from)},
                                {"to", mp_json(edge.to)},
                                {"residue", edge.res}});
    return doc.dump(2);
}

}  // namespace heckeb
