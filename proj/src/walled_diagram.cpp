#include "traceless/walled_diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace traceless {

namespace {

void sort_pairs(std::vector<std::pair<int, int>>& v) {
    std::sort(v.begin(), v.end());
}

void check_cover(int count, const std::vector<int>& nodes, const char* what) {
    std::set<int> seen;
    for (int x : nodes) {
        if (x < 1 || x > count) throw std::invalid_argument(std::string(what) + ": node out of range");
        if (!seen.insert(x).second)
            throw std::invalid_argument(std::string(what) + ": node covered twice");
    }
    if (static_cast<int>(seen.size()) != count)
        throw std::invalid_argument(std::string(what) + ": node left uncovered");
}

}  // namespace

WalledDiagram::WalledDiagram(int m, int n, Arcs upperArcs, Arcs lowerArcs, Lines leftLines,
                             Lines rightLines)
    : m_(m), n_(n), upper_arcs_(std::move(upperArcs)), lower_arcs_(std::move(lowerArcs)),
      left_lines_(std::move(leftLines)), right_lines_(std::move(rightLines)) {
    if (m_ < 1 || n_ < 1) throw std::invalid_argument("walled diagram: m, n must be positive");
    if (upper_arcs_.size() != lower_arcs_.size())
        throw std::invalid_argument("walled diagram: upper/lower arc counts differ");
    sort_pairs(upper_arcs_);
    sort_pairs(lower_arcs_);
    sort_pairs(left_lines_);
    sort_pairs(right_lines_);

    std::vector<int> upperLeft, upperRight, lowerLeft, lowerRight;
    for (const auto& [a, b] : upper_arcs_) {
        upperLeft.push_back(a);
        upperRight.push_back(b);
    }
    for (const auto& [a, b] : lower_arcs_) {
        lowerLeft.push_back(a);
        lowerRight.push_back(b);
    }
    for (const auto& [u, l] : left_lines_) {
        upperLeft.push_back(u);
        lowerLeft.push_back(l);
    }
    for (const auto& [u, l] : right_lines_) {
        upperRight.push_back(u);
        lowerRight.push_back(l);
    }
    check_cover(m_, upperLeft, "upper left row");
    check_cover(n_, upperRight, "upper right row");
    check_cover(m_, lowerLeft, "lower left row");
    check_cover(n_, lowerRight, "lower right row");
}

WalledDiagram WalledDiagram::identity(int m, int n) {
    Lines left, right;
    for (int i = 1; i <= m; ++i) left.push_back({i, i});
    for (int i = 1; i <= n; ++i) right.push_back({i, i});
    return WalledDiagram(m, n, {}, {}, std::move(left), std::move(right));
}

WalledDiagram WalledDiagram::flipped() const {
    Lines left, right;
    for (const auto& [u, l] : left_lines_) left.push_back({l, u});
    for (const auto& [u, l] : right_lines_) right.push_back({l, u});
    return WalledDiagram(m_, n_, lower_arcs_, upper_arcs_, std::move(left), std::move(right));
}

namespace {

// Composite graph node for the stacking product: three rows, two sides.
enum Row { Top = 0, Mid = 1, Bot = 2 };
struct Node {
    int row;    // Top / Mid / Bot
    int side;   // 0 = left, 1 = right
    int idx;    // 1-based
    bool operator==(const Node&) const = default;
    auto operator<=>(const Node&) const = default;
};

// Each middle node carries exactly one edge from the upper diagram (b2) and
// one from the lower diagram (b1); top and bottom nodes carry one edge.
struct Tracer {
    const WalledDiagram& b1;   // lower diagram
    const WalledDiagram& b2;   // upper diagram

    // Edge of b2 incident to a node of row Top or Mid.
    Node peer_upper(const Node& v) const {
        if (v.row == Top) {
            for (const auto& [a, b] : b2.upper_arcs()) {
                if (v.side == 0 && a == v.idx) return {Top, 1, b};
                if (v.side == 1 && b == v.idx) return {Top, 0, a};
            }
            const auto& lines = v.side == 0 ? b2.left_lines() : b2.right_lines();
            for (const auto& [u, l] : lines)
                if (u == v.idx) return {Mid, v.side, l};
        } else {   // Mid node viewed as b2's lower row
            for (const auto& [a, b] : b2.lower_arcs()) {
                if (v.side == 0 && a == v.idx) return {Mid, 1, b};
                if (v.side == 1 && b == v.idx) return {Mid, 0, a};
            }
            const auto& lines = v.side == 0 ? b2.left_lines() : b2.right_lines();
            for (const auto& [u, l] : lines)
                if (l == v.idx) return {Top, v.side, u};
        }
        throw std::logic_error("diagram product: dangling upper edge");
    }

    // Edge of b1 incident to a node of row Mid or Bot.
    Node peer_lower(const Node& v) const {
        if (v.row == Mid) {   // Mid node viewed as b1's upper row
            for (const auto& [a, b] : b1.upper_arcs()) {
                if (v.side == 0 && a == v.idx) return {Mid, 1, b};
                if (v.side == 1 && b == v.idx) return {Mid, 0, a};
            }
            const auto& lines = v.side == 0 ? b1.left_lines() : b1.right_lines();
            for (const auto& [u, l] : lines)
                if (u == v.idx) return {Bot, v.side, l};
        } else {
            for (const auto& [a, b] : b1.lower_arcs()) {
                if (v.side == 0 && a == v.idx) return {Bot, 1, b};
                if (v.side == 1 && b == v.idx) return {Bot, 0, a};
            }
            const auto& lines = v.side == 0 ? b1.left_lines() : b1.right_lines();
            for (const auto& [u, l] : lines)
                if (l == v.idx) return {Mid, v.side, u};
        }
        throw std::logic_error("diagram product: dangling lower edge");
    }

    // Walk from an endpoint (Top or Bot node) to the opposite endpoint.
    Node trace(Node start) const {
        bool viaUpper = start.row == Top;
        Node cur = viaUpper ? peer_upper(start) : peer_lower(start);
        while (cur.row == Mid) {
            // Alternate between the two diagrams at every middle node.
            cur = viaUpper ? peer_lower(cur) : peer_upper(cur);
            viaUpper = !viaUpper;
        }
        return cur;
    }
};

}  // namespace

DiagramProduct diagram_product(const WalledDiagram& b1, const WalledDiagram& b2) {
    if (b1.m() != b2.m() || b1.n() != b2.n())
        throw std::invalid_argument("diagram product: dimension mismatch");
    const int m = b1.m(), n = b1.n();
    Tracer tracer{b1, b2};

    WalledDiagram::Arcs upper, lower;
    WalledDiagram::Lines left, right;
    for (int side = 0; side <= 1; ++side) {
        int count = side == 0 ? m : n;
        for (int i = 1; i <= count; ++i) {
            Node end = tracer.trace({Top, side, i});
            if (end.row == Top) {
                if (side == 0) upper.push_back({i, end.idx});   // record once, from the left
            } else {
                if (end.side != side) throw std::logic_error("diagram product: wall violated");
                (side == 0 ? left : right).push_back({i, end.idx});
            }
        }
    }
    for (int side = 0; side <= 1; ++side) {
        int count = side == 0 ? m : n;
        for (int i = 1; i <= count; ++i) {
            Node end = tracer.trace({Bot, side, i});
            if (end.row == Bot && side == 0) lower.push_back({i, end.idx});
        }
    }

    // Count closed loops among unreached middle nodes.
    std::set<Node> visited;
    auto mark_path = [&](Node start) {
        bool viaUpper = start.row == Top;
        Node cur = viaUpper ? tracer.peer_upper(start) : tracer.peer_lower(start);
        while (cur.row == Mid) {
            visited.insert(cur);
            cur = viaUpper ? tracer.peer_lower(cur) : tracer.peer_upper(cur);
            viaUpper = !viaUpper;
        }
    };
    for (int side = 0; side <= 1; ++side) {
        int count = side == 0 ? m : n;
        for (int i = 1; i <= count; ++i) {
            mark_path({Top, side, i});
            mark_path({Bot, side, i});
        }
    }
    int loops = 0;
    for (int side = 0; side <= 1; ++side) {
        int count = side == 0 ? m : n;
        for (int i = 1; i <= count; ++i) {
            Node start{Mid, side, i};
            if (visited.count(start)) continue;
            // Follow the cycle, starting along the b2 edge.
            Node cur = start;
            bool viaUpper = true;
            do {
                visited.insert(cur);
                cur = viaUpper ? tracer.peer_upper(cur) : tracer.peer_lower(cur);
                viaUpper = !viaUpper;
            } while (!(cur == start));
            ++loops;
        }
    }

    return {WalledDiagram(m, n, std::move(upper), std::move(lower), std::move(left),
                          std::move(right)),
            loops};
}

WalledDiagram generator_t(GeneratorKind kind, int a, int b, int m, int n) {
    auto straight = [](int count, int skip1 = 0, int skip2 = 0) {
        WalledDiagram::Lines lines;
        for (int i = 1; i <= count; ++i)
            if (i != skip1 && i != skip2) lines.push_back({i, i});
        return lines;
    };
    switch (kind) {
        case GeneratorKind::LeftTransposition: {
            if (!(1 <= a && a < b && b <= m))
                throw std::invalid_argument("generator t_ab: need 1 <= a < b <= m");
            WalledDiagram::Lines left = straight(m, a, b);
            left.push_back({a, b});
            left.push_back({b, a});
            return WalledDiagram(m, n, {}, {}, std::move(left), straight(n));
        }
        case GeneratorKind::RightTransposition: {
            if (!(1 <= a && a < b && b <= n))
                throw std::invalid_argument("generator t_a'b': need 1 <= a' < b' <= n");
            WalledDiagram::Lines right = straight(n, a, b);
            right.push_back({a, b});
            right.push_back({b, a});
            return WalledDiagram(m, n, {}, {}, straight(m), std::move(right));
        }
        case GeneratorKind::Arc: {
            if (!(1 <= a && a <= m && 1 <= b && b <= n))
                throw std::invalid_argument("generator t_ab': index out of range");
            return WalledDiagram(m, n, {{a, b}}, {{a, b}}, straight(m, a), straight(n, b));
        }
    }
    throw std::invalid_argument("generator_t: unknown kind");
}

namespace {

void choose(int from, int k, int start, std::vector<int>& cur,
            std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i <= from; ++i) {
        cur.push_back(i);
        choose(from, k, i + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> subsets(int from, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    choose(from, k, 1, cur, out);
    return out;
}

std::vector<int> complement_of(const std::vector<int>& chosen, int count) {
    std::vector<int> out;
    std::set<int> inSet(chosen.begin(), chosen.end());
    for (int i = 1; i <= count; ++i)
        if (!inSet.count(i)) out.push_back(i);
    return out;
}

}  // namespace

std::vector<WalledDiagram> enumerate_diagrams(int m, int n) {
    std::vector<WalledDiagram> out;
    for (int r = 0; r <= std::min(m, n); ++r) {
        for (const auto& upLeft : subsets(m, r))
            for (const auto& upRight : subsets(n, r))
                for (const auto& loLeft : subsets(m, r))
                    for (const auto& loRight : subsets(n, r)) {
                        std::vector<int> upPerm(r), loPerm(r);
                        std::iota(upPerm.begin(), upPerm.end(), 0);
                        do {
                            std::iota(loPerm.begin(), loPerm.end(), 0);
                            do {
                                WalledDiagram::Arcs upper, lower;
                                for (int i = 0; i < r; ++i) {
                                    upper.push_back({upLeft[i], upRight[upPerm[i]]});
                                    lower.push_back({loLeft[i], loRight[loPerm[i]]});
                                }
                                std::vector<int> freeUpL = complement_of(upLeft, m);
                                std::vector<int> freeLoL = complement_of(loLeft, m);
                                std::vector<int> freeUpR = complement_of(upRight, n);
                                std::vector<int> freeLoR = complement_of(loRight, n);
                                std::vector<int> permL(freeUpL.size()), permR(freeUpR.size());
                                std::iota(permL.begin(), permL.end(), 0);
                                do {
                                    std::iota(permR.begin(), permR.end(), 0);
                                    do {
                                        WalledDiagram::Lines left, right;
                                        for (size_t i = 0; i < freeUpL.size(); ++i)
                                            left.push_back({freeUpL[i], freeLoL[permL[i]]});
                                        for (size_t i = 0; i < freeUpR.size(); ++i)
                                            right.push_back({freeUpR[i], freeLoR[permR[i]]});
                                        out.push_back(WalledDiagram(m, n, upper, lower,
                                                                    std::move(left),
                                                                    std::move(right)));
                                    } while (std::next_permutation(permR.begin(), permR.end()));
                                } while (std::next_permutation(permL.begin(), permL.end()));
                            } while (std::next_permutation(loPerm.begin(), loPerm.end()));
                        } while (std::next_permutation(upPerm.begin(), upPerm.end()));
                    }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace traceless
