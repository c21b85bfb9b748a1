#pragma once

#include <compare>
#include <utility>
#include <vector>

namespace traceless {

/// A walled diagram on m left and n right strands. Arcs join a left node to a
/// right node within the same row (they cross the wall); passing lines join an
/// upper node to a lower node on the same side. Every node is covered exactly
/// once and the number of upper arcs equals the number of lower arcs.
///
/// Canonical encoding: arcs sorted by left node, lines sorted by upper node;
/// equality and ordering are encoding comparisons. All indices are 1-based.
class WalledDiagram {
  public:
    using Arcs = std::vector<std::pair<int, int>>;    // (left node, right node)
    using Lines = std::vector<std::pair<int, int>>;   // (upper node, lower node)

    WalledDiagram(int m, int n, Arcs upperArcs, Arcs lowerArcs, Lines leftLines,
                  Lines rightLines);

    static WalledDiagram identity(int m, int n);

    int m() const { return m_; }
    int n() const { return n_; }
    int arc_count() const { return static_cast<int>(upper_arcs_.size()); }
    const Arcs& upper_arcs() const { return upper_arcs_; }
    const Arcs& lower_arcs() const { return lower_arcs_; }
    const Lines& left_lines() const { return left_lines_; }
    const Lines& right_lines() const { return right_lines_; }

    bool is_permutation() const { return upper_arcs_.empty(); }

    /// Reflection across the horizontal middle line: swaps the arc rows and
    /// inverts the passing lines. Involutive anti-automorphism of the algebra.
    WalledDiagram flipped() const;

    auto operator<=>(const WalledDiagram&) const = default;

  private:
    int m_, n_;
    Arcs upper_arcs_, lower_arcs_;
    Lines left_lines_, right_lines_;
};

/// Stacking product b1*b2: b2 is placed above b1, middle nodes are identified,
/// loops are removed and counted. The algebra product is delta^loops * diagram.
struct DiagramProduct {
    WalledDiagram diagram;
    int loops;
};
DiagramProduct diagram_product(const WalledDiagram& b1, const WalledDiagram& b2);

enum class GeneratorKind { LeftTransposition, RightTransposition, Arc };

/// t_{ab} (a<b on the left), t_{a'b'} (on the right) or the one-arc t_{ab'}.
WalledDiagram generator_t(GeneratorKind kind, int a, int b, int m, int n);

/// All (m+n)! walled diagrams, in the canonical encoding order.
std::vector<WalledDiagram> enumerate_diagrams(int m, int n);

}  // namespace traceless
