#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "finaltypes/partition.hpp"

namespace finaltypes {

enum class OrderKind { pp, ft, do_right, do_left };

std::string_view order_name(OrderKind kind);  // "pp", "ft", "do", "do-left"
std::optional<OrderKind> parse_order(std::string_view name);

enum class Ternary : uint8_t { no, yes, undecided };

/// Right-dominance: every suffix sum of b (its last k+1 parts, zero-padded
/// below index 1) is <= the matching suffix sum of a. Throws on weight
/// mismatch, as do all deciders below.
bool le_do(const Partition& a, const Partition& b);

/// Left-dominance: every prefix sum of a is <= that of b (indices beyond a
/// length contribute the full weight).
bool le_do_left(const Partition& a, const Partition& b);

/// a <= b when a is obtained by grouping parts of b: the multiset of b's
/// parts splits into |a| disjoint blocks whose sums are the parts of a.
bool le_pp(const Partition& a, const Partition& b);

/// The induced order on partitions of g, by definition: for every realizing
/// type v of a (stable rank 0) some realizing type of b dominates it
/// pointwise. Enumerates both realizing sets; requires g <= kEnumerationCap.
bool le_ft_oracle(const Partition& a, const Partition& b);

/// Lemma-driven ft decider: strips common extreme parts, then applies the
/// length, same-length, dominance-necessity, grouping-sufficiency and
/// last-part-one criteria; falls back to the oracle under the cap and
/// reports undecided above it.
Ternary le_ft(const Partition& a, const Partition& b);

/// Removes shared first parts and shared last parts while both partitions
/// keep at least one part; each removal preserves the ft verdict. Returns
/// the inputs unchanged when no step applies.
std::pair<Partition, Partition> strip_common_extremes(Partition a, Partition b);

/// All pairwise comparisons over the partitions of g (decreasing lex order).
struct RelationMatrix {
    int g = 0;
    OrderKind kind = OrderKind::pp;
    std::vector<Partition> vertices;
    std::vector<uint8_t> rel;  // rel[a * n + b] = vertices[a] <= vertices[b]

    int size() const { return static_cast<int>(vertices.size()); }
    bool at(int a, int b) const { return rel[static_cast<size_t>(a) * vertices.size() + b] != 0; }
};

RelationMatrix relation_matrix(int g, OrderKind kind);         // OpenMP fill
RelationMatrix relation_matrix_serial(int g, OrderKind kind);  // reference

struct PosetReport {
    bool reflexive = true;
    bool antisymmetric = true;
    bool transitive = true;
    std::vector<std::string> violations;  // one line per offending pair/triple

    bool pass() const { return reflexive && antisymmetric && transitive; }
};

PosetReport poset_check(const RelationMatrix& m);

/// Cover edges (transitive reduction of the strict relation), edges sorted
/// by (source, target) canonical text.
struct HasseDiagram {
    int g = 0;
    OrderKind kind = OrderKind::pp;
    std::vector<Partition> vertices;
    std::vector<std::pair<std::string, std::string>> edges;

    std::string dot() const;   // byte-stable DOT digraph
    std::string json() const;  // byte-stable {g, kind, vertices, edges}
};

HasseDiagram hasse(const RelationMatrix& m);  // throws std::logic_error if not a poset

/// pp => ft => do over all ordered pairs of partitions of g, with the
/// witnesses showing the converses fail.
struct ChainReport {
    int g = 0;
    bool chain_holds = true;
    std::vector<std::pair<std::string, std::string>> ft_not_pp;
    std::vector<std::pair<std::string, std::string>> do_not_ft;
    std::vector<std::string> failures;  // implication failures; must stay empty
};

ChainReport check_chain(int g);

}  // namespace finaltypes
