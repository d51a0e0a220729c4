#include "finaltypes/reference.hpp"

#include <algorithm>
#include <stdexcept>

namespace finaltypes {

namespace {

EdgeList sorted(EdgeList edges) {
    std::sort(edges.begin(), edges.end());
    return edges;
}

const EdgeList pp_g3 = sorted({
    {"3", "2,1"},
    {"2,1", "1,1,1"},
});

const EdgeList pp_g4 = sorted({
    {"4", "3,1"},
    {"4", "2,2"},
    {"3,1", "2,1,1"},
    {"2,2", "2,1,1"},
    {"2,1,1", "1,1,1,1"},
});

const EdgeList pp_g5 = sorted({
    {"5", "4,1"},
    {"5", "3,2"},
    {"4,1", "3,1,1"},
    {"4,1", "2,2,1"},
    {"3,2", "3,1,1"},
    {"3,2", "2,2,1"},
    {"3,1,1", "2,1,1,1"},
    {"2,2,1", "2,1,1,1"},
    {"2,1,1,1", "1,1,1,1,1"},
});

// 18 covers; 3,3 -> 2,2,2 is the one that is ft without being pp.
const EdgeList ft_g6 = sorted({
    {"6", "5,1"},
    {"6", "4,2"},
    {"6", "3,3"},
    {"5,1", "4,1,1"},
    {"5,1", "3,2,1"},
    {"4,2", "4,1,1"},
    {"4,2", "3,2,1"},
    {"4,2", "2,2,2"},
    {"3,3", "3,2,1"},
    {"3,3", "2,2,2"},
    {"4,1,1", "3,1,1,1"},
    {"4,1,1", "2,2,1,1"},
    {"3,2,1", "3,1,1,1"},
    {"3,2,1", "2,2,1,1"},
    {"2,2,2", "2,2,1,1"},
    {"3,1,1,1", "2,1,1,1,1"},
    {"2,2,1,1", "2,1,1,1,1"},
    {"2,1,1,1,1", "1,1,1,1,1,1"},
});

}  // namespace

bool has_pinned_hasse_edges(OrderKind kind, int g) {
    return (kind == OrderKind::pp && g >= 3 && g <= 5) ||
           (kind == OrderKind::ft && g == 6);
}

const EdgeList& pinned_hasse_edges(OrderKind kind, int g) {
    if (kind == OrderKind::pp) {
        switch (g) {
            case 3: return pp_g3;
            case 4: return pp_g4;
            case 5: return pp_g5;
            default: break;
        }
    }
    if (kind == OrderKind::ft && g == 6) {
        return ft_g6;
    }
    throw std::invalid_argument("no pinned edges for order=" +
                                std::string(order_name(kind)) + " g=" + std::to_string(g));
}

}  // namespace finaltypes
