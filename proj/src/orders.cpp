#include "finaltypes/orders.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "finaltypes/enumerate.hpp"
#include "finaltypes/errors.hpp"
#include "finaltypes/final_type.hpp"

#include "json.hpp"

namespace finaltypes {

std::string_view order_name(OrderKind kind) {
    switch (kind) {
        case OrderKind::pp: return "pp";
        case OrderKind::ft: return "ft";
        case OrderKind::do_right: return "do";
        case OrderKind::do_left: return "do-left";
    }
    return "?";
}

std::optional<OrderKind> parse_order(std::string_view name) {
    if (name == "pp") return OrderKind::pp;
    if (name == "ft") return OrderKind::ft;
    if (name == "do") return OrderKind::do_right;
    if (name == "do-left" || name == "do'") return OrderKind::do_left;
    return std::nullopt;
}

namespace {

void check_weights(const Partition& a, const Partition& b) {
    if (a.weight() != b.weight()) {
        throw std::invalid_argument("order comparison needs equal weights, got " +
                                    std::to_string(a.weight()) + " and " +
                                    std::to_string(b.weight()));
    }
}

// Zero padding for both dominance variants lives here and nowhere else.
// Sum of the last `count` parts; indices below 1 contribute 0.
int suffix_sum(const Partition& p, int count) {
    int sum = 0;
    for (int i = std::max(1, p.size() - count + 1); i <= p.size(); ++i) {
        sum += p.part(i);
    }
    return sum;
}

// Sum of the first `count` parts; indices beyond the length saturate at the
// full weight.
int prefix_sum(const Partition& p, int count) {
    if (count >= p.size()) {
        return p.weight();
    }
    int sum = 0;
    for (int i = 1; i <= count; ++i) {
        sum += p.part(i);
    }
    return sum;
}

}  // namespace

bool le_do(const Partition& a, const Partition& b) {
    check_weights(a, b);
    const int span = std::max(a.size(), b.size());
    for (int k = 1; k <= span; ++k) {
        if (suffix_sum(b, k) > suffix_sum(a, k)) {
            return false;
        }
    }
    return true;
}

bool le_do_left(const Partition& a, const Partition& b) {
    check_weights(a, b);
    const int span = std::max(a.size(), b.size());
    for (int k = 1; k <= span; ++k) {
        if (prefix_sum(a, k) > prefix_sum(b, k)) {
            return false;
        }
    }
    return true;
}

bool le_pp(const Partition& a, const Partition& b) {
    check_weights(a, b);
    if (a == b) {
        return true;
    }
    if (a.size() > b.size()) {
        return false;  // grouping never increases the number of parts
    }
    // Place b's parts (largest first) into bins with capacities a's parts;
    // every bin must be filled exactly. Bins with equal remainders are
    // interchangeable, so one representative per value is tried and states
    // are memoized on the remaining multiset.
    std::vector<int> remaining = a.parts();
    std::map<std::vector<int>, bool> memo;
    auto place = [&](auto&& self, int item_idx) -> bool {
        if (item_idx == b.size()) {
            return true;  // totals match, so all bins are at zero
        }
        std::vector<int> key = remaining;
        std::sort(key.begin(), key.end());
        key.push_back(item_idx);
        if (auto it = memo.find(key); it != memo.end()) {
            return it->second;
        }
        const int item = b.part(item_idx + 1);
        bool ok = false;
        int last_tried = -1;
        for (size_t bin = 0; bin < remaining.size() && !ok; ++bin) {
            if (remaining[bin] < item || remaining[bin] == last_tried) {
                continue;
            }
            last_tried = remaining[bin];
            remaining[bin] -= item;
            ok = self(self, item_idx + 1);
            remaining[bin] += item;
        }
        memo[key] = ok;
        return ok;
    };
    return place(place, 0);
}

bool le_ft_oracle(const Partition& a, const Partition& b) {
    check_weights(a, b);
    const std::vector<FinalType> lhs = final_types_with_delta(a, 0);
    const std::vector<FinalType> rhs = final_types_with_delta(b, 0);
    for (const FinalType& v : lhs) {
        bool dominated = false;
        for (const FinalType& w : rhs) {
            if (pointwise_le(v, w)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) {
            return false;
        }
    }
    return true;
}

std::pair<Partition, Partition> strip_common_extremes(Partition a, Partition b) {
    check_weights(a, b);
    const std::vector<int>& av = a.parts();
    const std::vector<int>& bv = b.parts();
    size_t alo = 0, ahi = av.size();
    size_t blo = 0, bhi = bv.size();
    while (ahi - alo >= 2 && bhi - blo >= 2) {
        if (av[alo] == bv[blo]) {
            // Shared first part h; h >= both second parts holds by sortedness.
            ++alo;
            ++blo;
        } else if (av[ahi - 1] == bv[bhi - 1]) {
            // Shared last part f; f <= both second-to-last parts by sortedness.
            --ahi;
            --bhi;
        } else {
            break;
        }
    }
    return {Partition(std::vector<int>(av.begin() + alo, av.begin() + ahi)),
            Partition(std::vector<int>(bv.begin() + blo, bv.begin() + bhi))};
}

Ternary le_ft(const Partition& a0, const Partition& b0) {
    check_weights(a0, b0);
    const auto [a, b] = strip_common_extremes(a0, b0);
    if (a == b) {
        return Ternary::yes;  // pick the dominating type equal to each v
    }
    // After stripping, distinct pairs have distinct first and last parts.
    const int n = a.size();
    const int m = b.size();
    if (n >= m) {
        // Equal-length distinct partitions are incomparable; a longer one is
        // never below a shorter one.
        return Ternary::no;
    }
    if (!le_do(a, b)) {
        return Ternary::no;  // dominance is necessary
    }
    if (le_pp(a, b)) {
        return Ternary::yes;  // grouping is sufficient
    }
    if (m == n + 1 && b.part(m) == 1) {
        return Ternary::no;  // here ft coincides with pp, which just failed
    }
    if (a.weight() <= kEnumerationCap) {
        return le_ft_oracle(a, b) ? Ternary::yes : Ternary::no;
    }
    return Ternary::undecided;
}

namespace {

bool decide(OrderKind kind, const Partition& a, const Partition& b) {
    switch (kind) {
        case OrderKind::pp: return le_pp(a, b);
        case OrderKind::do_right: return le_do(a, b);
        case OrderKind::do_left: return le_do_left(a, b);
        case OrderKind::ft: {
            const Ternary t = le_ft(a, b);
            return t == Ternary::yes;  // cap is enforced before matrix fill
        }
    }
    return false;
}

RelationMatrix matrix_shell(int g, OrderKind kind) {
    if (g < 1) {
        throw std::invalid_argument("relation matrix needs g >= 1");
    }
    if (kind == OrderKind::ft && g > kEnumerationCap) {
        throw ScaleCapError("ft relation matrix needs g <= " +
                            std::to_string(kEnumerationCap) + ", got g=" +
                            std::to_string(g));
    }
    RelationMatrix m;
    m.g = g;
    m.kind = kind;
    m.vertices = list_partitions(g);
    m.rel.assign(m.vertices.size() * m.vertices.size(), 0);
    return m;
}

}  // namespace

RelationMatrix relation_matrix_serial(int g, OrderKind kind) {
    RelationMatrix m = matrix_shell(g, kind);
    const int n = m.size();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m.rel[static_cast<size_t>(i) * n + j] =
                decide(kind, m.vertices[i], m.vertices[j]) ? 1 : 0;
        }
    }
    return m;
}

RelationMatrix relation_matrix(int g, OrderKind kind) {
    RelationMatrix m = matrix_shell(g, kind);
    const int n = m.size();
#pragma omp parallel for collapse(2) schedule(dynamic)
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m.rel[static_cast<size_t>(i) * n + j] =
                decide(kind, m.vertices[i], m.vertices[j]) ? 1 : 0;
        }
    }
    return m;
}

PosetReport poset_check(const RelationMatrix& m) {
    PosetReport report;
    const int n = m.size();
    auto name = [&](int i) { return m.vertices[i].str(); };
    for (int i = 0; i < n; ++i) {
        if (!m.at(i, i)) {
            report.reflexive = false;
            report.violations.push_back("not reflexive at " + name(i));
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j && m.at(i, j) && m.at(j, i)) {
                report.antisymmetric = false;
                report.violations.push_back("antisymmetry: " + name(i) + " <= " + name(j) +
                                            " and " + name(j) + " <= " + name(i));
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!m.at(i, j)) {
                continue;
            }
            for (int k = 0; k < n; ++k) {
                if (m.at(j, k) && !m.at(i, k)) {
                    report.transitive = false;
                    report.violations.push_back("transitivity: " + name(i) + " <= " +
                                                name(j) + " <= " + name(k) + " but not " +
                                                name(i) + " <= " + name(k));
                }
            }
        }
    }
    return report;
}

HasseDiagram hasse(const RelationMatrix& m) {
    const PosetReport check = poset_check(m);
    if (!check.pass()) {
        std::string what = "relation is not a poset:";
        for (const std::string& v : check.violations) {
            what += "\n  " + v;
        }
        throw std::logic_error(what);
    }
    HasseDiagram d;
    d.g = m.g;
    d.kind = m.kind;
    d.vertices = m.vertices;
    const int n = m.size();
    auto strict = [&](int i, int j) { return i != j && m.at(i, j); };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!strict(i, j)) {
                continue;
            }
            bool cover = true;
            for (int k = 0; k < n && cover; ++k) {
                if (strict(i, k) && strict(k, j)) {
                    cover = false;
                }
            }
            if (cover) {
                d.edges.emplace_back(m.vertices[i].str(), m.vertices[j].str());
            }
        }
    }
    std::sort(d.edges.begin(), d.edges.end());
    return d;
}

std::string HasseDiagram::dot() const {
    std::string out = "digraph hasse {\n";
    out += "  label=\"g=" + std::to_string(g) + " order=" + std::string(order_name(kind)) +
           "\";\n";
    for (const Partition& v : vertices) {
        out += "  \"" + v.str() + "\";\n";
    }
    for (const auto& [from, to] : edges) {
        out += "  \"" + from + "\" -> \"" + to + "\";\n";
    }
    out += "}\n";
    return out;
}

std::string HasseDiagram::json() const {
    nlohmann::ordered_json j;
    j["g"] = g;
    j["kind"] = order_name(kind);
    auto& vs = j["vertices"] = nlohmann::ordered_json::array();
    for (const Partition& v : vertices) {
        vs.push_back(v.str());
    }
    auto& es = j["edges"] = nlohmann::ordered_json::array();
    for (const auto& [from, to] : edges) {
        es.push_back({from, to});
    }
    return j.dump(2) + "\n";
}

ChainReport check_chain(int g) {
    ChainReport report;
    report.g = g;
    const RelationMatrix pp = relation_matrix(g, OrderKind::pp);
    const RelationMatrix ft = relation_matrix(g, OrderKind::ft);
    const RelationMatrix dr = relation_matrix(g, OrderKind::do_right);
    const int n = pp.size();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const std::string a = pp.vertices[i].str();
            const std::string b = pp.vertices[j].str();
            if (pp.at(i, j) && !ft.at(i, j)) {
                report.chain_holds = false;
                report.failures.push_back("pp holds but ft fails: " + a + ", " + b);
            }
            if (ft.at(i, j) && !dr.at(i, j)) {
                report.chain_holds = false;
                report.failures.push_back("ft holds but do fails: " + a + ", " + b);
            }
            if (ft.at(i, j) && !pp.at(i, j)) {
                report.ft_not_pp.emplace_back(a, b);
            }
            if (dr.at(i, j) && !ft.at(i, j) && i != j) {
                report.do_not_ft.emplace_back(a, b);
            }
        }
    }
    return report;
}

}  // namespace finaltypes
