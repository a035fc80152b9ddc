#include "kummer/fibration.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace kummer {

int kodaira_euler_number(KodairaType type, int n) {
    switch (type) {
        case KodairaType::In: return n;
        case KodairaType::InStar: return n + 6;
        case KodairaType::II: return 2;
        case KodairaType::III: return 3;
        case KodairaType::IV: return 4;
        case KodairaType::IVStar: return 8;
        case KodairaType::IIIStar: return 9;
        case KodairaType::IIStar: return 10;
    }
    throw std::invalid_argument("unknown fiber type");
}

std::string kodaira_type_name(KodairaType type, int n) {
    switch (type) {
        case KodairaType::In: return "I" + std::to_string(n);
        case KodairaType::InStar: return "I" + std::to_string(n) + "*";
        case KodairaType::II: return "II";
        case KodairaType::III: return "III";
        case KodairaType::IV: return "IV";
        case KodairaType::IVStar: return "IV*";
        case KodairaType::IIIStar: return "III*";
        case KodairaType::IIStar: return "II*";
    }
    return {};
}

std::optional<std::pair<KodairaType, int>> parse_kodaira_type(std::string_view token) {
    if (token == "II") return {{KodairaType::II, 0}};
    if (token == "III") return {{KodairaType::III, 0}};
    if (token == "IV") return {{KodairaType::IV, 0}};
    if (token == "II*") return {{KodairaType::IIStar, 0}};
    if (token == "III*") return {{KodairaType::IIIStar, 0}};
    if (token == "IV*") return {{KodairaType::IVStar, 0}};
    if (token.size() < 2 || token[0] != 'I') return std::nullopt;
    bool star = token.back() == '*';
    std::string_view digits = token.substr(1, token.size() - 1 - (star ? 1 : 0));
    if (digits.empty()) return std::nullopt;
    int n = 0;
    for (char c : digits) {
        if (c < '0' || c > '9') return std::nullopt;
        n = n * 10 + (c - '0');
    }
    if (star) return {{KodairaType::InStar, n}};
    if (n < 1) return std::nullopt;
    return {{KodairaType::In, n}};
}

std::string_view fiber_error_text(FiberError error) {
    switch (error) {
        case FiberError::NotEffective: return "not effective";
        case FiberError::NonzeroSquare: return "nonzero square";
        case FiberError::NotNef: return "not nef";
        case FiberError::DisconnectedSupport: return "disconnected support";
        case FiberError::SectionPairing: return "section pairing is not 1";
    }
    return {};
}

namespace {

struct SupportGraph {
    std::vector<Eigen::Index> nodes;               // configuration indices
    std::vector<std::int64_t> multiplicity;        // divisor coefficients
    std::vector<std::vector<std::size_t>> adjacent;  // local indices
    std::size_t edges = 0;
};

SupportGraph support_graph(const CurveConfiguration& cfg, const DivisorClass& divisor) {
    SupportGraph g;
    for (Eigen::Index idx = 0; idx < divisor.coeffs.size(); ++idx) {
        if (divisor.coeffs[idx] != 0) {
            g.nodes.push_back(idx);
            g.multiplicity.push_back(divisor.coeffs[idx]);
        }
    }
    g.adjacent.resize(g.nodes.size());
    for (std::size_t a = 0; a < g.nodes.size(); ++a) {
        for (std::size_t b = a + 1; b < g.nodes.size(); ++b) {
            if (cfg.gram()(g.nodes[a], g.nodes[b]) == 1) {
                g.adjacent[a].push_back(b);
                g.adjacent[b].push_back(a);
                ++g.edges;
            }
        }
    }
    return g;
}

bool is_connected(const SupportGraph& g) {
    if (g.nodes.empty()) return false;
    std::vector<bool> seen(g.nodes.size(), false);
    std::vector<std::size_t> stack = {0};
    std::size_t reached = 0;
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        if (seen[v]) continue;
        seen[v] = true;
        ++reached;
        for (auto w : g.adjacent[v])
            if (!seen[w]) stack.push_back(w);
    }
    return reached == g.nodes.size();
}

std::vector<std::pair<std::string, std::int64_t>> component_list(const CurveConfiguration& cfg,
                                                                 const SupportGraph& g) {
    std::vector<std::pair<std::string, std::int64_t>> components;
    components.reserve(g.nodes.size());
    for (std::size_t v = 0; v < g.nodes.size(); ++v)
        components.emplace_back(cfg.name(g.nodes[v]), g.multiplicity[v]);
    return components;
}

[[noreturn]] void unsupported(const std::string& why) {
    throw std::domain_error("unsupported fiber graph in a transversal rational-curve configuration: " + why);
}

// multiset of multiplicities, e.g. {1:3, 2:3, 3:1} for the Dynkin star
std::map<std::int64_t, std::size_t> multiplicity_counts(const SupportGraph& g) {
    std::map<std::int64_t, std::size_t> counts;
    for (auto m : g.multiplicity) ++counts[m];
    return counts;
}

std::optional<std::size_t> unique_node_with_multiplicity(const SupportGraph& g, std::int64_t m) {
    std::optional<std::size_t> found;
    for (std::size_t v = 0; v < g.nodes.size(); ++v) {
        if (g.multiplicity[v] == m) {
            if (found) return std::nullopt;
            found = v;
        }
    }
    return found;
}

// Walks from `from` through `start`, expecting the given multiplicities in
// order; every interior node must have degree 2 and the last one degree 1.
bool walk_chain(const SupportGraph& g, std::size_t from, std::size_t start,
                const std::vector<std::int64_t>& expected) {
    std::size_t prev = from;
    std::size_t at = start;
    for (std::size_t step = 0; step < expected.size(); ++step) {
        if (g.multiplicity[at] != expected[step]) return false;
        const bool last = step + 1 == expected.size();
        if (last) return g.adjacent[at].size() == 1;
        if (g.adjacent[at].size() != 2) return false;
        const auto next = g.adjacent[at][0] == prev ? g.adjacent[at][1] : g.adjacent[at][0];
        prev = at;
        at = next;
    }
    return true;
}

// central node of given multiplicity and degree 3, with the three arms
// matching the expected multiplicity chains in some order
bool match_star(const SupportGraph& g, std::int64_t center_mult,
                std::vector<std::vector<std::int64_t>> arms) {
    const auto center = unique_node_with_multiplicity(g, center_mult);
    if (!center || g.adjacent[*center].size() != 3) return false;
    std::vector<std::size_t> branches = g.adjacent[*center];
    std::sort(arms.begin(), arms.end());
    do {
        bool all = true;
        for (std::size_t k = 0; k < 3 && all; ++k)
            all = walk_chain(g, *center, branches[k], arms[k]);
        if (all) return true;
    } while (std::next_permutation(arms.begin(), arms.end()));
    return false;
}

std::optional<int> match_in_star(const SupportGraph& g) {
    const auto counts = multiplicity_counts(g);
    const std::size_t total = g.nodes.size();
    if (counts.size() != 2 || counts.count(1) == 0 || counts.count(2) == 0) return std::nullopt;
    if (counts.at(1) != 4 || counts.at(2) != total - 4 || total < 5) return std::nullopt;

    std::vector<std::size_t> twos;
    for (std::size_t v = 0; v < total; ++v) {
        if (g.multiplicity[v] == 1) {
            if (g.adjacent[v].size() != 1 || g.multiplicity[g.adjacent[v][0]] != 2)
                return std::nullopt;
        } else {
            twos.push_back(v);
        }
    }
    // the multiplicity-2 nodes must form a path whose two ends carry the
    // four leaves, two each (n = 0 collapses the path to a single node)
    for (auto v : twos) {
        std::size_t two_neighbours = 0;
        std::size_t leaf_neighbours = 0;
        for (auto w : g.adjacent[v])
            g.multiplicity[w] == 2 ? ++two_neighbours : ++leaf_neighbours;
        if (twos.size() == 1) {
            if (two_neighbours != 0 || leaf_neighbours != 4) return std::nullopt;
        } else if (two_neighbours == 1) {
            if (leaf_neighbours != 2) return std::nullopt;  // path end
        } else if (two_neighbours == 2) {
            if (leaf_neighbours != 0) return std::nullopt;  // path interior
        } else {
            return std::nullopt;
        }
    }
    return static_cast<int>(twos.size()) - 1;
}

}  // namespace

FiberCheck check_fiber_candidate(const CurveConfiguration& cfg, const DivisorClass& divisor,
                                 std::string_view section) {
    FiberCheck check;
    if (!is_effective(divisor) || is_zero(divisor)) {
        check.error = FiberError::NotEffective;
        check.detail = is_zero(divisor) ? "zero divisor" : "a coefficient is negative";
        return check;
    }
    if (const auto square = self_intersection(cfg, divisor); square != 0) {
        check.error = FiberError::NonzeroSquare;
        check.detail = "square is " + std::to_string(square);
        return check;
    }
    if (const auto nef = is_nef_on_configuration(cfg, divisor); !nef.nef) {
        check.error = FiberError::NotNef;
        check.detail = "pairing with " + cfg.name(nef.witness) + " is " + std::to_string(nef.witness_value);
        return check;
    }
    if (!is_connected(support_graph(cfg, divisor))) {
        check.error = FiberError::DisconnectedSupport;
        check.detail = "support splits into several connected pieces";
        return check;
    }
    const auto section_pairing = pairing(cfg, divisor, DivisorClass::unit(cfg, section));
    if (section_pairing != 1) {
        check.error = FiberError::SectionPairing;
        check.detail = "pairing with " + std::string(section) + " is " + std::to_string(section_pairing);
        return check;
    }
    check.ok = true;
    check.candidate = FiberCandidate{divisor, std::string(section)};
    return check;
}

KodairaFiber classify_kodaira(const CurveConfiguration& cfg, const DivisorClass& divisor) {
    if (!is_effective(divisor) || is_zero(divisor))
        throw std::invalid_argument("fiber classification expects a nonzero effective class");
    const auto g = support_graph(cfg, divisor);
    if (!is_connected(g)) unsupported("support is not connected");

    KodairaFiber fiber;
    fiber.components = component_list(cfg, g);

    const bool all_unit = std::all_of(g.multiplicity.begin(), g.multiplicity.end(),
                                      [](std::int64_t m) { return m == 1; });
    const bool all_degree_two = std::all_of(g.adjacent.begin(), g.adjacent.end(),
                                            [](const auto& a) { return a.size() == 2; });
    if (all_unit && all_degree_two && g.edges == g.nodes.size() && g.nodes.size() >= 3) {
        fiber.type = KodairaType::In;
        fiber.n = static_cast<int>(g.nodes.size());
        fiber.euler = kodaira_euler_number(fiber.type, fiber.n);
        return fiber;
    }

    if (g.edges + 1 != g.nodes.size())
        unsupported("neither a cycle nor a tree");

    const auto counts = multiplicity_counts(g);
    const auto max_mult = counts.rbegin()->first;
    if (max_mult == 2) {
        if (const auto n = match_in_star(g)) {
            fiber.type = KodairaType::InStar;
            fiber.n = *n;
            fiber.euler = kodaira_euler_number(fiber.type, fiber.n);
            return fiber;
        }
    } else if (max_mult == 3 && g.nodes.size() == 7) {
        if (match_star(g, 3, {{2, 1}, {2, 1}, {2, 1}})) {
            fiber.type = KodairaType::IVStar;
            fiber.euler = kodaira_euler_number(fiber.type);
            return fiber;
        }
    } else if (max_mult == 4 && g.nodes.size() == 8) {
        if (match_star(g, 4, {{3, 2, 1}, {3, 2, 1}, {2}})) {
            fiber.type = KodairaType::IIIStar;
            fiber.euler = kodaira_euler_number(fiber.type);
            return fiber;
        }
    } else if (max_mult == 6 && g.nodes.size() == 9) {
        if (match_star(g, 6, {{5, 4, 3, 2, 1}, {4, 2}, {3}})) {
            fiber.type = KodairaType::IIStar;
            fiber.euler = kodaira_euler_number(fiber.type);
            return fiber;
        }
    }
    unsupported("weighted dual graph matches no affine Dynkin pattern");
}

int euler_number_from_graph(const Eigen::MatrixXi& adjacency) {
    const auto n = adjacency.rows();
    if (adjacency.cols() != n) throw std::invalid_argument("adjacency matrix must be square");
    if (n == 0) throw std::invalid_argument("empty graph");
    int edges = 0;
    for (Eigen::Index a = 0; a < n; ++a) {
        for (Eigen::Index b = a + 1; b < n; ++b) {
            if (adjacency(a, b) != adjacency(b, a))
                throw std::invalid_argument("adjacency matrix must be symmetric");
            if (adjacency(a, b) != 0 && adjacency(a, b) != 1)
                throw std::invalid_argument("adjacency entries must be 0 or 1");
            edges += adjacency(a, b);
        }
    }
    return static_cast<int>(2 * n) - edges;
}

int euler_number_from_graph(const CurveConfiguration& cfg, const DivisorClass& divisor) {
    const auto g = support_graph(cfg, divisor);
    if (g.nodes.empty()) throw std::invalid_argument("empty support");
    return static_cast<int>(2 * g.nodes.size() - g.edges);
}

std::vector<std::pair<int, int>> euler_constraint_solutions(const std::vector<int>& known_fibers,
                                                            int total) {
    const int known = std::accumulate(known_fibers.begin(), known_fibers.end(), 0);
    const int residual = total - known;
    if (residual < 0)
        throw std::invalid_argument("known fiber Euler numbers exceed the total");
    std::vector<std::pair<int, int>> solutions;
    for (int b = 0; 2 * b <= residual; ++b) solutions.emplace_back(residual - 2 * b, b);
    return solutions;
}

Rational hurwitz_genus(int degree, int base_genus, const std::vector<std::vector<int>>& profiles) {
    if (degree < 1) throw std::invalid_argument("covering degree must be positive");
    std::int64_t ramification = 0;
    for (const auto& profile : profiles) {
        int sheets = 0;
        for (int e : profile) {
            if (e < 1) throw std::invalid_argument("sheet multiplicities must be positive");
            sheets += e;
            ramification += e - 1;
        }
        if (sheets != degree)
            throw std::invalid_argument("fiber profile does not sum to the covering degree");
    }
    // 2 - 2g = d(2 - 2g_base) - sum(e - 1)
    const std::int64_t rhs = static_cast<std::int64_t>(degree) * (2 - 2 * base_genus) - ramification;
    return Rational(2 - rhs, 2);
}

}  // namespace kummer
