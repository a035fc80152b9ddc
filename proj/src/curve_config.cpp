#include "kummer/curve_config.hpp"

#include <stdexcept>
#include <utility>

namespace kummer {

std::string CurveId::name() const {
    switch (kind) {
        case CurveKind::E: return "E" + std::to_string(i);
        case CurveKind::F: return "F" + std::to_string(i);
        case CurveKind::C: return "C" + std::to_string(i) + std::to_string(j);
    }
    return {};
}

std::optional<CurveId> CurveId::parse(std::string_view token) {
    if (token == "C") return e(1);  // the paper's curve C is E1
    if (token.size() < 2 || token.size() > 3) return std::nullopt;
    const char head = token[0];
    auto digit = [](char c) -> int { return c >= '1' && c <= '4' ? c - '0' : 0; };
    if ((head == 'E' || head == 'F') && token.size() == 2) {
        const int i = digit(token[1]);
        if (i == 0) return std::nullopt;
        return head == 'E' ? e(i) : f(i);
    }
    if (head == 'C' && token.size() == 3) {
        const int i = digit(token[1]);
        const int j = digit(token[2]);
        if (i == 0 || j == 0) return std::nullopt;
        return c(i, j);
    }
    return std::nullopt;
}

std::vector<CurveId> standard_curves() {
    std::vector<CurveId> curves;
    curves.reserve(24);
    for (int i = 1; i <= 4; ++i) curves.push_back(CurveId::e(i));
    for (int i = 1; i <= 4; ++i) curves.push_back(CurveId::f(i));
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) curves.push_back(CurveId::c(i, j));
    return curves;
}

CurveConfiguration::CurveConfiguration(std::vector<std::string> names, GramMatrix gram)
    : names_(std::move(names)), gram_(std::move(gram)) {
    const auto n = gram_.rows();
    if (gram_.cols() != n || static_cast<Eigen::Index>(names_.size()) != n)
        throw std::invalid_argument("configuration size mismatch");
    for (Eigen::Index r = 0; r < n; ++r) {
        if (gram_(r, r) != -2)
            throw std::invalid_argument("diagonal Gram entry must be -2 at " + names_[r]);
        for (Eigen::Index c = r + 1; c < n; ++c) {
            if (gram_(r, c) != gram_(c, r))
                throw std::invalid_argument("Gram matrix must be symmetric");
            if (gram_(r, c) != 0 && gram_(r, c) != 1)
                throw std::invalid_argument("off-diagonal Gram entries must be 0 or 1");
        }
    }
    for (Eigen::Index r = 0; r < n; ++r)
        if (!index_.emplace(names_[r], r).second)
            throw std::invalid_argument("duplicate curve name " + names_[r]);
}

std::optional<Eigen::Index> CurveConfiguration::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end() && name == "C") it = index_.find("E1");
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Eigen::Index CurveConfiguration::index_of(std::string_view name) const {
    if (auto idx = find(name)) return *idx;
    throw std::invalid_argument("unknown curve '" + std::string(name) + "'");
}

const CurveConfiguration& standard_configuration() {
    static const CurveConfiguration cfg = [] {
        const auto curves = standard_curves();
        std::vector<std::string> names;
        names.reserve(curves.size());
        for (const auto& c : curves) names.push_back(c.name());
        const auto n = static_cast<Eigen::Index>(curves.size());
        GramMatrix gram = GramMatrix::Zero(n, n);
        for (Eigen::Index r = 0; r < n; ++r) gram(r, r) = -2;
        auto pos = [&](const CurveId& id) -> Eigen::Index {
            for (Eigen::Index k = 0; k < n; ++k)
                if (curves[static_cast<std::size_t>(k)] == id) return k;
            return -1;
        };
        // single normative incidence rule: C_ij meets E_j and F_i once
        for (int i = 1; i <= 4; ++i) {
            for (int j = 1; j <= 4; ++j) {
                const auto c = pos(CurveId::c(i, j));
                const auto e = pos(CurveId::e(j));
                const auto f = pos(CurveId::f(i));
                gram(c, e) = gram(e, c) = 1;
                gram(c, f) = gram(f, c) = 1;
            }
        }
        return CurveConfiguration(std::move(names), std::move(gram));
    }();
    return cfg;
}

std::int64_t adjacency(const CurveConfiguration& cfg, std::string_view a, std::string_view b) {
    return cfg.gram()(cfg.index_of(a), cfg.index_of(b));
}

}  // namespace kummer
