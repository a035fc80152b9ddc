#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace kummer {

using GramMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

enum class CurveKind { E, F, C };

/// One of the 24 curve labels of the standard configuration: E1..E4, F1..F4,
/// C11..C44.
struct CurveId {
    CurveKind kind;
    int i = 0;  // family index, 1..4
    int j = 0;  // column index, 1..4 (kind C only, else 0)

    static CurveId e(int i) { return {CurveKind::E, i, 0}; }
    static CurveId f(int i) { return {CurveKind::F, i, 0}; }
    static CurveId c(int i, int j) { return {CurveKind::C, i, j}; }

    std::string name() const;

    /// Accepts the 24 token names plus the alias "C", which resolves to E1.
    static std::optional<CurveId> parse(std::string_view token);

    friend bool operator==(const CurveId&, const CurveId&) = default;
};

/// All 24 curve ids in the canonical order E1..E4, F1..F4, C11..C44.
std::vector<CurveId> standard_curves();

/// An incidence configuration of smooth rational curves on a K3 surface:
/// the Gram matrix is symmetric with every diagonal entry -2 and
/// off-diagonal entries 0 or 1 (distinct curves meet transversally, if at
/// all). Immutable after construction; safe for concurrent reads.
class CurveConfiguration {
public:
    /// Generic constructor for arbitrary incidence graphs (used to feed the
    /// fiber classifier synthetic shapes). Throws std::invalid_argument when
    /// the Gram matrix violates the shape above or names are not unique.
    CurveConfiguration(std::vector<std::string> names, GramMatrix gram);

    Eigen::Index size() const { return gram_.rows(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(Eigen::Index index) const { return names_[static_cast<std::size_t>(index)]; }
    const GramMatrix& gram() const { return gram_; }

    /// Index of a curve by serialized name; "C" aliases to "E1" when the
    /// configuration contains it.
    std::optional<Eigen::Index> find(std::string_view name) const;

    /// Like find, but throws std::invalid_argument for unknown names.
    Eigen::Index index_of(std::string_view name) const;

private:
    std::vector<std::string> names_;
    GramMatrix gram_;
    std::unordered_map<std::string, Eigen::Index> index_;
};

/// The standard 24-curve configuration: C_ij meets exactly E_j and F_i,
/// E and F curves are mutually disjoint, and every square is -2.
const CurveConfiguration& standard_configuration();

/// Gram entry looked up by curve names; adjacency(a, a) = -2. Throws
/// std::invalid_argument for names outside the configuration.
std::int64_t adjacency(const CurveConfiguration& cfg, std::string_view a, std::string_view b);

}  // namespace kummer
