#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qlgraph/gain_graph.hpp"

namespace qlgraph {

/// The Boolean lattice B_q: all subsets of {1..q} ordered by inclusion. Subsets
/// are bitmasks, element i stored in bit i - 1.
class BooleanPoset {
public:
    using Set = std::uint32_t;

    /// 1 <= q <= 10.
    explicit BooleanPoset(std::size_t q);

    std::size_t rank() const noexcept { return q_; }
    std::size_t size() const noexcept { return std::size_t{1} << q_; }
    std::vector<Set> sets() const;

    bool leq(Set x, Set y) const;
    bool comparable(Set x, Set y) const { return leq(x, y) || leq(y, x); }
    /// y covers x: x < y and |y| = |x| + 1.
    bool covers(Set x, Set y) const;
    std::size_t rank_of(Set x) const;

    /// All pairs (x, y) with x a proper subset of y.
    std::vector<std::pair<Set, Set>> relations() const;
    std::vector<std::pair<Set, Set>> cover_relations() const;
    /// Hasse diagram as an undirected graph on the bitmask vertices.
    GainGraph hasse_graph() const;

    static Set from_elements(const std::vector<std::size_t>& elements);
    /// "{1,3}" style rendering; "{}" for the empty set.
    static std::string format(Set x);

private:
    void check(Set x) const;

    std::size_t q_;
};

}  // namespace qlgraph
