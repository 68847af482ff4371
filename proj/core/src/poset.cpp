#include "qlgraph/poset.hpp"

#include <bit>
#include <sstream>

#include "qlgraph/errors.hpp"

namespace qlgraph {

BooleanPoset::BooleanPoset(std::size_t q) : q_(q) {
    if (q < 1 || q > 10) {
        throw ValidationError("Boolean poset rank must lie in 1..10");
    }
}

void BooleanPoset::check(Set x) const {
    if (x >= size()) {
        std::ostringstream msg;
        msg << "set " << format(x) << " is not a subset of {1.." << q_ << "}";
        throw ValidationError(msg.str());
    }
}

std::vector<BooleanPoset::Set> BooleanPoset::sets() const {
    std::vector<Set> out(size());
    for (Set x = 0; x < size(); ++x) {
        out[x] = x;
    }
    return out;
}

bool BooleanPoset::leq(Set x, Set y) const {
    check(x);
    check(y);
    return (x & ~y) == 0;
}

bool BooleanPoset::covers(Set x, Set y) const {
    return x != y && leq(x, y) && std::popcount(y) == std::popcount(x) + 1;
}

std::size_t BooleanPoset::rank_of(Set x) const {
    check(x);
    return static_cast<std::size_t>(std::popcount(x));
}

std::vector<std::pair<BooleanPoset::Set, BooleanPoset::Set>> BooleanPoset::relations() const {
    std::vector<std::pair<Set, Set>> out;
    for (Set x = 0; x < size(); ++x) {
        for (Set y = 0; y < size(); ++y) {
            if (x != y && leq(x, y)) {
                out.emplace_back(x, y);
            }
        }
    }
    return out;
}

std::vector<std::pair<BooleanPoset::Set, BooleanPoset::Set>> BooleanPoset::cover_relations() const {
    std::vector<std::pair<Set, Set>> out;
    for (Set x = 0; x < size(); ++x) {
        for (std::size_t i = 0; i < q_; ++i) {
            const Set bit = Set{1} << i;
            if ((x & bit) == 0) {
                out.emplace_back(x, x | bit);
            }
        }
    }
    return out;
}

GainGraph BooleanPoset::hasse_graph() const {
    GainGraph g(size());
    for (const auto& [x, y] : cover_relations()) {
        g.add_edge(x, y, 1.0);
    }
    for (Set x = 0; x < size(); ++x) {
        g.set_label(x, format(x));
    }
    return g;
}

BooleanPoset::Set BooleanPoset::from_elements(const std::vector<std::size_t>& elements) {
    Set x = 0;
    for (auto e : elements) {
        if (e < 1 || e > 10) {
            throw ValidationError("poset elements must lie in 1..10");
        }
        x |= Set{1} << (e - 1);
    }
    return x;
}

std::string BooleanPoset::format(Set x) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < 32; ++i) {
        if (x & (Set{1} << i)) {
            if (!first) {
                out += ",";
            }
            out += std::to_string(i + 1);
            first = false;
        }
    }
    return out + "}";
}

}  // namespace qlgraph
