#pragma once

#include <string>
#include <vector>

#include "mackeylab/numeric.hpp"

namespace mlab {

// A Cartan type: a '+'-separated sum of irreducible components such as
// "A2", "B2+A1", "G2". Rank restrictions follow the classical tables.
struct CartanSpec {
    struct Component {
        char letter;  // A B C D E F G
        int rank;
    };
    std::vector<Component> components;

    static CartanSpec parse(const std::string& text);
    void validate() const;  // throws Error on bad type/rank combinations
    int total_rank() const;
    std::string str() const;
    bool operator==(const CartanSpec&) const = default;
};

}  // namespace mlab
