#pragma once

#include <string>
#include <vector>

#include "homcert/matrix.hpp"

namespace homcert {

/// A finitely generated abelian group: free rank plus torsion coefficients
/// t1 | t2 | ... (each > 1).
struct GroupDescriptor {
    int free_rank = 0;
    std::vector<Int> torsion;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const GroupDescriptor&) const = default;

    static GroupDescriptor free(int rank) { return GroupDescriptor{rank, {}}; }
    static GroupDescriptor cyclic(Int k) {
        GroupDescriptor g;
        if (k == 0)
            g.free_rank = 1;
        else if (k != 1 && k != -1)
            g.torsion.push_back(abs(k));
        return g;
    }

    std::string to_string() const {
        if (is_trivial()) return "0";
        std::string s;
        auto append = [&s](const std::string& part) {
            if (!s.empty()) s += " + ";
            s += part;
        };
        if (free_rank == 1) append("Z");
        if (free_rank > 1) append("Z^" + std::to_string(free_rank));
        for (const Int& t : torsion) append("Z/" + t.str());
        return s;
    }
};

}  // namespace homcert
