#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "abchrome/coloring.hpp"
#include "abchrome/families.hpp"

namespace abchrome {

class ConstructionError : public std::runtime_error {
public:
    enum class Kind {
        ParameterBelowBound,
        ParameterInvalid,
        VerificationFailed,
        BudgetExhausted,
    };

    ConstructionError(Kind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

// Ordered color 5-tuple (c0,c1,c2,c3,c4) assigned to one segment's roles.
struct SegmentPalette {
    std::array<int, 5> c{};

    int operator[](int i) const { return c[i]; }
};

struct ConstructedColoring {
    Coloring coloring;
    std::vector<VertexId> designated;         // acyclic b-vertices, one per color
    std::vector<std::string> designated_names;
    bool fill_backtracked = false;   // greedy-first fill had to revisit a choice
    bool palette_fallback = false;   // the fixed gluing chain was replaced by search
};

// Five-coloring of G(n,k) per the segment construction; requires k >= 3 and
// n >= 5(2k + (-1)^k). Verified acyclic and recoloring-minimal before return.
ConstructedColoring color_gp5(int n, int k);

// Five-coloring of the (0,j)-prism with rims of length rim_len; requires
// j > 0 even, rim_len even, rim_len >= 5(j+2). Verified before return.
ConstructedColoring color_0j_prism5(int rim_len, int j);

// Four-coloring of C(T): the fixed pattern on every H3 copy, the rest greedy.
// Verified acyclic and recoloring-minimal at 4 colors before return.
Coloring color_C_of_T4(const CubicTree& t);

// Acyclic recoloring-minimal 4-coloring of G(n,1), n >= 4 (n = 3 is the
// K2 x K3 exception and is rejected).
Coloring prism_ab4(int n);

namespace detail {

// Palette chains used by the constructions, exposed for the gluing tests.
std::vector<SegmentPalette> gp5_palette_chain(int n, int k);
std::vector<SegmentPalette> prism5_palette_chain();

}  // namespace detail

}  // namespace abchrome
