#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qblock/gf.hpp"

namespace qblock {

struct Arrow {
    std::string name;
    int src = 0;
    int dst = 0;
};

struct Quiver {
    int nverts = 0;
    std::vector<Arrow> arrows;

    const Arrow& arrow(int i) const { return arrows[static_cast<size_t>(i)]; }
    int narrows() const { return static_cast<int>(arrows.size()); }
    int arrow_index(const std::string& name) const;
};

// A path as the sequence of arrow indices in application order: word[0]
// acts first.  The empty word is a vertex idempotent (vertex kept apart).
using Word = std::vector<std::uint8_t>;

bool composable(const Quiver& q, const Word& w);
int word_src(const Quiver& q, const Word& w);  // requires nonempty
int word_dst(const Quiver& q, const Word& w);
std::string word_str(const Quiver& q, const Word& w);

// One relation: a coefficient combination of parallel paths, sign-free
// (all our ground fields have characteristic 2).
struct Relation {
    std::vector<std::pair<Word, Gf>> terms;
};

struct RelationSet {
    std::vector<Relation> relations;
};

// Relations must be admissible: length >= 2 and all paths in a relation
// parallel.  Throws Error otherwise.
void check_admissible(const Quiver& q, const RelationSet& r);

// The two-vertex quiver with a loop at 0 and arrows both ways:
//   a: 0 -> 0,  b: 0 -> 1,  g: 1 -> 0.
Quiver preset_quiver();

// Relations of the dihedral-type basic algebra on preset_quiver() with
// parameter c: < bg, a^2 - c (gba)^2, (gba)^2 - (agb)^2 >.
RelationSet preset_relations_dihedral(Gf c);

// Relations of the quaternion-type basic algebra with parameter d:
// < gbg - ag(bag)^3, bgb - ba(gba)^3, a^2 - gb(agb)^3 - d (agb)^4, ba^2 >.
RelationSet preset_relations_quaternion(Gf d);

// Parse a math-notation word like "agb" (rightmost letter acts first)
// using single-character arrow names.
Word parse_math_word(const Quiver& q, const std::string& s);

}  // namespace qblock
