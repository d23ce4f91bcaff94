#include "qblock/quiver.hpp"

namespace qblock {

int Quiver::arrow_index(const std::string& name) const {
    for (int i = 0; i < narrows(); ++i)
        if (arrows[static_cast<size_t>(i)].name == name) return i;
    throw Error("unknown arrow: " + name);
}

bool composable(const Quiver& q, const Word& w) {
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (q.arrow(w[i]).dst != q.arrow(w[i + 1]).src) return false;
    return true;
}

int word_src(const Quiver& q, const Word& w) {
    if (w.empty()) throw Error("empty word has no intrinsic source");
    return q.arrow(w.front()).src;
}

int word_dst(const Quiver& q, const Word& w) {
    if (w.empty()) throw Error("empty word has no intrinsic target");
    return q.arrow(w.back()).dst;
}

std::string word_str(const Quiver& q, const Word& w) {
    std::string s;
    for (std::uint8_t a : w) s += q.arrow(a).name;
    return s;
}

void check_admissible(const Quiver& q, const RelationSet& r) {
    for (const Relation& rel : r.relations) {
        if (rel.terms.empty()) throw Error("empty relation");
        int src = -1, dst = -1;
        for (const auto& [w, coeff] : rel.terms) {
            if (coeff.is_zero()) continue;
            if (w.size() < 2) throw Error("relation with a path of length < 2");
            if (!composable(q, w)) throw Error("non-composable path in relation");
            if (src < 0) {
                src = word_src(q, w);
                dst = word_dst(q, w);
            } else if (src != word_src(q, w) || dst != word_dst(q, w)) {
                throw Error("relation mixes non-parallel paths");
            }
        }
    }
}

Quiver preset_quiver() {
    return Quiver{2, {{"a", 0, 0}, {"b", 0, 1}, {"g", 1, 0}}};
}

Word parse_math_word(const Quiver& q, const std::string& s) {
    Word w;
    for (auto it = s.rbegin(); it != s.rend(); ++it)
        w.push_back(static_cast<std::uint8_t>(q.arrow_index(std::string(1, *it))));
    if (!composable(q, w)) throw Error("non-composable word: " + s);
    return w;
}

namespace {

std::string rep_str(const std::string& s, int k) {
    std::string r;
    for (int i = 0; i < k; ++i) r += s;
    return r;
}

}  // namespace

RelationSet preset_relations_dihedral(Gf c) {
    Quiver q = preset_quiver();
    Gf one = Gf::one(c.exponent());
    auto mw = [&](const std::string& s) { return parse_math_word(q, s); };
    RelationSet r;
    r.relations.push_back({{{mw("bg"), one}}});
    Relation second{{{mw("aa"), one}}};
    if (!c.is_zero()) second.terms.push_back({mw(rep_str("gba", 2)), c});
    r.relations.push_back(second);
    r.relations.push_back({{{mw(rep_str("gba", 2)), one}, {mw(rep_str("agb", 2)), one}}});
    return r;
}

RelationSet preset_relations_quaternion(Gf d) {
    Quiver q = preset_quiver();
    Gf one = Gf::one(d.exponent());
    auto mw = [&](const std::string& s) { return parse_math_word(q, s); };
    RelationSet r;
    r.relations.push_back({{{mw("gbg"), one}, {mw("ag" + rep_str("bag", 3)), one}}});
    r.relations.push_back({{{mw("bgb"), one}, {mw("ba" + rep_str("gba", 3)), one}}});
    Relation third{{{mw("aa"), one}, {mw("gb" + rep_str("agb", 3)), one}}};
    if (!d.is_zero()) third.terms.push_back({mw(rep_str("agb", 4)), d});
    r.relations.push_back(third);
    r.relations.push_back({{{mw("baa"), one}}});
    return r;
}

}  // namespace qblock
