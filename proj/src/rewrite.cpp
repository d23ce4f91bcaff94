#include "qblock/rewrite.hpp"

#include <algorithm>

namespace qblock {

void Combo::add(const Word& w, Gf c) {
    if (c.is_zero()) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
        terms.emplace(w, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms.erase(it);
}

Combo Combo::operator+(const Combo& o) const {
    Combo r = *this;
    for (const auto& [w, c] : o.terms) r.add(w, c);
    return r;
}

Combo Combo::scaled(Gf k) const {
    Combo r;
    if (k.is_zero()) return r;
    for (const auto& [w, c] : terms) r.terms.emplace(w, c * k);
    return r;
}

// Rewrite order: shorter words first, ties broken lexicographically on the
// application-order letters.  Rules send their minimal term to strictly
// later ones, so every reduction terminates below the cap.
bool RewriteSystem::order_before(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

RewriteSystem::RewriteSystem(const Quiver& q, const RelationSet& rels, int cap, int field_exp)
    : q_(q), cap_(cap), e_(field_exp) {
    check_admissible(q, rels);
    for (const Relation& rel : rels.relations) {
        Combo c;
        for (const auto& [w, coeff] : rel.terms) {
            if (coeff.exponent() != e_) throw MixedFields("relation coefficient field");
            c.add(w, coeff);
        }
        c = normal_form(c);
        if (!c.is_zero()) add_oriented(c);
    }
    complete();
}

void RewriteSystem::add_oriented(const Combo& c) {
    auto min_it = c.terms.begin();
    for (auto it = c.terms.begin(); it != c.terms.end(); ++it)
        if (order_before(it->first, min_it->first)) min_it = it;
    Rule r;
    r.lhs = min_it->first;
    Gf inv = min_it->second.inverse();
    for (const auto& [w, coeff] : c.terms)
        if (w != r.lhs) r.rhs.add(w, coeff * inv);  // char 2: no sign
    rules_.push_back(std::move(r));
    memo_.clear();
}

bool RewriteSystem::reducible(const Word& w) const {
    size_t pos, rule;
    return find_leftmost_match(w, pos, rule);
}

bool RewriteSystem::suffix_reducible(const Word& w) const {
    for (const Rule& r : rules_) {
        if (r.lhs.size() > w.size()) continue;
        if (std::equal(r.lhs.begin(), r.lhs.end(), w.end() - static_cast<long>(r.lhs.size())))
            return true;
    }
    return false;
}

bool RewriteSystem::find_leftmost_match(const Word& w, size_t& pos, size_t& rule) const {
    for (size_t p = 0; p < w.size(); ++p)
        for (size_t r = 0; r < rules_.size(); ++r) {
            const Word& l = rules_[r].lhs;
            if (p + l.size() > w.size()) continue;
            if (std::equal(l.begin(), l.end(), w.begin() + static_cast<long>(p))) {
                pos = p;
                rule = r;
                return true;
            }
        }
    return false;
}

Combo RewriteSystem::normal_form(const Word& w) const {
    if (static_cast<int>(w.size()) > cap_) return {};
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    size_t pos, rule;
    Combo out;
    if (!find_leftmost_match(w, pos, rule)) {
        out.add(w, Gf::one(e_));
    } else {
        const Rule& r = rules_[rule];
        for (const auto& [t, c] : r.rhs.terms) {
            Word sub(w.begin(), w.begin() + static_cast<long>(pos));
            sub.insert(sub.end(), t.begin(), t.end());
            sub.insert(sub.end(), w.begin() + static_cast<long>(pos + r.lhs.size()), w.end());
            out = out + normal_form(sub).scaled(c);
        }
    }
    memo_.emplace(w, out);
    return out;
}

Combo RewriteSystem::normal_form(const Combo& c) const {
    Combo out;
    for (const auto& [w, coeff] : c.terms) out = out + normal_form(w).scaled(coeff);
    return out;
}

Combo RewriteSystem::normal_form_product(const Word& first, const Word& then) const {
    if (!first.empty() && !then.empty() && word_dst(q_, first) != word_src(q_, then)) return {};
    Word w = first;
    w.insert(w.end(), then.begin(), then.end());
    return normal_form(w);
}

void RewriteSystem::complete() {
    // Resolve overlap and inclusion ambiguities until every critical pair
    // reduces to zero; differences become new rules.
    bool changed = true;
    while (changed) {
        changed = false;
        const size_t n = rules_.size();
        for (size_t i = 0; i < n && !changed; ++i)
            for (size_t j = 0; j < n && !changed; ++j) {
                const Word& u = rules_[i].lhs;
                const Word& v = rules_[j].lhs;
                // Overlaps: a proper suffix of u equals a proper prefix of v.
                for (size_t s = 1; s < u.size() && s < v.size() && !changed; ++s) {
                    if (!std::equal(v.begin(), v.begin() + static_cast<long>(s),
                                    u.end() - static_cast<long>(s)))
                        continue;
                    Word w = u;
                    w.insert(w.end(), v.begin() + static_cast<long>(s), v.end());
                    if (static_cast<int>(w.size()) > 2 * cap_) continue;
                    // branch via rule i at position 0
                    Combo a;
                    for (const auto& [t, c] : rules_[i].rhs.terms) {
                        Word x = t;
                        x.insert(x.end(), v.begin() + static_cast<long>(s), v.end());
                        a = a + normal_form(x).scaled(c);
                    }
                    // branch via rule j at position |u| - s
                    Combo b;
                    for (const auto& [t, c] : rules_[j].rhs.terms) {
                        Word x(u.begin(), u.end() - static_cast<long>(s));
                        x.insert(x.end(), t.begin(), t.end());
                        b = b + normal_form(x).scaled(c);
                    }
                    Combo diff = normal_form(a + b);  // char 2: a - b
                    if (!diff.is_zero()) {
                        add_oriented(diff);
                        changed = true;
                    }
                }
                if (changed || i == j) continue;
                // Inclusion: u occurs inside v.
                if (u.size() >= v.size()) continue;
                for (size_t p = 0; p + u.size() <= v.size() && !changed; ++p) {
                    if (!std::equal(u.begin(), u.end(), v.begin() + static_cast<long>(p))) continue;
                    Combo a;
                    for (const auto& [t, c] : rules_[i].rhs.terms) {
                        Word x(v.begin(), v.begin() + static_cast<long>(p));
                        x.insert(x.end(), t.begin(), t.end());
                        x.insert(x.end(), v.begin() + static_cast<long>(p + u.size()), v.end());
                        a = a + normal_form(x).scaled(c);
                    }
                    Combo diff = normal_form(a + rules_[j].rhs);
                    if (!diff.is_zero()) {
                        add_oriented(diff);
                        changed = true;
                    }
                }
            }
    }
}

}  // namespace qblock
