#pragma once

#include <map>
#include <vector>

#include "qblock/quiver.hpp"

namespace qblock {

struct CapTooSmall : Error { using Error::Error; };

// Linear combination of paths; terms sorted by word, zero coefficients
// dropped.  Parallel-ness is the caller's business.
struct Combo {
    std::map<Word, Gf> terms;

    bool is_zero() const { return terms.empty(); }
    void add(const Word& w, Gf c);
    Combo operator+(const Combo& o) const;
    Combo scaled(Gf k) const;
    bool operator==(const Combo& o) const = default;
};

// Monomial rewriting for an admissible quiver ideal, truncated at length
// `cap` (words longer than cap are zero).  Rules rewrite their shortest
// term into the longer ones, so reduction always terminates; completion
// resolves all overlaps so that normal forms are unique.  The truncation
// is exact whenever the quotient's Loewy length is at most cap, which the
// algebra layer certifies against expected dimensions.
class RewriteSystem {
  public:
    RewriteSystem(const Quiver& q, const RelationSet& rels, int cap, int field_exp);

    const Quiver& quiver() const { return q_; }
    int cap() const { return cap_; }
    int field_exponent() const { return e_; }

    bool reducible(const Word& w) const;
    // Does some rule LHS occur as a suffix of w?  (Enough for incremental
    // basis enumeration where all proper prefixes are already irreducible.)
    bool suffix_reducible(const Word& w) const;
    Combo normal_form(const Word& w) const;
    Combo normal_form(const Combo& c) const;
    // Normal form of the concatenation p then q applied afterwards
    // (i.e. the product q_math * p_math); zero when not composable.
    Combo normal_form_product(const Word& first, const Word& then) const;

    int rule_count() const { return static_cast<int>(rules_.size()); }

  private:
    struct Rule {
        Word lhs;
        Combo rhs;
    };

    void add_oriented(const Combo& c);
    void complete();
    bool find_leftmost_match(const Word& w, size_t& pos, size_t& rule) const;
    static bool order_before(const Word& a, const Word& b);

    Quiver q_;
    int cap_;
    int e_;
    std::vector<Rule> rules_;
    mutable std::map<Word, Combo> memo_;
};

}  // namespace qblock
