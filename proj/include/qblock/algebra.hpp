#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qblock/matrix.hpp"
#include "qblock/quiver.hpp"
#include "qblock/rewrite.hpp"

namespace qblock {

// A quiver with admissible relations compiled to an explicit basis of
// irreducible paths with structure constants.  Construction is validated,
// not trusted: associativity is checked on all basis triples and, when an
// expected table is supplied, the projective dimensions must match it.
class Algebra {
  public:
    struct BasisElem {
        int src, dst;
        Word w;  // empty for vertex idempotents
    };

    Algebra(Quiver q, RelationSet rels, int cap, int field_exp,
            std::optional<std::vector<int>> expected_proj_dims = std::nullopt,
            std::string name = "");

    const Quiver& quiver() const { return q_; }
    const std::string& name() const { return name_; }
    int field_exponent() const { return e_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    int nverts() const { return q_.nverts; }

    const std::vector<BasisElem>& basis() const { return basis_; }
    const RelationSet& relations() const { return rels_; }
    const BasisElem& elem(int i) const { return basis_[static_cast<size_t>(i)]; }
    int idempotent(int v) const { return idem_[static_cast<size_t>(v)]; }
    int index_of(int src, const Word& w) const;

    // Structure constants of the product x_i * x_j (x_j acts first).
    const std::vector<std::pair<int, Gf>>& product(int i, int j) const {
        return table_[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }

    int proj_dim(int v) const;  // dim of the left projective at v
    // cartan()[i][j] = multiplicity of the simple at j in the projective at i.
    std::vector<std::vector<int>> cartan() const;

    // Normal form of an arbitrary path in this presentation.
    Combo nf(const Word& w) const { return rs_.normal_form(w); }
    const RewriteSystem& rewrite_system() const { return rs_; }

    // Two-sided socle, as a subspace in basis coordinates.
    const Subspace& socle() const;
    bool in_socle(const Combo& c) const;

    // Opposite algebra (arrows and words reversed); built on first use.
    const Algebra& opposite() const;

    std::string render(int i) const;          // one basis element
    std::string render(const Combo& c) const;
    std::string dump() const;                  // basis lines + product rules

  private:
    void enumerate_basis();
    void build_table();
    void check_associativity() const;

    Quiver q_;
    RelationSet rels_;
    int cap_;
    int e_;
    std::string name_;
    RewriteSystem rs_;
    std::vector<BasisElem> basis_;
    std::vector<int> idem_;
    std::map<std::pair<int, Word>, int> index_;
    std::vector<std::vector<std::vector<std::pair<int, Gf>>>> table_;
    mutable std::shared_ptr<const Algebra> op_;
    mutable std::optional<Subspace> socle_;
};

// Preset constructors: the two basic algebras on the shared quiver, over
// GF(2^e), validated against their expected dimension tables (12, 7) and
// (24, 14).
Algebra make_dihedral_algebra(Gf c, int cap = 20);
Algebra make_quaternion_algebra(Gf d, int cap = 20);

struct SurjectionCertificate {
    bool ok = false;
    std::vector<std::string> relation_images;  // reduced normal forms in dst
};

// Does the vertex- and arrow-preserving assignment send every relation of
// src_rels to zero in dst?
SurjectionCertificate check_surjection(const RelationSet& src_rels, const Algebra& dst);

}  // namespace qblock
