#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qblock/algebra.hpp"

namespace qblock {

struct AlgebraMismatch : Error { using Error::Error; };
struct NoSuchUniserial : Error { using Error::Error; };
struct NotUnique : Error { using Error::Error; };
struct SearchBudgetExceeded : Error { using Error::Error; };

// A finite-dimensional left module: dimensions per vertex and one matrix
// per arrow.  For an arrow a: u -> v the matrix has shape dim[v] x dim[u].
struct Rep {
    const Algebra* alg = nullptr;
    std::vector<int> dims;
    std::vector<Mat> act;

    int total_dim() const;
    int field_exponent() const { return alg->field_exponent(); }
    bool is_zero() const { return total_dim() == 0; }
};

Rep zero_rep(const Algebra& a);
Rep simple(const Algebra& a, int vertex);
Rep projective(const Algebra& a, int vertex);
Rep direct_sum(const Rep& x, const Rep& y);

// Action of a path (application order) as a matrix M_src -> M_dst.
Mat word_action(const Rep& m, const Word& w, int src_vertex);

// Every algebra relation must evaluate to the zero matrix.
void validate_rep(const Rep& m);

// A homomorphism of representations: one block per vertex.
struct RepHom {
    std::vector<Mat> f;  // f[v]: M_v -> N_v

    RepHom() = default;
    explicit RepHom(std::vector<Mat> blocks) : f(std::move(blocks)) {}
    bool is_zero() const;
    bool is_invertible() const;
};

RepHom identity_hom(const Rep& m);
RepHom compose(const RepHom& second, const RepHom& first);  // second after first
RepHom hom_add(const RepHom& a, const RepHom& b);
RepHom hom_scale(const RepHom& a, Gf k);

struct HomSpace {
    std::vector<RepHom> basis;
    int dim() const { return static_cast<int>(basis.size()); }
};

// Intertwiners M -> N; when endomorphisms tm / tn are supplied the maps
// are additionally required to satisfy  psi tm = tn psi  per vertex.
HomSpace hom(const Rep& m, const Rep& n, const std::vector<Mat>* tm = nullptr,
             const std::vector<Mat>* tn = nullptr);

struct StableHomSpace {
    int hom_dim = 0;
    int dim = 0;                      // hom modulo maps factoring through projectives
    std::vector<RepHom> coset_reps;   // representatives of a basis of the quotient
};

StableHomSpace stable_hom(const Rep& m, const Rep& n);

struct CoverData {
    Rep cover;
    RepHom pi;                   // cover ->> m
    std::vector<int> gen_vertex;
};

CoverData projective_cover(const Rep& m);

struct SyzygyData {
    Rep omega;    // kernel of the cover map, not stripped
    Rep cover;
    RepHom incl;  // omega -> cover
    RepHom pi;    // cover ->> m
};

SyzygyData syzygy_data(const Rep& m);
Rep strip_projective_summands(Rep m);
Rep syzygy(const Rep& m);    // projective summands stripped
Rep cosyzygy(const Rep& m);  // via the opposite algebra and duality

// dim Ext^deg(m, n) = dim stable Hom(Omega^deg m, n), deg >= 1.
int ext_dim(const Rep& m, const Rep& n, int deg);

struct LoewyData {
    std::vector<std::vector<int>> rad_layers;  // per layer: counts per vertex
    std::vector<std::vector<int>> soc_layers;

    int length() const { return static_cast<int>(rad_layers.size()); }
};

LoewyData loewy(const Rep& m);
std::string loewy_diagram(const LoewyData& l);  // one radical layer per line

std::vector<Subspace> radical_subspaces(const Rep& m);
std::vector<Subspace> socle_subspaces(const Rep& m);
std::vector<int> composition_counts(const Rep& m);  // multiplicity per vertex

struct QuotientData {
    Rep quotient;
    std::vector<Mat> proj;     // M_v -> Q_v
    std::vector<Mat> section;  // Q_v -> M_v, linear section of proj
};

// Subspaces must be arrow-stable; checked.
QuotientData quotient_rep(const Rep& m, const std::vector<Subspace>& sub);

struct SubRepData {
    Rep sub;
    std::vector<Mat> incl;  // S_v -> M_v
};

SubRepData sub_rep(const Rep& m, const std::vector<Subspace>& sub);

// The uniserial module with the given descending composition factors
// (top first), built from the socle up through unique extension classes.
Rep uniserial_module(const Algebra& a, const std::vector<int>& factors);

struct Extension {
    Rep total;                    // 0 -> S -> E -> Q -> 0
    std::vector<Mat> incl_sub;    // S_v -> E_v
    std::vector<Mat> proj_quot;   // E_v -> Q_v
};

// Pushout of 0 -> Omega(Q) -> P(Q) -> Q -> 0 along a cocycle
// f: Omega(Q) -> S.  A stably nonzero f yields a non-split extension.
Extension extension_from_cocycle(const Rep& q, const Rep& s, const RepHom& f,
                                 const SyzygyData& sd);

std::optional<RepHom> find_isomorphism(const Rep& m, const Rep& n, unsigned long long budget);
bool is_isomorphic(const Rep& m, const Rep& n, unsigned long long budget = 1ull << 24);
bool is_indecomposable(const Rep& m, unsigned long long budget = 1ull << 24);

// Visit every nonzero combination of the given maps over GF(2^e); stops
// early when the callback returns true.  Throws SearchBudgetExceeded when
// q^basis.size() exceeds the budget.
bool visit_hom_span(const std::vector<RepHom>& basis, int e, unsigned long long budget,
                    const std::function<bool(const RepHom&)>& visit);

Rep dual_rep(const Rep& m, const Algebra& target);  // target = opposite algebra

// Reinterpret a module along an arrow-preserving surjection target ->> m.alg
// (same quiver, same matrices); the target relations are re-validated.
Rep inflate(const Rep& m, const Algebra& target);

}  // namespace qblock
