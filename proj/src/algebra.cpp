#include "qblock/algebra.hpp"

#include <algorithm>
#include <deque>

namespace qblock {

Algebra::Algebra(Quiver q, RelationSet rels, int cap, int field_exp,
                 std::optional<std::vector<int>> expected_proj_dims, std::string name)
    : q_(std::move(q)), rels_(std::move(rels)), cap_(cap), e_(field_exp), name_(std::move(name)),
      rs_(q_, rels_, cap_, e_) {
    enumerate_basis();
    build_table();
    check_associativity();
    if (expected_proj_dims) {
        for (int v = 0; v < q_.nverts; ++v)
            if (proj_dim(v) != (*expected_proj_dims)[static_cast<size_t>(v)])
                throw DimensionMismatch(
                    "projective at vertex " + std::to_string(v) + " has dimension " +
                    std::to_string(proj_dim(v)) + ", expected " +
                    std::to_string((*expected_proj_dims)[static_cast<size_t>(v)]));
    }
}

void Algebra::enumerate_basis() {
    std::deque<BasisElem> queue;
    for (int v = 0; v < q_.nverts; ++v) queue.push_back({v, v, {}});
    std::vector<BasisElem> found;
    while (!queue.empty()) {
        BasisElem b = queue.front();
        queue.pop_front();
        found.push_back(b);
        for (int a = 0; a < q_.narrows(); ++a) {
            if (q_.arrow(a).src != b.dst) continue;
            Word w = b.w;
            w.push_back(static_cast<std::uint8_t>(a));
            if (rs_.suffix_reducible(w)) continue;
            if (static_cast<int>(w.size()) >= cap_)
                throw CapTooSmall("irreducible path of length " + std::to_string(w.size()) +
                                  " reaches the cap; raise it");
            queue.push_back({b.src, q_.arrow(a).dst, w});
        }
    }
    std::sort(found.begin(), found.end(), [](const BasisElem& x, const BasisElem& y) {
        if (x.w.size() != y.w.size()) return x.w.size() < y.w.size();
        if (x.w != y.w) return x.w < y.w;
        return x.src < y.src;
    });
    basis_ = std::move(found);
    idem_.assign(static_cast<size_t>(q_.nverts), -1);
    for (int i = 0; i < dim(); ++i) {
        index_[{basis_[static_cast<size_t>(i)].src, basis_[static_cast<size_t>(i)].w}] = i;
        if (basis_[static_cast<size_t>(i)].w.empty())
            idem_[static_cast<size_t>(basis_[static_cast<size_t>(i)].src)] = i;
    }
}

int Algebra::index_of(int src, const Word& w) const {
    auto it = index_.find({src, w});
    if (it == index_.end()) throw Error("path not in basis: " + word_str(q_, w));
    return it->second;
}

void Algebra::build_table() {
    const int n = dim();
    table_.assign(static_cast<size_t>(n),
                  std::vector<std::vector<std::pair<int, Gf>>>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const BasisElem& xi = basis_[static_cast<size_t>(i)];
            const BasisElem& xj = basis_[static_cast<size_t>(j)];
            // product x_i * x_j: x_j acts first
            if (xj.dst != xi.src) continue;
            std::vector<std::pair<int, Gf>> out;
            if (xj.w.empty()) {
                out.emplace_back(i, Gf::one(e_));
            } else if (xi.w.empty()) {
                out.emplace_back(j, Gf::one(e_));
            } else {
                Combo c = rs_.normal_form_product(xj.w, xi.w);
                for (const auto& [w, coeff] : c.terms)
                    out.emplace_back(index_of(xj.src, w), coeff);
            }
            table_[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(out);
        }
}

void Algebra::check_associativity() const {
    const int n = dim();
    // combo arithmetic over basis indices
    auto mul_into = [&](int i, int j, Gf coeff, std::map<int, Gf>& acc) {
        for (const auto& [k, c] : product(i, j)) {
            Gf add = c * coeff;
            auto it = acc.find(k);
            if (it == acc.end()) {
                if (!add.is_zero()) acc.emplace(k, add);
            } else {
                it->second = it->second + add;
                if (it->second.is_zero()) acc.erase(it);
            }
        }
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto& ij = product(i, j);
            for (int k = 0; k < n; ++k) {
                std::map<int, Gf> left, right;
                for (const auto& [t, c] : ij) mul_into(t, k, c, left);
                for (const auto& [t, c] : product(j, k)) mul_into(i, t, c, right);
                if (left != right)
                    throw Error("associativity failure at basis triple (" + std::to_string(i) +
                                "," + std::to_string(j) + "," + std::to_string(k) + ")");
            }
        }
}

int Algebra::proj_dim(int v) const {
    int n = 0;
    for (const BasisElem& b : basis_)
        if (b.src == v) ++n;
    return n;
}

std::vector<std::vector<int>> Algebra::cartan() const {
    std::vector<std::vector<int>> c(static_cast<size_t>(q_.nverts),
                                    std::vector<int>(static_cast<size_t>(q_.nverts), 0));
    for (const BasisElem& b : basis_) ++c[static_cast<size_t>(b.src)][static_cast<size_t>(b.dst)];
    return c;
}

const Subspace& Algebra::socle() const {
    if (socle_) return *socle_;
    const int n = dim();
    // x in socle iff a*x = 0 and x*a = 0 for every arrow a.
    std::vector<Mat> conditions;
    for (int a = 0; a < q_.narrows(); ++a) {
        Word wa = {static_cast<std::uint8_t>(a)};
        int ia = index_of(q_.arrow(a).src, wa);
        Mat left(n, n, e_), right(n, n, e_);
        for (int j = 0; j < n; ++j) {
            for (const auto& [k, c] : product(ia, j)) left.set(k, j, c);
            for (const auto& [k, c] : product(j, ia)) right.set(k, j, c);
        }
        conditions.push_back(left);
        conditions.push_back(right);
    }
    Mat stacked = conditions[0];
    for (size_t i = 1; i < conditions.size(); ++i) stacked = Mat::vstack(stacked, conditions[i]);
    socle_ = kernel(stacked);
    return *socle_;
}

bool Algebra::in_socle(const Combo& c) const {
    if (c.is_zero()) return true;
    Mat vec(1, dim(), e_);
    for (const auto& [w, coeff] : c.terms) vec.set(0, index_of(word_src(q_, w), w), coeff);
    return socle().contains_vector(vec);
}

const Algebra& Algebra::opposite() const {
    if (op_) return *op_;
    Quiver oq = q_;
    for (Arrow& a : oq.arrows) std::swap(a.src, a.dst);
    RelationSet orels = rels_;
    for (Relation& rel : orels.relations)
        for (auto& [w, c] : rel.terms) std::reverse(w.begin(), w.end());
    op_ = std::make_shared<const Algebra>(oq, orels, cap_, e_, std::nullopt, name_ + "^op");
    return *op_;
}

std::string Algebra::render(int i) const {
    const BasisElem& b = basis_[static_cast<size_t>(i)];
    if (b.w.empty()) return "e" + std::to_string(b.src);
    return word_str(q_, b.w);
}

std::string Algebra::render(const Combo& c) const {
    if (c.is_zero()) return "0";
    std::string s;
    for (const auto& [w, coeff] : c.terms) {
        if (!s.empty()) s += " + ";
        if (!coeff.is_one()) s += coeff.str() + "*";
        s += word_str(q_, w);
    }
    return s;
}

std::string Algebra::dump() const {
    std::string out;
    for (int i = 0; i < dim(); ++i) {
        const BasisElem& b = basis_[static_cast<size_t>(i)];
        out += render(i) + " : " + std::to_string(b.src) + " -> " + std::to_string(b.dst) + "\n";
    }
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) {
            const auto& p = product(i, j);
            if (p.empty()) continue;
            std::string rhs;
            for (const auto& [k, c] : p) {
                if (!rhs.empty()) rhs += " + ";
                if (!c.is_one()) rhs += c.str() + "*";
                rhs += render(k);
            }
            out += render(i) + " * " + render(j) + " = " + rhs + "\n";
        }
    return out;
}

Algebra make_dihedral_algebra(Gf c, int cap) {
    return Algebra(preset_quiver(), preset_relations_dihedral(c), cap, c.exponent(),
                   std::vector<int>{12, 7}, "lambda:c=" + c.str());
}

Algebra make_quaternion_algebra(Gf d, int cap) {
    return Algebra(preset_quiver(), preset_relations_quaternion(d), cap, d.exponent(),
                   std::vector<int>{24, 14}, "lambdahat:d=" + d.str());
}

SurjectionCertificate check_surjection(const RelationSet& src_rels, const Algebra& dst) {
    SurjectionCertificate cert;
    cert.ok = true;
    for (const Relation& rel : src_rels.relations) {
        Combo image;
        for (const auto& [w, coeff] : rel.terms) image = image + dst.nf(w).scaled(coeff);
        cert.relation_images.push_back(dst.render(image));
        if (!image.is_zero()) cert.ok = false;
    }
    return cert;
}

}  // namespace qblock
