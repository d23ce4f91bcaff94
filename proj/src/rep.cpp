#include "qblock/rep.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace qblock {

namespace {

void require_same_algebra(const Rep& m, const Rep& n) {
    if (m.alg != n.alg) throw AlgebraMismatch("modules over different algebras");
}

int nverts(const Rep& m) { return m.alg->nverts(); }

}  // namespace

int Rep::total_dim() const {
    int t = 0;
    for (int d : dims) t += d;
    return t;
}

Rep zero_rep(const Algebra& a) {
    Rep m;
    m.alg = &a;
    m.dims.assign(static_cast<size_t>(a.nverts()), 0);
    for (int i = 0; i < a.quiver().narrows(); ++i) m.act.push_back(Mat(0, 0, a.field_exponent()));
    return m;
}

Rep simple(const Algebra& a, int vertex) {
    Rep m = zero_rep(a);
    m.dims[static_cast<size_t>(vertex)] = 1;
    for (int i = 0; i < a.quiver().narrows(); ++i) {
        const Arrow& ar = a.quiver().arrow(i);
        m.act[static_cast<size_t>(i)] =
            Mat(m.dims[static_cast<size_t>(ar.dst)], m.dims[static_cast<size_t>(ar.src)],
                a.field_exponent());
    }
    return m;
}

Rep projective(const Algebra& a, int vertex) {
    const int e = a.field_exponent();
    // columns of the component at u: algebra basis elements vertex -> u,
    // in basis order
    std::vector<std::vector<int>> cols(static_cast<size_t>(a.nverts()));
    std::vector<int> pos(static_cast<size_t>(a.dim()), -1);
    for (int i = 0; i < a.dim(); ++i) {
        const auto& b = a.elem(i);
        if (b.src != vertex) continue;
        pos[static_cast<size_t>(i)] = static_cast<int>(cols[static_cast<size_t>(b.dst)].size());
        cols[static_cast<size_t>(b.dst)].push_back(i);
    }
    Rep m;
    m.alg = &a;
    for (const auto& c : cols) m.dims.push_back(static_cast<int>(c.size()));
    for (int ai = 0; ai < a.quiver().narrows(); ++ai) {
        const Arrow& ar = a.quiver().arrow(ai);
        Mat mat(m.dims[static_cast<size_t>(ar.dst)], m.dims[static_cast<size_t>(ar.src)], e);
        Word wa = {static_cast<std::uint8_t>(ai)};
        int ia = a.index_of(ar.src, wa);
        for (int i : cols[static_cast<size_t>(ar.src)]) {
            for (const auto& [k, c] : a.product(ia, i))
                mat.set(pos[static_cast<size_t>(k)], pos[static_cast<size_t>(i)], c);
        }
        m.act.push_back(std::move(mat));
    }
    return m;
}

Rep direct_sum(const Rep& x, const Rep& y) {
    require_same_algebra(x, y);
    const int e = x.field_exponent();
    Rep m;
    m.alg = x.alg;
    for (int v = 0; v < nverts(x); ++v)
        m.dims.push_back(x.dims[static_cast<size_t>(v)] + y.dims[static_cast<size_t>(v)]);
    for (int ai = 0; ai < x.alg->quiver().narrows(); ++ai) {
        const Arrow& ar = x.alg->quiver().arrow(ai);
        Mat mat(m.dims[static_cast<size_t>(ar.dst)], m.dims[static_cast<size_t>(ar.src)], e);
        mat.set_block(0, 0, x.act[static_cast<size_t>(ai)]);
        mat.set_block(x.dims[static_cast<size_t>(ar.dst)], x.dims[static_cast<size_t>(ar.src)],
                      y.act[static_cast<size_t>(ai)]);
        m.act.push_back(std::move(mat));
    }
    return m;
}

Mat word_action(const Rep& m, const Word& w, int src_vertex) {
    Mat acc = Mat::identity(m.dims[static_cast<size_t>(src_vertex)], m.field_exponent());
    for (std::uint8_t a : w) acc = m.act[a] * acc;
    return acc;
}

void validate_rep(const Rep& m) {
    const Quiver& q = m.alg->quiver();
    for (int ai = 0; ai < q.narrows(); ++ai) {
        const Arrow& ar = q.arrow(ai);
        const Mat& mat = m.act[static_cast<size_t>(ai)];
        if (mat.rows() != m.dims[static_cast<size_t>(ar.dst)] ||
            mat.cols() != m.dims[static_cast<size_t>(ar.src)])
            throw DimensionMismatch("arrow matrix shape");
    }
    for (const Relation& rel : m.alg->relations().relations) {
        int src = -1, dst = -1;
        for (const auto& [w, c] : rel.terms)
            if (!c.is_zero()) {
                src = word_src(q, w);
                dst = word_dst(q, w);
                break;
            }
        if (src < 0) continue;
        Mat acc(m.dims[static_cast<size_t>(dst)], m.dims[static_cast<size_t>(src)],
                m.field_exponent());
        for (const auto& [w, c] : rel.terms) acc = acc + word_action(m, w, src).scaled(c);
        if (!acc.is_zero()) throw Error("algebra relation fails on this representation");
    }
}

RepHom identity_hom(const Rep& m) {
    std::vector<Mat> f;
    for (int v = 0; v < nverts(m); ++v)
        f.push_back(Mat::identity(m.dims[static_cast<size_t>(v)], m.field_exponent()));
    return RepHom(std::move(f));
}

bool RepHom::is_zero() const {
    return std::all_of(f.begin(), f.end(), [](const Mat& m) { return m.is_zero(); });
}

bool RepHom::is_invertible() const {
    for (const Mat& m : f) {
        if (m.rows() != m.cols()) return false;
        if (rank(m) != m.rows()) return false;
    }
    return true;
}

RepHom compose(const RepHom& second, const RepHom& first) {
    std::vector<Mat> f;
    for (size_t v = 0; v < first.f.size(); ++v) f.push_back(second.f[v] * first.f[v]);
    return RepHom(std::move(f));
}

RepHom hom_add(const RepHom& a, const RepHom& b) {
    std::vector<Mat> f;
    for (size_t v = 0; v < a.f.size(); ++v) f.push_back(a.f[v] + b.f[v]);
    return RepHom(std::move(f));
}

RepHom hom_scale(const RepHom& a, Gf k) {
    std::vector<Mat> f;
    for (const Mat& m : a.f) f.push_back(m.scaled(k));
    return RepHom(std::move(f));
}

HomSpace hom(const Rep& m, const Rep& n, const std::vector<Mat>* tm, const std::vector<Mat>* tn) {
    require_same_algebra(m, n);
    const int e = m.field_exponent();
    const int V = nverts(m);
    std::vector<int> off(static_cast<size_t>(V) + 1, 0);
    for (int v = 0; v < V; ++v)
        off[static_cast<size_t>(v) + 1] =
            off[static_cast<size_t>(v)] +
            n.dims[static_cast<size_t>(v)] * m.dims[static_cast<size_t>(v)];
    const int unknowns = off[static_cast<size_t>(V)];
    auto uidx = [&](int v, int i, int j) {
        return off[static_cast<size_t>(v)] + i * m.dims[static_cast<size_t>(v)] + j;
    };

    std::vector<std::array<int, 3>> eq_shapes;  // (arrowish, rows, cols) bookkeeping
    int total_rows = 0;
    const Quiver& q = m.alg->quiver();
    for (int ai = 0; ai < q.narrows(); ++ai) {
        const Arrow& ar = q.arrow(ai);
        total_rows += n.dims[static_cast<size_t>(ar.dst)] * m.dims[static_cast<size_t>(ar.src)];
    }
    if (tm && tn)
        for (int v = 0; v < V; ++v)
            total_rows += n.dims[static_cast<size_t>(v)] * m.dims[static_cast<size_t>(v)];
    (void)eq_shapes;

    Mat sys(total_rows, unknowns, e);
    int row = 0;
    for (int ai = 0; ai < q.narrows(); ++ai) {
        const Arrow& ar = q.arrow(ai);
        const int u = ar.src, v = ar.dst;
        const Mat& am = m.act[static_cast<size_t>(ai)];
        const Mat& an = n.act[static_cast<size_t>(ai)];
        // f_v A^m - A^n f_u = 0
        for (int i = 0; i < n.dims[static_cast<size_t>(v)]; ++i)
            for (int j = 0; j < m.dims[static_cast<size_t>(u)]; ++j) {
                for (int k = 0; k < m.dims[static_cast<size_t>(v)]; ++k) {
                    Gf c = am.at(k, j);
                    if (!c.is_zero()) sys.set(row, uidx(v, i, k), sys.at(row, uidx(v, i, k)) + c);
                }
                for (int k = 0; k < n.dims[static_cast<size_t>(u)]; ++k) {
                    Gf c = an.at(i, k);
                    if (!c.is_zero()) sys.set(row, uidx(u, k, j), sys.at(row, uidx(u, k, j)) + c);
                }
                ++row;
            }
    }
    if (tm && tn) {
        // psi t_m = t_n psi per vertex
        for (int v = 0; v < V; ++v) {
            const Mat& a = (*tm)[static_cast<size_t>(v)];
            const Mat& b = (*tn)[static_cast<size_t>(v)];
            for (int i = 0; i < n.dims[static_cast<size_t>(v)]; ++i)
                for (int j = 0; j < m.dims[static_cast<size_t>(v)]; ++j) {
                    for (int k = 0; k < m.dims[static_cast<size_t>(v)]; ++k) {
                        Gf c = a.at(k, j);
                        if (!c.is_zero())
                            sys.set(row, uidx(v, i, k), sys.at(row, uidx(v, i, k)) + c);
                    }
                    for (int k = 0; k < n.dims[static_cast<size_t>(v)]; ++k) {
                        Gf c = b.at(i, k);
                        if (!c.is_zero())
                            sys.set(row, uidx(v, k, j), sys.at(row, uidx(v, k, j)) + c);
                    }
                    ++row;
                }
        }
    }

    Subspace ker = kernel(sys);
    HomSpace h;
    for (int r = 0; r < ker.dim(); ++r) {
        std::vector<Mat> blocks;
        for (int v = 0; v < V; ++v) {
            Mat b(n.dims[static_cast<size_t>(v)], m.dims[static_cast<size_t>(v)], e);
            for (int i = 0; i < b.rows(); ++i)
                for (int j = 0; j < b.cols(); ++j) b.set(i, j, ker.basis.raw(r, uidx(v, i, j)));
            blocks.push_back(std::move(b));
        }
        h.basis.push_back(RepHom(std::move(blocks)));
    }
    return h;
}

namespace {

// Flatten a hom into the coordinate vector used by hom()'s kernel.
Mat flatten(const RepHom& h, int e) {
    int total = 0;
    for (const Mat& b : h.f) total += b.rows() * b.cols();
    Mat v(1, total, e);
    int at = 0;
    for (const Mat& b : h.f)
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) v.set(0, at++, b.raw(i, j));
    return v;
}

}  // namespace

CoverData projective_cover(const Rep& m) {
    const Algebra& a = *m.alg;
    const int e = a.field_exponent();
    std::vector<Subspace> rad = radical_subspaces(m);
    // generators: unit vectors extending the radical to the full space
    std::vector<std::pair<int, int>> gens;  // (vertex, coordinate)
    for (int v = 0; v < a.nverts(); ++v) {
        Subspace span = rad[static_cast<size_t>(v)];
        for (int j = 0; j < m.dims[static_cast<size_t>(v)]; ++j) {
            Mat unit(1, m.dims[static_cast<size_t>(v)], e);
            unit.set(0, j, 1u);
            if (span.contains_vector(unit)) continue;
            gens.emplace_back(v, j);
            span = span.sum(Subspace::span(unit));
        }
    }
    // columns of the cover at u: (gen, algebra basis element gen_vertex -> u)
    std::vector<std::vector<std::pair<int, int>>> cols(static_cast<size_t>(a.nverts()));
    std::vector<std::vector<int>> pos(gens.size(), std::vector<int>(static_cast<size_t>(a.dim()), -1));
    for (size_t g = 0; g < gens.size(); ++g)
        for (int i = 0; i < a.dim(); ++i) {
            const auto& b = a.elem(i);
            if (b.src != gens[g].first) continue;
            pos[g][static_cast<size_t>(i)] = static_cast<int>(cols[static_cast<size_t>(b.dst)].size());
            cols[static_cast<size_t>(b.dst)].emplace_back(static_cast<int>(g), i);
        }
    Rep cover;
    cover.alg = &a;
    for (const auto& c : cols) cover.dims.push_back(static_cast<int>(c.size()));
    for (int ai = 0; ai < a.quiver().narrows(); ++ai) {
        const Arrow& ar = a.quiver().arrow(ai);
        Mat mat(cover.dims[static_cast<size_t>(ar.dst)], cover.dims[static_cast<size_t>(ar.src)], e);
        Word wa = {static_cast<std::uint8_t>(ai)};
        int ia = a.index_of(ar.src, wa);
        for (const auto& [g, i] : cols[static_cast<size_t>(ar.src)])
            for (const auto& [k, c] : a.product(ia, i))
                mat.set(pos[static_cast<size_t>(g)][static_cast<size_t>(k)],
                        pos[static_cast<size_t>(g)][static_cast<size_t>(i)], c);
        cover.act.push_back(std::move(mat));
    }
    // covering map: the basis path w in the g-summand goes to w . gen_g
    std::vector<Mat> pi;
    for (int u = 0; u < a.nverts(); ++u) {
        Mat p(m.dims[static_cast<size_t>(u)], cover.dims[static_cast<size_t>(u)], e);
        int colix = 0;
        for (const auto& [g, i] : cols[static_cast<size_t>(u)]) {
            const auto& [gv, gcoord] = gens[static_cast<size_t>(g)];
            Mat action = word_action(m, a.elem(i).w, gv);
            for (int r = 0; r < p.rows(); ++r) p.set(r, colix, action.raw(r, gcoord));
            ++colix;
        }
        pi.push_back(std::move(p));
    }
    // surjectivity guard
    for (int u = 0; u < a.nverts(); ++u)
        if (rank(pi[static_cast<size_t>(u)]) != m.dims[static_cast<size_t>(u)])
            throw Error("projective cover map not surjective");
    CoverData cd;
    cd.cover = std::move(cover);
    cd.pi = RepHom(std::move(pi));
    for (auto& [v, j] : gens) cd.gen_vertex.push_back(v);
    return cd;
}

SyzygyData syzygy_data(const Rep& m) {
    CoverData cd = projective_cover(m);
    const Algebra& a = *m.alg;
    const int e = a.field_exponent();
    std::vector<Subspace> ker_v;
    for (int v = 0; v < a.nverts(); ++v) ker_v.push_back(kernel(cd.pi.f[static_cast<size_t>(v)]));
    SubRepData sr = sub_rep(cd.cover, ker_v);
    SyzygyData sd;
    sd.omega = std::move(sr.sub);
    sd.cover = std::move(cd.cover);
    std::vector<Mat> incl;
    for (int v = 0; v < a.nverts(); ++v) incl.push_back(sr.incl[static_cast<size_t>(v)]);
    (void)e;
    sd.incl = RepHom(std::move(incl));
    sd.pi = std::move(cd.pi);
    return sd;
}

Rep strip_projective_summands(Rep m) {
    const Algebra& a = *m.alg;
    bool changed = true;
    while (changed && m.total_dim() > 0) {
        changed = false;
        for (int v = 0; v < a.nverts() && !changed; ++v) {
            Rep p = projective(a, v);
            std::vector<Subspace> soc = socle_subspaces(p);
            int soc_total = 0, soc_vertex = -1;
            for (int u = 0; u < a.nverts(); ++u) {
                soc_total += soc[static_cast<size_t>(u)].dim();
                if (soc[static_cast<size_t>(u)].dim() > 0) soc_vertex = u;
            }
            if (soc_total != 1)
                throw Error("projective summand stripping requires simple projective socles");
            HomSpace h = hom(p, m);
            for (const RepHom& f : h.basis) {
                // f splits off a copy of p iff it is nonzero on soc(p)
                Mat image = f.f[static_cast<size_t>(soc_vertex)] *
                            soc[static_cast<size_t>(soc_vertex)].basis.transpose();
                if (image.is_zero()) continue;
                std::vector<Subspace> w;
                int total = 0;
                for (int u = 0; u < a.nverts(); ++u) {
                    w.push_back(Subspace::span(f.f[static_cast<size_t>(u)].transpose()));
                    total += w.back().dim();
                }
                if (total != p.total_dim()) throw Error("split image has wrong dimension");
                m = quotient_rep(m, w).quotient;
                changed = true;
                break;
            }
        }
    }
    return m;
}

Rep syzygy(const Rep& m) { return strip_projective_summands(syzygy_data(m).omega); }

Rep dual_rep(const Rep& m, const Algebra& target) {
    if (target.quiver().narrows() != m.alg->quiver().narrows())
        throw AlgebraMismatch("dual target has different quiver");
    Rep d;
    d.alg = &target;
    d.dims = m.dims;
    for (const Mat& mat : m.act) d.act.push_back(mat.transpose());
    return d;
}

Rep cosyzygy(const Rep& m) {
    const Algebra& op = m.alg->opposite();
    Rep d = dual_rep(m, op);
    Rep s = syzygy(d);
    return dual_rep(s, *m.alg);
}

Rep inflate(const Rep& m, const Algebra& target) {
    if (target.quiver().narrows() != m.alg->quiver().narrows())
        throw AlgebraMismatch("inflation across different quivers");
    Rep r;
    r.alg = &target;
    r.dims = m.dims;
    r.act = m.act;
    validate_rep(r);
    return r;
}

StableHomSpace stable_hom(const Rep& m, const Rep& n) {
    require_same_algebra(m, n);
    const int e = m.field_exponent();
    HomSpace full = hom(m, n);
    StableHomSpace out;
    out.hom_dim = full.dim();
    if (full.dim() == 0) return out;
    CoverData cd = projective_cover(n);
    HomSpace through = hom(m, cd.cover);
    int width = flatten(full.basis[0], e).cols();
    Mat proj_img(through.dim(), width, e);
    for (int i = 0; i < through.dim(); ++i)
        proj_img.set_block(i, 0, flatten(compose(cd.pi, through.basis[static_cast<size_t>(i)]), e));
    Subspace factoring = Subspace::span(proj_img);
    Subspace span = factoring;
    for (const RepHom& h : full.basis) {
        Mat v = flatten(h, e);
        if (span.contains_vector(v)) continue;
        span = span.sum(Subspace::span(v));
        out.coset_reps.push_back(h);
    }
    out.dim = full.dim() - factoring.dim();
    if (static_cast<int>(out.coset_reps.size()) != out.dim)
        throw Error("stable hom dimension bookkeeping failure");
    return out;
}

int ext_dim(const Rep& m, const Rep& n, int deg) {
    if (deg < 1) throw Error("ext degree must be >= 1");
    Rep w = m;
    for (int i = 1; i < deg; ++i) w = syzygy(w);
    return stable_hom(syzygy(w), n).dim;
}

std::vector<Subspace> radical_subspaces(const Rep& m) {
    const Quiver& q = m.alg->quiver();
    const int e = m.field_exponent();
    std::vector<Subspace> rad;
    for (int v = 0; v < nverts(m); ++v) {
        Mat rows(0, m.dims[static_cast<size_t>(v)], e);
        for (int ai = 0; ai < q.narrows(); ++ai)
            if (q.arrow(ai).dst == v)
                rows = Mat::vstack(rows, m.act[static_cast<size_t>(ai)].transpose());
        rad.push_back(Subspace::span(rows));
    }
    return rad;
}

std::vector<Subspace> socle_subspaces(const Rep& m) {
    const Quiver& q = m.alg->quiver();
    const int e = m.field_exponent();
    std::vector<Subspace> soc;
    for (int v = 0; v < nverts(m); ++v) {
        Mat stacked(0, m.dims[static_cast<size_t>(v)], e);
        for (int ai = 0; ai < q.narrows(); ++ai)
            if (q.arrow(ai).src == v) stacked = Mat::vstack(stacked, m.act[static_cast<size_t>(ai)]);
        soc.push_back(stacked.rows() == 0 ? Subspace::full(m.dims[static_cast<size_t>(v)], e)
                                          : kernel(stacked));
    }
    return soc;
}

std::vector<int> composition_counts(const Rep& m) { return m.dims; }

LoewyData loewy(const Rep& m) {
    LoewyData out;
    const Quiver& q = m.alg->quiver();
    const int e = m.field_exponent();
    std::vector<Subspace> cur;
    for (int v = 0; v < nverts(m); ++v)
        cur.push_back(Subspace::full(m.dims[static_cast<size_t>(v)], e));
    auto total = [&](const std::vector<Subspace>& s) {
        int t = 0;
        for (const Subspace& x : s) t += x.dim();
        return t;
    };
    while (total(cur) > 0) {
        std::vector<Subspace> next;
        for (int v = 0; v < nverts(m); ++v) {
            Mat rows(0, m.dims[static_cast<size_t>(v)], e);
            for (int ai = 0; ai < q.narrows(); ++ai) {
                const Arrow& ar = q.arrow(ai);
                if (ar.dst != v) continue;
                const Subspace& src = cur[static_cast<size_t>(ar.src)];
                if (src.dim() == 0) continue;
                rows = Mat::vstack(rows,
                                   (m.act[static_cast<size_t>(ai)] * src.basis.transpose()).transpose());
            }
            next.push_back(Subspace::span(rows));
        }
        std::vector<int> layer;
        for (int v = 0; v < nverts(m); ++v)
            layer.push_back(cur[static_cast<size_t>(v)].dim() - next[static_cast<size_t>(v)].dim());
        out.rad_layers.push_back(std::move(layer));
        cur = std::move(next);
    }
    // socle series via the opposite-algebra dual: socle layer j of m equals
    // radical layer j of the dual
    Rep d = dual_rep(m, m.alg->opposite());
    LoewyData dl;
    {
        // compute only radical layers of d (avoid infinite recursion)
        std::vector<Subspace> c2;
        for (int v = 0; v < nverts(d); ++v)
            c2.push_back(Subspace::full(d.dims[static_cast<size_t>(v)], e));
        const Quiver& q2 = d.alg->quiver();
        while (true) {
            int t = 0;
            for (const Subspace& x : c2) t += x.dim();
            if (t == 0) break;
            std::vector<Subspace> next;
            for (int v = 0; v < nverts(d); ++v) {
                Mat rows(0, d.dims[static_cast<size_t>(v)], e);
                for (int ai = 0; ai < q2.narrows(); ++ai) {
                    const Arrow& ar = q2.arrow(ai);
                    if (ar.dst != v) continue;
                    const Subspace& src = c2[static_cast<size_t>(ar.src)];
                    if (src.dim() == 0) continue;
                    rows = Mat::vstack(
                        rows, (d.act[static_cast<size_t>(ai)] * src.basis.transpose()).transpose());
                }
                next.push_back(Subspace::span(rows));
            }
            std::vector<int> layer;
            for (int v = 0; v < nverts(d); ++v)
                layer.push_back(c2[static_cast<size_t>(v)].dim() - next[static_cast<size_t>(v)].dim());
            dl.rad_layers.push_back(std::move(layer));
            c2 = std::move(next);
        }
    }
    out.soc_layers = dl.rad_layers;
    return out;
}

std::string loewy_diagram(const LoewyData& l) {
    std::string s;
    for (const auto& layer : l.rad_layers) {
        std::string line;
        for (size_t v = 0; v < layer.size(); ++v)
            for (int k = 0; k < layer[v]; ++k) {
                if (!line.empty()) line += " ";
                line += std::to_string(v);
            }
        s += line + "\n";
    }
    return s;
}

QuotientData quotient_rep(const Rep& m, const std::vector<Subspace>& sub) {
    const Quiver& q = m.alg->quiver();
    const int e = m.field_exponent();
    // arrow stability
    for (int ai = 0; ai < q.narrows(); ++ai) {
        const Arrow& ar = q.arrow(ai);
        const Subspace& w = sub[static_cast<size_t>(ar.src)];
        if (w.dim() == 0) continue;
        Mat img = (m.act[static_cast<size_t>(ai)] * w.basis.transpose()).transpose();
        if (!sub[static_cast<size_t>(ar.dst)].contains(Subspace::span(img)))
            throw Error("quotient by a non-stable subspace");
    }
    QuotientData out;
    out.quotient.alg = m.alg;
    std::vector<Mat> embed;  // complement embedding per vertex
    for (int v = 0; v < nverts(m); ++v) {
        const Subspace& w = sub[static_cast<size_t>(v)];
        const int n = m.dims[static_cast<size_t>(v)];
        // greedy complement by unit vectors
        std::vector<int> compl_cols;
        Subspace span = w;
        for (int j = 0; j < n; ++j) {
            Mat unit(1, n, e);
            unit.set(0, j, 1u);
            if (span.contains_vector(unit)) continue;
            compl_cols.push_back(j);
            span = span.sum(Subspace::span(unit));
        }
        const int qd = static_cast<int>(compl_cols.size());
        Mat c(n, qd, e);
        for (int k = 0; k < qd; ++k) c.set(compl_cols[static_cast<size_t>(k)], k, 1u);
        // U = [basis^T | C]; proj = last qd rows of U^{-1}
        Mat u = w.dim() > 0 ? Mat::hstack(w.basis.transpose(), c) : c;
        Mat uinv = *solve(u, Mat::identity(n, e));
        out.proj.push_back(uinv.block(w.dim(), 0, qd, n));
        embed.push_back(c);
        out.quotient.dims.push_back(qd);
    }
    for (int ai = 0; ai < q.narrows(); ++ai) {
        const Arrow& ar = q.arrow(ai);
        out.quotient.act.push_back(out.proj[static_cast<size_t>(ar.dst)] *
                                   m.act[static_cast<size_t>(ai)] * embed[static_cast<size_t>(ar.src)]);
    }
    out.section = std::move(embed);
    return out;
}

SubRepData sub_rep(const Rep& m, const std::vector<Subspace>& sub) {
    const Quiver& q = m.alg->quiver();
    SubRepData out;
    out.sub.alg = m.alg;
    for (int v = 0; v < nverts(m); ++v) {
        out.sub.dims.push_back(sub[static_cast<size_t>(v)].dim());
        out.incl.push_back(sub[static_cast<size_t>(v)].basis.transpose());
    }
    for (int ai = 0; ai < q.narrows(); ++ai) {
        const Arrow& ar = q.arrow(ai);
        Mat rhs = m.act[static_cast<size_t>(ai)] * out.incl[static_cast<size_t>(ar.src)];
        auto x = solve(out.incl[static_cast<size_t>(ar.dst)], rhs);
        if (!x) throw Error("subspaces not arrow-stable");
        out.sub.act.push_back(*x);
    }
    return out;
}

Extension extension_from_cocycle(const Rep& q, const Rep& s, const RepHom& f,
                                 const SyzygyData& sd) {
    require_same_algebra(q, s);
    const int e = q.field_exponent();
    Rep ds = direct_sum(s, sd.cover);
    // graph of (f, incl): a subrepresentation of s (+) cover
    std::vector<Subspace> graph;
    for (int v = 0; v < nverts(q); ++v) {
        Mat g = Mat::hstack(f.f[static_cast<size_t>(v)].transpose(),
                            sd.incl.f[static_cast<size_t>(v)].transpose());
        graph.push_back(Subspace::span(g));
    }
    QuotientData qd = quotient_rep(ds, graph);
    Extension ext;
    ext.total = qd.quotient;
    for (int v = 0; v < nverts(q); ++v) {
        const int sv = s.dims[static_cast<size_t>(v)];
        const int pv = sd.cover.dims[static_cast<size_t>(v)];
        const int qv = ext.total.dims[static_cast<size_t>(v)];
        ext.incl_sub.push_back(qd.proj[static_cast<size_t>(v)].block(0, 0, qv, sv));
        Mat section_p = qd.section[static_cast<size_t>(v)].block(sv, 0, pv, qv);
        ext.proj_quot.push_back(sd.pi.f[static_cast<size_t>(v)] * section_p);
    }
    // exactness guards
    if (ext.total.total_dim() != s.total_dim() + q.total_dim())
        throw Error("extension has wrong dimension");
    for (int v = 0; v < nverts(q); ++v) {
        if (rank(ext.incl_sub[static_cast<size_t>(v)]) != s.dims[static_cast<size_t>(v)])
            throw Error("extension inclusion not injective");
        if (rank(ext.proj_quot[static_cast<size_t>(v)]) != q.dims[static_cast<size_t>(v)])
            throw Error("extension projection not surjective");
    }
    return ext;
}

namespace {

bool layers_match(const LoewyData& l, const std::vector<int>& factors, size_t from, int nverts) {
    const size_t want = factors.size() - from;
    if (l.rad_layers.size() != want) return false;
    for (size_t j = 0; j < want; ++j)
        for (int v = 0; v < nverts; ++v)
            if (l.rad_layers[j][static_cast<size_t>(v)] != ((v == factors[from + j]) ? 1 : 0))
                return false;
    return true;
}

}  // namespace

Rep uniserial_module(const Algebra& a, const std::vector<int>& factors) {
    if (factors.empty()) throw Error("uniserial needs at least one factor");
    Rep w = simple(a, factors.back());
    for (size_t i = factors.size() - 1; i-- > 0;) {
        // Any uniserial with factors (i..end) is an extension of the simple
        // at factors[i] by the unique uniserial below it, so running over
        // all extension classes is exhaustive.
        Rep s = simple(a, factors[i]);
        SyzygyData sd = syzygy_data(s);
        StableHomSpace sh = stable_hom(sd.omega, w);
        std::vector<Rep> found;
        if (sh.dim > 0) {
            visit_hom_span(sh.coset_reps, a.field_exponent(), 1ull << 20,
                           [&](const RepHom& f) {
                               Extension ext = extension_from_cocycle(s, w, f, sd);
                               if (layers_match(loewy(ext.total), factors, i, a.nverts())) {
                                   bool fresh = true;
                                   for (const Rep& g : found)
                                       if (is_isomorphic(g, ext.total)) {
                                           fresh = false;
                                           break;
                                       }
                                   if (fresh) found.push_back(ext.total);
                               }
                               return false;
                           });
        }
        if (found.empty())
            throw NoSuchUniserial("no uniserial extension with top at vertex " +
                                  std::to_string(factors[i]));
        if (found.size() > 1)
            throw NotUnique("several non-isomorphic uniserial modules with these factors");
        w = found[0];
    }
    return w;
}

// Visit every nonzero coefficient vector over GF(2^e) on the given basis.
bool visit_hom_span(const std::vector<RepHom>& basis, int e, unsigned long long budget,
                    const std::function<bool(const RepHom&)>& visit) {
    const int h = static_cast<int>(basis.size());
    if (h == 0) return false;
    const unsigned q = 1u << e;
    double size = 1;
    for (int i = 0; i < h; ++i) {
        size *= q;
        if (size > static_cast<double>(budget) + 0.5)
            throw SearchBudgetExceeded("search space " + std::to_string(size) + " exceeds budget " +
                                       std::to_string(budget));
    }
    // base-q odometer; additive deltas are cheap because x - y has residue
    // x XOR y in characteristic 2
    std::vector<unsigned> digit(static_cast<size_t>(h), 0);
    RepHom cur;
    for (const Mat& b : basis[0].f) cur.f.push_back(Mat(b.rows(), b.cols(), e));
    while (true) {
        int k = 0;
        while (k < h) {
            unsigned old = digit[static_cast<size_t>(k)];
            unsigned next = (old + 1) % q;
            digit[static_cast<size_t>(k)] = next;
            cur = hom_add(cur, hom_scale(basis[static_cast<size_t>(k)], Gf(e, old ^ next)));
            if (next != 0) break;
            ++k;
        }
        if (k == h) return false;  // wrapped around: all combinations visited
        if (visit(cur)) return true;
    }
}

std::optional<RepHom> find_isomorphism(const Rep& m, const Rep& n, unsigned long long budget) {
    require_same_algebra(m, n);
    if (m.dims != n.dims) return std::nullopt;
    if (m.total_dim() == 0) return RepHom{std::vector<Mat>(m.dims.size(), Mat(0, 0, m.field_exponent()))};
    HomSpace h = hom(m, n);
    if (h.dim() == 0) return std::nullopt;
    std::optional<RepHom> found;
    visit_hom_span(h.basis, m.field_exponent(), budget, [&](const RepHom& cand) {
        if (cand.is_invertible()) {
            found = cand;
            return true;
        }
        return false;
    });
    return found;
}

bool is_isomorphic(const Rep& m, const Rep& n, unsigned long long budget) {
    return find_isomorphism(m, n, budget).has_value();
}

bool is_indecomposable(const Rep& m, unsigned long long budget) {
    if (m.total_dim() == 0) return false;
    HomSpace endos = hom(m, m);
    const int e = m.field_exponent();
    const unsigned q = 1u << e;
    unsigned long long nilpotent = 0, invertible = 0;
    bool local = true;
    ++nilpotent;  // the zero endomorphism
    visit_hom_span(endos.basis, e, budget, [&](const RepHom& f) {
        bool inv = f.is_invertible();
        bool nil = true;
        for (const Mat& b : f.f)
            if (!b.is_nilpotent()) {
                nil = false;
                break;
            }
        if (inv)
            ++invertible;
        else if (nil)
            ++nilpotent;
        else {
            local = false;
            return true;
        }
        return false;
    });
    if (!local) return false;
    // local ring with residue field k: nilpotents are exactly 1/q of End
    unsigned long long expect = 1;
    for (int i = 1; i < endos.dim(); ++i) expect *= q;
    (void)invertible;
    return nilpotent == expect;
}

}  // namespace qblock
