#include "qblock/strings.hpp"

#include <algorithm>
#include <set>

namespace qblock {

namespace {

bool contains_subword(const Word& w, const Word& sub) {
    if (sub.size() > w.size()) return false;
    for (size_t p = 0; p + sub.size() <= w.size(); ++p)
        if (std::equal(sub.begin(), sub.end(), w.begin() + static_cast<long>(p))) return true;
    return false;
}

}  // namespace

StringAlgebra::StringAlgebra(const Algebra& a, int max_forbidden_len) : alg_(&a) {
    const Quiver& q = a.quiver();
    // vertex degrees at most two in and out
    for (int v = 0; v < q.nverts; ++v) {
        int in = 0, out = 0;
        for (const Arrow& ar : q.arrows) {
            if (ar.src == v) ++out;
            if (ar.dst == v) ++in;
        }
        if (in > 2 || out > 2)
            throw NotStringAlgebra("vertex " + std::to_string(v) + " has degree above two");
    }
    // minimal vanishing words of the socle quotient, by breadth-first search
    // over allowed words
    std::vector<Word> frontier;
    for (int ai = 0; ai < q.narrows(); ++ai) {
        Word w = {static_cast<std::uint8_t>(ai)};
        Combo c = a.nf(w);
        if (c.is_zero() || a.in_socle(c))
            throw NotStringAlgebra("arrow vanishes in the socle quotient");
        frontier.push_back(w);
    }
    for (int len = 2; len <= max_forbidden_len && !frontier.empty(); ++len) {
        std::vector<Word> next;
        for (const Word& w : frontier)
            for (int ai = 0; ai < q.narrows(); ++ai) {
                if (q.arrow(ai).src != q.arrow(w.back()).dst) continue;
                Word x = w;
                x.push_back(static_cast<std::uint8_t>(ai));
                Combo c = a.nf(x);
                if (c.is_zero() || a.in_socle(c)) {
                    bool minimal = true;
                    for (const Word& f : forbidden_)
                        if (contains_subword(x, f)) {
                            minimal = false;
                            break;
                        }
                    if (minimal) forbidden_.push_back(x);
                } else {
                    // monomial presentation check: a surviving word must be
                    // its own normal form modulo the socle
                    Combo diff = c;
                    diff.add(x, Gf::one(a.field_exponent()));  // char 2: c - x
                    if (!a.in_socle(diff))
                        throw NotStringAlgebra("socle quotient is not monomial at " +
                                               word_str(q, x));
                    next.push_back(x);
                }
            }
        frontier = std::move(next);
    }
    if (!frontier.empty())
        throw NotStringAlgebra("allowed words do not terminate below the length bound");
    // unique continuation on either side of every arrow
    for (int ai = 0; ai < q.narrows(); ++ai) {
        int after = 0, before = 0;
        for (int bi = 0; bi < q.narrows(); ++bi) {
            Word ab = {static_cast<std::uint8_t>(ai), static_cast<std::uint8_t>(bi)};
            Word ba = {static_cast<std::uint8_t>(bi), static_cast<std::uint8_t>(ai)};
            if (q.arrow(ai).dst == q.arrow(bi).src && word_allowed(ab)) ++after;
            if (q.arrow(bi).dst == q.arrow(ai).src && word_allowed(ba)) ++before;
        }
        if (after > 1 || before > 1)
            throw NotStringAlgebra("continuation after arrow " + q.arrow(ai).name +
                                   " is not unique");
    }
}

bool StringAlgebra::word_allowed(const Word& w) const {
    for (const Word& f : forbidden_)
        if (contains_subword(w, f)) return false;
    return true;
}

std::vector<int> StringAlgebra::vertex_seq(const std::vector<StringStep>& steps, int v0) const {
    const Quiver& q = alg_->quiver();
    std::vector<int> vs = {v0};
    for (const StringStep& s : steps) {
        const Arrow& ar = q.arrow(s.arrow);
        // direct: arrow runs from position i to position i-1
        int prev = vs.back();
        int next = s.inverse ? ar.dst : ar.src;
        int expect_prev = s.inverse ? ar.src : ar.dst;
        if (prev != expect_prev) return {};  // incompatible walk
        vs.push_back(next);
    }
    return vs;
}

bool StringAlgebra::steps_valid(const std::vector<StringStep>& steps, int v0, bool cyclic) const {
    std::vector<int> vs = vertex_seq(steps, v0);
    if (vs.empty() && !steps.empty()) return false;
    if (cyclic && (steps.empty() || vs.back() != v0)) return false;
    const size_t n = steps.size();
    auto adjacent_ok = [&](const StringStep& a, const StringStep& b) {
        // b follows a; forbid immediate backtracking
        return !(a.arrow == b.arrow && a.inverse != b.inverse);
    };
    for (size_t i = 0; i + 1 < n; ++i)
        if (!adjacent_ok(steps[i], steps[i + 1])) return false;
    if (cyclic && n >= 1 && !adjacent_ok(steps[n - 1], steps[0])) return false;
    // maximal same-direction runs must avoid the forbidden words (reading
    // direct runs downward, inverse runs upward)
    auto run_word = [&](size_t from, size_t to, bool inv) {
        Word w;
        if (!inv)
            for (size_t i = to + 1; i-- > from;) w.push_back(steps[i].arrow);
        else
            for (size_t i = from; i <= to; ++i) w.push_back(steps[i].arrow);
        return w;
    };
    auto check_runs = [&](const std::vector<StringStep>& ss) {
        size_t i = 0;
        while (i < ss.size()) {
            size_t j = i;
            while (j + 1 < ss.size() && ss[j + 1].inverse == ss[i].inverse &&
                   adjacent_ok(ss[j], ss[j + 1]))
                ++j;
            Word w;
            if (!ss[i].inverse)
                for (size_t k = j + 1; k-- > i;) w.push_back(ss[k].arrow);
            else
                for (size_t k = i; k <= j; ++k) w.push_back(ss[k].arrow);
            if (!word_allowed(w)) return false;
            i = j + 1;
        }
        return true;
    };
    (void)run_word;
    if (!cyclic) return check_runs(steps);
    // cyclic: check runs on a doubled sequence to catch wrap-around runs
    std::vector<StringStep> doubled = steps;
    doubled.insert(doubled.end(), steps.begin(), steps.end());
    size_t i = 0;
    while (i < n) {
        size_t j = i;
        while (j + 1 < 2 * n && doubled[j + 1].inverse == doubled[i].inverse && j + 1 - i < n)
            ++j;
        Word w;
        if (!doubled[i].inverse)
            for (size_t k = j + 1; k-- > i;) w.push_back(doubled[k].arrow);
        else
            for (size_t k = i; k <= j; ++k) w.push_back(doubled[k].arrow);
        if (!word_allowed(w)) return false;
        i = j + 1;
    }
    return true;
}

StringWord StringAlgebra::inverse_word(const StringWord& w) const {
    StringWord r;
    std::vector<int> vs = vertex_seq(w.steps, w.start_vertex);
    r.start_vertex = vs.empty() ? w.start_vertex : vs.back();
    for (auto it = w.steps.rbegin(); it != w.steps.rend(); ++it)
        r.steps.push_back({it->arrow, !it->inverse});
    return r;
}

std::string StringAlgebra::serialize(const StringWord& w) const {
    const Quiver& q = alg_->quiver();
    if (w.steps.empty()) return "(" + std::to_string(w.start_vertex) + ")";
    std::string s;
    for (const StringStep& st : w.steps) {
        if (!s.empty()) s += " ";
        s += q.arrow(st.arrow).name;
        if (st.inverse) s += "-";
    }
    return s;
}

std::string StringAlgebra::serialize(const BandWord& b) const {
    StringWord w{b.start_vertex, b.steps};
    return "band[" + serialize(w) + "]";
}

StringWord StringAlgebra::canonical(const StringWord& w) const {
    StringWord inv = inverse_word(w);
    return serialize(w) <= serialize(inv) ? w : inv;
}

std::vector<int> StringAlgebra::vertices_of(const StringWord& w) const {
    return vertex_seq(w.steps, w.start_vertex);
}

std::vector<StringWord> StringAlgebra::enumerate_strings(int maxlen) const {
    const Quiver& q = alg_->quiver();
    std::vector<StringWord> out;
    std::set<std::string> seen;
    std::vector<StringWord> frontier;
    for (int v = 0; v < q.nverts; ++v) {
        StringWord t{v, {}};
        out.push_back(t);
        seen.insert(serialize(canonical(t)));
        frontier.push_back(t);
    }
    for (int len = 1; len <= maxlen; ++len) {
        std::vector<StringWord> next;
        for (const StringWord& w : frontier) {
            std::vector<int> vs = vertex_seq(w.steps, w.start_vertex);
            int tail = vs.back();
            for (int ai = 0; ai < q.narrows(); ++ai)
                for (bool inv : {false, true}) {
                    const Arrow& ar = q.arrow(ai);
                    int need_prev = inv ? ar.src : ar.dst;
                    if (tail != need_prev) continue;
                    StringWord x = w;
                    x.steps.push_back({static_cast<std::uint8_t>(ai), inv});
                    if (!steps_valid(x.steps, x.start_vertex, false)) continue;
                    std::string key = serialize(canonical(x));
                    if (!seen.insert(key).second) continue;
                    out.push_back(canonical(x));
                    // keep both orientations so left-extensions are reached
                    next.push_back(x);
                    next.push_back(inverse_word(x));
                }
        }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), [&](const StringWord& a, const StringWord& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return serialize(a) < serialize(b);
    });
    return out;
}

std::vector<BandWord> StringAlgebra::enumerate_bands(int maxlen) const {
    const Quiver& q = alg_->quiver();
    std::vector<BandWord> out;
    std::set<std::string> seen;
    // depth-first over step sequences; canonical form kills rotations and
    // inversions
    std::function<void(BandWord&)> dfs = [&](BandWord& b) {
        if (static_cast<int>(b.steps.size()) > maxlen) return;
        if (b.steps.size() >= 2 && steps_valid(b.steps, b.start_vertex, true)) {
            bool has_dir = false, has_inv = false;
            for (const StringStep& s : b.steps) (s.inverse ? has_inv : has_dir) = true;
            if (has_dir && has_inv) {
                // primitive: no proper cyclic period
                const size_t n = b.steps.size();
                bool primitive = true;
                for (size_t p = 1; p < n && primitive; ++p) {
                    if (n % p != 0) continue;
                    bool periodic = true;
                    for (size_t i = 0; i < n && periodic; ++i)
                        periodic = b.steps[i] == b.steps[(i + p) % n];
                    if (periodic) primitive = false;
                }
                if (primitive) {
                    // canonical over all rotations of the word and its inverse
                    std::string best;
                    std::vector<int> vs = vertex_seq(b.steps, b.start_vertex);
                    for (size_t r = 0; r < n; ++r) {
                        StringWord rot;
                        rot.start_vertex = vs[r];
                        for (size_t i = 0; i < n; ++i) rot.steps.push_back(b.steps[(r + i) % n]);
                        for (const StringWord* cand : {&rot}) {
                            std::string s1 = serialize(*cand);
                            std::string s2 = serialize(inverse_word(*cand));
                            if (best.empty() || s1 < best) best = s1;
                            if (s2 < best) best = s2;
                        }
                    }
                    if (seen.insert(best).second) out.push_back(b);
                }
            }
        }
        if (static_cast<int>(b.steps.size()) == maxlen) return;
        std::vector<int> vs = vertex_seq(b.steps, b.start_vertex);
        int tail = vs.empty() ? b.start_vertex : vs.back();
        for (int ai = 0; ai < q.narrows(); ++ai)
            for (bool inv : {false, true}) {
                const Arrow& ar = q.arrow(ai);
                if (tail != (inv ? ar.src : ar.dst)) continue;
                b.steps.push_back({static_cast<std::uint8_t>(ai), inv});
                if (steps_valid(b.steps, b.start_vertex, false)) dfs(b);
                b.steps.pop_back();
            }
    };
    for (int v = 0; v < q.nverts; ++v) {
        BandWord b;
        b.start_vertex = v;
        dfs(b);
    }
    std::sort(out.begin(), out.end(), [&](const BandWord& a, const BandWord& c) {
        if (a.steps.size() != c.steps.size()) return a.steps.size() < c.steps.size();
        return serialize(a) < serialize(c);
    });
    return out;
}

Rep StringAlgebra::string_module(const StringWord& w) const {
    const Algebra& a = *alg_;
    const Quiver& q = a.quiver();
    const int e = a.field_exponent();
    std::vector<int> vs = vertex_seq(w.steps, w.start_vertex);
    if (vs.empty() && !w.steps.empty()) throw Error("invalid string word");
    const int n = static_cast<int>(w.steps.size());
    Rep m;
    m.alg = &a;
    m.dims.assign(static_cast<size_t>(q.nverts), 0);
    std::vector<int> pos(static_cast<size_t>(n) + 1, 0);
    for (int i = 0; i <= n; ++i) pos[static_cast<size_t>(i)] = m.dims[static_cast<size_t>(vs[static_cast<size_t>(i)])]++;
    for (int ai = 0; ai < q.narrows(); ++ai) {
        const Arrow& ar = q.arrow(ai);
        m.act.push_back(Mat(m.dims[static_cast<size_t>(ar.dst)], m.dims[static_cast<size_t>(ar.src)], e));
    }
    for (int i = 1; i <= n; ++i) {
        const StringStep& s = w.steps[static_cast<size_t>(i - 1)];
        Mat& mat = m.act[s.arrow];
        if (!s.inverse)
            mat.set(pos[static_cast<size_t>(i - 1)], pos[static_cast<size_t>(i)], 1u);
        else
            mat.set(pos[static_cast<size_t>(i)], pos[static_cast<size_t>(i - 1)], 1u);
    }
    validate_rep(m);
    return m;
}

Rep StringAlgebra::band_module(const BandWord& b, Gf lambda) const {
    const Algebra& a = *alg_;
    const Quiver& q = a.quiver();
    const int e = a.field_exponent();
    if (lambda.is_zero()) throw Error("band parameter must be nonzero");
    std::vector<int> vs = vertex_seq(b.steps, b.start_vertex);
    const int n = static_cast<int>(b.steps.size());
    if (vs.empty() || vs.back() != b.start_vertex) throw Error("invalid band word");
    Rep m;
    m.alg = &a;
    m.dims.assign(static_cast<size_t>(q.nverts), 0);
    std::vector<int> pos(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) pos[static_cast<size_t>(i)] = m.dims[static_cast<size_t>(vs[static_cast<size_t>(i)])]++;
    for (int ai = 0; ai < q.narrows(); ++ai) {
        const Arrow& ar = q.arrow(ai);
        m.act.push_back(Mat(m.dims[static_cast<size_t>(ar.dst)], m.dims[static_cast<size_t>(ar.src)], e));
    }
    for (int i = 1; i <= n; ++i) {
        const StringStep& s = b.steps[static_cast<size_t>(i - 1)];
        Mat& mat = m.act[s.arrow];
        const int lo = pos[static_cast<size_t>(i - 1)];
        const int hi = pos[static_cast<size_t>(i % n)];
        Gf coeff = (i == n) ? lambda : Gf::one(e);
        if (!s.inverse)
            mat.set(lo, hi, coeff);
        else
            mat.set(hi, lo, coeff);
    }
    validate_rep(m);
    return m;
}

EndKCertificate classify_end_k(const Algebra& a, int maxlen, int band_maxlen) {
    StringAlgebra sa(a);
    EndKCertificate cert;
    cert.string_maxlen = maxlen;
    cert.band_maxlen = band_maxlen;
    for (const StringWord& w : sa.enumerate_strings(maxlen)) {
        Rep m = sa.string_module(w);
        int d = hom(m, m).dim();
        if (d == 1)
            cert.end_k.push_back(m);
        else
            cert.other_strings.emplace_back(sa.serialize(w), d);
    }
    for (const BandWord& b : sa.enumerate_bands(band_maxlen)) {
        Rep m = sa.band_module(b, Gf::one(a.field_exponent()));
        int d = hom(m, m).dim();
        cert.band_witnesses.emplace_back(sa.serialize(b), d);
    }
    return cert;
}

}  // namespace qblock
