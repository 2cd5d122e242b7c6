#include "lenum/geometry.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace lenum {

namespace {

// Fixed-capacity bitset over constraint/facet indices.
struct Bits {
    std::vector<std::uint64_t> w;

    explicit Bits(std::size_t n = 0) : w((n + 63) / 64, 0) {}
    void set(std::size_t i) { w[i / 64] |= std::uint64_t(1) << (i % 64); }
    bool test(std::size_t i) const { return (w[i / 64] >> (i % 64)) & 1; }

    friend Bits operator&(const Bits& a, const Bits& b) {
        Bits r(64 * a.w.size());
        for (std::size_t i = 0; i < a.w.size(); ++i) r.w[i] = a.w[i] & b.w[i];
        return r;
    }
    bool contains(const Bits& other) const {  // other subset of this
        for (std::size_t i = 0; i < w.size(); ++i)
            if ((other.w[i] & ~w[i]) != 0) return false;
        return true;
    }
    bool operator==(const Bits& other) const { return w == other.w; }
    bool operator<(const Bits& other) const { return w < other.w; }
};

Int dot(const std::vector<Int>& v, const ExponentVector& a) {
    Int s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * a[i];
    return s;
}

Int dot(const std::vector<Int>& v, const std::vector<Int>& a) {
    Int s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * a[i];
    return s;
}

bool strictly_positive(const std::vector<Int>& v, std::uint32_t coords, int n) {
    for (int i = 0; i < n; ++i)
        if ((coords >> i) & 1) {
            if (v[i] <= 0) return false;
        }
    return true;
}

int affine_rank(const std::vector<ExponentVector>& pts) {
    if (pts.size() <= 1) return 0;
    std::vector<std::vector<Int>> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        std::vector<Int> row;
        for (std::size_t j = 0; j < pts[0].size(); ++j)
            row.emplace_back(pts[i][j] - pts[0][j]);
        diffs.push_back(std::move(row));
    }
    return rank_int(std::move(diffs));
}

}  // namespace

std::vector<Halfspace> newton_facets(const std::vector<ExponentVector>& supp, int n) {
    if (supp.empty()) throw InvalidInput("empty support");
    std::vector<ExponentVector> pts = supp;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    const int d = n + 1;
    // Constraint rows of the dual cone: y = (y0, v) with <row, y> >= 0.
    // Order: one support row first, the n axis rays, then the rest; the first
    // d rows are linearly independent and seed the double description run.
    std::vector<std::vector<Int>> rows;
    {
        std::vector<Int> r(d, 0);
        r[0] = 1;
        for (int j = 0; j < n; ++j) r[1 + j] = pts[0][j];
        rows.push_back(r);
    }
    for (int i = 0; i < n; ++i) {
        std::vector<Int> r(d, 0);
        r[1 + i] = 1;
        rows.push_back(r);
    }
    for (std::size_t k = 1; k < pts.size(); ++k) {
        std::vector<Int> r(d, 0);
        r[0] = 1;
        for (int j = 0; j < n; ++j) r[1 + j] = pts[k][j];
        rows.push_back(r);
    }
    const std::size_t m = rows.size();

    struct Ray {
        std::vector<Int> y;
        Bits active;
    };
    std::vector<Ray> rays;

    // Rays of the simplicial cone cut out by the first d rows: the matrix
    // [[1, a0], [0, I]] has the explicit inverse [[1, -a0], [0, I]].
    {
        Ray r0{std::vector<Int>(d, 0), Bits(m)};
        r0.y[0] = 1;
        for (int i = 0; i < n; ++i) r0.active.set(1 + i);
        rays.push_back(std::move(r0));
        for (int j = 0; j < n; ++j) {
            Ray rj{std::vector<Int>(d, 0), Bits(m)};
            rj.y[0] = -Int(pts[0][j]);
            rj.y[1 + j] = 1;
            rj.active.set(0);
            for (int i = 0; i < n; ++i)
                if (i != j) rj.active.set(1 + i);
            rays.push_back(std::move(rj));
        }
    }

    for (std::size_t k = d; k < m; ++k) {
        std::vector<Int> val(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            val[r] = dot(rows[k], rays[r].y);
            if (val[r] > 0) pos.push_back(r);
            else if (val[r] < 0) neg.push_back(r);
        }
        if (neg.empty()) {
            for (std::size_t r = 0; r < rays.size(); ++r)
                if (val[r] == 0) rays[r].active.set(k);
            continue;
        }
        std::vector<Ray> next;
        for (std::size_t r = 0; r < rays.size(); ++r)
            if (val[r] >= 0) {
                if (val[r] == 0) rays[r].active.set(k);
                next.push_back(rays[r]);
            }
        for (std::size_t p : pos) {
            for (std::size_t q : neg) {
                Bits common = rays[p].active & rays[q].active;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
                    if (r != p && r != q && rays[r].active.contains(common)) adjacent = false;
                if (!adjacent) continue;
                Ray nr{std::vector<Int>(d), common};
                for (int i = 0; i < d; ++i)
                    nr.y[i] = val[p] * rays[q].y[i] - val[q] * rays[p].y[i];
                make_primitive(nr.y);
                nr.active.set(k);
                next.push_back(std::move(nr));
            }
        }
        rays = std::move(next);
    }

    std::vector<Halfspace> facets;
    for (const auto& r : rays) {
        std::vector<Int> v(r.y.begin() + 1, r.y.end());
        bool zero = std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
        if (zero) continue;  // the t >= 0 facet at infinity
        facets.push_back(Halfspace{std::move(v), Int(-r.y[0])});
    }
    std::sort(facets.begin(), facets.end(), [](const Halfspace& a, const Halfspace& b) {
        return a.normal != b.normal ? lex_less(a.normal, b.normal) : a.level < b.level;
    });
    facets.erase(std::unique(facets.begin(), facets.end(),
                             [](const Halfspace& a, const Halfspace& b) {
                                 return a.normal == b.normal && a.level == b.level;
                             }),
                 facets.end());

    for (const auto& h : facets) {
        bool tight = false;
        for (const auto& a : pts) {
            Int s = dot(h.normal, a);
            if (s < h.level) throw InternalError("facet cuts off a support point");
            if (s == h.level) tight = true;
        }
        if (!tight) throw InternalError("facet not supported by any point");
    }
    return facets;
}

NewtonDiagram NewtonDiagram::build(std::vector<ExponentVector> supp, int n) {
    std::sort(supp.begin(), supp.end());
    supp.erase(std::unique(supp.begin(), supp.end()), supp.end());

    const auto facets = newton_facets(supp, n);
    const std::size_t m = facets.size();

    auto tight_set = [&](const ExponentVector& a) {
        Bits b(m);
        for (std::size_t j = 0; j < m; ++j)
            if (dot(facets[j].normal, a) == facets[j].level) b.set(j);
        return b;
    };
    auto cone_sum = [&](const Bits& J) {
        std::vector<Int> w(n, 0);
        for (std::size_t j = 0; j < m; ++j)
            if (J.test(j))
                for (int i = 0; i < n; ++i) w[i] += facets[j].normal[i];
        return w;
    };

    std::vector<Bits> supp_tight;
    supp_tight.reserve(supp.size());
    for (const auto& a : supp) supp_tight.push_back(tight_set(a));

    NewtonDiagram dia;
    dia.n_ = n;
    dia.coords_ = n == 32 ? ~0u : (1u << n) - 1;

    // A support point is a diagram vertex iff its facet set certifies a
    // compact face (strictly positive normal-cone sum) that no other support
    // point shares or enlarges.
    std::vector<Bits> vert_tight;
    for (std::size_t i = 0; i < supp.size(); ++i) {
        std::vector<Int> w = cone_sum(supp_tight[i]);
        if (!strictly_positive(w, dia.coords_, n)) continue;
        bool minimal = true;
        for (std::size_t j = 0; j < supp.size() && minimal; ++j)
            if (j != i && supp_tight[j].contains(supp_tight[i])) {
                // another point lies on all facets through i: i is not extreme
                minimal = false;
            }
        if (!minimal) continue;
        dia.vertices_.push_back(supp[i]);
        vert_tight.push_back(supp_tight[i]);
    }
    if (dia.vertices_.empty()) throw InternalError("polyhedron without vertices");

    // Join-closure of vertex sets: every compact face is the join of its
    // 0-dimensional faces, and a join is compact iff the summed normal cone
    // stays strictly positive.
    struct Entry {
        std::vector<std::int32_t> verts;
        std::vector<Int> normal;
    };
    std::map<Bits, Entry> by_key;
    std::queue<Bits> work;
    auto insert_face = [&](const Bits& J) -> bool {
        if (by_key.count(J)) return false;
        std::vector<Int> w = cone_sum(J);
        if (!strictly_positive(w, dia.coords_, n)) return false;
        Entry e;
        for (std::size_t i = 0; i < vert_tight.size(); ++i)
            if (vert_tight[i].contains(J)) e.verts.push_back(static_cast<std::int32_t>(i));
        make_primitive(w);
        e.normal = std::move(w);
        by_key.emplace(J, std::move(e));
        work.push(J);
        return true;
    };
    for (const auto& jt : vert_tight) insert_face(jt);
    while (!work.empty()) {
        Bits J = work.front();
        work.pop();
        for (const auto& jt : vert_tight) insert_face(J & jt);
    }

    for (auto& [key, e] : by_key) {
        Face f;
        f.verts = e.verts;
        f.normal = e.normal;
        f.level = Rat(dot(f.normal, dia.vertices_[f.verts.front()]));
        std::vector<ExponentVector> pts;
        for (auto id : f.verts) pts.push_back(dia.vertices_[id]);
        f.dim = affine_rank(pts);
        dia.faces_.push_back(std::move(f));
    }
    std::sort(dia.faces_.begin(), dia.faces_.end(), [](const Face& a, const Face& b) {
        return a.dim != b.dim ? a.dim < b.dim : a.verts < b.verts;
    });

    for (std::size_t i = 0; i < dia.faces_.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < dia.faces_.size() && maximal; ++j) {
            if (i == j) continue;
            if (std::includes(dia.faces_[j].verts.begin(), dia.faces_[j].verts.end(),
                              dia.faces_[i].verts.begin(), dia.faces_[i].verts.end()) &&
                dia.faces_[j].verts.size() > dia.faces_[i].verts.size())
                maximal = false;
        }
        if (maximal) dia.maximal_.push_back(static_cast<std::int32_t>(i));
    }
    return dia;
}

NewtonDiagram NewtonDiagram::restrict_to(std::uint32_t mask) const {
    if ((mask & ~coords_) != 0) throw InvalidInput("restriction outside active coordinates");
    NewtonDiagram out;
    out.n_ = n_;
    out.coords_ = mask;

    std::vector<std::int32_t> remap(vertices_.size(), -1);
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if ((support_mask(vertices_[i]) & ~mask) == 0) {
            remap[i] = static_cast<std::int32_t>(out.vertices_.size());
            out.vertices_.push_back(vertices_[i]);
        }
    }
    for (const auto& f : faces_) {
        bool inside = std::all_of(f.verts.begin(), f.verts.end(),
                                  [&](std::int32_t v) { return remap[v] >= 0; });
        if (!inside) continue;
        Face nf = f;
        for (auto& v : nf.verts) v = remap[v];
        out.faces_.push_back(std::move(nf));
    }
    for (std::size_t i = 0; i < out.faces_.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < out.faces_.size() && maximal; ++j) {
            if (i == j) continue;
            if (std::includes(out.faces_[j].verts.begin(), out.faces_[j].verts.end(),
                              out.faces_[i].verts.begin(), out.faces_[i].verts.end()) &&
                out.faces_[j].verts.size() > out.faces_[i].verts.size())
                maximal = false;
        }
        if (maximal) out.maximal_.push_back(static_cast<std::int32_t>(i));
    }
    return out;
}

bool NewtonDiagram::meets_axis(int i) const {
    for (const auto& v : vertices_)
        if (on_axis(v, i)) return true;
    return false;
}

bool NewtonDiagram::same_faces(const NewtonDiagram& other) const {
    if (n_ != other.n_ || vertices_ != other.vertices_) return false;
    if (faces_.size() != other.faces_.size()) return false;
    for (std::size_t i = 0; i < faces_.size(); ++i)
        if (faces_[i].verts != other.faces_[i].verts) return false;
    return true;
}

NewtonDiagram compact_faces(const Polynomial& f) {
    return NewtonDiagram::build(f.support(), f.nvars());
}

SupportData support_data(const Polynomial& f, const NewtonDiagram& diagram,
                         const std::vector<Rat>& v) {
    if (static_cast<int>(v.size()) != f.nvars())
        throw InvalidInput("direction length does not match variable count");
    Int scale = 1;
    for (const auto& q : v) {
        if (q <= 0) throw InvalidInput("direction must be strictly positive");
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den().get_mpz_t());
    }
    std::vector<Int> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        w[i] = v[i].get_num() * (scale / v[i].get_den());

    bool first = true;
    Int best = 0;
    for (const auto& [e, c] : f.terms()) {
        Int s = dot(w, e);
        if (first || s < best) best = s, first = false;
    }
    std::vector<std::int32_t> arg;
    for (std::size_t i = 0; i < diagram.vertices().size(); ++i)
        if (dot(w, diagram.vertices()[i]) == best) arg.push_back(static_cast<std::int32_t>(i));

    for (const auto& face : diagram.faces())
        if (face.verts == arg) {
            Rat level(best, scale);
            level.canonicalize();
            return SupportData{std::move(level), face};
        }
    throw InternalError("support minimizers do not close up to a diagram face");
}

SupportData support_data(const Polynomial& f, const std::vector<Rat>& v) {
    return support_data(f, compact_faces(f), v);
}

std::vector<std::optional<std::int64_t>> axis_intercepts(const Polynomial& f) {
    std::vector<std::optional<std::int64_t>> out(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        for (int i = 1; i <= f.nvars(); ++i) {
            if (!on_axis(e, i)) continue;
            if (!out[i - 1] || e[i - 1] < *out[i - 1]) out[i - 1] = e[i - 1];
        }
    }
    return out;
}

Convenience is_convenient(const Polynomial& f) {
    Convenience c;
    auto axes = axis_intercepts(f);
    for (int i = 1; i <= f.nvars(); ++i)
        if (!axes[i - 1]) c.missing.insert(i);
    c.convenient = c.missing.empty();
    return c;
}

Rat m_bound(const NewtonDiagram& diagram) {
    if (diagram.empty()) throw InvalidInput("diagram has no compact face");
    Rat best = 0;
    for (auto id : diagram.maximal()) {
        const Face& f = diagram.face_at(id);
        for (int i = 0; i < diagram.nvars(); ++i) {
            Rat w = f.level / Rat(f.normal[i]);
            if (w > best) best = w;
        }
    }
    return best;
}

Rat m_bound(const Polynomial& f) { return m_bound(compact_faces(f)); }

Polynomial face_function(const Polynomial& f, const Face& face) {
    if (static_cast<int>(face.normal.size()) != f.nvars())
        throw InvalidInput("face does not belong to the diagram of f");
    bool first = true;
    Int best = 0;
    for (const auto& [e, c] : f.terms()) {
        Int s = dot(face.normal, e);
        if (first || s < best) best = s, first = false;
    }
    if (Rat(best) != face.level)
        throw InvalidInput("face does not belong to the diagram of f");
    Polynomial::TermMap terms;
    for (const auto& [e, c] : f.terms())
        if (Rat(dot(face.normal, e)) == face.level) terms.emplace(e, c);
    return Polynomial(f.nvars(), std::move(terms));
}

}  // namespace lenum
