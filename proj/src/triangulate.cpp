#include "lenum/triangulate.hpp"

#include <algorithm>
#include <bit>
#include <random>

namespace lenum {

namespace {

// Sign of the determinant of a square rational matrix (Gaussian elimination).
int sign_det(std::vector<std::vector<Rat>> m) {
    const std::size_t k = m.size();
    int sign = 1;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t pivot = c;
        while (pivot < k && m[pivot][c] == 0) ++pivot;
        if (pivot == k) return 0;
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            sign = -sign;
        }
        if (m[c][c] < 0) {
            sign = -sign;
            for (auto& x : m[c]) x = -x;
        }
        for (std::size_t r = c + 1; r < k; ++r) {
            if (m[r][c] == 0) continue;
            Rat factor = m[r][c] / m[c][c];
            for (std::size_t j = c; j < k; ++j) m[r][j] -= factor * m[c][j];
        }
    }
    return sign;
}

// Solves basis * xi = rhs where the columns of `basis` are linearly
// independent. Returns false when rhs is outside their span.
bool solve_affine(const std::vector<std::vector<Int>>& basis_cols, const std::vector<Int>& rhs,
                  std::vector<Rat>& xi) {
    const std::size_t rows = rhs.size();
    const std::size_t cols = basis_cols.size();
    std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols + 1));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) a[r][c] = Rat(basis_cols[c][r]);
        a[r][cols] = Rat(rhs[r]);
    }
    std::vector<std::size_t> pivot_row(cols, SIZE_MAX);
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < rows; ++c) {
        std::size_t p = row;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[row]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || a[r][c] == 0) continue;
            Rat factor = a[r][c] / a[row][c];
            for (std::size_t j = c; j <= cols; ++j) a[r][j] -= factor * a[row][j];
        }
        pivot_row[c] = row;
        ++row;
    }
    for (std::size_t r = row; r < rows; ++r)
        if (a[r][cols] != 0) return false;
    xi.assign(cols, Rat(0));
    for (std::size_t c = 0; c < cols; ++c) {
        if (pivot_row[c] == SIZE_MAX) throw InternalError("affine basis not independent");
        xi[c] = a[pivot_row[c]][cols] / a[pivot_row[c]][c];
    }
    return true;
}

}  // namespace

OrderMap::OrderMap(const VertexOrder& spec, const std::vector<ExponentVector>& vertices) {
    std::vector<ExponentVector> pts = vertices;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    switch (spec.kind) {
        case VertexOrder::Kind::Lex:
            break;
        case VertexOrder::Kind::Seeded: {
            std::mt19937_64 rng(spec.seed);
            std::shuffle(pts.begin(), pts.end(), rng);
            break;
        }
        case VertexOrder::Kind::Explicit: {
            std::vector<ExponentVector> ordered;
            for (const auto& p : spec.listed) {
                auto it = std::find(pts.begin(), pts.end(), p);
                if (it == pts.end()) continue;
                ordered.push_back(p);
                pts.erase(it);
            }
            ordered.insert(ordered.end(), pts.begin(), pts.end());
            pts = std::move(ordered);
            break;
        }
    }
    for (std::size_t i = 0; i < pts.size(); ++i) rank_.emplace(pts[i], i);
}

bool OrderMap::less(const ExponentVector& a, const ExponentVector& b) const {
    auto ia = rank_.find(a), ib = rank_.find(b);
    if (ia != rank_.end() && ib != rank_.end()) return ia->second < ib->second;
    if (ia != rank_.end()) return true;
    if (ib != rank_.end()) return false;
    return a < b;
}

std::vector<std::vector<int>> placing_triangulation(const std::vector<ExponentVector>& pts) {
    const std::size_t count = pts.size();
    if (count == 0) return {};

    // Project onto a coordinate subset on which the affine hull embeds, so
    // all the orientation tests below run in full-dimensional coordinates.
    std::vector<std::vector<Int>> q(count);
    {
        std::vector<std::vector<Int>> diffs;
        for (std::size_t i = 1; i < count; ++i) {
            std::vector<Int> row;
            for (std::size_t j = 0; j < pts[0].size(); ++j)
                row.emplace_back(pts[i][j] - pts[0][j]);
            diffs.push_back(std::move(row));
        }
        std::vector<std::size_t> chosen;
        int rank = 0;
        for (std::size_t c = 0; c < pts[0].size(); ++c) {
            auto trial = chosen;
            trial.push_back(c);
            std::vector<std::vector<Int>> sub;
            for (const auto& row : diffs) {
                std::vector<Int> r;
                for (auto cc : trial) r.push_back(row[cc]);
                sub.push_back(std::move(r));
            }
            int nr = rank_int(std::move(sub));
            if (nr > rank) {
                rank = nr;
                chosen = trial;
            }
        }
        for (std::size_t i = 0; i < count; ++i) {
            for (auto c : chosen) q[i].emplace_back(pts[i][c]);
            if (chosen.empty()) q[i].emplace_back(0);  // all points equal: 0-dim
        }
    }

    std::vector<std::vector<int>> simplices;       // maximal simplices, sorted index lists
    std::vector<int> basis;                        // indices of dim-raising points
    std::vector<std::vector<Rat>> xi(count);       // intrinsic coordinates per inserted point

    for (std::size_t t = 0; t < count; ++t) {
        if (t == 0) {
            simplices.push_back({0});
            basis.push_back(0);
            continue;
        }
        std::vector<std::vector<Int>> basis_cols;
        for (std::size_t b = 1; b < basis.size(); ++b) {
            std::vector<Int> col;
            for (std::size_t r = 0; r < q[t].size(); ++r)
                col.emplace_back(q[basis[b]][r] - q[basis[0]][r]);
            basis_cols.push_back(std::move(col));
        }
        std::vector<Int> rhs;
        for (std::size_t r = 0; r < q[t].size(); ++r)
            rhs.emplace_back(q[t][r] - q[basis[0]][r]);

        std::vector<Rat> coords;
        if (!solve_affine(basis_cols, rhs, coords)) {
            // Affine dimension grows: cone the whole triangulation to t.
            for (std::size_t i = 0; i < t; ++i) xi[i].emplace_back(0);
            xi[t].assign(basis.size() - 1, Rat(0));
            xi[t].emplace_back(1);
            basis.push_back(static_cast<int>(t));
            for (auto& s : simplices) s.push_back(static_cast<int>(t));
            continue;
        }
        xi[t] = std::move(coords);

        const std::size_t k = basis.size() - 1;  // current affine dimension
        // Boundary (k-1)-subfaces appear in exactly one maximal simplex.
        std::map<std::vector<int>, std::pair<int, int>> boundary;  // face -> (count, opposite)
        for (const auto& s : simplices) {
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                std::vector<int> face;
                for (std::size_t j = 0; j < s.size(); ++j)
                    if (j != drop) face.push_back(s[j]);
                auto [it, inserted] = boundary.emplace(face, std::make_pair(1, s[drop]));
                if (!inserted) ++it->second.first;
            }
        }
        std::vector<std::vector<int>> fresh;
        for (const auto& [face, info] : boundary) {
            if (info.first != 1) continue;
            auto orient = [&](int x) {
                std::vector<std::vector<Rat>> m;
                for (std::size_t j = 1; j < face.size(); ++j) {
                    std::vector<Rat> row(k);
                    for (std::size_t c = 0; c < k; ++c)
                        row[c] = xi[face[j]][c] - xi[face[0]][c];
                    m.push_back(std::move(row));
                }
                std::vector<Rat> row(k);
                for (std::size_t c = 0; c < k; ++c) row[c] = xi[x][c] - xi[face[0]][c];
                m.push_back(std::move(row));
                return sign_det(std::move(m));
            };
            int side_new = orient(static_cast<int>(t));
            if (side_new == 0) continue;  // coplanar: not strictly visible
            int side_old = orient(info.second);
            if (side_old == 0) throw InternalError("degenerate simplex in triangulation");
            if (side_new != -side_old) continue;
            std::vector<int> s = face;
            s.push_back(static_cast<int>(t));
            std::sort(s.begin(), s.end());
            fresh.push_back(std::move(s));
        }
        if (fresh.empty())
            throw InternalError("placing triangulation: inserted point sees no boundary face");
        simplices.insert(simplices.end(), fresh.begin(), fresh.end());
    }
    std::sort(simplices.begin(), simplices.end());
    return simplices;
}

ConeDecomposition triangulate_cone(const NewtonDiagram& diagram, std::uint32_t I,
                                   const OrderMap& order) {
    if (I == 0) throw InvalidInput("index set must be non-empty");
    const NewtonDiagram restricted =
        diagram.coords() == I ? diagram : diagram.restrict_to(I & diagram.coords());

    ConeDecomposition xi;
    xi.n = diagram.nvars();
    xi.coords = I;
    if (restricted.empty()) return xi;

    for (auto fid : restricted.maximal()) {
        const Face& face = restricted.face_at(fid);
        std::vector<ExponentVector> pts;
        for (auto vid : face.verts) pts.push_back(restricted.vertex(vid));
        std::sort(pts.begin(), pts.end(),
                  [&](const ExponentVector& a, const ExponentVector& b) { return order.less(a, b); });
        for (const auto& s : placing_triangulation(pts)) {
            if (static_cast<int>(s.size()) != face.dim + 1)
                throw InternalError("face triangulation produced a wrong-dimensional simplex");
            Simplex simplex;
            simplex.coords = I;
            for (int idx : s) simplex.verts.push_back(pts[idx]);
            std::sort(simplex.verts.begin(), simplex.verts.end());
            xi.simplices.push_back(std::move(simplex));
        }
    }
    std::sort(xi.simplices.begin(), xi.simplices.end(),
              [](const Simplex& a, const Simplex& b) { return a.verts < b.verts; });

    const int full = std::popcount(I);
    for (const auto& s : xi.simplices) {
        if (s.dim() == full && simplex_volume(s) == 0)
            throw InternalError("degenerate maximal simplex in cone decomposition");
    }
    return xi;
}

Rat simplex_volume(const Simplex& S) {
    const int k = std::popcount(S.coords);
    if (S.dim() != k) return Rat(0);
    std::vector<int> axes;
    for (int i = 0; i < 32; ++i)
        if ((S.coords >> i) & 1) axes.push_back(i);
    std::vector<std::vector<Int>> m(k, std::vector<Int>(k));
    for (int c = 0; c < k; ++c)
        for (int r = 0; r < k; ++r) m[r][c] = S.verts[c][axes[r]];
    Int d = det_bareiss(std::move(m));
    if (d < 0) d = -d;
    Rat vol(d, factorial(k));
    vol.canonicalize();
    return vol;
}

Rat cone_volume(const ConeDecomposition& Xi) {
    const int k = std::popcount(Xi.coords);
    Rat total = 0;
    for (const auto& s : Xi.simplices)
        if (s.dim() == k) total += simplex_volume(s);
    return total;
}

}  // namespace lenum
