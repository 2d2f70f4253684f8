#include "satkit/latcone.hpp"

#include <algorithm>
#include <numeric>

namespace satkit {

long pairing(const LatticeVector& m, const LatticeVector& n) {
    if (m.size() != n.size()) {
        throw DimensionMismatch("pairing vectors of dimension " + std::to_string(m.size()) + " and " +
                                std::to_string(n.size()));
    }
    long s = 0;
    for (std::size_t i = 0; i < m.size(); ++i) s += m[i] * n[i];
    return s;
}

// ---------------------------------------------------------------- integer matrices

IntMatrix to_int_matrix(const std::vector<LatticeVector>& rows) {
    IntMatrix out;
    for (const auto& r : rows) {
        std::vector<Integer> row;
        for (long x : r) row.emplace_back(x);
        out.push_back(std::move(row));
    }
    return out;
}

namespace {

bool row_is_zero(const std::vector<Integer>& row, std::size_t from, std::size_t to) {
    for (std::size_t j = from; j < to; ++j) {
        if (row[j] != 0) return false;
    }
    return true;
}

// Unimodular row operations putting columns [0, ncols) into echelon form.
// Returns the number of pivot rows; pivots are positive.
std::size_t echelon(IntMatrix& rows, std::size_t ncols) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            if (rows[r][c] == 0) {
                std::swap(rows[r], rows[i]);
                continue;
            }
            const Integer a = rows[r][c];
            const Integer b = rows[i][c];
            Integer g, x, y;
            mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            const Integer ag = a / g;
            const Integer bg = b / g;
            for (std::size_t j = 0; j < rows[r].size(); ++j) {
                const Integer top = x * rows[r][j] + y * rows[i][j];
                const Integer bottom = ag * rows[i][j] - bg * rows[r][j];
                rows[r][j] = top;
                rows[i][j] = bottom;
            }
        }
        if (rows[r][c] == 0) continue;
        if (rows[r][c] < 0) {
            for (auto& x : rows[r]) x = -x;
        }
        ++r;
    }
    return r;
}

using RatMatrix = std::vector<std::vector<Rational>>;

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix out;
    for (const auto& row : m) {
        std::vector<Rational> r;
        for (const auto& x : row) r.emplace_back(x);
        out.push_back(std::move(r));
    }
    return out;
}

// Gauss-Jordan on an augmented matrix; returns pivot columns among the first
// `ncols` columns.
std::vector<std::size_t> gauss_jordan(RatMatrix& m, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[r], m[p]);
        const Rational inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

IntMatrix hermite_normal_form(IntMatrix rows) {
    if (rows.empty()) return rows;
    const std::size_t ncols = rows.front().size();
    const std::size_t rank = echelon(rows, ncols);
    rows.resize(rank);
    // Reduce entries above each pivot into [0, pivot).
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::size_t c = 0;
        while (rows[r][c] == 0) ++c;
        const Integer pivot = rows[r][c];
        for (std::size_t i = 0; i < r; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), pivot.get_mpz_t());
            if (q == 0) continue;
            for (std::size_t j = 0; j < ncols; ++j) rows[i][j] -= q * rows[r][j];
        }
    }
    return rows;
}

int matrix_rank(const IntMatrix& rows) { return static_cast<int>(hermite_normal_form(rows).size()); }

IntMatrix integer_kernel(const IntMatrix& a, int cols) {
    // Rows of the work matrix are (column k of A | e_k); unimodular row
    // operations that clear the A-part leave kernel vectors behind.
    const std::size_t m = a.size();
    const auto n = static_cast<std::size_t>(cols);
    IntMatrix work(n, std::vector<Integer>(m + n));
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < m; ++i) {
            if (a[i].size() != n) throw DimensionMismatch("kernel of a matrix with ragged rows");
            work[k][i] = a[i][k];
        }
        work[k][m + k] = 1;
    }
    const std::size_t pivots = echelon(work, m);
    IntMatrix kernel;
    for (std::size_t k = pivots; k < n; ++k) {
        if (!row_is_zero(work[k], 0, m)) throw DomainError("integer kernel elimination did not terminate");
        kernel.emplace_back(work[k].begin() + static_cast<long>(m), work[k].end());
    }
    return hermite_normal_form(kernel);
}

std::vector<Integer> solve_in_basis(const IntMatrix& basis, const std::vector<Integer>& v) {
    const std::size_t k = basis.size();
    const std::size_t dim = v.size();
    // Columns are the basis vectors, augmented with v.
    RatMatrix m(dim, std::vector<Rational>(k + 1));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            if (basis[j].size() != dim) throw DimensionMismatch("basis vector of wrong dimension");
            m[i][j] = basis[j][i];
        }
        m[i][k] = v[i];
    }
    const auto pivots = gauss_jordan(m, k);
    if (pivots.size() != k) throw DomainError("basis is linearly dependent");
    for (std::size_t i = k; i < dim; ++i) {
        if (m[i][k] != 0) throw DomainError("vector does not lie in the span of the basis");
    }
    std::vector<Integer> x(k);
    for (std::size_t r = 0; r < k; ++r) {
        const Rational& q = m[r][k];
        if (q.get_den() != 1) throw DomainError("vector lies in the span but not in the lattice");
        x[pivots[r]] = q.get_num();
    }
    return x;
}

bool is_primitive(const LatticeVector& v) {
    long g = 0;
    for (long x : v) g = std::gcd(g, x);
    return g == 1;
}

// ---------------------------------------------------------------- cones

ValuationCone::ValuationCone(int rank, std::vector<LatticeVector> spherical_roots)
    : rank_(rank), roots_(std::move(spherical_roots)) {
    if (rank_ < 0) throw InvalidCone("negative lattice rank");
    if (static_cast<int>(roots_.size()) > rank_) {
        throw InvalidCone(std::to_string(roots_.size()) + " spherical roots in a lattice of rank " +
                          std::to_string(rank_));
    }
    for (std::size_t i = 0; i < roots_.size(); ++i) {
        if (static_cast<int>(roots_[i].size()) != rank_) {
            throw InvalidCone("spherical root " + std::to_string(i + 1) + " has dimension " +
                              std::to_string(roots_[i].size()) + ", expected " + std::to_string(rank_));
        }
        if (!is_primitive(roots_[i])) throw InvalidCone("spherical root " + std::to_string(i + 1) + " is not primitive");
    }
    if (matrix_rank(to_int_matrix(roots_)) != static_cast<int>(roots_.size())) {
        throw InvalidCone("spherical roots are linearly dependent");
    }
}

const LatticeVector& ValuationCone::root(int index) const {
    if (index < 1 || index > root_count()) throw BadSubset("no spherical root with index " + std::to_string(index));
    return roots_[static_cast<std::size_t>(index - 1)];
}

void ValuationCone::check_dimension(const LatticeVector& v) const {
    if (static_cast<int>(v.size()) != rank_) {
        throw DimensionMismatch("vector of dimension " + std::to_string(v.size()) + " in a lattice of rank " +
                                std::to_string(rank_));
    }
}

bool ValuationCone::contains(const LatticeVector& v) const {
    check_dimension(v);
    return std::all_of(roots_.begin(), roots_.end(), [&](const LatticeVector& s) { return pairing(s, v) <= 0; });
}

IndexSet ValuationCone::i_of_v(const LatticeVector& v) const {
    if (!contains(v)) throw NotInCone("vector lies outside the valuation cone");
    IndexSet out;
    for (std::size_t i = 0; i < roots_.size(); ++i) {
        if (pairing(roots_[i], v) == 0) out.insert(static_cast<int>(i + 1));
    }
    return out;
}

bool ValuationCone::is_wonderful() const {
    if (root_count() != rank_) return false;
    RatMatrix m = to_rational(to_int_matrix(roots_));
    Rational det = 1;
    for (std::size_t c = 0; c < m.size(); ++c) {
        std::size_t p = c;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) return false;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t i = c + 1; i < m.size(); ++i) {
            const Rational f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < m.size(); ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det == 1 || det == -1;
}

std::vector<LatticeVector> ValuationCone::wonderful_generators() const {
    if (!is_wonderful()) {
        throw NotWonderful("spherical roots do not form a basis of M (" + std::to_string(root_count()) +
                           " roots, rank " + std::to_string(rank_) + ", or index > 1)");
    }
    const auto r = static_cast<std::size_t>(rank_);
    RatMatrix m(r, std::vector<Rational>(2 * r));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) m[i][j] = roots_[i][j];
        m[i][r + i] = 1;
    }
    gauss_jordan(m, r);
    // Columns of S^{-1}, negated.
    std::vector<LatticeVector> gens(r, LatticeVector(r));
    for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t i = 0; i < r; ++i) {
            const Rational q = -m[i][r + j];
            gens[j][i] = q.get_num().get_si();
        }
    }
    return gens;
}

bool ConeFace::contains(const ValuationCone& cone, const LatticeVector& v) const {
    if (!cone.contains(v)) return false;
    return std::all_of(subset.begin(), subset.end(), [&](int i) { return pairing(cone.root(i), v) == 0; });
}

bool ConeFace::in_relative_interior(const ValuationCone& cone, const LatticeVector& v) const {
    return cone.contains(v) && cone.i_of_v(v) == subset;
}

std::vector<ConeFace> enumerate_faces(const ValuationCone& cone) {
    const int k = cone.root_count();
    std::vector<ConeFace> faces;
    for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
        ConeFace f;
        for (int i = 0; i < k; ++i) {
            if (mask & (1ul << i)) f.subset.insert(i + 1);
        }
        faces.push_back(std::move(f));
    }
    std::sort(faces.begin(), faces.end(), [](const ConeFace& a, const ConeFace& b) {
        if (a.subset.size() != b.subset.size()) return a.subset.size() < b.subset.size();
        return a.subset < b.subset;
    });
    return faces;
}

std::string subset_str(const IndexSet& s) {
    std::string out = "{";
    for (int i : s) {
        if (out.size() > 1) out += ",";
        out += std::to_string(i);
    }
    return out + "}";
}

KappaFunctional wonderful_kappa(const ValuationCone& cone) {
    if (!cone.is_wonderful()) throw NotWonderful("kappa is only defined when the spherical roots form a basis of M");
    LatticeVector m(static_cast<std::size_t>(cone.rank()), 0);
    for (const auto& s : cone.spherical_roots()) {
        for (std::size_t i = 0; i < m.size(); ++i) m[i] += s[i];
    }
    return {m};
}

TruncSeries relint_lattice_points(const ValuationCone& cone, const ConeFace& face, const KappaFunctional& kappa,
                                  int depth) {
    if (depth < 1) throw DomainError("depth must be at least 1");
    const auto gens = cone.wonderful_generators();
    std::vector<std::size_t> free;
    std::vector<long> weights;
    for (std::size_t j = 0; j < gens.size(); ++j) {
        if (face.subset.count(static_cast<int>(j + 1))) continue;
        const long w = kappa(gens[j]);
        if (w >= 0) {
            throw DomainError("kappa is not negative on generator " + std::to_string(j + 1) +
                              "; the lattice-point sum would not converge");
        }
        free.push_back(j);
        weights.push_back(w);
    }

    TruncSeries out(SeriesVar::TInverse, depth);
    std::vector<long> l(free.size(), 0);
    LatticeVector v(static_cast<std::size_t>(cone.rank()), 0);
    // Depth-first over l_j >= 1 for free j, pruned by kappa(v) >= -depth.
    auto visit = [&](auto&& self, std::size_t pos, long kval) -> void {
        if (pos == free.size()) {
            if (!face.in_relative_interior(cone, v)) throw DomainError("enumerated point left the relative interior");
            out.set(static_cast<int>(-kval), out.coeff(static_cast<int>(-kval)) + 1);
            return;
        }
        const auto& e = gens[free[pos]];
        long k = kval;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += e[i];
        long steps = 1;
        for (k += weights[pos]; k >= -depth; k += weights[pos]) {
            self(self, pos + 1, k);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] += e[i];
            ++steps;
        }
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= steps * e[i];
    };
    visit(visit, 0, 0);
    return out;
}

}  // namespace satkit
