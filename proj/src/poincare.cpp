#include "satkit/poincare.hpp"

#include <algorithm>

namespace satkit {

void PoincareRecord::validate() const {
    for (const auto* p : {&p_gh, &p_gh_empty}) {
        const char* name = p == &p_gh ? "p_gh" : "p_gh_empty";
        if (p->is_zero()) throw InvariantViolation(label + "." + name + ": zero polynomial");
        if (p->leading_coeff() != 1) {
            throw InvariantViolation(label + "." + name + ": leading coefficient " + p->leading_coeff().get_str() +
                                     ", expected 1");
        }
    }
    if (p_gh.max_exp() != p_gh_empty.max_exp()) {
        throw InvariantViolation(label + ".p_gh_empty: degree " + std::to_string(p_gh_empty.max_exp()) +
                                 " differs from deg p_gh = " + std::to_string(p_gh.max_exp()));
    }
}

LaurentPoly ratio_r(const LaurentPoly& p_i, const LaurentPoly& p) {
    if (p.is_zero()) throw DomainError("ratio by the zero polynomial");
    const LaurentPoly r = exact_div(p_i, p);
    if (r.has_positive_exponents()) {
        throw NotPolynomialInInverse("(" + p_i.str() + ") / (" + p.str() + ") = " + r.str() +
                                     " has positive powers of t");
    }
    return r;
}

int inverse_degree(const LaurentPoly& r) {
    if (r.is_zero()) throw DomainError("degree of the zero polynomial");
    if (r.has_positive_exponents()) throw NotPolynomialInInverse(r.str() + " is not a polynomial in t^-1");
    return -r.min_exp();
}

const LaurentPoly& SatelliteFamily::at(const IndexSet& subset) const {
    auto it = polynomials.find(subset);
    if (it == polynomials.end()) throw MissingData("family has no member for I = " + subset_str(subset));
    return it->second;
}

namespace {

std::vector<IndexSet> power_set(int r) {
    std::vector<IndexSet> out;
    for (unsigned long mask = 0; mask < (1ul << r); ++mask) {
        IndexSet s;
        for (int i = 0; i < r; ++i) {
            if (mask & (1ul << i)) s.insert(i + 1);
        }
        out.push_back(s);
    }
    return out;
}

}  // namespace

LaurentPoly wonderful_sum(const SatelliteFamily& family) {
    LaurentPoly total;
    const LaurentPoly t_minus_1 = LaurentPoly::t_power_minus_one(1);
    for (const auto& subset : power_set(family.rank)) {
        const int k = family.rank - static_cast<int>(subset.size());
        try {
            total += exact_div(family.at(subset), t_minus_1.pow(static_cast<unsigned>(k)));
        } catch (const NotDivisible& e) {
            throw NotDivisible("summand I = " + subset_str(subset), e);
        }
    }
    return total;
}

TruncSeries wonderful_sum_series(const SatelliteFamily& family, const ValuationCone& cone, int order) {
    if (cone.rank() != family.rank) {
        throw DimensionMismatch("family of rank " + std::to_string(family.rank) + " against a cone of rank " +
                                std::to_string(cone.rank()));
    }
    const KappaFunctional kappa = wonderful_kappa(cone);
    TruncSeries total(SeriesVar::TInverse, order);
    for (const auto& face : enumerate_faces(cone)) {
        const LaurentPoly& p = family.at(face.subset);
        const int depth = std::max(1, order + std::max(0, p.is_zero() ? 0 : p.max_exp()));
        const TruncSeries lattice = relint_lattice_points(cone, face, kappa, depth);
        total += (p * lattice).truncated(order);
    }
    return total;
}

BrionPeyre brion_peyre_q(const LaurentPoly& p, long u_diff, long r_diff) {
    if (u_diff < 0 || r_diff < 0) throw DomainError("u and r differences must be nonnegative");
    const LaurentPoly divisor =
        LaurentPoly::t(static_cast<int>(u_diff)) * LaurentPoly::t_power_minus_one(1).pow(static_cast<unsigned>(r_diff));
    BrionPeyre out;
    out.q = exact_div(p, divisor);
    if (out.q.has_negative_exponents()) {
        // Over Z[t, t^-1] the power of t always divides; Q has to be a polynomial.
        LaurentPoly tail;
        for (const auto& [e, c] : out.q.terms()) {
            if (e < 0) tail += LaurentPoly::monomial(c, e);
        }
        throw NotDivisible(p, divisor, tail * divisor);
    }
    out.nonnegative = std::all_of(out.q.terms().begin(), out.q.terms().end(),
                                  [](const auto& term) { return term.second > 0; });
    out.q0_is_one = !out.q.has_negative_exponents() && out.q.value_at_zero() == 1;
    return out;
}

DegreeLawReport check_degree_laws(const PoincareRecord& rec) {
    if (!rec.groups) throw MissingData(rec.label + ": no u_G/u_H data");
    DegreeLawReport out;
    out.r = rec.r_empty ? *rec.r_empty : ratio_r(rec.p_gh_empty, rec.p_gh);
    out.degree = inverse_degree(out.r);
    out.expected = rec.groups->u_g - rec.groups->u_h;
    out.degree_ok = out.degree == out.expected;
    out.constant_term_one = out.r.coeff(0) == 1;
    return out;
}

HorosphericalFactor horospherical_factor(const LaurentPoly& p_gh_empty, int r) {
    if (r < 0) throw DomainError("negative rank");
    HorosphericalFactor out;
    out.factor = exact_div(p_gh_empty, LaurentPoly::t_power_minus_one(1).pow(static_cast<unsigned>(r)));
    out.value_at_zero = out.factor.value_at_zero();
    return out;
}

}  // namespace satkit
