#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lenum/errors.hpp"
#include "lenum/rational.hpp"

namespace lenum {

// Lattice point in Z^n, one entry per variable.
using ExponentVector = std::vector<std::int64_t>;

// Bit i-1 set iff variable i appears. Variables are 1-based everywhere.
std::uint32_t support_mask(const ExponentVector& e);

// True iff e = a*e_i with a >= 1.
bool on_axis(const ExponentVector& e, int i);

// Sparse polynomial germ over Q with a fixed variable count. Canonical form:
// no zero coefficients, no constant term (the germ vanishes at the origin),
// all exponents non-negative. Immutable after construction.
class Polynomial {
public:
    using TermMap = std::map<ExponentVector, Rat>;

    Polynomial(int n, TermMap terms);

    int nvars() const { return n_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    std::vector<ExponentVector> support() const;

    bool is_homogeneous() const;
    std::int64_t degree() const;  // max total degree

    // Result variable j reads the original variable perm[j-1] (1-based).
    Polynomial permuted(const std::vector<int>& perm) const;

    std::string to_string() const;

    bool operator==(const Polynomial& other) const {
        return n_ == other.n_ && terms_ == other.terms_;
    }

private:
    int n_;
    TermMap terms_;
};

// Grammar: sum of signed terms; term = [coeff][*] factor (* factor)...;
// coeff = integer or integer/integer; factor = zK or zK^E, K in 1..n, E >= 1.
// Whitespace is insignificant. Throws ParseError with a position; rejects a
// surviving constant term and the zero polynomial.
Polynomial parse_polynomial(const std::string& text, int n);

struct Augmented {
    Polynomial poly;
    // Indices p whose axis term z_p^{alpha_p} collided with an existing term
    // of f (coefficients were added). Valid inputs never trigger this.
    std::vector<int> collisions;
};

// f + z_1^{alpha_1} + ... + z_q^{alpha_q}. Requires q <= n and alpha_p >= 2.
Augmented augment(const Polynomial& f, const std::vector<std::int64_t>& alphas);

// { i <= d : f has a term c * z_i^a, a >= 1 }. Non-empty means the Le-number
// hypotheses cannot all hold; the orchestrator turns that into a hard error.
std::set<int> pure_power_indices(const Polynomial& f, int d);

}  // namespace lenum
