#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace lenum {

using Int = mpz_class;
using Rat = mpq_class;

inline std::string to_string(const Int& z) { return z.get_str(); }

// Canonical "p/q" (or "p" for integers).
inline std::string to_string(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    return c.get_den() == 1 ? c.get_num().get_str()
                            : c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
    Rat q(s);
    q.canonicalize();
    return q;
}

inline Int ceil_rat(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

inline Int factorial(int k) {
    Int r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

// Divides out the gcd of the entries; the zero vector is returned unchanged.
inline void make_primitive(std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (Int& x : v) x /= g;
}

inline bool lex_less(const std::vector<Int>& a, const std::vector<Int>& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return a.size() < b.size();
}

// Determinant of a square integer matrix by fraction-free Bareiss elimination.
Int det_bareiss(std::vector<std::vector<Int>> m);

// Rank of an integer matrix (rows x cols) over Q.
int rank_int(std::vector<std::vector<Int>> m);

}  // namespace lenum
