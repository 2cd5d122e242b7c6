#include "lenum/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lenum {

Int det_bareiss(std::vector<std::vector<Int>> m) {
    const std::size_t k = m.size();
    if (k == 0) return 1;
    for (const auto& row : m)
        if (row.size() != k) throw InternalError("det_bareiss: matrix not square");
    Int prev = 1;
    int sign = 1;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t pivot = c;
        while (pivot < k && m[pivot][c] == 0) ++pivot;
        if (pivot == k) return 0;
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            sign = -sign;
        }
        for (std::size_t r = c + 1; r < k; ++r) {
            for (std::size_t j = c + 1; j < k; ++j) {
                m[r][j] = (m[c][c] * m[r][j] - m[r][c] * m[c][j]) / prev;
            }
            m[r][c] = 0;
        }
        prev = m[c][c];
    }
    return sign > 0 ? m[k - 1][k - 1] : Int(-m[k - 1][k - 1]);
}

int rank_int(std::vector<std::vector<Int>> m) {
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    Int prev = 1;  // Bareiss: divide by the previous pivot to keep entries minor-sized
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[pivot], m[row]);
        for (std::size_t r = row + 1; r < m.size(); ++r) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m[r][j] = (m[row][c] * m[r][j] - m[r][c] * m[row][j]) / prev;
            m[r][c] = 0;
        }
        prev = m[row][c];
        ++row;
    }
    return static_cast<int>(row);
}

std::uint32_t support_mask(const ExponentVector& e) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) mask |= 1u << i;
    return mask;
}

bool on_axis(const ExponentVector& e, int i) {
    return support_mask(e) == (1u << (i - 1));
}

Polynomial::Polynomial(int n, TermMap terms) : n_(n), terms_(std::move(terms)) {
    if (n_ < 1) throw InvalidInput("variable count must be >= 1");
    if (n_ > 32) throw InvalidInput("at most 32 variables are supported");
    for (auto it = terms_.begin(); it != terms_.end();) {
        const auto& [e, c] = *it;
        if (static_cast<int>(e.size()) != n_)
            throw InvalidInput("exponent vector length does not match variable count");
        for (auto a : e)
            if (a < 0) throw InvalidInput("negative exponent");
        if (c == 0) {
            it = terms_.erase(it);
            continue;
        }
        if (support_mask(e) == 0)
            throw InvalidInput("nonzero constant term: a germ must vanish at the origin");
        ++it;
    }
    if (terms_.empty()) throw InvalidInput("zero polynomial");
}

std::vector<ExponentVector> Polynomial::support() const {
    std::vector<ExponentVector> pts;
    pts.reserve(terms_.size());
    for (const auto& [e, c] : terms_) pts.push_back(e);
    return pts;
}

std::int64_t Polynomial::degree() const {
    std::int64_t deg = 0;
    for (const auto& [e, c] : terms_) {
        std::int64_t t = 0;
        for (auto a : e) t += a;
        deg = std::max(deg, t);
    }
    return deg;
}

bool Polynomial::is_homogeneous() const {
    std::int64_t deg = -1;
    for (const auto& [e, c] : terms_) {
        std::int64_t t = 0;
        for (auto a : e) t += a;
        if (deg < 0) deg = t;
        else if (t != deg) return false;
    }
    return true;
}

Polynomial Polynomial::permuted(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw InvalidInput("permutation length does not match variable count");
    std::vector<bool> seen(n_, false);
    for (int p : perm) {
        if (p < 1 || p > n_ || seen[p - 1]) throw InvalidInput("not a permutation of 1..n");
        seen[p - 1] = true;
    }
    TermMap out;
    for (const auto& [e, c] : terms_) {
        ExponentVector ne(n_);
        for (int j = 0; j < n_; ++j) ne[j] = e[perm[j] - 1];
        out[ne] = c;
    }
    return Polynomial(n_, std::move(out));
}

std::string Polynomial::to_string() const {
    // Descending lex order reads the way the inputs are usually written.
    std::vector<const TermMap::value_type*> ordered;
    for (const auto& t : terms_) ordered.push_back(&t);
    std::reverse(ordered.begin(), ordered.end());

    std::ostringstream out;
    bool first = true;
    for (const auto* t : ordered) {
        const auto& [e, c] = *t;
        Rat a = c;
        if (first) {
            if (a < 0) out << "-";
        } else {
            out << (a < 0 ? " - " : " + ");
        }
        first = false;
        if (a < 0) a = -a;
        bool coeff_shown = false;
        if (a != 1) {
            out << lenum::to_string(a);
            coeff_shown = true;
        }
        bool any_factor = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (coeff_shown || any_factor) out << "*";
            out << "z" << (i + 1);
            if (e[i] > 1) out << "^" << e[i];
            any_factor = true;
        }
        if (!any_factor) out << (coeff_shown ? "" : "1");  // unreachable for germs
    }
    return out.str();
}

namespace {

class Parser {
public:
    Parser(const std::string& text, int n) : s_(text), n_(n) {}

    Polynomial run() {
        std::map<ExponentVector, Rat> acc;
        Rat constant = 0;
        skip_ws();
        if (eof()) throw ParseError(pos_, "empty polynomial");
        bool first = true;
        while (!eof()) {
            int sign = 1;
            skip_ws();
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                throw ParseError(pos_, "expected '+' or '-' between terms");
            }
            auto [e, c] = term();
            c *= sign;
            if (support_mask(e) == 0) constant += c;
            else {
                auto [it, inserted] = acc.emplace(e, c);
                if (!inserted) it->second += c;
            }
            first = false;
            skip_ws();
        }
        if (constant != 0)
            throw ParseError(0, "nonzero constant term: a germ must vanish at the origin");
        for (auto it = acc.begin(); it != acc.end();) {
            if (it->second == 0) it = acc.erase(it);
            else ++it;
        }
        if (acc.empty()) throw ParseError(0, "zero polynomial");
        return Polynomial(n_, std::move(acc));
    }

private:
    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return eof() ? '\0' : s_[pos_]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    Int integer() {
        skip_ws();
        std::size_t start = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError(pos_, "expected an integer");
        return Int(s_.substr(start, pos_ - start));
    }

    std::pair<ExponentVector, Rat> term() {
        skip_ws();
        Rat coeff = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Int num = integer();
            skip_ws();
            if (peek() == '/') {
                ++pos_;
                std::size_t den_pos = pos_;
                Int den = integer();
                if (den == 0) throw ParseError(den_pos, "zero denominator");
                coeff = Rat(num, den);
                coeff.canonicalize();
            } else {
                coeff = Rat(num);
            }
            have_coeff = true;
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
            }
        }
        ExponentVector e(n_, 0);
        bool any_factor = false;
        while (true) {
            skip_ws();
            if (peek() != 'z' && peek() != 'Z') break;
            factor(e);
            any_factor = true;
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
                if (peek() != 'z' && peek() != 'Z')
                    throw ParseError(pos_, "expected a factor after '*'");
            }
        }
        if (!any_factor && !have_coeff)
            throw ParseError(pos_, "expected a term");
        return {std::move(e), coeff};
    }

    void factor(ExponentVector& e) {
        ++pos_;  // consume 'z'
        std::size_t idx_pos = pos_;
        Int k = integer();
        if (k < 1 || k > n_)
            throw ParseError(idx_pos, "variable index out of range 1.." + std::to_string(n_));
        std::int64_t exp = 1;
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            std::size_t exp_pos = pos_;
            Int v = integer();
            if (v < 1) throw ParseError(exp_pos, "exponent must be >= 1");
            if (!v.fits_slong_p()) throw ParseError(exp_pos, "exponent too large");
            exp = v.get_si();
        }
        e[k.get_si() - 1] += exp;
    }

    const std::string& s_;
    int n_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, int n) {
    if (n < 1) throw InvalidInput("variable count must be >= 1");
    return Parser(text, n).run();
}

Augmented augment(const Polynomial& f, const std::vector<std::int64_t>& alphas) {
    const int q = static_cast<int>(alphas.size());
    if (q > f.nvars()) throw InvalidInput("more exponents than variables");
    for (auto a : alphas)
        if (a < 2) throw InvalidInput("axis exponents must be >= 2");
    Polynomial::TermMap terms = f.terms();
    std::vector<int> collisions;
    for (int p = 1; p <= q; ++p) {
        ExponentVector e(f.nvars(), 0);
        e[p - 1] = alphas[p - 1];
        auto [it, inserted] = terms.emplace(e, Rat(1));
        if (!inserted) {
            it->second += 1;
            collisions.push_back(p);
        }
    }
    return Augmented{Polynomial(f.nvars(), std::move(terms)), std::move(collisions)};
}

std::set<int> pure_power_indices(const Polynomial& f, int d) {
    if (d < 1 || d > f.nvars()) throw InvalidInput("index bound out of range");
    std::set<int> found;
    for (const auto& [e, c] : f.terms()) {
        for (int i = 1; i <= d; ++i)
            if (on_axis(e, i)) found.insert(i);
    }
    return found;
}

}  // namespace lenum
