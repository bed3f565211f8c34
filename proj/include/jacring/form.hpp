#pragma once

// Homogeneous forms with exact coefficients: text parsing, formal partial
// derivatives, Fermat forms and deterministic pseudo-random forms.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "fields.hpp"
#include "monomial.hpp"

namespace jacring {

// Coefficients are stored only when nonzero (an empty map is the zero
// polynomial; that arises for partial derivatives, never for a valid
// hypersurface form).  Term order is descending graded-lex.
template <class K>
struct Form {
    int nvars = 0;
    long degree = 0;
    std::map<Expo, typename K::Elem, GlexDesc> terms;
    K field{};

    bool is_zero() const { return terms.empty(); }
};

template <class K>
bool forms_equal(const Form<K>& a, const Form<K>& b) {
    if (a.nvars != b.nvars || a.degree != b.degree || a.terms.size() != b.terms.size()) return false;
    auto ia = a.terms.begin();
    auto ib = b.terms.begin();
    for (; ia != a.terms.end(); ++ia, ++ib)
        if (ia->first != ib->first || !a.field.eq(ia->second, ib->second)) return false;
    return true;
}

template <class K>
Form<K> fermat_form(long d, int nvars, K field = K()) {
    Form<K> f;
    f.nvars = nvars;
    f.degree = d;
    f.field = field;
    for (int i = 0; i < nvars; ++i) {
        Expo e(static_cast<std::size_t>(nvars), 0);
        e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(d);
        f.terms.emplace(std::move(e), field.one());
    }
    return f;
}

// d/dx_var; may be the zero polynomial.
template <class K>
Form<K> derivative(const Form<K>& f, int var) {
    Form<K> g;
    g.nvars = f.nvars;
    g.degree = f.degree - 1;
    g.field = f.field;
    for (const auto& [e, c] : f.terms) {
        auto ev = e[static_cast<std::size_t>(var)];
        if (ev == 0) continue;
        Expo d = e;
        d[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(ev - 1);
        auto coeff = f.field.mul(c, f.field.from_long(static_cast<long>(ev)));
        if (!f.field.is_zero(coeff)) g.terms.emplace(std::move(d), std::move(coeff));
    }
    return g;
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::string mono_str(const Expo& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i);
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

}  // namespace detail

// Coefficients drawn uniformly from [-9, 9] by a splittable deterministic
// generator; every monomial of degree d gets an independent draw.  The result
// may be the zero form or a singular form; callers retry with the next
// attempt index.
template <class K>
Form<K> random_form(long d, int nvars, K field, std::uint64_t seed, std::uint64_t attempt = 0) {
    Form<K> f;
    f.nvars = nvars;
    f.degree = d;
    f.field = field;
    std::uint64_t state = seed ^ (0xa24baed4963ee407ULL * (attempt + 1));
    for (auto& e : monomials_of_degree(nvars, d)) {
        long c = static_cast<long>(detail::splitmix64(state) % 19ULL) - 9;
        if (c == 0) continue;
        auto coeff = field.from_long(c);
        if (!field.is_zero(coeff)) f.terms.emplace(std::move(e), std::move(coeff));
    }
    return f;
}

namespace detail {

template <class K>
class FormParser {
  public:
    FormParser(std::string_view text, K field) : s_(text), field_(field) {}

    Form<K> parse() {
        std::vector<std::pair<std::map<int, long>, mpq_class>> raw;  // (var -> exp, coefficient)
        skip_ws();
        if (eof()) throw parse_error("empty form");
        bool first = true;
        int max_var = -1;
        while (!eof()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                if (peek() == '-') sign = -1;
                ++i_;
                skip_ws();
            } else if (!first) {
                throw parse_error(err("expected '+' or '-' between terms"));
            }
            auto [mono, coeff] = parse_term();
            if (sign < 0) coeff = -coeff;
            for (const auto& [v, e] : mono) max_var = std::max(max_var, v);
            raw.emplace_back(std::move(mono), std::move(coeff));
            first = false;
            skip_ws();
        }
        int nvars = max_var + 1;
        if (nvars <= 0) throw parse_error("form has no variables");

        Form<K> f;
        f.nvars = nvars;
        f.field = field_;
        long degree = -1;
        std::string first_term_text;
        std::map<Expo, mpq_class, GlexDesc> acc;
        for (const auto& [mono, coeff] : raw) {
            Expo e(static_cast<std::size_t>(nvars), 0);
            long deg = 0;
            for (const auto& [v, ex] : mono) {
                e[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(ex);
                deg += ex;
            }
            if (degree < 0) {
                degree = deg;
                first_term_text = mono_str(e);
            } else if (deg != degree) {
                throw parse_error("inhomogeneous form: term " + first_term_text + " has degree " +
                                  std::to_string(degree) + " but term " + mono_str(e) +
                                  " has degree " + std::to_string(deg));
            }
            acc[e] += coeff;
        }
        f.degree = degree;
        for (auto& [e, q] : acc) {
            if (sgn(q) == 0) continue;
            auto c = field_.from_mpq(q);
            if (!field_.is_zero(c)) f.terms.emplace(e, std::move(c));
        }
        if (f.terms.empty()) throw parse_error("form is zero after collecting terms");
        return f;
    }

  private:
    std::string_view s_;
    std::size_t i_ = 0;
    K field_;

    bool eof() const { return i_ >= s_.size(); }
    char peek() const { return s_[i_]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++i_;
    }
    std::string err(const std::string& what) const {
        return what + " at position " + std::to_string(i_);
    }

    std::string digits() {
        std::string d;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            d += peek();
            ++i_;
        }
        return d;
    }

    // term = [coefficient ['*']] factor ('*' factor)*
    std::pair<std::map<int, long>, mpq_class> parse_term() {
        skip_ws();
        mpq_class coeff(1);
        bool have_coeff = false;
        if (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string num = digits();
            skip_ws();
            std::string den;
            if (!eof() && peek() == '/') {
                ++i_;
                skip_ws();
                den = digits();
                if (den.empty()) throw parse_error(err("expected denominator digits after '/'"));
            }
            coeff = mpq_class(mpz_class(num), den.empty() ? mpz_class(1) : mpz_class(den));
            if (sgn(coeff.get_den()) == 0) throw parse_error(err("zero denominator"));
            coeff.canonicalize();
            have_coeff = true;
            skip_ws();
            if (!eof() && peek() == '*') {
                ++i_;
                skip_ws();
            }
        }
        std::map<int, long> mono;
        bool have_factor = false;
        while (true) {
            skip_ws();
            if (eof()) break;
            char c = peek();
            if (c == 'x') {
                if (have_factor) throw parse_error(err("expected '*' between factors"));
                parse_factor(mono);
                have_factor = true;
                skip_ws();
                while (!eof() && peek() == '*') {
                    ++i_;
                    skip_ws();
                    parse_factor(mono);
                }
                break;
            }
            if (std::isalpha(static_cast<unsigned char>(c)))
                throw parse_error(err(std::string("unknown variable '") + c + "'; variables are x0, x1, ..."));
            break;
        }
        if (!have_factor) {
            if (have_coeff)
                throw parse_error(err("constant terms are not allowed; expected a variable factor"));
            throw parse_error(err("expected a term"));
        }
        return {std::move(mono), std::move(coeff)};
    }

    void parse_factor(std::map<int, long>& mono) {
        skip_ws();
        if (eof() || peek() != 'x') {
            if (!eof() && std::isalpha(static_cast<unsigned char>(peek())))
                throw parse_error(err(std::string("unknown variable '") + peek() + "'; variables are x0, x1, ..."));
            throw parse_error(err("expected a variable factor"));
        }
        ++i_;
        skip_ws();
        std::string idx = digits();
        if (idx.empty()) throw parse_error(err("expected variable index after 'x'"));
        if (idx.size() > 4) throw parse_error(err("variable index too large"));
        int v = std::stoi(idx);
        long e = 1;
        skip_ws();
        if (!eof() && peek() == '^') {
            ++i_;
            skip_ws();
            std::string ex = digits();
            if (ex.empty()) throw parse_error(err("expected a non-negative integer exponent after '^'"));
            if (ex.size() > 4) throw parse_error(err("exponent too large"));
            e = std::stol(ex);
        }
        mono[v] += e;
    }
};

}  // namespace detail

// Grammar: sum of terms; term = [coefficient ['*']] factor ('*' factor)*;
// factor = var ['^' exponent]; var = 'x' index (0-based); coefficient =
// optionally signed integer or integer/integer rational.  Whitespace is
// insignificant.  The variable count is max index + 1.
template <class K>
Form<K> parse_form(std::string_view text, K field = K()) {
    return detail::FormParser<K>(text, field).parse();
}

template <class K>
std::string form_to_string(const Form<K>& f) {
    if (f.terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : f.terms) {
        std::string cs = f.field.str(c);
        bool negative = !cs.empty() && cs.front() == '-';
        if (negative) cs.erase(cs.begin());
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        std::string mono = detail::mono_str(e);
        if (mono == "1") {
            out += cs;
        } else if (cs == "1") {
            out += mono;
        } else {
            out += cs + "*" + mono;
        }
    }
    return out;
}

}  // namespace jacring
