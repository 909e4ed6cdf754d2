#include "modfol/mpoly.hpp"

#include "modfol/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace modfol {

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const
{
    const auto da = std::accumulate(a.begin(), a.end(), 0u);
    const auto db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) {
        return da > db;
    }
    return a > b;
}

MPoly::MPoly() : vars_(default_variables()) {}

MPoly::MPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

std::vector<std::string> MPoly::default_variables()
{
    return {"t_0", "t_1", "t_2", "t_3"};
}

MPoly MPoly::constant(const Rational& c, std::vector<std::string> variables)
{
    MPoly p(std::move(variables));
    p.add_term(Monomial(p.nvars(), 0), c);
    return p;
}

MPoly MPoly::variable(std::size_t i, std::vector<std::string> variables)
{
    MPoly p(std::move(variables));
    if (i >= p.nvars()) {
        throw std::out_of_range("MPoly::variable: index out of range");
    }
    Monomial m(p.nvars(), 0);
    m[i] = 1;
    p.add_term(m, 1);
    return p;
}

int MPoly::total_degree() const
{
    if (terms_.empty()) {
        return -1;
    }
    const auto& m = terms_.begin()->first;
    return static_cast<int>(std::accumulate(m.begin(), m.end(), 0u));
}

Rational MPoly::coeff(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MPoly::add_term(const Monomial& m, const Rational& c)
{
    if (m.size() != vars_.size()) {
        throw std::invalid_argument("MPoly::add_term: exponent vector has the wrong length");
    }
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) {
        // Callers may hand in an mpq built from (num, den) without reduction.
        it->second.canonicalize();
    } else {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

void MPoly::check_compatible(const MPoly& o) const
{
    if (vars_ != o.vars_) {
        throw std::invalid_argument("MPoly: operands use different variable sets");
    }
}

MPoly MPoly::operator-() const
{
    MPoly r = *this;
    for (auto& [m, c] : r.terms_) {
        c = -c;
    }
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o)
{
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) {
        add_term(m, c);
    }
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o)
{
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) {
        add_term(m, -c);
    }
    return *this;
}

MPoly& MPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, x] : terms_) {
        x *= c;
    }
    return *this;
}

MPoly& MPoly::operator*=(const MPoly& o)
{
    check_compatible(o);
    MPoly r(vars_);
    Monomial prod(vars_.size());
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            for (std::size_t i = 0; i < prod.size(); ++i) {
                prod[i] = ma[i] + mb[i];
            }
            r.add_term(prod, ca * cb);
        }
    }
    terms_ = std::move(r.terms_);
    return *this;
}

bool operator==(const MPoly& a, const MPoly& b)
{
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

MPoly MPoly::pow(unsigned e) const
{
    MPoly result = constant(1, vars_);
    MPoly base = *this;
    while (e > 0) {
        if (e & 1u) {
            result *= base;
        }
        e >>= 1u;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

MPoly MPoly::derivative(std::size_t var) const
{
    if (var >= vars_.size()) {
        throw std::out_of_range("MPoly::derivative: variable index out of range");
    }
    MPoly r(vars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) {
            continue;
        }
        Monomial d = m;
        d[var] -= 1;
        r.add_term(d, c * m[var]);
    }
    return r;
}

MPoly MPoly::compose(std::span<const MPoly> images) const
{
    if (images.size() != vars_.size() || images.empty()) {
        throw std::invalid_argument("MPoly::compose: need one image per variable");
    }
    const auto& target = images[0].variables();
    // Powers are cached per variable; entries are small so this stays cheap.
    std::vector<std::vector<MPoly>> powers(images.size());
    MPoly r(target);
    for (const auto& [m, c] : terms_) {
        MPoly term = constant(c, target);
        for (std::size_t i = 0; i < m.size(); ++i) {
            auto& cache = powers[i];
            while (cache.size() <= m[i]) {
                cache.push_back(cache.empty() ? constant(1, target) : cache.back() * images[i]);
            }
            if (m[i] > 0) {
                term *= cache[m[i]];
            }
        }
        r += term;
    }
    return r;
}

Rational MPoly::evaluate(std::span<const Rational> point) const
{
    if (point.size() != vars_.size()) {
        throw std::invalid_argument("MPoly::evaluate: point has the wrong dimension");
    }
    Rational acc;
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] > 0) {
                term *= rational_pow(point[i], m[i]);
            }
        }
        acc += term;
    }
    return acc;
}

std::string MPoly::to_compact_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool constant_term = std::all_of(m.begin(), m.end(), [](unsigned e) { return e == 0; });
        Rational mag = abs(c);
        if (c < 0) {
            os << '-';
        } else if (!first) {
            os << '+';
        }
        first = false;
        if (mag != 1 || constant_term) {
            os << modfol::to_string(mag);
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) {
                continue;
            }
            os << vars_[i];
            if (m[i] > 1) {
                os << '^' << m[i];
            }
        }
    }
    return os.str();
}

std::string MPoly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool constant_term = std::all_of(m.begin(), m.end(), [](unsigned e) { return e == 0; });
        Rational mag = abs(c);
        if (first) {
            os << (c < 0 ? "-" : "");
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool need_space = false;
        if (mag != 1 || constant_term) {
            os << modfol::to_string(mag);
            need_space = true;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) {
                continue;
            }
            if (need_space) {
                os << ' ';
            }
            need_space = true;
            for (char ch : vars_[i]) {
                if (ch != '_') {
                    os << ch;
                }
            }
            if (m[i] > 1) {
                os << '^' << m[i];
            }
        }
    }
    return os.str();
}

MPoly parse_compact_mpoly(std::string_view text, std::vector<std::string> variables)
{
    MPoly result(variables);
    std::size_t pos = 0;
    auto read_uint = [&](const char* what) {
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
        if (start == pos) {
            throw ParseError(start, std::string("expected ") + what);
        }
        return std::string(text.substr(start, pos - start));
    };
    if (text.empty()) {
        throw ParseError(0, "empty polynomial");
    }
    if (text == "0") {
        return result;
    }
    while (pos < text.size()) {
        Rational sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (pos != 0) {
            throw ParseError(pos, "expected '+' or '-'");
        }
        Rational coeff = 1;
        bool has_coeff = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            std::string num = read_uint("coefficient");
            std::string den = "1";
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                den = read_uint("denominator");
            }
            coeff = parse_rational(num + "/" + den);
            has_coeff = true;
        }
        Monomial mono(variables.size(), 0);
        bool has_var = false;
        while (pos < text.size() && text[pos] != '+' && text[pos] != '-') {
            std::size_t matched = variables.size();
            std::size_t best_len = 0;
            for (std::size_t i = 0; i < variables.size(); ++i) {
                const auto& v = variables[i];
                if (v.size() > best_len && text.substr(pos, v.size()) == v) {
                    matched = i;
                    best_len = v.size();
                }
            }
            if (matched == variables.size()) {
                throw ParseError(pos, "unknown symbol");
            }
            pos += best_len;
            unsigned e = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                e = static_cast<unsigned>(std::stoul(read_uint("exponent")));
            }
            mono[matched] += e;
            has_var = true;
        }
        if (!has_coeff && !has_var) {
            throw ParseError(pos, "empty term");
        }
        result.add_term(mono, sign * coeff);
    }
    return result;
}

MPoly PolyMatrix2::det() const
{
    return e[0][0] * e[1][1] - e[0][1] * e[1][0];
}

PolyMatrix2 PolyMatrix2::adjugate() const
{
    return PolyMatrix2{{{{e[1][1], -e[0][1]}, {-e[1][0], e[0][0]}}}};
}

PolyMatrix2 PolyMatrix2::derivative(std::size_t var) const
{
    PolyMatrix2 r = *this;
    for (auto& row : r.e) {
        for (auto& x : row) {
            x = x.derivative(var);
        }
    }
    return r;
}

PolyMatrix2 PolyMatrix2::transpose() const
{
    return PolyMatrix2{{{{e[0][0], e[1][0]}, {e[0][1], e[1][1]}}}};
}

MPoly PolyMatrix2::trace() const
{
    return e[0][0] + e[1][1];
}

PolyMatrix2& PolyMatrix2::operator+=(const PolyMatrix2& o)
{
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            e[i][j] += o.e[i][j];
        }
    }
    return *this;
}

PolyMatrix2& PolyMatrix2::operator-=(const PolyMatrix2& o)
{
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            e[i][j] -= o.e[i][j];
        }
    }
    return *this;
}

PolyMatrix2& PolyMatrix2::operator*=(const MPoly& s)
{
    for (auto& row : e) {
        for (auto& x : row) {
            x *= s;
        }
    }
    return *this;
}

PolyMatrix2 operator*(const PolyMatrix2& a, const PolyMatrix2& b)
{
    PolyMatrix2 r;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            r.e[i][j] = a.e[i][0] * b.e[0][j] + a.e[i][1] * b.e[1][j];
        }
    }
    return r;
}

bool operator==(const PolyMatrix2& a, const PolyMatrix2& b)
{
    return a.e == b.e;
}

MPoly poly_det(const std::vector<std::vector<MPoly>>& m)
{
    const std::size_t n = m.size();
    if (n == 0) {
        return MPoly::constant(1);
    }
    for (const auto& row : m) {
        if (row.size() != n) {
            throw std::invalid_argument("poly_det: matrix is not square");
        }
    }
    const auto& vars = m[0][0].variables();
    if (n == 1) {
        return m[0][0];
    }
    MPoly acc(vars);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) {
            continue;
        }
        std::vector<std::vector<MPoly>> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<MPoly> row;
            row.reserve(n - 1);
            for (std::size_t k = 0; k < n; ++k) {
                if (k != j) {
                    row.push_back(m[i][k]);
                }
            }
            minor.push_back(std::move(row));
        }
        MPoly term = m[0][j] * poly_det(minor);
        if (j % 2 == 0) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    return acc;
}

} // namespace modfol
