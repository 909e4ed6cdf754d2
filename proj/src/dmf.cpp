#include "modfol/dmf.hpp"

#include "modfol/error.hpp"
#include "modfol/linsolve.hpp"

#include "json.hpp"

#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace modfol {

DmfElement DmfElement::constant(const Rational& c)
{
    return monomial({0, 0, 0}, c);
}

DmfElement DmfElement::g(int index)
{
    if (index < 1 || index > 3) {
        throw std::invalid_argument("DmfElement::g: generator index must be 1, 2 or 3");
    }
    GExponent e{0, 0, 0};
    e[static_cast<std::size_t>(index - 1)] = 1;
    return monomial(e);
}

DmfElement DmfElement::monomial(const GExponent& e, const Rational& c)
{
    DmfElement f;
    f.add_term(e, c);
    return f;
}

void DmfElement::add_term(const GExponent& e, const Rational& c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) {
        it->second.canonicalize();
    } else {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

Rational DmfElement::coeff(const GExponent& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::pair<int, int> DmfElement::grade() const
{
    if (terms_.empty()) {
        return {0, 0};
    }
    const int m = weight_of(terms_.begin()->first);
    for (const auto& [e, c] : terms_) {
        if (weight_of(e) != m) {
            throw Error(ErrorKind::Inhomogeneous, "element mixes weights " + std::to_string(m) + " and " +
                                                      std::to_string(weight_of(e)));
        }
    }
    return {m, depth()};
}

int DmfElement::depth() const
{
    unsigned n = 0;
    for (const auto& [e, c] : terms_) {
        n = std::max(n, e[0]);
    }
    return static_cast<int>(n);
}

DmfElement DmfElement::operator-() const
{
    DmfElement r = *this;
    for (auto& [e, c] : r.terms_) {
        c = -c;
    }
    return r;
}

DmfElement& DmfElement::operator+=(const DmfElement& o)
{
    for (const auto& [e, c] : o.terms_) {
        add_term(e, c);
    }
    return *this;
}

DmfElement& DmfElement::operator-=(const DmfElement& o)
{
    for (const auto& [e, c] : o.terms_) {
        add_term(e, -c);
    }
    return *this;
}

DmfElement& DmfElement::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, x] : terms_) {
        x *= c;
    }
    return *this;
}

DmfElement& DmfElement::operator*=(const DmfElement& o)
{
    DmfElement r;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
        }
    }
    terms_ = std::move(r.terms_);
    return *this;
}

DmfElement DmfElement::pow(unsigned e) const
{
    DmfElement result = constant(1);
    DmfElement base = *this;
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

DmfElement DmfElement::partial(int index) const
{
    if (index < 1 || index > 3) {
        throw std::invalid_argument("DmfElement::partial: generator index must be 1, 2 or 3");
    }
    const auto k = static_cast<std::size_t>(index - 1);
    DmfElement r;
    for (const auto& [e, c] : terms_) {
        if (e[k] == 0) {
            continue;
        }
        GExponent d = e;
        d[k] -= 1;
        r.add_term(d, c * e[k]);
    }
    return r;
}

std::string DmfElement::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const Rational mag = abs(c);
        if (first) {
            os << (c < 0 ? "-" : "");
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const bool is_constant = e[0] == 0 && e[1] == 0 && e[2] == 0;
        bool need_space = false;
        if (mag != 1 || is_constant) {
            os << modfol::to_string(mag);
            need_space = true;
        }
        for (int i = 0; i < 3; ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (need_space) {
                os << ' ';
            }
            need_space = true;
            os << 'g' << (i + 1);
            if (e[i] > 1) {
                os << '^' << e[i];
            }
        }
    }
    return os.str();
}

std::string DmfElement::to_json() const
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : terms_) {
        terms.push_back({{"exponents", {e[0], e[1], e[2]}}, {"coeff", modfol::to_string(c)}});
    }
    return nlohmann::json{{"terms", terms}}.dump();
}

DmfElement diff_op(const DmfElement& f)
{
    const DmfElement g1 = DmfElement::g(1), g2 = DmfElement::g(2), g3 = DmfElement::g(3);
    const DmfElement dg1 = g1 * g1 - Rational(1, 12) * g2;
    const DmfElement dg2 = Rational(4) * g1 * g2 - Rational(6) * g3;
    const DmfElement dg3 = Rational(6) * g1 * g3 - Rational(1, 3) * g2 * g2;
    return f.partial(1) * dg1 + f.partial(2) * dg2 + f.partial(3) * dg3;
}

QSeries to_qseries(const DmfElement& f, int order)
{
    f.grade(); // rejects inhomogeneous input
    if (f.is_zero()) {
        return QSeries(0, {}, order);
    }
    std::array<QSeries, 3> base{eisenstein_series(1, order).series, eisenstein_series(2, order).series * Rational(12),
                                eisenstein_series(3, order).series * Rational(8)};
    std::array<std::vector<QSeries>, 3> powers;
    auto power = [&](int i, unsigned e) -> const QSeries& {
        auto& cache = powers[static_cast<std::size_t>(i)];
        while (cache.size() <= e) {
            cache.push_back(cache.empty() ? QSeries::constant(1, order) : series_mul(cache.back(), base[i]));
        }
        return cache[e];
    };
    QSeries acc(0, {}, order);
    for (const auto& [e, c] : f.terms()) {
        acc += series_mul(series_mul(power(0, e[0]), power(1, e[1])), power(2, e[2])) * c;
    }
    return acc;
}

std::vector<DmfElement> associated_functions(const DmfElement& f, std::optional<int> depth)
{
    const int exact = f.depth();
    const int n = depth.value_or(exact);
    if (n < exact) {
        throw std::invalid_argument("associated_functions: declared depth below the g1-degree");
    }
    std::vector<DmfElement> out;
    out.reserve(static_cast<std::size_t>(n + 1));
    DmfElement derivative = f;
    Rational falling = 1; // n! / (n - i)! = i! C(n, i)
    for (int i = 0; i <= n; ++i) {
        out.push_back(derivative * (Rational(1) / falling));
        derivative = derivative.partial(1);
        falling *= n - i;
    }
    return out;
}

bool Matrix2R::is_integral() const
{
    for (double v : {a, b, c, d}) {
        if (v != std::round(v)) {
            return false;
        }
    }
    return true;
}

std::array<std::complex<double>, 3> generators_from_series(std::complex<double> z, int order)
{
    const auto q = q_of(z);
    const auto a = g_constants();
    std::array<std::complex<double>, 3> out;
    for (int k = 1; k <= 3; ++k) {
        out[static_cast<std::size_t>(k - 1)] =
            a[static_cast<std::size_t>(k - 1)] * eisenstein_series(k, order).series.evaluate(q);
    }
    return out;
}

std::complex<double> slash_eval(const DmfElement& f, const Matrix2R& a, std::complex<double> z, int order,
                                double floor, std::optional<int> depth)
{
    const double det = a.det();
    if (!(det > 0)) {
        throw std::invalid_argument("slash_eval: matrix determinant must be positive");
    }
    const std::complex<double> az = a.act(z);
    if (z.imag() < floor || az.imag() < floor) {
        std::ostringstream os;
        os << "Im z = " << z.imag() << ", Im Az = " << az.imag() << ", floor " << floor;
        throw Error(ErrorKind::LowImaginaryPart, os.str());
    }
    const auto [m, exact] = f.grade();
    const int n = depth.value_or(exact);
    const auto fi = associated_functions(f, n);
    const auto gvals = generators_from_series(az, order);
    const std::complex<double> jz = a.j(z);
    const double c_inv = -a.c / det;
    std::complex<double> acc(0);
    double binom = 1;
    for (int i = 0; i <= n; ++i) {
        acc += binom * std::pow(c_inv, i) * std::pow(jz, i - m) * fi[static_cast<std::size_t>(i)].evaluate_at(gvals);
        binom = binom * (n - i) / (i + 1);
    }
    return std::pow(det, m - n - 1) * acc;
}

std::vector<GExponent> basis_and_dimension(int n, int m)
{
    if (m % 2 != 0) {
        throw Error(ErrorKind::OddWeight, "weight must be even, got " + std::to_string(m));
    }
    std::vector<GExponent> out;
    if (m < 0 || n < 0) {
        return out;
    }
    for (int a = std::min(n, m / 2); a >= 0; --a) {
        for (int b = (m - 2 * a) / 4; b >= 0; --b) {
            const int rest = m - 2 * a - 4 * b;
            if (rest % 6 == 0) {
                out.push_back({static_cast<unsigned>(a), static_cast<unsigned>(b), static_cast<unsigned>(rest / 6)});
            }
        }
    }
    std::sort(out.begin(), out.end(), GExponentOrder{});
    return out;
}

QSeries hecke_series(const QSeries& s, unsigned p, int m, int n)
{
    if (p == 0) {
        throw std::invalid_argument("hecke_series: p must be positive");
    }
    if (s.valuation() < 0) {
        throw std::invalid_argument("hecke_series: series must be holomorphic at the cusp");
    }
    const int order = s.order();
    const int ip = static_cast<int>(p);
    const int out_order = (order + ip - 1) / ip;
    std::vector<unsigned> divisors;
    std::vector<Rational> dweight;
    for (unsigned d = 1; d <= p; ++d) {
        if (p % d == 0) {
            divisors.push_back(d);
            dweight.push_back(rational_pow(Rational(d), 1 - m));
        }
    }
    const Rational scale = rational_pow(Rational(p), m - n - 1);
    std::vector<Rational> out(static_cast<std::size_t>(out_order));
    for (int k = 0; k < out_order; ++k) {
        Rational acc;
        for (std::size_t t = 0; t < divisors.size(); ++t) {
            const long d = divisors[t];
            const long num = static_cast<long>(k) * d * d;
            if (num % ip != 0) {
                continue;
            }
            const long j = num / ip;
            if (j % d != 0 || j >= order) {
                continue;
            }
            acc += dweight[t] * s.coeff(static_cast<int>(j));
        }
        out[static_cast<std::size_t>(k)] = scale * acc;
    }
    return QSeries(0, std::move(out), out_order);
}

DmfElement reconstruct(const QSeries& s, int n, int m, int surplus)
{
    const auto basis = basis_and_dimension(n, m);
    const int dim = static_cast<int>(basis.size());
    const int rows = s.order();
    if (s.valuation() < 0) {
        throw std::invalid_argument("reconstruct: series has a pole at the cusp");
    }
    if (rows < dim + surplus) {
        throw std::invalid_argument("reconstruct: need " + std::to_string(dim + surplus) + " coefficients, have " +
                                    std::to_string(rows));
    }
    if (dim == 0) {
        if (!s.is_zero()) {
            throw Error(ErrorKind::ReconstructionFailed, "M^" + std::to_string(n) + "_" + std::to_string(m) +
                                                             " is zero but the series is not");
        }
        return {};
    }
    std::vector<QSeries> columns;
    columns.reserve(basis.size());
    for (const auto& e : basis) {
        columns.push_back(to_qseries(DmfElement::monomial(e), rows));
    }
    RationalMatrix a(static_cast<std::size_t>(rows), std::vector<Rational>(basis.size()));
    std::vector<Rational> b(static_cast<std::size_t>(rows));
    for (int k = 0; k < rows; ++k) {
        for (std::size_t i = 0; i < basis.size(); ++i) {
            a[static_cast<std::size_t>(k)][i] = columns[i].coeff(k);
        }
        b[static_cast<std::size_t>(k)] = s.coeff(k);
    }
    std::vector<Rational> x;
    try {
        x = solve_linear_exact(a, b);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Inconsistent) {
            throw Error(ErrorKind::ReconstructionFailed, std::string("surplus coefficients disagree: ") + e.what());
        }
        throw;
    }
    DmfElement f;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        f.add_term(basis[i], x[i]);
    }
    return f;
}

DmfElement hecke(const DmfElement& f, unsigned p, int order, std::optional<int> depth)
{
    if (f.is_zero()) {
        return {};
    }
    const auto [m, exact] = f.grade();
    const int n = depth.value_or(exact);
    if (n < exact) {
        throw std::invalid_argument("hecke: declared depth below the g1-degree");
    }
    const int dim = static_cast<int>(basis_and_dimension(n, m).size());
    const int needed = static_cast<int>(p) * (dim + 8);
    const int work = std::max(order, needed);
    const QSeries image = hecke_series(to_qseries(f, work), p, m, n);
    try {
        return reconstruct(image, n, m, 8);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Singular) {
            throw Error(ErrorKind::ReconstructionFailed, e.what());
        }
        throw;
    }
}

CompositionReport hecke_composition_check(unsigned p, unsigned q, const DmfElement& f, int order,
                                          CompositionExponent convention, std::optional<int> depth)
{
    CompositionReport report;
    const auto [m, exact] = f.grade();
    const int n = depth.value_or(exact);
    const QSeries s = to_qseries(f, order);
    report.lhs = hecke_series(hecke_series(s, q, m, n), p, m, n);
    const int exponent = convention == CompositionExponent::Stated ? m - n - 1 : m - 2 * n - 1;
    const unsigned g = std::gcd(p, q);
    std::ostringstream detail;
    detail << "T" << p << " T" << q << " vs";
    QSeries rhs;
    bool first = true;
    for (unsigned d = 1; d <= g; ++d) {
        if (g % d != 0) {
            continue;
        }
        const Rational w = rational_pow(Rational(d), exponent);
        QSeries term = hecke_series(s, p * q / (d * d), m, n) * w;
        rhs = first ? term : rhs + term;
        detail << (first ? " " : " + ") << modfol::to_string(w) << " T" << p * q / (d * d);
        first = false;
    }
    report.compared_order = std::min(report.lhs.order(), rhs.order());
    report.lhs = report.lhs.truncated(report.compared_order);
    report.rhs = rhs.truncated(report.compared_order);
    report.pass = report.lhs == report.rhs;
    detail << " on " << f.to_string() << " (m=" << m << ", n=" << n << ", exponent " << exponent << ", "
           << report.compared_order << " coefficients)";
    if (!report.pass) {
        for (int k = 0; k < report.compared_order; ++k) {
            if (report.lhs.coeff(k) != report.rhs.coeff(k)) {
                detail << ": first mismatch at q^" << k << ", " << modfol::to_string(report.lhs.coeff(k))
                       << " vs " << modfol::to_string(report.rhs.coeff(k));
                break;
            }
        }
    }
    report.detail = detail.str();
    return report;
}

namespace {

class DmfParser {
public:
    explicit DmfParser(std::string_view text) : text_(text) {}

    DmfElement parse()
    {
        skip();
        if (pos_ == text_.size()) {
            throw ParseError(pos_, "empty expression");
        }
        DmfElement e = expr();
        skip();
        if (pos_ != text_.size()) {
            throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
        }
        return e;
    }

private:
    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool peek(char c)
    {
        skip();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool starts_primary()
    {
        skip();
        if (pos_ >= text_.size()) {
            return false;
        }
        const char c = text_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'g' || c == '(';
    }

    DmfElement expr()
    {
        DmfElement acc;
        bool negate = false;
        if (peek('+') || peek('-')) {
            negate = text_[pos_] == '-';
            ++pos_;
        }
        acc = term();
        if (negate) {
            acc = -acc;
        }
        while (peek('+') || peek('-')) {
            const bool minus = text_[pos_] == '-';
            ++pos_;
            DmfElement t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    DmfElement term()
    {
        DmfElement acc = power();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                acc *= power();
            } else if (starts_primary()) {
                acc *= power();
            } else {
                return acc;
            }
        }
    }

    DmfElement power()
    {
        DmfElement base = primary();
        if (peek('^')) {
            ++pos_;
            skip();
            const auto e = uint_literal("exponent");
            if (e.size() > 4) {
                throw ParseError(pos_, "exponent too large");
            }
            base = base.pow(static_cast<unsigned>(std::stoul(e)));
        }
        return base;
    }

    DmfElement primary()
    {
        skip();
        if (pos_ >= text_.size()) {
            throw ParseError(pos_, "unexpected end of expression");
        }
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            DmfElement inner = expr();
            if (!peek(')')) {
                throw ParseError(pos_, "expected ')'");
            }
            ++pos_;
            return inner;
        }
        if (c == 'g') {
            const std::size_t at = pos_;
            ++pos_;
            if (pos_ < text_.size() && text_[pos_] >= '1' && text_[pos_] <= '3') {
                const int k = text_[pos_] - '0';
                ++pos_;
                if (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
                    throw ParseError(at, "unknown symbol");
                }
                return DmfElement::g(k);
            }
            throw ParseError(at, "unknown symbol");
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = uint_literal("number");
            std::string den = "1";
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                den = uint_literal("denominator");
                if (den.find_first_not_of('0') == std::string::npos) {
                    throw ParseError(pos_ - den.size(), "zero denominator");
                }
            }
            return DmfElement::constant(parse_rational(num + "/" + den));
        }
        throw ParseError(pos_, std::string("unexpected '") + c + "'");
    }

    std::string uint_literal(const char* what)
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            throw ParseError(start, std::string("expected ") + what);
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

DmfElement parse_dmf(std::string_view text)
{
    return DmfParser(text).parse();
}

} // namespace modfol
