#include "cagekit/intpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cagekit {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

void IntPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(Integer c) {
    IntPolynomial p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

IntPolynomial IntPolynomial::x() { return IntPolynomial{0, 1}; }

IntPolynomial IntPolynomial::monomial(Integer c, int deg) {
    if (deg < 0) throw std::invalid_argument("monomial: negative degree");
    IntPolynomial p;
    if (c != 0) {
        p.coeffs_.assign(static_cast<size_t>(deg) + 1, Integer(0));
        p.coeffs_.back() = std::move(c);
    }
    return p;
}

const Integer& IntPolynomial::leading() const {
    if (is_zero()) throw std::logic_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Integer IntPolynomial::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return coeffs_[static_cast<size_t>(i)];
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<Integer> out(std::max(coeffs_.size(), o.coeffs_.size()), Integer(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<Integer> out(std::max(coeffs_.size(), o.coeffs_.size()), Integer(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] -= o.coeffs_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return IntPolynomial();
    std::vector<Integer> out(coeffs_.size() + o.coeffs_.size() - 1, Integer(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const Integer& c) const {
    if (c == 0) return IntPolynomial();
    IntPolynomial r = *this;
    for (auto& a : r.coeffs_) a *= c;
    return r;
}

IntPolynomial IntPolynomial::power(unsigned e) const {
    IntPolynomial acc = constant(1);
    IntPolynomial base = *this;
    while (e) {
        if (e & 1u) acc = acc * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return acc;
}

Integer IntPolynomial::evaluate(const Integer& t) const {
    Integer acc = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i];
    return acc;
}

IntPolynomial IntPolynomial::compose(const IntPolynomial& inner) const {
    IntPolynomial acc;
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * inner + constant(coeffs_[i]);
    return acc;
}

IntPolynomial IntPolynomial::derivative() const {
    if (degree() < 1) return IntPolynomial();
    std::vector<Integer> out(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Integer(static_cast<long>(i));
    return IntPolynomial(std::move(out));
}

Integer IntPolynomial::content() const {
    Integer g = 0;
    for (const auto& c : coeffs_) g = int_gcd(g, c);
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return IntPolynomial();
    Integer g = content();
    IntPolynomial r = *this;
    for (auto& c : r.coeffs_) c /= g;
    return r;
}

std::string IntPolynomial::pretty() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Integer& c = coeffs_[static_cast<size_t>(i)];
        if (c == 0) continue;
        Integer a = int_abs(c);
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? '-' : '+');
        }
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str();
            os << 'x';
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

std::string IntPolynomial::coeff_list() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ',';
        os << coeffs_[i].get_str();
    }
    os << ']';
    return os.str();
}

IntPolynomial IntPolynomial::parse_coeff_list(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("polynomial literal must look like [c0,c1,...]");
    s = s.substr(1, s.size() - 2);
    std::vector<Integer> coeffs;
    if (!s.empty()) {
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) throw std::invalid_argument("empty coefficient in polynomial literal");
            try {
                coeffs.emplace_back(tok);
            } catch (const std::invalid_argument&) {
                throw std::invalid_argument("bad integer '" + tok + "' in polynomial literal");
            }
        }
    }
    return IntPolynomial(std::move(coeffs));
}

namespace {

RationalPoly make_rational(const std::vector<Rational>& cs) {
    Integer den = 1;
    for (const auto& q : cs) den = int_lcm(den, Integer(q.get_den()));
    std::vector<Integer> num(cs.size());
    for (size_t i = 0; i < cs.size(); ++i) {
        Rational scaled = cs[i] * Rational(den);
        num[i] = Integer(scaled.get_num());
    }
    RationalPoly rp{IntPolynomial(std::move(num)), den};
    if (rp.num.is_zero()) rp.den = 1;
    return rp;
}

}  // namespace

DivisionResult divrem(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    std::vector<Rational> rem(a.coeffs().size());
    for (size_t i = 0; i < rem.size(); ++i) rem[i] = Rational(a.coeffs()[i]);
    int db = b.degree();
    Rational lead(b.leading());
    std::vector<Rational> quot;
    if (a.degree() >= db) quot.assign(static_cast<size_t>(a.degree() - db) + 1, Rational(0));
    for (int i = a.degree(); i >= db; --i) {
        Rational c = rem[static_cast<size_t>(i)] / lead;
        if (c == 0) continue;
        quot[static_cast<size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<size_t>(i - db + j)] -= c * Rational(b.coeff(j));
    }
    if (!rem.empty()) rem.resize(static_cast<size_t>(std::max(db, 0)));
    return DivisionResult{make_rational(quot), make_rational(rem)};
}

std::optional<IntPolynomial> try_divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    if (a.is_zero()) return IntPolynomial();
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<Integer> rem = a.coeffs();
    int db = b.degree();
    std::vector<Integer> quot(static_cast<size_t>(a.degree() - db) + 1, Integer(0));
    for (int i = a.degree(); i >= db; --i) {
        Integer& top = rem[static_cast<size_t>(i)];
        if (top == 0) continue;
        if (!divides(b.leading(), top)) return std::nullopt;
        Integer c = top / b.leading();
        quot[static_cast<size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<size_t>(i - db + j)] -= c * b.coeff(j);
    }
    for (int i = 0; i < db; ++i)
        if (rem[static_cast<size_t>(i)] != 0) return std::nullopt;
    return IntPolynomial(std::move(quot));
}

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
    auto positive_primitive = [](const IntPolynomial& p) {
        if (p.is_zero()) return p;
        IntPolynomial pp = p.primitive_part();
        return pp.leading() < 0 ? -pp : pp;
    };
    IntPolynomial f = positive_primitive(a);
    IntPolynomial g = positive_primitive(b);
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        // Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g stays integral.
        Integer scale = int_pow(g.leading(), static_cast<unsigned long>(f.degree() - g.degree()) + 1);
        DivisionResult dr = divrem(f * scale, g);
        if (!dr.remainder.is_integral())
            throw std::logic_error("pseudo-division produced a non-integral remainder");
        f = g;
        g = positive_primitive(dr.remainder.num);
    }
    return positive_primitive(f);
}

}  // namespace cagekit
