#include "dioph/poly.hpp"

#include <algorithm>
#include <sstream>

namespace dioph {
namespace {

// Dense rational polynomial helpers, increasing degree order.
using RPoly = std::vector<Rat>;

int rdeg(const RPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (sgn(p[i]) != 0) return i;
    return -1;
}

RPoly to_rpoly(const IntPoly& p) {
    RPoly r;
    r.reserve(p.coeffs().size());
    for (const Int& z : p.coeffs()) r.emplace_back(z);
    return r;
}

// a mod b (rational coefficients), b nonzero.
RPoly rrem(RPoly a, const RPoly& b) {
    int db = rdeg(b);
    const Rat& lead = b[db];
    for (int da = rdeg(a); da >= db; da = rdeg(a)) {
        Rat f = a[da] / lead;
        for (int i = 0; i <= db; ++i) a[da - db + i] -= f * b[i];
        a[da] = 0;  // kill round-off-free leading term explicitly
    }
    return a;
}

IntPoly primitive_of(const RPoly& p) {
    int d = rdeg(p);
    if (d < 0) return IntPoly::zero();
    Int den(1);
    for (int i = 0; i <= d; ++i)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), p[i].get_den().get_mpz_t());
    std::vector<Int> c(d + 1);
    for (int i = 0; i <= d; ++i) {
        Rat v = p[i] * den;
        c[i] = v.get_num();
    }
    IntPoly q{std::move(c)};
    auto [cont, prim] = q.content_and_primitive();
    return prim;
}

}  // namespace

IntPoly IntPoly::monomial(const Int& a, unsigned deg) {
    std::vector<Int> c(deg + 1, Int(0));
    c[deg] = a;
    return IntPoly{std::move(c)};
}

bool IntPoly::is_zero() const { return degree() < 0; }

int IntPoly::degree() const {
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i)
        if (sgn(c_[i]) != 0) return i;
    return -1;
}

Int IntPoly::height() const {
    Int h(0);
    for (const Int& a : c_) {
        Int v = abs(a);
        if (v > h) h = v;
    }
    return h;
}

Rat IntPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Int IntPoly::eval_int(const Int& x) const {
    Int acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Enclosure IntPoly::eval(const Enclosure& x) const {
    Enclosure acc{Rat(0)};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + Enclosure{Rat(*it)};
    return acc;
}

IntPoly IntPoly::derivative(unsigned order) const {
    std::vector<Int> c = c_;
    for (unsigned k = 0; k < order; ++k) {
        std::vector<Int> d;
        for (size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * Int(static_cast<long>(i)));
        c = std::move(d);
    }
    return IntPoly{std::move(c)};
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> c(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + o.coeff(i);
    return IntPoly{std::move(c)};
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<Int> c(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - o.coeff(i);
    return IntPoly{std::move(c)};
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return zero();
    std::vector<Int> c(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return IntPoly{std::move(c)};
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> c = c_;
    for (Int& a : c) a = -a;
    return IntPoly{std::move(c)};
}

IntPoly IntPoly::scaled(const Int& k) const {
    std::vector<Int> c = c_;
    for (Int& a : c) a *= k;
    return IntPoly{std::move(c)};
}

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly acc{{1}};
    for (unsigned i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

bool IntPoly::operator==(const IntPoly& o) const {
    size_t n = std::max(c_.size(), o.c_.size());
    for (size_t i = 0; i < n; ++i)
        if (coeff(i) != o.coeff(i)) return false;
    return true;
}

Int IntPoly::content() const {
    if (is_zero()) throw std::domain_error("content of zero polynomial");
    Int g(0);
    for (const Int& a : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    return g;
}

std::pair<Int, IntPoly> IntPoly::content_and_primitive() const {
    Int g = content();
    std::vector<Int> c(degree() + 1);
    for (int i = 0; i <= degree(); ++i) c[i] = c_[i] / g;
    return {g, IntPoly{std::move(c)}};
}

IntPoly IntPoly::square_free_part() const {
    if (degree() <= 1) return content_and_primitive().second;
    IntPoly g = poly_gcd(*this, derivative());
    if (g.degree() == 0) return content_and_primitive().second;
    // Exact division over the rationals, then normalize.
    RPoly num = to_rpoly(*this), den = to_rpoly(g);
    int dn = rdeg(num), dd = rdeg(den);
    RPoly quot(dn - dd + 1, Rat(0));
    for (int da = dn; da >= dd; da = rdeg(num)) {
        Rat f = num[da] / den[dd];
        quot[da - dd] = f;
        for (int i = 0; i <= dd; ++i) num[da - dd + i] -= f * den[i];
        num[da] = 0;
    }
    return primitive_of(quot);
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (sgn(c_[i]) == 0) continue;
        Int a = c_[i];
        if (!first) os << (sgn(a) > 0 ? "+" : "-");
        else if (sgn(a) < 0)
            os << "-";
        Int v = abs(a);
        if (i == 0 || v != 1) os << v.get_str();
        if (i > 0) {
            if (v != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.is_zero() ? IntPoly::zero() : b.content_and_primitive().second;
    if (b.is_zero()) return a.content_and_primitive().second;
    RPoly p = to_rpoly(a), q = to_rpoly(b);
    while (rdeg(q) >= 0) {
        RPoly r = rrem(p, q);
        p = std::move(q);
        q = std::move(r);
    }
    IntPoly g = primitive_of(p);
    if (g.degree() >= 0 && sgn(g.coeff(g.degree())) < 0) g = -g;
    return g;
}

namespace {

std::vector<Int> divisors_of(const Int& n) {
    std::vector<Int> out;
    Int a = abs(n);
    for (Int d(1); d * d <= a; ++d) {
        if (a % d == 0) {
            out.push_back(d);
            if (d * d != a) out.push_back(a / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Exact division of p by d over Z; nullopt if not an integer-polynomial factor.
std::optional<IntPoly> divide_exact(const IntPoly& p, const IntPoly& d) {
    RPoly num = to_rpoly(p), den = to_rpoly(d);
    int dn = rdeg(num), dd = rdeg(den);
    if (dd < 0 || dn < dd) return std::nullopt;
    RPoly quot(dn - dd + 1, Rat(0));
    for (int da = rdeg(num); da >= dd; da = rdeg(num)) {
        Rat f = num[da] / den[dd];
        quot[da - dd] = f;
        for (int i = 0; i <= dd; ++i) num[da - dd + i] -= f * den[i];
        num[da] = 0;
    }
    if (rdeg(num) >= 0) return std::nullopt;
    std::vector<Int> c(quot.size());
    for (size_t i = 0; i < quot.size(); ++i) {
        if (quot[i].get_den() != 1) return std::nullopt;
        c[i] = quot[i].get_num();
    }
    return IntPoly{std::move(c)};
}

// Finds a rational root p/q and returns the linear factor q*x - p.
std::optional<IntPoly> rational_root_factor(const IntPoly& p) {
    int n = p.degree();
    if (sgn(p.coeff(0)) == 0) return IntPoly{{0, 1}};  // x divides
    for (const Int& q : divisors_of(p.coeff(n))) {
        for (const Int& num : divisors_of(p.coeff(0))) {
            for (int s : {1, -1}) {
                Rat root(s > 0 ? num : Int(-num), q);
                root.canonicalize();
                if (sgn(p.eval(root)) == 0)
                    return IntPoly{{-root.get_num(), root.get_den()}};
            }
        }
    }
    return std::nullopt;
}

}  // namespace

bool is_irreducible(const IntPoly& p, std::pair<IntPoly, IntPoly>* witness) {
    int n = p.degree();
    if (n < 1) throw std::domain_error("is_irreducible: degree < 1");
    if (p.content() != 1)
        throw std::domain_error("is_irreducible: input not primitive");
    if (n == 1) return true;
    if (auto lin = rational_root_factor(p)) {
        if (witness) *witness = {*lin, *divide_exact(p, *lin)};
        return false;
    }
    if (n <= 3) return true;  // no rational root => no degree-1 factor
    if (n > 5)
        throw std::domain_error("is_irreducible: degree > 5 unsupported");
    // Any factorization of degree 4 or 5 has a factor of degree <= 2, and a
    // degree-1 factor was ruled out above.  Search quadratic factors with
    // b2 | lead, b0 | const, |b1| <= 2^n * H.
    Int b1_bound = (Int(1) << n) * p.height();
    for (const Int& b2 : divisors_of(p.coeff(n))) {
        for (const Int& b0a : divisors_of(p.coeff(0))) {
            for (int s : {1, -1}) {
                Int b0 = s > 0 ? b0a : Int(-b0a);
                for (Int b1 = -b1_bound; b1 <= b1_bound; ++b1) {
                    IntPoly cand{{b0, b1, b2}};
                    if (auto quo = divide_exact(p, cand)) {
                        if (witness) *witness = {cand, *quo};
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

}  // namespace dioph
