#include "fnl/cyclo.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace fnl {

namespace {

// Exact division of integer polynomials, remainder must vanish.
std::vector<Int> poly_div_exact(const std::vector<Int>& num, const std::vector<Int>& den) {
    std::vector<Int> rem = num;
    if (den.empty() || den.back() == 0)
        throw std::invalid_argument("poly_div_exact: bad divisor");
    if (rem.size() < den.size())
        throw std::invalid_argument("poly_div_exact: deg(num) < deg(den)");
    std::vector<Int> quo(rem.size() - den.size() + 1);
    for (int k = static_cast<int>(quo.size()) - 1; k >= 0; --k) {
        Int q = rem[k + den.size() - 1] / den.back();
        if (q * den.back() != rem[k + den.size() - 1])
            throw std::logic_error("poly_div_exact: leading term not divisible");
        quo[k] = q;
        for (size_t j = 0; j < den.size(); ++j)
            rem[k + j] -= q * den[j];
    }
    for (const Int& c : rem)
        if (c != 0)
            throw std::logic_error("poly_div_exact: nonzero remainder");
    return quo;
}

// Phi_n by the recursive formula: divide x^n - 1 by Phi_m over proper divisors m.
std::vector<Int> cyclotomic_poly(int n, std::map<int, std::vector<Int>>& memo) {
    auto it = memo.find(n);
    if (it != memo.end())
        return it->second;
    std::vector<Int> num(n + 1);
    num[0] = -1;
    num[n] = 1;
    for (int m = 1; m < n; ++m)
        if (n % m == 0)
            num = poly_div_exact(num, cyclotomic_poly(m, memo));
    memo[n] = num;
    return num;
}

} // namespace

CycloField::CycloField(int order) : order_(order) {
    if (order < 1)
        throw std::invalid_argument("CycloField: order must be positive");
    std::map<int, std::vector<Int>> memo;
    phi_ = cyclotomic_poly(order, memo);
    degree_ = static_cast<int>(phi_.size()) - 1;
    // x^k mod Phi for k = 0 .. 2*degree-2.
    powers_.resize(2 * degree_ - 1);
    for (int k = 0; k < degree_; ++k) {
        powers_[k].assign(degree_, 0);
        powers_[k][k] = 1;
    }
    for (int k = degree_; k < 2 * degree_ - 1; ++k) {
        // x * powers_[k-1], reduced by the monic Phi.
        std::vector<Int> row(degree_ + 1, 0);
        for (int j = 0; j < degree_; ++j)
            row[j + 1] = powers_[k - 1][j];
        Int lead = row[degree_];
        powers_[k].assign(degree_, 0);
        for (int j = 0; j < degree_; ++j)
            powers_[k][j] = row[j] - lead * phi_[j];
    }
}

const CycloField& CycloField::get(int order) {
    static std::mutex mu;
    static std::map<int, const CycloField*> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(order);
    if (it == registry.end())
        it = registry.emplace(order, new CycloField(order)).first;
    return *it->second;
}

CycloElem::CycloElem(const CycloField& f, std::vector<Rat> coeffs) : fld_(&f), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != f.degree())
        throw std::invalid_argument("CycloElem: coefficient count != field degree");
    for (Rat& x : c_)
        x.canonicalize();
}

CycloElem::CycloElem(const CycloField& f, const Rat& r) : fld_(&f), c_(f.degree()) {
    c_[0] = r;
}

const CycloField& CycloElem::field() const {
    if (!fld_)
        throw std::logic_error("CycloElem: unattached zero has no field");
    return *fld_;
}

bool CycloElem::is_zero() const {
    for (const Rat& x : c_)
        if (x != 0)
            return false;
    return true;
}

void CycloElem::match(const CycloElem& o, const CycloField*& f) const {
    f = fld_ ? fld_ : o.fld_;
    if (fld_ && o.fld_ && fld_ != o.fld_)
        throw std::invalid_argument("CycloElem: mixing different field orders");
}

CycloElem CycloElem::operator-() const {
    CycloElem r = *this;
    for (Rat& x : r.c_)
        x = -x;
    return r;
}

CycloElem& CycloElem::operator+=(const CycloElem& o) {
    const CycloField* f;
    match(o, f);
    if (!f)
        return *this;
    if (!fld_)
        *this = CycloElem(*f);
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& o) {
    const CycloField* f;
    match(o, f);
    if (!f)
        return *this;
    if (!fld_)
        *this = CycloElem(*f);
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    return *this;
}

CycloElem& CycloElem::operator*=(const CycloElem& o) {
    const CycloField* f;
    match(o, f);
    if (!f)
        return *this;
    if (!fld_ || !o.fld_) { // multiplying by an unattached zero
        *this = CycloElem(*f);
        return *this;
    }
    int n = f->degree();
    std::vector<Rat> conv(2 * n - 1);
    for (int i = 0; i < n; ++i) {
        if (c_[i] == 0)
            continue;
        for (int j = 0; j < n; ++j) {
            if (o.c_[j] == 0)
                continue;
            conv[i + j] += c_[i] * o.c_[j];
        }
    }
    std::vector<Rat> out(n);
    for (int k = 0; k < 2 * n - 1; ++k) {
        if (conv[k] == 0)
            continue;
        if (k < n) {
            out[k] += conv[k];
        } else {
            const std::vector<Int>& row = f->power_row(k);
            for (int j = 0; j < n; ++j)
                if (row[j] != 0)
                    out[j] += conv[k] * Rat(row[j]);
        }
    }
    c_ = std::move(out);
    return *this;
}

CycloElem& CycloElem::operator*=(const Rat& s) {
    for (Rat& x : c_)
        x *= s;
    return *this;
}

bool CycloElem::operator==(const CycloElem& o) const {
    if (fld_ && o.fld_ && fld_ != o.fld_)
        return false;
    if (!fld_)
        return o.is_zero();
    if (!o.fld_)
        return is_zero();
    return c_ == o.c_;
}

namespace {

// Polynomials over Q, lowest degree first; helpers for the extended gcd.
using QPoly = std::vector<Rat>;

void qp_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty())
        return {};
    QPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    qp_trim(r);
    return r;
}

QPoly qp_sub(QPoly a, const QPoly& b) {
    if (b.size() > a.size())
        a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    qp_trim(a);
    return a;
}

// Returns (quotient, remainder) of a / b over Q.
std::pair<QPoly, QPoly> qp_divmod(QPoly a, const QPoly& b) {
    QPoly q;
    if (b.empty())
        throw std::domain_error("qp_divmod: division by zero polynomial");
    while (a.size() >= b.size()) {
        Rat f = a.back() / b.back();
        size_t shift = a.size() - b.size();
        if (q.size() < shift + 1)
            q.resize(shift + 1);
        q[shift] += f;
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= f * b[i];
        qp_trim(a);
    }
    return {q, a};
}

} // namespace

CycloElem CycloElem::inverse() const {
    if (is_zero())
        throw std::domain_error("CycloElem: inverse of zero");
    const CycloField& f = field();
    // Extended Euclid on (elem, Phi): find u with u*elem = 1 (mod Phi).
    QPoly r0(c_.begin(), c_.end());
    qp_trim(r0);
    QPoly r1(f.min_poly().size());
    for (size_t i = 0; i < f.min_poly().size(); ++i)
        r1[i] = Rat(f.min_poly()[i]);
    QPoly s0 = {Rat(1)}, s1 = {};
    while (!r1.empty()) {
        auto [q, r] = qp_divmod(r0, r1);
        QPoly s2 = qp_sub(s0, qp_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1)
        throw std::logic_error("CycloElem: element not invertible mod Phi");
    Rat lead = r0[0];
    std::vector<Rat> out(f.degree());
    for (size_t i = 0; i < s0.size(); ++i)
        out[i] = s0[i] / lead;
    return CycloElem(f, std::move(out));
}

std::string CycloElem::str() const {
    if (!fld_ || is_zero())
        return "0";
    std::string s;
    for (int i = 0; i < fld_->degree(); ++i) {
        if (c_[i] == 0)
            continue;
        if (!s.empty())
            s += " + ";
        s += c_[i].get_str();
        if (i > 0)
            s += "*z^" + std::to_string(i);
    }
    return s;
}

CycloElem root_power(int d, long k) {
    if (d < 1)
        throw std::invalid_argument("root_power: d must be positive");
    const int n = 2 * d;
    const CycloField& f = CycloField::get(n);
    long e = k % n;
    if (e < 0)
        e += n;
    // Reduce x^e by the monic Phi_n via synthetic division.
    std::vector<Int> p(e + 1, 0);
    p[e] = 1;
    const std::vector<Int>& phi = f.min_poly();
    for (long t = e; t >= f.degree(); --t) {
        Int lead = p[t];
        if (lead == 0)
            continue;
        p[t] = 0;
        for (int j = 0; j < f.degree(); ++j)
            p[t - f.degree() + j] -= lead * phi[j];
    }
    std::vector<Rat> c(f.degree());
    for (int j = 0; j < f.degree() && j < static_cast<int>(p.size()); ++j)
        c[j] = Rat(p[j]);
    return CycloElem(f, std::move(c));
}

Rat pochhammer(const Rat& x, unsigned long y) {
    Rat acc(1);
    Rat term = x;
    for (unsigned long i = 0; i < y; ++i) {
        acc *= term;
        term += 1;
    }
    return acc;
}

std::pair<Int, Rat> floor_frac(const Rat& r) {
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    Rat frac = r - Rat(fl);
    return {fl, frac};
}

} // namespace fnl
