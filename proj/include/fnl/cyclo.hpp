#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace fnl {

using Int = mpz_class;
using Rat = mpq_class;

/// Thrown when a modular reduction hits a denominator divisible by the prime.
struct bad_prime_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The cyclotomic field Q(zeta_n) presented as Q[x]/(Phi_n(x)).
///
/// Instances are immutable and interned per order; all element arithmetic
/// reduces into the power basis 1, x, ..., x^(phi(n)-1), so equality of
/// coefficient vectors decides equality of field elements.
class CycloField {
  public:
    static const CycloField& get(int order);

    int order() const { return order_; }
    int degree() const { return degree_; }
    /// Monic minimal polynomial Phi_n, coefficient of x^k at index k.
    const std::vector<Int>& min_poly() const { return phi_; }
    /// Basis expansion of x^k for k in [0, 2*degree-2] (enough for products).
    const std::vector<Int>& power_row(int k) const { return powers_.at(k); }

  private:
    explicit CycloField(int order);

    int order_;
    int degree_;
    std::vector<Int> phi_;
    std::vector<std::vector<Int>> powers_;
};

/// Element of Q(zeta_n) in canonical power-basis coordinates.
class CycloElem {
  public:
    CycloElem() : fld_(nullptr) {}
    explicit CycloElem(const CycloField& f) : fld_(&f), c_(f.degree()) {}
    CycloElem(const CycloField& f, std::vector<Rat> coeffs);
    /// Embeds a rational constant.
    CycloElem(const CycloField& f, const Rat& r);

    static CycloElem zero(const CycloField& f) { return CycloElem(f); }
    static CycloElem one(const CycloField& f) { return CycloElem(f, Rat(1)); }

    bool is_zero() const;
    bool attached() const { return fld_ != nullptr; }
    const CycloField& field() const;
    int order() const { return fld_ ? fld_->order() : 0; }
    const std::vector<Rat>& coeffs() const { return c_; }

    CycloElem operator-() const;
    CycloElem& operator+=(const CycloElem& o);
    CycloElem& operator-=(const CycloElem& o);
    CycloElem& operator*=(const CycloElem& o);
    CycloElem& operator*=(const Rat& s);
    friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
    friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
    friend CycloElem operator*(CycloElem a, const CycloElem& b) { return a *= b; }
    friend CycloElem operator*(CycloElem a, const Rat& s) { return a *= s; }
    friend CycloElem operator*(const Rat& s, CycloElem a) { return a *= s; }

    /// Exact inverse; throws std::domain_error on zero.
    CycloElem inverse() const;

    bool operator==(const CycloElem& o) const;
    bool operator!=(const CycloElem& o) const { return !(*this == o); }

    std::string str() const;

  private:
    const CycloField* fld_;
    std::vector<Rat> c_;

    void match(const CycloElem& o, const CycloField*& f) const;
};

/// zeta_{2d}^k as a canonical element of Q(zeta_{2d}); k may be negative.
CycloElem root_power(int d, long k);

/// Rising factorial x(x+1)...(x+y-1); empty product for y = 0.
Rat pochhammer(const Rat& x, unsigned long y);

/// floor(r) and r - floor(r), the floor convention valid for negative r.
std::pair<Int, Rat> floor_frac(const Rat& r);

} // namespace fnl
