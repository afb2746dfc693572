#include "qsums/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qsums {

namespace {
const BigInt kZero = 0;
}

LaurentPoly::LaurentPoly(long min_exp, std::vector<BigInt> coeffs)
    : min_exp_(min_exp), coeffs_(std::move(coeffs)) {
    canonicalize();
}

void LaurentPoly::canonicalize() {
    std::size_t lo = 0;
    while (lo < coeffs_.size() && coeffs_[lo] == 0) ++lo;
    if (lo == coeffs_.size()) {
        coeffs_.clear();
        min_exp_ = 0;
        return;
    }
    std::size_t hi = coeffs_.size();
    while (coeffs_[hi - 1] == 0) --hi;
    if (lo > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lo));
        min_exp_ += static_cast<long>(lo);
    }
    coeffs_.resize(hi - lo);
}

LaurentPoly LaurentPoly::monomial(BigInt c, long e) {
    if (c == 0) return LaurentPoly();
    LaurentPoly p;
    p.min_exp_ = e;
    p.coeffs_.push_back(std::move(c));
    return p;
}

std::size_t LaurentPoly::term_count() const {
    std::size_t n = 0;
    for (const auto& c : coeffs_)
        if (c != 0) ++n;
    return n;
}

long LaurentPoly::degree() const {
    if (coeffs_.empty()) throw std::domain_error("degree of the zero polynomial");
    return min_exp_ + static_cast<long>(coeffs_.size()) - 1;
}

long LaurentPoly::low_exp() const {
    if (coeffs_.empty()) throw std::domain_error("low_exp of the zero polynomial");
    return min_exp_;
}

const BigInt& LaurentPoly::coeff(long e) const {
    if (coeffs_.empty() || e < min_exp_) return kZero;
    std::size_t i = static_cast<std::size_t>(e - min_exp_);
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

bool LaurentPoly::has_nonneg_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const BigInt& c) { return c >= 0; });
}

BigInt LaurentPoly::eval_at_one() const {
    BigInt s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
}

LaurentPoly LaurentPoly::subst_q_inverse() const {
    if (coeffs_.empty()) return LaurentPoly();
    LaurentPoly p;
    p.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
    p.min_exp_ = -(min_exp_ + static_cast<long>(coeffs_.size()) - 1);
    return p;
}

LaurentPoly LaurentPoly::shifted(long e) const {
    if (coeffs_.empty()) return LaurentPoly();
    LaurentPoly p = *this;
    p.min_exp_ += e;
    return p;
}

LaurentPoly LaurentPoly::pow(long k) const {
    if (k < 0) throw std::invalid_argument("pow: negative exponent");
    LaurentPoly acc = LaurentPoly::constant(1);
    LaurentPoly base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return acc;
}

LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly p = a;
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long lo = std::min(a.min_exp_, b.min_exp_);
    long hi = std::max(a.degree(), b.degree());
    std::vector<BigInt> out(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        out[static_cast<std::size_t>(a.min_exp_ - lo) + i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
        out[static_cast<std::size_t>(b.min_exp_ - lo) + i] += b.coeffs_[i];
    return LaurentPoly(lo, std::move(out));
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return LaurentPoly();
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        const BigInt& ai = a.coeffs_[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            out[i + j] += ai * b.coeffs_[j];
        }
    }
    return LaurentPoly(a.min_exp_ + b.min_exp_, std::move(out));
}

std::string LaurentPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        long e = min_exp_ + static_cast<long>(i);
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        BigInt mag = neg ? BigInt(-c) : c;
        if (e == 0) {
            os << mag.str();
        } else {
            if (mag != 1) os << mag.str() << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
    return os << p.to_string();
}

std::string DivisionFailure::describe() const {
    std::ostringstream os;
    os << (kind == Kind::NonzeroRemainder ? "nonzero remainder" : "non-integer quotient step");
    os << ": " << remainder.to_string();
    return os.str();
}

ExactDivision exact_div(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("exact_div: zero divisor");
    if (num.is_zero()) return ExactDivision::success(LaurentPoly());

    // Quotient offset: lowest terms of num and den must pair up if a Laurent
    // quotient exists at all.
    const long q_min = num.min_exp() - den.min_exp();
    const std::vector<BigInt>& d = den.coeffs();
    std::vector<BigInt> rem = num.coeffs();

    if (rem.size() < d.size())
        return ExactDivision::fail(
            {DivisionFailure::Kind::NonzeroRemainder, num});

    const BigInt& dlead = d.back();
    std::vector<BigInt> quot(rem.size() - d.size() + 1);
    for (std::size_t step = quot.size(); step-- > 0;) {
        BigInt& lead = rem[step + d.size() - 1];
        if (lead == 0) continue;
        BigInt c, r;
        boost::multiprecision::divide_qr(lead, dlead, c, r);
        if (r != 0)
            return ExactDivision::fail({DivisionFailure::Kind::NonIntegerStep,
                                        LaurentPoly(num.min_exp(), std::move(rem))});
        quot[step] = c;
        for (std::size_t t = 0; t + 1 < d.size(); ++t) rem[step + t] -= c * d[t];
        lead = 0;
    }
    for (const auto& c : rem)
        if (c != 0)
            return ExactDivision::fail({DivisionFailure::Kind::NonzeroRemainder,
                                        LaurentPoly(num.min_exp(), std::move(rem))});
    return ExactDivision::success(LaurentPoly(q_min, std::move(quot)));
}

LaurentPoly exact_div_checked(const LaurentPoly& num, const LaurentPoly& den,
                              const char* context) {
    ExactDivision d = exact_div(num, den);
    if (!d.ok())
        throw std::logic_error(std::string(context) + ": " + d.failure().describe());
    return d.quotient();
}

}  // namespace qsums
