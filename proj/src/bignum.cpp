#include "posetlab/bignum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace posetlab {

Natural::Natural(std::uint64_t v) {
    if (v) limbs_.push_back(static_cast<std::uint32_t>(v));
    if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
}

Natural Natural::from_u128(unsigned __int128 v) {
    Natural r;
    while (v) {
        r.limbs_.push_back(static_cast<std::uint32_t>(v));
        v >>= 32;
    }
    return r;
}

Natural Natural::from_decimal(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("Natural: empty decimal string");
    Natural r;
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("Natural: bad decimal digit");
        r.mul_small_add(10, static_cast<std::uint32_t>(c - '0'));
    }
    return r;
}

void Natural::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::uint64_t Natural::to_u64() const {
    std::uint64_t v = 0;
    if (limbs_.size() > 2) throw std::overflow_error("Natural: does not fit in 64 bits");
    if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
}

double Natural::to_double() const {
    double v = 0.0;
    for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it) v = v * 4294967296.0 + *it;
    return v;
}

int cmp(const Natural& a, const Natural& b) {
    if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

Natural& Natural::operator+=(const Natural& o) {
    limbs_.resize(std::max(limbs_.size(), o.limbs_.size()), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t s = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0);
        limbs_[i] = static_cast<std::uint32_t>(s);
        carry = s >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

Natural& Natural::operator-=(const Natural& o) {
    if (cmp(*this, o) < 0) throw std::underflow_error("Natural: negative subtraction");
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(limbs_[i]) - borrow -
                         (i < o.limbs_.size() ? static_cast<std::int64_t>(o.limbs_[i]) : 0);
        borrow = d < 0;
        if (d < 0) d += (std::int64_t{1} << 32);
        limbs_[i] = static_cast<std::uint32_t>(d);
    }
    trim();
    return *this;
}

Natural Natural::operator*(const Natural& o) const {
    if (is_zero() || o.is_zero()) return Natural{};
    Natural r;
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
            std::uint64_t cur = r.limbs_[i + j] + carry +
                                static_cast<std::uint64_t>(limbs_[i]) * o.limbs_[j];
            r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        r.limbs_[i + o.limbs_.size()] += static_cast<std::uint32_t>(carry);
    }
    r.trim();
    return r;
}

std::size_t Natural::bit_length() const {
    if (limbs_.empty()) return 0;
    return 32 * (limbs_.size() - 1) + (32 - static_cast<std::size_t>(std::countl_zero(limbs_.back())));
}

bool Natural::bit(std::size_t i) const {
    std::size_t limb = i / 32;
    if (limb >= limbs_.size()) return false;
    return (limbs_[limb] >> (i % 32)) & 1u;
}

void Natural::set_bit(std::size_t i) {
    std::size_t limb = i / 32;
    if (limb >= limbs_.size()) limbs_.resize(limb + 1, 0);
    limbs_[limb] |= (std::uint32_t{1} << (i % 32));
}

void Natural::shl1_or(bool low_bit) {
    std::uint32_t carry = low_bit ? 1u : 0u;
    for (auto& l : limbs_) {
        std::uint32_t next = l >> 31;
        l = (l << 1) | carry;
        carry = next;
    }
    if (carry) limbs_.push_back(carry);
}

void Natural::divmod(const Natural& a, const Natural& d, Natural& q, Natural& r) {
    if (d.is_zero()) throw std::domain_error("Natural: division by zero");
    q = Natural{};
    r = Natural{};
    // shift-subtract long division, high bit first
    for (std::size_t i = a.bit_length(); i-- > 0;) {
        r.shl1_or(a.bit(i));
        if (cmp(r, d) >= 0) {
            r -= d;
            q.set_bit(i);
        }
    }
    q.trim();
    r.trim();
}

Natural Natural::operator/(const Natural& d) const {
    Natural q, r;
    divmod(*this, d, q, r);
    return q;
}

Natural Natural::operator%(const Natural& d) const {
    Natural q, r;
    divmod(*this, d, q, r);
    return r;
}

Natural Natural::gcd(Natural a, Natural b) {
    while (!b.is_zero()) {
        Natural q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::uint32_t Natural::div_small(std::uint32_t d) {
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
    }
    trim();
    return static_cast<std::uint32_t>(rem);
}

void Natural::mul_small_add(std::uint32_t m, std::uint32_t a) {
    std::uint64_t carry = a;
    for (auto& l : limbs_) {
        std::uint64_t cur = static_cast<std::uint64_t>(l) * m + carry;
        l = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
    }
    while (carry) {
        limbs_.push_back(static_cast<std::uint32_t>(carry));
        carry >>= 32;
    }
    trim();
}

std::string Natural::to_decimal() const {
    if (is_zero()) return "0";
    Natural t = *this;
    std::string out;
    while (!t.is_zero()) {
        std::uint32_t chunk = t.div_small(1000000000u);
        for (int i = 0; i < 9; ++i) {
            out.push_back(static_cast<char>('0' + chunk % 10));
            chunk /= 10;
        }
    }
    while (out.size() > 1 && out.back() == '0') out.pop_back();
    std::reverse(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------

Rational::Rational(std::int64_t v)
    : neg_(v < 0), num_(static_cast<std::uint64_t>(v < 0 ? -v : v)), den_(1) {}

Rational::Rational(std::int64_t num, std::uint64_t den)
    : neg_(num < 0), num_(static_cast<std::uint64_t>(num < 0 ? -num : num)), den_(den) {
    reduce();
}

Rational::Rational(bool neg, Natural num, Natural den)
    : neg_(neg), num_(std::move(num)), den_(std::move(den)) {
    reduce();
}

void Rational::reduce() {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    if (num_.is_zero()) {
        neg_ = false;
        den_ = Natural{1};
        return;
    }
    Natural g = Natural::gcd(num_, den_);
    num_ = num_ / g;
    den_ = den_ / g;
}

Rational Rational::operator+(const Rational& o) const {
    Natural a = num_ * o.den_;
    Natural b = o.num_ * den_;
    Natural d = den_ * o.den_;
    if (neg_ == o.neg_) return Rational(neg_, a + b, std::move(d));
    if (cmp(a, b) >= 0) return Rational(neg_, a - b, std::move(d));
    return Rational(o.neg_, b - a, std::move(d));
}

Rational Rational::operator-(const Rational& o) const {
    Rational t = o;
    if (!t.num_.is_zero()) t.neg_ = !t.neg_;
    return *this + t;
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(neg_ != o.neg_, num_ * o.num_, den_ * o.den_);
}

int cmp(const Rational& a, const Rational& b) {
    if (a.neg_ != b.neg_) return a.neg_ ? -1 : 1;
    int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
    return a.neg_ ? -c : c;
}

double Rational::to_double() const {
    double v = num_.to_double() / den_.to_double();
    return neg_ ? -v : v;
}

std::string Rational::str() const {
    std::string s;
    if (neg_) s.push_back('-');
    s += num_.to_decimal();
    s.push_back('/');
    s += den_.to_decimal();
    return s;
}

} // namespace posetlab
