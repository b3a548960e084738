// Copyright 2026 The repcheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "repcheck/error.hpp"

namespace repcheck {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt &v) { return v.str(); }

inline std::string to_string(const Rational &q) {
    BigInt num = boost::multiprecision::numerator(q);
    BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

inline bool is_integer(const Rational &q) { return boost::multiprecision::denominator(q) == 1; }

/// Exact square root of a non-negative rational inside Q(sqrt 2), when one exists.
/// Returns (rational part a, sqrt2 part b) with sqrt(q) = a + b*sqrt(2).
inline std::optional<std::pair<Rational, Rational>> sqrt_rational_in_real_subfield(const Rational &q) {
    if (q < 0) {
        return std::nullopt;
    }
    if (q == 0) {
        return std::make_pair(Rational(0), Rational(0));
    }
    auto exact_root = [](const BigInt &n) -> std::optional<BigInt> {
        BigInt r = boost::multiprecision::sqrt(n);
        if (r * r == n) {
            return r;
        }
        return std::nullopt;
    };
    BigInt num = boost::multiprecision::numerator(q);
    BigInt den = boost::multiprecision::denominator(q);
    auto rn = exact_root(num);
    auto rd = exact_root(den);
    if (rn && rd) {
        return std::make_pair(Rational(*rn, *rd), Rational(0));
    }
    // sqrt(q) = s * sqrt(2) / 2 where s^2 = 2q.
    Rational twice = q * 2;
    auto tn = exact_root(boost::multiprecision::numerator(twice));
    auto td = exact_root(boost::multiprecision::denominator(twice));
    if (tn && td) {
        return std::make_pair(Rational(0), Rational(*tn, *td) / 2);
    }
    return std::nullopt;
}

/// Element of the cyclotomic field Q(zeta) with zeta a primitive 8th root of unity.
///
/// Stored in the power basis: c0 + c1*zeta + c2*zeta^2 + c3*zeta^3, with zeta^4 = -1.
/// The field contains i = zeta^2 and sqrt(2) = zeta - zeta^3, which is enough for
/// every character value and matrix entry used in this library.
class CycloNum {
   public:
    using Coeffs = std::array<Rational, 4>;

    CycloNum() = default;
    CycloNum(int v) : c_{Rational(v), 0, 0, 0} {}  // NOLINT(implicit)
    CycloNum(const Rational &v) : c_{v, 0, 0, 0} {}  // NOLINT(implicit)
    explicit CycloNum(Coeffs c) : c_(std::move(c)) {}
    CycloNum(Rational c0, Rational c1, Rational c2, Rational c3) : c_{c0, c1, c2, c3} {}

    static CycloNum zeta() { return {0, 1, 0, 0}; }
    static CycloNum zeta_pow(int k) {
        int e = ((k % 8) + 8) % 8;
        CycloNum r;
        if (e < 4) {
            r.c_[e] = 1;
        } else {
            r.c_[e - 4] = -1;
        }
        return r;
    }
    static CycloNum i() { return {0, 0, 1, 0}; }
    static CycloNum sqrt2() { return {0, 1, 0, -1}; }
    static CycloNum inv_sqrt2() { return {0, Rational(1, 2), 0, Rational(-1, 2)}; }

    const Coeffs &coeffs() const { return c_; }
    const Rational &coeff(std::size_t k) const { return c_.at(k); }

    bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
    bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
    bool is_integer() const { return is_rational() && repcheck::is_integer(c_[0]); }

    const Rational &rational_value() const {
        if (!is_rational()) {
            throw Error(ErrorKind::NotACharacter, "value " + str() + " is not rational");
        }
        return c_[0];
    }

    /// Galois automorphism zeta -> zeta^k for odd k.
    CycloNum galois(int k) const {
        CycloNum r;
        for (int j = 0; j < 4; j++) {
            if (c_[j] != 0) {
                r += CycloNum::zeta_pow(j * k) * CycloNum(c_[j]);
            }
        }
        return r;
    }

    /// Complex conjugation, zeta -> zeta^7 = -zeta^3.
    CycloNum conj() const { return {c_[0], -c_[3], -c_[2], -c_[1]}; }

    /// x * conj(x); always lies in the real subfield Q(sqrt 2).
    CycloNum norm2() const { return *this * conj(); }

    /// Field norm down to Q: the product of all four Galois conjugates.
    Rational field_norm() const {
        CycloNum p = *this * galois(3) * galois(5) * galois(7);
        return p.rational_value();
    }

    CycloNum inverse() const {
        if (is_zero()) {
            throw Error(ErrorKind::DivisionByZero, "inverse of zero in Q(zeta8)");
        }
        CycloNum others = galois(3) * galois(5) * galois(7);
        Rational n = (*this * others).rational_value();
        return others * CycloNum(Rational(1) / n);
    }

    CycloNum operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

    CycloNum &operator+=(const CycloNum &o) {
        for (int k = 0; k < 4; k++) c_[k] += o.c_[k];
        return *this;
    }
    CycloNum &operator-=(const CycloNum &o) {
        for (int k = 0; k < 4; k++) c_[k] -= o.c_[k];
        return *this;
    }
    CycloNum &operator*=(const CycloNum &o) {
        *this = *this * o;
        return *this;
    }
    CycloNum &operator/=(const CycloNum &o) {
        *this = *this * o.inverse();
        return *this;
    }

    friend CycloNum operator+(CycloNum a, const CycloNum &b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum &b) { return a -= b; }
    friend CycloNum operator*(const CycloNum &a, const CycloNum &b) {
        // Product of polynomials in zeta reduced by zeta^4 = -1.
        std::array<Rational, 7> raw{};
        for (int j = 0; j < 4; j++) {
            if (a.c_[j] == 0) continue;
            for (int k = 0; k < 4; k++) {
                if (b.c_[k] == 0) continue;
                raw[j + k] += a.c_[j] * b.c_[k];
            }
        }
        return {raw[0] - raw[4], raw[1] - raw[5], raw[2] - raw[6], raw[3]};
    }
    friend CycloNum operator/(const CycloNum &a, const CycloNum &b) { return a * b.inverse(); }

    friend bool operator==(const CycloNum &a, const CycloNum &b) { return a.c_ == b.c_; }
    friend bool operator!=(const CycloNum &a, const CycloNum &b) { return !(a == b); }
    friend bool operator<(const CycloNum &a, const CycloNum &b) {
        for (int k = 0; k < 4; k++) {
            if (a.c_[k] < b.c_[k]) return true;
            if (b.c_[k] < a.c_[k]) return false;
        }
        return false;
    }

    /// Embedding into C with zeta = exp(i*pi/4). Display only.
    std::complex<double> to_complex() const {
        const double h = 0.70710678118654752440;
        std::complex<double> z{h, h};
        std::complex<double> acc{0, 0};
        std::complex<double> p{1, 0};
        for (int k = 0; k < 4; k++) {
            acc += c_[k].convert_to<double>() * p;
            p *= z;
        }
        return acc;
    }

    /// Rendering in the basis {1, i, sqrt2, i*sqrt2}, e.g. "1/2-i+√2".
    std::string str() const {
        Rational a = c_[0];
        Rational b = c_[2];
        Rational c = (c_[1] - c_[3]) / 2;
        Rational d = (c_[1] + c_[3]) / 2;
        std::string out;
        auto term = [&out](const Rational &coef, const char *unit) {
            if (coef == 0) return;
            bool neg = coef < 0;
            Rational mag = neg ? Rational(-coef) : coef;
            if (!out.empty() || neg) out += neg ? "-" : "+";
            std::string unit_str = unit;
            if (unit_str.empty()) {
                out += repcheck::to_string(mag);
            } else if (mag == 1) {
                out += unit_str;
            } else if (repcheck::is_integer(mag)) {
                out += repcheck::to_string(mag) + unit_str;
            } else {
                out += "(" + repcheck::to_string(mag) + ")" + unit_str;
            }
        };
        term(a, "");
        term(b, "i");
        term(c, "√2");
        term(d, "i√2");
        return out.empty() ? "0" : out;
    }

    friend std::ostream &operator<<(std::ostream &os, const CycloNum &x) { return os << x.str(); }

   private:
    Coeffs c_{};
};

/// Exact square root of a non-negative rational as a field element, if it lies in Q(sqrt 2).
inline std::optional<CycloNum> sqrt_in_field(const Rational &q) {
    auto r = sqrt_rational_in_real_subfield(q);
    if (!r) {
        return std::nullopt;
    }
    return CycloNum(r->first) + CycloNum(r->second) * CycloNum::sqrt2();
}

}  // namespace repcheck
