#include "partcrt/series.hpp"

#include <string>

namespace partcrt {

namespace {

inline u64 add_mod(u64 a, u64 b, u64 d) {
    // a, b < d <= 2^63 - 1, so the sum never wraps u64.
    const u64 s = a + b;
    return s >= d ? s - d : s;
}

inline u64 sub_mod(u64 a, u64 b, u64 d) {
    return a >= b ? a - b : a + (d - b);
}

}  // namespace

Ring Ring::modulo(u64 d) {
    if (d == 0 || d > kMaxModulus) {
        throw InvalidParamsError("ring: modulus must be in [1, 2^63 - 1]");
    }
    Ring r;
    r.mod_ = d;
    return r;
}

CoeffSeries::CoeffSeries(std::size_t order, Ring ring) : order_(order), ring_(ring) {
    if (ring_.is_exact()) {
        exact_.assign(order_ + 1, Integer(0));
    } else {
        res_.assign(order_ + 1, 0);
    }
}

Integer CoeffSeries::coeff(std::size_t i) const {
    if (i > order_) {
        throw IndexOutOfRangeError("series: coefficient index " + std::to_string(i) +
                                   " past order " + std::to_string(order_));
    }
    return ring_.is_exact() ? exact_[i] : Integer((unsigned long)res_[i]);
}

u64 CoeffSeries::coeff_mod(std::size_t i) const {
    if (ring_.is_exact()) {
        throw InvalidParamsError("series: coeff_mod on an exact series");
    }
    if (i > order_) {
        throw IndexOutOfRangeError("series: coefficient index past order");
    }
    return res_[i];
}

void CoeffSeries::set_coeff(std::size_t i, const Integer& v) {
    if (i > order_) {
        throw IndexOutOfRangeError("series: coefficient index past order");
    }
    if (ring_.is_exact()) {
        exact_[i] = v;
    } else {
        res_[i] = mpz_fdiv_ui(v.get_mpz_t(), ring_.modulus());
    }
}

CoeffSeries CoeffSeries::reduced(u64 d) const {
    if (!ring_.is_exact()) {
        throw InvalidParamsError("series: reduced() needs an exact series");
    }
    CoeffSeries out(order_, Ring::modulo(d));
    for (std::size_t i = 0; i <= order_; ++i) {
        out.res_[i] = mpz_fdiv_ui(exact_[i].get_mpz_t(), d);
    }
    return out;
}

bool CoeffSeries::operator==(const CoeffSeries& other) const {
    return order_ == other.order_ && ring_ == other.ring_ && exact_ == other.exact_ &&
           res_ == other.res_;
}

void CoeffSeries::mul_binomial_inplace(u64 b) {
    if (b == 0) {
        throw InvalidParamsError("series: binomial exponent must be >= 1");
    }
    if (b > order_) {
        return;
    }
    if (ring_.is_exact()) {
        for (std::size_t i = order_; i >= b; --i) {
            exact_[i] -= exact_[i - b];
        }
    } else {
        const u64 d = ring_.modulus();
        for (std::size_t i = order_; i >= b; --i) {
            res_[i] = sub_mod(res_[i], res_[i - b], d);
        }
    }
}

void CoeffSeries::div_binomial_inplace(u64 b) {
    if (b == 0) {
        throw InvalidParamsError("series: binomial exponent must be >= 1");
    }
    if (b > order_) {
        return;
    }
    if (ring_.is_exact()) {
        for (std::size_t i = b; i <= order_; ++i) {
            exact_[i] += exact_[i - b];
        }
    } else {
        const u64 d = ring_.modulus();
        for (std::size_t i = b; i <= order_; ++i) {
            res_[i] = add_mod(res_[i], res_[i - b], d);
        }
    }
}

CoeffSeries one(std::size_t order, Ring ring) {
    CoeffSeries s(order, ring);
    s.set_coeff(0, Integer(1));
    return s;
}

CoeffSeries mul_binomial(CoeffSeries s, u64 b) {
    s.mul_binomial_inplace(b);
    return s;
}

CoeffSeries div_binomial(CoeffSeries s, u64 b) {
    s.div_binomial_inplace(b);
    return s;
}

CoeffSeries mul_one_plus_powers(const CoeffSeries& s, const std::vector<u64>& exponents) {
    for (u64 e : exponents) {
        if (e == 0) {
            throw InvalidParamsError("series: power exponent must be >= 1");
        }
    }
    CoeffSeries out = s;
    const std::size_t n = s.order();
    if (s.ring().is_exact()) {
        for (u64 e : exponents) {
            if (e > n) {
                continue;
            }
            for (std::size_t i = n; i >= e; --i) {
                Integer v = out.coeff(i) + s.coeff(i - e);
                out.set_coeff(i, v);
            }
        }
    } else {
        const u64 d = s.ring().modulus();
        for (u64 e : exponents) {
            if (e > n) {
                continue;
            }
            for (std::size_t i = n; i >= e; --i) {
                out.set_coeff(i, Integer((unsigned long)add_mod(out.coeff_mod(i),
                                                                s.coeff_mod(i - e), d)));
            }
        }
    }
    return out;
}

CoeffSeries product_of_factors(std::size_t order, Ring ring,
                               const std::vector<SeriesFactor>& factors) {
    CoeffSeries s = one(order, ring);
    for (const auto& f : factors) {
        if (f.numerator) {
            s.mul_binomial_inplace(f.exponent);
        } else {
            s.div_binomial_inplace(f.exponent);
        }
    }
    return s;
}

}  // namespace partcrt
