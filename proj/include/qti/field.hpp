#pragma once

#include <cstdint>
#include <vector>

#include "qti/errors.hpp"

namespace qti {

/// Arithmetic in F_q for a fixed set of small prime powers.
///
/// Elements are integer codes in [0, q). For prime q the code is the residue
/// itself; for q = p^k the code is the base-p digit encoding of the
/// polynomial representative (digit j = coefficient of x^j, little-endian),
/// where x is the class of the generator symbol modulo a fixed irreducible
/// modulus. Extension arithmetic is table-driven: a generator of the
/// multiplicative group is found at construction and log/antilog (Zech)
/// tables are built from it; flat q*q add/mul tables derived from the same
/// arithmetic serve the hot loops.
///
/// Instances are immutable singletons obtained through Field::get
/// (one per supported order), so raw `const Field*` handles never dangle.
class Field {
public:
    /// Returns the field of order q, constructing it on first use.
    /// Throws NotAPrimePower if q is not in the supported set.
    static const Field& get(int q);

    static bool supported(int q);
    static const std::vector<int>& supported_orders();

    int q() const { return q_; }
    int p() const { return p_; }
    int k() const { return k_; }

    /// Monic irreducible modulus as little-endian coefficients over F_p
    /// (size k+1). Empty for prime fields, where it is unused.
    const std::vector<int>& modulus() const { return modulus_; }

    /// Code of the multiplicative generator the log tables are built on.
    int generator() const { return generator_; }

    int add(int a, int b) const { return add_[a * q_ + b]; }
    int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int neg(int a) const { return neg_[a]; }

    /// Multiplicative inverse; throws BadArgs for 0.
    int inv(int a) const;

    /// Discrete log base generator() for a != 0 (in [0, q-1)).
    int log(int a) const;
    /// generator()^e for e in [0, q-1).
    int exp(int e) const { return exp_[e]; }

    int pow(int a, long e) const;

    // Table access for inner loops.
    const std::uint8_t* add_table() const { return add_.data(); }
    const std::uint8_t* mul_table() const { return mul_.data(); }
    const std::uint8_t* neg_table() const { return neg_.data(); }

private:
    explicit Field(int q);

    int q_ = 0, p_ = 0, k_ = 0;
    int generator_ = 0;
    std::vector<int> modulus_;
    std::vector<std::uint8_t> add_, mul_, neg_, inv_;
    std::vector<std::uint8_t> exp_;  // size q-1
    std::vector<int> log_;           // size q, log_[0] = -1
};

}  // namespace qti
