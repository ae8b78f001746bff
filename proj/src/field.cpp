#include "qti/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace qti {

namespace {

struct ModulusEntry {
    int q;
    std::vector<int> coeffs;  // little-endian, monic
};

// Fixed irreducible moduli for the extension fields in the support set.
const ModulusEntry kModuli[] = {
    {4, {1, 1, 1}},      // x^2 + x + 1 over F_2
    {8, {1, 1, 0, 1}},   // x^3 + x + 1 over F_2
    {9, {1, 0, 1}},      // x^2 + 1 over F_3
    {16, {1, 1, 0, 0, 1}},  // x^4 + x + 1 over F_2
    {25, {2, 0, 1}},     // x^2 + 2 over F_5
    {27, {1, 2, 0, 1}},  // x^3 + 2x + 1 over F_3
};

const std::vector<int> kSupported = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27};

bool is_prime(int m) {
    if (m < 2) return false;
    for (int d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

// Digits of the code in base p, little-endian, padded to length k.
std::vector<int> to_digits(int code, int p, int k) {
    std::vector<int> d(k, 0);
    for (int j = 0; j < k; ++j) {
        d[j] = code % p;
        code /= p;
    }
    return d;
}

int from_digits(const std::vector<int>& d, int p) {
    int code = 0;
    for (int j = static_cast<int>(d.size()) - 1; j >= 0; --j)
        code = code * p + d[j];
    return code;
}

// Remainder of a mod b over F_p, both little-endian. b must be monic.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
    const int db = static_cast<int>(b.size()) - 1;
    while (true) {
        while (!a.empty() && a.back() == 0) a.pop_back();
        const int da = static_cast<int>(a.size()) - 1;
        if (da < db) break;
        const int lead = a[da];
        for (int j = 0; j <= db; ++j) {
            int& c = a[da - db + j];
            c = ((c - lead * b[j]) % p + p) % p;
        }
    }
    a.resize(db, 0);
    return a;
}

std::vector<int> poly_mul_mod(const std::vector<int>& a, const std::vector<int>& b,
                              const std::vector<int>& mod, int p) {
    std::vector<int> prod(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    return poly_mod(std::move(prod), mod, p);
}

// Exhaustive trial division by every monic polynomial of degree 1..deg(f)/2.
bool is_irreducible(const std::vector<int>& f, int p) {
    const int k = static_cast<int>(f.size()) - 1;
    if (k < 1 || f[k] != 1) return false;
    for (int dg = 1; dg <= k / 2; ++dg) {
        int combos = 1;
        for (int j = 0; j < dg; ++j) combos *= p;
        for (int code = 0; code < combos; ++code) {
            std::vector<int> g = to_digits(code, p, dg);
            g.push_back(1);  // monic
            std::vector<int> r = poly_mod(f, g, p);
            if (std::all_of(r.begin(), r.end(), [](int c) { return c == 0; }))
                return false;
        }
    }
    return true;
}

}  // namespace

Field::Field(int q) : q_(q) {
    // Factor q = p^k with p prime.
    int p = 0;
    for (int d = 2; d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    int k = 0, m = q;
    while (m % p == 0) {
        m /= p;
        ++k;
    }
    if (m != 1 || !is_prime(p))
        throw NotAPrimePower("q = " + std::to_string(q) + " is not a prime power");
    p_ = p;
    k_ = k;

    if (k_ > 1) {
        for (const auto& e : kModuli) {
            if (e.q == q_) {
                modulus_ = e.coeffs;
                break;
            }
        }
        if (modulus_.empty() || !is_irreducible(modulus_, p_))
            throw NotAPrimePower("no verified irreducible modulus for q = " +
                                 std::to_string(q_));
    }

    add_.assign(static_cast<size_t>(q_) * q_, 0);
    mul_.assign(static_cast<size_t>(q_) * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);

    auto multiply = [&](int a, int b) -> int {
        if (k_ == 1) return (a * b) % p_;
        return from_digits(
            poly_mul_mod(to_digits(a, p_, k_), to_digits(b, p_, k_), modulus_, p_), p_);
    };
    for (int a = 0; a < q_; ++a) {
        auto da = to_digits(a, p_, k_);
        for (int j = 0; j < k_; ++j) da[j] = (p_ - da[j]) % p_;
        neg_[a] = static_cast<std::uint8_t>(from_digits(da, p_));
        for (int b = 0; b < q_; ++b) {
            auto s = to_digits(a, p_, k_);
            auto db = to_digits(b, p_, k_);
            for (int j = 0; j < k_; ++j) s[j] = (s[j] + db[j]) % p_;
            add_[a * q_ + b] = static_cast<std::uint8_t>(from_digits(s, p_));
            mul_[a * q_ + b] = static_cast<std::uint8_t>(multiply(a, b));
        }
    }

    // Generator search; existence certifies every nonzero element invertible.
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, -1);
    for (int g = 2; g < q_ && generator_ == 0; ++g) {
        int x = 1, order = 0;
        do {
            x = mul_[x * q_ + g];
            ++order;
        } while (x != 1);
        if (order == q_ - 1) generator_ = g;
    }
    if (q_ == 2) generator_ = 1;
    if (generator_ == 0)
        throw NotAPrimePower("no multiplicative generator found for q = " +
                             std::to_string(q_));
    int x = 1;
    for (int e = 0; e < q_ - 1; ++e) {
        exp_[e] = static_cast<std::uint8_t>(x);
        log_[x] = e;
        x = mul_[x * q_ + generator_];
    }
    inv_[1] = 1;
    for (int a = 2; a < q_; ++a)
        inv_[a] = exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

int Field::inv(int a) const {
    if (a == 0) throw BadArgs("zero has no multiplicative inverse");
    return inv_[a];
}

int Field::log(int a) const {
    if (a == 0) throw BadArgs("log of zero is undefined");
    return log_[a];
}

int Field::pow(int a, long e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    int r = 1;
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

bool Field::supported(int q) {
    return std::find(kSupported.begin(), kSupported.end(), q) != kSupported.end();
}

const std::vector<int>& Field::supported_orders() { return kSupported; }

const Field& Field::get(int q) {
    if (!supported(q)) {
        // Distinguish the message but not the type: both are input errors.
        for (int d = 2; d * d <= q; ++d) {
            if (q % d == 0) {
                int m = q;
                while (m % d == 0) m /= d;
                if (m != 1)
                    throw NotAPrimePower("q = " + std::to_string(q) +
                                         " is not a prime power");
            }
        }
        throw NotAPrimePower("q = " + std::to_string(q) +
                             " is outside the supported set {2,3,4,5,7,8,9,11,13,16,25,27}");
    }
    static std::mutex mu;
    static std::map<int, std::unique_ptr<Field>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(q);
    if (it == registry.end())
        it = registry.emplace(q, std::unique_ptr<Field>(new Field(q))).first;
    return *it->second;
}

}  // namespace qti
