#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tate {

/// Error hierarchy shared by the whole library.
///
/// InputError covers everything a caller can fix (bad files, bad flags,
/// rings outside the supported class); InternalError signals a broken
/// invariant, i.e. a bug.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class InputError : public Error {
public:
    explicit InputError(const std::string& msg) : Error(msg) {}
};

class NotArtinianError : public InputError {
public:
    explicit NotArtinianError(const std::string& msg) : InputError(msg) {}
};

class NotLocalError : public InputError {
public:
    explicit NotLocalError(const std::string& msg) : InputError(msg) {}
};

class NotGorensteinError : public InputError {
public:
    explicit NotGorensteinError(const std::string& msg) : InputError(msg) {}
};

class NotReducedError : public InputError {
public:
    explicit NotReducedError(const std::string& msg) : InputError(msg) {}
};

class ParseError : public InputError {
public:
    ParseError(const std::string& msg, std::size_t position)
        : InputError(msg + " (at position " + std::to_string(position) + ")"),
          pos(position) {}
    std::size_t pos;
};

class InternalError : public Error {
public:
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

#define TATE_CHECK(cond, msg)                                   \
    do {                                                        \
        if (!(cond)) throw ::tate::InternalError(msg);          \
    } while (0)

/// The prime field F_p for a machine-word prime p.
///
/// All arithmetic is on residues in [0, p). The modulus is validated at
/// construction; everything downstream may assume primality.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (!is_prime(p)) throw InputError("modulus " + std::to_string(p) + " is not prime");
    }

    std::uint32_t modulus() const { return p_; }

    std::uint32_t reduce(std::int64_t x) const {
        std::int64_t r = x % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<std::uint32_t>(r);
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }

    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }

    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(a) * b % p_);
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint64_t base = a % p_, acc = 1;
        while (e) {
            if (e & 1) acc = acc * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return static_cast<std::uint32_t>(acc);
    }

    /// Multiplicative inverse; p prime makes Fermat sufficient.
    std::uint32_t inv(std::uint32_t a) const {
        if (a % p_ == 0) throw InternalError("inverse of zero in F_p");
        return pow(a, p_ - 2);
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

    static bool is_prime(std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    std::uint32_t p_;
};

}  // namespace tate
