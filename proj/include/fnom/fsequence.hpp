#pragma once

// Grading sequences F_0, F_1, F_2, ... that parameterize the generalized
// binomial machinery. Four kinds are built in:
//
//   fibonacci    F_0 = 0, F_1 = F_2 = 1, F_n = F_{n-1} + F_{n-2}
//   natural      F_n = n
//   gaussian(q)  F_n = 1 + q + ... + q^{n-1}, integer q >= 2
//   one          F_0 = 0, F_n = 1 for n >= 1 (degenerate test fixture)
//
// F_0 = 0 for every kind so the Fibonacci triangle-recurrence coefficient
// F_{n-k-1} vanishes correctly at the k = n-1 boundary. All kinds have
// F_s >= 1 for s >= 1, which keeps every cobweb level nonempty.
//
// Values are memoized eagerly at construction (default 256 terms), so an
// FSequence is immutable afterwards and safe for concurrent readers.
// Indices beyond the memo bound are still total: they are recomputed on
// the fly without touching the instance.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fnom/bigint.hpp"
#include "fnom/errors.hpp"

namespace fnom {

enum class SeqKind { fibonacci, natural, gaussian, constant_one };

class FSequence {
public:
    static constexpr int kDefaultMemoTerms = 256;

    static FSequence fibonacci(int memo_terms = kDefaultMemoTerms) {
        return FSequence(SeqKind::fibonacci, 0, memo_terms);
    }
    static FSequence natural(int memo_terms = kDefaultMemoTerms) {
        return FSequence(SeqKind::natural, 0, memo_terms);
    }
    static FSequence gaussian(std::int64_t q, int memo_terms = kDefaultMemoTerms) {
        return FSequence(SeqKind::gaussian, q, memo_terms);
    }
    static FSequence constant_one(int memo_terms = kDefaultMemoTerms) {
        return FSequence(SeqKind::constant_one, 0, memo_terms);
    }

    // CLI names: "fibonacci", "natural", "gaussian:<q>", "one".
    static FSequence parse(const std::string& name, int memo_terms = kDefaultMemoTerms) {
        if (name == "fibonacci") return fibonacci(memo_terms);
        if (name == "natural") return natural(memo_terms);
        if (name == "one") return constant_one(memo_terms);
        if (name.rfind("gaussian:", 0) == 0) {
            const std::string digits = name.substr(9);
            if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
                throw BadArgument("gaussian base must be a positive integer: " + name);
            std::int64_t q = 0;
            try {
                q = std::stoll(digits);
            } catch (const std::exception&) {
                throw BadArgument("gaussian base out of range: " + name);
            }
            return gaussian(q, memo_terms);
        }
        throw BadArgument("unknown sequence kind: " + name +
                          " (expected fibonacci, natural, gaussian:<q>, one)");
    }

    SeqKind kind() const { return kind_; }
    std::int64_t q() const { return q_; }
    const std::string& name() const { return name_; }

    // F_n, exact. Total for n >= 0; repeated calls return identical values.
    Int term(int n) const {
        if (n < 0) throw BadRange("sequence index must be nonnegative");
        if (n < static_cast<int>(terms_.size())) return terms_[static_cast<std::size_t>(n)];
        return compute_term(n);
    }

    // n_F! = F_1 F_2 ... F_n; 1 for n = 0.
    Int factorial(int n) const {
        if (n < 0) throw BadRange("factorial index must be nonnegative");
        if (n < static_cast<int>(factorials_.size())) return factorials_[static_cast<std::size_t>(n)];
        Int acc = factorials_.back();
        for (int s = static_cast<int>(factorials_.size()); s <= n; ++s) acc *= term(s);
        return acc;
    }

    bool has_recurrence() const { return kind_ != SeqKind::constant_one; }

    // Coefficients (a, b) of the triangle recurrence
    //   B(n, k) = a * B(n-1, k) + b * B(n-1, k-1)
    // for interior cells 1 <= k <= n-1:
    //   fibonacci   (F_{k+1}, F_{n-k-1})
    //   natural     (1, 1)
    //   gaussian(q) (q^k, 1)
    std::pair<Int, Int> recurrence_coeffs(int n, int k) const {
        if (!has_recurrence())
            throw UnsupportedRecurrence("the all-ones sequence has no triangle recurrence");
        if (k < 0 || n < 1 || k > n - 1) throw BadRange("recurrence cell out of range");
        switch (kind_) {
            case SeqKind::fibonacci:
                return {term(k + 1), term(n - k - 1)};
            case SeqKind::natural:
                return {Int(1), Int(1)};
            case SeqKind::gaussian:
                return {boost::multiprecision::pow(Int(q_), static_cast<unsigned>(k)), Int(1)};
            default:
                throw UnsupportedRecurrence("no triangle recurrence");
        }
    }

private:
    FSequence(SeqKind kind, std::int64_t q, int memo_terms) : kind_(kind), q_(q) {
        if (memo_terms < 1) throw BadArgument("memo bound must be at least 1");
        if (kind == SeqKind::gaussian && q < 2)
            throw BadArgument("gaussian base must satisfy q >= 2");
        switch (kind_) {
            case SeqKind::fibonacci: name_ = "fibonacci"; break;
            case SeqKind::natural: name_ = "natural"; break;
            case SeqKind::gaussian: name_ = "gaussian:" + std::to_string(q_); break;
            case SeqKind::constant_one: name_ = "one"; break;
        }
        terms_.reserve(static_cast<std::size_t>(memo_terms));
        for (int n = 0; n < memo_terms; ++n) {
            switch (kind_) {
                case SeqKind::fibonacci:
                    terms_.push_back(n < 2 ? Int(n) : terms_[n - 1] + terms_[n - 2]);
                    break;
                case SeqKind::natural:
                    terms_.push_back(Int(n));
                    break;
                case SeqKind::gaussian:
                    // q-integer step: [n]_q = q [n-1]_q + 1
                    terms_.push_back(n == 0 ? Int(0) : terms_[n - 1] * q_ + 1);
                    break;
                case SeqKind::constant_one:
                    terms_.push_back(Int(n == 0 ? 0 : 1));
                    break;
            }
        }
        factorials_.reserve(terms_.size());
        factorials_.push_back(Int(1));
        for (std::size_t n = 1; n < terms_.size(); ++n)
            factorials_.push_back(factorials_[n - 1] * terms_[n]);
    }

    // Value past the eager memo, recomputed without mutating the instance.
    Int compute_term(int n) const {
        switch (kind_) {
            case SeqKind::fibonacci: {
                const std::size_t m = terms_.size();
                Int a = m >= 2 ? terms_[m - 2] : Int(0);
                Int b = terms_[m - 1];
                for (std::size_t s = (m >= 2 ? m : 1); s <= static_cast<std::size_t>(n); ++s) {
                    Int next = (s == 1) ? Int(1) : a + b;
                    a = b;
                    b = next;
                }
                return b;
            }
            case SeqKind::natural:
                return Int(n);
            case SeqKind::gaussian:
                return exact_div<BadRange>(boost::multiprecision::pow(Int(q_), static_cast<unsigned>(n)) - 1,
                                           Int(q_) - 1, "q-integer");
            case SeqKind::constant_one:
                return Int(1);
        }
        return Int(0);  // unreachable
    }

    SeqKind kind_;
    std::int64_t q_;
    std::string name_;
    std::vector<Int> terms_;
    std::vector<Int> factorials_;
};

}  // namespace fnom
