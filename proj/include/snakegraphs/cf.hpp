#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace snakes {

/// A finite continued fraction [a_1,...,a_n] with all parts >= 1.
class ContinuedFraction {
  public:
    explicit ContinuedFraction(std::vector<int> parts);

    /// Parse a comma-separated list like "2,4,1,2".
    static ContinuedFraction parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int part(std::size_t i) const { return parts_[i]; }
    std::size_t length() const { return parts_.size(); }

    /// Sum of all parts; the associated snake graph has sum()-1 tiles.
    int sum() const;

    /// The continued fraction [a_2,...,a_n]; empty tail is invalid,
    /// callers must check length() > 1.
    ContinuedFraction tail() const;

    std::string str() const;

    bool operator==(const ContinuedFraction& o) const { return parts_ == o.parts_; }

  private:
    std::vector<int> parts_;
};

/// Sign word over {'-','+'} of length sum(a_i); block i has length a_i,
/// blocks alternate sign starting with '-'.
struct SignSequence {
    std::string signs;
    std::vector<int> block_ends;  // positions l_i = a_1 + ... + a_i (1-based)
};

SignSequence cf_to_sign_sequence(const ContinuedFraction& cf);

/// The involution on part sequences induced by the dual snake graph:
/// expand each part into 1+1+...+1, then swap '+' and ','.
ContinuedFraction dual_cf(const ContinuedFraction& cf);

/// Exact value a_1 + 1/(a_2 + 1/(...)), reduced.
mpq_class cf_value(const ContinuedFraction& cf);

struct CfExpansion {
    std::vector<int> parts;
    bool exact = false;                // terminated with a rational value
    bool precision_exhausted = false;  // floating expansion became unreliable
};

/// Euclidean expansion of an exact rational x >= 1.
CfExpansion real_to_cf(const mpq_class& x, std::size_t max_terms = 64);

/// Floating-point expansion of x >= 1, stopping once partial quotients
/// can no longer be trusted at double precision.
CfExpansion real_to_cf(double x, std::size_t max_terms = 32);

}  // namespace snakes
