#ifndef EVILDET_VERIFY_HPP
#define EVILDET_VERIFY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "evildet/nt.hpp"
#include "evildet/quad.hpp"

namespace evildet {

enum class Depth { DeterminantOnly, FullIdentities };
enum class ClassFilter { OneMod4, ThreeMod4, Both };
enum class CheckStatus { Pass, Fail, Skipped };

/// The fixed set of per-prime check names, in canonical order.
const std::vector<std::string>& check_names();

struct VerifyOptions {
    Depth depth = Depth::DeterminantOnly;
    unsigned workers = 1;
    std::uint64_t cyclo_cap = 61;  // decomposition / Lemma 7 / det W cap
    std::uint64_t gauss_cap = 97;  // Gauss-product lemma cap
    bool continue_on_failure = false;
    bool collect_timings = false;
};

struct VerificationRecord {
    std::uint64_t p = 0;
    unsigned residue_class_mod8 = 0;
    mpz_class det_bareiss;
    mpz_class det_modular;
    // unit / class-number pipeline, present only for p == 1 (mod 4)
    std::optional<std::uint64_t> h;
    std::optional<mpz_class> eps_alpha, eps_beta, a, b;
    std::map<std::string, CheckStatus> checks;
    std::map<std::string, double> elapsed_ms;  // per phase, non-canonical

    bool passed() const;
};

/// Full per-prime verification pipeline.  Hard sub-operation errors
/// propagate as std::runtime_error with the phase name attached.
VerificationRecord verify_prime(const OddPrime& p, const VerifyOptions& opt = {});

/// Records for every qualifying prime <= bound, ascending; results are
/// identical regardless of worker count.
std::vector<VerificationRecord> verify_range(std::uint64_t bound, ClassFilter filter,
                                             const VerifyOptions& opt = {});

/// (p, det C) for p == 1 (mod 4) ascending -- the paper's determinant sequence.
std::vector<std::pair<std::uint64_t, mpz_class>> emit_sequence(
    std::uint64_t bound, const VerifyOptions& opt = {});

} // namespace evildet

#endif
