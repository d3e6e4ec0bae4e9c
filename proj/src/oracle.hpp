#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "syndrome.hpp"

namespace gicodes {
namespace oracle {

/// Brute-force verifiers for acceptance testing. These deliberately avoid the
/// shortcuts the main modules use: orders come from repeated multiplication
/// with no divisor pruning, residues from full enumeration. They run at desk
/// scale only and refuse anything beyond their enumeration bounds.

inline constexpr std::int64_t kMaxResidues = 100000;        // brute_residues, brute_order
inline constexpr std::int64_t kMaxMessages = 10000000;      // N^k enumeration bound

/// All N residues as int_to_residue over [0, N); asserts pairwise distinctness.
std::vector<Gaussian> brute_residues(const ResidueRing& ring);

/// Least t >= 1 with x^t = 1 by repeated multiplication.
std::int64_t brute_order(const ResidueRing& ring, Gaussian x);

/// Minimum coordinate-wise Mannheim weight over all nonzero codewords,
/// enumerating every nonzero message.
std::int64_t brute_min_mannheim_distance(const ConstacyclicCode& code);

struct DecodeFailure {
    std::vector<Gaussian> message;
    std::vector<Gaussian> error;
    std::string reason;
};

struct DecodeReport {
    std::uint64_t trials = 0;
    std::vector<DecodeFailure> failures;
    std::size_t table_size = 0;
    bool table_distinct = false;
    std::optional<std::int64_t> min_distance;

    bool passed() const { return failures.empty() && table_distinct; }
};

/// Round-trip check: encode each message, apply every weight-<=1 error pattern
/// (4n + 1 per message, including the zero error), decode, and compare. With a
/// sample count the messages are drawn from a seeded generator; without one
/// every message is enumerated (subject to the N^k bound). Independently
/// re-derives the 4n + 1 syndromes and checks their distinctness.
DecodeReport exhaustive_decode_check(const ConstacyclicCode& code, const SyndromeTable& table,
                                     std::optional<std::uint64_t> sample_count,
                                     std::uint64_t seed = 42);

} // namespace oracle
} // namespace gicodes
