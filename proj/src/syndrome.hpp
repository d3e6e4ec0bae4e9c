#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "code.hpp"

namespace gicodes {

/// Coset-leader table for the 4n + 1 Mannheim-weight-<=1 error patterns: the
/// zero error plus u * x^j for every unit u and position j. Keys are the
/// fixed-length serializations of the canonical syndrome remainders; building
/// the table fails with SyndromeCollision when two leaders collide, i.e. when
/// the code cannot correct every weight-1 error.
class SyndromeTable {
public:
    struct Entry {
        std::vector<Gaussian> leader; // error vector of length n
        Poly syndrome;
    };

    static SyndromeTable build(const ConstacyclicCode& code);

    /// Entries in dump order: the zero leader first, then position-major,
    /// unit-minor (j = 0..n-1, u = 1, i, -1, -i).
    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    /// Leader for a syndrome, or nullptr when the syndrome is not covered.
    const std::vector<Gaussian>* lookup(const Poly& syndrome) const;

private:
    using Key = std::vector<std::int64_t>;
    Key key_of(const Poly& syndrome) const;

    std::size_t key_len_ = 0; // 2 * deg(gen) entries, zero-padded
    std::vector<Entry> entries_;
    std::map<Key, std::size_t> index_;
};

struct DecodeResult {
    std::vector<Gaussian> codeword;
    std::vector<Gaussian> error;
    std::vector<Gaussian> message;
};

/// Syndrome decoding of a received vector: on a table hit, subtracts the coset
/// leader and recovers the message as r(x)/g(x); returns nullopt when the
/// syndrome is absent from the table (detected but uncorrectable error).
std::optional<DecodeResult> decode(const ConstacyclicCode& code, const SyndromeTable& table,
                                   std::span<const Gaussian> received);

} // namespace gicodes
