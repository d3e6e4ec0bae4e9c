#include "oracle.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace gicodes {
namespace oracle {

namespace {

// Schoolbook remainder of a vector by the monic generator, kept separate from
// Poly::divmod so the table check does not trust the codec path.
std::vector<Gaussian> naive_remainder(const ConstacyclicCode& code,
                                      const std::vector<Gaussian>& vec) {
    const ResidueRing& ring = code.ring;
    const auto g = code.gen.coeffs();
    const std::size_t dg = g.size() - 1;
    std::vector<Gaussian> rem = vec;
    for (std::size_t j = rem.size(); j-- > dg;) {
        Gaussian q = rem[j]; // generator is monic
        if (q.is_zero()) continue;
        for (std::size_t t = 0; t <= dg; ++t)
            rem[j - dg + t] = ring.sub(rem[j - dg + t], ring.mul(q, g[t]));
    }
    rem.resize(dg);
    return rem;
}

bool check_table_distinct(const ConstacyclicCode& code) {
    const auto n = static_cast<std::size_t>(code.n);
    std::set<std::vector<Gaussian>> seen;
    seen.insert(naive_remainder(code, std::vector<Gaussian>(n)));
    for (std::size_t j = 0; j < n; ++j) {
        for (Gaussian u : units()) {
            std::vector<Gaussian> e(n);
            e[j] = u;
            if (!seen.insert(naive_remainder(code, e)).second) return false;
        }
    }
    return seen.size() == 4 * n + 1;
}

} // namespace

std::vector<Gaussian> brute_residues(const ResidueRing& ring) {
    if (ring.size() > kMaxResidues)
        raise(Errc::TooLarge, "brute_residues: N = " + std::to_string(ring.size()) +
                                  " exceeds the enumeration bound");
    std::vector<Gaussian> out;
    out.reserve(static_cast<std::size_t>(ring.size()));
    std::set<Gaussian> seen;
    for (std::int64_t m = 0; m < ring.size(); ++m) {
        Gaussian r = ring.from_int(m);
        if (!seen.insert(r).second)
            raise(Errc::Internal, "residues of " + std::to_string(m) + " collide");
        out.push_back(r);
    }
    return out;
}

std::int64_t brute_order(const ResidueRing& ring, Gaussian x) {
    if (ring.euler_phi() > kMaxResidues)
        raise(Errc::TooLarge, "brute_order: phi exceeds the enumeration bound");
    if (!ring.is_unit(x)) raise(Errc::NotAUnit, "brute_order of non-unit " + to_string(x));
    Gaussian acc = ring.canonicalize(x);
    std::int64_t t = 1;
    while (acc != ring.one()) {
        acc = ring.mul(acc, x);
        ++t;
    }
    return t;
}

std::int64_t brute_min_mannheim_distance(const ConstacyclicCode& code) {
    const std::int64_t N = code.ring.size();
    __int128 total = 1;
    for (std::int64_t j = 0; j < code.dim; ++j) {
        total *= N;
        if (total > kMaxMessages)
            raise(Errc::TooLarge, "brute_min_mannheim_distance: N^k exceeds the bound");
    }

    const std::vector<Gaussian> residues = brute_residues(code.ring);
    std::vector<std::size_t> digits(static_cast<std::size_t>(code.dim), 0);
    std::vector<Gaussian> message(static_cast<std::size_t>(code.dim));
    std::int64_t best = -1;

    // Odometer over all N^k messages, skipping the zero message.
    for (__int128 count = 1; count < total; ++count) {
        std::size_t pos = 0;
        while (true) {
            digits[pos] = (digits[pos] + 1) % residues.size();
            if (digits[pos] != 0) break;
            ++pos;
        }
        for (std::size_t j = 0; j < digits.size(); ++j) message[j] = residues[digits[j]];
        std::vector<Gaussian> cw = encode(code, message);
        std::int64_t w = 0;
        for (Gaussian c : cw) w += mannheim_weight(c);
        if (best < 0 || w < best) best = w;
    }
    return best;
}

DecodeReport exhaustive_decode_check(const ConstacyclicCode& code, const SyndromeTable& table,
                                     std::optional<std::uint64_t> sample_count,
                                     std::uint64_t seed) {
    DecodeReport report;
    report.table_size = table.size();
    report.table_distinct = check_table_distinct(code);
    if (!report.table_distinct)
        report.failures.push_back({{}, {}, "syndrome table keys are not pairwise distinct"});

    const auto n = static_cast<std::size_t>(code.n);
    const auto k = static_cast<std::size_t>(code.dim);

    // All 4n + 1 error patterns, zero error first.
    std::vector<std::vector<Gaussian>> patterns;
    patterns.reserve(4 * n + 1);
    patterns.emplace_back(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (Gaussian u : units()) {
            std::vector<Gaussian> e(n);
            e[j] = u;
            patterns.push_back(std::move(e));
        }
    }

    const auto run_message = [&](const std::vector<Gaussian>& message) {
        const std::vector<Gaussian> cw = encode(code, message);
        std::vector<Gaussian> received(n);
        for (const auto& e : patterns) {
            for (std::size_t j = 0; j < n; ++j) received[j] = code.ring.add(cw[j], e[j]);
            ++report.trials;
            auto result = decode(code, table, received);
            if (!result) {
                report.failures.push_back({message, e, "reported uncorrectable"});
                continue;
            }
            if (result->codeword != cw || result->error != e || result->message != message)
                report.failures.push_back({message, e, "round-trip mismatch"});
        }
    };

    if (sample_count) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::int64_t> pick(0, code.ring.size() - 1);
        std::vector<Gaussian> message(k);
        for (std::uint64_t s = 0; s < *sample_count; ++s) {
            for (std::size_t j = 0; j < k; ++j) message[j] = code.ring.from_int(pick(rng));
            run_message(message);
        }
    } else {
        __int128 total = 1;
        for (std::size_t j = 0; j < k; ++j) {
            total *= code.ring.size();
            if (total > kMaxMessages)
                raise(Errc::TooLarge, "exhaustive decode check: N^k exceeds the bound");
        }
        const std::vector<Gaussian> residues = brute_residues(code.ring);
        std::vector<std::size_t> digits(k, 0);
        std::vector<Gaussian> message(k, residues[0]);
        run_message(message);
        for (__int128 count = 1; count < total; ++count) {
            std::size_t pos = 0;
            while (true) {
                digits[pos] = (digits[pos] + 1) % residues.size();
                if (digits[pos] != 0) break;
                ++pos;
            }
            for (std::size_t j = 0; j < k; ++j) message[j] = residues[digits[j]];
            run_message(message);
        }
    }
    return report;
}

} // namespace oracle
} // namespace gicodes
