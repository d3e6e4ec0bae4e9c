#include "syndrome.hpp"

#include <string>

namespace gicodes {

namespace {

std::string describe_leader(const std::vector<Gaussian>& leader) {
    for (std::size_t j = 0; j < leader.size(); ++j)
        if (!leader[j].is_zero())
            return to_string(leader[j]) + " * x^" + std::to_string(j);
    return "0";
}

} // namespace

SyndromeTable::Key SyndromeTable::key_of(const Poly& syndrome) const {
    Key key(key_len_, 0);
    const auto coeffs = syndrome.coeffs();
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        key[2 * j] = coeffs[j].re;
        key[2 * j + 1] = coeffs[j].im;
    }
    return key;
}

SyndromeTable SyndromeTable::build(const ConstacyclicCode& code) {
    SyndromeTable table;
    table.key_len_ = 2 * static_cast<std::size_t>(code.gen.degree());

    const auto n = static_cast<std::size_t>(code.n);
    const auto insert = [&](std::vector<Gaussian> leader) {
        Poly s = syndrome(code, leader);
        Key key = table.key_of(s);
        auto [it, fresh] = table.index_.emplace(std::move(key), table.entries_.size());
        if (!fresh)
            raise(Errc::SyndromeCollision,
                  "errors " + describe_leader(table.entries_[it->second].leader) + " and " +
                      describe_leader(leader) + " share syndrome; weight-1 errors are not "
                      "correctable by this code");
        table.entries_.push_back({std::move(leader), std::move(s)});
    };

    insert(std::vector<Gaussian>(n));
    for (std::size_t j = 0; j < n; ++j) {
        for (Gaussian u : units()) {
            std::vector<Gaussian> leader(n);
            leader[j] = u;
            insert(std::move(leader));
        }
    }
    return table;
}

const std::vector<Gaussian>* SyndromeTable::lookup(const Poly& syndrome) const {
    auto it = index_.find(key_of(syndrome));
    return it == index_.end() ? nullptr : &entries_[it->second].leader;
}

std::optional<DecodeResult> decode(const ConstacyclicCode& code, const SyndromeTable& table,
                                   std::span<const Gaussian> received) {
    Poly r = vector_to_poly(code, received);
    Poly s = r.divmod(code.gen).second;

    const std::vector<Gaussian>* leader = table.lookup(s);
    if (leader == nullptr) return std::nullopt;

    const auto n = static_cast<std::size_t>(code.n);
    DecodeResult out;
    out.error = *leader;
    out.codeword.resize(n);
    for (std::size_t j = 0; j < n; ++j)
        out.codeword[j] = code.ring.sub(code.ring.canonicalize(received[j]), (*leader)[j]);

    auto [quot, rem] = vector_to_poly(code, out.codeword).divmod(code.gen);
    if (!rem.is_zero())
        raise(Errc::Internal, "corrected word is not a codeword; syndrome table is inconsistent");
    out.message.resize(static_cast<std::size_t>(code.dim));
    for (std::size_t j = 0; j < out.message.size(); ++j) out.message[j] = quot.coeff(j);
    return out;
}

} // namespace gicodes
