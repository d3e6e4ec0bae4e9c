#include "json_io.hpp"

#include <algorithm>
#include <sstream>

namespace gicodes {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { raise(Errc::BadDescriptor, what); }

std::int64_t as_int(const json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    return j.get<std::int64_t>();
}

const json& field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing field '") + key + "'");
    return *it;
}

} // namespace

json to_json(Gaussian z) { return json::array({z.re, z.im}); }

Gaussian gaussian_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) bad("Gaussian integer must be a [re, im] array");
    return {as_int(j[0], "re"), as_int(j[1], "im")};
}

json to_json(const Poly& f) {
    json out = json::array();
    for (Gaussian c : f.coeffs()) out.push_back(to_json(c));
    return out;
}

Poly poly_from_json(const ResidueRing& ring, const json& j, bool require_canonical) {
    if (!j.is_array()) bad("polynomial must be an array of [re, im] pairs");
    std::vector<Gaussian> coeffs;
    coeffs.reserve(j.size());
    for (const json& c : j) coeffs.push_back(gaussian_from_json(c));
    if (require_canonical)
        for (Gaussian c : coeffs)
            if (ring.canonicalize(c) != c)
                bad("coefficient " + to_string(c) + " is not canonical modulo " +
                    to_string(ring.modulus()));
    return Poly(ring, std::move(coeffs));
}

json to_json(const ResidueRing& ring) {
    json factors = json::array();
    for (const auto& f : ring.factors())
        factors.push_back({{"pi", to_json(f.prime.pi)}, {"p", f.prime.p}, {"exp", f.exponent}});
    return {{"factors", std::move(factors)},
            {"delta", to_json(ring.modulus())},
            {"N", ring.size()}};
}

ResidueRing ring_from_json(const json& j) {
    const json& jf = field(j, "factors");
    if (!jf.is_array() || jf.empty()) bad("'factors' must be a non-empty array");
    std::vector<ResidueRing::Factor> factors;
    for (const json& f : jf) {
        Gaussian pi = gaussian_from_json(field(f, "pi"));
        std::int64_t p = as_int(field(f, "p"), "p");
        std::int64_t exp = as_int(field(f, "exp"), "exp");
        PrimeSpec spec = [&] {
            try {
                return PrimeSpec::from_pi(pi);
            } catch (const Error& e) {
                bad(e.what());
            }
        }();
        if (spec.p != p)
            bad("factor p = " + std::to_string(p) + " does not match norm(pi) = " +
                std::to_string(spec.p));
        if (exp < 1 || exp > 62) bad("factor exponent out of range");
        factors.push_back({spec, static_cast<int>(exp)});
    }

    ResidueRing ring = [&] {
        try {
            return ResidueRing::from_factors(factors);
        } catch (const Error& e) {
            bad(e.what());
        }
    }();

    // delta and N are redundant but must agree with the factorization.
    if (gaussian_from_json(field(j, "delta")) != ring.modulus())
        bad("'delta' does not equal the product of the factors");
    if (as_int(field(j, "N"), "N") != ring.size()) bad("'N' does not equal norm(delta)");
    return ring;
}

json to_json(const ConstacyclicCode& code) {
    return {{"ring", to_json(code.ring)},
            {"n", code.n},
            {"lambda", to_json(code.lambda)},
            {"gen", to_json(code.gen)},
            {"check", to_json(code.check)}};
}

ConstacyclicCode code_from_json(const json& j) {
    ResidueRing ring = ring_from_json(field(j, "ring"));
    std::int64_t n = as_int(field(j, "n"), "n");
    if (n < 1) bad("'n' must be >= 1");
    Gaussian lambda = gaussian_from_json(field(j, "lambda"));
    Poly gen = poly_from_json(ring, field(j, "gen"), true);
    Poly stored_check = poly_from_json(ring, field(j, "check"), true);

    ConstacyclicCode code = [&] {
        try {
            return make_code(ring, n, lambda, gen);
        } catch (const Error& e) {
            bad(std::string("code descriptor invalid: ") + e.what());
        }
    }();
    if (!(stored_check == code.check))
        bad("'check' is not (x^" + std::to_string(n) + " - " + to_string(code.lambda) +
            ") / gen; descriptor violates gen*check = x^n - lambda");
    return code;
}

ConstacyclicCode code_from_json_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) bad("not valid JSON");
    return code_from_json(j);
}

json to_json(const Matrix& m) {
    json out = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (Gaussian z : row) r.push_back(to_json(z));
        out.push_back(std::move(r));
    }
    return out;
}

json vector_to_json(std::span<const Gaussian> v) {
    json out = json::array();
    for (Gaussian z : v) out.push_back(to_json(z));
    return out;
}

std::vector<Gaussian> vector_from_json(const json& j) {
    if (!j.is_array()) bad("vector must be an array of [re, im] pairs");
    std::vector<Gaussian> out;
    out.reserve(j.size());
    for (const json& z : j) out.push_back(gaussian_from_json(z));
    return out;
}

json to_json(const SyndromeTable& table) {
    json out = json::array();
    for (const auto& entry : table.entries())
        out.push_back({{"leader", vector_to_json(entry.leader)},
                       {"syndrome", to_json(entry.syndrome)}});
    return out;
}

json to_json(const oracle::DecodeReport& report) {
    json failures = json::array();
    for (const auto& f : report.failures)
        failures.push_back({{"message", vector_to_json(f.message)},
                            {"error", vector_to_json(f.error)},
                            {"reason", f.reason}});
    json out = {{"trials", report.trials},
                {"failures", std::move(failures)},
                {"table_size", report.table_size}};
    if (report.min_distance) out["min_distance"] = *report.min_distance;
    return out;
}

std::string poly_to_text(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int d = f.degree(); d >= 0; --d) {
        Gaussian c = f.coeff(static_cast<std::size_t>(d));
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (d == 0) {
            out += "(" + to_string(c) + ")";
            continue;
        }
        if (c != Gaussian(1, 0)) out += "(" + to_string(c) + ")";
        out += d == 1 ? "x" : "x^" + std::to_string(d);
    }
    return out;
}

namespace {

std::string monomial_text(Gaussian u, std::size_t j) {
    std::string unit;
    if (u == Gaussian(1, 0)) unit = "";
    else if (u == Gaussian(0, 1)) unit = "i";
    else if (u == Gaussian(-1, 0)) unit = "-";
    else if (u == Gaussian(0, -1)) unit = "-i";
    else unit = "(" + to_string(u) + ")";
    if (j == 0) return unit.empty() ? "1" : (unit == "-" ? "-1" : unit);
    std::string power = j == 1 ? "x" : "x^" + std::to_string(j);
    return unit.empty() || unit == "-" ? unit + power : unit + " " + power;
}

std::string leader_text(const std::vector<Gaussian>& leader) {
    for (std::size_t j = 0; j < leader.size(); ++j)
        if (!leader[j].is_zero()) return monomial_text(leader[j], j);
    return "0";
}

} // namespace

std::string matrix_to_text(const Matrix& m) {
    std::size_t width = 1;
    for (const auto& row : m)
        for (Gaussian z : row) width = std::max(width, to_string(z).size());
    std::string out;
    for (const auto& row : m) {
        out += " ";
        for (Gaussian z : row) {
            std::string cell = to_string(z);
            out += " " + std::string(width - cell.size(), ' ') + cell;
        }
        out += "\n";
    }
    return out;
}

std::string code_to_text(const ConstacyclicCode& code) {
    std::ostringstream os;
    os << "ring G_delta, delta = " << code.ring.modulus() << ", N = " << code.ring.size()
       << ", factors:";
    for (const auto& f : code.ring.factors()) {
        os << " (" << f.prime.pi << ")";
        if (f.exponent > 1) os << "^" << f.exponent;
        os << " [p = " << f.prime.p << "]";
    }
    os << "\n";
    os << "length n = " << code.n << ", twist lambda = " << code.lambda
       << ", message length k = " << code.dim << "\n";
    os << "g(x) = " << poly_to_text(code.gen) << "\n";
    os << "h(x) = " << poly_to_text(code.check) << "\n";
    Matrix g = generator_matrix(code);
    Matrix h = parity_check_matrix(code);
    os << "generator matrix G (" << g.size() << " x " << code.n << "):\n" << matrix_to_text(g);
    os << "parity check matrix H (" << h.size() << " x " << code.n << "):\n" << matrix_to_text(h);
    return os.str();
}

std::string table_to_text(const SyndromeTable& table) {
    std::size_t width = std::string("coset leader").size();
    for (const auto& e : table.entries()) width = std::max(width, leader_text(e.leader).size());
    std::ostringstream os;
    os << "coset leader" << std::string(width - 12, ' ') << "  syndrome\n";
    for (const auto& e : table.entries()) {
        std::string lead = leader_text(e.leader);
        os << lead << std::string(width - lead.size(), ' ') << "  " << poly_to_text(e.syndrome)
           << "\n";
    }
    return os.str();
}

std::string report_to_text(const oracle::DecodeReport& report) {
    std::ostringstream os;
    os << "trials: " << report.trials << "\n";
    os << "failures: " << report.failures.size() << "\n";
    os << "table size: " << report.table_size
       << (report.table_distinct ? " (all syndromes distinct)" : " (DUPLICATE SYNDROMES)")
       << "\n";
    if (report.min_distance) os << "min Mannheim distance: " << *report.min_distance << "\n";
    for (const auto& f : report.failures)
        os << "FAIL: " << f.reason << " message=" << vector_to_text(f.message)
           << " error=" << vector_to_text(f.error) << "\n";
    return os.str();
}

std::string vector_to_text(std::span<const Gaussian> v) {
    std::string out = "(";
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (j > 0) out += ", ";
        out += to_string(v[j]);
    }
    return out + ")";
}

} // namespace gicodes
