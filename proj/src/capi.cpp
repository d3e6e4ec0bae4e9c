#include "gicodes/gicodes.h"

#include <cstring>
#include <new>
#include <string>

#include "json_io.hpp"

using namespace gicodes;

struct gic_code {
    ConstacyclicCode impl;
};

struct gic_table {
    SyndromeTable impl;
};

namespace {

thread_local std::string t_last_error;

gic_status map_errc(Errc code) {
    switch (code) {
        case Errc::InvalidArgument: return GIC_ERR_INVALID_ARGUMENT;
        case Errc::InvalidPrime: return GIC_ERR_INVALID_PRIME;
        case Errc::NotAUnit: return GIC_ERR_NOT_A_UNIT;
        case Errc::NoGenerator: return GIC_ERR_NO_GENERATOR;
        case Errc::WrongModulusShape: return GIC_ERR_WRONG_MODULUS_SHAPE;
        case Errc::NonUnitLeadingCoeff: return GIC_ERR_NON_UNIT_LEADING_COEFF;
        case Errc::SyndromeCollision: return GIC_ERR_SYNDROME_COLLISION;
        case Errc::TooLarge: return GIC_ERR_TOO_LARGE;
        case Errc::BadDescriptor: return GIC_ERR_BAD_DESCRIPTOR;
        case Errc::Internal: return GIC_ERR_INTERNAL;
    }
    return GIC_ERR_INTERNAL;
}

template <typename Fn>
gic_status wrap(Fn&& fn) {
    try {
        fn();
        return GIC_OK;
    } catch (const Error& e) {
        t_last_error = e.what();
        return map_errc(e.code());
    } catch (const std::bad_alloc&) {
        t_last_error = "out of memory";
        return GIC_ERR_INTERNAL;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return GIC_ERR_INTERNAL;
    }
}

gic_status fail_arg(const char* what) {
    t_last_error = what;
    return GIC_ERR_INVALID_ARGUMENT;
}

std::vector<Gaussian> from_flat(const int64_t* flat, std::size_t count) {
    std::vector<Gaussian> out(count);
    for (std::size_t j = 0; j < count; ++j) out[j] = Gaussian(flat[2 * j], flat[2 * j + 1]);
    return out;
}

void to_flat(const std::vector<Gaussian>& v, int64_t* flat) {
    for (std::size_t j = 0; j < v.size(); ++j) {
        flat[2 * j] = v[j].re;
        flat[2 * j + 1] = v[j].im;
    }
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

} // namespace

extern "C" {

const char* gic_status_name(gic_status status) {
    switch (status) {
        case GIC_OK: return "ok";
        case GIC_ERR_INVALID_ARGUMENT: return "invalid argument";
        case GIC_ERR_INVALID_PRIME: return "invalid prime";
        case GIC_ERR_NOT_A_UNIT: return "not a unit";
        case GIC_ERR_NO_GENERATOR: return "no generator";
        case GIC_ERR_WRONG_MODULUS_SHAPE: return "wrong modulus shape";
        case GIC_ERR_NON_UNIT_LEADING_COEFF: return "non-unit leading coefficient";
        case GIC_ERR_SYNDROME_COLLISION: return "syndrome collision";
        case GIC_ERR_UNCORRECTABLE: return "uncorrectable";
        case GIC_ERR_TOO_LARGE: return "too large";
        case GIC_ERR_BAD_DESCRIPTOR: return "bad descriptor";
        case GIC_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* gic_last_error(void) { return t_last_error.c_str(); }

gic_status gic_code_build_quarter(int64_t p, int k_exp, int plus_sign, const int64_t* root,
                                  gic_code** out) {
    if (out == nullptr) return fail_arg("out must not be null");
    return wrap([&] {
        std::optional<Gaussian> r;
        if (root != nullptr) r = Gaussian(root[0], root[1]);
        *out = new gic_code{build_quarter_code(p, k_exp, plus_sign != 0, r)};
    });
}

gic_status gic_code_build_half(int64_t p, int k_exp, const int64_t* roots, gic_code** out) {
    if (out == nullptr) return fail_arg("out must not be null");
    return wrap([&] {
        std::optional<std::pair<Gaussian, Gaussian>> r;
        if (roots != nullptr)
            r = std::make_pair(Gaussian(roots[0], roots[1]), Gaussian(roots[2], roots[3]));
        *out = new gic_code{build_half_code(p, k_exp, r)};
    });
}

gic_status gic_code_build_multiprime(const int64_t* primes, size_t num_primes,
                                     int64_t length_from_p, const int64_t* root, gic_code** out) {
    if (out == nullptr || primes == nullptr) return fail_arg("primes/out must not be null");
    return wrap([&] {
        std::vector<std::int64_t> ps(primes, primes + num_primes);
        std::size_t index = ps.size();
        for (std::size_t j = 0; j < ps.size(); ++j)
            if (ps[j] == length_from_p) index = j;
        if (index == ps.size())
            raise(Errc::InvalidArgument,
                  "length_from prime " + std::to_string(length_from_p) +
                      " is not one of the listed primes");
        std::optional<Gaussian> r;
        if (root != nullptr) r = Gaussian(root[0], root[1]);
        *out = new gic_code{build_multiprime_code(ps, index, r)};
    });
}

gic_status gic_code_from_json(const char* text, gic_code** out) {
    if (out == nullptr || text == nullptr) return fail_arg("text/out must not be null");
    return wrap([&] { *out = new gic_code{code_from_json_text(text)}; });
}

void gic_code_free(gic_code* code) { delete code; }

size_t gic_code_length(const gic_code* code) {
    return code == nullptr ? 0 : static_cast<size_t>(code->impl.n);
}

size_t gic_code_dim(const gic_code* code) {
    return code == nullptr ? 0 : static_cast<size_t>(code->impl.dim);
}

int64_t gic_code_ring_size(const gic_code* code) {
    return code == nullptr ? 0 : code->impl.ring.size();
}

gic_status gic_code_to_json(const gic_code* code, int include_matrices, char** out) {
    if (code == nullptr || out == nullptr) return fail_arg("code/out must not be null");
    return wrap([&] {
        nlohmann::json j = to_json(code->impl);
        if (include_matrices != 0) {
            j["G"] = to_json(generator_matrix(code->impl));
            j["H"] = to_json(parity_check_matrix(code->impl));
        }
        *out = copy_string(j.dump(2));
    });
}

gic_status gic_code_to_text(const gic_code* code, char** out) {
    if (code == nullptr || out == nullptr) return fail_arg("code/out must not be null");
    return wrap([&] { *out = copy_string(code_to_text(code->impl)); });
}

gic_status gic_encode(const gic_code* code, const int64_t* message, int64_t* codeword) {
    if (code == nullptr || message == nullptr || codeword == nullptr)
        return fail_arg("code/message/codeword must not be null");
    return wrap([&] {
        auto msg = from_flat(message, static_cast<std::size_t>(code->impl.dim));
        to_flat(encode(code->impl, msg), codeword);
    });
}

gic_status gic_syndrome(const gic_code* code, const int64_t* received, int64_t* syndrome_out) {
    if (code == nullptr || received == nullptr || syndrome_out == nullptr)
        return fail_arg("code/received/syndrome must not be null");
    return wrap([&] {
        auto recv = from_flat(received, static_cast<std::size_t>(code->impl.n));
        Poly s = syndrome(code->impl, recv);
        const auto len = static_cast<std::size_t>(code->impl.n - code->impl.dim);
        std::vector<Gaussian> padded(len);
        for (std::size_t j = 0; j < len; ++j) padded[j] = s.coeff(j);
        to_flat(padded, syndrome_out);
    });
}

gic_status gic_is_codeword(const gic_code* code, const int64_t* vec, int* result) {
    if (code == nullptr || vec == nullptr || result == nullptr)
        return fail_arg("code/vec/result must not be null");
    return wrap([&] {
        auto v = from_flat(vec, static_cast<std::size_t>(code->impl.n));
        *result = is_codeword(code->impl, v) ? 1 : 0;
    });
}

gic_status gic_table_build(const gic_code* code, gic_table** out) {
    if (code == nullptr || out == nullptr) return fail_arg("code/out must not be null");
    return wrap([&] { *out = new gic_table{SyndromeTable::build(code->impl)}; });
}

void gic_table_free(gic_table* table) { delete table; }

size_t gic_table_size(const gic_table* table) {
    return table == nullptr ? 0 : table->impl.size();
}

gic_status gic_table_to_json(const gic_table* table, char** out) {
    if (table == nullptr || out == nullptr) return fail_arg("table/out must not be null");
    return wrap([&] { *out = copy_string(to_json(table->impl).dump(2)); });
}

gic_status gic_table_to_text(const gic_table* table, char** out) {
    if (table == nullptr || out == nullptr) return fail_arg("table/out must not be null");
    return wrap([&] { *out = copy_string(table_to_text(table->impl)); });
}

gic_status gic_decode(const gic_code* code, const gic_table* table, const int64_t* received,
                      int64_t* codeword, int64_t* error, int64_t* message) {
    if (code == nullptr || table == nullptr || received == nullptr || codeword == nullptr ||
        error == nullptr || message == nullptr)
        return fail_arg("gic_decode arguments must not be null");
    gic_status failed = GIC_OK;
    gic_status status = wrap([&] {
        auto recv = from_flat(received, static_cast<std::size_t>(code->impl.n));
        auto result = decode(code->impl, table->impl, recv);
        if (!result) {
            t_last_error = "syndrome not covered by the coset-leader table";
            failed = GIC_ERR_UNCORRECTABLE;
            return;
        }
        to_flat(result->codeword, codeword);
        to_flat(result->error, error);
        to_flat(result->message, message);
    });
    return status != GIC_OK ? status : failed;
}

gic_status gic_verify(const gic_code* code, uint64_t samples, uint64_t seed,
                      int with_min_distance, char** report_json, int* passed) {
    if (code == nullptr || report_json == nullptr || passed == nullptr)
        return fail_arg("code/report_json/passed must not be null");
    return wrap([&] {
        SyndromeTable table = SyndromeTable::build(code->impl);
        std::optional<std::uint64_t> count;
        if (samples > 0) count = samples;
        auto report = oracle::exhaustive_decode_check(code->impl, table, count, seed);
        if (with_min_distance != 0)
            report.min_distance = oracle::brute_min_mannheim_distance(code->impl);
        *report_json = copy_string(to_json(report).dump(2));
        *passed = report.passed() ? 1 : 0;
    });
}

gic_status gic_format_gaussian(int64_t re, int64_t im, char* buf, size_t buf_len) {
    if (buf == nullptr) return fail_arg("buf must not be null");
    std::string s = to_string(Gaussian(re, im));
    if (s.size() + 1 > buf_len) return fail_arg("buffer too small");
    std::memcpy(buf, s.c_str(), s.size() + 1);
    return GIC_OK;
}

gic_status gic_parse_gaussian(const char* text, int64_t* re, int64_t* im) {
    if (text == nullptr || re == nullptr || im == nullptr)
        return fail_arg("text/re/im must not be null");
    return wrap([&] {
        Gaussian z = parse_gaussian(text);
        *re = z.re;
        *im = z.im;
    });
}

void gic_string_free(char* text) { delete[] text; }

} // extern "C"
