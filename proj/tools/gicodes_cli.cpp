// Command-line front end for the gicodes shared library. Everything algebraic
// happens behind the C API; this translation unit only parses arguments,
// reads/writes JSON files and formats output.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <gicodes/gicodes.h>

namespace {

using nlohmann::json;

constexpr int kExitUsage = 1;
constexpr int kExitUncorrectable = 2;

[[noreturn]] void die(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    std::exit(kExitUsage);
}

void check(gic_status status) {
    if (status != GIC_OK)
        die(std::string(gic_status_name(status)) + ": " + gic_last_error());
}

std::pair<std::int64_t, std::int64_t> parse_gaussian_arg(const std::string& text) {
    std::int64_t re = 0, im = 0;
    if (gic_parse_gaussian(text.c_str(), &re, &im) != GIC_OK)
        die(std::string(gic_last_error()));
    return {re, im};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) die("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct CodeHandle {
    gic_code* ptr = nullptr;
    ~CodeHandle() { gic_code_free(ptr); }
};

struct TableHandle {
    gic_table* ptr = nullptr;
    ~TableHandle() { gic_table_free(ptr); }
};

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { gic_string_free(ptr); }
};

void load_code(const std::string& path, CodeHandle& code) {
    check(gic_code_from_json(slurp(path).c_str(), &code.ptr));
}

// A vector file is a JSON array of [re, im] pairs; returns the flat form.
std::vector<std::int64_t> load_vector(const std::string& path, std::size_t expected) {
    json j = json::parse(slurp(path), nullptr, false);
    if (j.is_discarded() || !j.is_array())
        die("'" + path + "' is not a JSON array of [re, im] pairs");
    if (j.size() != expected)
        die("'" + path + "' has " + std::to_string(j.size()) + " entries, expected " +
            std::to_string(expected));
    std::vector<std::int64_t> flat;
    flat.reserve(2 * expected);
    for (const json& z : j) {
        if (!z.is_array() || z.size() != 2 || !z[0].is_number_integer() ||
            !z[1].is_number_integer())
            die("'" + path + "' contains an entry that is not an integer pair");
        flat.push_back(z[0].get<std::int64_t>());
        flat.push_back(z[1].get<std::int64_t>());
    }
    return flat;
}

json flat_to_json(const std::vector<std::int64_t>& flat) {
    json out = json::array();
    for (std::size_t j = 0; j + 1 < flat.size(); j += 2)
        out.push_back(json::array({flat[j], flat[j + 1]}));
    return out;
}

struct ConstructArgs {
    std::string family;
    std::int64_t p = 0;
    int k_exp = 2;
    std::string sign = "plus";
    std::vector<std::int64_t> primes;
    std::int64_t length_from = 0;
    std::string root;
    std::string roots;
};

int cmd_construct(const ConstructArgs& args, bool json_mode) {
    CodeHandle code;
    if (args.family == "quarter" || args.family == "half") {
        if (args.p == 0) die("--p is required for the " + args.family + " family");
        if (!args.primes.empty() || args.length_from != 0)
            die("--primes/--length-from only apply to the multiprime family");
    }

    if (args.family == "quarter") {
        if (!args.roots.empty()) die("quarter codes take a single --root");
        std::int64_t root[2];
        const std::int64_t* root_ptr = nullptr;
        if (!args.root.empty()) {
            auto [re, im] = parse_gaussian_arg(args.root);
            root[0] = re;
            root[1] = im;
            root_ptr = root;
        }
        check(gic_code_build_quarter(args.p, args.k_exp, args.sign != "minus", root_ptr,
                                     &code.ptr));
    } else if (args.family == "half") {
        if (!args.root.empty()) die("half codes take a --roots pair");
        std::int64_t roots[4];
        const std::int64_t* roots_ptr = nullptr;
        if (!args.roots.empty()) {
            auto comma = args.roots.find(',');
            if (comma == std::string::npos) die("--roots expects two values, e.g. 2,1-1i");
            auto [re1, im1] = parse_gaussian_arg(args.roots.substr(0, comma));
            auto [re2, im2] = parse_gaussian_arg(args.roots.substr(comma + 1));
            roots[0] = re1;
            roots[1] = im1;
            roots[2] = re2;
            roots[3] = im2;
            roots_ptr = roots;
        }
        check(gic_code_build_half(args.p, args.k_exp, roots_ptr, &code.ptr));
    } else if (args.family == "multiprime") {
        if (args.p != 0) die("--p does not apply to the multiprime family; use --primes");
        if (!args.roots.empty()) die("multiprime codes take a single --root");
        if (args.primes.size() < 2) die("--primes needs at least two primes");
        if (args.length_from == 0) die("--length-from is required for the multiprime family");
        std::int64_t root[2];
        const std::int64_t* root_ptr = nullptr;
        if (!args.root.empty()) {
            auto [re, im] = parse_gaussian_arg(args.root);
            root[0] = re;
            root[1] = im;
            root_ptr = root;
        }
        check(gic_code_build_multiprime(args.primes.data(), args.primes.size(),
                                        args.length_from, root_ptr, &code.ptr));
    } else {
        die("unknown family '" + args.family + "' (quarter, half or multiprime)");
    }

    OwnedString text;
    if (json_mode) {
        check(gic_code_to_json(code.ptr, 1, &text.ptr));
    } else {
        check(gic_code_to_text(code.ptr, &text.ptr));
    }
    std::cout << text.ptr;
    if (json_mode) std::cout << "\n";
    return 0;
}

int cmd_encode(const std::string& code_file, const std::string& message_file) {
    CodeHandle code;
    load_code(code_file, code);
    auto message = load_vector(message_file, gic_code_dim(code.ptr));
    std::vector<std::int64_t> codeword(2 * gic_code_length(code.ptr));
    check(gic_encode(code.ptr, message.data(), codeword.data()));
    std::cout << flat_to_json(codeword).dump() << "\n";
    return 0;
}

int cmd_decode(const std::string& code_file, const std::string& received_file) {
    CodeHandle code;
    load_code(code_file, code);
    auto received = load_vector(received_file, gic_code_length(code.ptr));

    TableHandle table;
    check(gic_table_build(code.ptr, &table.ptr));

    const std::size_t n = gic_code_length(code.ptr);
    const std::size_t k = gic_code_dim(code.ptr);
    std::vector<std::int64_t> codeword(2 * n), error(2 * n), message(2 * k);
    gic_status status = gic_decode(code.ptr, table.ptr, received.data(), codeword.data(),
                                   error.data(), message.data());
    if (status == GIC_ERR_UNCORRECTABLE) {
        std::cout << "uncorrectable\n";
        return kExitUncorrectable;
    }
    check(status);
    json out = {{"codeword", flat_to_json(codeword)},
                {"error", flat_to_json(error)},
                {"message", flat_to_json(message)}};
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_tables(const std::string& code_file, bool json_mode) {
    CodeHandle code;
    load_code(code_file, code);
    TableHandle table;
    check(gic_table_build(code.ptr, &table.ptr));
    OwnedString text;
    if (json_mode) {
        check(gic_table_to_json(table.ptr, &text.ptr));
    } else {
        check(gic_table_to_text(table.ptr, &text.ptr));
    }
    std::cout << text.ptr;
    if (json_mode) std::cout << "\n";
    return 0;
}

int cmd_verify(const std::string& code_file, std::uint64_t samples, std::uint64_t seed,
               bool exhaustive, bool json_mode) {
    CodeHandle code;
    load_code(code_file, code);
    OwnedString report;
    int passed = 0;
    // Exhaustive mode enumerates every message and also reports the brute-force
    // minimum Mannheim distance.
    check(gic_verify(code.ptr, exhaustive ? 0 : samples, seed, exhaustive ? 1 : 0, &report.ptr,
                     &passed));
    if (json_mode) {
        std::cout << report.ptr << "\n";
    } else {
        json j = json::parse(report.ptr);
        std::cout << "trials: " << j["trials"].get<std::uint64_t>() << "\n";
        std::cout << "failures: " << j["failures"].size() << "\n";
        std::cout << "table size: " << j["table_size"].get<std::size_t>() << "\n";
        if (j.contains("min_distance"))
            std::cout << "min Mannheim distance: " << j["min_distance"].get<std::int64_t>()
                      << "\n";
        std::cout << (passed ? "all checks passed" : "CHECKS FAILED") << "\n";
    }
    return passed ? 0 : kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constacyclic codes over Gaussian-integer residue rings"};
    app.require_subcommand(1);
    app.fallthrough();

    bool json_mode = false;
    std::uint64_t seed = 42;
    app.add_flag("--json", json_mode, "Emit JSON instead of aligned text");
    app.add_option("--seed", seed, "Seed for sampled verification (default 42)");

    ConstructArgs cargs;
    auto* construct = app.add_subcommand("construct", "Build a code and print it with G and H");
    construct->add_option("--family", cargs.family, "quarter, half or multiprime")->required();
    construct->add_option("--p", cargs.p, "Rational prime p == 1 (mod 4)");
    construct->add_option("--k-exp", cargs.k_exp, "Prime-power exponent (default 2)");
    construct->add_option("--sign", cargs.sign, "quarter family: plus (lambda=i) or minus")
        ->check(CLI::IsMember({"plus", "minus"}));
    construct->add_option("--primes", cargs.primes, "Comma-separated primes, e.g. 5,13")
        ->delimiter(',');
    construct->add_option("--length-from", cargs.length_from,
                          "Prime whose phi(p) gives the multiprime code length");
    construct->add_option("--root", cargs.root, "Root override, e.g. 3+1i");
    construct->add_option("--roots", cargs.roots, "Half-family root pair, e.g. 2,1-1i");

    std::string code_file, vector_file;
    auto* encode_cmd = app.add_subcommand("encode", "Encode a message file");
    encode_cmd->add_option("code-file", code_file, "Code descriptor JSON")->required();
    encode_cmd->add_option("message-file", vector_file, "Message vector JSON")->required();

    auto* decode_cmd = app.add_subcommand("decode", "Decode a received vector file");
    decode_cmd->add_option("code-file", code_file, "Code descriptor JSON")->required();
    decode_cmd->add_option("received-file", vector_file, "Received vector JSON")->required();

    auto* tables_cmd = app.add_subcommand("tables", "Dump the coset-leader syndrome table");
    tables_cmd->add_option("code-file", code_file, "Code descriptor JSON")->required();

    std::uint64_t samples = 1000;
    bool exhaustive = false;
    auto* verify_cmd = app.add_subcommand("verify", "Round-trip decode verification");
    verify_cmd->add_option("code-file", code_file, "Code descriptor JSON")->required();
    verify_cmd->add_option("--samples", samples, "Number of sampled messages (default 1000)");
    verify_cmd->add_flag("--exhaustive", exhaustive,
                         "Enumerate every message and report the minimum Mannheim distance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (construct->parsed()) return cmd_construct(cargs, json_mode);
    if (encode_cmd->parsed()) return cmd_encode(code_file, vector_file);
    if (decode_cmd->parsed()) return cmd_decode(code_file, vector_file);
    if (tables_cmd->parsed()) return cmd_tables(code_file, json_mode);
    if (verify_cmd->parsed()) return cmd_verify(code_file, samples, seed, exhaustive, json_mode);
    return kExitUsage;
}
