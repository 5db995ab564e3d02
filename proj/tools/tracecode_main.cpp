#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tracecode/bases.hpp"
#include "tracecode/io.hpp"
#include "tracecode/representations.hpp"
#include "tracecode/selfcheck.hpp"

// Command-line front end. Exit codes: 0 success, 1 domain error,
// 2 usage/parse error.

namespace {

using nlohmann::json;
using namespace tracecode;

struct Options {
    bool json_output = false;
    uint64_t seed = 0xC0DEC0DEULL;
};

json element_json(const FieldElement& e) {
    json j;
    j["coeffs"] = e.coeffs();
    if (e.field()->dlog_available()) j["power"] = format_element(e);
    return j;
}

json code_json(const LinearCode& code) {
    json j;
    j["n"] = code.length();
    j["k"] = code.dimension();
    if (code.dimension() > 0) {
        try {
            j["d"] = min_distance(code);
            json wd = json::array();
            for (uint64_t c : weight_distribution(code).counts) wd.push_back(c);
            j["weight_distribution"] = wd;
        } catch (const TooLargeError&) {
            j["d"] = nullptr;
        }
    }
    return j;
}

void print_code_report(const LinearCode& code, std::ostream& out) {
    out << "parameters: " << format_code_params(code) << "\n";
    try {
        WeightDistribution w = weight_distribution(code);
        out << "weight enumerator: " << format_weight_enumerator(w) << "\n";
    } catch (const TooLargeError&) {
        out << "weight enumerator: (enumeration too large)\n";
    }
    out << "generator matrix (RREF):\n" << format_matrix(code.generator_matrix());
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return in;
}

// q = p^s for prime p; ParseError otherwise.
FieldPtr ground_from_q(int64_t q) {
    if (q < 2) throw ParseError("q must be a prime power >= 2");
    int64_t p = q;
    for (int64_t f = 2; f * f <= q; ++f) {
        if (q % f == 0) {
            p = f;
            break;
        }
    }
    int s = 0;
    int64_t rest = q;
    while (rest > 1) {
        if (rest % p != 0) throw ParseError(std::to_string(q) + " is not a prime power");
        rest /= p;
        ++s;
    }
    return Field::make(p, s);
}

int cmd_trace_code(const Options& opt, const std::string& file, const std::string& field_flag,
                   const std::string& ground_flag, const std::string& elements) {
    std::optional<DefiningSet> dset;
    if (!file.empty()) {
        auto in = open_input(file);
        dset = parse_defining_set(in);
    } else {
        if (field_flag.empty() || elements.empty())
            throw ParseError("trace-code needs a defining-set file or --field and --elements");
        FieldPtr big = parse_field_flag(field_flag);
        FieldPtr ground = ground_flag.empty() ? Field::make(big->characteristic(), 1)
                                              : parse_field_flag(ground_flag);
        dset = parse_defining_set_elements(elements, big, ground);
    }

    LinearCode code = trace_code(*dset);
    if (opt.json_output) {
        json j = code_json(code);
        j["field"] = format_field_spec(*dset->big);
        j["ground"] = format_field_spec(*dset->ground);
        json ds = json::array();
        for (const auto& e : dset->elements) ds.push_back(format_element(e));
        j["defining_set"] = ds;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "field: " << format_field_spec(*dset->big) << "\n";
        if (!dset->ground->same_spec(*Field::make(dset->big->characteristic(), 1)))
            std::cout << "ground: " << format_field_spec(*dset->ground) << "\n";
        print_code_report(code, std::cout);
    }
    return 0;
}

int cmd_to_defining_set(const Options& opt, const std::string& file, const std::string& field_flag) {
    if (field_flag.empty()) throw ParseError("to-defining-set needs --field for the matrix entries");
    FieldPtr ground = parse_field_flag(field_flag);
    auto in = open_input(file);
    Matrix g = parse_matrix(in, ground);
    DefiningSet d = defining_set_from_matrix(g);
    LinearCode code = trace_code(d);

    std::ostringstream power, coeffs;
    for (size_t i = 0; i < d.elements.size(); ++i) {
        if (i) {
            power << ", ";
            coeffs << ", ";
        }
        power << format_element(d.elements[i]);
        coeffs << format_element_coeffs(d.elements[i]);
    }

    if (opt.json_output) {
        json j = code_json(code);
        j["field"] = format_field_spec(*d.big);
        j["ground"] = format_field_spec(*d.ground);
        json ds = json::array();
        for (const auto& e : d.elements) ds.push_back(format_element(e));
        j["defining_set"] = ds;
        json dc = json::array();
        for (const auto& e : d.elements) dc.push_back(e.coeffs());
        j["defining_set_coeffs"] = dc;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "field: " << format_field_spec(*d.big) << "\n";
        std::cout << "defining set (powers): " << power.str() << "\n";
        std::cout << "defining set (coeffs): " << coeffs.str() << "\n";
        std::cout << "trace code parameters: " << format_code_params(code) << "\n";
    }
    return 0;
}

int cmd_cyclic_rep(const Options& opt, int64_t q, int n, const std::string& f_text,
                   const std::string& alpha_text) {
    FieldPtr ground = ground_from_q(q);
    Poly f = parse_poly(f_text, ground);
    CyclicSpec spec(ground, n, f);

    FieldPtr big = Field::make(ground->characteristic(), ground->degree() * n);
    FieldElement alpha = alpha_text.empty() ? find_normal_element(big, ground)
                                            : parse_element(alpha_text, big);
    DefiningSet d = cyclic_defining_set(spec, alpha);
    LinearCode from_trace = trace_code(d);
    LinearCode direct = cyclic_code(spec);
    bool match = code_equal(from_trace, direct);

    if (opt.json_output) {
        json j = code_json(from_trace);
        j["field"] = format_field_spec(*big);
        j["normal_element"] = element_json(alpha);
        json orbit = json::array();
        for (const auto& e : d.elements) orbit.push_back(format_element(e));
        j["defining_set"] = orbit;
        j["generator_polynomial"] = format_poly(generator_polynomial(spec));
        j["matches_cyclic_code"] = match;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "field: " << format_field_spec(*big) << "\n";
        std::cout << "normal element: " << format_element(alpha) << "\n";
        std::cout << "defining set (Frobenius orbit): ";
        for (size_t i = 0; i < d.elements.size(); ++i) {
            if (i) std::cout << ", ";
            std::cout << format_element(d.elements[i]);
        }
        std::cout << "\n" << "defining set (coeffs): ";
        for (size_t i = 0; i < d.elements.size(); ++i) {
            if (i) std::cout << ", ";
            std::cout << format_element_coeffs(d.elements[i]);
        }
        std::cout << "\n";
        std::cout << "generator polynomial: " << format_poly(generator_polynomial(spec)) << "\n";
        print_code_report(from_trace, std::cout);
        std::cout << "equal to cyclic code: " << (match ? "yes" : "no") << "\n";
    }
    return match ? 0 : 1;
}

int cmd_wolfmann(const Options& opt, int64_t q, int n, const std::string& h_text) {
    FieldPtr ground = ground_from_q(q);
    Poly h = parse_poly(h_text, ground);
    WolfmannSpec spec = wolfmann_spec_from_check(h, n);
    LinearCode code = wolfmann_code(spec);
    Poly g = poly_divmod(x_pow_minus_one(ground, n), h.to_monic()).first;
    bool match = code_equal(code, cyclic_code(CyclicSpec(ground, n, g)));

    if (opt.json_output) {
        json j = code_json(code);
        j["field"] = format_field_spec(*spec.big);
        j["m"] = spec.m;
        j["beta"] = format_element(spec.beta);
        j["coset_representatives"] = spec.coset_reps;
        j["matches_cyclic_code"] = match;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "field: " << format_field_spec(*spec.big) << "\n";
        std::cout << "m = ord_" << n << "(" << q << ") = " << spec.m << "\n";
        std::cout << "beta: " << format_element(spec.beta) << "\n";
        std::cout << "coset representatives J: {";
        for (size_t i = 0; i < spec.coset_reps.size(); ++i) {
            if (i) std::cout << ", ";
            std::cout << spec.coset_reps[i];
        }
        std::cout << "}\n";
        print_code_report(code, std::cout);
        std::cout << "equal to cyclic code: " << (match ? "yes" : "no") << "\n";
    }
    return match ? 0 : 1;
}

int cmd_weights(const Options& opt, const std::string& file, const std::string& field_flag) {
    if (field_flag.empty()) throw ParseError("weights needs --field for the matrix entries");
    FieldPtr ground = parse_field_flag(field_flag);
    auto in = open_input(file);
    LinearCode code = LinearCode(parse_matrix(in, ground));

    if (opt.json_output) {
        json j = code_json(code);
        j["field"] = format_field_spec(*ground);
        std::cout << j.dump(2) << "\n";
    } else {
        print_code_report(code, std::cout);
        WeightDistribution w = weight_distribution(code);
        std::cout << "weight distribution:";
        for (uint64_t c : w.counts) std::cout << " " << c;
        std::cout << "\n";
    }
    return 0;
}

int cmd_verify(const Options& opt, const std::string& filter) {
    std::vector<SuiteResult> results = run_selfcheck(opt.seed, filter);
    if (results.empty()) throw ParseError("no property suite matches '" + filter + "'");
    int total_checks = 0, total_failures = 0;
    json suites = json::array();
    for (const auto& r : results) {
        total_checks += r.checks;
        total_failures += r.failures;
        if (opt.json_output) {
            suites.push_back({{"name", r.name}, {"checks", r.checks}, {"failures", r.failures}});
        } else {
            std::ostringstream line;
            line << (r.passed() ? "PASS" : "FAIL") << "  " << r.name << " (" << r.checks
                 << " checks";
            if (r.failures) line << ", " << r.failures << " failures";
            line << ")";
            std::cout << line.str() << "\n";
        }
    }
    if (opt.json_output) {
        json j;
        j["seed"] = opt.seed;
        j["suites"] = suites;
        j["checks"] = total_checks;
        j["failures"] = total_failures;
        j["passed"] = total_failures == 0;
        std::cout << j.dump(2) << "\n";
    } else if (total_failures == 0) {
        std::cout << "all suites passed (" << total_checks << " checks)\n";
    } else {
        std::cout << total_failures << " of " << total_checks << " checks failed\n";
    }
    return total_failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-field linear code toolkit: defining sets, trace codes, cyclic codes"};
    app.fallthrough();
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.json_output, "machine-readable output");
    app.add_option("--seed", opt.seed, "seed for randomized property suites");

    std::string file, field_flag, ground_flag, elements, f_text, h_text, alpha_text;
    int64_t q = 0;
    int n = 0;

    auto* trace = app.add_subcommand("trace-code", "build the trace code of a defining set");
    trace->add_option("file", file, "defining-set file");
    trace->add_option("--field", field_flag, "big field p,d[,modulus] (with --elements)");
    trace->add_option("--ground", ground_flag, "ground field p,s[,modulus]; defaults to GF(p)");
    trace->add_option("--elements", elements, "comma-separated defining-set elements");

    auto* todef = app.add_subcommand("to-defining-set", "defining set of a generator matrix");
    todef->add_option("file", file, "matrix file")->required();
    todef->add_option("--field", field_flag, "matrix entry field p,d[,modulus]")->required();

    auto* cyc = app.add_subcommand("cyclic-rep", "trace representation of a cyclic code");
    cyc->add_option("q", q, "ground field size (prime power)")->required();
    cyc->add_option("n", n, "code length")->required();
    cyc->add_option("f", f_text, "generating polynomial, ascending coefficients")->required();
    cyc->add_option("--alpha", alpha_text, "normal element of GF(q^n) to use");

    auto* wolf = app.add_subcommand("wolfmann", "codeword family from a check polynomial");
    wolf->add_option("q", q, "ground field size (prime power)")->required();
    wolf->add_option("n", n, "code length, gcd(n, q) = 1")->required();
    wolf->add_option("check", h_text, "check polynomial, ascending coefficients")->required();

    auto* weights = app.add_subcommand("weights", "weight distribution of a matrix's row space");
    weights->add_option("file", file, "matrix file")->required();
    weights->add_option("--field", field_flag, "matrix entry field p,d[,modulus]")->required();

    std::string suite_filter;
    auto* verify = app.add_subcommand("verify", "run the library property suites");
    verify->add_option("--suite", suite_filter, "run only suites whose name contains this");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand("trace-code"))
            return cmd_trace_code(opt, file, field_flag, ground_flag, elements);
        if (app.got_subcommand("to-defining-set")) return cmd_to_defining_set(opt, file, field_flag);
        if (app.got_subcommand("cyclic-rep")) return cmd_cyclic_rep(opt, q, n, f_text, alpha_text);
        if (app.got_subcommand("wolfmann")) return cmd_wolfmann(opt, q, n, h_text);
        if (app.got_subcommand("weights")) return cmd_weights(opt, file, field_flag);
        if (app.got_subcommand("verify")) return cmd_verify(opt, suite_filter);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
