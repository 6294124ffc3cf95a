#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "toric/emit.hpp"
#include "toric/io.hpp"
#include "toric/oracle.hpp"
#include "toric/solver.hpp"

namespace {

std::uint64_t parse_field(const std::string& spec) {
    if (spec == "q" || spec == "Q") return 0;
    if (spec.rfind("fp:", 0) == 0) {
        std::uint64_t p = 0;
        try {
            p = std::stoull(spec.substr(3));
        } catch (...) {
            throw CLI::ValidationError("--field", "bad prime in '" + spec + "'");
        }
        if (!toric::is_prime_u64(p)) {
            throw CLI::ValidationError("--field", std::to_string(p) + " is not prime");
        }
        return p;
    }
    throw CLI::ValidationError("--field", "expected q or fp:<prime>, got '" + spec + "'");
}

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open " << path << "\n";
        std::exit(2);
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"toric border basis engine"};
    app.require_subcommand(1);

    CLI::App* cmd = app.add_subcommand("solve", "compute a border basis");
    std::string field = "q";
    std::string choice = "macaulay";
    int max_degree = -1;
    std::string emit = "basis,quotient";
    std::string format = "text";
    bool dump_matrices = false;
    bool run_oracle = false;
    std::string file = "-";
    cmd->add_option("--field", field, "q or fp:<prime>")->capture_default_str();
    cmd->add_option("--choice", choice, "macaulay or lexmax")->capture_default_str();
    cmd->add_option("--max-degree", max_degree, "degree ceiling (-1: automatic)");
    cmd->add_option("--emit", emit, "comma list of basis,quotient,matrices,syzygies,trace")
        ->capture_default_str();
    cmd->add_option("--format", format, "text or json")->capture_default_str();
    cmd->add_flag("--dump-matrices", dump_matrices, "include the multiplication matrices");
    cmd->add_flag("--oracle", run_oracle)->group(""); // hidden: brute-force cross-check
    cmd->add_option("file", file, "input system ('-' for stdin)");

    CLI11_PARSE(app, argc, argv);

    std::uint64_t prime = 0;
    toric::EmitRequest req;
    try {
        prime = parse_field(field);
        req.sections.clear();
        std::stringstream ss(emit);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            if (item != "basis" && item != "quotient" && item != "matrices" &&
                item != "syzygies" && item != "trace") {
                std::cerr << "unknown --emit selector '" << item << "'\n";
                return 2;
            }
            req.sections.insert(item);
        }
        if (req.sections.empty()) {
            std::cerr << "--emit needs at least one selector\n";
            return 2;
        }
        if (dump_matrices) req.sections.insert("matrices");
        if (format != "text" && format != "json") {
            std::cerr << "unknown --format '" << format << "'\n";
            return 2;
        }
        req.json = format == "json";
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    std::vector<toric::LaurentPoly> system;
    try {
        system = toric::parse_system(slurp(file), prime);
    } catch (const toric::Error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }

    toric::SolverConfig cfg;
    cfg.prime = prime;
    cfg.choice = toric::ChoiceFunction::parse(choice).strategy();
    cfg.max_degree = max_degree;

    try {
        toric::SolverResult res = toric::solve(system, cfg);
        std::cout << toric::emit_result(res, req);
        if (run_oracle) {
            int d = 4;
            for (const auto& f : system) d = std::max(d, 2 * f.degree() + 4);
            auto dim = toric::oracle_quotient_dim(system, d);
            std::cout << "oracle quotient dimension (degree " << d
                      << "): " << (dim ? std::to_string(*dim) : "unstable") << "\n";
        }
        if (res.outcome == toric::Outcome::Aborted) {
            return res.reason == toric::AbortReason::CertificateFailure ? 4 : 3;
        }
        return 0;
    } catch (const toric::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
