#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "npcert/criteria.hpp"
#include "npcert/families.hpp"
#include "npcert/int_poly.hpp"
#include "npcert/newton_polygon.hpp"
#include "npcert/oracle.hpp"
#include "npcert/selftest.hpp"
#include "npcert/svg.hpp"
#include "npcert/valuation.hpp"

namespace {

using namespace npcert;

constexpr int kExitIrreducible = 0;
constexpr int kExitInconclusive = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

struct PolySource {
    std::string inline_text;
    std::string file_path;

    IntPoly load() const {
        if (!inline_text.empty() && !file_path.empty())
            throw std::invalid_argument("give either --poly or --file, not both");
        if (!inline_text.empty()) return parse_poly(inline_text);
        if (!file_path.empty()) {
            std::ifstream in(file_path);
            if (!in) throw std::invalid_argument("cannot open " + file_path);
            std::stringstream buf;
            buf << in.rdbuf();
            return parse_poly(buf.str());
        }
        throw std::invalid_argument("no polynomial given (use --poly or --file)");
    }
};

std::vector<PrimeP> parse_primes(const std::string& text) {
    std::vector<PrimeP> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty prime entry");
        out.push_back(PrimeP::checked(std::stoull(item)));
    }
    return out;
}

void write_output(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write " + out_path);
    out << payload;
}

PrimeScan parse_mode(const std::string& mode) {
    if (mode == "endpoints") return PrimeScan::endpoints;
    if (mode == "all") return PrimeScan::all_coeffs;
    throw std::invalid_argument("mode must be endpoints or all");
}

struct CheckArgs {
    PolySource src;
    std::string primes_text;
    bool auto_primes = false;
    std::uint64_t bound = 10000;
    std::string mode = "endpoints";
    std::string format = "text";
    std::string out_path;
};

int run_check(const CheckArgs& args) {
    IntPoly f = args.src.load();
    AutoCheckOptions opts;
    if (!args.primes_text.empty()) opts.primes = parse_primes(args.primes_text);
    opts.discover = args.auto_primes || opts.primes.empty();
    opts.bound = args.bound;
    opts.mode = parse_mode(args.mode);

    Certificate cert = auto_check(f, opts);
    if (args.format == "json")
        write_output(args.out_path, cert.to_json() + "\n");
    else if (args.format == "text")
        write_output(args.out_path, cert.to_text());
    else
        throw std::invalid_argument("check supports --format text|json");
    return cert.verdict == Verdict::Irreducible ? kExitIrreducible : kExitInconclusive;
}

struct PolygonArgs {
    PolySource src;
    std::string primes_text;
    bool auto_primes = false;
    std::uint64_t bound = 10000;
    std::string mode = "endpoints";
    std::string format = "text";
    std::string out_path;
};

nlohmann::ordered_json polygon_to_json(const NewtonPolygon& poly, const IntPoly& f) {
    nlohmann::ordered_json j;
    j["polynomial"] = f.to_coeff_string();
    j["prime"] = poly.prime().value();
    j["degree"] = poly.degree();
    nlohmann::ordered_json verts = nlohmann::ordered_json::array();
    for (const auto& v : poly.vertices()) verts.push_back({v.x, v.y});
    j["vertices"] = verts;
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (const Edge& e : poly.edges()) {
        nlohmann::ordered_json ej;
        ej["start"] = {e.start.x, e.start.y};
        ej["end"] = {e.end.x, e.end.y};
        ej["slope_num"] = e.slope().num;
        ej["slope_den"] = e.slope().den;
        ej["m"] = e.multiplicity;
        ej["x"] = e.segment_width;
        edges.push_back(ej);
    }
    j["edges"] = edges;
    j["segment_widths"] = segment_widths(poly);
    ShapeClass shape = classify_shape(poly);
    j["shape"] = to_string(shape.tag);
    if (shape.corner) j["corner"] = *shape.corner;
    return j;
}

std::string polygon_to_text(const NewtonPolygon& poly) {
    std::ostringstream out;
    out << "p=" << poly.prime().value() << "\n";
    out << "  vertices:";
    for (const auto& v : poly.vertices()) out << " (" << v.x << ',' << v.y << ')';
    out << "\n";
    for (const Edge& e : poly.edges()) {
        out << "  edge (" << e.start.x << ',' << e.start.y << ")->(" << e.end.x << ',' << e.end.y
            << "): slope " << e.slope().to_string() << ", width " << e.width << ", height "
            << e.height << ", m=" << e.multiplicity << ", x=" << e.segment_width << "\n";
    }
    out << "  segment widths:";
    for (int w : segment_widths(poly)) out << ' ' << w;
    out << "\n";
    ShapeClass shape = classify_shape(poly);
    out << "  shape: " << to_string(shape.tag);
    if (shape.corner) out << " (corner at " << *shape.corner << ")";
    out << "\n";
    return out.str();
}

std::string svg_out_name(const std::string& base, std::uint64_t prime, bool multi) {
    if (!multi) return base;
    std::string suffix = ".p" + std::to_string(prime);
    std::size_t dot = base.rfind('.');
    if (dot == std::string::npos || dot == 0) return base + suffix + ".svg";
    return base.substr(0, dot) + suffix + base.substr(dot);
}

int run_polygon(const PolygonArgs& args) {
    IntPoly f = args.src.load();
    if (f.is_zero()) throw std::invalid_argument("the zero polynomial has no Newton polygon");

    auto xsplit = factor_out_x(f);
    const IntPoly& g = xsplit.cofactor;
    if (g.degree() < 1) throw std::invalid_argument("constants and pure powers of X have no Newton polygon");

    std::vector<PrimeP> primes;
    if (!args.primes_text.empty()) primes = parse_primes(args.primes_text);
    if (args.auto_primes || primes.empty()) {
        auto found = candidate_primes(g, args.bound, parse_mode(args.mode));
        primes.insert(primes.end(), found.begin(), found.end());
        std::sort(primes.begin(), primes.end());
        primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    }
    if (primes.empty()) throw std::invalid_argument("no primes given or discovered");

    std::string note;
    if (xsplit.x_power > 0)
        note = "note: polygons are for the cofactor after removing X^" +
               std::to_string(xsplit.x_power) + "\n";

    if (args.format == "svg") {
        bool multi = primes.size() > 1;
        for (const PrimeP& p : primes) {
            NewtonPolygon poly = build_polygon(g, p);
            std::string title = g.to_expr_string() + "  (p=" + std::to_string(p.value()) + ")";
            std::string svg = polygon_to_svg(poly, title);
            if (args.out_path.empty())
                std::cout << svg;
            else
                write_output(svg_out_name(args.out_path, p.value(), multi), svg);
        }
        return 0;
    }
    if (args.format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const PrimeP& p : primes) arr.push_back(polygon_to_json(build_polygon(g, p), g));
        write_output(args.out_path, arr.dump(2) + "\n");
        return 0;
    }
    if (args.format != "text") throw std::invalid_argument("polygon supports --format text|json|svg");
    std::ostringstream out;
    out << "polynomial: " << g.to_coeff_string() << "\n" << note;
    for (const PrimeP& p : primes) out << polygon_to_text(build_polygon(g, p));
    write_output(args.out_path, out.str());
    return 0;
}

struct OracleArgs {
    PolySource src;
    int max_degree = 8;
    std::int64_t max_candidates = 10'000'000;
    std::string format = "text";
    std::string out_path;
};

int run_oracle(const OracleArgs& args) {
    IntPoly f = args.src.load();
    if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
    OracleLimits limits;
    limits.max_degree = args.max_degree;
    limits.max_divisor_candidates = args.max_candidates;
    Factorization fac = kronecker_factorize(f, limits);

    if (args.format == "json") {
        nlohmann::ordered_json j;
        j["polynomial"] = f.to_coeff_string();
        j["status"] = fac.status == Factorization::Status::Irreducible  ? "Irreducible"
                      : fac.status == Factorization::Status::Factored   ? "Factored"
                                                                        : "LimitExceeded";
        if (fac.status == Factorization::Status::LimitExceeded) {
            j["limit"] = fac.limit_hit;
        } else {
            j["content"] = fac.content.get_str();
            nlohmann::ordered_json factors = nlohmann::ordered_json::array();
            for (const auto& [poly, mult] : fac.factors) {
                nlohmann::ordered_json fj;
                fj["coefficients"] = poly.to_coeff_string();
                fj["multiplicity"] = mult;
                factors.push_back(fj);
            }
            j["factors"] = factors;
        }
        write_output(args.out_path, j.dump(2) + "\n");
    } else if (args.format == "text") {
        write_output(args.out_path, fac.to_string() + "\n");
    } else {
        throw std::invalid_argument("oracle supports --format text|json");
    }

    switch (fac.status) {
        case Factorization::Status::Factored: return 0;
        case Factorization::Status::Irreducible: return 1;
        case Factorization::Status::LimitExceeded: return kExitLimit;
    }
    return kExitUsage;
}

struct GenerateArgs {
    int family = 0;
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    std::optional<int> m;
    std::string out_path;
};

int run_generate(const GenerateArgs& args) {
    IntPoly f = example_family(args.family, PrimeP::checked(args.p), PrimeP::checked(args.q), args.m);
    write_output(args.out_path, f.to_coeff_string() + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Newton polygon irreducibility certificates for integer polynomials"};
    app.require_subcommand(1);

    CheckArgs check_args;
    auto* check = app.add_subcommand("check", "Certify irreducibility via Newton polygon criteria");
    check->add_option("--poly", check_args.src.inline_text, "polynomial (coefficient list or expression)");
    check->add_option("--file", check_args.src.file_path, "read the polynomial from a file");
    check->add_option("--primes", check_args.primes_text, "comma-separated primes to use");
    check->add_flag("--auto-primes", check_args.auto_primes, "also discover primes from the coefficients");
    check->add_option("--bound", check_args.bound, "discovery bound (default 10000)");
    check->add_option("--mode", check_args.mode, "discovery mode: endpoints|all");
    check->add_option("--format", check_args.format, "output format: text|json");
    check->add_option("--out", check_args.out_path, "write output to a file");

    PolygonArgs polygon_args;
    auto* polygon = app.add_subcommand("polygon", "Print or plot Newton polygons");
    polygon->add_option("--poly", polygon_args.src.inline_text, "polynomial");
    polygon->add_option("--file", polygon_args.src.file_path, "read the polynomial from a file");
    polygon->add_option("--primes", polygon_args.primes_text, "comma-separated primes");
    polygon->add_flag("--auto-primes", polygon_args.auto_primes, "also discover primes");
    polygon->add_option("--bound", polygon_args.bound, "discovery bound");
    polygon->add_option("--mode", polygon_args.mode, "discovery mode: endpoints|all");
    polygon->add_option("--format", polygon_args.format, "output format: text|json|svg");
    polygon->add_option("--out", polygon_args.out_path, "write output to a file");

    OracleArgs oracle_args;
    auto* oracle = app.add_subcommand("oracle", "Brute-force factorization over Z (ground truth)");
    oracle->add_option("--poly", oracle_args.src.inline_text, "polynomial");
    oracle->add_option("--file", oracle_args.src.file_path, "read the polynomial from a file");
    oracle->add_option("--max-degree", oracle_args.max_degree, "degree limit (default 8)");
    oracle->add_option("--max-candidates", oracle_args.max_candidates,
                       "divisor tuple limit per degree (default 1e7)");
    oracle->add_option("--format", oracle_args.format, "output format: text|json");
    oracle->add_option("--out", oracle_args.out_path, "write output to a file");

    GenerateArgs generate_args;
    auto* generate = app.add_subcommand("generate", "Emit a built-in two-prime example family");
    generate->add_option("--family", generate_args.family, "family index 1..8")->required();
    generate->add_option("-p", generate_args.p, "first prime")->required();
    generate->add_option("-q", generate_args.q, "second prime")->required();
    int m_value = -1;
    auto* m_opt = generate->add_option("--m", m_value, "extra exponent (families 3 and 4)");
    generate->add_option("--out", generate_args.out_path, "write output to a file");

    std::uint64_t seed = 12345;
    auto* selftest = app.add_subcommand("selftest", "Run the built-in verification suite");
    selftest->add_option("--seed", seed, "random seed (default 12345)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage; // usage problems exit 2; --help exits 0
    }

    try {
        if (check->parsed()) return run_check(check_args);
        if (polygon->parsed()) return run_polygon(polygon_args);
        if (oracle->parsed()) return run_oracle(oracle_args);
        if (generate->parsed()) {
            if (m_opt->count()) generate_args.m = m_value;
            return run_generate(generate_args);
        }
        if (selftest->parsed()) {
            auto results = npcert::run_selftest(seed);
            int failed = npcert::report_selftest(results, std::cout, false);
            return failed == 0 ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
