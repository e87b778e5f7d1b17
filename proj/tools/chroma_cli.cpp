// Command-line front end. Talks to the library only through the C API.

#include <chroma/chroma.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_violations = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Failure from a C API call, with its message.
struct ApiError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(chroma_status s)
{
    if (s != CHROMA_OK)
        throw ApiError(chroma_last_error());
}

auto take(char * s) -> std::string
{
    std::string out(s ? s : "");
    chroma_string_free(s);
    return out;
}

struct GraphDeleter {
    void operator()(chroma_graph * g) const { chroma_graph_free(g); }
};
struct PolyDeleter {
    void operator()(chroma_poly * p) const { chroma_poly_free(p); }
};
struct ReportDeleter {
    void operator()(chroma_report * r) const { chroma_report_free(r); }
};
using GraphPtr = std::unique_ptr<chroma_graph, GraphDeleter>;
using PolyPtr = std::unique_ptr<chroma_poly, PolyDeleter>;
using ReportPtr = std::unique_ptr<chroma_report, ReportDeleter>;

auto parse_graph(const std::string & text) -> GraphPtr
{
    chroma_graph * g = nullptr;
    check(chroma_graph_from_graph6(text.c_str(), &g));
    return GraphPtr(g);
}

// "4..8", "4,6,8" or a mix such as "3..5,7".
auto parse_int_set(const std::string & text, const std::string & flag) -> std::vector<int>
{
    std::vector<int> out;
    std::stringstream in(text);
    std::string part;
    auto number = [&](const std::string & s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        }
        catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != s.size())
            throw UsageError(flag + ": cannot read \"" + s + "\" as an integer");
        return v;
    };
    while (std::getline(in, part, ',')) {
        if (part.empty())
            throw UsageError(flag + ": empty item in \"" + text + "\"");
        auto dots = part.find("..");
        if (dots == std::string::npos) {
            out.push_back(number(part));
            continue;
        }
        int lo = number(part.substr(0, dots)), hi = number(part.substr(dots + 2));
        if (lo > hi)
            throw UsageError(flag + ": empty range \"" + part + "\"");
        for (int v = lo; v <= hi; ++v)
            out.push_back(v);
    }
    if (out.empty())
        throw UsageError(flag + ": no values given");
    return out;
}

auto read_file(const std::string & path) -> std::string
{
    std::ifstream in(path);
    if (! in)
        throw UsageError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

class Output {
public:
    explicit Output(const std::string & path)
    {
        if (! path.empty()) {
            _file.open(path);
            if (! _file)
                throw UsageError("cannot write " + path);
        }
    }
    auto stream() -> std::ostream & { return _file.is_open() ? _file : std::cout; }

private:
    std::ofstream _file;
};

class Input {
public:
    explicit Input(const std::string & path)
    {
        if (! path.empty() && path != "-") {
            _file.open(path);
            if (! _file)
                throw UsageError("cannot open " + path);
        }
    }
    auto stream() -> std::istream & { return _file.is_open() ? _file : std::cin; }

private:
    std::ifstream _file;
};

auto trim(const std::string & s) -> std::string
{
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

struct ComputeArgs {
    bool polynomial = false;
    bool count = false;
    bool list_poly = false;
    std::optional<std::uint64_t> x;
    std::string forbidden;
    std::string input;
    std::string out;
};

auto run_compute(const ComputeArgs & a) -> int
{
    int modes = a.polynomial + a.count + a.list_poly;
    if (modes != 1)
        throw UsageError("compute: choose exactly one of --polynomial, --count, --list-poly");
    if (a.count && ! a.x)
        throw UsageError("compute --count needs --x");
    if (! a.count && a.x)
        throw UsageError("--x only applies to --count");
    if (a.list_poly && a.forbidden.empty())
        throw UsageError("compute --list-poly needs --forbidden FILE");
    if (! a.list_poly && ! a.forbidden.empty())
        throw UsageError("--forbidden only applies to --list-poly");

    std::string forbidden_json;
    if (a.list_poly) {
        forbidden_json = read_file(a.forbidden);
        try {
            auto parsed = nlohmann::json::parse(forbidden_json);
            (void)parsed;
        }
        catch (const nlohmann::json::exception & e) {
            throw UsageError(a.forbidden + ": " + e.what());
        }
    }

    Input in(a.input);
    Output out(a.out);
    std::string line;
    int number = 0;
    bool failed = false;
    while (std::getline(in.stream(), line)) {
        ++number;
        std::string text = trim(line);
        if (text.empty())
            continue;
        try {
            auto g = parse_graph(text);
            nlohmann::ordered_json record;
            record["graph6"] = text;
            if (a.polynomial) {
                chroma_poly * p = nullptr;
                check(chroma_chromatic_polynomial(g.get(), &p));
                PolyPtr owned(p);
                char * s = nullptr;
                check(chroma_poly_to_json(p, &s));
                record["polynomial"] = nlohmann::ordered_json::parse(take(s));
            }
            else if (a.count) {
                char * s = nullptr;
                check(chroma_count_colourings(g.get(), *a.x, &s));
                record["x"] = *a.x;
                record["count"] = take(s);
            }
            else {
                chroma_poly * p = nullptr;
                check(chroma_list_polynomial(g.get(), forbidden_json.c_str(), &p));
                PolyPtr owned(p);
                char * s = nullptr;
                check(chroma_poly_to_json(p, &s));
                record["list_polynomial"] = nlohmann::ordered_json::parse(take(s));
            }
            out.stream() << record.dump() << '\n';
        }
        catch (const ApiError & e) {
            std::cerr << "line " << number << ": " << e.what() << '\n';
            failed = true;
        }
    }
    return failed ? exit_error : exit_ok;
}

struct VerifyArgs {
    std::string suite;
    std::optional<int> n_max;
    std::string xs = "4..8";
    std::string ys;
    int workers = 0;
    bool allow_long = false;
    bool timing = false;
    bool rational = false;
    std::string out;
};

auto run_verify(const VerifyArgs & a) -> int
{
    chroma_suite suite;
    if (a.suite == "tomescu")
        suite = CHROMA_SUITE_TOMESCU;
    else if (a.suite == "lemmas")
        suite = CHROMA_SUITE_LEMMAS;
    else if (a.suite == "triangle-free")
        suite = CHROMA_SUITE_TRIANGLE_FREE;
    else if (a.suite == "census")
        suite = CHROMA_SUITE_CENSUS;
    else if (a.suite == "two-induced")
        suite = CHROMA_SUITE_TWO_INDUCED;
    else
        throw UsageError("unknown suite \"" + a.suite + "\"");

    chroma_verify_options options;
    chroma_verify_options_init(&options, suite);
    if (a.n_max)
        options.n_max = *a.n_max;
    int cap = suite == CHROMA_SUITE_TOMESCU ? 9
            : suite == CHROMA_SUITE_TRIANGLE_FREE ? (a.allow_long ? 10 : 9)
                                                   : 8;
    if (suite != CHROMA_SUITE_LEMMAS && (options.n_max < 1 || options.n_max > cap))
        throw UsageError("--nmax for " + a.suite + " must lie in [1, " + std::to_string(cap) + "]"
                + (suite == CHROMA_SUITE_TRIANGLE_FREE && ! a.allow_long ? " (10 needs --allow-long)" : ""));

    auto xs = parse_int_set(a.xs, "--x");
    for (int x : xs)
        if (x < 4 || x > 10)
            throw UsageError("--x values must lie in [4, 10]");
    std::string ys_text = ! a.ys.empty() ? a.ys : suite == CHROMA_SUITE_TWO_INDUCED ? "3..5" : "3..6";
    auto ys = parse_int_set(ys_text, "--y");
    for (int y : ys)
        if (y < (suite == CHROMA_SUITE_TWO_INDUCED ? 3 : 1) || y > 30)
            throw UsageError("--y values out of range");
    if (a.workers < 0)
        throw UsageError("--workers must be positive");

    options.xs = xs.data();
    options.xs_len = xs.size();
    options.ys = ys.data();
    options.ys_len = ys.size();
    options.workers = a.workers > 0 ? a.workers : std::max(1u, std::thread::hardware_concurrency());
    options.allow_long = a.allow_long;
    options.sample_rational = a.rational;
    options.record_timing = a.timing;

    Output out(a.out);
    chroma_report * r = nullptr;
    check(chroma_verify(&options, &r));
    ReportPtr report(r);
    char * json = nullptr;
    check(chroma_report_to_json(r, &json));
    out.stream() << take(json) << '\n';
    char * summary = nullptr;
    check(chroma_report_summary(r, &summary));
    std::cerr << take(summary);
    return chroma_report_passed(r) ? exit_ok : exit_violations;
}

struct EnumerateArgs {
    int n = 0;
    int chi = 0;
    bool connected = false;
    bool allow_long = false;
    std::string out;
};

auto run_enumerate(const EnumerateArgs & a) -> int
{
    int cap = a.allow_long ? 10 : 9;
    if (a.n < 1 || a.n > cap)
        throw UsageError("--n must lie in [1, " + std::to_string(cap) + "]" + (a.allow_long ? "" : " (10 needs --allow-long)"));
    if (a.chi < 0)
        throw UsageError("--chi must be positive");
    Output out(a.out);
    char * text = nullptr;
    check(chroma_enumerate(a.n, a.connected, a.chi, a.allow_long, &text));
    out.stream() << take(text);
    return exit_ok;
}

struct BoundArgs {
    int k = 0;
    int n = 0;
    std::string x;
};

auto run_bound(const BoundArgs & a) -> int
{
    char * s = nullptr;
    check(chroma_tomescu_bound(a.k, a.n, a.x.c_str(), &s));
    std::cout << take(s) << '\n';
    return exit_ok;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Exact chromatic and list-chromatic polynomials, and exhaustive bound verification"};
    app.require_subcommand(1);

    ComputeArgs compute;
    auto * c = app.add_subcommand("compute", "Per-graph computations on graph6 lines");
    c->add_flag("--polynomial", compute.polynomial, "Chromatic polynomial in x");
    c->add_flag("--count", compute.count, "Number of proper colourings with --x colours");
    c->add_flag("--list-poly", compute.list_poly, "List chromatic polynomial in y for --forbidden");
    c->add_option("--x", compute.x, "Palette size for --count");
    c->add_option("--forbidden", compute.forbidden, "JSON file with forbidden colours per vertex");
    c->add_option("--input,-i", compute.input, "graph6 input file (default stdin)");
    c->add_option("--out,-o", compute.out, "Output file (default stdout)");

    VerifyArgs verify;
    auto * v = app.add_subcommand("verify", "Run a verification suite");
    v->add_option("suite", verify.suite, "tomescu | lemmas | triangle-free | census | two-induced")->required();
    v->add_option("--nmax", verify.n_max, "Largest order examined");
    v->add_option("--x", verify.xs, "Values of x, e.g. 4..8 or 4,6");
    v->add_option("--y", verify.ys, "Values of y, e.g. 3..6");
    v->add_option("--workers", verify.workers, "Worker threads (default: logical cores)");
    v->add_flag("--allow-long", verify.allow_long, "Permit the multi-hour order-10 runs");
    v->add_flag("--timing", verify.timing, "Record runtime_ms (makes output vary between runs)");
    v->add_flag("--rational", verify.rational, "Also sample rational x (reported, not asserted)");
    v->add_option("--out,-o", verify.out, "Report file (default stdout)");

    EnumerateArgs enumerate;
    auto * e = app.add_subcommand("enumerate", "List graphs up to isomorphism as graph6");
    e->add_option("--n", enumerate.n, "Number of vertices")->required();
    e->add_option("--chi", enumerate.chi, "Keep only this chromatic number");
    e->add_flag("--connected", enumerate.connected, "Connected graphs only");
    e->add_flag("--allow-long", enumerate.allow_long, "Permit n = 10");
    e->add_option("--out,-o", enumerate.out, "Output file (default stdout)");

    BoundArgs bound;
    auto * b = app.add_subcommand("bound", "x(x-1)...(x-k+1) (x-1)^(n-k)");
    b->add_option("--k", bound.k, "Clique size")->required();
    b->add_option("--n", bound.n, "Number of vertices")->required();
    b->add_option("--x", bound.x, "Number of colours")->required();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & err) {
        int code = app.exit(err);
        return code == 0 ? exit_ok : exit_error;
    }

    try {
        if (*c)
            return run_compute(compute);
        if (*v)
            return run_verify(verify);
        if (*e)
            return run_enumerate(enumerate);
        return run_bound(bound);
    }
    catch (const UsageError & err) {
        std::cerr << "error: " << err.what() << '\n';
    }
    catch (const ApiError & err) {
        std::cerr << "error: " << err.what() << '\n';
    }
    catch (const std::exception & err) {
        std::cerr << "error: " << err.what() << '\n';
    }
    return exit_error;
}
