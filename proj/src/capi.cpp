#include <chroma/chroma.h>

#include <chroma/canonical.hpp>
#include <chroma/chromatic.hpp>
#include <chroma/enumerate.hpp>
#include <chroma/serialize.hpp>
#include <chroma/verify.hpp>

#include <chrono>
#include <cstdlib>
#include <cstring>

using namespace chroma;

struct chroma_graph {
    Graph g;
};

struct chroma_poly {
    IntPolynomial p;
    char var;
};

struct chroma_report {
    VerificationReport r;
};

namespace {
    thread_local std::string last_error;

    auto fail(chroma_status s, const std::string & message) -> chroma_status
    {
        last_error = message;
        return s;
    }

    auto status_of(Errc e) -> chroma_status
    {
        switch (e) {
        case Errc::invalid_argument: return CHROMA_ERR_INVALID_ARGUMENT;
        case Errc::parse_error: return CHROMA_ERR_PARSE;
        case Errc::out_of_range: return CHROMA_ERR_OUT_OF_RANGE;
        case Errc::internal: return CHROMA_ERR_INTERNAL;
        }
        return CHROMA_ERR_INTERNAL;
    }

    template <typename F>
    auto guard(F f) -> chroma_status
    {
        try {
            f();
            last_error.clear();
            return CHROMA_OK;
        }
        catch (const Error & e) {
            return fail(status_of(e.code()), e.what());
        }
        catch (const nlohmann::json::exception & e) {
            return fail(CHROMA_ERR_PARSE, e.what());
        }
        catch (const std::bad_alloc &) {
            return fail(CHROMA_ERR_INTERNAL, "out of memory");
        }
        catch (const std::exception & e) {
            return fail(CHROMA_ERR_INTERNAL, e.what());
        }
    }

    auto copy(const std::string & s) -> char *
    {
        char * out = static_cast<char *>(std::malloc(s.size() + 1));
        if (! out)
            throw std::bad_alloc();
        std::memcpy(out, s.c_str(), s.size() + 1);
        return out;
    }

    void need(const void * p, const char * what)
    {
        if (! p)
            throw Error(Errc::invalid_argument, std::string(what) + " must not be null");
    }

    auto parse_rational(const std::string & text) -> BigRational
    {
        auto slash = text.find('/');
        if (slash == std::string::npos)
            return BigRational(parse_bigint(text));
        BigInt den = parse_bigint(text.substr(slash + 1));
        if (den == 0)
            throw Error(Errc::invalid_argument, "zero denominator");
        return BigRational(parse_bigint(text.substr(0, slash)), den);
    }

    auto rational_string(const BigRational & q) -> std::string
    {
        using boost::multiprecision::denominator;
        using boost::multiprecision::numerator;
        if (denominator(q) == 1)
            return to_string(numerator(q));
        return to_string(numerator(q)) + "/" + to_string(denominator(q));
    }
}

extern "C" {

const char * chroma_version(void)
{
    return "1.0.0";
}

const char * chroma_last_error(void)
{
    return last_error.c_str();
}

void chroma_string_free(char * s)
{
    std::free(s);
}

chroma_status chroma_graph_from_graph6(const char * text, chroma_graph ** out)
{
    return guard([&] {
        need(text, "text");
        need(out, "out");
        *out = new chroma_graph{parse_graph6(text)};
    });
}

void chroma_graph_free(chroma_graph * g)
{
    delete g;
}

chroma_status chroma_graph_to_graph6(const chroma_graph * g, char ** out)
{
    return guard([&] {
        need(g, "graph");
        need(out, "out");
        *out = copy(emit_graph6(g->g));
    });
}

chroma_status chroma_graph_canonical(const chroma_graph * g, char ** out)
{
    return guard([&] {
        need(g, "graph");
        need(out, "out");
        *out = copy(canonical_form(g->g).key);
    });
}

int chroma_graph_order(const chroma_graph * g)
{
    return g ? g->g.order() : -1;
}

int chroma_graph_size(const chroma_graph * g)
{
    return g ? g->g.size() : -1;
}

chroma_status chroma_graph_chromatic_number(const chroma_graph * g, int * out)
{
    return guard([&] {
        need(g, "graph");
        need(out, "out");
        *out = chromatic_number(g->g);
    });
}

chroma_status chroma_count_colourings(const chroma_graph * g, uint64_t x, char ** out)
{
    return guard([&] {
        need(g, "graph");
        need(out, "out");
        *out = copy(to_string(count_colourings(g->g, x)));
    });
}

chroma_status chroma_tomescu_bound(int k, int n, const char * x, char ** out)
{
    return guard([&] {
        need(x, "x");
        need(out, "out");
        *out = copy(to_string(tomescu_bound(k, n, parse_bigint(x))));
    });
}

chroma_status chroma_chromatic_polynomial(const chroma_graph * g, chroma_poly ** out)
{
    return guard([&] {
        need(g, "graph");
        need(out, "out");
        *out = new chroma_poly{chromatic_polynomial(g->g), 'x'};
    });
}

chroma_status chroma_list_polynomial(const chroma_graph * g, const char * forbidden_json, chroma_poly ** out)
{
    return guard([&] {
        need(g, "graph");
        need(forbidden_json, "forbidden_json");
        need(out, "out");
        auto f = forbidden_from_json(nlohmann::json::parse(forbidden_json));
        *out = new chroma_poly{list_chromatic_polynomial(g->g, f), 'y'};
    });
}

void chroma_poly_free(chroma_poly * p)
{
    delete p;
}

int chroma_poly_degree(const chroma_poly * p)
{
    return p ? p->p.degree() : -2;
}

chroma_status chroma_poly_to_json(const chroma_poly * p, char ** out)
{
    return guard([&] {
        need(p, "polynomial");
        need(out, "out");
        *out = copy(polynomial_to_json(p->p, p->var).dump());
    });
}

chroma_status chroma_poly_to_string(const chroma_poly * p, char ** out)
{
    return guard([&] {
        need(p, "polynomial");
        need(out, "out");
        *out = copy(p->p.to_string(p->var));
    });
}

chroma_status chroma_poly_eval(const chroma_poly * p, const char * at, char ** out)
{
    return guard([&] {
        need(p, "polynomial");
        need(at, "at");
        need(out, "out");
        *out = copy(rational_string(p->p.evaluate(parse_rational(at))));
    });
}

chroma_status chroma_enumerate(int n, int connected, int chi, int allow_long, char ** out)
{
    return guard([&] {
        need(out, "out");
        if (chi < 0)
            throw Error(Errc::invalid_argument, "chi must be nonnegative");
        EnumerationOptions options;
        options.connected = connected != 0;
        options.allow_long = allow_long != 0;
        std::string text;
        for (const auto & key : enumerate_keys(n, options)) {
            if (chi > 0 && chromatic_number(parse_graph6(key)) != chi)
                continue;
            text += key;
            text += '\n';
        }
        *out = copy(text);
    });
}

void chroma_verify_options_init(chroma_verify_options * options, chroma_suite suite)
{
    if (! options)
        return;
    static const int default_xs[] = {4, 5, 6, 7, 8};
    static const int default_ys[] = {3, 4, 5, 6};
    *options = chroma_verify_options{};
    options->suite = suite;
    options->xs = default_xs;
    options->xs_len = 5;
    options->ys = default_ys;
    options->ys_len = 4;
    options->workers = 1;
    switch (suite) {
    case CHROMA_SUITE_TOMESCU: options->n_max = 8; break;
    case CHROMA_SUITE_TRIANGLE_FREE: options->n_max = 9; break;
    case CHROMA_SUITE_CENSUS: options->n_max = 7; break;
    case CHROMA_SUITE_TWO_INDUCED: options->n_max = 8; break;
    case CHROMA_SUITE_LEMMAS: options->n_max = 0; break;
    }
}

chroma_status chroma_verify(const chroma_verify_options * options, chroma_report ** out)
{
    return guard([&] {
        need(options, "options");
        need(out, "out");
        std::vector<int> xs, ys;
        if (options->xs_len)
            need(options->xs, "xs");
        if (options->ys_len)
            need(options->ys, "ys");
        xs.assign(options->xs, options->xs + options->xs_len);
        ys.assign(options->ys, options->ys + options->ys_len);
        int workers = options->workers > 0 ? options->workers : 1;

        auto start = std::chrono::steady_clock::now();
        VerificationReport r;
        switch (options->suite) {
        case CHROMA_SUITE_TOMESCU: {
            TheoremOptions t;
            t.n_max = options->n_max;
            t.xs = xs;
            t.workers = workers;
            t.sample_rational = options->sample_rational != 0;
            r = verify_theorem_main(t);
            break;
        }
        case CHROMA_SUITE_LEMMAS:
            r = verify_small_lemmas(ys);
            break;
        case CHROMA_SUITE_TRIANGLE_FREE:
            r = smallest_triangle_free_4chromatic(options->n_max, options->allow_long != 0);
            break;
        case CHROMA_SUITE_CENSUS:
            r = census_report(options->n_max);
            break;
        case CHROMA_SUITE_TWO_INDUCED:
            r = verify_claim_2induced(options->n_max, ys, workers);
            break;
        default:
            throw Error(Errc::invalid_argument, "unknown suite");
        }
        if (options->record_timing)
            r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start).count();
        *out = new chroma_report{std::move(r)};
    });
}

void chroma_report_free(chroma_report * r)
{
    delete r;
}

int chroma_report_passed(const chroma_report * r)
{
    return r && r->r.passed() ? 1 : 0;
}

chroma_status chroma_report_to_json(const chroma_report * r, char ** out)
{
    return guard([&] {
        need(r, "report");
        need(out, "out");
        *out = copy(r->r.to_json().dump(2));
    });
}

chroma_status chroma_report_summary(const chroma_report * r, char ** out)
{
    return guard([&] {
        need(r, "report");
        need(out, "out");
        *out = copy(r->r.summary());
    });
}

} // extern "C"
