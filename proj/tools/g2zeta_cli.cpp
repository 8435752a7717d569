// g2zeta: command-line front end.  JSON on stdout, diagnostics on stderr.
// Exit codes: 0 ok, 2 usage or domain error, 3 consistency failure,
// 4 refusal at a singular argument.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <g2zeta/g2zeta.hpp>

using json = nlohmann::ordered_json;
using namespace g2zeta;

namespace
{

enum ExitCode { kOk = 0, kUsage = 2, kConsistency = 3, kSingular = 4 };

std::vector<std::string> split_commas(const std::string &text)
{
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        out.push_back(item);
    }
    if (!text.empty() && text.back() == ',') {
        out.push_back("");
    }
    return out;
}

IndexTuple parse_index_tuple(const std::string &text)
{
    const auto parts = split_commas(text);
    if (parts.size() != 6) {
        throw DomainError("expected six comma-separated integers, got '" + text + "'");
    }
    IndexTuple k{};
    for (int j = 0; j < 6; ++j) {
        const Rational q = parse_rational(parts[j]);
        if (!is_integer(q) || q < 0 || q > 200) {
            throw DomainError("entry '" + parts[j] + "' is not an integer in [0, 200]");
        }
        k[j] = static_cast<int>(q.get_num().get_si());
    }
    return k;
}

std::array<double, 6> parse_real_tuple(const std::string &text)
{
    const auto parts = split_commas(text);
    if (parts.size() != 6) {
        throw DomainError("expected six comma-separated reals, got '" + text + "'");
    }
    std::array<double, 6> s{};
    for (int j = 0; j < 6; ++j) {
        char *end = nullptr;
        s[j] = std::strtod(parts[j].c_str(), &end);
        if (parts[j].empty() || *end != '\0') {
            throw DomainError("entry '" + parts[j] + "' is not a real number");
        }
    }
    return s;
}

std::array<Rational, 6> parse_rational_tuple(const std::string &text)
{
    const auto parts = split_commas(text);
    if (parts.size() != 6) {
        throw DomainError("expected six comma-separated rationals, got '" + text + "'");
    }
    std::array<Rational, 6> s{};
    for (int j = 0; j < 6; ++j) {
        s[j] = parse_rational(parts[j]);
    }
    return s;
}

RationalPair parse_y(const std::string &text)
{
    const auto parts = split_commas(text);
    if (parts.size() != 2) {
        throw DomainError("expected y as 'y1,y2', got '" + text + "'");
    }
    return {parse_rational(parts[0]), parse_rational(parts[1])};
}

Algorithm parse_algorithm(const std::string &a)
{
    if (a == "A") {
        return Algorithm::ordered_laurent;
    }
    if (a == "B") {
        return Algorithm::common_denominator;
    }
    throw DomainError("algorithm must be A or B");
}

json tuple_json(const IndexTuple &k)
{
    return json(std::vector<int>(k.begin(), k.end()));
}

json exact_json(const PiValue &v)
{
    json j;
    j["coefficient"] = to_string(v.coeff.re);
    if (!v.coeff.is_real()) {
        j["coefficient_imag"] = to_string(v.coeff.im);
    }
    j["pi_power"] = v.pi_power;
    j["decimal"] = to_decimal_string(v, 30);
    j["pi_digits_used"] = kPiDigitsUsed;
    return j;
}

struct Globals {
    long limit = 4000;
    int precision = 25;
    std::string output = "json";

    SummationConfig config() const
    {
        SummationConfig cfg;
        cfg.limit = limit;
        cfg.working_precision = precision;
        return cfg;
    }
};

std::string wide(Wide x, int digits)
{
    return to_string(x, digits);
}

// Abort with a consistency failure while keeping what was computed.
struct ConsistencyFailure {
    json partial;
};

json cmd_value(const IndexTuple &k, Algorithm alg)
{
    json j;
    j["command"] = "value";
    j["k"] = tuple_json(k);
    const PiValue v = zeta2_exact(k, alg);
    const json e = exact_json(v);
    for (auto it = e.begin(); it != e.end(); ++it) {
        j[it.key()] = it.value();
    }
    j["method"] = to_string(alg);
    return j;
}

json cmd_value_table(int bound, Algorithm alg)
{
    if (bound < 1 || bound > 4) {
        throw DomainError("--table bound must be between 1 and 4");
    }
    json j;
    j["command"] = "value";
    j["table_bound"] = bound;
    j["method"] = to_string(alg);
    json rows = json::array();
    for (int p = 1; p <= bound; ++p) {
        for (int q = 1; q <= bound; ++q) {
            const IndexTuple k{2 * p, 2 * q, 2 * q, 2 * q, 2 * p, 2 * p};
            json row;
            row["k"] = tuple_json(k);
            const json e = exact_json(zeta2_exact(k, alg));
            for (auto it = e.begin(); it != e.end(); ++it) {
                row[it.key()] = it.value();
            }
            rows.push_back(row);
        }
    }
    j["rows"] = rows;
    return j;
}

json cmd_bernoulli(const IndexTuple &k, const RationalPair &y, Algorithm alg)
{
    json j;
    j["command"] = "bernoulli";
    j["k"] = tuple_json(k);
    j["y"] = {to_string(y[0]), to_string(y[1])};
    const Rational P = expand_F_coefficients(y, k, alg);
    j["P"] = to_string(P);
    j["algorithm"] = to_string(alg);
    const int degree = std::accumulate(k.begin(), k.end(), 0);
    if (degree <= 10) {
        const Algorithm other = alg == Algorithm::ordered_laurent ? Algorithm::common_denominator : Algorithm::ordered_laurent;
        const Rational Q = expand_F_coefficients(y, k, other);
        j["cross_check"] = to_string(other);
        if (P != Q) {
            j["cross_check_value"] = to_string(Q);
            throw ConsistencyFailure{j};
        }
    } else {
        j["cross_check"] = "none";
    }
    return j;
}

json cmd_weyl_sum(const IndexTuple &k, const RationalPair &y, bool exact, const Globals &g)
{
    json j;
    j["command"] = "weyl-sum";
    j["k"] = tuple_json(k);
    j["y"] = {to_string(y[0]), to_string(y[1])};
    j["limit"] = g.limit;
    j["precision"] = g.precision;
    const NumericValue v = S_numeric(k, y, g.config());
    j["value"] = wide(v.value, g.precision);
    j["imag"] = wide(v.imag, g.precision);
    j["error_bound"] = wide(v.error_bound, 6);
    if (exact) {
        j["exact"] = exact_json(S_exact(k, y));
    }
    return j;
}

json cmd_sum(const std::array<double, 6> &s, const std::optional<RationalPair> &y, const Globals &g)
{
    json j;
    j["command"] = "sum";
    j["s"] = s;
    j["limit"] = g.limit;
    j["precision"] = g.precision;
    NumericValue v;
    if (y) {
        j["y"] = {to_string((*y)[0]), to_string((*y)[1])};
        v = zeta2_numeric_twisted(s, *y, g.config());
        j["value"] = wide(v.value, g.precision);
        j["imag"] = wide(v.imag, g.precision);
    } else {
        v = zeta2_numeric(s, g.config());
        j["value"] = wide(v.value, g.precision);
    }
    j["error_bound"] = wide(v.error_bound, 6);
    return j;
}

json cmd_witten(double s, const Globals &g)
{
    json j;
    j["command"] = "witten";
    j["s"] = s;
    j["limit"] = g.limit;
    j["precision"] = g.precision;
    const NumericValue v = witten_numeric(s, g.config());
    j["value"] = wide(v.value, g.precision);
    j["error_bound"] = wide(v.error_bound, 6);
    if (s == std::floor(s) && s >= 2 && s <= 8 && static_cast<int>(s) % 2 == 0) {
        j["exact"] = exact_json(witten_volume_constant(static_cast<int>(s) / 2));
    }
    return j;
}

json cmd_relation(const RelationParams &params, double s, bool verbatim, const Globals &g)
{
    const RelationVariant variant = verbatim ? RelationVariant{} : pinned_relation_variant();
    const RelationReport r = check_relation(params, s, g.config(), variant);
    json j;
    j["command"] = "relation";
    j["params"] = {{"p", params.p}, {"q", params.q}, {"r", params.r}, {"u", params.u}, {"v", params.v}};
    j["s"] = s;
    j["variant"] = verbatim ? "verbatim" : "pinned";
    j["limit"] = g.limit;
    j["precision"] = g.precision;
    json tuples = json::array();
    for (const auto &t : r.tuple_values) {
        tuples.push_back({{"tuple", t.label}, {"value", wide(t.value, g.precision)}, {"error_bound", wide(t.error_bound, 6)}});
    }
    j["six_tuples"] = tuples;
    json iv = json::array();
    for (const Wide x : r.i_values) {
        iv.push_back(wide(x, g.precision));
    }
    j["i_values"] = iv;
    j["residual"] = wide(r.residual, 6);
    j["tolerance"] = wide(r.tolerance, 6);
    j["largest_term"] = wide(r.largest_term, 6);
    j["relative_residual"] = wide(r.relative_residual, 6);
    j["pass"] = r.pass;
    if (!r.pass) {
        throw ConsistencyFailure{j};
    }
    return j;
}

json cmd_singularities(const std::array<Rational, 6> &s)
{
    json j;
    j["command"] = "singularities";
    json st = json::array();
    for (const auto &x : s) {
        st.push_back(to_string(x));
    }
    j["s"] = st;
    json hits = json::array();
    json families = json::array();
    for (const auto &h : singular_locus_check(s)) {
        json hit{{"family", h.family}};
        if (h.l) {
            hit["l"] = h.l->get_str();
        }
        hits.push_back(hit);
        families.push_back(h.family);
    }
    j["families"] = families;
    j["hits"] = hits;
    return j;
}

json cmd_self_check()
{
    std::vector<std::pair<std::string, bool>> checks;
    auto run = [&](const std::string &name, auto &&fn) {
        bool ok = false;
        try {
            ok = fn();
        } catch (const std::exception &e) {
            std::cerr << "self-check " << name << ": " << e.what() << "\n";
        }
        checks.emplace_back(name, ok);
    };
    run("weight_12_exact", [] {
        return zeta2_exact({2, 2, 2, 2, 2, 2}) == PiValue(parse_rational("23/297904566960"), 12);
    });
    run("weight_18_exact", [] {
        return zeta2_exact({2, 4, 4, 4, 2, 2}) == PiValue(parse_rational("467/213955059990672000"), 18);
    });
    run("algorithms_agree_degree_6", [] {
        const RationalPair y{0, 0};
        return bernoulli_layer(y, 6, Algorithm::ordered_laurent) == bernoulli_layer(y, 6, Algorithm::common_denominator);
    });
    run("symmetric_relation_coefficients", [] {
        const auto c = collapsed_lhs_coefficients(build_I_tables(RelationParams{}));
        const auto &c10 = c.by_shift.at(10);
        const auto &c8 = c.by_shift.at(8);
        return c10.two_power == PiPolynomial(PiValue(make_rational(-5, 1458), 0))
               && c10.constant == PiPolynomial(PiValue(make_rational(-5, 1458) * make_rational(5519, 4), 0))
               && c8.two_power == PiPolynomial(PiValue(make_rational(-1, 162) * make_rational(1, 6), 2))
               && c8.constant == PiPolynomial(PiValue(make_rational(466, 162) * make_rational(1, 6), 2));
    });
    run("even_reduction", [] {
        return reduce_even(RelationParams{}, 1).value == Rational(6) * zeta2_exact({2, 2, 2, 2, 2, 2});
    });
    run("numeric_matches_closed_form", [] {
        SummationConfig cfg;
        cfg.limit = 2000;
        cfg.working_precision = 18;
        const NumericValue v = zeta2_numeric({2, 1, 1, 1, 1, 1}, cfg);
        const ZhaoValue z = zhao_value();
        return fabsq(v.value - z.decimal) <= v.error_bound + z.error_bound;
    });
    run("singular_locus", [] {
        const auto families = [](std::array<Rational, 6> s) {
            std::vector<int> out;
            for (const auto &h : singular_locus_check(s)) {
                out.push_back(h.family);
            }
            return out;
        };
        // (1,1,0,0,0,0) has total 2 and also meets the first two families at l = 0.
        return families({0, 0, 0, 0, 0, 1}) == std::vector<int>{1, 2} && families({2, 2, 2, 2, 2, 2}).empty()
               && families({1, 1, 0, 0, 0, 0}) == std::vector<int>{1, 2, 3};
    });
    run("convolution_identities", [] {
        const FiniteSequence f{{0, 1}, {1, make_rational(2, 3)}, {3, -5}};
        return check_phi_convolution_identities(5, f, f).both()
               && check_even_zeta_transform_identities(4, {{0, 1}, {1, make_rational(-3, 7)}, {2, 2}}).both();
    });
    json j;
    j["command"] = "self-check";
    json list = json::array();
    bool all = true;
    for (const auto &[name, ok] : checks) {
        list.push_back({{"name", name}, {"pass", ok}});
        all = all && ok;
    }
    j["checks"] = list;
    j["pass"] = all;
    if (!all) {
        throw ConsistencyFailure{j};
    }
    return j;
}

void print_text(const json &j, const std::string &indent = "")
{
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it->is_object()) {
            std::cout << indent << it.key() << ":\n";
            print_text(*it, indent + "  ");
        } else if (it->is_string()) {
            std::cout << indent << it.key() << ": " << it->get<std::string>() << "\n";
        } else {
            std::cout << indent << it.key() << ": " << it->dump() << "\n";
        }
    }
}

void emit(const json &j, const Globals &g)
{
    if (g.output == "text") {
        print_text(j);
    } else {
        std::cout << j.dump(2) << "\n";
    }
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact and numeric values of the G2 root-system zeta function"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--limit", g.limit, "summation cutoff N")->envname("G2ZETA_LIMIT")->capture_default_str();
    app.add_option("--precision", g.precision, "working precision in significant digits (15..33)")
        ->envname("G2ZETA_PRECISION")
        ->capture_default_str();
    app.add_option("--output", g.output, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

    std::string k_text, y_text = "0,0", s_text, algorithm = "A";
    int table_bound = 0;
    bool exact = false, verbatim = false;
    double s_real = 0;
    RelationParams params;

    auto *value = app.add_subcommand("value", "exact zeta_2(k) for k = (2p,2q,2q,2q,2p,2p)");
    value->add_option("--k", k_text, "six comma-separated integers");
    value->add_option("--table", table_bound, "emit the family for p, q <= bound");
    value->add_option("--algorithm", algorithm, "A or B")->capture_default_str();

    auto *bern = app.add_subcommand("bernoulli", "Taylor coefficient P(k, y)");
    bern->add_option("--k", k_text, "six comma-separated nonnegative integers")->required();
    bern->add_option("--y", y_text, "rational pair y1,y2")->capture_default_str();
    bern->add_option("--algorithm", algorithm, "A or B")->capture_default_str();

    auto *weyl = app.add_subcommand("weyl-sum", "numeric Weyl-signed sum S(k, y)");
    weyl->add_option("--k", k_text, "six comma-separated positive integers")->required();
    weyl->add_option("--y", y_text, "rational pair y1,y2")->capture_default_str();
    weyl->add_flag("--exact", exact, "also compute the exact value");

    auto *sum = app.add_subcommand("sum", "numeric double series with optional twist");
    sum->add_option("--s", s_text, "six comma-separated reals")->required();
    std::string twist_text;
    sum->add_option("--y", twist_text, "rational pair y1,y2 for the twisted series");

    auto *witten = app.add_subcommand("witten", "K^s zeta_2(s, ..., s)");
    witten->add_option("--s", s_real, "real s")->required();

    auto *relation = app.add_subcommand("relation", "numeric check of the functional relation");
    relation->add_option("--p", params.p)->required();
    relation->add_option("--q", params.q)->required();
    relation->add_option("--r", params.r)->required();
    relation->add_option("--u", params.u)->required();
    relation->add_option("--v", params.v)->required();
    relation->add_option("--s", s_real, "real s")->required();
    relation->add_flag("--verbatim", verbatim, "use the coefficient displays exactly as printed");

    auto *sing = app.add_subcommand("singularities", "membership in the singular hyperplane families");
    sing->add_option("--s", s_text, "six comma-separated rationals")->required();

    auto *self = app.add_subcommand("self-check", "fast golden checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kUsage;
    }

    try {
        validate(g.config());
        json out;
        if (value->parsed()) {
            const Algorithm alg = parse_algorithm(algorithm);
            if (table_bound > 0) {
                out = cmd_value_table(table_bound, alg);
            } else if (k_text.empty()) {
                throw DomainError("value needs --k or --table");
            } else {
                out = cmd_value(parse_index_tuple(k_text), alg);
            }
        } else if (bern->parsed()) {
            out = cmd_bernoulli(parse_index_tuple(k_text), parse_y(y_text), parse_algorithm(algorithm));
        } else if (weyl->parsed()) {
            const IndexTuple k = parse_index_tuple(k_text);
            out = cmd_weyl_sum(k, parse_y(y_text), exact, g);
        } else if (sum->parsed()) {
            std::optional<RationalPair> y;
            if (!twist_text.empty()) {
                y = parse_y(twist_text);
            }
            out = cmd_sum(parse_real_tuple(s_text), y, g);
        } else if (witten->parsed()) {
            out = cmd_witten(s_real, g);
        } else if (relation->parsed()) {
            out = cmd_relation(params, s_real, verbatim, g);
        } else if (sing->parsed()) {
            out = cmd_singularities(parse_rational_tuple(s_text));
        } else if (self->parsed()) {
            out = cmd_self_check();
        }
        emit(out, g);
        return kOk;
    } catch (const ConsistencyFailure &f) {
        emit(f.partial, g);
        std::cerr << "error: consistency check failed\n";
        return kConsistency;
    } catch (const SingularArgumentError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kSingular;
    } catch (const ConsistencyError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConsistency;
    } catch (const std::domain_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
