#include <rotrem/cli.hpp>
#include <rotrem/error.hpp>
#include <rotrem/expansion.hpp>
#include <rotrem/josephus.hpp>
#include <rotrem/madic.hpp>
#include <rotrem/tracking.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace rotrem::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Output {
    Json params = Json::object();
    Json result;
    std::optional<std::string> plain;  // overrides the generic plain rendering
    int exit_code = kExitOk;
};

Json big(const BigInt &v) { return to_string(v); }

template <class T> Json array_of(const T &values) {
    Json out = Json::array();
    for (const auto &v : values) {
        out.push_back(v);
    }
    return out;
}

Json big_array(const std::vector<BigInt> &values) {
    Json out = Json::array();
    for (const BigInt &v : values) {
        out.push_back(big(v));
    }
    return out;
}

std::string scalar_text(const Json &v) {
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_null()) {
        return "-";
    }
    return v.dump();
}

bool all_scalars(const Json &v) {
    for (const auto &e : v) {
        if (e.is_structured()) {
            return false;
        }
    }
    return true;
}

// Space-separated rendering of a value on one line.
std::string inline_text(const Json &v) {
    if (!v.is_structured()) {
        return scalar_text(v);
    }
    std::string out;
    bool first = true;
    for (const auto &e : v) {
        out += (first ? "" : " ") + inline_text(e);
        first = false;
    }
    return out;
}

void render_plain(const Json &v, std::ostream &out) {
    if (!v.is_structured() || (v.is_array() && all_scalars(v))) {
        out << inline_text(v) << "\n";
    } else if (v.is_array()) {
        for (const auto &e : v) {
            out << inline_text(e) << "\n";
        }
    } else {
        for (const auto &[key, value] : v.items()) {
            if (value.is_array() && !all_scalars(value)) {
                out << key << ":\n";
                for (const auto &e : value) {
                    out << "  " << inline_text(e) << "\n";
                }
            } else {
                out << key << ": " << inline_text(value) << "\n";
            }
        }
    }
}

std::string csv_cell(const Json &v) {
    std::string text = v.is_structured() && !all_scalars(v) ? v.dump() : inline_text(v);
    if (text.find_first_of(",\"\n") != std::string::npos) {
        std::string quoted = "\"";
        for (char c : text) {
            quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
        }
        return quoted + "\"";
    }
    return text;
}

void render_csv(const Json &v, std::ostream &out) {
    if (!v.is_structured()) {
        out << "value\n" << csv_cell(v) << "\n";
    } else if (v.is_array() && (v.empty() || all_scalars(v))) {
        out << "index,value\n";
        for (std::size_t i = 0; i < v.size(); ++i) {
            out << i << "," << csv_cell(v[i]) << "\n";
        }
    } else if (v.is_array() && v.front().is_object()) {
        bool first = true;
        for (const auto &[key, value] : v.front().items()) {
            out << (first ? "" : ",") << key;
            first = false;
        }
        out << "\n";
        for (const auto &row : v) {
            first = true;
            for (const auto &[key, value] : row.items()) {
                out << (first ? "" : ",") << csv_cell(value);
                first = false;
            }
            out << "\n";
        }
    } else if (v.is_array()) {
        out << "index,value\n";
        for (std::size_t i = 0; i < v.size(); ++i) {
            out << i << "," << csv_cell(v[i]) << "\n";
        }
    } else {
        out << "key,value\n";
        for (const auto &[key, value] : v.items()) {
            out << key << "," << csv_cell(value) << "\n";
        }
    }
}

std::vector<Digit> stream_digits(const DigitStream &s, std::size_t n) { return s.prefix(n); }

Json carries_json(const CarryTrace &t) { return big_array(t.kappa); }

int exit_code_for(ErrorKind kind) {
    return kind == ErrorKind::internal_invariant ? kExitVerification : kExitUsage;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    RunConfig config;
    std::string format = "plain";
    std::optional<std::uint64_t> row_cap_flag;

    CLI::App app{"Rotating-queue triangles, rotation remainder expansions and related checks", "rotrem"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "plain"}))
        ->capture_default_str();
    app.add_option("--row-cap", row_cap_flag, "Row cap for sweeps (default 1000000, or ROTOR_ROW_CAP)")
        ->check(CLI::PositiveNumber);
    app.add_option("--precision", config.digit_precision, "Default digit count")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--seed", config.seed, "Seed for randomized suites")->capture_default_str();

    std::string op;
    std::map<std::string, std::function<Output()>> handlers;

    auto command = [&](const std::string &name, const std::string &help) {
        CLI::App *sub = app.add_subcommand(name, help);
        sub->callback([&op, name] { op = name; });
        return sub;
    };
    auto add_m = [&](CLI::App *sub, std::uint32_t minimum) {
        sub->add_option("-m", config.m, "Rotation number / base")
            ->required()
            ->check(CLI::Range(minimum, std::numeric_limits<std::uint32_t>::max()));
    };
    // digit count: explicit -n, else --precision
    auto digit_count = [&](const std::optional<std::uint64_t> &n) {
        return static_cast<std::size_t>(n.value_or(config.digit_precision));
    };

    // ---- triangle ----------------------------------------------------------
    std::uint64_t x = 1;
    std::uint64_t r_col = 0;
    std::uint64_t count = 10;
    {
        auto *sub = command("row", "Print row x of T_m");
        add_m(sub, 1);
        sub->add_option("-x", x, "Row index")->required()->check(CLI::PositiveNumber);
    }
    handlers["row"] = [&] {
        Output o;
        o.params = {{"x", x}};
        o.result = array_of(row(config.m, x).cells);
        return o;
    };

    {
        auto *sub = command("entry", "T_m(x, r) with r reduced mod x");
        add_m(sub, 1);
        sub->add_option("-x", x, "Row index")->required()->check(CLI::PositiveNumber);
        sub->add_option("-r", r_col, "Column index")->required();
    }
    handlers["entry"] = [&] {
        Output o;
        o.params = {{"x", x}, {"r", r_col}};
        o.result = entry(config.m, x, r_col);
        return o;
    };

    {
        auto *sub = command("heads", "h_m(1..n)");
        add_m(sub, 1);
        sub->add_option("-n", count, "Number of rows")->required()->check(CLI::PositiveNumber);
    }
    handlers["heads"] = [&] {
        Output o;
        o.params = {{"n", count}};
        o.result = array_of(heads(config.m, count));
        return o;
    };

    auto capped = [&](const CappedSequence &s) {
        Json j;
        j["values"] = array_of(s.values);
        j["cap_reached"] = s.cap_reached;
        j["rows_scanned"] = s.rows_scanned;
        return j;
    };
    for (const char *name : {"leads", "appears"}) {
        auto *sub = command(name, std::string(name) == "leads" ? "l_m(1..n): rows led by the original 1"
                                                              : "a_m(1..n): first row containing each value");
        add_m(sub, 1);
        sub->add_option("-n", count, "Number of terms")->required()->check(CLI::PositiveNumber);
    }
    handlers["leads"] = [&] {
        Output o;
        o.params = {{"n", count}, {"row_cap", config.row_cap}};
        o.result = capped(leads(config.m, count, config.row_cap));
        return o;
    };
    handlers["appears"] = [&] {
        Output o;
        o.params = {{"n", count}, {"row_cap", config.row_cap}};
        o.result = capped(appearances(config.m, count, config.row_cap));
        return o;
    };

    {
        auto *sub = command("onepos", "j_m(x): column of the 1 in row x");
        add_m(sub, 1);
        sub->add_option("-x", x, "Row index")->required()->check(CLI::PositiveNumber);
    }
    handlers["onepos"] = [&] {
        Output o;
        o.params = {{"x", x}};
        o.result = one_position(config.m, x);
        return o;
    };

    std::optional<std::uint64_t> reduced;
    {
        auto *sub = command("freq", "Frequency row F_m(x, .) or reduced row f_m(n, .)");
        add_m(sub, 1);
        auto *xo = sub->add_option("-x", x, "Row index")->check(CLI::PositiveNumber);
        auto *ro = sub->add_option("--reduced", reduced, "n for f_m(n, .)")->check(CLI::PositiveNumber);
        xo->excludes(ro);
    }
    handlers["freq"] = [&] {
        Output o;
        const FrequencyRow f = reduced ? reduced_frequency_row(config.m, *reduced, config.row_cap)
                                       : frequency_row(config.m, x);
        o.params = reduced ? Json{{"reduced", *reduced}} : Json{{"x", x}};
        Json counts = Json::array();
        for (const auto &[value, c] : f.counts) {
            counts.push_back({{"value", value}, {"count", c}});
        }
        o.result = {{"x", f.x}, {"counts", counts}};
        return o;
    };

    // ---- tracking ----------------------------------------------------------
    std::string x_big = "1";
    std::uint32_t r_start = 0;
    std::optional<std::uint64_t> n_opt;
    auto add_start = [&](CLI::App *sub) {
        add_m(sub, 1);
        sub->add_option("-x", x_big, "Start row")->required();
        sub->add_option("-r", r_start, "Start column in [0, m-1]");
    };
    {
        auto *sub = command("track", "Tracking states (x_n, r_n, y_n)");
        add_start(sub);
        sub->add_option("-n", n_opt, "Number of states")->check(CLI::PositiveNumber);
    }
    handlers["track"] = [&] {
        Output o;
        const std::size_t n = n_opt.value_or(10);
        o.params = {{"x", x_big}, {"r", r_start}, {"n", n}};
        o.result = Json::array();
        for (const TrackState &s : track(config.m, parse_integer(x_big), r_start, n)) {
            o.result.push_back({{"n", s.n}, {"x", big(s.x)}, {"r", s.r}, {"y", big(s.y)}});
        }
        return o;
    };

    {
        auto *sub = command("yseq", "y_n from the floor recurrence");
        add_start(sub);
        sub->add_option("-n", n_opt, "Number of terms")->check(CLI::PositiveNumber);
    }
    handlers["yseq"] = [&] {
        Output o;
        const std::size_t n = n_opt.value_or(10);
        o.params = {{"x", x_big}, {"r", r_start}, {"n", n}};
        o.result = big_array(y_sequence(config.m, parse_integer(x_big), r_start, n));
        return o;
    };

    {
        auto *sub = command("congruence", "Check the mod m^n congruence for a start");
        add_start(sub);
        sub->add_option("-n", n_opt, "Exponent n")->required()->check(CLI::PositiveNumber);
    }
    handlers["congruence"] = [&] {
        Output o;
        o.params = {{"x", x_big}, {"r", r_start}, {"n", *n_opt}};
        const auto w = verify_congruence(config.m, parse_integer(x_big), r_start, *n_opt);
        o.result = {{"holds", w.holds}, {"modulus", big(w.modulus)}, {"lhs", big(w.lhs)}, {"rhs", big(w.rhs)}};
        o.exit_code = w.holds ? kExitOk : kExitVerification;
        return o;
    };

    std::vector<std::uint32_t> tail;
    std::uint64_t x_max = kDefaultSearchBound;
    {
        auto *sub = command("tail", "Find the start whose r_1, r_2, ... begin with the given digits");
        add_m(sub, 1);
        sub->add_option("--digits", tail, "Digits, comma or space separated")->delimiter(',');
        sub->add_option("--x-max", x_max, "Search bound on x")->capture_default_str();
    }
    handlers["tail"] = [&] {
        Output o;
        o.params = {{"digits", array_of(tail)}, {"x_max", x_max}};
        const TailMatch t = reconstruct_from_tail(config.m, tail, x_max);
        static const char *names[] = {"unique", "not-found", "ambiguous"};
        Json matches = Json::array();
        for (const StartPosition &p : t.matches) {
            matches.push_back({{"x", p.x}, {"r", p.r}});
        }
        o.result = {{"status", names[static_cast<int>(t.status)]}, {"matches", matches}};
        o.exit_code = t.status == TailMatchStatus::unique ? kExitOk : kExitVerification;
        return o;
    };

    std::uint64_t window = 200;
    std::uint64_t max_period = 20;
    bool with_table = false;
    {
        auto *sub = command("aperiodic", "Scan a tracking column sequence for periodic tails");
        add_start(sub);
        sub->add_option("--window", window, "Window length N")->capture_default_str();
        sub->add_option("--max-period", max_period, "Largest period P")->capture_default_str();
        sub->add_flag("--table", with_table, "Include the full witness table");
    }
    handlers["aperiodic"] = [&] {
        Output o;
        o.params = {{"x", x_big}, {"r", r_start}, {"window", window}, {"max_period", max_period}};
        const auto rep = aperiodicity_check(config.m, parse_integer(x_big), r_start, window, max_period);
        o.result = {{"passed", rep.passed()}, {"periodic_tail_found", rep.periodic_tail_found}};
        if (rep.periodic_tail_found) {
            o.result["periodic_period"] = rep.periodic_period;
            o.result["periodic_start"] = rep.periodic_start;
        }
        if (with_table) {
            Json table = Json::array();
            for (const PeriodWitnesses &p : rep.periods) {
                Json w = Json::array();
                for (const auto &n : p.witness) {
                    w.push_back(n ? Json(*n) : Json(nullptr));
                }
                table.push_back({{"period", p.period}, {"witness", w}});
            }
            o.result["witnesses"] = table;
        }
        o.exit_code = rep.passed() ? kExitOk : kExitVerification;
        return o;
    };

    // ---- madic -------------------------------------------------------------
    std::string q_text = "0";
    std::string p_text = "0";
    {
        auto *sub = command("valuation", "m-adic valuation and norm of a rational");
        add_m(sub, 2);
        sub->add_option("-q", q_text, "Rational a/b")->required();
    }
    handlers["valuation"] = [&] {
        Output o;
        const MadicRational q = parse_rational(config.m, q_text);
        o.params = {{"q", to_string(q)}};
        const Valuation v = valuation(q);
        o.result = {{"k", v.k ? Json(*v.k) : Json("inf")}, {"norm", to_string(norm(q))}};
        return o;
    };

    {
        auto *sub = command("distance", "m-adic distance |p - q|_m");
        add_m(sub, 2);
        sub->add_option("-p", p_text, "Rational a/b")->required();
        sub->add_option("-q", q_text, "Rational a/b")->required();
    }
    handlers["distance"] = [&] {
        Output o;
        const MadicRational p = parse_rational(config.m, p_text);
        const MadicRational q = parse_rational(config.m, q_text);
        o.params = {{"p", to_string(p)}, {"q", to_string(q)}};
        o.result = to_string(distance(p, q));
        return o;
    };

    std::string c_text = "0";
    std::string sigma_text = "0";
    {
        auto *sub = command("sqrtseq", "Square-root sequence sigma_1..sigma_n");
        add_m(sub, 2);
        sub->add_option("-c", c_text, "Radicand")->required();
        sub->add_option("--sigma1", sigma_text, "Seed with sigma1^2 = c mod m")->required();
        sub->add_option("-n", n_opt, "Number of terms (default 7)")->check(CLI::PositiveNumber);
    }
    handlers["sqrtseq"] = [&] {
        Output o;
        const std::size_t n = n_opt.value_or(7);
        o.params = {{"c", c_text}, {"sigma1", sigma_text}, {"n", n}};
        const BigInt c = parse_integer(c_text);
        const BigInt s1 = parse_integer(sigma_text);
        const SqrtSequence s = n <= kMaxExactSqrtTerms ? sqrt_sequence(config.m, c, s1, n)
                                                       : sqrt_sequence_mod(config.m, c, s1, n, n + 1);
        o.result = {{"inv", s.inv}, {"terms", big_array(s.terms)}};
        if (s.modulus) {
            o.result["modulus"] = big(*s.modulus);
        }
        return o;
    };

    // ---- expansion ---------------------------------------------------------
    std::string a_text = "0";
    std::string b_text = "0";
    auto add_n = [&](CLI::App *sub) {
        sub->add_option("-n", n_opt, "Digit count (default --precision)")->check(CLI::PositiveNumber);
    };
    {
        auto *sub = command("expand", "Rotation remainder digits of a rational");
        add_m(sub, 2);
        sub->add_option("-q", q_text, "Rational a/b")->required();
        add_n(sub);
    }
    handlers["expand"] = [&] {
        Output o;
        const MadicRational q = parse_rational(config.m, q_text);
        const std::size_t n = digit_count(n_opt);
        o.params = {{"q", to_string(q)}, {"n", n}};
        o.result = array_of(stream_digits(digitize(q, n), n));
        return o;
    };

    {
        auto *sub = command("madic", "Ordinary base-m digits of a rational");
        add_m(sub, 2);
        sub->add_option("-q", q_text, "Rational a/b")->required();
        add_n(sub);
    }
    handlers["madic"] = [&] {
        Output o;
        const MadicRational q = parse_rational(config.m, q_text);
        const std::size_t n = digit_count(n_opt);
        o.params = {{"q", to_string(q)}, {"n", n}};
        o.result = array_of(madic_digitize(q, n));
        return o;
    };

    for (const char *name : {"add", "mul"}) {
        auto *sub = command(name, std::string(name) == "add" ? "Add two expansions with the cumulative carry"
                                                             : "Multiply two expansions by shift-and-add");
        add_m(sub, 2);
        sub->add_option("-a", a_text, "Rational a/b")->required();
        sub->add_option("-b", b_text, "Rational a/b")->required();
        add_n(sub);
    }
    handlers["add"] = [&] {
        Output o;
        const MadicRational a = parse_rational(config.m, a_text);
        const MadicRational b = parse_rational(config.m, b_text);
        const std::size_t n = digit_count(n_opt);
        o.params = {{"a", to_string(a)}, {"b", to_string(b)}, {"n", n}};
        const SumResult s = add(digitize(a, n), digitize(b, n), n);
        o.result = {{"digits", array_of(stream_digits(s.sum, n))}, {"carries", carries_json(s.carries)}};
        return o;
    };
    handlers["mul"] = [&] {
        Output o;
        const MadicRational a = parse_rational(config.m, a_text);
        const MadicRational b = parse_rational(config.m, b_text);
        const std::size_t n = digit_count(n_opt);
        o.params = {{"a", to_string(a)}, {"b", to_string(b)}, {"n", n}};
        const ProductResult p = multiply_traced(digitize(a, n), digitize(b, n), n);
        Json partials = Json::array();
        for (const DigitStream &s : p.partial_products) {
            partials.push_back(array_of(s.digits()));
        }
        o.result = {{"digits", array_of(stream_digits(p.product, n))},
                    {"carries", carries_json(p.carries)},
                    {"partial_products", partials}};
        return o;
    };

    bool inverse = false;
    {
        auto *sub = command("shift", "Digits of q times m/(m+1) (or divided, with --unshift)");
        add_m(sub, 2);
        sub->add_option("-q", q_text, "Rational a/b")->required();
        sub->add_flag("--unshift", inverse, "Divide by m/(m+1) instead");
        add_n(sub);
    }
    handlers["shift"] = [&] {
        Output o;
        const MadicRational q = parse_rational(config.m, q_text);
        const std::size_t n = digit_count(n_opt);
        o.params = {{"q", to_string(q)}, {"n", n}, {"unshift", inverse}};
        const DigitStream s = inverse ? unshift(digitize(q, n + 1)) : shift(digitize(q, n));
        o.result = array_of(stream_digits(s, n));
        return o;
    };

    std::vector<Digit> preperiod;
    std::vector<Digit> period;
    {
        auto *sub = command("periodic", "Exact value of preperiod, period, period, ...");
        add_m(sub, 2);
        sub->add_option("--pre", preperiod, "Preperiod digits")->delimiter(',');
        sub->add_option("--period", period, "Period digits")->required()->delimiter(',');
    }
    handlers["periodic"] = [&] {
        Output o;
        o.params = {{"pre", array_of(preperiod)}, {"period", array_of(period)}};
        o.result = to_string(periodic_to_rational(config.m, preperiod, period));
        return o;
    };

    {
        auto *sub = command("etrack", "Compare R((m+1) y_0) with r_1, r_2, ... of a track");
        add_start(sub);
        add_n(sub);
    }
    handlers["etrack"] = [&] {
        Output o;
        const std::size_t n = digit_count(n_opt);
        o.params = {{"x", x_big}, {"r", r_start}, {"n", n}};
        const auto w = expansion_equals_tracking(config.m, parse_integer(x_big), r_start, n);
        o.result = {{"holds", w.holds}, {"expansion", array_of(w.expansion)}, {"columns", array_of(w.columns)}};
        o.exit_code = w.holds ? kExitOk : kExitVerification;
        return o;
    };

    // ---- josephus / negabinary --------------------------------------------
    std::string nb_input;
    bool decode = false;
    {
        auto *sub = command("negabin", "Negabinary digits of an integer (or its value, with --decode)");
        sub->add_option("value", nb_input, "Integer, or 0/1 digits with --decode")->required();
        sub->add_flag("--decode", decode, "Read the argument as negabinary digits");
    }
    handlers["negabin"] = [&] {
        Output o;
        config.m = 2;
        o.params = {{"value", nb_input}, {"decode", decode}};
        const BigInt value = decode ? from_negabinary(parse_negabinary(nb_input)) : parse_integer(nb_input);
        const NegaBinary bits = to_negabinary(value);
        o.result = {{"value", big(value)}, {"bits", bits.to_string()}};
        if (value >= 1) {
            const SKDecomposition d = decompose_sk(value);
            o.result["s"] = big(d.s);
            o.result["k"] = d.k;
        }
        o.plain = decode ? to_string(value) : bits.to_string();
        return o;
    };

    {
        auto *sub = command("l2seq", "l_2(1..n) from the negabinary recurrence, with bound verdicts");
        sub->add_option("-n", count, "Number of terms")->required()->check(CLI::PositiveNumber);
    }
    handlers["l2seq"] = [&] {
        Output o;
        config.m = 2;
        o.params = {{"n", count}};
        o.result = Json::array();
        for (const L2Step &s : l2_sequence(count)) {
            o.result.push_back({{"n", s.n},
                                {"value", big(s.value)},
                                {"s", big(s.s)},
                                {"k", s.k},
                                {"k_bound", to_string(s.k_bound)},
                                {"super_exponential", to_string(s.super_exponential)},
                                {"upper_27_8", to_string(s.upper_27_8)},
                                {"lower_9_4", to_string(s.lower_9_4)}});
            const bool bound_ok = s.n == 1 ? s.super_exponential == Verdict::equality
                                           : s.super_exponential == Verdict::holds;
            if (!bound_ok || s.k_bound != Verdict::holds) {
                o.exit_code = kExitVerification;
            }
        }
        return o;
    };

    {
        auto *sub = command("josephus", "Josephus game on row x of T_m, with J_{m+1}(x)");
        add_m(sub, 1);
        sub->add_option("-x", x, "Row index")->required()->check(CLI::PositiveNumber);
    }
    handlers["josephus"] = [&] {
        Output o;
        o.params = {{"x", x}};
        const TriangleRow r = row(config.m, x);
        const JosephusTrace g = josephus_game(r);
        o.result = {{"eliminated", array_of(g.eliminated)},
                    {"winner_column", g.winner_column},
                    {"winner_value", g.winner_value},
                    {"one_position", one_position(r)},
                    {"survivor", josephus_survivor(config.m + 1, x)}};
        return o;
    };

    std::uint64_t step = 2;
    bool order = false;
    {
        auto *sub = command("survivor", "Classical survivor J_n(x) of the circle 1..x");
        sub->add_option("-n", step, "Count step")->required()->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 62));
        sub->add_option("-x", x, "Circle size")->required()->check(CLI::PositiveNumber);
        sub->add_flag("--order", order, "Print the whole elimination order");
    }
    handlers["survivor"] = [&] {
        Output o;
        o.params = {{"n", step}, {"x", x}};
        if (order) {
            o.result = array_of(josephus_order(step, x));
        } else {
            o.result = josephus_survivor(step, x);
        }
        return o;
    };

    // ---- verify ------------------------------------------------------------
    std::string suite;
    {
        auto *sub = command("verify", "Run a cross-check suite, or all of them");
        std::vector<std::string> choices = checks::suite_names();
        choices.emplace_back("all");
        sub->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(choices));
    }
    handlers["verify"] = [&] {
        Output o;
        o.params = {{"suite", suite}, {"seed", config.seed}, {"row_cap", config.row_cap}};
        o.result = Json::array();
        std::ostringstream plain;
        std::uint64_t failed = 0;
        for (const checks::CheckResult &r : checks::run_suite(suite, {config.seed, config.row_cap})) {
            o.result.push_back({{"id", r.id},
                                {"name", r.name},
                                {"passed", r.passed},
                                {"cases", r.cases},
                                {"failures", r.failures},
                                {"detail", r.detail}});
            plain << (r.passed ? "PASS" : "FAIL") << " " << r.name << " " << r.cases - r.failures << "/"
                  << r.cases << " " << r.detail << "\n";
            failed += !r.passed;
        }
        plain << (o.result.size() - failed) << " passed, " << failed << " failed";
        o.plain = plain.str();
        o.exit_code = failed == 0 ? kExitOk : kExitVerification;
        return o;
    };

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kExitOk;
        }
        err << "rotrem: " << e.what() << "\n";
        return kExitUsage;
    }

    if (row_cap_flag) {
        config.row_cap = *row_cap_flag;
    } else if (const char *env = std::getenv("ROTOR_ROW_CAP")) {
        try {
            const BigInt cap = parse_integer(env);
            if (cap < 1 || !fits_u64(cap)) {
                throw Error(ErrorKind::invalid_argument, "");
            }
            config.row_cap = to_u64(cap);
        } catch (const Error &) {
            err << "rotrem: ROTOR_ROW_CAP must be a positive integer, got '" << env << "'\n";
            return kExitUsage;
        }
    }
    config.output_format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::plain;

    Output result;
    try {
        result = handlers.at(op)();
    } catch (const Error &e) {
        err << "rotrem " << op << ": " << to_string(e.kind()) << ": " << e.what() << "\n";
        return exit_code_for(e.kind());
    }

    switch (config.output_format) {
    case Format::json: {
        Json doc;
        doc["m"] = config.m;
        doc["op"] = op;
        doc["params"] = result.params;
        doc["result"] = result.result;
        out << doc.dump() << "\n";
        break;
    }
    case Format::csv:
        render_csv(result.result, out);
        break;
    case Format::plain:
        if (result.plain) {
            out << *result.plain << "\n";
        } else {
            render_plain(result.result, out);
        }
        break;
    }
    return result.exit_code;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    std::vector<const char *> argv{"rotrem"};
    for (const std::string &a : args) {
        argv.push_back(a.c_str());
    }
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace rotrem::cli
