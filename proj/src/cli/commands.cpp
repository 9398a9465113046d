#include "orbit_duality/cli.hpp"

#include <algorithm>
#include <charconv>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbit_duality/errors.hpp"
#include "orbit_duality/verify.hpp"

namespace orbit_duality::cli {

using nlohmann::ordered_json;

ClassicalContext GroupSpec::context() const {
    if (!classical()) throw DomainError(to_string(*this) + " is not a classical group");
    return {std::get<TypeLetter>(family), n};
}

int GroupSpec::input_size() const {
    const auto ctx = context();
    switch (ctx.type) {
        case TypeLetter::A: return rank + 1;
        case TypeLetter::B:
        case TypeLetter::C: return ctx.input_type() == TypeLetter::B ? 2 * rank + 1 : 2 * rank;
        case TypeLetter::D: return 2 * rank;
    }
    return 0;
}

GroupSpec parse_group_spec(std::string_view text) {
    static const std::regex classical_re(R"(([ABCD])([0-9]+)@n=([0-9]+))");
    static const std::regex exceptional_re(R"((G2|F4|E6|E7|E8)@n=([0-9]+))");
    const std::string s(text);
    std::smatch m;
    auto number = [&](const std::string& digits) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
        if (ec != std::errc() || v < 1) throw DomainError("group '" + s + "': rank and n must be positive integers");
        return v;
    };
    GroupSpec g;
    if (std::regex_match(s, m, classical_re)) {
        g.family = *type_letter_from_char(m[1].str()[0]);
        g.rank = number(m[2]);
        g.n = number(m[3]);
        return g;
    }
    if (std::regex_match(s, m, exceptional_re)) {
        g.family = *exceptional_group_from_string(m[1].str());
        g.n = number(m[2]);
        return g;
    }
    throw DomainError("group '" + s + "' is not of the form X<rank>@n=<n> (X in A,B,C,D) or G2/F4/E6/E7/E8@n=<n>");
}

std::string to_string(const GroupSpec& g) {
    if (g.classical())
        return std::string(1, to_char(std::get<TypeLetter>(g.family))) + std::to_string(g.rank) + "@n=" +
               std::to_string(g.n);
    return orbit_duality::to_string(std::get<ExceptionalGroup>(g.family)) + "@n=" + std::to_string(g.n);
}

namespace {

struct Options {
    bool json = false;
    std::string group;
    std::string orbit;
    std::string suite;
    std::optional<int> max_size, n_max, samples;
    std::uint64_t seed = verify::SweepConfig{}.seed;
    int r0 = 0, m = 0, k = 0, n = 0;
    std::string table_group, table_orbit;
    int table_n = 0;
};

// Property failures, as opposed to bad input.
struct CheckFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

LabeledOrbit classical_input(const GroupSpec& g, const std::string& text) {
    auto orbit = parse_labeled_orbit(text);
    const auto ctx = g.context();
    if (orbit.label() && ctx.type != TypeLetter::D)
        throw DomainError("I/II labels only apply to type D inputs");
    if (orbit.partition().size() != g.input_size())
        throw DomainError(to_string(g) + " takes partitions of " + std::to_string(g.input_size()) + " (type " +
                          to_char(ctx.input_type()) + "), got " + to_string(orbit.partition()));
    ctx.require_input(orbit.partition());
    return orbit;
}

std::string render_computation(const ordered_json& j, bool json, const std::vector<std::string>& extra = {}) {
    if (json) return j.dump(2) + "\n";
    std::string out;
    for (const char* key : {"group", "input", "path"}) out += std::string(key) + ": " + j[key].get<std::string>() + "\n";
    for (const auto& line : extra) out += line + "\n";
    out += "output: " + j["output"].get<std::string>() + "\n";
    return out;
}

std::string cmd_dual(const Options& o) {
    const auto g = parse_group_spec(o.group);
    ordered_json j{{"group", to_string(g)}, {"n", g.n}};
    if (!g.classical()) {
        const auto group = std::get<ExceptionalGroup>(g.family);
        const auto& tables = ExceptionalTables::load_default();
        const auto& row = tables.row(group, o.orbit);
        j["input"] = row.orbit;
        j["output"] = tables.lookup(group, row.orbit, g.n);
        j["path"] = "exceptional-table";
        return render_computation(j, o.json);
    }
    const auto input = classical_input(g, o.orbit);
    const auto ctx = g.context();
    j["input"] = to_string(input);
    j["output"] = ctx.type == TypeLetter::D ? to_string(d_com_D(input, g.n)) : to_string(d_com(input.partition(), ctx));
    j["path"] = "closed-formula";
    return render_computation(j, o.json);
}

std::string cmd_ap(const Options& o) {
    const auto g = parse_group_spec(o.group);
    if (!g.classical()) throw DomainError("AP path unavailable for exceptional group " + to_string(g));
    const auto input = classical_input(g, o.orbit);
    if (input.label()) throw DomainError("AP path takes unlabelled partitions");
    const auto ctx = g.context();
    const auto trace = ap_trace(dual_weight(input.partition(), ctx), ctx.type, ctx.input_type());

    ordered_json classes = ordered_json::array();
    std::vector<std::string> lines{"lambda: " + to_string(trace.lambda), "unfolded: " + to_string(trace.unfolded)};
    auto add_class = [&](const std::string& kind, const WeightMultiset& cls, const Partition& part) {
        classes.push_back({{"kind", kind}, {"weights", to_string(cls)}, {"partition", to_string(part)}});
        lines.push_back(kind + " class " + to_string(cls) + " -> " + to_string(part));
    };
    const auto& dec = trace.classes;
    if (ctx.type == TypeLetter::A) {
        std::vector<const WeightMultiset*> nonempty;
        for (const auto* cls : {&dec.zero_class, &dec.half_class})
            if (!cls->empty()) nonempty.push_back(cls);
        for (const auto& cls : dec.paired_classes) nonempty.push_back(&cls);
        for (std::size_t i = 0; i < nonempty.size(); ++i) add_class("integral", *nonempty[i], trace.class_parts[i]);
    } else {
        add_class("zero", dec.zero_class, trace.zero_part);
        add_class("half", dec.half_class, trace.half_part);
        for (std::size_t i = 0; i < dec.paired_classes.size(); ++i)
            add_class("paired", dec.paired_classes[i], trace.class_parts[i]);
    }
    std::string summands;
    ordered_json summand_json = ordered_json::array();
    for (const auto& s : trace.summands) {
        summands += (summands.empty() ? "" : " + ") + to_string(s);
        summand_json.push_back(to_string(s));
    }
    lines.push_back("summands: " + summands);

    ordered_json j{{"group", to_string(g)},         {"n", g.n},
                   {"input", to_string(input)},     {"output", to_string(trace.result)},
                   {"path", "annihilator-partition"}};
    j["trace"] = {{"lambda", to_string(trace.lambda)},
                  {"unfolded", to_string(trace.unfolded)},
                  {"classes", classes},
                  {"summands", summand_json}};
    return render_computation(j, o.json, lines);
}

std::string cmd_speh(const Options& o) {
    if (o.r0 < 1 || o.m < 1 || o.k < 1 || o.n < 1) throw DomainError("speh arguments must be positive");
    if (o.n % o.m != 0) throw DomainError("m=" + std::to_string(o.m) + " does not divide n=" + std::to_string(o.n));
    const auto result = speh_wavefront({o.r0, o.m, o.k, o.n});
    const Partition input(std::vector<int>(static_cast<std::size_t>(o.r0), o.m * o.k));
    const auto cross = d_com_A(input, o.n);
    const bool agrees = cross == result;
    ordered_json j{{"group", "A" + std::to_string(input.size() - 1) + "@n=" + std::to_string(o.n)},
                   {"n", o.n},
                   {"input", to_string(input)},
                   {"output", to_string(result)},
                   {"path", "speh-formula"},
                   {"cross_check", agrees}};
    auto out = render_computation(
        j, o.json, {"cross-check: d_com_A = " + to_string(cross) + (agrees ? " (agrees)" : " (DISAGREES)")});
    if (!agrees) throw CheckFailed(out);
    return out;
}

std::string cmd_verify(const Options& o) {
    if (o.suite != "all" && !verify::is_suite(o.suite))
        throw DomainError("unknown suite '" + o.suite + "'");
    for (auto bound : {o.max_size, o.n_max, o.samples})
        if (bound && *bound < 1) throw DomainError("sweep bounds must be positive");
    const verify::SweepConfig cfg{o.max_size, o.n_max, o.samples, o.seed};
    std::vector<verify::SuiteReport> reports;
    if (o.suite == "all")
        for (const auto& name : verify::suite_names()) reports.push_back(verify::run_suite(name, cfg));
    else
        reports.push_back(verify::run_suite(o.suite, cfg));

    const bool passed = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
    std::string out;
    if (o.json) {
        ordered_json suites = ordered_json::array();
        for (const auto& r : reports)
            suites.push_back({{"name", r.name},
                              {"parameters", r.parameters},
                              {"checks", r.checks},
                              {"passed", r.passed()},
                              {"counterexamples", r.failures}});
        out = ordered_json{{"seed", cfg.seed}, {"passed", passed}, {"suites", suites}}.dump(2) + "\n";
    } else {
        out = verify::render(reports, cfg);
    }
    if (!passed) throw CheckFailed(out);
    return out;
}

std::string cmd_table_dump(const Options& o) {
    const auto tables = ExceptionalTables::load_default();
    if (!o.json) return tables.serialize();
    ordered_json rows = ordered_json::array();
    std::istringstream in(tables.serialize());
    for (std::string line; std::getline(in, line);) rows.push_back(line);
    return ordered_json{{"rows", rows}}.dump(2) + "\n";
}

std::string cmd_table_query(const Options& o) {
    const auto group = exceptional_group_from_string(o.table_group);
    if (!group) throw DomainError("unknown exceptional group '" + o.table_group + "'");
    if (o.table_n < 1) throw DomainError("cover degree n must be positive");
    const auto tables = ExceptionalTables::load_default();
    const auto& row = tables.row(*group, o.table_orbit);
    ordered_json j{{"group", o.table_group + "@n=" + std::to_string(o.table_n)},
                   {"n", o.table_n},
                   {"input", row.orbit},
                   {"output", tables.lookup(*group, row.orbit, o.table_n)},
                   {"path", "exceptional-table"},
                   {"stabilizes_from", tables.stabilization_threshold(*group, row.orbit)}};
    return render_computation(
        j, o.json, {"stabilizes from n=" + std::to_string(j["stabilizes_from"].get<int>())});
}

}  // namespace

Outcome run(const std::vector<std::string>& args) {
    Options o;
    CLI::App app{"Covering Barbasch-Vogan duality on nilpotent orbits", "orbit_duality"};
    app.require_subcommand(1);
    app.add_flag("--json", o.json, "Emit JSON");

    auto* dual = app.add_subcommand("dual", "Dual orbit by closed formula or exceptional table");
    auto* ap_cmd = app.add_subcommand("ap", "Annihilator-partition route with full trace");
    for (auto* sub : {dual, ap_cmd}) {
        sub->add_option("group", o.group, "e.g. C2@n=3 or G2@n=3")->required();
        sub->add_option("orbit", o.orbit, "partition such as [3,1] (optional ^I/^II), or a label")->required();
    }
    auto* ver = app.add_subcommand("verify", "Run property suites");
    ver->add_option("suite", o.suite, "comparison, achar, order, induction, collapse-oracle, rs, specialize, tables, speh, all")
        ->required();
    ver->add_option("--seed", o.seed, "Seed for randomized suites");
    ver->add_option("--max-size", o.max_size, "Largest partition size");
    ver->add_option("--n-max", o.n_max, "Largest cover degree");
    ver->add_option("--samples", o.samples, "Sample count for randomized suites");
    auto* speh = app.add_subcommand("speh", "Wavefront partition of a Speh representation");
    speh->add_option("r0", o.r0)->required();
    speh->add_option("m", o.m)->required();
    speh->add_option("k", o.k)->required();
    speh->add_option("n", o.n)->required();
    auto* table = app.add_subcommand("table", "Exceptional table data");
    table->require_subcommand(1);
    auto* dump = table->add_subcommand("dump", "Print every row");
    auto* query = table->add_subcommand("query", "Look up one orbit");
    query->add_option("group", o.table_group)->required();
    query->add_option("orbit", o.table_orbit)->required();
    query->add_option("n", o.table_n)->required();
    for (auto* sub : {dual, ap_cmd, ver, speh, dump, query}) sub->add_flag("--json", o.json, "Emit JSON");

    Outcome result;
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        result.out = app.help();
        return result;
    } catch (const CLI::ParseError& e) {
        result.exit_code = 2;
        result.err = std::string("error: ") + e.what() + "\n";
        return result;
    }

    try {
        if (dual->parsed()) result.out = cmd_dual(o);
        else if (ap_cmd->parsed()) result.out = cmd_ap(o);
        else if (ver->parsed()) result.out = cmd_verify(o);
        else if (speh->parsed()) result.out = cmd_speh(o);
        else if (dump->parsed()) result.out = cmd_table_dump(o);
        else if (query->parsed()) result.out = cmd_table_query(o);
    } catch (const CheckFailed& e) {
        result.exit_code = 1;
        result.out = e.what();
    } catch (const InvariantError& e) {
        result.exit_code = 2;
        result.err = std::string("error: ") + e.what() + "\n";
    } catch (const std::invalid_argument& e) {
        result.exit_code = 2;
        result.err = std::string("error: ") + e.what() + "\n";
    }
    return result;
}

}  // namespace orbit_duality::cli
