// egal-match: solvers and verification harness for egalitarian repeated
// matching instances.
//
// Exit codes: 0 ok, 1 input error, 2 infeasible or limit exceeded,
// 3 verification failure.

#include "CLI11.hpp"
#include "json.hpp"

#include "egal/approx.hpp"
#include "egal/birkhoff.hpp"
#include "egal/circulation.hpp"
#include "egal/core.hpp"
#include "egal/corpus.hpp"
#include "egal/fpt.hpp"
#include "egal/lp.hpp"
#include "egal/oracle.hpp"
#include "egal/special.hpp"
#include "egal/two_agents.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

using json = nlohmann::ordered_json;
using namespace egal;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitLimit = 2;
constexpr int kExitVerifyFailure = 3;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string instancePath;
    std::string algorithm;
    int round = 0;  // 0 = full horizon
    bool withOracle = false;
    int fptLimit = kDefaultFptLimit;
    std::int64_t budget = 0;  // 0 = default / env
    std::uint64_t seed = 42;
    int count = 100;
    std::string outPath;
    std::string format = "json";
    std::string goldenDir = "golden";
    bool dumpNetwork = false;
};

OracleBudget oracle_budget(const Options& opt) {
    OracleBudget budget;
    if (opt.budget > 0) {
        budget.maxStates = opt.budget;
    } else if (const char* env = std::getenv("EGAL_MATCH_BUDGET")) {
        char* end = nullptr;
        long long parsed = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && parsed > 0) budget.maxStates = parsed;
    }
    return budget;
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open instance file: " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
    for (const char* key : {"agents", "goods", "rounds", "valuations"})
        if (!doc.contains(key)) throw InputError(std::string("instance is missing \"") + key + "\"");
    if (!doc["agents"].is_number_integer() || !doc["goods"].is_number_integer() ||
        !doc["rounds"].is_number_integer())
        throw InputError("agents, goods and rounds must be integers");
    int n = doc["agents"].get<int>();
    int m = doc["goods"].get<int>();
    int T = doc["rounds"].get<int>();
    if (n <= 0 || m <= 0 || T <= 0) throw InputError("agents, goods and rounds must be positive");
    const auto& rows = doc["valuations"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw InputError("valuations must be an array of one row per agent");
    std::vector<std::vector<Rational>> u(n, std::vector<Rational>(m));
    for (int i = 0; i < n; ++i) {
        if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != m)
            throw InputError("valuation row " + std::to_string(i + 1) + " must have one entry per good");
        for (int j = 0; j < m; ++j) {
            const auto& cell = rows[i][j];
            Rational value;
            if (cell.is_number_integer()) {
                value = Rational(cell.get<std::int64_t>());
            } else if (cell.is_string()) {
                auto parsed = parse_rational(cell.get<std::string>());
                if (!parsed)
                    throw InputError("cannot parse valuation \"" + cell.get<std::string>() + "\"");
                value = *parsed;
            } else if (cell.is_number_float()) {
                throw InputError("floating-point valuations are inexact; write them as strings "
                                 "like \"0.5\" or \"1/2\"");
            } else {
                throw InputError("valuations must be integers or rational strings");
            }
            if (value < 0) throw InputError("valuations must be non-negative");
            u[i][j] = value;
        }
    }
    return Instance(n, m, T, std::move(u));
}

struct SolveOutcome {
    MatchingSequence sequence;
    std::string guaranteeType;
    Rational additiveSlack;
};

const std::set<std::string>& algorithm_names() {
    static const std::set<std::string> names{"approx",           "anytime-approx",
                                             "fpt",              "binary",
                                             "two-goods",        "identical-exact",
                                             "identical-greedy", "two-agent-anytime",
                                             "oracle"};
    return names;
}

SolveOutcome run_algorithm(const std::string& name, const Instance& inst, const Options& opt) {
    const Rational maxValue = inst.max_value();
    if (name == "approx")
        return {approx_optimal(inst), "optimal-additive", Rational(pad_goods(inst).m) * maxValue};
    if (name == "anytime-approx")
        return {approx_anytime(inst), "anytime-additive",
                Rational(5 * pad_goods(inst).m) * maxValue};
    if (name == "fpt") return {fpt_optimal(inst, opt.fptLimit), "exact", Rational(0)};
    if (name == "binary") return {binary_optimal(inst), "exact", Rational(0)};
    if (name == "two-goods") {
        auto part = detect_two_good_types(pad_goods(inst));
        if (!part)
            throw InputError("two-goods requires goods to form two identically-valued groups");
        return {two_goods_optimal(pad_goods(inst), *part), "exact", Rational(0)};
    }
    if (name == "identical-exact") return {identical_exact(inst), "exact", Rational(0)};
    if (name == "identical-greedy")
        return {identical_greedy(inst), "anytime-additive", identical_gap(inst).delta};
    if (name == "two-agent-anytime") return {anytime_two_agents(inst), "anytime-exact", Rational(0)};
    if (name == "oracle")
        return {brute_optimal_sequence(inst, inst.rounds, oracle_budget(opt)), "exact", Rational(0)};
    throw InputError("unknown algorithm: " + name);
}

json result_document(const std::string& algorithm, const Instance& padded,
                     const MatchingSequence& seq, const std::string& guaranteeType,
                     const Rational& slack) {
    ValueTrajectory traj = evaluate(padded, seq);  // re-validates the sequence
    json doc;
    doc["algorithm"] = algorithm;
    doc["sequence"] = json::array();
    for (const auto& round : seq.rounds) {
        json assignments = json::array();
        for (int good : round.assign) assignments.push_back(good + 1);  // goods are 1-indexed
        doc["sequence"].push_back(std::move(assignments));
    }
    doc["perRound"] = json::array();
    for (int t = 0; t < traj.length(); ++t) {
        json row;
        row["t"] = t + 1;
        row["values"] = json::array();
        for (const auto& v : traj.perAgentPerRound[t]) row["values"].push_back(to_string(v));
        row["bottleneck"] = to_string(traj.bottleneckPerRound[t]);
        doc["perRound"].push_back(std::move(row));
    }
    doc["guarantee"] = {{"type", guaranteeType}, {"additiveSlack", to_string(slack)}};
    return doc;
}

std::string render_table(const json& doc, const Instance& original) {
    std::ostringstream out;
    out << "algorithm: " << doc["algorithm"].get<std::string>() << "\n";
    out << "guarantee: " << doc["guarantee"]["type"].get<std::string>() << " (additive slack "
        << doc["guarantee"]["additiveSlack"].get<std::string>() << ")\n";
    out << "round";
    for (int i = 1; i <= original.n; ++i) out << "\tv(a" << i << ")";
    out << "\tbottleneck\tmatching\n";
    for (std::size_t t = 0; t < doc["perRound"].size(); ++t) {
        const auto& row = doc["perRound"][t];
        out << row["t"].get<int>();
        for (const auto& v : row["values"]) out << '\t' << v.get<std::string>();
        out << '\t' << row["bottleneck"].get<std::string>() << '\t';
        const auto& matching = doc["sequence"][t];
        out << '(';
        for (std::size_t i = 0; i < matching.size(); ++i) {
            if (i) out << ',';
            int good = matching[i].get<int>();
            if (good > original.realGoods) out << '-';  // padding good, zero value
            else out << 'g' << good;
        }
        out << ")\n";
    }
    return out.str();
}

void emit(const Options& opt, const std::string& text) {
    if (opt.outPath.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.outPath, std::ios::binary);
    if (!out) throw InputError("cannot write output file: " + opt.outPath);
    out << text;
}

void dump_network(const Instance& padded, const std::string& algorithm, const Rational& bottleneck,
                  std::ostream& out) {
    CirculationNetwork net{1};
    if (algorithm == "binary") {
        if (!is_integer(bottleneck)) throw std::logic_error("binary bottleneck must be integral");
        net = binary_feasibility_network(padded, static_cast<std::int64_t>(numerator(bottleneck)))
                  .net;
    } else if (algorithm == "two-goods") {
        auto part = detect_two_good_types(padded);
        if (!part) throw InputError("two-goods requires two good types");
        auto built = two_goods_feasibility_network(padded, *part, bottleneck);
        if (built.rejected) {
            out << "network: rejected before construction (bottleneck unreachable)\n";
            return;
        }
        net = built.net;
    } else {
        out << "network dump is only available for binary and two-goods\n";
        return;
    }
    TransformedNetwork transformed = demand_transform(net);
    out << "circulation vertices: " << net.vertexCount << "\n";
    for (int v = 0; v < net.vertexCount; ++v)
        if (net.demand[v] != 0) out << "  demand(" << v << ") = " << net.demand[v] << "\n";
    out << "max-flow reduction: source=" << transformed.source << " sink=" << transformed.sink
        << "\n";
    for (const auto& edge : transformed.edges)
        out << "  " << edge.from << " -> " << edge.to << " cap " << *edge.capacity << "\n";
}

int cmd_solve(const Options& opt) {
    Instance loaded = load_instance(opt.instancePath);
    if (opt.round < 0 || opt.round > loaded.rounds)
        throw InputError("--round must be between 1 and the instance horizon");
    Instance horizon = loaded;
    if (opt.round > 0) horizon.rounds = opt.round;

    SolveOutcome outcome = run_algorithm(opt.algorithm, horizon, opt);
    Instance padded = pad_goods(horizon);
    json doc = result_document(opt.algorithm, padded, outcome.sequence, outcome.guaranteeType,
                               outcome.additiveSlack);
    if (opt.dumpNetwork) {
        const auto& bottom = doc["perRound"].back()["bottleneck"].get<std::string>();
        dump_network(padded, opt.algorithm, *parse_rational(bottom), std::cerr);
    }
    if (opt.format == "table") emit(opt, render_table(doc, loaded));
    else emit(opt, doc.dump(2) + "\n");
    return kExitOk;
}

struct CompareRow {
    std::string algorithm;
    std::vector<Rational> bottleneck;
    std::string boundType;
    Rational boundSlack;
    bool anytimeBound = false;  // bound applies to every prefix, not just T
};

int cmd_compare(const Options& opt) {
    Instance loaded = load_instance(opt.instancePath);
    if (opt.round < 0 || opt.round > loaded.rounds)
        throw InputError("--round must be between 1 and the instance horizon");
    Instance inst = loaded;
    if (opt.round > 0) inst.rounds = opt.round;
    Instance padded = pad_goods(inst);
    const int T = inst.rounds;

    std::vector<std::string> algorithms{"approx", "anytime-approx"};
    if (inst.n <= opt.fptLimit) algorithms.push_back("fpt");
    if (inst.n == 2) algorithms.push_back("two-agent-anytime");
    if (is_binary(inst)) algorithms.push_back("binary");
    if (detect_two_good_types(padded)) algorithms.push_back("two-goods");
    if (is_identical(inst) && T % padded.n == 0) algorithms.push_back("identical-exact");
    if (is_identical(inst)) algorithms.push_back("identical-greedy");

    std::vector<CompareRow> rows;
    for (const auto& name : algorithms) {
        SolveOutcome outcome = run_algorithm(name, inst, opt);
        ValueTrajectory traj = evaluate(padded, outcome.sequence);
        CompareRow row;
        row.algorithm = name;
        row.bottleneck = traj.bottleneckPerRound;
        row.boundSlack = outcome.additiveSlack;
        row.boundType = outcome.guaranteeType;
        row.anytimeBound = outcome.guaranteeType.rfind("anytime", 0) == 0;
        rows.push_back(std::move(row));
    }

    std::vector<Rational> opts;
    if (opt.withOracle) opts = brute_opt_profile(inst, T, oracle_budget(opt));

    json doc;
    doc["rounds"] = T;
    if (opt.withOracle) {
        doc["opt"] = json::array();
        for (const auto& v : opts) doc["opt"].push_back(to_string(v));
    }
    doc["algorithms"] = json::array();
    for (const auto& row : rows) {
        json entry;
        entry["algorithm"] = row.algorithm;
        entry["bottleneck"] = json::array();
        for (const auto& v : row.bottleneck) entry["bottleneck"].push_back(to_string(v));
        if (opt.withOracle) {
            entry["gap"] = json::array();
            for (int t = 0; t < T; ++t) entry["gap"].push_back(to_string(opts[t] - row.bottleneck[t]));
            bool satisfied = true;
            if (row.anytimeBound) {
                for (int t = 0; t < T; ++t)
                    if (row.bottleneck[t] < opts[t] - row.boundSlack) satisfied = false;
            } else {
                satisfied = row.bottleneck[T - 1] >= opts[T - 1] - row.boundSlack;
            }
            entry["bound"] = {{"type", row.boundType},
                              {"additiveSlack", to_string(row.boundSlack)},
                              {"satisfied", satisfied}};
        } else {
            entry["bound"] = {{"type", row.boundType},
                              {"additiveSlack", to_string(row.boundSlack)}};
        }
        doc["algorithms"].push_back(std::move(entry));
    }

    if (opt.format == "table") {
        std::ostringstream out;
        out << "t";
        if (opt.withOracle) out << "\tOPT";
        for (const auto& row : rows) out << '\t' << row.algorithm;
        out << '\n';
        for (int t = 0; t < T; ++t) {
            out << (t + 1);
            if (opt.withOracle) out << '\t' << to_string(opts[t]);
            for (const auto& row : rows) out << '\t' << to_string(row.bottleneck[t]);
            out << '\n';
        }
        for (const auto& entry : doc["algorithms"]) {
            out << entry["algorithm"].get<std::string>() << ": " << entry["bound"]["type"].get<std::string>()
                << " slack " << entry["bound"]["additiveSlack"].get<std::string>();
            if (entry["bound"].contains("satisfied"))
                out << (entry["bound"]["satisfied"].get<bool>() ? " [holds]" : " [VIOLATED]");
            out << '\n';
        }
        emit(opt, out.str());
    } else {
        emit(opt, doc.dump(2) + "\n");
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify: golden files plus a seeded cross-module invariant corpus
// ---------------------------------------------------------------------------

struct VerifyFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void verify_check(bool ok, const std::string& module, std::uint64_t seed,
                  const std::string& property) {
    if (!ok)
        throw VerifyFailure("module " + module + ", instance seed " + std::to_string(seed) +
                            ": violated: " + property);
}

std::string first_diff(const std::string& a, const std::string& b) {
    std::istringstream sa(a), sb(b);
    std::string la, lb;
    int line = 0;
    while (true) {
        bool ra = static_cast<bool>(std::getline(sa, la));
        bool rb = static_cast<bool>(std::getline(sb, lb));
        ++line;
        if (!ra && !rb) return "contents identical";
        if (la != lb || ra != rb)
            return "line " + std::to_string(line) + ":\n  expected: " + (rb ? lb : "<eof>") +
                   "\n  actual:   " + (ra ? la : "<eof>");
    }
}

int verify_golden(const Options& opt, std::ostream& log) {
    std::string manifestPath = opt.goldenDir + "/manifest.json";
    std::ifstream in(manifestPath);
    if (!in) throw InputError("cannot open golden manifest: " + manifestPath);
    json manifest = json::parse(in);
    for (const auto& entry : manifest) {
        std::string name = entry["name"].get<std::string>();
        Options caseOpt = opt;
        caseOpt.instancePath = opt.goldenDir + "/" + entry["instance"].get<std::string>();
        caseOpt.algorithm = entry["alg"].get<std::string>();
        caseOpt.round = entry.value("round", 0);
        Instance loaded = load_instance(caseOpt.instancePath);
        Instance horizon = loaded;
        if (caseOpt.round > 0) horizon.rounds = caseOpt.round;
        SolveOutcome outcome = run_algorithm(caseOpt.algorithm, horizon, caseOpt);
        json doc = result_document(caseOpt.algorithm, pad_goods(horizon), outcome.sequence,
                                   outcome.guaranteeType, outcome.additiveSlack);
        std::string actual = doc.dump(2) + "\n";

        std::string expectedPath = opt.goldenDir + "/" + entry["expected"].get<std::string>();
        std::ifstream expectedIn(expectedPath, std::ios::binary);
        if (!expectedIn) throw InputError("cannot open golden file: " + expectedPath);
        std::stringstream expected;
        expected << expectedIn.rdbuf();
        if (expected.str() != actual)
            throw VerifyFailure("golden mismatch for " + name + " at " + first_diff(actual, expected.str()));
        log << "ok golden " << name << "\n";
    }
    return static_cast<int>(manifest.size());
}

void verify_corpus(const Options& opt, std::ostream& log) {
    const int count = opt.count;
    OracleBudget budget = oracle_budget(opt);

    // cross-module checks on general instances
    for (int index = 0; index < count; ++index) {
        std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(index);
        DeterministicRng rng(seed);
        int n = static_cast<int>(rng.range(1, 3));
        int m = n + static_cast<int>(rng.range(0, 1));
        int T = static_cast<int>(rng.range(1, 3));
        Instance inst = random_instance(rng, n, m, T, 9);
        Instance padded = pad_goods(inst);
        auto opts = brute_opt_profile(inst, T, budget);

        MatchingSequence viaLp = approx_optimal(inst);
        ValueTrajectory lpTraj = evaluate(padded, viaLp);
        verify_check(lpTraj.final_bottleneck() >= opts[T - 1] - Rational(padded.m) * inst.max_value(),
                     "approx", seed, "b^T >= OPT(T) - m*max");

        ApproxAnytimeTrace anytime = approx_anytime_trace(inst);
        ValueTrajectory anyTraj = evaluate(padded, anytime.sequence);
        verify_check(anytime.lp.nonzeroCount <= 5 * anytime.square.m, "egalitarian_lp", seed,
                     "vertex solution has at most 5m nonzeros");
        for (int t = 0; t < T; ++t)
            verify_check(anyTraj.bottleneckPerRound[t] >=
                             opts[t] - Rational(5 * padded.m) * inst.max_value(),
                         "approx", seed, "b^t >= OPT(t) - 5m*max");

        FptResult fpt = fpt_optimal_result(inst, opt.fptLimit);
        verify_check(fpt.bottleneck == opts[T - 1], "fpt", seed, "ILP optimum equals oracle OPT");

        Allocation alloc = random_feasible_allocation(rng, n, padded.m, T);
        MatchingSequence rebuilt = allocation_to_sequence(alloc, T);
        ValueTrajectory rebuiltTraj = evaluate(padded, rebuilt);
        for (int i = 0; i < n; ++i)
            verify_check(rebuiltTraj.final_value(i) >= allocation_value(padded, alloc, i),
                         "birkhoff", seed, "sequence preserves allocation value");
    }
    log << "ok corpus general (" << count << " instances)\n";

    for (int index = 0; index < count; ++index) {
        std::uint64_t seed = opt.seed + 100000 + static_cast<std::uint64_t>(index);
        DeterministicRng rng(seed);
        Instance inst = random_instance(rng, 3, 3, 1, 5);
        auto profiles = pareto_optimal_profiles(inst, opt.fptLimit);
        std::set<std::vector<Rational>> viaPermutations(profiles.begin(), profiles.end());
        std::set<std::vector<Rational>> viaOracle;
        for (const auto& [matching, profile] : pareto_enumerate(inst, budget))
            viaOracle.insert(profile);
        verify_check(viaPermutations == viaOracle, "fpt", seed,
                     "permutation profiles equal Pareto-optimal profiles");
    }
    log << "ok corpus pareto characterization (" << count << " instances)\n";

    for (int index = 0; index < count; ++index) {
        std::uint64_t seed = opt.seed + 200000 + static_cast<std::uint64_t>(index);
        DeterministicRng rng(seed);
        int n = static_cast<int>(rng.range(1, 3));
        int T = static_cast<int>(rng.range(1, 3));
        Instance binary = random_binary_instance(rng, n, n + 1, T);
        verify_check(evaluate(pad_goods(binary), binary_optimal(binary)).final_bottleneck() ==
                         brute_opt(binary, T, budget),
                     "special", seed, "binary optimum equals oracle");

        Instance twoType = random_two_type_instance(rng, n, n + 1, T, 9);
        auto part = detect_two_good_types(twoType);
        verify_check(part.has_value(), "special", seed, "generated two-type instance detected");
        verify_check(evaluate(pad_goods(twoType), two_goods_optimal(twoType, *part))
                             .final_bottleneck() == brute_opt(twoType, T, budget),
                     "special", seed, "two-goods optimum equals oracle");

        Instance identical = random_identical_instance(rng, n, n + 1, T, 9);
        auto identicalOpts = brute_opt_profile(identical, T, budget);
        ValueTrajectory greedy = evaluate(pad_goods(identical), identical_greedy(identical));
        for (int t = 0; t < T; ++t)
            verify_check(greedy.bottleneckPerRound[t] >=
                             identicalOpts[t] - identical_gap(identical).delta,
                         "special", seed, "greedy within the gap of OPT at every prefix");

        Instance pair = random_instance(rng, 2, static_cast<int>(rng.range(1, 3)), T, 9);
        auto pairOpts = brute_opt_profile(pair, T, budget);
        ValueTrajectory pairTraj = evaluate(pad_goods(pair), anytime_two_agents(pair));
        for (int t = 0; t < T; ++t)
            verify_check(pairTraj.bottleneckPerRound[t] == pairOpts[t], "two_agents", seed,
                         "two-agent sequence anytime optimal");
    }
    log << "ok corpus special cases (" << count << " instances)\n";
}

int cmd_verify(const Options& opt) {
    std::ostringstream log;
    try {
        int golden = verify_golden(opt, log);
        verify_corpus(opt, log);
        std::cout << log.str();
        std::cout << "VERIFY OK (" << golden << " golden cases, seed " << opt.seed << ", count "
                  << opt.count << ")\n";
        return kExitOk;
    } catch (const VerifyFailure& failure) {
        std::cout << log.str();
        std::cerr << "verification failure: " << failure.what() << "\n";
        return kExitVerifyFailure;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"egalitarian repeated matching solvers"};
    app.require_subcommand(1);
    Options opt;

    auto addCommon = [&](CLI::App* cmd) {
        cmd->add_option("--fpt-limit", opt.fptLimit, "largest n the FPT solver accepts");
        cmd->add_option("--budget", opt.budget, "oracle state budget (overrides EGAL_MATCH_BUDGET)");
        cmd->add_option("--out", opt.outPath, "write output to a file instead of stdout");
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "table"}));
    };

    CLI::App* solve = app.add_subcommand("solve", "solve one instance with one algorithm");
    solve->add_option("--instance", opt.instancePath, "instance JSON file")->required();
    solve->add_option("--alg", opt.algorithm, "algorithm")
        ->required()
        ->check(CLI::IsMember(algorithm_names()));
    solve->add_option("--round", opt.round, "solve for this horizon instead of the full T");
    solve->add_flag("--dump-network", opt.dumpNetwork,
                    "print the circulation reduction to stderr (binary, two-goods)");
    addCommon(solve);

    CLI::App* compare = app.add_subcommand("compare", "per-round table across applicable solvers");
    compare->add_option("--instance", opt.instancePath, "instance JSON file")->required();
    compare->add_option("--round", opt.round, "compare up to this horizon");
    compare->add_flag("--with-oracle", opt.withOracle, "include exact OPT(t) and gap columns");
    addCommon(compare);

    CLI::App* verify = app.add_subcommand("verify", "run golden files and the seeded corpus");
    verify->add_option("--seed", opt.seed, "corpus seed");
    verify->add_option("--count", opt.count, "instances per corpus section");
    verify->add_option("--golden", opt.goldenDir, "directory with golden manifest and files");
    addCommon(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (solve->parsed()) return cmd_solve(opt);
        if (compare->parsed()) return cmd_compare(opt);
        return cmd_verify(opt);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const BudgetExceeded& e) {
        std::cerr << "limit: " << e.what() << "\n";
        return kExitLimit;
    } catch (const FptLimitExceeded& e) {
        std::cerr << "limit: " << e.what() << "\n";
        return kExitLimit;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerifyFailure;
    }
}
