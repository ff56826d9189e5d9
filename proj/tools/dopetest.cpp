// Command line front end: test, monitor, ref, check, satisfiable.

#include "dopetest/cleanness.hpp"
#include "dopetest/contract_io.hpp"
#include "dopetest/engine.hpp"
#include "dopetest/errors.hpp"
#include "dopetest/lts_io.hpp"
#include "dopetest/monitor.hpp"
#include "dopetest/reference.hpp"
#include "dopetest/satisfiability.hpp"
#include "dopetest/strategies.hpp"

#include <CLI11.hpp>

#include <array>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace {

using namespace dopetest;

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_error = 2;

/// Writes every line to stdout and, when open, to a log file.
class tee_buf : public std::streambuf {
public:
    tee_buf(std::streambuf* a, std::streambuf* b) : a_{a}, b_{b} {}

protected:
    int overflow(int c) override
    {
        if (traits_type::eq_int_type(c, traits_type::eof()))
            return traits_type::not_eof(c);
        const char ch = traits_type::to_char_type(c);
        const bool ok_a = a_ == nullptr || !traits_type::eq_int_type(a_->sputc(ch), traits_type::eof());
        const bool ok_b = b_ == nullptr || !traits_type::eq_int_type(b_->sputc(ch), traits_type::eof());
        return ok_a && ok_b ? c : traits_type::eof();
    }

    int sync() override
    {
        const int ra = a_ != nullptr ? a_->pubsync() : 0;
        const int rb = b_ != nullptr ? b_->pubsync() : 0;
        return (ra == 0 && rb == 0) ? 0 : -1;
    }

private:
    std::streambuf* a_;
    std::streambuf* b_;
};

int verdict_exit(const verdict& v)
{
    return v.result == outcome::fail ? exit_fail : exit_ok;
}

void print_witness(std::ostream& out, const verdict& v)
{
    if (v.result == outcome::fail && v.witness)
        out << "Test FAILED for Standard Trace: " << to_record_list(*v.witness) << '\n';
    if (v.result == outcome::trivial_pass)
        out << "WARNING: " << v.reason << '\n';
}

std::vector<std::string> split_words(const std::string& text)
{
    std::istringstream in{text};
    std::vector<std::string> words;
    std::string w;
    while (in >> w)
        words.push_back(w);
    return words;
}

std::unique_ptr<sut_connection> make_sut(const std::string& target, std::uint64_t seed)
{
    if (target == "builtin:noisy-mirror") {
        noisy_mirror_config config;
        config.seed = seed;
        return std::make_unique<noisy_mirror>(config);
    }
    if (target.rfind("lts:", 0) == 0)
        return std::make_unique<lts_player>(quiescence_closure(load_lts(target.substr(4))), seed);
    if (target.rfind("exec:", 0) == 0) {
        auto argv = split_words(target.substr(5));
        if (argv.empty())
            throw std::invalid_argument("exec: needs a command");
        return external_process(std::move(argv));
    }
    throw std::invalid_argument("unknown SUT '" + target + "'; use builtin:noisy-mirror, lts:<file> or exec:<command>");
}

case_weights parse_weights(const std::string& text)
{
    std::array<double, 3> w{};
    std::istringstream in{text};
    std::string part;
    std::size_t n = 0;
    while (std::getline(in, part, ',')) {
        if (n == 3)
            throw std::invalid_argument("--weights takes three comma separated numbers");
        w[n++] = std::stod(part);
    }
    if (n != 3)
        throw std::invalid_argument("--weights takes three comma separated numbers");
    return {w[0], w[1], w[2]};
}

struct test_args {
    std::string contract;
    std::string sut = "builtin:noisy-mirror";
    std::string strategy = "random";
    std::uint64_t seed = 0;
    std::size_t bound = 20;
    std::string weights = "0.05,0.65,0.30";
    int timeout_ms = static_cast<int>(default_quiescence_timeout.count());
    std::string log;
};

int run_test(const test_args& a)
{
    const contract c = load_contract(a.contract);
    std::seed_seq seq{a.seed};
    std::array<std::uint64_t, 2> seeds{};
    seq.generate(seeds.begin(), seeds.end());

    std::unique_ptr<strategy> chooser;
    if (a.strategy == "random")
        chooser = std::make_unique<random_strategy>(parse_weights(a.weights), seeds[0]);
    else if (a.strategy.rfind("script:", 0) == 0)
        chooser = std::make_unique<scripted_strategy>(load_script(a.strategy.substr(7)));
    else
        throw std::invalid_argument("unknown strategy '" + a.strategy + "'; use random or script:<file>");

    auto sut = make_sut(a.sut, seeds[1]);

    std::ofstream file;
    if (!a.log.empty()) {
        file.open(a.log);
        if (!file)
            throw std::runtime_error("cannot write log '" + a.log + "'");
    }
    tee_buf buf{std::cout.rdbuf(), file.is_open() ? file.rdbuf() : nullptr};
    std::ostream out{&buf};

    run_options options;
    options.timeout = std::chrono::milliseconds{a.timeout_ms};
    options.log = &out;
    options.seed = a.seed;
    const acceptance_oracle oracle{c, a.bound, node_budget_from_env()};
    const verdict v = dt_run(oracle, *sut, *chooser, options);
    print_witness(out, v);
    out.flush();
    return verdict_exit(v);
}

struct monitor_args {
    std::string contract;
    std::string trace;
    std::string format = "canonical";
    std::size_t inputs = default_speed_inputs;
    std::string log;
};

int run_monitor(const monitor_args& a)
{
    const contract c = load_contract(a.contract);
    const recorded_trace recording = load_trace(a.trace, parse_trace_format(a.format), a.inputs);

    std::ostringstream steps;
    run_options options;
    options.log = &steps;
    const verdict v = monitor_verdict(c, recording, options);

    if (!a.log.empty()) {
        std::ofstream file{a.log};
        if (!file)
            throw std::runtime_error("cannot write log '" + a.log + "'");
        file << steps.str();
    }
    std::cout << "VERDICT " << to_string(v.result) << ' ' << v.reason << '\n';
    std::cout << verdict_json(v, 0) << '\n';
    print_witness(std::cout, v);
    return verdict_exit(v);
}

int run_ref(const std::string& contract_path, std::size_t depth, bool dump)
{
    const contract c = load_contract(contract_path);
    const bounded_reference ref = build_reference_bounded(c, depth, node_budget_from_env());
    if (dump)
        ref.dump(std::cout);
    else
        std::cout << "reference up to depth " << depth << ": " << ref.state_count() << " states\n";
    return exit_ok;
}

int run_check(const std::string& impl_path, const std::string& contract_path, std::size_t depth, bool ioco,
              const std::string& closure)
{
    const contract c = load_contract(contract_path);
    const lts impl_lts = load_lts(impl_path);
    standard_lts impl;
    if (closure == "quiescence")
        impl = quiescence_closure(impl_lts);
    else if (closure == "terminal")
        impl = terminal_closure(impl_lts);
    else
        throw std::invalid_argument("unknown closure '" + closure + "'");

    const std::size_t budget = node_budget_from_env();
    if (ioco) {
        const auto ref = build_reference_bounded(c, depth, budget);
        const auto r = ioco_check_bounded(impl, ref, depth, budget);
        if (r.conforms) {
            std::cout << "CONFORMS up to depth " << depth << '\n';
            return exit_ok;
        }
        std::cout << "VIOLATION after " << to_record_list(*r.history) << ": output " << to_label(*r.output)
                  << " is not allowed by the reference\n";
        return exit_fail;
    }

    const auto r = robustly_clean_bounded(impl, c, depth, budget);
    if (r.clean) {
        std::cout << "CLEAN up to depth " << depth << '\n';
        return exit_ok;
    }
    const auto& ce = *r.counterexample;
    std::cout << "NOT CLEAN: condition " << ce.condition << " fails at position " << ce.k << '\n'
              << "  standard trace:  " << to_record_list(ce.sigma) << '\n'
              << "  deviating trace: " << to_record_list(ce.sigma_prime) << '\n';
    return exit_fail;
}

int run_satisfiable(const std::string& contract_path, std::size_t depth)
{
    const contract c = load_contract(contract_path);
    const auto r = check_satisfiable_bounded(c, depth, node_budget_from_env());
    if (r.satisfiable) {
        std::cout << "SATISFIABLE up to depth " << depth << '\n';
        return exit_ok;
    }
    std::cout << "UNSATISFIABLE: " << r.explanation << '\n';
    if (r.witness)
        std::cout << "  witness history: " << to_record_list(*r.witness) << '\n';
    for (const auto& t : r.conflicting)
        std::cout << "  conflicting standard trace: " << to_record_list(t) << '\n';
    if (r.standard_cleanness && r.standard_cleanness->counterexample) {
        const auto& ce = *r.standard_cleanness->counterexample;
        std::cout << "  condition " << ce.condition << " fails at position " << ce.k << " for "
                  << to_record_list(ce.sigma) << " against " << to_record_list(ce.sigma_prime) << '\n';
    }
    return exit_fail;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Contract-based doping tests for black-box systems"};
    app.require_subcommand(1);

    test_args test;
    auto* cmd_test = app.add_subcommand("test", "Run a bounded doping test against a system under test");
    cmd_test->add_option("--contract", test.contract, "Contract file")->required()->check(CLI::ExistingFile);
    cmd_test->add_option("--sut", test.sut, "builtin:noisy-mirror, lts:<file> or exec:<command>");
    cmd_test->add_option("--strategy", test.strategy, "random or script:<file>");
    cmd_test->add_option("--seed", test.seed, "Seed for every random choice");
    cmd_test->add_option("--bound", test.bound, "Maximal history length")->check(CLI::PositiveNumber);
    cmd_test->add_option("--weights", test.weights, "Probabilities of stop,input,output for the random strategy");
    cmd_test->add_option("--timeout-ms", test.timeout_ms, "Quiescence timeout in milliseconds")
        ->check(CLI::NonNegativeNumber);
    cmd_test->add_option("--log", test.log, "Also write the run log to this file");

    monitor_args mon;
    auto* cmd_monitor = app.add_subcommand("monitor", "Check a recorded run against a contract");
    cmd_monitor->add_option("--contract", mon.contract, "Contract file")->required()->check(CLI::ExistingFile);
    cmd_monitor->add_option("--trace", mon.trace, "Recorded trace")->required()->check(CLI::ExistingFile);
    cmd_monitor->add_option("--format", mon.format, "canonical or speed-nox")
        ->check(CLI::IsMember({"canonical", "speed-nox"}));
    cmd_monitor->add_option("--inputs", mon.inputs, "Number of inputs in a speed-nox trace");
    cmd_monitor->add_option("--log", mon.log, "Write the replay log to this file");

    std::string ref_contract;
    std::size_t ref_depth = 2;
    bool ref_dump = false;
    auto* cmd_ref = app.add_subcommand("ref", "Build the reference implementation up to a depth");
    cmd_ref->add_option("--contract", ref_contract, "Contract file")->required()->check(CLI::ExistingFile);
    cmd_ref->add_option("--depth", ref_depth, "Depth")->check(CLI::PositiveNumber);
    cmd_ref->add_flag("--dump", ref_dump, "Print every state with its enabled labels");

    std::string check_impl;
    std::string check_contract;
    std::size_t check_depth = 3;
    bool check_ioco = false;
    std::string check_closure = "quiescence";
    auto* cmd_check = app.add_subcommand("check", "Check an LTS for robust cleanness or ioco conformance");
    cmd_check->add_option("--impl", check_impl, "Implementation LTS")->required()->check(CLI::ExistingFile);
    cmd_check->add_option("--contract", check_contract, "Contract file")->required()->check(CLI::ExistingFile);
    cmd_check->add_option("--depth", check_depth, "Depth")->check(CLI::PositiveNumber);
    cmd_check->add_flag("--ioco", check_ioco, "Check ioco against the reference instead of robust cleanness");
    cmd_check->add_option("--closure", check_closure, "quiescence or terminal")
        ->check(CLI::IsMember({"quiescence", "terminal"}));

    std::string sat_contract;
    std::size_t sat_depth = 3;
    auto* cmd_sat = app.add_subcommand("satisfiable", "Search for a history that no output can follow");
    cmd_sat->add_option("--contract", sat_contract, "Contract file")->required()->check(CLI::ExistingFile);
    cmd_sat->add_option("--depth", sat_depth, "Depth")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_error;
    }

    try {
        if (cmd_test->parsed())
            return run_test(test);
        if (cmd_monitor->parsed())
            return run_monitor(mon);
        if (cmd_ref->parsed())
            return run_ref(ref_contract, ref_depth, ref_dump);
        if (cmd_check->parsed())
            return run_check(check_impl, check_contract, check_depth, check_ioco, check_closure);
        if (cmd_sat->parsed())
            return run_satisfiable(sat_contract, sat_depth);
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what()
                  << "\nhint: lower --depth or raise DOPETEST_NODE_BUDGET\n";
        return exit_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_error;
    }
    return exit_error;
}
