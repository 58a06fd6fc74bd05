#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "aixi/bestvote/cvm.hpp"
#include "aixi/env/environments.hpp"
#include "aixi/harness/config.hpp"
#include "aixi/harness/experiments.hpp"
#include "aixi/harness/run.hpp"
#include "aixi/semimeasure/transducer.hpp"

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + p.string());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// relative paths land in the output directory
fs::path write_output(const std::string& name, const std::string& text)
{
    fs::path p = aixi::output_dir() / name;
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    out << text;
    return p;
}

int cmd_run(const std::string& config, const std::vector<std::string>& sets)
{
    const std::string text = config.empty() ? std::string() : slurp(config);
    const aixi::ExperimentConfig cfg = aixi::parse_config(text, sets);
    const aixi::RunLog log = aixi::run(cfg);
    std::cout << aixi::to_string(cfg);
    std::cout << "cycles " << log.cycles().size() << ", total credit " << aixi::to_string(log.total_credit()) << "\n";
    if (!log.status().empty()) std::cout << "status: " << log.status() << "\n";
    if (!cfg.out.empty()) std::cout << "log: " << (aixi::output_dir() / cfg.out).string() << "\n";
    return 0;
}

int cmd_experiment(const std::string& name)
{
    std::vector<std::string> names = name == "all" ? aixi::experiment_names() : std::vector<std::string>{name};
    bool ok = true;
    for (const auto& n : names) {
        const aixi::Report r = aixi::run_experiment(n);
        const fs::path p = write_output(n + ".csv", aixi::report_csv(r));
        std::cout << aixi::report_text(r) << "    csv " << p.string() << "\n";
        ok = ok && r.passed();
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"aixi_lab: universal-agent experiments at desk scale"};
    app.require_subcommand(1);

    std::string config;
    std::vector<std::string> sets;
    auto* run = app.add_subcommand("run", "run one agent against one environment");
    run->add_option("--config", config, "key = value config file");
    run->add_option("--set", sets, "override, key=value")->take_all();

    std::string name;
    auto* exp = app.add_subcommand("experiment", "run a named acceptance scenario (or 'all')");
    exp->add_option("name", name, "scenario name")->required();

    unsigned max_len = 11;
    int max_states = 2, actions = 2;
    std::string class_out;
    auto* enumerate = app.add_subcommand("enumerate-class", "write the transducer class manifest");
    enumerate->add_option("--max-len", max_len, "code length bound in bits")->required();
    enumerate->add_option("--max-states", max_states, "state bound");
    enumerate->add_option("--actions", actions, "number of actions (binary credit, no observation)");
    enumerate->add_option("--out", class_out, "manifest file")->required();

    unsigned lbits = 10;
    std::uint64_t tsteps = 64;
    std::string pool_out;
    auto* pool = app.add_subcommand("pool-build", "write the best-vote program pool manifest");
    pool->add_option("--lbits", lbits, "program length bound")->required();
    pool->add_option("--tsteps", tsteps, "per-cycle step budget")->required();
    pool->add_option("--actions", actions, "number of actions");
    pool->add_option("--out", pool_out, "manifest file")->required();

    std::string scenarios = "scenarios:";
    for (const auto& n : aixi::experiment_names()) scenarios += " " + n;
    exp->footer(scenarios);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) return cmd_run(config, sets);
        if (*exp) return cmd_experiment(name);
        if (*enumerate) {
            const auto a = aixi::binary_credit_alphabet(actions);
            const auto cls = aixi::TransducerClass::enumerate(a, max_len, max_states);
            std::ostringstream text;
            text << "# transducer class, actions=" << actions << " max-len=" << max_len << " max-states=" << max_states
                 << " size=" << cls.size() << "\n"
                 << aixi::write_transducer_manifest(cls);
            std::cout << cls.size() << " programs -> " << write_output(class_out, text.str()).string() << "\n";
        }
        if (*pool) {
            std::uint64_t examined = 0;
            const auto programs = aixi::enumerate_programs(lbits, actions, &examined);
            std::ostringstream text;
            text << "# cvm pool, actions=" << actions << " lbits=" << lbits << " tsteps=" << tsteps
                 << " size=" << programs.size() << " examined=" << examined << "\n"
                 << aixi::write_pool_manifest(programs);
            std::cout << programs.size() << " programs (" << examined << " strings examined) -> "
                      << write_output(pool_out, text.str()).string() << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
