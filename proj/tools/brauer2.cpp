#include "brauer2/pipeline.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using namespace brauer2;

namespace {

struct Options {
    std::string surface;
    std::string mode;
    int precision = 0;
    std::string format = "text";
    unsigned threads = 1;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidArgument("cannot read surface file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void add_common(CLI::App* cmd, Options& opt)
{
    cmd->add_option("--surface", opt.surface, "Surface description file")->required();
    cmd->add_option("--mode", opt.mode, "Override the surface mode")
        ->check(CLI::IsMember({"geometric", "strict"}));
    cmd->add_option("--precision", opt.precision, "Override the precision cap")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "tsv"}));
    cmd->add_option("--threads", opt.threads, "Worker threads for per-candidate work")
        ->check(CLI::Range(1u, 256u));
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"brauer2: Brauer classes of y^2 = f(x, t) with deg_x f = 4 over Q(t)"};
    app.require_subcommand(1);
    Options opt;
    PipelineRequest req;

    auto* bad = app.add_subcommand("bad-places", "The bad set S");
    auto* en = app.add_subcommand("enumerate", "List the S-unramified classes of ker N");
    auto* fi = app.add_subcommand("filter", "Br X necessary-condition filter over the enumeration");
    fi->add_option("--candidate", req.candidates, "Extra candidate element (repeatable)");
    auto* ch = app.add_subcommand("check", "Full diagnostics for one element");
    ch->add_option("element", req.element, "Element of L, e.g. \"(t-2; t-2; 1; 1)\" or \"A^2 - t\"")
        ->required();
    auto* ex = app.add_subcommand("expand-split", "Symbol expansion of a split element");
    ex->add_option("element", req.element, "Element of L")->required();
    auto* re = app.add_subcommand("residues", "Vertical residue of h(ell) at a good place");
    re->add_option("element", req.element, "Element of L")->required();
    re->add_option("--place", req.place, "Good place, e.g. \"(t-2)\"")->required();

    const std::map<CLI::App*, Command> commands{
        {bad, Command::bad_places}, {en, Command::enumerate},     {fi, Command::filter},
        {ch, Command::check},       {ex, Command::expand_split}, {re, Command::residues}};
    for (const auto& [cmd, _] : commands)
        add_common(cmd, opt);

    CLI11_PARSE(app, argc, argv);

    for (const auto& [cmd, c] : commands)
        if (cmd->parsed())
            req.command = c;
    req.format = opt.format == "tsv" ? Format::tsv : Format::text;
    req.threads = opt.threads;

    SurfaceSpec spec;
    try {
        spec = parse_surface(read_file(opt.surface));
    } catch (const Error& err) {
        std::cerr << "error: " << opt.surface << ": " << to_string(err.kind()) << ": " << err.what()
                  << '\n';
        return exit_code_for(err.kind());
    }
    if (!opt.mode.empty())
        spec.mode = opt.mode == "strict" ? Mode::strict : Mode::geometric;
    if (opt.precision > 0)
        spec.precision = opt.precision;

    const Report report = run_pipeline(spec, req);
    std::cout << report.output;
    std::cerr << report.diagnostics;
    return report.exit_code;
}
