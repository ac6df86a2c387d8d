#include "quivinv/dsl.hpp"
#include "quivinv/errors.hpp"
#include "quivinv/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

quivinv::QuiverDoc load_doc(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open quiver file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return quivinv::parse_quiver_dsl(buf.str());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pathway classification and unipotent invariants of filtered quiver representations"};
    app.require_subcommand(1);

    std::string file;
    std::string format = "text";
    quivinv::RunOptions opts;

    auto add_common = [&](CLI::App* sub, bool needs_file) {
        if (needs_file) sub->add_option("file", file, "quiver description file")->required();
        sub->add_option("--format", format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
        return sub;
    };
    auto add_dims = [&](CLI::App* sub, bool with_m) {
        sub->add_option("--n", opts.n, "dimension at every nonframed vertex");
        if (with_m) sub->add_option("--m", opts.m, "framed vertex dimension");
        sub->add_option("--d", opts.d, "degree bound");
        sub->add_option("--guard", opts.monomial_guard, "monomial basis size guard");
        return sub;
    };

    CLI::App* classify = add_common(app.add_subcommand("classify", "decide the pathway dichotomy"), true);
    classify->add_option("--cap", opts.length_cap, "pathway search length cap");
    CLI::App* pathways =
        add_common(app.add_subcommand("pathways", "enumerate all pathways per vertex pair"), true);
    pathways->add_option("--cap", opts.length_cap, "pathway search length cap");
    add_dims(add_common(app.add_subcommand("invariants", "compute the invariant basis up to a degree"), true), true);
    add_dims(add_common(app.add_subcommand("generators", "list bideterminant row generators and products"), true), true);
    add_dims(add_common(app.add_subcommand("verify-thm1", "check pathway dichotomy against the invariant basis"), true), false);
    add_dims(add_common(app.add_subcommand("verify-thm2", "check bideterminant generators span the invariants"), true), true);
    CLI::App* example = add_common(app.add_subcommand("verify-example", "run a built-in worked fixture"), false);
    example->add_option("id", opts.example_id, "fixture id (4.6)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2; // usage errors map to 2, --help to 0
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        const std::string command = sub->get_name();
        std::optional<quivinv::QuiverDoc> doc;
        if (command != "verify-example") doc = load_doc(file);
        quivinv::CommandOutcome out = quivinv::run_command(command, doc, opts);
        std::cout << (format == "json" ? out.json : out.text) << std::endl;
        return out.exit_code;
    } catch (const quivinv::ResourceGuardError& e) {
        std::cerr << "resource guard: " << e.what() << std::endl;
        return 3;
    } catch (const quivinv::ParseError& e) {
        std::cerr << "parse error: " << e.what() << std::endl;
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << std::endl;
        return 2;
    }
}
