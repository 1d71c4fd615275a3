// Command-line front end: reads matrix JSON files, dispatches to the
// library, and prints a JSON document for every outcome (including usage
// errors and --help). Exit status: 0 success, 2 usage error, 3 domain
// error.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qleig/qleig.hpp"

namespace {

using qleig::json;

struct Options {
    std::string input;
    std::string lambda_text;
    std::string direction_text = "1";
    std::string steps_text = "1e-1,1e-2,1e-3,1e-4,1e-5,1e-6";
    std::uint64_t seed = 1;
    double tol = 1e-6;
};

// Option parsing that must fail as a usage error (exit 2), not a domain
// error: bad quaternion literals and malformed step lists are the caller
// holding the tool wrong, and are rejected before the input file is read.
qleig::Quaternion quaternion_option(const std::string& text, const std::string& name) {
    try {
        return qleig::parse_quaternion_argument(text);
    } catch (const qleig::ParseError& e) {
        throw CLI::ValidationError(name, e.what());
    }
}

std::vector<double> steps_option(const std::string& text) {
    std::vector<double> steps;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string piece = text.substr(pos, comma - pos);
        try {
            std::size_t used = 0;
            const double v = std::stod(piece, &used);
            if (used != piece.size()) throw std::invalid_argument(piece);
            if (v == 0.0) throw CLI::ValidationError("--steps", "steps must be nonzero");
            steps.push_back(v);
        } catch (const std::logic_error&) {
            throw CLI::ValidationError("--steps", "not a real number: '" + piece + "'");
        }
        pos = comma + 1;
    }
    if (steps.empty()) throw CLI::ValidationError("--steps", "at least one step is required");
    return steps;
}

json run_sdet(const Options& opt) {
    return json{{"sdet", qleig::round_sig(qleig::sdet(qleig::load_matrix(opt.input)))}};
}

json charfn_report(const qleig::CharFn& fn) {
    json out{{"kind", qleig::to_string(fn.kind)},
             {"kappa", qleig::round_sig(fn.kappa)},
             {"expression", fn.expr.to_string()}};
    if (fn.pole) {
        out["pole"] = qleig::quaternion_to_json(fn.pole->location);
        out["pole_value"] = qleig::quaternion_to_json(fn.pole->value);
    }
    return out;
}

json run_charfn(const Options& opt) {
    return charfn_report(qleig::charfn_for(qleig::load_matrix(opt.input)));
}

json run_eval(const Options& opt) {
    const qleig::Quaternion lambda = quaternion_option(opt.lambda_text, "--lambda");
    const qleig::QMatrix a = qleig::load_matrix(opt.input);
    const qleig::CharFn fn = qleig::charfn_for(a);
    const qleig::Quaternion value = fn.eval(lambda);
    return json{{"kind", qleig::to_string(fn.kind)},
                {"lambda", qleig::quaternion_to_json(lambda)},
                {"value", qleig::quaternion_to_json(value)},
                {"at_pole", fn.at_pole(lambda)}};
}

json run_pole(const Options& opt) {
    return json{{"pole", qleig::quaternion_to_json(qleig::pole(qleig::load_matrix(opt.input)))}};
}

json run_hc_check(const Options& opt) {
    return json{{"residual", qleig::round_sig(qleig::hc_residual(qleig::load_matrix(opt.input)))}};
}

json run_left_eigs(const Options& opt) {
    qleig::LeftSearchOptions search;
    search.seed = opt.seed;
    search.tol = opt.tol;
    const qleig::SpectrumResult s = qleig::left_eigenvalues(qleig::load_matrix(opt.input), search);
    json out = qleig::spectrum_to_json(s);
    out["note"] = "certified roots (possibly incomplete)";
    return out;
}

json run_right_eigs(const Options& opt) {
    return qleig::spectrum_to_json(qleig::right_eigenvalues(qleig::load_matrix(opt.input)));
}

json run_sigma(const Options& opt) {
    const qleig::Quaternion l = quaternion_option(opt.lambda_text, "--lambda");
    const qleig::QMatrix a = qleig::load_matrix(opt.input);
    // lambda = x + j y with complex x = w + xi, y = y - zi
    const double s = qleig::sigma(a, qleig::Complex(l.w, l.x), qleig::Complex(l.y, -l.z));
    return json{{"lambda", qleig::quaternion_to_json(l)}, {"sigma", qleig::round_sig(s)}};
}

json run_demo_discontinuity(const Options& opt) {
    const qleig::Quaternion dir = quaternion_option(opt.direction_text, "--direction");
    if (dir.is_zero()) throw CLI::ValidationError("--direction", "direction must be nonzero");
    const std::vector<double> steps = steps_option(opt.steps_text);

    const qleig::QMatrix a = qleig::load_matrix(opt.input);
    const qleig::CharFn fn = qleig::charfn_for(a);
    const std::vector<qleig::Quaternion> values = qleig::directional_pole_limit(fn, dir, steps);

    json rows = json::array();
    for (std::size_t t = 0; t < steps.size(); ++t)
        rows.push_back(json{{"step", qleig::round_sig(steps[t])},
                            {"value", qleig::quaternion_to_json(values[t])}});
    return json{{"pole", qleig::quaternion_to_json(fn.pole->location)},
                {"pole_value", qleig::quaternion_to_json(fn.pole->value)},
                {"direction", qleig::quaternion_to_json(dir)},
                {"rows", rows}};
}

json run_demo_counterexample() {
    json out{{"result", qleig::matrix_to_json(qleig::sigma_counterexample_check())}};
    out["note"] = "sigma vanishes at every left eigenvalue, yet its matrix substitution "
                  "is not the zero matrix";
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Study determinants, characteristic functions, and left/right spectra "
                 "of quaternionic matrices"};
    app.require_subcommand(1);

    Options opt;
    json out;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--input", opt.input, "matrix JSON file")->required();
    };

    CLI::App* sdet = app.add_subcommand("sdet", "Study determinant of the matrix");
    add_input(sdet);
    sdet->callback([&] { out = run_sdet(opt); });

    CLI::App* charfn = app.add_subcommand("charfn", "characteristic function report");
    add_input(charfn);
    charfn->callback([&] { out = run_charfn(opt); });

    CLI::App* eval = app.add_subcommand("eval", "evaluate the characteristic function");
    add_input(eval);
    eval->add_option("--lambda", opt.lambda_text, "evaluation point (string or 4-array)")
        ->required();
    eval->callback([&] { out = run_eval(opt); });

    CLI::App* pole = app.add_subcommand("pole", "pole of the generic 3x3 reduction");
    add_input(pole);
    pole->callback([&] { out = run_pole(opt); });

    CLI::App* hc = app.add_subcommand("hc-check", "Hamilton-Cayley residual of the matrix");
    add_input(hc);
    hc->callback([&] { out = run_hc_check(opt); });

    CLI::App* left = app.add_subcommand("left-eigs", "certified numerical left spectrum");
    add_input(left);
    left->add_option("--seed", opt.seed, "seed for the multistart search");
    left->add_option("--tol", opt.tol, "acceptance tolerance for sdet(A - lambda Id)")
        ->check(CLI::PositiveNumber);
    left->callback([&] { out = run_left_eigs(opt); });

    CLI::App* right = app.add_subcommand("right-eigs", "right spectrum representatives");
    add_input(right);
    right->callback([&] { out = run_right_eigs(opt); });

    CLI::App* sigma = app.add_subcommand("sigma", "determinant form sigma at lambda = x + jy");
    add_input(sigma);
    sigma->add_option("--lambda", opt.lambda_text, "evaluation point (string or 4-array)")
        ->required();
    sigma->callback([&] { out = run_sigma(opt); });

    CLI::App* demo_disc = app.add_subcommand(
        "demo-discontinuity", "values of the characteristic function approaching its pole");
    add_input(demo_disc);
    demo_disc->add_option("--direction", opt.direction_text,
                          "approach direction (string or 4-array)");
    demo_disc->add_option("--steps", opt.steps_text, "comma-separated nonzero step sizes");
    demo_disc->callback([&] { out = run_demo_discontinuity(opt); });

    CLI::App* demo_cex = app.add_subcommand(
        "demo-counterexample", "matrix substitution into the sigma closed form");
    demo_cex->callback([&] { out = run_demo_counterexample(); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << json{{"help", app.help()}}.dump(2) << "\n";
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        std::cout << json{{"help", app.help("", CLI::AppFormatMode::All)}}.dump(2) << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cout << json{{"error", "Usage"}, {"detail", e.what()}}.dump(2) << "\n";
        return 2;
    } catch (const qleig::Error& e) {
        std::cout << json{{"error", e.code()}, {"detail", e.what()}}.dump(2) << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cout << json{{"error", "Internal"}, {"detail", e.what()}}.dump(2) << "\n";
        return 3;
    }

    std::cout << out.dump(2) << "\n";
    return 0;
}
