#include "ltistab/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "ltistab/diagram.hpp"
#include "ltistab/error.hpp"
#include "ltistab/format.hpp"
#include "ltistab/io.hpp"
#include "ltistab/parser.hpp"
#include "ltistab/signals.hpp"
#include "ltistab/stability.hpp"
#include "ltistab/transforms.hpp"

namespace ltistab {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::FourierDoesNotExist:
        case ErrorCode::NotAbsolutelyIntegrable:
        case ErrorCode::NotStable:
        case ErrorCode::ImpulseNotSamplable:
            return kExitRefusal;
        case ErrorCode::BoundViolated:
            return kExitInternal;
        default:
            return kExitDomain;
    }
}

double resolve_epsilon(const std::optional<double>& flag, const EnvLookup& env) {
    double eps = kDefaultMarginalBand;
    if (env) {
        if (const char* raw = env("LTISTAB_EPSILON"); raw && *raw) {
            try {
                std::size_t used = 0;
                eps = std::stod(raw, &used);
                if (used != std::string(raw).size()) throw std::invalid_argument("trailing characters");
            } catch (const std::logic_error&) {
                throw UsageError(std::string("LTISTAB_EPSILON is not a number: ") + raw);
            }
        }
    }
    if (flag) eps = *flag;
    if (!(eps >= 0.0) || !std::isfinite(eps)) throw UsageError("epsilon must be a finite nonnegative number");
    return eps;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::InvalidInput, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

SampledSignal read_signal_file(const std::string& path) {
    std::istringstream in(read_file(path));
    try {
        return read_csv(in);
    } catch (const Error& e) {
        throw Error(e.code(), path + ": " + e.what());
    }
}

void write_report_fields(JsonWriter& w, const StabilityReport& r) {
    w.key("verdict").value(to_string(r.verdict));
    w.key("spectral_abscissa").value(r.spectral_abscissa);
    w.key("dominant_pole");
    if (r.dominant_pole)
        w.begin_object().key("re").value(r.dominant_pole->real()).key("im").value(r.dominant_pole->imag()).end_object();
    else
        w.null();
    w.key("dominant_multiplicity").value(r.dominant_multiplicity);
    w.key("decay_time_constant").value(r.decay_time_constant);
    w.key("settling_time_estimate").value(r.settling_time_estimate);
    w.key("route").value(to_string(r.route));
}

void report_csv_header(std::ostream& out, std::string_view prefix) {
    out << prefix
        << "verdict,spectral_abscissa,dominant_re,dominant_im,dominant_multiplicity,decay_time_constant,"
           "settling_time_estimate,route\n";
}

void report_csv_row(std::ostream& out, const StabilityReport& r) {
    const Complex d = r.dominant_pole.value_or(Complex(std::nan(""), std::nan("")));
    out << to_string(r.verdict) << ',' << format_double(r.spectral_abscissa) << ',' << format_double(d.real()) << ','
        << format_double(d.imag()) << ',' << r.dominant_multiplicity << ',' << format_double(r.decay_time_constant)
        << ',' << format_double(r.settling_time_estimate) << ',' << to_string(r.route) << '\n';
}

std::vector<double> grid(double lo, double hi, int points, bool logarithmic) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        const double f = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
        out.push_back(logarithmic ? lo * std::pow(hi / lo, f) : lo + f * (hi - lo));
    }
    if (points > 1) out.back() = hi;
    return out;
}

int run_poles(const std::string& expr, bool csv, std::ostream& out) {
    const TransferFunction h = parse_transfer_function(expr);
    const PoleZeroForm pz = to_pole_zero(h);
    if (csv) {
        out << "kind,re,im,multiplicity\n";
        for (const auto& [kind, set] : {std::pair{"pole", &pz.poles}, std::pair{"zero", &pz.zeros}})
            for (const auto& r : set->roots)
                out << kind << ',' << format_double(r.location.real()) << ',' << format_double(r.location.imag())
                    << ',' << r.multiplicity << '\n';
        return kExitOk;
    }
    JsonWriter w;
    w.begin_object();
    w.key("transfer_function").value(format_tf(h));
    w.key("gain").value(pz.gain);
    w.key("poles");
    write_json(w, pz.poles);
    w.key("zeros");
    write_json(w, pz.zeros);
    w.end_object();
    out << w.str();
    return kExitOk;
}

int run_stability(const std::string& expr, double eps, bool csv, std::ostream& out) {
    const TransferFunction h = parse_transfer_function(expr);
    const StabilityReport report = bibo_from_poles(h, eps);
    if (csv) {
        report_csv_header(out, "");
        report_csv_row(out, report);
        return kExitOk;
    }
    JsonWriter w;
    w.begin_object();
    w.key("transfer_function").value(format_tf(h));
    w.key("epsilon").value(eps);
    write_report_fields(w, report);
    w.end_object();
    out << w.str();
    return kExitOk;
}

int run_impulse(const std::string& expr, double t1, double dt, std::ostream& out) {
    if (!(t1 > 0.0) || !(dt > 0.0)) throw UsageError("--t1 and --dt must be positive");
    const TransferFunction h = parse_transfer_function(expr);
    const ExpPolySignal sig = inverse_laplace(h, roc_causal(h));
    write_csv(out, sample(sig, 0.0, t1, dt));
    return kExitOk;
}

int run_freq(const std::string& expr, double wmin, double wmax, int points, bool logarithmic, std::ostream& out) {
    if (points < 1) throw UsageError("--points must be at least 1");
    if (!(wmax >= wmin)) throw UsageError("--omega-max must not be below --omega-min");
    if (logarithmic && !(wmin > 0.0)) throw UsageError("--log needs a positive --omega-min");
    const TransferFunction h = parse_transfer_function(expr);
    // Refuses unless the causal strip contains the imaginary axis.
    const FourierTransform ft = fourier_from_laplace(LaplaceResult{h, roc_causal(h)});
    write_frequency_csv(out, freq_response(ft.tf(), grid(wmin, wmax, points, logarithmic)));
    return kExitOk;
}

int run_feedback(const std::string& path, double eps, bool csv, std::ostream& out) {
    const TransferFunction h = elaborate_diagram(parse_diagram(read_file(path)));
    const StabilityReport report = bibo_from_poles(h, eps);
    if (csv) {
        report_csv_header(out, "transfer_function,");
        out << format_tf(h) << ',';
        report_csv_row(out, report);
        return kExitOk;
    }
    JsonWriter w;
    w.begin_object();
    w.key("transfer_function").value(format_tf(h));
    w.key("numerator");
    write_json(w, h.num());
    w.key("denominator");
    write_json(w, h.den());
    w.key("poles");
    write_json(w, tf_poles(h));
    w.key("epsilon").value(eps);
    w.key("stability").begin_object();
    write_report_fields(w, report);
    w.end_object();
    w.end_object();
    out << w.str();
    return kExitOk;
}

int run_sweep(const std::string& expr, double kmin, double kmax, int points, double eps, bool csv,
              std::ostream& out) {
    if (points < 1) throw UsageError("--points must be at least 1");
    if (!(kmax >= kmin)) throw UsageError("--k-max must not be below --k-min");
    const TransferFunction plant = parse_transfer_function(expr);
    const auto entries = gain_sweep(plant, grid(kmin, kmax, points, false), eps);
    if (csv) {
        report_csv_header(out, "k,");
        for (const auto& e : entries) {
            out << format_double(e.gain) << ',';
            report_csv_row(out, e.report);
        }
        return kExitOk;
    }
    JsonWriter w;
    w.begin_object();
    w.key("plant").value(format_tf(plant));
    w.key("epsilon").value(eps);
    w.key("entries").begin_array();
    for (const auto& e : entries) {
        w.begin_object();
        w.key("k").value(e.gain);
        write_report_fields(w, e.report);
        w.end_object();
    }
    w.end_array();
    w.key("transitions").begin_array();
    for (std::size_t i = 1; i < entries.size(); ++i) {
        if (entries[i].report.verdict == entries[i - 1].report.verdict) continue;
        w.begin_object();
        w.key("from").value(to_string(entries[i - 1].report.verdict));
        w.key("to").value(to_string(entries[i].report.verdict));
        w.key("k_before").value(entries[i - 1].gain);
        w.key("k_after").value(entries[i].gain);
        w.end_object();
    }
    w.end_array();
    w.end_object();
    out << w.str();
    return kExitOk;
}

int run_convolve(const std::string& x_path, const std::string& h_path, std::ostream& out) {
    write_csv(out, convolve(read_signal_file(x_path), read_signal_file(h_path)));
    return kExitOk;
}

int run_adversarial(const std::string& h_path, std::ostream& out) {
    write_csv(out, adversarial_input(read_signal_file(h_path)));
    return kExitOk;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const EnvLookup& env) {
    CLI::App app{"Stability analysis of continuous-time LTI systems", "ltistab"};
    app.require_subcommand(1);

    std::string expr;
    std::string path_a;
    std::string path_b;
    std::optional<double> epsilon;
    bool csv = false;
    bool logarithmic = false;
    double t1 = 0.0;
    double dt = 0.0;
    double wmin = 0.0;
    double wmax = 0.0;
    double kmin = 0.0;
    double kmax = 0.0;
    int points = 0;

    auto* poles = app.add_subcommand("poles", "Poles, zeros and gain of a transfer function");
    poles->add_option("expr", expr, "Transfer function, e.g. \"1/(s+1)\"")->required();
    poles->add_flag("--csv", csv, "Emit CSV instead of JSON");

    auto* stability = app.add_subcommand("stability", "Pole-based stability verdict and relative-stability metrics");
    stability->add_option("expr", expr, "Transfer function")->required();
    stability->add_option("--epsilon", epsilon, "Marginal band half-width around the imaginary axis");
    stability->add_flag("--csv", csv, "Emit CSV instead of JSON");

    auto* impulse = app.add_subcommand("impulse", "Causal impulse response sampled on [0, t1] as CSV");
    impulse->add_option("expr", expr, "Transfer function")->required();
    impulse->add_option("--t1", t1, "End time in seconds")->required();
    impulse->add_option("--dt", dt, "Sample step in seconds")->required();

    auto* freq = app.add_subcommand("freq", "Frequency response H(j omega) as CSV");
    freq->add_option("expr", expr, "Transfer function")->required();
    freq->add_option("--omega-min", wmin, "Lowest angular frequency (rad/s)")->required();
    freq->add_option("--omega-max", wmax, "Highest angular frequency (rad/s)")->required();
    freq->add_option("--points", points, "Number of frequencies")->required();
    freq->add_flag("--log", logarithmic, "Logarithmic spacing");

    auto* feedback = app.add_subcommand("feedback", "Elaborate a block diagram JSON and analyse the result");
    feedback->add_option("diagram", path_a, "Diagram JSON file")->required();
    feedback->add_option("--epsilon", epsilon, "Marginal band half-width");
    feedback->add_flag("--csv", csv, "Emit CSV instead of JSON");

    auto* sweep = app.add_subcommand("sweep", "Proportional gain sweep under unity negative feedback");
    sweep->add_option("plant", expr, "Plant transfer function")->required();
    sweep->add_option("--k-min", kmin, "Smallest gain")->required();
    sweep->add_option("--k-max", kmax, "Largest gain")->required();
    sweep->add_option("--points", points, "Number of gains")->required();
    sweep->add_option("--epsilon", epsilon, "Marginal band half-width");
    sweep->add_flag("--csv", csv, "Emit CSV instead of JSON");

    auto* conv = app.add_subcommand("convolve", "Riemann-sum convolution of two sampled signals");
    conv->add_option("x", path_a, "Input signal CSV (t,value)")->required();
    conv->add_option("impulse_response", path_b, "Impulse response CSV (t,value)")->required();

    auto* adversarial = app.add_subcommand("adversarial", "Worst-case bounded input x(t) = sgn(h(-t))");
    adversarial->add_option("impulse_response", path_a, "Impulse response CSV (t,value)")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (poles->parsed()) return run_poles(expr, csv, out);
        if (stability->parsed()) return run_stability(expr, resolve_epsilon(epsilon, env), csv, out);
        if (impulse->parsed()) return run_impulse(expr, t1, dt, out);
        if (freq->parsed()) return run_freq(expr, wmin, wmax, points, logarithmic, out);
        if (feedback->parsed()) return run_feedback(path_a, resolve_epsilon(epsilon, env), csv, out);
        if (sweep->parsed()) return run_sweep(expr, kmin, kmax, points, resolve_epsilon(epsilon, env), csv, out);
        if (conv->parsed()) return run_convolve(path_a, path_b, out);
        if (adversarial->parsed()) return run_adversarial(path_a, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    err << "error: no subcommand given\n";
    return kExitUsage;
}

}  // namespace ltistab
