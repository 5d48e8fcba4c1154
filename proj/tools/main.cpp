// Command-line front end: sample wavelets, build quadrature kernels, report
// metrics, run the verification suite, generate test signals, and run
// continuous wavelet transforms with CSV / PGM output.

#include <CLI11.hpp>

#include <cctype>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include <wavepair/wavepair.hpp>

namespace {

struct Options {
    std::string wavelet;
    double omega0 = 5.0;
    std::string grid;
    std::string kind;
    std::string scales;
    std::string signal = "twosine";
    double f1 = 5.0;
    double f2 = 9.0;
    double flow = 5.0;
    double fhigh = 50.0;
    double tbreak = 0.5;
    std::string out;
    std::string format = "csv";
    bool peak_normalize = false;
    double dc_offset = 0.0;
    std::string config_path;
};

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double config_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos == value.size() && std::isfinite(v)) return v;
    } catch (const std::exception&) {
    }
    throw wavepair::ParseError("config key '" + key + "' needs a number, got '" +
                               value + "'");
}

bool config_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw wavepair::ParseError("config key '" + key +
                               "' needs true or false, got '" + value + "'");
}

// Applies key=value lines from a config file to options the command line did
// not set. Flags always win; keys the active subcommand does not know are
// errors. Blank lines and lines starting with '#' are skipped.
void apply_config(const CLI::App* sub, Options& o,
                  std::set<std::string>& applied) {
    std::ifstream in(o.config_path);
    if (!in)
        throw std::runtime_error("cannot open config file '" + o.config_path +
                                 "'");
    const std::map<std::string, std::function<void(const std::string&)>> set = {
        {"wavelet", [&](const std::string& v) { o.wavelet = v; }},
        {"omega0", [&](const std::string& v) { o.omega0 = config_double("omega0", v); }},
        {"grid", [&](const std::string& v) { o.grid = v; }},
        {"kind", [&](const std::string& v) { o.kind = v; }},
        {"scales", [&](const std::string& v) { o.scales = v; }},
        {"signal", [&](const std::string& v) { o.signal = v; }},
        {"f1", [&](const std::string& v) { o.f1 = config_double("f1", v); }},
        {"f2", [&](const std::string& v) { o.f2 = config_double("f2", v); }},
        {"flow", [&](const std::string& v) { o.flow = config_double("flow", v); }},
        {"fhigh", [&](const std::string& v) { o.fhigh = config_double("fhigh", v); }},
        {"tbreak", [&](const std::string& v) { o.tbreak = config_double("tbreak", v); }},
        {"out", [&](const std::string& v) { o.out = v; }},
        {"format", [&](const std::string& v) { o.format = v; }},
        {"peak-normalize",
         [&](const std::string& v) { o.peak_normalize = config_bool("peak-normalize", v); }},
        {"dc-offset",
         [&](const std::string& v) { o.dc_offset = config_double("dc-offset", v); }},
    };
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw wavepair::ParseError("config line " + std::to_string(lineno) +
                                       ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const auto it = set.find(key);
        const CLI::Option* opt = sub->get_option_no_throw("--" + key);
        if (it == set.end() || opt == nullptr)
            throw wavepair::ParseError("unknown config key '" + key +
                                       "' for this command");
        if (opt->count() > 0) continue;
        it->second(value);
        applied.insert(key);
    }
}

wavepair::TimeGrid parse_grid(const std::string& text) {
    std::vector<double> f;
    try {
        f = wavepair::detail::parse_row(text);
    } catch (const std::exception&) {
        throw wavepair::ParseError("--grid expects t_min,t_max,n");
    }
    if (f.size() != 3) throw wavepair::ParseError("--grid expects t_min,t_max,n");
    const double n = f[2];
    if (!(n > 0.0) || n != std::floor(n))
        throw wavepair::ParseError("grid sample count must be a positive integer");
    return wavepair::make_grid(f[0], f[1], static_cast<std::size_t>(n));
}

wavepair::WaveletSpec parse_wavelet(const Options& o) {
    const auto fam = wavepair::family_from_name(o.wavelet);
    if (!fam) throw wavepair::ParseError("unknown wavelet '" + o.wavelet + "'");
    wavepair::WaveletSpec w{*fam, o.omega0};
    wavepair::validate_spec(w);
    return w;
}

wavepair::KernelKind parse_kind(const std::string& text) {
    const auto k = wavepair::kernel_from_name(text);
    if (!k) throw wavepair::ParseError("unknown kernel kind '" + text + "'");
    return *k;
}

wavepair::RealSeries make_signal(const Options& o, const wavepair::TimeGrid& g) {
    if (o.signal == "twosine") return wavepair::gen_two_sine(g, o.f1, o.f2);
    if (o.signal == "freqbrk")
        return wavepair::gen_freq_breakdown(g, o.flow, o.fhigh, o.tbreak);
    throw wavepair::ParseError("unknown signal '" + o.signal + "'");
}

// Writes through either a file (when path is set) or stdout.
template <typename Fn>
void with_output(const std::string& path, bool binary, Fn&& fn) {
    if (path.empty()) {
        fn(std::cout);
        return;
    }
    std::ofstream os = wavepair::open_output(path, binary);
    fn(os);
    if (!os) throw std::runtime_error("write to '" + path + "' failed");
}

std::string with_plane_suffix(const std::string& path, const std::string& suffix) {
    const std::size_t dot = path.find_last_of('.');
    const std::size_t slash = path.find_last_of('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return path + suffix;
    return path.substr(0, dot) + suffix + path.substr(dot);
}

int run_sample(const Options& o) {
    const wavepair::TimeGrid g =
        parse_grid(o.grid.empty() ? "-8,8,2048" : o.grid);
    wavepair::RealSeries psi = wavepair::sample_wavelet(parse_wavelet(o), g);
    if (o.peak_normalize) {
        double peak = 0.0;
        for (double v : psi.v) peak = std::max(peak, std::abs(v));
        std::vector<double> v = psi.v;
        for (double& x : v) x /= peak;
        psi = wavepair::RealSeries{g, std::move(v)};
    }
    with_output(o.out, false, [&](std::ostream& os) { write_csv(os, psi); });
    return 0;
}

int run_hilbert(const Options& o) {
    const wavepair::TimeGrid g =
        parse_grid(o.grid.empty() ? "-8,8,2048" : o.grid);
    const wavepair::RealSeries h =
        wavepair::hilbert(wavepair::sample_wavelet(parse_wavelet(o), g));
    with_output(o.out, false, [&](std::ostream& os) { write_csv(os, h); });
    return 0;
}

int run_kernel(const Options& o) {
    const wavepair::TimeGrid g =
        parse_grid(o.grid.empty() ? "-8,8,2048" : o.grid);
    const wavepair::RealSeries psi =
        wavepair::sample_wavelet(parse_wavelet(o), g);
    const wavepair::KernelKind kind = parse_kind(o.kind);
    with_output(o.out, false, [&](std::ostream& os) {
        if (kind == wavepair::KernelKind::HartleyPlus ||
            kind == wavepair::KernelKind::HartleyMinus)
            write_csv(os, wavepair::hartley_like(psi, kind));
        else
            write_csv(os, wavepair::build_kernel(psi, kind));
    });
    return 0;
}

int run_metrics(const Options& o, bool format_given) {
    if (format_given && o.format != "csv")
        throw wavepair::ParseError("metrics --format supports csv only");
    const wavepair::TimeGrid g =
        parse_grid(o.grid.empty() ? "-8,8,2048" : o.grid);
    const wavepair::MetricsReport r =
        wavepair::metrics_report(wavepair::sample_wavelet(parse_wavelet(o), g));
    with_output(o.out, false, [&](std::ostream& os) {
        if (format_given || !o.out.empty())
            os << wavepair::metrics_csv_header() << '\n'
               << wavepair::to_csv_row(r) << '\n';
        else
            os << wavepair::to_key_value(r);
    });
    return 0;
}

int run_verify(const Options& o) {
    const wavepair::TimeGrid g =
        parse_grid(o.grid.empty() ? "-8,8,2048" : o.grid);
    const wavepair::WaveletSpec w = parse_wavelet(o);
    wavepair::VerifyOptions vo;
    vo.dc_offset = o.dc_offset;
    const std::vector<wavepair::CheckResult> checks =
        wavepair::verify_wavelet(w, g, vo);
    bool all_pass = true;
    std::cout << "# verify wavelet=" << o.wavelet
              << " grid=" << wavepair::detail::format_grid(g) << '\n';
    for (const auto& c : checks) {
        if (c.limit < 0.0) {
            std::printf("[info] %-32s value=%s\n", c.name.c_str(),
                        wavepair::detail::format_short(c.measured).c_str());
            continue;
        }
        all_pass = all_pass && c.pass;
        std::printf("[%s] %-32s measured=%-12s limit=%s\n",
                    c.pass ? "PASS" : "FAIL", c.name.c_str(),
                    wavepair::detail::format_short(c.measured).c_str(),
                    wavepair::detail::format_short(c.limit).c_str());
    }
    return all_pass ? 0 : 2;
}

int run_signal(const Options& o) {
    const wavepair::TimeGrid g = parse_grid(o.grid.empty() ? "0,1,1000" : o.grid);
    const wavepair::RealSeries f = make_signal(o, g);
    with_output(o.out, false, [&](std::ostream& os) { write_csv(os, f); });
    return 0;
}

int run_analyze(const Options& o) {
    if (o.format != "csv" && o.format != "pgm")
        throw wavepair::ParseError("unknown format '" + o.format + "'");
    const wavepair::TimeGrid g = parse_grid(o.grid.empty() ? "0,1,1000" : o.grid);
    const wavepair::RealSeries f = make_signal(o, g);
    std::optional<wavepair::KernelKind> kind;
    if (!o.kind.empty()) kind = parse_kind(o.kind);
    const wavepair::Scalogram s =
        wavepair::cwt(f, parse_wavelet(o), wavepair::parse_scale_range(o.scales),
                      kind);
    if (o.format == "pgm") {
        std::ofstream os = wavepair::open_output(o.out, true);
        write_pgm(os, s);
        if (!os) throw std::runtime_error("write to '" + o.out + "' failed");
        return 0;
    }
    using Plane = wavepair::ScalogramPlane;
    const auto write_plane = [&](const std::string& path, Plane p) {
        std::ofstream os = wavepair::open_output(path, false);
        write_csv(os, s, p);
        if (!os) throw std::runtime_error("write to '" + path + "' failed");
    };
    if (s.complex_kernel) {
        write_plane(with_plane_suffix(o.out, "_real"), Plane::Real);
        write_plane(with_plane_suffix(o.out, "_imag"), Plane::Imag);
        write_plane(with_plane_suffix(o.out, "_modulus"), Plane::Modulus);
        write_plane(with_plane_suffix(o.out, "_phase"), Plane::Phase);
    } else {
        write_plane(o.out, Plane::Real);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Hilbert-pair wavelet toolkit: samples catalog wavelets, builds "
        "quadrature kernels, verifies transform-pair identities, and runs "
        "continuous wavelet transforms."};
    app.require_subcommand(1);
    app.set_version_flag("--version", wavepair::version);

    Options o;
    const std::vector<std::string> wavelet_names{
        "morlet", "meyer", "mexican-hat", "gaussian1", "gaussian2", "gaussian3"};
    const std::vector<std::string> kind_names{"fourier", "analytic", "hartley+",
                                              "hartley-"};

    const auto add_config = [&](CLI::App* c) {
        c->add_option("--config", o.config_path,
                      "key=value config file; flags take precedence");
    };
    const auto add_wavelet_opts = [&](CLI::App* c) {
        c->add_option("--wavelet", o.wavelet, "catalog wavelet name (required)")
            ->check(CLI::IsMember(wavelet_names));
        c->add_option("--omega0", o.omega0,
                      "Morlet carrier frequency (rad/s), default 5");
        c->add_option("--grid", o.grid,
                      "sampling grid t_min,t_max,n (default -8,8,2048)");
        add_config(c);
    };
    const auto add_out = [&](CLI::App* c) {
        c->add_option("--out", o.out, "output path (stdout when omitted)");
    };

    CLI::App* sample = app.add_subcommand(
        "sample", "sample a catalog wavelet (unit energy, zero mean)");
    add_wavelet_opts(sample);
    add_out(sample);
    sample->add_flag("--peak-normalize", o.peak_normalize,
                     "rescale output so max |value| is 1 (for plotting)");

    CLI::App* hil = app.add_subcommand(
        "hilbert", "quadrature companion of a sampled wavelet");
    add_wavelet_opts(hil);
    add_out(hil);

    CLI::App* kernel = app.add_subcommand(
        "kernel", "build a transform kernel from a sampled wavelet");
    add_wavelet_opts(kernel);
    kernel->add_option("--kind", o.kind, "kernel kind (required)")
        ->check(CLI::IsMember(kind_names));
    add_out(kernel);

    CLI::App* metrics = app.add_subcommand(
        "metrics",
        "energy, admissibility, moments, and symmetry of a wavelet");
    add_wavelet_opts(metrics);
    add_out(metrics);
    CLI::Option* metrics_format_opt =
        metrics->add_option("--format", o.format, "output format (csv)")
            ->check(CLI::IsMember(std::vector<std::string>{"csv"}));

    CLI::App* verify = app.add_subcommand(
        "verify", "run the transform-pair verification suite on a wavelet");
    add_wavelet_opts(verify);
    verify->add_option("--dc-offset", o.dc_offset)->group("");

    CLI::App* signal =
        app.add_subcommand("signal", "generate an experiment test signal");
    signal->add_option("--signal", o.signal, "twosine or freqbrk")
        ->check(CLI::IsMember(std::vector<std::string>{"twosine", "freqbrk"}));
    signal->add_option("--grid", o.grid,
                       "sampling grid t_min,t_max,n (default 0,1,1000)");
    signal->add_option("--f1", o.f1, "first two-sine frequency, Hz");
    signal->add_option("--f2", o.f2, "second two-sine frequency, Hz");
    signal->add_option("--flow", o.flow, "breakdown low frequency, Hz");
    signal->add_option("--fhigh", o.fhigh, "breakdown high frequency, Hz");
    signal->add_option("--tbreak", o.tbreak, "breakdown switch time, s");
    add_config(signal);
    add_out(signal);

    CLI::App* analyze = app.add_subcommand(
        "analyze", "continuous wavelet transform of a generated signal");
    analyze->add_option("--wavelet", o.wavelet, "catalog wavelet name (required)")
        ->check(CLI::IsMember(wavelet_names));
    analyze->add_option("--omega0", o.omega0,
                        "Morlet carrier frequency (rad/s), default 5");
    analyze->add_option("--kind", o.kind,
                        "kernel kind (plain real wavelet when omitted)")
        ->check(CLI::IsMember(kind_names));
    analyze->add_option("--scales", o.scales,
                        "scale range a1..a2[:step] (required)");
    analyze->add_option("--signal", o.signal, "twosine or freqbrk")
        ->check(CLI::IsMember(std::vector<std::string>{"twosine", "freqbrk"}));
    analyze->add_option("--grid", o.grid,
                        "sampling grid t_min,t_max,n (default 0,1,1000)");
    analyze->add_option("--f1", o.f1, "first two-sine frequency, Hz");
    analyze->add_option("--f2", o.f2, "second two-sine frequency, Hz");
    analyze->add_option("--flow", o.flow, "breakdown low frequency, Hz");
    analyze->add_option("--fhigh", o.fhigh, "breakdown high frequency, Hz");
    analyze->add_option("--tbreak", o.tbreak, "breakdown switch time, s");
    analyze->add_option("--out", o.out, "output path (required)");
    analyze->add_option("--format", o.format, "csv or pgm")
        ->check(CLI::IsMember(std::vector<std::string>{"csv", "pgm"}));
    add_config(analyze);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        CLI::App* sub = nullptr;
        for (CLI::App* c : {sample, hil, kernel, metrics, verify, signal, analyze})
            if (c->parsed()) sub = c;
        std::set<std::string> from_config;
        if (!o.config_path.empty()) apply_config(sub, o, from_config);
        const auto require_value = [](const char* flag, const std::string& v) {
            if (v.empty())
                throw wavepair::ParseError(std::string("--") + flag +
                                           " is required (flag or config)");
        };
        if (sub != signal) require_value("wavelet", o.wavelet);
        if (sub == kernel) require_value("kind", o.kind);
        if (sub == analyze) {
            require_value("scales", o.scales);
            require_value("out", o.out);
        }

        if (sample->parsed()) return run_sample(o);
        if (hil->parsed()) return run_hilbert(o);
        if (kernel->parsed()) return run_kernel(o);
        if (metrics->parsed())
            return run_metrics(o, metrics_format_opt->count() > 0 ||
                                      from_config.count("format") > 0);
        if (verify->parsed()) return run_verify(o);
        if (signal->parsed()) return run_signal(o);
        if (analyze->parsed()) return run_analyze(o);
    } catch (const wavepair::NotAdmissible& e) {
        std::cerr << "NotAdmissible: " << e.what() << '\n';
        return 2;
    } catch (const wavepair::NonNegligibleImaginaryResidue& e) {
        std::cerr << "NonNegligibleImaginaryResidue: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
