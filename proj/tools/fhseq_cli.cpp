// Command line front end for the frequency-hopping sequence library.
//
// Exit codes: 0 on success (and on passing verifications), 1 when a
// verification experiment fails its bound, 2 on validation or usage errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fhseq/bounds.hpp"
#include "fhseq/codec.hpp"
#include "fhseq/correlation.hpp"
#include "fhseq/empirics.hpp"
#include "fhseq/gv.hpp"
#include "fhseq/io.hpp"

namespace {

struct CliState {
    int exit_code = 0;
};

std::string witness_text(const fhseq::FhSequenceSet& family,
                         const fhseq::CorrelationWitness& w) {
    std::string out = (w.y_index != w.x_index ? "sequences " : "sequence ") +
                      std::to_string(w.x_index);
    if (w.y_index != w.x_index) out += " and " + std::to_string(w.y_index);
    out += " at delay " + std::to_string(w.delay);
    out += " [(" + family.members()[w.x_index].to_string() + ") vs (" +
           family.members()[w.y_index].to_string() + ")]";
    return out;
}

void print_profile(const fhseq::FhSequenceSet& family, bool machine,
                   std::ostream& out) {
    const fhseq::CorrelationProfile p = fhseq::set_profile(family);
    const fhseq::CodeParams params{family.length(), family.size(),
                                   p.max_correlation, family.alphabet_size()};
    if (machine) {
        out << "n=" << params.n << " M=" << params.family_size
            << " lambda=" << params.max_correlation << " q=" << params.q;
        if (p.auto_max) {
            out << " Ha=" << *p.auto_max << " Ha_x=" << p.auto_witness->x_index
                << " Ha_tau=" << p.auto_witness->delay;
        }
        if (p.cross_max) {
            out << " Hc=" << *p.cross_max << " Hc_x=" << p.cross_witness->x_index
                << " Hc_y=" << p.cross_witness->y_index
                << " Hc_tau=" << p.cross_witness->delay;
        }
        out << "\n";
        return;
    }
    out << "family parameters (n,M,lambda;q) = " << params.to_string() << "\n";
    if (p.auto_max) {
        out << "max autocorrelation  H_a = " << *p.auto_max << "   at "
            << witness_text(family, *p.auto_witness) << "\n";
    } else {
        out << "max autocorrelation  H_a undefined (length 1: no nonzero delay)\n";
    }
    if (p.cross_max) {
        out << "max crosscorrelation H_c = " << *p.cross_max << "   at "
            << witness_text(family, *p.cross_witness) << "\n";
    } else {
        out << "max crosscorrelation H_c undefined (single sequence)\n";
    }
    out << "max correlation      H_m = " << p.max_correlation
        << "   (crosscorrelation scanned over all delays including 0)\n";
}

void emit_report(const fhseq::TrialReport& report, bool machine, CliState& state) {
    std::cout << report.to_text();
    if (machine) std::cout << report.machine_line() << "\n";
    state.exit_code = report.pass ? 0 : 1;
}

void add_construct(CLI::App& app, CliState& state) {
    auto* cmd = app.add_subcommand(
        "construct",
        "Greedily build a hopping cyclic code with a target minimum distance");
    auto n = std::make_shared<std::size_t>(0);
    auto q = std::make_shared<std::uint32_t>(0);
    auto d = std::make_shared<unsigned>(0);
    auto epsilon = std::make_shared<double>(0.0);
    auto policy = std::make_shared<std::string>("exhaustive");
    auto samples = std::make_shared<std::uint64_t>(0);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto cap = std::make_shared<std::uint64_t>(1ull << 28);
    auto threshold = std::make_shared<double>(0.0);
    auto out_path = std::make_shared<std::string>();
    auto machine = std::make_shared<bool>(false);

    cmd->add_option("--n", *n, "sequence length")->required();
    cmd->add_option("--q", *q, "alphabet size")->required();
    cmd->add_option("--d", *d, "target minimum distance (2 <= d <= n)")->required();
    cmd->add_option("--epsilon", *epsilon, "candidate-filter slack in (0, 1 - 1/q)")
        ->required();
    cmd->add_option("--policy", *policy, "candidate policy")
        ->check(CLI::IsMember({"exhaustive", "sampled"}));
    cmd->add_option("--samples", *samples, "words to draw under the sampled policy");
    auto* seed_opt = cmd->add_option("--seed", *seed, "RNG seed (required when sampled)");
    cmd->add_option("--cap", *cap, "exhaustive enumeration cap on q^n");
    auto* thr_opt = cmd->add_option("--threshold-override", *threshold,
                                    "explicit candidate filter threshold");
    cmd->add_option("--out", *out_path, "write the code here instead of stdout");
    cmd->add_flag("--machine", *machine, "machine-readable key=value summary");

    cmd->callback([=, &state]() {
        fhseq::GVConfig cfg;
        cfg.n = *n;
        cfg.q = *q;
        cfg.d = *d;
        cfg.epsilon = *epsilon;
        cfg.enumeration_cap = *cap;
        if (*policy == "sampled") {
            cfg.policy = fhseq::CandidatePolicy::sampled;
            if (seed_opt->count() == 0) {
                throw std::invalid_argument(
                    "sampled construction is randomized: an explicit --seed is required");
            }
            if (*samples == 0) {
                throw std::invalid_argument(
                    "sampled construction needs --samples >= 1");
            }
            cfg.sample_count = *samples;
            cfg.seed = *seed;
        }
        if (thr_opt->count() > 0) cfg.threshold_override = *threshold;

        const fhseq::GVResult res = fhseq::gv_greedy(cfg);
        const bool to_stdout = out_path->empty();
        if (to_stdout) {
            fhseq::write_word_set(std::cout, cfg.n, cfg.q, res.code.codewords());
        } else {
            fhseq::write_word_set_file(*out_path, cfg.n, cfg.q, res.code.codewords());
        }

        std::ostream& info = to_stdout ? std::cerr : std::cout;
        if (*machine) {
            info << "n=" << cfg.n << " q=" << cfg.q << " d=" << cfg.d
                 << " size=" << res.code.size() << " orbits=" << res.orbits_added
                 << " min_distance="
                 << (res.achieved_min_distance ? std::to_string(*res.achieved_min_distance)
                                               : std::string("none"))
                 << " candidates=" << res.candidates_seen
                 << " exhausted=" << (res.candidates_exhausted ? 1 : 0)
                 << " threshold=" << cfg.filter_threshold()
                 << " guarantee=" << res.guaranteed_size.decimal
                 << " guarantee_applicable=" << (res.guarantee_applicable ? 1 : 0)
                 << "\n";
        } else {
            info << "constructed hopping cyclic code: n=" << cfg.n << " q=" << cfg.q
                 << " |C|=" << res.code.size() << " (" << res.orbits_added
                 << " orbits)\n";
            info << "achieved min distance: "
                 << (res.achieved_min_distance ? std::to_string(*res.achieved_min_distance)
                                               : std::string("(fewer than 2 codewords)"))
                 << " (target " << cfg.d << ")\n";
            info << "candidate filter threshold: " << cfg.filter_threshold()
                 << (res.candidates_exhausted ? " (candidates exhausted)" : "") << "\n";
            info << "formula guarantee on n*M: " << res.guaranteed_size.decimal
                 << (res.guaranteed_size.vacuous ? " (vacuous at this scale)" : "")
                 << (res.guarantee_applicable ? ", applicable" : ", not applicable")
                 << "\n";
        }
    });
    (void)state;
}

void add_analyze(CLI::App& app) {
    auto* cmd = app.add_subcommand(
        "analyze",
        "Report (n,M,lambda;q) and the correlation profile of a sequence set; "
        "crosscorrelation is scanned over all delays including 0");
    auto path = std::make_shared<std::string>();
    auto machine = std::make_shared<bool>(false);
    cmd->add_option("input", *path, "sequence set file")->required();
    cmd->add_flag("--machine", *machine, "machine-readable key=value output");
    cmd->callback([=]() {
        const fhseq::WordFile file = fhseq::read_word_set_file(*path);
        const fhseq::FhSequenceSet family(file.words);
        print_profile(family, *machine, std::cout);
    });
}

void add_convert(CLI::App& app) {
    auto* cmd = app.add_subcommand(
        "convert", "Convert between sequence sets and hopping cyclic codes");
    auto path = std::make_shared<std::string>();
    auto out_path = std::make_shared<std::string>();
    auto to_code = std::make_shared<bool>(false);
    auto to_fh = std::make_shared<bool>(false);
    cmd->add_option("input", *path, "input word set file")->required();
    cmd->add_flag("--to-code", *to_code, "expand a sequence set into its code");
    cmd->add_flag("--to-fh", *to_fh, "collapse a code to orbit representatives");
    cmd->add_option("--out", *out_path, "write the result here instead of stdout");
    cmd->callback([=]() {
        if (*to_code == *to_fh) {
            throw std::invalid_argument(
                "convert: pass exactly one of --to-code or --to-fh");
        }
        const fhseq::WordFile file = fhseq::read_word_set_file(*path);
        std::vector<fhseq::Sequence> result;
        std::size_t n = file.n;
        std::uint32_t q = file.q;
        std::string summary;
        if (*to_code) {
            const fhseq::FhSequenceSet family(file.words);
            const fhseq::HoppingCyclicCode code = fhseq::fh_to_code(family);
            summary = "sequence set with M=" + std::to_string(family.size()) +
                      " -> hopping cyclic code with |C|=" + std::to_string(code.size());
            result = code.codewords();
        } else {
            const fhseq::HoppingCyclicCode code{file.words.empty()
                                                    ? fhseq::HoppingCyclicCode(n, q)
                                                    : fhseq::HoppingCyclicCode(file.words)};
            const fhseq::FhSequenceSet family = fhseq::code_to_fh(code);
            summary = "hopping cyclic code with |C|=" + std::to_string(code.size()) +
                      " -> sequence set with M=" + std::to_string(family.size());
            result = family.members();
        }
        if (out_path->empty()) {
            fhseq::write_word_set(std::cout, n, q, result);
            std::cerr << summary << "\n";
        } else {
            fhseq::write_word_set_file(*out_path, n, q, result);
            std::cout << summary << "\n";
        }
    });
}

void add_curve(CLI::App& app) {
    auto* cmd = app.add_subcommand(
        "curve", "Emit asymptotic bound curves over a delta grid as CSV");
    auto q = std::make_shared<std::uint32_t>(0);
    auto start = std::make_shared<double>(0.0);
    auto stop = std::make_shared<double>(1.0);
    auto step = std::make_shared<double>(0.01);
    auto epsilon = std::make_shared<double>(0.0);
    auto out_path = std::make_shared<std::string>();
    cmd->add_option("--q", *q, "alphabet size")->required();
    cmd->add_option("--start", *start, "grid start (default 0)");
    cmd->add_option("--stop", *stop, "grid stop (default 1)");
    cmd->add_option("--step", *step, "grid step (default 0.01)");
    cmd->add_option("--epsilon", *epsilon, "slack for the gv_valid column");
    cmd->add_option("--out", *out_path, "write CSV here instead of stdout");
    cmd->callback([=]() {
        fhseq::CurveSpec spec;
        spec.q = *q;
        spec.start = *start;
        spec.stop = *stop;
        spec.step = *step;
        if (out_path->empty()) {
            fhseq::write_curve_csv(std::cout, spec, *epsilon);
        } else {
            std::ofstream out(*out_path);
            if (!out) throw std::runtime_error(*out_path + ": cannot open for writing");
            fhseq::write_curve_csv(out, spec, *epsilon);
        }
    });
}

void add_verify(CLI::App& app, CliState& state) {
    auto* verify = app.add_subcommand(
        "verify", "Empirical validation experiments (exit 1 when a bound fails)");
    verify->require_subcommand(1);

    {
        auto* cmd = verify->add_subcommand(
            "mc-lemma4",
            "Monte Carlo tail bound on small cyclic self-distance, any length >= 9");
        auto n = std::make_shared<std::size_t>(0);
        auto q = std::make_shared<std::uint32_t>(0);
        auto epsilon = std::make_shared<double>(0.0);
        auto trials = std::make_shared<std::uint64_t>(0);
        auto seed = std::make_shared<std::uint64_t>(0);
        auto machine = std::make_shared<bool>(false);
        cmd->add_option("--n", *n, "sequence length (>= 9)")->required();
        cmd->add_option("--q", *q, "alphabet size")->required();
        cmd->add_option("--epsilon", *epsilon, "slack in (0, 1 - 1/q)")->required();
        cmd->add_option("--trials", *trials, "Monte Carlo trials")->required();
        cmd->add_option("--seed", *seed, "RNG seed (randomized: required)")->required();
        cmd->add_flag("--machine", *machine, "append a machine-readable line");
        cmd->callback([=, &state]() {
            emit_report(fhseq::mc_small_distance_fraction(
                            *n, *q, *epsilon, *trials, *seed,
                            fhseq::ConcentrationVariant::any_length),
                        *machine, state);
        });
    }
    {
        auto* cmd = verify->add_subcommand(
            "mc-lemma3",
            "Monte Carlo tail bound on small cyclic self-distance, prime length");
        auto n = std::make_shared<std::size_t>(0);
        auto q = std::make_shared<std::uint32_t>(0);
        auto epsilon = std::make_shared<double>(0.0);
        auto trials = std::make_shared<std::uint64_t>(0);
        auto seed = std::make_shared<std::uint64_t>(0);
        auto form = std::make_shared<std::string>("stated");
        auto machine = std::make_shared<bool>(false);
        cmd->add_option("--n", *n, "prime sequence length (>= 3)")->required();
        cmd->add_option("--q", *q, "alphabet size")->required();
        cmd->add_option("--epsilon", *epsilon, "slack in (0, 1 - 1/q)")->required();
        cmd->add_option("--trials", *trials, "Monte Carlo trials")->required();
        cmd->add_option("--seed", *seed, "RNG seed (randomized: required)")->required();
        cmd->add_option("--threshold-form", *form,
                        "threshold factor: stated (n-2) or alternative (n-1)")
            ->check(CLI::IsMember({"stated", "alternative"}));
        cmd->add_flag("--machine", *machine, "append a machine-readable line");
        cmd->callback([=, &state]() {
            emit_report(fhseq::mc_small_distance_fraction(
                            *n, *q, *epsilon, *trials, *seed,
                            fhseq::ConcentrationVariant::prime_length,
                            *form == "stated" ? fhseq::PrimeThresholdForm::stated
                                              : fhseq::PrimeThresholdForm::alternative),
                        *machine, state);
        });
    }
    {
        auto* cmd = verify->add_subcommand(
            "count-lemma",
            "Exhaustive count of words with small cyclic self-distance vs the "
            "counting bound");
        auto n = std::make_shared<std::size_t>(0);
        auto q = std::make_shared<std::uint32_t>(0);
        auto d = std::make_shared<unsigned>(0);
        auto cap = std::make_shared<std::uint64_t>(1ull << 28);
        auto machine = std::make_shared<bool>(false);
        cmd->add_option("--n", *n, "sequence length")->required();
        cmd->add_option("--q", *q, "alphabet size")->required();
        cmd->add_option("--d", *d, "distance threshold (count d(u) < d)")->required();
        cmd->add_option("--cap", *cap, "enumeration cap on q^n");
        cmd->add_flag("--machine", *machine, "append a machine-readable line");
        cmd->callback([=, &state]() {
            emit_report(fhseq::exhaustive_small_distance_count(*n, *q, *d, *cap),
                        *machine, state);
        });
    }
    {
        auto* cmd = verify->add_subcommand(
            "oracle-greedy",
            "Check the fast greedy acceptance rule against the all-rotations oracle");
        auto n = std::make_shared<std::size_t>(0);
        auto q = std::make_shared<std::uint32_t>(0);
        auto d = std::make_shared<unsigned>(0);
        auto cap = std::make_shared<std::uint64_t>(1ull << 28);
        auto machine = std::make_shared<bool>(false);
        cmd->add_option("--n", *n, "sequence length")->required();
        cmd->add_option("--q", *q, "alphabet size")->required();
        cmd->add_option("--d", *d, "target minimum distance")->required();
        cmd->add_option("--cap", *cap, "enumeration cap on q^n");
        cmd->add_flag("--machine", *machine, "append a machine-readable line");
        cmd->callback([=, &state]() {
            emit_report(fhseq::oracle_greedy_equivalence(*n, *q, *d, *cap), *machine,
                        state);
        });
    }
    {
        auto* cmd = verify->add_subcommand(
            "negligibility",
            "Check the counting guarantee's subtracted term is asymptotically "
            "negligible on a delta grid");
        auto q = std::make_shared<std::uint32_t>(0);
        auto start = std::make_shared<double>(-1.0);
        auto stop = std::make_shared<double>(-1.0);
        auto step = std::make_shared<double>(-1.0);
        auto machine = std::make_shared<bool>(false);
        cmd->add_option("--q", *q, "alphabet size (>= 8)")->required();
        auto* start_opt = cmd->add_option("--start", *start, "grid start");
        auto* stop_opt = cmd->add_option("--stop", *stop, "grid stop");
        auto* step_opt = cmd->add_option("--step", *step, "grid step");
        cmd->add_flag("--machine", *machine, "append a machine-readable line");
        cmd->callback([=, &state]() {
            if (*q < 8) {
                throw std::invalid_argument(
                    "negligibility: needs q > e^2, i.e. q >= 8, got q = " +
                    std::to_string(*q));
            }
            fhseq::DeltaGrid grid = fhseq::default_negligibility_grid(*q);
            if (start_opt->count()) grid.start = *start;
            if (stop_opt->count()) grid.stop = *stop;
            if (step_opt->count()) grid.step = *step;
            emit_report(fhseq::asymptotic_negligibility_check(*q, grid), *machine,
                        state);
        });
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "fhseq: frequency-hopping sequence sets, hopping cyclic codes, and the "
        "bounds connecting them"};
    app.require_subcommand(1);

    CliState state;
    add_construct(app, state);
    add_analyze(app);
    add_convert(app);
    add_curve(app);
    add_verify(app, state);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return state.exit_code;
}
