// qridge command-line tool: verification sweeps, training runs and
// explainability reports for ridge-decomposed circuit models.
//
// Exit codes: 0 = all checks passed, 1 = checks ran and failed,
// 2 = input error.

#include "qridge/explain.hpp"
#include "qridge/random.hpp"
#include "qridge/serialize.hpp"
#include "qridge/train.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <bit>
#include <charconv>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

using nlohmann::json;
using namespace qridge;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInputError = 2;

std::vector<double> parse_real_list(const std::string& csv) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        std::size_t comma = csv.find(',', pos);
        if (comma == std::string::npos) comma = csv.size();
        const char* b = csv.data() + pos;
        const char* e = csv.data() + comma;
        while (b < e && *b == ' ') ++b;
        while (e > b && *(e - 1) == ' ') --e;
        double v = 0.0;
        auto [p, ec] = std::from_chars(b, e, v);
        if (ec != std::errc{} || p != e)
            throw std::invalid_argument("cannot parse number in list: '" + csv + "'");
        out.push_back(v);
        pos = comma + 1;
    }
    return out;
}

void emit(const json& j, const std::string& out_path) {
    const std::string text = j.dump(2) + "\n";
    if (!out_path.empty()) atomic_write_file(out_path, text);
    else std::cout << text;
}

struct VerifyArgs {
    std::string circuit_path;
    int trials = 100;
    std::uint64_t seed = 12345;
    double tol = 1e-10;
    std::string out;
};

int cmd_verify(const VerifyArgs& a) {
    const ParamCircuit circuit = circuit_from_json(json::parse(slurp_file(a.circuit_path)));
    if (a.trials < 1) throw std::invalid_argument("--trials must be >= 1");
    Rng rng(a.seed);
    json trials = json::array();
    int failures = 0;
    double max_diff = 0.0;
    for (int t = 0; t < a.trials; ++t) {
        const auto theta = random_theta(rng, static_cast<std::size_t>(circuit.n_params));
        const StateVector x = random_state(rng, circuit.n_qubits);
        const MeasurementSelector sel =
            (t % 2 == 0) ? first_qubit_zero_selector(circuit.n_qubits)
                         : random_selector(rng, std::size_t{1} << circuit.n_qubits);
        const EquivalenceReport rep = verify_equivalence(circuit, theta, sel, x, a.tol);
        if (!rep.pass) ++failures;
        max_diff = std::max(max_diff, rep.abs_diff);
        trials.push_back(equivalence_report_to_json(rep));
    }
    const bool all_pass = failures == 0;
    json report{{"n_qubits", circuit.n_qubits}, {"trials", a.trials},
                {"seed", a.seed},               {"tol", a.tol},
                {"failures", failures},         {"max_abs_diff", max_diff},
                {"all_pass", all_pass},         {"trial_reports", std::move(trials)}};
    emit(report, a.out);
    std::fprintf(stderr, "verify: %d/%d trials passed, max |direct - ridge| = %.3e (tol %.1e)\n",
                 a.trials - failures, a.trials, max_diff, a.tol);
    return all_pass ? kExitPass : kExitFail;
}

struct TrainArgs {
    std::string kind;
    std::string model_path;
    std::string data_path;
    std::string config_path;
    std::string out = "trained_model.json";
    std::string history_path = "history.csv";
    std::uint64_t seed = 0;
    bool seed_set = false;
};

std::string history_csv(const LossHistory& h) {
    std::string out = "epoch,mse\n";
    char buf[48];
    for (std::size_t i = 0; i < h.size(); ++i) {
        auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), h[i]);
        (void)ec;
        out += std::to_string(i + 1) + "," + std::string(buf, p) + "\n";
    }
    return out;
}

int cmd_train(const TrainArgs& a) {
    TrainConfig cfg;
    if (!a.config_path.empty()) cfg = train_config_from_json(json::parse(slurp_file(a.config_path)));
    if (a.seed_set) cfg.seed = a.seed;
    Dataset data = dataset_from_csv_text(slurp_file(a.data_path));
    const json model_json = json::parse(slurp_file(a.model_path));

    json summary{{"kind", a.kind}, {"epochs", cfg.epochs}, {"seed", cfg.seed}};
    json trained_json;
    LossHistory history;
    double initial_loss = 0.0;

    // Circuit and block outputs are probabilities, so regression targets are
    // mapped into [0.05, 0.95] and the transform is reported.
    auto rescale_targets = [&]() {
        const TargetTransform t = fit_target_transform(data.targets, 0.05, 0.95);
        data = apply_target_transform(data, t);
        summary["target_transform"] = json{{"scale", t.scale}, {"offset", t.offset}};
    };

    if (a.kind == "circuit") {
        CircuitModel m;
        if (sniff_model_kind(model_json) == ModelFileKind::circuit_model) {
            m = circuit_model_from_json(model_json);
        } else {
            m.circuit = circuit_from_json(model_json);
            Rng rng(cfg.seed);
            m.theta = random_theta(rng, static_cast<std::size_t>(m.circuit.n_params));
            m.selector = first_qubit_zero_selector(m.circuit.n_qubits);
        }
        rescale_targets();
        auto r = train_circuit(std::move(m), data, cfg);
        trained_json = circuit_model_to_json(r.model);
        history = std::move(r.history);
        initial_loss = r.initial_loss;
    } else if (a.kind == "block") {
        BlockRidgeModel m = block_model_from_json(model_json);
        if (!m.parameterized())
            throw std::invalid_argument("train: block model has no block_params to train");
        rescale_targets();
        auto r = train_block(std::move(m), data, cfg);
        trained_json = block_model_to_json(r.model);
        history = std::move(r.history);
        initial_loss = r.initial_loss;
    } else if (a.kind == "fourier") {
        FourierRidgeModel m = fourier_model_from_json(model_json);
        auto r = train_fourier(std::move(m), data, cfg);
        trained_json = fourier_model_to_json(r.model);
        history = std::move(r.history);
        initial_loss = r.initial_loss;
    } else if (a.kind == "xnn") {
        XnnModel m = xnn_model_from_json(model_json);
        auto r = train_xnn(std::move(m), data, cfg);
        trained_json = xnn_model_to_json(r.model);
        history = std::move(r.history);
        initial_loss = r.initial_loss;
    } else {
        throw std::invalid_argument("train: unknown kind '" + a.kind +
                                    "' (expected circuit|block|fourier|xnn)");
    }

    atomic_write_file(a.out, trained_json.dump(2) + "\n");
    atomic_write_file(a.history_path, history_csv(history));
    summary["initial_loss"] = initial_loss;
    summary["final_loss"] = history.back();
    summary["model_out"] = a.out;
    summary["history_out"] = a.history_path;
    std::cout << summary.dump(2) << "\n";
    return kExitPass;
}

struct ExplainArgs {
    std::string model_path;
    std::string kind = "auto";
    std::string input_csv;
    std::string input_id;
    double fd_step = 1e-5;
    std::string out;
};

int cmd_explain(const ExplainArgs& a) {
    const json model_json = json::parse(slurp_file(a.model_path));
    const std::vector<double> input = parse_real_list(a.input_csv);
    ModelFileKind kind;
    if (a.kind == "auto") {
        kind = sniff_model_kind(model_json);
    } else if (a.kind == "circuit") {
        kind = ModelFileKind::circuit_model;
    } else if (a.kind == "block") {
        kind = ModelFileKind::block;
    } else if (a.kind == "fourier") {
        kind = ModelFileKind::fourier;
    } else if (a.kind == "xnn") {
        kind = ModelFileKind::xnn;
    } else {
        throw std::invalid_argument("explain: unknown kind '" + a.kind + "'");
    }

    ExplainReport rep;
    switch (kind) {
        case ModelFileKind::circuit:
            throw std::invalid_argument(
                "explain: circuit file has no angles; supply a trained circuit model with theta");
        case ModelFileKind::circuit_model:
            rep = explain_circuit(circuit_model_from_json(model_json), input, a.fd_step, a.input_id);
            break;
        case ModelFileKind::block:
            rep = explain_block(block_model_from_json(model_json), input, a.fd_step, a.input_id);
            break;
        case ModelFileKind::fourier:
            rep = explain_fourier(fourier_model_from_json(model_json), input, a.fd_step, a.input_id);
            break;
        case ModelFileKind::xnn:
            rep = explain_xnn(xnn_model_from_json(model_json), input, a.fd_step, a.input_id);
            break;
    }
    emit(explain_report_to_json(rep), a.out);
    return kExitPass;
}

struct LocalityArgs {
    std::string model_path;
    bool sweep = true;
    int block = -1;
    double delta_scale = 0.1;
    std::string input_csv;
    std::uint64_t seed = 12345;
    bool corrupt = false;
    std::string out;
};

int cmd_locality(const LocalityArgs& a) {
    const BlockRidgeModel model = block_model_from_json(json::parse(slurp_file(a.model_path)));
    if (!model.parameterized())
        throw std::invalid_argument("locality: block model has no block_params");
    const int n_qubits = std::countr_zero(model.dimension);

    StateVector x;
    if (!a.input_csv.empty()) {
        x = encode_input(parse_real_list(a.input_csv), n_qubits).state;
    } else {
        Rng rng(a.seed);
        x = random_state(rng, n_qubits);
    }

    std::vector<std::size_t> blocks;
    if (a.block >= 0) {
        if (static_cast<std::size_t>(a.block) >= model.n_blocks())
            throw std::invalid_argument("locality: --block out of range");
        blocks.push_back(static_cast<std::size_t>(a.block));
    } else {
        for (std::size_t k = 0; k < model.n_blocks(); ++k) blocks.push_back(k);
    }
    if (!a.sweep && blocks.size() > 1) blocks.resize(1);

    json sweep = json::array();
    bool all_pass = true;
    for (std::size_t k : blocks) {
        std::vector<double> delta(model.block_params[k].size(), a.delta_scale);
        LocalityReport rep;
        if (a.corrupt) {
            // Negative control: emulate a parameter shared between block k
            // and its neighbour, which must break the locality check.
            const auto before = block_term_contributions(model, x);
            BlockRidgeModel corrupted = perturb_block(model, k, delta);
            const std::size_t neighbour = (k + 1) % model.n_blocks();
            corrupted = perturb_block(corrupted, neighbour, delta);
            rep = compare_contributions(k, delta, before, block_term_contributions(corrupted, x));
        } else {
            rep = locality_experiment(model, x, k, delta);
        }
        all_pass = all_pass && rep.pass;
        sweep.push_back(locality_report_to_json(rep));
    }
    json report{{"n_blocks", model.n_blocks()},
                {"dimension", model.dimension},
                {"delta_scale", a.delta_scale},
                {"corrupt", a.corrupt},
                {"all_pass", all_pass},
                {"sweep", std::move(sweep)}};
    emit(report, a.out);
    std::fprintf(stderr, "locality: %s over %zu block(s)\n", all_pass ? "pass" : "FAIL",
                 blocks.size());
    return all_pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ridge-function decomposition of variational circuit models"};
    app.require_subcommand(1);

    VerifyArgs va;
    auto* verify = app.add_subcommand(
        "verify", "check direct simulation against the row decomposition on random trials");
    verify->add_option("--circuit", va.circuit_path, "circuit JSON file")->required();
    verify->add_option("--trials", va.trials, "number of random trials");
    verify->add_option("--seed", va.seed, "RNG seed");
    verify->add_option("--tol", va.tol, "pass tolerance on |direct - ridge|");
    verify->add_option("--out", va.out, "write the JSON report here instead of stdout");

    TrainArgs ta;
    auto* train = app.add_subcommand("train", "full-batch gradient descent on a model file");
    train->add_option("--kind", ta.kind, "circuit|block|fourier|xnn")->required();
    train->add_option("--model", ta.model_path, "model (or circuit) JSON file")->required();
    train->add_option("--data", ta.data_path, "dataset CSV (x0,...,y)")->required();
    train->add_option("--config", ta.config_path, "train config JSON");
    train->add_option("--out", ta.out, "trained model output path");
    train->add_option("--history", ta.history_path, "loss history CSV output path");
    train->add_option("--seed", ta.seed, "override the config seed")->each([&](const std::string&) {
        ta.seed_set = true;
    });

    ExplainArgs ea;
    auto* explain = app.add_subcommand(
        "explain", "per-term contributions and parameter sensitivities for one input");
    explain->add_option("--model", ea.model_path, "model JSON file")->required();
    explain->add_option("--kind", ea.kind, "circuit|block|fourier|xnn (default: sniff)");
    explain->add_option("--input", ea.input_csv, "comma-separated input row")->required();
    explain->add_option("--id", ea.input_id, "input identifier recorded in the report");
    explain->add_option("--fd-step", ea.fd_step, "finite-difference step");
    explain->add_option("--out", ea.out, "write the JSON report here instead of stdout");

    LocalityArgs la;
    auto* locality = app.add_subcommand(
        "locality", "perturb single blocks and check every other term is untouched");
    locality->add_option("--model", la.model_path, "parameterized block model JSON")->required();
    locality->add_flag("--sweep,!--no-sweep", la.sweep, "sweep every block (default on)");
    locality->add_option("--block", la.block, "restrict to one block index");
    locality->add_option("--delta-scale", la.delta_scale, "perturbation applied to each parameter");
    locality->add_option("--input", la.input_csv, "comma-separated input row (default: random)");
    locality->add_option("--seed", la.seed, "RNG seed for the default input");
    locality->add_flag("--corrupt", la.corrupt,
                       "negative control: share the perturbation with the next block");
    locality->add_option("--out", la.out, "write the JSON report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    try {
        if (verify->parsed()) return cmd_verify(va);
        if (train->parsed()) return cmd_train(ta);
        if (explain->parsed()) return cmd_explain(ea);
        if (locality->parsed()) return cmd_locality(la);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitInputError;
}
