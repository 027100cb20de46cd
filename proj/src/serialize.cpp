#include "qridge/serialize.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>

namespace qridge {

using nlohmann::json;

namespace {

void require_object(const json& j, const char* what) {
    if (!j.is_object()) throw std::invalid_argument(std::string(what) + ": expected a JSON object");
}

// Strict field check: every present key must be known, every required key
// must be present.
void check_fields(const json& j, const char* what, const std::set<std::string>& required,
                  const std::set<std::string>& optional = {}) {
    require_object(j, what);
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (!required.count(key) && !optional.count(key))
            throw std::invalid_argument(std::string(what) + ": unknown field '" + key + "'");
    }
    for (const auto& key : required)
        if (!j.contains(key))
            throw std::invalid_argument(std::string(what) + ": missing field '" + key + "'");
}

int get_int(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw std::invalid_argument(std::string(what) + ": expected an integer");
    return j.get<int>();
}

double get_num(const json& j, const char* what) {
    if (!j.is_number()) throw std::invalid_argument(std::string(what) + ": expected a number");
    return j.get<double>();
}

std::vector<double> get_real_vector(const json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array");
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& v : j) out.push_back(get_num(v, what));
    return out;
}

}  // namespace

json circuit_to_json(const ParamCircuit& c) {
    json gates = json::array();
    for (const auto& g : c.gates) {
        json jg{{"kind", gate_name(g.kind)}, {"targets", g.targets}};
        if (g.param_index) jg["param_index"] = *g.param_index;
        gates.push_back(std::move(jg));
    }
    return json{{"n_qubits", c.n_qubits}, {"n_params", c.n_params}, {"gates", std::move(gates)}};
}

ParamCircuit circuit_from_json(const json& j) {
    check_fields(j, "circuit", {"n_qubits", "n_params", "gates"});
    ParamCircuit c;
    c.n_qubits = get_int(j.at("n_qubits"), "circuit.n_qubits");
    c.n_params = get_int(j.at("n_params"), "circuit.n_params");
    if (!j.at("gates").is_array()) throw std::invalid_argument("circuit.gates: expected an array");
    for (const auto& jg : j.at("gates")) {
        check_fields(jg, "gate", {"kind", "targets"}, {"param_index"});
        GateOp g;
        if (!jg.at("kind").is_string())
            throw std::invalid_argument("gate.kind: expected a string");
        g.kind = gate_from_name(jg.at("kind").get<std::string>());
        if (!jg.at("targets").is_array())
            throw std::invalid_argument("gate.targets: expected an array");
        for (const auto& t : jg.at("targets")) g.targets.push_back(get_int(t, "gate.targets"));
        if (jg.contains("param_index")) g.param_index = get_int(jg.at("param_index"), "gate.param_index");
        c.gates.push_back(std::move(g));
    }
    c.validate();
    return c;
}

json circuit_model_to_json(const CircuitModel& m) {
    json j = circuit_to_json(m.circuit);
    j["theta"] = m.theta;
    j["selector"] = m.selector.indices;
    return j;
}

CircuitModel circuit_model_from_json(const json& j) {
    check_fields(j, "circuit model", {"n_qubits", "n_params", "gates", "theta", "selector"});
    json circuit_part{{"n_qubits", j.at("n_qubits")},
                      {"n_params", j.at("n_params")},
                      {"gates", j.at("gates")}};
    CircuitModel m;
    m.circuit = circuit_from_json(circuit_part);
    m.theta = get_real_vector(j.at("theta"), "circuit model.theta");
    if (static_cast<int>(m.theta.size()) != m.circuit.n_params)
        throw std::invalid_argument("circuit model: theta length does not match n_params");
    if (!j.at("selector").is_array())
        throw std::invalid_argument("circuit model.selector: expected an array");
    std::vector<std::size_t> idx;
    for (const auto& v : j.at("selector")) {
        const int i = get_int(v, "circuit model.selector");
        if (i < 0) throw std::invalid_argument("circuit model.selector: negative index");
        idx.push_back(static_cast<std::size_t>(i));
    }
    m.selector = make_selector(std::move(idx), std::size_t{1} << m.circuit.n_qubits);
    return m;
}

json block_model_to_json(const BlockRidgeModel& m) {
    json rows = json::array();
    for (const auto& r : m.rows) {
        json row = json::array();
        for (const auto& c : r) {
            row.push_back(c.real());
            row.push_back(c.imag());
        }
        rows.push_back(std::move(row));
    }
    json j{{"dimension", m.dimension}, {"rows", std::move(rows)}};
    if (m.parameterized()) j["block_params"] = m.block_params;
    return j;
}

BlockRidgeModel block_model_from_json(const json& j) {
    check_fields(j, "block model", {"dimension", "rows"}, {"block_params"});
    BlockRidgeModel m;
    const int dim = get_int(j.at("dimension"), "block model.dimension");
    if (dim < 1) throw std::invalid_argument("block model.dimension: must be positive");
    m.dimension = static_cast<std::size_t>(dim);
    if (!j.at("rows").is_array())
        throw std::invalid_argument("block model.rows: expected an array");
    for (const auto& jr : j.at("rows")) {
        const auto flat = get_real_vector(jr, "block model.rows");
        if (flat.size() != 2 * m.dimension)
            throw std::invalid_argument("block model.rows: expected " +
                                        std::to_string(2 * m.dimension) +
                                        " interleaved re/im values per row");
        CVec row(m.dimension);
        for (std::size_t i = 0; i < m.dimension; ++i)
            row[i] = cdouble(flat[2 * i], flat[2 * i + 1]);
        m.rows.push_back(std::move(row));
    }
    if (j.contains("block_params")) {
        if (!j.at("block_params").is_array())
            throw std::invalid_argument("block model.block_params: expected an array");
        for (const auto& jp : j.at("block_params"))
            m.block_params.push_back(get_real_vector(jp, "block model.block_params"));
    }
    m.validate();
    return m;
}

json fourier_model_to_json(const FourierRidgeModel& m) {
    json coeffs = json::array();
    for (const auto& c : m.coefficients) coeffs.push_back(json::array({c.real(), c.imag()}));
    return json{{"directions", m.directions}, {"coefficients", std::move(coeffs)}};
}

FourierRidgeModel fourier_model_from_json(const json& j) {
    check_fields(j, "fourier model", {"directions", "coefficients"});
    FourierRidgeModel m;
    if (!j.at("directions").is_array())
        throw std::invalid_argument("fourier model.directions: expected an array");
    for (const auto& jw : j.at("directions"))
        m.directions.push_back(get_real_vector(jw, "fourier model.directions"));
    if (!j.at("coefficients").is_array())
        throw std::invalid_argument("fourier model.coefficients: expected an array");
    for (const auto& jc : j.at("coefficients")) {
        const auto pair = get_real_vector(jc, "fourier model.coefficients");
        if (pair.size() != 2)
            throw std::invalid_argument("fourier model.coefficients: expected [re, im] pairs");
        m.coefficients.emplace_back(pair[0], pair[1]);
    }
    m.validate();
    return m;
}

json xnn_model_to_json(const XnnModel& m) {
    return json{{"mu", m.mu},
                {"gammas", m.gammas},
                {"directions", m.directions},
                {"activation", activation_name(m.activation)}};
}

XnnModel xnn_model_from_json(const json& j) {
    check_fields(j, "xnn model", {"mu", "gammas", "directions", "activation"});
    XnnModel m;
    m.mu = get_num(j.at("mu"), "xnn model.mu");
    m.gammas = get_real_vector(j.at("gammas"), "xnn model.gammas");
    if (!j.at("directions").is_array())
        throw std::invalid_argument("xnn model.directions: expected an array");
    for (const auto& jw : j.at("directions"))
        m.directions.push_back(get_real_vector(jw, "xnn model.directions"));
    if (!j.at("activation").is_string())
        throw std::invalid_argument("xnn model.activation: expected a string");
    m.activation = activation_from_name(j.at("activation").get<std::string>());
    m.validate();
    return m;
}

json equivalence_report_to_json(const EquivalenceReport& r) {
    return json{{"direct", r.direct},   {"ridge", r.ridge},       {"abs_diff", r.abs_diff},
                {"pass", r.pass},       {"n_qubits", r.n_qubits}, {"selector", r.selector}};
}

json locality_report_to_json(const LocalityReport& r) {
    return json{{"block", r.block},
                {"delta", r.delta},
                {"before", r.before},
                {"after", r.after},
                {"abs_change", r.abs_change},
                {"off_block_unchanged", r.off_block_unchanged},
                {"perturbed_term_changed", r.perturbed_term_changed},
                {"pass", r.pass}};
}

json explain_report_to_json(const ExplainReport& r) {
    return json{{"model_kind", r.model_kind},
                {"input_id", r.input_id},
                {"input", r.input},
                {"dimension", r.dimension},
                {"n_terms", r.n_terms},
                {"n_params", r.n_params},
                {"output", r.output},
                {"mu", r.mu},
                {"contributions", r.contributions},
                {"sensitivity", r.sensitivity},
                {"fd_step", r.fd_step}};
}

TrainConfig train_config_from_json(const json& j) {
    check_fields(j, "train config", {},
                 {"learning_rate", "epochs", "seed", "fd_step", "log_every"});
    TrainConfig c;
    if (j.contains("learning_rate")) c.learning_rate = get_num(j.at("learning_rate"), "learning_rate");
    if (j.contains("epochs")) c.epochs = get_int(j.at("epochs"), "epochs");
    if (j.contains("seed")) {
        if (!j.at("seed").is_number_unsigned() && !j.at("seed").is_number_integer())
            throw std::invalid_argument("train config.seed: expected an integer");
        c.seed = j.at("seed").get<std::uint64_t>();
    }
    if (j.contains("fd_step")) c.fd_step = get_num(j.at("fd_step"), "fd_step");
    if (j.contains("log_every")) c.log_every = get_int(j.at("log_every"), "log_every");
    c.validate();
    return c;
}

json train_config_to_json(const TrainConfig& c) {
    return json{{"learning_rate", c.learning_rate},
                {"epochs", c.epochs},
                {"seed", c.seed},
                {"fd_step", c.fd_step},
                {"log_every", c.log_every}};
}

ModelFileKind sniff_model_kind(const json& j) {
    require_object(j, "model file");
    if (j.contains("gates")) return j.contains("theta") ? ModelFileKind::circuit_model
                                                        : ModelFileKind::circuit;
    if (j.contains("rows")) return ModelFileKind::block;
    if (j.contains("coefficients")) return ModelFileKind::fourier;
    if (j.contains("gammas")) return ModelFileKind::xnn;
    throw std::invalid_argument("model file: cannot identify the model kind from its fields");
}

std::string slurp_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

void atomic_write_file(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write file: " + tmp);
        out << content;
        if (!out) throw std::runtime_error("write failed: " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace qridge
