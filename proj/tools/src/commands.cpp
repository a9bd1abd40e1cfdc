#include "advshare_cli/commands.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "advshare/advance.hpp"
#include "advshare/codefile.hpp"
#include "advshare/error.hpp"
#include "advshare/sim.hpp"

namespace advshare::cli {

using Json = nlohmann::ordered_json;

namespace {

Json one_based(const IndexSet& s) {
    Json out = Json::array();
    for (auto i : s) out.push_back(i + 1);
    return out;
}

std::string set_str(const IndexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i] + 1);
    return out + "}";
}

std::string row_str(const FpMatrix& h, std::size_t r, std::size_t n) {
    std::ostringstream out;
    for (std::size_t i = 0; i < 2 * n; ++i) {
        if (i == n) out << " |";
        out << (i == 0 ? "" : " ") << h.at(r, i);
    }
    return out.str();
}

Json rows_json(const FpMatrix& h, std::size_t n) {
    Json out = Json::array();
    for (std::size_t r = 0; r < h.rows(); ++r) out.push_back(row_str(h, r, n));
    return out;
}

std::string vec_str(const SymplecticVector& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < 2 * v.n(); ++i) {
        if (i == v.n()) out << " |";
        out << (i == 0 ? "" : " ") << v.concatenated()[i];
    }
    return out.str();
}

std::string code_label(const StabilizerCode& code, std::optional<std::size_t> d) {
    std::string s = "[[" + std::to_string(code.n()) + "," + std::to_string(code.k());
    if (d) s += "," + std::to_string(*d);
    return s + "]]_" + std::to_string(code.modulus());
}

Limits limits_from(const Options& o) {
    Limits l;
    if (o.budget) l.max_codewords = *o.budget;
    return l;
}

Json base_report(const char* command, const Options& o) {
    Json r;
    r["schema"] = kSchemaId;
    r["schema_version"] = kSchemaVersion;
    r["command"] = command;
    r["input"] = o.path;
    r["status"] = "ok";
    return r;
}

struct CodeSection {
    Json json;
    std::optional<std::size_t> distance;
    bool budget_exceeded = false;
};

CodeSection describe_code(const StabilizerCode& code, const Limits& limits) {
    CodeSection out;
    if (code.k() >= 1) {
        try {
            out.distance = code_distance(code, limits);
        } catch (const BudgetExceeded&) {
            out.budget_exceeded = true;
        }
    }
    Json& j = out.json;
    j["p"] = code.modulus();
    j["n"] = code.n();
    j["k"] = code.k();
    j["d"] = out.distance ? Json(*out.distance) : Json(nullptr);
    j["label"] = code_label(code, out.distance);
    j["generators"] = rows_json(code.check_matrix(), code.n());
    return out;
}

void record_error(CommandResult& res, const char* kind, int exit_code, const std::string& message) {
    res.report["status"] = "error";
    res.report["error"] = Json{{"kind", kind}, {"message", message}};
    res.exit_code = exit_code;
    res.summary += "error: " + message + "\n";
}

// Runs `body`, mapping library exceptions onto report errors and exit codes.
CommandResult guarded(const char* command, const Options& o, const std::function<void(CommandResult&)>& body) {
    CommandResult res;
    res.report = base_report(command, o);
    try {
        body(res);
    } catch (const NotCommutative& e) {
        record_error(res, "not commutative", kInvalidInput, e.what());
        res.report["error"]["rows"] = Json::array({e.row_a() + 1, e.row_b() + 1});
    } catch (const ParseError& e) {
        record_error(res, "parse error", kInvalidInput, e.what());
        res.report["error"]["line"] = e.line();
    } catch (const NotAdvanceShareable& e) {
        record_error(res, "not advance shareable", kInvalidInput, e.what());
    } catch (const DependentRows& e) {
        record_error(res, "dependent generators", kInvalidInput, e.what());
    } catch (const InvalidArgument& e) {
        record_error(res, "invalid input", kInvalidInput, e.what());
    } catch (const BudgetExceeded& e) {
        record_error(res, "budget exceeded", kBudgetExceeded, e.what());
    } catch (const Error& e) {
        record_error(res, "invariant violation", kInvariantViolation, e.what());
    }
    return res;
}

}  // namespace

IndexSet parse_share_list(const std::string& text, std::size_t n) {
    std::vector<std::size_t> out;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');) {
        const auto first = item.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        item = item.substr(first, item.find_last_not_of(" \t") - first + 1);
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size() || v < 1 || static_cast<std::size_t>(v) > n) {
            throw InvalidArgument("share index '" + item + "' is not in 1.." + std::to_string(n));
        }
        out.push_back(static_cast<std::size_t>(v - 1));
    }
    const IndexSet s = make_index_set(out, n);
    if (s.size() != out.size()) throw InvalidArgument("duplicate share index in '" + text + "'");
    return s;
}

CommandResult cmd_validate(const Options& o) {
    return guarded("validate", o, [&](CommandResult& res) {
        const CodeFile file = read_code_file(o.path);
        const StabilizerCode code = validate_stabilizer(file.check, file.p, file.n);
        CodeSection cs = describe_code(code, limits_from(o));
        res.report["code"] = cs.json;
        res.summary += cs.json["label"].get<std::string>() + "\n";
        if (cs.budget_exceeded) {
            record_error(res, "budget exceeded", kBudgetExceeded, "code distance scan exceeds the codeword budget");
        }
    });
}

CommandResult cmd_analyze(const Options& o) {
    return guarded("analyze", o, [&](CommandResult& res) {
        const Limits limits = limits_from(o);
        const CodeFile file = read_code_file(o.path);
        const StabilizerCode code = validate_stabilizer(file.check, file.p, file.n);
        CodeSection cs = describe_code(code, limits);
        res.report["code"] = cs.json;

        const auto e = enumerate_advance_shareable(code, o.max_size.value_or(code.n()), limits);
        Json sets = Json::array();
        for (const auto& s : e.sets) {
            sets.push_back({{"J", one_based(s.shares)},
                            {"theorem1", s.exact},
                            {"theorem2", s.sufficient ? Json(*s.sufficient) : Json(nullptr)}});
        }
        res.report["advance_shareable"] = {
            {"max_size", e.max_size},
            {"dual_min_weight", e.dual_min_weight ? Json(*e.dual_min_weight) : Json(nullptr)},
            {"budget_exceeded", e.budget_exceeded},
            {"count", e.sets.size()},
            {"sets", sets}};

        res.summary += cs.json["label"].get<std::string>() + ": " + std::to_string(e.sets.size()) +
                       " advance-shareable sets of size <= " + std::to_string(e.max_size) + "\n";
        for (const auto& s : e.sets) {
            res.summary += "  J=" + set_str(s.shares) + " theorem1=yes theorem2=" +
                           (s.sufficient ? (*s.sufficient ? "yes" : "no") : "n/a") + "\n";
        }
        if (e.budget_exceeded || cs.budget_exceeded) {
            record_error(res, "budget exceeded", kBudgetExceeded, "partial report: exhaustive scan exceeds the codeword budget");
        }
    });
}

CommandResult cmd_demo(const Options& o) {
    return guarded("demo", o, [&](CommandResult& res) {
        const Limits limits = limits_from(o);
        const CodeFile file = read_code_file(o.path);
        const StabilizerCode code = validate_stabilizer(file.check, file.p, file.n);
        const IndexSet shares = parse_share_list(o.shares.value_or(""), code.n());
        CodeSection cs = describe_code(code, limits);
        res.report["code"] = cs.json;
        res.report["J"] = one_based(shares);

        const AdvanceScheme scheme = build_scheme(code, shares, limits);
        const EaqeccPlan& plan = scheme.plan;
        Json mu = Json::array();
        for (int m : plan.form.mu) mu.push_back(m);
        res.report["normal_form"] = {{"rows", rows_json(plan.form.check, code.n())}, {"mu", mu}};

        auto pauli_list = [](const std::vector<PauliOperator>& ops) {
            Json out = Json::array();
            for (const auto& op : ops) out.push_back(vec_str(op.vector()));
            return out;
        };
        std::string plan_label = "[[" + std::to_string(plan.length()) + "," + std::to_string(plan.k) + "," +
                                 (plan.distance ? std::to_string(*plan.distance) : std::string("?")) + ";" +
                                 std::to_string(plan.c) + "]]_" + std::to_string(plan.p);
        res.report["plan"] = {{"label", plan_label},
                              {"length", plan.length()},
                              {"k", plan.k},
                              {"d", plan.distance ? Json(*plan.distance) : Json(nullptr)},
                              {"c", plan.c},
                              {"ancillas", plan.ancillas},
                              {"kept", one_based(plan.kept)},
                              {"x_positions", one_based(plan.x_positions)},
                              {"z_positions", one_based(plan.z_positions)},
                              {"secret_positions", one_based(plan.secret_positions)},
                              {"source_generators", pauli_list(plan.source_generators)},
                              {"target_generators", pauli_list(plan.target_generators)}};
        Json phases = Json::array();
        for (int t : scheme.circuit_phases) phases.push_back(t);
        res.report["circuit"] = {{"qudits", scheme.circuit.qudits()},
                                 {"gate_count", scheme.circuit.gates().size()},
                                 {"phases", phases},
                                 {"text", to_text(scheme.circuit)}};

        const ProtocolTranscript t = run_protocol(scheme, o.seed, o.trials, limits);
        Json access = Json::array();
        for (const auto& e : t.access) {
            Json entry = {{"set", one_based(e.set)}, {"label", to_string(e.label)}};
            entry["mutual_information"] = e.mutual_information ? Json(*e.mutual_information) : Json(nullptr);
            access.push_back(entry);
        }
        res.report["access_table"] = access;

        Json records = Json::array();
        double min_fid = 1.0;
        for (const auto& r : t.trials) {
            Json ms = Json::array();
            for (int s : r.measured_syndrome) ms.push_back(s);
            records.push_back({{"trial", r.trial},
                               {"qualified_set", one_based(r.qualified_set)},
                               {"erased", one_based(r.erased)},
                               {"measured_syndrome", ms},
                               {"correction", vec_str(r.correction)},
                               {"fidelity", r.fidelity}});
            min_fid = std::min(min_fid, r.fidelity);
        }
        Json syn = Json::array();
        for (int s : t.syndrome) syn.push_back(s);
        res.report["transcript"] = {{"seed", t.seed},
                                    {"trials", o.trials},
                                    {"syndrome", syn},
                                    {"min_fidelity", t.trials.empty() ? Json(nullptr) : Json(min_fid)},
                                    {"records", records}};

        res.summary += cs.json["label"].get<std::string>() + " with J=" + set_str(shares) + " -> " + plan_label + "\n";
        res.summary += "circuit: " + std::to_string(scheme.circuit.gates().size()) + " gates on " +
                       std::to_string(scheme.circuit.qudits()) + " qudits\n";
        res.summary += "access table:\n";
        for (const auto& e : t.access) {
            res.summary += "  " + set_str(e.set) + " " + to_string(e.label);
            if (e.mutual_information) {
                std::ostringstream mi;
                mi.precision(6);
                mi << std::fixed << *e.mutual_information;
                res.summary += "  I(R:A)=" + mi.str();
            }
            res.summary += "\n";
        }
        if (!t.trials.empty()) {
            std::ostringstream f;
            f.precision(12);
            f << min_fid;
            res.summary += std::to_string(t.trials.size()) + " reconstructions, min fidelity " + f.str() + "\n";
        }
    });
}

CommandResult run_command(const std::string& name, const Options& opts) {
    if (name == "validate") return cmd_validate(opts);
    if (name == "analyze") return cmd_analyze(opts);
    if (name == "demo") return cmd_demo(opts);
    CommandResult res;
    res.report = base_report("unknown", opts);
    record_error(res, "invalid input", kInvalidInput, "unknown command '" + name + "'");
    return res;
}

}  // namespace advshare::cli
