/**
 * simpconf: batch front end for simplicial configuration-space models.
 *
 * Reads complexes and actions as JSON, runs constructions and checks, and
 * emits machine-readable JSON. Exit codes: 0 success, 2 schema violation,
 * 3 mathematical precondition failure, 4 I/O failure, 5 simplex budget
 * exceeded.
 */

#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "simpconf/action.hpp"
#include "simpconf/constructions.hpp"
#include "simpconf/errors.hpp"
#include "simpconf/homology.hpp"
#include "simpconf/json_io.hpp"
#include "simpconf/nerve.hpp"

namespace {

using namespace simpconf;

SimplicialComplex complex_from_any(const json& j) {
    if (j.is_object() && j.contains("complex")) return complex_from_any(j["complex"]);
    return complex_from_json(j);
}

SimplicialComplex load_complex(const std::string& path) {
    return complex_from_any(load_json_file(path));
}

void emit(const json& out, const std::string& out_path, bool pretty) {
    std::string text = pretty ? out.dump(2) : out.dump();
    text += "\n";
    if (out_path.empty())
        std::cout << text;
    else
        write_text_file(out_path, text);
}

json summary_json(const SimplicialComplex& k) {
    return json{{"vertices", k.vertex_count()}, {"dim", k.dim()}, {"fvector", k.f_vector()}};
}

SimplicialAction action_from_file(const SimplicialComplex& k, const std::string& path) {
    return SimplicialAction::from_generators(k, generators_from_json(k, load_json_file(path)));
}

// ---------------------------------------------------------------------------
// Pipeline

struct PipelineState {
    SimplicialComplex current;
    std::optional<SimplicialAction> action;
    std::string action_name;  // "S2", "S3", ... while tracked
    std::string action_note;  // why the action was dropped, if it was
    // Set right after a "power" step so that "fatdiag" can refer back.
    std::optional<SimplicialComplex> power_base;
    int power_n = 0;
};

void carry_action(PipelineState& st, const SimplicialComplex& derived, DerivedKind kind) {
    if (!st.action) return;
    try {
        st.action = induced_action(*st.action, derived, kind);
    } catch (const Error& e) {
        st.action.reset();
        st.action_name.clear();
        st.action_note = e.what();
    }
}

int require_n(const json& step) {
    if (!step.contains("n") || !step["n"].is_number_integer() || step["n"].get<int>() < 1)
        throw SchemaError("step " + step.dump() + " needs a positive integer \"n\"");
    return step["n"].get<int>();
}

SimplicialComplex step_with_complex(const json& step) {
    if (!step.contains("with")) throw SchemaError("step " + step.dump() + " needs \"with\"");
    const json& w = step["with"];
    if (w.is_string()) return load_complex(w.get<std::string>());
    return complex_from_any(w);
}

json run_step(PipelineState& st, const json& step) {
    if (!step.is_object() || !step.contains("op") || !step["op"].is_string())
        throw SchemaError("each pipeline step needs an \"op\" string");
    const std::string op = step["op"].get<std::string>();

    auto after_construction = [&](json extra = json::object()) {
        json out = summary_json(st.current);
        out["action"] = st.action ? json(st.action_name) : json(nullptr);
        for (auto& [k, v] : extra.items()) out[k] = v;
        return out;
    };

    if (op == "power") {
        const int n = require_n(step);
        SimplicialComplex base = st.current;
        st.current = ordered_power(base, n);
        st.action = symmetric_group_action_on(base, st.current, n);
        st.action_name = "S" + std::to_string(n);
        st.action_note.clear();
        st.power_base = std::move(base);
        st.power_n = n;
        return after_construction();
    }
    st.power_base.reset();  // only valid immediately after "power"

    if (op == "bs") {
        st.current = barycentric_subdivision(st.current);
        carry_action(st, st.current, DerivedKind::Bs);
        return after_construction();
    }
    if (op == "fatdiag") {
        throw SchemaError("\"fatdiag\" must come directly after a \"power\" step");
    }
    if (op == "diff" || op == "complement" || op == "nerve") {
        SimplicialComplex a = step_with_complex(step);
        json extra = json::object();
        if (op == "diff") {
            st.current = simplicial_difference(st.current, a);
            carry_action(st, st.current, DerivedKind::Difference);
        } else if (op == "nerve") {
            st.current = minimal_nonface_nerve(st.current, a);
            carry_action(st, st.current, DerivedKind::Difference);
        } else {
            ComplementResult r = complement_model(st.current, a);
            st.current = r.complex;
            if (!r.subcomplex_was_full)
                extra["warnings"] = json::array(
                    {"the removed subcomplex is not full; the deformation "
                     "retraction theorem does not apply"});
            carry_action(st, st.current, DerivedKind::InducedSubcomplex);
        }
        return after_construction(extra);
    }
    if (op == "conf" || op == "confbs") {
        const int n = require_n(step);
        SimplicialComplex base = st.current;
        SimplicialComplex power = ordered_power(base, n);
        SimplicialComplex fat =
            n == 1 ? SimplicialComplex() : fat_diagonal_in(base, power, n);
        SimplicialAction sn = symmetric_group_action_on(base, power, n);
        if (op == "conf") {
            st.current = simplicial_difference(power, fat);
            st.action = induced_action(sn, st.current, DerivedKind::Difference);
        } else {
            SimplicialComplex bp = barycentric_subdivision(power);
            SimplicialComplex bf = barycentric_subdivision(fat);
            st.current = complement_model(bp, bf).complex;
            SimplicialAction on_bp = induced_action(sn, bp, DerivedKind::Bs);
            st.action = induced_action(on_bp, st.current, DerivedKind::InducedSubcomplex);
        }
        st.action_name = "S" + std::to_string(n);
        st.action_note.clear();
        return after_construction();
    }
    if (op == "quotient") {
        if (!step.contains("group") || !step["group"].is_string())
            throw SchemaError("\"quotient\" step needs a \"group\" name");
        const std::string group = step["group"].get<std::string>();
        if (!st.action || st.action_name != group) {
            std::string why = st.action_note.empty() ? "no action of that name is tracked"
                                                     : st.action_note;
            throw PreconditionError("quotient by " + group + " is not available here: " + why);
        }
        QuotientResult q = quotient_complex(*st.action);
        st.current = q.complex;
        st.action.reset();
        st.action_name.clear();
        return after_construction();
    }
    if (op == "homology") {
        const bool reduced = step.value("reduced", false);
        return profile_to_json(homology_profile(st.current, reduced));
    }
    if (op == "fvector") return fvector_to_json(st.current.f_vector());
    if (op == "check-semiregular" || op == "check-regular" || op == "orbits") {
        if (!st.action)
            throw PreconditionError("step \"" + op + "\" needs a tracked action" +
                                    (st.action_note.empty() ? "" : ": " + st.action_note));
        if (op == "check-semiregular") return json{{"semiregular", is_semiregular(*st.action)}};
        if (op == "check-regular") {
            auto w = regularity_witness(*st.action);
            json out{{"regular", !w.has_value()}};
            if (w) out["witness"] = describe_witness(*st.action, *w);
            return out;
        }
        if (!step.contains("dim") || !step["dim"].is_number_integer())
            throw SchemaError("\"orbits\" step needs an integer \"dim\"");
        return orbits_to_json(*st.action, step["dim"].get<int>());
    }
    throw SchemaError("unknown pipeline op \"" + op + "\"");
}

json run_pipeline(const json& spec, bool with_timing) {
    if (!spec.is_object() || !spec.contains("source"))
        throw SchemaError("pipeline spec needs a \"source\"");
    if (!spec.contains("steps") || !spec["steps"].is_array())
        throw SchemaError("pipeline spec needs a \"steps\" array");

    PipelineState st;
    if (spec["source"].is_string())
        st.current = load_complex(spec["source"].get<std::string>());
    else
        st.current = complex_from_any(spec["source"]);

    json report{{"source", spec["source"]}, {"steps", json::array()}};

    // Handle "fatdiag" by peeking at the power context before it is cleared.
    for (const auto& step : spec["steps"]) {
        const auto start = std::chrono::steady_clock::now();
        json output;
        if (step.is_object() && step.value("op", "") == "fatdiag") {
            if (!st.power_base)
                throw SchemaError("\"fatdiag\" must come directly after a \"power\" step");
            SimplicialComplex base = std::move(*st.power_base);
            st.power_base.reset();
            st.current = fat_diagonal_in(base, st.current, st.power_n);
            carry_action(st, st.current, DerivedKind::InducedSubcomplex);
            output = summary_json(st.current);
            output["action"] = st.action ? json(st.action_name) : json(nullptr);
        } else {
            output = run_step(st, step);
        }
        json entry{{"step", step}, {"output", std::move(output)}};
        if (with_timing) {
            const auto stop = std::chrono::steady_clock::now();
            entry["ms"] =
                std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count() /
                1000.0;
        }
        report["steps"].push_back(std::move(entry));
    }
    if (!report["steps"].empty()) report["result"] = report["steps"].back()["output"];
    return report;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"simplicial configuration-space models and exact homology"};
    app.require_subcommand(1);

    std::string input, with_path, action_path, out_path;
    int n = 1, dim = 0;
    bool pretty = false, reduced = false, no_timing = false;

    auto add_common = [&](CLI::App* cmd, bool needs_input = true) {
        if (needs_input) cmd->add_option("--input", input, "complex document")->required();
        cmd->add_option("--out", out_path, "write the result here instead of stdout");
        cmd->add_flag("--pretty", pretty, "indent the JSON output");
        return cmd;
    };

    auto* c_build = add_common(app.add_subcommand("build", "validate and canonicalize a complex"));
    auto* c_power = add_common(app.add_subcommand("power", "ordered power X^n"));
    c_power->add_option("--n", n, "number of factors")->required()->check(CLI::PositiveNumber);
    auto* c_bs = add_common(app.add_subcommand("bs", "barycentric subdivision"));
    auto* c_fat = add_common(app.add_subcommand("fatdiag", "fat diagonal F_n"));
    c_fat->add_option("--n", n, "number of factors")->required()->check(CLI::PositiveNumber);
    auto* c_diff = add_common(app.add_subcommand("diff", "simplicial difference X (-) A"));
    c_diff->add_option("--with", with_path, "subcomplex document")->required();
    auto* c_comp = add_common(app.add_subcommand("complement", "complement model C_{X,A}"));
    c_comp->add_option("--with", with_path, "subcomplex document")->required();
    auto* c_conf = add_common(app.add_subcommand("conf", "configuration model C(X,n)"));
    c_conf->add_option("--n", n, "number of particles")->required()->check(CLI::PositiveNumber);
    auto* c_confbs = add_common(app.add_subcommand("confbs", "regularized model C_bs(X,n)"));
    c_confbs->add_option("--n", n, "number of particles")->required()->check(CLI::PositiveNumber);
    auto* c_quot = add_common(app.add_subcommand("quotient", "quotient by a regular action"));
    c_quot->add_option("--action", action_path, "action document")->required();
    auto* c_orbits = add_common(app.add_subcommand("orbits", "orbit partition in one dimension"));
    c_orbits->add_option("--action", action_path, "action document")->required();
    c_orbits->add_option("--dim", dim, "simplex dimension")->required();
    auto* c_check = add_common(app.add_subcommand("check-action", "verify an action document"));
    c_check->add_option("--action", action_path, "action document")->required();
    auto* c_hom = add_common(app.add_subcommand("homology", "integer homology profile"));
    c_hom->add_flag("--reduced", reduced, "reduced homology");
    auto* c_fvec = add_common(app.add_subcommand("fvector", "simplex counts per dimension"));
    auto* c_nerve = add_common(app.add_subcommand("nerve", "minimal-non-face nerve"));
    c_nerve->add_option("--with", with_path, "subcomplex document")->required();
    auto* c_pipe = add_common(app.add_subcommand("pipeline", "run a pipeline spec"));
    c_pipe->add_flag("--no-timing", no_timing, "omit timing fields for byte-stable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_name() == "CallForHelp" ? 0 : 2;
    }

    try {
        if (c_build->parsed()) {
            DocumentCheck check = validate_complex_document(load_json_file(input));
            json diags = json::array();
            for (const auto& d : check.diagnostics)
                diags.push_back(json{{"severity", d.severity}, {"message", d.message}});
            if (!check.ok()) {
                emit(json{{"diagnostics", diags}}, out_path, pretty);
                return 2;
            }
            emit(json{{"complex", complex_to_json(*check.complex)}, {"diagnostics", diags}},
                 out_path, pretty);
        } else if (c_power->parsed()) {
            emit(complex_to_json(ordered_power(load_complex(input), n)), out_path, pretty);
        } else if (c_bs->parsed()) {
            emit(complex_to_json(barycentric_subdivision(load_complex(input))), out_path, pretty);
        } else if (c_fat->parsed()) {
            emit(complex_to_json(fat_diagonal(load_complex(input), n)), out_path, pretty);
        } else if (c_diff->parsed()) {
            emit(complex_to_json(
                     simplicial_difference(load_complex(input), load_complex(with_path))),
                 out_path, pretty);
        } else if (c_comp->parsed()) {
            ComplementResult r = complement_model(load_complex(input), load_complex(with_path));
            json out{{"complex", complex_to_json(r.complex)},
                     {"subcomplex_was_full", r.subcomplex_was_full}};
            if (!r.subcomplex_was_full)
                out["warnings"] = json::array(
                    {"the removed subcomplex is not full; the deformation retraction "
                     "theorem does not apply"});
            emit(out, out_path, pretty);
        } else if (c_conf->parsed()) {
            emit(complex_to_json(conf_model(load_complex(input), n)), out_path, pretty);
        } else if (c_confbs->parsed()) {
            emit(complex_to_json(conf_model_bs(load_complex(input), n)), out_path, pretty);
        } else if (c_quot->parsed()) {
            SimplicialComplex k = load_complex(input);
            SimplicialAction act = action_from_file(k, action_path);
            QuotientResult q = quotient_complex(act);
            emit(quotient_to_json(act, q), out_path, pretty);
        } else if (c_orbits->parsed()) {
            SimplicialComplex k = load_complex(input);
            emit(orbits_to_json(action_from_file(k, action_path), dim), out_path, pretty);
        } else if (c_check->parsed()) {
            SimplicialComplex k = load_complex(input);
            SimplicialAction act = action_from_file(k, action_path);
            json names = json::array();
            for (const auto& g : act.elements()) names.push_back(g.name);
            json out{{"elements", act.size()},
                     {"names", std::move(names)},
                     {"semiregular", is_semiregular(act)}};
            auto w = regularity_witness(act);
            out["regular"] = !w.has_value();
            if (w) out["witness"] = describe_witness(act, *w);
            emit(out, out_path, pretty);
        } else if (c_hom->parsed()) {
            emit(profile_to_json(homology_profile(load_complex(input), reduced)), out_path,
                 pretty);
        } else if (c_fvec->parsed()) {
            emit(fvector_to_json(load_complex(input).f_vector()), out_path, pretty);
        } else if (c_nerve->parsed()) {
            emit(complex_to_json(
                     minimal_nonface_nerve(load_complex(input), load_complex(with_path))),
                 out_path, pretty);
        } else if (c_pipe->parsed()) {
            emit(run_pipeline(load_json_file(input), !no_timing), out_path, pretty);
        }
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 3;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 4;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
