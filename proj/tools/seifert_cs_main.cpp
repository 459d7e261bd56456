// seifert-cs: exact topological invariants of U(1)-Chern-Simons theory on
// Seifert 3-manifolds, computed from Seifert invariants.
//
// Exit codes: 0 success, 2 validation/parse error, 1 internal failure.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "seifert_cs/seifert_cs.hpp"

namespace sc = seifert_cs;
using nlohmann::json;

namespace {

sc::Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return sc::Rational(sc::Int(text));
        return sc::make_rational(sc::Int(text.substr(0, slash)),
                                 sc::Int(text.substr(slash + 1)));
    } catch (const std::runtime_error& e) {
        throw sc::Error("bad rational '" + text + "': " + e.what());
    }
}

sc::Int enum_cap_from_env() {
    if (const char* v = std::getenv("SEIFERT_CS_ENUM_CAP")) return sc::Int(v);
    return 1000000;
}

json number_or_string(const sc::Int& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

void emit(const json& j, bool as_json, const std::string& text) {
    if (as_json)
        std::cout << j.dump() << "\n";
    else
        std::cout << text << "\n";
}

struct CommonFlags {
    bool json = false;
    bool approx = false;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_flag("--json", f.json, "emit machine-readable JSON");
    cmd->add_flag("--approx", f.approx, "add floating approximations alongside exact values");
}

std::string homology_text(const sc::HomologySummary& h) {
    std::string torsion = "[";
    for (std::size_t i = 0; i < h.torsion_coefficients.size(); ++i) {
        if (i) torsion += ", ";
        torsion += h.torsion_coefficients[i].str();
    }
    torsion += "]";
    return "b1 = " + std::to_string(h.b1) + "\ntorsion = " + torsion +
           "\ntorsion_order = " + h.torsion_order.str() +
           "\nflat_class_count = " + h.flat_class_count.str();
}

std::string report_text(const sc::PartitionReport& r) {
    std::string out;
    out += "seifert        = " + sc::render_seifert(r.seifert) + "\n";
    out += "level_k        = " + r.level_k.str() + "\n";
    out += "framing        = " + r.framing.str() + "\n";
    out += "degree         = " + sc::to_string(r.degree) + "\n";
    out += "vol_h_squared  = " + sc::to_string(r.vol_h_squared) + "\n";
    out += "eta0           = " + sc::to_string(r.eta0) + "\n";
    out += "n_exponent     = " + sc::to_string(r.n_exponent) + "\n";
    out += "phase          = exp(i*pi*" + sc::to_string(r.phase.q()) + ")\n";
    out += "b1             = " + std::to_string(r.homology.b1) + "\n";
    out += "flat classes   = " + r.homology.flat_class_count.str() + "\n";
    out += "per-class factor (symbolic): " + r.flat_action_placeholder + "\n";
    out += "torsion integral (symbolic): " + r.torsion_integral_placeholder;
    if (!r.genus_note.empty()) out += "\nnote: " + r.genus_note;
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact U(1)-Chern-Simons invariants of Seifert 3-manifolds"};
    app.require_subcommand(1);

    // dedekind
    auto* cmd_ded = app.add_subcommand("dedekind", "Dedekind sum s(alpha, beta)");
    std::string ded_alpha, ded_beta;
    std::string ded_method = "fast";
    CommonFlags ded_flags;
    cmd_ded->add_option("--alpha", ded_alpha, "modulus alpha >= 1")->required();
    cmd_ded->add_option("--beta", ded_beta, "multiplier beta")->required();
    cmd_ded->add_option("--method", ded_method, "fast | sawtooth | cotangent")
        ->check(CLI::IsMember({"fast", "sawtooth", "cotangent"}));
    add_common(cmd_ded, ded_flags);

    // seifert-data subcommands share one positional
    struct DataCmd {
        CLI::App* cmd;
        std::string data;
        CommonFlags flags;
    };
    auto add_data_cmd = [&](const char* name, const char* desc) {
        DataCmd dc;
        dc.cmd = app.add_subcommand(name, desc);
        return dc;
    };

    DataCmd cmd_degree = add_data_cmd("degree", "degree d = n + sum beta_j/alpha_j");
    cmd_degree.cmd->add_option("data", cmd_degree.data, "Seifert data, e.g. \"n=0; (2,1)(3,1)\"")->required();
    add_common(cmd_degree.cmd, cmd_degree.flags);

    DataCmd cmd_vol = add_data_cmd("vol", "Vol(H)^2 = degree (requires degree > 0)");
    cmd_vol.cmd->add_option("data", cmd_vol.data, "Seifert data")->required();
    add_common(cmd_vol.cmd, cmd_vol.flags);

    DataCmd cmd_hom = add_data_cmd("homology", "H1 summary: b1, torsion, flat class count");
    cmd_hom.cmd->add_option("data", cmd_hom.data, "Seifert data")->required();
    add_common(cmd_hom.cmd, cmd_hom.flags);

    DataCmd cmd_eta = add_data_cmd("eta0", "renormalized eta-invariant eta0 = 1 + d/3 + 4*sum s");
    bool eta_audit = false;
    cmd_eta.cmd->add_option("data", cmd_eta.data, "Seifert data")->required();
    cmd_eta.cmd->add_flag("--audit", eta_audit, "cross-check every Dedekind sum with the sawtooth oracle");
    add_common(cmd_eta.cmd, cmd_eta.flags);

    DataCmd cmd_phase = add_data_cmd("phase", "partition-function phase exponent q: e^{i*pi*q}");
    std::string phase_framing = "0";
    cmd_phase.cmd->add_option("data", cmd_phase.data, "Seifert data")->required();
    cmd_phase.cmd->add_option("--framing", phase_framing, "2-framing twist units (default 0)");
    add_common(cmd_phase.cmd, cmd_phase.flags);

    DataCmd cmd_report = add_data_cmd("report", "full partition-function report");
    std::string report_k = "1", report_framing = "0", report_batch;
    cmd_report.cmd->add_option("data", cmd_report.data, "Seifert data (omit with --batch)");
    cmd_report.cmd->add_option("--k", report_k, "level k >= 1 (default 1)");
    cmd_report.cmd->add_option("--framing", report_framing, "2-framing twist units (default 0)");
    cmd_report.cmd->add_option("--batch", report_batch, "file with one Seifert datum per line; emits a JSON array");
    add_common(cmd_report.cmd, cmd_report.flags);

    // gravcs
    auto* cmd_grav = app.add_subcommand("gravcs", "adiabatic gravitational Chern-Simons value");
    std::string grav_r, grav_f2, grav_eps;
    CommonFlags grav_flags;
    cmd_grav->add_option("--r-int", grav_r, "integral of r*omega over the base (rational p/q)")->required();
    cmd_grav->add_option("--f2-int", grav_f2, "integral of f^2*omega over the base (rational p/q)")->required();
    cmd_grav->add_option("--epsilon", grav_eps, "adiabatic parameter epsilon > 0 (rational p/q)")->required();
    add_common(cmd_grav, grav_flags);

    // catalog
    auto* cmd_cat = app.add_subcommand("catalog", "named manifolds shipped with the tool");
    std::string cat_file;
    CommonFlags cat_flags;
    cmd_cat->add_option("--catalog", cat_file, "load catalog from a JSON file instead of the builtin set");
    add_common(cmd_cat, cat_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // --help exits 0, bad flags are a usage error
    }

    if (cmd_ded->parsed()) {
        sc::DedekindArgs args{sc::Int(ded_alpha), sc::Int(ded_beta)};
        json j{{"alpha", number_or_string(args.alpha)}, {"beta", number_or_string(args.beta)}};
        std::string text;
        if (ded_method == "cotangent") {
            double v = sc::dedekind_cotangent(args);
            j["s_approx"] = v;
            text = "s(" + args.alpha.str() + "," + args.beta.str() + ") ~ " + std::to_string(v);
        } else {
            sc::Rational s = ded_method == "sawtooth" ? sc::dedekind_sawtooth(args)
                                                      : sc::dedekind_fast(args);
            j["s"] = sc::to_string(s);
            if (ded_flags.approx) j["s_approx"] = sc::to_double(s);
            text = "s(" + args.alpha.str() + "," + args.beta.str() + ") = " + sc::to_string(s);
        }
        emit(j, ded_flags.json, text);
        return 0;
    }

    if (cmd_degree.cmd->parsed()) {
        sc::Rational d = sc::degree(sc::parse_seifert(cmd_degree.data));
        json j{{"seifert", cmd_degree.data}, {"degree", sc::to_string(d)}};
        if (cmd_degree.flags.approx) j["degree_approx"] = sc::to_double(d);
        emit(j, cmd_degree.flags.json, "degree = " + sc::to_string(d));
        return 0;
    }

    if (cmd_vol.cmd->parsed()) {
        sc::Rational v = sc::vol_isotropy_squared(sc::parse_seifert(cmd_vol.data));
        json j{{"seifert", cmd_vol.data}, {"vol_h_squared", sc::to_string(v)}};
        if (cmd_vol.flags.approx) j["vol_h_approx"] = std::sqrt(sc::to_double(v));
        emit(j, cmd_vol.flags.json, "vol_h_squared = " + sc::to_string(v));
        return 0;
    }

    if (cmd_hom.cmd->parsed()) {
        sc::HomologySummary h = sc::homology_h1(sc::parse_seifert(cmd_hom.data));
        emit(sc::homology_to_json(h), cmd_hom.flags.json, homology_text(h));
        return 0;
    }

    if (cmd_eta.cmd->parsed()) {
        sc::Rational e = sc::eta0(sc::parse_seifert(cmd_eta.data), eta_audit);
        json j{{"seifert", cmd_eta.data}, {"eta0", sc::to_string(e)}};
        if (cmd_eta.flags.approx) j["eta0_approx"] = sc::to_double(e);
        emit(j, cmd_eta.flags.json, "eta0 = " + sc::to_string(e));
        return 0;
    }

    if (cmd_phase.cmd->parsed()) {
        sc::SeifertData sd = sc::parse_seifert(cmd_phase.data);
        sc::PhaseExponent p = sc::twist_framing(sc::phase(sc::eta0(sd)), sc::Int(phase_framing));
        json j = sc::phase_to_json(p);
        if (cmd_phase.flags.approx) j["q_approx"] = sc::to_double(p.q());
        emit(j, cmd_phase.flags.json, "q = " + sc::to_string(p.q()) + "  (exp(i*pi*q))");
        return 0;
    }

    if (cmd_report.cmd->parsed()) {
        sc::Int k(report_k), framing(report_framing), cap = enum_cap_from_env();
        if (!report_batch.empty()) {
            std::ifstream in(report_batch);
            if (!in) throw sc::Error("cannot open batch file: " + report_batch);
            json arr = json::array();
            std::string line;
            std::size_t lineno = 0;
            while (std::getline(in, line)) {
                ++lineno;
                if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
                try {
                    arr.push_back(sc::report_to_json(
                        sc::build_report(sc::parse_seifert(line), k, framing, cap),
                        cmd_report.flags.approx));
                } catch (const sc::Error& e) {
                    throw sc::Error("line " + std::to_string(lineno) + ": " + e.what());
                }
            }
            std::cout << arr.dump() << "\n";
            return 0;
        }
        if (cmd_report.data.empty())
            throw sc::Error("report requires Seifert data or --batch");
        sc::PartitionReport r =
            sc::build_report(sc::parse_seifert(cmd_report.data), k, framing, cap);
        emit(sc::report_to_json(r, cmd_report.flags.approx), cmd_report.flags.json,
             report_text(r));
        return 0;
    }

    if (cmd_grav->parsed()) {
        sc::Rational v = sc::grav_cs_adiabatic(parse_rational(grav_r), parse_rational(grav_f2),
                                               parse_rational(grav_eps));
        json j{{"cs", sc::to_string(v)}};
        if (grav_flags.approx) j["cs_approx"] = sc::to_double(v);
        emit(j, grav_flags.json, "cs = " + sc::to_string(v));
        return 0;
    }

    if (cmd_cat->parsed()) {
        auto entries = cat_file.empty() ? sc::builtin_catalog() : sc::load_catalog(cat_file);
        if (cat_flags.json) {
            json arr = json::array();
            for (const auto& e : entries)
                arr.push_back({{"name", e.name},
                               {"seifert", sc::render_seifert(e.data)},
                               {"notes", e.notes}});
            std::cout << json{{"entries", arr}}.dump() << "\n";
        } else {
            for (const auto& e : entries)
                std::cout << e.name << ": " << sc::render_seifert(e.data) << "  -- " << e.notes
                          << "\n";
        }
        return 0;
    }

    return 1;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const seifert_cs::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
