// weylcheck: exhaustive checks of the n^std characterization of sufficiently
// regular weights, and regularity decisions for infinitesimal characters.

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "ew/regularity.hpp"
#include "ew/report.hpp"
#include "ew/root_system.hpp"
#include "ew/tables.hpp"
#include "ew/verifier.hpp"
#include "ew/weyl.hpp"

namespace {

using ew::Json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitFailure = 2;
constexpr int kExitIrregular = 3;

struct RunConfig {
    std::string type;
    int rank = 0;
    int node = 0;
    unsigned workers = std::max(1U, std::thread::hardware_concurrency());
    std::uint64_t budget = 10'000'000;
    std::string format = "json";
    std::string out;
    std::string resume;
    std::string strategy = "rescaled";
    double progress = 10;
    int table = 0;
    std::string input = "-";
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const RunConfig& cfg, const std::string& text)
{
    if (cfg.out.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream f(cfg.out, std::ios::trunc);
    if (!f) throw ConfigError("cannot open " + cfg.out);
    f << text;
}

ew::FactorType factor_of(const std::string& type, int rank, int node)
{
    if (type.empty()) throw ConfigError("--type is required");
    return ew::FactorType::from_tag(type, rank, node);
}

Json vec_json(const ew::Vec& v)
{
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.to_string());
    return a;
}

ew::Vec vec_from(const Json& j)
{
    ew::Vec v;
    for (const auto& x : j) {
        if (x.is_number_integer()) v.emplace_back(x.get<std::int64_t>());
        else v.push_back(ew::Scalar::parse(x.get<std::string>()));
    }
    return v;
}

int cmd_verify(const RunConfig& cfg)
{
    const ew::FactorType f = factor_of(cfg.type, cfg.rank, cfg.node);
    ew::VerifyOptions opts;
    opts.workers = cfg.workers;
    opts.budget = cfg.budget;
    opts.checkpoint = cfg.resume;
    opts.progress_seconds = cfg.progress;
    if (cfg.strategy == "literal") opts.strategy = ew::Strategy::Literal;
    else if (cfg.strategy != "rescaled") throw ConfigError("--strategy must be rescaled or literal");

    const ew::RootSystem rs = ew::build_root_system(f);
    const ew::VerificationReport rep = f.exceptional() ? ew::verify_all(rs, opts) : ew::verify_classical(f, opts);
    if (cfg.format == "json") emit(cfg, to_json(rep, rs).dump(2) + "\n");
    else if (cfg.format == "csv") emit(cfg, ew::report_csv(rep));
    else emit(cfg, ew::report_text(rep, rs));
    return rep.success() ? kExitOk : kExitFailure;
}

int cmd_emit_tables(const RunConfig& cfg)
{
    const ew::FactorType f = factor_of(cfg.type, cfg.rank, cfg.node);
    const ew::WeightTable* t = nullptr;
    if (f.family == ew::Family::E6 && (cfg.table == 0 || cfg.table == 1)) t = &ew::e6_table();
    else if (f.family == ew::Family::E7 && cfg.table == 2) t = &ew::e7_inner_table();
    else if (f.family == ew::Family::E7 && (cfg.table == 0 || cfg.table == 3)) t = &ew::e7_outer_table();
    if (!t) throw ConfigError("emit-tables: E6 has table 1, E7 has tables 2 and 3");

    const ew::RootSystem rs = ew::build_root_system(f);
    std::ostringstream out;
    if (cfg.format == "json") {
        Json rows = Json::array();
        for (std::size_t r = 0; r < t->rows.size(); ++r) {
            const ew::WeylWord w = t->word(r);
            rows.push_back({{"label", t->rows[r].label},
                            {"weight", vec_json(ew::apply_word(rs, w, t->base()))},
                            {"length", w.size()},
                            {"word", ew::to_string(w)}});
        }
        out << Json{{"table", t->name}, {"rows", rows}}.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < rs.dim; ++i) out << "x" << i + 1 << ",";
        out << "length,word\n";
        for (std::size_t r = 0; r < t->rows.size(); ++r) {
            const ew::WeylWord w = t->word(r);
            for (const auto& x : ew::apply_word(rs, w, t->base())) out << x.to_string() << ",";
            out << w.size() << "," << ew::to_string(w) << "\n";
        }
    }
    emit(cfg, out.str());
    return kExitOk;
}

Json witness_json(const ew::RootSystem& rs, const ew::RegularityVerdict& v)
{
    if (!v.witness) return nullptr;
    return {{"element", vec_json(v.witness->element)},
            {"root", vec_json(rs.nstd_roots.at(static_cast<std::size_t>(v.witness->root)).vec)},
            {"value", v.witness->value.to_string()}};
}

int cmd_check_regularity(const RunConfig& cfg)
{
    Json in;
    try {
        if (cfg.input == "-") {
            std::cin >> in;
        } else {
            std::ifstream f(cfg.input);
            if (!f) throw ConfigError("cannot open " + cfg.input);
            f >> in;
        }
    } catch (const Json::exception& e) {
        throw ConfigError(std::string("malformed input JSON: ") + e.what());
    }

    try {
        const std::string kind = in.value("orbit_kind", "G");
        if (kind != "G" && kind != "M") throw ConfigError("orbit_kind must be G or M");
        const bool extend = in.value("extend", false);
        if (extend && kind != "G") throw ConfigError("extend applies to G-orbit characters");

        bool regular = true;
        Json factors = Json::array();
        for (const auto& fj : in.at("factors")) {
            const ew::FactorType f =
                factor_of(fj.at("type").get<std::string>(), fj.value("rank", 0), fj.value("node", 0));
            const ew::RootSystem rs = ew::build_root_system(f);
            ew::CharacterRep ch{vec_from(fj.at("weight")), kind == "G" ? ew::OrbitKind::G : ew::OrbitKind::M};
            const bool noncompact = fj.value("noncompact", true);
            Json r = {{"factor", f.name()}, {"noncompact", noncompact}};
            if (!noncompact) {
                r["regular"] = nullptr;
                factors.push_back(r);
                continue;
            }
            if (extend) {
                const ew::Extension e = ew::extend_character(rs, ch);
                const ew::RegularityVerdict v = ew::is_m_regular(rs, e.m_character);
                r["orbit_representative"] = vec_json(e.orbit_representative);
                r["m_weight"] = vec_json(e.m_character.weight);
                r["regular"] = v.regular;
                r["orbit_size"] = v.orbit_size;
                r["witness"] = witness_json(rs, v);
                regular = regular && v.regular;
            } else {
                const ew::RegularityVerdict v =
                    kind == "G" ? ew::is_g_regular(rs, ch) : ew::is_m_regular(rs, ch);
                r["regular"] = v.regular;
                r["orbit_size"] = v.orbit_size;
                r["witness"] = witness_json(rs, v);
                regular = regular && v.regular;
            }
            factors.push_back(r);
        }
        Json out = {{"orbit_kind", extend ? "M" : kind}, {"extended", extend}, {"regular", regular}, {"factors", factors}};
        emit(cfg, out.dump(2) + "\n");
        return regular ? kExitOk : kExitIrregular;
    } catch (const Json::exception& e) {
        throw ConfigError(std::string("bad input: ") + e.what());
    }
}

int cmd_describe(const RunConfig& cfg)
{
    const ew::FactorType f = factor_of(cfg.type, cfg.rank, cfg.node);
    const ew::RootSystem rs = ew::build_root_system(f);
    ew::Vec sum(rs.dim);
    for (const auto& r : rs.nstd_roots) sum = sum + r.vec;
    ew::Vec diff = sum - ew::Scalar(rs.dual_coxeter) * rs.lambda0;
    bool identity = true;
    // Type A weights live modulo the all-ones vector.
    for (const auto& x : diff)
        if (x != (f.family == ew::Family::A ? diff.front() : ew::Scalar(0))) identity = false;

    Json simple = Json::array();
    for (const auto& r : rs.simple_roots) simple.push_back(vec_json(r.vec));
    Json j = {{"factor", f.name()},
              {"W", rs.weyl_order()},
              {"dimV0", rs.dim_v0()},
              {"d", rs.nstd_roots.size()},
              {"roots", rs.all_roots.size()},
              {"lambda0", vec_json(rs.lambda0)},
              {"h_dual", rs.dual_coxeter},
              {"h_dual_identity", identity},
              {"hermitian_node", rs.hermitian_node},
              {"wm_generators", rs.wm_generators},
              {"simple_roots", simple},
              {"bound", rs.elimination_bound()}};
    if (cfg.format == "text") {
        std::ostringstream out;
        for (const auto& [k, v] : j.items()) out << k << " " << v.dump() << "\n";
        emit(cfg, out.str());
    } else {
        emit(cfg, j.dump(2) + "\n");
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact Weyl-group verification of sufficiently regular weights"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto factor_flags = [&](CLI::App* c) {
        c->add_option("--type", cfg.type, "a, b, c, d-r, d-h, e6 or e7")
            ->check(CLI::IsMember({"a", "b", "c", "d-r", "d-h", "e6", "e7"}));
        c->add_option("--rank", cfg.rank, "rank n (classical types)");
        c->add_option("--node", cfg.node, "distinguished node r (type A)");
        c->add_option("--out", cfg.out, "write output here instead of stdout");
    };

    auto* verify = app.add_subcommand("verify", "run the exhaustive check for one factor");
    factor_flags(verify);
    verify->add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--budget", cfg.budget, "classical limit on |W| * |differences|")->check(CLI::PositiveNumber);
    verify->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv", "text"}));
    verify->add_option("--resume", cfg.resume, "checkpoint file, created or continued");
    verify->add_option("--strategy", cfg.strategy, "rescaled or literal")->check(CLI::IsMember({"rescaled", "literal"}));
    verify->add_option("--progress", cfg.progress, "seconds between progress lines on stderr (0: none)");

    auto* tables = app.add_subcommand("emit-tables", "print the minuscule-orbit tables");
    factor_flags(tables);
    tables->add_option("--table", cfg.table, "1 (E6), 2 or 3 (E7)");
    tables->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv", "text"}));

    auto* check = app.add_subcommand("check-regularity", "decide regularity of characters given as JSON");
    check->add_option("input", cfg.input, "input JSON file, - for stdin");
    check->add_option("--out", cfg.out, "write output here instead of stdout");

    auto* describe = app.add_subcommand("describe", "summarize one factor");
    factor_flags(describe);
    describe->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (*verify) return cmd_verify(cfg);
        if (*tables) {
            if (cfg.format == "text" || tables->count("--format") == 0) cfg.format = "csv";
            return cmd_emit_tables(cfg);
        }
        if (*check) return cmd_check_regularity(cfg);
        if (*describe) return cmd_describe(cfg);
    } catch (const std::exception& e) {
        std::cerr << "weylcheck: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
