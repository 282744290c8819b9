#include "ew/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ew {

namespace {

Json tally_json(const Tally& t)
{
    Json f = Json::array();
    for (const auto& p : t.failures)
        f.push_back({{"w_index", p.w_index},
                     {"w", p.w},
                     {"diff_index", p.diff_index},
                     {"verdict", to_string(p.verdict)},
                     {"root", p.root},
                     {"value", p.value},
                     {"eliminations", p.eliminations}});
    return {{"elements", t.elements},
            {"pairs_total", t.pairs_total},
            {"pairs_no_solution", t.pairs_no_solution},
            {"pairs_forced", t.pairs_forced},
            {"pairs_failed", t.pairs_failed},
            {"eliminations_total", t.eliminations_total},
            {"eliminations_actual", t.eliminations_actual},
            {"failures", f}};
}

Verdict verdict_from(const std::string& s)
{
    if (s == "NoSolution") return Verdict::NoSolution;
    if (s == "ForcedRoot") return Verdict::ForcedRoot;
    return Verdict::Failure;
}

Tally tally_from(const Json& j)
{
    Tally t;
    t.elements = j.at("elements").get<std::uint64_t>();
    t.pairs_total = j.at("pairs_total").get<std::uint64_t>();
    t.pairs_no_solution = j.at("pairs_no_solution").get<std::uint64_t>();
    t.pairs_forced = j.at("pairs_forced").get<std::uint64_t>();
    t.pairs_failed = j.at("pairs_failed").get<std::uint64_t>();
    t.eliminations_total = j.at("eliminations_total").get<std::uint64_t>();
    t.eliminations_actual = j.at("eliminations_actual").get<std::uint64_t>();
    for (const auto& f : j.at("failures")) {
        PairOutcome p;
        p.w_index = f.at("w_index").get<std::uint64_t>();
        p.w = f.at("w").get<std::string>();
        p.diff_index = f.at("diff_index").get<std::size_t>();
        p.verdict = verdict_from(f.at("verdict").get<std::string>());
        p.root = f.at("root").get<int>();
        p.value = f.at("value").get<int>();
        p.eliminations = f.at("eliminations").get<std::uint64_t>();
        t.failures.push_back(std::move(p));
    }
    return t;
}

}  // namespace

Json to_json(const PairOutcome& p, const RootSystem& rs)
{
    Json j = {{"w", p.w}, {"w_index", p.w_index}, {"diff_index", p.diff_index},
              {"difference", to_string(rs.v0_differences.at(p.diff_index))}, {"verdict", to_string(p.verdict)}};
    if (p.verdict == Verdict::ForcedRoot) {
        j["root"] = to_string(rs.nstd_roots.at(static_cast<std::size_t>(p.root)).vec);
        j["value"] = p.value;
    }
    return j;
}

Json to_json(const VerificationReport& r, const RootSystem& rs, bool with_elapsed)
{
    Json failures = Json::array();
    for (const auto& f : r.tally.failures) failures.push_back(to_json(f, rs));
    Json j = {{"factor", r.factor.name()},
              {"pairs_total", r.tally.pairs_total},
              {"pairs_no_solution", r.tally.pairs_no_solution},
              {"pairs_forced", r.tally.pairs_forced},
              {"eliminations_total", r.tally.eliminations_total},
              {"eliminations_bound", r.eliminations_bound}};
    if (with_elapsed) j["elapsed_ms"] = static_cast<std::uint64_t>(r.elapsed_ms);
    j["success"] = r.success();
    j["failures"] = failures;
    j["pairs_failed"] = r.tally.pairs_failed;
    j["eliminations_actual"] = r.tally.eliminations_actual;
    j["weyl_order"] = r.weyl_order;
    j["elements_enumerated"] = r.tally.elements;
    if (r.if_direction) {
        const auto& d = *r.if_direction;
        Json orbits = Json::array();
        for (std::size_t i = 0; i < d.orbits.size(); ++i) {
            Json w = nullptr;
            if (i < d.witnesses.size() && d.witnesses[i]) {
                const auto& x = *d.witnesses[i];
                w = {{"difference", to_string(rs.v0_differences.at(x.diff))},
                     {"root", to_string(rs.nstd_roots.at(static_cast<std::size_t>(x.root)).vec)},
                     {"value", x.value}};
            }
            orbits.push_back({{"size", d.orbits[i].size()}, {"witness", w}});
        }
        j["if_direction"] = {{"transitive", d.transitive()},
                             {"orbits_are_length_classes", d.orbits_are_length_classes},
                             {"orbits", orbits}};
    }
    if (r.converse) j["converse_membership"] = {{"checked", r.converse->checked}, {"missing", r.converse->missing}};
    return j;
}

std::string report_text(const VerificationReport& r, const RootSystem& rs)
{
    std::ostringstream out;
    out << "factor              " << r.factor.name() << "\n"
        << "weyl order          " << r.weyl_order << " (enumerated " << r.tally.elements << ")\n"
        << "pairs total         " << r.tally.pairs_total << "\n"
        << "pairs no solution   " << r.tally.pairs_no_solution << "\n"
        << "pairs forced        " << r.tally.pairs_forced << "\n"
        << "pairs failed        " << r.tally.pairs_failed << "\n"
        << "eliminations        " << r.tally.eliminations_total << " (bound " << r.eliminations_bound << ", actual "
        << r.tally.eliminations_actual << ")\n";
    if (r.if_direction)
        out << "if direction        orbits=" << r.if_direction->orbits.size()
            << " length classes=" << (r.if_direction->orbits_are_length_classes ? "yes" : "no")
            << " witnesses=" << (r.if_direction->witness_found() ? "yes" : "no") << "\n";
    if (r.converse) out << "converse membership " << (r.converse->ok() ? "ok" : "MISSING") << "\n";
    out << "elapsed ms          " << static_cast<std::uint64_t>(r.elapsed_ms) << "\n"
        << "success             " << (r.success() ? "yes" : "no") << "\n";
    for (const auto& f : r.tally.failures)
        out << "failure             w=" << f.w << " difference=" << to_string(rs.v0_differences.at(f.diff_index)) << "\n";
    return out.str();
}

std::string report_csv(const VerificationReport& r)
{
    std::ostringstream out;
    out << "factor,pairs_total,pairs_no_solution,pairs_forced,pairs_failed,eliminations_total,eliminations_bound,"
           "elapsed_ms,success\n"
        << r.factor.name() << "," << r.tally.pairs_total << "," << r.tally.pairs_no_solution << ","
        << r.tally.pairs_forced << "," << r.tally.pairs_failed << "," << r.tally.eliminations_total << ","
        << r.eliminations_bound << "," << static_cast<std::uint64_t>(r.elapsed_ms) << ","
        << (r.success() ? "true" : "false") << "\n";
    return out.str();
}

void write_checkpoint(const std::string& path, const Checkpoint& c)
{
    Json units = Json::object();
    for (const auto& [u, t] : c.units) units[std::to_string(u)] = tally_json(t);
    Json j = {{"factor", c.factor}, {"strategy", c.strategy}, {"elapsed_ms", c.elapsed_ms}, {"units", units}};
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write checkpoint " + tmp);
        out << j.dump() << "\n";
        out.flush();
        if (!out) throw std::runtime_error("cannot write checkpoint " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) throw std::runtime_error("cannot replace checkpoint " + path);
}

std::optional<Checkpoint> read_checkpoint(const std::string& path)
{
    std::ifstream in(path);
    if (!in) return std::nullopt;
    Json j;
    try {
        in >> j;
        Checkpoint c;
        c.factor = j.at("factor").get<std::string>();
        c.strategy = j.at("strategy").get<std::string>();
        c.elapsed_ms = j.at("elapsed_ms").get<double>();
        for (const auto& [k, v] : j.at("units").items()) c.units[std::stoul(k)] = tally_from(v);
        return c;
    } catch (const Json::exception& e) {
        throw std::runtime_error("unreadable checkpoint " + path + ": " + e.what());
    }
}

}  // namespace ew
