#include "symtor/report.hpp"

#include <algorithm>
#include <memory>
#include <set>
#include <sstream>

#include <json.hpp>

#include "symtor/duality.hpp"
#include "symtor/equivariant.hpp"
#include "symtor/oracle.hpp"
#include "symtor/render.hpp"
#include "symtor/stability.hpp"
#include "symtor/verify.hpp"

namespace symtor {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const Partition& mu) {
    ordered_json a = ordered_json::array();
    for (int i = 0; i < mu.length(); ++i) a.push_back(mu[i]);
    return a;
}

ordered_json to_json(const ExtendedPartition& rho) {
    ordered_json a = ordered_json::array();
    for (int i = 0; i < rho.length(); ++i) {
        if (rho[i].is_infinite())
            a.push_back("inf");
        else
            a.push_back(rho[i].value());
    }
    return a;
}

ordered_json to_json(const BlockSignature& pi) {
    ordered_json a = ordered_json::array();
    for (const Hook& h : pi.hooks()) a.push_back(ordered_json::array({h.arm, h.leg}));
    return a;
}

ordered_json vec_json(const std::vector<int>& v) {
    ordered_json a = ordered_json::array();
    for (int x : v) a.push_back(x);
    return a;
}

std::string c_string(const std::vector<int>& c) {
    std::ostringstream os;
    os << '(';
    for (size_t k = 0; k < c.size(); ++k) {
        if (k > 0) os << ',';
        os << c[k];
    }
    os << ')';
    return os.str();
}

std::pair<Task, int> parse_task_name(const std::string& name) {
    if (name == "betti") return {Task::betti, -1};
    if (name == "equivariant") return {Task::equivariant, -1};
    if (name == "invariant") return {Task::invariant, -1};
    if (name == "dual") return {Task::dual, -1};
    if (name == "extremal") return {Task::extremal, -1};
    if (name == "reg-pdim") return {Task::reg_pdim, -1};
    if (name == "verify") return {Task::verify, -1};
    if (name.rfind("propagate:", 0) == 0) {
        const std::string arg = name.substr(10);
        size_t used = 0;
        int m = 0;
        try {
            m = std::stoi(arg, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != arg.size() || m < 1)
            throw std::invalid_argument("invalid propagate target in task '" + name + "'");
        return {Task::propagate, m};
    }
    throw std::invalid_argument(
        "unknown task '" + name +
        "' (valid: betti, equivariant, invariant, dual, extremal, reg-pdim, "
        "propagate:M, verify)");
}

void set_tasks(JobSpec& job, const std::vector<std::string>& names) {
    job.tasks.clear();
    job.propagate_target = -1;
    for (const std::string& name : names) {
        auto [task, m] = parse_task_name(name);
        if (task == Task::propagate) {
            if (job.propagate_target >= 0 && job.propagate_target != m)
                throw std::invalid_argument("conflicting propagate targets");
            job.propagate_target = m;
        }
        if (std::find(job.tasks.begin(), job.tasks.end(), task) == job.tasks.end())
            job.tasks.push_back(task);
    }
}

} // namespace

std::string task_name(Task t) {
    switch (t) {
        case Task::betti: return "betti";
        case Task::equivariant: return "equivariant";
        case Task::invariant: return "invariant";
        case Task::dual: return "dual";
        case Task::extremal: return "extremal";
        case Task::reg_pdim: return "reg-pdim";
        case Task::propagate: return "propagate";
        case Task::verify: return "verify";
    }
    return "?";
}

JobSpec parse_job(const std::string& json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const ordered_json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("job document must be a JSON object");

    for (const auto& [key, value] : doc.items()) {
        if (key != "n" && key != "generators" && key != "characteristic" &&
            key != "tasks" && key != "threads")
            throw std::invalid_argument("unknown field '" + key + "' in job document");
    }

    JobSpec job;
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw std::invalid_argument("field 'n' must be an integer");
    job.n = doc["n"].get<int>();
    if (job.n < 1 || job.n > 20)
        throw std::invalid_argument("n must be between 1 and 20");

    if (!doc.contains("generators") || !doc["generators"].is_array())
        throw std::invalid_argument("field 'generators' must be an array");
    for (const auto& g : doc["generators"]) {
        if (!g.is_array())
            throw std::invalid_argument("each generator must be an array of integers");
        std::vector<int> entries;
        for (const auto& v : g) {
            if (!v.is_number_integer())
                throw std::invalid_argument("generator entries must be integers");
            const int x = v.get<int>();
            if (x < 0) throw std::invalid_argument("generator entries must be >= 0");
            entries.push_back(x);
        }
        if (static_cast<int>(entries.size()) != job.n)
            throw std::invalid_argument("generator length mismatch: expected " +
                                        std::to_string(job.n) + " entries");
        std::vector<int> sorted = entries;
        std::sort(sorted.begin(), sorted.end(), std::greater<int>());
        if (sorted != entries) job.generators_reordered = true;
        job.generators.push_back(Partition(std::move(sorted)));
    }

    if (!doc.contains("characteristic") || !doc["characteristic"].is_number_integer())
        throw std::invalid_argument("field 'characteristic' must be an integer");
    const long long ch = doc["characteristic"].get<long long>();
    if (ch < 0) throw std::invalid_argument("characteristic must be 0 or prime");
    job.field = FieldSpec(ch); // validates primality

    if (doc.contains("tasks")) {
        if (!doc["tasks"].is_array())
            throw std::invalid_argument("field 'tasks' must be an array of strings");
        std::vector<std::string> names;
        for (const auto& t : doc["tasks"]) {
            if (!t.is_string())
                throw std::invalid_argument("field 'tasks' must be an array of strings");
            names.push_back(t.get<std::string>());
        }
        set_tasks(job, names);
    }

    if (doc.contains("threads")) {
        if (!doc["threads"].is_number_integer() || doc["threads"].get<int>() < 0)
            throw std::invalid_argument("field 'threads' must be a non-negative integer");
        job.threads = doc["threads"].get<int>();
    }
    return job;
}

void override_tasks(JobSpec& job, const std::vector<std::string>& names) {
    set_tasks(job, names);
}

Report run(const JobSpec& job) {
    if (job.tasks.empty())
        throw std::invalid_argument("no tasks requested");

    const SymIdeal ideal(job.n, job.generators);
    const bool assoc_graded =
        job.field.characteristic > 0 && job.field.characteristic <= job.n;

    std::vector<std::string> warnings;
    if (job.generators_reordered)
        warnings.push_back("generators were reordered into partitions");
    if (assoc_graded)
        warnings.push_back(
            "characteristic 0 < p <= n: block lists describe the associated "
            "graded of a filtration, not a direct sum");

    ordered_json out;
    out["n"] = job.n;
    out["characteristic"] = job.field.characteristic;
    ordered_json gens = ordered_json::array();
    for (const Partition& g : job.generators) gens.push_back(to_json(g));
    out["generators"] = gens;
    ordered_json mingens = ordered_json::array();
    for (const Partition& g : ideal.min_gens()) mingens.push_back(to_json(g));
    out["minimal_generators"] = mingens;
    ordered_json warn = ordered_json::array();
    for (const std::string& w : warnings) warn.push_back(w);
    out["warnings"] = warn;
    out["results"] = ordered_json::object();

    std::ostringstream text;
    text << "n = " << job.n << "\n";
    text << "characteristic = " << job.field.characteristic << "\n";
    text << "generators:";
    for (const Partition& g : job.generators) text << ' ' << to_string(g);
    text << "\nminimal generators:";
    for (const Partition& g : ideal.min_gens()) text << ' ' << to_string(g);
    text << "\n";
    for (const std::string& w : warnings) text << "warning: " << w << "\n";

    Report report;

    // The equivariant table backs several tasks; compute it at most once.
    std::unique_ptr<EquivariantTor> tor;
    auto need_tor = [&]() -> const EquivariantTor& {
        if (!tor)
            tor = std::make_unique<EquivariantTor>(
                equivariant_tor(ideal, job.field, job.threads));
        return *tor;
    };

    for (Task task : job.tasks) {
        switch (task) {
            case Task::betti: {
                const BettiTable table = graded_betti(need_tor());
                ordered_json section;
                ordered_json entries = ordered_json::array();
                for (const auto& [key, v] : table.entries())
                    entries.push_back(ordered_json{
                        {"i", key.first}, {"j", key.second}, {"value", v}});
                section["entries"] = entries;
                ordered_json totals = ordered_json::array();
                for (long long t : table.totals()) totals.push_back(t);
                section["totals"] = totals;
                const std::string rendered = render_betti_table(table);
                section["table"] = rendered;
                out["results"]["betti"] = section;
                text << "\n[betti]\n" << rendered;
                break;
            }
            case Task::equivariant: {
                const EquivariantTor& t = need_tor();
                ordered_json section;
                section["associated_graded_only"] = t.associated_graded_only();
                ordered_json comps = ordered_json::array();
                text << "\n[equivariant]\n";
                for (const auto& [key, blocks] : t.entries()) {
                    ordered_json comp;
                    comp["i"] = key.first;
                    comp["mu"] = to_json(key.second);
                    ordered_json bl = ordered_json::array();
                    std::ostringstream line;
                    for (size_t b = 0; b < blocks.size(); ++b) {
                        bl.push_back(ordered_json{{"hooks", to_json(blocks[b].sig)},
                                                  {"multiplicity", blocks[b].multiplicity},
                                                  {"c", vec_json(blocks[b].c)}});
                        if (b > 0) line << " + ";
                        line << blocks[b].multiplicity << " x "
                             << to_string(blocks[b].sig);
                    }
                    comp["blocks"] = bl;
                    comp["dim"] = t.orbit_dim(key.first, key.second);
                    comps.push_back(comp);
                    text << "Tor_" << key.first << '<' << to_string(key.second)
                         << ">: " << line.str() << "\n";
                }
                section["components"] = comps;
                out["results"]["equivariant"] = section;
                break;
            }
            case Task::invariant: {
                const InvariantBetti inv = invariant_betti(ideal, job.field);
                ordered_json section;
                section["associated_graded_warning"] = inv.char_warning;
                ordered_json entries = ordered_json::array();
                text << "\n[invariant]\n";
                for (const auto& [key, g] : inv.entries) {
                    entries.push_back(ordered_json{
                        {"i", key.first}, {"mu", to_json(key.second)}, {"gamma", g}});
                    text << "Tor_" << key.first << "^inv<" << to_string(key.second)
                         << "> = " << g << "\n";
                }
                section["entries"] = entries;
                // the same numbers from the other side: Tor of the
                // unsymmetrization over its Taylor support
                const OracleResult plain = tor_dims_plain(
                    unsymmetrize(job.n, ideal.min_gens()), job.field);
                ordered_json plain_records = ordered_json::array();
                std::map<std::pair<int, Partition>, long long> plain_map;
                for (const auto& [key, dim] : plain.entries()) {
                    ordered_json rec;
                    rec["i"] = key.first;
                    ordered_json a = ordered_json::array();
                    for (int v : key.second) a.push_back(v);
                    rec["a"] = a;
                    rec["dim"] = dim;
                    plain_records.push_back(rec);
                    plain_map[{key.first, part_of(key.second)}] = dim;
                }
                section["unsymmetrization_tor"] = plain_records;
                const bool agree = plain_map == inv.entries;
                section["matches_unsymmetrization"] = agree;
                text << "unsymmetrization Tor "
                     << (agree ? "matches" : "DOES NOT match") << " ("
                     << plain_records.size() << " records)\n";
                out["results"]["invariant"] = section;
                break;
            }
            case Task::dual: {
                const DualGeneratorSet dual = dual_generators(ideal);
                ordered_json section;
                section["cap"] = dual.cap_value;
                ordered_json all = ordered_json::array();
                for (const ExtendedPartition& mu : dual.all) all.push_back(to_json(mu));
                section["dual_generators"] = all;
                ordered_json maximal = ordered_json::array();
                for (const ExtendedPartition& mu : dual.maximal)
                    maximal.push_back(to_json(mu));
                section["maximal"] = maximal;
                out["results"]["dual"] = section;
                text << "\n[dual]\ncap D = " << dual.cap_value << "\ndual generators:";
                for (const ExtendedPartition& mu : dual.all) text << ' ' << to_string(mu);
                text << "\nmaximal dual generators:";
                for (const ExtendedPartition& mu : dual.maximal)
                    text << ' ' << to_string(mu);
                text << "\n";
                break;
            }
            case Task::extremal: {
                const std::vector<ExtremalPair> pairs = extremal_report(ideal);
                ordered_json arr = ordered_json::array();
                text << "\n[extremal]\n";
                for (const ExtremalPair& p : pairs) {
                    arr.push_back(ordered_json{{"i", p.index},
                                               {"lambda", to_json(p.degree)},
                                               {"value", p.value}});
                    text << "extremal pair (" << p.index << ", " << to_string(p.degree)
                         << "): beta = " << p.value << "\n";
                }
                out["results"]["extremal"] = ordered_json{{"pairs", arr}};
                break;
            }
            case Task::reg_pdim: {
                const int reg_q = regularity_quotient(ideal);
                const int pd_q = projective_dimension_quotient(ideal);
                out["results"]["reg-pdim"] =
                    ordered_json{{"reg_quotient", reg_q},
                                 {"pdim_quotient", pd_q},
                                 {"reg_ideal", reg_q + 1},
                                 {"pdim_ideal", pd_q - 1}};
                text << "\n[reg-pdim]\n";
                text << "reg(R/I) = " << reg_q << "\n";
                text << "pdim(R/I) = " << pd_q << "\n";
                text << "reg(I) = " << reg_q + 1 << "\n";
                text << "pdim(I) = " << pd_q - 1 << "\n";
                break;
            }
            case Task::propagate: {
                const int m = job.propagate_target;
                const GammaTable base = base_gamma_table(ideal, job.field, job.threads);
                const GammaTable at_m = propagate(base, m);
                const BettiTable table = betti_from_gamma(at_m);
                ordered_json section;
                section["m"] = m;
                ordered_json records = ordered_json::array();
                text << "\n[propagate:" << m << "]\n";
                text << "gamma table at m = " << m << " (" << at_m.entries().size()
                     << " records)\n";
                for (const auto& [key, g] : at_m.entries()) {
                    records.push_back(ordered_json{{"mu", to_json(key.mu)},
                                                   {"c", vec_json(key.c)},
                                                   {"i", key.i},
                                                   {"gamma", g}});
                    text << "gamma{mu=" << to_string(key.mu) << ", c=" << c_string(key.c)
                         << ", i=" << key.i << "} = " << g << "\n";
                }
                section["gamma"] = records;
                ordered_json entries = ordered_json::array();
                for (const auto& [key, v] : table.entries())
                    entries.push_back(ordered_json{
                        {"i", key.first}, {"j", key.second}, {"value", v}});
                section["betti"] = entries;
                const std::string rendered = render_betti_table(table);
                section["betti_table"] = rendered;
                out["results"]["propagate:" + std::to_string(m)] = section;
                text << "betti table at m = " << m << ":\n" << rendered;
                break;
            }
            case Task::verify: {
                const VerifyOutcome v = verify_against_oracle(ideal, job.field, job.threads);
                report.verify_failed = !v.pass;
                ordered_json section;
                section["pass"] = v.pass;
                ordered_json orbit = ordered_json::array();
                text << "\n[verify]\n";
                for (const OrbitCheck& ch : v.orbit) {
                    orbit.push_back(ordered_json{{"i", ch.i},
                                                 {"mu", to_json(ch.mu)},
                                                 {"formula", ch.formula},
                                                 {"oracle", ch.oracle},
                                                 {"pass", ch.pass}});
                    text << (ch.pass ? "PASS" : "FAIL") << " i=" << ch.i
                         << " mu=" << to_string(ch.mu) << ": formula=" << ch.formula
                         << " oracle=" << ch.oracle << "\n";
                }
                section["orbit_checks"] = orbit;
                ordered_json beyond = ordered_json::array();
                for (const BeyondCheck& ch : v.beyond) {
                    beyond.push_back(ordered_json{{"mu", to_json(ch.mu)},
                                                  {"oracle", ch.oracle_total},
                                                  {"pass", ch.pass}});
                    text << (ch.pass ? "PASS" : "FAIL") << " beyond mu="
                         << to_string(ch.mu) << ": oracle=" << ch.oracle_total << "\n";
                }
                section["beyond_checks"] = beyond;
                out["results"]["verify"] = section;
                text << "verify: " << (v.pass ? "PASS" : "FAIL") << " ("
                     << v.orbit.size() << " orbit checks, " << v.beyond.size()
                     << " beyond checks)\n";
                break;
            }
        }
    }

    report.text = text.str();
    report.json = out.dump(2) + "\n";
    return report;
}

} // namespace symtor
