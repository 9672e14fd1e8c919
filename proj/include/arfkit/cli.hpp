#pragma once

/**
 * @file cli.hpp
 * @brief The arfkit command line. run() is the whole program minus main(),
 *        so tests can drive it with string streams.
 *
 * Exit codes: 0 success, 1 property fails (not Arf, verification found a
 * violation), 2 usage or input error, 3 internal error.
 */

#include "arf.hpp"
#include "decomp.hpp"
#include "error.hpp"
#include "ideal.hpp"
#include "json.hpp"
#include "semigroup.hpp"
#include "verify.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace arfkit::cli {

enum exit_code : int { ok = 0, property_fails = 1, usage = 2, internal = 3 };

/// "3,11,13" -> {3, 11, 13}; anything but comma-separated positive integers is rejected.
inline std::vector<int> parse_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (item.empty() || used != item.size() || v < 1 || v > (1 << 30)) {
            throw error(errc::invalid_argument, "malformed list \"" + text +
                                                    "\": expected comma-separated positive integers");
        }
        out.push_back(static_cast<int>(v));
    }
    if (out.empty() || text.back() == ',') {
        throw error(errc::invalid_argument, "malformed list \"" + text + "\"");
    }
    return out;
}

struct Input {
    std::string generators;
    std::string mult_seq;
    long long max_bound = 1000000;

    bool given() const { return !generators.empty() || !mult_seq.empty(); }

    NumericalSemigroup semigroup() const {
        if (generators.empty() == mult_seq.empty()) {
            throw error(errc::invalid_argument, "give either a generator list or --mult-seq, not both");
        }
        if (!generators.empty()) {
            const std::vector<int> g = parse_list(generators);
            const auto [lo, hi] = std::minmax_element(g.begin(), g.end());
            const long long window = static_cast<long long>(*hi) * *lo + *hi;
            if (window > max_bound) {
                throw error(errc::bound_exceeded, "membership window " + std::to_string(window) +
                                                      " exceeds --max-bound " +
                                                      std::to_string(max_bound));
            }
            return NumericalSemigroup::from_generators(g);
        }
        const std::vector<int> e = parse_list(mult_seq);
        long long total = 0;
        for (int v : e) total += v;
        if (total > max_bound) {
            throw error(errc::bound_exceeded, "conductor " + std::to_string(total) +
                                                  " exceeds --max-bound " + std::to_string(max_bound));
        }
        return MultiplicitySequence::make(e).semigroup();
    }
};

namespace detail {

inline void print(std::ostream& out, const json::Json& j) { out << json::dump(j) << "\n"; }

inline std::string factor_name(const IntegrallyClosedIdeal& f) {
    return "m(" + f.ambient().to_string() + ")";
}

inline int report_not_arf(const NumericalSemigroup& s, const ArfCheck& pat, bool as_json,
                          std::ostream& out) {
    if (as_json) {
        print(out, json::Json{{"semigroup", json::to_json(s)},
                              {"arf", false},
                              {"witness", json::to_json(*pat.witness)}});
    } else {
        out << s.to_string() << " is not Arf; " << pat.witness->describe() << "\n";
    }
    return property_fails;
}

inline int cmd_check(const NumericalSemigroup& s, bool as_json, std::ostream& out) {
    const ArfCheck pat = is_arf_pattern(s);
    const ArfCheck stab = is_arf_stability(s);
    ARFKIT_ENSURE(pat.holds == stab.holds, "Arf checkers disagree on " + s.to_string());
    if (!pat.holds) return report_not_arf(s, pat, as_json, out);
    if (as_json) {
        print(out, json::Json{{"semigroup", json::to_json(s)},
                              {"arf", true},
                              {"minimal_multiplicity", has_minimal_multiplicity(s)}});
    } else {
        out << s.to_string() << " is Arf\n";
    }
    return ok;
}

inline int cmd_closure(const NumericalSemigroup& s, bool as_json, std::ostream& out) {
    const NumericalSemigroup c = arf_closure(s);
    if (as_json) {
        print(out, json::Json{{"semigroup", json::to_json(s)}, {"closure", json::to_json(c)}});
    } else {
        out << "Arf closure of " << s.to_string() << ": " << c.to_string() << " = "
            << c.values().to_string() << "\n";
    }
    return ok;
}

inline int cmd_tower(const NumericalSemigroup& s, bool as_json, std::ostream& out) {
    if (const ArfCheck pat = is_arf_pattern(s); !pat) return report_not_arf(s, pat, as_json, out);
    const LipmanTower t = lipman_tower(s);
    if (as_json) {
        print(out, json::to_json(t));
        return ok;
    }
    for (std::size_t i = 0; i < t.rings.size(); ++i) {
        out << "A_" << i << " = " << t.rings[i].to_string();
        if (i < t.sequence.size()) out << "  e = " << t.sequence[i];
        out << "\n";
    }
    out << "multiplicity sequence:";
    for (int e : t.sequence.entries()) out << " " << e;
    out << "\n";
    return ok;
}

inline int cmd_decompose(const NumericalSemigroup& s, int a, bool as_json, std::ostream& out) {
    if (!s.contains(a)) principal_closure(s, a); // NotInSemigroup before NotArf
    if (const ArfCheck pat = is_arf_pattern(s); !pat) return report_not_arf(s, pat, as_json, out);
    const DecompositionResult r = decompose(s, a);
    ARFKIT_ENSURE(decompose_fast(s, a) == r, "tower formula disagrees with the recursion");
    if (as_json) {
        print(out, json::to_json(r));
        return r.verified ? ok : internal;
    }
    out << "S = " << s.to_string() << ", a = " << a << "\n";
    out << "I = " << principal_closure(s, a).values().to_string() << "\n";
    for (const auto& st : r.steps) {
        out << "n=" << st.index << "  R = " << st.ring.to_string()
            << "  I_n = " << st.ideal.values().to_string();
        if (st.radical) out << "  rad = " << st.radical->values().to_string();
        out << "  shift " << st.shift << "\n";
    }
    out << "q = " << r.q << "\n";
    out << "I = ";
    if (r.factors.empty()) out << "R";
    for (std::size_t i = 0; i < r.factors.size(); ++i) {
        out << (i ? " * " : "") << factor_name(r.factors[i]);
    }
    out << "\nB = I:I = " << r.endpoint_B.to_string() << "\n";
    out << "verified: " << (r.verified ? "yes" : "NO") << "\n";
    return r.verified ? ok : internal;
}

inline int cmd_enumerate(const std::optional<NumericalSemigroup>& s, int arf_max_conductor,
                         bool as_json, std::ostream& out) {
    if (s) {
        if (const ArfCheck pat = is_arf_pattern(*s); !pat) {
            return report_not_arf(*s, pat, as_json, out);
        }
        const auto ideals = enumerate_non_normal_ideals(*s);
        if (as_json) {
            json::Json list = json::Json::array();
            for (const auto& e : ideals) list.push_back(json::to_json(e));
            print(out, json::Json{{"semigroup", json::to_json(*s)}, {"ideals", std::move(list)}});
        } else {
            out << ideals.size() << " integrally closed ideals of " << s->to_string()
                << " that are not ideals of k[[t]]\n";
            for (const auto& e : ideals) out << "  " << e.values().to_string() << "\n";
        }
        return ok;
    }
    const auto seqs = arf_sequences(arf_max_conductor);
    if (as_json) {
        json::Json list = json::Json::array();
        for (const auto& q : seqs) {
            list.push_back(json::Json{{"multiplicity_sequence", q.entries()},
                                      {"semigroup", json::to_json(q.semigroup())}});
        }
        print(out, json::Json{{"max_conductor", arf_max_conductor}, {"arf_semigroups", std::move(list)}});
    } else {
        out << seqs.size() << " Arf semigroups with conductor <= " << arf_max_conductor << "\n";
        for (const auto& q : seqs) {
            out << "  (";
            for (std::size_t i = 0; i < q.size(); ++i) out << (i ? "," : "") << q[i];
            out << ")  " << q.semigroup().to_string() << "\n";
        }
    }
    return ok;
}

inline int cmd_stats(const NumericalSemigroup& s, bool as_json, std::ostream& out) {
    const SemigroupStats st = s.stats();
    if (as_json) {
        print(out, json::Json{{"multiplicity", st.multiplicity},
                              {"conductor", st.conductor},
                              {"frobenius", st.frobenius},
                              {"genus", st.genus},
                              {"embedding_dimension", st.embedding_dimension},
                              {"minimal_generators", st.minimal_generators}});
        return ok;
    }
    out << "semigroup           " << s.to_string() << "\n"
        << "small elements      " << s.values().to_string() << "\n"
        << "multiplicity        " << st.multiplicity << "\n"
        << "conductor           " << st.conductor << "\n"
        << "frobenius           " << st.frobenius << "\n"
        << "genus               " << st.genus << "\n"
        << "embedding dimension " << st.embedding_dimension << "\n";
    return ok;
}

inline int cmd_verify(const verify::Report& rep, bool as_json, std::ostream& out) {
    if (as_json) {
        print(out, json::to_json(rep));
    } else {
        for (const auto& t : rep.tallies()) {
            out << (t.ok() ? "ok   " : "FAIL ") << t.name << "  " << t.passed << "/" << t.checked;
            if (t.counterexample) out << "  counterexample: " << *t.counterexample;
            out << "\n";
        }
        out << (rep.ok() ? "all properties hold" : std::to_string(rep.failures()) + " failures")
            << "\n";
    }
    return rep.ok() ? ok : property_fails;
}

} // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Arf numerical semigroup rings: Arf tests, closures, Lipman towers and the "
                 "decomposition of integrally closed ideals into maximal ideals"};
    app.name("arfkit");
    app.require_subcommand(1);

    Input input;
    bool as_json = false;
    int value = -1;
    int exhaustive = -1;
    int random_count = 0;
    int random_conductor = 30;
    std::uint64_t seed = 1;
    int arf_max_conductor = -1;

    const auto add_input = [&](CLI::App* sub) {
        sub->add_option("generators", input.generators, "comma-separated generators, e.g. 3,11,13");
        sub->add_option("--mult-seq", input.mult_seq, "multiplicity sequence, e.g. 3,3,3,2");
        sub->add_option("--max-bound", input.max_bound, "largest membership window accepted")
            ->check(CLI::PositiveNumber);
        sub->add_flag("--json", as_json, "JSON output");
    };

    auto* check = app.add_subcommand("check", "is S Arf? prints a witness when not");
    add_input(check);
    auto* closure = app.add_subcommand("closure", "smallest Arf semigroup containing S");
    add_input(closure);
    auto* tower = app.add_subcommand("tower", "Lipman tower and multiplicity sequence of an Arf S");
    add_input(tower);
    auto* decomp = app.add_subcommand("decompose", "write closure(t^a R) as a product of maximal ideals");
    add_input(decomp);
    decomp->add_option("--value", value, "the exponent a, an element of S")->required();
    auto* enumerate = app.add_subcommand(
        "enumerate", "closed ideals that are not k[[t]]-ideals, or all Arf semigroups up to a conductor");
    add_input(enumerate);
    enumerate->add_option("--arf-max-conductor", arf_max_conductor,
                          "list every Arf semigroup with conductor at most this")
        ->check(CLI::NonNegativeNumber);
    auto* verify_cmd = app.add_subcommand("verify", "run the property battery");
    add_input(verify_cmd);
    verify_cmd->add_option("--exhaustive-conductor", exhaustive,
                           "every semigroup with conductor at most this")
        ->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--random", random_count, "number of random semigroups")
        ->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--random-conductor", random_conductor,
                           "conductor cap for random semigroups")
        ->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--seed", seed, "seed for --random");
    auto* stats = app.add_subcommand("stats", "multiplicity, conductor, genus, generators");
    add_input(stats);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    try {
        if (check->parsed()) return detail::cmd_check(input.semigroup(), as_json, out);
        if (closure->parsed()) return detail::cmd_closure(input.semigroup(), as_json, out);
        if (tower->parsed()) return detail::cmd_tower(input.semigroup(), as_json, out);
        if (decomp->parsed()) return detail::cmd_decompose(input.semigroup(), value, as_json, out);
        if (stats->parsed()) return detail::cmd_stats(input.semigroup(), as_json, out);
        if (enumerate->parsed()) {
            if (input.given() == (arf_max_conductor >= 0)) {
                throw error(errc::invalid_argument,
                            "enumerate takes either a semigroup or --arf-max-conductor");
            }
            std::optional<NumericalSemigroup> s;
            if (input.given()) s = input.semigroup();
            return detail::cmd_enumerate(s, arf_max_conductor, as_json, out);
        }
        // verify
        const int modes = int(input.given()) + int(exhaustive >= 0) + int(random_count > 0);
        if (modes != 1) {
            throw error(errc::invalid_argument,
                        "verify takes exactly one of: a semigroup, --exhaustive-conductor, --random");
        }
        if (input.given()) return detail::cmd_verify(verify::run_single(input.semigroup()), as_json, out);
        if (exhaustive >= 0) return detail::cmd_verify(verify::run_exhaustive(exhaustive), as_json, out);
        return detail::cmd_verify(verify::run_random(random_count, random_conductor, seed), as_json, out);
    } catch (const not_arf_error& e) {
        err << "arfkit: " << e.what() << "\n";
        return property_fails;
    } catch (const error& e) {
        err << "arfkit: " << to_string(e.code()) << ": " << e.what() << "\n";
        return e.is_usage_error() ? usage : internal;
    } catch (const std::exception& e) {
        err << "arfkit: internal error: " << e.what() << "\n";
        return internal;
    }
}

} // namespace arfkit::cli
