#pragma once

// Command-line front end.  Subcommands: orbit, weights, factor, charpoly,
// verify, sl2.  Output is JSON (schema 1), LaTeX or plain text; all output is
// deterministic for fixed arguments and seed.  Exit codes: 0 success,
// 1 verification mismatch, 2 usage error.

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <future>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "matrix_oracle.hpp"

namespace liechar {

// worker count for parallel sections: LIECHAR_THREADS overrides the hardware
// count (results are order-independent, so this never changes output bytes)
inline int configured_threads() {
    if (const char* env = std::getenv("LIECHAR_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw > 8 ? 8 : hw);
}

namespace detail {

inline std::vector<int> parse_csv_ints(const std::string& s, const std::string& what) {
    std::vector<int> out;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw Error("cannot parse " + what + " '" + s + "'");
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(cur, &pos);
        } catch (const std::exception&) {
            throw Error("cannot parse " + what + " '" + s + "'");
        }
        if (pos != cur.size()) throw Error("cannot parse " + what + " '" + s + "'");
        out.push_back(v);
        cur.clear();
    };
    for (char c : s) {
        if (c == ',') flush();
        else if (!std::isspace(static_cast<unsigned char>(c))) cur += c;
    }
    flush();
    return out;
}

inline Weight parse_weight_arg(const RootSystem& rs, const std::string& s, const std::string& what) {
    auto coords = parse_csv_ints(s, what);
    if (static_cast<int>(coords.size()) != rs.rank())
        throw Error(what + " '" + s + "' has " + std::to_string(coords.size()) +
                    " coordinates, type " + rs.lie_type.str() + " needs " + std::to_string(rs.rank()));
    return Weight(std::move(coords));
}

inline nlohmann::ordered_json json_int(const Integer& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

inline nlohmann::ordered_json json_weight(const Weight& w) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (int c : w.coords) arr.push_back(c);
    return arr;
}

inline std::string rational_str(const Rational& r) {
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"multiparameter characteristic polynomials of classical Lie algebras"};
    app.require_subcommand(1);

    std::string type_str, format = "json", output_path;
    std::string weight_str, mu_str, highest_str, rep_name = "defining", d_str;
    bool symbolic = false, expand = false, paper_names = false;
    int points = 20, sl2_m = -1;
    std::uint64_t seed = 42;

    const auto format_check = CLI::IsMember({"json", "latex", "text"});

    auto add_common = [&](CLI::App* sub, bool with_format = true) {
        sub->add_option("--type", type_str, "Lie type, e.g. A2, B3, G2")->required();
        if (with_format) sub->add_option("--format", format, "json, latex or text")->check(format_check);
        sub->add_option("--output", output_path, "also write the output to this file");
    };

    auto* orbit_cmd = app.add_subcommand("orbit", "Weyl orbit of a dominant weight");
    add_common(orbit_cmd);
    orbit_cmd->add_option("--weight", weight_str, "dominant weight, comma-separated")->required();

    auto* weights_cmd = app.add_subcommand("weights", "dominant weights and multiplicities of an irreducible module");
    add_common(weights_cmd);
    weights_cmd->add_option("--highest", highest_str, "highest weight, comma-separated")->required();

    auto* factor_cmd = app.add_subcommand("factor", "orbital factor of a dominant weight");
    add_common(factor_cmd);
    factor_cmd->add_option("--mu", mu_str, "dominant weight, comma-separated")->required();
    factor_cmd->add_flag("--symbolic", symbolic, "treat nonzero coordinates as symbols l_i");
    factor_cmd->add_flag("--paper-names", paper_names, "print e2, e3 as p, q");

    auto* charpoly_cmd = app.add_subcommand("charpoly", "factored characteristic polynomial of a module");
    add_common(charpoly_cmd);
    charpoly_cmd->add_option("--highest", highest_str, "highest weight(s), ';'-separated list of comma-separated vectors")
        ->required();
    charpoly_cmd->add_flag("--expand", expand, "also multiply the factors out");
    charpoly_cmd->add_flag("--paper-names", paper_names, "print e2, e3 as p, q");

    auto* verify_cmd = app.add_subcommand("verify", "compare against direct determinants on an explicit representation");
    add_common(verify_cmd);
    verify_cmd->add_option("--rep", rep_name, "defining, adjoint, sym2 or ext2")
        ->check(CLI::IsMember({"defining", "adjoint", "sym2", "ext2"}));
    verify_cmd->add_option("--points", points, "number of random pencil points")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", seed, "random seed");

    auto* sl2_cmd = app.add_subcommand("sl2", "closed-form characteristic polynomial for rank 1");
    sl2_cmd->add_option("--m", sl2_m, "irreducible module of highest weight m");
    sl2_cmd->add_option("--d", d_str, "eigenvalue multiplicities d0,d1,...");
    sl2_cmd->add_option("--format", format, "json, latex or text")->check(format_check);
    sl2_cmd->add_option("--output", output_path, "also write the output to this file");

    {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        try {
            app.parse(reversed);
        } catch (const CLI::ParseError& e) {
            const int code = app.exit(e, out, err);
            return code == 0 ? 0 : 2;
        }
    }

    auto deliver = [&](const std::string& payload) {
        out << payload << "\n";
        if (!output_path.empty()) {
            std::ofstream f(output_path);
            if (!f) throw Error("cannot open output file '" + output_path + "'");
            f << payload << "\n";
        }
    };

    const VarNames names{paper_names};

    try {
        if (app.got_subcommand(orbit_cmd)) {
            const RootSystem rs = build(parse_lie_type(type_str));
            const Weight w = detail::parse_weight_arg(rs, weight_str, "--weight");
            const Orbit o = orbit(rs, w);
            if (format == "json") {
                nlohmann::ordered_json j;
                j["schema"] = 1;
                j["command"] = "orbit";
                j["type"] = rs.lie_type.str();
                j["weight"] = detail::json_weight(w);
                j["dominant"] = detail::json_weight(o.dominant);
                j["orbit_size"] = detail::json_int(Integer(o.size()));
                j["stabilizer_order"] = detail::json_int(o.stabilizer_order);
                j["weyl_order"] = detail::json_int(rs.weyl_order);
                auto elems = nlohmann::ordered_json::array();
                for (const auto& e : o.elements) {
                    nlohmann::ordered_json item;
                    item["weight"] = detail::json_weight(e);
                    auto word = nlohmann::ordered_json::array();
                    for (int g : o.witness_words.at(e)) word.push_back(g);
                    item["word"] = std::move(word);
                    elems.push_back(std::move(item));
                }
                j["elements"] = std::move(elems);
                deliver(j.dump(2));
            } else {
                std::ostringstream os;
                os << rs.lie_type.str() << " orbit of " << w.str() << ": size " << o.size()
                   << ", stabilizer order " << o.stabilizer_order << "\n";
                for (const auto& e : o.elements) {
                    os << "  " << e.str() << "  word";
                    const auto& word = o.witness_words.at(e);
                    if (word.empty()) os << " (identity)";
                    for (int g : word) os << " " << g;
                    os << "\n";
                }
                std::string s = os.str();
                s.pop_back();
                deliver(s);
            }
            return 0;
        }

        if (app.got_subcommand(weights_cmd)) {
            const RootSystem rs = build(parse_lie_type(type_str));
            const Weight lambda = detail::parse_weight_arg(rs, highest_str, "--highest");
            const auto ch = character_by_orbit(rs, lambda);
            if (format == "json") {
                nlohmann::ordered_json j;
                j["schema"] = 1;
                j["command"] = "weights";
                j["type"] = rs.lie_type.str();
                j["highest"] = detail::json_weight(lambda);
                j["dimension"] = detail::json_int(ch.dimension);
                auto entries = nlohmann::ordered_json::array();
                for (const auto& e : ch.entries) {
                    nlohmann::ordered_json item;
                    item["weight"] = detail::json_weight(e.dominant_weight);
                    item["orbit_size"] = detail::json_int(e.orbit_size);
                    item["multiplicity"] = detail::json_int(e.multiplicity);
                    entries.push_back(std::move(item));
                }
                j["entries"] = std::move(entries);
                deliver(j.dump(2));
            } else {
                std::ostringstream os;
                os << rs.lie_type.str() << " module with highest weight " << lambda.str()
                   << ": dimension " << ch.dimension << "\n";
                for (const auto& e : ch.entries)
                    os << "  " << e.dominant_weight.str() << "  orbit " << e.orbit_size
                       << "  multiplicity " << e.multiplicity << "\n";
                std::string s = os.str();
                s.pop_back();
                deliver(s);
            }
            return 0;
        }

        if (app.got_subcommand(factor_cmd)) {
            const RootSystem rs = build(parse_lie_type(type_str));
            const Weight mu = detail::parse_weight_arg(rs, mu_str, "--mu");
            const OrbitalFactor f = symbolic ? orbital_factor_symbolic(rs, mu) : orbital_factor(rs, mu);
            if (format == "json") {
                nlohmann::ordered_json j;
                j["schema"] = 1;
                j["command"] = "factor";
                j["type"] = rs.lie_type.str();
                j["mu"] = detail::json_weight(mu);
                j["symbolic"] = symbolic;
                j["degree"] = f.degree;
                j["poly"] = f.poly.to_json(names);
                j["text"] = f.poly.text(names);
                deliver(j.dump(2));
            } else if (format == "latex") {
                deliver(f.poly.latex(names));
            } else {
                deliver(f.poly.text(names));
            }
            return 0;
        }

        if (app.got_subcommand(charpoly_cmd)) {
            const RootSystem rs = build(parse_lie_type(type_str));
            std::vector<Weight> highest;
            std::string part;
            std::istringstream split(highest_str);
            while (std::getline(split, part, ';'))
                highest.push_back(detail::parse_weight_arg(rs, part, "--highest"));
            const FactoredCharPoly fac = assemble(rs, highest);
            if (format == "json") {
                nlohmann::ordered_json j;
                j["schema"] = 1;
                j["command"] = "charpoly";
                j["type"] = rs.lie_type.str();
                auto hw = nlohmann::ordered_json::array();
                for (const auto& w : highest) hw.push_back(detail::json_weight(w));
                j["highest"] = std::move(hw);
                j["degree"] = detail::json_int(fac.total_degree());
                auto factors = nlohmann::ordered_json::array();
                for (const auto& [f, m] : fac.factors) {
                    nlohmann::ordered_json item;
                    item["mu"] = detail::json_weight(f.mu);
                    item["degree"] = f.degree;
                    item["multiplicity"] = detail::json_int(m);
                    item["poly"] = f.poly.to_json(names);
                    item["text"] = f.poly.text(names);
                    factors.push_back(std::move(item));
                }
                j["factors"] = std::move(factors);
                if (expand) j["expanded"] = fac.expand().to_json(names);
                deliver(j.dump(2));
            } else if (format == "latex") {
                std::ostringstream os;
                for (const auto& [f, m] : fac.factors) {
                    os << "\\left(" << f.poly.latex(names) << "\\right)";
                    if (m != 1) os << "^{" << m.str() << "}";
                }
                if (expand) os << " = " << fac.expand().latex(names);
                deliver(os.str());
            } else {
                std::ostringstream os;
                os << rs.lie_type.str() << " characteristic polynomial, degree " << fac.total_degree() << "\n";
                for (const auto& [f, m] : fac.factors)
                    os << "  f" << f.mu.str() << " deg " << f.degree << " multiplicity " << m.str()
                       << ": " << f.poly.text(names) << "\n";
                if (expand) os << "  expanded: " << fac.expand().text(names) << "\n";
                std::string s = os.str();
                s.pop_back();
                deliver(s);
            }
            return 0;
        }

        if (app.got_subcommand(verify_cmd)) {
            const LieType t = parse_lie_type(type_str);
            const RootSystem rs = build(t);
            const MatrixRep rep = representation_by_name(t, rep_name);
            const MatrixRep defining = defining_rep(t);
            const std::vector<Weight> highest = module_weights_for(rs, rep_name);

            std::mt19937_64 rng(seed);
            std::vector<PencilElement> pts;
            for (int i = 0; i < points; ++i) pts.push_back(random_pencil(defining, rng));

            std::vector<VerifyReport> reports(pts.size());
            const int workers = std::min<int>(configured_threads(), static_cast<int>(pts.size()));
            if (workers <= 1) {
                for (std::size_t i = 0; i < pts.size(); ++i) reports[i] = verify(rep, highest, pts[i]);
            } else {
                std::vector<std::future<void>> futures;
                std::atomic<std::size_t> next{0};
                for (int w = 0; w < workers; ++w)
                    futures.push_back(std::async(std::launch::async, [&] {
                        for (std::size_t i = next.fetch_add(1); i < pts.size(); i = next.fetch_add(1))
                            reports[i] = verify(rep, highest, pts[i]);
                    }));
                for (auto& f : futures) f.get();
            }
            bool all_pass = true;
            for (const auto& r : reports) all_pass = all_pass && r.pass;

            nlohmann::ordered_json j;
            j["schema"] = 1;
            j["command"] = "verify";
            j["type"] = t.str();
            j["rep"] = rep_name;
            j["dimension"] = rep.dimension;
            j["points"] = points;
            j["seed"] = seed;
            auto factors = nlohmann::ordered_json::array();
            for (std::size_t i = 0; i < reports[0].factor_degrees.size(); ++i) {
                nlohmann::ordered_json item;
                item["mu"] = detail::json_weight(reports[0].factor_degrees[i].first);
                item["degree"] = reports[0].factor_degrees[i].second;
                item["multiplicity"] = detail::json_int(reports[0].multiplicities[i]);
                factors.push_back(std::move(item));
            }
            j["factors"] = std::move(factors);
            auto results = nlohmann::ordered_json::array();
            for (std::size_t i = 0; i < reports.size(); ++i) {
                nlohmann::ordered_json item;
                item["point"] = static_cast<int>(i) + 1;
                nlohmann::ordered_json pencil;
                for (const auto& [label, c] : pts[i].coefficients)
                    pencil[label] = detail::rational_str(c);
                item["pencil"] = std::move(pencil);
                item["pass"] = reports[i].pass;
                if (!reports[i].pass) {
                    item["first_mismatch_power"] = reports[i].first_mismatch_power;
                    item["direct"] = detail::rational_str(reports[i].direct);
                    item["assembled"] = detail::rational_str(reports[i].assembled);
                }
                results.push_back(std::move(item));
            }
            j["results"] = std::move(results);
            j["pass"] = all_pass;

            if (format == "json") {
                deliver(j.dump(2));
            } else {
                std::ostringstream os;
                os << t.str() << " " << rep_name << " (dimension " << rep.dimension << "), " << points
                   << " points, seed " << seed << "\n";
                os << "  " << reports[0].summary() << "\n";
                for (std::size_t i = 0; i < reports.size(); ++i)
                    os << "  point " << (i + 1) << ": " << (reports[i].pass ? "pass" : "MISMATCH") << "\n";
                os << "overall: " << (all_pass ? "pass" : "MISMATCH");
                deliver(os.str());
                if (!output_path.empty()) {
                    // text format still writes the JSON report to the file
                    std::ofstream f(output_path);
                    f << j.dump(2) << "\n";
                }
            }
            return all_pass ? 0 : 1;
        }

        if (app.got_subcommand(sl2_cmd)) {
            if ((sl2_m < 0) == d_str.empty()) {
                err << "error: sl2 needs exactly one of --m or --d\n";
                return 2;
            }
            std::vector<Integer> d;
            if (sl2_m >= 0) {
                d.assign(sl2_m + 1, 0);
                for (int k = sl2_m; k >= 0; k -= 2) d[k] = 1;
            } else {
                for (int v : detail::parse_csv_ints(d_str, "--d")) {
                    if (v < 0) throw Error("multiplicities must be nonnegative");
                    d.emplace_back(v);
                }
            }
            const MultiPoly f = sl2_closed_form(d);
            if (format == "json") {
                nlohmann::ordered_json j;
                j["schema"] = 1;
                j["command"] = "sl2";
                auto dd = nlohmann::ordered_json::array();
                for (const auto& v : d) dd.push_back(detail::json_int(v));
                j["d"] = std::move(dd);
                j["poly"] = f.to_json(names);
                j["text"] = f.text(names);
                deliver(j.dump(2));
            } else if (format == "latex") {
                deliver(f.latex(names));
            } else {
                deliver(f.text(names));
            }
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace liechar
