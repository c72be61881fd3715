// sct -- construct, enumerate, classify, and verify supercharacter theories
// of cyclic and dihedral groups.  Everything is exact; output ordering is
// canonical, so runs are byte-stable.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "sct/classification.hpp"
#include "sct/dot_io.hpp"
#include "sct/json_io.hpp"
#include "sct/cyclic_coverage.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using namespace sct;

struct usage_error : std::runtime_error {
    explicit usage_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct verification_failure : std::runtime_error {
    explicit verification_failure(const std::string& msg) : std::runtime_error(msg) {}
};

int env_max_classes() {
    if (const char* v = std::getenv("SCT_MAX_CLASSES")) {
        try {
            return std::max(1, std::stoi(v));
        } catch (const std::exception&) {
            throw usage_error("SCT_MAX_CLASSES must be an integer");
        }
    }
    return 13;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw usage_error("cannot open output file: " + path);
    out << text;
}

json load_json(const std::string& path) {
    try {
        if (path == "-") return json::parse(std::cin);
        std::ifstream in(path);
        if (!in) throw usage_error("cannot open input file: " + path);
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw usage_error("malformed JSON in " + path + ": " + e.what());
    }
}

Sct load_sct(const std::string& path) {
    try {
        return sct_from_json(load_json(path));
    } catch (const std::invalid_argument& e) {
        throw usage_error("bad Sct JSON in " + path + ": " + e.what());
    }
}

GroupPtr parse_group(const std::string& spec) {
    try {
        return group_from_spec(spec);
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    }
}

GroupHom parse_automorphism(const GroupPtr& g, const std::string& spec) {
    long n = g->n;
    GroupHom h{g, g, std::vector<int>(g->order)};
    if (spec == "tau") {
        if (!is_dihedral(*g)) throw usage_error("--auto tau needs a dihedral group");
        return dihedral_tau(g);
    }
    if (spec.rfind("u:", 0) == 0) {
        long j = std::stol(spec.substr(2));
        for (int x = 0; x < g->order; ++x) h.map[x] = (int)mod_norm(j * x, n);
        if (is_dihedral(*g)) throw usage_error("--auto u:j needs a cyclic group");
    } else if (spec.rfind("d:", 0) == 0) {
        if (!is_dihedral(*g)) throw usage_error("--auto d:j,i needs a dihedral group");
        auto comma = spec.find(',');
        if (comma == std::string::npos) throw usage_error("--auto d:j,i expects two integers");
        long j = std::stol(spec.substr(2, comma - 2));
        long i = std::stol(spec.substr(comma + 1));
        for (long k = 0; k < n; ++k) {
            h.map[k] = (int)mod_norm(j * k, n);
            h.map[n + k] = (int)(n + mod_norm(i + j * k, n));
        }
    } else {
        throw usage_error("--auto expects tau, u:j, or d:j,i");
    }
    if (!is_automorphism(h)) throw usage_error("--auto " + spec + " is not an automorphism");
    return h;
}

std::string theory_line(const Sct& s) {
    return compact_label(s) + "   ||   " + char_label(s);
}

std::pair<long, long> parse_range(const std::string& range) {
    auto dots = range.find("..");
    if (dots == std::string::npos) {
        long v = std::stol(range);
        return {v, v};
    }
    return {std::stol(range.substr(0, dots)), std::stol(range.substr(dots + 2))};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"supercharacter theories of cyclic and dihedral groups"};
    app.require_subcommand(1);

    std::string group_spec, format = "text", output, sct_file, inner_file, outer_file;
    std::string auto_spec, n_range = "3..10";
    long n_arg = 0, d_arg = 1, m_arg = 1, nu_arg = 1, max_order = 12;
    int threads = 1;
    bool cyclic_mode = false;

    auto add_common = [&](CLI::App* cmd, bool with_format = true) {
        cmd->add_option("--output,-o", output, "write to a file instead of stdout");
        cmd->add_option("--threads", threads, "worker cap for enumeration")->default_val(1);
        if (with_format) cmd->add_option("--format,-f", format, "text | json | dot");
    };

    auto* cmd_table = app.add_subcommand("table", "print the character table of a group");
    cmd_table->add_option("--group,-g", group_spec, "cyclic:n or dihedral:n")->required();
    add_common(cmd_table);

    auto* cmd_enum = app.add_subcommand("enumerate", "list all supercharacter theories");
    cmd_enum->add_option("--group,-g", group_spec)->required();
    add_common(cmd_enum);

    auto* cmd_lat = app.add_subcommand("lattice", "the full lattice with order and Hasse edges");
    cmd_lat->add_option("--group,-g", group_spec)->required();
    add_common(cmd_lat);

    auto* cmd_classify = app.add_subcommand(
        "classify", "build SCT(D_2n) from the dihedral classification, tagged by origin");
    cmd_classify->add_option("--n", n_arg, "dihedral parameter n")->required();
    cmd_classify->add_flag_callback("--json", [&] { format = "json"; }, "shorthand for -f json");
    cmd_classify->add_flag_callback("--dot", [&] { format = "dot"; }, "shorthand for -f dot");
    add_common(cmd_classify);

    auto* cmd_verify =
        app.add_subcommand("verify", "check the classification against brute-force enumeration");
    cmd_verify->add_option("--n-range", n_range, "inclusive range, e.g. 3..10")->default_val("3..10");
    cmd_verify->add_flag("--cyclic", cyclic_mode,
                         "check the three-form coverage of SCT(Z_n) instead");
    add_common(cmd_verify, false);

    auto* cmd_star = app.add_subcommand("star", "*-product of theories of <r^d> (or <d>) and G/N");
    cmd_star->add_option("--group,-g", group_spec, "the ambient group G")->required();
    cmd_star->add_option("--d", d_arg, "N = <r^d> for dihedral G, <d> for cyclic G")->required();
    cmd_star->add_option("--inner", inner_file, "Sct JSON over N")->required();
    cmd_star->add_option("--outer", outer_file, "Sct JSON over G/N")->required();
    add_common(cmd_star);

    auto* cmd_delta = app.add_subcommand("delta", "Delta-product over a chain N <= M <= G");
    cmd_delta->add_option("--group,-g", group_spec)->required();
    cmd_delta->add_option("--m", m_arg, "M = <r^m> (or <m>)")->required();
    cmd_delta->add_option("--nu", nu_arg, "N = <r^nu> (or <nu>), with m | nu")->required();
    cmd_delta->add_option("--inner", inner_file, "Sct JSON over M")->required();
    cmd_delta->add_option("--outer", outer_file, "Sct JSON over G/N")->required();
    add_common(cmd_delta);

    auto* cmd_act = app.add_subcommand("act", "apply an automorphism to a theory");
    cmd_act->add_option("--sct", sct_file, "Sct JSON (file or -)")->required();
    cmd_act->add_option("--auto", auto_spec, "tau | u:j | d:j,i")->required();
    add_common(cmd_act);

    auto* cmd_factor = app.add_subcommand("factor", "factor a theory over N if it is possible");
    cmd_factor->add_option("--sct", sct_file)->required();
    cmd_factor->add_option("--d", d_arg, "N = <r^d> (or <d>)")->required();
    add_common(cmd_factor);

    auto* cmd_restrict = app.add_subcommand("restrict", "restrict a theory to an S-normal N");
    cmd_restrict->add_option("--sct", sct_file)->required();
    cmd_restrict->add_option("--d", d_arg, "N = <r^d> (or <d>)")->required();
    add_common(cmd_restrict);

    auto* cmd_deflate = app.add_subcommand("deflate", "deflate a theory to G/N for S-normal N");
    cmd_deflate->add_option("--sct", sct_file)->required();
    cmd_deflate->add_option("--d", d_arg, "N = <r^d> (or <d>)")->required();
    add_common(cmd_deflate);

    auto* cmd_meet = app.add_subcommand(
        "meet-search", "look for meets where exactly one side is the mutual refinement");
    cmd_meet->add_option("--max-order", max_order, "largest group order to scan")->default_val(12);
    add_common(cmd_meet, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        EnumerateOptions opts;
        opts.max_classes = env_max_classes();
        opts.threads = std::max(1, threads);
        std::ostringstream out;

        if (cmd_table->parsed()) {
            TablePtr t = standard_table(parse_group(group_spec));
            if (format == "json")
                out << table_to_json(*t).dump(2) << "\n";
            else
                out << table_text(*t);
        } else if (cmd_enum->parsed()) {
            SctLattice lat = enumerate_scts(standard_table(parse_group(group_spec)), opts);
            if (format == "json") {
                json theories = json::array();
                for (const Sct& s : lat.theories) theories.push_back(sct_to_json(s));
                out << json{{"group", group_descriptor(*lat.table->group)},
                            {"count", lat.theories.size()},
                            {"theories", theories}}
                           .dump(2)
                    << "\n";
            } else {
                out << lat.theories.size() << " theories\n";
                for (const Sct& s : lat.theories) out << "  " << theory_line(s) << "\n";
            }
        } else if (cmd_lat->parsed()) {
            SctLattice lat = enumerate_scts(standard_table(parse_group(group_spec)), opts);
            if (format == "dot")
                out << lattice_to_dot(lat);
            else if (format == "json")
                out << lattice_to_json(lat).dump(2) << "\n";
            else {
                out << lat.theories.size() << " theories, " << lat.covers.size()
                    << " cover edges, bottom=m top=M\n";
                for (std::size_t i = 0; i < lat.theories.size(); ++i)
                    out << "  [" << i << "] " << theory_line(lat.theories[i]) << "\n";
                for (auto [a, b] : lat.covers) out << "  " << a << " -> " << b << "\n";
            }
        } else if (cmd_classify->parsed()) {
            auto classified = classify_dihedral(n_arg, opts);
            if (format == "json") {
                json arr = json::array();
                for (const auto& c : classified) {
                    json e{{"tag", origin_label(c)}, {"sct", sct_to_json(c.sct)}};
                    if (c.source) e["source"] = sct_to_json(*c.source);
                    if (c.origin == TheoryOrigin::PsiIImage) e["i"] = c.i;
                    arr.push_back(std::move(e));
                }
                out << json{{"n", n_arg}, {"count", classified.size()}, {"theories", arr}}.dump(2)
                    << "\n";
            } else if (format == "dot") {
                std::vector<Sct> theories;
                std::vector<std::string> labels;
                for (const auto& c : classified) {
                    theories.push_back(c.sct);
                    labels.push_back(origin_label(c));
                }
                out << theories_to_dot(theories, labels);
            } else {
                out << "SCT(D_" << 2 * n_arg << "): " << classified.size() << " theories\n";
                for (const auto& c : classified)
                    out << "  [" << origin_label(c) << "] " << theory_line(c.sct) << "\n";
            }
        } else if (cmd_verify->parsed()) {
            auto [lo, hi] = parse_range(n_range);
            if (lo < (cyclic_mode ? 1 : 3) || hi > 12 || lo > hi)
                throw usage_error("--n-range must lie within " +
                                  std::string(cyclic_mode ? "1" : "3") + "..12");
            bool all_ok = true;
            for (long n = lo; n <= hi; ++n) {
                if (cyclic_mode) {
                    SctLattice lat = enumerate_scts(table_cyclic(n), opts);
                    CyclicCoverageReport rep = check_cyclic_coverage(lat, opts);
                    out << "Z_" << n << ": " << lat.theories.size() << " theories"
                        << (rep.all_covered() ? "  [ok]" : "  [FAIL]") << "\n";
                    for (const auto& e : rep.entries) {
                        if (e.is_M || !e.matches.empty()) continue;
                        all_ok = false;
                        out << "  uncovered theory:\n"
                            << sct_to_json(lat.theories[e.index]).dump(2) << "\n";
                    }
                } else {
                    VerifyReport rep = verify_classification(n, opts);
                    out << rep.render();
                    for (const auto& check : rep.checks)
                        if (!check.pass && check.witness)
                            out << "  offending theory:\n"
                                << sct_to_json(*check.witness).dump(2) << "\n";
                    if (!rep.all_pass()) all_ok = false;
                }
            }
            write_output(output, out.str());
            if (!all_ok) return 1;
            return 0;
        } else if (cmd_star->parsed()) {
            GroupPtr G = parse_group(group_spec);
            TablePtr TG = standard_table(G);
            Subgroup N = divisor_subgroup(G, d_arg);
            Quotient Q = quotient_by_divisor(G, d_arg);
            Sct result = star_product(TG, N, Q, load_sct(inner_file), load_sct(outer_file));
            out << (format == "json" ? sct_to_json(result).dump(2) + "\n"
                                     : theory_line(result) + "\n");
        } else if (cmd_delta->parsed()) {
            GroupPtr G = parse_group(group_spec);
            if (nu_arg % m_arg != 0) throw usage_error("delta: m must divide nu (N inside M)");
            Sct result = delta_product(standard_table(G), divisor_subgroup(G, nu_arg),
                                       divisor_subgroup(G, m_arg), load_sct(inner_file),
                                       load_sct(outer_file));
            out << (format == "json" ? sct_to_json(result).dump(2) + "\n"
                                     : theory_line(result) + "\n");
        } else if (cmd_act->parsed()) {
            Sct s = load_sct(sct_file);
            Sct result = act(parse_automorphism(s.group(), auto_spec), s);
            out << (format == "json" ? sct_to_json(result).dump(2) + "\n"
                                     : theory_line(result) + "\n");
        } else if (cmd_factor->parsed()) {
            Sct s = load_sct(sct_file);
            auto pair = factors_over(s, d_arg);
            if (!pair) {
                write_output(output, "does not factor over d=" + std::to_string(d_arg) + "\n");
                return 0;
            }
            if (format == "json")
                out << json{{"inner", sct_to_json(pair->first)}, {"outer", sct_to_json(pair->second)}}
                           .dump(2)
                    << "\n";
            else
                out << "inner: " << theory_line(pair->first) << "\n"
                    << "outer: " << theory_line(pair->second) << "\n";
        } else if (cmd_restrict->parsed()) {
            Sct result = restricted_sct(load_sct(sct_file), d_arg);
            out << (format == "json" ? sct_to_json(result).dump(2) + "\n"
                                     : theory_line(result) + "\n");
        } else if (cmd_deflate->parsed()) {
            Sct result = deflated_sct(load_sct(sct_file), d_arg);
            out << (format == "json" ? sct_to_json(result).dump(2) + "\n"
                                     : theory_line(result) + "\n");
        } else if (cmd_meet->parsed()) {
            std::vector<GroupPtr> groups;
            for (long n = 1; n <= max_order; ++n) groups.push_back(make_cyclic(n));
            for (long n = 1; 2 * n <= max_order; ++n) groups.push_back(make_dihedral(n));
            int found = 0;
            for (const GroupPtr& G : groups) {
                SctLattice lat = enumerate_scts(standard_table(G), opts);
                int k = (int)lat.theories.size();
                for (int i = 0; i < k; ++i)
                    for (int j = i + 1; j < k; ++j) {
                        const Sct &a = lat.theories[i], &b = lat.theories[j];
                        Sct m = meet(lat, a, b);
                        bool class_is_mutual = m.classes == a.classes.meet_refinement(b.classes);
                        bool char_is_mutual = m.chars == a.chars.meet_refinement(b.chars);
                        if (class_is_mutual != char_is_mutual) {
                            ++found;
                            out << family_name(G->family) << ":" << G->n << "  meet of\n"
                                << "    " << theory_line(a) << "\n    " << theory_line(b) << "\n"
                                << "  has only the "
                                << (class_is_mutual ? "superclass" : "supercharacter")
                                << " side equal to the mutual refinement\n";
                        }
                    }
            }
            out << found << " meet(s) with exactly one mutual-refinement side, orders <= "
                << max_order << "\n";
        }

        write_output(output, out.str());
        return 0;
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const guard_exceeded& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const verification_failure& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return 1;
    }
}
