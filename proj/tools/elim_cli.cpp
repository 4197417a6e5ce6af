// elim_cli.cpp - command-line driver: reads an ideal file, runs the pipeline and prints the report.
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "elim/assembly.hpp"
#include "elim/oracle.hpp"
#include "elim/parse.hpp"

using json = nlohmann::ordered_json;
using namespace elim;

namespace {

enum exit_code { ok = 0, other_failure = 1, bad_input = 2, not_zero_dim = 3, invariant_failed = 4, inconsistent_ideal = 5 };

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

class stopwatch {
public:
    double lap() {
        auto now = std::chrono::steady_clock::now();
        double s = std::chrono::duration<double>(now - last_).count();
        last_ = now;
        return s;
    }

private:
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

std::size_t max_bits(const std::vector<multi_poly>& B) {
    std::size_t bits = 0;
    for (const auto& b : B) {
        for (const auto& [m, c] : b.terms()) bits = std::max(bits, c.max_coeff_bits());
    }
    return bits;
}

std::size_t max_bits(const std::vector<field_poly>& G, const field& k) {
    std::vector<scalar> all;
    for (const auto& g : G) {
        for (const auto& [m, c] : g.terms()) all.push_back(c);
    }
    return all.empty() ? 0 : uni_poly(k, all).max_coeff_bits();
}

struct options {
    std::string ideal_file;
    std::string membership_file;
    std::string emit = "text";
    std::string lift = "proj";
    std::vector<std::string> strategy;
    bool compare = false;
    bool timings = false;
    bool debug = false;
};

strategy_config make_strategy(const std::vector<std::string>& toggles) {
    strategy_config s;
    for (const auto& t : toggles) {
        if (t == "no-coprime") s.coprime_skip = false;
        else if (t == "no-triangle") s.triangle_skip = false;
        else if (t == "no-chi-delta") s.chi_delta = false;
        else if (t == "no-base-change") s.base_change = false;
        else throw CLI::ValidationError("--strategy", "unknown toggle '" + t + "'");
    }
    return s;
}

const proper_outcome* proper_for(const pipeline_result& res, const uni_poly& divisor) {
    for (std::size_t i = 0; i < res.divisors.size(); ++i) {
        if (res.divisors[i] == divisor) return &res.propers[i];
    }
    return nullptr;
}

// The lifted basis of a component: the reduced basis lifted (proj) or the unreduced basis of the
// engine that produced it (pseudo), each joined with the modulus.
std::vector<multi_poly> lifted_basis(const component& c, const pipeline_result& res, const std::string& form) {
    if (form == "proj") return lift_component_basis(c);
    std::vector<multi_poly> out;
    if (c.kind == component_kind::compatible) {
        out = res.pseudo.basis;
    } else if (const proper_outcome* p = proper_for(res, c.divisor)) {
        for (const auto& b : p->basis) out.push_back(lift(b));
    }
    out.push_back(multi_poly::constant(c.ctx, c.modulus));
    return out;
}

json poly_list(const std::vector<multi_poly>& B) {
    json a = json::array();
    for (const auto& b : B) a.push_back(to_string(b));
    return a;
}

json uni_list(const std::vector<uni_poly>& L, const std::string& var) {
    json a = json::array();
    for (const auto& u : L) a.push_back(u.str(var));
    return a;
}

json build_report(const ideal_input& in, const pipeline_result& res, const options& opt) {
    const var_ctx& ctx = *in.ctx;
    const std::string& z = ctx.x1;
    json r;
    r["field"] = ctx.k.name();
    json vars = json::array({z});
    for (const auto& v : ctx.xt) vars.push_back(v);
    r["vars"] = vars;
    r["order"] = ctx.order == mono_order::lex ? "lex" : "grevlex";
    r["generators"] = poly_list(in.generators);

    const auto& ps = res.pseudo;
    json p;
    p["chi_eps"] = ps.chi_eps.str(z);
    p["inconsistent"] = ps.inconsistent;
    p["multipliers"] = uni_list(ps.multipliers, z);
    p["lc_multipliers"] = uni_list(ps.lc_multipliers, z);
    p["basis"] = poly_list(ps.basis);
    p["stats"] = {{"pairs", ps.stats.pairs},
                  {"reduced", ps.stats.reduced},
                  {"coprime_skipped", ps.stats.coprime_skipped},
                  {"triangle_skipped", ps.stats.triangle_skipped}};
    r["pseudo_eliminant"] = p;

    const auto& dec = res.dec;
    if (!ps.inconsistent) {
        r["compatible_part"] = res.split.cp.str(z);
        json divs = json::array();
        for (std::size_t i = 0; i < res.divisors.size(); ++i) {
            const auto& po = res.propers[i];
            json d;
            d["divisor"] = res.divisors[i].str(z);
            if (po.e_q.is_zero()) d["e_q"] = "0";
            else d["e_q"] = po.e_q.lift().str(z);
            d["trivial"] = po.inconsistent();
            d["stats"] = {{"pairs", po.stats.pairs},
                          {"reduced", po.stats.reduced},
                          {"pruned", po.stats.pruned},
                          {"base_changes", po.stats.base_changes}};
            divs.push_back(d);
        }
        r["composite_divisors"] = divs;
    }

    json comps = json::array();
    uni_poly product = uni_poly::constant(ctx.k, 1);
    for (const auto& c : dec.components) {
        json j;
        j["kind"] = c.kind == component_kind::compatible ? "compatible" : "proper";
        j["divisor"] = c.divisor.str(z);
        j["modulus"] = c.modulus.str(z);
        json basis = json::array();
        for (const auto& b : c.basis) basis.push_back(to_string(b));
        j["reduced_basis"] = basis;
        j["lifted_basis"] = poly_list(lifted_basis(c, res, opt.lift));
        comps.push_back(j);
        product = product * c.modulus;
    }
    r["components"] = comps;
    json triv = json::array();
    for (const auto& t : dec.trivial) triv.push_back(t.divisor.str(z));
    r["trivial_components"] = triv;
    r["inconsistent"] = dec.inconsistent;
    r["chi"] = dec.chi.str(z);
    if (!dec.inconsistent) check_invariant(product.monic() == dec.chi, "chi differs from the product of the component moduli");
    r["lift_form"] = opt.lift;
    return r;
}

json membership_report(const ctx_ptr& ctx, const pipeline_result& res, const std::string& text) {
    json a = json::array();
    for (const auto& f : parse_poly_lines(ctx, text)) {
        json j;
        j["probe"] = to_string(f);
        j["member"] = is_member(f, res.dec);
        if (!res.dec.inconsistent) {
            auto nf = normal_form(f, res.dec);
            json rems = json::array();
            for (std::size_t i = 0; i < nf.remainders.size(); ++i) {
                rems.push_back({{"modulus", res.dec.components[i].modulus.str(ctx->x1)}, {"remainder", to_string(nf.remainders[i])}});
            }
            j["remainders"] = rems;
            j["normal_form"] = to_string(nf.combined);
        }
        a.push_back(j);
    }
    return a;
}

json oracle_report(const ideal_input& in, const pipeline_result& res, const options& opt) {
    stopwatch sw;
    auto full = full_ctx(*in.ctx);
    std::vector<field_poly> F;
    for (const auto& g : in.generators) F.push_back(to_field_poly(g, full));
    auto G = buchberger_reduced(F);
    json o;
    json gb = json::array();
    for (const auto& g : G) gb.push_back(to_string(g));
    o["groebner_basis"] = gb;
    uni_poly chi = oracle_eliminant(G, in.ctx->k);
    o["eliminant"] = chi.str(in.ctx->x1);
    o["agree"] = chi == res.dec.chi;
    std::vector<multi_poly> ours;
    for (const auto& c : res.dec.components) {
        for (const auto& b : lift_component_basis(c)) ours.push_back(b);
    }
    o["max_coeff_bits"] = {{"groebner_basis", max_bits(G, in.ctx->k)}, {"component_bases", max_bits(ours)}};
    if (opt.timings) o["seconds"] = sw.lap();
    return o;
}

void print_list(std::ostream& out, const std::string& title, const json& a) {
    out << title << ":";
    if (a.empty()) out << " (none)";
    out << "\n";
    for (const auto& s : a) out << "    " << s.get<std::string>() << "\n";
}

void print_text(std::ostream& out, const json& r) {
    out << "field:               " << r["field"].get<std::string>() << "\n";
    out << "variables:           ";
    for (std::size_t i = 0; i < r["vars"].size(); ++i) out << (i ? " < " : "") << r["vars"][i].get<std::string>();
    out << " (" << r["order"].get<std::string>() << ")\n";
    print_list(out, "generators", r["generators"]);

    const auto& p = r["pseudo_eliminant"];
    out << "pseudo-eliminant:    " << p["chi_eps"].get<std::string>() << "\n";
    print_list(out, "multipliers", p["multipliers"]);
    print_list(out, "lc multipliers", p["lc_multipliers"]);
    if (r.contains("compatible_part")) {
        out << "compatible part:     " << r["compatible_part"].get<std::string>() << "\n";
        out << "composite divisors:" << (r["composite_divisors"].empty() ? " (none)" : "") << "\n";
        for (const auto& d : r["composite_divisors"]) {
            out << "    " << d["divisor"].get<std::string>() << "    e_q = " << d["e_q"].get<std::string>()
                << (d["trivial"].get<bool>() ? "    (trivial)" : "") << "\n";
        }
    }
    for (const auto& c : r["components"]) {
        out << "component (" << c["kind"].get<std::string>() << ") modulus " << c["modulus"].get<std::string>() << "\n";
        print_list(out, "  reduced basis", c["reduced_basis"]);
        print_list(out, "  lifted basis (" + r["lift_form"].get<std::string>() + ")", c["lifted_basis"]);
    }
    out << "inconsistent:        " << (r["inconsistent"].get<bool>() ? "yes" : "no") << "\n";
    out << "eliminant:           " << r["chi"].get<std::string>() << "\n";

    if (r.contains("membership")) {
        out << "membership:\n";
        for (const auto& m : r["membership"]) {
            out << "    " << m["probe"].get<std::string>() << "    " << (m["member"].get<bool>() ? "member" : "not a member") << "\n";
            if (!m.contains("remainders")) continue;
            for (const auto& rem : m["remainders"]) {
                out << "        mod " << rem["modulus"].get<std::string>() << ": " << rem["remainder"].get<std::string>() << "\n";
            }
        }
    }
    if (r.contains("buchberger")) {
        const auto& o = r["buchberger"];
        print_list(out, "buchberger basis", o["groebner_basis"]);
        out << "buchberger eliminant: " << o["eliminant"].get<std::string>() << "\n";
        out << "eliminants agree:    " << (o["agree"].get<bool>() ? "yes" : "no") << "\n";
        out << "max coefficient bits: buchberger " << o["max_coeff_bits"]["groebner_basis"].get<std::size_t>() << ", components "
            << o["max_coeff_bits"]["component_bases"].get<std::size_t>() << "\n";
        if (o.contains("seconds")) out << "buchberger seconds:  " << o["seconds"].get<double>() << "\n";
    }
    if (r.contains("timings")) {
        out << "timings (s):\n";
        for (const auto& [k, v] : r["timings"].items()) out << "    " << k << ": " << v.get<double>() << "\n";
    }
}

int run(const options& opt) {
    if (opt.debug) set_debug_checks(true);
    ideal_input in = parse_ideal(read_file(opt.ideal_file));
    std::string probes = opt.membership_file.empty() ? std::string() : read_file(opt.membership_file);

    stopwatch sw;
    pipeline_result res = run_pipeline(in.generators, make_strategy(opt.strategy));
    double pipeline_s = sw.lap();

    json report = build_report(in, res, opt);
    if (!opt.membership_file.empty()) report["membership"] = membership_report(in.ctx, res, probes);
    double membership_s = sw.lap();
    if (opt.compare) report["buchberger"] = oracle_report(in, res, opt);
    if (opt.timings) {
        report["timings"] = {{"pipeline", pipeline_s}};
        if (!opt.membership_file.empty()) report["timings"]["membership"] = membership_s;
    }

    if (opt.emit == "text" || opt.emit == "both") print_text(std::cout, report);
    if (opt.emit == "both") std::cout << "\n";
    if (opt.emit == "json" || opt.emit == "both") std::cout << report.dump(2) << "\n";
    return res.dec.inconsistent ? inconsistent_ideal : ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Eliminants and modular bases of zero-dimensional ideals"};
    options opt;
    app.add_option("ideal", opt.ideal_file, "ideal description file")->required()->check(CLI::ExistingFile);
    app.add_option("--emit", opt.emit, "report format")->check(CLI::IsMember({"text", "json", "both"}));
    app.add_flag("--compare-buchberger", opt.compare, "also run the classical Buchberger algorithm and compare");
    app.add_option("--membership", opt.membership_file, "file with one probe polynomial per line")->check(CLI::ExistingFile);
    app.add_option("--strategy", opt.strategy, "pair-pruning toggles: no-coprime, no-triangle, no-chi-delta, no-base-change")
        ->delimiter(',');
    app.add_option("--lift", opt.lift, "lifted basis form: reduced basis (proj) or engine basis (pseudo)")
        ->check(CLI::IsMember({"proj", "pseudo"}));
    app.add_flag("--timings", opt.timings, "include wall-clock timings (makes the report nondeterministic)");
    app.add_flag("--debug-checks", opt.debug, "enable expensive identity checks (same as ELIM_DEBUG_CHECKS=1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? ok : bad_input;
    }

    try {
        return run(opt);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return bad_input;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return bad_input;
    } catch (const not_zero_dimensional& e) {
        std::cerr << "not zero-dimensional: " << e.what() << "\n";
        return not_zero_dim;
    } catch (const invariant_violation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return invariant_failed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return other_failure;
    }
}
