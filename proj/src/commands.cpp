#include "puiseux/commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "puiseux/io.hpp"
#include "puiseux/rewrite.hpp"

namespace puiseux {

namespace {

using nlohmann::json;

std::string read_input(const std::string& arg) {
    if (arg == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) fail(Errc::usage, "cannot open file: " + arg.substr(1));
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return arg;
}

std::vector<long> parse_long_list(const std::string& s) {
    std::vector<long> out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(std::stol(cur));
            cur.clear();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            fail(Errc::parse, "bad integer list: " + s);
        }
    }
    return out;
}

struct BudgetFlags {
    long trunc = -1, wdeg = -1, dendeg = -1;
    int escalate = 0;
    std::string config;

    void attach(CLI::App* cmd) {
        cmd->add_option("-P,--trunc", trunc, "truncation order (default 3*b_m)");
        cmd->add_option("-D,--wdeg", wdeg, "max W-degree (default 6)");
        cmd->add_option("-L,--dendeg", dendeg, "max denominator degree (default 3*n)");
        cmd->add_option("--escalate", escalate, "budget doublings allowed on exhaustion");
        cmd->add_option("--config", config, "JSON config file with default budgets");
    }

    Budget to_budget() const {
        Budget b;
        if (!config.empty()) {
            std::ifstream in(config);
            if (!in) fail(Errc::usage, "cannot open config file: " + config);
            json j = json::parse(in, nullptr, true, true);
            if (j.contains("truncation")) b.truncation = j["truncation"].get<long>();
            if (j.contains("W_degree")) b.w_degree = j["W_degree"].get<long>();
            if (j.contains("den_degree")) b.den_degree = j["den_degree"].get<long>();
            if (j.contains("escalate")) b.escalation_rounds = j["escalate"].get<int>();
        }
        if (trunc >= 0) b.truncation = trunc;
        if (wdeg >= 0) b.w_degree = wdeg;
        if (dendeg >= 0) b.den_degree = dendeg;
        if (escalate > 0) b.escalation_rounds = escalate;
        return b;
    }
};

json budgets_json(long P, long D, long L) {
    return json{{"truncation", P}, {"W_degree", D}, {"den_degree", L}};
}

json mu_json(const std::map<long, long>& mu) {
    json j = json::object();
    for (const auto& [bk, e] : mu) j["A" + std::to_string(bk)] = e;
    return j;
}

Characteristic char_from_flag(const std::string& s) {
    return Characteristic::from_sequence(parse_long_list(s));
}

std::optional<std::set<long>> supp_from_flag(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto v = parse_long_list(s);
    return std::set<long>(v.begin(), v.end());
}

json characteristic_json(const Characteristic& ch) {
    json j;
    j["characteristic"] = ch.b();
    j["e"] = ch.e();
    std::vector<long> nk;
    for (long k = 1; k <= ch.m(); ++k) nk.push_back(ch.nk(k));
    j["n_k"] = nk;
    return j;
}

/// Bivariate polynomial text over (X, Y) or (T, Y); x-like variable first.
MultiPoly<Rational> parse_bivariate(const std::string& text) {
    auto [p, reg] = parse_poly_auto(read_input(text));
    bool uses_t = reg->index_of(VarDescriptor::structural('T')).has_value();
    bool uses_x = reg->index_of(VarDescriptor::structural('X')).has_value();
    if (uses_t && uses_x) fail(Errc::usage, "polynomial mixes X and T");
    auto target = make_xy_registry(uses_t ? 'T' : 'X');
    return p.transport(target);
}

struct CliState {
    json doc;
    int exit_code = 0;
};

void cmd_char(CliState& st, const std::string& param_text) {
    auto p = parse_parametrisation(read_input(param_text));
    if (!p.is_genuine()) fail(Errc::not_primitive, "gcd({n} ∪ supp) must be 1");
    auto ch = characteristic_of(p.n, p.support());
    st.doc = characteristic_json(ch);
}

void cmd_index_set(CliState& st, const std::string& chflag, long bound) {
    auto ch = char_from_flag(chflag);
    if (bound < 1) bound = 3 * ch.b().back();
    st.doc["characteristic"] = ch.b();
    st.doc["bound"] = bound;
    st.doc["index_set"] = ch.index_set_upto(bound);
}

void cmd_validate(CliState& st, const std::string& chflag, const std::string& suppflag) {
    auto ch = char_from_flag(chflag);
    auto supp = supp_from_flag(suppflag);
    if (!supp) fail(Errc::usage, "validate needs --supp");
    st.doc["characteristic"] = ch.b();
    st.doc["supp"] = std::vector<long>(supp->begin(), supp->end());
    st.doc["valid"] = validate_support(ch, *supp);
}

void cmd_weierstrass(CliState& st, const std::string& param_text, long trunc) {
    auto text = read_input(param_text);
    auto probe = parse_parametrisation(text);
    long maxsupp = probe.support().empty() ? 1 : *probe.support().rbegin();
    long P = trunc >= 0 ? trunc : probe.n * maxsupp;
    auto p = parse_parametrisation(text, P);
    auto f = weierstrass_from_puiseux(p);
    st.doc["parametrisation"] = param_to_json(p);
    st.doc["weierstrass"] = yseries_to_json(f);
    st.doc["weierstrass_text"] = yseries_to_text(f);
}

void cmd_verify(CliState& st, const std::string& ftext, const std::string& param_text, long fprec,
                long ptrunc) {
    // text inputs are exact polynomials, so by default both sides extend to
    // the largest window f's X-degree determines
    auto text = read_input(param_text);
    auto probe = parse_parametrisation(text);
    auto fp = parse_bivariate(ftext);
    long xdeg = std::max(fp.degree_in(0), 0L);
    long prec = fprec >= 0 ? fprec : std::max(xdeg, probe.truncation);
    long pt = ptrunc >= 0 ? ptrunc : std::max(probe.truncation, probe.n * (prec + 1) - 1);
    auto p = parse_parametrisation(text, pt);
    auto f = YSeriesPoly<Rational>::from_multipoly(fp, prec, Rational(0));
    auto rep = verify_parametrisation(f, p);
    st.doc["verified"] = rep.vanishes;
    st.doc["precision"] = rep.precision;
    if (rep.vanishes) st.doc["order"] = ">=" + std::to_string(rep.precision + 1);
    else st.doc["order"] = rep.order;
}

void cmd_prepare(CliState& st, const std::string& ftext, long prec) {
    auto fp = parse_bivariate(ftext);
    long P = prec >= 0 ? prec : std::max(fp.degree(), 0L);
    BivariateSeries f(fp, P);
    auto [m, c] = y_regularity(f);
    if (!c.is_one()) f = BivariateSeries(f.poly.scaled(c.inverse()), f.prec); // explicit (1/c_{0m}) division
    auto prep = weierstrass_prepare(f);
    st.doc["m"] = prep.m;
    st.doc["c0m"] = c.str();
    st.doc["precision"] = P;
    st.doc["u"] = poly_to_json(prep.u.poly);
    st.doc["u_text"] = prep.u.poly.str();
    st.doc["w"] = poly_to_json(prep.w.poly);
    st.doc["w_text"] = prep.w.poly.str();
}

void cmd_approx_root(CliState& st, const std::string& ftext, long d, long prec) {
    auto fp = parse_bivariate(ftext);
    long P = prec >= 0 ? prec : std::max(fp.degree_in(0), 0L);
    auto f = YSeriesPoly<Rational>::from_multipoly(fp, P, Rational(0));
    auto p = approximate_root(f, d);
    st.doc["d"] = d;
    st.doc["root"] = yseries_to_json(p);
    st.doc["root_text"] = yseries_to_text(p);
}

void cmd_hensel(CliState& st, const std::string& ftext, const std::string& gtext,
                const std::string& htext, const std::string& wflag, long excess) {
    auto wv = parse_long_list(wflag);
    if (wv.size() != 2) fail(Errc::usage, "--weight needs a,b");
    Weight w(wv[0], wv[1]);
    auto f = parse_bivariate(ftext);
    auto G = parse_bivariate(gtext).transport(f.reg());
    auto H = parse_bivariate(htext).transport(f.reg());
    auto lift = hensel_lift(f, w, G, H, excess);
    st.doc["s"] = lift.s;
    st.doc["t"] = lift.t;
    st.doc["excess"] = lift.excess;
    st.doc["g_text"] = lift.g.str();
    st.doc["h_text"] = lift.h.str();
    st.doc["g"] = poly_to_json(lift.g);
    st.doc["h"] = poly_to_json(lift.h);
    bool ok = truncate_by_weight(lift.g * lift.h - f, w, lift.s + lift.t + excess).is_zero_poly();
    st.doc["verified"] = ok;
}

void cmd_invariant(CliState& st, const std::string& qtext, long n, bool do_sym) {
    auto [q, reg] = parse_poly_auto(read_input(qtext));
    bool inv = is_un_invariant(q, n);
    st.doc["n"] = n;
    st.doc["invariant"] = inv;
    if (do_sym) {
        auto s = symmetrize(q, n);
        st.doc["symmetrized_text"] = s.str();
        st.doc["symmetrized"] = poly_to_json(s);
    }
}

void cmd_symmetrize(CliState& st, const std::string& qtext, long n) {
    auto [q, reg] = parse_poly_auto(read_input(qtext));
    auto s = symmetrize(q, n);
    st.doc["n"] = n;
    st.doc["symmetrized_text"] = s.str();
    st.doc["symmetrized"] = poly_to_json(s);
}

void cmd_rewrite(CliState& st, const std::string& chflag, const std::string& suppflag,
                 const std::string& qtext, const Budget& budget) {
    auto ch = char_from_flag(chflag);
    auto [q, reg] = parse_poly_auto(read_input(qtext));
    auto out = rewrite_invariant(q, ch, supp_from_flag(suppflag), budget);
    if (std::holds_alternative<BudgetReport>(out)) {
        const auto& r = std::get<BudgetReport>(out);
        st.doc["exhausted"] = true;
        st.doc["budgets"] = budgets_json(r.truncation, r.w_degree_reached, r.den_degree_reached);
        st.exit_code = 2;
        return;
    }
    const auto& r = std::get<RewriteResult>(out);
    st.doc["W"] = r.W.str();
    st.doc["V"] = r.V.str();
    st.doc["mu"] = mu_json(r.mu);
    st.doc["mu_scale"] = r.mu_scale.str();
    st.doc["budgets"] = budgets_json(r.truncation, r.w_degree, r.den_degree);
    st.doc["verified"] = true;
}

void cmd_relation(CliState& st, const std::string& chflag, long k, const std::string& suppflag,
                  const Budget& budget) {
    auto ch = char_from_flag(chflag);
    auto out = char_coeff_relation(ch, k, supp_from_flag(suppflag), budget);
    if (std::holds_alternative<BudgetReport>(out)) {
        const auto& r = std::get<BudgetReport>(out);
        st.doc["exhausted"] = true;
        st.doc["budgets"] = budgets_json(r.truncation, r.w_degree_reached, r.den_degree_reached);
        st.exit_code = 2;
        return;
    }
    const auto& r = std::get<CharCoeffRelation>(out);
    st.doc["k"] = r.k;
    st.doc["n_k"] = r.nk;
    st.doc["M"] = r.M.str();
    st.doc["N"] = mu_json(r.N);
    st.doc["relation"] = "A" + std::to_string(ch.b()[static_cast<size_t>(k)]) + "^" +
                         std::to_string(r.nk) + " * N = M after C = F";
    st.doc["budgets"] = budgets_json(r.truncation, r.w_degree, r.den_degree);
    st.doc["verified"] = true;
}

void cmd_split(CliState& st, const std::string& chflag, long P, long excess) {
    auto ch = char_from_flag(chflag);
    if (P < 0) P = std::max(3 * ch.b().back(), split_leading_exponent(ch) + 4);
    auto split = split_shifted_series(ch, P, excess);
    st.doc["characteristic"] = ch.b();
    st.doc["truncation"] = split.truncation;
    st.doc["bbar"] = split.bbar;
    st.doc["leading_coeff"] = split.leading_coeff.str();
    st.doc["factors"] = json::array();
    for (size_t k = 0; k < split.factors.size(); ++k) {
        json f;
        f["factor"] = split.factors[k].str();
        f["initial_form"] = split.initial_forms[k].str();
        st.doc["factors"].push_back(std::move(f));
    }
    st.doc["stages"] = json::array();
    for (const auto& stg : split.stages) {
        json s;
        s["weight"] = {stg.omega.a, stg.omega.b};
        s["excess"] = stg.excess;
        s["resultant_x1"] = stg.res_x1.str();
        st.doc["stages"].push_back(std::move(s));
    }
}

void cmd_translate(CliState& st, const std::string& chflag, const std::string& suppflag,
                   const std::string& qtext, const Budget& budget) {
    auto ch = char_from_flag(chflag);
    auto [q, reg] = parse_poly_auto(read_input(qtext));
    auto out = translate_nondegeneracy(q, ch, supp_from_flag(suppflag), budget);
    if (std::holds_alternative<BudgetReport>(out)) {
        const auto& r = std::get<BudgetReport>(out);
        st.doc["exhausted"] = true;
        st.doc["budgets"] = budgets_json(r.truncation, r.w_degree_reached, r.den_degree_reached);
        st.exit_code = 2;
        return;
    }
    const auto& W = std::get<MultiPoly<Rational>>(out);
    st.doc["W"] = W.str();
    st.doc["W_json"] = poly_to_json(W);
    st.doc["zero_equivalence"] = "Q(a) = 0 iff W(c) = 0 on the class";
}

void cmd_membership(CliState& st, const std::string& chflag, const std::string& suppflag,
                    const std::string& qtext, long P, long D) {
    auto ch = char_from_flag(chflag);
    auto [q, reg] = parse_poly_auto(read_input(qtext));
    auto out = subalgebra_membership_check(q, ch, supp_from_flag(suppflag), P, D);
    if (std::holds_alternative<MembershipNone>(out)) {
        st.doc["found"] = false;
        st.doc["degree"] = std::get<MembershipNone>(out).degree;
    } else {
        st.doc["found"] = true;
        st.doc["W"] = std::get<MembershipFound>(out).W.str();
    }
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact-arithmetic toolkit for plane curve branch singularities"};
    app.require_subcommand(1);

    std::string param_text, ftext, gtext, htext, qtext, chflag, suppflag, wflag;
    long bound = -1, trunc = -1, fprec = -1, d = 1, excess = 0, level = 1, mdeg = 4;
    bool do_sym = false;
    BudgetFlags budget;

    auto* c_char = app.add_subcommand("char", "characteristic of a parametrisation");
    c_char->add_option("param", param_text, "parametrisation, e.g. \"t^3; t^4+t^7+t^10\"")->required();

    auto* c_index = app.add_subcommand("index-set", "index set I of a characteristic");
    c_index->add_option("--char", chflag, "characteristic b_0,b_1,...")->required();
    c_index->add_option("--bound", bound, "enumerate I up to this bound");

    auto* c_valid = app.add_subcommand("validate", "support admissibility for a characteristic");
    c_valid->add_option("--char", chflag)->required();
    c_valid->add_option("--supp", suppflag)->required();

    auto* c_wei = app.add_subcommand("weierstrass", "Weierstrass polynomial of a parametrisation");
    c_wei->add_option("param", param_text)->required();
    c_wei->add_option("-P,--trunc", trunc, "series truncation (default n*max supp)");

    long ptrunc = -1;
    auto* c_verify = app.add_subcommand("verify", "order of f(T^n, alpha(T))");
    c_verify->add_option("-f", ftext, "Weierstrass polynomial (text or @file)")->required();
    c_verify->add_option("param", param_text)->required();
    c_verify->add_option("--prec", fprec, "X-precision of f");
    c_verify->add_option("--ptrunc", ptrunc, "parametrisation truncation");

    auto* c_prep = app.add_subcommand("prepare", "Weierstrass preparation f = u*w");
    c_prep->add_option("-f", ftext)->required();
    c_prep->add_option("--prec", fprec, "total (X,Y)-order (default: total degree of f)");

    auto* c_root = app.add_subcommand("approx-root", "d-th approximate root");
    c_root->add_option("-f", ftext)->required();
    c_root->add_option("-d", d, "divisor of the Y-degree")->required();
    c_root->add_option("--prec", fprec);

    auto* c_hensel = app.add_subcommand("hensel", "graded Hensel lift of a seed factorization");
    c_hensel->add_option("-f", ftext)->required();
    c_hensel->add_option("-G", gtext)->required();
    c_hensel->add_option("-H", htext)->required();
    c_hensel->add_option("-w,--weight", wflag, "weight a,b")->required();
    c_hensel->add_option("--excess", excess, "weight excess")->required();

    auto* c_inv = app.add_subcommand("invariant", "U_n-invariance of Q");
    c_inv->add_option("-Q", qtext)->required();
    c_inv->add_option("-n", d, "modulus n")->required();
    c_inv->add_flag("--symmetrize", do_sym, "also report the symmetrization");

    auto* c_sym = app.add_subcommand("symmetrize", "product of Q over the U_n rotations");
    c_sym->add_option("-Q", qtext)->required();
    c_sym->add_option("-n", d)->required();

    auto* c_rw = app.add_subcommand("rewrite", "Q as W(F)/V(F) with monomial V(F)");
    c_rw->add_option("--char", chflag)->required();
    c_rw->add_option("--supp", suppflag);
    c_rw->add_option("-Q", qtext)->required();
    budget.attach(c_rw);

    auto* c_rel = app.add_subcommand("relation", "characteristic-coefficient relation at level k");
    c_rel->add_option("--char", chflag)->required();
    c_rel->add_option("-k", level)->required();
    c_rel->add_option("--supp", suppflag);
    budget.attach(c_rel);

    auto* c_split = app.add_subcommand("split", "shifted-series Hensel split");
    c_split->add_option("--char", chflag)->required();
    c_split->add_option("-P,--trunc", trunc);
    c_split->add_option("--excess", excess);

    auto* c_tr = app.add_subcommand("translate", "non-degeneracy condition in the C-variables");
    c_tr->add_option("--char", chflag)->required();
    c_tr->add_option("--supp", suppflag);
    c_tr->add_option("-Q", qtext)->required();
    budget.attach(c_tr);

    auto* c_mem = app.add_subcommand("membership", "bounded-degree subalgebra membership");
    c_mem->add_option("--char", chflag)->required();
    c_mem->add_option("--supp", suppflag);
    c_mem->add_option("-Q", qtext)->required();
    c_mem->add_option("-D", mdeg, "degree bound")->required();
    c_mem->add_option("-P,--trunc", trunc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 1;
    }

    CliState st;
    try {
        if (c_char->parsed()) cmd_char(st, param_text);
        else if (c_index->parsed()) cmd_index_set(st, chflag, bound);
        else if (c_valid->parsed()) cmd_validate(st, chflag, suppflag);
        else if (c_wei->parsed()) cmd_weierstrass(st, param_text, trunc);
        else if (c_verify->parsed()) cmd_verify(st, ftext, param_text, fprec, ptrunc);
        else if (c_prep->parsed()) cmd_prepare(st, ftext, fprec);
        else if (c_root->parsed()) cmd_approx_root(st, ftext, d, fprec);
        else if (c_hensel->parsed()) cmd_hensel(st, ftext, gtext, htext, wflag, excess);
        else if (c_inv->parsed()) cmd_invariant(st, qtext, d, do_sym);
        else if (c_sym->parsed()) cmd_symmetrize(st, qtext, d);
        else if (c_rw->parsed()) cmd_rewrite(st, chflag, suppflag, qtext, budget.to_budget());
        else if (c_rel->parsed()) cmd_relation(st, chflag, level, suppflag, budget.to_budget());
        else if (c_split->parsed()) cmd_split(st, chflag, trunc, excess);
        else if (c_tr->parsed()) cmd_translate(st, chflag, suppflag, qtext, budget.to_budget());
        else if (c_mem->parsed()) cmd_membership(st, chflag, suppflag, qtext, trunc, mdeg);
    } catch (const Error& e) {
        json doc{{"error", e.code_name()}, {"message", e.what()}};
        out << doc.dump(2) << "\n";
        err << "error (" << e.code_name() << "): " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        json doc{{"error", "internal"}, {"message", e.what()}};
        out << doc.dump(2) << "\n";
        err << "error: " << e.what() << "\n";
        return 1;
    }

    out << st.doc.dump(2) << "\n";
    return st.exit_code;
}

} // namespace puiseux
