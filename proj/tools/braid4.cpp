// Command-line front end: every computation as a subcommand with JSON/CSV
// output.  Exit codes: 0 success, 1 computation error, 2 usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "braid4/checks.hpp"
#include "braid4/formulas.hpp"
#include "braid4/h1.hpp"
#include "braid4/oracle.hpp"
#include "braid4/psi.hpp"
#include "braid4/rep.hpp"

using json = nlohmann::ordered_json;
using namespace braid4;

namespace {

struct Output {
    std::string format = "json";
    std::string path;

    void emit(const json& j, const std::string& csv) const {
        std::ostream* os = &std::cout;
        std::ofstream file;
        if (!path.empty()) {
            file.open(path);
            if (!file) throw std::runtime_error("cannot open " + path);
            os = &file;
        }
        if (format == "csv")
            *os << csv;
        else
            *os << j.dump(2) << "\n";
    }
};

void add_output_flags(CLI::App* cmd, Output& out) {
    cmd->add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", out.path, "write output to a file");
}

json h1vector_json(const H1Vector& v) {
    json j = json::object();
    for (const auto& [sym, c] : v.coeffs) j[sym.str()] = rat_str(c);
    return j;
}

json pairvector_json(const PairVector& v) {
    json j;
    j["cover"] = v.cover.str();
    json e = json::object();
    for (const auto& [k, c] : v.entries)
        e["(" + k.first.str() + "," + k.second.str() + ")"] = c.convert_to<long long>();
    j["entries"] = e;
    return j;
}

H1Vector parse_and_reduce(int n, const std::string& expr) {
    return reduce(ModuleExpression::parse(n, expr));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with the level-4 braid group B_n[4]"};
    app.require_subcommand(1);

    int n = 3;
    long long g = 2;
    int d = 1;
    uint64_t seed = 0;

    // --- dim ---
    auto* cmd_dim = app.add_subcommand("dim", "dim H_1(B_n[4];Q)");
    Output out_dim;
    cmd_dim->add_option("--n", n, "strand count")->required();
    add_output_flags(cmd_dim, out_dim);
    cmd_dim->callback([&] {
        json j;
        j["n"] = n;
        j["dim"] = dim_h1(n).convert_to<long long>();
        out_dim.emit(j, "n,dim\n" + std::to_string(n) + "," + dim_h1(n).str() + "\n");
    });

    // --- basis ---
    auto* cmd_basis = app.add_subcommand("basis", "canonical basis of H_1(B_n[4];Q)");
    Output out_basis;
    cmd_basis->add_option("--n", n, "strand count")->required();
    add_output_flags(cmd_basis, out_basis);
    cmd_basis->callback([&] {
        auto bas = enumerate_basis(n);
        json j;
        j["n"] = n;
        j["dim"] = bas.size();
        json arr = json::array();
        std::string csv = "symbol\n";
        for (const auto& b : bas) {
            arr.push_back(b.str());
            csv += b.str() + "\n";
        }
        j["basis"] = arr;
        out_basis.emit(j, csv);
    });

    // --- reduce ---
    auto* cmd_reduce = app.add_subcommand("reduce", "reduce a module expression to the basis");
    Output out_reduce;
    std::string expr;
    cmd_reduce->add_option("--n", n, "strand count")->required();
    cmd_reduce->add_option("--expr", expr, "expression, e.g. \"(1-T(1,4))(1-T(2,3))t(1,2)\"")
        ->required();
    add_output_flags(cmd_reduce, out_reduce);
    cmd_reduce->callback([&] {
        H1Vector v = parse_and_reduce(n, expr);
        json j;
        j["n"] = n;
        j["expr"] = expr;
        j["reduced"] = h1vector_json(v);
        std::string csv = "symbol,coefficient\n";
        for (const auto& [sym, c] : v.coeffs) csv += sym.str() + "," + rat_str(c) + "\n";
        out_reduce.emit(j, csv);
    });

    // --- act ---
    auto* cmd_act = app.add_subcommand("act", "act by a braid word on a reduced expression");
    Output out_act;
    std::string word, pure_word;
    cmd_act->add_option("--n", n, "strand count")->required();
    cmd_act->add_option("--expr", expr, "module expression")->required();
    cmd_act->add_option("--word", word, "braid word over s1,S1,...");
    cmd_act->add_option("--pure", pure_word, "pure braid word over A(i,j)^k");
    add_output_flags(cmd_act, out_act);
    cmd_act->callback([&] {
        if (word.empty() == pure_word.empty())
            throw CLI::ValidationError("act", "give exactly one of --word / --pure");
        H1Vector v = parse_and_reduce(n, expr);
        H1Vector img = word.empty() ? act_pure(PureBraidWord::parse(n, pure_word), v)
                                    : act_word(BraidWord::parse(n, word), v);
        json j;
        j["n"] = n;
        j["word"] = word.empty() ? pure_word : word;
        j["expr"] = expr;
        j["result"] = h1vector_json(img);
        std::string csv = "symbol,coefficient\n";
        for (const auto& [sym, c] : img.coeffs) csv += sym.str() + "," + rat_str(c) + "\n";
        out_act.emit(j, csv);
    });

    // --- matrix ---
    auto* cmd_matrix = app.add_subcommand(
        "matrix", "generator action matrix on the basis, or a Burau matrix");
    Output out_matrix;
    std::string gen;
    long long burau_m = -1;
    cmd_matrix->add_option("--n", n, "strand count")->required();
    cmd_matrix->add_option("--gen", gen, "generator s<k> or A(i,j); with --burau, a braid word")
        ->required();
    cmd_matrix->add_option("--burau", burau_m,
                           "emit the Burau matrix of --gen at t=-1 mod m (0 = integers)");
    add_output_flags(cmd_matrix, out_matrix);
    cmd_matrix->callback([&] {
        json j;
        j["n"] = n;
        j["gen"] = gen;
        json rows = json::array();
        std::string csv;
        if (burau_m >= 0) {
            BurauMatrix bm = burau_mod(BraidWord::parse(n, gen), burau_m);
            j["modulus"] = burau_m;
            for (int r = 0; r < bm.n; ++r) {
                json row = json::array();
                std::string line;
                for (int c = 0; c < bm.n; ++c) {
                    row.push_back(bm.at(r, c).convert_to<long long>());
                    line += (line.empty() ? "" : ",") + bm.at(r, c).str();
                }
                rows.push_back(row);
                csv += line + "\n";
            }
        } else {
            const QMat* m;
            if (gen.size() >= 2 && gen[0] == 's') {
                m = &generator_matrix_sigma(n, std::stoi(gen.substr(1)));
            } else {
                PureBraidWord w = PureBraidWord::parse(n, gen);
                if (w.letters.size() != 1 || w.letters[0].exp != 1)
                    throw CLI::ValidationError("matrix", "--gen takes s<k> or a single A(i,j)");
                m = &generator_matrix_twist(n, {w.letters[0].i, w.letters[0].j});
            }
            j["dim"] = m->size();
            for (const auto& row : *m) {
                json r = json::array();
                std::string line;
                for (const auto& x : row) {
                    r.push_back(rat_str(x));
                    line += (line.empty() ? "" : ",") + rat_str(x);
                }
                rows.push_back(r);
                csv += line + "\n";
            }
        }
        j["matrix"] = rows;
        out_matrix.emit(j, csv);
    });

    // --- psi ---
    auto* cmd_psi = app.add_subcommand("psi", "detection homomorphisms psi, psi_{ij}");
    Output out_psi;
    std::string cover = "base";
    cmd_psi->add_option("--n", n, "strand count")->required();
    cmd_psi->add_option("--expr", expr, "module expression")->required();
    cmd_psi->add_option("--cover", cover, "base, (i,inf) or (i,j)")->capture_default_str();
    add_output_flags(cmd_psi, out_psi);
    cmd_psi->callback([&] {
        H1Vector v = parse_and_reduce(n, expr);
        CoverIndex c = CoverIndex::parse(n, cover);
        PairVector pv = c.is_base() ? psi_base(v) : psi_cover(c, v);
        json j = pairvector_json(pv);
        std::string csv = "pair,value\n";
        for (const auto& [k, val] : pv.entries)
            csv += "(" + k.first.str() + "," + k.second.str() + ")," + val.str() + "\n";
        out_psi.emit(j, csv);
    });

    // --- decompose ---
    auto* cmd_dec = app.add_subcommand("decompose", "irreducible decomposition of H_1");
    Output out_dec;
    bool full_check = false;
    cmd_dec->add_option("--n", n, "strand count (<= 5)")->required();
    cmd_dec->add_flag("--full-check", full_check,
                      "also run the full-group character algorithm (n <= 4)");
    add_output_flags(cmd_dec, out_dec);
    cmd_dec->callback([&] {
        ZnTable t(n);
        json arr = json::array();
        std::string csv = "rho,lambda,dim,multiplicity\n";
        for (const auto& label : h1_constituents(n)) {
            Int dim = constituent_dimension(label, n);
            Int mult = multiplicity_two_stage(t, label);
            json lj;
            lj["m"] = label.m;
            lj["I"] = label.I.str();
            lj["rho"] = rho_tag_str(label.rho);
            lj["lambda"] = label.lambda;
            json e;
            e["label"] = lj;
            e["dim"] = dim.convert_to<long long>();
            e["multiplicity"] = mult.convert_to<long long>();
            if (full_check && n <= 4)
                e["multiplicity_full_group"] =
                    multiplicity_full_group(t, label).convert_to<long long>();
            arr.push_back(e);
            std::string lam;
            for (int x : label.lambda) lam += (lam.empty() ? "" : " ") + std::to_string(x);
            csv += rho_tag_str(label.rho) + ",(" + lam + ")," + dim.str() + "," + mult.str() +
                   "\n";
        }
        json j;
        j["n"] = n;
        j["dim"] = dim_h1(n).convert_to<long long>();
        j["constituents"] = arr;
        out_dec.emit(j, csv);
    });

    // --- torsion ---
    auto* cmd_tor = app.add_subcommand("torsion", "2-torsion points on V_d(X_n)");
    Output out_tor;
    cmd_tor->add_option("--n", n, "strand count (<= 5)")->required();
    cmd_tor->add_option("--d", d, "depth of the characteristic variety")->capture_default_str();
    add_output_flags(cmd_tor, out_tor);
    cmd_tor->callback([&] {
        auto pts = torsion_points(n, d);
        json arr = json::array();
        std::string csv = "subset,component\n";
        for (const auto& I : pts) {
            std::string comp = cohen_suciu_membership(I);
            json e;
            e["subset"] = I.str();
            e["component"] = comp;
            arr.push_back(e);
            csv += I.str() + "," + comp + "\n";
        }
        json j;
        j["n"] = n;
        j["d"] = d;
        j["count"] = pts.size();
        j["points"] = arr;
        out_tor.emit(j, csv);
    });

    // --- oracle ---
    auto* cmd_oracle = app.add_subcommand("oracle", "Reidemeister-Schreier oracle for B_n[4]");
    Output out_oracle;
    bool snf_on = false, snf_off = false, allow5 = false;
    std::string pres_out;
    cmd_oracle->add_option("--n", n, "strand count (<= 4; 5 behind --allow-n5)")->required();
    cmd_oracle->add_flag("--snf", snf_on, "force Smith normal form");
    cmd_oracle->add_flag("--no-snf", snf_off, "rank only");
    cmd_oracle->add_flag("--allow-n5", allow5,
                         "allow n=5 (coset index 1024; slow and memory heavy)");
    cmd_oracle->add_option("--pres-out", pres_out, "write the subgroup presentation to a file");
    add_output_flags(cmd_oracle, out_oracle);
    cmd_oracle->callback([&] {
        SubgroupOracle oc(n, allow5);
        bool with_snf = snf_on || (!snf_off && n <= 3);
        auto ab = oc.abelianization(with_snf);
        json j;
        j["n"] = n;
        j["index"] = oc.index();
        j["schreier_rank"] = oc.schreier_rank();
        j["rank"] = ab.free_rank;
        if (with_snf) {
            j["odd_torsion"] = !ab.odd_torsion_free();
            json divs = json::array();
            for (const auto& x : ab.divisors) divs.push_back(x.str());
            j["divisors"] = divs;
        }
        if (!pres_out.empty()) {
            std::ofstream f(pres_out);
            f << oc.subgroup_presentation().str();
        }
        std::string csv =
            "n,rank\n" + std::to_string(n) + "," + std::to_string(ab.free_rank) + "\n";
        out_oracle.emit(j, csv);
    });

    // --- formulas ---
    auto* cmd_form = app.add_subcommand("formulas", "closed-form reports");
    Output out_form;
    bool betti = false, albanese = false;
    auto* og = cmd_form->add_option("--g", g, "genus");
    auto* on = cmd_form->add_option("--n", n, "strand count");
    cmd_form->add_flag("--betti", betti, "Betti tables of B_3[4], B_4[4] and the Mod_2[4] bound");
    cmd_form->add_flag("--albanese", albanese, "the Albanese inequality at genus g");
    add_output_flags(cmd_form, out_form);
    cmd_form->callback([&] {
        bool has_g = og->count() > 0;
        bool has_n = on->count() > 0;
        json j;
        std::string csv;
        if (betti) {
            auto bt = betti_tables();
            auto arr = [](const std::vector<Int>& v) {
                json a = json::array();
                for (const auto& x : v) a.push_back(x.str());
                return a;
            };
            j["betti_b3"] = arr(bt.b3);
            j["betti_b4"] = arr(bt.b4);
            j["pmod05"] = {{"chi", bt.pmod05_chi.str()},
                           {"b1", bt.pmod05_b1.str()},
                           {"b2", bt.pmod05_b2.str()}};
            j["mod2_level4"] = {{"chi", bt.mod24_chi.str()},
                                {"b1", bt.mod24_b1.str()},
                                {"b2_lower", bt.mod24_b2_lower.str()},
                                {"b3_lower", bt.mod24_b3_lower.str()}};
            j["euler_identities_ok"] = bt.euler_identities_ok;
            csv = "table,values\nB3[4],1 6 5\nB4[4],1 21 103 83\n";
        } else if (albanese) {
            if (!has_g) throw CLI::ValidationError("formulas", "--albanese needs --g");
            auto a = albanese_inequality(g);
            j["g"] = a.g;
            j["in_asserted_range"] = a.in_asserted_range;
            j["holds"] = a.holds;
            j["lhs"] = rat_str(a.lhs);
            j["rhs"] = a.rhs.str();
            j["lhs_digits"] = a.lhs_digits;
            j["rhs_digits"] = a.rhs_digits;
            csv = "g,holds,lhs_digits,rhs_digits\n" + std::to_string(a.g) + "," +
                  (a.holds ? "true" : "false") + "," + std::to_string(a.lhs_digits) + "," +
                  std::to_string(a.rhs_digits) + "\n";
        } else if (has_g) {
            auto r = closed_forms_genus(g);
            j["g"] = r.g;
            j["dim_h1_smod"] = r.dim_h1_smod.str();
            j["chi_smod"] = r.chi_smod.str();
            j["cd_smod"] = r.cd_smod;
            j["dim_v2lambda2"] = r.dim_v2lambda2.str();
            j["torelli_bound"] = r.torelli_bound.str();
            j["quartic_with_minus6"] = rat_str(r.quartic_with_minus6);
            j["quartic_plain"] = rat_str(r.quartic_plain);
            j["quartic_mismatch"] = r.quartic_mismatch;
            csv = "g,dim_h1_smod,chi,torelli_bound\n" + std::to_string(r.g) + "," +
                  r.dim_h1_smod.str() + "," + r.chi_smod.str() + "," + r.torelli_bound.str() +
                  "\n";
        } else if (has_n) {
            auto r = closed_forms_strands(n);
            j["n"] = r.n;
            j["dim_h1"] = r.dim_h1.str();
            j["cd"] = r.cd;
            j["chi"] = r.chi.str();
            csv = "n,dim_h1,cd,chi\n" + std::to_string(r.n) + "," + r.dim_h1.str() + "," +
                  std::to_string(r.cd) + ",0\n";
        } else {
            throw CLI::ValidationError("formulas", "give one of --g, --n, --betti, --albanese");
        }
        out_form.emit(j, csv);
    });

    // --- verify ---
    auto* cmd_verify = app.add_subcommand("verify", "run a named acceptance suite");
    Output out_verify;
    std::string suite;
    int bound = 0;
    cmd_verify->add_option("--suite", suite, "one of the named suites")->required();
    cmd_verify->add_option("--n,--bound", bound, "strand bound (default per suite)");
    cmd_verify->add_option("--seed", seed, "PRNG seed (splitmix64)")->capture_default_str();
    add_output_flags(cmd_verify, out_verify);
    cmd_verify->callback([&] {
        auto names = suite_names();
        if (std::find(names.begin(), names.end(), suite) == names.end())
            throw CLI::ValidationError("verify", "unknown suite " + suite);
        int nn = bound > 0 ? bound : (suite == "oracle" ? 4 : 5);
        Suite results = run_suite(suite, nn, seed);
        json arr = json::array();
        std::string csv = "check,pass,detail\n";
        for (const auto& r : results) {
            std::cerr << (r.pass ? "ok   " : "FAIL ") << r.name
                      << (r.detail.empty() ? "" : "  [" + r.detail + "]") << "\n";
            json e;
            e["name"] = r.name;
            e["pass"] = r.pass;
            if (!r.detail.empty()) e["detail"] = r.detail;
            arr.push_back(e);
            csv += r.name + "," + (r.pass ? "true" : "false") + "," + r.detail + "\n";
        }
        json j;
        j["suite"] = suite;
        j["n"] = nn;
        j["seed"] = seed;
        j["passed"] = all_passed(results);
        j["checks"] = arr;
        out_verify.emit(j, csv);
        if (!all_passed(results)) throw braid_error("suite " + suite + " failed");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const CLI::Error& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
