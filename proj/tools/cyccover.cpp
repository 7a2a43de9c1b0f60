#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "cyccover/groups.hpp"
#include "cyccover/serialize.hpp"

using namespace cyccover;

namespace {

struct Options {
    int threads = 0;  // 0 = all cores
    long long budget = kDefaultBudget;
    std::string output = "text";
    bool verify = true;
    std::string out_file;
};

void emit(const Options& opt, const std::string& text, const nlohmann::json& j) {
    std::string body = opt.output == "json" ? j.dump(2) + "\n" : text;
    if (opt.out_file.empty()) {
        std::cout << body;
    } else {
        std::ofstream os(opt.out_file, std::ios::binary);
        os << body;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw ParseError("cannot open " + path);
    return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
}

std::string report_text(const ConstructionReport& R) {
    std::string s = R.name + " n=" + std::to_string(R.subspace.n) +
                    " codim=" + std::to_string(R.claimed_codim) +
                    (R.inside ? " (inside a " + std::to_string(R.inside->dim()) +
                                "-dim invariant subspace)"
                              : "") +
                    " verified=" + (R.verified ? "yes" : "no") + "\n";
    if (R.paper_bound) s += "paper bound: codim >= " + std::to_string(*R.paper_bound) + "\n";
    s += subspace_to_file(R.subspace);
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclically covering subspaces of F_q^n"};
    app.require_subcommand(1);

    Options opt;
    if (const char* env = std::getenv("CYCCOVER_BUDGET")) opt.budget = std::atoll(env);
    app.add_option("--threads", opt.threads, "worker threads (0 = all cores)");
    app.add_option("--budget", opt.budget, "enumeration budget");
    app.add_option("--output", opt.output, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", opt.out_file, "write output to a file");

    long q = 2, p = 2, c = 1;
    int n = 0, d = 1, k = 1, m = 1, b = 0, n_max = 0;
    std::vector<int> m_list;
    std::string basis_file, witness_file;
    bool no_verify = false;

    auto* cmd_factor = app.add_subcommand("factor", "factor X^n - 1 over GF(q)");
    cmd_factor->add_option("--q", q)->required();
    cmd_factor->add_option("--n", n)->required();

    auto* cmd_search = app.add_subcommand("search", "exact h_q(n) with witness");
    cmd_search->add_option("--q", q)->required();
    cmd_search->add_option("--n", n)->required();

    auto* cmd_construct = app.add_subcommand("construct", "build a covering subspace");
    cmd_construct->require_subcommand(1);
    cmd_construct->add_flag("--no-verify", no_verify, "skip the covering check");
    auto* c_lemma21 = cmd_construct->add_subcommand("lemma21");
    c_lemma21->add_option("--n", n)->required();
    auto* c_product = cmd_construct->add_subcommand("product");
    c_product->add_option("--basis", basis_file, "covering subspace file")->required();
    c_product->add_option("--m", m)->required();
    auto* c_thm31 = cmd_construct->add_subcommand("thm31");
    c_thm31->add_option("--q", q)->required();
    c_thm31->add_option("--d", d)->required();
    auto* c_thm32 = cmd_construct->add_subcommand("thm32");
    c_thm32->add_option("--q", q)->required();
    c_thm32->add_option("--k", k)->required();
    c_thm32->add_option("--d", d)->required();
    c_thm32->add_option("--c", c)->required();
    auto* c_thm33 = cmd_construct->add_subcommand("thm33");
    c_thm33->add_option("--q", q)->required();
    c_thm33->add_option("--k", k)->required();
    c_thm33->add_option("--d", d)->required();
    auto* c_section4 = cmd_construct->add_subcommand("section4");
    c_section4->add_option("--m", m_list, "exponents m_i")->required();

    auto* cmd_verify = app.add_subcommand("verify", "covering verdict for a basis file");
    cmd_verify->add_option("--q", q)->required();
    cmd_verify->add_option("--n", n)->required();
    cmd_verify->add_option("--basis", basis_file)->required();

    auto* cmd_isbell = app.add_subcommand("isbell", "Isbell permutation-group bound");
    cmd_isbell->add_option("--p", p)->required();
    cmd_isbell->add_option("--b", b)->required();
    cmd_isbell->add_option("--witness", witness_file, "covering subspace file");

    auto* cmd_table = app.add_subcommand("table", "CSV table of h_q(n)");
    cmd_table->add_option("--q", q)->required();
    cmd_table->add_option("--n-max", n_max)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    opt.verify = !no_verify;

    try {
        if (*cmd_factor) {
            Factorization F = factor_xn_minus_1(q, n);
            std::string text;
            for (size_t i = 0; i < F.factors.size(); ++i) {
                text += "coset {";
                for (size_t j = 0; j < F.cosets.cosets[i].size(); ++j)
                    text += (j ? "," : "") + std::to_string(F.cosets.cosets[i][j]);
                text += "}  f = " + poly_str(F.factors[i]) +
                        "  u = " + ring_str(F.idempotents[i]) + "\n";
            }
            emit(opt, text, to_json(F));
        } else if (*cmd_search) {
            CoverResult R = h_search(q, n, opt.threads, opt.budget);
            std::string text = "h_" + std::to_string(q) + "(" + std::to_string(n) +
                               ") = " + std::to_string(R.h) +
                               "  candidates_tested=" + std::to_string(R.candidates_tested) +
                               (R.exhausted ? "" : "  (not exhausted)") + "\n" +
                               subspace_to_file(R.witness);
            emit(opt, text, to_json(R));
        } else if (*cmd_construct) {
            ConstructionReport R;
            if (*c_lemma21) {
                R = lemma21(n, opt.verify, opt.budget);
            } else if (*c_product) {
                Subspace U = subspace_from_file(read_file(basis_file));
                R = product_cover(U, m, opt.verify, opt.budget);
            } else if (*c_thm31) {
                R = thm31(q, d, opt.verify, opt.budget);
            } else if (*c_thm32) {
                R = thm32(q, k, d, c, opt.verify, opt.budget);
            } else if (*c_thm33) {
                R = thm33(q, k, d, opt.verify, opt.budget);
            } else {
                R = section4_sum(m_list, opt.verify, opt.budget);
            }
            emit(opt, report_text(R), to_json(R));
        } else if (*cmd_verify) {
            Subspace U = subspace_from_file(read_file(basis_file));
            if (U.field->q() != q || U.n != n)
                throw ParseError("basis file does not match --q/--n");
            CoveringCheck ck = is_covering(U, opt.budget);
            if (ck.covering) {
                emit(opt, "COVERING\n", {{"covering", true}});
            } else {
                std::string rep = ring_str(ring_from_code(U.field, n, ck.failing_rep));
                emit(opt, "NOT COVERING: " + rep + "\n",
                     {{"covering", false}, {"failing_rep", rep}});
                return 1;
            }
        } else if (*cmd_isbell) {
            Subspace W = witness_file.empty()
                             ? default_isbell_witness(p, b, opt.threads, opt.budget)
                             : subspace_from_file(read_file(witness_file));
            PermGroup H = build_isbell_group(p, b, W, kDefaultIsbellCap, opt.budget);
            IsbellReport R = verify_isbell(H, p);
            std::string text =
                "degree " + std::to_string(R.degree) + ", |H| = " + std::to_string(H.order()) +
                ", transitive = " + (R.transitive ? "yes" : "no") +
                ", fixed-point-free p-power element = " + (R.fpf_p_power_found ? "yes" : "no") +
                "\nm_" + std::to_string(p) + "(" + std::to_string(R.b) +
                ") > " + std::to_string(R.a) + "\n";
            emit(opt, text, to_json(R));
            if (!R.transitive || R.fpf_p_power_found) return 1;
        } else if (*cmd_table) {
            auto rows = table_rows(q, n_max, opt.threads, opt.budget);
            std::string text = "n,h,method,witness_hash\n";
            for (const auto& r : rows)
                text += std::to_string(r.n) + "," + std::to_string(r.h) + "," + r.method +
                        "," + r.witness_hash + "\n";
            nlohmann::json j = nlohmann::json::array();
            for (const auto& r : rows)
                j.push_back({{"n", r.n},
                             {"h", r.h},
                             {"method", r.method},
                             {"witness_hash", r.witness_hash}});
            emit(opt, text, j);
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return 3;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
