// liftlab: exact slack matrices, protocol compilers, and certificate
// verifiers for the permutahedron, spanning-tree, and matching polytopes.
//
// Exit codes: 0 = success/verified, 1 = verification failure (first
// counterexample printed), 2 = usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "liftlab/approx.hpp"
#include "liftlab/cover.hpp"
#include "liftlab/match_protocol.hpp"
#include "liftlab/matrix.hpp"
#include "liftlab/permext.hpp"
#include "liftlab/protocol.hpp"
#include "liftlab/slack.hpp"
#include "liftlab/sortnet.hpp"
#include "liftlab/spt_protocol.hpp"

using namespace liftlab;

namespace {

// Fixed default seed: all randomized subcommands are reproducible unless
// --seed overrides it. No wall-clock entropy anywhere.
constexpr std::uint64_t kDefaultSeed = 0x5EEDBA5EULL;

void write_out(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
    out << content;
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file '" + path + "'");
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("graph file: bad header line");
    Graph g;
    g.n = n;
    for (int i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) throw std::invalid_argument("graph file: expected edge line");
        if (u == v) throw std::invalid_argument("graph file: loop edge");
        if (u > v) std::swap(u, v);
        g.edges.push_back({u, v});
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.validate();
    return g;
}

ComparatorSeq load_network(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open network file '" + path + "'");
    return network_from_text(in);
}

NetworkKind parse_kind(const std::string& name) {
    if (name == "quadratic") return NetworkKind::Quadratic;
    if (name == "oddeven") return NetworkKind::OddEvenTransposition;
    if (name == "batcher") return NetworkKind::Batcher;
    throw std::invalid_argument("unknown network kind '" + name + "'");
}

std::string tk_to_json(int n, int k, const std::vector<SubsetMask>& sets) {
    nlohmann::json j;
    j["n"] = n;
    j["k"] = k;
    auto arr = nlohmann::json::array();
    for (const auto& s : sets) arr.push_back(s.elements());
    j["sets"] = std::move(arr);
    return j.dump();
}

// One {"n":..,"k":..,"sets":[[..],..]} object per file.
std::pair<int, std::vector<SubsetMask>> tk_from_json(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open T_k file '" + path + "'");
    nlohmann::json j = nlohmann::json::parse(in);
    if ((int)j.at("n") != n)
        throw std::invalid_argument("T_k file '" + path + "' is for a different n");
    int k = j.at("k");
    std::vector<SubsetMask> sets;
    for (const auto& arr : j.at("sets"))
        sets.push_back(SubsetMask::of(n, arr.get<std::vector<int>>()));
    return {k, sets};
}

int report_mismatch(const MatMulReport& rep) {
    std::cout << "FAIL: first mismatch at (" << rep.row_label << ", " << rep.col_label
              << "): got " << rep.got.str() << ", want " << rep.want.str() << "\n";
    return 1;
}

int report_counterexample(const CorrectnessReport& rep) {
    std::cout << "FAIL: counterexample at (" << rep.x << ", " << rep.y << "): expectation "
              << rep.got.str() << ", slack " << rep.want.str() << "\n";
    return 1;
}

struct ReportRow {
    std::string polytope;
    int n;
    std::size_t facets, size, width;
    Rational bound;
    bool pass;
};

int run_report(const std::string& format) {
    std::vector<ReportRow> rows;
    for (int n : {3, 4, 5}) {
        SlackMatrix s = slack_perm(n);
        PermFactorization f = perm_factorization(generate(NetworkKind::Quadratic, n));
        bool ok = mat_mul_eq(f.a, f.b, s.matrix).equal &&
                  f.width() == (std::size_t)(n * (n - 1));
        rows.push_back({"perm", n, s.matrix.n_rows(), f.width(), f.width(),
                        Rational((long)n * (n - 1)), ok});
    }
    for (int n : {3, 4, 5}) {
        Graph g = Graph::complete(n);
        SlackMatrix s = slack_spt(g);
        MarkovianProtocol p = build_spt_protocol(g);
        Factorization f = compile_factorization(p);
        std::size_t width = gamma_width(p).width;
        bool ok = check_correct(p, s).correct && mat_mul_eq(f.a, f.b, s.matrix).equal &&
                  width == (std::size_t)(n * (n - 1) * (n - 2));
        rows.push_back({"spt", n, s.matrix.n_rows(), f.width(), width,
                        Rational((long)n * (n - 1) * (n - 2)), ok});
    }
    for (int n : {4, 5}) {
        Graph g = Graph::complete(n);
        SlackMatrix s = slack_match(g);
        auto tks = build_all_tks(n);
        Factorization f = match_factorization(g, tks);
        MatchWidthReport w = match_width_report(g, tks);
        bool ok = mat_mul_eq(f.a, f.b, s.matrix).equal && w.within;
        rows.push_back({"match", n, s.matrix.n_rows(), f.width(), w.width, w.bound, ok});
    }

    bool all = true;
    for (const auto& r : rows) all = all && r.pass;
    if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : rows)
            j.push_back({{"polytope", r.polytope},
                         {"n", r.n},
                         {"facets", r.facets},
                         {"size", r.size},
                         {"width", r.width},
                         {"bound", r.bound.str()},
                         {"pass", r.pass}});
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "polytope  n  facets  size  width  bound     pass\n";
        for (const auto& r : rows) {
            std::ostringstream line;
            line << r.polytope << std::string(10 - r.polytope.size(), ' ') << r.n << "  "
                 << r.facets << "  " << r.size << "  " << r.width << "  "
                 << r.bound.decimal(2) << "  " << (r.pass ? "yes" : "NO");
            std::cout << line.str() << "\n";
        }
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact slack-matrix factorizations, protocols, and certificates"};
    app.require_subcommand(1);

    // --- slack ---
    auto* slack_cmd = app.add_subcommand("slack", "build a slack matrix");
    std::string sl_poly, sl_graph, sl_out;
    int sl_n = 0;
    slack_cmd->add_option("--polytope", sl_poly, "perm|spt|match")->required();
    slack_cmd->add_option("--n", sl_n, "size parameter (complete graph when no --graph)");
    slack_cmd->add_option("--graph", sl_graph, "graph file: 'n m' then m lines 'u v'");
    slack_cmd->add_option("--out", sl_out, "output file (default stdout)");

    // --- factorize ---
    auto* fact_cmd = app.add_subcommand("factorize", "build a nonnegative factorization");
    std::string fc_poly, fc_gen = "quadratic", fc_network, fc_out;
    std::vector<std::string> fc_tk;
    int fc_n = 0;
    bool fc_verify = false;
    fact_cmd->add_option("--polytope", fc_poly, "perm|match")->required();
    fact_cmd->add_option("--n", fc_n, "size parameter")->required();
    fact_cmd->add_option("--gen", fc_gen, "quadratic|oddeven|batcher (perm)");
    fact_cmd->add_option("--network", fc_network, "network file (perm, overrides --gen)");
    fact_cmd->add_option("--tk", fc_tk, "T_k json files (match); missing k built greedily");
    fact_cmd->add_flag("--verify", fc_verify, "check the product against the slack matrix");
    fact_cmd->add_option("--out", fc_out, "write {\"A\":...,\"B\":...} json");

    // --- verify ---
    auto* ver_cmd = app.add_subcommand("verify", "check a protocol against its slack matrix");
    std::string vr_protocol, vr_gen = "quadratic";
    int vr_n = 0;
    ver_cmd->add_option("--protocol", vr_protocol, "spt|perm")->required();
    ver_cmd->add_option("--n", vr_n, "complete-graph size / permutahedron n")->required();
    ver_cmd->add_option("--gen", vr_gen, "network kind for perm");

    // --- simulate ---
    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo estimate of one cell");
    std::string sm_protocol, sm_x, sm_y, sm_gen = "quadratic";
    int sm_n = 0;
    long long sm_trials = 10000;
    std::uint64_t sm_seed = kDefaultSeed;
    sim_cmd->add_option("--protocol", sm_protocol, "spt|perm")->required();
    sim_cmd->add_option("--n", sm_n, "size parameter")->required();
    sim_cmd->add_option("--x", sm_x, "row label (Alice's input)")->required();
    sim_cmd->add_option("--y", sm_y, "column label (Bob's input)")->required();
    sim_cmd->add_option("--trials", sm_trials, "number of samples");
    sim_cmd->add_option("--seed", sm_seed, "rng seed (default fixed)");
    sim_cmd->add_option("--gen", sm_gen, "network kind for perm");

    // --- sortnet ---
    auto* sn_cmd = app.add_subcommand("sortnet", "sorting-network tools");
    sn_cmd->require_subcommand(1);
    auto* sn_check = sn_cmd->add_subcommand("check", "validity by the 0/1 principle");
    std::string snc_file, snc_dir = "forward";
    sn_check->add_option("--file", snc_file, "network file: 'n q' then q lines 'i j'")
        ->required();
    sn_check->add_option("--direction", snc_dir, "forward|reverse");
    auto* sn_gen = sn_cmd->add_subcommand("generate", "emit a generated network");
    std::string sng_kind = "quadratic", sng_out;
    int sng_n = 0;
    sn_gen->add_option("--kind", sng_kind, "quadratic|oddeven|batcher");
    sn_gen->add_option("--n", sng_n, "width")->required();
    sn_gen->add_option("--out", sng_out, "output file (default stdout)");
    auto* sn_min = sn_cmd->add_subcommand("minimality", "redundant-comparator search");
    std::string snm_file, snm_gen, snm_mode = "one_removal";
    int snm_n = 0;
    sn_min->add_option("--file", snm_file, "network file");
    sn_min->add_option("--gen", snm_gen, "generate instead of reading a file");
    sn_min->add_option("--n", snm_n, "width for --gen");
    sn_min->add_option("--mode", snm_mode, "one_removal|exhaustive");

    // --- cover ---
    auto* cov_cmd = app.add_subcommand("cover", "greedy covers");
    cov_cmd->require_subcommand(1);
    auto* cov_tk = cov_cmd->add_subcommand("tk", "T_k family for size-k matchings of K_n");
    int ct_n = 0, ct_k = 0;
    std::string ct_out;
    cov_tk->add_option("--n", ct_n, "vertex count")->required();
    cov_tk->add_option("--k", ct_k, "matching size")->required();
    cov_tk->add_option("--out", ct_out, "output file (default stdout)");

    // --- goemans ---
    auto* go_cmd = app.add_subcommand("goemans", "sorting-network lift of Perm(n)");
    go_cmd->require_subcommand(1);
    auto* go_ver = go_cmd->add_subcommand("verify", "lifts, projections, compression");
    int gv_n = 0, gv_samples = 1000;
    std::string gv_gen = "quadratic";
    std::uint64_t gv_seed = kDefaultSeed;
    go_ver->add_option("--n", gv_n, "permutahedron dimension parameter")->required();
    go_ver->add_option("--gen", gv_gen, "network kind");
    go_ver->add_option("--samples", gv_samples, "random convex combinations to test");
    go_ver->add_option("--seed", gv_seed, "rng seed (default fixed)");

    // --- fooling ---
    auto* fool_cmd = app.add_subcommand("fooling", "fooling-set certificate for rk+");
    int fl_n = 0;
    fool_cmd->add_option("--n", fl_n, "quadratic-network width")->required();

    // --- report ---
    auto* rep_cmd = app.add_subcommand("report", "summary table across polytopes");
    std::string rp_format = "text";
    rep_cmd->add_option("--format", rp_format, "text|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*slack_cmd) {
            SlackMatrix s = [&] {
                if (sl_poly == "perm") return slack_perm(sl_n);
                Graph g = sl_graph.empty() ? Graph::complete(sl_n) : load_graph(sl_graph);
                if (sl_poly == "spt") return slack_spt(g);
                if (sl_poly == "match") return slack_match(g);
                throw std::invalid_argument("unknown polytope '" + sl_poly + "'");
            }();
            write_out(sl_out, matrix_to_json(s.matrix));
            return 0;
        }

        if (*fact_cmd) {
            if (fc_poly == "perm") {
                ComparatorSeq seq = fc_network.empty() ? generate(parse_kind(fc_gen), fc_n)
                                                       : load_network(fc_network);
                if (seq.n != fc_n)
                    throw std::invalid_argument("network width does not match --n");
                PermFactorization f = perm_factorization(seq);
                if (!fc_out.empty() || !fc_verify) {
                    nlohmann::json j;
                    j["A"] = nlohmann::json::parse(matrix_to_json(f.a));
                    j["B"] = nlohmann::json::parse(matrix_to_json(f.b));
                    write_out(fc_out, j.dump());
                }
                if (fc_verify) {
                    auto rep = mat_mul_eq(f.a, f.b, slack_perm(fc_n).matrix);
                    if (!rep.equal) return report_mismatch(rep);
                    std::cout << "OK: A*B = slack_perm(" << fc_n << "), size " << f.width()
                              << "\n";
                }
                return 0;
            }
            if (fc_poly == "match") {
                Graph g = Graph::complete(fc_n);
                auto tks = build_all_tks(fc_n);
                for (const auto& path : fc_tk) {
                    auto [k, sets] = tk_from_json(path, fc_n);
                    if (k < 1 || k > fc_n / 2)
                        throw std::invalid_argument("T_k file has k out of range");
                    tks[k - 1] = sets;
                }
                Factorization f = match_factorization(g, tks);
                if (!fc_out.empty() || !fc_verify) {
                    nlohmann::json j;
                    j["A"] = nlohmann::json::parse(matrix_to_json(f.a));
                    j["B"] = nlohmann::json::parse(matrix_to_json(f.b));
                    write_out(fc_out, j.dump());
                }
                if (fc_verify) {
                    auto rep = mat_mul_eq(f.a, f.b, slack_match(g).matrix);
                    if (!rep.equal) return report_mismatch(rep);
                    std::cout << "OK: A*B = slack_match(K_" << fc_n << "), width "
                              << f.width() << "\n";
                }
                return 0;
            }
            throw std::invalid_argument("factorize: polytope must be perm or match");
        }

        if (*ver_cmd) {
            MarkovianProtocol p;
            SlackMatrix s = [&] {
                if (vr_protocol == "spt") {
                    Graph g = Graph::complete(vr_n);
                    p = build_spt_protocol(g);
                    return slack_spt(g);
                }
                if (vr_protocol == "perm") {
                    p = one_round_protocol(generate(parse_kind(vr_gen), vr_n));
                    return slack_perm(vr_n);
                }
                throw std::invalid_argument("unknown protocol '" + vr_protocol + "'");
            }();
            auto rep = check_correct(p, s);
            if (!rep.correct) return report_counterexample(rep);
            std::cout << "OK: protocol " << vr_protocol << " matches all "
                      << s.matrix.n_rows() * s.matrix.n_cols() << " cells exactly; width "
                      << gamma_width(p).width << "\n";
            return 0;
        }

        if (*sim_cmd) {
            if (sm_protocol != "spt" && sm_protocol != "perm")
                throw std::invalid_argument("unknown protocol '" + sm_protocol + "'");
            MarkovianProtocol p = sm_protocol == "spt"
                                      ? build_spt_protocol(Graph::complete(sm_n))
                                      : one_round_protocol(generate(parse_kind(sm_gen), sm_n));
            SimResult r = simulate(p, sm_x, sm_y, sm_trials, sm_seed);
            Rational exact = exact_expectation(p, sm_x, sm_y);
            std::cout << "trials " << sm_trials << " seed " << sm_seed << "\n"
                      << "mean " << r.mean.str() << " (~" << r.mean.decimal(6) << ")\n"
                      << "exact " << exact.str() << "\n"
                      << "nonnegative " << r.count_nonneg << "/" << sm_trials << "\n";
            return 0;
        }

        if (*sn_check) {
            ComparatorSeq seq = load_network(snc_file);
            if (snc_dir != "forward" && snc_dir != "reverse")
                throw std::invalid_argument("direction must be forward or reverse");
            Direction dir = snc_dir == "reverse" ? Direction::Reverse : Direction::Forward;
            if (!is_sorting_network(seq, dir)) {
                std::cout << "FAIL: not a " << snc_dir << " sorting network (n=" << seq.n
                          << ", q=" << seq.size() << ")\n";
                return 1;
            }
            std::cout << "OK: valid " << snc_dir << " sorting network (n=" << seq.n
                      << ", q=" << seq.size() << ")\n";
            return 0;
        }
        if (*sn_gen) {
            write_out(sng_out, network_to_text(generate(parse_kind(sng_kind), sng_n)));
            return 0;
        }
        if (*sn_min) {
            ComparatorSeq seq = snm_file.empty() ? generate(parse_kind(snm_gen), snm_n)
                                                 : load_network(snm_file);
            MinimalityMode mode;
            if (snm_mode == "one_removal")
                mode = MinimalityMode::OneRemoval;
            else if (snm_mode == "exhaustive")
                mode = MinimalityMode::Exhaustive;
            else
                throw std::invalid_argument("mode must be one_removal or exhaustive");
            MinimalityResult r = minimality(seq, mode);
            if (r.minimal) {
                std::cout << "OK: minimal under " << snm_mode << " (q=" << seq.size()
                          << ")\n";
                return 0;
            }
            std::cout << "FAIL: redundant subsequence of size " << r.redundant_subset.size()
                      << " still sorts:";
            for (std::size_t idx : r.redundant_subset)
                std::cout << " (" << seq.comps[idx].i << "," << seq.comps[idx].j << ")";
            std::cout << "\n";
            return 1;
        }

        if (*cov_tk) {
            auto tk = build_Tk(ct_n, ct_k);
            write_out(ct_out, tk_to_json(ct_n, ct_k, tk));
            return 0;
        }

        if (*go_ver) {
            ComparatorSeq seq = generate(parse_kind(gv_gen), gv_n);
            GoemansSystem sys = goemans_build(seq);
            auto perms = all_perms(gv_n);
            for (const auto& sigma : perms) {
                std::vector<Rational> w = lift_sigma(seq, sigma);
                bool ok = sys.is_feasible(w) && tilde_roundtrip(seq, w) &&
                          mk_monotone_along_lift(seq, sigma);
                for (int i = 1; i <= gv_n; ++i)
                    ok = ok && w[i - 1] == Rational(sigma.apply(i));
                if (!ok) {
                    std::cout << "FAIL: lift of " << sigma.label() << "\n";
                    return 1;
                }
            }
            SplitMix64 rng(gv_seed);
            for (int t = 0; t < gv_samples; ++t) {
                int parts = 2 + (int)rng.next_below(3);
                std::vector<Rational> combo(sys.ambient_dim(), Rational(0));
                Rational total = 0;
                std::vector<std::pair<std::size_t, Rational>> picks;
                for (int i = 0; i < parts; ++i) {
                    Rational wt((long)rng.next_below(9) + 1);
                    picks.emplace_back(rng.next_below(perms.size()), wt);
                    total += wt;
                }
                for (auto& [pi, wt] : picks) {
                    std::vector<Rational> w = lift_sigma(seq, perms[pi]);
                    for (std::size_t d = 0; d < combo.size(); ++d)
                        combo[d] += w[d] * wt / total;
                }
                std::vector<Rational> x(combo.begin(), combo.begin() + gv_n);
                if (!sys.is_feasible(combo) || !edmonds_membership(x) ||
                    !tilde_roundtrip(seq, combo)) {
                    std::cout << "FAIL: random combination " << t << "\n";
                    return 1;
                }
            }
            std::cout << "OK: " << perms.size() << " lifts and " << gv_samples
                      << " convex combinations verified (n=" << gv_n
                      << ", 2q=" << sys.inequality_count() << ")\n";
            return 0;
        }

        if (*fool_cmd) {
            PermFactorization f = perm_factorization(generate(NetworkKind::Quadratic, fl_n));
            FoolingSet fs = quadratic_fooling_set(fl_n);
            if (!fooling_verify(f.a, fs)) {
                std::cout << "FAIL: fooling set rejected\n";
                return 1;
            }
            std::cout << "OK: fooling set of size " << fs.pairs.size()
                      << " verified against A (" << f.a.n_rows() << "x" << f.a.n_cols()
                      << "); rk+(A) = " << fs.pairs.size() << "\n";
            return 0;
        }

        if (*rep_cmd) {
            if (rp_format != "text" && rp_format != "json")
                throw std::invalid_argument("format must be text or json");
            return run_report(rp_format);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
