// Command-line surface: every quantity the library computes, as JSON on
// stdout (CSV for tables on request). Exit codes: 0 success, 1 a
// verification or search failure, 2 usage error.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pyjama/distance.hpp"
#include "pyjama/lattice.hpp"
#include "pyjama/oracle.hpp"
#include "pyjama/witness.hpp"

using nlohmann::json;
using namespace pyjama;

namespace {

constexpr std::uint64_t kDefaultSeed = 1;

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

json report(const std::string& command, long n) {
    json j;
    j["schema"] = 1;
    j["command"] = command;
    j["n"] = n;
    return j;
}

void emit(json j, const Timer& t) {
    j["elapsed_ms"] = t.ms();
    std::cout << j.dump() << "\n";
}

json delta_fields(long n) {
    const DeltaResult d = delta_closed_form(n);
    json j;
    j["delta"] = rat_to_string(d.delta);
    j["eps_bound"] = rat_to_string(epsilon_bound(n));
    if (d.smallest_odd_prime) j["p"] = *d.smallest_odd_prime;
    j["power_of_two"] = is_power_of_two(n);
    return j;
}

int cmd_delta(long n) {
    Timer t;
    json j = report("delta", n);
    j.update(delta_fields(n));
    j["method"] = "closed_form";
    emit(j, t);
    return 0;
}

int cmd_xi(long n) {
    Timer t;
    if (n >= 2 && is_power_of_two(n)) {
        std::cerr << "xi: n = " << n
                  << " is a power of two: delta_n = 0 and the half-ones vector (1/2,...,1/2) "
                     "itself has integral inner products with every generator; the extremal "
                     "construction only applies when n has an odd prime divisor\n";
        return 2;
    }
    const XiVector v = xi_vector(n);
    json j = report("xi", n);
    j["p"] = v.p;
    j["eps"] = v.eps;
    json coords = json::array();
    for (const Rat& x : v.xi) coords.push_back(rat_to_string(x));
    j["xi"] = coords;
    j["in_E"] = in_E(v.xi, lambda_basis(n));
    j["distance"] = rat_to_string(make_rat(1, 2 * v.p));
    emit(j, t);
    return 0;
}

int cmd_generators(long n) {
    Timer t;
    const GeneratorSet gs = lambda_generators(n);
    const LatticeBasis basis = lambda_basis(n);
    json j = report("generators", n);
    j["count"] = gs.size();
    json gens = json::array();
    for (std::size_t i = 0; i < gs.size(); ++i) {
        json g;
        g["p"] = gs.gens[i].p;
        g["offset"] = gs.gens[i].offset;
        json vec = json::array();
        for (const Int& x : gs.vector_of(i)) vec.push_back(x.get_si());
        g["vector"] = vec;
        gens.push_back(g);
    }
    j["generators"] = gens;
    j["rank"] = basis.rank();
    json rows = json::array();
    for (std::size_t i = 0; i < basis.basis.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < basis.basis.cols(); ++c)
            row.push_back(basis.basis.at(i, c).get_si());
        rows.push_back(row);
    }
    j["basis"] = rows;
    emit(j, t);
    return 0;
}

int cmd_verify(long n) {
    Timer t;
    json checks = json::array();
    bool all = true;
    auto add = [&](const std::string& name, bool pass, const std::string& detail = "") {
        json c;
        c["name"] = name;
        c["pass"] = pass;
        if (!pass && !detail.empty()) c["detail"] = detail;
        checks.push_back(c);
        all = all && pass;
    };

    const GeneratorSet gs = lambda_generators(n);
    bool vanish = true;
    for (std::size_t i = 0; i < gs.size(); ++i)
        vanish = vanish && is_vanishing(gs.vector_of(i), n);
    add("generators_vanish", vanish);

    const LatticeBasis basis = lambda_basis(n);
    add("generators_match_ideal_basis", basis.basis == ideal_basis_oracle(n).basis);
    add("rank_equals_n_minus_totient", static_cast<long>(basis.rank()) == n - totient(n));

    if (is_power_of_two(n)) {
        add("half_ones_membership", half_ones_in_E(n));
    } else {
        try {
            const XiVector v = xi_vector(n);
            bool eps_ok = true;
            for (int e : v.eps) eps_ok = eps_ok && (e == 1 || e == -1);
            add("xi_signs_plus_minus_one", eps_ok);
            add("xi_membership", in_E(v.xi, basis));
            Rat dist = 0;
            for (const Rat& x : v.xi) dist = std::max(dist, rat_abs(x - make_rat(1, 2)));
            add("xi_distance_exact", dist == make_rat(1, 2 * v.p),
                "distance " + rat_to_string(dist));
        } catch (const invariant_violation& e) {
            add("xi_construction", false, e.what());
        }
    }

    bool mono = true;
    std::string bad;
    const Rat dn = delta_closed_form(n).delta;
    for (long m = 2; m <= n; ++m)
        if (n % m == 0 && delta_closed_form(m).delta > dn) {
            mono = false;
            bad = "m = " + std::to_string(m);
        }
    add("divisor_monotonicity", mono, bad);

    json j = report("verify", n);
    j["checks"] = checks;
    j["all_pass"] = all;
    emit(j, t);
    return all ? 0 : 1;
}

int cmd_witness(long n, double eps, int budget, std::uint64_t seed, double radius, int threads) {
    Timer t;
    json j = report("witness", n);
    j["eps"] = eps;
    const Rat bound = epsilon_bound(n);
    j["eps_bound"] = rat_to_string(bound);
    if (Rat(eps) >= bound) {
        j["possible"] = false;
        j["reason"] = "no X exists: eps >= 1/2 - delta_n";
        emit(j, t);
        return 0;
    }
    j["possible"] = true;
    SearchConfig cfg = default_search_config(n);
    cfg.seed = seed;
    cfg.max_iterations = budget;
    if (radius > 0) cfg.radius = radius;
    const Witness w = search_witness(n, cfg, threads);
    j["x"] = w.x;
    j["y"] = w.y;
    j["margin"] = w.margin;
    j["evaluations"] = w.evaluations;
    j["seed"] = seed;
    const bool found = w.margin > eps;
    j["found"] = found;
    emit(j, t);
    return found ? 0 : 1;
}

int cmd_table(long from, long to, const std::string& format) {
    for (long n = from; n <= to; ++n) {
        const DeltaResult d = delta_closed_form(n);
        if (format == "csv") {
            std::cout << n << "," << rat_to_string(d.delta) << ","
                      << rat_to_string(epsilon_bound(n)) << ",";
            if (d.smallest_odd_prime) std::cout << *d.smallest_odd_prime;
            std::cout << "," << (is_power_of_two(n) ? "true" : "false") << "\n";
        } else {
            json j;
            j["n"] = n;
            j.update(delta_fields(n));
            std::cout << j.dump() << "\n";
        }
    }
    return 0;
}

int cmd_oracle(long n, const std::optional<std::string>& upper) {
    Timer t;
    const Rat u = upper ? rat_from_string(*upper) : make_rat(1, 2);
    const Rat d = delta_oracle(lambda_basis(n), half_ones(n), u);
    const Rat cf = delta_closed_form(n).delta;
    json j = report("oracle", n);
    j["delta_oracle"] = rat_to_string(d);
    j["delta_closed_form"] = rat_to_string(cf);
    j["agrees"] = d == cf;
    emit(j, t);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact distances, extremal vectors and numeric witnesses for the "
                 "integer-avoidance margin of n-th root-of-unity rotations"};
    app.require_subcommand(1);

    long n = 0;
    double eps = 0;
    int budget = 300;
    std::uint64_t seed = kDefaultSeed;
    double radius = 0;
    int threads = 1;
    long from = 0, to = 0;
    std::string format = "json";
    std::optional<std::string> upper;

    auto* sc_delta = app.add_subcommand("delta", "closed-form delta_n and the margin bound");
    sc_delta->add_option("n", n, "order of the roots of unity")->required();

    auto* sc_xi = app.add_subcommand("xi", "the extremal vector and its checks");
    sc_xi->add_option("n", n)->required();

    auto* sc_gens = app.add_subcommand("generators", "generating set and basis of the vanishing-sums lattice");
    sc_gens->add_option("n", n)->required();

    auto* sc_verify = app.add_subcommand("verify", "run all structural checks for one n");
    sc_verify->add_option("n", n)->required();

    auto* sc_witness = app.add_subcommand("witness", "search for X with margin above eps");
    sc_witness->add_option("n", n)->required();
    sc_witness->add_option("--eps", eps, "required margin, in (0, 1/2)")->required();
    sc_witness->add_option("--budget", budget, "descent sweeps per start (default 300)");
    sc_witness->add_option("--seed", seed, "random-start seed (default 1)");
    sc_witness->add_option("--radius", radius, "random-start box half-width (default 2n)");
    sc_witness->add_option("--threads", threads, "parallel starts (default 1)");

    auto* sc_table = app.add_subcommand("table", "delta table over a range of n");
    sc_table->add_option("from", from)->required();
    sc_table->add_option("to", to)->required();
    sc_table->add_option("--format", format, "json|csv (default json, one row per line)")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* sc_oracle = app.add_subcommand("oracle", "brute-force delta recomputation (n <= 12)");
    sc_oracle->add_option("n", n)->required();
    sc_oracle->add_option("--upper", upper, "upper bound for delta as a rational \"a/b\" (default 1/2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sc_delta->parsed() || sc_xi->parsed() || sc_gens->parsed() || sc_verify->parsed() ||
            sc_witness->parsed() || sc_oracle->parsed()) {
            if (n < 2) {
                std::cerr << "n must be at least 2\n";
                return 2;
            }
        }
        if (sc_delta->parsed()) return cmd_delta(n);
        if (sc_xi->parsed()) return cmd_xi(n);
        if (sc_gens->parsed()) return cmd_generators(n);
        if (sc_verify->parsed()) return cmd_verify(n);
        if (sc_witness->parsed()) {
            if (!(eps > 0 && eps < 0.5)) {
                std::cerr << "witness: --eps must lie strictly between 0 and 1/2\n";
                return 2;
            }
            if (budget < 1 || threads < 1) {
                std::cerr << "witness: --budget and --threads must be positive\n";
                return 2;
            }
            return cmd_witness(n, eps, budget, seed, radius, threads);
        }
        if (sc_table->parsed()) {
            if (from < 2 || to < from) {
                std::cerr << "table: need 2 <= from <= to\n";
                return 2;
            }
            return cmd_table(from, to, format);
        }
        if (sc_oracle->parsed()) {
            if (n > 12) {
                std::cerr << "oracle: n is capped at 12; the enumeration of integer right-hand "
                             "sides grows combinatorially with the lattice rank\n";
                return 2;
            }
            return cmd_oracle(n, upper);
        }
    } catch (const invariant_violation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
