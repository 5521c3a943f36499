// densitometer: command-line front end for the exact Lie-theoretic tables
// (decay rates, orbits, packets, sign conditions, the exponent ledger) and
// the random-walk laboratory (mixing, spectra, covering).

#include "densitometer/aj_packets.hpp"
#include "densitometer/arith.hpp"
#include "densitometer/arthur.hpp"
#include "densitometer/digraph.hpp"
#include "densitometer/lie_core.hpp"
#include "densitometer/nbrw.hpp"
#include "densitometer/rate.hpp"
#include "densitometer/spherical.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using json = nlohmann::json;
using namespace dsm;

namespace {

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", x);
    return buf;
}

struct OutputTarget {
    std::string path;  // empty = stdout
    std::ostringstream buffer;

    void flush() {
        if (path.empty()) {
            std::cout << buffer.str();
        } else {
            std::ofstream f(path);
            if (!f) throw std::runtime_error("cannot open output file " + path);
            f << buffer.str();
        }
    }
};

int thread_budget(std::size_t jobs) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("DENSITOMETER_THREADS")) {
        long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(cap));
    }
    return static_cast<int>(std::min<std::size_t>(hw, jobs));
}

lie::Family parse_family(const std::string& s) {
    if (s == "B" || s == "b") return lie::Family::B;
    if (s == "C" || s == "c") return lie::Family::C;
    throw std::invalid_argument("family must be B or C, got '" + s + "'");
}

// ---------------------------------------------------------------- rates ---

void run_rates(OutputTarget& out, const std::string& format) {
    auto catalog = arthur::shape_catalog_SO5();
    if (format == "json") {
        json rows = json::array();
        for (const auto& r : catalog) {
            json row;
            row["shape"] = r.shape.name;
            json pairs = json::array();
            for (auto [n, m] : r.shape.pairs) pairs.push_back({n, m});
            row["pairs"] = pairs;
            row["partition"] = r.orbit.partition;
            row["sl2_type"] = r.sl2_type_name;
            row["levi"] = arthur::levi_name(r.levi);
            row["nu"] = to_string(r.nu);
            row["rate"] = r.rate.str();
            rows.push_back(row);
        }
        out.buffer << rows.dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        out.buffer << "shape,partition,sl2_type,levi,nu,rate\n";
        for (const auto& r : catalog)
            out.buffer << r.shape.name << "," << r.orbit.partition_str() << ","
                       << r.sl2_type_name << "," << arthur::levi_name(r.levi) << ","
                       << to_string(r.nu) << "," << r.rate.str() << "\n";
        return;
    }
    out.buffer << "shape  partition  sl2-type    levi  nu          rate\n";
    for (const auto& r : catalog) {
        char line[160];
        std::snprintf(line, sizeof(line), "%-6s %-10s %-11s %-5s %-11s %s\n",
                      r.shape.name.c_str(), r.orbit.partition_str().c_str(),
                      r.sl2_type_name.c_str(), arthur::levi_name(r.levi),
                      to_string(r.nu).c_str(), r.rate.str().c_str());
        out.buffer << line;
    }
}

// --------------------------------------------------------------- orbits ---

void run_orbits(OutputTarget& out, const std::string& format,
                const std::string& family_str, int total) {
    lie::Family family = parse_family(family_str);
    auto orbits = arthur::nilpotent_partitions(family, total);
    // the orbits live in the dual group; the group side has the dual family
    int rank = total / 2;
    std::optional<lie::RootDatum> rd;
    if (rank >= 1)
        rd = lie::build_root_datum(
            family == lie::Family::C ? lie::Family::B : lie::Family::C, rank);

    json rows = json::array();
    for (const auto& orbit : orbits) {
        json row;
        row["partition"] = orbit.partition;
        auto wd = arthur::weighted_dynkin(orbit);
        row["weighted_dynkin"] = wd;
        if (rd) {
            auto nu = arthur::nu_sigma(orbit, *rd);
            row["nu_sigma"] = to_string(nu);
            row["rate"] = arthur::rate_invariant(nu, *rd).str();
        }
        if (family == lie::Family::C && total == 4)
            row["levi"] = arthur::levi_name(arthur::principal_levi_of(orbit));
        rows.push_back(row);
    }
    if (format == "json") {
        out.buffer << rows.dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        out.buffer << "partition,weighted_dynkin,nu_sigma,rate,levi\n";
        for (const auto& row : rows) {
            std::string part, wd;
            for (auto v : row["partition"]) part += (part.empty() ? "" : " ") + std::string(v.dump());
            for (auto v : row["weighted_dynkin"]) wd += (wd.empty() ? "" : " ") + std::string(v.dump());
            out.buffer << "(" << part << "),(" << wd << "),"
                       << row.value("nu_sigma", "") << "," << row.value("rate", "")
                       << "," << row.value("levi", "") << "\n";
        }
        return;
    }
    out.buffer << "orbits of " << family_str << " with N = " << total << "\n";
    for (const auto& row : rows) {
        out.buffer << "  partition " << row["partition"].dump() << "  wd "
                   << row["weighted_dynkin"].dump();
        if (row.contains("nu_sigma"))
            out.buffer << "  nu " << row["nu_sigma"].get<std::string>() << "  rate "
                       << row["rate"].get<std::string>();
        if (row.contains("levi")) out.buffer << "  levi " << row["levi"].get<std::string>();
        out.buffer << "\n";
    }
}

// -------------------------------------------------------------- packets ---

std::string degree_set_str(const std::set<int>& s) {
    std::string out = "{";
    for (auto it = s.begin(); it != s.end(); ++it) {
        if (it != s.begin()) out += ",";
        out += std::to_string(*it);
    }
    return out + "}";
}

void run_packets(OutputTarget& out, const std::string& format,
                 const std::string& form_filter, const std::string& levi_filter) {
    using aj::FormLabel;
    using arthur::LeviLabel;
    std::vector<FormLabel> forms = {FormLabel::Split, FormLabel::Hyperbolic,
                                    FormLabel::Compact};
    std::vector<LeviLabel> levis = {LeviLabel::T, LeviLabel::M, LeviLabel::S,
                                    LeviLabel::G};
    if (!form_filter.empty()) {
        forms.clear();
        if (form_filter == "split") forms = {FormLabel::Split};
        else if (form_filter == "hyperbolic") forms = {FormLabel::Hyperbolic};
        else if (form_filter == "compact") forms = {FormLabel::Compact};
        else throw std::invalid_argument("unknown form '" + form_filter + "'");
    }
    if (!levi_filter.empty()) {
        levis.clear();
        if (levi_filter == "T") levis = {LeviLabel::T};
        else if (levi_filter == "M") levis = {LeviLabel::M};
        else if (levi_filter == "S") levis = {LeviLabel::S};
        else if (levi_filter == "G") levis = {LeviLabel::G};
        else throw std::invalid_argument("unknown levi '" + levi_filter + "'");
    }

    json rows = json::array();
    for (auto f : forms)
        for (auto l : levis) {
            auto form = aj::real_form(f);
            auto rep = aj::cohomology_degrees(form, l);
            json row;
            row["form"] = aj::form_name(f);
            row["levi"] = arthur::levi_name(l);
            row["size"] = rep.size;
            json reps = json::array();
            for (const auto& r : rep.representatives) reps.push_back(to_string(r));
            row["lambda_reps"] = reps;
            json degs = json::array();
            for (const auto& ds : rep.degree_sets)
                degs.push_back(std::vector<int>(ds.begin(), ds.end()));
            row["degree_sets"] = degs;
            row["total_dim"] = rep.total_dim;
            row["dimension_check"] = aj::total_dim_check(form, l);
            rows.push_back(row);
        }

    if (format == "json") {
        out.buffer << rows.dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        out.buffer << "form,levi,size,degree_sets,total_dim,dimension_check\n";
        for (const auto& row : rows) {
            std::string degs;
            for (const auto& ds : row["degree_sets"]) {
                std::set<int> s(ds.begin(), ds.end());
                degs += degree_set_str(s);
            }
            out.buffer << row["form"].get<std::string>() << ","
                       << row["levi"].get<std::string>() << "," << row["size"] << ","
                       << degs << "," << row["total_dim"] << ","
                       << (row["dimension_check"].get<bool>() ? "ok" : "FAIL") << "\n";
        }
        return;
    }
    out.buffer << "form        levi  size  degrees                 total  check\n";
    for (const auto& row : rows) {
        std::string degs;
        for (const auto& ds : row["degree_sets"]) {
            std::set<int> s(ds.begin(), ds.end());
            degs += degree_set_str(s);
        }
        char line[200];
        std::snprintf(line, sizeof(line), "%-11s %-5s %-5d %-23s %-6d %s\n",
                      row["form"].get<std::string>().c_str(),
                      row["levi"].get<std::string>().c_str(),
                      row["size"].get<int>(), degs.c_str(),
                      row["total_dim"].get<int>(),
                      row["dimension_check"].get<bool>() ? "ok" : "FAIL");
        out.buffer << line;
    }
}

// ------------------------------------------------------------ spherical ---

void run_spherical(OutputTarget& out, const std::string& format,
                   const std::string& nu_str, long long p, const std::string& r_str,
                   int radius, const std::string& family_str, int rank) {
    lie::RootDatum rd = lie::build_root_datum(parse_family(family_str), rank);
    auto param = sph::UnramifiedParam::make(parse_rat_vec(nu_str), p, rd);
    Rat r = parse_rat(r_str);
    RateValue threshold = sph::decay_threshold(param, rd);

    std::vector<std::pair<int, double>> sums;
    for (int rad = 0; rad <= radius; ++rad)
        sums.emplace_back(rad, sph::lr_partial_sum(param, r, rad, rd));

    if (format == "json") {
        json doc;
        doc["nu"] = nu_str;
        doc["p"] = p;
        doc["r"] = r_str;
        doc["threshold"] = threshold.str();
        doc["converges"] = sph::lr_converges(param, r, rd);
        json rows = json::array();
        for (auto [rad, s] : sums) rows.push_back({rad, s});
        doc["partial_sums"] = rows;
        out.buffer << doc.dump(2) << "\n";
        return;
    }
    out.buffer << "# nu=" << nu_str << " p=" << p << " r=" << r_str
               << " threshold=" << threshold.str()
               << " converges=" << (sph::lr_converges(param, r, rd) ? "yes" : "no")
               << "\n";
    out.buffer << "radius,partial_sum\n";
    for (auto [rad, s] : sums) out.buffer << rad << "," << fmt_double(s) << "\n";
}

// ----------------------------------------------------------- graph input ---

struct GraphJob {
    nbrw::Digraph graph;
    std::string label;
    std::uint64_t seed = 0;
};

nbrw::UndirectedGraph read_undirected_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open graph file " + path);
    int n, k;
    if (!(f >> n >> k)) throw std::invalid_argument("undirected file: missing 'n k' header");
    nbrw::UndirectedGraph g{n, k, std::vector<std::vector<int>>(n)};
    int a, b;
    while (f >> a >> b) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw std::invalid_argument("undirected file: vertex id out of range");
        g.adj[a].push_back(b);
        g.adj[b].push_back(a);
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    return g;
}

std::vector<std::vector<int>> cayley_generators(const std::string& spec) {
    if (spec == "z5") {
        return {{1, 2, 3, 4, 0}};
    }
    if (spec == "s3") {
        // transposition (01) and 3-cycle (012) acting on {0,1,2}
        return {{1, 0, 2}, {1, 2, 0}};
    }
    if (spec == "sl2f3") {
        // [[1,1],[0,1]] and [[1,0],[1,1]] acting on the 8 nonzero vectors
        // of F_3^2, listed in lexicographic order.
        std::vector<std::pair<int, int>> vecs;
        for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y)
                if (x || y) vecs.emplace_back(x, y);
        auto index_of = [&](int x, int y) {
            for (std::size_t i = 0; i < vecs.size(); ++i)
                if (vecs[i] == std::make_pair(x, y)) return static_cast<int>(i);
            throw std::logic_error("sl2f3 index");
        };
        std::vector<int> upper(vecs.size()), lower(vecs.size());
        for (std::size_t i = 0; i < vecs.size(); ++i) {
            auto [x, y] = vecs[i];
            upper[i] = index_of((x + y) % 3, y);
            lower[i] = index_of(x, (x + y) % 3);
        }
        return {upper, lower};
    }
    if (spec.rfind("file:", 0) == 0) {
        std::ifstream f(spec.substr(5));
        if (!f) throw std::invalid_argument("cannot open generator file");
        std::vector<std::vector<int>> gens;
        std::string line;
        while (std::getline(f, line)) {
            std::istringstream ls(line);
            std::vector<int> perm;
            int v;
            while (ls >> v) perm.push_back(v);
            if (!perm.empty()) gens.push_back(std::move(perm));
        }
        if (gens.empty()) throw std::invalid_argument("generator file: no permutations");
        return gens;
    }
    throw std::invalid_argument("unknown cayley spec '" + spec +
                                "' (use z5, s3, sl2f3, or file:PATH)");
}

std::vector<GraphJob> build_graph_jobs(const std::string& graph_file,
                                       const std::string& nb_lift_file,
                                       const std::string& cayley_spec,
                                       const std::vector<long long>& random_regular,
                                       const std::vector<std::uint64_t>& seeds,
                                       bool transitive_hint) {
    std::vector<GraphJob> jobs;
    if (!graph_file.empty()) {
        std::ifstream f(graph_file);
        if (!f) throw std::invalid_argument("cannot open graph file " + graph_file);
        GraphJob job;
        job.graph = nbrw::read_graph_file(f);
        if (transitive_hint) job.graph.symmetry = {true, 1};
        job.label = graph_file;
        jobs.push_back(std::move(job));
    } else if (!nb_lift_file.empty()) {
        auto base = read_undirected_file(nb_lift_file);
        GraphJob job;
        job.graph = nbrw::nonbacktracking_lift(base, transitive_hint);
        job.label = "nb-lift:" + nb_lift_file;
        jobs.push_back(std::move(job));
    } else if (!cayley_spec.empty()) {
        GraphJob job;
        job.graph = nbrw::cayley_digraph(cayley_generators(cayley_spec));
        job.label = "cayley:" + cayley_spec;
        jobs.push_back(std::move(job));
    } else if (random_regular.size() == 2) {
        for (std::uint64_t seed : seeds) {
            GraphJob job;
            auto base = nbrw::random_regular_graph(
                static_cast<int>(random_regular[0]),
                static_cast<int>(random_regular[1]), seed);
            job.graph = nbrw::nonbacktracking_lift(base);
            job.label = "random-regular:" + std::to_string(random_regular[0]) + "x" +
                        std::to_string(random_regular[1]);
            job.seed = seed;
            jobs.push_back(std::move(job));
        }
    } else {
        throw std::invalid_argument(
            "no graph source: use --graph, --nb-lift, --cayley or --random-regular");
    }
    return jobs;
}

// ----------------------------------------------------------------- walk ---

void run_walk(OutputTarget& out, const std::string& format,
              std::vector<GraphJob> jobs, double eps) {
    struct Row {
        GraphJob* job;
        nbrw::WalkReport report;
    };
    std::vector<Row> rows(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            rows[i].job = &jobs[i];
            rows[i].report = nbrw::walk_report(jobs[i].graph, eps);
        }
    };
    int workers = thread_budget(jobs.size());
    std::vector<std::thread> pool;
    for (int i = 1; i < workers; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    if (format == "json") {
        json arr = json::array();
        for (const auto& row : rows) {
            const auto& r = row.report;
            json doc;
            doc["graph"] = row.job->label;
            doc["seed"] = row.job->seed;
            doc["n"] = r.n;
            doc["d"] = r.d;
            doc["eps"] = r.eps;
            doc["lower_bound"] = r.lower_bound;
            doc["t_mix"] = r.t_mix;
            doc["log_d_n"] = r.log_d_n;
            doc["cutoff_ratio"] = r.cutoff_ratio;
            doc["almost_diameter"] = r.almost_diameter;
            doc["diameter"] = r.diameter;
            doc["distances_exact"] = r.distances_exact;
            doc["collision_horizon"] = r.collision_horizon;
            if (r.first_collision) {
                doc["collision_first"] = {r.first_collision->first,
                                          r.first_collision->second};
            } else {
                doc["collision_first"] = nullptr;
            }
            arr.push_back(doc);
        }
        out.buffer << arr.dump(2) << "\n";
        return;
    }
    out.buffer << "graph,seed,n,d,eps,lower_bound,t_mix,log_d_n,cutoff_ratio,"
                  "almost_diameter,diameter,distances_exact,collision_first_n,"
                  "collision_first_m,collision_horizon\n";
    for (const auto& row : rows) {
        const auto& r = row.report;
        out.buffer << row.job->label << "," << row.job->seed << "," << r.n << ","
                   << r.d << "," << fmt_double(r.eps) << "," << r.lower_bound << ","
                   << r.t_mix << "," << fmt_double(r.log_d_n) << ","
                   << fmt_double(r.cutoff_ratio) << "," << r.almost_diameter << ","
                   << r.diameter << "," << (r.distances_exact ? 1 : 0) << ",";
        if (r.first_collision)
            out.buffer << r.first_collision->first << "," << r.first_collision->second;
        else
            out.buffer << "none,none";
        out.buffer << "," << r.collision_horizon << "\n";
    }
}

// ------------------------------------------------------------- spectrum ---

void run_spectrum(OutputTarget& out, const std::string& format,
                  std::vector<GraphJob> jobs, int dense_limit,
                  const std::string& grid_str) {
    std::vector<double> grid;
    {
        std::istringstream gs(grid_str);
        std::string tok;
        while (std::getline(gs, tok, ',')) grid.push_back(std::stod(tok));
    }
    json arr = json::array();
    for (auto& job : jobs) {
        auto rep = nbrw::spectrum(job.graph, dense_limit);
        json doc;
        doc["graph"] = job.label;
        doc["seed"] = job.seed;
        doc["n"] = job.graph.n;
        doc["d"] = job.graph.d;
        doc["trivial_count"] = rep.trivial_count;
        json top = json::array();
        for (std::size_t i = 0; i < rep.magnitudes.size() && i < 8; ++i)
            top.push_back(rep.magnitudes[i]);
        doc["top_magnitudes"] = top;
        json counts = json::object();
        for (double r : grid)
            counts[fmt_double(r)] = nbrw::density_count(rep, job.graph.d, r);
        doc["density_counts"] = counts;
        arr.push_back(doc);
    }
    if (format == "json") {
        out.buffer << arr.dump(2) << "\n";
        return;
    }
    out.buffer << "graph,n,d,trivial_count,top_magnitude";
    for (double r : grid) out.buffer << ",N(" << fmt_double(r) << ")";
    out.buffer << "\n";
    for (const auto& doc : arr) {
        out.buffer << doc["graph"].get<std::string>() << "," << doc["n"] << ","
                   << doc["d"] << "," << doc["trivial_count"] << ","
                   << fmt_double(doc["top_magnitudes"][0].get<double>());
        for (double r : grid)
            out.buffer << "," << doc["density_counts"][fmt_double(r)];
        out.buffer << "\n";
    }
}

// --------------------------------------------------------------- ledger ---

void run_ledger(OutputTarget& out, const std::string& format) {
    auto rows = arith::sxdh_ledger();
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
            json doc;
            doc["shape"] = r.shape;
            doc["rate"] = r.rate.str();
            doc["bound_exponent"] = r.bound_exponent;
            doc["dim_g"] = r.dim_g;
            doc["target_exponent"] = to_string(r.target_exponent);
            doc["pass"] = r.pass;
            doc["tight"] = r.tight;
            arr.push_back(doc);
        }
        out.buffer << arr.dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        out.buffer << "shape,rate,bound_exponent,target_exponent,verdict,tight\n";
        for (const auto& r : rows)
            out.buffer << r.shape << "," << r.rate.str() << "," << r.bound_exponent
                       << "," << to_string(r.target_exponent) << ","
                       << (r.pass ? "PASS" : "FAIL") << "," << (r.tight ? 1 : 0)
                       << "\n";
        return;
    }
    out.buffer << "| shape | rate | bound exponent | target 2 dim/r | verdict |\n";
    out.buffer << "|-------|------|----------------|----------------|---------|\n";
    for (const auto& r : rows) {
        out.buffer << "| " << r.shape << " | " << r.rate.str() << " | "
                   << r.bound_exponent << " | " << to_string(r.target_exponent)
                   << " | " << (r.pass ? "PASS" : "FAIL")
                   << (r.tight ? " (tight)" : "") << " |\n";
    }
}

// ---------------------------------------------------------------- gross ---

void run_gross(OutputTarget& out, const std::string& format, int n,
               const std::string& a_str, int definite_scan) {
    json doc;
    if (!a_str.empty()) {
        arith::SignatureProfile prof{n, {}};
        std::istringstream as(a_str);
        std::string tok;
        while (std::getline(as, tok, ',')) prof.a_list.push_back(std::stoi(tok));
        doc["n"] = n;
        doc["a_list"] = prof.a_list;
        json signs = json::array();
        for (int a : prof.a_list) signs.push_back(arith::kottwitz_sign(n, a));
        doc["kottwitz_signs"] = signs;
        doc["exists"] = arith::gross_form_exists(prof);
    } else {
        json degrees = json::array();
        for (int deg = 1; deg <= definite_scan; ++deg) {
            arith::SignatureProfile prof{n, std::vector<int>(deg, n)};
            degrees.push_back({{"degree", deg},
                               {"definite_exists", arith::gross_form_exists(prof)}});
        }
        doc["n"] = n;
        doc["definite_by_degree"] = degrees;
    }
    if (format == "json") {
        out.buffer << doc.dump(2) << "\n";
        return;
    }
    if (doc.contains("exists")) {
        out.buffer << "n=" << n << " a=(" << a_str << ") signs=";
        for (const auto& s : doc["kottwitz_signs"])
            out.buffer << (s.get<int>() > 0 ? "+" : "-");
        out.buffer << " exists=" << (doc["exists"].get<bool>() ? "yes" : "no") << "\n";
    } else {
        out.buffer << "degree,definite_exists\n";
        for (const auto& row : doc["definite_by_degree"])
            out.buffer << row["degree"] << ","
                       << (row["definite_exists"].get<bool>() ? "yes" : "no") << "\n";
    }
}

// --------------------------------------------------------------- counts ---

void run_counts(OutputTarget& out, const std::string& format,
                const std::string& family_str, int rank, long long p, int level) {
    arith::GroupFamily family = family_str == "Sp" ? arith::GroupFamily::Sp
                                                   : arith::GroupFamily::SOodd;
    auto order = arith::group_order(family, rank, p, level);
    long long dim = arith::dim_group(family, rank);
    // log_p(order) from the factored formula, without big-float support
    double log_p_order = rank * rank + static_cast<double>(level - 1) * dim;
    for (int i = 1; i <= rank; ++i)
        log_p_order += std::log(std::pow(static_cast<double>(p), 2 * i) - 1.0) /
                       std::log(static_cast<double>(p));
    double log_ratio = log_p_order / (static_cast<double>(level) * dim);
    json doc;
    doc["family"] = family_str;
    doc["rank"] = rank;
    doc["p"] = p;
    doc["level"] = level;
    doc["order"] = order.str();
    doc["dim"] = dim;
    doc["log_p_order_over_level_dim"] = log_ratio;
    if (format == "json") {
        out.buffer << doc.dump(2) << "\n";
        return;
    }
    out.buffer << family_str << rank * 2 << (family_str == "Sp" ? "" : "+1")
               << " over p=" << p << " level=" << level << ": order=" << order.str()
               << " dim=" << dim << " log ratio=" << fmt_double(log_ratio) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"densitometer: decay-rate tables and a random-walk laboratory"};
    app.require_subcommand(1);

    std::string format = "table";
    std::string out_path;
    app.add_option("--format", format, "table | csv | json")->capture_default_str();
    bool json_flag = false;
    app.add_flag("--json", json_flag, "shorthand for --format json");
    app.add_option("--out", out_path, "write output to a file");

    // rates
    auto* rates = app.add_subcommand("rates", "decay rates of the six named shapes");
    std::string group = "SO5";
    rates->add_option("--group", group, "only SO5 is available")->capture_default_str();

    // orbits
    auto* orbits = app.add_subcommand("orbits", "nilpotent orbits as partitions");
    std::string orbit_family = "C";
    int orbit_total = 4;
    orbits->add_option("--family", orbit_family, "B or C")->capture_default_str();
    orbits->add_option("--N", orbit_total, "size of the partitions")->capture_default_str();

    // packets
    auto* packets = app.add_subcommand("packets", "cohomological packet table");
    std::string form_filter, levi_filter;
    packets->add_option("--form", form_filter, "split | hyperbolic | compact");
    packets->add_option("--levi", levi_filter, "T | M | S | G");

    // spherical
    auto* spherical = app.add_subcommand("spherical", "integrability thresholds and sums");
    std::string nu_str = "1/2,0";
    long long p_res = 3;
    std::string r_str = "3";
    int radius = 40;
    std::string sph_family = "B";
    int sph_rank = 2;
    spherical->add_option("--nu", nu_str, "rational weight, e.g. 1/2,0")->capture_default_str();
    spherical->add_option("--p", p_res, "residue degree")->capture_default_str();
    spherical->add_option("--r", r_str, "integrability exponent")->capture_default_str();
    spherical->add_option("--radius", radius, "truncation radius")->capture_default_str();
    spherical->add_option("--family", sph_family, "B or C")->capture_default_str();
    spherical->add_option("--rank", sph_rank, "rank")->capture_default_str();

    // shared graph source options
    std::string graph_file, nb_lift_file, cayley_spec;
    std::vector<long long> random_regular;
    std::vector<std::uint64_t> seeds = {1};
    bool transitive_hint = false;
    auto add_graph_opts = [&](CLI::App* cmd) {
        cmd->add_option("--graph", graph_file, "digraph file: 'n d' header + edges");
        cmd->add_option("--nb-lift", nb_lift_file,
                        "undirected regular graph file: 'n k' header + edges");
        cmd->add_option("--cayley", cayley_spec, "z5 | s3 | sl2f3 | file:PATH");
        cmd->add_option("--random-regular", random_regular,
                        "n k: lift of a seeded random k-regular graph")
            ->expected(2);
        cmd->add_option("--seed", seeds, "seed(s); several run as a batch")
            ->expected(-1);
        cmd->add_flag("--transitive", transitive_hint, "mark the graph vertex-transitive");
    };

    auto* walk = app.add_subcommand("walk", "mixing / diameter / collision report");
    double eps = 0.25;
    walk->add_option("--eps", eps, "total-variation target")->capture_default_str();
    add_graph_opts(walk);

    auto* spectrum = app.add_subcommand("spectrum", "dense spectrum and density counts");
    int dense_limit = 4000;
    std::string grid = "2.5,3,4,6";
    spectrum->add_option("--dense-limit", dense_limit, "dense eigensolve cap")
        ->capture_default_str();
    spectrum->add_option("--grid", grid, "comma list of r values for N(r)")
        ->capture_default_str();
    add_graph_opts(spectrum);

    // ledger
    auto* ledger = app.add_subcommand("ledger", "exponent ledger for the six shapes");

    // gross
    auto* gross = app.add_subcommand("gross", "inner-form existence by signatures");
    int gross_n = 2;
    std::string a_str;
    int definite_scan = 8;
    gross->add_option("--n", gross_n, "rank of SO_{2n+1}")->capture_default_str();
    gross->add_option("--a", a_str, "comma list of signatures a_v");
    gross->add_option("--definite-scan", definite_scan,
                      "tabulate definite existence for degrees 1..K")
        ->capture_default_str();

    // counts
    auto* counts = app.add_subcommand("counts", "finite classical group orders");
    std::string count_family = "Sp";
    int count_rank = 2;
    long long count_p = 2;
    int count_level = 1;
    counts->add_option("--family", count_family, "Sp or SO")->capture_default_str();
    counts->add_option("--rank", count_rank)->capture_default_str();
    counts->add_option("--p", count_p)->capture_default_str();
    counts->add_option("--level", count_level)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
            e.get_name() == "CallForVersion")
            return app.exit(e);
        std::cerr << "usage error: " << e.what() << "\n";
        return 64;
    }
    if (json_flag) format = "json";

    OutputTarget out;
    out.path = out_path;
    try {
        if (rates->parsed()) {
            if (group != "SO5") throw std::invalid_argument("only --group SO5 is available");
            run_rates(out, format);
        } else if (orbits->parsed()) {
            run_orbits(out, format, orbit_family, orbit_total);
        } else if (packets->parsed()) {
            run_packets(out, format, form_filter, levi_filter);
        } else if (spherical->parsed()) {
            run_spherical(out, format, nu_str, p_res, r_str, radius, sph_family,
                          sph_rank);
        } else if (walk->parsed()) {
            auto jobs = build_graph_jobs(graph_file, nb_lift_file, cayley_spec,
                                         random_regular, seeds, transitive_hint);
            run_walk(out, format == "table" ? "csv" : format, std::move(jobs), eps);
        } else if (spectrum->parsed()) {
            auto jobs = build_graph_jobs(graph_file, nb_lift_file, cayley_spec,
                                         random_regular, seeds, transitive_hint);
            run_spectrum(out, format == "table" ? "csv" : format, std::move(jobs),
                         dense_limit, grid);
        } else if (ledger->parsed()) {
            run_ledger(out, format);
        } else if (gross->parsed()) {
            run_gross(out, format, gross_n, a_str, definite_scan);
        } else if (counts->parsed()) {
            run_counts(out, format, count_family, count_rank, count_p, count_level);
        }
        out.flush();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
