#include "sod/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "sod/cache.hpp"
#include "sod/mutation.hpp"
#include "sod/object_syntax.hpp"
#include "sod/report.hpp"

namespace sod::cli {

namespace {

struct GlobalOptions {
    std::string format = "table";
    int max_sym_degree = 6;
    std::string cache_dir;
    bool verbose = false;

    std::shared_ptr<ResultCache> make_cache() const
    {
        std::string dir = cache_dir;
        if (dir.empty()) {
            if (const char* env = std::getenv("SOD_CACHE_DIR"))
                dir = env;
        }
        if (dir.empty())
            return nullptr;
        return std::make_shared<ResultCache>(dir);
    }
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double elapsed_ms() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

int emit(const GlobalOptions& opts, Report& report, const Stopwatch& watch)
{
    report.timings_ms["total"] = watch.elapsed_ms();
    if (opts.format == "json")
        std::cout << report.to_json().dump(2) << '\n';
    else
        std::cout << report.to_table();
    if (report.overall && !*report.overall)
        return 1;
    return 0;
}

void require_context(int k, int n)
{
    if (k < 1 || k >= n)
        throw InputError("require 1 <= k < n (got k=" + std::to_string(k) +
                         ", n=" + std::to_string(n) + ")");
}

int run_bwb(const GlobalOptions& opts, int k, int n, const std::string& u_text,
            const std::string& q_text)
{
    Stopwatch watch;
    require_context(k, n);
    const Weight alpha = Weight::parse(u_text, k);
    const Weight beta = Weight::parse(q_text, n - k);

    auto cache = opts.make_cache();
    const std::string key = "bwb;k=" + std::to_string(k) + ";n=" + std::to_string(n) +
                            ";u=" + alpha.to_string() + ";q=" + beta.to_string();
    CohomologyResult r = cache_get_or_compute(
        cache.get(), key, [&] { return bwb(k, n, alpha, beta); },
        [](const CohomologyResult& v) {
            nlohmann::json j;
            j["vanishes"] = !v.has_value();
            if (v) {
                j["degree"] = v->degree;
                j["weight"] = v->gln_weight.to_string();
            }
            return j;
        },
        [n](const nlohmann::json& j) -> CohomologyResult {
            if (j.at("vanishes").get<bool>())
                return std::nullopt;
            return BottResult{j.at("degree").get<int>(),
                              Weight::parse(j.at("weight").get<std::string>(), n)};
        });

    Report report;
    report.command = "bwb";
    report.parameters = {{"k", k}, {"n", n}, {"uWeight", alpha.to_string()},
                         {"qWeight", beta.to_string()}};
    if (!r) {
        report.result = {{"vanishes", true}};
    }
    else {
        report.result = {{"vanishes", false},
                         {"degree", r->degree},
                         {"glnWeight", r->gln_weight.to_string()},
                         {"dimension", dim_schur(r->gln_weight, n)}};
    }
    return emit(opts, report, watch);
}

int run_lr(const GlobalOptions& opts, const std::string& lambda_text, const std::string& mu_text,
           const std::string& nu_text, int rank)
{
    Stopwatch watch;
    const Partition lambda = Partition::parse(lambda_text);
    const Partition mu = Partition::parse(mu_text);

    Report report;
    report.command = "lr";
    report.parameters = {{"lambda", lambda.to_string()}, {"mu", mu.to_string()}};

    if (!nu_text.empty()) {
        const Partition nu = Partition::parse(nu_text);
        report.parameters["nu"] = nu.to_string();
        report.result = {{"coefficient", lr_coefficient(lambda, mu, nu)}};
        return emit(opts, report, watch);
    }

    // Full product by default; an explicit --rank slices to GL(rank).
    const bool sliced = rank > 0;
    if (!sliced)
        rank = std::max(1, lambda.rows() + mu.rows());
    if (lambda.rows() > rank)
        throw InputError("lambda does not fit in rank " + std::to_string(rank));
    report.parameters["rank"] = sliced ? std::to_string(rank) : "unsliced";

    i64 discarded = 0;
    WeightSum sum = tensor_schur(Weight::from_partition(lambda, rank), mu, rank,
                                 opts.verbose ? &discarded : nullptr);
    nlohmann::json terms = nlohmann::json::object();
    for (const auto& [w, m] : sum.terms())
        terms[w.to_partition().to_string()] = m;
    report.result = {{"terms", terms}};
    if (opts.verbose && sliced)
        std::cerr << "discarded multiplicity beyond rank " << rank << ": " << discarded << '\n';
    return emit(opts, report, watch);
}

int run_hom(const GlobalOptions& opts, int k, int n, const std::string& from_text,
            const std::string& to_text)
{
    Stopwatch watch;
    require_context(k, n);
    const Context ctx{k, n};
    Engine engine(k, n, opts.make_cache());

    ParsedObject from = parse_object(from_text, ctx);
    ParsedObject to = parse_object(to_text, ctx);
    if (from.kind.has_value() != to.kind.has_value())
        throw InputError("mixing a plain object with a push:/pull: object");

    Report report;
    report.command = "hom";
    report.parameters = {{"k", k}, {"n", n}, {"from", from.object.name}, {"to", to.object.name}};

    HomProfile profile;
    if (from.kind) {
        report.parameters["space"] = "Tot(U)";
        report.parameters["maxSymDegree"] = opts.max_sym_degree;
        profile = engine.hom_tot(TotObject{*from.kind, from.object}, TotObject{*to.kind, to.object},
                                 opts.max_sym_degree);
    }
    else {
        report.parameters["space"] = ctx.to_string();
        profile.dims = engine.ext_gr(from.object, to.object);
    }
    report.result = {{"gradedDimension", graded_to_json(profile.dims)},
                     {"truncated", profile.truncated}};
    return emit(opts, report, watch);
}

int run_verify_collection(const GlobalOptions& opts, const std::string& command, int k, int n,
                          const std::string& which, bool misordered, bool with_matrix)
{
    Stopwatch watch;
    require_context(k, n);
    Engine engine(k, n, opts.make_cache());

    CollectionSpec spec = [&] {
        if (command == "verify-total-space")
            return total_space_collection(k, n);
        if (which == "modified")
            return modified_collection(k, n);
        if (which == "kapranov")
            return kapranov_collection(k, n);
        throw InputError("unknown collection '" + which + "'");
    }();
    if (misordered)
        spec = misordered_fixture(std::move(spec));

    Report report;
    report.command = command;
    {
        Stopwatch checks;
        report.absorb(verify(engine, spec, opts.max_sym_degree));
        report.timings_ms["checks"] = checks.elapsed_ms();
    }
    nlohmann::json items = nlohmann::json::array();
    for (const CollectionItem& item : spec.items)
        items.push_back(item.object.name);
    report.result = {{"items", items}};
    if (with_matrix) {
        Stopwatch matrix_watch;
        const auto matrix = hom_matrix(engine, spec, opts.max_sym_degree);
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : matrix) {
            nlohmann::json cells = nlohmann::json::array();
            for (const auto& cell : row) {
                if (!cell)
                    cells.push_back(nullptr);
                else
                    cells.push_back({{"dims", graded_to_json(cell->dims)},
                                     {"truncated", cell->truncated}});
            }
            rows.push_back(cells);
        }
        report.result["homMatrix"] = rows;
        report.timings_ms["homMatrix"] = matrix_watch.elapsed_ms();
    }
    return emit(opts, report, watch);
}

int run_verify_mutations(const GlobalOptions& opts, int k, int n, const std::string& lambda_text,
                         bool lambda_given)
{
    Stopwatch watch;
    require_context(k, n);
    Engine engine(k, n, opts.make_cache());

    Report report;
    report.command = "verify-mutations";
    report.parameters = {{"k", k}, {"n", n}};

    std::vector<Partition> lambdas;
    if (lambda_given)
        lambdas.push_back(Partition::parse(lambda_text));
    else
        lambdas = engine.box().members;

    for (const Partition& lambda : lambdas) {
        VerificationReport res = verify_resolution(engine, lambda);
        VerificationReport equi = verify_mutation_equivalence(engine, lambda);
        for (const CheckResult& c : res.checks)
            report.checks.push_back({c.name + "[" + lambda.to_string() + "]", c.passed, c.witness});
        for (const CheckResult& c : equi.checks)
            report.checks.push_back({c.name + "[" + lambda.to_string() + "]", c.passed, c.witness});
        report.overall =
            report.overall.value_or(true) && res.overall && equi.overall;
    }

    // Exploratory, not part of the verified statements: excluded from the
    // overall verdict by design.
    report.notes.push_back(std::string("rotation periodicity (informational): ") +
                           (rotation_periodicity_holds(engine) ? "holds" : "fails"));
    return emit(opts, report, watch);
}

int run_mutate(const GlobalOptions& opts, int k, int n, const std::string& direction, int count)
{
    Stopwatch watch;
    require_context(k, n);
    if (direction != "left" && direction != "right")
        throw InputError("direction must be left or right");
    if (count < 0)
        throw InputError("rotation count must be nonnegative");
    Engine engine(k, n, opts.make_cache());

    KCollection coll = kapranov_kcollection(engine);
    const KCollection original = coll;
    for (int s = 0; s < count; ++s)
        coll = direction == "right" ? rotate_right_k(engine, coll) : rotate_left_k(engine, coll);

    auto to_json_classes = [](const KCollection& c) {
        nlohmann::json out = nlohmann::json::array();
        for (const KClass& v : c.classes)
            out.push_back(v);
        return out;
    };
    bool matches = true;
    for (size_t i = 0; i < coll.classes.size(); ++i) {
        const KClass& a = coll.classes[i];
        KClass neg(original.classes[i].size());
        for (size_t t = 0; t < neg.size(); ++t)
            neg[t] = -original.classes[i][t];
        if (!(a == original.classes[i] || a == neg))
            matches = false;
    }

    Report report;
    report.command = "mutate";
    report.parameters = {{"k", k}, {"n", n}, {"direction", direction}, {"rotations", count}};
    report.result = {{"classesBefore", to_json_classes(original)},
                     {"classesAfter", to_json_classes(coll)},
                     {"matchesOriginalUpToSign", matches}};
    return emit(opts, report, watch);
}

}  // namespace

int run(const std::vector<std::string>& args)
{
    CLI::App app{"Grassmannian semiorthogonal decomposition checker"};
    app.require_subcommand(1);

    GlobalOptions opts;
    app.add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
    app.add_option("--max-sym-degree", opts.max_sym_degree,
                   "Bound for symmetric-power strata of pullback Homs")
        ->capture_default_str();
    app.add_option("--cache-dir", opts.cache_dir,
                   "Result cache directory (also via SOD_CACHE_DIR)");
    app.add_flag("--verbose", opts.verbose, "Extra diagnostics on stderr");

    int k = 0, n = 0, count = 1, lr_rank = 0;
    std::string u_text = "0", q_text = "0", lambda_text, mu_text, nu_text;
    std::string from_text, to_text, which = "kapranov", direction = "right";
    bool misordered = false, with_matrix = false;

    CLI::App* c_bwb = app.add_subcommand("bwb", "Cohomology of one irreducible bundle");
    c_bwb->add_option("--k", k)->required();
    c_bwb->add_option("--n", n)->required();
    c_bwb->add_option("--u-weight", u_text, "Weight of the U factor");
    c_bwb->add_option("--q-weight", q_text, "Weight of the Q factor");

    CLI::App* c_lr = app.add_subcommand("lr", "Littlewood-Richardson product or coefficient");
    c_lr->add_option("--lambda", lambda_text)->required();
    c_lr->add_option("--mu", mu_text)->required();
    c_lr->add_option("--nu", nu_text, "Report only this coefficient");
    c_lr->add_option("--rank", lr_rank, "Slice the product to GL(rank)");

    CLI::App* c_hom = app.add_subcommand("hom", "Graded Hom between two objects");
    c_hom->add_option("--k", k)->required();
    c_hom->add_option("--n", n)->required();
    c_hom->add_option("--from", from_text)->required();
    c_hom->add_option("--to", to_text)->required();

    CLI::App* c_vg = app.add_subcommand("verify-grassmannian", "Verify a collection on Gr(k, n)");
    c_vg->add_option("--k", k)->required();
    c_vg->add_option("--n", n)->required();
    c_vg->add_option("--collection", which, "kapranov or modified")->capture_default_str();
    c_vg->add_flag("--misordered-fixture", misordered, "Swap two items to force a failure");
    c_vg->add_flag("--with-hom-matrix", with_matrix, "Embed the full graded Hom matrix");

    CLI::App* c_vt = app.add_subcommand("verify-total-space", "Verify the decomposition on Tot(U)");
    c_vt->add_option("--k", k)->required();
    c_vt->add_option("--n", n)->required();
    c_vt->add_flag("--misordered-fixture", misordered, "Swap two items to force a failure");
    c_vt->add_flag("--with-hom-matrix", with_matrix, "Embed the full graded Hom matrix");

    CLI::App* c_vm = app.add_subcommand("verify-mutations",
                                        "Verify resolutions and mutation equivalences");
    c_vm->add_option("--k", k)->required();
    c_vm->add_option("--n", n)->required();
    CLI::Option* lambda_opt = c_vm->add_option("--lambda", lambda_text, "Single diagram to check");

    CLI::App* c_mut = app.add_subcommand("mutate", "Rotate the Kapranov K-collection");
    c_mut->add_option("--k", k)->required();
    c_mut->add_option("--n", n)->required();
    c_mut->add_option("--direction", direction, "left or right")->capture_default_str();
    c_mut->add_option("--count", count, "Number of rotations")->capture_default_str();

    for (CLI::App* sub : app.get_subcommands({}))
        sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (c_bwb->parsed())
            return run_bwb(opts, k, n, u_text, q_text);
        if (c_lr->parsed())
            return run_lr(opts, lambda_text, mu_text, nu_text, lr_rank);
        if (c_hom->parsed())
            return run_hom(opts, k, n, from_text, to_text);
        if (c_vg->parsed())
            return run_verify_collection(opts, "verify-grassmannian", k, n, which, misordered,
                                         with_matrix);
        if (c_vt->parsed())
            return run_verify_collection(opts, "verify-total-space", k, n, which, misordered,
                                         with_matrix);
        if (c_vm->parsed())
            return run_verify_mutations(opts, k, n, lambda_text, lambda_opt->count() > 0);
        if (c_mut->parsed())
            return run_mutate(opts, k, n, direction, count);
    }
    catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    std::cerr << "error: no subcommand\n";
    return 2;
}

}  // namespace sod::cli
