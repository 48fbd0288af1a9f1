// isogr: command-line front end for blocks, Borel-Weil-Bott and the
// verification pipelines. JSON (default) or TSV on stdout, diagnostics on
// stderr. Exit status: 0 success, 1 a verification failed, 2 usage error,
// 3 internal error.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <sstream>

#include "isogr/serialize.hpp"

using namespace isogr;

namespace {

struct Options {
    std::string format = "json";
    std::size_t threads = 1;
    std::string series;
    int n = 0;
    int k = 0;
    std::string j;
    std::string mode = "small";
    std::string weight, from, to;
    bool equivariant = false;
    std::string check = "all";
    // typeA
    int l = 0;
    std::string crossings, steps;
    bool all_curves = false;
    // sigma
    std::size_t a = 0;
    std::string kappa, sigma, tau;
    int tensor_power = -1;
    std::string w_partition;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Output {
public:
    explicit Output(bool tsv) : tsv_(tsv) {}
    bool tsv() const { return tsv_; }
    void row(std::initializer_list<std::string> cells) {
        bool first = true;
        for (const auto& c : cells) {
            if (!first) os_ << '\t';
            os_ << c;
            first = false;
        }
        os_ << '\n';
    }
    std::ostringstream& raw() { return os_; }
    void flush() { std::cout << os_.str(); }

private:
    bool tsv_;
    std::ostringstream os_;
};

GrassmannianContext context_from(const Options& o) {
    if (o.series.empty()) throw UsageError("--series is required");
    return make_context(parse_series(o.series), o.n, o.k);
}

Partition parse_partition(const std::string& text) {
    Partition p;
    if (text.empty()) return p;
    Weight w = Weight::parse(text);
    for (const auto& x : w) {
        if (!x.is_integer()) throw std::invalid_argument("partition entries must be integers: " + text);
        p.push_back(static_cast<int>(x.num()));
    }
    if (!is_partition(p)) throw std::invalid_argument("not a partition: " + text);
    return trim(p);
}

std::vector<Crossing> parse_crossings(const std::string& text) {
    std::vector<Crossing> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        Weight w = Weight::parse(item);
        if (w.size() != 2) throw std::invalid_argument("crossing must have two coordinates: " + item);
        out.push_back({w[0], w[1]});
    }
    return out;
}

std::vector<Block> blocks_for(const GrassmannianContext& ctx, const Options& o) {
    std::vector<Rational> js;
    if (o.j.empty()) js = ctx.J;
    else js.push_back(Rational::parse(o.j));
    BlockBuilder bb(ctx);
    std::vector<Block> out;
    for (const auto& j : js) {
        if (o.mode == "big") out.push_back(bb.big(j));
        else if (o.mode == "small") out.push_back(bb.small(j));
        else if (o.mode == "explicit") out.push_back(explicit_block(ctx, j));
        else throw UsageError("--mode must be big, small or explicit (use the typea command for series A)");
    }
    return out;
}

void emit_reports(Output& out, const std::vector<VerificationReport>& reps, json& result) {
    json arr = json::array();
    for (const auto& r : reps) {
        arr.push_back(to_json(r));
        if (!out.tsv()) continue;
        for (const auto& c : r.checks) {
            std::string w;
            if (c.witness) {
                for (const auto& x : c.witness->weights) w += x.str() + " ";
                for (const auto& e : c.witness->elements) w += e.str() + " ";
                if (c.witness->degree >= 0) w += "deg=" + std::to_string(c.witness->degree) + " ";
                w += c.witness->note;
            }
            out.row({r.subject + (r.experimental ? " [experimental]" : ""), c.name, c.pass ? "pass" : "fail",
                     std::to_string(c.units), std::to_string(c.failures), w});
        }
    }
    result["reports"] = arr;
    bool pass = std::all_of(reps.begin(), reps.end(), [](const VerificationReport& r) { return r.passed(); });
    result["pass"] = pass;
}

bool all_passed(const std::vector<VerificationReport>& reps) {
    return std::all_of(reps.begin(), reps.end(), [](const VerificationReport& r) { return r.passed(); });
}

// ---------------------------------------------------------------------------

int cmd_ctx(const Options& o, Output& out, json& result) {
    auto ctx = context_from(o);
    result = to_json(ctx);
    if (out.tsv())
        for (const auto& [key, v] : result.items()) out.row({key, v.is_string() ? v.get<std::string>() : v.dump()});
    return 0;
}

int cmd_blocks(const Options& o, Output& out, json& result) {
    auto ctx = context_from(o);
    auto blocks = blocks_for(ctx, o);
    json arr = json::array();
    if (out.tsv()) out.row({"j", "a", "kind", "size", "weight"});
    for (const auto& b : blocks) {
        arr.push_back(to_json(b));
        if (out.tsv())
            for (const auto& w : b.weights) out.row({b.j.str(), std::to_string(b.a), to_string(b.kind), std::to_string(b.size()), w.str()});
    }
    result = json{{"context", ctx.name()}, {"mode", o.mode}, {"blocks", arr}};
    return 0;
}

int cmd_bbw(const Options& o, Output& out, json& result) {
    auto ctx = context_from(o);
    Weight lam = Weight::parse(o.weight);
    ctx.check_rank(lam);
    GradedRepSum h = cohomology(ctx, lam);
    result = json{{"context", ctx.name()}, {"weight", to_json(lam)}, {"cohomology", to_json(h)}};
    if (out.tsv()) {
        out.row({"degree", "weight", "mult", "dim"});
        for (const auto& t : h.terms())
            out.row({std::to_string(t.degree), t.weight.str(), std::to_string(t.mult), std::to_string(g_dimension(ctx, t.weight))});
    }
    return 0;
}

int cmd_ext(const Options& o, Output& out, json& result) {
    auto ctx = context_from(o);
    Weight lam = Weight::parse(o.from), mu = Weight::parse(o.to);
    ctx.check_rank(lam);
    ctx.check_rank(mu);
    GradedRepSum e = o.equivariant ? equivariant_ext(ctx, lam, mu) : ext_groups(ctx, lam, mu);
    result = json{{"context", ctx.name()}, {"from", to_json(lam)}, {"to", to_json(mu)}, {"equivariant", o.equivariant},
                  {"ext", to_json(e)}};
    // equivariant terms are labelled by v rho - rho, so each counts its multiplicity
    std::map<int, long long> graded;
    if (o.equivariant)
        for (const auto& t : e.terms()) graded[t.degree] += t.mult;
    else
        graded = graded_dimension(ctx, e);
    json dims = json::object();
    for (const auto& [d, x] : graded) dims[std::to_string(d)] = x;
    result["graded_dimension"] = dims;
    if (out.tsv()) {
        out.row({"degree", "weight", "mult"});
        for (const auto& t : e.terms()) out.row({std::to_string(t.degree), t.weight.str(), std::to_string(t.mult)});
    }
    return 0;
}

int cmd_count(const Options& o, Output& out, json& result) {
    auto ctx = context_from(o);
    auto small = small_blocks(ctx);
    json sizes = json::array();
    long long total = 0;
    if (out.tsv()) out.row({"j", "a", "size"});
    for (const auto& b : small) {
        sizes.push_back(json{{"j", b.j.str()}, {"a", b.a}, {"size", b.size()}});
        total += static_cast<long long>(b.size());
        if (out.tsv()) out.row({b.j.str(), std::to_string(b.a), std::to_string(b.size())});
    }
    long long expected = expected_count(ctx);
    if (out.tsv()) {
        out.row({"total", "", std::to_string(total)});
        out.row({"expected", "", std::to_string(expected)});
    }
    result = json{{"context", ctx.name()}, {"sizes", sizes}, {"total", total}, {"expected", expected}, {"pass", total == expected}};
    return 0;
}

int cmd_verify(const Options& o, Output& out, json& result) {
    auto ctx = context_from(o);
    std::vector<VerificationReport> reps;
    const std::string& c = o.check;
    result = json{{"context", ctx.name()}, {"check", c}};
    auto blocks = [&] {
        Options so = o;
        so.mode = "small";
        auto bs = blocks_for(ctx, so);
        std::erase_if(bs, [](const Block& b) { return b.empty(); });
        return bs;
    };
    if (c == "all") {
        reps = verify_all(ctx);
    } else if (c == "count" || c == "counts") {
        reps.push_back(check_counts(ctx));
        long long total = 0;
        for (const auto& b : small_blocks(ctx)) total += static_cast<long long>(b.size());
        result["total"] = total;
        result["expected"] = expected_count(ctx);
    } else if (c == "blocks") {
        reps.push_back(check_blocks(ctx, small_blocks(ctx)));
    } else if (c == "invariance") {
        for (const auto& b : blocks()) reps.push_back(check_invariance(ctx, b));
    } else if (c == "compatibility") {
        for (const auto& b : blocks()) reps.push_back(check_compatibility(ctx, b));
    } else if (c == "exceptional") {
        for (const auto& b : blocks()) reps.push_back(check_block_exceptional(ctx, b));
    } else if (c == "semiorthogonality") {
        reps.push_back(check_semiorthogonality(ctx, blocks()));
    } else if (c == "path-closure") {
        for (const auto& b : blocks()) reps.push_back(check_path_closure(ctx, b));
    } else if (c == "dual-classes") {
        json arr = json::array();
        for (const auto& b : blocks()) {
            DualClasses d = dual_classes(ctx, b);
            arr.push_back(json{{"j", b.j.str()}, {"dual", to_json(d)}});
            VerificationReport r{detail::block_subject(ctx, b), "exact", false, {}};
            r.checks.push_back({"integral", d.integral, 1, d.integral ? 0u : 1u, std::nullopt});
            r.checks.push_back({"gram-unitriangular", d.unitriangular, 1, d.unitriangular ? 0u : 1u, std::nullopt});
            reps.push_back(r);
        }
        result["dual_classes"] = arr;
    } else if (c == "very-special") {
        json arr = json::array();
        for (int a = 1; a <= ctx.b; ++a) {
            auto vs = very_special_elements(ctx, a);
            arr.push_back(to_json(vs));
            if (out.tsv())
                for (const auto& [v, phi] : vs.entries) out.row({std::to_string(a), v.str(), phi.str()});
        }
        result["levels"] = arr;
        return 0;
    } else {
        throw UsageError("unknown check '" + c + "'");
    }
    if (out.tsv()) out.row({"subject", "check", "result", "units", "failures", "witness"});
    emit_reports(out, reps, result);
    return all_passed(reps) ? 0 : 1;
}

int cmd_typea(const Options& o, Output& out, json& result) {
    if (o.k < 1 || o.l < 1) throw UsageError("--k and --l must be positive");
    std::vector<std::pair<std::string, std::vector<Crossing>>> curves;
    if (o.all_curves) {
        for (const auto& w : all_curve_words(o.k, o.l)) curves.emplace_back(w, curve_from_steps(o.k, o.l, w));
    } else if (!o.steps.empty()) {
        curves.emplace_back(o.steps, curve_from_steps(o.k, o.l, o.steps));
    } else if (!o.crossings.empty()) {
        curves.emplace_back(o.crossings, parse_crossings(o.crossings));
    } else {
        throw UsageError("typea needs --crossings, --steps or --all-curves");
    }
    auto ctx = make_context(Series::A, o.k + o.l - 1, o.k);
    const long long expected = binomial(o.k + o.l, o.k);
    json arr = json::array();
    bool ok = true;
    if (out.tsv()) out.row({"curve", "index", "size", "weight"});
    for (const auto& [label, q] : curves) {
        auto blocks = typea_blocks(o.k, o.l, q);
        long long total = 0;
        json bj = json::array();
        for (const auto& b : blocks) {
            total += static_cast<long long>(b.size());
            bj.push_back(to_json(b));
            if (out.tsv())
                for (const auto& w : b.weights) out.row({label, b.j.str(), std::to_string(b.size()), w.str()});
        }
        VerificationReport semi = check_semiorthogonality(ctx, blocks);
        ok = ok && semi.passed() && total == expected;
        arr.push_back(json{{"curve", label}, {"blocks", bj}, {"total", total}, {"expected", expected},
                           {"semiorthogonality", to_json(semi)}});
        if (out.tsv()) {
            out.row({label, "total", std::to_string(total), "expected " + std::to_string(expected)});
            out.row({label, "semiorthogonality", semi.passed() ? "pass" : "fail", ""});
        }
    }
    result = json{{"grassmannian", "Gr(" + std::to_string(o.k) + "," + std::to_string(o.k + o.l) + ")"},
                  {"experimental", true}, {"curves", arr}, {"pass", ok}};
    return ok ? 0 : 1;
}

int cmd_sigma(const Options& o, Output& out, json& result) {
    if (o.n < 1) throw UsageError("--n must be positive");
    Partition kappa = parse_partition(o.kappa), sigma = parse_partition(o.sigma), tau = parse_partition(o.tau);
    std::vector<VerificationReport> reps;
    if (!o.w_partition.empty()) {
        Partition w = parse_partition(o.w_partition);
        reps.push_back(check_sigma_identity(o.n, o.a, kappa, sigma, tau, {{w, 1}}, partition_str(w)));
    } else {
        if (o.tensor_power < 0) throw UsageError("sigma needs --N or --W");
        reps.push_back(check_sigma_identity(o.n, o.a, kappa, sigma, tau, o.tensor_power));
    }
    if (out.tsv()) out.row({"subject", "check", "result", "units", "failures", "witness"});
    emit_reports(out, reps, result);
    return all_passed(reps) ? 0 : 1;
}

void add_context_options(CLI::App* sub, Options& o) {
    sub->add_option("--series", o.series, "root system series A, B, C or D")->required();
    sub->add_option("--n", o.n, "rank")->required();
    sub->add_option("--k", o.k, "marked node (1 based)")->required();
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Exceptional blocks on isotropic Grassmannians"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "tsv"}));
    app.add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1, 256));

    auto* ctx = app.add_subcommand("ctx", "context data of G/P");
    add_context_options(ctx, o);

    auto* blocks = app.add_subcommand("blocks", "block weights");
    add_context_options(blocks, o);
    blocks->add_option("--j", o.j, "single index j (default: all)");
    blocks->add_option("--mode", o.mode, "big, small or explicit")->check(CLI::IsMember({"big", "small", "explicit"}));

    auto* bbw = app.add_subcommand("bbw", "cohomology of U^lambda");
    add_context_options(bbw, o);
    bbw->add_option("--weight", o.weight, "comma separated rationals")->required()->allow_extra_args(false);

    auto* ext = app.add_subcommand("ext", "Ext groups between U^from and U^to");
    add_context_options(ext, o);
    ext->add_option("--from", o.from)->required();
    ext->add_option("--to", o.to)->required();
    ext->add_flag("--equivariant", o.equivariant, "G-equivariant Ext instead");

    auto* verify = app.add_subcommand("verify", "run verification pipelines");
    verify->add_option("check", o.check,
                       "all, count, blocks, invariance, compatibility, exceptional, semiorthogonality, path-closure, "
                       "dual-classes, very-special");
    add_context_options(verify, o);
    verify->add_option("--j", o.j, "restrict per-block checks to one index");

    auto* count = app.add_subcommand("count", "block sizes and total");
    add_context_options(count, o);

    auto* typea = app.add_subcommand("typea", "experimental curve collections on Gr(k, k+l)");
    typea->add_option("--k", o.k)->required();
    typea->add_option("--l", o.l)->required();
    typea->add_option("--crossings", o.crossings, "x,y;x,y;... from (k,l) to (0,0)");
    typea->add_option("--steps", o.steps, "curve word over L, D, B");
    typea->add_flag("--all-curves", o.all_curves, "every curve word");

    auto* sigma = app.add_subcommand("sigma", "GL_n projector identity");
    sigma->add_option("--n", o.n)->required();
    sigma->add_option("--a", o.a)->required();
    sigma->add_option("--kappa", o.kappa);
    sigma->add_option("--sigma", o.sigma);
    sigma->add_option("--tau", o.tau);
    sigma->add_option("--N", o.tensor_power, "W = V^{(x) N}");
    sigma->add_option("--W", o.w_partition, "W = V^partition instead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    worker_count() = o.threads;

    Output out(o.format == "tsv");
    json result;
    int rc = 0;
    const std::string name = app.get_subcommands().front()->get_name();
    try {
        if (name == "ctx") rc = cmd_ctx(o, out, result);
        else if (name == "blocks") rc = cmd_blocks(o, out, result);
        else if (name == "bbw") rc = cmd_bbw(o, out, result);
        else if (name == "ext") rc = cmd_ext(o, out, result);
        else if (name == "verify") rc = cmd_verify(o, out, result);
        else if (name == "count") rc = cmd_count(o, out, result);
        else if (name == "typea") rc = cmd_typea(o, out, result);
        else if (name == "sigma") rc = cmd_sigma(o, out, result);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    if (out.tsv()) out.flush();
    else std::cout << envelope(name, result).dump(2) << "\n";
    return rc;
}
