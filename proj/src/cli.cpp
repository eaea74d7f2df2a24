#include "fusionwitt/cli.hpp"

#include "fusionwitt/classifier.hpp"
#include "fusionwitt/fp_dims.hpp"
#include "fusionwitt/io.hpp"
#include "fusionwitt/number_theory.hpp"
#include "fusionwitt/witt.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <ranges>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace fusionwitt::cli {

namespace {

class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

template <typename Range, typename F>
std::string join(Range const& range, std::string const& sep, F&& f)
{
    std::string out;
    bool first = true;
    for (auto const& x : range) {
        if (!first)
            out += sep;
        first = false;
        out += f(x);
    }
    return out;
}

std::string decimal(long double x)
{
    std::ostringstream os;
    os << std::fixed << std::setprecision(15) << static_cast<double>(x);
    return os.str();
}

std::string scientific(long double x)
{
    std::ostringstream os;
    os << std::scientific << std::setprecision(3) << static_cast<double>(x);
    return os.str();
}

std::string boolean(bool b)
{
    return b ? "true" : "false";
}

std::string numbers(std::vector<std::uint64_t> const& v)
{
    return join(v, ",", [](auto x) { return std::to_string(x); });
}

std::uint64_t parse_count(std::string const& token, char const* what)
{
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value == 0)
        throw UsageError(std::string(what) + " must be a positive integer, got '" + token + "'");
    return value;
}

void require_inputs(Command const& c, std::size_t min, std::size_t max)
{
    if (c.inputs.size() < min || c.inputs.size() > max) {
        std::string expect = min == max ? std::to_string(min) : std::to_string(min) + " or more";
        throw UsageError(c.verb + " expects " + expect + " argument" + (max == 1 ? "" : "s") + ", got " +
                         std::to_string(c.inputs.size()));
    }
}

std::uint64_t env_or(char const* name, std::uint64_t fallback)
{
    if (char const* v = std::getenv(name)) {
        std::uint64_t value = 0;
        std::string_view s(v);
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec == std::errc{} && ptr == s.data() + s.size() && value > 0)
            return value;
    }
    return fallback;
}

std::string simple_set(FusionRing const& ring, std::vector<int> const& members)
{
    return join(members, ",", [&](int i) { return ring.label(i); });
}

std::string multiplicities(FusionRing const& ring, std::map<int, std::int64_t> const& m)
{
    return join(m, ",", [&](auto const& kv) { return ring.label(kv.first) + ":" + std::to_string(kv.second); });
}

void add_verdict(Report& report, DimensionVerdict const& v)
{
    std::ostringstream body;
    body << "kind: " << to_string(v.kind) << '\n';
    report.set("verdict.kind", to_string(v.kind));
    if (v.simple_dim_prime) {
        body << "simple dimensions: powers of p = " << *v.simple_dim_prime << '\n';
        report.set("verdict.prime", std::to_string(*v.simple_dim_prime));
    }
    if (v.pointed) {
        body << "pointed: yes\n";
        report.set("verdict.pointed", "true");
    }
    if (v.witness) {
        auto const& w = *v.witness;
        body << "witness: " << to_string(w) << '\n';
        report.set("verdict.witness", to_string(w));
        report.set("verdict.witness.p", w.p ? std::to_string(*w.p) : "none");
        report.set("verdict.witness.a", std::to_string(w.a));
        report.set("verdict.witness.q", w.q ? std::to_string(*w.q) : "none");
        report.set("verdict.witness.b", std::to_string(w.b));
        report.set("verdict.witness.c", std::to_string(w.c));
    }
    for (std::size_t i = 0; i < v.notes.size(); ++i) {
        body << "note: " << v.notes[i] << '\n';
        report.set("verdict.note." + std::to_string(i), v.notes[i]);
    }
    report.section("Verdict", body.str());
}

std::string form_text(MetricGroup const& mg)
{
    std::ostringstream os;
    os << "orders (" << numbers(mg.orders()) << "), q (" << join(mg.form().diag, ", ", format_fraction) << ")";
    if (!mg.form().cross.empty())
        os << ", b {" << join(mg.form().cross, ", ", [](auto const& kv) {
            return std::to_string(kv.first.first + 1) + std::to_string(kv.first.second + 1) + ":" + format_fraction(kv.second);
        }) << "}";
    return os.str();
}

void set_form(Report& report, std::string const& prefix, MetricGroup const& mg)
{
    report.set(prefix + ".orders", numbers(mg.orders()));
    report.set(prefix + ".size", std::to_string(mg.size()));
    report.set(prefix + ".q", join(mg.form().diag, ",", format_fraction));
    report.set(prefix + ".b", join(mg.form().cross, ",", [](auto const& kv) {
                   return std::to_string(kv.first.first + 1) + ":" + std::to_string(kv.first.second + 1) + ":" +
                          format_fraction(kv.second);
               }));
}

std::string argument_text(GaussSum const& g)
{
    if (g.eighths)
        return std::to_string(*g.eighths) + "/8";
    return g.magnitude_squared == 0 ? "undefined" : "not an eighth root";
}

bool looks_like_ring(std::string const& path)
{
    if (path.ends_with(".fr"))
        return true;
    if (path.ends_with(".mg"))
        return false;
    auto const text = read_file(path);
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        std::istringstream words(line.substr(0, line.find('#')));
        std::string w;
        if (words >> w)
            return w == "rank";
    }
    return false;
}

// -- verbs ------------------------------------------------------------------

Report do_validate(Command const& c, int& status)
{
    require_inputs(c, 1, 1);
    Report r;
    auto const& path = c.inputs[0];
    std::ostringstream body;
    if (looks_like_ring(path)) {
        auto const raw = parse_ring_text(read_file(path));
        auto const vs = validate_ring(raw);
        r.set("kind", "fusion-ring");
        r.set("valid", boolean(vs.empty()));
        r.set("violations", std::to_string(vs.size()));
        body << "fusion ring of rank " << raw.rank << ": " << (vs.empty() ? "valid" : "INVALID") << '\n';
        for (std::size_t i = 0; i < vs.size(); ++i) {
            body << "  " << to_string(vs[i].kind) << ": " << vs[i].message << '\n';
            r.set("violation." + std::to_string(i),
                  to_string(vs[i].kind) + ":" + join(vs[i].indices, ",", [](int x) { return std::to_string(x); }));
        }
        status = vs.empty() ? exit_ok : exit_validation;
    } else {
        auto const raw = parse_metric_text(read_file(path));
        auto const v = validate_metric(raw, c.options.element_cap);
        r.set("kind", "metric-group");
        r.set("valid", boolean(v.valid()));
        r.set("violations", std::to_string(v.violations.size()));
        body << "metric group: " << (v.valid() ? "valid" : "INVALID") << '\n';
        for (std::size_t i = 0; i < v.violations.size(); ++i) {
            body << "  " << v.violations[i].kind << ": " << v.violations[i].message << '\n';
            r.set("violation." + std::to_string(i),
                  v.violations[i].kind + ":" + join(v.violations[i].indices, ",", [](int x) { return std::to_string(x); }));
        }
        if (v.valid()) {
            body << "nondegenerate: " << boolean(v.nondegenerate) << '\n';
            r.set("nondegenerate", boolean(v.nondegenerate));
        }
        status = v.valid() ? exit_ok : exit_validation;
    }
    r.section("Validation", body.str());
    return r;
}

Report do_analyze(Command const& c)
{
    require_inputs(c, 1, 1);
    auto const ring = parse_ring_file(c.inputs[0], c.options.force);
    int const n = ring.rank();
    Report r;

    r.set("rank", std::to_string(n));
    r.set("labels", join(ring.labels(), ",", [](auto const& s) { return s; }));
    r.section("Ring", "rank " + std::to_string(n) + "; simples " + join(ring.labels(), ", ", [](auto const& s) { return s; }) + "\n");

    auto const fp = fp_dim_data(ring, c.options.tolerance);
    {
        std::ostringstream body;
        for (int i = 0; i < n; ++i) {
            auto const& l = ring.label(i);
            body << l << ": " << decimal(fp.dims[i]);
            r.set("fpdim." + l, decimal(fp.dims[i]));
            if (fp.exact_square[i]) {
                body << "  (FPdim^2 = " << *fp.exact_square[i] << ", exact)";
                r.set("fpdim_sq." + l, std::to_string(*fp.exact_square[i]));
            } else {
                r.set("fpdim_sq." + l, "none");
            }
            body << '\n';
        }
        body << "total: " << decimal(fp.total);
        r.set("total", decimal(fp.total));
        if (fp.total_exact) {
            body << " (exact " << *fp.total_exact << ")";
            r.set("total_exact", std::to_string(*fp.total_exact));
        } else {
            r.set("total_exact", "none");
        }
        body << "\nerror bound: " << scientific(fp.error_bound) << '\n';
        body << "integral: " << boolean(fp.integral) << ", weakly integral: " << boolean(fp.weakly_integral) << '\n';
        r.set("error_bound", scientific(fp.error_bound));
        r.set("integral", boolean(fp.integral));
        r.set("weakly_integral", boolean(fp.weakly_integral));
        r.section("Frobenius-Perron dimensions", body.str());
    }

    auto const inv = invertibles(ring);
    {
        auto const name = group_name(inv.invariant_factors);
        r.set("invertibles", simple_set(ring, inv.members));
        r.set("invertibles.order", std::to_string(inv.members.size()));
        r.set("invertibles.group", name);
        r.section("Invertible objects", "{" + simple_set(ring, inv.members) + "}, order " +
                                            std::to_string(inv.members.size()) + ", group " + name + "\n");
    }

    {
        std::ostringstream body;
        for (int x = 0; x < n; ++x) {
            auto const& l = ring.label(x);
            auto const stab = stabilizer(ring, x);
            auto const sq = tensor_square_check(ring, x);
            std::map<int, std::int64_t> present;
            for (auto const& [g, m] : sq.invertible)
                if (m != 0)
                    present.emplace(g, m);
            body << l << ": G[x] = {" << simple_set(ring, stab) << "} (order " << stab.size() << "); x(x)x* = {"
                 << multiplicities(ring, present) << "} + {" << multiplicities(ring, sq.non_invertible) << "}";
            if (fp.exact_square[x])
                body << "; |G[x]| divides " << *fp.exact_square[x] << ": "
                     << boolean(*fp.exact_square[x] % stab.size() == 0);
            body << '\n';
            r.set("stabilizer." + l, simple_set(ring, stab));
            r.set("stabilizer_order." + l, std::to_string(stab.size()));
            r.set("xx.invertible." + l, multiplicities(ring, present));
            r.set("xx.other." + l, multiplicities(ring, sq.non_invertible));
        }
        body << "invertible part of every x(x)x* matches its stabilizer\n";
        r.set("xx.consistent", "true");
        r.section("Stabilizers and x(x)x*", body.str());
    }

    {
        auto const ad = adjoint_subring(ring);
        auto const grading = universal_grading(ring);
        std::ostringstream body;
        body << "adjoint subring: {" << simple_set(ring, ad.members) << "}\n";
        body << "universal grading group: " << grading.group_name << " (order " << grading.components.size() << ")\n";
        for (std::size_t b = 0; b < grading.components.size(); ++b)
            body << "  component " << b << ": {" << simple_set(ring, grading.components[b]) << "}\n";
        r.set("adjoint", simple_set(ring, ad.members));
        r.set("grading.group", grading.group_name);
        r.set("grading.order", std::to_string(grading.components.size()));
        r.set("grading.invariant_factors", numbers(grading.invariant_factors));
        r.set("grading.components", join(grading.components, "|", [&](auto const& comp) { return simple_set(ring, comp); }));
        r.section("Adjoint subring and universal grading", body.str());
    }

    {
        auto const nil = nilpotency(ring);
        std::ostringstream body;
        body << "nilpotent: " << boolean(nil.nilpotent) << '\n';
        body << "adjoint tower: "
             << join(nil.tower, " > ", [&](Subring const& s) { return "{" + simple_set(ring, s.members) + "}"; }) << '\n';
        r.set("nilpotent", boolean(nil.nilpotent));
        r.set("nilpotency.tower_length", std::to_string(nil.tower.size()));
        r.set("nilpotency.tower", join(nil.tower, "|", [&](Subring const& s) { return simple_set(ring, s.members); }));
        r.section("Nilpotency", body.str());
    }

    add_verdict(r, verdict_ring(ring, c.options.tolerance));
    return r;
}

MetricGroup load_nondegenerate(std::string const& path, Options const& o)
{
    auto mg = parse_metric_file(path, o.element_cap);
    if (!mg.nondegenerate())
        throw InvalidMetric({{"degenerate", {}, "the form on " + path + " is degenerate"}});
    return mg;
}

Report do_witt_class(Command const& c)
{
    require_inputs(c, 1, 1);
    auto const& o = c.options;
    auto const mg = load_nondegenerate(c.inputs[0], o);
    Report r;
    set_form(r, "group", mg);
    r.set("nondegenerate", boolean(mg.nondegenerate()));
    r.section("Metric group", form_text(mg) + "\norder " + std::to_string(mg.size()) + ", nondegenerate\n");

    auto const g = gauss_sum(mg, o.element_cap);
    r.set("gauss.magnitude_sq", std::to_string(g.magnitude_squared));
    r.set("gauss.argument", argument_text(g));
    r.section("Gauss sum", "|G|^2 = " + std::to_string(g.magnitude_squared) + ", argument 2pi * " + argument_text(g) +
                               " (exact)\n");

    auto const rep = pointed_witt_class_report(mg, o.element_cap);
    {
        std::ostringstream body;
        for (std::size_t i = 0; i < rep.trace.size(); ++i) {
            auto const& s = rep.trace[i];
            auto const coords = join(s.isotropic, ",", [](auto x) { return std::to_string(x); });
            body << "p=" << s.prime << ": order " << s.order_before << " --(" << coords << ")--> " << s.order_after << '\n';
            r.set("reduction." + std::to_string(i),
                  std::to_string(s.prime) + ":" + std::to_string(s.order_before) + ":" + coords + ":" +
                      std::to_string(s.order_after));
        }
        if (rep.trace.empty())
            body << "already anisotropic\n";
        r.set("reduction.steps", std::to_string(rep.trace.size()));
        r.section("Isotropic reduction", body.str());
    }
    {
        std::ostringstream body;
        if (rep.cls.is_identity())
            body << "trivial class\n";
        for (auto const& [p, part] : rep.cls.parts) {
            body << "p=" << p << ": " << form_text(part) << '\n';
            set_form(r, "class." + std::to_string(p), part);
        }
        r.set("class.identity", boolean(rep.cls.is_identity()));
        r.set("class.primes", join(rep.cls.parts, ",", [](auto const& kv) { return std::to_string(kv.first); }));
        r.section("Witt class", body.str());
    }
    {
        std::ostringstream body;
        for (auto const& [p, gs] : rep.gauss) {
            body << "p=" << p << ": Sylow part |G|^2 = " << gs.first.magnitude_squared << " arg " << argument_text(gs.first)
                 << "; representative |G|^2 = " << gs.second.magnitude_squared << " arg " << argument_text(gs.second)
                 << "; preserved\n";
            auto const key = "certificate." + std::to_string(p);
            r.set(key + ".sylow_magnitude_sq", std::to_string(gs.first.magnitude_squared));
            r.set(key + ".sylow_argument", argument_text(gs.first));
            r.set(key + ".rep_magnitude_sq", std::to_string(gs.second.magnitude_squared));
            r.set(key + ".rep_argument", argument_text(gs.second));
            r.set(key + ".preserved", "true");
        }
        r.section("Gauss-sum certificates", body.str());
    }
    return r;
}

Report do_witt_order(Command const& c)
{
    require_inputs(c, 1, 1);
    auto const& o = c.options;
    auto const mg = load_nondegenerate(c.inputs[0], o);
    auto const cls = pointed_witt_class(mg, o.element_cap);
    auto const order = class_order(cls, o.order_cap, o.element_cap);
    Report r;
    set_form(r, "group", mg);
    r.set("order_cap", std::to_string(o.order_cap));
    std::string const value = order ? std::to_string(*order) : "exceeds-cap";
    r.set("class.order", value);
    r.section("Witt class order", form_text(mg) + "\norder of the class: " +
                                      (order ? value : "exceeds cap " + std::to_string(o.order_cap)) + "\n");
    return r;
}

Report do_witt_subgroup(Command const& c)
{
    if (c.inputs.empty())
        throw UsageError("witt-subgroup expects at least one metric-group file");
    auto const& o = c.options;
    std::vector<PointedWittClass> gens;
    std::ostringstream gen_body;
    for (auto const& path : c.inputs) {
        auto const mg = load_nondegenerate(path, o);
        gens.push_back(pointed_witt_class(mg, o.element_cap));
        gen_body << path << ": " << form_text(mg) << '\n';
    }
    auto const sub = generated_subgroup(gens, o.closure_cap, o.element_cap);
    Report r;
    r.set("generators", std::to_string(gens.size()));
    r.section("Generators", gen_body.str());
    r.set("subgroup.order", std::to_string(sub.order()));
    r.set("subgroup.invariant_factors", numbers(sub.invariant_factors));
    r.set("subgroup.exponent", std::to_string(sub.exponent()));
    r.set("subgroup.group", group_name(sub.invariant_factors));
    std::ostringstream body;
    body << "order " << sub.order() << ", exponent " << sub.exponent() << ", group " << group_name(sub.invariant_factors)
         << " (invariant factors " << numbers(sub.invariant_factors) << ")\n";
    for (std::size_t i = 0; i < sub.elements.size(); ++i) {
        auto const& e = sub.elements[i];
        std::string const desc =
            e.is_identity() ? "identity"
                            : join(e.parts, " + ", [](auto const& kv) { return "p" + std::to_string(kv.first) + "[" + form_text(kv.second) + "]"; });
        body << "  [" << i << "] " << desc << '\n';
        r.set("subgroup.element." + std::to_string(i), desc);
    }
    body << "multiplication table:\n";
    for (std::size_t i = 0; i < sub.table.size(); ++i) {
        auto const row = join(sub.table[i], " ", [](auto x) { return std::to_string(x); });
        body << "  " << row << '\n';
        r.set("subgroup.table." + std::to_string(i), join(sub.table[i], ",", [](auto x) { return std::to_string(x); }));
    }
    r.section("Generated subgroup", body.str());
    return r;
}

Report do_classify(Command const& c)
{
    require_inputs(c, 1, 1);
    auto const n = parse_count(c.inputs[0], "n");
    Report r;
    r.set("n", std::to_string(n));
    r.section("Dimension", std::to_string(n) + "\n");
    add_verdict(r, verdict_dimension(n));
    return r;
}

Report do_scan(Command const& c)
{
    require_inputs(c, 1, 1);
    auto const limit = parse_count(c.inputs[0], "limit");
    bool const odd = c.options.odd;
    auto const found = scan_exceptions(limit, odd, c.options.scan_cap);
    auto const claim = claimed_exceptions(limit, odd);
    Report r;
    r.set("scan.limit", std::to_string(limit));
    r.set("scan.odd_only", boolean(odd));
    r.set("exceptions", numbers(found));
    r.set("exceptions.count", std::to_string(found.size()));
    std::ostringstream body;
    body << (odd ? "odd " : "") << "n < " << limit << " with no p^a q^b c factorization: {" << numbers(found) << "}\n";
    if (claim) {
        std::vector<std::uint64_t> divergent;
        for (auto n : found)
            if (std::find(claim->begin(), claim->end(), n) == claim->end())
                divergent.push_back(n);
        std::vector<std::uint64_t> missing;
        for (auto n : *claim)
            if (std::find(found.begin(), found.end(), n) == found.end())
                missing.push_back(n);
        bool const matches = divergent.empty() && missing.empty();
        body << "claimed exceptions: {" << numbers(*claim) << "}\n";
        if (matches)
            body << "enumeration agrees with the claim\n";
        else
            body << "DIVERGENCE: enumeration finds {" << numbers(divergent) << "} beyond the claim"
                 << (missing.empty() ? "" : ", and not {" + numbers(missing) + "}") << '\n';
        r.set("claimed_exceptions", numbers(*claim));
        r.set("matches_claim", boolean(matches));
        r.set("divergent", numbers(divergent));
        r.set("claim_missing", numbers(missing));
    } else {
        body << "no published exceptional set covers this range\n";
        r.set("claimed_exceptions", "n/a");
    }
    r.section("Factorization scan", body.str());
    return r;
}

} // namespace

Options resolve_caps(Options o)
{
    if (o.element_cap == 0)
        o.element_cap = env_or("FUSIONWITT_ELEMENT_CAP", default_element_cap);
    if (o.order_cap == 0)
        o.order_cap = static_cast<int>(env_or("FUSIONWITT_ORDER_CAP", default_order_cap));
    if (o.closure_cap == 0)
        o.closure_cap = env_or("FUSIONWITT_CLOSURE_CAP", default_closure_cap);
    if (o.scan_cap == 0)
        o.scan_cap = env_or("FUSIONWITT_SCAN_CAP", default_scan_cap);
    return o;
}

RunResult run(Command const& command)
{
    RunResult result;
    Command c = command;
    c.options = resolve_caps(c.options);
    try {
        if (c.options.format != "text" && c.options.format != "machine")
            throw UsageError("--format must be text or machine");
        if (c.verb == "validate")
            result.report = do_validate(c, result.status);
        else if (c.verb == "analyze")
            result.report = do_analyze(c);
        else if (c.verb == "witt-class")
            result.report = do_witt_class(c);
        else if (c.verb == "witt-order")
            result.report = do_witt_order(c);
        else if (c.verb == "witt-subgroup")
            result.report = do_witt_subgroup(c);
        else if (c.verb == "classify")
            result.report = do_classify(c);
        else if (c.verb == "scan")
            result.report = do_scan(c);
        else
            throw UsageError("unknown command '" + c.verb + "'");
    } catch (UsageError const& e) {
        result.status = exit_usage;
        result.error = e.what();
    } catch (InvalidRing const& e) {
        result.status = exit_validation;
        std::ostringstream os;
        os << e.what();
        for (auto const& v : e.violations() | std::views::drop(1))
            os << "\n  " << to_string(v.kind) << ": " << v.message;
        result.error = os.str();
    } catch (InvalidMetric const& e) {
        result.status = exit_validation;
        std::ostringstream os;
        os << e.what();
        for (auto const& v : e.violations() | std::views::drop(1))
            os << "\n  " << v.kind << ": " << v.message;
        result.error = os.str();
    } catch (std::exception const& e) {
        result.status = exit_validation;
        result.error = e.what();
    }
    return result;
}

int main_entry(int argc, char const* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Fusion-ring invariants, Witt classes of metric groups, and dimension criteria", "fusionwitt"};
    app.require_subcommand(1);
    Command cmd;
    auto& o = cmd.options;
    app.add_option("--format", o.format, "Output format: text or machine")->check(CLI::IsMember({"text", "machine"}));
    app.add_option("--tolerance", o.tolerance, "Numeric tolerance for Perron eigenvalues")->check(CLI::PositiveNumber);
    app.add_flag("--force", o.force, "Load fusion rings that fail validation");
    app.add_option("--element-cap", o.element_cap, "Maximum group order for exhaustive searches");
    app.add_option("--order-cap", o.order_cap, "Maximum Witt class order to search");
    app.add_option("--closure-cap", o.closure_cap, "Maximum generated subgroup size");
    app.add_option("--scan-cap", o.scan_cap, "Maximum scan limit");

    struct Verb
    {
        char const* name;
        char const* help;
        char const* arg;
        bool many;
    };
    Verb const verbs[] = {
        {"validate", "Validate a fusion-ring (.fr) or metric-group (.mg) file", "file", false},
        {"analyze", "Invariants and verdict for a fusion ring", "ring", false},
        {"witt-class", "Anisotropic Witt class of a metric group", "metric", false},
        {"witt-order", "Order of the Witt class of a metric group", "metric", false},
        {"witt-subgroup", "Subgroup generated by Witt classes", "metrics", true},
        {"classify", "Verdict for a Frobenius-Perron dimension", "n", false},
        {"scan", "Dimensions below a limit without a p^a q^b c factorization", "limit", false},
    };
    for (auto const& v : verbs) {
        auto* sub = app.add_subcommand(v.name, v.help);
        sub->fallthrough();
        auto* opt = sub->add_option(v.arg, cmd.inputs, v.arg)->required();
        if (!v.many)
            opt->expected(1);
        if (std::string(v.name) == "scan")
            sub->add_flag("--odd", o.odd, "Restrict to odd dimensions");
        sub->callback([&cmd, name = std::string(v.name)] { cmd.verb = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const&) {
        out << app.help();
        return exit_ok;
    } catch (CLI::ParseError const& e) {
        err << "usage error: " << e.what() << '\n' << app.help();
        return exit_usage;
    }

    auto const result = run(cmd);
    if (result.status != exit_ok && !result.error.empty())
        err << "error: " << result.error << '\n';
    if (result.status != exit_usage && !result.report.machine().empty())
        out << (o.format == "machine" ? result.report.machine_text() : result.report.text());
    return result.status;
}

} // namespace fusionwitt::cli
