#include "crideal_cli/commands.hpp"

#include "crideal_cli/json_codec.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#ifndef CRIDEAL_VERSION
#define CRIDEAL_VERSION "0.0.0"
#endif

namespace crideal::cli {

namespace {

struct Options {
    std::string monoid_file;
    std::string preset;
    std::string ring;
    bool timing = false;

    std::string word;
    std::string check_name;
    std::string subject = "P";
    std::string family;
    std::string p, t, u, x, s, s0, s1, q;
    std::string combination;
    long bound = -1;
    std::size_t max_family = 3;
    bool core_only = false;

    std::string certificate_file;
    std::string golden_dir = "tests/golden";
    bool regenerate = false;
};

struct Result {
    json body;
    int code = kAnswered;
};

int code_of(const std::optional<bool>& answer) { return answer ? kAnswered : kInconclusive; }

long bound_or(const Options& o, long fallback) { return o.bound >= 0 ? o.bound : fallback; }

template <MonoidBackend B>
typename B::Element required_element(const B& b, const std::string& value, const char* flag) {
    if (value.empty()) throw std::invalid_argument(std::string("--") + flag + " is required for this check");
    return parse_element(b, value);
}

template <MonoidBackend B>
json subset_members(const B& b, const std::vector<typename B::Ideal>& family, std::uint64_t mask) {
    json j = json::array();
    for (std::size_t k = 0; k < family.size(); ++k)
        if (mask >> k & 1) j.push_back(b.describe(family[k]));
    return j;
}

template <MonoidBackend B>
json decomposition_json(const B& b, const Decomposition<B>& d, bool nonzero_only) {
    json rows = json::array();
    for (const auto& t : d.subsets) {
        if (nonzero_only && !t.nonzero) continue;
        json r{{"subset", subset_members(b, d.family, t.mask)}, {"nonzero", t.nonzero}, {"lambda", rat_string(t.lambda)}};
        if (t.witness) r["witness"] = b.format(*t.witness);
        rows.push_back(std::move(r));
    }
    return rows;
}

template <MonoidBackend B>
json boundary_json(const B& b, const BoundaryAnalysis<B>& a) {
    json terms = json::array();
    for (const auto& t : a.terms)
        terms.push_back({{"subset", subset_members(b, a.family, t.subset.mask)},
                         {"meet", b.describe(t.subset.meet)},
                         {"lambda", rat_string(t.subset.lambda)},
                         {"foundation", t.foundation},
                         {"certificate", to_json(b, t.certificate)}});
    json j{{"in_ideal", a.in_ideal}, {"norm", rat_string(a.norm)}, {"terms", terms}};
    if (a.failing) j["failing_term"] = *a.failing;
    return j;
}

// Elements x with xP meeting qP for every enumerated q.
template <MonoidBackend B>
bool is_core_element(const B& b, const typename B::Element& x, long bound) {
    auto xp = principal_of(b, x);
    for (const auto& q : b.enumerate_elements(bound))
        if (b.is_empty(b.intersect(xp, principal_of(b, q)))) return false;
    return true;
}

template <MonoidBackend B>
Result check_topfree_pair(const B& b, const Options& o) {
    auto p = required_element(b, o.p, "p");
    auto t = required_element(b, o.t, "t");
    if (!o.core_only) {
        auto out = topfree_pair_witness(b, p, t, bound_or(o, 4));
        return {outcome_json(b, out), code_of(out.answer)};
    }
    const long bound = bound_or(o, 4);
    for (const auto& x : {p, t})
        if (!is_core_element(b, x, bound)) throw std::invalid_argument(b.format(x) + " is not a core element");
    Outcome<B> out = inconclusive<B>("no core separating element up to " + std::to_string(bound));
    for (const auto& s : b.enumerate_elements(bound)) {
        if (!is_core_element(b, s, bound)) continue;
        if (b.is_empty(b.intersect(principal_of(b, b.multiply(p, s)), principal_of(b, b.multiply(t, s))))) {
            out = detail::disjointness_outcome<B>(p, t, s);
            break;
        }
    }
    json j = outcome_json(b, out);
    j["core_only"] = true;
    j["remark"] = "search restricted to core elements; no freeness verdict is drawn from it";
    return {j, code_of(out.answer)};
}

template <MonoidBackend B>
Result run_check(const B& b, const Options& o) {
    const std::string& name = o.check_name;
    if (name == "cover") {
        auto s = parse_ideal(b, o.subject);
        auto fam = parse_family(b, o.family);
        auto out = cover_decide(b, s, fam);
        json j = outcome_json(b, out);
        if (fam.size() <= 12) {
            auto d = t4_defect(b, s, fam);
            j["t4_defect"] = diagonal_json(b, d);
            j["t4_defect_zero"] = is_zero(b, d);
        }
        return {j, kAnswered};
    }
    if (name == "foundation") {
        auto s = parse_ideal(b, o.subject);
        auto fam = parse_family(b, o.family);
        auto out = is_foundation_set(b, s, fam);
        json j = outcome_json(b, out);
        auto outside = point_outside(b, s, fam);
        j["proper"] = outside.has_value();
        if (outside) j["outside_point"] = b.format(*outside);
        return {j, kAnswered};
    }
    if (name == "boundary-member" || name == "boundary-norm") {
        auto a = parse_combination(b, o.combination);
        auto analysis = boundary_analysis(b, a);
        json j = boundary_json(b, analysis);
        j["element"] = diagonal_json(b, a);
        j["answer"] = name == "boundary-member" ? json(analysis.in_ideal) : json(rat_string(analysis.norm));
        return {j, kAnswered};
    }
    if (name == "sup-norm" || name == "decompose") {
        auto a = parse_combination(b, o.combination);
        auto d = decompose(b, a);
        Rat norm = 0;
        for (const auto& t : d.subsets)
            if (t.nonzero && abs(t.lambda) > norm) norm = abs(t.lambda);
        json j{{"element", diagonal_json(b, a)},
               {"subsets", decomposition_json(b, d, name == "sup-norm")},
               {"answer", rat_string(norm)}};
        return {j, kAnswered};
    }
    if (name == "evaluate") {
        auto a = parse_combination(b, o.combination);
        auto p = required_element(b, o.p, "p");
        return {json{{"element", diagonal_json(b, a)}, {"point", b.format(p)}, {"answer", rat_string(evaluate(b, a, p))}},
                kAnswered};
    }
    if (name == "t4-defect") {
        auto s = parse_ideal(b, o.subject);
        auto fam = parse_family(b, o.family);
        auto d = t4_defect(b, s, fam);
        return {json{{"element", diagonal_json(b, d)},
                     {"zero", is_zero(b, d)},
                     {"sup_norm", rat_string(sup_norm(b, d))},
                     {"answer", is_zero(b, d)}},
                kAnswered};
    }
    if (name == "jointly-proper") {
        auto fam = parse_family(b, o.family);
        return {json{{"answer", b.format(jointly_proper_witness(b, fam))}}, kAnswered};
    }
    if (name == "units-fix") {
        auto g = required_element(b, o.u, "u");
        auto p = required_element(b, o.p, "p");
        return {json{{"answer", units_fix_ideal(b, g, p)}}, kAnswered};
    }
    if (name == "topfree-unit") {
        auto u = required_element(b, o.u, "u");
        auto out = topfree_unit_witness(b, u, parse_family(b, o.family), bound_or(o, 50));
        return {outcome_json(b, out), code_of(out.answer)};
    }
    if (name == "topfree-pair") return check_topfree_pair(b, o);
    if (name == "domain-witness") {
        if constexpr (std::is_same_v<B, OrderMultMonoid> || std::is_same_v<B, AxbMonoid>) {
            OrderMultMonoid m(b.ring_ptr());
            auto x = required_element(m, o.x, "x");
            auto out = integral_domain_witness(m, x, parse_family(m, o.family), bound_or(o, 100));
            return {outcome_json(m, out), code_of(out.answer)};
        } else {
            throw NotApplicable("domain-witness needs an order-backed monoid");
        }
    }
    if (name == "d2") {
        auto s0 = required_element(b, o.s0, "s0");
        auto s1 = required_element(b, o.s1, "s1");
        auto x = required_element(b, o.x, "x");
        auto out = d2_check(b, s0, s1, parse_element_list(b, o.q), x, bound_or(o, 4));
        return {outcome_json(b, out), code_of(out.answer)};
    }
    if (name == "d3") {
        auto s = required_element(b, o.s, "s");
        auto out = d3_check(b, s, parse_element_list(b, o.q), bound_or(o, 4));
        return {outcome_json(b, out), code_of(out.answer)};
    }
    if (name == "independence") {
        const long bound = bound_or(o, 10);
        auto search = independence_failure_search(b, bound, o.max_family);
        json failures = json::array();
        for (const auto& f : search.failures)
            failures.push_back({{"subject", b.describe(f.subject)},
                                {"family", ideal_list(b, f.family)},
                                {"certificate", to_json(b, f.certificate)}});
        json j{{"failures", failures}, {"exhaustive", search.exhaustive}, {"bound", bound}};
        bool settled = !search.failures.empty() || search.exhaustive;
        j["answer"] = settled ? json(search.failures.empty()) : json(nullptr);
        return {j, settled ? kAnswered : kInconclusive};
    }
    if (name == "minimal-covers") {
        auto s = parse_ideal(b, o.subject);
        auto a = minimal_cover_analysis(b, s, bound_or(o, 10), o.max_family);
        json covers = json::array();
        for (std::size_t k = 0; k < a.covers.size(); ++k)
            covers.push_back({{"family", ideal_list(b, a.covers[k])}, {"certificate", to_json(b, a.certificates[k])}});
        json j{{"subject", b.describe(s)}, {"covers", covers}, {"mandatory", ideal_list(b, a.mandatory)}};
        j["answer"] = !a.covers.empty() ? json(true) : json(nullptr);
        return {j, a.covers.empty() ? kInconclusive : kAnswered};
    }
    if (name == "boundary-vs-toeplitz") {
        auto out = boundary_equals_toeplitz(b, bound_or(o, 4), o.max_family);
        return {outcome_json(b, out), code_of(out.answer)};
    }
    if (name == "right-lcm") {
        auto out = is_right_lcm(b, bound_or(o, 6));
        return {outcome_json(b, out), code_of(out.answer)};
    }
    if (name == "lcm-pair") {
        auto p = required_element(b, o.p, "p");
        auto q = required_element(b, o.q, "q");
        auto r = lcm_pair(b, p, q);
        static const char* kinds[] = {"empty", "principal", "non-principal", "unknown"};
        json j{{"answer", kinds[static_cast<int>(r.kind)]}, {"intersection", b.describe(r.ideal)}};
        if (r.generator) j["generator"] = b.format(*r.generator);
        return {j, r.kind == LcmKind::Unknown ? kInconclusive : kAnswered};
    }
    throw std::invalid_argument("unknown check '" + name + "'");
}

template <MonoidBackend B>
Result run_ideal(const B& b, const Options& o) {
    auto w = make_word(b, parse_element_list(b, o.word));
    auto k = ideal_of_word(b, w);
    json j{{"word", element_list(b, w.entries)},
           {"ideal", b.describe(k)},
           {"quotient_set", element_list(b, quotient_set(b, w))},
           {"dot", b.format(dot(b, w))},
           {"direct_evaluation_agrees", ideal_of_word_direct(b, w) == k}};
    return {j, kAnswered};
}

std::shared_ptr<const NumberRing> ring_of(const AnyBackend& any) {
    if (auto m = std::get_if<OrderMultMonoid>(&any)) return m->ring_ptr();
    if (auto a = std::get_if<AxbMonoid>(&any)) return a->ring_ptr();
    return nullptr;
}

Result run_order_report(const NumberRing& ring) {
    json j{{"ring", ring.name()}, {"degree", ring.degree()}, {"maximal", ring.is_maximal_order()}};
    if (ring.is_maximal_order()) {
        j["notice"] = "the order is maximal, so independence holds trivially here";
        return {j, kAnswered};
    }
    auto rep = ring.dependence_report();
    j["index"] = lattice_index(ring.order(), ring.maximal()).get_str();
    j["m"] = rep.m.get_str();
    j["conductor"] = describe_lattice(ring, rep.conductor);
    json rows = json::array();
    for (const auto& r : rep.rows) {
        json row{{"h", format_field(ring, r.h)},
                 {"n", r.n.get_str()},
                 {"h_prime", format_field(ring, r.h_prime)},
                 {"h_prime_in_conductor", r.in_conductor},
                 {"ideal", describe_lattice(ring, r.ideal)},
                 {"contains_coset", r.contains_coset},
                 {"proper", r.proper}};
        if (r.doubled_from) row["doubles_row"] = *r.doubled_from;
        rows.push_back(std::move(row));
    }
    j["rows"] = rows;
    j["covers"] = rep.covers;
    if (rep.uncovered) j["uncovered"] = format_field(ring, *rep.uncovered);
    return {j, kAnswered};
}

Result run_divisorial_search(const NumberRing& ring, long bound) {
    json bad = json::array();
    std::size_t checked = 0;
    for (const auto& l : ring.order_ideals_up_to(bound)) {
        ++checked;
        if (!ring.divisorial_check(l)) bad.push_back(describe_lattice(ring, l));
    }
    return {json{{"ring", ring.name()},
                 {"bound", bound},
                 {"checked", checked},
                 {"non_divisorial", bad},
                 {"remark", "bounded search over integral ideals; no general conclusion is drawn"}},
            kAnswered};
}

void collect_certificates(const json& j, const std::string& path, std::vector<std::pair<std::string, const json*>>& out) {
    if (j.is_object()) {
        if (j.contains("kind") && j.contains("points") && j["kind"].is_string() &&
            kind_from_name(j["kind"].get<std::string>()))
            out.emplace_back(path, &j);
        for (const auto& [k, v] : j.items()) collect_certificates(v, path + "/" + k, out);
    } else if (j.is_array()) {
        for (std::size_t k = 0; k < j.size(); ++k) collect_certificates(j[k], path + "/" + std::to_string(k), out);
    }
}

Result run_verify(const Options& o) {
    std::ifstream in(o.certificate_file);
    if (!in) throw std::invalid_argument("cannot open " + o.certificate_file);
    json doc = json::parse(in);
    LoadedBackend loaded = !o.preset.empty()        ? load_preset(o.preset)
                           : !o.monoid_file.empty() ? load_config_file(o.monoid_file)
                                                    : backend_from_json(doc.at("backend"));
    std::vector<std::pair<std::string, const json*>> found;
    collect_certificates(doc, "", found);
    if (found.empty()) throw std::invalid_argument("no certificates found in " + o.certificate_file);
    json failed = json::array();
    std::size_t ok = 0;
    for (const auto& [path, cj] : found) {
        bool good = std::visit(
            [&](const auto& b) {
                try {
                    return verify(b, certificate_from_json(b, *cj));
                } catch (const std::exception&) {
                    return false;
                }
            },
            loaded.backend);
        if (good)
            ++ok;
        else
            failed.push_back(path);
    }
    return {json{{"certificates", found.size()}, {"verified", ok}, {"failed", failed}, {"answer", failed.empty()}},
            failed.empty() ? kAnswered : kError};
}

Result run_golden(const Options& o) {
    namespace fs = std::filesystem;
    json rows = json::array();
    bool all_good = true;
    if (o.regenerate) fs::create_directories(o.golden_dir);
    for (const auto& sc : golden_scenarios()) {
        std::ostringstream out, err;
        int code = run(sc.args, out, err);
        fs::path file = fs::path(o.golden_dir) / (sc.name + ".json");
        std::string status;
        if (code == kError) {
            status = "error: " + err.str();
            all_good = false;
        } else if (o.regenerate) {
            std::ofstream(file) << out.str();
            status = "written";
        } else {
            std::ifstream in(file);
            std::stringstream want;
            want << in.rdbuf();
            status = !in ? "missing" : want.str() == out.str() ? "match" : "mismatch";
            if (status != "match") all_good = false;
        }
        rows.push_back({{"name", sc.name}, {"status", status}});
    }
    return {json{{"scenarios", rows}, {"answer", all_good}}, all_good ? kAnswered : kError};
}

LoadedBackend backend_for(const Options& o) {
    if (!o.preset.empty() && !o.monoid_file.empty()) throw std::invalid_argument("give either --monoid or --preset");
    if (!o.monoid_file.empty()) return load_config_file(o.monoid_file);
    if (!o.preset.empty()) return load_preset(o.preset);
    throw std::invalid_argument("a monoid is required: pass --monoid <file.toml> or --preset <name>");
}

std::shared_ptr<const NumberRing> ring_for(const Options& o) {
    if (!o.ring.empty()) return std::make_shared<NumberRing>(preset_ring(o.ring));
    auto ring = ring_of(backend_for(o).backend);
    if (!ring) throw std::invalid_argument("this command needs an order-backed monoid or --ring");
    return ring;
}

json backend_json(const LoadedBackend& loaded) {
    json j = loaded.descriptor;
    j["name"] = std::visit([](const auto& b) { return b.name(); }, loaded.backend);
    return j;
}

}  // namespace

const std::vector<GoldenScenario>& golden_scenarios() {
    static const std::vector<GoldenScenario> list = {
        {"sigma-ideal-3223", {"--preset", "sigma", "ideal", "--word", "3,2,2,3"}},
        {"sigma-ideal-2332", {"--preset", "sigma", "ideal", "--word", "2,3,3,2"}},
        {"sigma-cover", {"--preset", "sigma", "check", "cover", "--S", "2+N", "--family", "2+Sigma,3+Sigma"}},
        {"sigma-cover-single", {"--preset", "sigma", "check", "cover", "--S", "2+N", "--family", "2+Sigma"}},
        {"sigma-independence", {"--preset", "sigma", "check", "independence", "--bound", "10"}},
        {"sigma-minimal-covers-2", {"--preset", "sigma", "check", "minimal-covers", "--S", "2+N", "--bound", "10"}},
        {"sigma-minimal-covers-3", {"--preset", "sigma", "check", "minimal-covers", "--S", "3+N", "--bound", "10"}},
        {"sigma-right-lcm", {"--preset", "sigma", "check", "right-lcm", "--bound", "20"}},
        {"sigma-boundary-norm", {"--preset", "sigma", "check", "boundary-norm", "--combination", "1:P,-1:2+Sigma"}},
        {"order-report-sqrt-3", {"order-report", "--ring", "Z[sqrt-3]"}},
        {"order-report-2i", {"order-report", "--ring", "Z[2i]"}},
        {"order-report-cbrt19", {"order-report", "--ring", "Z[cbrt19]"}},
        {"sqrt-3-word-ideal", {"--preset", "mult:Z[sqrt-3]", "ideal", "--word", "[0,2],2,2,[0,2]"}},
        {"sqrt-3-cover", {"--preset", "mult:Z[sqrt-3]", "check", "cover", "--S", "OK", "--family", "O,[0,1]*O,[-1,1]*O"}},
        {"sqrt-3-independence", {"--preset", "mult:Z[sqrt-3]", "check", "independence", "--bound", "16"}},
        {"sqrt-3-axb-topfree-pair", {"--preset", "axb:Z[sqrt-3]", "check", "topfree-pair", "--p", "(0,2)", "--t", "(1,2)"}},
        {"z-axb-topfree-pair", {"--preset", "axb:Z", "check", "topfree-pair", "--p", "(0,1)", "--t", "(2,1)"}},
        {"2i-axb-topfree-unit", {"--preset", "axb:Z[2i]", "check", "topfree-unit", "--u", "(1,1)", "--family", "0+2*OK"}},
        {"free-foundation", {"--preset", "free:2", "check", "foundation", "--S", "P", "--family", "aP"}},
        {"free-d3", {"--preset", "free:2", "check", "d3", "--s", "a", "--q", "ab"}},
        {"toeplitz-sigma", {"--preset", "sigma", "check", "boundary-vs-toeplitz"}},
        {"toeplitz-grid", {"--preset", "grid:2", "check", "boundary-vs-toeplitz"}},
        {"toeplitz-free", {"--preset", "free:2", "check", "boundary-vs-toeplitz", "--bound", "2"}},
        {"toeplitz-sqrt-3-mult", {"--preset", "mult:Z[sqrt-3]", "check", "boundary-vs-toeplitz"}},
        {"toeplitz-sqrt-3-axb", {"--preset", "axb:Z[sqrt-3]", "check", "boundary-vs-toeplitz"}},
    };
    return list;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact calculus of constructible right ideals", "crideal"};
    app.add_option("--monoid", o.monoid_file, "TOML monoid definition");
    app.add_option("--preset", o.preset, "sigma, numerical:<gens>, grid:<k>, free:<n>, mult:<ring>, axb:<ring>");
    app.add_flag("--timing", o.timing, "Include wall-clock time in the report");
    app.require_subcommand(1);

    auto* ideal = app.add_subcommand("ideal", "Ideal, quotient set and quotient of a word");
    ideal->add_option("--word", o.word, "Comma separated entries p1,...,p2k")->required();

    auto* order = app.add_subcommand("order-report", "Conductor and dependence table of a nonmaximal order");
    order->add_option("--ring", o.ring, "Z, Z[sqrt-3], Z[2i] or Z[cbrt19]");

    auto* check = app.add_subcommand("check", "Run one decision procedure or witness search");
    check->add_option("name", o.check_name, "Check to run")->required();
    check->add_option("--S,--subject", o.subject, "Ideal S");
    check->add_option("--family", o.family, "Comma separated ideals");
    check->add_option("--combination", o.combination, "Diagonal element as coef:ideal,...");
    check->add_option("--p", o.p);
    check->add_option("--t", o.t);
    check->add_option("--u", o.u);
    check->add_option("--x", o.x);
    check->add_option("--s", o.s);
    check->add_option("--s0", o.s0);
    check->add_option("--s1", o.s1);
    check->add_option("--q", o.q, "Element or comma separated elements");
    check->add_option("--bound", o.bound, "Search bound");
    check->add_option("--max-family", o.max_family, "Largest family size searched");
    check->add_flag("--core-only", o.core_only, "Restrict topfree-pair to core elements");

    auto* ver = app.add_subcommand("verify", "Replay every certificate in a report");
    ver->add_option("file", o.certificate_file, "Report or certificate JSON")->required();

    auto* golden = app.add_subcommand("golden", "Compare or regenerate golden reports");
    golden->add_option("--dir", o.golden_dir, "Golden file directory");
    golden->add_flag("--regenerate", o.regenerate, "Rewrite the golden files");

    auto* dsearch = app.add_subcommand("divisorial-search", "Look for non-divisorial ideals of bounded index");
    dsearch->add_option("--ring", o.ring, "Ring preset");
    dsearch->add_option("--bound", o.bound, "Largest index");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kAnswered : kError;
    }

    const auto start = std::chrono::steady_clock::now();
    Result result;
    json backend = nullptr;
    try {
        if (*ideal || *check) {
            auto loaded = backend_for(o);
            backend = backend_json(loaded);
            result = std::visit([&](const auto& b) { return *ideal ? run_ideal(b, o) : run_check(b, o); },
                                loaded.backend);
        } else if (*order) {
            result = run_order_report(*ring_for(o));
        } else if (*dsearch) {
            result = run_divisorial_search(*ring_for(o), bound_or(o, 16));
        } else if (*ver) {
            result = run_verify(o);
        } else if (*golden) {
            result = run_golden(o);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kError;
    }

    json report{{"schema", "v1"}, {"tool", "crideal"}, {"version", CRIDEAL_VERSION}, {"command", args}};
    if (!backend.is_null()) report["backend"] = backend;
    report["result"] = result.body;
    if (o.timing)
        report["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out << report.dump(2) << "\n";
    return result.code;
}

}  // namespace crideal::cli
