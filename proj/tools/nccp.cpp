#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nccp/complement.hpp"
#include "nccp/fixtures.hpp"
#include "nccp/io.hpp"
#include "nccp/kary.hpp"
#include "nccp/lattice.hpp"
#include "nccp/series.hpp"
#include "nccp/shelling.hpp"
#include "nccp/verify.hpp"

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

void need_range(const std::string& what, int v, int lo, int hi)
{
    if (v < lo || v > hi)
        throw UsageError(what + " must be in " + std::to_string(lo) + ".." + std::to_string(hi));
}

// Echo the input's notation: comma form if the input used commas.
std::string show(const nccp::Partition& p, bool compact) { return nccp::to_string(p, compact); }

int cmd_enumerate(int n, const std::string& cls, const std::string& format, int cap)
{
    need_range("--n", n, 1, cap);
    const auto family = nccp::parse_family(cls);
    const auto all = nccp::enumerate(n, family);
    if (format == "json") {
        nccp::json out = nccp::json::array();
        for (const auto& p : all)
            out.push_back(nccp::to_json(p));
        std::cout << out.dump(1) << '\n';
    } else if (format == "csv") {
        std::cout << "partition,blocks,rank,inversions\n";
        for (const auto& p : all)
            std::cout << nccp::to_string(p, true) << ',' << p.block_count() << ',' << p.rank() << ','
                      << nccp::inversions(p) << '\n';
    } else {
        for (const auto& p : all)
            std::cout << nccp::to_string(p, true) << '\n';
    }
    std::cerr << all.size() << " elements\n";
    return 0;
}

int cmd_hasse(int n, bool restricted, const std::string& labels, const std::string& format, int cap)
{
    need_range("--n", n, 1, cap);
    const auto h = nccp::build_hasse(n, restricted ? nccp::Family::nccp312 : nccp::Family::nccp);
    if (format == "json") {
        std::cout << nccp::to_json(h).dump(1) << '\n';
    } else {
        const auto style = labels == "ltilde"    ? nccp::LabelStyle::ltilde
                           : labels == "refined" ? nccp::LabelStyle::refined
                                                 : nccp::LabelStyle::none;
        std::cout << nccp::to_dot(h, style);
    }
    std::cerr << h.elements.size() << " nodes, " << h.edges.size() << " edges\n";
    return 0;
}

std::string join_ints(const std::vector<nccp::Int>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + v[i].str();
    return s + ")";
}

int cmd_report(const std::string& kind, int n, int k, int cap)
{
    if (kind == "tables") {
        need_range("--n", n, 1, 20);
        std::vector<nccp::Int> a, b;
        for (int l = 1; l <= n; ++l) {
            a.push_back(nccp::eulerian(n, l));
            b.push_back(nccp::narayana(n, l));
        }
        std::cout << "A(" << n << ",.) = " << join_ints(a) << '\n';
        std::cout << "B(" << n << ",.) = " << join_ints(b) << '\n';
        if (n <= 8)
            for (const auto& s : nccp::compositions(n))
                std::cout << "T" << nccp::to_string(s) << " = " << nccp::type_count_T(s) << '\n';
        return 0;
    }
    need_range("--n", n, 1, cap);
    const auto& L = nccp::lattice_for(n);
    const auto& h = L.diagram();
    const auto r = nccp::build_hasse(n, nccp::Family::nccp312);
    const nccp::OrderTable rle(r);
    if (kind == "moebius") {
        std::cout << "mu(bottom,top) = " << nccp::moebius_recursive(h, L.order(), h.bottom, h.top)
                  << "  (falling chains: " << nccp::moebius_via_chains(h, L.order(), h.bottom, h.top)
                  << ", closed form: " << nccp::moebius_closed_form(n) << ")\n";
        std::cout << "restricted mu(bottom,top) = " << nccp::moebius_recursive(r, rle, r.bottom, r.top)
                  << "  (closed form: " << nccp::kreweras_moebius_closed_form(n) << ")\n";
    } else if (kind == "maxchains") {
        std::cout << "maximal chains: full " << nccp::count_maximal_chains(h) << ", restricted "
                  << nccp::count_maximal_chains(r) << '\n';
    } else if (kind == "kchains") {
        need_range("--k", k, 1, 8);
        std::cout << "k-chains (k=" << k << "): full " << nccp::count_k_chains(h, L.order(), k) << ", restricted "
                  << nccp::count_k_chains(r, rle, k) << "  (tree count " << nccp::kary_product(n, k)
                  << ", Fuss-Catalan " << nccp::fuss_catalan(n, k) << ")\n";
    } else {
        throw UsageError("unknown report: " + kind);
    }
    return 0;
}

int cmd_map(const std::string& name, const std::string& text)
{
    const auto p = nccp::parse(text);
    const bool compact = text.find(',') == std::string::npos;
    nccp::Partition out;
    if (name == "bar")
        out = nccp::bar(p);
    else if (name == "alpha")
        out = nccp::alpha(p);
    else if (name == "alphaprime")
        out = nccp::alpha_prime(p);
    else if (name == "c")
        out = nccp::kreweras_c(p);
    else if (name == "beta")
        out = nccp::beta(p).value;
    else if (name == "varphi")
        out = nccp::varphi(p);
    else if (name == "psi")
        out = nccp::varphi_inv(p);
    else
        throw UsageError("unknown map: " + name);
    std::cout << show(out, compact) << '\n';
    return 0;
}

int cmd_series(int order, const std::string& method, const std::string& format)
{
    need_range("--order", order, 0, 8);
    const auto m = method == "direct" ? nccp::SeriesMethod::direct
                   : method == "dyck" ? nccp::SeriesMethod::dyck
                                      : nccp::SeriesMethod::recurrence;
    const auto s = nccp::series_C(order, m);
    if (format == "json")
        std::cout << nccp::to_json(s).dump() << '\n';
    else
        std::cout << s.to_string() << '\n';
    return 0;
}

std::vector<int> parse_heights(const std::string& text)
{
    std::vector<int> h;
    std::stringstream ss(text);
    for (std::string tok; std::getline(ss, tok, ',');)
        h.push_back(std::stoi(tok));
    return h;
}

int cmd_tiling(const std::string& heights, int k, const std::string& format)
{
    need_range("--k", k, 2, 6);
    const auto h = parse_heights(heights);
    need_range("length of --heights", static_cast<int>(h.size()), 1, 7);
    const auto t = nccp::tiling_from_height(h, k);
    const auto tree = nccp::tree_from_height(h, k);
    if (format == "json") {
        std::cout << nccp::json{{"tree", nccp::to_json(tree)}, {"tiling", nccp::to_json(t)}}.dump() << '\n';
        return 0;
    }
    std::cout << "tree  " << nccp::to_string(tree) << '\n' << "chain ";
    const auto chain = nccp::chi_partitions(tree);
    for (std::size_t i = 0; i < chain.size(); ++i)
        std::cout << (i ? " | " : "") << nccp::to_string(chain[i], true);
    std::cout << '\n' << nccp::to_ascii(t);
    return 0;
}

int cmd_verify(const std::string& suite, int max_n)
{
    if (!nccp::verify_suites().count(suite))
        throw UsageError("unknown suite: " + suite);
    nccp::VerifyOptions opt;
    opt.max_n = max_n;
    opt.hasse4_edges = nccp::fixtures::hasse4_edges;
    opt.kreweras4_pairing = nccp::fixtures::kreweras4_pairing;
    opt.progress = [](const std::string& s) { std::cerr << "... " << s << '\n'; };
    bool ok = true;
    for (const auto& r : nccp::run_suite(suite, opt)) {
        ok &= r.pass;
        std::cout << nccp::format_result(r) << '\n';
        for (const auto& line : r.notes)
            std::cout << "      " << line << '\n';
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Noncommutative crossing partitions: enumeration, diagrams, maps and checks"};
    app.require_subcommand(1);
    int cap = 7;
    app.add_option("--cap", cap, "Largest n for lattice builds")->check(CLI::Range(1, 8));

    int n = 0, k = 3, max_n = 99, order = 7;
    std::string cls = "nccp", format = "text", labels = "none", kind, name, text, suite = "all", method = "recurrence",
                heights;
    bool restricted = false;

    auto* en = app.add_subcommand("enumerate", "List the elements of one family");
    en->add_option("--n", n)->required();
    en->add_option("--class", cls)->check(CLI::IsMember({"nccp", "ncp", "nccp312", "nccp132"}));
    en->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));

    auto* hs = app.add_subcommand("hasse", "Cover diagram as DOT or JSON");
    hs->add_option("--n", n)->required();
    hs->add_flag("--restrict-312", restricted, "Only 312-avoiding elements");
    hs->add_option("--labels", labels)->check(CLI::IsMember({"none", "ltilde", "refined"}));
    hs->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}))->default_str("dot");

    auto* rp = app.add_subcommand("report", "Moebius values, chain counts and number tables");
    rp->add_option("kind", kind)->required()->check(CLI::IsMember({"moebius", "maxchains", "kchains", "tables"}));
    rp->add_option("--n", n)->required();
    rp->add_option("--k", k);

    auto* mp = app.add_subcommand("map", "Apply one map to a partition");
    mp->add_option("name", name)->required()->check(
        CLI::IsMember({"bar", "alpha", "alphaprime", "c", "beta", "varphi", "psi"}));
    mp->add_option("partition", text)->required();

    auto* se = app.add_subcommand("series", "Coefficients of C(r,t,q)");
    se->add_option("--order", order);
    se->add_option("--method", method)->check(CLI::IsMember({"recurrence", "direct", "dyck"}));
    se->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* tl = app.add_subcommand("tiling", "Tree, chain and Dyck tiling of a height sequence");
    tl->add_option("--heights", heights, "Comma separated heights, e.g. 0,0,3,6,6")->required();
    tl->add_option("--k", k);
    tl->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* vf = app.add_subcommand("verify", "Run the acceptance checks");
    vf->add_option("--suite", suite);
    vf->add_option("--max-n", max_n);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*en)
            return cmd_enumerate(n, cls, format, 8);
        if (*hs)
            return cmd_hasse(n, restricted, labels, format == "text" ? "dot" : format, cap);
        if (*rp)
            return cmd_report(kind, n, k, cap);
        if (*mp)
            return cmd_map(name, text);
        if (*se)
            return cmd_series(order, method, format);
        if (*tl)
            return cmd_tiling(heights, k, format);
        if (*vf)
            return cmd_verify(suite, max_n);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
