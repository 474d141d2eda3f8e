// windbraid: command-line front end. See README.md for examples.

#include <fstream>
#include <iostream>
#include <regex>

#include "CLI11.hpp"
#include "json.hpp"
#include "windbraid/garside.hpp"
#include "windbraid/harness.hpp"
#include "windbraid/relaxation.hpp"
#include "windbraid/sigma_definite.hpp"
#include "windbraid/winding_labels.hpp"

using namespace windbraid;
using json = nlohmann::ordered_json;

namespace {

constexpr std::uint64_t kDefaultSeed = 1;

std::uint64_t default_seed() { return seed_from_env(kDefaultSeed); }

// Smallest strand count the word makes sense on.
int infer_strands(const std::string& text) {
    int n = 0;
    static const std::regex gen(R"(s(\d+))"), twist(R"(D\[\d+,(\d+)\])");
    for (auto it = std::sregex_iterator(text.begin(), text.end(), gen); it != std::sregex_iterator(); ++it)
        n = std::max(n, std::stoi((*it)[1]) + 1);
    for (auto it = std::sregex_iterator(text.begin(), text.end(), twist); it != std::sregex_iterator(); ++it)
        n = std::max(n, std::stoi((*it)[1]));
    if (n == 0 && text.find('D') != std::string::npos) throw BraidError("D needs --strands");
    return std::max(n, 2);
}

struct WordArgs {
    std::string text;
    int strands = 0;

    BraidWord word() const { return parse_word(text, strands > 0 ? strands : infer_strands(text)); }
};

void add_word(CLI::App* app, WordArgs& a) {
    app->add_option("word", a.text, "braid word, e.g. \"s1 s2^-1 D\"")->required();
    app->add_option("-n,--strands", a.strands, "strand count (default: from the word)");
}

json factors_json(const std::vector<PermutationBraid>& fs) {
    auto out = json::array();
    for (const auto& f : fs) out.push_back(print_word(word_from_simple(f)));
    return out;
}

int cmd_nf(const BraidWord& w, bool as_json) {
    const auto left = left_normal_form(w);
    const auto right = right_normal_form(w);
    if (as_json) {
        json j;
        j["word"] = print_word(w);
        j["strands"] = w.strands();
        j["inf"] = left.infimum;
        j["sup"] = left.supremum();
        j["length"] = left.garside_length();
        j["left_factors"] = factors_json(left.factors);
        j["right_factors"] = factors_json(right.factors);
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "inf " << left.infimum << "  sup " << left.supremum() << "  length " << left.garside_length()
                  << "\nleft:  D^" << left.infimum;
        for (const auto& f : left.factors) std::cout << " . " << print_word(word_from_simple(f));
        std::cout << "\nright:";
        for (const auto& f : right.factors) std::cout << ' ' << print_word(word_from_simple(f)) << " .";
        std::cout << " D^" << right.infimum << '\n';
    }
    return 0;
}

int cmd_labels(const BraidWord& w, const std::string& scope, bool as_json) {
    const auto d = diagram_of(w);
    const auto t = label_trace(d);
    const auto e = extreme_labels(t, scope == "full" ? Scope::Full : Scope::Restricted);
    if (as_json) {
        json j;
        j["word"] = print_word(w);
        j["scope"] = scope;
        j["largest"] = e.largest;
        j["smallest"] = e.smallest;
        j["trace"] = json::parse(label_trace_to_json(t));
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "largest " << e.largest << "  smallest " << e.smallest << "  (" << scope << ")\nsegments:";
        for (const auto& s : t.segments)
            if (scope == "full" || in_restricted(t, s)) std::cout << ' ' << s.label;
        std::cout << '\n';
    }
    return 0;
}

int cmd_len(const BraidWord& w, bool as_json) {
    const auto is = inf_sup(w);
    const auto e = extreme_labels(diagram_of(w));
    const bool agree = e.largest == is.sup && e.smallest == is.inf;
    if (as_json) {
        json j;
        j["word"] = print_word(w);
        j["garside"] = {{"inf", is.inf}, {"sup", is.sup}, {"length", is.garside_length}};
        j["labels"] = {{"largest", e.largest}, {"smallest", e.smallest}};
        j["agree"] = agree;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "normal form: inf " << is.inf << "  sup " << is.sup << "  length " << is.garside_length
                  << "\nlabels:      smallest " << e.smallest << "  largest " << e.largest << "\n"
                  << (agree ? "agree" : "DISAGREE") << '\n';
    }
    return agree ? 0 : 1;
}

int cmd_relax(const BraidWord& w, bool as_json) {
    const auto f = geodesic_factorization(w);
    if (as_json) {
        json j;
        j["word"] = print_word(w);
        j["factors"] = json::parse(factors_to_json(f));
        j["product"] = print_word(word_from_factors(w.strands(), f));
        std::cout << j.dump() << '\n';
    } else {
        std::cout << f.size() << " factors\n";
        for (const auto& g : f) {
            const auto s = word_from_simple(g.simple);
            std::cout << (g.sign > 0 ? "  + " : "  - ") << print_word(g.sign > 0 ? s : s.inverse()) << '\n';
        }
    }
    return 0;
}

int cmd_sigmadef(const BraidWord& w, bool as_json) {
    const auto rep = sigma1_definite_report(w);
    const auto full = sigma_definite_word(w);
    if (as_json) {
        auto j = json::parse(report_to_json(rep));
        j["sigma_definite_word"] = print_word(full);
        j["sign"] = sign_name(handle_reduction_sign(w));
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "sign " << sign_name(handle_reduction_sign(w)) << "\nsigma1-definite: " << print_word(rep.output)
                  << "\nsigma1 letters " << rep.sigma1_count << "  sup " << rep.sup << "  length " << rep.length_out
                  << "  slides " << rep.slides << "\nsigma-definite:  " << print_word(full) << '\n';
    }
    return 0;
}

int cmd_render(const BraidWord& w, const std::string& out, bool as_json) {
    const auto svg = render_svg(diagram_of(w));
    std::ofstream f(out, std::ios::binary);
    if (!f) throw BraidError("cannot write " + out);
    f << svg;
    if (as_json)
        std::cout << json{{"word", print_word(w)}, {"out", out}, {"bytes", svg.size()}}.dump() << '\n';
    else
        std::cout << "wrote " << out << '\n';
    return 0;
}

int cmd_check(int n, long count, int max_len, std::uint64_t seed, bool as_json) {
    const auto r = run_cross_validation(n, count, max_len, seed);
    if (as_json) {
        std::cout << report_to_json(r) << '\n';
    } else {
        std::cout << r.suite << ": " << r.cases << " cases, " << r.failures.size() << " failures, " << r.seconds
                  << " s\n";
        for (const auto& f : r.failures)
            std::cout << "  " << f.check << " [" << f.word << "] n=" << f.strands << " seed=" << f.seed
                      << " expected " << f.expected << ", got " << f.actual << '\n';
    }
    return r.ok() ? 0 : 1;
}

int cmd_conjecture(int n, long count, std::uint64_t seed, long budget, bool as_json) {
    const auto r = conjecture_experiment(n, count, seed, budget);
    if (as_json) {
        std::cout << report_to_json(r) << '\n';
    } else {
        std::cout << "EXPERIMENTAL (open conjecture)\nbraids " << r.braids << "  skipped " << r.skipped << "  moves "
                  << r.moves << "  supporting " << r.supporting << "  budget exhausted " << r.budget_exhausted
                  << "  candidates " << r.candidates.size() << "  errors " << r.errors.size() << '\n';
        for (const auto& c : r.candidates)
            std::cout << "  candidate [" << c.word << "] disk " << c.first << ".." << c.last << " move ["
                      << c.beta_plus << "] tangledness " << c.tangledness_before << "->" << c.tangledness_after
                      << " tau-length " << c.tau_before << "->" << c.tau_after << '\n';
        for (const auto& e : r.errors) std::cout << "  error " << e << '\n';
    }
    return r.errors.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Braid lengths from curve diagrams"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    WordArgs nf, labels, len, relax, sigmadef, render;
    std::string scope = "restricted", out;
    add_word(app.add_subcommand("nf", "Garside normal forms, inf, sup, length"), nf);
    auto* labels_cmd = app.add_subcommand("labels", "winding-number labels of the curve diagram");
    add_word(labels_cmd, labels);
    labels_cmd->add_option("--scope", scope)->check(CLI::IsMember({"full", "restricted"}));
    add_word(app.add_subcommand("len", "length from the normal form and from the labels"), len);
    add_word(app.add_subcommand("relax", "geodesic factorization into simples and inverses"), relax);
    add_word(app.add_subcommand("sigmadef", "sigma-definite representative"), sigmadef);
    auto* render_cmd = app.add_subcommand("render", "SVG drawing of the labelled diagram");
    add_word(render_cmd, render);
    render_cmd->add_option("--out", out, "output file")->required();

    int n = 3, max_len = 10;
    long count = 100, budget = 100000;
    std::uint64_t seed = 0;
    auto* check_cmd = app.add_subcommand("check", "cross-validation on random words; exit 1 on failures");
    auto* conj_cmd = app.add_subcommand("conjecture", "tangledness vs tau-length experiment (EXPERIMENTAL)");
    for (auto* c : {check_cmd, conj_cmd}) {
        c->add_option("-n,--strands", n)->check(CLI::Range(2, 64));
        c->add_option("--count", count);
        c->add_option("--seed", seed, "default 1, or WINDBRAID_SEED");
    }
    check_cmd->add_option("--max-len", max_len);
    conj_cmd->add_option("--budget", budget);
    for (auto* c : app.get_subcommands({})) c->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    CLI11_PARSE(app, argc, argv);
    const bool as_json = format == "json";
    try {
        auto seed_value = [&](CLI::App* c) { return c->count("--seed") ? seed : default_seed(); };
        if (app.got_subcommand("nf")) return cmd_nf(nf.word(), as_json);
        if (app.got_subcommand("labels")) return cmd_labels(labels.word(), scope, as_json);
        if (app.got_subcommand("len")) return cmd_len(len.word(), as_json);
        if (app.got_subcommand("relax")) return cmd_relax(relax.word(), as_json);
        if (app.got_subcommand("sigmadef")) return cmd_sigmadef(sigmadef.word(), as_json);
        if (app.got_subcommand("render")) return cmd_render(render.word(), out, as_json);
        if (app.got_subcommand("check")) return cmd_check(n, count, max_len, seed_value(check_cmd), as_json);
        if (app.got_subcommand("conjecture")) return cmd_conjecture(n, count, seed_value(conj_cmd), budget, as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
