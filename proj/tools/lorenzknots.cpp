// lorenzknots: realize periodic orbits of twisted Lorenz templates L(m,n) as
// braids and knots, compute exact invariants, and check template-level
// knot-set relations by fingerprint search.
//
// Exit codes: 0 success / relation verified, 1 relation not verified or
// witness not found at budget, 2 usage or input error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lorenz/cache.hpp"
#include "lorenz/diagram.hpp"

namespace {

using namespace lorenz;

std::string resolve_cache_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("LORENZ_CACHE_DIR"); env && *env) return env;
    return ".";
}

std::string sanitize(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '~')
            out += 'm';
        else if (c == ',')
            out += '_';
        else
            out += c;
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw InvalidInput("cannot open for writing: " + path);
    out << content;
    if (!out.flush()) throw InvalidInput("write failed: " + path);
}

void emit_report(const std::string& path, const nlohmann::json& j) {
    if (path.empty()) return;
    write_text_file(path, j.dump(2) + "\n");
}

int cmd_enumerate(const std::string& tpl, int max_len, std::string output,
                  const std::string& cache_dir_flag, int jones_strands) {
    const TemplateSpec spec = TemplateSpec::parse(tpl);
    if (max_len < 1) throw InvalidInput("--max-len must be >= 1");
    if (output.empty()) {
        const std::string dir = resolve_cache_dir(cache_dir_flag);
        output = (std::filesystem::path(dir) /
                  ("orbits_" + sanitize(spec.str()) + "_len" + std::to_string(max_len) +
                   ".jsonl"))
                     .string();
    }
    std::vector<CacheRecord> records;
    for (const OrbitWord& w : enumerate_orbits(max_len)) {
        CacheRecord r;
        r.spec = spec;
        r.word = w.letters();
        r.fp = fingerprint(w, spec, jones_strands);
        records.push_back(std::move(r));
    }
    write_cache_file(output, records);
    std::cout << "wrote " << records.size() << " records to " << output << "\n";
    return 0;
}

int cmd_invariants(const std::string& tpl, const std::string& word, int jones_strands) {
    const TemplateSpec spec = TemplateSpec::parse(tpl);
    const OrbitWord w(word);
    Fingerprint fp = fingerprint(w, spec, jones_strands);
    nlohmann::json j = fingerprint_to_json(fp);
    j["template"] = spec.str();
    j["word"] = w.letters();
    j["jones_strand_budget"] = jones_strands;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_verify_inclusion(const std::string& sub_tpl, const std::string& super_tpl,
                         int sub_max_len, int search_len, int jones_strands,
                         const std::string& report_path) {
    const TemplateSpec sub = TemplateSpec::parse(sub_tpl);
    const TemplateSpec super = TemplateSpec::parse(super_tpl);
    if (sub_max_len < 1 || search_len < 1) throw InvalidInput("lengths must be >= 1");
    InclusionReport report =
        verify_inclusion(sub, super, sub_max_len, search_len, jones_strands);
    emit_report(report_path, inclusion_report_to_json(report));
    std::cout << "inclusion " << sub.str() << " -> " << super.str() << " (sub length <= "
              << sub_max_len << ", search length <= " << search_len << ")\n";
    std::cout << "matched: " << report.matched.size()
              << ", unmatched: " << report.unmatched.size() << "\n";
    for (const UnmatchedRecord& u : report.unmatched) {
        std::cout << "  unmatched: " << u.word.letters()
                  << (u.jones_demoted ? " (candidates refuted by Jones)" : "") << "\n";
    }
    std::cout << (report.verified() ? "verified: yes" : "verified: no") << "\n";
    return report.verified() ? 0 : 1;
}

int cmd_find_composites(const std::string& tpl, int max_len, int catalog_len,
                        int jones_strands, const std::string& report_path,
                        bool expect_some, bool expect_none) {
    const TemplateSpec spec = TemplateSpec::parse(tpl);
    if (max_len < 1 || catalog_len < 1) throw InvalidInput("lengths must be >= 1");
    if (expect_some && expect_none)
        throw CLI::ValidationError("--expect-some and --expect-none are exclusive");
    PrimeCatalog catalog = build_prime_catalog(catalog_len, jones_strands);
    std::vector<CompositeReport> reports =
        find_composites(spec, max_len, catalog, jones_strands);
    emit_report(report_path, composite_reports_to_json(spec, max_len, catalog_len,
                                                       jones_strands, reports));
    std::cout << "composites on " << spec.str() << " up to length " << max_len << ": "
              << reports.size() << "\n";
    for (const CompositeReport& r : reports) {
        std::cout << "  " << r.word.letters() << " = " << r.factor1.name << " # "
                  << r.factor2.name << " [" << to_string(r.level) << "]\n";
    }
    if (expect_some) return reports.empty() ? 1 : 0;
    if (expect_none) return reports.empty() ? 0 : 1;
    return 0;
}

int cmd_verify_sum(const std::string& u_word, const std::string& v_word,
                   const std::string& target_tpl, int search_len, int jones_strands,
                   const std::string& report_path) {
    const OrbitWord u(u_word);
    const OrbitWord v(v_word);
    const TemplateSpec target = TemplateSpec::parse(target_tpl);
    if (search_len < 1) throw InvalidInput("--search-len must be >= 1");
    std::optional<SumWitness> witness =
        verify_connected_sum(u, v, target, search_len, jones_strands);
    emit_report(report_path, sum_result_to_json(u, v, target, search_len, jones_strands,
                                                witness));
    std::cout << "connected sum " << u.letters() << " (on 0,2) # " << v.letters()
              << " (on ~0,2) in " << target.str() << " within length " << search_len
              << ":\n";
    if (witness) {
        std::cout << "witness: " << witness->word.letters() << " ["
                  << to_string(witness->level) << "]\n";
        return 0;
    }
    std::cout << "not found at budget\n";
    return 1;
}

int cmd_emit_diagram(const std::string& tpl, const std::string& word,
                     const std::string& format, const std::string& output,
                     bool simplified) {
    const TemplateSpec spec = TemplateSpec::parse(tpl);
    const OrbitWord w(word);
    BraidWord b = build_braid(w, spec);
    if (simplified) b = simplify_braid(b);
    std::string content;
    if (format == "text")
        content = render_braid_text(b);
    else if (format == "svg")
        content = render_braid_svg(b);
    else
        throw CLI::ValidationError("--format must be text or svg");
    if (output.empty())
        std::cout << content;
    else
        write_text_file(output, content);
    return 0;
}

int cmd_build_catalog(int catalog_len, int jones_strands, const std::string& output) {
    if (catalog_len < 1) throw InvalidInput("--catalog-len must be >= 1");
    PrimeCatalog catalog = build_prime_catalog(catalog_len, jones_strands);
    emit_report(output, catalog_to_json(catalog, catalog_len, jones_strands));
    std::cout << "catalog entries: " << catalog.entries().size() << "\n";
    for (const CatalogEntry& e : catalog.entries()) {
        std::cout << "  " << e.name << " (word " << e.word.letters() << " on "
                  << e.source.str() << ")\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Periodic orbits of Lorenz-like templates L(m,n) as braids and knots: "
        "enumeration, exact invariants, and fingerprint verification of "
        "template inclusion, composite knots, and connected sums."};
    app.require_subcommand(1);

    std::string tpl = "0,0", word, sub_tpl, super_tpl, target_tpl = "0,-2";
    std::string u_word, v_word;
    std::string output, report_path, cache_dir, format = "text";
    int max_len = 0, sub_max_len = 0, search_len = 14, catalog_len = 5;
    int jones_strands = 12;
    bool expect_some = false, expect_none = false, simplified = false;

    CLI::App* enumerate = app.add_subcommand(
        "enumerate", "Fingerprint all orbits of a template into a JSON Lines cache");
    enumerate->add_option("--template", tpl, "template \"m,n\" or \"~m,n\"")->required();
    enumerate->add_option("--max-len", max_len, "maximum orbit word length")->required();
    enumerate->add_option("--output", output, "output path (default: cache dir)");
    enumerate->add_option("--cache-dir", cache_dir,
                          "cache directory (default: $LORENZ_CACHE_DIR, else .)");
    enumerate->add_option("--jones-strands", jones_strands,
                          "Jones strand budget (default 12)");

    CLI::App* invariants =
        app.add_subcommand("invariants", "Print one orbit's fingerprint as JSON");
    invariants->add_option("--template", tpl, "template \"m,n\" or \"~m,n\"")->required();
    invariants->add_option("--word", word, "orbit word over {x,y}")->required();
    invariants->add_option("--jones-strands", jones_strands,
                           "Jones strand budget (default 12)");

    CLI::App* inclusion = app.add_subcommand(
        "verify-inclusion", "Check that every sub-template orbit knot has a "
                            "fingerprint match among the super-template orbits");
    inclusion->add_option("--sub", sub_tpl, "sub template")->required();
    inclusion->add_option("--super", super_tpl, "super template")->required();
    inclusion->add_option("--sub-max-len", sub_max_len, "sub orbit length bound")
        ->required();
    inclusion->add_option("--search-len", search_len, "super search length bound")
        ->required();
    inclusion->add_option("--jones-strands", jones_strands,
                          "Jones strand budget (default 12)");
    inclusion->add_option("--report", report_path, "write the JSON report here");

    CLI::App* composites = app.add_subcommand(
        "find-composites",
        "Report orbits whose fingerprint is a product of two nontrivial catalog entries");
    composites->add_option("--template", tpl, "template")->required();
    composites->add_option("--max-len", max_len, "orbit length bound")->required();
    composites->add_option("--catalog-len", catalog_len,
                           "catalog enumeration length (default 5)");
    composites->add_option("--jones-strands", jones_strands,
                           "Jones strand budget (default 12)");
    composites->add_option("--report", report_path, "write the JSON report here");
    composites->add_flag("--expect-some", expect_some, "exit 1 when none found");
    composites->add_flag("--expect-none", expect_none, "exit 1 when any found");

    CLI::App* sum = app.add_subcommand(
        "verify-sum", "Search a target template for the connected sum of an orbit "
                      "of L(0,2) and an orbit of ~L(0,2)");
    sum->add_option("--u", u_word, "orbit word on L(0,2)")->required();
    sum->add_option("--v", v_word, "orbit word on ~L(0,2)")->required();
    sum->add_option("--target", target_tpl, "target template (default 0,-2)");
    sum->add_option("--search-len", search_len, "target search length (default 14)");
    sum->add_option("--jones-strands", jones_strands,
                    "Jones strand budget (default 12)");
    sum->add_option("--report", report_path, "write the JSON report here");

    CLI::App* diagram =
        app.add_subcommand("emit-diagram", "Render an orbit's braid as text or SVG");
    diagram->add_option("--template", tpl, "template")->required();
    diagram->add_option("--word", word, "orbit word")->required();
    diagram->add_option("--format", format, "text or svg (default text)");
    diagram->add_option("--output", output, "output path (default: stdout)");
    diagram->add_flag("--simplified", simplified,
                      "draw the simplified braid instead of the built one");

    CLI::App* catalog =
        app.add_subcommand("build-catalog", "Build and print the prime-factor catalog");
    catalog->add_option("--catalog-len", catalog_len,
                        "catalog enumeration length (default 5)");
    catalog->add_option("--jones-strands", jones_strands,
                        "Jones strand budget (default 12)");
    catalog->add_option("--output", output, "write the catalog JSON here");

    try {
        app.parse(argc, argv);
        if (enumerate->parsed())
            return cmd_enumerate(tpl, max_len, output, cache_dir, jones_strands);
        if (invariants->parsed()) return cmd_invariants(tpl, word, jones_strands);
        if (inclusion->parsed())
            return cmd_verify_inclusion(sub_tpl, super_tpl, sub_max_len, search_len,
                                        jones_strands, report_path);
        if (composites->parsed())
            return cmd_find_composites(tpl, max_len, catalog_len, jones_strands,
                                       report_path, expect_some, expect_none);
        if (sum->parsed())
            return cmd_verify_sum(u_word, v_word, target_tpl, search_len, jones_strands,
                                  report_path);
        if (diagram->parsed())
            return cmd_emit_diagram(tpl, word, format, output, simplified);
        if (catalog->parsed())
            return cmd_build_catalog(catalog_len, jones_strands, output);
        std::cerr << "no subcommand given\n";
        return 2;
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const lorenz::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
