#include "mzeta/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "mzeta/config_io.hpp"
#include "mzeta/errors.hpp"
#include "mzeta/expr.hpp"
#include "mzeta/random_gen.hpp"
#include "mzeta/zeta.hpp"

namespace mzeta {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::set<std::string> split_ids(const std::string& csv) {
    std::set<std::string> out;
    std::string item;
    std::istringstream ss(csv);
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.insert(item);
    return out;
}

struct Ctx {
    std::string file;
    std::optional<std::string> selection;
    std::string output;
    int order = 1;
    int random_n = 0;
    unsigned long long seed = 0;
};

ConfigDocument load(const Ctx& ctx) {
    ConfigDocument doc = parse_config(read_file(ctx.file));
    if (ctx.selection) doc.config.selection = split_ids(*ctx.selection);
    return doc;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact engine for infinite cyclic zeta functions of SNC divisor data"};
    app.name("mzeta");
    app.require_subcommand(1);

    Ctx ctx;
    std::string result_text;
    int result_code = 0;

    auto add_common = [&](CLI::App* sub, bool file_required = true) {
        auto* fopt = sub->add_option("file", ctx.file, "configuration file (JSON)");
        if (file_required) fopt->required();
        sub->add_option("--selection", ctx.selection,
                        "override the selection set (comma-separated component ids)");
        sub->add_option("--output", ctx.output, "write the result to a file instead of stdout");
        return sub;
    };

    auto simple = [&](const std::string& name, const std::string& desc, auto body) {
        CLI::App* sub = add_common(app.add_subcommand(name, desc));
        sub->callback([&, body]() { result_text = body(); });
        return sub;
    };

    simple("validate", "check a configuration and list violations", [&]() {
        auto violations = validate(load(ctx).config);
        if (violations.empty()) return std::string("VALID\n");
        std::string text;
        for (const auto& v : violations) text += "violation: " + v + "\n";
        result_code = 1;
        return text;
    });

    simple("zeta", "print the zeta series of the configuration",
           [&]() { return format_series(compute_zeta(load(ctx).config)) + "\n"; });

    simple("micc", "print the infinite cyclic cover class",
           [&]() { return compute_micc(load(ctx).config).str() + "\n"; });

    simple("limit", "print the T -> infinity limit of the zeta series",
           [&]() { return series_limit(compute_zeta(load(ctx).config)).str() + "\n"; });

    simple("naive", "print the naive zeta series",
           [&]() { return format_series(compute_naive(load(ctx).config)) + "\n"; });

    simple("hodge", "print the Hodge realization of the naive series", [&]() {
        ConfigDocument doc = load(ctx);
        return format_hodge_series(hodge_zeta(doc.config, doc.hodge_table)) + "\n";
    });

    simple("topzeta", "print the topological zeta function in s", [&]() {
        ConfigDocument doc = load(ctx);
        return topological_zeta(doc.config, doc.chi_table).str() + "\n";
    });

    CLI::App* twisted = add_common(
        app.add_subcommand("twisted", "print the twisted topological zeta function in s"));
    twisted->add_option("--order", ctx.order, "order e >= 1 of the twisting character")->required();
    twisted->callback([&]() {
        ConfigDocument doc = load(ctx);
        result_text = twisted_topological_zeta(doc.config, ctx.order, doc.chi_table).str() + "\n";
    });

    simple("stringy", "print the stringy residue at T = uv", [&]() {
        ConfigDocument doc = load(ctx);
        return stringy_residue(doc.config, doc.hodge_table).str() + "\n";
    });

    simple("poles", "print candidate poles (nu,m) after free-ring cancellation", [&]() {
        auto cands = pole_candidates(compute_zeta(load(ctx).config));
        if (cands.empty()) return std::string("none\n");
        std::string text;
        for (const auto& f : cands)
            text += "(" + std::to_string(f.nu) + "," + std::to_string(f.m) + ")\n";
        return text;
    });

    simple("blowup", "apply the file's blow-up script and print the result", [&]() {
        ConfigDocument doc = load(ctx);
        ConfigDocument result;
        result.config = apply_script(doc.config, doc.blowups);
        result.hodge_table = doc.hodge_table;
        result.chi_table = doc.chi_table;
        return format_config(result);
    });

    CLI::App* verify = add_common(
        app.add_subcommand("verify", "check zeta invariance under the blow-up script"), false);
    verify->add_option("--random", ctx.random_n, "run N random (configuration, blow-up) cases");
    verify->add_option("--seed", ctx.seed, "seed for the random campaign");
    verify->callback([&]() {
        std::ostringstream text;
        if (ctx.random_n > 0) {
            text << "CAMPAIGN: cases=" << ctx.random_n << " seed=" << ctx.seed << "\n";
            RandomCampaign campaign(ctx.seed);
            bool all_equal = true;
            bool all_detected = true;
            for (int i = 0; i < ctx.random_n && all_equal && all_detected; ++i) {
                auto c = campaign.random_case();
                InvarianceReport report = verify_invariance(c.config, c.spec);
                if (!report.equal) {
                    text << "INVARIANT: not equal (case " << i << ")\n"
                         << format_series(report.witness) << "\n";
                    all_equal = false;
                    break;
                }
                DivisorConfiguration corrupted = apply_blowup(c.config, c.spec);
                for (auto& comp : corrupted.components)
                    if (comp.id == c.spec.new_id) comp.nu += 1;
                if (series_equal(compute_zeta(c.config), compute_zeta(corrupted)) &&
                    series_equal(compute_naive(c.config), compute_naive(corrupted))) {
                    text << "NEGATIVE-CONTROL: missed (case " << i << ")\n";
                    all_detected = false;
                }
            }
            if (all_equal && all_detected)
                text << "INVARIANT: equal\nNEGATIVE-CONTROL: detected\n";
            else
                result_code = 1;
        } else {
            if (ctx.file.empty())
                throw ParseError("verify requires a configuration file or --random N");
            ConfigDocument doc = load(ctx);
            if (doc.blowups.empty())
                throw DomainError("configuration carries no blow-up script to verify");
            DivisorConfiguration current = doc.config;
            bool ok = true;
            for (size_t i = 0; i < doc.blowups.size(); ++i) {
                InvarianceReport report = verify_invariance(current, doc.blowups[i]);
                if (!report.equal) {
                    text << "INVARIANT: not equal (step " << i << ")\n"
                         << format_series(report.witness) << "\n";
                    ok = false;
                    result_code = 1;
                    break;
                }
                current = apply_blowup(current, doc.blowups[i]);
            }
            if (ok) text << "INVARIANT: equal\n";
        }
        result_text = text.str();
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "parse error: ";
        if (!e.where().empty()) err << e.where() << ": ";
        err << e.what();
        if (!e.where().empty() && e.offset() >= 0) err << " (column " << e.offset() + 1 << ")";
        err << "\n";
        return 2;
    } catch (const SchemaError& e) {
        err << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    if (!ctx.output.empty()) {
        std::ofstream f(ctx.output, std::ios::binary);
        if (!f) {
            err << "error: cannot write to '" << ctx.output << "'\n";
            return 1;
        }
        f << result_text;
    } else {
        out << result_text;
    }
    return result_code;
}

} // namespace mzeta
