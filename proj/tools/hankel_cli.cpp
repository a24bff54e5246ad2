// Command-line front end: sequence generation, transforms, Hankel and
// closed-form evaluation, and identity verification over parameter grids.
// File I/O uses the OEIS b-file convention plus CSV and JSON renderings;
// all values are exact rationals, serialized canonically.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hankel/bfile.hpp"
#include "hankel/catalan.hpp"
#include "hankel/closed_forms.hpp"
#include "hankel/errors.hpp"
#include "hankel/hankel_det.hpp"
#include "hankel/rational.hpp"
#include "hankel/reversion.hpp"
#include "hankel/sequence.hpp"
#include "hankel/transforms.hpp"
#include "hankel/verify.hpp"

namespace {

using namespace hankel;

enum class Command { gen, transform, hankel_tf, closed, verify, table };

struct RunConfig {
    Command command = Command::gen;
    std::optional<Params> params;
    std::size_t n_max = 6;
    std::string input_path;
    OutputFormat output_format = OutputFormat::bfile;
    std::uint64_t seed = 42;
    std::vector<Params> grid;
};

// Flag beats HANKEL_FORMAT beats the bfile default.
OutputFormat resolve_format(const std::string& flag_value) {
    if (!flag_value.empty())
        return parse_format(flag_value);
    if (const char* env = std::getenv("HANKEL_FORMAT"))
        return parse_format(env);
    return OutputFormat::bfile;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<Params> read_grid_file(const std::string& path) {
    std::vector<Params> grid;
    std::istringstream in(read_file(path));
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos || line[begin] == '#')
            continue;
        std::istringstream fields(line);
        std::string a, b, extra;
        if (!(fields >> a >> b) || (fields >> extra))
            throw ParseError("grid file line " + std::to_string(line_no) +
                             ": expected 'alpha beta'");
        grid.push_back(Params{Rat::parse(a), Rat::parse(b)});
    }
    return grid;
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        out.push_back(item);
    return out;
}

OffsetList parse_rows(const std::string& text) {
    OffsetList rows;
    for (const std::string& tok : split_commas(text)) {
        const Rat r = Rat::parse(tok);
        if (!r.is_integer() || r.sign() < 0)
            throw ConfigError("--rows entries must be non-negative integers");
        rows.push_back(static_cast<std::size_t>(r.numerator().get_ui()));
    }
    return rows;
}

int cmd_gen(const RunConfig& cfg, std::size_t len) {
    std::cout << emit(u_sequence(*cfg.params, len), cfg.output_format);
    return 0;
}

int cmd_transform(const RunConfig& cfg, const std::string& op,
                  const std::optional<Rat>& alpha,
                  const std::optional<Rat>& r, std::size_t k) {
    const Seq in = parse_bfile(read_file(cfg.input_path));
    Seq out;
    if (op == "binomial") {
        if (!alpha)
            throw ConfigError("transform --op binomial needs --alpha");
        out = binomial_transform(in, *alpha);
    } else if (op == "aerate") {
        out = aerate(in);
    } else if (op == "aerate-alpha") {
        if (!alpha)
            throw ConfigError("transform --op aerate-alpha needs --alpha");
        out = aerate_alpha(in, *alpha);
    } else if (op == "scale") {
        if (!r)
            throw ConfigError("transform --op scale needs --r");
        out = scale_pointwise(in, *r);
    } else if (op == "shift") {
        out = shift(in, k);
    } else {
        throw ConfigError("unknown transform op '" + op + "'");
    }
    std::cout << emit(out, cfg.output_format);
    return 0;
}

int cmd_hankel(const RunConfig& cfg) {
    const Seq in = parse_bfile(read_file(cfg.input_path));
    if (in.empty())
        throw ConfigError("hankel: input sequence is empty");
    std::cout << emit(hankel_transform(in), cfg.output_format);
    return 0;
}

int cmd_closed(const RunConfig& cfg, const std::string& target,
               const std::optional<Rat>& beta, const std::string& rows_text,
               std::size_t k, std::size_t l) {
    if (target == "krattenthaler") {
        std::cout << krattenthaler_det(parse_rows(rows_text)).str() << "\n";
        return 0;
    }
    if (target == "lem72" || target == "lem73") {
        if (!beta)
            throw ConfigError("closed --target " + target + " needs --beta");
        const Rat v =
            chi_shifted_closed(*beta, k, l, target == "lem72" ? 1 : 0);
        std::cout << v.str() << "\n";
        return 0;
    }
    if (!cfg.params)
        throw ConfigError("closed --target " + target +
                          " needs --alpha and --beta");
    Seq out;
    for (std::size_t n = 0; n <= cfg.n_max; ++n) {
        Rat v;
        if (target == "h")
            v = h_closed(*cfg.params, n);
        else if (target == "hstar")
            v = hstar_closed(*cfg.params, n);
        else if (target == "hstarstar")
            v = hstarstar_closed(*cfg.params, n);
        else if (target == "hhat")
            v = hhat_closed(*cfg.params, n);
        else if (target == "hcheck")
            v = hcheck_closed(*cfg.params, n);
        else
            throw ConfigError("unknown closed target '" + target + "'");
        out.values.push_back(v);
    }
    std::cout << emit(out, cfg.output_format);
    return 0;
}

int cmd_verify(const RunConfig& cfg, bool default_grid_flag,
               const std::string& grid_path, const std::string& only_text,
               bool force, bool thm22_literal) {
    VerifyConfig vc;
    vc.n_max = cfg.n_max;
    vc.seed = cfg.seed;
    vc.force = force;
    vc.thm22_literal = thm22_literal;
    if (default_grid_flag == !grid_path.empty())
        throw ConfigError("verify: pass exactly one of --default-grid or "
                          "--grid FILE");
    vc.grid = default_grid_flag ? default_grid(vc.n_max)
                                : read_grid_file(grid_path);
    if (!only_text.empty())
        vc.only = split_commas(only_text);
    const auto reports = run_verify(vc);
    std::cout << format_reports(reports);
    return all_pass(reports) ? 0 : 1;
}

// One row per n: the brute-force determinant next to the closed form.
int cmd_table(const RunConfig& cfg, const std::string& target) {
    const Params& p = *cfg.params;
    std::vector<Rat> brute, closed;
    for (std::size_t n = 0; n <= cfg.n_max; ++n) {
        Rat b, c;
        if (target == "h" || target == "hstar" || target == "hstarstar") {
            const std::size_t sh =
                target == "h" ? 0 : (target == "hstar" ? 1 : 2);
            const Seq u = u_sequence(p, 2 * n + 1 + sh);
            b = det_exact(hankel_matrix(shift(u, sh), n));
            c = target == "h" ? h_closed(p, n)
                              : (target == "hstar" ? hstar_closed(p, n)
                                                   : hstarstar_closed(p, n));
        } else if (target == "hhat" || target == "hcheck") {
            const std::size_t sh = target == "hhat" ? 0 : 1;
            Seq lin;
            for (std::size_t m = 0; m <= 2 * n; ++m)
                lin.values.push_back(p.alpha * p.alpha * catalan(m + sh) -
                                     p.beta * catalan(m + sh + 1));
            b = det_exact(hankel_matrix(lin, n));
            c = target == "hhat" ? hhat_closed(p, n) : hcheck_closed(p, n);
        } else {
            throw ConfigError("unknown table target '" + target + "'");
        }
        brute.push_back(b);
        closed.push_back(c);
    }

    if (cfg.output_format == OutputFormat::json) {
        nlohmann::json arr = nlohmann::json::array();
        for (std::size_t n = 0; n <= cfg.n_max; ++n)
            arr.push_back({{"n", n},
                           {"brute", brute[n].str()},
                           {"closed", closed[n].str()},
                           {"match", brute[n] == closed[n]}});
        std::cout << arr.dump() << "\n";
    } else {
        std::cout << "n,brute,closed,match\n";
        for (std::size_t n = 0; n <= cfg.n_max; ++n)
            std::cout << n << "," << brute[n].str() << ","
                      << closed[n].str() << ","
                      << (brute[n] == closed[n] ? "true" : "false") << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hankel transform toolkit for integer sequences"};
    app.require_subcommand(1);

    std::string alpha_text, beta_text, r_text, format_text;
    std::string op, target, rows_text, grid_path, only_text, input_path;
    std::size_t len = 10, k = 0, l = 0, n_max = 6;
    std::uint64_t seed = 42;
    bool default_grid_flag = false, force = false, thm22_literal = false;

    auto* gen = app.add_subcommand("gen",
        "Generate the series reversion of x/(1+alpha x+beta x^2)");
    gen->add_option("--alpha", alpha_text)->required();
    gen->add_option("--beta", beta_text)->required();
    gen->add_option("--len", len, "number of terms")->required();
    gen->add_option("--format", format_text, "bfile|csv|json");

    auto* tr = app.add_subcommand("transform", "Apply a sequence transform");
    tr->add_option("--op", op, "binomial|aerate|aerate-alpha|scale|shift")
        ->required();
    tr->add_option("--in", input_path, "input b-file")->required();
    tr->add_option("--alpha", alpha_text);
    tr->add_option("--r", r_text);
    tr->add_option("--k", k);
    tr->add_option("--format", format_text, "bfile|csv|json");

    auto* hk = app.add_subcommand("hankel",
        "Hankel transform of a sequence read from a b-file");
    hk->add_option("--in", input_path, "input b-file")->required();
    hk->add_option("--format", format_text, "bfile|csv|json");

    auto* cl = app.add_subcommand("closed", "Closed-form evaluations");
    cl->add_option("--target", target,
                   "h|hstar|hstarstar|hhat|hcheck|krattenthaler|lem72|lem73")
        ->required();
    cl->add_option("--alpha", alpha_text);
    cl->add_option("--beta", beta_text);
    cl->add_option("--nmax", n_max);
    cl->add_option("--rows", rows_text, "offsets, e.g. 0,2,5");
    cl->add_option("--k", k);
    cl->add_option("--l", l);
    cl->add_option("--format", format_text, "bfile|csv|json");

    auto* vf = app.add_subcommand("verify",
        "Check every identity over a parameter grid");
    vf->add_flag("--default-grid", default_grid_flag,
                 "degree-exceeding built-in grid");
    vf->add_option("--grid", grid_path, "grid file: 'alpha beta' per line");
    vf->add_option("--nmax", n_max, "largest Hankel index (default 6)");
    vf->add_option("--seed", seed, "seed for the random corpus");
    vf->add_option("--only", only_text, "comma-separated identity ids");
    vf->add_flag("--force", force, "allow n_max > 8");
    vf->add_flag("--thm22-literal", thm22_literal,
                 "assert the rival doubled normalization instead; "
                 "documents why it is rejected (fails at n=0)");

    auto* tb = app.add_subcommand("table",
        "Brute-force vs closed-form table for one target");
    tb->add_option("--alpha", alpha_text)->required();
    tb->add_option("--beta", beta_text)->required();
    tb->add_option("--target", target, "h|hstar|hstarstar|hhat|hcheck")
        ->required();
    tb->add_option("--nmax", n_max);
    tb->add_option("--format", format_text, "csv|json");

    try {
        app.parse(argc, argv);

        RunConfig cfg;
        cfg.n_max = n_max;
        cfg.seed = seed;
        cfg.input_path = input_path;
        cfg.output_format = resolve_format(format_text);

        std::optional<Rat> alpha_opt, beta_opt, r_opt;
        if (!alpha_text.empty())
            alpha_opt = Rat::parse(alpha_text);
        if (!beta_text.empty())
            beta_opt = Rat::parse(beta_text);
        if (!r_text.empty())
            r_opt = Rat::parse(r_text);
        if (alpha_opt && beta_opt)
            cfg.params = Params{*alpha_opt, *beta_opt};

        if (gen->parsed()) {
            cfg.command = Command::gen;
            return cmd_gen(cfg, len);
        }
        if (tr->parsed()) {
            cfg.command = Command::transform;
            return cmd_transform(cfg, op, alpha_opt, r_opt, k);
        }
        if (hk->parsed()) {
            cfg.command = Command::hankel_tf;
            return cmd_hankel(cfg);
        }
        if (cl->parsed()) {
            cfg.command = Command::closed;
            return cmd_closed(cfg, target, beta_opt, rows_text, k, l);
        }
        if (vf->parsed()) {
            cfg.command = Command::verify;
            return cmd_verify(cfg, default_grid_flag, grid_path, only_text,
                              force, thm22_literal);
        }
        cfg.command = Command::table;
        if (cfg.output_format == OutputFormat::bfile)
            cfg.output_format = OutputFormat::csv; // table has no b-file form
        return cmd_table(cfg, target);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success))
            return app.exit(e);
        app.exit(e);
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
