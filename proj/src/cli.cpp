#include "sheafbetti/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "sheafbetti/errors.hpp"

namespace sheafbetti {

namespace {

constexpr const char* kCapEnv = "SHEAFBETTI_HILB_CAP";

std::string_view command_name(Command c) {
    switch (c) {
        case Command::Check: return "check";
        case Command::Betti: return "betti";
        case Command::Hilb: return "hilb";
        case Command::SParam: return "s-param";
        case Command::Audit: return "audit";
        case Command::Table: return "table";
    }
    return "check";
}

std::string_view format_name(OutputFormat f) {
    switch (f) {
        case OutputFormat::Text: return "text";
        case OutputFormat::Json: return "json";
        case OutputFormat::Csv: return "csv";
        case OutputFormat::Latex: return "latex";
    }
    return "text";
}

OutputFormat parse_format(const std::string& s) {
    if (s == "text") return OutputFormat::Text;
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "latex") return OutputFormat::Latex;
    throw DomainError("unknown format '" + s + "' (expected text, json, csv or latex)");
}

std::int64_t parse_int(std::string_view token) {
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
        throw DomainError("cannot parse integer '" + std::string(token) + "'");
    }
    return v;
}

std::size_t cap_from_env() {
    if (const char* env = std::getenv(kCapEnv); env && *env) {
        const auto v = parse_int(env);
        if (v < 0) throw DomainError(std::string(kCapEnv) + " must be nonnegative");
        return static_cast<std::size_t>(v);
    }
    return kDefaultHilbCap;
}

std::string csv_cell(const Json& cell) {
    if (cell.is_null()) return {};
    if (cell.is_string()) {
        const auto s = cell.get<std::string>();
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string quoted = "\"";
        for (char c : s) {
            if (c == '"') quoted += '"';
            quoted += c;
        }
        return quoted + "\"";
    }
    return cell.dump();
}

std::string latex_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '_' || c == '&' || c == '%' || c == '#' || c == '$') out += '\\';
        out += c;
    }
    return out;
}

Json sparam_json(const SParam& p) {
    Json j;
    j["value"] = p.value ? Json(*p.value) : Json("infinite");
    j["witness"] = p.witness ? Json(p.witness->to_string()) : Json(nullptr);
    return j;
}

template <typename T>
Json optional_json(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

Json input_json(const Surface& s, const DivisorClass& l, std::optional<std::int64_t> chi) {
    Json j;
    j["surface"] = s.id();
    j["L"] = l.to_string();
    j["chi"] = optional_json(chi);
    return j;
}

Json degree_pairs(const std::map<std::int64_t, BigInt>& m) {
    Json arr = Json::array();
    for (const auto& [deg, v] : m) arr.push_back(Json::array({deg, to_json(v)}));
    return arr;
}

Json hodge_diagonal(const std::map<std::int64_t, BigInt>& m) {
    Json arr = Json::array();
    for (const auto& [deg, v] : m) {
        if (deg % 2 == 0) arr.push_back(Json::array({deg / 2, deg / 2, to_json(v)}));
    }
    return arr;
}

std::string join_values(const std::map<std::int64_t, BigInt>& m) {
    std::string out;
    for (const auto& [deg, v] : m) {
        if (!out.empty()) out += ',';
        out += v.str();
    }
    return out;
}

DivisorClass require_divisor(const RunConfig& c) {
    if (!c.divisor) throw DomainError(std::string(command_name(c.command)) + " needs --L");
    return DivisorClass::parse(*c.divisor);
}

std::int64_t require_chi(const RunConfig& c) {
    if (!c.chi) throw DomainError(std::string(command_name(c.command)) + " needs --chi");
    return *c.chi;
}

std::string render_kv(const Json& j, const std::string& prefix = {}) {
    std::string out;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const auto key = prefix.empty() ? it.key() : prefix + "." + it.key();
        if (it->is_object()) {
            out += render_kv(*it, key);
        } else {
            out += key + ": " + (it->is_string() ? it->get<std::string>() : it->dump()) + "\n";
        }
    }
    return out;
}

// ---- subcommands ----

RunResult run_check(const RunConfig& c) {
    const auto s = Surface::parse(c.surface);
    const auto l = require_divisor(c);
    const auto report = check_hypotheses(s, l, c.chi);
    RunResult r;
    const auto j = to_json(report);
    switch (c.format) {
        case OutputFormat::Json: r.document = j.dump(2) + "\n"; break;
        case OutputFormat::Csv: {
            Table t{{"key", "value"}, {}};
            std::istringstream lines(render_kv(j));
            for (std::string line; std::getline(lines, line);) {
                const auto colon = line.find(": ");
                t.rows.push_back({line.substr(0, colon), line.substr(colon + 2)});
            }
            r.document = emit_table(t, OutputFormat::Csv);
            break;
        }
        default: r.document = render_kv(j); break;
    }
    r.exit_code = report.main_formula_applicable ? kExitOk : kExitInapplicable;
    return r;
}

std::string betti_latex(const VirtualBettiReport& rep) {
    std::ostringstream out;
    std::vector<std::pair<std::int64_t, std::string>> cols;
    for (const auto& [deg, v] : rep.reflected_low)
        if (deg % 2 == 0) cols.emplace_back(deg, v.str());
    out << "% " << rep.surface.display_name() << ", L = (" << rep.l.to_string() << "), chi = " << rep.chi
        << "; reflected Betti numbers in degrees 0.." << rep.reflected_max_degree()
        << ", odd degrees vanish, h^{p,q} = b_{p+q} delta_{p,q}\n";
    out << "\\begin{tabular}{l|" << std::string(cols.size(), 'c') << "}\n";
    out << "$i$";
    for (const auto& [deg, v] : cols) out << " & " << deg;
    out << " \\\\\n\\hline\n$b_i$";
    for (const auto& [deg, v] : cols) out << " & " << v;
    out << " \\\\\n\\end{tabular}\n";
    return out.str();
}

RunResult run_betti(const RunConfig& c) {
    const auto s = Surface::parse(c.surface);
    const auto l = require_divisor(c);
    const auto chi = require_chi(c);
    HilbCache cache(c.cap);
    const auto rep = virtual_betti(s, l, chi, &cache);
    RunResult r;
    switch (c.format) {
        case OutputFormat::Json: r.document = to_json(rep).dump(2) + "\n"; break;
        case OutputFormat::Csv: {
            Table t{{"presentation", "degree", "value"}, {}};
            for (const auto& [deg, v] : rep.reflected_low) t.rows.push_back({"reflected_low", deg, to_json(v)});
            for (const auto& [deg, v] : rep.raw_high) t.rows.push_back({"raw_high", deg, to_json(v)});
            r.document = emit_table(t, OutputFormat::Csv);
            break;
        }
        case OutputFormat::Latex: r.document = betti_latex(rep); break;
        case OutputFormat::Text: {
            std::ostringstream out;
            out << "surface: " << s.display_name() << "\nL: (" << l.to_string() << ")\nchi: " << chi << "\n";
            out << "chi0: " << rep.normalization.chi0 << " (modulus " << rep.normalization.modulus << ", window "
                << rep.normalization.window_value << ")\n";
            out << "dtilde: " << rep.shift.dtilde << "\nshift_m: " << rep.shift.shift_m << "\n";
            out << "valid degrees: " << rep.shift.valid_degree_min << ".." << rep.shift.top_degree
                << " (below: uncontrolled)\n";
            out << "raw_high: " << join_values(rep.raw_high) << "\n";
            out << "reflected_low[0.." << rep.reflected_max_degree() << "]: " << join_values(rep.reflected_low)
                << "\n";
            out << "fine_moduli: "
                << (rep.flags.fine_moduli ? (*rep.flags.fine_moduli ? "true" : "false") : "not_applicable") << "\n";
            out << "virtual_only: " << (rep.flags.virtual_only ? "true" : "false") << "\n";
            out << "strictly_semistable_note: " << (rep.flags.strictly_semistable_note ? "true" : "false") << "\n";
            r.document = out.str();
            break;
        }
    }
    return r;
}

RunResult run_hilb(const RunConfig& c) {
    const auto s = Surface::parse(c.surface);
    if (!c.n || *c.n < 0) throw DomainError("hilb needs --n >= 0");
    const auto n = static_cast<std::size_t>(*c.n);
    const auto p = hilb_poincare(s, n, c.cap);
    const auto euler = hilb_euler(s, n, c.cap);
    if (euler != p.value_at_one()) throw InvariantViolation("hilb: Euler number disagrees with Poincare polynomial");
    RunResult r;
    switch (c.format) {
        case OutputFormat::Json: {
            Json j;
            j["surface"] = s.id();
            j["n"] = n;
            j["dim"] = p.dim;
            Json b = Json::array();
            for (const auto& v : p.coeffs) b.push_back(to_json(v));
            j["betti"] = b;
            j["euler"] = to_json(euler);
            r.document = j.dump(2) + "\n";
            break;
        }
        case OutputFormat::Csv: {
            Table t{{"degree", "betti"}, {}};
            for (std::size_t i = 0; i < p.coeffs.size(); ++i) t.rows.push_back({i, to_json(p.coeffs[i])});
            r.document = emit_table(t, OutputFormat::Csv);
            break;
        }
        case OutputFormat::Latex: {
            Table t{{"i", "b_i"}, {}};
            for (std::size_t i = 0; i < p.coeffs.size(); i += 2) t.rows.push_back({i, to_json(p.coeffs[i])});
            r.document = emit_table(t, OutputFormat::Latex);
            break;
        }
        case OutputFormat::Text: r.document = p.to_string() + "\n"; break;
    }
    return r;
}

RunResult run_sparam(const RunConfig& c) {
    const auto s = Surface::parse(c.surface);
    const auto l = require_divisor(c);
    const auto full = s_param(s, l);
    const auto restricted = s_param_restricted(s, l);
    RunResult r;
    Json j;
    j["input"] = input_json(s, l, std::nullopt);
    j["s_L"] = sparam_json(full);
    j["restricted"] = sparam_json(restricted);
    switch (c.format) {
        case OutputFormat::Json: r.document = j.dump(2) + "\n"; break;
        case OutputFormat::Csv: {
            Table t{{"surface", "L", "s_L", "witness", "restricted", "restricted_witness"}, {}};
            t.rows.push_back({s.id(), l.to_string(), j["s_L"]["value"], j["s_L"]["witness"],
                              j["restricted"]["value"], j["restricted"]["witness"]});
            r.document = emit_table(t, OutputFormat::Csv);
            break;
        }
        default: {
            std::ostringstream out;
            out << full.to_string() << "\n";
            out << "witness: " << (full.witness ? full.witness->to_string() : "none") << "\n";
            out << "restricted: " << restricted.to_string() << "\n";
            out << "restricted_witness: " << (restricted.witness ? restricted.witness->to_string() : "none") << "\n";
            r.document = out.str();
            break;
        }
    }
    return r;
}

Table bounds_table(const BoundReport& rep) {
    Table t{{"name", "applicable", "value", "formula", "note"}, {}};
    for (const auto& e : rep.entries) t.rows.push_back({e.name, e.applicable, e.value, e.formula, e.note});
    return t;
}

RunResult run_audit(const RunConfig& c) {
    const auto s = Surface::parse(c.surface);
    const auto l = require_divisor(c);
    const auto chi = c.chi.value_or(0);
    const bool ok = audit_codimension(s, l, chi);
    const auto rep = strata_bounds(s, l, chi);

    std::optional<BoundReport> hilb;
    if (c.chi) {
        HypothesisReport hyp;
        if (main_applicable(s, l, &hyp)) {
            const auto norm = normalize_chi(s, l, *c.chi, *hyp.rho);
            hilb = hilb_strata_bounds(s, l, norm.chi0, *hyp.rho);
        }
    }

    RunResult r;
    switch (c.format) {
        case OutputFormat::Json: {
            Json j;
            j["input"] = input_json(s, l, c.chi);
            j["strata"] = to_json(rep);
            j["hilb"] = hilb ? to_json(*hilb) : Json(nullptr);
            j["audit"] = ok;
            r.document = j.dump(2) + "\n";
            break;
        }
        case OutputFormat::Csv:
        case OutputFormat::Latex: r.document = emit_table(bounds_table(rep), c.format); break;
        case OutputFormat::Text: {
            std::ostringstream out;
            out << "L^2 = " << rep.stack_dim << ", rho = " << optional_json(rep.rho).dump()
                << ", claimed bound L^2 - rho = " << optional_json(rep.claimed).dump() << "\n";
            out << emit_table(bounds_table(rep), OutputFormat::Text);
            if (hilb) {
                out << "\nHilbert scheme side:\n" << emit_table(bounds_table(*hilb), OutputFormat::Text);
            }
            out << "audit: " << (ok ? "pass" : "FAIL") << "\n";
            r.document = out.str();
            break;
        }
    }
    if (!ok) {
        r.exit_code = kExitInternal;
        r.diagnostics = "audit failed: an applicable bound exceeds L^2 - rho\n";
    }
    return r;
}

RunResult run_table(const RunConfig& c) {
    const auto s = Surface::parse(c.surface);
    std::vector<DivisorClass> classes;
    if (s.kind() == SurfaceKind::ProjectivePlane) {
        for (auto d : c.grid_first) classes.push_back(DivisorClass{d});
    } else {
        for (auto a : c.grid_first)
            for (auto b : c.grid_second) classes.push_back(DivisorClass{a, b});
    }
    RunResult r;
    r.document = emit_table(betti_grid(s, classes, c.grid_chi, c.max_degree, c.cap), c.format);
    return r;
}

}  // namespace

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    if (text.empty()) return out;
    std::string_view rest(text);
    while (true) {
        const auto comma = rest.find(',');
        const auto token = rest.substr(0, comma);
        // A range separator is ".." not preceded by the start of the token.
        if (const auto dots = token.find(".."); dots != std::string_view::npos) {
            const auto lo = parse_int(token.substr(0, dots));
            const auto hi = parse_int(token.substr(dots + 2));
            if (hi < lo) throw DomainError("empty range '" + std::string(token) + "'");
            for (auto v = lo; v <= hi; ++v) out.push_back(v);
        } else {
            out.push_back(parse_int(token));
        }
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return out;
}

std::string format_int_list(const std::vector<std::int64_t>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

RunConfig parse_config(const std::vector<std::string>& args, std::string* help_out) {
    RunConfig cfg;
    cfg.cap = cap_from_env();

    CLI::App app{"Virtual Betti numbers of moduli of one-dimensional sheaves on P^2 and F_0, F_1", "sheafbetti"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string d_range, a_range, b_range, chi_list;
    std::int64_t chi_value = 0, n_value = 0;
    std::string divisor;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--surface", cfg.surface, "p2, f0 or f1")->capture_default_str();
        sub->add_option("--format", format, "text, json, csv or latex")->capture_default_str();
        sub->add_option("--cap", cfg.cap, std::string("largest Hilbert scheme order (env ") + kCapEnv + ")");
    };

    auto* check = app.add_subcommand("check", "hypothesis report for L (and chi)");
    auto* betti = app.add_subcommand("betti", "virtual Betti/Hodge table of M^ss(L, chi)");
    auto* hilb = app.add_subcommand("hilb", "Betti numbers of Hilb^[n]");
    auto* sparam = app.add_subcommand("s-param", "the decomposition minimum s_L");
    auto* audit = app.add_subcommand("audit", "dimension bounds versus the claimed codimension");
    auto* table = app.add_subcommand("table", "grid of reflected Betti numbers over (L, chi)");
    for (auto* sub : {check, betti, hilb, sparam, audit, table}) add_common(sub);

    CLI::Option* chi_opts[3] = {};
    check->add_option("--L", divisor, "divisor class: d or a,b")->required();
    chi_opts[0] = check->add_option("--chi", chi_value, "Euler characteristic");
    betti->add_option("--L", divisor, "divisor class: d or a,b")->required();
    chi_opts[1] = betti->add_option("--chi", chi_value, "Euler characteristic")->required();
    hilb->add_option("--n", n_value, "number of points")->required();
    sparam->add_option("--L", divisor, "divisor class: d or a,b")->required();
    audit->add_option("--L", divisor, "divisor class: d or a,b")->required();
    chi_opts[2] = audit->add_option("--chi", chi_value, "Euler characteristic");
    table->add_option("--d", d_range, "degrees on P^2, e.g. 8..11");
    table->add_option("--a", a_range, "sigma coefficients on F_e");
    table->add_option("--b", b_range, "fiber coefficients on F_e");
    table->add_option("--chi", chi_list, "chi values, e.g. -1,-3,-7")->required();
    table->add_option("--degrees", cfg.max_degree, "largest reflected degree column")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        if (help_out) *help_out = app.help();
        throw;
    } catch (const CLI::ParseError& e) {
        throw DomainError(e.what());
    }

    cfg.format = parse_format(format);
    if (check->parsed()) cfg.command = Command::Check;
    if (betti->parsed()) cfg.command = Command::Betti;
    if (hilb->parsed()) cfg.command = Command::Hilb;
    if (sparam->parsed()) cfg.command = Command::SParam;
    if (audit->parsed()) cfg.command = Command::Audit;
    if (table->parsed()) cfg.command = Command::Table;

    Surface::parse(cfg.surface);
    if (!divisor.empty()) {
        DivisorClass::parse(divisor);
        cfg.divisor = divisor;
    }
    for (auto* opt : chi_opts)
        if (opt && opt->count() > 0) cfg.chi = chi_value;
    if (cfg.command == Command::Hilb) cfg.n = n_value;
    if (cfg.command == Command::Table) {
        cfg.grid_chi = parse_int_list(chi_list);
        if (cfg.surface == "p2") {
            if (!a_range.empty() || !b_range.empty()) throw DomainError("table on p2 takes --d, not --a/--b");
            cfg.grid_first = parse_int_list(d_range);
        } else {
            if (!d_range.empty()) throw DomainError("table on F_e takes --a and --b, not --d");
            cfg.grid_first = parse_int_list(a_range);
            cfg.grid_second = parse_int_list(b_range);
        }
    }
    return cfg;
}

std::vector<std::string> to_args(const RunConfig& c) {
    std::vector<std::string> out{std::string(command_name(c.command)), "--surface", c.surface};
    if (c.divisor) out.insert(out.end(), {"--L", *c.divisor});
    if (c.chi && c.command != Command::Table) out.insert(out.end(), {"--chi", std::to_string(*c.chi)});
    if (c.n) out.insert(out.end(), {"--n", std::to_string(*c.n)});
    out.insert(out.end(), {"--format", std::string(format_name(c.format)), "--cap", std::to_string(c.cap)});
    if (c.command == Command::Table) {
        if (c.surface == "p2") {
            out.insert(out.end(), {"--d", format_int_list(c.grid_first)});
        } else {
            out.insert(out.end(), {"--a", format_int_list(c.grid_first), "--b", format_int_list(c.grid_second)});
        }
        out.insert(out.end(), {"--chi", format_int_list(c.grid_chi), "--degrees", std::to_string(c.max_degree)});
    }
    return out;
}

RunResult run(const RunConfig& config) {
    switch (config.command) {
        case Command::Check: return run_check(config);
        case Command::Betti: return run_betti(config);
        case Command::Hilb: return run_hilb(config);
        case Command::SParam: return run_sparam(config);
        case Command::Audit: return run_audit(config);
        case Command::Table: return run_table(config);
    }
    return {};
}

RunResult run_command_line(const std::vector<std::string>& args) {
    RunConfig config;
    std::string help;
    try {
        config = parse_config(args, &help);
    } catch (const CLI::CallForHelp&) {
        return {help, {}, kExitOk};
    } catch (const std::exception& e) {
        return {{}, std::string("error: ") + e.what() + "\n", kExitParseError};
    }
    try {
        return run(config);
    } catch (const InapplicableError& e) {
        return {{}, std::string("inapplicable (") + e.failed_check() + "): " + e.what() + "\n", kExitInapplicable};
    } catch (const DomainError& e) {
        return {{}, std::string("error: ") + e.what() + "\n", kExitParseError};
    } catch (const std::exception& e) {
        return {{}, std::string("internal error: ") + e.what() + "\n", kExitInternal};
    }
}

std::string emit_table(const Table& table, OutputFormat format) {
    std::ostringstream out;
    switch (format) {
        case OutputFormat::Csv: {
            for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << csv_cell(table.columns[i]);
            out << "\n";
            for (const auto& row : table.rows) {
                for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
                out << "\n";
            }
            break;
        }
        case OutputFormat::Json: {
            Json j;
            j["columns"] = table.columns;
            j["rows"] = Json::array();
            for (const auto& row : table.rows) j["rows"].push_back(Json(row));
            out << j.dump(2) << "\n";
            break;
        }
        case OutputFormat::Latex: {
            out << "\\begin{tabular}{" << std::string(table.columns.size(), 'r') << "}\n";
            for (std::size_t i = 0; i < table.columns.size(); ++i)
                out << (i ? " & " : "") << latex_escape(table.columns[i]);
            out << " \\\\\n\\hline\n";
            for (const auto& row : table.rows) {
                for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " & " : "") << latex_escape(csv_cell(row[i]));
                out << " \\\\\n";
            }
            out << "\\end{tabular}\n";
            break;
        }
        case OutputFormat::Text: {
            std::vector<std::size_t> width(table.columns.size());
            for (std::size_t i = 0; i < width.size(); ++i) width[i] = table.columns[i].size();
            std::vector<std::vector<std::string>> cells;
            for (const auto& row : table.rows) {
                auto& line = cells.emplace_back();
                for (std::size_t i = 0; i < row.size(); ++i) {
                    line.push_back(row[i].is_null() ? "-" : row[i].is_string() ? row[i].get<std::string>() : row[i].dump());
                    width[i] = std::max(width[i], line.back().size());
                }
            }
            auto emit_line = [&](const std::vector<std::string>& line) {
                for (std::size_t i = 0; i < line.size(); ++i) {
                    out << (i ? "  " : "") << line[i];
                    if (i + 1 < line.size()) out << std::string(width[i] - line[i].size(), ' ');
                }
                out << "\n";
            };
            emit_line(table.columns);
            for (const auto& line : cells) emit_line(line);
            break;
        }
    }
    return out.str();
}

Table betti_grid(const Surface& s, const std::vector<DivisorClass>& classes, const std::vector<std::int64_t>& chis,
                 std::int64_t max_degree, std::size_t cap) {
    Table t;
    t.columns = {"surface", "L", "chi", "applicable", "failed_check", "rho", "chi0", "window",
                 "dtilde", "shift_m", "valid_degree_min", "reflected_max"};
    for (std::int64_t i = 0; i <= max_degree; ++i) t.columns.push_back("b_" + std::to_string(i));

    struct Cell {
        DivisorClass l;
        std::int64_t chi;
    };
    std::vector<Cell> cells;
    for (const auto& l : classes)
        for (auto chi : chis) cells.push_back({l, chi});
    t.rows.resize(cells.size());

    HilbCache cache(cap);
    auto evaluate = [&](const Cell& cell) {
        std::vector<Json> row{s.id(), cell.l.to_string(), cell.chi};
        try {
            const auto rep = virtual_betti(s, cell.l, cell.chi, &cache);
            row.insert(row.end(), {true, nullptr, rep.normalization.rho, rep.normalization.chi0,
                                   rep.normalization.window_value, rep.shift.dtilde, rep.shift.shift_m,
                                   rep.shift.valid_degree_min, rep.reflected_max_degree()});
            for (std::int64_t i = 0; i <= max_degree; ++i) {
                const auto v = rep.low(i);
                row.push_back(v ? to_json(*v) : Json(nullptr));
            }
        } catch (const InapplicableError& e) {
            row.insert(row.end(), {false, e.failed_check()});
            row.resize(t.columns.size(), nullptr);
        } catch (const DomainError& e) {
            row.insert(row.end(), {false, e.what()});
            row.resize(t.columns.size(), nullptr);
        }
        return row;
    };

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (auto i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1)) t.rows[i] = evaluate(cells[i]);
    };
    const auto threads = std::min<std::size_t>(cells.size(), std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::jthread> pool;
    for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    return t;
}

Json to_json(const BigInt& value) {
    if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max()) {
        return Json(static_cast<std::int64_t>(value));
    }
    return Json(value.str());
}

Json to_json(const HypothesisReport& r) {
    Json j;
    j["input"] = input_json(r.surface, r.l, r.chi);
    j["effective"] = r.effective;
    j["kx_negative"] = r.kx_negative;
    j["has_integral"] = r.has_integral;
    j["self_intersection"] = r.self_intersection;
    j["moduli_empty"] = r.moduli_empty;
    if (r.primitive) {
        j["primitive"] = {{"n", r.primitive->multiplicity}, {"L_prime", r.primitive->primitive.to_string()}};
    } else {
        j["primitive"] = nullptr;
    }
    j["s_L"] = r.s_l ? sparam_json(*r.s_l) : Json(nullptr);
    j["L_plus_K"] = r.l_plus_k.to_string();
    j["L_plus_K_nonpositive"] = r.l_plus_k_nonpositive;
    j["s_L_plus_K"] = r.s_l_plus_k ? sparam_json(*r.s_l_plus_k) : Json("not_applicable");
    j["codimension_condition"] = {{"name", std::string(to_string(r.condition.condition))},
                                  {"evidence", r.condition.evidence},
                                  {"failed_check", r.condition.failed_check}};
    j["rho"] = optional_json(r.rho);
    j["main_formula_applicable"] = r.main_formula_applicable;
    j["failed_check"] = r.failed_check;
    j["irreducible"] = std::string(to_string(r.irreducible));
    if (!r.chi) {
        j["fine_moduli"] = nullptr;
    } else {
        j["fine_moduli"] = r.fine_moduli ? Json(*r.fine_moduli) : Json("not_applicable");
    }
    j["rationality"] = r.rationality ? Json(std::string(to_string(*r.rationality))) : Json(nullptr);
    j["strictly_semistable_note"] = optional_json(r.strictly_semistable);
    return j;
}

Json to_json(const VirtualBettiReport& r) {
    Json j;
    j["input"] = input_json(r.surface, r.l, r.chi);
    const auto& n = r.normalization;
    j["normalization"] = {{"chi_in", n.chi_in},         {"modulus", n.modulus}, {"k_dot_l", n.k_dot_l},
                          {"rho", n.rho},               {"candidates", n.candidates}, {"chi0", n.chi0},
                          {"window_value", n.window_value}};
    const auto& sh = r.shift;
    j["shift"] = {{"dtilde", sh.dtilde},
                  {"shift_m", sh.shift_m},
                  {"scheme_valid_codim", sh.scheme_valid_codim},
                  {"top_degree", sh.top_degree}};
    j["valid_degree_min"] = sh.valid_degree_min;
    j["uncontrolled_below"] = sh.valid_degree_min;
    j["raw_high"] = degree_pairs(r.raw_high);
    j["reflected_low"] = degree_pairs(r.reflected_low);
    j["hodge"] = {{"high", hodge_diagonal(r.raw_high)}, {"low", hodge_diagonal(r.reflected_low)}};
    j["flags"] = {{"fine_moduli", r.flags.fine_moduli ? Json(*r.flags.fine_moduli) : Json("not_applicable")},
                  {"smoothness_assumed", r.flags.smoothness_assumed},
                  {"virtual_only", r.flags.virtual_only},
                  {"strictly_semistable_note", r.flags.strictly_semistable_note},
                  {"rationality", std::string(to_string(r.flags.rationality))},
                  {"irreducible", std::string(to_string(r.flags.irreducible))}};
    return j;
}

Json to_json(const BoundReport& r) {
    Json j;
    j["stack_dim"] = r.stack_dim;
    j["scheme_dim"] = r.scheme_dim;
    j["rho"] = optional_json(r.rho);
    j["claimed"] = optional_json(r.claimed);
    j["moduli_empty"] = r.moduli_empty;
    j["entries"] = Json::array();
    for (const auto& e : r.entries) {
        j["entries"].push_back({{"name", e.name},
                                {"applicable", e.applicable},
                                {"value", e.value},
                                {"formula", e.formula},
                                {"note", e.note}});
    }
    j["audit"] = optional_json(r.audit);
    return j;
}

}  // namespace sheafbetti
