#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dsz/constructions.hpp"
#include "dsz/gf.hpp"
#include "dsz/oracle.hpp"
#include "dsz/sequence.hpp"
#include "dsz/zmatrix.hpp"

namespace {

using dsz::seq::Sequence;

struct Range {
    std::uint32_t lo = 0, hi = 0;
};

// "3" or "2..6"
Range parse_range(const std::string& text) {
    Range r;
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = static_cast<std::uint32_t>(std::stoul(text));
        } else {
            r.lo = static_cast<std::uint32_t>(std::stoul(text.substr(0, dots)));
            r.hi = static_cast<std::uint32_t>(std::stoul(text.substr(dots + 2)));
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError("range", "expected N or A..B: " + text);
    }
    if (r.hi < r.lo) throw CLI::ValidationError("range", "empty range: " + text);
    return r;
}

void write_sequence(const Sequence& s, const std::string& path, const std::string& format) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (path != "-") {
        file.open(path);
        if (!file) throw std::runtime_error("cannot open output file: " + path);
        os = &file;
    }
    *os << (format == "json" ? dsz::seq::to_json(s) : dsz::seq::to_text(s)) << '\n';
}

Sequence read_sequence(const std::string& path, const std::string& format) {
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream file(path);
        if (!file) throw std::runtime_error("cannot open input file: " + path);
        std::ostringstream ss;
        ss << file.rdbuf();
        text = ss.str();
    }
    return format == "json" ? dsz::seq::from_json(text) : dsz::seq::from_text(text);
}

struct MeasureOpts {
    bool sampled = false;
    std::uint64_t samples = 1000000;
    std::uint64_t seed = 1;
};

dsz::seq::AlternationReport measure(const Sequence& s, const MeasureOpts& o) {
    return o.sampled ? dsz::seq::alternation_report_sampled(s, o.samples, o.seed)
                     : dsz::seq::alternation_report(s);
}

void print_report(const std::string& name, const Sequence& s,
                  std::uint64_t pre_len, const dsz::seq::AlternationReport& rep,
                  std::optional<std::uint64_t> order_bound) {
    const std::uint64_t alpha = s.alphabet_size();
    std::cout << "construction: " << name << '\n'
              << "alphabet: " << alpha << '\n'
              << "pre_squash_length: " << pre_len << '\n'
              << "length: " << s.size() << '\n'
              << "order" << (rep.exhaustive ? "" : " (sampled lower bound)")
              << ": " << rep.order << '\n';
    if (order_bound)
        std::cout << "order_bound: " << *order_bound << '\n';
    std::cout << "eq1_bound: " << dsz::seq::length_upper_bound(alpha, rep.order) << '\n'
              << "repetition_free: " << (dsz::seq::is_repetition_free(s) ? 1 : 0) << '\n';
    bool pass = dsz::seq::is_repetition_free(s) &&
                dsz::seq::satisfies_length_bound(s, rep.order) &&
                (!order_bound || rep.order <= *order_bound);
    std::cout << "pass: " << (pass ? 1 : 0) << '\n';
}

int cmd_construct(const std::string& kind, std::uint32_t s, std::uint32_t n,
                  std::uint32_t k, std::uint32_t q, std::uint32_t t,
                  std::uint32_t s_hat, std::uint64_t max_symbols,
                  const std::string& output, const std::string& format,
                  const MeasureOpts& mo) {
    Sequence out;
    std::uint64_t pre_len = 0;
    std::optional<std::uint64_t> bound;
    if (kind == "rs") {
        out = dsz::cons::rs(s, n);
        pre_len = out.size();
        bound = s;
    } else if (kind == "small") {
        auto r = dsz::cons::small_order(k, max_symbols);
        out = std::move(r.seq);
        pre_len = r.pre_squash_length;
        bound = dsz::cons::small_order_params(k).s;
    } else if (kind == "large") {
        auto r = dsz::cons::large_order(q, t, s_hat, max_symbols);
        out = std::move(r.seq);
        pre_len = r.levels.back().pre_squash_length;
        bound = dsz::cons::large_order_alt_bound(q, t, s_hat) - 1;
    } else if (kind == "medium") {
        auto r = dsz::cons::medium_order(q, t, s_hat, max_symbols);
        out = std::move(r.seq);
        pre_len = r.levels.back().pre_squash_length;
        bound = dsz::cons::medium_order_alt_bound(t, s_hat) - 1;
    } else if (kind == "scaled") {
        auto r = dsz::cons::scaled_small_order(s, n, max_symbols);
        out = std::move(r.seq);
        pre_len = out.size();
        bound = s;
    } else {
        throw CLI::ValidationError("kind", "unknown construction: " + kind);
    }
    write_sequence(out, output, format);
    print_report(kind, out, pre_len, measure(out, mo), bound);
    return 0;
}

int cmd_verify(const std::string& input, const std::string& format,
               std::optional<std::uint32_t> s_claim, const MeasureOpts& mo) {
    const Sequence s = read_sequence(input, format);
    const auto rep = measure(s, mo);
    print_report("verify", s, s.size(), rep, s_claim);
    const bool rep_free = dsz::seq::is_repetition_free(s);
    const bool eq1 = dsz::seq::satisfies_length_bound(s, rep.order);
    if (!rep_free || !eq1) return 1;
    if (s_claim && rep.order > *s_claim) return 1;
    return 0;
}

int cmd_zmatrix(std::uint32_t q, std::uint32_t t, std::optional<std::uint32_t> trunc,
                const std::string& output, bool dense) {
    const auto [p, a] = dsz::gf::prime_power(q);
    const dsz::gf::Field field(p, a);
    auto mat = dsz::zm::build_poly_matrix(field, t);
    if (trunc) mat = dsz::zm::truncate_rows(mat, *trunc);

    if (!output.empty()) {
        std::ofstream file(output);
        if (!file) throw std::runtime_error("cannot open output file: " + output);
        dsz::zm::write_matrix(file, mat, dense);
    }
    const auto w = dsz::zm::weight_report(mat);
    std::uint64_t rmin = ~0ull, rmax = 0, cmin = ~0ull, cmax = 0;
    for (auto v : w.row_weights) { rmin = std::min(rmin, v); rmax = std::max(rmax, v); }
    for (auto v : w.col_weights) { cmin = std::min(cmin, v); cmax = std::max(cmax, v); }
    const auto inter = dsz::zm::max_column_pair_intersection(mat);
    const double kst = dsz::zm::kst_bound(mat.m, mat.n, t, 2);
    std::cout << "rows: " << mat.m << '\n'
              << "cols: " << mat.n << '\n'
              << "total_ones: " << w.total << '\n'
              << "row_weight: " << rmin << ".." << rmax << '\n'
              << "col_weight: " << cmin << ".." << cmax << '\n'
              << "max_column_pair_intersection: " << inter << '\n'
              << "kst_bound: " << kst << '\n';
    const bool pass = inter <= t - 1 && double(w.total) <= kst;
    std::cout << "pass: " << (pass ? 1 : 0) << '\n';
    return pass ? 0 : 1;
}

int cmd_lambda(std::uint32_t s, std::uint32_t n, std::uint64_t budget) {
    const auto r = dsz::oracle::lambda_exhaustive(s, n, budget);
    std::cout << dsz::oracle::to_json(r) << '\n';
    return 0;
}

void emit_row(const std::vector<std::string>& cells, const std::string& format) {
    const char* sep = format == "markdown" ? " | " : ",";
    if (format == "markdown") std::cout << "| ";
    for (std::size_t i = 0; i < cells.size(); ++i)
        std::cout << (i ? sep : "") << cells[i];
    if (format == "markdown") std::cout << " |";
    std::cout << '\n';
}

void emit_header(const std::vector<std::string>& cells, const std::string& format) {
    emit_row(cells, format);
    if (format == "markdown") {
        std::cout << "|";
        for (std::size_t i = 0; i < cells.size(); ++i) std::cout << " --- |";
        std::cout << '\n';
    }
}

std::string num(std::uint64_t v) { return std::to_string(v); }

int cmd_table(const std::string& family, const std::string& s_range,
              const std::string& n_range, const std::string& k_range,
              const std::string& q_range, const std::string& t_range,
              std::uint32_t s_hat, const std::string& format,
              std::uint64_t max_symbols) {
    if (family == "rs") {
        const Range rs_ = parse_range(s_range), rn = parse_range(n_range);
        emit_header({"s", "n", "length", "min_formula", "order", "eq1_bound"}, format);
        for (std::uint32_t s = rs_.lo; s <= rs_.hi; ++s)
            for (std::uint32_t n = rn.lo; n <= rn.hi; ++n) {
                const auto seq = dsz::cons::rs(s, n);
                const auto rep = dsz::seq::alternation_report(seq);
                const std::uint64_t formula =
                    std::min(std::uint64_t(n) * n * s, std::uint64_t(n) * s * s);
                emit_row({num(s), num(n), num(seq.size()), num(formula), num(rep.order),
                          num(dsz::seq::length_upper_bound(n, rep.order))},
                         format);
            }
        return 0;
    }
    if (family == "small") {
        const Range rk = parse_range(k_range);
        emit_header({"k", "n", "mu", "s", "pre_length", "length", "order", "order_exact"},
                    format);
        for (std::uint32_t k = rk.lo; k <= rk.hi; ++k) {
            const auto p = dsz::cons::small_order_params(k);
            const auto r = dsz::cons::small_order(k, max_symbols);
            const bool exhaustive = p.n <= 2048;
            const auto rep = exhaustive
                                 ? dsz::seq::alternation_report(r.seq)
                                 : dsz::seq::alternation_report_sampled(r.seq, 1000000, 1);
            emit_row({num(k), num(p.n), num(p.mu), num(p.s), num(r.pre_squash_length),
                      num(r.seq.size()), num(rep.order), num(exhaustive ? 1 : 0)},
                     format);
        }
        return 0;
    }
    if (family == "large" || family == "medium") {
        const Range rq = parse_range(q_range), rt = parse_range(t_range);
        emit_header({"q", "t", "s_hat", "alphabet", "pre_length", "length", "order",
                     "order_bound"},
                    format);
        for (std::uint32_t q = rq.lo; q <= rq.hi; ++q)
            for (std::uint32_t t = rt.lo; t <= rt.hi; ++t) {
                dsz::cons::LayeredResult r;
                std::uint64_t bound;
                if (family == "large") {
                    r = dsz::cons::large_order(q, t, s_hat, max_symbols);
                    bound = dsz::cons::large_order_alt_bound(q, t, s_hat) - 1;
                } else {
                    r = dsz::cons::medium_order(q, t, s_hat, max_symbols);
                    bound = dsz::cons::medium_order_alt_bound(t, s_hat) - 1;
                }
                const auto rep = dsz::seq::alternation_report(r.seq);
                emit_row({num(q), num(t), num(s_hat), num(r.seq.alphabet_size()),
                          num(r.levels.back().pre_squash_length), num(r.seq.size()),
                          num(rep.order), num(bound)},
                         format);
            }
        return 0;
    }
    throw CLI::ValidationError("family", "unknown table family: " + family);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Davenport-Schinzel sequence and Zarankiewicz matrix toolkit"};
    app.require_subcommand(1);

    std::uint32_t s = 2, n = 2, k = 0, q = 2, t = 1, s_hat = 2;
    std::uint64_t max_symbols = dsz::cons::kDefaultMaxSymbols;
    std::uint64_t budget = 0;
    std::string kind, output = "-", input = "-", format = "text";
    std::string matrix_output;
    bool dense = false;
    std::optional<std::uint32_t> s_claim, truncate_x;
    MeasureOpts mo;
    bool sampled_flag = false;

    auto* construct = app.add_subcommand("construct", "Build a sequence and report on it");
    construct->add_option("kind", kind, "rs|small|large|medium|scaled")->required();
    construct->add_option("--s", s, "order parameter");
    construct->add_option("--n", n, "alphabet parameter");
    construct->add_option("--k", k, "recursion depth (small)");
    construct->add_option("--q", q, "prime power");
    construct->add_option("--t", t, "level");
    construct->add_option("--s-hat", s_hat, "base order parameter");
    construct->add_option("--output", output, "output path, - for stdout");
    construct->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    construct->add_option("--max-symbols", max_symbols, "size cap override");
    construct->add_flag("--sampled", sampled_flag, "sampled order measurement");
    construct->add_option("--samples", mo.samples);
    construct->add_option("--seed", mo.seed);

    auto* verify = app.add_subcommand("verify", "Verify a sequence file");
    verify->add_option("--input", input, "input path, - for stdin");
    verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--s-claim", s_claim, "claimed order");
    verify->add_flag("--sampled", sampled_flag, "sampled order measurement");
    verify->add_option("--samples", mo.samples);
    verify->add_option("--seed", mo.seed);

    auto* zmatrix = app.add_subcommand("zmatrix", "Build the polynomial Zarankiewicz matrix");
    zmatrix->add_option("--q", q, "prime power")->required();
    zmatrix->add_option("--t", t, "degree bound")->required();
    zmatrix->add_option("--truncate-x", truncate_x, "keep rows for the first N x-values");
    zmatrix->add_option("--output", matrix_output, "matrix output path");
    zmatrix->add_flag("--dense", dense, "dense 0/1 grid output");

    auto* lambda = app.add_subcommand("lambda", "Exhaustive lambda(s, n)");
    lambda->add_option("--s", s)->required();
    lambda->add_option("--n", n)->required();
    lambda->add_option("--budget", budget, "node budget, 0 = unlimited");

    auto* table = app.add_subcommand("table", "Emit a reproduction table");
    std::string family, s_range = "2..2", n_range = "2..2", k_range = "0..0",
                        q_range = "2..2", t_range = "1..1";
    std::string table_format = "csv";
    table->add_option("family", family, "rs|small|large|medium")->required();
    table->add_option("--s", s_range, "range A..B");
    table->add_option("--n", n_range, "range A..B");
    table->add_option("--k", k_range, "range A..B");
    table->add_option("--q", q_range, "range A..B");
    table->add_option("--t", t_range, "range A..B");
    table->add_option("--s-hat", s_hat);
    table->add_option("--format", table_format)->check(CLI::IsMember({"csv", "markdown"}));
    table->add_option("--max-symbols", max_symbols);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }
    mo.sampled = sampled_flag;

    try {
        if (construct->parsed())
            return cmd_construct(kind, s, n, k, q, t, s_hat, max_symbols, output, format, mo);
        if (verify->parsed()) return cmd_verify(input, format, s_claim, mo);
        if (zmatrix->parsed()) return cmd_zmatrix(q, t, truncate_x, matrix_output, dense);
        if (lambda->parsed()) return cmd_lambda(s, n, budget);
        if (table->parsed())
            return cmd_table(family, s_range, n_range, k_range, q_range, t_range, s_hat,
                             table_format, max_symbols);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
