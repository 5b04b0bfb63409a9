#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <numbers>

#include "qsh/render.hpp"
#include "qsh/symsum.hpp"
#include "qsh/verify.hpp"

using namespace qsh;

namespace {

long long default_terms() {
    if (const char* env = std::getenv("QSH_DEFAULT_TERMS")) {
        try {
            return std::stoll(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("QSH_DEFAULT_TERMS is not an integer");
        }
    }
    return 1'000'000;
}

Poly parse_r_param(const std::string& text) {
    if (text == "sym") return Poly::indet(Indet::r);
    return Poly(Rat::parse(text));
}

std::vector<long> parse_long_list(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty list entry");
        out.push_back(std::stol(item));
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

void print_lincomb(const LinComb& x, const std::string& format) {
    if (format == "json")
        std::cout << lincomb_json(x).dump(2) << "\n";
    else
        std::cout << render_lincomb_text(x) << "\n";
}

void print_eval(const EvalResult& v, const std::string& format) {
    if (format == "json") {
        std::cout << eval_json(v).dump(2) << "\n";
    } else {
        std::cout.precision(15);
        std::cout << v.value.real();
        if (v.value.imag() != 0.0) std::cout << " + " << v.value.imag() << "i";
        std::cout << "  (tail <= " << v.tail << ", N = " << v.terms << ")\n";
    }
}

double kappa_specialize(const Poly& p) {
    double value = 0.0;
    double power = 1.0;
    for (const auto& c : p.coeffs()) {
        value += c.to_double() * power;
        power *= kappa_numeric();
    }
    return value;
}

EvalKind parse_kind(const std::string& name) {
    if (name == "zeta") return EvalKind::zeta;
    if (name == "t" || name == "tvalue") return EvalKind::tvalue;
    if (name == "euler") return EvalKind::euler;
    throw std::invalid_argument("unknown evaluation kind: " + name);
}

int run(int argc, char** argv) {
    CLI::App app{"quasi-shuffle algebra toolkit: exact word-algebra products, Hopf structure, "
                 "and multiple-zeta-value numerics"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string alphabet_text = "mzv";
    std::string product_text = "qsh";
    std::string r_text = "sym";
    long long terms = default_terms();

    auto* mul = app.add_subcommand("mul", "product of two words");
    std::string mul_w1, mul_w2;
    mul->add_option("--alphabet", alphabet_text, "mzv | euler:N | free:g1,g2");
    mul->add_option("--product", product_text, "qsh | sh | star | interp");
    mul->add_option("--r", r_text, "specialize the interpolation parameter (p/q or sym)");
    mul->add_option("w1", mul_w1, "first word")->required();
    mul->add_option("w2", mul_w2, "second word")->required();

    auto* psi_cmd = app.add_subcommand("psi", "apply a series-induced map");
    std::string psi_series = "id", psi_word;
    psi_cmd->add_option("--alphabet", alphabet_text);
    psi_cmd->add_option("--series", psi_series,
                        "id | neg | sigma | sigma-inv | sigma-r | exp | log | c1,c2,...");
    psi_cmd->add_option("--r", r_text, "parameter for sigma-r (p/q or sym)");
    psi_cmd->add_option("word", psi_word, "input word")->required();

    auto* cop = app.add_subcommand("coproduct", "deconcatenation coproduct");
    std::string cop_word;
    cop->add_option("--alphabet", alphabet_text);
    cop->add_option("word", cop_word)->required();

    auto* anti = app.add_subcommand("antipode", "Hopf antipode sigma^{1-2r} T R");
    std::string anti_word;
    anti->add_option("--alphabet", alphabet_text);
    anti->add_option("--r", r_text, "interpolation parameter (p/q or sym)");
    anti->add_option("word", anti_word)->required();

    auto* dual = app.add_subcommand("dual", "duality involution on admissible indices");
    std::string dual_index;
    dual->add_option("index", dual_index, "e.g. 3,1,2")->required();

    auto* cyc = app.add_subcommand("cyclic-sum", "cyclic sum operator");
    std::string cyc_index;
    cyc->add_option("index", cyc_index)->required();

    auto* sumidx = app.add_subcommand("sum-indices", "admissible indices of fixed weight/depth");
    int si_n = 0, si_l = 0;
    bool si_odd = false;
    sumidx->add_option("--n", si_n, "weight")->required();
    sumidx->add_option("--l", si_l, "depth")->required();
    sumidx->add_flag("--odd", si_odd, "totally odd variant");

    auto* twoone = app.add_subcommand("two-one", "two-one formula word pair");
    std::string to_j;
    twoone->add_option("--j", to_j, "exponent sequence, e.g. 1,0,2")->required();

    auto* eval_cmd = app.add_subcommand("eval", "numeric evaluation of a zeta-type index");
    std::string eval_kind = "zeta", eval_index, eval_r = "0";
    int eval_level = 2;
    eval_cmd->add_option("--kind", eval_kind, "zeta | t | euler");
    eval_cmd->add_option("--level", eval_level, "euler level");
    eval_cmd->add_option("--r", eval_r, "interpolation parameter p/q");
    eval_cmd->add_option("--terms", terms, "truncation");
    eval_cmd->add_option("index", eval_index)->required();

    auto* airy = app.add_subcommand("eval-airy", "Airy zeta values as kappa-polynomials");
    int airy_k = 0, airy_m = 0, airy_n = -1;
    bool airy_numeric = false;
    airy->add_option("--k", airy_k, "single argument k >= 2");
    airy->add_option("--repeated", airy_m, "repeated argument m (even)");
    airy->add_option("--n", airy_n, "repetition count");
    airy->add_flag("--numeric", airy_numeric, "also print the kappa ~ 0.729011 specialization");

    auto* evalg = app.add_subcommand("eval-g", "zeta values on a user zero stream");
    std::string zeros_file, zeros_builtin, evalg_index;
    evalg->add_option("--zeros-file", zeros_file, "one zero per line, '#' comments");
    evalg->add_option("--zeros", zeros_builtin, "builtin stream: pi-multiples | half-offset-pi");
    evalg->add_option("--terms", terms, "truncation");
    evalg->add_option("index", evalg_index)->required();

    auto* sym = app.add_subcommand("symsum", "symmetric-sum identity report");
    std::string sym_keys, sym_r = "0";
    bool sym_symbolic = false;
    sym->add_option("--keys", sym_keys, "e.g. 2,3 (negative entries are level-2 bars)")
        ->required();
    sym->add_option("--r", sym_r, "interpolation parameter p/q");
    sym->add_option("--terms", terms);
    sym->add_flag("--symbolic", sym_symbolic, "print the word-algebra identity instead");

    auto* ver = app.add_subcommand("verify", "run a named verification suite");
    std::string suite_name;
    unsigned seed = VerifyOptions{}.seed;
    std::string suite_help = "one of:";
    for (const auto& s : suite_names()) suite_help += " " + s;
    ver->add_option("suite", suite_name, suite_help)->required();
    ver->add_option("--terms", terms);
    ver->add_option("--seed", seed, "seed for the randomized exact suites");

    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const Alphabet alpha = parse_alphabet(alphabet_text);

    if (*mul) {
        const LinComb u = LinComb::from_word(alpha, parse_word(mul_w1, alpha));
        const LinComb v = LinComb::from_word(alpha, parse_word(mul_w2, alpha));
        LinComb result = product(product_kind_from_name(product_text), u, v);
        if (r_text != "sym") result = result.specialize_r(Rat::parse(r_text));
        print_lincomb(result, format);
        return 0;
    }
    if (*psi_cmd) {
        const LinComb x = LinComb::from_word(alpha, parse_word(psi_word, alpha));
        const int depth = std::max(x.max_word_len(), 1);
        SeriesPrefix f = SeriesPrefix::identity(depth);
        if (psi_series == "id") f = SeriesPrefix::identity(depth);
        else if (psi_series == "neg") f = SeriesPrefix::neg(depth);
        else if (psi_series == "sigma") f = SeriesPrefix::sigma(depth);
        else if (psi_series == "sigma-inv") f = SeriesPrefix::sigma_inv(depth);
        else if (psi_series == "exp") f = SeriesPrefix::exp(depth);
        else if (psi_series == "log") f = SeriesPrefix::log(depth);
        else if (psi_series == "sigma-r") f = SeriesPrefix::sigma_pow(parse_r_param(r_text), depth);
        else {
            std::vector<Rat> coeffs;
            std::stringstream ss(psi_series);
            std::string item;
            while (std::getline(ss, item, ',')) coeffs.push_back(Rat::parse(item));
            if (static_cast<int>(coeffs.size()) < depth)
                throw std::invalid_argument("series depth is less than the word length");
            f = SeriesPrefix::from_coeffs(std::move(coeffs));
        }
        print_lincomb(psi(f, x), format);
        return 0;
    }
    if (*cop) {
        const TensorComb t = coproduct(LinComb::from_word(alpha, parse_word(cop_word, alpha)));
        if (format == "json")
            std::cout << tensor_json(t).dump(2) << "\n";
        else
            std::cout << render_tensor_text(t) << "\n";
        return 0;
    }
    if (*anti) {
        const LinComb x = LinComb::from_word(alpha, parse_word(anti_word, alpha));
        print_lincomb(antipode(x, parse_r_param(r_text)), format);
        return 0;
    }
    if (*dual) {
        const Alphabet mzv = Alphabet::mzv();
        const Word w = parse_word(dual_index, mzv);
        const Word image = tau(w);
        if (format == "json")
            std::cout << nlohmann::json{{"index", render_index_text(word_to_index(w))},
                                        {"dual", render_index_text(word_to_index(image))}}
                             .dump(2)
                      << "\n";
        else
            std::cout << render_index_text(word_to_index(image)) << "\n";
        return 0;
    }
    if (*cyc) {
        const Alphabet mzv = Alphabet::mzv();
        print_lincomb(cyclic_sum(mzv, parse_word(cyc_index, mzv)), format);
        return 0;
    }
    if (*sumidx) {
        const auto indices =
            si_odd ? totally_odd_indices(si_n, si_l) : sum_theorem_indices(si_n, si_l);
        if (format == "json") {
            nlohmann::json out;
            out["indices"] = nlohmann::json::array();
            for (const auto& idx : indices) out["indices"].push_back(render_index_text(idx));
            if (si_odd)
                out["rhs_coefficient"] = totally_odd_rhs(si_n, si_l).str();
            else
                out["rhs_poly"] = poly_json(interp_sum_rhs(si_n, si_l));
            std::cout << out.dump(2) << "\n";
        } else {
            for (const auto& idx : indices) std::cout << render_index_text(idx) << "\n";
            if (si_odd)
                std::cout << "rhs coefficient of zeta(n): " << totally_odd_rhs(si_n, si_l).str()
                          << "\n";
            else
                std::cout << "rhs coefficient of zeta(n): " << interp_sum_rhs(si_n, si_l).str()
                          << "\n";
        }
        return 0;
    }
    if (*twoone) {
        const auto j = parse_long_list(to_j);
        const auto [star_side, half_side] = two_one_pair(j);
        const long factor = 1L << j.size();
        if (format == "json") {
            std::cout << nlohmann::json{
                             {"star_index", render_index_text(word_to_index(star_side))},
                             {"half_index", render_index_text(word_to_index(half_side))},
                             {"factor", factor}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "zeta-star(" << render_index_text(word_to_index(star_side)) << ") = "
                      << factor << " * zeta-half("
                      << render_index_text(word_to_index(half_side)) << ")\n";
        }
        return 0;
    }
    if (*eval_cmd) {
        EvalConfig cfg{terms, parse_kind(eval_kind), 1};
        if (cfg.kind == EvalKind::euler) cfg.level = eval_level;
        const Index idx = parse_index(eval_index, cfg.kind == EvalKind::euler ? cfg.level : 1);
        const Rat r = Rat::parse(eval_r);
        const EvalResult v = r.is_zero() ? strict_sum_eval(idx, cfg) : interp_eval(idx, r, cfg);
        print_eval(v, format);
        return 0;
    }
    if (*airy) {
        Poly p(0, Indet::kappa);
        if (airy_k > 0 && airy_m == 0)
            p = airy_zeta_poly(airy_k);
        else if (airy_m > 0 && airy_n >= 0)
            p = airy_repeated_poly(airy_m, airy_n);
        else
            throw std::invalid_argument("eval-airy needs --k K or --repeated M --n N");
        if (format == "json") {
            nlohmann::json out{{"poly", poly_json(p)}};
            if (airy_numeric) out["value_approx"] = kappa_specialize(p);
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << p.str() << "\n";
            if (airy_numeric) {
                std::cout.precision(9);
                std::cout << "~ " << kappa_specialize(p) << " at kappa ~ " << kappa_numeric()
                          << "\n";
            }
        }
        return 0;
    }
    if (*evalg) {
        ZeroStream zeros;
        if (!zeros_file.empty())
            zeros = ZeroStream::from_file(zeros_file);
        else if (zeros_builtin == "pi-multiples")
            zeros = ZeroStream::multiples(std::numbers::pi, terms);
        else if (zeros_builtin == "half-offset-pi")
            zeros = ZeroStream::half_offset(std::numbers::pi, terms);
        else
            throw std::invalid_argument("eval-g needs --zeros-file or --zeros");
        const long long n =
            std::min<long long>(terms, static_cast<long long>(zeros.zeros.size()));
        print_eval(zerostream_eval(parse_index(evalg_index), zeros, n), format);
        return 0;
    }
    if (*sym) {
        const std::vector<long> keys = parse_long_list(sym_keys);
        if (sym_symbolic) {
            const bool signed_entries =
                std::any_of(keys.begin(), keys.end(), [](long k) { return k < 0; });
            const Alphabet sa = signed_entries ? Alphabet::euler(2) : Alphabet::mzv();
            std::vector<Letter> letters;
            for (long k : keys)
                letters.push_back(signed_entries ? euler_letter(std::abs(k), k < 0 ? 1 : 0, 2)
                                                 : mzv_letter(k));
            auto [lhs, rhs] = symmetric_sum_sides(sa, letters);
            if (format == "json")
                std::cout << nlohmann::json{{"lhs", lincomb_json(lhs)},
                                            {"rhs", lincomb_json(rhs)},
                                            {"equal", lhs == rhs}}
                                 .dump(2)
                          << "\n";
            else
                std::cout << "lhs = " << render_lincomb_text(lhs) << "\n"
                          << "rhs = " << render_lincomb_text(rhs) << "\n"
                          << (lhs == rhs ? "equal" : "NOT EQUAL") << "\n";
            return lhs == rhs ? 0 : 1;
        }
        EvalConfig cfg{terms, EvalKind::zeta, 1};
        const SymsumReport report = zeta_symsum_report(keys, Rat::parse(sym_r), cfg);
        if (format == "json")
            std::cout << nlohmann::json{{"lhs", report.lhs},
                                        {"rhs", report.rhs},
                                        {"diff", report.diff},
                                        {"tail", report.tail},
                                        {"N", report.terms}}
                             .dump(2)
                      << "\n";
        else {
            std::cout.precision(15);
            std::cout << "lhs  = " << report.lhs << "\nrhs  = " << report.rhs
                      << "\ndiff = " << report.diff << " (tail <= " << report.tail << ")\n";
        }
        return 0;
    }
    if (*ver) {
        VerifyOptions opts;
        opts.terms = terms;
        opts.seed = seed;
        const auto reports = run_suites(suite_name, opts);
        if (format == "json") {
            nlohmann::json out;
            out["suites"] = nlohmann::json::array();
            for (const auto& r : reports) {
                nlohmann::json failures = nlohmann::json::array();
                for (const auto& f : r.failures)
                    failures.push_back(
                        {{"case", f.name}, {"numeric", f.numeric}, {"detail", f.detail}});
                out["suites"].push_back({{"suite", r.suite},
                                         {"cases", r.cases_run},
                                         {"seconds", r.seconds},
                                         {"failures", failures}});
            }
            out["exit"] = report_exit_code(reports);
            std::cout << out.dump(2) << "\n";
        } else {
            for (const auto& r : reports) {
                std::cout << "suite " << r.suite << ": " << r.cases_run << " cases, "
                          << r.failures.size() << " failures, " << r.seconds << "s\n";
                for (const auto& f : r.failures)
                    std::cout << "  FAIL [" << (f.numeric ? "numeric" : "exact") << "] "
                              << f.name << ": " << f.detail << "\n";
            }
        }
        return report_exit_code(reports);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
