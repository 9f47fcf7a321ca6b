#include "f2cf/cli.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "f2cf/miner.hpp"
#include "f2cf/verifier.hpp"

namespace f2cf::cli {

namespace {

using nlohmann::json;

enum class OutputMode { Human, Records };

struct RunConfig {
    std::string a = "";
    std::string b = "";
    Exponent precision = 256;
    unsigned n_max = 8;
    std::string format = "human";
    std::string seq = "pd";
    std::string morphism;
    std::size_t quotients = 16;
    int max_deg_x = 4;
    int max_deg_coeff = 8;
    int margin = 64;
    std::string word;
    int max_total_deg = 7;
    unsigned threads = 0;

    OutputMode mode() const { return format == "records" ? OutputMode::Records : OutputMode::Human; }
};

/// Precondition failure reported with exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json record_json(const CheckRecord& r) {
    json params = json::object(), witness = json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    for (const auto& [k, v] : r.witness) witness[k] = v;
    json j = {{"check", r.check}, {"params", params}, {"pass", r.pass}, {"witness", witness}};
    if (!r.message.empty()) j["message"] = r.message;
    return j;
}

class Emitter {
public:
    Emitter(std::ostream& out, OutputMode mode) : out_(out), mode_(mode) {}

    void record(const CheckRecord& r) {
        all_pass_ = all_pass_ && r.pass;
        if (mode_ == OutputMode::Records)
            out_ << record_json(r).dump() << '\n';
        else
            out_ << to_text(r) << '\n';
    }
    void report(const CheckReport& rep) {
        for (const auto& r : rep.records) record(r);
    }
    /// Free-form text, shown in human mode only.
    void text(const std::string& s) {
        if (mode_ == OutputMode::Human) out_ << s << '\n';
    }
    bool all_pass() const { return all_pass_; }
    int exit_code() const { return all_pass_ ? kExitPass : kExitCheckFailed; }

private:
    std::ostream& out_;
    OutputMode mode_;
    bool all_pass_ = true;
};

Poly2 parse_poly(const std::string& text, const char* flag) {
    try {
        return Poly2::parse(text);
    } catch (const ParseError& e) {
        throw UsageError(std::string("invalid polynomial for ") + flag + " \"" + text + "\": " + e.what());
    }
}

LetterAssignment assignment(const RunConfig& cfg) {
    if (cfg.a.empty() || cfg.b.empty()) throw UsageError("both --a and --b are required");
    try {
        return LetterAssignment(parse_poly(cfg.a, "--a"), parse_poly(cfg.b, "--b"));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

void require_precision(const RunConfig& cfg) {
    if (cfg.precision < 32)
        throw UsageError("precision must be at least 32 (got " + std::to_string(cfg.precision) + ")");
}

Morphism sequence_morphism(const RunConfig& cfg) {
    if (!cfg.morphism.empty()) {
        try {
            Morphism m = Morphism::parse(cfg.morphism);
            if (!m.is_prolongable()) throw UsageError("morphism " + m.to_string() + " is not prolongable on a");
            return m;
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    if (cfg.seq == "pd") return period_doubling();
    if (cfg.seq == "ptm") return thue_morse();
    throw UsageError("--seq must be pd or ptm");
}

std::string sequence_label(const RunConfig& cfg) { return cfg.morphism.empty() ? cfg.seq : cfg.morphism; }

CfApproximation build_alpha(const RunConfig& cfg, const LetterAssignment& assign, Exponent precision) {
    const Morphism m = sequence_morphism(cfg);
    if (m == period_doubling()) return alpha_pd(assign, precision);
    return alpha_morphic(m, assign, precision);
}

struct PairOutcome {
    bool exact = false;
    bool series = false;
    bool riccati = false;
    bool pass() const { return exact && series && riccati; }
};

PairOutcome verify_pair(const LetterAssignment& assign, unsigned n_max, Exponent precision) {
    PairOutcome o;
    const QuarticCoefficients q = build_quartic(assign);
    o.exact = check_theorem_exact(assign, q, n_max).passed();
    o.series = check_theorem_series(assign, q, precision).pass;
    o.riccati = riccati_from_quartic(q, assign).passed();
    return o;
}

int cmd_verify(const RunConfig& cfg, Emitter& em) {
    const LetterAssignment assign = assignment(cfg);
    require_precision(cfg);
    if (cfg.n_max < 1) throw UsageError("--n-max must be at least 1");
    const QuarticCoefficients q = build_quartic(assign);
    em.text("P(x) = " + q.to_string());
    em.record({"build_quartic",
               {{"a", assign.a().to_string()}, {"b", assign.b().to_string()}},
               true,
               {{"A", q.A.to_string()}, {"B", q.B.to_string()}, {"C", q.C.to_string()}},
               ""});
    em.report(check_theorem_exact(assign, q, cfg.n_max));
    em.record(check_theorem_series(assign, q, cfg.precision).record(assign));
    em.report(riccati_from_quartic(q, assign));
    return em.exit_code();
}

int cmd_expand(const RunConfig& cfg, Emitter& em) {
    const LetterAssignment assign = assignment(cfg);
    const Morphism m = sequence_morphism(cfg);
    const Exponent max_deg = std::max(assign.a().degree(), assign.b().degree());
    const Exponent needed = 2 * static_cast<Exponent>(cfg.quotients + 1) * max_deg + 32;
    const Exponent precision = std::max(cfg.precision, needed);
    const CfApproximation alpha = build_alpha(cfg, assign, precision);
    const SeriesExpansion exp = expand_series(alpha.value, cfg.quotients);

    std::vector<Poly2> all{exp.quotients.leading};
    if (exp.count == 0) all.clear();
    all.insert(all.end(), exp.quotients.tail.begin(), exp.quotients.tail.end());
    Word spelled;
    const bool spells = spell_word(all, assign, spelled);
    const Word expected = m.fixed_point_prefix(cfg.quotients).prefix(cfg.quotients);

    em.text(exp.quotients.to_string());
    CheckRecord r{"expand",
                  {{"a", assign.a().to_string()}, {"b", assign.b().to_string()}, {"seq", sequence_label(cfg)},
                   {"quotients", std::to_string(cfg.quotients)}, {"precision", std::to_string(precision)}},
                  exp.count == cfg.quotients && spells && spelled == expected,
                  {{"partial_quotients", exp.quotients.to_string()},
                   {"word", spells ? spelled.to_string() : "?"},
                   {"certified", std::to_string(exp.count)}},
                  ""};
    if (exp.count < cfg.quotients) r.message = "precision certified only " + std::to_string(exp.count) + " quotients";
    em.record(r);
    return em.exit_code();
}

int cmd_riccati(const RunConfig& cfg, Emitter& em) {
    const LetterAssignment assign = assignment(cfg);
    require_precision(cfg);
    const CfApproximation alpha = build_alpha(cfg, assign, cfg.precision);
    em.record(riccati_check(alpha.value, assign, sequence_label(cfg)));
    // The (t, t+1) specialization is the degree-one equation (t(t+1)x)' = 1 + x^2.
    if (assign.a().degree() == 1 && assign.b().degree() == 1) em.record(riccati_reduces_to_r0(assign));
    return em.exit_code();
}

int cmd_baum_sweet(const RunConfig& cfg, Emitter& em) {
    const LetterAssignment assign = assignment(cfg);
    require_precision(cfg);
    for (const char* seq : {"pd", "ptm"}) {
        const CfApproximation alpha = std::string(seq) == "pd" ? alpha_pd(assign, cfg.precision)
                                                                : alpha_ptm(assign, cfg.precision);
        const BaumSweetReport rep = baum_sweet_check(fractional_part(alpha.value));
        CheckReport recs = rep.records(std::string(seq) + " fractional part");
        for (auto& r : recs.records) {
            r.params.insert(r.params.begin(), {{"a", assign.a().to_string()}, {"b", assign.b().to_string()}});
        }
        em.report(recs);
    }
    return em.exit_code();
}

int cmd_mine(const RunConfig& cfg, Emitter& em) {
    const LetterAssignment assign = assignment(cfg);
    require_precision(cfg);
    const CfApproximation alpha = build_alpha(cfg, assign, cfg.precision);
    const MinerConfig mc{cfg.max_deg_x, cfg.max_deg_coeff, cfg.margin};
    std::optional<Relation> rel;
    try {
        rel = mine(alpha.value, mc);
    } catch (const WindowTooSmall& e) {
        throw UsageError(e.what());
    }
    CheckRecord r{"mine",
                  {{"a", assign.a().to_string()}, {"b", assign.b().to_string()}, {"seq", sequence_label(cfg)},
                   {"max_deg_x", std::to_string(cfg.max_deg_x)}, {"max_deg_coeff", std::to_string(cfg.max_deg_coeff)},
                   {"margin", std::to_string(cfg.margin)}, {"precision", std::to_string(cfg.precision)}},
                  rel.has_value(),
                  {},
                  ""};
    if (rel) {
        r.witness.emplace_back("relation", rel->to_string());
        for (int i = rel->degree_x; i >= 0; --i)
            r.witness.emplace_back("c" + std::to_string(i), rel->coefficients[static_cast<std::size_t>(i)].to_string());
        r.witness.emplace_back("residual_valuation", std::to_string(rel->residual_valuation));
    } else {
        r.message = "no relation within the bounds";
    }
    em.record(r);
    if (rel && sequence_morphism(cfg) == period_doubling() && rel->degree_x == 4) {
        const auto expected = build_quartic(assign).as_vector();
        em.record({"mined_relation_matches_quartic",
                   {{"a", assign.a().to_string()}, {"b", assign.b().to_string()}},
                   rel->coefficients == expected,
                   {{"expected", build_quartic(assign).to_string()}},
                   ""});
    }
    return em.exit_code();
}

int cmd_continuant(const RunConfig& cfg, Emitter& em) {
    const LetterAssignment assign = assignment(cfg);
    Word w;
    try {
        w = Word::parse(cfg.word);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const Poly2 full = continuant(w, assign);
    const Poly2 tail = continuant(w.drop_first(), assign);
    em.record({"continuant",
               {{"word", w.to_string()}, {"a", assign.a().to_string()}, {"b", assign.b().to_string()}},
               true,
               {{"<W>", full.to_string()}, {"<W'>", tail.to_string()}},
               ""});
    return em.exit_code();
}

int cmd_sweep(const RunConfig& cfg, Emitter& em, std::ostream& out) {
    require_precision(cfg);
    if (cfg.max_total_deg < 2) throw UsageError("--max-total-deg must be at least 2");
    if (cfg.max_total_deg > 12) throw UsageError("--max-total-deg above 12 is not supported");
    const auto pairs = valid_pairs(cfg.max_total_deg);
    std::vector<PairOutcome> outcomes(pairs.size());

    unsigned workers = cfg.threads ? cfg.threads : std::max(1U, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(pairs.size(), 1)));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < pairs.size(); i = next++)
                outcomes[i] = verify_pair(pairs[i], cfg.n_max, cfg.precision);
        });
    }
    for (auto& th : pool) th.join();

    std::size_t passed = 0;
    if (cfg.format != "records") {
        out << std::left << std::setw(24) << "a" << std::setw(24) << "b" << "exact series riccati\n";
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& o = outcomes[i];
        if (o.pass()) ++passed;
        if (cfg.format == "records") {
            em.record({"sweep_pair",
                       {{"a", pairs[i].a().to_string()}, {"b", pairs[i].b().to_string()}},
                       o.pass(),
                       {{"exact", o.exact ? "pass" : "fail"},
                        {"series", o.series ? "pass" : "fail"},
                        {"riccati", o.riccati ? "pass" : "fail"}},
                       ""});
        } else {
            auto mark = [](bool ok) { return ok ? "ok    " : "FAIL  "; };
            out << std::left << std::setw(24) << pairs[i].a().to_string() << std::setw(24)
                << pairs[i].b().to_string() << mark(o.exact) << " " << mark(o.series) << " " << mark(o.riccati)
                << "\n";
        }
    }
    em.record({"sweep",
               {{"max_total_deg", std::to_string(cfg.max_total_deg)}, {"n_max", std::to_string(cfg.n_max)},
                {"precision", std::to_string(cfg.precision)}},
               passed == pairs.size(),
               {{"pairs", std::to_string(pairs.size())}, {"passed", std::to_string(passed)}},
               ""});
    return em.exit_code();
}

}  // namespace

std::vector<LetterAssignment> valid_pairs(int max_total_deg) {
    std::vector<Poly2> polys;
    for (int d = 1; d < max_total_deg; ++d) {
        for (std::uint64_t bits = std::uint64_t{1} << d; bits < (std::uint64_t{2} << d); ++bits)
            polys.push_back(Poly2::from_words({bits}));
    }
    std::vector<LetterAssignment> out;
    for (const auto& a : polys)
        for (const auto& b : polys)
            if (a != b && a.degree() + b.degree() <= max_total_deg) out.emplace_back(a, b);
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Continued fractions over GF(2)((1/t)): construction, expansion, verification, relation mining", "f2cf"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_pair = [&](CLI::App* sub, bool required = true) {
        auto* oa = sub->add_option("--a", cfg.a, "value of the letter a, e.g. \"t^3\"");
        auto* ob = sub->add_option("--b", cfg.b, "value of the letter b, e.g. \"t^2+t+1\"");
        if (required) {
            oa->required();
            ob->required();
        }
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "human or records (one JSON object per line)")
            ->check(CLI::IsMember({"human", "records"}));
    };
    auto add_seq = [&](CLI::App* sub) {
        sub->add_option("--seq", cfg.seq, "pd (period-doubling) or ptm (Prouhet-Thue-Morse)")
            ->check(CLI::IsMember({"pd", "ptm"}));
        sub->add_option("--morphism", cfg.morphism, "custom substitution, e.g. \"a->ab,b->aa\" (overrides --seq)");
    };

    auto* verify = app.add_subcommand("verify-theorem", "exact and series checks of the quartic for one pair");
    add_pair(verify);
    verify->add_option("--n-max", cfg.n_max, "largest convergent index for the exact checks");
    verify->add_option("--precision", cfg.precision, "series precision in coefficients");
    add_common(verify);

    auto* expand = app.add_subcommand("expand", "print certified partial quotients of the sequence's continued fraction");
    add_pair(expand);
    add_seq(expand);
    expand->add_option("--quotients", cfg.quotients, "number of partial quotients");
    expand->add_option("--precision", cfg.precision, "minimum series precision");
    add_common(expand);

    auto* riccati = app.add_subcommand("riccati", "residual of (ab(a+b)x)' = (ab)'(1+x^2)");
    add_pair(riccati);
    add_seq(riccati);
    riccati->add_option("--precision", cfg.precision, "series precision");
    add_common(riccati);

    auto* baum = app.add_subcommand("baum-sweet", "degree-one criteria on the fractional parts of both sequences");
    add_pair(baum);
    baum->add_option("--precision", cfg.precision, "series precision");
    add_common(baum);

    auto* minecmd = app.add_subcommand("mine", "search an algebraic relation satisfied by the series");
    add_pair(minecmd);
    add_seq(minecmd);
    minecmd->add_option("--max-deg-x", cfg.max_deg_x, "largest power of x");
    minecmd->add_option("--max-deg-coeff", cfg.max_deg_coeff, "largest coefficient degree in t");
    minecmd->add_option("--margin", cfg.margin, "extra vanishing coefficients demanded");
    minecmd->add_option("--precision", cfg.precision, "series precision");
    add_common(minecmd);

    auto* cont = app.add_subcommand("continuant", "continuants <W> and <W'> of a word");
    cont->add_option("--word", cfg.word, "word over {a,b}")->required();
    add_pair(cont);
    add_common(cont);

    auto* sweep = app.add_subcommand("sweep", "verify-theorem on every pair with deg a + deg b <= D");
    sweep->add_option("--max-total-deg", cfg.max_total_deg, "bound D on deg a + deg b")->required();
    sweep->add_option("--n-max", cfg.n_max, "largest convergent index for the exact checks");
    sweep->add_option("--precision", cfg.precision, "series precision");
    sweep->add_option("--threads", cfg.threads, "worker threads (0 = hardware concurrency)");
    add_common(sweep);

    std::vector<std::string> argv_store{"f2cf"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    Emitter em(out, cfg.mode());
    try {
        if (verify->parsed()) return cmd_verify(cfg, em);
        if (expand->parsed()) return cmd_expand(cfg, em);
        if (riccati->parsed()) return cmd_riccati(cfg, em);
        if (baum->parsed()) return cmd_baum_sweet(cfg, em);
        if (minecmd->parsed()) return cmd_mine(cfg, em);
        if (cont->parsed()) return cmd_continuant(cfg, em);
        if (sweep->parsed()) return cmd_sweep(cfg, em, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitCheckFailed;
    }
    return kExitUsage;
}

}  // namespace f2cf::cli
