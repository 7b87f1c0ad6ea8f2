#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "dioph/report.hpp"

using namespace dioph;

namespace {

struct RunConfig {
    std::string command;
    unsigned n = 2;
    std::string delta = "1/10";
    std::string psi = "pow:c=1,w=3";
    std::string interval = "1:2";
    std::string heights = "8";
    std::string tol = "1/1000000000";
    unsigned workers = 1;
    std::string cache_dir;
    bool no_cache = false;
    std::string out;
    std::string format = "csv";
    std::string deriv_case = "big";
    // subcommand-specific
    std::string x = "3/2";     // wn target
    unsigned m_blocks = 4;     // bc-sum / tau
    long H = 8;                // single-height commands
    std::uint64_t budget = 2000000;  // max family members per run

    std::string canonical() const {
        std::ostringstream os;
        os << command << "|n=" << n << "|delta=" << delta << "|psi=" << psi
           << "|I=" << interval << "|heights=" << heights << "|tol=" << tol
           << "|case=" << deriv_case << "|x=" << x << "|m=" << m_blocks
           << "|H=" << H << "|fmt=" << format;
        return os.str();
    }
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CertError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rat parse_rat_or_throw(const std::string& s, const std::string& what) {
    try {
        return parse_rat(s);
    } catch (const std::exception& e) {
        throw ConfigError(what + ": malformed rational '" + s + "'");
    }
}

PsiSpec parse_psi(const std::string& s) {
    if (s.rfind("pow:", 0) == 0) {
        Rat c(1), w(3);
        std::string body = s.substr(4);
        std::istringstream is(body);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            auto eq = tok.find('=');
            if (eq == std::string::npos) throw ConfigError("psi: expected key=value in '" + s + "'");
            std::string k = tok.substr(0, eq), v = tok.substr(eq + 1);
            if (k == "c")
                c = parse_rat_or_throw(v, "psi c");
            else if (k == "w")
                w = parse_rat_or_throw(v, "psi w");
            else
                throw ConfigError("psi: unknown key '" + k + "'");
        }
        return PsiSpec::power_law(std::move(c), std::move(w));
    }
    if (s.rfind("table:", 0) == 0) {
        std::ifstream in(s.substr(6));
        if (!in) throw ConfigError("psi table: cannot open '" + s.substr(6) + "'");
        std::map<long, Rat> t;
        long H;
        std::string v;
        while (in >> H >> v) t[H] = parse_rat_or_throw(v, "psi table value");
        if (t.empty()) throw ConfigError("psi table: empty");
        return PsiSpec::from_table(std::move(t));
    }
    throw ConfigError("psi: expected 'pow:c=..,w=..' or 'table:path', got '" + s + "'");
}

Interval parse_interval(const std::string& s) {
    auto colon = s.find(':', 1);  // skip a possible leading '-'
    if (colon == std::string::npos)
        throw ConfigError("interval: expected 'a:b', got '" + s + "'");
    Rat a = parse_rat_or_throw(s.substr(0, colon), "interval a");
    Rat b = parse_rat_or_throw(s.substr(colon + 1), "interval b");
    if (a >= b) throw ConfigError("interval: a >= b");
    return Interval::closed(std::move(a), std::move(b));
}

std::vector<long> parse_heights(const std::string& s) {
    std::vector<long> out;
    if (s.rfind("m=", 0) == 0) {
        // dyadic blocks m=1..M -> heights 2^1 .. 2^M
        auto dots = s.find("..");
        long lo = std::stol(s.substr(2)), hi = dots == std::string::npos
                                                   ? lo
                                                   : std::stol(s.substr(dots + 2));
        for (long m = lo; m <= hi; ++m) out.push_back(1L << m);
        return out;
    }
    // A:B:x2 (doubling), A:B (step 1), or a comma list
    std::vector<std::string> parts;
    std::istringstream is(s);
    std::string tok;
    if (s.find(':') != std::string::npos) {
        while (std::getline(is, tok, ':')) parts.push_back(tok);
        long a = std::stol(parts.at(0)), b = std::stol(parts.at(1));
        bool doubling = parts.size() > 2 && parts[2] == "x2";
        for (long h = a; h <= b; h = doubling ? h * 2 : h + 1) out.push_back(h);
    } else {
        while (std::getline(is, tok, ',')) out.push_back(std::stol(tok));
    }
    if (out.empty() || out.front() < 1) throw ConfigError("heights: empty or < 1");
    return out;
}

DerivCase parse_case(const std::string& s) {
    if (s == "big") return DerivCase::BIG;
    if (s == "medium") return DerivCase::MEDIUM;
    if (s == "small") return DerivCase::SMALL;
    throw ConfigError("case: expected big|medium|small, got '" + s + "'");
}

CaseConfig make_case_config(const RunConfig& rc) {
    CaseConfig cfg;
    cfg.n = rc.n;
    cfg.delta = parse_rat_or_throw(rc.delta, "delta");
    cfg.I = parse_interval(rc.interval);
    cfg.psi = parse_psi(rc.psi);
    cfg.tol = parse_rat_or_throw(rc.tol, "tol");
    try {
        cfg.validate();
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
    return cfg;
}

void check_budget(const RunConfig& rc, unsigned n, const std::vector<long>& heights) {
    std::uint64_t total = 0;
    for (long H : heights) {
        double raw = std::pow(2.0 * H + 1, n + 1.0);
        if (raw > 1e18) throw BudgetError("budget: family too large at H=" + std::to_string(H));
        total += static_cast<std::uint64_t>(raw);
    }
    if (total > rc.budget)
        throw BudgetError("budget: " + std::to_string(total) + " members exceed --budget " +
                          std::to_string(rc.budget));
}

void write_artifact(const RunConfig& rc, const std::string& payload) {
    if (!rc.out.empty()) {
        std::ofstream f(rc.out, std::ios::binary | std::ios::trunc);
        f << payload;
        if (!f.good()) throw ConfigError("cannot write output file '" + rc.out + "'");
    } else {
        std::cout << payload;
    }
}

std::string run_payload(const RunConfig& rc) {
    bool json = rc.format == "json";
    if (rc.command == "enum" || rc.command == "count") {
        auto heights = parse_heights(rc.heights);
        check_budget(rc, rc.n, heights);
        auto rows = count_sweep(rc.n, heights);
        return json ? count_json(rows) : count_csv(rows);
    }
    if (rc.command == "measure") {
        CaseConfig cfg = make_case_config(rc);
        auto heights = parse_heights(rc.heights);
        check_budget(rc, rc.n, heights);
        std::vector<MeasureRow> rows;
        for (long H : heights)
            rows.push_back(measure_case(cfg, H, parse_case(rc.deriv_case), rc.workers));
        return json ? measure_json(rows) : measure_csv(rows);
    }
    if (rc.command == "scaling") {
        CaseConfig cfg = make_case_config(rc);
        auto heights = parse_heights(rc.heights);
        check_budget(rc, rc.n, heights);
        auto rep = scaling_sweep(cfg, heights, parse_case(rc.deriv_case), rc.workers);
        return json ? scaling_json(rep) : scaling_csv(rep);
    }
    if (rc.command == "bc-sum" || rc.command == "tau") {
        CaseConfig cfg = make_case_config(rc);
        std::vector<long> hs;
        for (unsigned m = 1; m <= rc.m_blocks; ++m) hs.push_back(1L << m);
        check_budget(rc, rc.n, hs);
        auto rows = bc_partial_sums(cfg, rc.m_blocks);
        return json ? bc_json(rows) : bc_csv(rows);
    }
    if (rc.command == "lemma1-check") {
        // one representative window certificate per run
        CaseConfig cfg = make_case_config(rc);
        IntPoly f{{-2, 0, 1}};  // x^2 - 2
        auto res = ck_window(f, 2, {Rat(1, 4), std::nullopt}, {Rat(0), Rat(1)},
                             cfg.a(), cfg.b());
        if (!res.count_ok || !res.length_ok)
            throw CertError("lemma1-check: certificate failed");
        std::ostringstream os;
        os << "components,bound,max_length,length_bound\n"
           << res.components << ',' << res.component_bound << ','
           << rat_str(res.max_length.hi) << ','
           << (res.length_bound ? rat_str(res.length_bound->lo) : "inf") << '\n';
        return os.str();
    }
    if (rc.command == "lemma2-check") {
        CaseConfig cfg = make_case_config(rc);
        check_budget(rc, rc.n, {rc.H});
        Lemma2Report rep = lemma2_certify(cfg, rc.H);
        std::ostringstream os;
        os << "H,polys,points,passed,failures\n"
           << rep.H << ',' << rep.polys_tested << ',' << rep.points_tested << ','
           << rep.points_passed << ',' << rep.failures.size() << '\n';
        return os.str();
    }
    if (rc.command == "essential") {
        CaseConfig cfg = make_case_config(rc);
        check_budget(rc, rc.n, {rc.H});
        MeasureRow row = measure_case(cfg, rc.H, DerivCase::MEDIUM, rc.workers);
        return json ? measure_json({row}) : measure_csv({row});
    }
    if (rc.command == "wn") {
        auto heights = parse_heights(rc.heights);
        check_budget(rc, rc.n, heights);
        Rat x = parse_rat_or_throw(rc.x, "x");
        auto rows = wn_table(RealPoint(x), rc.n, heights);
        return json ? wn_json(rows) : wn_csv(rows);
    }
    throw ConfigError("unknown subcommand '" + rc.command + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic laboratory for stratified polynomial approximation"};
    app.require_subcommand(1);

    RunConfig rc;
    std::string config_file;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", rc.n, "polynomial degree bound");
        sub->add_option("--delta", rc.delta, "delta as a rational, e.g. 1/10");
        sub->add_option("--psi", rc.psi, "psi spec: pow:c=1,w=3 or table:path");
        sub->add_option("--interval", rc.interval, "interval a:b (must satisfy 0<c0(I))");
        sub->add_option("--heights", rc.heights, "heights: A:B, A:B:x2, m=1..M, or list");
        sub->add_option("--H", rc.H, "single height");
        sub->add_option("--tol", rc.tol, "measure tolerance (rational or decimal)");
        sub->add_option("--workers", rc.workers, "worker threads");
        sub->add_option("--case", rc.deriv_case, "derivative case: big|medium|small");
        sub->add_option("--x", rc.x, "target point for wn");
        sub->add_option("--m", rc.m_blocks, "number of dyadic blocks");
        sub->add_option("--budget", rc.budget, "max family members per run");
        sub->add_option("--cache-dir", rc.cache_dir, "cache directory (or DIOPH_CACHE)");
        sub->add_flag("--no-cache", rc.no_cache, "bypass the result cache");
        sub->add_option("--out", rc.out, "output file (stdout if omitted)");
        sub->add_option("--format", rc.format, "csv|json");
        sub->set_config("--config", "", "flat key=value config file");
    };
    for (const char* name : {"enum", "count", "measure", "scaling", "bc-sum",
                             "lemma1-check", "lemma2-check", "essential", "tau", "wn"})
        add_common(app.add_subcommand(name));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    rc.command = app.get_subcommands().front()->get_name();

    try {
        ResultCache cache(rc.cache_dir);
        std::string key = ResultCache::key_of(rc.canonical());
        std::string payload;
        bool hit = false;
        if (!rc.no_cache) {
            if (auto cached = cache.get(key)) {
                payload = *cached;
                hit = true;
            }
        }
        if (!hit) {
            payload = run_payload(rc);
            if (!rc.no_cache) cache.put(key, payload);
        }
        write_artifact(rc, payload);
        std::cerr << rc.command << ": ok (" << payload.size() << " bytes"
                  << (hit ? ", cached" : "") << ")\n";
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const BudgetError& e) {
        std::cerr << "budget exhausted: " << e.what() << '\n';
        return 3;
    } catch (const CertError& e) {
        std::cerr << "certification failure: " << e.what() << '\n';
        return 4;
    } catch (const PrecisionExhausted& e) {
        std::cerr << "certification failure: " << e.what() << '\n';
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    }
}
