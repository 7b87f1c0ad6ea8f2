#include "dioph/report.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace dioph {

namespace {

using nlohmann::ordered_json;

std::string dec(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string dec(const Rat& v) { return dec(rat_double(v)); }

}  // namespace

std::string interval_str(const Interval& I) {
    return rat_str(I.a.rational()) + ":" + rat_str(I.b.rational());
}

std::string measure_csv(const std::vector<MeasureRow>& rows) {
    std::ostringstream os;
    os << "case,n,H,psi,delta,interval,measure_lo,measure_hi,measure_rat,"
          "poly_count,essential_count,nonessential_count,wall_ms\n";
    for (const auto& r : rows) {
        os << case_name(r.deriv_case) << ',' << r.n << ',' << r.H << ',' << r.psi_id
           << ',' << rat_str(r.delta) << ',' << interval_str(r.I) << ','
           << dec(r.measure.lo) << ',' << dec(r.measure.hi) << ','
           << (r.measure_rat ? rat_str(*r.measure_rat) : "") << ',' << r.poly_count
           << ',' << r.essential_count << ',' << r.nonessential_count << ','
           << dec(r.wall_ms) << '\n';
    }
    return os.str();
}

namespace {

ordered_json measure_row_json(const MeasureRow& r) {
    ordered_json j;
    j["case"] = case_name(r.deriv_case);
    j["n"] = r.n;
    j["H"] = r.H;
    j["psi"] = r.psi_id;
    j["delta"] = rat_str(r.delta);
    j["interval"] = interval_str(r.I);
    j["measure_lo"] = rat_str(r.measure.lo);
    j["measure_hi"] = rat_str(r.measure.hi);
    if (r.measure_rat) j["measure_rat"] = rat_str(*r.measure_rat);
    j["poly_count"] = r.poly_count;
    j["essential_count"] = r.essential_count;
    j["nonessential_count"] = r.nonessential_count;
    j["wall_ms"] = r.wall_ms;
    return j;
}

ordered_json report_shell(const std::string& type) {
    ordered_json j;
    j["version"] = kArtifactVersion;
    j["type"] = type;
    return j;
}

}  // namespace

std::string measure_json(const std::vector<MeasureRow>& rows) {
    ordered_json j = report_shell("measure");
    j["rows"] = ordered_json::array();
    for (const auto& r : rows) j["rows"].push_back(measure_row_json(r));
    return j.dump(2) + "\n";
}

std::string scaling_csv(const ScalingReport& rep) {
    std::ostringstream os;
    os << "case,n,H,psi,delta,interval,measure_lo,measure_hi,measure_rat,"
          "poly_count,essential_count,nonessential_count,wall_ms,ratio\n";
    for (const auto& r : rep.rows) {
        os << case_name(r.deriv_case) << ',' << r.n << ',' << r.H << ',' << r.psi_id
           << ',' << rat_str(r.delta) << ',' << interval_str(r.I) << ','
           << dec(r.measure.lo) << ',' << dec(r.measure.hi) << ','
           << (r.measure_rat ? rat_str(*r.measure_rat) : "") << ',' << r.poly_count
           << ',' << r.essential_count << ',' << r.nonessential_count << ','
           << dec(r.wall_ms) << ',' << dec(r.ratio) << '\n';
    }
    return os.str();
}

std::string scaling_json(const ScalingReport& rep) {
    ordered_json j = report_shell("scaling");
    j["rows"] = ordered_json::array();
    for (const auto& r : rep.rows) {
        ordered_json row = measure_row_json(r);
        row["ratio"] = r.ratio;
        j["rows"].push_back(std::move(row));
    }
    j["log2_ratios"] = rep.log2_ratios;
    return j.dump(2) + "\n";
}

std::string bc_csv(const std::vector<BcRow>& rows) {
    std::ostringstream os;
    os << "m,tau_lo,tau_hi,sum_lo,sum_hi\n";
    for (const auto& r : rows)
        os << r.m << ',' << dec(r.tau_measure.lo) << ',' << dec(r.tau_measure.hi)
           << ',' << dec(r.partial_sum.lo) << ',' << dec(r.partial_sum.hi) << '\n';
    return os.str();
}

std::string bc_json(const std::vector<BcRow>& rows) {
    ordered_json j = report_shell("bc-sum");
    j["rows"] = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json row;
        row["m"] = r.m;
        row["tau_lo"] = rat_str(r.tau_measure.lo);
        row["tau_hi"] = rat_str(r.tau_measure.hi);
        row["sum_lo"] = rat_str(r.partial_sum.lo);
        row["sum_hi"] = rat_str(r.partial_sum.hi);
        j["rows"].push_back(std::move(row));
    }
    return j.dump(2) + "\n";
}

std::string count_csv(const std::vector<CountRow>& rows) {
    std::ostringstream os;
    os << "n,H,exact_height,primitive_irreducible,ratio_to_hn\n";
    for (const auto& r : rows)
        os << r.n << ',' << r.H << ',' << r.exact_height << ','
           << r.primitive_irreducible << ',' << dec(r.ratio_to_hn) << '\n';
    return os.str();
}

std::string count_json(const std::vector<CountRow>& rows) {
    ordered_json j = report_shell("count");
    j["rows"] = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json row;
        row["n"] = r.n;
        row["H"] = r.H;
        row["exact_height"] = r.exact_height;
        row["primitive_irreducible"] = r.primitive_irreducible;
        row["ratio_to_hn"] = r.ratio_to_hn;
        j["rows"].push_back(std::move(row));
    }
    return j.dump(2) + "\n";
}

std::string wn_csv(const std::vector<BestApproxRow>& rows) {
    std::ostringstream os;
    os << "H,poly,value_lo,value_hi,exact_zero,log_ratio\n";
    for (const auto& r : rows)
        os << r.H << ',' << '"' << r.p.str() << '"' << ',' << dec(r.value.lo) << ','
           << dec(r.value.hi) << ',' << (r.exact_zero ? 1 : 0) << ','
           << dec(r.log_ratio) << '\n';
    return os.str();
}

std::string wn_json(const std::vector<BestApproxRow>& rows) {
    ordered_json j = report_shell("wn");
    j["rows"] = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json row;
        row["H"] = r.H;
        row["poly"] = r.p.str();
        row["value_lo"] = rat_str(r.value.lo);
        row["value_hi"] = rat_str(r.value.hi);
        row["exact_zero"] = r.exact_zero;
        row["log_ratio"] = r.log_ratio;
        j["rows"].push_back(std::move(row));
    }
    return j.dump(2) + "\n";
}

ResultCache::ResultCache(std::string dir) {
    if (dir.empty()) {
        if (const char* env = std::getenv("DIOPH_CACHE")) dir = env;
    }
    if (dir.empty()) dir = ".dioph-cache";
    root_ = dir;
}

std::string ResultCache::key_of(const std::string& canonical_config) {
    // FNV-1a 64-bit over the canonical config, artifact version appended
    std::string s = canonical_config + "|v" + kArtifactVersion;
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
    return buf;
}

namespace {

std::string fnv_hex(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
    return buf;
}

}  // namespace

std::optional<std::string> ResultCache::get(const std::string& key) const {
    std::ifstream in(root_ / key, std::ios::binary);
    if (!in) return std::nullopt;
    std::string header;
    if (!std::getline(in, header)) return std::nullopt;  // corrupt: no header
    std::ostringstream os;
    os << in.rdbuf();
    std::string payload = os.str();
    if (header != "dioph-cache " + fnv_hex(payload)) return std::nullopt;
    return payload;
}

void ResultCache::put(const std::string& key, const std::string& payload) const {
    std::error_code ec;
    std::filesystem::create_directories(root_, ec);
    std::filesystem::path tmp = root_ / (key + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << "dioph-cache " << fnv_hex(payload) << '\n' << payload;
        if (!out.good()) return;
    }
    std::filesystem::rename(tmp, root_ / key, ec);
}

}  // namespace dioph
