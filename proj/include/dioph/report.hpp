#ifndef DIOPH_REPORT_HPP
#define DIOPH_REPORT_HPP

#include <filesystem>

#include "dioph/experiments.hpp"

namespace dioph {

inline constexpr const char* kArtifactVersion = "1";

std::string interval_str(const Interval& I);

/// Fixed column schema:
/// case,n,H,psi,delta,interval,measure_lo,measure_hi,measure_rat,
/// poly_count,essential_count,nonessential_count,wall_ms
std::string measure_csv(const std::vector<MeasureRow>& rows);
std::string measure_json(const std::vector<MeasureRow>& rows);

/// Measure columns plus ratio = measure / (H^(n-1) * psi(H)).
std::string scaling_csv(const ScalingReport& rep);
std::string scaling_json(const ScalingReport& rep);

std::string bc_csv(const std::vector<BcRow>& rows);
std::string bc_json(const std::vector<BcRow>& rows);

std::string count_csv(const std::vector<CountRow>& rows);
std::string count_json(const std::vector<CountRow>& rows);

std::string wn_csv(const std::vector<BestApproxRow>& rows);
std::string wn_json(const std::vector<BestApproxRow>& rows);

/// Content-addressed result cache.  The key is hashed from a canonical
/// description of the run (command, parameters, artifact version); equal
/// keys yield byte-identical payloads.  Writes go through a temp file and
/// an atomic rename.
class ResultCache {
  public:
    /// Resolution order: explicit dir > DIOPH_CACHE env var > ".dioph-cache".
    explicit ResultCache(std::string dir = "");

    const std::filesystem::path& root() const { return root_; }
    static std::string key_of(const std::string& canonical_config);
    std::optional<std::string> get(const std::string& key) const;
    void put(const std::string& key, const std::string& payload) const;

  private:
    std::filesystem::path root_;
};

}  // namespace dioph

#endif
