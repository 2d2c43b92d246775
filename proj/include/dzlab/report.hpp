#pragma once

// Canonical serialization of report types (sorted keys, 17-significant-
// digit floats, deterministic bytes for fixed inputs) plus the run
// manifest every emitted file references.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <sys/stat.h>
#include <vector>

#include "dzlab/common.hpp"
#include "dzlab/moments.hpp"
#include "dzlab/quadruples.hpp"
#include "dzlab/special_sums.hpp"

namespace dzlab {

namespace detail {

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace detail

// Flat JSON object with canonical (sorted-key) emission.
class CanonicalJson {
public:
    void put(const std::string& key, double v) { fields_[key] = detail::format_double(v); }
    void put(const std::string& key, std::uint64_t v) { fields_[key] = std::to_string(v); }
    void put(const std::string& key, int v) { fields_[key] = std::to_string(v); }
    void put(const std::string& key, const std::string& v) {
        fields_[key] = "\"" + detail::json_escape(v) + "\"";
    }
    void put(const std::string& key, const char* v) { put(key, std::string(v)); }
    void put_null(const std::string& key) { fields_[key] = "null"; }
    void put_raw(const std::string& key, const std::string& raw) { fields_[key] = raw; }

    std::string str() const {
        std::string out = "{";
        bool first = true;
        for (const auto& [k, v] : fields_) {
            if (!first) out += ",";
            first = false;
            out += "\"" + detail::json_escape(k) + "\":" + v;
        }
        out += "}";
        return out;
    }

private:
    std::map<std::string, std::string> fields_;
};

// ---------------------------------------------------------------------------
// Run manifest.  The id hashes only the deterministic fields (command,
// parameters, tool version, seed); timestamps and wall time live in the
// manifest file but never enter the id, so report bytes stay reproducible.
// ---------------------------------------------------------------------------

struct RunManifest {
    std::string command;
    std::map<std::string, std::string> params;
    std::string started;  // ISO-8601, UTC
    std::string ended;
    std::string tool_version = kToolVersion;
    std::vector<std::string> input_caches;
    std::uint64_t seed = 0;
    double wall_time_s = 0.0;

    std::string id() const {
        std::uint64_t h = 1469598103934665603ull;  // FNV-1a
        auto mix = [&h](const std::string& s) {
            for (unsigned char c : s) {
                h ^= c;
                h *= 1099511628211ull;
            }
            h ^= 0xff;
            h *= 1099511628211ull;
        };
        mix(command);
        for (const auto& [k, v] : params) {
            mix(k);
            mix(v);
        }
        mix(tool_version);
        mix(std::to_string(seed));
        for (const auto& c : input_caches) mix(c);
        char buf[20];
        std::snprintf(buf, sizeof(buf), "%016llx",
                      static_cast<unsigned long long>(h));
        return buf;
    }

    std::string to_json() const {
        CanonicalJson j;
        j.put("command", command);
        CanonicalJson p;
        for (const auto& [k, v] : params) p.put(k, v);
        j.put_raw("params", p.str());
        j.put("started", started);
        j.put("ended", ended);
        j.put("tool_version", tool_version);
        j.put("seed", seed);
        j.put("wall_time_s", wall_time_s);
        j.put("manifest_id", id());
        std::string caches = "[";
        for (std::size_t i = 0; i < input_caches.size(); ++i) {
            if (i) caches += ",";
            caches += "\"" + detail::json_escape(input_caches[i]) + "\"";
        }
        caches += "]";
        j.put_raw("input_caches", caches);
        return j.str();
    }
};

inline std::string iso_timestamp_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// ---------------------------------------------------------------------------
// Report serializers.
// ---------------------------------------------------------------------------

inline std::string to_json(const MomentReport& r, const std::string& manifest_id) {
    CanonicalJson j;
    j.put("family", family_name(r.spec.family));
    j.put("p", r.spec.p);
    j.put("T", r.spec.T);
    j.put("H", r.spec.H);
    j.put("U", r.spec.U);
    j.put("y_const", r.spec.y_const);
    j.put("y", r.spec.y());
    j.put("direct_value", r.direct_value);
    if (r.main_quadruple) j.put("main_quadruple", *r.main_quadruple);
    else j.put_null("main_quadruple");
    if (r.main_diagonal) j.put("main_diagonal", *r.main_diagonal);
    else j.put_null("main_diagonal");
    j.put("normalizer", r.normalizer);
    j.put("evaluator_error_budget", r.evaluator_error_budget);
    j.put("panel_count", r.panel_count);
    j.put("ratio_direct_to_normalizer", r.ratio_direct_to_normalizer());
    if (auto v = r.ratio_direct_to_diagonal()) j.put("ratio_direct_to_diagonal", *v);
    if (auto v = r.ratio_quadruple_to_diagonal())
        j.put("ratio_quadruple_to_diagonal", *v);
    j.put("manifest_id", manifest_id);
    return j.str();
}

inline const char* kMomentCsvHeader =
    "family,p,T,H,U,y_const,direct_value,main_quadruple,main_diagonal,"
    "normalizer,evaluator_error_budget,panel_count,manifest_id";

inline std::string to_csv_row(const MomentReport& r, const std::string& manifest_id) {
    std::ostringstream os;
    os << family_name(r.spec.family) << ',' << r.spec.p << ','
       << detail::format_double(r.spec.T) << ',' << detail::format_double(r.spec.H)
       << ',' << detail::format_double(r.spec.U) << ','
       << detail::format_double(r.spec.y_const) << ','
       << detail::format_double(r.direct_value) << ','
       << (r.main_quadruple ? detail::format_double(*r.main_quadruple) : "") << ','
       << (r.main_diagonal ? detail::format_double(*r.main_diagonal) : "") << ','
       << detail::format_double(r.normalizer) << ','
       << detail::format_double(r.evaluator_error_budget) << ',' << r.panel_count
       << ',' << manifest_id;
    return os.str();
}

inline std::string to_json(const SumReport& r, const std::string& manifest_id) {
    CanonicalJson j;
    j.put("which", sum_kind_name(r.which));
    j.put("z", static_cast<std::uint64_t>(r.z));
    if (r.u) j.put("u", static_cast<std::uint64_t>(*r.u));
    else j.put_null("u");
    j.put("value", r.value);
    j.put("family_count", static_cast<std::uint64_t>(r.family_count));
    j.put("bound_form", r.bound_form);
    j.put("manifest_id", manifest_id);
    return j.str();
}

inline const char* kSumCsvHeader = "which,z,u,value,family_count,bound_form,manifest_id";

inline std::string to_csv_row(const SumReport& r, const std::string& manifest_id) {
    std::ostringstream os;
    os << sum_kind_name(r.which) << ',' << r.z << ','
       << (r.u ? std::to_string(*r.u) : "") << ',' << detail::format_double(r.value)
       << ',' << r.family_count << ',' << detail::format_double(r.bound_form) << ','
       << manifest_id;
    return os.str();
}

inline const char* kGapCsvHeader =
    "n1,n2,n3,n4,signs,alpha_star,lower_bound,ratio";

inline std::string to_csv_row(const GapCertificate& c) {
    std::ostringstream os;
    os << c.ns[0] << ',' << c.ns[1] << ',' << c.ns[2] << ',' << c.ns[3] << ','
       << (c.signs == SignPattern::pp_mm ? "++--" : "+++-") << ','
       << detail::format_double(c.alpha_star) << ','
       << detail::format_double(c.lower_bound) << ','
       << (c.is_zero ? "0" : detail::format_double(c.ratio()));
    return os.str();
}

inline const char* kFamilyCsvHeader = "l,m1,m2,m3,m4,n1,n2,n3,n4,multiplicity";

inline std::string to_csv_row(const QuadrupleFamily& f) {
    std::ostringstream os;
    os << f.kernel << ',' << f.ms[0] << ',' << f.ms[1] << ',' << f.ms[2] << ','
       << f.ms[3] << ',' << f.ns[0] << ',' << f.ns[1] << ',' << f.ns[2] << ','
       << f.ns[3] << ',' << f.multiplicity;
    return os.str();
}

// Batch emission of gap certificates, sorted by ratio ascending (exact
// zeros first).
inline void write_gap_certificates_csv(std::vector<GapCertificate> certs,
                                       const std::string& path) {
    std::sort(certs.begin(), certs.end(),
              [](const GapCertificate& a, const GapCertificate& b) {
                  const double ra = a.is_zero ? -1.0 : a.ratio();
                  const double rb = b.is_zero ? -1.0 : b.ratio();
                  return ra < rb;
              });
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << kGapCsvHeader << '\n';
    for (const auto& c : certs) out << to_csv_row(c) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

// Writes content to path; errors carry the path.
inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

// Appends a CSV row, emitting the header first if the file is new/empty.
inline void append_csv_row(const std::string& path, const char* header,
                           const std::string& row) {
    struct stat st{};
    const bool fresh = stat(path.c_str(), &st) != 0 || st.st_size == 0;
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    if (fresh) out << header << '\n';
    out << row << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace dzlab
