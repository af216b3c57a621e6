#include "evildet/report.hpp"

#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

namespace evildet {

using nlohmann::json;

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
    }
    return "skipped";
}

namespace {

CheckStatus status_from_string(const std::string& s) {
    if (s == "pass") return CheckStatus::Pass;
    if (s == "fail") return CheckStatus::Fail;
    if (s == "skipped") return CheckStatus::Skipped;
    throw std::invalid_argument("unknown check status: " + s);
}

std::string z(const mpz_class& v) { return v.get_str(); }

} // namespace

json record_to_json(const VerificationRecord& rec) {
    json j;
    j["schema"] = 1;
    j["p"] = rec.p;
    j["residue_class_mod8"] = rec.residue_class_mod8;
    j["det_bareiss"] = z(rec.det_bareiss);
    j["det_modular"] = z(rec.det_modular);
    if (rec.h) j["h"] = *rec.h; else j["h"] = nullptr;
    j["eps_alpha"] = rec.eps_alpha ? json(z(*rec.eps_alpha)) : json(nullptr);
    j["eps_beta"] = rec.eps_beta ? json(z(*rec.eps_beta)) : json(nullptr);
    j["a"] = rec.a ? json(z(*rec.a)) : json(nullptr);
    j["b"] = rec.b ? json(z(*rec.b)) : json(nullptr);
    json checks = json::object();
    for (const auto& name : check_names())
        checks[name] = to_string(rec.checks.count(name) ? rec.checks.at(name)
                                                        : CheckStatus::Skipped);
    j["checks"] = checks;
    j["status"] = rec.passed() ? "PASS" : "FAIL";
    if (!rec.elapsed_ms.empty()) j["elapsed_ms"] = rec.elapsed_ms;
    return j;
}

VerificationRecord record_from_json(const json& j) {
    if (j.at("schema").get<int>() != 1)
        throw std::invalid_argument("unsupported record schema");
    VerificationRecord rec;
    rec.p = j.at("p").get<std::uint64_t>();
    rec.residue_class_mod8 = j.at("residue_class_mod8").get<unsigned>();
    rec.det_bareiss = mpz_class(j.at("det_bareiss").get<std::string>());
    rec.det_modular = mpz_class(j.at("det_modular").get<std::string>());
    if (!j.at("h").is_null()) rec.h = j.at("h").get<std::uint64_t>();
    auto opt_z = [&](const char* key) -> std::optional<mpz_class> {
        if (j.at(key).is_null()) return std::nullopt;
        return mpz_class(j.at(key).get<std::string>());
    };
    rec.eps_alpha = opt_z("eps_alpha");
    rec.eps_beta = opt_z("eps_beta");
    rec.a = opt_z("a");
    rec.b = opt_z("b");
    for (const auto& [name, value] : j.at("checks").items())
        rec.checks[name] = status_from_string(value.get<std::string>());
    if (j.contains("elapsed_ms"))
        rec.elapsed_ms = j.at("elapsed_ms").get<std::map<std::string, double>>();
    return rec;
}

std::string records_to_json(const std::vector<VerificationRecord>& recs) {
    json arr = json::array();
    for (const auto& rec : recs) arr.push_back(record_to_json(rec));
    return arr.dump(2) + "\n";
}

std::string csv_header() {
    std::string h = "p,residue_class_mod8,det_bareiss,det_modular,h,eps_alpha,"
                    "eps_beta,a,b";
    for (const auto& name : check_names()) h += "," + name;
    return h + ",status\n";
}

std::string record_to_csv_row(const VerificationRecord& rec) {
    std::ostringstream out;
    out << rec.p << ',' << rec.residue_class_mod8 << ',' << z(rec.det_bareiss)
        << ',' << z(rec.det_modular) << ',';
    if (rec.h) out << *rec.h;
    out << ',';
    if (rec.eps_alpha) out << z(*rec.eps_alpha);
    out << ',';
    if (rec.eps_beta) out << z(*rec.eps_beta);
    out << ',';
    if (rec.a) out << z(*rec.a);
    out << ',';
    if (rec.b) out << z(*rec.b);
    for (const auto& name : check_names())
        out << ','
            << to_string(rec.checks.count(name) ? rec.checks.at(name)
                                                : CheckStatus::Skipped);
    out << ',' << (rec.passed() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

std::string records_to_csv(const std::vector<VerificationRecord>& recs) {
    std::string out = csv_header();
    for (const auto& rec : recs) out += record_to_csv_row(rec);
    return out;
}

std::string records_to_table(const std::vector<VerificationRecord>& recs) {
    std::ostringstream out;
    out << std::left << std::setw(8) << "p" << std::setw(6) << "mod8"
        << std::setw(24) << "det C" << std::setw(6) << "h" << std::setw(24) << "a"
        << "status\n";
    for (const auto& rec : recs) {
        out << std::left << std::setw(8) << rec.p << std::setw(6)
            << rec.residue_class_mod8 << std::setw(24) << z(rec.det_bareiss)
            << std::setw(6) << (rec.h ? std::to_string(*rec.h) : "-")
            << std::setw(24) << (rec.a ? z(*rec.a) : "-")
            << (rec.passed() ? "PASS" : "FAIL") << '\n';
    }
    return out.str();
}

} // namespace evildet
