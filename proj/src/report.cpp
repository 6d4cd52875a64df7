#include "homcode/report.hpp"

#include <sstream>

namespace homcode {

AnalysisReport analyze(const LinearCode& code, std::optional<std::string> name, const Limits& limits) {
    return AnalysisReport{std::move(name), code, mhd_report(code, limits)};
}

Json weight_to_json(const WeightValue& w) {
    Json j;
    j["num"] = w.scaled;
    j["den"] = w.denom;
    return j;
}

Json rational_to_json(const Rational& r) {
    Json j;
    j["num"] = r.numerator();
    j["den"] = r.denominator();
    return j;
}

namespace {

Rational m_times(const BoundReport& b, std::int64_t k) {
    return Rational(static_cast<std::int64_t>(b.q), static_cast<std::int64_t>(b.q) - 1) * k;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string subtype_string(const std::vector<int>& st) {
    std::string s = "(";
    for (std::size_t i = 0; i < st.size(); ++i) s += (i ? "," : "") + std::to_string(st[i]);
    return s + ")";
}

std::string word_string(const Word& w) {
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + std::to_string(w[i].value);
    return s + "]";
}

}  // namespace

std::string mhd_line(const BoundReport& b) {
    std::string s = "MHD: ";
    if (b.is_mhd) {
        s += "yes";
    } else {
        const auto nk = static_cast<std::int64_t>(b.n) - static_cast<std::int64_t>(b.rank);
        s += "no (d = " + b.distance.d_hom.to_string() + " ≤ M(n−K) = " + to_string(m_times(b, nk)) + ")";
    }
    return s + ", socle MDS: " + yes_no(b.socle_is_mds);
}

std::string plotkin_line(const BoundReport& b) {
    if (b.distance.zero_code) return "zero code, Plotkin bound not applicable";
    const std::string d = b.distance.d_hom.to_string();
    if (b.distance.constant_weight) {
        std::string s = "constant weight " + d;
        if (b.plotkin->equality) return s + ", Plotkin equality";
        return s + ", Plotkin equality on the " + std::to_string(b.n - b.zero_coordinates.size()) +
               " non-degenerate coordinates (d = " + d + " < " + to_string(b.plotkin->rhs) + ")";
    }
    return "not constant weight, Plotkin strict (d = " + d + " < " + to_string(b.plotkin->rhs) + ")";
}

Json to_json(const AnalysisReport& a) {
    const LinearCode& c = a.code;
    const BoundReport& b = a.bounds;
    const ChainRing& R = c.ring();
    Json j;
    j["name"] = a.name ? Json(*a.name) : Json(nullptr);
    j["ring"] = ring_to_json(R.descriptor());
    j["ring_name"] = R.name();
    j["n"] = b.n;
    j["subtype"] = b.subtype;
    j["K"] = b.rank;
    j["k0"] = b.free_rank;
    j["dimension"] = rational_to_json(c.dimension());
    j["cardinality"] = b.distance.cardinality;
    j["d_hamming"] = b.distance.d_hamming;
    j["d_hom"] = weight_to_json(b.distance.d_hom);
    j["average_hom"] = rational_to_json(b.distance.average_hom);
    j["constant_weight"] = b.distance.constant_weight ? weight_to_json(*b.distance.constant_weight) : Json(nullptr);
    Json w;
    w["hamming"] = b.distance.hamming_witness ? word_to_json(R, *b.distance.hamming_witness) : Json(nullptr);
    w["hom"] = b.distance.hom_witness ? word_to_json(R, *b.distance.hom_witness) : Json(nullptr);
    j["witnesses"] = w;

    Json bj;
    bj["singleton_old_lhs"] = b.singleton.old_lhs;
    bj["singleton_old_holds"] = b.singleton.old_holds;
    bj["singleton_old_slack"] = b.singleton.old_slack;
    bj["singleton_new_lhs"] = b.singleton.new_lhs;
    bj["singleton_new_holds"] = b.singleton.new_holds;
    bj["singleton_new_slack"] = b.singleton.new_slack;
    bj["is_mhd"] = b.is_mhd;
    bj["socle_is_mds"] = b.socle_is_mds;
    bj["mainchar_applicable"] = b.mainchar_applicable;
    bj["plotkin_rhs_exact"] = b.plotkin ? rational_to_json(b.plotkin->rhs) : Json(nullptr);
    bj["plotkin_holds"] = b.plotkin ? Json(b.plotkin->holds) : Json(nullptr);
    bj["plotkin_equality"] = b.plotkin ? Json(b.plotkin->equality) : Json(nullptr);
    bj["plotkin_socle_rhs"] = b.plotkin_socle ? rational_to_json(b.plotkin_socle->rhs) : Json(nullptr);
    bj["plotkin_socle_holds"] = b.plotkin_socle ? Json(b.plotkin_socle->holds) : Json(nullptr);
    bj["fullchar_case"] = std::string(to_string(b.fullchar));
    bj["in_socle"] = b.in_socle;
    bj["findings"] = b.findings;
    j["bounds"] = bj;

    const Field& F = R.field();
    Json sj;
    sj["field"] = {{"p", F.p()}, {"r", F.r()}, {"modulus", F.descriptor().modulus}};
    sj["dimension"] = b.socle.dimension;
    sj["d_hamming"] = b.socle_d_hamming;
    sj["generators"] = Json::array();
    const FqMatrix& S = b.socle.generators;
    for (std::size_t i = 0; i < S.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < S.cols(); ++k) row.push_back(field_element_to_json(F, S.at(i, k)));
        sj["generators"].push_back(row);
    }
    j["socle"] = sj;
    j["zero_coordinates"] = b.zero_coordinates;
    return j;
}

std::string to_text(const AnalysisReport& a) {
    const LinearCode& c = a.code;
    const BoundReport& b = a.bounds;
    const ChainRing& R = c.ring();
    const auto nk = static_cast<std::int64_t>(b.n) - static_cast<std::int64_t>(b.rank);
    std::ostringstream os;
    if (a.name) os << "code: " << *a.name << "\n";
    os << "ring: " << R.name() << " (q = " << R.q() << ", s = " << R.s() << ")\n";
    os << "n = " << b.n << ", subtype " << subtype_string(b.subtype) << ", K = " << b.rank << ", k0 = " << b.free_rank
       << ", k = " << to_string(c.dimension()) << "\n";
    os << "|C| = " << b.distance.cardinality << "\n";
    os << "d_H = " << b.distance.d_hamming << ", d_Hom = " << b.distance.d_hom.to_string() << "\n";
    os << mhd_line(b) << "\n";
    os << "Singleton: floor((d-1)/M) = " << b.singleton.old_lhs << " <= n-K = " << nk << " (slack "
       << b.singleton.old_slack << "); floor_h(d/M) = " << b.singleton.new_lhs << " <= " << nk << " (slack "
       << b.singleton.new_slack << ")\n";
    os << plotkin_line(b) << "\n";
    if (b.plotkin_socle)
        os << "Plotkin (socle form): d <= " << to_string(b.plotkin_socle->rhs) << " ("
           << (b.plotkin_socle->holds ? "holds" : "VIOLATED") << ")\n";
    os << "average weight = " << to_string(b.distance.average_hom) << "\n";
    os << "case: " << to_string(b.fullchar) << "; q > n-K+1: " << yes_no(b.mainchar_applicable)
       << "; in socle: " << yes_no(b.in_socle) << "\n";
    os << "socle over F_" << R.q() << " (dimension " << b.socle.dimension << ", d_H = " << b.socle_d_hamming << "):\n";
    const FqMatrix& S = b.socle.generators;
    for (std::size_t i = 0; i < S.rows(); ++i) {
        os << "  [";
        for (std::size_t k = 0; k < S.cols(); ++k) os << (k ? " " : "") << S.at(i, k).value;
        os << "]\n";
    }
    if (b.distance.hom_witness) os << "minimum-weight codeword: " << word_string(*b.distance.hom_witness) << "\n";
    if (!b.zero_coordinates.empty()) {
        os << "zero coordinates:";
        for (auto z : b.zero_coordinates) os << " " << z;
        os << "\n";
    }
    for (const auto& f : b.findings) os << "note: " << f << "\n";
    return os.str();
}

}  // namespace homcode
