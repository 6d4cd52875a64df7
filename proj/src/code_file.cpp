#include "homcode/code_file.hpp"

#include "homcode/error.hpp"

#include <fstream>
#include <sstream>

namespace homcode {

namespace {

Error parse_error(const std::string& where, const std::string& what) {
    return Error(ErrorKind::Parse, "field '" + where + "': " + what);
}

const Json& member(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw parse_error(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw parse_error(where.empty() ? key : where + "." + key, "missing");
    return *it;
}

std::int64_t integer(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) throw parse_error(where, "expected an integer");
    return j.get<std::int64_t>();
}

int small_int(const Json& j, const std::string& where) {
    const auto v = integer(j, where);
    if (v < 0 || v > 1 << 20) throw parse_error(where, "out of range");
    return static_cast<int>(v);
}

}  // namespace

Json ring_to_json(const RingDescriptor& d) {
    Json j;
    if (d.family == RingFamily::IntegerModular) {
        j["family"] = "Zps";
        j["p"] = d.p;
        j["s"] = d.s;
    } else {
        j["family"] = "FqXs";
        j["p"] = d.p;
        j["r"] = d.r;
        j["s"] = d.s;
        j["field_modulus"] = d.field_modulus;
    }
    return j;
}

RingDescriptor ring_from_json(const Json& j) {
    const std::string family_at = "ring.family";
    const Json& fam = member(j, "family", "ring");
    if (!fam.is_string()) throw parse_error(family_at, "expected a string");
    const auto family = fam.get<std::string>();
    const int p = small_int(member(j, "p", "ring"), "ring.p");
    const int s = small_int(member(j, "s", "ring"), "ring.s");
    if (s < 1) throw parse_error("ring.s", "must be at least 1");
    if (family == "Zps") return RingDescriptor::zps(p, s);
    if (family != "FqXs") throw parse_error(family_at, "expected \"Zps\" or \"FqXs\", got \"" + family + "\"");
    const int r = small_int(member(j, "r", "ring"), "ring.r");
    std::vector<int> modulus;
    if (auto it = j.find("field_modulus"); it != j.end()) {
        if (!it->is_array()) throw parse_error("ring.field_modulus", "expected an array");
        for (std::size_t i = 0; i < it->size(); ++i)
            modulus.push_back(small_int((*it)[i], "ring.field_modulus[" + std::to_string(i) + "]"));
    } else {
        try {
            modulus = default_modulus(p, r);
        } catch (const Error& e) {
            throw parse_error("ring.field_modulus", e.what());
        }
    }
    return RingDescriptor::fqxs(p, r, s, modulus);
}

Json element_to_json(const ChainRing& R, RingElement a) {
    if (R.family() == RingFamily::IntegerModular) return a.value;
    Json out = Json::array();
    for (int i = 0; i < R.s(); ++i) out.push_back(R.field().coeffs(R.coefficient(a, i)));
    return out;
}

RingElement element_from_json(const ChainRing& R, const Json& j, const std::string& where) {
    if (R.family() == RingFamily::IntegerModular) {
        const auto v = integer(j, where);
        if (v < 0 || v >= R.size())
            throw parse_error(where, std::to_string(v) + " outside [0, " + std::to_string(R.size()) + ")");
        return RingElement{static_cast<std::uint32_t>(v)};
    }
    if (!j.is_array() || j.size() != static_cast<std::size_t>(R.s()))
        throw parse_error(where, "expected " + std::to_string(R.s()) + " coefficient arrays");
    std::vector<FieldElement> coeffs;
    for (int i = 0; i < R.s(); ++i) {
        const Json& c = j[static_cast<std::size_t>(i)];
        const std::string at = where + "[" + std::to_string(i) + "]";
        if (!c.is_array() || c.size() != static_cast<std::size_t>(R.r()))
            throw parse_error(at, "expected " + std::to_string(R.r()) + " integers");
        std::vector<int> digits;
        for (std::size_t t = 0; t < c.size(); ++t) {
            const auto v = integer(c[t], at + "[" + std::to_string(t) + "]");
            if (v < 0 || v >= R.p())
                throw parse_error(at + "[" + std::to_string(t) + "]", "outside [0, " + std::to_string(R.p()) + ")");
            digits.push_back(static_cast<int>(v));
        }
        coeffs.push_back(R.field().from_coeffs(digits));
    }
    return R.from_coefficients(coeffs);
}

Json word_to_json(const ChainRing& R, const Word& w) {
    Json out = Json::array();
    for (RingElement a : w) out.push_back(element_to_json(R, a));
    return out;
}

Json field_element_to_json(const Field& F, FieldElement a) {
    if (F.r() == 1) return a.value;
    return F.coeffs(a);
}

LinearCode CodeFile::to_code() const { return LinearCode::make(ChainRing::make(ring), n, generators); }

CodeFile CodeFile::from_code(const LinearCode& code, std::optional<std::string> name, std::optional<std::string> notes) {
    return CodeFile{std::move(name), std::move(notes), code.ring().descriptor(), code.length(),
                    code.generators().row_vectors()};
}

CodeFile parse_code_file(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw parse_error("(root)", "expected an object");
    CodeFile f;
    auto optional_string = [&](const char* key, std::optional<std::string>& into) {
        if (auto it = j.find(key); it != j.end()) {
            if (!it->is_string()) throw parse_error(key, "expected a string");
            into = it->get<std::string>();
        }
    };
    optional_string("name", f.name);
    optional_string("notes", f.notes);
    f.ring = ring_from_json(member(j, "ring", ""));
    RingPtr R;
    try {
        R = ChainRing::make(f.ring);
    } catch (const Error& e) {
        throw parse_error("ring", e.what());
    }
    const auto n = integer(member(j, "n", ""), "n");
    if (n < 0 || n > 1 << 16) throw parse_error("n", "out of range");
    f.n = static_cast<std::size_t>(n);
    const Json& gens = member(j, "generators", "");
    if (!gens.is_array()) throw parse_error("generators", "expected an array of rows");
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const std::string at = "generators[" + std::to_string(i) + "]";
        if (!gens[i].is_array()) throw parse_error(at, "expected an array");
        if (gens[i].size() != f.n)
            throw parse_error(at, "has " + std::to_string(gens[i].size()) + " entries, n = " + std::to_string(f.n));
        Word w;
        for (std::size_t c = 0; c < f.n; ++c)
            w.push_back(element_from_json(*R, gens[i][c], at + "[" + std::to_string(c) + "]"));
        f.generators.push_back(std::move(w));
    }
    return f;
}

CodeFile load_code_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_code_file(ss.str());
}

Json code_file_to_json(const CodeFile& f) {
    const auto R = ChainRing::make(f.ring);
    Json j;
    if (f.name) j["name"] = *f.name;
    if (f.notes) j["notes"] = *f.notes;
    j["ring"] = ring_to_json(f.ring);
    j["n"] = f.n;
    j["generators"] = Json::array();
    for (const Word& w : f.generators) j["generators"].push_back(word_to_json(*R, w));
    return j;
}

std::string serialize_code_file(const CodeFile& f) { return code_file_to_json(f).dump(2) + "\n"; }

void save_code_file(const CodeFile& f, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::Parse, "cannot write " + path.string());
    out << serialize_code_file(f);
}

}  // namespace homcode
