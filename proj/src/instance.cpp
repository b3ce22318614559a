#include "tori/instance.hpp"
#include "tori/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <random>
#include <sstream>

namespace tori {

using ordered_json = nlohmann::ordered_json;

namespace {

Int json_to_int(const nlohmann::json& v, const std::string& where) {
    if (v.is_number_integer()) return Int(static_cast<long>(v.get<std::int64_t>()));
    if (v.is_string()) {
        try {
            return Int(v.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw ParseError(where + ": bad integer literal");
        }
    }
    throw ParseError(where + ": expected an integer or integer string");
}

ordered_json int_to_json(const Int& v) {
    if (v.fits_slong_p()) {
        long l = v.get_si();
        if (l <= (1L << 53) && l >= -(1L << 53)) return ordered_json(l);
    }
    return ordered_json(v.get_str());
}

Rat json_to_rat(const nlohmann::json& v, const std::string& where) {
    try {
        if (v.is_string()) return parse_rational(v.get<std::string>());
        if (v.is_number_integer()) return Rat(static_cast<long>(v.get<std::int64_t>()));
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    }
    throw ParseError(where + ": expected a rational string \"p/q\"");
}

std::string json_string(const nlohmann::json& v, const std::string& where) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number()) return v.dump();
    throw ParseError(where + ": expected a string");
}

std::vector<Rat> parse_coord_strings(const std::vector<const char*>& strs) {
    std::vector<Rat> out;
    out.reserve(strs.size());
    for (const char* s : strs) out.push_back(parse_rational(s));
    return out;
}

std::string decimal12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12f", x);
    return buf;
}

} // namespace

InstanceFile parse_instance(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("instance: top level must be an object");
    InstanceFile inst;
    if (j.contains("label")) inst.label = json_string(j["label"], "label");
    if (!j.contains("field") || !j["field"].is_object())
        throw ParseError("instance: missing \"field\" object");
    const auto& field = j["field"];
    if (!field.contains("minpoly") || !field["minpoly"].is_array() || field["minpoly"].empty())
        throw ParseError("field.minpoly: expected a nonempty coefficient array (ascending)");
    for (size_t k = 0; k < field["minpoly"].size(); ++k)
        inst.minpoly.push_back(json_to_int(field["minpoly"][k],
                                           "field.minpoly[" + std::to_string(k) + "]"));
    if (!field.contains("root") || !field["root"].is_object())
        throw ParseError("field.root: expected {\"re\": ..., \"im\": ...}");
    inst.root_re = json_string(field["root"].value("re", nlohmann::json()), "field.root.re");
    inst.root_im = json_string(field["root"].value("im", nlohmann::json()), "field.root.im");
    if (!j.contains("g") || !j["g"].is_number_integer() || j["g"].get<int>() < 1)
        throw ParseError("g: expected a positive integer");
    inst.g = j["g"].get<int>();
    size_t degree = 0;
    {
        ZPoly f = inst.minpoly;
        zpoly_trim(f);
        int d = zpoly_degree(f);
        if (d < 1) throw ParseError("field.minpoly: degree must be >= 1");
        degree = static_cast<size_t>(d);
    }
    if (!j.contains("tau") || !j["tau"].is_array() || j["tau"].size() != static_cast<size_t>(inst.g))
        throw ParseError("tau: expected a g x g array");
    for (int i = 0; i < inst.g; ++i) {
        const auto& row = j["tau"][static_cast<size_t>(i)];
        if (!row.is_array() || row.size() != static_cast<size_t>(inst.g))
            throw ParseError("tau[" + std::to_string(i) + "]: expected g entries");
        std::vector<std::vector<Rat>> out_row;
        for (int c = 0; c < inst.g; ++c) {
            const auto& entry = row[static_cast<size_t>(c)];
            std::string where = "tau[" + std::to_string(i) + "][" + std::to_string(c) + "]";
            if (!entry.is_array())
                throw ParseError(where + ": expected a coordinate vector");
            if (entry.size() != degree)
                throw ParseError(where + ": coordinate vector length " +
                                 std::to_string(entry.size()) + " does not match field degree " +
                                 std::to_string(degree));
            std::vector<Rat> coords;
            for (size_t k = 0; k < entry.size(); ++k)
                coords.push_back(json_to_rat(entry[k], where + "[" + std::to_string(k) + "]"));
            out_row.push_back(std::move(coords));
        }
        inst.tau.push_back(std::move(out_row));
    }
    return inst;
}

std::string serialize_instance(const InstanceFile& inst) {
    ordered_json j;
    if (!inst.label.empty()) j["label"] = inst.label;
    ordered_json mp = ordered_json::array();
    for (const Int& c : inst.minpoly) mp.push_back(int_to_json(c));
    j["field"]["minpoly"] = std::move(mp);
    j["field"]["root"]["re"] = inst.root_re;
    j["field"]["root"]["im"] = inst.root_im;
    j["g"] = inst.g;
    ordered_json tau = ordered_json::array();
    for (const auto& row : inst.tau) {
        ordered_json jrow = ordered_json::array();
        for (const auto& entry : row) {
            ordered_json coords = ordered_json::array();
            for (const Rat& c : entry) coords.push_back(rational_string(c));
            jrow.push_back(std::move(coords));
        }
        tau.push_back(std::move(jrow));
    }
    j["tau"] = std::move(tau);
    return j.dump(2) + "\n";
}

RealizedInstance realize(const InstanceFile& inst, const NumberField::Options& fopts,
                         const PrecisionPolicy& policy) {
    NumberField field = NumberField::create(inst.minpoly, inst.root_re, inst.root_im, fopts);
    int n = field.degree();
    if (static_cast<int>(inst.tau.size()) != inst.g)
        throw ParseError("tau: row count does not match g");
    FieldMatrix tau(field, inst.g, inst.g);
    for (int i = 0; i < inst.g; ++i) {
        if (static_cast<int>(inst.tau[static_cast<size_t>(i)].size()) != inst.g)
            throw ParseError("tau: column count does not match g");
        for (int j = 0; j < inst.g; ++j) {
            const auto& coords = inst.tau[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (static_cast<int>(coords.size()) != n)
                throw ParseError("tau entry has wrong coordinate length");
            tau.at(i, j) = field.element(coords);
        }
    }
    return {field, PeriodMatrix::create(std::move(tau), policy)};
}

// --- generators -------------------------------------------------------------

namespace {

InstanceFile diagonal_power(std::vector<Int> minpoly, std::string re, std::string im,
                            std::vector<Rat> gen_coords, int g, std::string label) {
    InstanceFile inst;
    inst.label = std::move(label);
    inst.minpoly = std::move(minpoly);
    inst.root_re = std::move(re);
    inst.root_im = std::move(im);
    inst.g = g;
    size_t n = gen_coords.size();
    std::vector<Rat> zero(n, Rat(0));
    for (int i = 0; i < g; ++i) {
        std::vector<std::vector<Rat>> row;
        for (int j = 0; j < g; ++j) row.push_back(i == j ? gen_coords : zero);
        inst.tau.push_back(std::move(row));
    }
    return inst;
}

} // namespace

InstanceFile gen_cm_power(long d, int g) {
    if (g < 1) throw GenerationFailed("cm_power: g must be >= 1");
    if (d >= 0 || d < -1000) throw GenerationFailed("cm_power: d must be a negative integer >= -1000");
    for (long p = 2; p * p <= -d; ++p)
        if (d % (p * p) == 0) throw GenerationFailed("cm_power: d must be squarefree");
    long m4 = ((d % 4) + 4) % 4;
    std::vector<Int> minpoly;
    std::string re, im;
    if (m4 == 1) {
        minpoly = {Int((1 - d) / 4), Int(-1), Int(1)}; // x^2 - x + (1-d)/4
        re = "0.5";
        im = decimal12(std::sqrt(static_cast<double>(-d)) / 2);
    } else {
        minpoly = {Int(-d), Int(0), Int(1)}; // x^2 + |d|
        re = "0";
        im = decimal12(std::sqrt(static_cast<double>(-d)));
    }
    std::ostringstream label;
    label << "cm-power-d" << d << "-g" << g;
    return diagonal_power(std::move(minpoly), std::move(re), std::move(im),
                          {Rat(0), Rat(1)}, g, label.str());
}

InstanceFile gen_noncm_cubic_power(int g) {
    if (g < 1) throw GenerationFailed("noncm_cubic_power: g must be >= 1");
    std::ostringstream label;
    label << "noncm-cubic-power-g" << g;
    return diagonal_power({Int(-1), Int(-1), Int(0), Int(1)}, "-0.662358978622",
                          "0.562279512062", {Rat(0), Rat(1), Rat(0)}, g, label.str());
}

InstanceFile gen_cm_pair() {
    InstanceFile inst;
    inst.label = "cm-pair-zeta8";
    inst.minpoly = {Int(1), Int(0), Int(0), Int(0), Int(1)};
    inst.root_re = "0.707106781187";
    inst.root_im = "0.707106781187";
    inst.g = 2;
    std::vector<Rat> z2{Rat(0), Rat(0), Rat(1), Rat(0)};      // z^2 = i
    std::vector<Rat> z13{Rat(0), Rat(1), Rat(0), Rat(1)};     // z + z^3 = i sqrt 2
    std::vector<Rat> zero(4, Rat(0));
    inst.tau = {{z2, zero}, {zero, z13}};
    return inst;
}

namespace {

struct BuiltinField {
    const char* name;
    std::vector<Int> minpoly;
    const char* re;
    const char* im;
};

const std::vector<BuiltinField>& builtin_fields() {
    static const std::vector<BuiltinField> fields = {
        {"gaussian", {Int(1), Int(0), Int(1)}, "0", "1"},
        {"eisenstein", {Int(1), Int(1), Int(1)}, "-0.5", "0.866025403784"},
        {"cubic", {Int(-1), Int(-1), Int(0), Int(1)}, "-0.662358978622", "0.562279512062"},
        {"quartic", {Int(-1), Int(-1), Int(0), Int(0), Int(1)}, "-0.248126", "1.033982"},
        {"zeta8", {Int(1), Int(0), Int(0), Int(0), Int(1)}, "0.707106781187", "0.707106781187"},
        {"disc7", {Int(2), Int(-1), Int(1)}, "0.5", "1.322875655532"},
    };
    return fields;
}

Rat small_random_rat(std::mt19937_64& rng) {
    long num = static_cast<long>(rng() % 5) - 2;
    long den = 1 + static_cast<long>(rng() % 2);
    Rat r(Int(num), Int(den));
    r.canonicalize();
    return r;
}

} // namespace

InstanceFile gen_random(const std::string& field_name, int g, std::uint64_t seed) {
    if (g < 1) throw GenerationFailed("random: g must be >= 1");
    const BuiltinField* bf = nullptr;
    for (const auto& f : builtin_fields())
        if (field_name == f.name) bf = &f;
    if (!bf) throw GenerationFailed("random: unknown field name '" + field_name + "'");
    size_t n = static_cast<size_t>(zpoly_degree(bf->minpoly));
    std::mt19937_64 rng(seed);
    std::ostringstream label;
    label << "random-" << field_name << "-g" << g << "-s" << seed;
    for (int attempt = 0; attempt < 64; ++attempt) {
        InstanceFile inst;
        inst.label = label.str();
        inst.minpoly = bf->minpoly;
        inst.root_re = bf->re;
        inst.root_im = bf->im;
        inst.g = g;
        for (int i = 0; i < g; ++i) {
            std::vector<std::vector<Rat>> row;
            for (int j = 0; j < g; ++j) {
                std::vector<Rat> coords(n, Rat(0));
                if (i == j) {
                    coords[n >= 2 ? 1 : 0] = 1; // keep Im(tau_ii) away from zero
                    for (size_t k = 0; k < n; ++k) coords[k] += small_random_rat(rng);
                } else if (rng() % 2 == 0) {
                    for (size_t k = 0; k < n; ++k) coords[k] = small_random_rat(rng);
                }
                row.push_back(std::move(coords));
            }
            inst.tau.push_back(std::move(row));
        }
        try {
            realize(inst);
            return inst;
        } catch (const DegenerateImaginaryPart&) {
            continue;
        }
    }
    throw GenerationFailed("random: no validated instance within the retry budget");
}

InstanceFile gen_transformed(const InstanceFile& base, std::uint64_t seed) {
    RealizedInstance r = realize(base);
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        IntMat m = random_unimodular(2 * r.period.g(), rng);
        try {
            PeriodMatrix p = unimodular_transform(r.period, m);
            InstanceFile inst;
            std::ostringstream label;
            label << base.label << "-xf-s" << seed;
            inst.label = label.str();
            inst.minpoly = base.minpoly;
            inst.root_re = base.root_re;
            inst.root_im = base.root_im;
            inst.g = base.g;
            for (int i = 0; i < inst.g; ++i) {
                std::vector<std::vector<Rat>> row;
                for (int j = 0; j < inst.g; ++j) row.push_back(p.tau().at(i, j).coordinates());
                inst.tau.push_back(std::move(row));
            }
            return inst;
        } catch (const SingularRightBlock&) {
        } catch (const DegenerateImaginaryPart&) {
        }
    }
    throw GenerationFailed("transformed: no invertible right block within the retry budget");
}

InstanceFile builtin_rho_zero() {
    InstanceFile inst;
    inst.label = "rho-zero-degree16";
    inst.minpoly = {Int(3721041), Int(0),       Int(-1486824), Int(0), Int(1440748), Int(0),
                    Int(-582456), Int(0),       Int(154038),   Int(0), Int(-22552),  Int(0),
                    Int(1932),    Int(0),       Int(-72),      Int(0), Int(1)};
    inst.root_re = "5.382332347442";
    inst.root_im = "1";
    inst.g = 2;
    auto i_c = parse_coord_strings(
        {"0", "20393629/221233152", "0", "510966397/1327398912", "0", "-78607/493824", "0",
         "27563899/568885248", "0", "-15098575/1991098368", "0", "132493/189628416", "0",
         "-3845/142221312", "0", "1531/3982196736"});
    auto is2 = parse_coord_strings(
        {"-1550525/1376256", "0", "4410691/4128768", "0", "-720767/1769472", "0",
         "221995/1769472", "0", "-89093/4128768", "0", "3757/1769472", "0", "-149/1769472", "0",
         "5/4128768", "0"});
    auto is3 = parse_coord_strings(
        {"-217453/196608", "0", "567635/589824", "0", "-639817/1769472", "0", "71485/1769472",
         "0", "1697/1769472", "0", "-1141/1769472", "0", "61/1769472", "0", "-1/1769472", "0"});
    auto is5 = parse_coord_strings(
        {"177149/98304", "0", "-201551/147456", "0", "530795/884736", "0", "-22363/221184", "0",
         "2905/294912", "0", "-173/442368", "0", "5/884736", "0", "0", "0"});
    inst.tau = {{i_c, is2}, {is3, is5}};
    return inst;
}

NumberField builtin_degree6_field(const NumberField::Options& opts) {
    // Q(i + beta), beta the root of x^3 - x - 1 with positive imaginary part
    return NumberField::create({Int(5), Int(8), Int(4), Int(-2), Int(1), Int(0), Int(1)},
                               "-0.662358978622", "1.562279512062", opts);
}

FieldElement builtin_degree6_i(const NumberField& f) {
    return f.element(parse_coord_strings(
        {"154/173", "229/173", "-75/173", "50/173", "-9/173", "30/173"}));
}

FieldElement builtin_degree6_beta(const NumberField& f) {
    return f.element(parse_coord_strings(
        {"-154/173", "-56/173", "75/173", "-50/173", "9/173", "-30/173"}));
}

// --- report document ----------------------------------------------------

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

namespace {

ordered_json intmat_json(const IntMat& m) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : m) {
        ordered_json r = ordered_json::array();
        for (const Int& v : row) r.push_back(int_to_json(v));
        rows.push_back(std::move(r));
    }
    return rows;
}

ordered_json class_json(const NSClass& cls) {
    ordered_json j;
    j["A"] = intmat_json(cls.A);
    j["B"] = intmat_json(cls.B);
    j["C"] = intmat_json(cls.C);
    return j;
}

ordered_json report_json(const AnalysisReport& rep) {
    ordered_json j;
    j["g"] = rep.g;
    j["rho"] = rep.rho;
    j["degree_d"] = rep.degree_d;
    j["rank_T"] = rep.rank_T;
    j["end_rank"] = rep.end_rank;
    j["rho_maximal"] = rep.rho_maximal;
    ordered_json dij = ordered_json::array();
    for (const auto& [key, val] : rep.dij) {
        ordered_json e;
        e["i"] = key.first + 1;
        e["j"] = key.second + 1;
        e["d"] = val;
        dij.push_back(std::move(e));
    }
    j["dij"] = std::move(dij);
    j["bound_dij"] = rep.bound_dij;
    j["bound_degree"] = rational_string(rep.bound_degree);
    ordered_json basis = ordered_json::array();
    for (const auto& cls : rep.ns_classes) basis.push_back(class_json(cls));
    j["ns_basis"] = std::move(basis);
    if (rep.polarization.found) {
        ordered_json p;
        p["found"] = true;
        ordered_json coeff = ordered_json::array();
        for (const Int& c : rep.polarization.coefficients) coeff.push_back(int_to_json(c));
        p["coefficients"] = std::move(coeff);
        p["class"] = class_json(rep.polarization.cls);
        j["polarization"] = std::move(p);
    } else {
        j["polarization"] = ordered_json{{"found", false}};
    }
    ordered_json verdicts = ordered_json::array();
    for (const auto& v : rep.consistency) {
        ordered_json e;
        e["name"] = v.name;
        e["applicable"] = v.applicable;
        e["pass"] = v.pass;
        e["detail"] = v.detail;
        verdicts.push_back(std::move(e));
    }
    j["consistency"] = std::move(verdicts);
    return j;
}

} // namespace

std::string report_document(const AnalysisReport& rep, const std::string& input_text,
                            const std::string& label, long precision_bits) {
    ordered_json j;
    j["tool"] = "tori";
    j["version"] = kToolVersion;
    char hex[32];
    std::snprintf(hex, sizeof(hex), "%016" PRIx64, fnv1a64(input_text));
    j["input_hash"] = hex;
    j["precision_bits"] = precision_bits;
    if (!label.empty()) j["label"] = label;
    j["report"] = report_json(rep);
    return j.dump(2) + "\n";
}

std::string report_text(const AnalysisReport& rep, const std::string& label) {
    std::ostringstream os;
    if (!label.empty()) os << "instance:      " << label << "\n";
    os << "g:             " << rep.g << "\n";
    os << "rho:           " << rep.rho << (rep.rho_maximal ? "  (rho-maximal)" : "") << "\n";
    os << "degree d:      " << rep.degree_d << "\n";
    os << "rank T:        " << rep.rank_T << "\n";
    os << "rank End:      " << rep.end_rank << "\n";
    os << "NS basis:      " << rep.ns_classes.size() << " classes\n";
    for (const auto& [key, val] : rep.dij)
        os << "  d_" << key.first + 1 << key.second + 1 << " = " << val << "\n";
    os << "bound (dij):   " << rep.bound_dij << "\n";
    os << "bound (deg):   " << rational_string(rep.bound_degree) << "\n";
    if (rep.polarization.found) {
        os << "polarization:  found, coefficients (";
        for (size_t k = 0; k < rep.polarization.coefficients.size(); ++k) {
            if (k) os << ", ";
            os << rep.polarization.coefficients[k].get_str();
        }
        os << ")\n";
    } else {
        os << "polarization:  unknown\n";
    }
    for (const auto& v : rep.consistency) {
        os << "check " << v.name << ": ";
        if (!v.applicable)
            os << "n/a";
        else
            os << (v.pass ? "pass" : "FAIL");
        os << "  [" << v.detail << "]\n";
    }
    return os.str();
}

} // namespace tori
