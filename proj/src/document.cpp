#include "arfkit/document.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace arfkit {

namespace {

using json = nlohmann::ordered_json;

BigInt parse_int_value(const json& v, const std::string& where) {
    if (v.is_number_integer()) return BigInt(v.get<std::int64_t>());
    if (v.is_number_unsigned()) return BigInt(v.get<std::uint64_t>());
    if (v.is_number_float())
        throw InputError(where + ": non-integer numeric value (exact integers only)");
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size()) throw InputError(where + ": malformed integer string");
        for (std::size_t k = i; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9')
                throw InputError(where + ": malformed integer string");
        return BigInt(s);
    }
    throw InputError(where + ": expected an integer");
}

long long parse_small_int(const json& v, const std::string& where) {
    BigInt b = parse_int_value(v, where);
    if (b > std::numeric_limits<long long>::max() || b < std::numeric_limits<long long>::min())
        throw InputError(where + ": value out of range");
    return b.convert_to<long long>();
}

const json& require(const json& j, const char* field, const std::string& kind) {
    auto it = j.find(field);
    if (it == j.end())
        throw InputError("missing field \"" + std::string(field) + "\" in " + kind + " document");
    return *it;
}

std::vector<std::vector<BigInt>> parse_int_matrix(const json& v, const std::string& where) {
    if (!v.is_array()) throw InputError(where + ": expected an array of rows");
    std::vector<std::vector<BigInt>> rows;
    std::size_t width = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const json& r = v[i];
        if (!r.is_array())
            throw InputError(where + "[" + std::to_string(i) + "]: expected a row array");
        if (i == 0)
            width = r.size();
        else if (r.size() != width)
            throw InputError(where + "[" + std::to_string(i) + "]: ragged row");
        std::vector<BigInt> row;
        row.reserve(r.size());
        for (std::size_t j = 0; j < r.size(); ++j)
            row.push_back(parse_int_value(
                r[j], where + "[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
        rows.push_back(std::move(row));
    }
    return rows;
}

// Symmetry diagnostics that name the offending entries.
void check_symmetric_named(const std::vector<std::vector<BigInt>>& m, const std::string& where) {
    if (!m.empty() && m.size() != m[0].size())
        throw InputError(where + ": matrix must be square");
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (m[i][j] != m[j][i])
                throw InputError(where + "[" + std::to_string(i) + "][" + std::to_string(j) +
                                 "] != " + where + "[" + std::to_string(j) + "][" +
                                 std::to_string(i) + "]: matrix must be symmetric");
}

F2Matrix to_f2_matrix(const std::vector<std::vector<BigInt>>& m, const std::string& where) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j)
            if (m[i][j] < 0 || m[i][j] > 1)
                throw InputError(where + "[" + std::to_string(i) + "][" + std::to_string(j) +
                                 "]: entries must be 0 or 1");
    F2Matrix f(static_cast<int>(m.size()), m.empty() ? 0 : static_cast<int>(m[0].size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j)
            f.set(static_cast<int>(i), static_cast<int>(j), m[i][j] == 1);
    return f;
}

IntMatrix to_int_matrix(const std::vector<std::vector<BigInt>>& m) {
    return IntMatrix::from_rows(m);
}

std::vector<std::uint8_t> parse_byte_list(const json& v, const std::string& where, int max) {
    if (!v.is_array()) throw InputError(where + ": expected an array");
    std::vector<std::uint8_t> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        long long e = parse_small_int(v[i], where + "[" + std::to_string(i) + "]");
        if (e < 0 || e > max)
            throw InputError(where + "[" + std::to_string(i) + "]: entries must lie in 0.." +
                             std::to_string(max));
        out.push_back(static_cast<std::uint8_t>(e));
    }
    return out;
}

ArfValue parse_arf(const json& v, const std::string& where) {
    if (v.is_string() && v.get<std::string>() == "inf") return ArfValue::infinity;
    long long b = parse_small_int(v, where);
    if (b != 0 && b != 1) throw InputError(where + ": Arf value must be 0, 1 or \"inf\"");
    return arf_from_bit(static_cast<int>(b));
}

BrownValue parse_brown(const json& v, const std::string& where) {
    if (v.is_string() && v.get<std::string>() == "inf") return BrownValue::infinity();
    long long b = parse_small_int(v, where);
    if (b < 0 || b > 7) throw InputError(where + ": Brown value must lie in 0..7 or be \"inf\"");
    return BrownValue::finite(static_cast<int>(b));
}

int parse_bit(const json& v, const std::string& where) {
    long long b = parse_small_int(v, where);
    if (b != 0 && b != 1) throw InputError(where + ": expected 0 or 1");
    return static_cast<int>(b);
}

InputDocument parse_quadratic_space(const json& j) {
    auto gram = parse_int_matrix(require(j, "gram", "quadratic_space"), "gram");
    check_symmetric_named(gram, "gram");
    auto qvals = parse_byte_list(require(j, "qvals", "quadratic_space"), "qvals", 1);
    return QuadraticSpaceDoc{QuadraticSpace(to_f2_matrix(gram, "gram"), std::move(qvals))};
}

InputDocument parse_enhanced_space(const json& j) {
    auto gram = parse_int_matrix(require(j, "gram", "enhanced_space"), "gram");
    check_symmetric_named(gram, "gram");
    auto evals = parse_byte_list(require(j, "evals", "enhanced_space"), "evals", 3);
    return EnhancedSpaceDoc{EnhancedSpace(to_f2_matrix(gram, "gram"), std::move(evals))};
}

InputDocument parse_seifert(const json& j) {
    auto v = parse_int_matrix(require(j, "matrix", "seifert"), "matrix");
    long long comp = parse_small_int(require(j, "components", "seifert"), "components");
    if (comp < 1 || comp > kMaxDim) throw InputError("components: out of range");
    std::optional<IntMatrix> lk;
    if (auto it = j.find("linking"); it != j.end()) {
        auto lkm = parse_int_matrix(*it, "linking");
        check_symmetric_named(lkm, "linking");
        lk = to_int_matrix(lkm);
    }
    return SeifertDoc{SeifertData(to_int_matrix(v), static_cast<int>(comp), std::move(lk))};
}

InputDocument parse_surface(const json& j) {
    auto gram = parse_int_matrix(require(j, "gram", "surface"), "gram");
    check_symmetric_named(gram, "gram");
    auto evals = parse_byte_list(require(j, "evals", "surface"), "evals", 3);
    BigInt fs = parse_int_value(require(j, "boundary_framing_sum", "surface"),
                                "boundary_framing_sum");
    return SurfaceDoc{SurfaceData(to_f2_matrix(gram, "gram"), std::move(evals), std::move(fs))};
}

InputDocument parse_lattice(const json& j) {
    auto m = parse_int_matrix(require(j, "matrix", "lattice"), "matrix");
    check_symmetric_named(m, "matrix");
    return LatticeDoc{IntLattice(to_int_matrix(m))};
}

InputDocument parse_even_presentation(const json& j) {
    auto m = parse_int_matrix(require(j, "matrix", "even_presentation"), "matrix");
    check_symmetric_named(m, "matrix");
    return EvenPresentationDoc{EvenPresentation(IntLattice(to_int_matrix(m)))};
}

InputDocument parse_scenario(const json& j) {
    RelativeScenario s;
    const json& fam = require(j, "family", "scenario");
    if (!fam.is_string())
        throw InputError("family: expected \"orientable\" or \"nonorientable\"");
    const std::string family = fam.get<std::string>();
    if (family == "orientable")
        s.family = ScenarioFamily::orientable;
    else if (family == "nonorientable")
        s.family = ScenarioFamily::nonorientable;
    else
        throw InputError("family: expected \"orientable\" or \"nonorientable\"");

    s.sigma_x = parse_small_int(require(j, "sigma", "scenario"), "sigma");
    s.f_square = parse_small_int(require(j, "f_square", "scenario"), "f_square");

    const bool has_arf = j.contains("arf_f") || j.contains("arf_boundary");
    const bool has_beta = j.contains("beta_f") || j.contains("beta_boundary");
    if (s.family == ScenarioFamily::orientable) {
        if (has_beta)
            throw InputError("orientable scenario must use arf_f/arf_boundary, not beta fields");
        s.arf_f = parse_arf(require(j, "arf_f", "scenario"), "arf_f");
        s.arf_boundary = j.contains("arf_boundary")
                             ? parse_arf(j["arf_boundary"], "arf_boundary")
                             : ArfValue::zero;
        s.beta_f = BrownValue::finite(0);
        s.beta_boundary = BrownValue::finite(0);
    } else {
        if (has_arf)
            throw InputError("nonorientable scenario must use beta_f/beta_boundary, not arf fields");
        s.beta_f = parse_brown(require(j, "beta_f", "scenario"), "beta_f");
        s.beta_boundary = j.contains("beta_boundary")
                              ? parse_brown(j["beta_boundary"], "beta_boundary")
                              : BrownValue::finite(0);
        s.arf_f = ArfValue::zero;
        s.arf_boundary = ArfValue::zero;
    }
    s.mu_boundary = j.contains("mu_boundary") ? parse_bit(j["mu_boundary"], "mu_boundary") : 0;
    s.ks = j.contains("ks") ? parse_bit(j["ks"], "ks") : 0;
    return ScenarioDoc{std::move(s)};
}

json int_to_json(const BigInt& v) {
    if (v <= std::numeric_limits<std::int64_t>::max() &&
        v >= std::numeric_limits<std::int64_t>::min())
        return json(v.convert_to<std::int64_t>());
    return json(v.str());
}

json f2_matrix_to_json(const F2Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.get(i, j) ? 1 : 0);
        rows.push_back(std::move(row));
    }
    return rows;
}

json int_matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json byte_list_to_json(const std::vector<std::uint8_t>& v) {
    json out = json::array();
    for (auto b : v) out.push_back(static_cast<int>(b));
    return out;
}

json arf_to_json(ArfValue a) {
    if (!arf_is_finite(a)) return json("inf");
    return json(arf_bit(a));
}

json brown_to_json(const BrownValue& b) {
    if (!b.is_finite()) return json("inf");
    return json(b.value());
}

struct Serializer {
    json operator()(const QuadraticSpaceDoc& d) const {
        json j;
        j["kind"] = "quadratic_space";
        j["gram"] = f2_matrix_to_json(d.space.gram());
        j["qvals"] = byte_list_to_json(d.space.qvals());
        return j;
    }
    json operator()(const EnhancedSpaceDoc& d) const {
        json j;
        j["kind"] = "enhanced_space";
        j["gram"] = f2_matrix_to_json(d.space.gram());
        j["evals"] = byte_list_to_json(d.space.evals());
        return j;
    }
    json operator()(const SeifertDoc& d) const {
        json j;
        j["kind"] = "seifert";
        j["matrix"] = int_matrix_to_json(d.data.v());
        j["components"] = d.data.components();
        if (d.data.lk()) j["linking"] = int_matrix_to_json(*d.data.lk());
        return j;
    }
    json operator()(const SurfaceDoc& d) const {
        json j;
        j["kind"] = "surface";
        j["gram"] = f2_matrix_to_json(d.data.gram());
        j["evals"] = byte_list_to_json(d.data.evals());
        j["boundary_framing_sum"] = int_to_json(d.data.boundary_framing_sum());
        return j;
    }
    json operator()(const LatticeDoc& d) const {
        json j;
        j["kind"] = "lattice";
        j["matrix"] = int_matrix_to_json(d.lattice.matrix());
        return j;
    }
    json operator()(const EvenPresentationDoc& d) const {
        json j;
        j["kind"] = "even_presentation";
        j["matrix"] = int_matrix_to_json(d.presentation.lattice().matrix());
        return j;
    }
    json operator()(const ScenarioDoc& d) const {
        const RelativeScenario& s = d.scenario;
        json j;
        j["kind"] = "scenario";
        j["family"] = s.family == ScenarioFamily::orientable ? "orientable" : "nonorientable";
        j["sigma"] = s.sigma_x;
        j["f_square"] = s.f_square;
        if (s.family == ScenarioFamily::orientable) {
            j["arf_f"] = arf_to_json(s.arf_f);
            j["arf_boundary"] = arf_to_json(s.arf_boundary);
        } else {
            j["beta_f"] = brown_to_json(s.beta_f);
            j["beta_boundary"] = brown_to_json(s.beta_boundary);
        }
        j["mu_boundary"] = s.mu_boundary;
        j["ks"] = s.ks;
        return j;
    }
};

} // namespace

InputDocument parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("JSON syntax error: ") + e.what());
    }
    if (!j.is_object()) throw InputError("document must be a JSON object");
    auto kind_it = j.find("kind");
    if (kind_it == j.end()) throw InputError("missing \"kind\" field");
    if (!kind_it->is_string()) throw InputError("\"kind\" must be a string");
    const std::string kind = kind_it->get<std::string>();
    if (kind == "quadratic_space") return parse_quadratic_space(j);
    if (kind == "enhanced_space") return parse_enhanced_space(j);
    if (kind == "seifert") return parse_seifert(j);
    if (kind == "surface") return parse_surface(j);
    if (kind == "lattice") return parse_lattice(j);
    if (kind == "even_presentation") return parse_even_presentation(j);
    if (kind == "scenario") return parse_scenario(j);
    throw InputError("unknown document kind \"" + kind + "\"");
}

InputDocument parse_document_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

std::string serialize_document(const InputDocument& doc) {
    return std::visit(Serializer{}, doc).dump(2) + "\n";
}

std::string kind_of(const InputDocument& doc) {
    struct K {
        std::string operator()(const QuadraticSpaceDoc&) const { return "quadratic_space"; }
        std::string operator()(const EnhancedSpaceDoc&) const { return "enhanced_space"; }
        std::string operator()(const SeifertDoc&) const { return "seifert"; }
        std::string operator()(const SurfaceDoc&) const { return "surface"; }
        std::string operator()(const LatticeDoc&) const { return "lattice"; }
        std::string operator()(const EvenPresentationDoc&) const { return "even_presentation"; }
        std::string operator()(const ScenarioDoc&) const { return "scenario"; }
    };
    return std::visit(K{}, doc);
}

} // namespace arfkit
