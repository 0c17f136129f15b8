#include "parinv/repdims.hpp"

#include <json.hpp>

#include <map>
#include <stdexcept>

#include "parinv/errors.hpp"

namespace parinv::repdims {

namespace {

using symgroup::MultiplicityVector;
using symgroup::Sp4F2Irrep;

struct FamilyInfo {
    Family family;
    const char* name;
    bool even_q;
};

const FamilyInfo kFamilies[] = {
    {Family::ETheta0, "theta0", true},
    {Family::ETheta1, "theta1", true},
    {Family::ETheta2, "theta2", true},
    {Family::ETheta3, "theta3", true},
    {Family::ETheta4, "theta4", true},
    {Family::ETheta5, "theta5", true},
    {Family::EChi1, "chi1", true},
    {Family::EChi2, "chi2", true},
    {Family::EChi4, "chi4", true},
    {Family::EChi5, "chi5", true},
    {Family::EChi6, "chi6", true},
    {Family::EChi8, "chi8", true},
    {Family::EChi9, "chi9", true},
    {Family::EChi10, "chi10", true},
    {Family::EChi12, "chi12", true},
    {Family::EChi13, "chi13", true},
    {Family::OX1, "X1", false},
    {Family::OX2, "X2", false},
    {Family::OX5, "X5", false},
    {Family::OChi3, "chi3'", false},
    {Family::OChi4, "chi4'", false},
    {Family::OChi5, "chi5'", false},
    {Family::OChi6, "chi6'", false},
    {Family::OChi7, "chi7'", false},
    {Family::OChi8, "chi8'", false},
    {Family::OTau2, "tau2", false},
    {Family::OTau3, "tau3", false},
    {Family::OTheta1, "theta1'", false},
    {Family::OTheta2, "theta2'", false},
    {Family::OTheta3, "theta3'", false},
    {Family::OTheta4, "theta4'", false},
    {Family::OTheta5, "theta5'", false},
};

const FamilyInfo& info(Family f) {
    for (const auto& fi : kFamilies) {
        if (fi.family == f) return fi;
    }
    throw std::logic_error("unknown family");
}

const Poly kQ = Poly::variable();

Poly q_pow(unsigned e) { return kQ.pow(e); }

// The dimension polynomials printed in the restriction tables.
const std::map<Family, Poly>& dim_table() {
    static const std::map<Family, Poly> table = [] {
        const Poly q = kQ;
        std::map<Family, Poly> t;
        // even q
        t[Family::EChi1] = (q + 1).pow(2) * (q_pow(2) + 1);
        t[Family::EChi10] = (q_pow(2) + q) * (q_pow(2) + 1);
        t[Family::EChi2] = q_pow(4) - 1;
        t[Family::EChi12] = (q_pow(2) + 1) * (q_pow(2) - q);
        t[Family::EChi13] = (q_pow(2) + 1) * (q_pow(2) - q);
        t[Family::EChi4] = (q_pow(2) + 1) * (q - 1).pow(2);
        t[Family::EChi9] = (q_pow(2) + 1) * (q - 1);
        t[Family::EChi6] = (q + 1) * (q_pow(2) + 1);
        t[Family::EChi8] = (q - 1) * (q_pow(2) + 1);
        t[Family::ETheta1] = q * (q + 1).pow(2) / Rat(2);
        t[Family::ETheta2] = q * (q_pow(2) + 1) / Rat(2);
        t[Family::ETheta3] = q * (q_pow(2) + 1) / Rat(2);
        t[Family::ETheta5] = q * (q - 1).pow(2) / Rat(2);
        // odd q
        t[Family::OX1] = (q + 1).pow(2) * (q_pow(2) + 1);
        t[Family::OChi4] = (q_pow(2) + q) * (q_pow(2) + 1);
        t[Family::OTau3] = q_pow(4) + q_pow(2);
        t[Family::OX2] = q_pow(4) - 1;
        t[Family::OChi6] = (q_pow(2) + 1) * (q_pow(2) - q);
        t[Family::OChi8] = (q_pow(2) + 1) * (q_pow(2) - q);
        t[Family::OX5] = (q_pow(2) + 1) * (q - 1).pow(2);
        t[Family::OChi7] = (q_pow(2) + 1) * (q - 1);
        t[Family::OChi3] = (q + 1) * (q_pow(2) + 1);
        t[Family::OChi5] = (q - 1) * (q_pow(2) + 1);
        t[Family::OTau2] = q * (q_pow(2) + 1);
        t[Family::OTheta1] = q * (q + 1).pow(2) / Rat(2);
        t[Family::OTheta2] = q * (q - 1).pow(2) / Rat(2);
        t[Family::OTheta3] = q * (q_pow(2) + 1) / Rat(2);
        t[Family::OTheta4] = q * (q_pow(2) + 1) / Rat(2);
        return t;
    }();
    return table;
}

// Printed composite rows whose parts have no individual printed dimension.
const std::map<std::string, Poly>& composite_dim_table() {
    static const std::map<std::string, Poly> table = [] {
        const Poly q = kQ;
        std::map<std::string, Poly> t;
        t["theta1+theta4"] = q_pow(4) + q * (q + 1).pow(2) / Rat(2);
        t["theta3+theta4"] = q_pow(4) + q * (q_pow(2) + 1) / Rat(2);
        t["theta1'+theta5'"] = q_pow(4) + q * (q + 1).pow(2) / Rat(2);
        t["theta4'+theta5'"] = q_pow(4) + q * (q_pow(2) + 1) / Rat(2);
        return t;
    }();
    return table;
}

std::string strip_params(const std::string& atom) {
    const auto pos = atom.find('(');
    return pos == std::string::npos ? atom : atom.substr(0, pos);
}

std::vector<std::string> split_plus(const std::string& expr) {
    std::vector<std::string> atoms;
    size_t start = 0;
    while (start <= expr.size()) {
        const auto pos = expr.find('+', start);
        if (pos == std::string::npos) {
            atoms.push_back(expr.substr(start));
            break;
        }
        atoms.push_back(expr.substr(start, pos - start));
        start = pos + 1;
    }
    for (auto& a : atoms) {
        while (!a.empty() && a.front() == ' ') a.erase(a.begin());
        while (!a.empty() && a.back() == ' ') a.pop_back();
    }
    return atoms;
}

}  // namespace

const char* family_name(Family f) { return info(f).name; }

bool family_is_even_q(Family f) { return info(f).even_q; }

std::optional<Family> family_by_name(const std::string& name) {
    for (const auto& fi : kFamilies) {
        if (name == fi.name) return fi.family;
    }
    return std::nullopt;
}

std::string RepLabel::str() const {
    std::string s = family_name(family);
    if (!params.empty()) {
        s += "(";
        for (size_t i = 0; i < params.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(params[i]);
        }
        s += ")";
    }
    return s;
}

RepLabel parse_label(const std::string& s) {
    const auto open = s.find('(');
    std::string base = s.substr(0, open);
    const auto fam = family_by_name(base);
    if (!fam) throw CatalogueError("unknown representation label: " + s);
    RepLabel label{*fam, {}};
    if (open != std::string::npos) {
        if (s.back() != ')') throw CatalogueError("malformed label: " + s);
        std::string inner = s.substr(open + 1, s.size() - open - 2);
        size_t start = 0;
        while (start < inner.size()) {
            auto pos = inner.find(',', start);
            if (pos == std::string::npos) pos = inner.size();
            label.params.push_back(std::stol(inner.substr(start, pos - start)));
            start = pos + 1;
        }
    }
    return label;
}

Poly dim_polynomial(Family f) {
    const auto& t = dim_table();
    const auto it = t.find(f);
    if (it == t.end()) {
        throw CatalogueError(std::string("no printed dimension polynomial for ") +
                             family_name(f));
    }
    return it->second;
}

Poly dim_polynomial(const RepLabel& label) { return dim_polynomial(label.family); }

Poly dim_polynomial(const std::string& label_expr) {
    const auto atoms = split_plus(label_expr);
    if (atoms.size() > 1) {
        // printed composite rows first
        std::string key;
        for (size_t i = 0; i < atoms.size(); ++i) {
            if (i) key += "+";
            key += strip_params(atoms[i]);
        }
        const auto& ct = composite_dim_table();
        if (auto it = ct.find(key); it != ct.end()) return it->second;
        Poly sum;
        for (const auto& a : atoms) sum += dim_polynomial(parse_label(a));
        return sum;
    }
    return dim_polynomial(parse_label(label_expr));
}

Int evaluate_dim(const RepLabel& label, long q) {
    if (q < 2) throw std::invalid_argument("q must be at least 2");
    return dim_polynomial(label).evaluate_integer(q);
}

Int evaluate_dim(const std::string& label_expr, long q) {
    if (q < 2) throw std::invalid_argument("q must be at least 2");
    return dim_polynomial(label_expr).evaluate_integer(q);
}

// ---------------------------------------------------------------------------
// q = 2 decompositions
// ---------------------------------------------------------------------------

MultiplicityVector decompose_at_q2(const RepLabel& label) {
    auto unit = [](Sp4F2Irrep r) { return MultiplicityVector::unit(r); };
    auto require_params = [&](std::initializer_list<long> want) {
        if (label.params != std::vector<long>(want)) {
            throw CatalogueError("no recorded q=2 decomposition for " + label.str());
        }
    };
    switch (label.family) {
        case Family::ETheta0:
            require_params({});
            return unit(Sp4F2Irrep::Theta0);
        case Family::ETheta1:
            require_params({});
            return unit(Sp4F2Irrep::Theta1);
        case Family::ETheta2:
            require_params({});
            return unit(Sp4F2Irrep::Theta2);
        case Family::ETheta3:
            require_params({});
            return unit(Sp4F2Irrep::Theta3);
        case Family::ETheta4:
            require_params({});
            return unit(Sp4F2Irrep::Theta4);
        case Family::ETheta5:
            require_params({});
            return unit(Sp4F2Irrep::Theta5);
        case Family::EChi5:
            require_params({1});
            return unit(Sp4F2Irrep::Chi5_1);
        case Family::EChi8:
            require_params({1});
            return unit(Sp4F2Irrep::Chi8_1);
        case Family::EChi9:
            require_params({1});
            return unit(Sp4F2Irrep::Chi9_1);
        case Family::EChi12:
            require_params({1});
            return unit(Sp4F2Irrep::Chi12_1);
        case Family::EChi13:
            require_params({1});
            return unit(Sp4F2Irrep::Chi13_1);
        case Family::EChi1: {
            // chi1(0,0) = theta0 + 2 theta1 + theta2 + theta3 + theta4
            require_params({0, 0});
            MultiplicityVector v;
            v.add(Sp4F2Irrep::Theta0, 1);
            v.add(Sp4F2Irrep::Theta1, 2);
            v.add(Sp4F2Irrep::Theta2, 1);
            v.add(Sp4F2Irrep::Theta3, 1);
            v.add(Sp4F2Irrep::Theta4, 1);
            return v;
        }
        case Family::EChi10: {
            // chi10(0) = theta1 + theta3 + theta4
            require_params({0});
            MultiplicityVector v;
            v.add(Sp4F2Irrep::Theta1, 1);
            v.add(Sp4F2Irrep::Theta3, 1);
            v.add(Sp4F2Irrep::Theta4, 1);
            return v;
        }
        case Family::EChi2: {
            // chi2(1) = chi8(1) + chi12(1)
            require_params({1});
            MultiplicityVector v;
            v.add(Sp4F2Irrep::Chi8_1, 1);
            v.add(Sp4F2Irrep::Chi12_1, 1);
            return v;
        }
        case Family::EChi6: {
            // chi6(0) = theta0 + theta1 + theta2
            require_params({0});
            MultiplicityVector v;
            v.add(Sp4F2Irrep::Theta0, 1);
            v.add(Sp4F2Irrep::Theta1, 1);
            v.add(Sp4F2Irrep::Theta2, 1);
            return v;
        }
        default:
            throw CatalogueError("no recorded q=2 decomposition for " + label.str());
    }
}

MultiplicityVector decompose_at_q2(const std::string& label_expr) {
    MultiplicityVector total;
    for (const auto& atom : split_plus(label_expr)) {
        total.add_scaled(decompose_at_q2(parse_label(atom)), 1);
    }
    return total;
}

// ---------------------------------------------------------------------------
// Parameter normalization (even q)
// ---------------------------------------------------------------------------

namespace {
void require_prime_power(long q) {
    if (q < 2 || !is_prime_power(q)) {
        throw std::invalid_argument("q must be a prime power >= 2");
    }
}
void require_even_prime_power(long q) {
    require_prime_power(q);
    if (q % 2 != 0) throw std::invalid_argument("q must be an even prime power");
}
}  // namespace

long kappa(long x, long q) {
    require_prime_power(q);
    return mod_reduce(mod_reduce(x, q + 1) * (q - 1), q * q - 1);
}

long kappa_star(long x, long q) {
    require_prime_power(q);
    return mod_reduce(mod_reduce(x, q * q - 1), q + 1);
}

std::optional<long> kappa_inv(long l, long q) {
    require_prime_power(q);
    const long r = mod_reduce(l, q * q - 1);
    if (r % (q - 1) != 0) return std::nullopt;
    return mod_reduce(r / (q - 1), q + 1);
}

long kappa_inv_or_throw(long l, long q) {
    const auto v = kappa_inv(l, q);
    if (!v) {
        throw NotInImageError("index " + std::to_string(l) +
                              " is not in the image of kappa for q=" + std::to_string(q));
    }
    return *v;
}

long canonical_cuspidal_param(long l, long q) {
    require_prime_power(q);
    const long m = q * q - 1;
    const long a = mod_reduce(l, m);
    const long b = mod_reduce(q * a, m);
    return std::min(a, b);
}

Table3Params table3_parameters(long l1, long l2, long q) {
    require_even_prime_power(q);
    Table3Params p;
    p.kappa_inv_l1 = kappa_inv(l1, q);
    p.kappa_inv_l2 = kappa_inv(l2, q);
    p.kappa_star_sum = kappa_star(l1 + l2, q);
    p.kappa_star_diff = kappa_star(l1 - l2, q);
    const long half = (q + 2) / 2;
    p.ktilde1 = mod_reduce(half * p.kappa_star_sum, q + 1);
    p.ktilde2 = mod_reduce(half * p.kappa_star_diff, q + 1);
    return p;
}

// ---------------------------------------------------------------------------
// Row catalogue
// ---------------------------------------------------------------------------

const std::vector<T3Row>& table3_rows() {
    static const std::vector<T3Row> rows = [] {
        const Poly q = kQ;
        const Poly zero;
        std::vector<T3Row> r;
        r.push_back({T3Shape::PsPs, +1, (q + 1).pow(2) * (q_pow(2) + 1), false, true,
                     "chi1(0,0)", "(mu1 x mu2, mu3 x mu4, +)"});
        r.push_back({T3Shape::PsSt, +1, (q_pow(2) + q) * (q_pow(2) + 1), false, true,
                     "chi10(0)", "(mu1 x mu2, mu3 St, +)"});
        r.push_back({T3Shape::StStSame, +1, q_pow(4) + q * (q + 1).pow(2) / Rat(2), false, true,
                     "theta1+theta4", "(mu1 St, mu1 St, +)"});
        r.push_back({T3Shape::StStXiU, +1, q_pow(4) + q * (q_pow(2) + 1) / Rat(2), false, true,
                     "theta3+theta4", "(mu1 St, mu1 xi_u St, +)"});
        r.push_back({T3Shape::StStXiT, +1, q_pow(4) + q_pow(2), false, false, "",
                     "(mu1 St, mu1 xi_t St, +)"});
        r.push_back({T3Shape::PsCusp, +1, q_pow(4) - 1, false, true, "chi2(1)",
                     "(mu1 x mu2, mu1 rho2, +)"});
        r.push_back({T3Shape::StCusp, +1, (q_pow(2) + 1) * (q_pow(2) - q), false, true,
                     "chi12(1)", "(mu1 St, mu1 rho2, +)"});
        r.push_back({T3Shape::CuspSame, +1, (q_pow(2) + 1) * (q_pow(2) - q), false, true,
                     "chi13(1)", "(rho1, rho2 ~ rho1, +)"});
        r.push_back({T3Shape::CuspDiff, +1, (q_pow(2) + 1) * (q - 1).pow(2), false, true, "",
                     "(rho1, rho2 !~ rho1, +)"});
        r.push_back({T3Shape::StStSame, -1, q * (q_pow(2) + 1) / Rat(2), false, true, "theta2",
                     "(mu1 St, mu1 St, -)"});
        r.push_back({T3Shape::StStXiU, -1, q * (q - 1).pow(2) / Rat(2), false, true, "theta5",
                     "(mu1 St, mu1 xi_u St, -)"});
        r.push_back({T3Shape::StStXiT, -1, zero, true, false, "", "(mu1 St, mu1 xi_t St, -)"});
        r.push_back({T3Shape::StCusp, -1, zero, true, true, "", "(mu1 St, rho2, -)"});
        r.push_back({T3Shape::CuspSame, -1, (q_pow(2) + 1) * (q - 1), false, true, "chi9(1)",
                     "(rho1, rho2 ~ rho1, -)"});
        r.push_back({T3Shape::CuspDiff, -1, zero, true, true, "", "(rho1, rho2 !~ rho1, -)"});
        return r;
    }();
    return rows;
}

const T3Row& table3_row(T3Shape shape, int sign) {
    for (const auto& row : table3_rows()) {
        if (row.shape == shape && row.sign == sign) return row;
    }
    throw CatalogueError("no such restriction table row (packet member does not exist)");
}

const std::vector<T4Row>& table4_rows() {
    static const std::vector<T4Row> rows = [] {
        const Poly q = kQ;
        const Poly zero;
        std::vector<T4Row> r;
        r.push_back({T4Shape::Ps, false, (q + 1) * (q_pow(2) + 1), false, true, "chi6(0)",
                     "(mu 1) >< mu^-1", "(mu x mu^-1, 1)"});
        r.push_back({T4Shape::St, false, q * (q_pow(2) + 1) / Rat(2), false, true, "theta3",
                     "L(nu^1/2 St, nu^-1/2)", "(St, 1)"});
        r.push_back({T4Shape::St, true, q * (q_pow(2) + 1) / Rat(2), false, true, "theta2",
                     "tau(T, nu^-1/2)", "(St, St)"});
        r.push_back({T4Shape::StXiU, false, q * (q + 1).pow(2) / Rat(2), false, true, "theta1",
                     "L(nu^1/2 xi_u St, nu^-1/2)", "(xi_u St, 1)"});
        r.push_back({T4Shape::StXiU, true, q * (q - 1).pow(2) / Rat(2), false, true, "theta5",
                     "theta-(xi_u St, St) cuspidal", "(xi_u St, St)"});
        r.push_back({T4Shape::StXiT, false, q * (q_pow(2) + 1), false, false, "",
                     "L(nu^1/2 xi_t St, nu^-1/2)", "(xi_t St, 1)"});
        r.push_back({T4Shape::StXiT, true, zero, true, false, "",
                     "theta-(xi_t St, St) cuspidal", "(xi_t St, St)"});
        r.push_back({T4Shape::Cusp, false, (q - 1) * (q_pow(2) + 1), false, true, "chi8(1)",
                     "L(nu^1/2 rho, nu^-1/2)", "(rho, 1)"});
        r.push_back({T4Shape::Cusp, true, zero, true, true, "", "theta-(rho, St) cuspidal",
                     "(rho, St)"});
        return r;
    }();
    return rows;
}

const T4Row& table4_row(T4Shape shape, bool in_s) {
    for (const auto& row : table4_rows()) {
        if (row.shape == shape && row.in_s == in_s) return row;
    }
    throw CatalogueError("no such lift table row");
}

// ---------------------------------------------------------------------------
// Catalogue serialization
// ---------------------------------------------------------------------------

namespace {

nlohmann::ordered_json poly_to_json(const Poly& p) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
    return coeffs;
}

}  // namespace

std::string catalogue_json() {
    nlohmann::ordered_json doc;
    doc["format"] = "parinv-rep-catalogue";
    doc["version"] = 1;
    doc["dim_poly_encoding"] = "rational coefficients of q^0, q^1, ... as strings";

    auto t3 = nlohmann::ordered_json::array();
    for (const auto& row : table3_rows()) {
        nlohmann::ordered_json j;
        j["row"] = row.row_name;
        j["sign"] = row.sign > 0 ? "+" : "-";
        j["dim_poly"] = poly_to_json(row.dim);
        j["zero"] = row.zero;
        j["even_q"] = row.even_q_defined;
        if (row.even_q2_label.empty()) {
            j["even_q2_label"] = nullptr;
        } else {
            j["even_q2_label"] = row.even_q2_label;
        }
        t3.push_back(j);
    }
    doc["packet_restrictions"] = t3;

    auto t4 = nlohmann::ordered_json::array();
    for (const auto& row : table4_rows()) {
        nlohmann::ordered_json j;
        j["row"] = row.row_name;
        j["lift"] = row.pi_descriptor;
        j["dim_poly"] = poly_to_json(row.dim);
        j["zero"] = row.zero;
        j["even_q"] = row.even_q_defined;
        if (row.even_q2_label.empty()) {
            j["even_q2_label"] = nullptr;
        } else {
            j["even_q2_label"] = row.even_q2_label;
        }
        t4.push_back(j);
    }
    doc["sk_restrictions"] = t4;

    return doc.dump(2) + "\n";
}

}  // namespace parinv::repdims
