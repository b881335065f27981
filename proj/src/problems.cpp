#include "bohr/problems.hpp"

#include <cmath>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "bohr/series.hpp"

namespace bohr {

namespace {

// Shorthand used throughout: S(alpha, N, x) = sum_{n>=N} n^alpha x^n.
double S(int alpha, int start, double x) { return closed_sum(alpha, start, x); }

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

void check_order(int v, const char* name) {
    require(v >= 1, std::string(name) + " must be an integer >= 1, got " + std::to_string(v));
}

void check_lambda(double lambda) {
    require(lambda >= 0.0 && lambda <= 1.0,
            "lambda must lie in [0,1], got " + std::to_string(lambda));
}

void check_start(int N) {
    require(N >= 2, "N must be an integer >= 2, got " + std::to_string(N));
}

void check_radius(double r) {
    if (!(r >= 0.0) || r > kMaxArgument) {
        throw std::domain_error("radius must lie in [0, 1 - 1e-6], got " + std::to_string(r));
    }
}

}  // namespace

double MappingClassProfile::coeff_bound(int n) const {
    if (n < 1) throw std::invalid_argument("coefficient index must be >= 1");
    if (n == 1) return 1.0;  // |a_1| + |b_1| = 1 by normalization
    return kind == MappingKind::StableUnivalent ? static_cast<double>(n) : 1.0;
}

double MappingClassProfile::distance_floor() const {
    return kind == MappingKind::StableUnivalent ? 0.25 : 0.5;
}

HarmonicCoefficientMap MappingClassProfile::extremal_map() const {
    return kind == MappingKind::StableUnivalent ? HarmonicCoefficientMap::koebe()
                                                : HarmonicCoefficientMap::half_plane();
}

MappingClassProfile class_profile(MappingKind kind) { return MappingClassProfile{kind}; }

NonnegPolynomial::NonnegPolynomial(std::vector<double> coefficients)
    : coef_(std::move(coefficients)) {
    require(!coef_.empty(), "polynomial needs at least one coefficient");
    bool any_positive = false;
    for (double c : coef_) {
        require(std::isfinite(c) && c >= 0.0, "polynomial coefficients must be finite and >= 0");
        if (c > 0.0) any_positive = true;
    }
    require(any_positive, "polynomial must have at least one positive coefficient");
}

double NonnegPolynomial::evaluate(double t) const {
    double acc = 0.0;
    for (std::size_t i = coef_.size(); i-- > 0;) acc = acc * t + coef_[i];
    return acc * t;
}

std::string problem_id(const ProblemSpec& spec) {
    struct Visitor {
        std::string operator()(const T31&) const { return "T31"; }
        std::string operator()(const T32&) const { return "T32"; }
        std::string operator()(const T33&) const { return "T33"; }
        std::string operator()(const T34&) const { return "T34"; }
        std::string operator()(const T41&) const { return "T41"; }
        std::string operator()(const T42&) const { return "T42"; }
        std::string operator()(const T43&) const { return "T43"; }
        std::string operator()(const T44&) const { return "T44"; }
        std::string operator()(const T51&) const { return "T51"; }
    };
    return std::visit(Visitor{}, spec.problem);
}

std::vector<std::pair<std::string, std::string>> parameter_list(const ProblemSpec& spec) {
    using P = std::pair<std::string, std::string>;
    auto num = [](double v) {
        std::ostringstream os;
        os << v;
        return os.str();
    };
    struct Visitor {
        decltype(num)& fmt;
        std::vector<P> operator()(const T31& t) const {
            return {{"m", std::to_string(t.m)}, {"p", std::to_string(t.p)}};
        }
        std::vector<P> operator()(const T32& t) const {
            return {{"m", std::to_string(t.m)}, {"p", std::to_string(t.p)}};
        }
        std::vector<P> operator()(const T33& t) const {
            return {{"s", std::to_string(t.s)}, {"m", std::to_string(t.m)},
                    {"p", std::to_string(t.p)}, {"q", std::to_string(t.q)}};
        }
        std::vector<P> operator()(const T34& t) const {
            return {{"s", std::to_string(t.s)}, {"m", std::to_string(t.m)},
                    {"p", std::to_string(t.p)}, {"q", std::to_string(t.q)}};
        }
        std::vector<P> operator()(const T41& t) const {
            return {{"m", std::to_string(t.m)}, {"lambda", fmt(t.lambda)}};
        }
        std::vector<P> operator()(const T42& t) const {
            return {{"m", std::to_string(t.m)}, {"lambda", fmt(t.lambda)}};
        }
        std::vector<P> operator()(const T43& t) const {
            return {{"m", std::to_string(t.m)}, {"p", std::to_string(t.p)},
                    {"N", std::to_string(t.N)}};
        }
        std::vector<P> operator()(const T44& t) const {
            return {{"m", std::to_string(t.m)}, {"p", std::to_string(t.p)},
                    {"N", std::to_string(t.N)}};
        }
        std::vector<P> operator()(const T51& t) const {
            std::string poly;
            for (std::size_t i = 0; i < t.poly.coefficients().size(); ++i) {
                if (i) poly += ",";
                poly += fmt(t.poly.coefficients()[i]);
            }
            return {{"m", std::to_string(t.m)}, {"poly", poly}};
        }
    };
    return std::visit(Visitor{num}, spec.problem);
}

std::string problem_label(const ProblemSpec& spec) {
    std::string out = problem_id(spec) + "{";
    bool first = true;
    for (const auto& [k, v] : parameter_list(spec)) {
        if (!first) out += ",";
        out += k + "=" + v;
        first = false;
    }
    return out + "}";
}

void validate(const ProblemSpec& spec) {
    struct Visitor {
        void operator()(const T31& t) const { check_order(t.m, "m"); check_order(t.p, "p"); }
        void operator()(const T32& t) const { check_order(t.m, "m"); check_order(t.p, "p"); }
        void operator()(const T33& t) const {
            check_order(t.s, "s"); check_order(t.m, "m");
            check_order(t.p, "p"); check_order(t.q, "q");
        }
        void operator()(const T34& t) const {
            check_order(t.s, "s"); check_order(t.m, "m");
            check_order(t.p, "p"); check_order(t.q, "q");
        }
        void operator()(const T41& t) const { check_order(t.m, "m"); check_lambda(t.lambda); }
        void operator()(const T42& t) const { check_order(t.m, "m"); check_lambda(t.lambda); }
        void operator()(const T43& t) const {
            check_order(t.m, "m"); check_order(t.p, "p"); check_start(t.N);
        }
        void operator()(const T44& t) const {
            check_order(t.m, "m"); check_order(t.p, "p"); check_start(t.N);
        }
        void operator()(const T51& t) const { check_order(t.m, "m"); }
    };
    std::visit(Visitor{}, spec.problem);
}

double target(const ProblemSpec& spec) {
    struct Visitor {
        double operator()(const T31&) const { return 0.25; }
        double operator()(const T32&) const { return 0.5; }
        double operator()(const T33&) const { return 1.0; }
        double operator()(const T34&) const { return 1.0; }
        double operator()(const T41&) const { return 0.25; }
        double operator()(const T42&) const { return 0.5; }
        double operator()(const T43&) const { return 0.25; }
        double operator()(const T44&) const { return 0.5; }
        double operator()(const T51&) const { return 0.25; }
    };
    return std::visit(Visitor{}, spec.problem);
}

MappingKind mapping_kind(const ProblemSpec& spec) {
    struct Visitor {
        MappingKind operator()(const T31&) const { return MappingKind::StableUnivalent; }
        MappingKind operator()(const T32&) const { return MappingKind::StableConvex; }
        MappingKind operator()(const T33&) const { return MappingKind::StableUnivalent; }
        MappingKind operator()(const T34&) const { return MappingKind::StableConvex; }
        MappingKind operator()(const T41&) const { return MappingKind::StableUnivalent; }
        MappingKind operator()(const T42&) const { return MappingKind::StableConvex; }
        MappingKind operator()(const T43&) const { return MappingKind::StableUnivalent; }
        MappingKind operator()(const T44&) const { return MappingKind::StableConvex; }
        MappingKind operator()(const T51&) const { return MappingKind::StableUnivalent; }
    };
    return std::visit(Visitor{}, spec.problem);
}

double evaluate_G(const ProblemSpec& spec, double r) {
    validate(spec);
    check_radius(r);
    struct Visitor {
        double r;
        double operator()(const T31& t) const {
            const double xm = ipow(r, t.m), xp = ipow(r, t.p);
            return xm + S(2, 2, xm) + xp + S(1, 2, xp) - 0.25;
        }
        double operator()(const T32& t) const {
            const double xm = ipow(r, t.m), xp = ipow(r, t.p);
            return xm + S(1, 2, xm) + xp + S(0, 2, xp) - 0.5;
        }
        double operator()(const T33& t) const {
            const double xm = ipow(r, t.m), xq = ipow(r, t.q);
            return ipow(S(2, 1, xm), t.s) + ipow(S(1, 1, xq), t.p) - 1.0;
        }
        double operator()(const T34& t) const {
            const double xm = ipow(r, t.m), xq = ipow(r, t.q);
            return ipow(S(1, 1, xm), t.s) + ipow(S(0, 1, xq), t.p) - 1.0;
        }
        double operator()(const T41& t) const {
            const double xm = ipow(r, t.m);
            return (1.0 - t.lambda) * S(0, 1, xm) + t.lambda * S(2, 1, xm) - 0.25;
        }
        double operator()(const T42& t) const {
            const double xm = ipow(r, t.m);
            return (1.0 - t.lambda) * S(0, 1, xm) + t.lambda * S(1, 1, xm) - 0.5;
        }
        double operator()(const T43& t) const {
            const double xm = ipow(r, t.m), xp = ipow(r, t.p);
            return S(3, 1, xm) + S(1, t.N, xp) - 0.25;
        }
        double operator()(const T44& t) const {
            const double xm = ipow(r, t.m), xp = ipow(r, t.p);
            return S(2, 1, xm) + S(0, t.N, xp) - 0.5;
        }
        double operator()(const T51& t) const {
            const double xm = ipow(r, t.m);
            return S(1, 1, xm) + t.poly.evaluate(S(5, 1, r * r)) - 0.25;
        }
    };
    return std::visit(Visitor{r}, spec.problem);
}

double lhs_class_bound(const ProblemSpec& spec, double r) {
    return evaluate_G(spec, r) + target(spec);
}

namespace {

// Left-hand side on the class's extremal map with omega_j(z) = z^j, in
// closed form.  Identical to the class bound everywhere except T41, whose
// printed bound uses the half-plane growth for the first term while the
// extremal Koebe map grows like r/(1-r)^2.
double extremal_value(const ProblemSpec& spec, double r) {
    struct Visitor {
        double r;
        double operator()(const T31& t) const {
            return S(2, 1, ipow(r, t.m)) + S(1, 1, ipow(r, t.p));
        }
        double operator()(const T32& t) const {
            return S(1, 1, ipow(r, t.m)) + S(0, 1, ipow(r, t.p));
        }
        double operator()(const T33& t) const {
            return ipow(S(2, 1, ipow(r, t.m)), t.s) + ipow(koebe_value(ipow(r, t.q)), t.p);
        }
        double operator()(const T34& t) const {
            return ipow(S(1, 1, ipow(r, t.m)), t.s) + ipow(halfplane_value(ipow(r, t.q)), t.p);
        }
        double operator()(const T41& t) const {
            const double xm = ipow(r, t.m);
            return (1.0 - t.lambda) * koebe_value(xm) + t.lambda * S(2, 1, xm);
        }
        double operator()(const T42& t) const {
            const double xm = ipow(r, t.m);
            return (1.0 - t.lambda) * halfplane_value(xm) + t.lambda * S(1, 1, xm);
        }
        double operator()(const T43& t) const {
            return S(3, 1, ipow(r, t.m)) + S(1, t.N, ipow(r, t.p));
        }
        double operator()(const T44& t) const {
            return S(2, 1, ipow(r, t.m)) + S(0, t.N, ipow(r, t.p));
        }
        double operator()(const T51& t) const {
            return S(1, 1, ipow(r, t.m)) + t.poly.evaluate(S(5, 1, r * r));
        }
    };
    return std::visit(Visitor{r}, spec.problem);
}

}  // namespace

double lhs_extremal(const ProblemSpec& spec, double r) {
    validate(spec);
    check_radius(r);
    return extremal_value(spec, r);
}

ExtremalComparison lhs_extremal_pair(const ProblemSpec& spec, double r) {
    return ExtremalComparison{lhs_class_bound(spec, r), lhs_extremal(spec, r)};
}

double lhs_for_map(const ProblemSpec& spec, const HarmonicCoefficientMap& map,
                   double r, int upto) {
    validate(spec);
    check_radius(r);
    struct Visitor {
        const HarmonicCoefficientMap& f;
        double r;
        int K;
        double operator()(const T31& t) const {
            return operator_majorant(f, OperatorKind::D, ipow(r, t.m), K) +
                   operator_majorant(f, OperatorKind::Identity, ipow(r, t.p), K);
        }
        double operator()(const T32& t) const {
            return operator_majorant(f, OperatorKind::D, ipow(r, t.m), K) +
                   operator_majorant(f, OperatorKind::Identity, ipow(r, t.p), K);
        }
        double operator()(const T33& t) const {
            return ipow(operator_majorant(f, OperatorKind::D, ipow(r, t.m), K), t.s) +
                   ipow(operator_majorant(f, OperatorKind::Identity, ipow(r, t.q), K), t.p);
        }
        double operator()(const T34& t) const {
            return ipow(operator_majorant(f, OperatorKind::D, ipow(r, t.m), K), t.s) +
                   ipow(operator_majorant(f, OperatorKind::Identity, ipow(r, t.q), K), t.p);
        }
        double operator()(const T41& t) const {
            // First term follows the printed estimate chain: the growth
            // bound r^m/(1-r^m) does not depend on the sampled coefficients.
            const double xm = ipow(r, t.m);
            return (1.0 - t.lambda) * S(0, 1, xm) +
                   t.lambda * operator_majorant(f, OperatorKind::D, xm, K);
        }
        double operator()(const T42& t) const {
            const double xm = ipow(r, t.m);
            return (1.0 - t.lambda) * S(0, 1, xm) +
                   t.lambda * operator_majorant(f, OperatorKind::D, xm, K);
        }
        double operator()(const T43& t) const {
            return operator_majorant(f, OperatorKind::D2, ipow(r, t.m), K) +
                   coefficient_tail_sum(f, ipow(r, t.p), t.N, K);
        }
        double operator()(const T44& t) const {
            return operator_majorant(f, OperatorKind::D2, ipow(r, t.m), K) +
                   coefficient_tail_sum(f, ipow(r, t.p), t.N, K);
        }
        double operator()(const T51& t) const {
            return operator_majorant(f, OperatorKind::Identity, ipow(r, t.m), K) +
                   t.poly.evaluate(area_ratio_bound(f, r, K));
        }
    };
    return std::visit(Visitor{map, r, upto}, spec.problem);
}

namespace {

int parse_int(const std::string& key, const std::string& value) {
    int out = 0;
    const char* begin = value.data();
    const char* end = begin + value.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec != std::errc{} || ptr != end)
        throw std::invalid_argument("parameter " + key + " expects an integer, got '" + value + "'");
    return out;
}

double parse_real(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double out = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument("");
        return out;
    } catch (const std::exception&) {
        throw std::invalid_argument("parameter " + key + " expects a number, got '" + value + "'");
    }
}

std::vector<double> parse_poly(const std::string& value) {
    std::vector<double> out;
    std::string item;
    std::istringstream is(value);
    while (std::getline(is, item, ',')) {
        if (item.empty())
            throw std::invalid_argument("empty entry in polynomial coefficient list '" + value + "'");
        out.push_back(parse_real("poly", item));
    }
    if (value.empty() || value.back() == ',')
        throw std::invalid_argument("empty entry in polynomial coefficient list '" + value + "'");
    return out;
}

class ParamReader {
public:
    ParamReader(std::string_view id, const std::map<std::string, std::string>& params)
        : id_(id), params_(params) {}

    int required_int(const std::string& key) const {
        return parse_int(key, raw(key));
    }
    int int_or(const std::string& key, int fallback) const {
        auto it = params_.find(key);
        return it == params_.end() ? fallback : parse_int(key, it->second);
    }
    double required_real(const std::string& key) const {
        return parse_real(key, raw(key));
    }
    std::vector<double> required_poly(const std::string& key) const {
        return parse_poly(raw(key));
    }
    void reject_unknown(std::initializer_list<std::string_view> known) const {
        for (const auto& [k, v] : params_) {
            bool ok = false;
            for (auto name : known)
                if (k == name) ok = true;
            if (!ok)
                throw std::invalid_argument("unknown parameter '" + k + "' for problem " +
                                            std::string(id_));
        }
    }

private:
    const std::string& raw(const std::string& key) const {
        auto it = params_.find(key);
        if (it == params_.end())
            throw std::invalid_argument("problem " + std::string(id_) +
                                        " requires parameter '" + key + "'");
        return it->second;
    }
    std::string_view id_;
    const std::map<std::string, std::string>& params_;
};

}  // namespace

ProblemSpec make_problem(std::string_view id,
                         const std::map<std::string, std::string>& params) {
    ParamReader in(id, params);
    ProblemSpec spec;
    if (id == "T31") {
        in.reject_unknown({"m", "p"});
        spec.problem = T31{in.required_int("m"), in.required_int("p")};
    } else if (id == "T32") {
        in.reject_unknown({"m", "p"});
        spec.problem = T32{in.required_int("m"), in.required_int("p")};
    } else if (id == "T33") {
        in.reject_unknown({"s", "m", "p", "q"});
        spec.problem = T33{in.required_int("s"), in.required_int("m"),
                           in.required_int("p"), in.required_int("q")};
    } else if (id == "T34") {
        in.reject_unknown({"s", "m", "p", "q"});
        spec.problem = T34{in.required_int("s"), in.required_int("m"),
                           in.required_int("p"), in.required_int("q")};
    } else if (id == "T41") {
        in.reject_unknown({"m", "lambda"});
        spec.problem = T41{in.required_int("m"), in.required_real("lambda")};
    } else if (id == "T42") {
        in.reject_unknown({"m", "lambda"});
        spec.problem = T42{in.required_int("m"), in.required_real("lambda")};
    } else if (id == "T43") {
        in.reject_unknown({"m", "p", "N"});
        spec.problem = T43{in.required_int("m"), in.required_int("p"), in.int_or("N", 2)};
    } else if (id == "T44") {
        in.reject_unknown({"m", "p", "N"});
        spec.problem = T44{in.required_int("m"), in.required_int("p"), in.int_or("N", 2)};
    } else if (id == "T51") {
        in.reject_unknown({"m", "poly"});
        spec.problem = T51{in.required_int("m"), NonnegPolynomial(in.required_poly("poly"))};
    } else {
        throw std::invalid_argument("unknown problem id '" + std::string(id) + "'");
    }
    validate(spec);
    return spec;
}

std::vector<std::string> parameter_names(std::string_view id) {
    if (id == "T31" || id == "T32") return {"m", "p"};
    if (id == "T33" || id == "T34") return {"s", "m", "p", "q"};
    if (id == "T41" || id == "T42") return {"m", "lambda"};
    if (id == "T43" || id == "T44") return {"m", "p", "N"};
    if (id == "T51") return {"m", "poly"};
    throw std::invalid_argument("unknown problem id '" + std::string(id) + "'");
}

ProblemSpec with_parameter(const ProblemSpec& spec, std::string_view name, double value) {
    auto as_int = [&](const char* key) {
        const int v = static_cast<int>(std::lround(value));
        if (static_cast<double>(v) != value)
            throw std::invalid_argument("parameter " + std::string(key) +
                                        " expects an integer value");
        return v;
    };
    ProblemSpec out = spec;
    struct Visitor {
        std::string_view name;
        double value;
        decltype(as_int)& to_int;
        ProblemVariant operator()(T31 t) const {
            if (name == "m") t.m = to_int("m");
            else if (name == "p") t.p = to_int("p");
            else throw std::invalid_argument("T31 has no parameter '" + std::string(name) + "'");
            return t;
        }
        ProblemVariant operator()(T32 t) const {
            if (name == "m") t.m = to_int("m");
            else if (name == "p") t.p = to_int("p");
            else throw std::invalid_argument("T32 has no parameter '" + std::string(name) + "'");
            return t;
        }
        ProblemVariant operator()(T33 t) const {
            if (name == "s") t.s = to_int("s");
            else if (name == "m") t.m = to_int("m");
            else if (name == "p") t.p = to_int("p");
            else if (name == "q") t.q = to_int("q");
            else throw std::invalid_argument("T33 has no parameter '" + std::string(name) + "'");
            return t;
        }
        ProblemVariant operator()(T34 t) const {
            if (name == "s") t.s = to_int("s");
            else if (name == "m") t.m = to_int("m");
            else if (name == "p") t.p = to_int("p");
            else if (name == "q") t.q = to_int("q");
            else throw std::invalid_argument("T34 has no parameter '" + std::string(name) + "'");
            return t;
        }
        ProblemVariant operator()(T41 t) const {
            if (name == "m") t.m = to_int("m");
            else if (name == "lambda") t.lambda = value;
            else throw std::invalid_argument("T41 has no parameter '" + std::string(name) + "'");
            return t;
        }
        ProblemVariant operator()(T42 t) const {
            if (name == "m") t.m = to_int("m");
            else if (name == "lambda") t.lambda = value;
            else throw std::invalid_argument("T42 has no parameter '" + std::string(name) + "'");
            return t;
        }
        ProblemVariant operator()(T43 t) const {
            if (name == "m") t.m = to_int("m");
            else if (name == "p") t.p = to_int("p");
            else if (name == "N") t.N = to_int("N");
            else throw std::invalid_argument("T43 has no parameter '" + std::string(name) + "'");
            return t;
        }
        ProblemVariant operator()(T44 t) const {
            if (name == "m") t.m = to_int("m");
            else if (name == "p") t.p = to_int("p");
            else if (name == "N") t.N = to_int("N");
            else throw std::invalid_argument("T44 has no parameter '" + std::string(name) + "'");
            return t;
        }
        ProblemVariant operator()(T51 t) const {
            if (name == "m") t.m = to_int("m");
            else throw std::invalid_argument("sweeping '" + std::string(name) +
                                             "' is not supported for T51");
            return t;
        }
    };
    out.problem = std::visit(Visitor{name, value, as_int}, spec.problem);
    validate(out);
    return out;
}

}  // namespace bohr
