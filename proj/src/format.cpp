#include "quatroots/format.hpp"

#include <cmath>
#include <sstream>

#include "quatroots/parse.hpp"

namespace quatroots {

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const QuatQ& q) {
    Json a = Json::array();
    for (const Rational& c : q.coords()) a.push_back(to_string(c));
    return a;
}

Json to_json(const QuatF& q) { return Json::array({q.w(), q.x(), q.y(), q.z()}); }

Json to_json(const QPolyQ& p) {
    Json a = Json::array();
    for (const QuatQ& q : p.coeffs()) a.push_back(to_json(q));
    return a;
}

Json to_json(const CPolyQ& p) {
    Json a = Json::array();
    for (const Rational& r : p.coeffs()) a.push_back(to_string(r));
    return a;
}

QuatQ quaternion_from_json(const Json& j, const AlgebraQ& alg) {
    if (!j.is_array() || j.size() != 4) throw UsageError("quaternion must be an array of four rationals");
    std::array<Rational, 4> c;
    for (std::size_t n = 0; n < 4; ++n) {
        if (!j[n].is_string()) throw UsageError("quaternion components must be rational strings");
        c[n] = parse_rational(j[n].get<std::string>());
    }
    return QuatQ::from_coords(alg, c);
}

QPolyQ poly_from_json(const Json& j, const AlgebraQ& alg) {
    if (!j.is_array()) throw UsageError("polynomial must be an array of coefficients");
    std::vector<QuatQ> c;
    for (const auto& q : j) c.push_back(quaternion_from_json(q, alg));
    return QPolyQ(alg, std::move(c));
}

namespace {

template <class T>
Json status_json(const ClassStatus<T>& s) {
    Json j;
    if (std::holds_alternative<SphericalClass>(s)) {
        j["status"] = "spherical";
    } else if (const auto* iso = std::get_if<IsolatedRoot<T>>(&s)) {
        j["status"] = "isolated";
        j["representative"] = to_json(iso->representative);
    } else {
        const auto& nr = std::get<NoRoot<T>>(s);
        j["status"] = "no-root";
        j["alpha"] = to_json(nr.alpha);
        j["beta"] = to_json(nr.beta);
    }
    return j;
}

}  // namespace

Json to_json(const RootReport<Rational>& r) {
    Json j;
    Json central = Json::array();
    for (const Rational& v : r.central_roots) central.push_back(to_string(v));
    j["central_roots"] = central;
    Json classes = Json::array();
    for (const auto& e : r.entries) {
        Json c;
        c["t"] = to_string(e.cls.t);
        c["n"] = to_string(e.cls.n);
        c["min_poly"] = to_text(min_poly<Rational>(e.cls));
        c["validated"] = e.cls.validated;
        c.update(status_json(e.status));
        if (!e.note.empty()) c["note"] = e.note;
        classes.push_back(c);
    }
    j["classes"] = classes;
    j["spherical_count"] = r.spherical_count();
    j["classes_with_roots"] = r.classes_with_roots();
    j["unresolved"] = to_json(r.unresolved);
    return j;
}

Json to_json(const RootReport<double>& r) {
    Json j;
    j["central_roots"] = r.central_roots;
    Json classes = Json::array();
    for (const auto& e : r.entries) {
        Json c;
        c["t"] = e.cls.t;
        c["n"] = e.cls.n;
        c.update(status_json(e.status));
        c["uncertain"] = e.uncertain;
        if (!e.note.empty()) c["note"] = e.note;
        classes.push_back(c);
    }
    j["classes"] = classes;
    j["spherical_count"] = r.spherical_count();
    j["classes_with_roots"] = r.classes_with_roots();
    return j;
}

std::string to_text(const QuatF& q) {
    static const char* units[] = {"", "i", "j", "k"};
    const double c[] = {q.w(), q.x(), q.y(), q.z()};
    std::string out = to_string(c[0] == 0 ? 0.0 : c[0]);
    for (std::size_t n = 1; n < 4; ++n) {
        out += std::signbit(c[n]) && c[n] != 0 ? " - " : " + ";
        out += to_string(std::fabs(c[n])) + units[n];
    }
    return out;
}

std::string to_text(const RootReport<Rational>& r) {
    std::ostringstream os;
    os << "central roots:";
    if (r.central_roots.empty()) os << " none";
    for (std::size_t n = 0; n < r.central_roots.size(); ++n) os << (n ? ", " : " ") << to_string(r.central_roots[n]);
    os << '\n';
    for (const auto& e : r.entries) {
        os << "class t=" << to_string(e.cls.t) << " n=" << to_string(e.cls.n) << " ("
           << to_text(min_poly<Rational>(e.cls)) << "): ";
        if (e.is_spherical()) os << "spherical";
        else if (const auto* iso = std::get_if<IsolatedRoot<Rational>>(&e.status))
            os << "isolated root " << to_text(iso->representative);
        else os << "no root";
        if (!e.note.empty()) os << " [" << e.note << "]";
        os << '\n';
    }
    os << "spherical classes: " << r.spherical_count() << '\n';
    if (r.unresolved.degree() > Degree(0)) os << "unresolved companion factor: " << to_text(r.unresolved) << '\n';
    return os.str();
}

std::string to_text(const RootReport<double>& r) {
    std::ostringstream os;
    os << "central roots:";
    if (r.central_roots.empty()) os << " none";
    for (std::size_t n = 0; n < r.central_roots.size(); ++n) os << (n ? ", " : " ") << to_string(r.central_roots[n]);
    os << '\n';
    for (const auto& e : r.entries) {
        os << "class t=" << to_string(e.cls.t) << " n=" << to_string(e.cls.n) << ": ";
        if (e.is_spherical()) os << "spherical";
        else if (const auto* iso = std::get_if<IsolatedRoot<double>>(&e.status))
            os << "isolated root " << to_text(iso->representative);
        else os << "no root";
        if (e.uncertain) os << " [uncertain: " << e.note << "]";
        os << '\n';
    }
    os << "spherical classes: " << r.spherical_count() << '\n';
    return os.str();
}

}  // namespace quatroots
