#include "qslice/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace qslice::io {

std::string format_double(double v) {
    if (v == 0.0) v = 0.0;  // drop the sign of -0
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
}

Quaternion<double> parse_quaternion(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw ParseError("empty quaternion literal");

    Quaternion<double> q;
    std::size_t pos = 0;
    while (pos < s.size()) {
        double sign = 1.0;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = (s[pos] == '-') ? -1.0 : 1.0;
            ++pos;
        }
        double value = 1.0;
        bool have_number = false;
        {
            double v;
            auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), v);
            if (ec == std::errc{}) {
                value = v;
                pos = std::size_t(ptr - s.data());
                have_number = true;
            }
        }
        double* slot = &q.w;
        bool have_unit = false;
        if (pos < s.size()) {
            switch (s[pos]) {
                case 'i': slot = &q.x; have_unit = true; break;
                case 'j': slot = &q.y; have_unit = true; break;
                case 'k': slot = &q.z; have_unit = true; break;
                default: break;
            }
            if (have_unit) ++pos;
        }
        if (!have_number && !have_unit)
            throw ParseError("malformed quaternion literal: \"" + std::string(text) + "\"");
        *slot += sign * value;
    }
    return q;
}

std::string format_quaternion(const Quaternion<double>& q) {
    auto signed_term = [](double v, const char* unit) {
        std::string s = std::signbit(v) && v != 0.0 ? "-" : "+";
        s += format_double(std::abs(v));
        s += unit;
        return s;
    };
    return format_double(q.w) + signed_term(q.x, "i") + signed_term(q.y, "j") +
           signed_term(q.z, "k");
}

Json quaternion_to_json(const Quaternion<double>& q) {
    return Json::array({q.w, q.x, q.y, q.z});
}

Json qjet_to_json(const QJet<double>& f) {
    Json j;
    j["kind"] = "qpoly";
    Json coeffs = Json::array();
    for (const auto& a : f.c) coeffs.push_back(quaternion_to_json(a));
    j["coeffs"] = std::move(coeffs);
    j["trust_radius"] = f.trust_radius;
    return j;
}

Json rjet_to_json(const RJet<double>& f) {
    Json j;
    j["kind"] = "rpoly";
    j["coeffs"] = f.c;
    j["trust_radius"] = f.trust_radius;
    return j;
}

FunctionFile parse_function_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("coeffs"))
        throw ParseError("function file must be an object with \"kind\" and \"coeffs\"");
    std::string kind = j["kind"].get<std::string>();
    const Json& coeffs = j["coeffs"];
    if (!coeffs.is_array() || coeffs.empty())
        throw ParseError("\"coeffs\" must be a non-empty array");

    FunctionFile out;
    out.jet.c.clear();
    if (kind == "qpoly") {
        for (const Json& e : coeffs) {
            if (!e.is_array() || e.size() != 4)
                throw ParseError("qpoly coefficients must be [w,x,y,z] arrays");
            out.jet.c.push_back({e[0].get<double>(), e[1].get<double>(), e[2].get<double>(),
                                 e[3].get<double>()});
        }
    } else if (kind == "rpoly") {
        out.real_kind = true;
        for (const Json& e : coeffs) {
            if (!e.is_number())
                throw ParseError("rpoly coefficients must be scalars");
            out.jet.c.push_back(Quaternion<double>{e.get<double>()});
        }
    } else {
        throw ParseError("unknown function kind \"" + kind + "\"");
    }
    if (j.contains("trust_radius")) out.jet.trust_radius = j["trust_radius"].get<double>();
    return out;
}

FunctionFile load_function_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    try {
        return parse_function_json(j);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path.string());
    out << j.dump(2) << "\n";
}

void save_function_file(const std::filesystem::path& path, const QJet<double>& f) {
    write_json_file(path, qjet_to_json(f));
}

void save_function_file(const std::filesystem::path& path, const RJet<double>& f) {
    write_json_file(path, rjet_to_json(f));
}

}  // namespace qslice::io
