#include "harmdiff/serialize.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace harmdiff {

using nlohmann::json;

namespace {

json series_json(const LaurentSeries& series) {
    json coeffs = json::array();
    for (Complex c : series.coeffs()) {
        coeffs.push_back(json::array({c.real(), c.imag()}));
    }
    return json{{"n_min", series.n_min()}, {"n_max", series.n_max()}, {"coeffs", coeffs}};
}

json parse(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw ParseError("invalid JSON document");
    return doc;
}

double number_at(const json& node) {
    if (!node.is_number()) throw ParseError("expected a number");
    return node.get<double>();
}

} // namespace

std::string series_to_json(const LaurentSeries& series) {
    return series_json(series).dump(2) + "\n";
}

LaurentSeries series_from_json(const std::string& text) {
    const json doc = parse(text);
    try {
        const int n_min = doc.at("n_min").get<int>();
        const int n_max = doc.at("n_max").get<int>();
        const json& coeffs = doc.at("coeffs");
        if (!coeffs.is_array() ||
            static_cast<int>(coeffs.size()) != n_max - n_min + 1) {
            throw ParseError("coeffs length must equal n_max - n_min + 1");
        }
        std::vector<Complex> values;
        values.reserve(coeffs.size());
        for (const json& c : coeffs) {
            if (!c.is_array() || c.size() != 2) {
                throw ParseError("each coefficient must be a [re, im] pair");
            }
            values.emplace_back(number_at(c[0]), number_at(c[1]));
        }
        return LaurentSeries(n_min, std::move(values));
    } catch (const json::exception& e) {
        throw ParseError(std::string("series document: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("series document: ") + e.what());
    }
}

std::string gridded_form_to_json(const GriddedForm& form) {
    json comp_r = json::array();
    json comp_t = json::array();
    for (int i = 0; i < form.n_r(); ++i) {
        for (int j = 0; j < form.n_t(); ++j) {
            comp_r.push_back(form.comp_r()(i, j));
            comp_t.push_back(form.comp_t()(i, j));
        }
    }
    const json doc{{"r_lo", form.r_lo()},     {"r_hi", form.r_hi()},
                   {"n_r", form.n_r()},       {"n_t", form.n_t()},
                   {"comp_r", std::move(comp_r)}, {"comp_t", std::move(comp_t)}};
    return doc.dump() + "\n";
}

GriddedForm gridded_form_from_json(const std::string& text) {
    const json doc = parse(text);
    try {
        const double r_lo = number_at(doc.at("r_lo"));
        const double r_hi = number_at(doc.at("r_hi"));
        const int n_r = doc.at("n_r").get<int>();
        const int n_t = doc.at("n_t").get<int>();
        const json& comp_r = doc.at("comp_r");
        const json& comp_t = doc.at("comp_t");
        const size_t expected = static_cast<size_t>(n_r) * static_cast<size_t>(n_t);
        if (!comp_r.is_array() || !comp_t.is_array() || comp_r.size() != expected ||
            comp_t.size() != expected) {
            throw ParseError("component matrices must have n_r * n_t entries");
        }
        GriddedForm form(r_lo, r_hi, n_r, n_t);
        size_t k = 0;
        for (int i = 0; i < n_r; ++i) {
            for (int j = 0; j < n_t; ++j, ++k) {
                form.comp_r()(i, j) = number_at(comp_r[k]);
                form.comp_t()(i, j) = number_at(comp_t[k]);
            }
        }
        return form;
    } catch (const json::exception& e) {
        throw ParseError(std::string("grid document: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("grid document: ") + e.what());
    }
}

std::string report_to_json(const InequalityReport& report) {
    json records = json::array();
    for (const InequalityRecord& rec : report.records) {
        records.push_back(json{{"name", rec.name},
                               {"lhs", rec.lhs},
                               {"rhs", rec.rhs},
                               {"slack", rec.slack},
                               {"pass", rec.pass}});
    }
    const json doc{{"p", report.p},
                   {"a", report.a},
                   {"r", report.r},
                   {"R", report.R},
                   {"core_constant", report.core_constant},
                   {"records", std::move(records)}};
    return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

} // namespace harmdiff
