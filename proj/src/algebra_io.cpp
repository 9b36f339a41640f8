#include "postlie/algebra_io.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace postlie {

namespace {

Rational scalar_from_json(const nlohmann::json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw std::runtime_error("scalar entries must be strings like \"p/q\" or integers");
}

}  // namespace

AlgebraInput load_algebra_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("JSON parse error: ") + e.what());
    }
    try {
        const int d = j.at("dim").get<int>();
        std::vector<std::string> labels;
        if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
        LieAlgebraSpec L(d, labels);
        for (const auto& entry : j.at("bracket")) {
            int i = entry.at(0).get<int>();
            int jj = entry.at(1).get<int>();
            if (i < 0 || i >= d || jj < 0 || jj >= d)
                throw std::runtime_error("bracket index out of range");
            for (const auto& kv : entry.at(2)) {
                int k = kv.at(0).get<int>();
                if (k < 0 || k >= d) throw std::runtime_error("bracket target index out of range");
                L.set_c(i, jj, k, scalar_from_json(kv.at(1)));
            }
        }
        LinearEndo R(d);
        const auto& rows = j.at("R");
        if (static_cast<int>(rows.size()) != d) throw std::runtime_error("R must be d x d");
        for (int i = 0; i < d; ++i) {
            if (static_cast<int>(rows[i].size()) != d) throw std::runtime_error("R must be d x d");
            for (int jj = 0; jj < d; ++jj) R.at(i, jj) = scalar_from_json(rows[i][jj]);
        }
        Rational theta = j.contains("theta") ? scalar_from_json(j.at("theta")) : Rational(1);
        return AlgebraInput{std::move(L), std::move(R), std::move(theta)};
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("invalid algebra file: ") + e.what());
    }
}

AlgebraInput load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open algebra file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return load_algebra_json(text);
}

std::string algebra_to_json(const AlgebraInput& in) {
    nlohmann::json j;
    const int d = in.L.dim();
    j["dim"] = d;
    j["labels"] = in.L.labels();
    nlohmann::json bracket = nlohmann::json::array();
    for (int i = 0; i < d; ++i)
        for (int jj = 0; jj < d; ++jj) {
            nlohmann::json coords = nlohmann::json::array();
            for (int k = 0; k < d; ++k)
                if (in.L.c(i, jj, k) != 0)
                    coords.push_back({k, rational_to_string(in.L.c(i, jj, k))});
            if (!coords.empty()) bracket.push_back({i, jj, coords});
        }
    j["bracket"] = bracket;
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < d; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int jj = 0; jj < d; ++jj) row.push_back(rational_to_string(in.R.at(i, jj)));
        rows.push_back(row);
    }
    j["R"] = rows;
    j["theta"] = rational_to_string(in.theta);
    return j.dump(2);
}

}  // namespace postlie
