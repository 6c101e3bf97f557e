#include "cqf/model_io.hpp"

#include <fstream>

namespace cqf {

using nlohmann::json;

json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat mat_from_json(const json& j, const std::string& name) {
    if (!j.is_array()) throw Error(ErrorKind::InvalidSpec, name + ": expected an array of rows");
    const int rows = static_cast<int>(j.size());
    int cols = -1;
    std::vector<double> entries;
    for (const auto& row : j) {
        if (!row.is_array()) throw Error(ErrorKind::InvalidSpec, name + ": rows must be arrays");
        if (cols < 0)
            cols = static_cast<int>(row.size());
        else if (static_cast<int>(row.size()) != cols)
            throw Error(ErrorKind::InvalidSpec, name + ": ragged rows");
        for (const auto& x : row) {
            if (!x.is_number()) throw Error(ErrorKind::InvalidSpec, name + ": entries must be numbers");
            entries.push_back(x.get<double>());
        }
    }
    if (rows == 0) cols = 0;
    try {
        return Mat(rows, cols, std::move(entries));
    } catch (const Error& e) {
        throw Error(ErrorKind::InvalidSpec, name + ": " + e.what());
    }
}

namespace {

const json& field(const json& j, const std::string& key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) throw Error(ErrorKind::InvalidSpec, where + ": missing key '" + key + "'");
    return *it;
}

int int_field(const json& j, const std::string& key, const std::string& where) {
    const json& f = field(j, key, where);
    if (!f.is_number_integer()) throw Error(ErrorKind::InvalidSpec, where + "." + key + ": expected an integer");
    return f.get<int>();
}

}  // namespace

json model_to_json(const Model& model) {
    json j;
    j["plant"] = {{"n", model.plant.n},
                  {"m", model.plant.m},
                  {"theta", mat_to_json(model.plant.theta)},
                  {"R", mat_to_json(model.plant.R)},
                  {"N", mat_to_json(model.plant.N)}};
    j["observer"] = {{"nu", model.observer.nu},
                     {"p", model.observer.p},
                     {"mu", model.observer.mu},
                     {"vartheta", mat_to_json(model.observer.vartheta)},
                     {"r", mat_to_json(model.observer.r)},
                     {"N1", mat_to_json(model.observer.N1)},
                     {"N2", mat_to_json(model.observer.N2)},
                     {"pi_columns", model.observer.pi_columns}};
    j["cost"] = {{"F", mat_to_json(model.cost.F)}, {"G", mat_to_json(model.cost.G)}};
    return j;
}

Model model_from_json(const json& j) {
    Model model;
    const json& pl = field(j, "plant", "model");
    model.plant.n = int_field(pl, "n", "plant");
    model.plant.m = int_field(pl, "m", "plant");
    model.plant.theta = mat_from_json(field(pl, "theta", "plant"), "plant.theta");
    model.plant.R = mat_from_json(field(pl, "R", "plant"), "plant.R");
    model.plant.N = mat_from_json(field(pl, "N", "plant"), "plant.N");

    const json& ob = field(j, "observer", "model");
    model.observer.nu = int_field(ob, "nu", "observer");
    model.observer.p = int_field(ob, "p", "observer");
    model.observer.mu = int_field(ob, "mu", "observer");
    model.observer.vartheta = mat_from_json(field(ob, "vartheta", "observer"), "observer.vartheta");
    model.observer.r = mat_from_json(field(ob, "r", "observer"), "observer.r");
    model.observer.N1 = mat_from_json(field(ob, "N1", "observer"), "observer.N1");
    model.observer.N2 = mat_from_json(field(ob, "N2", "observer"), "observer.N2");
    const json& cols = field(ob, "pi_columns", "observer");
    if (!cols.is_array()) throw Error(ErrorKind::InvalidSpec, "observer.pi_columns: expected an array");
    model.observer.pi_columns.clear();
    for (const auto& c : cols) {
        if (!c.is_number_integer()) throw Error(ErrorKind::InvalidSpec, "observer.pi_columns: entries must be integers");
        model.observer.pi_columns.push_back(c.get<int>());
    }

    const json& co = field(j, "cost", "model");
    model.cost.F = mat_from_json(field(co, "F", "cost"), "cost.F");
    model.cost.G = mat_from_json(field(co, "G", "cost"), "cost.G");
    return model;
}

Model load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidSpec, "cannot open model file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::InvalidSpec, "cannot parse model file " + path + ": " + e.what());
    }
    return model_from_json(j);
}

void save_model(const Model& model, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::InvalidSpec, "cannot open output file: " + path);
    out << model_to_json(model).dump(2) << "\n";
}

}  // namespace cqf
