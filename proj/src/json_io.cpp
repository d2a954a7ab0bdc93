#include "gkls/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace gkls {

using nlohmann::json;

json liouvillian_to_json(const Dissipator& l) {
    json rows = json::array();
    for (std::size_t r = 0; r < l.matrix.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < l.matrix.cols(); ++c) {
            const cplx v = l.matrix(r, c);
            row.push_back(json::array({v.real(), v.imag()}));
        }
        rows.push_back(std::move(row));
    }
    return json{{"n", l.n}, {"ordering", l.ordering.name}, {"matrix", std::move(rows)}};
}

Dissipator liouvillian_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("ordering") ||
        !doc.contains("matrix"))
        throw std::invalid_argument("liouvillian document: missing n/ordering/matrix");
    if (!doc["n"].is_number_integer())
        throw std::invalid_argument("liouvillian document: n must be an integer");
    const int n = doc["n"].get<int>();
    if (n < 2) throw std::invalid_argument("liouvillian document: n must be >= 2");

    const std::string ordering_name = doc["ordering"].get<std::string>();
    VecOrdering ordering;
    if (ordering_name == "row-major")
        ordering = VecOrdering::row_major(n);
    else if (ordering_name == "paper-v3") {
        if (n != 3)
            throw std::invalid_argument("liouvillian document: paper-v3 ordering requires n = 3");
        ordering = VecOrdering::paper_v3();
    } else
        throw std::invalid_argument("liouvillian document: unknown ordering '" + ordering_name +
                                    "'");

    const std::size_t nn = static_cast<std::size_t>(n) * n;
    const json& rows = doc["matrix"];
    if (!rows.is_array() || rows.size() != nn)
        throw std::invalid_argument("liouvillian document: matrix must have n^2 rows");
    Matrix m(nn, nn);
    for (std::size_t r = 0; r < nn; ++r) {
        const json& row = rows[r];
        if (!row.is_array() || row.size() != nn)
            throw std::invalid_argument("liouvillian document: matrix row has wrong length");
        for (std::size_t c = 0; c < nn; ++c) {
            const json& pair = row[c];
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
                !pair[1].is_number())
                throw std::invalid_argument(
                    "liouvillian document: matrix entries must be [re, im] pairs");
            m(r, c) = cplx(pair[0].get<double>(), pair[1].get<double>());
        }
    }
    return Dissipator{n, std::move(ordering), std::move(m)};
}

Dissipator load_liouvillian(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open liouvillian file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("invalid JSON in " + path + ": " + e.what());
    }
    return liouvillian_from_json(doc);
}

void save_liouvillian(const Dissipator& l, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write liouvillian file: " + path);
    out << liouvillian_to_json(l).dump(1) << "\n";
}

}  // namespace gkls
