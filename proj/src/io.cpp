#include "hodgekit/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "hodgekit/error.hpp"

namespace hodgekit::io {

namespace {

[[noreturn]] void invalid(const std::string& what)
{
    throw Error(ErrorCode::Validation, what);
}

void require_object(const json& doc, const std::string& what, const std::set<std::string>& required,
                    const std::set<std::string>& optional = {})
{
    if (!doc.is_object())
        invalid(what + " must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (!required.contains(key) && !optional.contains(key))
            invalid(what + ": unknown field \"" + key + "\"");
    }
    for (const auto& key : required)
        if (!doc.contains(key))
            invalid(what + ": missing field \"" + key + "\"");
}

double number(const json& v, const std::string& what)
{
    if (!v.is_number())
        invalid(what + " must be a number");
    double x = v.get<double>();
    if (!std::isfinite(x))
        invalid(what + " must be finite");
    return x;
}

std::vector<double> numbers(const json& v, const std::string& what)
{
    if (!v.is_array())
        invalid(what + " must be an array of numbers");
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& x : v)
        out.push_back(number(x, what));
    return out;
}

long long integer(const json& v, const std::string& what)
{
    if (!v.is_number_integer())
        invalid(what + " must be an integer");
    return v.get<long long>();
}

std::vector<VertexId> vertex_list(const json& v, const std::string& what)
{
    if (!v.is_array())
        invalid(what + " must be an array of vertex ids");
    std::vector<VertexId> out;
    for (const auto& x : v) {
        if (!x.is_number_integer() || (x.is_number_integer() && !x.is_number_unsigned() && x.get<long long>() < 0))
            invalid(what + ": vertex ids must be non-negative integers");
        out.push_back(x.get<VertexId>());
    }
    return out;
}

Simplex simplex_from(const json& v, const std::string& what)
{
    return Simplex(vertex_list(v, what));
}

Eigen::MatrixXd matrix_from(const json& v, const std::string& what, Eigen::Index rows, Eigen::Index cols)
{
    if (!v.is_array())
        invalid(what + " must be an array of rows");
    // A 0-row matrix cannot express its column count in JSON; trust the stalks.
    if (v.empty())
        return Eigen::MatrixXd::Zero(0, rows == 0 ? cols : 0);
    Eigen::MatrixXd m(static_cast<Eigen::Index>(v.size()), static_cast<Eigen::Index>(v[0].size()));
    for (std::size_t r = 0; r < v.size(); ++r) {
        std::vector<double> row = numbers(v[r], what);
        if (row.size() != v[0].size())
            invalid(what + " has rows of different lengths");
        for (std::size_t k = 0; k < row.size(); ++k)
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)) = row[k];
    }
    return m;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

} // namespace

json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        invalid(path.string() + ": cannot open file");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        invalid(path.string() + ": " + e.what());
    }
}

TopSimplices parse_complex(const json& doc)
{
    require_object(doc, "complex", {"top_simplices"});
    const json& tops = doc.at("top_simplices");
    if (!tops.is_array())
        invalid("complex: \"top_simplices\" must be an array");
    if (tops.empty())
        invalid("complex: \"top_simplices\" is empty");
    TopSimplices out;
    for (std::size_t i = 0; i < tops.size(); ++i)
        out.push_back(vertex_list(tops[i], "complex: top_simplices[" + std::to_string(i) + "]"));
    return out;
}

json complex_to_json(const TopSimplices& tops)
{
    json arr = json::array();
    for (const auto& s : tops)
        arr.push_back(s);
    return json{{"top_simplices", arr}};
}

Cochain parse_signal(const json& doc, const SimplicialComplex& c)
{
    require_object(doc, "signal", {"dim", "values"});
    const long long dim = integer(doc.at("dim"), "signal: dim");
    if (dim < 0 || dim > c.max_dim())
        throw Error(ErrorCode::DimensionOutOfRange, "signal: dim " + std::to_string(dim) +
                                                        " outside [0, " + std::to_string(c.max_dim()) + "]");
    Cochain x{static_cast<int>(dim), Field::Real, numbers(doc.at("values"), "signal: values")};
    if (x.size() != c.count(x.dim))
        throw Error(ErrorCode::ShapeMismatch, "signal: " + std::to_string(x.size()) + " values for " +
                                                  std::to_string(c.count(x.dim)) + " simplices of dimension " +
                                                  std::to_string(dim));
    return x;
}

json signal_to_json(const Cochain& x)
{
    return json{{"dim", x.dim}, {"values", x.values}};
}

InnerProductWeights parse_weights(const json& doc, const std::vector<std::size_t>& sizes)
{
    require_object(doc, "weights", {"weights"});
    const json& w = doc.at("weights");
    if (!w.is_object())
        invalid("weights: \"weights\" must map dimensions to arrays");
    std::vector<std::vector<double>> per_dim(sizes.size());
    for (const auto& [key, value] : w.items()) {
        std::size_t n = 0;
        auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), n);
        if (ec != std::errc{} || ptr != key.data() + key.size())
            invalid("weights: key \"" + key + "\" is not a dimension");
        if (n >= sizes.size())
            throw Error(ErrorCode::DimensionOutOfRange, "weights: dimension " + key + " not in the complex");
        per_dim[n] = numbers(value, "weights[" + key + "]");
        if (per_dim[n].empty() && sizes[n] != 0)
            throw Error(ErrorCode::ShapeMismatch, "weights[" + key + "] is empty");
    }
    return InnerProductWeights::from(std::move(per_dim), sizes);
}

FilterSpec parse_filter(const json& doc)
{
    require_object(doc, "filter", {"dim"}, {"alpha0", "down", "up"});
    FilterSpec spec;
    const long long dim = integer(doc.at("dim"), "filter: dim");
    if (dim < 0)
        throw Error(ErrorCode::DimensionOutOfRange, "filter: negative dim");
    spec.dim = static_cast<int>(dim);
    if (doc.contains("alpha0"))
        spec.alpha0 = number(doc.at("alpha0"), "filter: alpha0");
    if (doc.contains("down"))
        spec.down = numbers(doc.at("down"), "filter: down");
    if (doc.contains("up"))
        spec.up = numbers(doc.at("up"), "filter: up");
    return spec;
}

std::string simplex_label(const Simplex& s)
{
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? "," : "") + std::to_string(s[i]);
    return out + "]";
}

Simplex parse_simplex_key(const std::string& key)
{
    json parsed;
    try {
        parsed = json::parse(key);
    } catch (const json::parse_error&) {
        invalid("simplex key \"" + key + "\" is not a vertex list");
    }
    return simplex_from(parsed, "simplex key \"" + key + "\"");
}

Sheaf parse_sheaf(const json& doc, const SimplicialComplex& c)
{
    require_object(doc, "sheaf", {"stalks", "restrictions"});
    const json& stalks_doc = doc.at("stalks");
    if (!stalks_doc.is_object())
        invalid("sheaf: \"stalks\" must map simplex keys to dimensions");
    std::map<Simplex, std::size_t> stalks;
    for (const auto& [key, value] : stalks_doc.items()) {
        const long long k = integer(value, "sheaf: stalk " + key);
        if (k < 0)
            invalid("sheaf: stalk " + key + " has negative dimension");
        if (!stalks.emplace(parse_simplex_key(key), static_cast<std::size_t>(k)).second)
            invalid("sheaf: stalk " + key + " given twice");
    }

    const json& maps_doc = doc.at("restrictions");
    if (!maps_doc.is_array())
        invalid("sheaf: \"restrictions\" must be an array");
    std::vector<RestrictionMap> maps;
    for (std::size_t i = 0; i < maps_doc.size(); ++i) {
        const std::string what = "sheaf: restrictions[" + std::to_string(i) + "]";
        const json& r = maps_doc[i];
        require_object(r, what, {"face", "coface", "matrix"});
        Simplex face = simplex_from(r.at("face"), what + ".face");
        Simplex coface = simplex_from(r.at("coface"), what + ".coface");
        auto rows = stalks.contains(coface) ? static_cast<Eigen::Index>(stalks.at(coface)) : 0;
        auto cols = stalks.contains(face) ? static_cast<Eigen::Index>(stalks.at(face)) : 0;
        maps.push_back({std::move(face), std::move(coface), matrix_from(r.at("matrix"), what + ".matrix", rows, cols)});
    }
    return Sheaf::build(c, stalks, maps);
}

Assignment parse_assignment(const json& doc, const SimplicialComplex& c, const Sheaf& sh)
{
    require_object(doc, "assignment", {"dim", "blocks"});
    const long long dim = integer(doc.at("dim"), "assignment: dim");
    if (dim < 0 || dim > c.max_dim())
        throw Error(ErrorCode::DimensionOutOfRange, "assignment: dim " + std::to_string(dim) + " not in the complex");
    const json& blocks = doc.at("blocks");
    if (!blocks.is_object())
        invalid("assignment: \"blocks\" must map simplex keys to arrays");

    std::map<Simplex, std::vector<double>> given;
    for (const auto& [key, value] : blocks.items()) {
        Simplex s = parse_simplex_key(key);
        if (s.dimension() != dim || !c.contains(s))
            throw Error(ErrorCode::UnknownSimplex, "assignment: block " + key + " is not a " +
                                                       std::to_string(dim) + "-simplex of the complex");
        given.emplace(std::move(s), numbers(value, "assignment: block " + key));
    }

    Assignment x{static_cast<int>(dim), {}};
    for (const auto& s : c.simplices(x.dim)) {
        const std::size_t k = sh.stalk_dim(s);
        auto it = given.find(s);
        if (it == given.end()) {
            if (k != 0)
                throw Error(ErrorCode::ShapeMismatch, "assignment: no block for " + simplex_label(s));
            continue;
        }
        if (it->second.size() != k)
            throw Error(ErrorCode::ShapeMismatch, "assignment: block " + simplex_label(s) + " has " +
                                                      std::to_string(it->second.size()) + " values, stalk has " +
                                                      std::to_string(k));
        x.values.insert(x.values.end(), it->second.begin(), it->second.end());
    }
    return x;
}

json assignment_to_json(const Assignment& x, const SimplicialComplex& c, const Sheaf& sh)
{
    const auto offsets = sh.offsets(c, x.dim);
    json blocks = json::object();
    const auto& simplices = c.simplices(x.dim);
    for (std::size_t j = 0; j < simplices.size(); ++j)
        blocks[simplex_label(simplices[j])] =
            std::vector<double>(x.values.begin() + static_cast<long>(offsets[j]),
                                x.values.begin() + static_cast<long>(offsets[j + 1]));
    return json{{"dim", x.dim}, {"blocks", blocks}};
}

std::string format_number(double x)
{
    if (x == 0.0)
        return "0";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    (void)ec;
    return std::string(buf, ptr);
}

void write_dense_csv(std::ostream& out, const SparseMatrix& m)
{
    const Eigen::MatrixXd dense = m.to_dense();
    for (Eigen::Index r = 0; r < dense.rows(); ++r) {
        for (Eigen::Index k = 0; k < dense.cols(); ++k)
            out << (k ? "," : "") << format_number(dense(r, k));
        out << '\n';
    }
}

void write_labeled_csv(std::ostream& out, const SparseMatrix& m, const std::vector<std::string>& row_labels,
                       const std::vector<std::string>& col_labels)
{
    if (row_labels.size() != m.rows() || col_labels.size() != m.cols())
        throw Error(ErrorCode::ShapeMismatch, "labels do not match the matrix shape");
    const Eigen::MatrixXd dense = m.to_dense();
    for (const auto& label : col_labels)
        out << ',' << csv_field(label);
    out << '\n';
    for (Eigen::Index r = 0; r < dense.rows(); ++r) {
        out << csv_field(row_labels[static_cast<std::size_t>(r)]);
        for (Eigen::Index k = 0; k < dense.cols(); ++k)
            out << ',' << format_number(dense(r, k));
        out << '\n';
    }
}

std::vector<std::string> simplex_labels(const SimplicialComplex& c, int n)
{
    std::vector<std::string> out;
    for (const auto& s : c.simplices(n))
        out.push_back(simplex_label(s));
    return out;
}

} // namespace hodgekit::io
