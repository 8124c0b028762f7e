#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "hodgekit/complex.hpp"
#include "hodgekit/filters.hpp"
#include "hodgekit/generators.hpp"
#include "hodgekit/hodge.hpp"
#include "hodgekit/sheaf.hpp"
#include "hodgekit/sparse_matrix.hpp"

namespace hodgekit::io {

using nlohmann::json;

/// Reads and parses a JSON file. Errors carry the path and parser position.
json read_json_file(const std::filesystem::path& path);

/// {"top_simplices": [[...], ...]}; no other fields allowed.
TopSimplices parse_complex(const json& doc);
json complex_to_json(const TopSimplices& tops);

/// {"dim": n, "values": [...]} in canonical simplex order.
Cochain parse_signal(const json& doc, const SimplicialComplex& c);
json signal_to_json(const Cochain& x);

/// {"weights": {"<dim>": [...], ...}}; dimensions left out get unit weights.
InnerProductWeights parse_weights(const json& doc, const std::vector<std::size_t>& sizes);

/// {"dim": n, "alpha0": x, "down": [...], "up": [...]}.
FilterSpec parse_filter(const json& doc);

/// {"stalks": {"[0]": 3, ...}, "restrictions": [{"face": [0], "coface": [0,1], "matrix": [[...]]}]}.
Sheaf parse_sheaf(const json& doc, const SimplicialComplex& c);

/// {"dim": n, "blocks": {"[0]": [...], ...}}; every simplex with a nonzero stalk needs a block.
Assignment parse_assignment(const json& doc, const SimplicialComplex& c, const Sheaf& sh);
json assignment_to_json(const Assignment& x, const SimplicialComplex& c, const Sheaf& sh);

/// "[0,1]" style label of a simplex, also the sheaf JSON key format.
std::string simplex_label(const Simplex& s);
Simplex parse_simplex_key(const std::string& key);

/// Shortest decimal that round-trips to the same double.
std::string format_number(double x);

/// Numbers only, one matrix row per line.
void write_dense_csv(std::ostream& out, const SparseMatrix& m);

/// Header row of column labels, then each row prefixed by its label.
void write_labeled_csv(std::ostream& out, const SparseMatrix& m, const std::vector<std::string>& row_labels,
                       const std::vector<std::string>& col_labels);

/// Labels of the n-simplices in canonical order.
std::vector<std::string> simplex_labels(const SimplicialComplex& c, int n);

} // namespace hodgekit::io
