#pragma once

#include <memory>
#include <string>

#include "nonabcoh/betti/representation.hpp"
#include "nonabcoh/cech/cochain.hpp"
#include "nonabcoh/fuchsian/system.hpp"
#include "nonabcoh/io/value.hpp"
#include "nonabcoh/lattice/connection.hpp"
#include "nonabcoh/localsys/cocycle.hpp"

namespace nonabcoh::io {

/// How numeric literals in input files become scalars.  In exact mode,
/// rationals arrive as strings ("-3/4") or integers; floating literals
/// are snapped to rationals within the documented tolerance.
struct ParseOptions {
    numkit::Mode mode = numkit::Mode::floating;
    double snap_tolerance = 1e-9;
};

/// Best rational approximation with |p/q - x| <= tol (continued fractions).
mpq_class rationalize(double x, double tol);

// ---- input parsing (throws SchemaError with a position annotation) ----

std::string read_file(const std::string& path);

numkit::Matrix parse_matrix(const std::string& json_text, const ParseOptions& options);
betti::FpGroup parse_group(const std::string& json_text);
betti::Word parse_word_array(const std::string& json_text, int index);
std::vector<betti::Word> parse_words(const std::string& json_text);
betti::Representation parse_representation(const std::string& json_text,
                                           const betti::FpGroup& group,
                                           const ParseOptions& options);
std::shared_ptr<const cech::CoverNerve> parse_nerve(const std::string& json_text);
cech::Cochain parse_cochain(const std::string& json_text,
                            std::shared_ptr<const cech::CoverNerve> nerve,
                            const ParseOptions& options);
localsys::GCocycle parse_cocycle(const std::string& json_text,
                                 std::shared_ptr<const cech::CoverNerve> nerve,
                                 const ParseOptions& options);
localsys::GaugeCochain parse_gauge(const std::string& json_text,
                                   std::shared_ptr<const cech::CoverNerve> nerve,
                                   const ParseOptions& options);
std::shared_ptr<const lattice::TriangulatedSurface> parse_surface(const std::string& json_text);
lattice::LatticeConnection parse_connection(
    const std::string& json_text, std::shared_ptr<const lattice::TriangulatedSurface> surface,
    const ParseOptions& options);
lattice::EdgePath parse_edge_path(const std::string& json_text);
fuchsian::FuchsianSystem parse_fuchsian_system(const std::string& json_text,
                                               const ParseOptions& options);
std::complex<double> parse_complex_literal(const std::string& text);

// ---- report serialization --------------------------------------------

Value scalar_value(const numkit::Scalar& s);
Value complex_value(std::complex<double> z);
Value matrix_value(const numkit::Matrix& m);
Value word_value(const betti::Word& w);

} // namespace nonabcoh::io
