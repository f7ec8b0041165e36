#include "nonabcoh/io/json.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "nonabcoh/error.hpp"

namespace nonabcoh::io {

using json = nlohmann::json;
using numkit::GaussianRational;
using numkit::Matrix;
using numkit::Mode;
using numkit::Scalar;

namespace {

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        raise("SchemaError", e.what()); // nlohmann reports the byte position
    }
}

void require_keys(const json& j, std::initializer_list<const char*> keys) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : keys)
            if (it.key() == k) { known = true; break; }
        if (!known) raise("SchemaError", "unknown field '" + it.key() + "'");
    }
    for (const char* k : keys)
        if (!j.contains(k)) raise("SchemaError", std::string("missing field '") + k + "'");
}

mpq_class rational_from_json(const json& j, const ParseOptions& options) {
    if (j.is_string()) return GaussianRational::parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return mpq_class(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_number_float()) return rationalize(j.get<double>(), options.snap_tolerance);
    raise("SchemaError", "expected a rational (string, integer or number)");
}

Scalar scalar_from_json(const json& j, const ParseOptions& options) {
    if (!j.is_object() || !j.contains("re") || !j.contains("im"))
        raise("SchemaError", "complex scalars are objects with 're' and 'im'");
    require_keys(j, {"re", "im"});
    if (options.mode == Mode::exact)
        return Scalar::exact(GaussianRational(rational_from_json(j["re"], options),
                                              rational_from_json(j["im"], options)));
    auto number = [](const json& v) -> double {
        if (v.is_number()) return v.get<double>();
        if (v.is_string()) {
            mpq_class q = GaussianRational::parse_rational(v.get<std::string>());
            return q.get_d();
        }
        raise("SchemaError", "expected a number");
    };
    return Scalar::floating({number(j["re"]), number(j["im"])});
}

Matrix matrix_from_json(const json& j, const ParseOptions& options) {
    if (!j.is_array() || j.empty()) raise("SchemaError", "matrix is a non-empty row grid");
    int rows = static_cast<int>(j.size());
    int cols = static_cast<int>(j[0].size());
    std::vector<Scalar> entries;
    entries.reserve(static_cast<size_t>(rows) * cols);
    for (const json& row : j) {
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            raise("SchemaError", "ragged matrix rows");
        for (const json& e : row) entries.push_back(scalar_from_json(e, options));
    }
    return Matrix::from_scalars(rows, cols, entries);
}

betti::Word word_from_json(const json& j) {
    if (!j.is_array()) raise("SchemaError", "a word is an array of [generator, sign] pairs");
    std::vector<betti::Word::Letter> letters;
    for (const json& letter : j) {
        if (!letter.is_array() || letter.size() != 2)
            raise("SchemaError", "a letter is a [generator, sign] pair");
        letters.emplace_back(letter[0].get<int>(), letter[1].get<int>());
    }
    return betti::Word(std::move(letters));
}

std::vector<int> tuple_from_key(const std::string& key, char sep) {
    std::vector<int> out;
    std::stringstream ss(key);
    std::string item;
    while (std::getline(ss, item, sep)) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            raise("SchemaError", "bad simplex key '" + key + "'");
        }
    }
    return out;
}

} // namespace

mpq_class rationalize(double x, double tol) {
    if (!std::isfinite(x)) raise("SchemaError", "cannot rationalize a non-finite number");
    // Continued fraction expansion until within tolerance.
    mpq_class best(0);
    double rest = x;
    mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int iter = 0; iter < 64; ++iter) {
        double fl = std::floor(rest);
        mpz_class a(fl);
        mpz_class p2 = a * p1 + p0, q2 = a * q1 + q0;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        best = mpq_class(p1, q1);
        best.canonicalize();
        if (std::abs(best.get_d() - x) <= tol) return best;
        double frac = rest - fl;
        if (frac < 1e-18) break;
        rest = 1.0 / frac;
    }
    if (std::abs(best.get_d() - x) <= tol) return best;
    raise("SchemaError", "value does not snap to a rational within tolerance");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise("SchemaError", "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Matrix parse_matrix(const std::string& text, const ParseOptions& options) {
    return matrix_from_json(parse_json(text), options);
}

betti::FpGroup parse_group(const std::string& text) {
    json j = parse_json(text);
    require_keys(j, {"generators", "relators"});
    betti::FpGroup g;
    g.generators = j["generators"].get<int>();
    if (g.generators < 0) raise("SchemaError", "negative generator count");
    for (const json& r : j["relators"]) g.relators.push_back(word_from_json(r));
    for (const betti::Word& r : g.relators)
        if (r.max_generator() > g.generators)
            raise("SchemaError", "relator uses an unknown generator");
    return g;
}

betti::Word parse_word_array(const std::string& text, int index) {
    json j = parse_json(text);
    if (!j.is_array() || index < 0 || index >= static_cast<int>(j.size()))
        raise("SchemaError", "word index out of range");
    return word_from_json(j[static_cast<size_t>(index)]);
}

std::vector<betti::Word> parse_words(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_array()) raise("SchemaError", "a word list is an array of words");
    std::vector<betti::Word> out;
    for (const json& w : j) out.push_back(word_from_json(w));
    return out;
}

betti::Representation parse_representation(const std::string& text, const betti::FpGroup& group,
                                           const ParseOptions& options) {
    json j = parse_json(text);
    require_keys(j, {"rank", "images"});
    int rank = j["rank"].get<int>();
    std::vector<Matrix> images;
    for (const json& m : j["images"]) images.push_back(matrix_from_json(m, options));
    return betti::Representation(group, rank, std::move(images));
}

std::shared_ptr<const cech::CoverNerve> parse_nerve(const std::string& text) {
    json j = parse_json(text);
    require_keys(j, {"n", "maximalSimplices"});
    int n = j["n"].get<int>();
    std::vector<std::vector<int>> maximal;
    for (const json& s : j["maximalSimplices"]) maximal.push_back(s.get<std::vector<int>>());
    return std::make_shared<const cech::CoverNerve>(cech::CoverNerve::from_maximal(n, maximal));
}

cech::Cochain parse_cochain(const std::string& text,
                            std::shared_ptr<const cech::CoverNerve> nerve,
                            const ParseOptions& options) {
    json j = parse_json(text);
    require_keys(j, {"degree", "coefficients", "values"});
    int degree = j["degree"].get<int>();
    std::string coeff_name = j["coefficients"].get<std::string>();
    cech::Coefficients coeffs;
    if (coeff_name == "Z") coeffs = cech::Coefficients::Z;
    else if (coeff_name == "C") coeffs = cech::Coefficients::C;
    else if (coeff_name == "Cx") coeffs = cech::Coefficients::Cx;
    else raise("SchemaError", "coefficients must be Z, C or Cx");

    cech::Cochain c = cech::Cochain::neutral(nerve, degree, coeffs, options.mode);
    for (auto it = j["values"].begin(); it != j["values"].end(); ++it) {
        std::vector<int> tuple = tuple_from_key(it.key(), ',');
        std::sort(tuple.begin(), tuple.end());
        int idx = nerve->simplex_index(degree, tuple);
        if (idx < 0) raise("SchemaError", "value on a tuple that is not a simplex: " + it.key());
        if (coeffs == cech::Coefficients::Z) {
            const json& v = it.value();
            if (v.is_number_integer())
                c.z_set(idx, mpz_class(static_cast<long>(v.get<std::int64_t>())));
            else if (v.is_string())
                c.z_set(idx, mpz_class(v.get<std::string>()));
            else
                raise("SchemaError", "Z cochain values are integers");
        } else {
            c.s_set(idx, scalar_from_json(it.value(), options));
        }
    }
    return c;
}

localsys::GCocycle parse_cocycle(const std::string& text,
                                 std::shared_ptr<const cech::CoverNerve> nerve,
                                 const ParseOptions& options) {
    json j = parse_json(text);
    require_keys(j, {"rank", "transitions"});
    int rank = j["rank"].get<int>();
    localsys::GCocycle c = localsys::GCocycle::trivial(nerve, rank, options.mode);
    for (auto it = j["transitions"].begin(); it != j["transitions"].end(); ++it) {
        std::vector<int> tuple = tuple_from_key(it.key(), ',');
        if (tuple.size() != 2) raise("SchemaError", "transition keys are edges 'i,j'");
        Matrix m = matrix_from_json(it.value(), options);
        int e = nerve->skeleton().edge_index(tuple[0], tuple[1]);
        if (e < 0) raise("SchemaError", "transition on a non-edge: " + it.key());
        if (tuple[0] > tuple[1]) m = m.inverse();
        c.set_stored(e, std::move(m));
    }
    return c;
}

localsys::GaugeCochain parse_gauge(const std::string& text,
                                   std::shared_ptr<const cech::CoverNerve> nerve,
                                   const ParseOptions& options) {
    json j = parse_json(text);
    require_keys(j, {"rank", "values"});
    int rank = j["rank"].get<int>();
    std::vector<Matrix> values(static_cast<size_t>(nerve->vertex_count()),
                               Matrix::identity(rank, options.mode));
    for (auto it = j["values"].begin(); it != j["values"].end(); ++it) {
        int v = -1;
        try {
            v = std::stoi(it.key());
        } catch (const std::exception&) {
            raise("SchemaError", "gauge keys are vertex indices");
        }
        if (v < 0 || v >= nerve->vertex_count()) raise("SchemaError", "gauge vertex out of range");
        values[static_cast<size_t>(v)] = matrix_from_json(it.value(), options);
    }
    return localsys::GaugeCochain(nerve, rank, std::move(values));
}

std::shared_ptr<const lattice::TriangulatedSurface> parse_surface(const std::string& text) {
    json j = parse_json(text);
    require_keys(j, {"vertices", "triangles"});
    int v = j["vertices"].get<int>();
    std::vector<std::array<int, 3>> tris;
    for (const json& t : j["triangles"]) {
        if (!t.is_array() || t.size() != 3) raise("SchemaError", "triangles are vertex triples");
        tris.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
    }
    return std::make_shared<const lattice::TriangulatedSurface>(v, std::move(tris));
}

lattice::LatticeConnection parse_connection(
    const std::string& text, std::shared_ptr<const lattice::TriangulatedSurface> surface,
    const ParseOptions& options) {
    json j = parse_json(text);
    require_keys(j, {"rank", "transport"});
    int rank = j["rank"].get<int>();
    std::vector<Matrix> transport(static_cast<size_t>(surface->edge_count()),
                                  Matrix::identity(rank, options.mode));
    for (auto it = j["transport"].begin(); it != j["transport"].end(); ++it) {
        std::vector<int> tuple = tuple_from_key(it.key(), '>');
        if (tuple.size() != 2) raise("SchemaError", "transport keys are directed edges 'u>v'");
        Matrix m = matrix_from_json(it.value(), options);
        int e = surface->skeleton().edge_index(tuple[0], tuple[1]);
        if (e < 0) raise("SchemaError", "transport on a non-edge: " + it.key());
        if (tuple[0] > tuple[1]) m = m.inverse();
        transport[static_cast<size_t>(e)] = std::move(m);
    }
    return lattice::LatticeConnection(std::move(surface), rank, std::move(transport));
}

lattice::EdgePath parse_edge_path(const std::string& text) {
    json j = parse_json(text);
    require_keys(j, {"edges"});
    lattice::EdgePath path;
    for (const json& e : j["edges"]) {
        std::vector<int> tuple = tuple_from_key(e.get<std::string>(), '>');
        if (tuple.size() != 2) raise("SchemaError", "path edges look like 'u>v'");
        path.push_back({tuple[0], tuple[1]});
    }
    return path;
}

fuchsian::FuchsianSystem parse_fuchsian_system(const std::string& text,
                                               const ParseOptions& options) {
    json j = parse_json(text);
    require_keys(j, {"rank", "A0", "A1"});
    ParseOptions float_options = options;
    float_options.mode = Mode::floating;
    Matrix a0 = matrix_from_json(j["A0"], float_options);
    Matrix a1 = matrix_from_json(j["A1"], float_options);
    int rank = j["rank"].get<int>();
    if (a0.rows() != rank || a1.rows() != rank)
        raise("SchemaError", "residue shape does not match the declared rank");
    return fuchsian::FuchsianSystem(std::move(a0), std::move(a1));
}

std::complex<double> parse_complex_literal(const std::string& text) {
    // Accepts forms like "2", "-0.5", "i", "-i", "2i", "1+2i", "1-0.5i".
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) raise("SchemaError", "empty complex literal");
    auto parse_real = [](const std::string& t) -> double {
        try {
            size_t used = 0;
            double v = std::stod(t, &used);
            if (used != t.size()) raise("SchemaError", "bad complex literal");
            return v;
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            raise("SchemaError", "bad complex literal");
        }
    };
    if (s.back() == 'i' || s.back() == 'I') {
        std::string body = s.substr(0, s.size() - 1);
        // split off the real part at the last +/- that is not an exponent sign
        size_t split = std::string::npos;
        for (size_t k = body.size(); k-- > 1;) {
            char c = body[k];
            if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
                split = k;
                break;
            }
        }
        if (split == std::string::npos) {
            if (body.empty() || body == "+") return {0.0, 1.0};
            if (body == "-") return {0.0, -1.0};
            return {0.0, parse_real(body)};
        }
        std::string re = body.substr(0, split);
        std::string im = body.substr(split);
        if (im == "+") im = "1";
        if (im == "-") im = "-1";
        return {parse_real(re), parse_real(im)};
    }
    return {parse_real(s), 0.0};
}

Value scalar_value(const Scalar& s) {
    Value v = Value::object();
    if (s.mode() == Mode::exact) {
        v["re"] = s.exact_value().re_string();
        v["im"] = s.exact_value().im_string();
    } else {
        v["re"] = s.float_value().real();
        v["im"] = s.float_value().imag();
    }
    return v;
}

Value complex_value(std::complex<double> z) {
    Value v = Value::object();
    v["re"] = z.real();
    v["im"] = z.imag();
    return v;
}

Value matrix_value(const Matrix& m) {
    Value rows = Value::array();
    for (int i = 0; i < m.rows(); ++i) {
        Value row = Value::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_value(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Value word_value(const betti::Word& w) {
    Value letters = Value::array();
    for (const auto& [gen, sign] : w.letters()) {
        Value letter = Value::array();
        letter.push_back(gen);
        letter.push_back(sign);
        letters.push_back(std::move(letter));
    }
    return letters;
}

} // namespace nonabcoh::io
