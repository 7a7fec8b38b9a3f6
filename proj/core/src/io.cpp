#include "hodgekit/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace hodgekit {

using nlohmann::json;

namespace {

std::string key_path(const std::string &base, const std::string &key) {
    return base + "/" + key;
}

std::string idx_path(const std::string &base, std::size_t i) {
    return base + "/" + std::to_string(i);
}

[[noreturn]] void fail(const std::string &loc, const std::string &what) {
    throw ParseError(loc, what);
}

void require_kind(const json &j, const std::string &loc, json::value_t t, const char *name) {
    if (j.type() != t) fail(loc, std::string("expected ") + name);
}

void reject_unknown_keys(const json &j, const std::string &loc,
                         std::initializer_list<const char *> allowed) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char *k : allowed)
            if (it.key() == k) known = true;
        if (!known) fail(loc, "unknown key \"" + it.key() + "\"");
    }
}

const json &field(const json &j, const std::string &loc, const std::string &key) {
    auto it = j.find(key);
    if (it == j.end()) fail(loc, "missing key \"" + key + "\"");
    return *it;
}

long read_int(const json &j, const std::string &loc) {
    if (!j.is_number_integer()) fail(loc, "expected an integer");
    return j.get<long>();
}

int read_level_key(const std::string &key, const std::string &loc) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(key, &pos);
    } catch (const std::exception &) {
        fail(key_path(loc, key), "level keys must be integers");
    }
    if (pos != key.size()) fail(key_path(loc, key), "level keys must be integers");
    return v;
}

Scalar read_scalar(const json &j, const std::string &loc) {
    if (!j.is_string()) fail(loc, "expected a scalar string like \"1/2\" or \"1+2*i\"");
    try {
        return parse_scalar(j.get<std::string>());
    } catch (const std::exception &e) {
        fail(loc, e.what());
    }
}

Vec read_vec(const json &j, const std::string &loc, std::size_t dim) {
    require_kind(j, loc, json::value_t::array, "an array of scalar strings");
    if (j.size() != dim)
        fail(loc, "expected " + std::to_string(dim) + " entries, got " + std::to_string(j.size()));
    Vec v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = read_scalar(j[i], idx_path(loc, i));
    return v;
}

Mat read_mat(const json &j, const std::string &loc, std::size_t rows, std::size_t cols) {
    require_kind(j, loc, json::value_t::array, "an array of rows");
    if (j.size() != rows)
        fail(loc, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        Vec r = read_vec(j[i], idx_path(loc, i), cols);
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = r[c];
    }
    return m;
}

std::vector<Mat> read_nilpotents(const json &j, const std::string &loc, std::size_t dim) {
    require_kind(j, loc, json::value_t::array, "an array of matrices");
    std::vector<Mat> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(read_mat(j[i], idx_path(loc, i), dim, dim));
    return out;
}

/// Levels as given, plus saturation sentinels at the window edges so
/// that indices outside the stored range read as the zero and full
/// subspaces (in direction order).
Filtration read_filtration(const json &j, const std::string &loc, Direction dir,
                           std::size_t dim) {
    require_kind(j, loc, json::value_t::object, "an object mapping levels to spanning vectors");
    if (j.empty()) fail(loc, "a filtration needs at least one level");
    std::map<int, Subspace> levels;
    for (auto it = j.begin(); it != j.end(); ++it) {
        int k = read_level_key(it.key(), loc);
        const json &vecs = *it;
        require_kind(vecs, key_path(loc, it.key()), json::value_t::array,
                     "an array of spanning vectors");
        std::vector<Vec> span;
        for (std::size_t i = 0; i < vecs.size(); ++i)
            span.push_back(read_vec(vecs[i], idx_path(key_path(loc, it.key()), i), dim));
        levels.emplace(k, Subspace::span(span, dim));
    }
    int lo = levels.begin()->first, hi = levels.rbegin()->first;
    if (dir == Direction::increasing) {
        if (!levels.begin()->second.is_zero()) levels.emplace(lo - 1, Subspace::zero(dim));
        if (!levels.rbegin()->second.is_full()) levels.emplace(hi + 1, Subspace::full(dim));
    } else {
        if (!levels.begin()->second.is_full()) levels.emplace(lo - 1, Subspace::full(dim));
        if (!levels.rbegin()->second.is_zero()) levels.emplace(hi + 1, Subspace::zero(dim));
    }
    Filtration f(dir, dim, std::move(levels));
    FiltrationReport rep = f.validate();
    if (!rep.ok)
        fail(loc, "not monotone between levels " + std::to_string(rep.bad_low) + " and " +
                      std::to_string(rep.bad_high));
    return f;
}

std::map<std::string, std::string> read_metadata(const json &j, const std::string &loc) {
    require_kind(j, loc, json::value_t::object, "an object of string labels");
    std::map<std::string, std::string> out;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!it->is_string()) fail(key_path(loc, it.key()), "metadata values must be strings");
        out[it.key()] = it->get<std::string>();
    }
    return out;
}

json parse_document(const std::string &text, const std::string &origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        fail(origin, e.what());
    }
}

json vec_to_json(const Vec &v) {
    json a = json::array();
    for (const Scalar &s : v) a.push_back(to_string(s));
    return a;
}

json mat_to_json(const Mat &m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vec_to_json(m.row(i)));
    return a;
}

json filtration_to_json(const Filtration &f) {
    json o = json::object();
    for (const auto &[k, s] : f.stored_levels()) {
        json vecs = json::array();
        for (std::size_t i = 0; i < s.dim(); ++i) vecs.push_back(vec_to_json(s.basis_vector(i)));
        o[std::to_string(k)] = vecs;
    }
    return o;
}

}  // namespace

ModelFile parse_model_text(const std::string &text, const std::string &origin) {
    json doc = parse_document(text, origin);
    const std::string root = origin;
    require_kind(doc, root, json::value_t::object, "an object");

    const json &kind_j = field(doc, root, "kind");
    if (!kind_j.is_string()) fail(key_path(root, "kind"), "expected \"pure\" or \"mixed\"");
    std::string kind = kind_j.get<std::string>();
    if (kind != "pure" && kind != "mixed")
        fail(key_path(root, "kind"), "expected \"pure\" or \"mixed\", got \"" + kind + "\"");

    long dim_l = read_int(field(doc, root, "dimension"), key_path(root, "dimension"));
    if (dim_l < 0) fail(key_path(root, "dimension"), "dimension must be nonnegative");
    std::size_t dim = static_cast<std::size_t>(dim_l);

    NilpotentFamily fam;
    fam.ambient_dim = dim;
    fam.mats = read_nilpotents(field(doc, root, "nilpotents"), key_path(root, "nilpotents"), dim);

    Filtration f = read_filtration(field(doc, root, "hodge_filtration"),
                                   key_path(root, "hodge_filtration"), Direction::decreasing, dim);

    ModelFile mf;
    mf.kind = kind;
    if (auto it = doc.find("metadata"); it != doc.end())
        mf.metadata = read_metadata(*it, key_path(root, "metadata"));

    if (kind == "pure") {
        reject_unknown_keys(doc, root, {"kind", "dimension", "nilpotents", "hodge_filtration",
                                        "weight", "pairing", "metadata"});
        int weight = static_cast<int>(read_int(field(doc, root, "weight"), key_path(root, "weight")));
        Mat gram = read_mat(field(doc, root, "pairing"), key_path(root, "pairing"), dim, dim);
        PureLocalModel m;
        m.fam = std::move(fam);
        m.f = std::move(f);
        m.s = PolarizationForm{std::move(gram), weight};
        m.weight = weight;
        mf.model = std::move(m);
        return mf;
    }

    reject_unknown_keys(doc, root, {"kind", "dimension", "nilpotents", "hodge_filtration",
                                    "weight_filtration", "graded", "metadata"});
    Filtration w = read_filtration(field(doc, root, "weight_filtration"),
                                   key_path(root, "weight_filtration"), Direction::increasing, dim);

    const json &graded = field(doc, root, "graded");
    require_kind(graded, key_path(root, "graded"), json::value_t::object,
                 "an object mapping W levels to {weight, gram}");
    std::map<int, Mat> pairings;
    std::map<int, int> weights;
    for (auto it = graded.begin(); it != graded.end(); ++it) {
        std::string eloc = key_path(key_path(root, "graded"), it.key());
        int m = read_level_key(it.key(), key_path(root, "graded"));
        require_kind(*it, eloc, json::value_t::object, "an object {weight, gram}");
        reject_unknown_keys(*it, eloc, {"weight", "gram"});
        weights[m] =
            static_cast<int>(read_int(field(*it, eloc, "weight"), key_path(eloc, "weight")));
        std::size_t gdim = w.graded(m).dim();
        pairings[m] = read_mat(field(*it, eloc, "gram"), key_path(eloc, "gram"), gdim, gdim);
    }

    try {
        mf.model = make_mixed(std::move(fam), std::move(f), std::move(w), pairings, weights);
    } catch (const std::exception &e) {
        fail(key_path(root, "graded"), e.what());
    }
    return mf;
}

ModelFile parse_model(const std::string &path) {
    std::ifstream in(path);
    if (!in) fail(path, "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_model_text(buf.str(), path);
}

QuotientTarget parse_quotient_text(const std::string &text, const MixedLocalModel &mx,
                                   const std::string &origin) {
    json doc = parse_document(text, origin);
    require_kind(doc, origin, json::value_t::object, "an object");
    reject_unknown_keys(doc, origin, {"dimension", "blocks"});
    long dim_l = read_int(field(doc, origin, "dimension"), key_path(origin, "dimension"));
    if (dim_l < 0) fail(key_path(origin, "dimension"), "dimension must be nonnegative");

    QuotientTarget a;
    a.dim = static_cast<std::size_t>(dim_l);
    const json &blocks = field(doc, origin, "blocks");
    require_kind(blocks, key_path(origin, "blocks"), json::value_t::object,
                 "an object mapping Hodge indices to matrices");
    for (auto it = blocks.begin(); it != blocks.end(); ++it) {
        int p = read_level_key(it.key(), key_path(origin, "blocks"));
        std::size_t cols = mx.f.graded(p).dim();
        a.blocks[p] =
            read_mat(*it, key_path(key_path(origin, "blocks"), it.key()), a.dim, cols);
    }
    return a;
}

QuotientTarget parse_quotient(const std::string &path, const MixedLocalModel &mx) {
    std::ifstream in(path);
    if (!in) fail(path, "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_quotient_text(buf.str(), mx, path);
}

Mat parse_matrix_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) fail(path, "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    json doc = parse_document(buf.str(), path);
    require_kind(doc, path, json::value_t::array, "an array of rows");
    if (doc.empty()) fail(path, "matrix must have at least one row");
    if (!doc[0].is_array()) fail(idx_path(path, 0), "expected an array of scalar strings");
    return read_mat(doc, path, doc.size(), doc[0].size());
}

std::string model_to_json(const ModelFile &mf) {
    json o;
    o["kind"] = mf.kind;
    if (mf.is_pure()) {
        const PureLocalModel &m = mf.pure();
        o["dimension"] = m.dim();
        json nil = json::array();
        for (const Mat &n : m.fam.mats) nil.push_back(mat_to_json(n));
        o["nilpotents"] = nil;
        o["hodge_filtration"] = filtration_to_json(m.f);
        o["weight"] = m.weight;
        o["pairing"] = mat_to_json(m.s.gram);
    } else {
        const MixedLocalModel &m = mf.mixed();
        o["dimension"] = m.dim();
        json nil = json::array();
        for (const Mat &n : m.fam.mats) nil.push_back(mat_to_json(n));
        o["nilpotents"] = nil;
        o["hodge_filtration"] = filtration_to_json(m.f);
        o["weight_filtration"] = filtration_to_json(m.w);
        json graded = json::object();
        for (const GradedModelEntry &e : m.graded) {
            json g;
            g["weight"] = e.model.weight;
            g["gram"] = mat_to_json(e.model.s.gram);
            graded[std::to_string(e.m)] = g;
        }
        o["graded"] = graded;
    }
    if (!mf.metadata.empty()) o["metadata"] = mf.metadata;
    return o.dump(2) + "\n";
}

}  // namespace hodgekit
