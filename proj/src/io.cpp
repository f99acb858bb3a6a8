#include "nsset/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nsset {

namespace {

std::string simplex_key(SimplexId x) { return std::to_string(x.dim) + "/" + std::to_string(x.index); }

std::string face_key(SimplexId x, int j) { return simplex_key(x) + "/" + std::to_string(j); }

std::pair<SimplexId, int> parse_face_key(const std::string& key) {
    std::istringstream is(key);
    int n = 0, i = 0, j = 0;
    char s1 = 0, s2 = 0;
    if (!(is >> n >> s1 >> i >> s2 >> j) || s1 != '/' || s2 != '/')
        throw std::invalid_argument("complex: bad face key " + key);
    return {{n, i}, j};
}

SimplexId parse_simplex_key(const std::string& key) {
    std::istringstream is(key);
    int n = 0, i = 0;
    char s1 = 0;
    if (!(is >> n >> s1 >> i) || s1 != '/') throw std::invalid_argument("bad simplex key " + key);
    return {n, i};
}

}  // namespace

std::string encode_normal_simplex(const NormalSimplex& s) {
    std::ostringstream os;
    os << s.base.dim << "/" << s.base.index << " :";
    for (int v : s.degeneracy.images()) os << ' ' << v;
    return os.str();
}

NormalSimplex decode_normal_simplex(const std::string& text) {
    std::istringstream is(text);
    int m = 0, k = 0;
    char slash = 0;
    std::string colon;
    if (!(is >> m >> slash >> k >> colon) || slash != '/' || colon != ":")
        throw std::invalid_argument("bad normal simplex encoding: " + text);
    std::vector<int> images;
    int v = 0;
    while (is >> v) images.push_back(v);
    if (images.empty()) throw std::invalid_argument("bad normal simplex encoding: " + text);
    return {{m, k}, Operator(m, std::move(images))};
}

nlohmann::json complex_to_json(const FinSimpSet& x) {
    nlohmann::json j;
    j["dim"] = x.dim();
    j["counts"] = x.counts();
    nlohmann::json faces = nlohmann::json::object();
    for (int n = 1; n <= x.dim(); ++n)
        for (int i = 0; i < x.count(n); ++i)
            for (int k = 0; k <= n; ++k)
                faces[face_key({n, i}, k)] = encode_normal_simplex(x.face({n, i}, k));
    j["faces"] = std::move(faces);
    nlohmann::json labels = nlohmann::json::object();
    for (int n = 0; n <= x.dim(); ++n)
        for (int i = 0; i < x.count(n); ++i)
            if (!x.label({n, i}).empty()) labels[simplex_key({n, i})] = x.label({n, i});
    j["labels"] = std::move(labels);
    return j;
}

Complex complex_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("counts") || !j.contains("dim") || !j.contains("faces"))
        throw std::invalid_argument("complex: missing keys");
    std::vector<int> counts = j.at("counts").get<std::vector<int>>();
    if (j.at("dim").get<int>() != static_cast<int>(counts.size()) - 1)
        throw std::invalid_argument("complex: dim does not match counts");
    // collect faces
    std::map<std::pair<int, int>, std::vector<NormalSimplex>> face_rows;
    for (auto it = j.at("faces").begin(); it != j.at("faces").end(); ++it) {
        auto [id, face_index] = parse_face_key(it.key());
        auto& row = face_rows[{id.dim, id.index}];
        if (static_cast<int>(row.size()) < id.dim + 1)
            row.resize(static_cast<size_t>(id.dim) + 1, nondegenerate({0, 0}));
        if (face_index < 0 || face_index > id.dim) throw std::invalid_argument("complex: face index range");
        row[static_cast<size_t>(face_index)] = decode_normal_simplex(it.value().get<std::string>());
    }
    SimpSetBuilder builder;
    for (int n = 0; n < static_cast<int>(counts.size()); ++n)
        for (int i = 0; i < counts[static_cast<size_t>(n)]; ++i) {
            if (n == 0) {
                builder.add_vertex();
            } else {
                auto it = face_rows.find({n, i});
                if (it == face_rows.end()) throw std::invalid_argument("complex: missing face row");
                builder.add_simplex(n, it->second);
            }
        }
    Complex x = builder.build();
    if (j.contains("labels"))
        for (auto it = j.at("labels").begin(); it != j.at("labels").end(); ++it) {
            SimplexId id = parse_simplex_key(it.key());
            const_cast<FinSimpSet&>(*x).set_label(id, it.value().get<std::string>());
        }
    return x;
}

nlohmann::json poset_to_json(const FinPoset& p, bool hasse) {
    nlohmann::json j;
    j["size"] = p.size();
    auto pairs = hasse ? p.hasse_pairs() : p.pairs();
    nlohmann::json rel = nlohmann::json::array();
    for (auto [a, b] : pairs) rel.push_back(nlohmann::json::array({a, b}));
    j[hasse ? "hasse" : "leq"] = std::move(rel);
    return j;
}

FinPoset poset_from_json(const nlohmann::json& j) {
    int size = j.at("size").get<int>();
    std::vector<std::pair<int, int>> pairs;
    bool hasse = j.contains("hasse");
    for (const auto& entry : j.at(hasse ? "hasse" : "leq"))
        pairs.push_back({entry.at(0).get<int>(), entry.at(1).get<int>()});
    if (!hasse) return FinPoset(size, pairs);
    // close a Hasse diagram transitively
    FinPoset p(size);
    for (auto [a, b] : pairs) p.set_leq(a, b);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < size; ++a)
            for (int b = 0; b < size; ++b)
                if (p.leq(a, b))
                    for (int c = 0; c < size; ++c)
                        if (p.leq(b, c) && !p.leq(a, c)) {
                            p.set_leq(a, c);
                            changed = true;
                        }
    }
    p.validate();
    return p;
}

nlohmann::json subcomplex_to_json(const Subcomplex& a) {
    nlohmann::json j;
    j["ambient"] = complex_to_json(*a.ambient);
    nlohmann::json members = nlohmann::json::array();
    for (SimplexId s : a.members()) members.push_back(simplex_key(s));
    j["members"] = std::move(members);
    return j;
}

Subcomplex subcomplex_from_json(const nlohmann::json& j) {
    Complex ambient = complex_from_json(j.at("ambient"));
    Subcomplex a = empty_subcomplex(ambient);
    for (const auto& key : j.at("members")) {
        SimplexId id = parse_simplex_key(key.get<std::string>());
        if (id.dim < 0 || id.dim > ambient->dim() || id.index < 0 || id.index >= ambient->count(id.dim))
            throw std::invalid_argument("subcomplex: member out of range");
        a.member[static_cast<size_t>(id.dim)][static_cast<size_t>(id.index)] = 1;
    }
    if (!is_face_closed(a)) throw std::invalid_argument("subcomplex: member list is not face closed");
    return a;
}

nlohmann::json map_to_json(const SimpMap& f) {
    nlohmann::json j;
    j["source"] = complex_to_json(f.source());
    j["target"] = complex_to_json(f.target());
    nlohmann::json images = nlohmann::json::object();
    for (int n = 0; n <= f.source().dim(); ++n)
        for (int i = 0; i < f.source().count(n); ++i)
            images[simplex_key({n, i})] = encode_normal_simplex(f.apply(SimplexId{n, i}));
    j["images"] = std::move(images);
    return j;
}

SimpMap map_from_json(const nlohmann::json& j) {
    Complex source = complex_from_json(j.at("source"));
    Complex target = complex_from_json(j.at("target"));
    std::vector<std::vector<NormalSimplex>> images(static_cast<size_t>(source->dim()) + 1);
    for (int n = 0; n <= source->dim(); ++n)
        images[static_cast<size_t>(n)].assign(static_cast<size_t>(source->count(n)), nondegenerate({0, 0}));
    for (auto it = j.at("images").begin(); it != j.at("images").end(); ++it) {
        SimplexId id = parse_simplex_key(it.key());
        images[static_cast<size_t>(id.dim)][static_cast<size_t>(id.index)] =
            decode_normal_simplex(it.value().get<std::string>());
    }
    SimpMap f(source, target, std::move(images));
    if (!validate_map(f)) throw std::invalid_argument("map: face compatibility fails");
    return f;
}

std::string canonical_dump(const nlohmann::json& j) { return j.dump(); }

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace nsset
