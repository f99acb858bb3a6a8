#include "nsset/delta.hpp"

#include <sstream>

namespace nsset {

Operator::Operator(int target_dim, std::vector<int> images)
    : target_dim_(target_dim), images_(std::move(images)) {
    if (target_dim_ < 0 || images_.empty())
        throw std::invalid_argument("operator: needs target_dim >= 0 and a nonempty image list");
    int prev = 0;
    for (size_t i = 0; i < images_.size(); ++i) {
        int v = images_[i];
        if (v < 0 || v > target_dim_)
            throw std::invalid_argument("operator: image out of range");
        if (i > 0 && v < prev)
            throw std::invalid_argument("operator: images not monotone");
        prev = v;
    }
}

Operator Operator::identity(int n) {
    std::vector<int> im(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) im[static_cast<size_t>(i)] = i;
    return Operator(n, std::move(im));
}

Operator Operator::face(int j, int n) {
    if (n < 1 || j < 0 || j > n) throw std::out_of_range("face operator index out of range");
    std::vector<int> im;
    im.reserve(static_cast<size_t>(n));
    for (int v = 0; v <= n; ++v)
        if (v != j) im.push_back(v);
    return Operator(n, std::move(im));
}

Operator Operator::degeneracy(int i, int n) {
    if (n < 1 || i < 0 || i > n - 1) throw std::out_of_range("degeneracy operator index out of range");
    std::vector<int> im;
    im.reserve(static_cast<size_t>(n) + 1);
    for (int v = 0; v <= n; ++v) im.push_back(v <= i ? v : v - 1);
    return Operator(n - 1, std::move(im));
}

Operator Operator::vertex(int j, int n) {
    if (j < 0 || j > n) throw std::out_of_range("vertex operator index out of range");
    return Operator(n, {j});
}

bool Operator::is_identity() const {
    if (source_dim() != target_dim_) return false;
    for (int i = 0; i <= source_dim(); ++i)
        if (images_[static_cast<size_t>(i)] != i) return false;
    return true;
}

bool Operator::is_injective() const {
    for (size_t i = 1; i < images_.size(); ++i)
        if (images_[i] <= images_[i - 1]) return false;
    return true;
}

bool Operator::is_surjective() const {
    int next = 0;
    for (int v : images_) {
        if (v == next) ++next;
        else if (v > next) return false;
    }
    return next == target_dim_ + 1;
}

Operator Operator::minimal_section() const {
    if (!is_surjective()) throw std::invalid_argument("minimal_section: operator not surjective");
    std::vector<int> im(static_cast<size_t>(target_dim_) + 1, -1);
    for (int i = source_dim(); i >= 0; --i) im[static_cast<size_t>(images_[static_cast<size_t>(i)])] = i;
    return Operator(source_dim(), std::move(im));
}

std::string Operator::to_string() const {
    std::ostringstream os;
    os << source_dim() << ' ' << target_dim_ << " :";
    for (int v : images_) os << ' ' << v;
    return os.str();
}

bool operator<(const Operator& a, const Operator& b) {
    if (a.source_dim() != b.source_dim()) return a.source_dim() < b.source_dim();
    if (a.target_dim_ != b.target_dim_) return a.target_dim_ < b.target_dim_;
    return a.images_ < b.images_;
}

Operator elementary(OperatorKind kind, int index, int dim) {
    switch (kind) {
        case OperatorKind::face: return Operator::face(index, dim);
        case OperatorKind::degeneracy: return Operator::degeneracy(index, dim);
        case OperatorKind::vertex: return Operator::vertex(index, dim);
    }
    throw std::invalid_argument("elementary: unknown kind");
}

Operator compose(const Operator& outer, const Operator& inner) {
    if (inner.target_dim() != outer.source_dim())
        throw std::invalid_argument("compose: dimension mismatch");
    std::vector<int> im;
    im.reserve(inner.images().size());
    for (int v : inner.images()) im.push_back(outer(v));
    return Operator(outer.target_dim(), std::move(im));
}

EpiMonoFactorization epi_mono_factor(const Operator& a) {
    std::vector<int> image_values;
    for (int v : a.images())
        if (image_values.empty() || image_values.back() != v) image_values.push_back(v);
    std::vector<int> epi_im;
    epi_im.reserve(a.images().size());
    int pos = 0;
    for (int v : a.images()) {
        while (image_values[static_cast<size_t>(pos)] != v) ++pos;
        epi_im.push_back(pos);
    }
    int k = static_cast<int>(image_values.size()) - 1;
    return {Operator(k, std::move(epi_im)), Operator(a.target_dim(), std::move(image_values))};
}

Operator parse_operator(const std::string& text) {
    std::istringstream is(text);
    int m = 0, n = 0;
    std::string colon;
    if (!(is >> m >> n >> colon) || colon != ":")
        throw std::invalid_argument("parse_operator: expected \"m n : i0 ... im\"");
    std::vector<int> im;
    int v = 0;
    while (is >> v) im.push_back(v);
    if (static_cast<int>(im.size()) != m + 1)
        throw std::invalid_argument("parse_operator: image count does not match source dim");
    return Operator(n, std::move(im));
}

namespace {

void enumerate_monotone(int pos, int m, int n, int lo, bool strict, std::vector<int>& cur,
                        std::vector<Operator>& out) {
    if (pos > m) {
        out.emplace_back(n, cur);
        return;
    }
    for (int v = lo; v <= n; ++v) {
        cur[static_cast<size_t>(pos)] = v;
        enumerate_monotone(pos + 1, m, n, strict ? v + 1 : v, strict, cur, out);
    }
}

}  // namespace

std::vector<Operator> all_operators(int m, int n) {
    std::vector<Operator> out;
    std::vector<int> cur(static_cast<size_t>(m) + 1);
    enumerate_monotone(0, m, n, 0, false, cur, out);
    return out;
}

std::vector<Operator> all_surjections(int m, int n) {
    std::vector<Operator> out;
    for (auto& a : all_operators(m, n))
        if (a.is_surjective()) out.push_back(a);
    return out;
}

std::vector<Operator> all_injections(int m, int n) {
    std::vector<Operator> out;
    std::vector<int> cur(static_cast<size_t>(m) + 1);
    if (m <= n) enumerate_monotone(0, m, n, 0, true, cur, out);
    return out;
}

std::vector<Operator> all_sections(const Operator& epi) {
    if (!epi.is_surjective()) throw std::invalid_argument("all_sections: operator not surjective");
    int k = epi.target_dim();
    int m = epi.source_dim();
    std::vector<std::vector<int>> preimages(static_cast<size_t>(k) + 1);
    for (int i = 0; i <= m; ++i) preimages[static_cast<size_t>(epi(i))].push_back(i);
    std::vector<Operator> out;
    std::vector<int> choice(static_cast<size_t>(k) + 1, 0);
    while (true) {
        std::vector<int> im(static_cast<size_t>(k) + 1);
        for (int v = 0; v <= k; ++v)
            im[static_cast<size_t>(v)] = preimages[static_cast<size_t>(v)][static_cast<size_t>(choice[static_cast<size_t>(v)])];
        out.emplace_back(m, std::move(im));
        int v = k;
        while (v >= 0 && choice[static_cast<size_t>(v)] + 1 >= static_cast<int>(preimages[static_cast<size_t>(v)].size())) {
            choice[static_cast<size_t>(v)] = 0;
            --v;
        }
        if (v < 0) break;
        ++choice[static_cast<size_t>(v)];
    }
    return out;
}

}  // namespace nsset
