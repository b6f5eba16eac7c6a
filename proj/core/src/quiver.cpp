#include "qrep/quiver.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace qrep {

long long dim_total(const DimVector& v) {
    long long s = 0;
    for (int x : v) s += x;
    return s;
}

long long dim_dot(const DimVector& v, const DimVector& w) {
    if (v.size() != w.size()) throw dimension_mismatch("dot of vectors of different length");
    long long s = 0;
    for (size_t i = 0; i < v.size(); ++i) s += static_cast<long long>(v[i]) * w[i];
    return s;
}

bool dim_leq(const DimVector& v, const DimVector& w) {
    if (v.size() != w.size()) throw dimension_mismatch("comparing vectors of different length");
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] > w[i]) return false;
    return true;
}

bool dim_is_zero(const DimVector& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

DimVector dim_add(const DimVector& v, const DimVector& w) {
    if (v.size() != w.size()) throw dimension_mismatch("adding vectors of different length");
    DimVector r(v);
    for (size_t i = 0; i < v.size(); ++i) r[i] += w[i];
    return r;
}

DimVector dim_sub(const DimVector& v, const DimVector& w) {
    if (v.size() != w.size()) throw dimension_mismatch("subtracting vectors of different length");
    DimVector r(v);
    for (size_t i = 0; i < v.size(); ++i) r[i] -= w[i];
    return r;
}

DimVector dim_scale(int k, const DimVector& v) {
    DimVector r(v);
    for (auto& x : r) x *= k;
    return r;
}

std::string dim_str(const DimVector& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << ")";
    return os.str();
}

Quiver::Quiver(int vertex_count, std::vector<Arrow> arrows)
    : n_(vertex_count), arrows_(std::move(arrows)) {
    if (n_ < 1) throw parse_error("quiver needs at least one vertex");
    for (const Arrow& a : arrows_)
        if (a.source < 0 || a.source >= n_ || a.target < 0 || a.target >= n_)
            throw parse_error("arrow endpoint out of range");
    index();
}

void Quiver::index() {
    out_.assign(static_cast<size_t>(n_), {});
    in_.assign(static_cast<size_t>(n_), {});
    for (size_t h = 0; h < arrows_.size(); ++h) {
        out_[static_cast<size_t>(arrows_[h].source)].push_back(static_cast<int>(h));
        in_[static_cast<size_t>(arrows_[h].target)].push_back(static_cast<int>(h));
    }
    sources_.clear();
    sinks_.clear();
    for (int i = 0; i < n_; ++i) {
        if (in_[static_cast<size_t>(i)].empty()) sources_.push_back(i);
        if (out_[static_cast<size_t>(i)].empty()) sinks_.push_back(i);
    }
    // Connectedness of the underlying undirected graph.
    std::vector<char> seen(static_cast<size_t>(n_), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const Arrow& a : arrows_) {
            int other = -1;
            if (a.source == v) other = a.target;
            else if (a.target == v) other = a.source;
            if (other >= 0 && !seen[static_cast<size_t>(other)]) {
                seen[static_cast<size_t>(other)] = 1;
                stack.push_back(other);
            }
        }
    }
    connected_ = std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

Quiver Quiver::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int n = -1;
    std::vector<Arrow> arrows;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string keyword;
        if (!(ls >> keyword)) continue;
        if (keyword == "vertices") {
            if (n >= 0) throw parse_error("line " + std::to_string(lineno) + ": repeated 'vertices'");
            if (!(ls >> n) || n < 1)
                throw parse_error("line " + std::to_string(lineno) + ": bad vertex count");
        } else if (keyword == "arrow") {
            if (n < 0) throw parse_error("line " + std::to_string(lineno) + ": 'arrow' before 'vertices'");
            int s = 0, t = 0;
            if (!(ls >> s >> t))
                throw parse_error("line " + std::to_string(lineno) + ": malformed arrow line");
            if (s < 1 || s > n || t < 1 || t > n)
                throw parse_error("line " + std::to_string(lineno) + ": vertex index out of range");
            arrows.push_back({s - 1, t - 1});
        } else {
            throw parse_error("line " + std::to_string(lineno) + ": unknown keyword '" + keyword + "'");
        }
        std::string trailing;
        if (ls >> trailing)
            throw parse_error("line " + std::to_string(lineno) + ": trailing tokens");
    }
    if (n < 0) throw parse_error("missing 'vertices' line");
    return Quiver(n, std::move(arrows));
}

Quiver Quiver::parse_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw parse_error("cannot open quiver file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse(buf.str());
}

long long Quiver::euler_form(const DimVector& v, const DimVector& w) const {
    check_sized(v);
    check_sized(w);
    long long s = dim_dot(v, w);
    for (const Arrow& a : arrows_)
        s -= static_cast<long long>(v[static_cast<size_t>(a.source)]) *
             w[static_cast<size_t>(a.target)];
    return s;
}

DimVector Quiver::dot_out(const DimVector& v) const {
    check_sized(v);
    DimVector r(static_cast<size_t>(n_), 0);
    for (const Arrow& a : arrows_)
        r[static_cast<size_t>(a.source)] += v[static_cast<size_t>(a.target)];
    return r;
}

DimVector Quiver::dot_in(const DimVector& v) const {
    check_sized(v);
    DimVector r(static_cast<size_t>(n_), 0);
    for (const Arrow& a : arrows_)
        r[static_cast<size_t>(a.target)] += v[static_cast<size_t>(a.source)];
    return r;
}

Quiver Quiver::extend() const {
    if (sink_source_free()) return *this;
    std::vector<Arrow> arrows = arrows_;
    int added = n_;   // new vertex, 0-indexed
    for (int s : sources_) arrows.push_back({added, s});
    for (int t : sinks_) arrows.push_back({t, added});
    if (sources_.empty() || sinks_.empty()) arrows.push_back({added, added});
    Quiver q(n_ + 1, std::move(arrows));
    q.extended_ = true;
    return q;
}

void Quiver::check_sized(const DimVector& v) const {
    if (static_cast<int>(v.size()) != n_)
        throw dimension_mismatch("dimension vector of length " + std::to_string(v.size()) +
                                 " for quiver with " + std::to_string(n_) + " vertices");
    for (int x : v)
        if (x < 0) throw dimension_mismatch("negative entry in dimension vector");
}

std::string Quiver::str() const {
    std::ostringstream os;
    os << "vertices " << n_ << "\n";
    for (const Arrow& a : arrows_) os << "arrow " << a.source + 1 << " " << a.target + 1 << "\n";
    return os.str();
}

std::vector<DimVector> dim_vectors_up_to(int length, int max_total) {
    std::vector<DimVector> out;
    DimVector cur(static_cast<size_t>(length), 0);
    // Odometer over entries bounded by the remaining total.
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == length) {
            out.push_back(cur);
            return;
        }
        for (int x = 0; x <= remaining; ++x) {
            cur[static_cast<size_t>(pos)] = x;
            self(self, pos + 1, remaining - x);
        }
        cur[static_cast<size_t>(pos)] = 0;
    };
    rec(rec, 0, max_total);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace qrep
