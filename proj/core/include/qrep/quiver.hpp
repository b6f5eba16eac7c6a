#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qrep/errors.hpp"

namespace qrep {

/// Dimension vector: one non-negative entry per vertex.
using DimVector = std::vector<int>;

long long dim_total(const DimVector& v);
long long dim_dot(const DimVector& v, const DimVector& w);
bool dim_leq(const DimVector& v, const DimVector& w);   // componentwise v <= w
bool dim_is_zero(const DimVector& v);
DimVector dim_add(const DimVector& v, const DimVector& w);
DimVector dim_sub(const DimVector& v, const DimVector& w);
DimVector dim_scale(int k, const DimVector& v);
std::string dim_str(const DimVector& v);                // "(1,2,0)"

/// One arrow; endpoints are 0-indexed internally. The file format and all
/// printed output use 1-indexed labels.
struct Arrow {
    int source = 0;
    int target = 0;
    bool operator==(const Arrow&) const = default;
};

/// Finite quiver. Loops and parallel arrows are allowed; parallel arrows
/// are distinct entries so that each arrow addresses its own matrix.
/// Immutable after construction.
class Quiver {
public:
    /// One vertex, no arrows.
    Quiver() : Quiver(1, {}) {}
    Quiver(int vertex_count, std::vector<Arrow> arrows);

    /// Line-oriented format: "vertices <n>" then one "arrow <s> <t>" line
    /// per arrow, '#' starts a comment.
    static Quiver parse(std::string_view text);
    static Quiver parse_file(const std::string& path);

    int vertex_count() const { return n_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    /// 0-indexed vertices that are not the target of any arrow.
    const std::vector<int>& sources() const { return sources_; }
    /// 0-indexed vertices that are not the source of any arrow.
    const std::vector<int>& sinks() const { return sinks_; }
    bool sink_source_free() const { return sources_.empty() && sinks_.empty(); }

    /// Underlying graph connectedness; recorded, not enforced.
    bool connected() const { return connected_; }

    /// True when this quiver was produced by extend().
    bool extended() const { return extended_; }

    /// Arrow indices leaving / entering each vertex.
    const std::vector<std::vector<int>>& out_arrows() const { return out_; }
    const std::vector<std::vector<int>>& in_arrows() const { return in_; }

    /// <v,w> = sum_i v_i w_i - sum_h v_{h'} w_{h''}
    long long euler_form(const DimVector& v, const DimVector& w) const;

    /// v_bullet: at vertex i, the sum of v over targets of arrows leaving i.
    DimVector dot_out(const DimVector& v) const;
    /// bullet_v: at vertex i, the sum of v over sources of arrows entering i.
    DimVector dot_in(const DimVector& v) const;

    /// Sink/source-free closure: unchanged if already sink/source-free,
    /// otherwise one new vertex n+1 with an arrow to every source and an
    /// arrow from every sink. If that leaves vertex n+1 itself one-sided
    /// (Q had sinks but no sources, or vice versa) a loop is added at n+1
    /// so the result is always sink/source-free.
    Quiver extend() const;

    /// Structural equality (vertex count + arrow sequence).
    bool operator==(const Quiver& o) const { return n_ == o.n_ && arrows_ == o.arrows_; }
    bool operator!=(const Quiver& o) const { return !(*this == o); }

    /// File-format text (canonical, 1-indexed).
    std::string str() const;

    void check_sized(const DimVector& v) const;

private:
    void index();

    int n_ = 1;
    std::vector<Arrow> arrows_;
    std::vector<std::vector<int>> out_, in_;
    std::vector<int> sources_, sinks_;
    bool connected_ = true;
    bool extended_ = false;
};

/// All dimension vectors of the given length with dim_total <= max_total,
/// in lexicographic order.
std::vector<DimVector> dim_vectors_up_to(int length, int max_total);

} // namespace qrep
