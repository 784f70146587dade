#include "liftlab/spt_protocol.hpp"

#include <algorithm>
#include <stdexcept>

namespace liftlab {

std::string oriented_edge_label(int tail, int head) {
    return "(" + std::to_string(tail) + "," + std::to_string(head) + ")";
}

MarkovianProtocol build_spt_protocol(const Graph& g) {
    g.validate();
    if (g.n < 3) throw std::invalid_argument("build_spt_protocol: need n >= 3");
    if (!g.is_connected())
        throw std::invalid_argument("build_spt_protocol: graph must be connected");

    SlackMatrix s = slack_spt(g);
    auto trees = spanning_trees(g);
    int n = g.n;

    MarkovianProtocol p;
    p.first_speaker = Party::A;
    p.claimer = Party::A;  // two rounds, Alice claims
    p.x_domain = s.matrix.row_labels();
    for (const auto& t : trees) p.y_domain.push_back(t.label());

    std::vector<std::string> v1;
    for (int v = 1; v <= n; ++v) v1.push_back(std::to_string(v));
    std::vector<std::string> v2;  // oriented edges, sorted by (tail, head)
    for (int tail = 1; tail <= n; ++tail)
        for (int head = 1; head <= n; ++head)
            if (tail != head && g.has_edge(tail, head))
                v2.push_back(oriented_edge_label(tail, head));
    p.bp.layers = {v1, v2};
    p.kernels.resize(1);

    // Alice: uniform over U.
    auto urows = subsets(n, SubsetFilter::ProperNonEmpty);
    std::vector<SubsetMask> used_rows;
    for (const auto& u : urows)
        if (std::find(p.x_domain.begin(), p.x_domain.end(), u.label()) != p.x_domain.end())
            used_rows.push_back(u);
    for (const auto& u : used_rows) {
        Dist d;
        Rational w(1, u.size());
        for (int v : u.elements()) d[std::to_string(v)] = w;
        p.init[u.label()] = std::move(d);
    }

    // Bob: orient T toward the received vertex, pick one of the n-1 edges.
    for (const auto& t : trees) {
        for (int u = 1; u <= n; ++u) {
            Dist d;
            Rational w(1, n - 1);
            for (auto [tail, head] : orient_toward(t, u)) d[oriented_edge_label(tail, head)] = w;
            p.kernels[0][{t.label(), std::to_string(u)}] = std::move(d);
        }
    }

    // Alice claims n-1 exactly when the oriented edge leaves U.
    for (const auto& u : used_rows) {
        for (int tail = 1; tail <= n; ++tail)
            for (int head = 1; head <= n; ++head)
                if (tail != head && g.has_edge(tail, head)) {
                    bool leaves = u.contains(tail) && !u.contains(head);
                    p.output[{u.label(), oriented_edge_label(tail, head)}] =
                        Rational(leaves ? n - 1 : 0);
                }
    }

    p.validate();
    return p;
}

}  // namespace liftlab
