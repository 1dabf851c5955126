#include "mlnim/network.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace mlnim {

namespace {

int index_of(const std::vector<std::string>& sorted_names, std::string_view name) {
    auto it = std::lower_bound(sorted_names.begin(), sorted_names.end(), name);
    if (it == sorted_names.end() || *it != name) return -1;
    return static_cast<int>(it - sorted_names.begin());
}

}  // namespace

MultilayerNetwork MultilayerNetwork::build(
    const std::vector<EdgeTriple>& edges,
    const std::vector<std::pair<std::string, std::string>>& isolated_nodes,
    LoadReport* report) {
    MultilayerNetwork net;

    std::set<std::string> actors;
    std::set<std::string> layers;
    for (const auto& [l, a, b] : edges) {
        if (l.empty() || a.empty() || b.empty())
            throw StructureError("empty layer or actor identifier");
        layers.insert(l);
        actors.insert(a);
        actors.insert(b);
    }
    for (const auto& [l, a] : isolated_nodes) {
        if (l.empty() || a.empty())
            throw StructureError("empty layer or actor identifier");
        layers.insert(l);
        actors.insert(a);
    }
    if (actors.empty()) throw StructureError("empty network: no nodes");

    net.actor_names_.assign(actors.begin(), actors.end());
    net.layer_names_.assign(layers.begin(), layers.end());
    const int n = net.actor_count();
    const int m = net.layer_count();

    net.adjacency_.assign(m, std::vector<std::vector<int>>(n));
    net.present_.assign(m, std::vector<char>(n, 0));
    net.layer_edges_.assign(m, 0);
    net.layer_nodes_.assign(m, 0);

    LoadReport rep;
    for (const auto& [l, a, b] : edges) {
        const int li = index_of(net.layer_names_, l);
        const int ai = index_of(net.actor_names_, a);
        const int bi = index_of(net.actor_names_, b);
        if (ai == bi) {
            ++rep.self_loops_dropped;
            net.present_[li][ai] = 1;
            continue;
        }
        net.present_[li][ai] = 1;
        net.present_[li][bi] = 1;
        net.adjacency_[li][ai].push_back(bi);
        net.adjacency_[li][bi].push_back(ai);
    }
    for (const auto& [l, a] : isolated_nodes) {
        net.present_[index_of(net.layer_names_, l)][index_of(net.actor_names_, a)] = 1;
    }

    for (int l = 0; l < m; ++l) {
        for (int a = 0; a < n; ++a) {
            auto& nbrs = net.adjacency_[l][a];
            std::sort(nbrs.begin(), nbrs.end());
            const auto before = nbrs.size();
            nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
            rep.duplicate_edges_dropped += static_cast<long>(before - nbrs.size());
            net.layer_edges_[l] += static_cast<std::int64_t>(nbrs.size());
        }
        net.layer_edges_[l] /= 2;  //每 edge counted from both endpoints
        net.layer_nodes_[l] =
            static_cast<int>(std::count(net.present_[l].begin(), net.present_[l].end(), 1));
    }
    rep.duplicate_edges_dropped /= 2;

    net.presence_.assign(n, {});
    for (int a = 0; a < n; ++a) {
        for (int l = 0; l < m; ++l) {
            if (net.present_[l][a]) net.presence_[a].push_back(l);
        }
    }
    net.multiplex_ = std::all_of(net.presence_.begin(), net.presence_.end(),
                                 [m](const auto& ls) { return static_cast<int>(ls.size()) == m; });

    if (report) *report = rep;
    return net;
}

int MultilayerNetwork::actor_index(std::string_view name) const {
    const int i = index_of(actor_names_, name);
    if (i < 0) throw LookupError("unknown actor: " + std::string(name));
    return i;
}

int MultilayerNetwork::layer_index(std::string_view name) const {
    const int i = index_of(layer_names_, name);
    if (i < 0) throw LookupError("unknown layer: " + std::string(name));
    return i;
}

NetworkStats MultilayerNetwork::stats() const {
    NetworkStats s;
    s.layer_count = layer_count();
    s.actor_count = actor_count();
    for (const auto& ls : presence_) s.node_count += static_cast<std::int64_t>(ls.size());
    for (int l = 0; l < layer_count(); ++l) s.edge_count += layer_edges_[l];
    return s;
}

std::int64_t MultilayerNetwork::degree_centrality(int actor) const {
    std::int64_t total = 0;
    for (int l : presence_[actor]) total += degree(l, actor);
    return total;
}

std::vector<int> MultilayerNetwork::neighbourhood(int actor, int hops) const {
    if (hops != 1 && hops != 2) throw ConfigError("neighbourhood hops must be 1 or 2");
    std::vector<char> seen(actor_count(), 0);
    seen[actor] = 1;
    std::vector<int> first;
    for (int l : presence_[actor]) {
        for (int b : adjacency_[l][actor]) {
            if (!seen[b]) {
                seen[b] = 1;
                first.push_back(b);
            }
        }
    }
    std::vector<int> result = first;
    if (hops == 2) {
        for (int b : first) {
            for (int l : presence_[b]) {
                for (int c : adjacency_[l][b]) {
                    if (!seen[c]) {
                        seen[c] = 1;
                        result.push_back(c);
                    }
                }
            }
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<std::string> MultilayerNetwork::neighbourhood(std::string_view actor, int hops) const {
    std::vector<std::string> names;
    for (int a : neighbourhood(actor_index(actor), hops)) names.push_back(actor_names_[a]);
    return names;
}

FlattenedGraph MultilayerNetwork::squeeze() const {
    FlattenedGraph g;
    g.actor_count = actor_count();
    g.adjacency.assign(actor_count(), {});
    for (int a = 0; a < actor_count(); ++a) {
        std::vector<int>& nbrs = g.adjacency[a];
        for (int l : presence_[a]) {
            nbrs.insert(nbrs.end(), adjacency_[l][a].begin(), adjacency_[l][a].end());
        }
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        g.edge_count += static_cast<std::int64_t>(nbrs.size());
    }
    g.edge_count /= 2;
    return g;
}

MultilayerNetwork load_network(const std::filesystem::path& path, LoadReport* report) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open network file: " + path.string());

    std::vector<EdgeTriple> edges;
    std::vector<std::pair<std::string, std::string>> isolated;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ss(line);
        std::string tok;
        if (!(ss >> tok)) continue;  // blank line
        if (tok == "#node") {
            std::string l, a;
            if (!(ss >> l >> a))
                throw ParseError("malformed #node declaration", line_no);
            isolated.emplace_back(std::move(l), std::move(a));
            continue;
        }
        if (tok.front() == '#') continue;  // comment
        std::string a, b;
        if (!(ss >> a >> b))
            throw ParseError("expected `<layer> <actor> <actor>`", line_no);
        edges.emplace_back(std::move(tok), std::move(a), std::move(b));
    }
    return MultilayerNetwork::build(edges, isolated, report);
}

void save_network(const MultilayerNetwork& net, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write network file: " + path.string());
    for (int l = 0; l < net.layer_count(); ++l) {
        for (int a = 0; a < net.actor_count(); ++a) {
            for (int b : net.neighbours(l, a)) {
                if (a < b)
                    out << net.layer_name(l) << ' ' << net.actor_name(a) << ' '
                        << net.actor_name(b) << '\n';
            }
        }
        for (int a = 0; a < net.actor_count(); ++a) {
            if (net.has_node(a, l) && net.degree(l, a) == 0)
                out << "#node " << net.layer_name(l) << ' ' << net.actor_name(a) << '\n';
        }
    }
    if (!out.flush()) throw Error("failed writing " + path.string());
}

}  // namespace mlnim
