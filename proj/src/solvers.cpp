#include "pcvp/solvers.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "pcvp/planarity.hpp"

namespace pcvp {

bool Permutation::is_valid() const {
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
        if (v < 1 || v > k() || seen[v - 1])
            return false;
        seen[v - 1] = true;
    }
    return true;
}

int Permutation::preimage(int beta) const {
    for (int p = 1; p <= k(); ++p)
        if (images[p - 1] == beta)
            return p;
    throw std::invalid_argument("value has no preimage");
}

Permutation Permutation::identity(int k) {
    Permutation rho;
    rho.images.resize(k);
    std::iota(rho.images.begin(), rho.images.end(), 1);
    return rho;
}

std::optional<Permutation> solve_pc_bruteforce(const PCInstance& pc) {
    if (pc.k > 8)
        throw std::invalid_argument("brute-force search is limited to k <= 8");
    Permutation rho = Permutation::identity(pc.k);
    do {
        bool clique = true;
        for (int p = 1; p <= pc.k && clique; ++p)
            for (int q = p + 1; q <= pc.k && clique; ++q)
                clique = pc.has_edge({p, rho(p)}, {q, rho(q)});
        if (clique)
            return rho;
    } while (std::next_permutation(rho.images.begin(), rho.images.end()));
    return std::nullopt;
}

namespace {

// index (1-based) of edge e within its row pair's attachment order
int position_in_pair(const Manifest& m, const GridEdge& e) {
    int j = 0;
    for (const GridEdge& other : m.grid_edges) {
        if (other.p == e.p && other.q == e.q) {
            ++j;
            if (other == e)
                return j;
        }
    }
    throw std::invalid_argument("not a witness");
}

}  // namespace

DeletionSet build_completeness_witness(const VPInstance& vp,
                                       const Permutation& rho) {
    const Manifest& m = vp.manifest;
    if (m.kind == Manifest::Kind::Gadget)
        throw std::invalid_argument("completeness witness needs a reduced instance");
    if (rho.k() != m.k || !rho.is_valid())
        throw std::invalid_argument("not a witness");
    if (m.kind == Manifest::Kind::TrivialNo)
        throw std::invalid_argument("not a witness");
    if (m.kind == Manifest::Kind::TrivialYes)
        return {};

    DeletionSet x;
    // wiring gadgets: in C^{i,rho(alpha)}, spare exactly the link of alpha
    for (int i = 1; i <= 3; ++i) {
        for (int alpha = 1; alpha <= m.k; ++alpha) {
            const ChoiceGadget& cg = m.choice_gadget(i, rho(alpha));
            DeletionSet part = canonical_choice_solution(cg, alpha);
            x.vertices.insert(part.vertices.begin(), part.vertices.end());
        }
    }
    // pair gadgets: spare the chain of the clique's edge, cut all others
    for (int p = 1; p <= m.k; ++p) {
        for (int q = p + 1; q <= m.k; ++q) {
            GridEdge chosen{p, q, rho(p), rho(q)};
            int j = position_in_pair(m, chosen);  // throws if absent
            const ChoiceGadget& cg = m.pair_gadgets.at({p, q});
            DeletionSet part = canonical_choice_solution(cg, j);
            x.vertices.insert(part.vertices.begin(), part.vertices.end());
            for (const EdgeGadgetIds& eg : m.edge_gadgets) {
                if (eg.e.p != p || eg.e.q != q)
                    continue;
                if (eg.e == chosen)
                    x.vertices.insert(eg.mid);
                else
                    x.vertices.insert(eg.right);
            }
        }
    }
    if (static_cast<long long>(x.size()) != vp.budget)
        throw std::logic_error("completeness witness size mismatch");
    return x;
}

bool verify_deletion_witness(const VPInstance& vp, const DeletionSet& x) {
    for (VertexId v : x.vertices)
        if (!vp.graph.has_vertex(v))
            throw std::invalid_argument("vertex not present");
    if (static_cast<long long>(x.size()) > vp.budget)
        return false;
    return is_planar(delete_vertices(vp.graph, x.vertices));
}

namespace {

// --- structured decision ------------------------------------------------
//
// The tight budget forces any solution to consist of one minimum solution
// per choice gadget plus one endpoint of every grid-edge chain. The search
// walks that cross product. Everything outside the frame, the apexes and
// the surviving wiring/chain vertices dangles from cut vertices, so a
// partial assignment can be rejected as soon as the induced "core" on the
// assigned survivors is nonplanar; the final combination is re-checked on
// the full graph.
struct StructuredSearch {
    const VPInstance& vp;
    const Manifest& m;

    std::vector<VertexId> core_ids;          // frame + apex, fixed part
    std::map<VertexId, int> core_pos;
    std::vector<std::pair<int, int>> base_edges;

    struct GadgetStage {
        const ChoiceGadget* cg;
        const std::vector<ChoiceSolutionPattern>* patterns;
        bool is_pair;
        int p = 0, q = 0;      // pair stages
        int i = 0, beta = 0;   // wiring stages
    };
    std::vector<GadgetStage> gadget_stages;
    std::vector<int> chosen;                 // pattern index per gadget stage
    std::vector<int> edge_choice;            // 0 delete mid, 1 delete right
    std::map<std::pair<int, int>, std::size_t> pair_stage_index;

    // incremental core: extra survivors with their attachment edges
    std::vector<int> extra_owner_stage;
    std::vector<std::pair<int, int>> extra_edges;
    std::vector<std::size_t> extra_marks_vertices;
    std::vector<std::size_t> extra_marks_edges;
    int extra_count = 0;

    explicit StructuredSearch(const VPInstance& inst)
        : vp(inst), m(inst.manifest) {
        core_ids = m.frame.all_in_order();
        core_ids.insert(core_ids.end(), m.apex.begin(), m.apex.end());
        for (int i = 0; i < static_cast<int>(core_ids.size()); ++i)
            core_pos[core_ids[i]] = i;
        for (const auto& [u, v] : vp.graph.edges()) {
            auto iu = core_pos.find(u);
            auto iv = core_pos.find(v);
            if (iu != core_pos.end() && iv != core_pos.end())
                base_edges.emplace_back(iu->second, iv->second);
        }
        for (int beta = 1; beta <= m.k; ++beta)
            for (int i = 1; i <= 3; ++i)
                gadget_stages.push_back({&m.choice_gadget(i, beta),
                                         &min_choice_solution_patterns(m.k),
                                         false, 0, 0, i, beta});
        for (const auto& [pq, cg] : m.pair_gadgets) {
            pair_stage_index[pq] = gadget_stages.size();
            gadget_stages.push_back({&cg,
                                     &min_choice_solution_patterns(cg.s),
                                     true, pq.first, pq.second, 0, 0});
        }
        chosen.assign(gadget_stages.size(), -1);
        edge_choice.assign(m.edge_gadgets.size(), -1);
    }

    void push_survivor(int owner_core_pos_a, int owner_core_pos_b) {
        int pos = static_cast<int>(core_ids.size()) + extra_count;
        ++extra_count;
        extra_edges.emplace_back(owner_core_pos_a, pos);
        extra_edges.emplace_back(owner_core_pos_b, pos);
    }

    void mark() {
        extra_marks_vertices.push_back(extra_count);
        extra_marks_edges.push_back(extra_edges.size());
    }

    void rollback() {
        extra_count = static_cast<int>(extra_marks_vertices.back());
        extra_marks_vertices.pop_back();
        extra_edges.resize(extra_marks_edges.back());
        extra_marks_edges.pop_back();
    }

    bool core_planar() const {
        std::vector<std::pair<int, int>> edges(base_edges);
        edges.insert(edges.end(), extra_edges.begin(), extra_edges.end());
        return is_planar_edge_list(static_cast<int>(core_ids.size()) + extra_count,
                                   edges);
    }

    // survivors contributed by choosing `pattern` for stage `st`
    void apply_gadget_pattern(const GadgetStage& st,
                              const ChoiceSolutionPattern& pat) {
        if (!st.is_pair) {
            for (int alpha : pat.surviving_b) {
                VertexId ladder = m.frame.ladder_v[alpha - 1][st.i];
                VertexId apex = m.apex[st.beta - 1];
                push_survivor(core_pos.at(ladder), core_pos.at(apex));
            }
            return;
        }
        int j = 0;
        for (const EdgeGadgetIds& eg : m.edge_gadgets) {
            if (eg.e.p != st.p || eg.e.q != st.q)
                continue;
            ++j;
            if (std::binary_search(pat.deleted_b.begin(), pat.deleted_b.end(), j))
                continue;
            VertexId ladder = m.frame.ladder_v[eg.e.p - 1][0];
            VertexId apex = m.apex[eg.e.gamma - 1];
            push_survivor(core_pos.at(ladder), core_pos.at(apex));
        }
    }

    bool left_end_survives(std::size_t edge_index) const {
        const EdgeGadgetIds& eg = m.edge_gadgets[edge_index];
        std::size_t stage = pair_stage_index.at({eg.e.p, eg.e.q});
        const ChoiceSolutionPattern& pat =
            (*gadget_stages[stage].patterns)[chosen[stage]];
        int j = position_in_pair(m, eg.e);
        return !std::binary_search(pat.deleted_b.begin(), pat.deleted_b.end(),
                                   j);
    }

    std::optional<DeletionSet> run() {
        return descend_gadget(0);
    }

    std::optional<DeletionSet> descend_gadget(std::size_t stage) {
        if (stage == gadget_stages.size())
            return descend_edge(0);
        const GadgetStage& st = gadget_stages[stage];
        for (int pi = 0; pi < static_cast<int>(st.patterns->size()); ++pi) {
            chosen[stage] = pi;
            mark();
            apply_gadget_pattern(st, (*st.patterns)[pi]);
            if (core_planar()) {
                if (auto found = descend_gadget(stage + 1)) {
                    rollback();
                    return found;
                }
            }
            rollback();
        }
        chosen[stage] = -1;
        return std::nullopt;
    }

    std::optional<DeletionSet> descend_edge(std::size_t e) {
        if (e == m.edge_gadgets.size())
            return finish();
        const EdgeGadgetIds& eg = m.edge_gadgets[e];
        for (int choice = 0; choice <= 1; ++choice) {
            // a surviving chain start forces the middle vertex out
            if (choice == 1 && left_end_survives(e))
                continue;
            edge_choice[e] = choice;
            mark();
            if (choice == 0) {
                // middle deleted, right end survives
                VertexId ladder = m.frame.ladder_v[eg.e.q - 1][0];
                VertexId apex = m.apex[eg.e.delta - 1];
                push_survivor(core_pos.at(ladder), core_pos.at(apex));
            }
            if (core_planar()) {
                if (auto found = descend_edge(e + 1)) {
                    rollback();
                    return found;
                }
            }
            rollback();
        }
        edge_choice[e] = -1;
        return std::nullopt;
    }

    std::optional<DeletionSet> finish() {
        DeletionSet x;
        for (std::size_t s = 0; s < gadget_stages.size(); ++s) {
            const GadgetStage& st = gadget_stages[s];
            const ChoiceSolutionPattern& pat = (*st.patterns)[chosen[s]];
            for (int t : pat.deleted_a)
                x.vertices.insert(st.cg->a(t));
            for (int j : pat.deleted_b)
                x.vertices.insert(st.cg->b(j));
        }
        for (std::size_t e = 0; e < m.edge_gadgets.size(); ++e)
            x.vertices.insert(edge_choice[e] == 0 ? m.edge_gadgets[e].mid
                                                  : m.edge_gadgets[e].right);
        if (static_cast<long long>(x.size()) != vp.budget)
            throw std::logic_error("structured candidate size mismatch");
        // authoritative re-check on the full graph
        if (!is_planar(delete_vertices(vp.graph, x.vertices)))
            return std::nullopt;
        return x;
    }
};

}  // namespace

std::optional<DeletionSet> structured_vp_decide(const VPInstance& vp) {
    const Manifest& m = vp.manifest;
    switch (m.kind) {
    case Manifest::Kind::TrivialYes:
        return DeletionSet{};
    case Manifest::Kind::TrivialNo:
        return std::nullopt;
    case Manifest::Kind::Gadget:
        throw std::invalid_argument(
            "structured decision needs a reduced instance");
    case Manifest::Kind::Reduced:
        break;
    }
    if (m.k > 3)
        throw std::invalid_argument("structured decision is limited to k <= 3");
    for (const auto& [pq, cg] : m.pair_gadgets)
        if (cg.s > 4)
            throw std::invalid_argument(
                "gadget size above enumeration cutoff");

    StructuredSearch search(vp);
    return search.run();
}

Permutation decode_permutation(const VPInstance& vp, const DeletionSet& x) {
    const Manifest& m = vp.manifest;
    if (static_cast<long long>(x.size()) != vp.budget ||
        !verify_deletion_witness(vp, x))
        throw std::invalid_argument(
            "witness does not decode: not a tight valid witness");
    if (m.kind == Manifest::Kind::TrivialYes)
        return Permutation::identity(m.k);
    if (m.kind != Manifest::Kind::Reduced)
        throw std::invalid_argument("witness does not decode");

    std::vector<int> alpha_of(m.k + 1, 0);
    for (int beta = 1; beta <= m.k; ++beta) {
        int agreed = 0;
        for (int i = 1; i <= 3; ++i) {
            int survivor = 0;
            for (int alpha = 1; alpha <= m.k; ++alpha) {
                if (!x.contains(m.link(i, alpha, beta))) {
                    if (survivor != 0)
                        throw std::invalid_argument(
                            "witness does not decode: surviving link not unique");
                    survivor = alpha;
                }
            }
            if (survivor == 0)
                throw std::invalid_argument(
                    "witness does not decode: no surviving link");
            if (i == 1)
                agreed = survivor;
            else if (survivor != agreed)
                throw std::invalid_argument(
                    "witness does not decode: layers disagree");
        }
        alpha_of[beta] = agreed;
    }

    std::vector<bool> hit(m.k + 1, false);
    for (int beta = 1; beta <= m.k; ++beta) {
        if (hit[alpha_of[beta]])
            throw std::invalid_argument(
                "witness does not decode: not a permutation");
        hit[alpha_of[beta]] = true;
    }

    Permutation rho;
    rho.images.assign(m.k, 0);
    for (int beta = 1; beta <= m.k; ++beta)
        rho.images[alpha_of[beta] - 1] = beta;

    for (int p = 1; p <= m.k; ++p) {
        for (int q = p + 1; q <= m.k; ++q) {
            GridEdge need{p, q, rho(p), rho(q)};
            if (!std::binary_search(m.grid_edges.begin(), m.grid_edges.end(),
                                    need))
                throw std::invalid_argument(
                    "witness does not decode: decoded pair is not an edge");
        }
    }
    return rho;
}

std::set<VertexId> helper_vertices(const Graph& g) {
    std::set<VertexId> out;
    for (VertexId v : g.vertices())
        if (g.role(v).tag == RoleTag::K5Helper)
            out.insert(v);
    return out;
}

std::optional<DeletionSet> small_vp_oracle(const Graph& g, int budget,
                                           const std::set<VertexId>& forbidden) {
    if (budget < 0 || budget > 8)
        throw std::invalid_argument("oracle budget is limited to 8");
    for (VertexId v : forbidden)
        if (!g.has_vertex(v))
            throw std::invalid_argument("vertex not present");
    if (g.vertex_count() - forbidden.size() > 25)
        throw std::invalid_argument("too many deletable vertices for the oracle");

    for (int target = 0; target <= budget; ++target) {
        std::set<std::vector<VertexId>> visited;
        std::vector<VertexId> deleted;

        std::function<std::optional<DeletionSet>(int)> dfs =
            [&](int remaining) -> std::optional<DeletionSet> {
            Graph cur = delete_vertices(
                g, std::set<VertexId>(deleted.begin(), deleted.end()));
            auto witness = find_kuratowski_witness(cur);
            if (!witness) {
                DeletionSet out;
                out.vertices.insert(deleted.begin(), deleted.end());
                return out;
            }
            if (remaining == 0)
                return std::nullopt;

            std::vector<VertexId> cands;
            for (VertexId v : witness->all_vertices())
                if (!forbidden.count(v))
                    cands.push_back(v);
            std::sort(cands.begin(), cands.end(), [&](VertexId a, VertexId b) {
                auto da = cur.neighbors(a).size();
                auto db = cur.neighbors(b).size();
                return da != db ? da > db : a < b;
            });

            for (VertexId v : cands) {
                auto pos = std::lower_bound(deleted.begin(), deleted.end(), v);
                deleted.insert(pos, v);
                if (visited.insert(deleted).second) {
                    if (auto found = dfs(remaining - 1)) {
                        deleted.erase(std::find(deleted.begin(), deleted.end(), v));
                        return found;
                    }
                }
                deleted.erase(std::find(deleted.begin(), deleted.end(), v));
            }
            return std::nullopt;
        };

        if (auto found = dfs(target))
            return found;
    }
    return std::nullopt;
}

}  // namespace pcvp
